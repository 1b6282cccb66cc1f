//! Seeded timing of the closed formula against classical rewriting on
//! random cardinal fillings, with agreement checked on every trial.
//!
//! cargo run --release --example bench_closed_vs_classical

use straighten::bench::{run_bench, BenchConfig};
use straighten::straightening::DEFAULT_REWRITE_CAP;
use straighten::{Content, Partition};

fn main() -> straighten::Result<()> {
    for counts in [vec![3, 3, 3, 3, 2], vec![3, 3, 2, 2, 2, 2]] {
        let report = run_bench(&BenchConfig {
            shape: Partition::new(vec![5, 4, 3, 2])?,
            content: Content::new(counts)?,
            trials: 200,
            seed: 1,
            rewrite_cap: DEFAULT_REWRITE_CAP,
            oracle_cap: None,
        })?;
        println!(
            "K = {:>3}  agreement {}/{}  classical/closed = {:.2}",
            report.kostka,
            report.agreements(),
            report.trials.len(),
            report.speedup().unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
