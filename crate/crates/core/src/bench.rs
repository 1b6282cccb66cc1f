//! Seeded comparison of the closed formula against classical rewriting (and
//! the elimination oracle when it fits under its cap).

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::enumeration::{enumerate_ssyt, SsytBasis};
use crate::error::{Error, Result};
use crate::rearrangement::rcoeff_matrix;
use crate::relations::RelationOracle;
use crate::straightening::{
    build_dbasis, straighten_classical_with, straighten_closed, straighten_oracle,
};
use crate::tableau::{Content, Filling, Partition};

const MAX_SAMPLE_ATTEMPTS: usize = 100_000;

/// A uniformly random filling of `F(λ,z)`, redrawn until cardinal.
pub fn random_cardinal_filling<R: Rng + ?Sized>(
    shape: &Partition,
    content: &Content,
    rng: &mut R,
) -> Result<Filling> {
    if shape.size() != content.size() {
        return Err(Error::SizeMismatch {
            shape: shape.size(),
            content: content.size(),
        });
    }
    let mut word = content.sorted_word();
    for _ in 0..MAX_SAMPLE_ATTEMPTS {
        word.shuffle(rng);
        let mut rows = Vec::with_capacity(shape.len());
        let mut it = word.iter().copied();
        for &len in shape.parts() {
            rows.push(it.by_ref().take(len).collect::<Vec<_>>());
        }
        let f = Filling::from_rows(&rows, content.alphabet())?;
        if f.is_cardinal() {
            return Ok(f);
        }
    }
    Err(Error::CapExceeded {
        what: "cardinal sampling attempts",
        limit: MAX_SAMPLE_ATTEMPTS,
    })
}

/// `n` seeded random cardinal fillings.
pub fn sample_fillings(shape: &Partition, content: &Content, n: usize, seed: u64) -> Result<Vec<Filling>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| random_cardinal_filling(shape, content, &mut rng))
        .collect()
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub shape: Partition,
    pub content: Content,
    pub trials: usize,
    pub seed: u64,
    pub rewrite_cap: usize,
    /// Oracle dimension cap; `None` skips the oracle.
    pub oracle_cap: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Trial {
    pub filling: Vec<Vec<u32>>,
    pub closed_ns: u128,
    pub classical_ns: u128,
    pub oracle_ns: Option<u128>,
    pub rewrites: usize,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub format: u32,
    pub shape: Vec<usize>,
    pub content: Vec<usize>,
    pub kostka: usize,
    pub seed: u64,
    /// Rearrangement matrix plus D-basis construction.
    pub setup_ns: u128,
    pub oracle_setup_ns: Option<u128>,
    pub trials: Vec<Trial>,
}

impl BenchReport {
    pub fn all_agree(&self) -> bool {
        self.trials.iter().all(|t| t.agree)
    }

    pub fn agreements(&self) -> usize {
        self.trials.iter().filter(|t| t.agree).count()
    }

    /// Median closed time with the setup spread over all trials.
    pub fn median_closed_amortized_ns(&self) -> Option<f64> {
        let share = self.setup_ns as f64 / self.trials.len().max(1) as f64;
        median(self.trials.iter().map(|t| t.closed_ns as f64 + share).collect())
    }

    pub fn median_classical_ns(&self) -> Option<f64> {
        median(self.trials.iter().map(|t| t.classical_ns as f64).collect())
    }

    /// Classical over amortized closed median time.
    pub fn speedup(&self) -> Option<f64> {
        Some(self.median_classical_ns()? / self.median_closed_amortized_ns()?)
    }

    /// Plain-text table; `timing = false` omits every wall-clock field so
    /// that output depends only on the inputs and seed.
    pub fn to_table(&self, timing: bool) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "shape {:?} content {:?} kostka {} seed {} trials {}",
            self.shape,
            self.content,
            self.kostka,
            self.seed,
            self.trials.len()
        );
        if self.trials.is_empty() {
            return s;
        }
        if timing {
            let _ = writeln!(s, "{:>5}  {:>12}  {:>12}  {:>12}  {:>8}  agree", "trial", "closed_us", "classical_us", "oracle_us", "rewrites");
        } else {
            let _ = writeln!(s, "{:>5}  {:>8}  agree", "trial", "rewrites");
        }
        for (n, t) in self.trials.iter().enumerate() {
            if timing {
                let oracle = t
                    .oracle_ns
                    .map(|x| format!("{:.1}", x as f64 / 1e3))
                    .unwrap_or_else(|| "-".into());
                let _ = writeln!(
                    s,
                    "{:>5}  {:>12.1}  {:>12.1}  {:>12}  {:>8}  {}",
                    n + 1,
                    t.closed_ns as f64 / 1e3,
                    t.classical_ns as f64 / 1e3,
                    oracle,
                    t.rewrites,
                    t.agree
                );
            } else {
                let _ = writeln!(s, "{:>5}  {:>8}  {}", n + 1, t.rewrites, t.agree);
            }
        }
        let _ = writeln!(s, "agreement {}/{}", self.agreements(), self.trials.len());
        if timing {
            if let (Some(c), Some(k), Some(r)) = (
                self.median_closed_amortized_ns(),
                self.median_classical_ns(),
                self.speedup(),
            ) {
                let _ = writeln!(
                    s,
                    "setup {:.1} us; median closed (amortized) {:.1} us; median classical {:.1} us; ratio {:.2}",
                    self.setup_ns as f64 / 1e3,
                    c / 1e3,
                    k / 1e3,
                    r
                );
            }
        }
        s
    }
}

pub fn median(mut xs: Vec<f64>) -> Option<f64> {
    if xs.is_empty() {
        return None;
    }
    xs.sort_by(|a, b| a.total_cmp(b));
    let n = xs.len();
    Some(if n % 2 == 1 {
        xs[n / 2]
    } else {
        (xs[n / 2 - 1] + xs[n / 2]) / 2.0
    })
}

fn nanos(d: Duration) -> u128 {
    d.as_nanos()
}

/// Runs the benchmark. Disagreements are recorded in the report; callers
/// decide whether they are fatal.
pub fn run_bench(config: &BenchConfig) -> Result<BenchReport> {
    let basis: SsytBasis = enumerate_ssyt(&config.shape, &config.content)?;
    let samples = if config.trials == 0 {
        Vec::new()
    } else {
        sample_fillings(&config.shape, &config.content, config.trials, config.seed)?
    };

    let start = Instant::now();
    let m = rcoeff_matrix(&basis);
    let d = build_dbasis(&m);
    let setup_ns = nanos(start.elapsed());

    let (oracle, oracle_setup_ns) = match config.oracle_cap {
        Some(cap) if !samples.is_empty() => {
            let start = Instant::now();
            let o = RelationOracle::with_cap(&basis, cap)?;
            (Some(o), Some(nanos(start.elapsed())))
        }
        _ => (None, None),
    };

    let mut trials = Vec::with_capacity(samples.len());
    for f in samples {
        let start = Instant::now();
        let closed = straighten_closed(&f, &basis, &d)?;
        let closed_ns = nanos(start.elapsed());

        let start = Instant::now();
        let (classical, stats) = straighten_classical_with(&f, &basis, config.rewrite_cap)?;
        let classical_ns = nanos(start.elapsed());

        let mut agree = closed.agrees_with(&classical);
        let mut oracle_ns = None;
        if let Some(o) = &oracle {
            let start = Instant::now();
            let via = straighten_oracle(&f, o)?;
            oracle_ns = Some(nanos(start.elapsed()));
            agree &= closed.agrees_with(&via);
        }
        trials.push(Trial {
            filling: f.rows(),
            closed_ns,
            classical_ns,
            oracle_ns,
            rewrites: stats.rewrites,
            agree,
        });
    }

    Ok(BenchReport {
        format: crate::json::FORMAT_VERSION,
        shape: config.shape.parts().to_vec(),
        content: config.content.counts().to_vec(),
        kostka: basis.len(),
        seed: config.seed,
        setup_ns,
        oracle_setup_ns,
        trials,
    })
}
