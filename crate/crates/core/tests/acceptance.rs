//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Random workloads are seeded so every run checks the same cases.

mod common;

use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use straighten::bench::{random_cardinal_filling, run_bench, BenchConfig};
use straighten::enumeration::{compositions, count_fillings, fillings, kostka};
use straighten::graph::{active_vertices, coefficient_paths};
use straighten::rearrangement::{rcoeff_row, schain_data};
use straighten::relations::{grassmann_generators_of, pluecker_generators_of};
use straighten::straightening::{
    check_truncation, coefficient_chain, dbasis_coeff_closed, Straightening,
};
use straighten::tableau::partitions_of;
use straighten::{rcoeff, Content, Filling, Instance, Method, Partition};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ms(d: Duration) -> String {
    format!("{:.2} ms", d.as_secs_f64() * 1e3)
}

fn within(start: Instant, limit: Duration, detail: String) -> Check {
    let t = start.elapsed();
    if t < limit {
        Ok(format!("{detail} [{} < {}]", ms(t), ms(limit)))
    } else {
        Err(format!("{detail}; too slow: {} ≥ {}", ms(t), ms(limit)))
    }
}

fn c1() -> Check {
    let f = rows(&[&[2, 1, 4, 1], &[3, 2], &[4, 3]], 4);
    let s = rows(&[&[1, 1, 4, 4], &[2, 2], &[3, 3]], 4);
    let start = Instant::now();
    let fs = rcoeff(&f, &s).map_err(err)?;
    let sf = rcoeff(&s, &f).map_err(err)?;
    let elapsed = start.elapsed();
    ensure(fs == 1 && sf == 0, || format!("R[F,S]={fs}, R[S,F]={sf}"))?;
    let t = ms(elapsed);
    ensure(elapsed < Duration::from_millis(10), || format!("too slow: {t}"))?;
    Ok(format!("R[F,S]=1, R[S,F]=0 [{t} < 10 ms]"))
}

fn c2() -> Check {
    let start = Instant::now();
    let inst = Instance::new(&shape(&[4, 3, 2]), &content(&[2, 2, 3, 2])).map_err(err)?;
    let f = rows(&[&[2, 1, 1, 3], &[3, 3, 2], &[4, 4]], 4);
    let closed = inst.straighten(&f, Method::Closed).map_err(err)?;
    let r = rcoeff_row(&f, &inst.basis, 6).map_err(err)?;
    let elapsed = start.elapsed();

    let want: [&[&[u32]]; 6] = [
        &[&[1, 1, 3, 4], &[2, 2, 4], &[3, 3]],
        &[&[1, 1, 3, 3], &[2, 2, 4], &[3, 4]],
        &[&[1, 1, 2, 4], &[2, 3, 3], &[3, 4]],
        &[&[1, 1, 2, 3], &[2, 3, 4], &[3, 4]],
        &[&[1, 1, 2, 3], &[2, 3, 3], &[4, 4]],
        &[&[1, 1, 2, 2], &[3, 3, 3], &[4, 4]],
    ];
    ensure(inst.basis.len() == 6, || format!("K = {}", inst.basis.len()))?;
    for (i, w) in want.iter().enumerate() {
        ensure(inst.basis.tableau(i + 1) == &rows(w, 4), || format!("S{} differs", i + 1))?;
    }
    let dbasis: [[i64; 6]; 6] = [
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [-1, 0, 1, 0, 0, 0],
        [-1, 0, 0, 1, 0, 0],
        [-1, -1, 0, 1, 1, 0],
        [1, -1, 0, -1, 1, 1],
    ];
    for (i, row) in dbasis.iter().enumerate() {
        ensure(inst.dbasis.row(i + 1) == ints(row).as_slice(), || format!("D(S{}) differs", i + 1))?;
    }
    ensure(r == [-1, 1, 0, -2, 1, 0], || format!("R[F,·] = {r:?}"))?;
    ensure(closed.coefficients == ints(&[0, 0, 0, -1, 1, 0]), || {
        format!("closed = {:?}", closed.coefficients)
    })?;
    let t = ms(elapsed);
    ensure(elapsed < Duration::from_millis(100), || format!("too slow: {t}"))?;
    Ok(format!("six tableaux, six D-rows, R[F,·]=(−1,1,0,−2,1,0), F = S5 − S4 [{t} < 100 ms]"))
}

fn c3() -> Check {
    let start = Instant::now();
    let inst = Instance::new(&shape(&[3, 3, 2]), &content(&[1, 2, 1, 2, 2])).map_err(err)?;
    let f = rows(&[&[2, 2, 1], &[4, 3, 5], &[5, 4]], 5);
    let r = rcoeff_row(&f, &inst.basis, 6).map_err(err)?;
    let active = active_vertices(&f, &inst.basis).map_err(err)?;
    let paths_to_1: Vec<Vec<usize>> = active
        .iter()
        .map(|&j| inst.graph.paths(j, 1))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?
        .concat();
    let a1 = coefficient_paths(&f, 1, &inst.basis, &inst.graph).map_err(err)?;
    let elapsed = start.elapsed();

    let edges: BTreeSet<(usize, usize)> = inst.graph.edges().keys().copied().collect();
    let want: BTreeSet<(usize, usize)> =
        [(6, 5), (6, 2), (6, 1), (5, 2), (5, 1), (4, 3), (4, 2)].into();
    ensure(edges == want, || format!("edges {edges:?}"))?;
    ensure(active == [1, 2, 3, 5].into(), || format!("V_F = {active:?}"))?;
    ensure(r == [2, -1, -1, 0, 1, 0], || format!("R[F,·] = {r:?}"))?;
    ensure(paths_to_1 == vec![vec![1], vec![5, 1]], || format!("paths {paths_to_1:?}"))?;
    ensure(a1 == BigInt::from(1), || format!("a_1 = {a1}"))?;
    let t = ms(elapsed);
    ensure(elapsed < Duration::from_millis(100), || format!("too slow: {t}"))?;
    Ok(format!("7 edges, V_F={{S5,S3,S2,S1}}, a_1 = 1 from paths ⟨S1⟩,⟨S5,S1⟩ [{t} < 100 ms]"))
}

fn c4() -> Check {
    let s = from_columns(&[vec![1, 3, 6, 4, 5], vec![2, 1, 5, 3]], 6);
    let d = schain_data(&s).map_err(err)?;
    ensure(d.chain(2) == Some(&[(2, Some(1)), (1, Some(3)), (3, Some(4))][..]), || {
        format!("chain(2) = {:?}", d.chain(2))
    })?;
    ensure(d.chain(4) == Some(&[(4, Some(3)), (3, Some(1)), (1, Some(2))][..]), || {
        format!("chain(4) = {:?}", d.chain(4))
    })?;
    ensure(d.chain(6) == Some(&[(6, Some(5)), (5, None)][..]), || {
        format!("chain(6) = {:?}", d.chain(6))
    })?;
    ensure(d.opposite(2) == Some(4) && d.opposite(4) == Some(2) && d.opposite(6).is_none(), || {
        "opposites differ".into()
    })?;
    ensure(d.pairs().iter().copied().eq([(4, 2)]), || format!("pairs {:?}", d.pairs()))?;
    ensure(d.left().iter().copied().eq([6]), || format!("left {:?}", d.left()))?;
    Ok("chains of 2, 4, 6; S_op(2)=4, S_op(4)=2, S_op(6) undefined; pairs {(4,2)}; left {6}".into())
}

fn c5() -> Check {
    let start = Instant::now();
    let (mut pairs, mut gens, mut checks) = (0usize, 0usize, 0usize);
    for n in 1..=6 {
        for p in partitions_of(n) {
            for z in compositions(n) {
                let inst = Instance::new(&p, &z).map_err(err)?;
                if inst.basis.is_empty() {
                    continue;
                }
                pairs += 1;
                let mut cache: HashMap<Filling, Vec<i64>> = HashMap::new();
                for f in fillings(&p, &z).map_err(err)? {
                    let row = inst
                        .basis
                        .tableaux()
                        .iter()
                        .map(|s| rcoeff(&f, s))
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(err)?;
                    cache.insert(f, row);
                }
                for f in cache.keys() {
                    let all = grassmann_generators_of(f, false).into_iter().chain(pluecker_generators_of(f));
                    for g in all {
                        gens += 1;
                        for i in 0..inst.basis.len() {
                            checks += 1;
                            let sum: i64 = g.terms.iter().map(|(t, c)| c * cache[t][i]).sum();
                            ensure(sum == 0, || format!("{:?} of {f:?} against S{} gives {sum}", g.kind, i + 1))?;
                        }
                    }
                }
            }
        }
    }
    within(
        start,
        Duration::from_secs(300),
        format!("{pairs} (λ,z) pairs, {gens} generators, {checks} sums all zero"),
    )
}

/// A seeded random `(λ,z)` with `3 ≤ |λ| ≤ 8` (half of them of size 8), at
/// least one tableau, and at most 200,000 fillings.
fn random_pair(rng: &mut ChaCha8Rng) -> (Partition, Content) {
    loop {
        let n = if rng.gen_bool(0.5) { 8 } else { rng.gen_range(3..=7) };
        let shapes = partitions_of(n);
        let p = shapes.choose(rng).unwrap().clone();
        let mut counts = Vec::new();
        let mut run = 1;
        for _ in 1..n {
            if rng.gen_bool(0.5) {
                counts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        counts.push(run);
        let z = Content::new(counts).unwrap();
        if kostka(&p, &z).unwrap() > 0 && count_fillings(&p, &z).unwrap() <= 200_000 {
            return (p, z);
        }
    }
}

struct Workload {
    instances: Vec<Instance>,
    results: Vec<Vec<Straightening>>,
}

fn linearity_holds(s: &Straightening, inst: &Instance) -> Result<bool, String> {
    for j in 1..=inst.basis.len() {
        let lhs = BigInt::from(rcoeff(&s.input, inst.basis.tableau(j)).map_err(err)?);
        let rhs: BigInt = s.terms().map(|(i, a)| a * inst.matrix.get(i, j)).sum();
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

fn c6(work: &mut Workload) -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut total = 0;
    let mut oracle_dims = 0;
    for _ in 0..30 {
        let (p, z) = random_pair(&mut rng);
        let inst = Instance::new(&p, &z).map_err(err)?;
        let oracle = inst.oracle().map_err(err)?;
        oracle_dims = oracle_dims.max(oracle.space().dim());
        let mut results = Vec::new();
        for _ in 0..20 {
            let f = random_cardinal_filling(&p, &z, &mut rng).map_err(err)?;
            let closed = inst.straighten(&f, Method::Closed).map_err(err)?;
            let classical = inst.straighten(&f, Method::Classical).map_err(err)?;
            let reduced = oracle.reduce_to_ssyt(&oracle.space().unit(&f).map_err(err)?).map_err(err)?;
            let as_rational: Vec<BigRational> =
                closed.coefficients.iter().cloned().map(BigRational::from_integer).collect();
            ensure(closed.agrees_with(&classical), || format!("closed ≠ classical on {f:?}"))?;
            ensure(as_rational == reduced, || format!("closed ≠ oracle on {f:?}"))?;
            ensure(linearity_holds(&closed, &inst)?, || format!("linearity fails on {f:?}"))?;
            total += 1;
            results.push(closed);
        }
        work.instances.push(inst);
        work.results.push(results);
    }
    ensure(total >= 500, || format!("only {total} fillings"))?;
    within(
        start,
        Duration::from_secs(600),
        format!(
            "{total} fillings over 30 seeded (λ,z), largest |F(λ,z)| = {oracle_dims}: closed = classical = oracle, linearity for every j"
        ),
    )
}

/// Every `(λ,z)` with `5 ≤ |λ| ≤ 9` and `8 ≤ K ≤ 50`, drawn with a fixed seed.
fn formula_pairs(count: usize) -> Vec<(Partition, Content)> {
    let mut all = Vec::new();
    for n in 5..=9 {
        for p in partitions_of(n) {
            for z in partitions_of(n) {
                let z = Content::new(z.parts().to_vec()).unwrap();
                let k = kostka(&p, &z).unwrap();
                if (8..=50).contains(&k) {
                    all.push((p.clone(), z));
                }
            }
        }
    }
    // mix in a few non-partition contents
    for (p, z) in [(vec![3, 2, 1], vec![1, 2, 2, 1]), (vec![3, 3, 2], vec![1, 2, 1, 2, 2]), (vec![4, 2, 1], vec![2, 1, 3, 1])] {
        all.push((Partition::new(p).unwrap(), Content::new(z).unwrap()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    all.shuffle(&mut rng);
    all.truncate(count);
    all
}

fn c7(work: &mut Workload) -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0077);
    let pairs = formula_pairs(24);
    let (mut entries, mut coeffs) = (0usize, 0usize);
    let mut max_k = 0;
    for (p, z) in &pairs {
        let inst = Instance::new(p, z).map_err(err)?;
        let k = inst.basis.len();
        ensure(k <= 50, || format!("K = {k} for {p} {z}"))?;
        max_k = max_k.max(k);
        for j in 1..=k {
            for i in 1..=k {
                let c = dbasis_coeff_closed(i, j, &inst.matrix).map_err(err)?;
                ensure(&c == inst.dbasis.entry(j, i), || format!("entry ({j},{i}) on {p} {z}"))?;
                entries += 1;
            }
        }
        let mut results = Vec::new();
        for _ in 0..8 {
            let f = random_cardinal_filling(p, z, &mut rng).map_err(err)?;
            let closed = inst.straighten(&f, Method::Closed).map_err(err)?;
            for i in 1..=k {
                let chain = coefficient_chain(&f, i, &inst.basis, &inst.matrix).map_err(err)?;
                let paths = coefficient_paths(&f, i, &inst.basis, &inst.graph).map_err(err)?;
                ensure(&chain == closed.coefficient(i) && &paths == closed.coefficient(i), || {
                    format!("a_{i} on {f:?}: chain {chain}, paths {paths}, closed {}", closed.coefficient(i))
                })?;
                coeffs += 1;
            }
            results.push(closed);
        }
        work.instances.push(inst);
        work.results.push(results);
    }
    ensure(pairs.len() >= 20, || format!("only {} pairs", pairs.len()))?;
    let t = start.elapsed();
    Ok(format!(
        "{} (λ,z) pairs, K ≤ {max_k}: {entries} D-entries, {coeffs} coefficients with chain = paths = closed [{}]",
        pairs.len(),
        ms(t)
    ))
}

fn c8(work: &Workload) -> Check {
    let mut fills = 0;
    for (inst, results) in work.instances.iter().zip(&work.results) {
        let label = format!("{} {}", inst.basis.shape(), inst.basis.content());
        ensure(inst.matrix.is_unitriangular(), || format!("matrix not unitriangular on {label}"))?;
        ensure(inst.dbasis.is_unitriangular(), || format!("D-basis not unitriangular on {label}"))?;
        ensure(inst.graph.is_acyclic(), || format!("graph has a cycle on {label}"))?;
        ensure(inst.graph.is_index_decreasing(), || format!("edge i → j with i ≤ j on {label}"))?;
        for s in results {
            ensure(check_truncation(s, &inst.basis).map_err(err)?, || {
                format!("truncation fails on {:?}", s.input)
            })?;
            fills += 1;
        }
    }
    Ok(format!(
        "{} instances unitriangular, acyclic, index-decreasing; truncation on {fills} fillings",
        work.instances.len()
    ))
}

fn c9() -> Check {
    let shape = Partition::new(vec![5, 4, 3, 2]).unwrap();
    let content = Content::new(vec![3, 3, 2, 2, 2, 2]).unwrap();
    let report = run_bench(&BenchConfig {
        shape,
        content,
        trials: 500,
        seed: 9,
        rewrite_cap: straighten::straightening::DEFAULT_REWRITE_CAP,
        oracle_cap: None,
    })
    .map_err(err)?;
    ensure(report.kostka >= 20, || format!("K = {}", report.kostka))?;
    ensure(report.all_agree(), || {
        format!("closed and classical disagree on {} fillings", report.trials.len() - report.agreements())
    })?;
    let closed = report.median_closed_amortized_ns().unwrap();
    let classical = report.median_classical_ns().unwrap();
    let detail = format!(
        "(5,4,3,2)/(3,3,2,2,2,2), K = {}, {} fillings agree; median closed {:.1} µs (setup {:.1} µs spread over the fillings) vs classical {:.1} µs, ratio {:.2}",
        report.kostka,
        report.trials.len(),
        closed / 1e3,
        report.setup_ns as f64 / 1e3,
        classical / 1e3,
        classical / closed
    );
    if closed < classical {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn main() {
    let mut work = Workload {
        instances: Vec::new(),
        results: Vec::new(),
    };
    let outcomes: Vec<(&str, Check)> = vec![
        ("C1 rearrangement pair", c1()),
        ("C2 D-basis example", c2()),
        ("C3 coefficient graph example", c3()),
        ("C4 S-chain example", c4()),
        ("C5 relation vanishing, |λ| ≤ 6", c5()),
        ("C6 oracle equivalence", c6(&mut work)),
        ("C7 formula equivalence", c7(&mut work)),
        ("C8 structural invariants", c8(&work)),
        ("C9 closed vs classical timing", c9()),
    ];
    let mut failed = 0;
    for (name, outcome) in &outcomes {
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    println!("{} passed, {failed} failed", outcomes.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
