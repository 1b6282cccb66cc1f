//! Brute-force reference implementations, written against plain row vectors
//! so they share no code paths with the library beyond constructing fillings.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use straighten::{Content, Filling, Partition};

pub fn shape(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn content(counts: &[usize]) -> Content {
    Content::new(counts.to_vec()).unwrap()
}

pub fn rows(r: &[&[u32]], n: u32) -> Filling {
    Filling::from_rows(&r.iter().map(|x| x.to_vec()).collect::<Vec<_>>(), n).unwrap()
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Columns as vectors, top to bottom.
pub fn columns_of(f: &Filling) -> Vec<Vec<u32>> {
    let r = f.rows();
    let width = r.first().map_or(0, Vec::len);
    (0..width)
        .map(|c| r.iter().filter(|row| row.len() > c).map(|row| row[c]).collect())
        .collect()
}

fn rows_from_columns(cols: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let height = cols.first().map_or(0, Vec::len);
    (0..height)
        .map(|r| cols.iter().filter(|c| c.len() > r).map(|c| c[r]).collect())
        .collect()
}

pub fn from_columns(cols: &[Vec<u32>], n: u32) -> Filling {
    Filling::from_rows(&rows_from_columns(cols), n).unwrap()
}

/// Every ordering of `v` with its sign from the inversion count.
pub fn signed_orderings(v: &[u32]) -> Vec<(Vec<u32>, i64)> {
    fn rec(idx: &mut Vec<usize>, left: &mut Vec<usize>, v: &[u32], out: &mut Vec<(Vec<u32>, i64)>) {
        if left.is_empty() {
            let inv = (0..idx.len())
                .flat_map(|a| (a + 1..idx.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| idx[a] > idx[b])
                .count();
            let sign = if inv % 2 == 0 { 1 } else { -1 };
            out.push((idx.iter().map(|&i| v[i]).collect(), sign));
            return;
        }
        for k in 0..left.len() {
            let x = left.remove(k);
            idx.push(x);
            rec(idx, left, v, out);
            idx.pop();
            left.insert(k, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (0..v.len()).collect(), v, &mut out);
    out
}

fn sorted(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable();
    v
}

/// `R[F,S]` by summing signs over every product of column orderings.
pub fn brute_rcoeff(f: &Filling, s: &Filling) -> i64 {
    let target: Vec<Vec<u32>> = s.rows().into_iter().map(sorted).collect();
    let options: Vec<Vec<(Vec<u32>, i64)>> = columns_of(f).iter().map(|c| signed_orderings(c)).collect();
    let mut total = 0;
    let mut chosen: Vec<Vec<u32>> = Vec::new();
    fn rec(
        c: usize,
        sign: i64,
        options: &[Vec<(Vec<u32>, i64)>],
        chosen: &mut Vec<Vec<u32>>,
        target: &[Vec<u32>],
        total: &mut i64,
    ) {
        if c == options.len() {
            let r = rows_from_columns(chosen);
            if r.into_iter().map(sorted).collect::<Vec<_>>() == target {
                *total += sign;
            }
            return;
        }
        for (col, sg) in &options[c] {
            chosen.push(col.clone());
            rec(c + 1, sign * sg, options, chosen, target, total);
            chosen.pop();
        }
    }
    rec(0, 1, &options, &mut chosen, &target, &mut total);
    total
}

/// All arrangements of the content's letters in the shape, row-major.
pub fn brute_fillings(parts: &[usize], counts: &[usize]) -> Vec<Vec<Vec<u32>>> {
    let word: Vec<u32> = counts
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| std::iter::repeat_n(i as u32 + 1, c))
        .collect();
    let mut words = std::collections::BTreeSet::new();
    for (w, _) in signed_orderings(&word) {
        words.insert(w);
    }
    words
        .into_iter()
        .map(|w| {
            let mut it = w.into_iter();
            parts.iter().map(|&p| it.by_ref().take(p).collect()).collect()
        })
        .collect()
}

pub fn is_ssyt_rows(r: &[Vec<u32>]) -> bool {
    let rows_ok = r.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]));
    let cols_ok = (1..r.len()).all(|i| (0..r[i].len()).all(|c| r[i - 1][c] < r[i][c]));
    rows_ok && cols_ok
}

/// SSYT by filtering every arrangement, sorted with the largest row word first.
pub fn brute_ssyt(parts: &[usize], counts: &[usize]) -> Vec<Vec<Vec<u32>>> {
    let mut out: Vec<Vec<Vec<u32>>> = brute_fillings(parts, counts)
        .into_iter()
        .filter(|r| is_ssyt_rows(r))
        .collect();
    out.sort_by(|a, b| b.concat().cmp(&a.concat()));
    out
}

/// Straightening by elimination over every filling, with every Grassmann
/// transposition and every simple Plücker exchange as generators.
pub struct NaiveSystem {
    pub fillings: Vec<Vec<Vec<u32>>>,
    index: HashMap<Vec<Vec<u32>>, usize>,
    /// Column order: non-SSYT first.
    order: Vec<usize>,
    position: Vec<usize>,
    pivots: BTreeMap<usize, Vec<(usize, BigRational)>>,
    pub ssyt: Vec<Vec<Vec<u32>>>,
}

impl NaiveSystem {
    pub fn new(parts: &[usize], counts: &[usize]) -> Self {
        let fillings = brute_fillings(parts, counts);
        let index: HashMap<_, _> = fillings.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        let ssyt = brute_ssyt(parts, counts);
        let mut order: Vec<usize> = (0..fillings.len()).filter(|&i| !is_ssyt_rows(&fillings[i])).collect();
        order.extend((0..fillings.len()).filter(|&i| is_ssyt_rows(&fillings[i])));
        let mut position = vec![0; fillings.len()];
        for (p, &i) in order.iter().enumerate() {
            position[i] = p;
        }
        let mut sys = NaiveSystem {
            fillings,
            index,
            order,
            position,
            pivots: BTreeMap::new(),
            ssyt,
        };
        let mut gens: Vec<Vec<(Vec<Vec<u32>>, i64)>> = Vec::new();
        for f in &sys.fillings {
            let cols = cols_of_rows(f);
            for c in 0..cols.len() {
                for a in 0..cols[c].len() {
                    for b in a + 1..cols[c].len() {
                        let mut g = cols.clone();
                        g[c].swap(a, b);
                        gens.push(vec![(f.clone(), 1), (rows_from_columns(&g), 1)]);
                    }
                }
            }
            for j in 0..cols.len().saturating_sub(1) {
                let mut gen = vec![(f.clone(), 1)];
                for l in 0..cols[j].len() {
                    let mut g = cols.clone();
                    let top = g[j + 1][0];
                    g[j + 1][0] = g[j][l];
                    g[j][l] = top;
                    gen.push((rows_from_columns(&g), -1));
                }
                gens.push(gen);
            }
        }
        for g in gens {
            let mut v = BTreeMap::new();
            for (f, c) in g {
                add(&mut v, sys.position[sys.index[&f]], BigRational::from_integer(c.into()));
            }
            sys.reduce(&mut v);
            if let Some((&p, lead)) = v.iter().next() {
                let inv = lead.recip();
                let row = v.iter().map(|(&k, x)| (k, x * &inv)).collect();
                sys.pivots.insert(p, row);
            }
        }
        sys
    }

    fn reduce(&self, v: &mut BTreeMap<usize, BigRational>) {
        let mut cursor = 0;
        loop {
            let next = v
                .range(cursor..)
                .find(|(k, _)| self.pivots.contains_key(k))
                .map(|(&k, c)| (k, c.clone()));
            let Some((p, c)) = next else { break };
            for (k, x) in &self.pivots[&p] {
                add(v, *k, -(x * &c));
            }
            cursor = p + 1;
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Coefficients of `S_1..S_K` for the filling with these rows.
    pub fn straighten(&self, f: &[Vec<u32>]) -> Vec<BigRational> {
        let mut v = BTreeMap::new();
        add(&mut v, self.position[self.index[f]], BigRational::one());
        self.reduce(&mut v);
        self.ssyt
            .iter()
            .map(|s| v.get(&self.position[self.index[s]]).cloned().unwrap_or_else(BigRational::zero))
            .collect()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

fn cols_of_rows(r: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let width = r.first().map_or(0, Vec::len);
    (0..width)
        .map(|c| r.iter().filter(|row| row.len() > c).map(|row| row[c]).collect())
        .collect()
}

fn add(v: &mut BTreeMap<usize, BigRational>, k: usize, c: BigRational) {
    if c.is_zero() {
        return;
    }
    let e = v.entry(k).or_insert_with(BigRational::zero);
    *e += c;
    if e.is_zero() {
        v.remove(&k);
    }
}

/// Every `(shape, content)` with `|λ| = n` and no unused letters.
pub fn all_pairs(n: usize) -> Vec<(Partition, Content)> {
    let mut out = Vec::new();
    for p in straighten::tableau::partitions_of(n) {
        for z in straighten::enumeration::compositions(n) {
            out.push((p.clone(), z));
        }
    }
    out
}
