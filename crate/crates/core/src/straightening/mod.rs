//! The D-basis, the closed straightening formula and its chain-sum form,
//! plus a Plücker-rewriting baseline.

mod classical;

pub use classical::{straighten_classical, straighten_classical_with, ClassicalStats, DEFAULT_REWRITE_CAP};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::enumeration::SsytBasis;
use crate::error::{Error, Result};
use crate::rearrangement::{rcoeff_unchecked, RearrangementMatrix};
use crate::relations::RelationOracle;
use crate::tableau::Filling;

/// Default cap on enumerated chains per coefficient.
/// Below this many coefficients the rearrangement row is computed serially.
const PAR_THRESHOLD: usize = 32;

pub const DEFAULT_CHAIN_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Closed,
    Classical,
    Chain,
    Paths,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Closed,
        Method::Classical,
        Method::Chain,
        Method::Paths,
        Method::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Classical => "classical",
            Method::Chain => "chain",
            Method::Paths => "paths",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidFilling(format!("unknown method {s:?}")))
    }
}

/// `F = Σ a_i S_i` in the factor space, with `coefficients[i - 1] = a_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Straightening {
    pub input: Filling,
    pub coefficients: Vec<BigInt>,
    pub method: Method,
}

impl Straightening {
    /// Nonzero `(i, a_i)` in increasing `i`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &BigInt)> + '_ {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i + 1, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    pub fn coefficient(&self, i: usize) -> &BigInt {
        &self.coefficients[i - 1]
    }

    /// Same coefficients, ignoring input and method.
    pub fn agrees_with(&self, other: &Straightening) -> bool {
        self.coefficients == other.coefficients
    }
}

/// `D(S_i)` expanded in the SSYT basis: `row(i)[j - 1]` is the coefficient of `S_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DBasis {
    matrix: Vec<Vec<BigInt>>,
    depths: Vec<usize>,
    /// Nonzero entries of each row as machine integers, when they all fit.
    sparse: Vec<Option<Vec<(usize, i64)>>>,
}

impl DBasis {
    pub fn kostka(&self) -> usize {
        self.matrix.len()
    }

    /// Expansion of `D(S_i)`, one-based.
    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.matrix[i - 1]
    }

    /// `B[j][i]`: coefficient of `S_i` in `D(S_j)`.
    pub fn entry(&self, j: usize, i: usize) -> &BigInt {
        &self.matrix[j - 1][i - 1]
    }

    pub fn matrix(&self) -> &[Vec<BigInt>] {
        &self.matrix
    }

    pub fn depth(&self, i: usize) -> usize {
        self.depths[i - 1]
    }

    pub fn depths(&self) -> &[usize] {
        &self.depths
    }

    pub fn is_unitriangular(&self) -> bool {
        self.matrix.iter().enumerate().all(|(j, row)| {
            row.iter().enumerate().all(|(i, x)| match i.cmp(&j) {
                std::cmp::Ordering::Equal => x.is_one(),
                std::cmp::Ordering::Greater => x.is_zero(),
                std::cmp::Ordering::Less => true,
            })
        })
    }
}

/// `D(S_i) = S_i − Σ_{j<i} R[S_i,S_j]·D(S_j)`.
pub fn build_dbasis(m: &RearrangementMatrix) -> DBasis {
    let k = m.kostka();
    let mut matrix: Vec<Vec<BigInt>> = Vec::with_capacity(k);
    for i in 0..k {
        let mut row = vec![BigInt::zero(); k];
        row[i] = BigInt::one();
        for j in 0..i {
            let r = m.entries()[i][j];
            if r == 0 {
                continue;
            }
            let r = BigInt::from(r);
            for (slot, d) in row.iter_mut().zip(&matrix[j]).take(j + 1) {
                if !d.is_zero() {
                    *slot -= &r * d;
                }
            }
        }
        matrix.push(row);
    }
    let depths = (1..=k).map(|j| depth(j, m)).collect();
    let sparse = matrix
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| i64::try_from(x).ok().map(|x| (i, x)))
                .collect::<Option<Vec<_>>>()
        })
        .collect();
    DBasis { matrix, depths, sparse }
}

/// 0 when `R[S_j,S_k] = 0` for every `k < j`, otherwise one more than the
/// largest depth among those `k` with `R[S_j,S_k] ≠ 0`.
pub fn depth(j: usize, m: &RearrangementMatrix) -> usize {
    let mut memo = vec![None; m.kostka()];
    depth_memo(j, m, &mut memo)
}

fn depth_memo(j: usize, m: &RearrangementMatrix, memo: &mut [Option<usize>]) -> usize {
    if let Some(d) = memo[j - 1] {
        return d;
    }
    let d = (1..j)
        .filter(|&k| m.get(j, k) != 0)
        .map(|k| 1 + depth_memo(k, m, memo))
        .max()
        .unwrap_or(0);
    memo[j - 1] = Some(d);
    d
}

/// Coefficient of `S_i` in `D(S_j)` as a signed sum over index chains
/// `i = b_0 < b_1 < … < b_d = j`, visiting only nonzero matrix entries.
pub fn dbasis_coeff_closed(i: usize, j: usize, m: &RearrangementMatrix) -> Result<BigInt> {
    dbasis_coeff_closed_capped(i, j, m, DEFAULT_CHAIN_CAP)
}

pub fn dbasis_coeff_closed_capped(
    i: usize,
    j: usize,
    m: &RearrangementMatrix,
    cap: usize,
) -> Result<BigInt> {
    let k = m.kostka();
    check_label(i, k)?;
    check_label(j, k)?;
    if i > j {
        return Ok(BigInt::zero());
    }
    let mut walk = ChainWalk::new(m, j, cap);
    // R[S_{b_0}, S_i] = R[S_i, S_i] = 1
    walk.extend(i, BigInt::one(), false, &mut |b, w, odd, acc: &mut BigInt| {
        if b == j {
            if odd {
                *acc -= w;
            } else {
                *acc += w;
            }
        }
    })?;
    Ok(walk.acc)
}

/// `a_i` by the chain sum over `i = b_0 < … < b_d ≤ k` weighted by `R[F,S_{b_d}]`,
/// where `S_k = std(F)`.
pub fn coefficient_chain(
    f: &Filling,
    i: usize,
    basis: &SsytBasis,
    m: &RearrangementMatrix,
) -> Result<BigInt> {
    let k = basis.standardization_index(f)?;
    check_label(i, basis.len())?;
    let r = (1..=k).map(|j| rcoeff_unchecked(f, basis.tableau(j))).collect::<Vec<_>>();
    coefficient_chain_with(&r, i, k, m, DEFAULT_CHAIN_CAP)
}

/// Chain sum with precomputed `r[j - 1] = R[F, S_j]` for `j ≤ k`.
pub fn coefficient_chain_with(
    r: &[i64],
    i: usize,
    k: usize,
    m: &RearrangementMatrix,
    cap: usize,
) -> Result<BigInt> {
    if i > k {
        return Ok(BigInt::zero());
    }
    let mut walk = ChainWalk::new(m, k, cap);
    walk.extend(i, BigInt::one(), false, &mut |b, w, odd, acc: &mut BigInt| {
        let rf = r[b - 1];
        if rf != 0 {
            let term = w * rf;
            if odd {
                *acc -= term;
            } else {
                *acc += term;
            }
        }
    })?;
    Ok(walk.acc)
}

/// Depth-first walk over increasing chains with nonzero weight, bounded above by `top`.
struct ChainWalk<'a> {
    m: &'a RearrangementMatrix,
    top: usize,
    cap: usize,
    seen: usize,
    acc: BigInt,
}

impl<'a> ChainWalk<'a> {
    fn new(m: &'a RearrangementMatrix, top: usize, cap: usize) -> Self {
        ChainWalk {
            m,
            top,
            cap,
            seen: 0,
            acc: BigInt::zero(),
        }
    }

    fn extend<V>(&mut self, b: usize, w: BigInt, odd: bool, visit: &mut V) -> Result<()>
    where
        V: FnMut(usize, &BigInt, bool, &mut BigInt),
    {
        self.seen += 1;
        if self.seen > self.cap {
            return Err(Error::CapExceeded {
                what: "chain enumeration",
                limit: self.cap,
            });
        }
        visit(b, &w, odd, &mut self.acc);
        for c in b + 1..=self.top {
            let x = self.m.get(c, b);
            if x != 0 {
                self.extend(c, &w * x, !odd, visit)?;
            }
        }
        Ok(())
    }
}

fn check_label(i: usize, k: usize) -> Result<()> {
    if i == 0 || i > k {
        return Err(Error::IndexOutOfRange {
            what: "basis label",
            index: i,
            range: format!("1..={k}"),
        });
    }
    Ok(())
}

/// `R[F, S_j]` for `j ≤ k` where `S_k = std(F)`; entries past `k` vanish.
/// `None` for fillings with a repeated column value.
pub fn truncated_rcoeffs(f: &Filling, basis: &SsytBasis) -> Result<Option<(usize, Vec<i64>)>> {
    basis.check_filling(f)?;
    if !f.is_cardinal() {
        return Ok(None);
    }
    let k = basis.standardization_index(f)?;
    let r = if k >= PAR_THRESHOLD && rayon::current_num_threads() > 1 {
        (1..=k)
            .into_par_iter()
            .map(|j| rcoeff_unchecked(f, basis.tableau(j)))
            .collect()
    } else {
        (1..=k).map(|j| rcoeff_unchecked(f, basis.tableau(j))).collect()
    };
    Ok(Some((k, r)))
}

/// Σ r_j·D(S_j) in `i128`; `None` if an entry does not fit or a sum overflows.
fn combine_small(r: &[i64], d: &DBasis, kk: usize) -> Option<Vec<i128>> {
    let sparse = &d.sparse;
    let mut acc = vec![0i128; kk];
    for (j, &rj) in r.iter().enumerate() {
        if rj == 0 {
            continue;
        }
        for &(i, b) in sparse[j].as_ref()? {
            acc[i] = acc[i].checked_add(rj as i128 * b as i128)?;
        }
    }
    Some(acc)
}

/// `F = Σ_{j ≤ k} R[F,S_j]·D(S_j)`, expanded in the SSYT basis.
pub fn straighten_closed(f: &Filling, basis: &SsytBasis, d: &DBasis) -> Result<Straightening> {
    let kk = basis.len();
    let mut coefficients = vec![BigInt::zero(); kk];
    if let Some((_, r)) = truncated_rcoeffs(f, basis)? {
        if let Some(small) = combine_small(&r, d, kk) {
            return Ok(Straightening {
                input: f.clone(),
                coefficients: small.into_iter().map(BigInt::from).collect(),
                method: Method::Closed,
            });
        }
        for (j, &rj) in r.iter().enumerate() {
            if rj == 0 {
                continue;
            }
            let rj = BigInt::from(rj);
            for (a, b) in coefficients.iter_mut().zip(&d.matrix[j]).take(j + 1) {
                if !b.is_zero() {
                    *a += &rj * b;
                }
            }
        }
    }
    Ok(Straightening {
        input: f.clone(),
        coefficients,
        method: Method::Closed,
    })
}

/// Every coefficient through [`coefficient_chain_with`].
pub fn straighten_chain(
    f: &Filling,
    basis: &SsytBasis,
    m: &RearrangementMatrix,
) -> Result<Straightening> {
    straighten_chain_with(f, basis, m, DEFAULT_CHAIN_CAP)
}

/// [`straighten_chain`] with at most `cap` chains walked per coefficient.
pub fn straighten_chain_with(
    f: &Filling,
    basis: &SsytBasis,
    m: &RearrangementMatrix,
    cap: usize,
) -> Result<Straightening> {
    let kk = basis.len();
    let mut coefficients = vec![BigInt::zero(); kk];
    if let Some((k, r)) = truncated_rcoeffs(f, basis)? {
        for (i, slot) in coefficients.iter_mut().enumerate().take(k) {
            *slot = coefficient_chain_with(&r, i + 1, k, m, cap)?;
        }
    }
    Ok(Straightening {
        input: f.clone(),
        coefficients,
        method: Method::Chain,
    })
}

/// Straightening read off the elimination oracle.
pub fn straighten_oracle(f: &Filling, oracle: &RelationOracle) -> Result<Straightening> {
    oracle.basis().check_filling(f)?;
    Ok(Straightening {
        input: f.clone(),
        coefficients: oracle.straighten(f)?,
        method: Method::Oracle,
    })
}

/// `R[F,S_j] = Σ_i a_i·R[S_i,S_j]` for every `j`.
pub fn check_linearity(s: &Straightening, basis: &SsytBasis, m: &RearrangementMatrix) -> bool {
    let f = &s.input;
    (1..=basis.len()).all(|j| {
        let lhs = BigInt::from(rcoeff_unchecked(f, basis.tableau(j)));
        let rhs: BigInt = s.terms().map(|(i, a)| a * m.get(i, j)).sum();
        lhs == rhs
    })
}

/// `a_j = 0` past `k = std(F)` and `a_k` equal to the column-sort sign.
pub fn check_truncation(s: &Straightening, basis: &SsytBasis) -> Result<bool> {
    let f = &s.input;
    if !f.is_cardinal() {
        return Ok(s.is_zero());
    }
    let k = basis.standardization_index(f)?;
    let (_, sign) = f.sort_columns_cardinal();
    let tail_zero = s.coefficients[k..].iter().all(Zero::is_zero);
    Ok(tail_zero && s.coefficient(k) == &BigInt::from(sign.to_i64()))
}

/// Largest `|a_i|`, for reporting.
pub fn max_abs_coefficient(s: &Straightening) -> BigInt {
    s.coefficients.iter().map(|c| c.abs()).max().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::enumerate_ssyt;
    use crate::rearrangement::rcoeff_matrix;
    use crate::tableau::{Content, Partition};

    fn example() -> (SsytBasis, RearrangementMatrix) {
        let b = enumerate_ssyt(
            &Partition::new(vec![4, 3, 2]).unwrap(),
            &Content::new(vec![2, 2, 3, 2]).unwrap(),
        )
        .unwrap();
        let m = rcoeff_matrix(&b);
        (b, m)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn dbasis_rows() {
        let (_, m) = example();
        let d = build_dbasis(&m);
        assert!(d.is_unitriangular());
        assert_eq!(d.row(3), ints(&[-1, 0, 1, 0, 0, 0]).as_slice());
        assert_eq!(d.row(4), ints(&[-1, 0, 0, 1, 0, 0]).as_slice());
        assert_eq!(d.row(5), ints(&[-1, -1, 0, 1, 1, 0]).as_slice());
        assert_eq!(d.row(6), ints(&[1, -1, 0, -1, 1, 1]).as_slice());
        assert_eq!(d.depths(), &[0, 0, 1, 1, 2, 3]);
    }

    #[test]
    fn chain_formula_matches_rows() {
        let (_, m) = example();
        let d = build_dbasis(&m);
        for j in 1..=6 {
            for i in 1..=6 {
                assert_eq!(&dbasis_coeff_closed(i, j, &m).unwrap(), d.entry(j, i));
            }
        }
        assert!(dbasis_coeff_closed(0, 1, &m).is_err());
        assert!(dbasis_coeff_closed(1, 7, &m).is_err());
    }

    #[test]
    fn closed_and_chain_agree_on_example() {
        let (b, m) = example();
        let d = build_dbasis(&m);
        let f = Filling::from_rows(&[vec![2, 1, 1, 3], vec![3, 3, 2], vec![4, 4]], 4).unwrap();
        let s = straighten_closed(&f, &b, &d).unwrap();
        assert_eq!(s.coefficients, ints(&[0, 0, 0, -1, 1, 0]));
        assert_eq!(straighten_chain(&f, &b, &m).unwrap().coefficients, s.coefficients);
        assert_eq!(coefficient_chain(&f, 5, &b, &m).unwrap(), BigInt::from(1));
        assert!(check_linearity(&s, &b, &m));
        assert!(check_truncation(&s, &b).unwrap());
    }

    #[test]
    fn zero_for_duplicates_and_sign_for_columns() {
        let b = enumerate_ssyt(
            &Partition::new(vec![1, 1]).unwrap(),
            &Content::new(vec![1, 1]).unwrap(),
        )
        .unwrap();
        let m = rcoeff_matrix(&b);
        let d = build_dbasis(&m);
        let f = Filling::from_columns(&[vec![2, 1]], 2).unwrap();
        assert_eq!(straighten_closed(&f, &b, &d).unwrap().coefficients, ints(&[-1]));
        let b2 = enumerate_ssyt(
            &Partition::new(vec![2, 1]).unwrap(),
            &Content::new(vec![2, 1]).unwrap(),
        )
        .unwrap();
        let d2 = build_dbasis(&rcoeff_matrix(&b2));
        let dup = Filling::from_rows(&[vec![1, 2], vec![1]], 2).unwrap();
        assert!(straighten_closed(&dup, &b2, &d2).unwrap().is_zero());
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("fast".parse::<Method>().is_err());
    }
}
