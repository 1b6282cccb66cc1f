//! Straightening by repeated Plücker substitution.
//!
//! The combination is kept over column-strict tableaux. The smallest
//! non-semistandard tableau `T` in row word order is rewritten using its
//! leftmost column pair `(j, j+1)` with a row descent and the topmost such
//! row `r`: the relation exchanging the top `r` entries of column `j+1`
//! (one-based `r`) gives `T = Σ` of the exchanged fillings. Every nonzero
//! term, once its columns are sorted, has a larger entry set in column `j+1`
//! and equal columns to its right, which bounds the process.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::enumeration::SsytBasis;
use crate::error::{Error, Result};
use crate::relations::pluecker_expand;
use crate::tableau::{Filling, Sign};

use super::{Method, Straightening};

/// Default cap on substitutions per run.
pub const DEFAULT_REWRITE_CAP: usize = 10_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClassicalStats {
    /// Tableaux substituted by a relation.
    pub rewrites: usize,
    /// Distinct tableaux whose expansion was computed.
    pub expansions: usize,
}

pub fn straighten_classical(f: &Filling, basis: &SsytBasis) -> Result<Straightening> {
    Ok(straighten_classical_with(f, basis, DEFAULT_REWRITE_CAP)?.0)
}

pub fn straighten_classical_with(
    f: &Filling,
    basis: &SsytBasis,
    cap: usize,
) -> Result<(Straightening, ClassicalStats)> {
    basis.check_filling(f)?;
    let mut stats = ClassicalStats::default();
    let mut pending: BTreeMap<Filling, BigInt> = BTreeMap::new();
    let mut done: BTreeMap<Filling, BigInt> = BTreeMap::new();
    let mut memo: HashMap<Filling, Vec<(Filling, Sign)>> = HashMap::new();

    if f.is_cardinal() {
        let (t, sign) = f.sort_columns_cardinal();
        let target = if t.is_semistandard() { &mut done } else { &mut pending };
        target.insert(t, BigInt::from(sign.to_i64()));
    }

    while let Some((t, c)) = pending.pop_first() {
        stats.rewrites += 1;
        if stats.rewrites > cap {
            return Err(Error::CapExceeded {
                what: "classical rewrite steps",
                limit: cap,
            });
        }
        if !memo.contains_key(&t) {
            stats.expansions += 1;
            let terms = expand(&t);
            memo.insert(t.clone(), terms);
        }
        for (u, sign) in &memo[&t] {
            let target = if u.is_semistandard() { &mut done } else { &mut pending };
            let slot = target.entry(u.clone()).or_insert_with(BigInt::zero);
            match sign {
                Sign::Plus => *slot += &c,
                Sign::Minus => *slot -= &c,
            }
            if slot.is_zero() {
                target.remove(u);
            }
        }
    }

    let mut coefficients = vec![BigInt::zero(); basis.len()];
    for (t, c) in done {
        let i = basis.index_of(&t).ok_or_else(|| {
            Error::InvalidFilling(format!("{t:?} is not in the basis"))
        })?;
        coefficients[i - 1] = c;
    }
    Ok((
        Straightening {
            input: f.clone(),
            coefficients,
            method: Method::Classical,
        },
        stats,
    ))
}

/// The sorted, signed, cardinal terms that replace a non-semistandard tableau `t`.
fn expand(t: &Filling) -> Vec<(Filling, Sign)> {
    let (j, r) = first_descent(t).expect("non-semistandard tableau has a row descent");
    let relation = pluecker_expand(t, j, r + 1).expect("descent row lies in both columns");
    relation
        .terms
        .iter()
        .skip(1)
        .filter(|(u, _)| u.is_cardinal())
        .map(|(u, _)| u.sort_columns_cardinal())
        .collect()
}

/// Leftmost column `j` with some `t(r, j) > t(r, j+1)`, and the topmost such `r` (zero-based).
fn first_descent(t: &Filling) -> Option<(usize, usize)> {
    let shape = t.shape();
    (0..shape.num_columns().saturating_sub(1)).find_map(|j| {
        (0..shape.col_len(j + 1))
            .find(|&r| t.get(r, j) > t.get(r, j + 1))
            .map(|r| (j, r))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::enumerate_ssyt;
    use crate::tableau::{Content, Partition};

    #[test]
    fn example_result() {
        let b = enumerate_ssyt(
            &Partition::new(vec![4, 3, 2]).unwrap(),
            &Content::new(vec![2, 2, 3, 2]).unwrap(),
        )
        .unwrap();
        let f = Filling::from_rows(&[vec![2, 1, 1, 3], vec![3, 3, 2], vec![4, 4]], 4).unwrap();
        let (s, stats) = straighten_classical_with(&f, &b, 1000).unwrap();
        let want: Vec<BigInt> = [0, 0, 0, -1, 1, 0].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(s.coefficients, want);
        assert!(stats.rewrites > 0);
        let (same, none) = straighten_classical_with(b.tableau(3), &b, 1000).unwrap();
        assert_eq!(none.rewrites, 0);
        assert_eq!(same.terms().collect::<Vec<_>>(), vec![(3, &BigInt::from(1))]);
    }

    #[test]
    fn descent_location() {
        let t = Filling::from_rows(&[vec![1, 1, 2], vec![3, 2]], 3).unwrap();
        assert_eq!(first_descent(&t), Some((0, 1)));
        let s = Filling::from_rows(&[vec![1, 1, 2], vec![2, 3]], 3).unwrap();
        assert_eq!(first_descent(&s), None);
    }

    #[test]
    fn cap_reports_error() {
        let b = enumerate_ssyt(
            &Partition::new(vec![2, 2]).unwrap(),
            &Content::new(vec![1, 1, 1, 1]).unwrap(),
        )
        .unwrap();
        let f = Filling::from_rows(&[vec![3, 1], vec![4, 2]], 4).unwrap();
        assert!(matches!(
            straighten_classical_with(&f, &b, 0),
            Err(Error::CapExceeded { .. })
        ));
    }
}
