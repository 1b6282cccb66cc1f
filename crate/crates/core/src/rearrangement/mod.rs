//! Rearrangement coefficients `R[F,S]`: the signed count of column
//! rearrangements of `F` that have the row content of `S`.

mod schain;
mod split;

pub use schain::{prune_admissible, schain_data, ChainLink, SChainData};
pub use split::{row_completions, split, RowCompletions};

use rayon::prelude::*;

use crate::enumeration::SsytBasis;
use crate::error::{Error, Result};
use crate::tableau::Filling;

/// `R[F,S] = Σ sign(π)` over column rearrangements `π` with `F_π` row-content-equal to `S`.
///
/// Fillings with a repeated value in a column give 0.
pub fn rcoeff(f: &Filling, s: &Filling) -> Result<i64> {
    f.check_same_shape(s)?;
    if f.content() != s.content() {
        return Err(Error::ContentMismatch {
            left: f.content().counts().to_vec(),
            right: s.content().counts().to_vec(),
        });
    }
    if f.shape().column_lengths().first().is_some_and(|&len| len > 64) {
        return Err(Error::InvalidFilling("columns longer than 64 cells are unsupported".into()));
    }
    Ok(rcoeff_unchecked(f, s))
}

/// [`rcoeff`] without the shape and content checks.
pub(crate) fn rcoeff_unchecked(f: &Filling, s: &Filling) -> i64 {
    if !f.is_cardinal() {
        return 0;
    }
    if f.shape().num_columns() == 2 && s.is_cardinal() {
        if let Ok(data) = schain_data(s) {
            if !prune_admissible_unchecked(f, &data) {
                return 0;
            }
        }
    }
    let mut search = Search::new(f, s);
    search.row(0, false);
    search.total
}

fn prune_admissible_unchecked(f: &Filling, data: &SChainData) -> bool {
    schain::admissible(f, data)
}

fn low_bits(n: usize) -> u64 {
    if n >= 64 { u64::MAX } else { (1u64 << n) - 1 }
}

struct Search<'a> {
    f: &'a Filling,
    s: &'a Filling,
    widths: &'a [usize],
    heights: &'a [usize],
    residual: Vec<u32>,
    /// Bit `r` set when row `r` of `S` contains the value.
    rows_with: Vec<u64>,
    used: Vec<u64>,
    total: i64,
}

impl<'a> Search<'a> {
    fn new(f: &'a Filling, s: &'a Filling) -> Self {
        let n = f.alphabet() as usize + 1;
        let mut rows_with = vec![0u64; n];
        for (r, &w) in s.shape().parts().iter().enumerate() {
            for c in 0..w {
                rows_with[s.get(r, c) as usize] |= 1 << r;
            }
        }
        Search {
            f,
            s,
            widths: s.shape().parts(),
            heights: f.shape().column_lengths(),
            residual: vec![0; n],
            rows_with,
            used: vec![0; f.shape().num_columns()],
            total: 0,
        }
    }

    fn row(&mut self, r: usize, odd: bool) {
        if r == self.widths.len() {
            self.total += if odd { -1 } else { 1 };
            return;
        }
        if !self.feasible(r) {
            return;
        }
        for c in 0..self.widths[r] {
            self.residual[self.s.get(r, c) as usize] += 1;
        }
        self.cell(r, 0, odd);
        for c in 0..self.widths[r] {
            self.residual[self.s.get(r, c) as usize] -= 1;
        }
    }

    /// Every unplaced entry must still have a row of `S` at or below `r`,
    /// inside its column, that contains its value.
    fn feasible(&self, r: usize) -> bool {
        for (c, &h) in self.heights.iter().enumerate() {
            if h <= r {
                break;
            }
            let window = low_bits(h) & !low_bits(r);
            let col = self.f.column(c);
            let mut free = low_bits(h) & !self.used[c];
            while free != 0 {
                let x = free.trailing_zeros() as usize;
                free &= free - 1;
                if self.rows_with[col[x] as usize] & window == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn cell(&mut self, r: usize, c: usize, odd: bool) {
        if c == self.widths[r] {
            self.row(r + 1, odd);
            return;
        }
        let col = self.f.column(c);
        let free = low_bits(col.len()) & !self.used[c];
        let mut candidates = free;
        while candidates != 0 {
            let x = candidates.trailing_zeros();
            candidates &= candidates - 1;
            let v = col[x as usize] as usize;
            if self.residual[v] == 0 {
                continue;
            }
            // rows are assigned top-down, so the inversions added by
            // choosing source row x are the free rows above it
            let inversions = (free & ((1u64 << x) - 1)).count_ones();
            self.residual[v] -= 1;
            self.used[c] |= 1 << x;
            self.cell(r, c + 1, odd ^ (inversions & 1 == 1));
            self.used[c] &= !(1 << x);
            self.residual[v] += 1;
        }
    }
}

/// `M[i][j] = R[S_i, S_j]` over an SSYT basis (labels one-based).
///
/// Lower unitriangular: entries with `j > i` vanish and are not computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RearrangementMatrix {
    entries: Vec<Vec<i64>>,
}

impl RearrangementMatrix {
    pub fn from_entries(entries: Vec<Vec<i64>>) -> Result<Self> {
        let k = entries.len();
        if entries.iter().any(|row| row.len() != k) {
            return Err(Error::InvalidFilling("rearrangement matrix must be square".into()));
        }
        Ok(RearrangementMatrix { entries })
    }

    pub fn kostka(&self) -> usize {
        self.entries.len()
    }

    /// `R[S_i, S_j]`, one-based.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    /// Row `i` (one-based) as `R[S_i, S_1..S_K]`.
    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i - 1]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn is_unitriangular(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, &x)| if i == j { x == 1 } else if j > i { x == 0 } else { true })
        })
    }

    /// Nonzero entries strictly below the diagonal as `(i, j, R[S_i,S_j])`.
    pub fn off_diagonal(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.entries.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(move |&(j, &x)| j != i && x != 0)
                .map(move |(j, &x)| (i + 1, j + 1, x))
        })
    }
}

/// Computes `R[S_i, S_j]` for `j ≤ i`; rows are evaluated in parallel.
pub fn rcoeff_matrix(basis: &SsytBasis) -> RearrangementMatrix {
    let k = basis.len();
    let entries: Vec<Vec<i64>> = (1..=k)
        .into_par_iter()
        .map(|i| {
            let si = basis.tableau(i);
            let mut row = vec![0i64; k];
            for (j, slot) in row.iter_mut().enumerate().take(i) {
                *slot = rcoeff_unchecked(si, basis.tableau(j + 1));
            }
            row
        })
        .collect();
    RearrangementMatrix { entries }
}

/// `R[F, S_j]` for `j = 1..=upto` (one-based, returned zero-based).
pub fn rcoeff_row(f: &Filling, basis: &SsytBasis, upto: usize) -> Result<Vec<i64>> {
    basis.check_filling(f)?;
    let upto = upto.min(basis.len());
    Ok((1..=upto)
        .map(|j| rcoeff_unchecked(f, basis.tableau(j)))
        .collect())
}
