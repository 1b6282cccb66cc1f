use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A partition `λ_1 ≥ λ_2 ≥ … ≥ λ_k > 0`, identified with its Young diagram.
///
/// Cheap to clone: the row lengths, column lengths and column offsets are
/// shared behind reference counts. The empty partition (no rows) is allowed
/// and shows up as the leftover of a two-column split.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Arc<[usize]>,
    conj: Arc<[usize]>,
    offsets: Arc<[usize]>,
}

impl Partition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let parts: Vec<usize> = parts.into();
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self::from_valid(parts))
    }

    /// Builds the partition whose column lengths are `columns`.
    pub fn from_column_lengths(columns: impl Into<Vec<usize>>) -> Result<Self> {
        let columns: Vec<usize> = columns.into();
        let as_rows = Partition::new(columns)?;
        Ok(as_rows.conjugate())
    }

    pub fn empty() -> Self {
        Self::from_valid(Vec::new())
    }

    fn from_valid(parts: Vec<usize>) -> Self {
        let width = parts.first().copied().unwrap_or(0);
        let conj: Vec<usize> = (1..=width)
            .map(|c| parts.iter().filter(|&&p| p >= c).count())
            .collect();
        let mut offsets = Vec::with_capacity(conj.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for &len in &conj {
            acc += len;
            offsets.push(acc);
        }
        Partition {
            parts: parts.into(),
            conj: conj.into(),
            offsets: offsets.into(),
        }
    }

    /// Row lengths.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Column lengths `ζ_1, …, ζ_{λ_1}`.
    pub fn column_lengths(&self) -> &[usize] {
        &self.conj
    }

    pub fn conjugate(&self) -> Partition {
        Self::from_valid(self.conj.to_vec())
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.offsets[self.offsets.len() - 1]
    }

    /// Number of rows `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of columns `λ_1`.
    pub fn num_columns(&self) -> usize {
        self.conj.len()
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.parts.get(r).copied().unwrap_or(0)
    }

    pub fn col_len(&self, c: usize) -> usize {
        self.conj.get(c).copied().unwrap_or(0)
    }

    /// Offset of column `c` in column-major cell storage.
    pub(crate) fn col_offset(&self, c: usize) -> usize {
        self.offsets[c]
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        c < self.num_columns() && r < self.conj[c]
    }

    /// Cells `(r, c)` in row-word order: top row first, left to right.
    pub fn cells_row_major(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Shape obtained by keeping only the listed columns (in order).
    pub fn select_columns(&self, cols: &[usize]) -> Result<Partition> {
        let lens: Vec<usize> = cols.iter().map(|&c| self.col_len(c)).collect();
        if lens.is_empty() {
            return Ok(Partition::empty());
        }
        Partition::from_column_lengths(lens)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", &self.parts[..])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n`, largest part first, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_valid(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        let p = Partition::new(vec![4, 2, 2]).unwrap();
        assert_eq!(p.conjugate().parts(), &[3, 3, 1, 1]);
        assert_eq!(Partition::new(vec![1]).unwrap().conjugate().parts(), &[1]);
        assert_eq!(
            Partition::new(vec![3, 3, 2]).unwrap().conjugate().parts(),
            &[3, 3, 2]
        );
    }

    #[test]
    fn conjugate_is_involution() {
        for n in 1..=8 {
            for p in partitions_of(n) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(p.conjugate().size(), n);
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(Vec::new()).unwrap().is_empty());
    }

    #[test]
    fn offsets() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.column_lengths(), &[2, 1, 1]);
        assert_eq!(p.col_offset(0), 0);
        assert_eq!(p.col_offset(1), 2);
        assert_eq!(p.col_offset(2), 3);
        assert_eq!(p.size(), 4);
    }
}
