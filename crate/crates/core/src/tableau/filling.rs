use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::tableau::{MultiPermutation, Partition, Sign};

/// Occurrence counts `z = (z_1, …, z_n)` over the alphabet `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Content {
    counts: Vec<usize>,
}

impl Content {
    pub fn new(counts: impl Into<Vec<usize>>) -> Result<Self> {
        let counts = counts.into();
        if counts.is_empty() {
            return Err(Error::InvalidFilling("content needs an alphabet of size >= 1".into()));
        }
        Ok(Content { counts })
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Alphabet size `n`.
    pub fn alphabet(&self) -> u32 {
        self.counts.len() as u32
    }

    pub fn size(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Count of value `v` (one-based).
    pub fn count(&self, v: u32) -> usize {
        self.counts.get(v as usize - 1).copied().unwrap_or(0)
    }

    /// The multiset as a sorted word, e.g. `(2,1)` gives `[1, 1, 2]`.
    pub fn sorted_word(&self) -> Vec<u32> {
        self.counts
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat_n(i as u32 + 1, k))
            .collect()
    }
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A filling of a Young diagram with values in `[n]`.
///
/// Cells are stored column-major since the column group acts column by column.
/// Row and column indices are zero-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    shape: Partition,
    alphabet: u32,
    cells: Box<[u32]>,
}

impl Filling {
    /// Builds a filling from its rows, top row first.
    pub fn from_rows(rows: &[Vec<u32>], alphabet: u32) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect::<Vec<_>>())?;
        let mut cells = vec![0u32; shape.size()];
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                cells[shape.col_offset(c) + r] = v;
            }
        }
        Filling::from_cells(shape, alphabet, cells)
    }

    /// Builds a filling from its columns, left column first.
    pub fn from_columns(columns: &[Vec<u32>], alphabet: u32) -> Result<Self> {
        let lens: Vec<usize> = columns.iter().map(Vec::len).collect();
        let shape = if lens.is_empty() {
            Partition::empty()
        } else {
            Partition::from_column_lengths(lens)?
        };
        let cells: Vec<u32> = columns.iter().flatten().copied().collect();
        Filling::from_cells(shape, alphabet, cells)
    }

    /// Column-major cells.
    pub fn from_cells(shape: Partition, alphabet: u32, cells: Vec<u32>) -> Result<Self> {
        if alphabet == 0 {
            return Err(Error::InvalidFilling("alphabet must be at least 1".into()));
        }
        if cells.len() != shape.size() {
            return Err(Error::InvalidFilling(format!(
                "{} cells for a shape of size {}",
                cells.len(),
                shape.size()
            )));
        }
        if let Some(&v) = cells.iter().find(|&&v| v == 0 || v > alphabet) {
            return Err(Error::InvalidFilling(format!(
                "value {v} outside the alphabet [1, {alphabet}]"
            )));
        }
        Ok(Filling {
            shape,
            alphabet,
            cells: cells.into_boxed_slice(),
        })
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_cells_unchecked(shape: Partition, alphabet: u32, cells: Vec<u32>) -> Self {
        debug_assert_eq!(cells.len(), shape.size());
        Filling {
            shape,
            alphabet,
            cells: cells.into_boxed_slice(),
        }
    }

    pub fn empty(alphabet: u32) -> Self {
        Filling {
            shape: Partition::empty(),
            alphabet,
            cells: Box::new([]),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    /// Column-major cell values.
    pub fn cells(&self) -> &[u32] {
        &self.cells
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.cells[self.shape.col_offset(c) + r]
    }

    pub fn column(&self, c: usize) -> &[u32] {
        let start = self.shape.col_offset(c);
        &self.cells[start..start + self.shape.col_len(c)]
    }

    pub fn columns(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.shape.num_columns()).map(move |c| self.column(c))
    }

    pub fn row(&self, r: usize) -> Vec<u32> {
        (0..self.shape.row_len(r)).map(|c| self.get(r, c)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.shape.len()).map(|r| self.row(r)).collect()
    }

    /// Values of row `r`, sorted.
    pub fn row_content(&self, r: usize) -> Vec<u32> {
        let mut row = self.row(r);
        row.sort_unstable();
        row
    }

    pub fn content(&self) -> Content {
        let mut counts = vec![0usize; self.alphabet as usize];
        for &v in self.cells.iter() {
            counts[v as usize - 1] += 1;
        }
        Content { counts }
    }

    pub fn is_cardinal(&self) -> bool {
        self.columns().all(|col| {
            let mut seen = 0u128;
            let mut wide = Vec::new();
            for &v in col {
                if v < 128 {
                    let bit = 1u128 << v;
                    if seen & bit != 0 {
                        return false;
                    }
                    seen |= bit;
                } else if wide.contains(&v) {
                    return false;
                } else {
                    wide.push(v);
                }
            }
            true
        })
    }

    pub fn is_tableau(&self) -> bool {
        self.columns().all(|col| col.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_semistandard(&self) -> bool {
        self.is_tableau()
            && (0..self.shape.len()).all(|r| {
                (1..self.shape.row_len(r)).all(|c| self.get(r, c - 1) <= self.get(r, c))
            })
    }

    /// Rows read left to right, top row first.
    pub fn row_word(&self) -> Vec<u32> {
        self.shape
            .cells_row_major()
            .map(|(r, c)| self.get(r, c))
            .collect()
    }

    /// Lexicographic comparison of row words, compared as integer sequences.
    pub fn row_word_cmp(&self, other: &Filling) -> Result<Ordering> {
        self.check_same_shape(other)?;
        if self.content() != other.content() {
            return Err(Error::ContentMismatch {
                left: self.content().counts,
                right: other.content().counts,
            });
        }
        Ok(self.row_word_cmp_unchecked(other))
    }

    pub(crate) fn row_word_cmp_unchecked(&self, other: &Filling) -> Ordering {
        let a = self.shape.cells_row_major().map(|(r, c)| self.get(r, c));
        let b = other.shape.cells_row_major().map(|(r, c)| other.get(r, c));
        a.cmp(b)
    }

    pub(crate) fn check_same_shape(&self, other: &Filling) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch {
                left: self.shape.parts().to_vec(),
                right: other.shape.parts().to_vec(),
            });
        }
        Ok(())
    }

    /// Sorts every column strictly increasing, returning the tableau
    /// `T = F_σ` together with `sign(σ)`.
    pub fn sort_columns(&self) -> Result<(Filling, Sign)> {
        if !self.is_cardinal() {
            return Err(Error::NotCardinal);
        }
        Ok(self.sort_columns_cardinal())
    }

    pub(crate) fn sort_columns_cardinal(&self) -> (Filling, Sign) {
        let mut cells = self.cells.to_vec();
        let mut odd = false;
        for c in 0..self.shape.num_columns() {
            let start = self.shape.col_offset(c);
            let col = &mut cells[start..start + self.shape.col_len(c)];
            // insertion sort; the number of swaps is the inversion count
            for i in 1..col.len() {
                let mut k = i;
                while k > 0 && col[k - 1] > col[k] {
                    col.swap(k - 1, k);
                    odd = !odd;
                    k -= 1;
                }
            }
        }
        (
            Filling::from_cells_unchecked(self.shape.clone(), self.alphabet, cells),
            Sign::from_parity(odd),
        )
    }

    /// Columns sorted increasing, then each row sorted weakly increasing.
    pub fn standardize(&self) -> Filling {
        let mut cells = self.cells.to_vec();
        for c in 0..self.shape.num_columns() {
            let start = self.shape.col_offset(c);
            cells[start..start + self.shape.col_len(c)].sort_unstable();
        }
        let mut out = Filling::from_cells_unchecked(self.shape.clone(), self.alphabet, cells);
        for r in 0..self.shape.len() {
            let row = out.row_content(r);
            for (c, v) in row.into_iter().enumerate() {
                out.set(r, c, v);
            }
        }
        out
    }

    /// `F_π(r, c) = F(π_c(r), c)`.
    pub fn apply(&self, pi: &MultiPermutation) -> Result<Filling> {
        if !pi.fits(&self.shape) {
            return Err(Error::InvalidPermutation(format!(
                "{pi:?} does not act on columns {:?}",
                self.shape.column_lengths()
            )));
        }
        let mut cells = Vec::with_capacity(self.cells.len());
        for c in 0..self.shape.num_columns() {
            let col = self.column(c);
            let p = pi.column(c);
            cells.extend((0..col.len()).map(|r| col[p.image(r)]));
        }
        Ok(Filling::from_cells_unchecked(
            self.shape.clone(),
            self.alphabet,
            cells,
        ))
    }

    pub fn same_row_content(&self, other: &Filling) -> Result<bool> {
        self.check_same_shape(other)?;
        Ok((0..self.shape.len()).all(|r| self.row_content(r) == other.row_content(r)))
    }

    pub(crate) fn set(&mut self, r: usize, c: usize, v: u32) {
        let i = self.shape.col_offset(c) + r;
        self.cells[i] = v;
    }

    /// Copy with the cells at `(r1, c1)` and `(r2, c2)` exchanged.
    pub fn swapped(&self, (r1, c1): (usize, usize), (r2, c2): (usize, usize)) -> Filling {
        let mut out = self.clone();
        let a = self.get(r1, c1);
        let b = self.get(r2, c2);
        out.set(r1, c1, b);
        out.set(r2, c2, a);
        out
    }

    /// Copy with a different alphabet size.
    pub fn with_alphabet(&self, alphabet: u32) -> Result<Filling> {
        Filling::from_cells(self.shape.clone(), alphabet, self.cells.to_vec())
    }
}

impl PartialOrd for Filling {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by shape, then alphabet, then row word. For fillings of one shape
/// and content this is the row word order.
impl Ord for Filling {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape
            .cmp(&other.shape)
            .then(self.alphabet.cmp(&other.alphabet))
            .then_with(|| self.row_word_cmp_unchecked(other))
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}
