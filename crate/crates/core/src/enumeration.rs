//! Semistandard tableaux of a fixed shape and content, the ordered basis
//! `S_1 ≻ S_2 ≻ … ≻ S_K`, and enumeration of all fillings of a shape and content.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::tableau::{next_permutation, Content, Filling, Partition};

fn check_sizes(shape: &Partition, content: &Content) -> Result<()> {
    if shape.size() != content.size() {
        return Err(Error::SizeMismatch {
            shape: shape.size(),
            content: content.size(),
        });
    }
    Ok(())
}

/// The semistandard tableaux of shape `λ` and content `z`, sorted so that
/// `S_1` has the largest row word. Labels are one-based.
#[derive(Clone, Debug)]
pub struct SsytBasis {
    shape: Partition,
    content: Content,
    tableaux: Vec<Filling>,
    index: HashMap<Filling, usize>,
}

impl SsytBasis {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn content(&self) -> &Content {
        &self.content
    }

    /// The Kostka number `K_{λ,z}`.
    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    /// `S_i` for one-based `i`.
    pub fn get(&self, i: usize) -> Option<&Filling> {
        i.checked_sub(1).and_then(|k| self.tableaux.get(k))
    }

    /// `S_i`, panicking on a bad label.
    pub fn tableau(&self, i: usize) -> &Filling {
        &self.tableaux[i - 1]
    }

    /// One-based label of `t`, if it is a member.
    pub fn index_of(&self, t: &Filling) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn tableaux(&self) -> &[Filling] {
        &self.tableaux
    }

    /// `(label, tableau)` pairs in label order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Filling)> + '_ {
        self.tableaux.iter().enumerate().map(|(k, t)| (k + 1, t))
    }

    /// Checks that `f` has this basis' shape and content.
    pub fn check_filling(&self, f: &Filling) -> Result<()> {
        if f.shape() != &self.shape {
            return Err(Error::ShapeMismatch {
                left: f.shape().parts().to_vec(),
                right: self.shape.parts().to_vec(),
            });
        }
        let z = f.content();
        if z != self.content {
            return Err(Error::ContentMismatch {
                left: z.counts().to_vec(),
                right: self.content.counts().to_vec(),
            });
        }
        Ok(())
    }

    /// Label of `std(F)` for a cardinal `F` of this shape and content.
    pub fn standardization_index(&self, f: &Filling) -> Result<usize> {
        self.check_filling(f)?;
        if !f.is_cardinal() {
            return Err(Error::NotCardinal);
        }
        let s = f.standardize();
        self.index_of(&s).ok_or_else(|| {
            Error::InvalidFilling(format!("standardization {s:?} is not in the basis"))
        })
    }
}

/// Enumerates `SSYT(λ, z)` by row-major backtracking and sorts descending by row word.
pub fn enumerate_ssyt(shape: &Partition, content: &Content) -> Result<SsytBasis> {
    check_sizes(shape, content)?;
    let n = content.alphabet();
    let mut remaining = content.counts().to_vec();
    let cells: Vec<(usize, usize)> = shape.cells_row_major().collect();
    let mut values = vec![0u32; shape.size()];
    let mut found = Vec::new();

    fn rec(
        k: usize,
        shape: &Partition,
        cells: &[(usize, usize)],
        n: u32,
        remaining: &mut [usize],
        values: &mut [u32],
        found: &mut Vec<Filling>,
    ) {
        if k == cells.len() {
            found.push(Filling::from_cells_unchecked(
                shape.clone(),
                n,
                values.to_vec(),
            ));
            return;
        }
        let (r, c) = cells[k];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(values[shape.col_offset(c - 1) + r]);
        }
        if r > 0 {
            lo = lo.max(values[shape.col_offset(c) + r - 1] + 1);
        }
        // the entries below (r, c) in its column need distinct larger values
        let below = (shape.col_len(c) - r - 1) as u32;
        if lo + below > n {
            return;
        }
        for v in lo..=n - below {
            if remaining[v as usize - 1] == 0 {
                continue;
            }
            remaining[v as usize - 1] -= 1;
            values[shape.col_offset(c) + r] = v;
            rec(k + 1, shape, cells, n, remaining, values, found);
            remaining[v as usize - 1] += 1;
        }
    }

    rec(0, shape, &cells, n, &mut remaining, &mut values, &mut found);
    found.sort_by(|a, b| b.row_word_cmp_unchecked(a));
    let index = found
        .iter()
        .enumerate()
        .map(|(k, t)| (t.clone(), k + 1))
        .collect();
    Ok(SsytBasis {
        shape: shape.clone(),
        content: content.clone(),
        tableaux: found,
        index,
    })
}

/// The Kostka number `K_{λ,z}`.
pub fn kostka(shape: &Partition, content: &Content) -> Result<usize> {
    Ok(enumerate_ssyt(shape, content)?.len())
}

/// `|F(λ,z)|`, the multinomial `|λ|! / Π z_i!`, saturating at `u128::MAX`.
pub fn count_fillings(shape: &Partition, content: &Content) -> Result<u128> {
    check_sizes(shape, content)?;
    let mut acc: u128 = 1;
    let mut placed: u128 = 0;
    for &z in content.counts() {
        for i in 1..=z as u128 {
            placed += 1;
            // acc * placed / i stays integral: running binomial products
            acc = match acc.checked_mul(placed) {
                Some(x) => x / i,
                None => return Ok(u128::MAX),
            };
        }
    }
    Ok(acc)
}

/// Every filling of `F(λ,z)` in increasing row word order, produced lazily.
pub fn fillings(shape: &Partition, content: &Content) -> Result<impl Iterator<Item = Filling>> {
    check_sizes(shape, content)?;
    let shape = shape.clone();
    let n = content.alphabet();
    let cells: Vec<(usize, usize)> = shape.cells_row_major().collect();
    let mut word = Some(content.sorted_word());
    Ok(std::iter::from_fn(move || {
        let cur = word.take()?;
        let mut column_major = vec![0u32; cur.len()];
        for (&(r, c), &v) in cells.iter().zip(&cur) {
            column_major[shape.col_offset(c) + r] = v;
        }
        let mut succ = cur;
        if next_permutation(&mut succ) {
            word = Some(succ);
        }
        Some(Filling::from_cells_unchecked(
            shape.clone(),
            n,
            column_major,
        ))
    }))
}

/// All compositions of `total` into positive parts, i.e. every content with
/// no unused letters.
pub fn compositions(total: usize) -> Vec<Content> {
    fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Content>) {
        if rest == 0 {
            out.push(Content::new(cur.clone()).expect("non-empty"));
            return;
        }
        for p in 1..=rest {
            cur.push(p);
            rec(rest - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if total > 0 {
        rec(total, &mut Vec::new(), &mut out);
    }
    out
}
