use crate::error::{Error, Result};
use crate::tableau::{Filling, MultiPermutation, Partition};

/// Splits off columns `j` and `j + 1` (zero-based): returns the two-column
/// filling made of them and the filling made of the remaining columns.
pub fn split(f: &Filling, j: usize) -> Result<(Filling, Filling)> {
    let width = f.shape().num_columns();
    if j + 1 >= width {
        return Err(Error::IndexOutOfRange {
            what: "split column",
            index: j,
            range: format!("0..{}", width.saturating_sub(1)),
        });
    }
    let pair = vec![f.column(j).to_vec(), f.column(j + 1).to_vec()];
    let rest: Vec<Vec<u32>> = (0..width)
        .filter(|&c| c != j && c != j + 1)
        .map(|c| f.column(c).to_vec())
        .collect();
    Ok((
        Filling::from_columns(&pair, f.alphabet())?,
        Filling::from_columns(&rest, f.alphabet())?,
    ))
}

/// Every two-column filling `N` whose row content, added to that of
/// `fhat_γ`, gives the row content of `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowCompletions {
    /// Shared sorted row content of the completions.
    pub row_content: Vec<Vec<u32>>,
    pub fillings: Vec<Filling>,
}

impl RowCompletions {
    pub fn is_empty(&self) -> bool {
        self.fillings.is_empty()
    }

    pub fn representative(&self) -> Option<&Filling> {
        self.fillings.first()
    }
}

pub fn row_completions(
    fhat: &Filling,
    s: &Filling,
    gamma: &MultiPermutation,
) -> Result<RowCompletions> {
    let moved = fhat.apply(gamma)?;
    let rows = s.shape().len();
    if fhat.shape().len() > rows {
        return Err(Error::ShapeMismatch {
            left: fhat.shape().parts().to_vec(),
            right: s.shape().parts().to_vec(),
        });
    }
    let widths: Vec<usize> = (0..rows)
        .map(|r| s.shape().row_len(r).checked_sub(fhat.shape().row_len(r)))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::ShapeMismatch {
            left: fhat.shape().parts().to_vec(),
            right: s.shape().parts().to_vec(),
        })?;
    let two_col: Vec<usize> = widths.iter().copied().take_while(|&w| w > 0).collect();
    if two_col.len() != widths.iter().filter(|&&w| w > 0).count()
        || two_col.iter().any(|&w| w > 2)
    {
        return Err(Error::ShapeMismatch {
            left: fhat.shape().parts().to_vec(),
            right: s.shape().parts().to_vec(),
        });
    }
    let shape = Partition::new(two_col.clone())?;

    let mut row_content = Vec::with_capacity(two_col.len());
    for r in 0..two_col.len() {
        let mut need = s.row_content(r);
        let have = if r < moved.shape().len() { moved.row(r) } else { Vec::new() };
        for v in have {
            match need.iter().position(|&x| x == v) {
                Some(i) => {
                    need.remove(i);
                }
                None => {
                    return Ok(RowCompletions {
                        row_content: Vec::new(),
                        fillings: Vec::new(),
                    })
                }
            }
        }
        row_content.push(need);
    }
    for r in two_col.len()..rows {
        let have = if r < moved.shape().len() { moved.row_content(r) } else { Vec::new() };
        if have != s.row_content(r) {
            return Ok(RowCompletions {
                row_content: Vec::new(),
                fillings: Vec::new(),
            });
        }
    }

    // each two-cell row can be placed in either order
    let mut fillings = vec![Vec::<Vec<u32>>::new()];
    for content in &row_content {
        let mut options = vec![content.clone()];
        if content.len() == 2 && content[0] != content[1] {
            options.push(vec![content[1], content[0]]);
        }
        fillings = fillings
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |opt| {
                    let mut rows = prefix.clone();
                    rows.push(opt.clone());
                    rows
                })
            })
            .collect();
    }
    let fillings = fillings
        .into_iter()
        .map(|rows| {
            debug_assert_eq!(rows.iter().map(Vec::len).collect::<Vec<_>>(), shape.parts());
            Filling::from_rows(&rows, s.alphabet())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RowCompletions {
        row_content,
        fillings,
    })
}
