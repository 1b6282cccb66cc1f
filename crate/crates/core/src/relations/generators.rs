use itertools::Itertools;

use crate::enumeration::fillings;
use crate::error::{Error, Result};
use crate::tableau::{Content, Filling, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// `E + F` where `F` is `E` with rows `rows.0 < rows.1` of `column` exchanged.
    Grassmann { column: usize, rows: (usize, usize) },
    /// Exchange of the top `m` entries of column `column + 1` with `m` entries of `column`.
    Pluecker { column: usize, m: usize },
}

impl GeneratorKind {
    pub fn is_simple_pluecker(&self) -> bool {
        matches!(self, GeneratorKind::Pluecker { m: 1, .. })
    }
}

/// A relation as an integer combination of fillings of one shape and content.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationGenerator {
    pub kind: GeneratorKind,
    pub terms: Vec<(Filling, i64)>,
}

/// `E + F` for the transposition of rows `a` and `b` in column `column` (all zero-based).
pub fn grassmann_generator(f: &Filling, column: usize, a: usize, b: usize) -> Result<RelationGenerator> {
    let width = f.shape().num_columns();
    if column >= width {
        return Err(Error::IndexOutOfRange {
            what: "column",
            index: column,
            range: format!("0..{width}"),
        });
    }
    let len = f.shape().col_len(column);
    let (a, b) = (a.min(b), a.max(b));
    if a == b || b >= len {
        return Err(Error::IndexOutOfRange {
            what: "row",
            index: b,
            range: format!("0..{len} with distinct rows"),
        });
    }
    Ok(RelationGenerator {
        kind: GeneratorKind::Grassmann { column, rows: (a, b) },
        terms: vec![(f.clone(), 1), (f.swapped((a, column), (b, column)), 1)],
    })
}

/// Grassmann generators of one filling: adjacent transpositions only, or every transposition.
pub fn grassmann_generators_of(f: &Filling, adjacent_only: bool) -> Vec<RelationGenerator> {
    let mut out = Vec::new();
    for c in 0..f.shape().num_columns() {
        let len = f.shape().col_len(c);
        for a in 0..len {
            let hi = if adjacent_only { (a + 2).min(len) } else { len };
            for b in a + 1..hi {
                out.push(grassmann_generator(f, c, a, b).expect("rows in range"));
            }
        }
    }
    out
}

/// Every adjacent-transposition Grassmann generator over `F(λ,z)`.
pub fn grassmann_generators(
    shape: &Partition,
    content: &Content,
) -> Result<impl Iterator<Item = RelationGenerator>> {
    Ok(fillings(shape, content)?.flat_map(|f| grassmann_generators_of(&f, true)))
}

/// `E − Σ F` over the `C(ζ_j, m)` exchanges of the top `m` entries of column
/// `j + 1` into `m` positions of column `j`; `j` is zero-based and both
/// columns keep the vertical order of the moved entries.
pub fn pluecker_expand(f: &Filling, j: usize, m: usize) -> Result<RelationGenerator> {
    let width = f.shape().num_columns();
    if j + 1 >= width {
        return Err(Error::IndexOutOfRange {
            what: "column pair",
            index: j,
            range: format!("0..{}", width.saturating_sub(1)),
        });
    }
    let left = f.column(j).to_vec();
    let right = f.column(j + 1).to_vec();
    if m == 0 || m > right.len() {
        return Err(Error::IndexOutOfRange {
            what: "exchange size m",
            index: m,
            range: format!("1..={}", right.len()),
        });
    }
    let mut terms = vec![(f.clone(), 1)];
    for positions in (0..left.len()).combinations(m) {
        let mut g = f.clone();
        for (t, &p) in positions.iter().enumerate() {
            g.set(p, j, right[t]);
            g.set(t, j + 1, left[p]);
        }
        terms.push((g, -1));
    }
    Ok(RelationGenerator {
        kind: GeneratorKind::Pluecker { column: j, m },
        terms,
    })
}

/// The `m = 1` case: one term per entry of column `j`.
pub fn simple_pluecker(f: &Filling, j: usize) -> Result<RelationGenerator> {
    pluecker_expand(f, j, 1)
}

/// Every Plücker generator of one filling, over all column pairs and all admissible `m`.
pub fn pluecker_generators_of(f: &Filling) -> Vec<RelationGenerator> {
    let cols = f.shape().column_lengths();
    (0..cols.len().saturating_sub(1))
        .flat_map(|j| (1..=cols[j + 1]).map(move |m| (j, m)))
        .map(|(j, m)| pluecker_expand(f, j, m).expect("admissible exchange"))
        .collect()
}

/// Every simple Plücker generator over `F(λ,z)`.
pub fn simple_pluecker_generators(
    shape: &Partition,
    content: &Content,
) -> Result<impl Iterator<Item = RelationGenerator>> {
    let pairs = shape.num_columns().saturating_sub(1);
    Ok(fillings(shape, content)?
        .flat_map(move |f| (0..pairs).map(move |j| simple_pluecker(&f, j).expect("column pair"))))
}
