use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};
use crate::tableau::Partition;

/// A sign `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A permutation of `{0, …, n-1}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a permutation of 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses one-line notation over `{1, …, n}`, e.g. `[3, 1, 2]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(format!(
                "{images:?} contains 0 in one-based notation"
            )));
        }
        Permutation::new(images.iter().map(|&x| x - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Sign via cycle decomposition: a cycle of length `l` contributes `l - 1` transpositions.
    pub fn sign(&self) -> Sign {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0usize;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            transpositions += len - 1;
        }
        Sign::from_parity(transpositions % 2 == 1)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::InvalidPermutation(format!(
                "cannot compose permutations of lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some((0..n).collect::<Vec<usize>>());
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut succ = cur.clone();
            if next_permutation(&mut succ) {
                next = Some(succ);
            }
            Some(Permutation { images: cur })
        })
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for x in &self.images {
            write!(f, "{}", x + 1)?;
        }
        write!(f, ")")
    }
}

/// Advances `v` to the next lexicographic permutation of its multiset.
/// Returns false (leaving `v` sorted ascending) when `v` was the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// An element of the column group: one permutation per column of a shape.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPermutation {
    columns: Vec<Permutation>,
}

impl MultiPermutation {
    pub fn new(columns: Vec<Permutation>) -> Self {
        MultiPermutation { columns }
    }

    pub fn identity(shape: &Partition) -> Self {
        MultiPermutation {
            columns: shape
                .column_lengths()
                .iter()
                .map(|&len| Permutation::identity(len))
                .collect(),
        }
    }

    pub fn columns(&self) -> &[Permutation] {
        &self.columns
    }

    pub fn column(&self, c: usize) -> &Permutation {
        &self.columns[c]
    }

    /// Whether each component acts on the matching column of `shape`.
    pub fn fits(&self, shape: &Partition) -> bool {
        self.columns.len() == shape.num_columns()
            && self
                .columns
                .iter()
                .zip(shape.column_lengths())
                .all(|(p, &len)| p.len() == len)
    }

    pub fn sign(&self) -> Sign {
        self.columns
            .iter()
            .fold(Sign::Plus, |acc, p| acc * p.sign())
    }

    /// Componentwise `self ∘ other`.
    pub fn compose(&self, other: &MultiPermutation) -> Result<MultiPermutation> {
        if self.columns.len() != other.columns.len() {
            return Err(Error::InvalidPermutation(
                "multipermutations have different column counts".into(),
            ));
        }
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| a.compose(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(MultiPermutation { columns })
    }

    pub fn inverse(&self) -> MultiPermutation {
        MultiPermutation {
            columns: self.columns.iter().map(Permutation::inverse).collect(),
        }
    }

    /// Every element of the column group of `shape`, in lexicographic order
    /// with the last column varying fastest.
    pub fn all(shape: &Partition) -> impl Iterator<Item = MultiPermutation> {
        let lens: Vec<usize> = shape.column_lengths().to_vec();
        let mut state: Option<Vec<Vec<usize>>> =
            Some(lens.iter().map(|&l| (0..l).collect()).collect());
        std::iter::from_fn(move || {
            let cur = state.take()?;
            let mut succ = cur.clone();
            let mut advanced = false;
            for c in (0..succ.len()).rev() {
                if next_permutation(&mut succ[c]) {
                    advanced = true;
                    break;
                }
            }
            if advanced {
                state = Some(succ);
            }
            Some(MultiPermutation {
                columns: cur
                    .into_iter()
                    .map(|images| Permutation { images })
                    .collect(),
            })
        })
    }
}

impl fmt::Debug for MultiPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.columns.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p:?}")?;
        }
        write!(f, ")")
    }
}
