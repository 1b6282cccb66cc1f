//! Exact membership in the relation space and reduction to the SSYT basis.
//!
//! Fillings related by a column transposition differ only by a sign modulo
//! the Grassmann relations, so the elimination runs in the quotient by
//! those: a filling is sent to `sign · (columns sorted)` when cardinal and to
//! zero otherwise. What remains are the simple Plücker relations, written over
//! column-strict tableaux and reduced with exact rationals.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::enumeration::{count_fillings, fillings, SsytBasis};
use crate::error::{Error, Result};
use crate::tableau::{Content, Filling, Partition};

use super::generators::simple_pluecker;

/// Default cap on `|F(λ,z)|`.
pub const DEFAULT_ORACLE_CAP: usize = 200_000;

/// All of `F(λ,z)`, ranked in row word order.
#[derive(Clone, Debug)]
pub struct FillingSpace {
    shape: Partition,
    content: Content,
    fillings: Vec<Filling>,
    rank: HashMap<Filling, usize>,
}

impl FillingSpace {
    pub fn new(shape: &Partition, content: &Content, cap: usize) -> Result<Self> {
        let count = count_fillings(shape, content)?;
        if count > cap as u128 {
            return Err(Error::CapExceeded {
                what: "filling space dimension",
                limit: cap,
            });
        }
        let all: Vec<Filling> = fillings(shape, content)?.collect();
        let rank = all.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
        Ok(FillingSpace {
            shape: shape.clone(),
            content: content.clone(),
            fillings: all,
            rank,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn content(&self) -> &Content {
        &self.content
    }

    pub fn dim(&self) -> usize {
        self.fillings.len()
    }

    pub fn filling(&self, rank: usize) -> &Filling {
        &self.fillings[rank]
    }

    pub fn fillings(&self) -> &[Filling] {
        &self.fillings
    }

    pub fn rank_of(&self, f: &Filling) -> Option<usize> {
        self.rank.get(f).copied()
    }

    fn rank_checked(&self, f: &Filling) -> Result<usize> {
        self.rank_of(f).ok_or_else(|| {
            Error::InvalidFilling(format!(
                "{f:?} is not in the space of shape {} and content {}",
                self.shape, self.content
            ))
        })
    }

    pub fn unit(&self, f: &Filling) -> Result<FillingSpaceVector> {
        self.combination(&[(f.clone(), 1)])
    }

    pub fn combination(&self, terms: &[(Filling, i64)]) -> Result<FillingSpaceVector> {
        let mut v = FillingSpaceVector::zero(self.dim());
        for (f, c) in terms {
            v.add(self.rank_checked(f)?, &BigRational::from_integer(BigInt::from(*c)));
        }
        Ok(v)
    }
}

/// A vector of `ℚ^{F(λ,z)}`, stored sparsely by filling rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FillingSpaceVector {
    dim: usize,
    entries: BTreeMap<usize, BigRational>,
}

impl FillingSpaceVector {
    pub fn zero(dim: usize) -> Self {
        FillingSpaceVector {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, rank: usize) -> BigRational {
        self.entries.get(&rank).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &BigRational)> + '_ {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    /// Adds `c` at `rank`. Panics if `rank ≥ dim`.
    pub fn add(&mut self, rank: usize, c: &BigRational) {
        assert!(rank < self.dim, "rank {rank} outside dimension {}", self.dim);
        add_entry(&mut self.entries, rank, c);
    }

    /// `self + c · other`.
    pub fn add_scaled(&mut self, other: &FillingSpaceVector, c: &BigRational) {
        assert_eq!(self.dim, other.dim);
        for (&k, v) in &other.entries {
            add_entry(&mut self.entries, k, &(v * c));
        }
    }
}

fn add_entry(map: &mut BTreeMap<usize, BigRational>, k: usize, c: &BigRational) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(k).or_insert_with(BigRational::zero);
    *slot += c;
    if slot.is_zero() {
        map.remove(&k);
    }
}

type Row = Vec<(usize, BigRational)>;

/// Membership and SSYT reduction for one `(λ, z)`.
#[derive(Clone, Debug)]
pub struct RelationOracle {
    basis: SsytBasis,
    space: FillingSpace,
    /// Column-strict tableaux: non-semistandard ones first, then `S_K, …, S_1`.
    tableaux: Vec<Filling>,
    column_of: HashMap<Filling, usize>,
    first_ssyt: usize,
    pivots: HashMap<usize, Row>,
    generators_used: usize,
}

impl RelationOracle {
    pub fn new(basis: &SsytBasis) -> Result<Self> {
        Self::with_cap(basis, DEFAULT_ORACLE_CAP)
    }

    pub fn with_cap(basis: &SsytBasis, cap: usize) -> Result<Self> {
        let space = FillingSpace::new(basis.shape(), basis.content(), cap)?;
        let mut tableaux: Vec<Filling> = space
            .fillings()
            .iter()
            .filter(|f| f.is_tableau() && !f.is_semistandard())
            .cloned()
            .collect();
        let first_ssyt = tableaux.len();
        tableaux.extend(basis.tableaux().iter().rev().cloned());
        let column_of = tableaux
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        let mut oracle = RelationOracle {
            basis: basis.clone(),
            space,
            tableaux,
            column_of,
            first_ssyt,
            pivots: HashMap::new(),
            generators_used: 0,
        };
        oracle.eliminate();
        oracle.check_consistency()?;
        Ok(oracle)
    }

    pub fn space(&self) -> &FillingSpace {
        &self.space
    }

    pub fn basis(&self) -> &SsytBasis {
        &self.basis
    }

    /// Rank of the relation space inside the Grassmann quotient.
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Number of generator images fed to the elimination.
    pub fn generators_used(&self) -> usize {
        self.generators_used
    }

    fn quotient_image(&self, f: &Filling, c: &BigRational, out: &mut BTreeMap<usize, BigRational>) {
        if !f.is_cardinal() {
            return;
        }
        let (t, sign) = f.sort_columns_cardinal();
        let col = self.column_of[&t];
        let signed = if sign.to_i64() < 0 { -c.clone() } else { c.clone() };
        add_entry(out, col, &signed);
    }

    fn eliminate(&mut self) {
        let one = BigRational::one();
        let minus_one = -BigRational::one();
        let pairs = self.space.shape().num_columns().saturating_sub(1);
        for j in 0..pairs {
            // one representative per orbit under column permutations that
            // preserve the relation up to sign
            let reps: Vec<Filling> = self
                .space
                .fillings()
                .iter()
                .filter(|f| is_representative(f, j))
                .cloned()
                .collect();
            for e in reps {
                let g = simple_pluecker(&e, j).expect("column pair in range");
                let mut v = BTreeMap::new();
                for (f, c) in &g.terms {
                    self.quotient_image(f, if *c > 0 { &one } else { &minus_one }, &mut v);
                }
                if v.is_empty() {
                    continue;
                }
                self.generators_used += 1;
                self.reduce(&mut v);
                if let Some((&p, lead)) = v.iter().next() {
                    let inv = lead.recip();
                    let row: Row = v.iter().map(|(&k, x)| (k, x * &inv)).collect();
                    self.pivots.insert(p, row);
                }
            }
        }
    }

    /// Subtracts pivot rows in increasing pivot order; a pivot row only
    /// touches columns from its pivot onwards.
    fn reduce(&self, v: &mut BTreeMap<usize, BigRational>) {
        let mut cursor = 0;
        loop {
            let next = v
                .range(cursor..)
                .find(|(k, _)| self.pivots.contains_key(k))
                .map(|(&k, c)| (k, c.clone()));
            let Some((p, c)) = next else { break };
            for (k, x) in &self.pivots[&p] {
                add_entry(v, *k, &(-(x * &c)));
            }
            cursor = p + 1;
        }
    }

    fn check_consistency(&self) -> Result<()> {
        let expected = self.first_ssyt;
        if self.pivots.len() != expected || self.pivots.keys().any(|&p| p >= expected) {
            return Err(Error::OracleInconsistent(format!(
                "relation rank {} over {} column-strict tableaux, expected {} non-semistandard pivots",
                self.pivots.len(),
                self.tableaux.len(),
                expected
            )));
        }
        Ok(())
    }

    fn check_vector(&self, v: &FillingSpaceVector) -> Result<()> {
        if v.dim() != self.space.dim() {
            return Err(Error::IndexOutOfRange {
                what: "vector dimension",
                index: v.dim(),
                range: format!("exactly {}", self.space.dim()),
            });
        }
        Ok(())
    }

    fn reduced(&self, v: &FillingSpaceVector) -> Result<BTreeMap<usize, BigRational>> {
        self.check_vector(v)?;
        let mut q = BTreeMap::new();
        for (rank, c) in v.entries() {
            self.quotient_image(self.space.filling(rank), c, &mut q);
        }
        self.reduce(&mut q);
        Ok(q)
    }

    /// Whether `v` lies in the span of the Grassmann and simple Plücker relations.
    pub fn membership_verify(&self, v: &FillingSpaceVector) -> Result<bool> {
        Ok(self.reduced(v)?.is_empty())
    }

    /// The SSYT combination `w` with `v − w` in the relation space, as
    /// coefficients of `S_1, …, S_K`.
    pub fn reduce_to_ssyt(&self, v: &FillingSpaceVector) -> Result<Vec<BigRational>> {
        let q = self.reduced(v)?;
        let k = self.basis.len();
        let mut out = vec![BigRational::zero(); k];
        for (col, c) in q {
            if col < self.first_ssyt {
                return Err(Error::OracleInconsistent(format!(
                    "unreduced non-semistandard tableau {:?}",
                    self.tableaux[col]
                )));
            }
            let label = self.tableaux.len() - col;
            out[label - 1] = c;
        }
        Ok(out)
    }

    /// [`Self::reduce_to_ssyt`] of a single filling, required to be integral.
    pub fn straighten(&self, f: &Filling) -> Result<Vec<BigInt>> {
        let coeffs = self.reduce_to_ssyt(&self.space.unit(f)?)?;
        coeffs
            .into_iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::OracleInconsistent(format!(
                        "non-integral coefficient {c} for {f:?}"
                    )))
                }
            })
            .collect()
    }
}

/// Columns other than `j + 1` weakly increasing; column `j + 1` has an
/// arbitrary top entry above a weakly increasing remainder.
fn is_representative(f: &Filling, j: usize) -> bool {
    f.columns().enumerate().all(|(c, col)| {
        let tail = if c == j + 1 && !col.is_empty() { &col[1..] } else { col };
        tail.windows(2).all(|w| w[0] <= w[1])
    })
}
