//! Chains of row-paired values in two-column cardinal fillings, and the
//! zero tests they give for rearrangement coefficients.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::tableau::{Filling, Partition};

/// One link of a chain: the value, and the value sharing its row in the other column
/// (`None` when the chain runs off the bottom of the shorter column).
pub type ChainLink = (u32, Option<u32>);

/// Chain data for a two-column cardinal filling `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SChainData {
    shape: Partition,
    once: BTreeSet<u32>,
    chains: BTreeMap<u32, Vec<ChainLink>>,
    opposites: BTreeMap<u32, u32>,
    pairs: BTreeSet<(u32, u32)>,
    left: BTreeSet<u32>,
}

impl SChainData {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Values occurring exactly once in `S`.
    pub fn once(&self) -> &BTreeSet<u32> {
        &self.once
    }

    /// The chain started at a once-occurring value.
    pub fn chain(&self, v: u32) -> Option<&[ChainLink]> {
        self.chains.get(&v).map(Vec::as_slice)
    }

    pub fn chains(&self) -> &BTreeMap<u32, Vec<ChainLink>> {
        &self.chains
    }

    /// The opposite of `v`, when it exists.
    pub fn opposite(&self, v: u32) -> Option<u32> {
        self.opposites.get(&v).copied()
    }

    /// Pairs stored as `(first-column value, second-column value)`.
    pub fn pairs(&self) -> &BTreeSet<(u32, u32)> {
        &self.pairs
    }

    /// Once-occurring first-column values without an opposite.
    pub fn left(&self) -> &BTreeSet<u32> {
        &self.left
    }
}

pub fn schain_data(s: &Filling) -> Result<SChainData> {
    if s.shape().num_columns() != 2 {
        return Err(Error::InvalidFilling(format!(
            "chains need a two-column shape, got {}",
            s.shape()
        )));
    }
    if !s.is_cardinal() {
        return Err(Error::NotCardinal);
    }
    let first = s.column(0);
    let second = s.column(1);
    let q = second.len();
    let row_in_first: HashMap<u32, usize> = first.iter().enumerate().map(|(r, &v)| (v, r)).collect();
    let row_in_second: HashMap<u32, usize> =
        second.iter().enumerate().map(|(r, &v)| (v, r)).collect();

    let once: BTreeSet<u32> = first
        .iter()
        .filter(|v| !row_in_second.contains_key(v))
        .chain(second.iter().filter(|v| !row_in_first.contains_key(v)))
        .copied()
        .collect();

    let mut chains = BTreeMap::new();
    let mut opposites = BTreeMap::new();
    let mut pairs = BTreeSet::new();
    let mut left = BTreeSet::new();

    for (b, &start) in second.iter().enumerate() {
        if !once.contains(&start) {
            continue;
        }
        let mut links = vec![(start, Some(first[b]))];
        let mut cur = first[b];
        // every value on the way is duplicated, so it has a row in column two
        while !once.contains(&cur) {
            let l = row_in_second[&cur];
            links.push((second[l], Some(first[l])));
            cur = first[l];
        }
        opposites.insert(start, cur);
        pairs.insert((cur, start));
        chains.insert(start, links);
    }

    for (a, &start) in first.iter().enumerate() {
        if !once.contains(&start) {
            continue;
        }
        let mut links = Vec::new();
        let mut row = a;
        let end = loop {
            if row >= q {
                links.push((first[row], None));
                break None;
            }
            let partner = second[row];
            links.push((first[row], Some(partner)));
            if once.contains(&partner) {
                break Some(partner);
            }
            row = row_in_first[&partner];
        };
        match end {
            Some(op) => {
                opposites.insert(start, op);
            }
            None => {
                left.insert(start);
            }
        }
        chains.insert(start, links);
    }

    Ok(SChainData {
        shape: s.shape().clone(),
        once,
        chains,
        opposites,
        pairs,
        left,
    })
}

/// False when the chain data of `S` forces `R[F,S] = 0`: a pair shares a
/// column of `F`, or a left value sits outside the first column of `F`.
pub fn prune_admissible(f: &Filling, data: &SChainData) -> Result<bool> {
    if f.shape() != data.shape() {
        return Err(Error::ShapeMismatch {
            left: f.shape().parts().to_vec(),
            right: data.shape().parts().to_vec(),
        });
    }
    Ok(admissible(f, data))
}

pub(crate) fn admissible(f: &Filling, data: &SChainData) -> bool {
    let first = f.column(0);
    let second = f.column(1);
    let same_column = |a: u32, b: u32| {
        (first.contains(&a) && first.contains(&b)) || (second.contains(&a) && second.contains(&b))
    };
    if data.pairs.iter().any(|&(a, b)| same_column(a, b)) {
        return false;
    }
    data.left.iter().all(|c| first.contains(c))
}
