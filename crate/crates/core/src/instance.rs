use std::sync::OnceLock;

use crate::enumeration::{enumerate_ssyt, SsytBasis};
use crate::error::Result;
use crate::graph::{build_graph, straighten_paths_with, CoeffGraph, DEFAULT_PATH_CAP};
use crate::rearrangement::{rcoeff_matrix, RearrangementMatrix};
use crate::relations::{RelationOracle, DEFAULT_ORACLE_CAP};
use crate::straightening::{
    build_dbasis, straighten_chain_with, straighten_classical_with, straighten_closed,
    straighten_oracle, DBasis, Method, Straightening, DEFAULT_REWRITE_CAP,
};
use crate::tableau::{Content, Filling, Partition};

/// Caps applied by [`Instance::straighten`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub oracle_dim: usize,
    pub rewrites: usize,
    /// Chains or graph paths enumerated per coefficient.
    pub paths: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            oracle_dim: DEFAULT_ORACLE_CAP,
            rewrites: DEFAULT_REWRITE_CAP,
            paths: DEFAULT_PATH_CAP,
        }
    }
}

/// Everything precomputed for one shape and content: basis, rearrangement
/// matrix, D-basis and coefficient graph. The oracle is built on first use.
#[derive(Debug)]
pub struct Instance {
    pub basis: SsytBasis,
    pub matrix: RearrangementMatrix,
    pub dbasis: DBasis,
    pub graph: CoeffGraph,
    caps: Caps,
    oracle: OnceLock<RelationOracle>,
}

impl Instance {
    pub fn new(shape: &Partition, content: &Content) -> Result<Self> {
        Self::with_caps(shape, content, Caps::default())
    }

    pub fn with_caps(shape: &Partition, content: &Content, caps: Caps) -> Result<Self> {
        let basis = enumerate_ssyt(shape, content)?;
        let matrix = rcoeff_matrix(&basis);
        let dbasis = build_dbasis(&matrix);
        let graph = build_graph(&matrix);
        Ok(Instance {
            basis,
            matrix,
            dbasis,
            graph,
            caps,
            oracle: OnceLock::new(),
        })
    }

    /// Instance for the shape and content of `f`.
    pub fn for_filling(f: &Filling) -> Result<Self> {
        Self::new(f.shape(), &f.content())
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn oracle(&self) -> Result<&RelationOracle> {
        if let Some(o) = self.oracle.get() {
            return Ok(o);
        }
        let built = RelationOracle::with_cap(&self.basis, self.caps.oracle_dim)?;
        Ok(self.oracle.get_or_init(|| built))
    }

    pub fn straighten(&self, f: &Filling, method: Method) -> Result<Straightening> {
        match method {
            Method::Closed => straighten_closed(f, &self.basis, &self.dbasis),
            Method::Classical => {
                Ok(straighten_classical_with(f, &self.basis, self.caps.rewrites)?.0)
            }
            Method::Chain => straighten_chain_with(f, &self.basis, &self.matrix, self.caps.paths),
            Method::Paths => straighten_paths_with(f, &self.basis, &self.graph, self.caps.paths),
            Method::Oracle => straighten_oracle(f, self.oracle()?),
        }
    }
}
