//! The relation space: Grassmann and Plücker generators, and an exact
//! elimination oracle used as ground truth for straightening.

mod generators;
mod oracle;

pub use generators::{
    grassmann_generator, grassmann_generators, grassmann_generators_of, pluecker_expand,
    pluecker_generators_of, simple_pluecker, simple_pluecker_generators, GeneratorKind,
    RelationGenerator,
};
pub use oracle::{FillingSpace, FillingSpaceVector, RelationOracle, DEFAULT_ORACLE_CAP};
