//! Straightening fillings of Young diagrams into semistandard tableaux, with
//! closed-form coefficients from rearrangement counts.

pub mod enumeration;
pub mod error;
pub mod bench;
pub mod graph;
pub mod instance;
pub mod json;
pub mod rearrangement;
pub mod relations;
pub mod straightening;
pub mod tableau;

pub use enumeration::{enumerate_ssyt, kostka, SsytBasis};
pub use error::{Error, Result};
pub use graph::{build_graph, CoeffGraph};
pub use instance::{Caps, Instance};
pub use rearrangement::{rcoeff, rcoeff_matrix, RearrangementMatrix};
pub use straightening::{build_dbasis, straighten_closed, DBasis, Method, Straightening};
pub use tableau::{Content, Filling, Partition};
