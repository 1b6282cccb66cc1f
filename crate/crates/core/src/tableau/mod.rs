//! Shapes, fillings, the row word order and the column group action.

mod filling;
mod partition;
mod perm;
pub mod text;

pub use filling::{Content, Filling};
pub use partition::{partitions_of, Partition};
pub use perm::{next_permutation, MultiPermutation, Permutation, Sign};
