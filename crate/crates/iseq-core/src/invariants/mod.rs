//! Tensor invariants of the classical groups and the straightening
//! reductions that produce explicit bases indexed by permutations,
//! multisets, and involutions without long monotone subsequences.

pub mod group_algebra;
pub mod involutions;
pub mod multiset_straighten;
pub mod straighten;
pub mod tensor;

pub use group_algebra::GroupAlgebraElement;
pub use straighten::{basis_u, centralizer_dim_check, straighten_u};
pub use tensor::TensorOperator;
