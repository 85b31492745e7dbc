//! The generalized Knuth correspondence on weighted multisets, its
//! invariants (content, transpose, fixed points, Greene profiles), and the
//! five random-multiset distribution models it explains.

pub mod bitableau;
pub mod checks;
pub mod knuth;
pub mod models;
pub mod multiset;

pub use bitableau::Bitableau;
pub use knuth::{knuth_correspondence, knuth_inverse};
pub use multiset::WeightedMultiset;
