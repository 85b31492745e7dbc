//! Permutations, partitions, the symmetry ensembles, and brute-force
//! increasing-subsequence counting.

pub mod ensembles;
pub mod partition;
pub mod permutation;
pub mod subseq;

pub use ensembles::{ensemble, f_count, ftilde_count, ftilde_u_count, Symmetry};
pub use partition::Partition;
pub use permutation::Permutation;
pub use subseq::{greene_union_size, lds, lis};
