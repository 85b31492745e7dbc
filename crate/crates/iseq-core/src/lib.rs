//! Exact-arithmetic workbench for the algebra of increasing subsequences.
//!
//! Everything here is computed over exact rationals (or polynomial/series
//! rings built on them); there is no floating point anywhere.  The crate is
//! organized around dual-route verification: each family of identities is
//! evaluated once by brute-force enumeration and once through its
//! determinantal / orthogonal-polynomial / symmetric-function form, and the
//! two results are compared coefficient by coefficient.
//!
//! Module map:
//!
//! * [`ring`] — rationals, truncated power series, truncated multivariate
//!   polynomials, Laurent windows, matrices, determinants and pfaffians.
//! * [`combinat`] — permutations, partitions, the symmetry ensembles and
//!   brute-force subsequence counting.
//! * [`symfunc`] — symmetric and super-symmetric functions, restricted Schur
//!   sums, and the identity registry.
//! * [`integrals`] — compact-group integrals as Toeplitz/Hankel determinants,
//!   Bessel series, the distribution generating functions.
//! * [`opuc`] — monic orthogonal polynomials on the unit circle and the
//!   half-line relation ladder.
//! * [`rsk`] — the generalized Knuth correspondence on weighted multisets and
//!   the multiset distribution models.
//! * [`invariants`] — symmetric-group algebra, tensor operators, and
//!   straightening reductions with rank certificates.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod combinat;
pub mod integrals;
pub mod invariants;
pub mod opuc;
pub mod ring;
pub mod rsk;
pub mod symfunc;

pub use ring::rational::Rational;
