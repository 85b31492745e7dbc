//! Symmetric and super-symmetric functions in finitely many variables, the
//! restricted Schur sums, and the identity registry that checks every sum
//! against its determinant or pfaffian route.
//!
//! Identities are verified in the quotient ring of polynomials of total
//! main degree <= D (and bounded weight degree in the formal parameters);
//! agreement there proves the identity for all coefficients inside the cap.

pub mod basis;
pub mod identities;
pub mod perp;
pub mod pfaffian_route;
pub mod sums;
pub mod symbol;

pub use basis::HBasis;
pub use identities::{verify_identity, IdentityReport, IdentityTag, ALL_TAGS};
pub use sums::{schur_sum, SumInputs, SumVariant};
