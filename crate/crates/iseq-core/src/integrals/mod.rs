//! Compact-group integrals evaluated exactly as Toeplitz and Hankel
//! determinants over series or polynomial rings.
//!
//! Every "integral" here is a coefficient extraction: the Haar expectation
//! of det-class symbols over U(l), O(l), Sp(2l) is a determinant in the
//! Laurent coefficients of the symbol, and those coefficients are exact
//! elements of whatever ring the symbol lives over.  No quadrature, no
//! floats.

pub mod bessel;
pub mod det_formulas;
pub mod diagonal;
pub mod pseries;
pub mod rotation;
pub mod szego;
pub mod weyl;

pub use bessel::bessel_i;
pub use det_formulas::{integral_det, integral_det_two_sided, GroupSpec, Weight};
pub use pseries::{d_series, f_from_series, p_series, DKind};
