//! Monic orthogonal polynomials on the unit circle for symbolic weights,
//! their half-line companions, and the product/ratio ladders connecting both
//! to the group-integral determinants.
//!
//! The inner product is the bilinear coefficient pairing
//! (z^a, z^b) = c_{b-a} with c_j the two-sided Laurent coefficients of the
//! weight; all weights used here are symmetric (c_{-j} = c_j).

pub mod alpha;
pub mod build;
pub mod halfline;
pub mod products;

pub use build::{opuc_build, DegeneracyError, OpucData};

use alloc::string::String;

/// One named exact check; the building block of the suite reports.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Check {
            name: name.into(),
            pass,
        }
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}
