//! The Toeplitz/Hankel determinant forms of the compact-group expectations.
//!
//! For a symbol g on the circle with two-sided coefficients
//! iota_j = [z^j] g(z)g(1/z) (symmetric in j), the expectations of det(g(U))
//! over the orthogonal and symplectic groups are the displayed +- Hankel
//! determinants with prefactors g(1), g(-1); for U(l) with a pair f, g the
//! expectation of det(f(U))det(g(U+)) is the Toeplitz determinant in the
//! coefficients of f(z)g(1/z).

use crate::ring::laurent::Laurent;
use crate::ring::matrix::RingMatrix;
use crate::ring::Ring;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroupSpec {
    /// U(l), Toeplitz in the two-sided symbol.
    U(usize),
    /// O^+(m).
    OPlus(usize),
    /// O^-(m); m >= 1.
    OMinus(usize),
    /// O(m): average of the two components (just O^+(0) when m = 0).
    OFull(usize),
    /// O(m) weighted by det(U): half the difference of the components.
    ODet(usize),
    /// Sp(2l); the parameter is 2l and must be even.
    Sp(usize),
}

/// A circle symbol prepared for the determinant formulas: the two-sided
/// coefficient window of g(z)g(1/z) plus the evaluations g(+-1).
#[derive(Clone, Debug)]
pub struct Weight<R: Ring> {
    pub phi: Laurent<R>,
    pub at_one: R,
    pub at_minus_one: R,
}

impl<R: Ring> Weight<R> {
    pub fn new(phi: Laurent<R>, at_one: R, at_minus_one: R) -> Self {
        Weight {
            phi,
            at_one,
            at_minus_one,
        }
    }
}

fn iota<R: Ring>(phi: &Laurent<R>, j: i64) -> R {
    phi.get(j).clone()
}

fn hankel_det<R: Ring>(phi: &Laurent<R>, l: usize, shift: i64, sign: i64, proto: &R) -> R {
    // det(iota_{j-k} + sign * iota_{j+k+shift})_{0<=j,k<l}
    let m = RingMatrix::from_fn(l, l, proto, |j, k| {
        let a = iota(phi, j as i64 - k as i64);
        let b = iota(phi, j as i64 + k as i64 + shift);
        if sign >= 0 {
            a.add(&b)
        } else {
            a.sub(&b)
        }
    });
    m.det_with_proto(proto)
}

/// Expectation of det(g(U)) over the given group, by the determinant
/// formulas.  Panics if the symbol's window cannot supply a needed
/// coefficient.
pub fn integral_det<R: Ring>(group: GroupSpec, w: &Weight<R>) -> R {
    let proto = w.at_one.zero_like();
    match group {
        GroupSpec::U(l) => integral_det_two_sided(l, &w.phi),
        GroupSpec::OPlus(m) => {
            if m == 0 {
                return w.at_one.one_like();
            }
            if m % 2 == 0 {
                let l = m / 2;
                hankel_det(&w.phi, l, 0, 1, &proto).div_i64(2)
            } else {
                let l = m / 2;
                w.at_one.mul(&hankel_det(&w.phi, l, 1, -1, &proto))
            }
        }
        GroupSpec::OMinus(m) => {
            assert!(m >= 1, "O^-(0) is empty");
            if m % 2 == 0 {
                let l = m / 2;
                let d = hankel_det(&w.phi, l - 1, 2, -1, &proto);
                w.at_one.mul(&w.at_minus_one).mul(&d)
            } else {
                let l = m / 2;
                w.at_minus_one.mul(&hankel_det(&w.phi, l, 1, 1, &proto))
            }
        }
        GroupSpec::OFull(m) => {
            if m == 0 {
                return w.at_one.one_like();
            }
            let p = integral_det(GroupSpec::OPlus(m), w);
            let n = integral_det(GroupSpec::OMinus(m), w);
            p.add(&n).div_i64(2)
        }
        GroupSpec::ODet(m) => {
            assert!(m >= 1);
            let p = integral_det(GroupSpec::OPlus(m), w);
            let n = integral_det(GroupSpec::OMinus(m), w);
            p.sub(&n).div_i64(2)
        }
        GroupSpec::Sp(m) => {
            assert!(m % 2 == 0, "Sp takes an even parameter");
            hankel_det(&w.phi, m / 2, 2, -1, &proto)
        }
    }
}

/// E det(f(U)) det(g(U+)) over U(l): the l x l Toeplitz determinant with
/// entry (j,k) the coefficient of z^{k-j} in f(z) g(1/z).
pub fn integral_det_two_sided<R: Ring>(l: usize, phi_fg: &Laurent<R>) -> R {
    let proto = phi_fg.get(0).zero_like();
    let m = RingMatrix::from_fn(l, l, &proto, |j, k| iota(phi_fg, k as i64 - j as i64));
    m.det_with_proto(&proto)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::{rat, Rational};

    fn const_weight() -> Weight<Rational> {
        // g = 1: iota_j = delta_{j0}, g(1) = g(-1) = 1
        let mut phi = Laurent::zero(8, &rat(0));
        phi.set(0, rat(1));
        Weight::new(phi, rat(1), rat(1))
    }

    #[test]
    fn haar_normalization() {
        let w = const_weight();
        for g in [
            GroupSpec::U(3),
            GroupSpec::OPlus(0),
            GroupSpec::OPlus(4),
            GroupSpec::OPlus(5),
            GroupSpec::OMinus(2),
            GroupSpec::OMinus(3),
            GroupSpec::OMinus(6),
            GroupSpec::OFull(0),
            GroupSpec::OFull(5),
            GroupSpec::Sp(4),
        ] {
            assert_eq!(integral_det(g, &w), rat(1), "group {:?}", g);
        }
        // det-weighted O integral of 1 vanishes (components cancel)
        assert_eq!(integral_det(GroupSpec::ODet(3), &w), rat(0));
    }
}
