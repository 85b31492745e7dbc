//! Exact coefficient rings and linear algebra over them.
//!
//! The [`Ring`] trait is deliberately value-oriented: an element knows how to
//! produce the zero and one of its own ring, so contexts (series order,
//! variable sets, degree caps) travel with the values.  All rings here are
//! commutative Q-algebras.

pub mod laurent;
pub mod matrix;
pub mod multipoly;
pub mod pfaffian;
pub mod rational;
pub mod series;

use alloc::vec::Vec;

/// A commutative ring with exact arithmetic.
///
/// `zero_like`/`one_like`/`from_i64_like` construct constants in the same
/// context (order, variable set, caps) as `self`; binary operations panic if
/// the operands' contexts are incompatible, except where a documented
/// truncation rule applies (series take the minimum order).
pub trait Ring: Clone + PartialEq + core::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, n: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn is_zero(&self) -> bool;

    /// Division by a nonzero integer; total on Q-algebras.
    fn div_i64(&self, n: i64) -> Self;

    /// Multiplicative inverse, where one exists.
    fn try_inverse(&self) -> Option<Self>;

    fn mul_assign(&mut self, rhs: &Self) {
        *self = self.mul(rhs);
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self = self.add(rhs);
    }
    fn sub_assign(&mut self, rhs: &Self) {
        *self = self.sub(rhs);
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Sum of a nonempty-context iterator, with an explicit zero for the empty case.
pub fn ring_sum<R: Ring, I: IntoIterator<Item = R>>(zero: R, it: I) -> R {
    let mut acc = zero;
    for x in it {
        acc.add_assign(&x);
    }
    acc
}

/// Product over a slice, given a one-element of the right context.
pub fn ring_product<R: Ring>(one: R, xs: &[R]) -> R {
    let mut acc = one;
    for x in xs {
        acc.mul_assign(x);
    }
    acc
}

/// Evaluate a polynomial given by coefficients `c[0..]` at `x` (Horner).
pub fn horner<R: Ring>(coeffs: &[R], x: &R) -> R {
    let mut acc = match coeffs.last() {
        Some(c) => c.clone(),
        None => return x.zero_like(),
    };
    for c in coeffs.iter().rev().skip(1) {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// Coefficients of the reversed polynomial `z^n p(1/z)` for `p` of degree `n`.
pub fn reverse_poly<R: Ring>(coeffs: &[R]) -> Vec<R> {
    let mut v: Vec<R> = coeffs.to_vec();
    v.reverse();
    v
}
