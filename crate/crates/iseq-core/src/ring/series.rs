//! Truncated formal power series in one variable `t`.
//!
//! A `Series<R>` is exact modulo `t^{N+1}` where `N` is its order.  Binary
//! operations take the minimum order of the operands; the order is never
//! silently extended.

use super::{rational::Rational, Ring};
use alloc::{vec, vec::Vec};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series<R: Ring> {
    /// Coefficients of t^0 .. t^order.
    coeffs: Vec<R>,
}

/// The usual one-variable series over exact rationals.
pub type TruncatedSeries = Series<Rational>;

impl<R: Ring> Series<R> {
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "series needs order >= 0");
        Series { coeffs }
    }

    /// Zero series of the given order, in the coefficient context of `proto`.
    pub fn zero(order: usize, proto: &R) -> Self {
        Series {
            coeffs: vec![proto.zero_like(); order + 1],
        }
    }

    pub fn constant(order: usize, c: R) -> Self {
        let mut s = Series::zero(order, &c);
        s.coeffs[0] = c;
        s
    }

    /// The variable t, as a series of the given order.
    pub fn var(order: usize, proto: &R) -> Self {
        assert!(order >= 1);
        let mut s = Series::zero(order, proto);
        s.coeffs[1] = proto.one_like();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &R {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: R) {
        self.coeffs[k] = c;
    }

    /// Explicitly reduce to a smaller order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "truncate may only reduce the order");
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn proto(&self) -> &R {
        &self.coeffs[0]
    }

    /// Multiply by t^k (dropping overflow past the order).
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Series::zero(n, self.proto());
        for j in k..=n {
            out.coeffs[j] = self.coeffs[j - k].clone();
        }
        out
    }

    pub fn scale(&self, c: &R) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    /// exp of a series with zero constant term.
    pub fn exp(&self) -> Self {
        assert!(
            self.coeffs[0].is_zero(),
            "series exp requires zero constant term"
        );
        let n = self.order();
        let mut out = Series::zero(n, self.proto());
        out.coeffs[0] = self.proto().one_like();
        // g' = f' g  =>  k g_k = sum_{j=1..k} j f_j g_{k-j}
        for k in 1..=n {
            let mut acc = self.proto().zero_like();
            for j in 1..=k {
                let term = self.coeffs[j].mul(&out.coeffs[k - j]);
                acc.add_assign(&term.mul(&term.from_i64_like(j as i64)));
            }
            out.coeffs[k] = acc.div_i64(k as i64);
        }
        out
    }

    /// Reciprocal of a series whose constant term is invertible.
    pub fn reciprocal(&self) -> Option<Self> {
        let inv0 = self.coeffs[0].try_inverse()?;
        let n = self.order();
        let mut out = Series::zero(n, self.proto());
        out.coeffs[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = self.proto().zero_like();
            for j in 1..=k {
                acc.add_assign(&self.coeffs[j].mul(&out.coeffs[k - j]));
            }
            out.coeffs[k] = acc.neg().mul(&inv0);
        }
        Some(out)
    }

    /// Map coefficients into another ring.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl TruncatedSeries {
    /// exp(c * t^k) to the given order.
    pub fn exp_ct_pow(order: usize, c: Rational, k: usize) -> Self {
        assert!(k >= 1);
        let mut arg = TruncatedSeries::zero(order, &c);
        if k <= order {
            arg.set_coeff(k, c);
        }
        arg.exp()
    }
}

fn min_order_pair<'a, R: Ring>(a: &'a Series<R>, b: &'a Series<R>) -> usize {
    a.order().min(b.order())
}

impl<R: Ring> Ring for Series<R> {
    fn zero_like(&self) -> Self {
        Series::zero(self.order(), self.proto())
    }
    fn one_like(&self) -> Self {
        Series::constant(self.order(), self.proto().one_like())
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Series::constant(self.order(), self.proto().from_i64_like(n))
    }
    fn add(&self, rhs: &Self) -> Self {
        let n = min_order_pair(self, rhs);
        Series {
            coeffs: (0..=n)
                .map(|k| self.coeffs[k].add(&rhs.coeffs[k]))
                .collect(),
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        let n = min_order_pair(self, rhs);
        Series {
            coeffs: (0..=n)
                .map(|k| self.coeffs[k].sub(&rhs.coeffs[k]))
                .collect(),
        }
    }
    fn neg(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let n = min_order_pair(self, rhs);
        let zero = self.proto().zero_like();
        let mut out = vec![zero; n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let prod = self.coeffs[i].mul(&rhs.coeffs[j]);
                out[i + j].add_assign(&prod);
            }
        }
        Series { coeffs: out }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn div_i64(&self, n: i64) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|c| c.div_i64(n)).collect(),
        }
    }
    fn try_inverse(&self) -> Option<Self> {
        self.reciprocal()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::{rat, ratio};

    fn exp_t(order: usize) -> TruncatedSeries {
        TruncatedSeries::exp_ct_pow(order, rat(1), 1)
    }

    #[test]
    fn exp_zero_is_one() {
        let z = TruncatedSeries::zero(6, &rat(0));
        assert_eq!(z.exp(), z.one_like());
    }

    #[test]
    fn exp_of_minus_t_squared() {
        // 1 - t^2 + t^4/2 - t^6/6
        let s = TruncatedSeries::exp_ct_pow(6, rat(-1), 2);
        assert_eq!(s.coeff(0), &rat(1));
        assert_eq!(s.coeff(2), &rat(-1));
        assert_eq!(s.coeff(4), &ratio(1, 2));
        assert_eq!(s.coeff(6), &ratio(-1, 6));
        assert_eq!(s.coeff(3), &rat(0));
    }

    #[test]
    fn group_law() {
        let n = 9;
        let a = exp_t(n);
        let b = TruncatedSeries::exp_ct_pow(n, rat(-1), 1);
        assert_eq!(a.mul(&b), a.one_like());
    }

    #[test]
    fn reciprocal_inverts() {
        let s = exp_t(8);
        let r = s.reciprocal().unwrap();
        assert_eq!(s.mul(&r), s.one_like());
        // zero constant term has no reciprocal
        assert!(TruncatedSeries::var(3, &rat(0)).reciprocal().is_none());
    }

    #[test]
    fn min_order_discipline() {
        let a = exp_t(8);
        let b = exp_t(4);
        assert_eq!(a.mul(&b).order(), 4);
        assert_eq!(a.add(&b).order(), 4);
    }

    #[test]
    fn associativity_spot() {
        let a = exp_t(7);
        let b = TruncatedSeries::exp_ct_pow(7, ratio(1, 2), 2);
        let c = TruncatedSeries::exp_ct_pow(7, rat(-2), 1);
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }
}
