//! Laurent windows: coefficients of z^{-w} .. z^{w} over an arbitrary ring.
//!
//! Multiplication is exact for every index that stays representable given the
//! true supports of the factors; constructors are expected to build values
//! whose support fits the window, and window sizing is the caller's contract
//! (the integral machinery sizes windows as l + N + 2 for an l x l form).

use super::Ring;
use alloc::{vec, vec::Vec};

#[derive(Clone, PartialEq, Debug)]
pub struct Laurent<R: Ring> {
    window: i64,
    /// coeffs[k] is the coefficient of z^{k - window}
    coeffs: Vec<R>,
}

impl<R: Ring> Laurent<R> {
    pub fn zero(window: i64, proto: &R) -> Self {
        assert!(window >= 0);
        Laurent {
            window,
            coeffs: vec![proto.zero_like(); (2 * window + 1) as usize],
        }
    }

    pub fn constant(window: i64, c: R) -> Self {
        let mut l = Laurent::zero(window, &c);
        l.set(0, c);
        l
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn get(&self, j: i64) -> &R {
        assert!(
            j.abs() <= self.window,
            "Laurent window exceeded: |{}| > {}",
            j,
            self.window
        );
        &self.coeffs[(j + self.window) as usize]
    }

    pub fn set(&mut self, j: i64, c: R) {
        assert!(j.abs() <= self.window, "Laurent window exceeded");
        self.coeffs[(j + self.window) as usize] = c;
    }

    pub fn scale(&self, c: &R) -> Self {
        Laurent {
            window: self.window,
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    /// Substitute z -> s for a unit scalar s in {1, -1}: sum c_j s^j.
    pub fn eval_sign(&self, s: i64) -> R {
        assert!(s == 1 || s == -1);
        let mut acc = self.coeffs[0].zero_like();
        for j in -self.window..=self.window {
            let c = self.get(j);
            if c.is_zero() {
                continue;
            }
            if s == 1 || j.rem_euclid(2) == 0 {
                acc.add_assign(c);
            } else {
                acc.sub_assign(c);
            }
        }
        acc
    }

    /// Reflect z -> 1/z.
    pub fn reflect(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Laurent {
            window: self.window,
            coeffs,
        }
    }

    /// Build from a list of (exponent, coefficient) pairs.
    pub fn from_terms(window: i64, proto: &R, terms: &[(i64, R)]) -> Self {
        let mut l = Laurent::zero(window, proto);
        for (j, c) in terms {
            let mut cur = l.get(*j).clone();
            cur.add_assign(c);
            l.set(*j, cur);
        }
        l
    }

    fn proto(&self) -> &R {
        &self.coeffs[0]
    }
}

impl<R: Ring> Ring for Laurent<R> {
    fn zero_like(&self) -> Self {
        Laurent::zero(self.window, self.proto())
    }
    fn one_like(&self) -> Self {
        Laurent::constant(self.window, self.proto().one_like())
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Laurent::constant(self.window, self.proto().from_i64_like(n))
    }
    fn add(&self, rhs: &Self) -> Self {
        let w = self.window.min(rhs.window);
        let proto = self.proto();
        let mut out = Laurent::zero(w, proto);
        for j in -w..=w {
            out.set(j, self.get(j).add(rhs.get(j)));
        }
        out
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn neg(&self) -> Self {
        Laurent {
            window: self.window,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }
    /// Product, clipped to the smaller window.  Coefficients within the
    /// result window are exact provided each factor's full support lies
    /// inside its own window.
    fn mul(&self, rhs: &Self) -> Self {
        let w = self.window.min(rhs.window);
        let proto = self.proto();
        let mut out = Laurent::zero(w, proto);
        for i in -self.window..=self.window {
            let a = self.get(i);
            if a.is_zero() {
                continue;
            }
            for j in -rhs.window..=rhs.window {
                let k = i + j;
                if k.abs() > w {
                    continue;
                }
                let b = rhs.get(j);
                if b.is_zero() {
                    continue;
                }
                let mut cur = out.get(k).clone();
                cur.add_assign(&a.mul(b));
                out.set(k, cur);
            }
        }
        out
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn div_i64(&self, n: i64) -> Self {
        Laurent {
            window: self.window,
            coeffs: self.coeffs.iter().map(|c| c.div_i64(n)).collect(),
        }
    }
    fn try_inverse(&self) -> Option<Self> {
        // only constants in z are inverted; that is all the callers need
        let c0 = self.get(0);
        if (-self.window..=self.window).any(|j| j != 0 && !self.get(j).is_zero()) {
            return None;
        }
        Some(Laurent::constant(self.window, c0.try_inverse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::rat;

    #[test]
    fn convolution_and_reflect() {
        // (z + 2)(1/z + 3) = 1 + 3z + 2/z + 6
        let a = Laurent::from_terms(4, &rat(0), &[(1, rat(1)), (0, rat(2))]);
        let b = Laurent::from_terms(4, &rat(0), &[(-1, rat(1)), (0, rat(3))]);
        let p = a.mul(&b);
        assert_eq!(p.get(0), &rat(7));
        assert_eq!(p.get(1), &rat(3));
        assert_eq!(p.get(-1), &rat(2));
        assert_eq!(a.reflect().get(-1), &rat(1));
        assert_eq!(p.eval_sign(-1), rat(7 - 3 - 2));
    }
}
