//! Total-degree-truncated multivariate polynomials over exact rationals.
//!
//! Variables come in two classes: `Main` (the x/y/q alphabets) and `Param`
//! (formal weights such as alpha and beta).  A monomial is kept iff its main
//! degree is at most `main_cap` and its param degree at most `param_cap`;
//! monomials beyond either cap generate a monomial ideal, so the truncation
//! is a ring quotient and identities verified here are identities of the
//! quotient ring.

use super::{rational::Rational, Ring};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{collections::BTreeMap, vec};
use num_traits::{One, Zero};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarClass {
    Main,
    Param,
}

#[derive(PartialEq, Eq, Debug)]
pub struct VarSet {
    names: Vec<String>,
    classes: Vec<VarClass>,
    main_cap: usize,
    param_cap: usize,
}

impl VarSet {
    pub fn new(vars: &[(&str, VarClass)], main_cap: usize, param_cap: usize) -> Arc<VarSet> {
        Arc::new(VarSet {
            names: vars.iter().map(|(n, _)| String::from(*n)).collect(),
            classes: vars.iter().map(|(_, c)| *c).collect(),
            main_cap,
            param_cap,
        })
    }

    /// All variables in class `Main`, cap `d`; no params.
    pub fn main_only(names: &[&str], d: usize) -> Arc<VarSet> {
        let vars: Vec<(&str, VarClass)> = names.iter().map(|n| (*n, VarClass::Main)).collect();
        VarSet::new(&vars, d, 0)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn class(&self, i: usize) -> VarClass {
        self.classes[i]
    }

    pub fn main_cap(&self) -> usize {
        self.main_cap
    }

    pub fn param_cap(&self) -> usize {
        self.param_cap
    }

    fn degrees(&self, mono: &[u16]) -> (usize, usize) {
        let mut main = 0usize;
        let mut param = 0usize;
        for (e, c) in mono.iter().zip(&self.classes) {
            match c {
                VarClass::Main => main += *e as usize,
                VarClass::Param => param += *e as usize,
            }
        }
        (main, param)
    }

    fn admits(&self, mono: &[u16]) -> bool {
        let (m, p) = self.degrees(mono);
        m <= self.main_cap && p <= self.param_cap
    }
}

#[derive(Clone, Debug)]
pub struct MultiPoly {
    ctx: Arc<VarSet>,
    terms: BTreeMap<Vec<u16>, Rational>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        *self.ctx == *other.ctx && self.terms == other.terms
    }
}

impl MultiPoly {
    pub fn zero(ctx: &Arc<VarSet>) -> Self {
        MultiPoly {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &Arc<VarSet>, c: Rational) -> Self {
        let mut p = MultiPoly::zero(ctx);
        if !Zero::is_zero(&c) {
            p.terms.insert(vec![0; ctx.len()], c);
        }
        p
    }

    pub fn one(ctx: &Arc<VarSet>) -> Self {
        MultiPoly::constant(ctx, Rational::one())
    }

    pub fn var(ctx: &Arc<VarSet>, i: usize) -> Self {
        let mut mono = vec![0u16; ctx.len()];
        mono[i] = 1;
        let mut p = MultiPoly::zero(ctx);
        if ctx.admits(&mono) {
            p.terms.insert(mono, Rational::one());
        }
        p
    }

    pub fn var_named(ctx: &Arc<VarSet>, name: &str) -> Self {
        let i = ctx.index_of(name).expect("unknown variable");
        MultiPoly::var(ctx, i)
    }

    pub fn ctx(&self) -> &Arc<VarSet> {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &[u16]) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.ctx.len()])
    }

    fn insert_term(&mut self, mono: Vec<u16>, c: Rational) {
        if Zero::is_zero(&c) || !self.ctx.admits(&mono) {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if Zero::is_zero(&v) {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_term(&mut self, mono: &[u16], c: Rational) {
        self.insert_term(mono.to_vec(), c);
    }

    /// Multiply by a single monomial with coefficient.
    pub fn mul_term(&self, mono: &[u16], c: &Rational) -> Self {
        let mut out = MultiPoly::zero(&self.ctx);
        if Zero::is_zero(c) {
            return out;
        }
        for (m, a) in &self.terms {
            let mut nm = m.clone();
            for (x, y) in nm.iter_mut().zip(mono) {
                *x += *y;
            }
            out.insert_term(nm, a * c);
        }
        out
    }

    fn assert_same_ctx(&self, rhs: &Self) {
        assert!(
            Arc::ptr_eq(&self.ctx, &rhs.ctx) || *self.ctx == *rhs.ctx,
            "mixed variable contexts"
        );
    }

    /// Total main-class degree of the highest term, or None for zero.
    pub fn main_degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|m| self.ctx.degrees(m).0)
            .max()
    }

    /// Extract the coefficient of `param^k` as a polynomial in the remaining
    /// variables (the param variable's exponent is zeroed in the result).
    pub fn coeff_of_var_power(&self, var: usize, k: u16) -> Self {
        let mut out = MultiPoly::zero(&self.ctx);
        for (m, c) in &self.terms {
            if m[var] == k {
                let mut nm = m.clone();
                nm[var] = 0;
                out.insert_term(nm, c.clone());
            }
        }
        out
    }

    /// Substitute 0 for the given variable.
    pub fn set_var_zero(&self, var: usize) -> Self {
        self.coeff_of_var_power(var, 0)
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(&self.ctx)
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(&self.ctx)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        MultiPoly::constant(&self.ctx, super::rational::rat(n))
    }
    fn add(&self, rhs: &Self) -> Self {
        self.assert_same_ctx(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.assert_same_ctx(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        out
    }
    fn neg(&self) -> Self {
        MultiPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_ctx(rhs);
        let a: Vec<(&Vec<u16>, (usize, usize), &Rational)> = self
            .terms
            .iter()
            .map(|(m, c)| (m, self.ctx.degrees(m), c))
            .collect();
        let b: Vec<(&Vec<u16>, (usize, usize), &Rational)> = rhs
            .terms
            .iter()
            .map(|(m, c)| (m, self.ctx.degrees(m), c))
            .collect();
        let mut out = MultiPoly::zero(&self.ctx);
        for (ma, (dma, dpa), ca) in &a {
            for (mb, (dmb, dpb), cb) in &b {
                if dma + dmb > self.ctx.main_cap || dpa + dpb > self.ctx.param_cap {
                    continue;
                }
                let mut nm = (*ma).clone();
                for (x, y) in nm.iter_mut().zip(mb.iter()) {
                    *x += *y;
                }
                out.insert_term(nm, *ca * *cb);
            }
        }
        out
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn div_i64(&self, n: i64) -> Self {
        assert!(n != 0);
        let d = super::rational::rat(n);
        MultiPoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c / &d))
                .collect(),
        }
    }
    fn try_inverse(&self) -> Option<Self> {
        // f = c (1 + g) with g nilpotent in the quotient ring.
        let c = self.constant_term();
        if Zero::is_zero(&c) {
            return None;
        }
        let cinv = MultiPoly::constant(&self.ctx, c.recip());
        let g = self.mul(&cinv).sub(&self.one_like()).neg(); // g = 1 - f/c, so 1/(1-g) = sum g^k
        let mut acc = self.one_like();
        let mut p = g.clone();
        while !p.is_zero() {
            acc.add_assign(&p);
            p = p.mul(&g);
        }
        Some(acc.mul(&cinv))
    }
}

impl core::fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            for (i, e) in m.iter().enumerate() {
                if *e > 0 {
                    write!(f, "*{}^{}", self.ctx.name(i), e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::rat;

    fn xy(cap: usize) -> Arc<VarSet> {
        VarSet::new(&[("x", VarClass::Main), ("y", VarClass::Main)], cap, 0)
    }

    #[test]
    fn mul_truncates_as_quotient() {
        let ctx = xy(3);
        let x = MultiPoly::var_named(&ctx, "x");
        let y = MultiPoly::var_named(&ctx, "y");
        let p = x.add(&y).pow(4);
        // every degree-4 monomial dies
        assert!(p.is_zero());
        let q = x.add(&y).pow(3);
        assert_eq!(q.coeff(&[2, 1]), rat(3));
    }

    #[test]
    fn inverse_of_one_minus_x() {
        let ctx = xy(5);
        let x = MultiPoly::var_named(&ctx, "x");
        let one = MultiPoly::one(&ctx);
        let f = one.sub(&x);
        let inv = f.try_inverse().unwrap();
        assert_eq!(f.mul(&inv), one);
        assert_eq!(inv.coeff(&[5, 0]), rat(1));
        assert!(MultiPoly::zero(&ctx).try_inverse().is_none());
    }

    #[test]
    fn param_cap_is_independent() {
        let ctx = VarSet::new(
            &[("x", VarClass::Main), ("a", VarClass::Param)],
            2,
            1,
        );
        let x = MultiPoly::var_named(&ctx, "x");
        let a = MultiPoly::var_named(&ctx, "a");
        let p = x.add(&a).pow(3);
        // x^3 dies (main cap 2), a^2 terms die (param cap 1); x^2 a survives
        assert_eq!(p.coeff(&[2, 1]), rat(3));
        assert!(num_traits::Zero::is_zero(&p.coeff(&[3, 0])));
        assert!(num_traits::Zero::is_zero(&p.coeff(&[1, 2])));
    }

    #[test]
    fn naive_convolution_oracle() {
        // multiplication agrees with naive monomial convolution + filter
        let ctx = xy(4);
        let x = MultiPoly::var_named(&ctx, "x");
        let y = MultiPoly::var_named(&ctx, "y");
        let one = MultiPoly::one(&ctx);
        let a = one.add(&x).add(&y.mul(&y)).add(&x.mul(&y));
        let b = one.sub(&y).add(&x.mul(&x)).sub(&x.mul(&y));
        let prod = a.mul(&b);
        let mut naive = MultiPoly::zero(&ctx);
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let mono: Vec<u16> = ma.iter().zip(mb).map(|(p, q)| p + q).collect();
                naive.add_term(&mono, ca * cb);
            }
        }
        assert_eq!(prod, naive);
    }
}
