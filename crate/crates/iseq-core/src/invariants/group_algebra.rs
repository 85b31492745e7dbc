//! The rational group algebra of S_n.  Products use the left-to-right
//! convention (a * b means apply a, then b), matching the word action of the
//! tensor operators.

use crate::combinat::Permutation;
use crate::ring::rational::{rat, Rational};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_traits::Zero;

#[derive(Clone, PartialEq, Debug)]
pub struct GroupAlgebraElement {
    pub n: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn of(p: Permutation) -> Self {
        let n = p.len();
        let mut e = Self::zero(n);
        e.add_term(p, rat(1));
        e
    }

    pub fn add_term(&mut self, p: Permutation, c: Rational) {
        assert_eq!(p.len(), self.n);
        if Zero::is_zero(&c) {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(p) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Permutation) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if Zero::is_zero(c) {
            return Self::zero(self.n);
        }
        GroupAlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(p, a)| (p.clone(), a * c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&rat(-1)))
    }

    /// Product with the apply-left-then-right convention.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let mut out = Self::zero(self.n);
        for (p, a) in &self.terms {
            for (q, b) in &rhs.terms {
                out.add_term(p.then(q), a * b);
            }
        }
        out
    }

    /// Signed sum over permutations of the position set S (antisymmetrizer).
    pub fn antisymmetrizer(n: usize, s: &[usize]) -> Self {
        Self::projector(n, s, true)
    }

    /// Plain sum over permutations of the position set S (symmetrizer).
    pub fn symmetrizer(n: usize, s: &[usize]) -> Self {
        Self::projector(n, s, false)
    }

    fn projector(n: usize, s: &[usize], signed: bool) -> Self {
        let k = s.len();
        let mut out = Self::zero(n);
        for tau in Permutation::all(k) {
            let mut word: Vec<usize> = (0..n).collect();
            for (a, &pos) in s.iter().enumerate() {
                word[pos] = s[tau.apply(a)];
            }
            let sign = if signed { tau.sign() } else { 1 };
            out.add_term(Permutation::from_word(word), rat(sign));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_product_convention() {
        let a = GroupAlgebraElement::of(Permutation::from_one_line(&[2, 1, 3]));
        let b = GroupAlgebraElement::of(Permutation::from_one_line(&[1, 3, 2]));
        let ab = a.mul(&b);
        // apply (21) then (23): 1 -> 2 -> 3
        assert_eq!(
            ab.terms().next().unwrap().0,
            &Permutation::from_one_line(&[3, 1, 2])
        );
    }

    #[test]
    fn antisymmetrizer_squares() {
        // E_S * E_S = |S|! E_S
        let e = GroupAlgebraElement::antisymmetrizer(4, &[0, 2, 3]);
        assert_eq!(e.support_size(), 6);
        let sq = e.mul(&e);
        assert_eq!(sq, e.scale(&rat(6)));
    }
}
