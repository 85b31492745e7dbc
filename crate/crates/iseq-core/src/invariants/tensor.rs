//! Word-permutation operators: the image of the group algebra on the n-fold
//! tensor power of an l-dimensional space, represented sparsely on basis
//! words.

use super::group_algebra::GroupAlgebraElement;
use crate::combinat::Permutation;
use crate::ring::rational::{rat, Rational};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_traits::Zero;

/// Sparse operator: (input word, output word) -> coefficient.
#[derive(Clone, PartialEq, Debug)]
pub struct TensorOperator {
    pub l: usize,
    pub n: usize,
    entries: BTreeMap<(Vec<u8>, Vec<u8>), Rational>,
}

pub fn all_words(l: usize, n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(l.pow(n as u32));
    let mut w = alloc::vec![0u8; n];
    loop {
        out.push(w.clone());
        let mut pos = 0;
        while pos < n {
            w[pos] += 1;
            if (w[pos] as usize) < l {
                break;
            }
            w[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
    }
    out
}

/// w compose pi: output word o with o[i] = w[pi(i)].
pub fn word_after(w: &[u8], p: &Permutation) -> Vec<u8> {
    (0..w.len()).map(|i| w[p.apply(i)]).collect()
}

impl TensorOperator {
    pub fn zero(l: usize, n: usize) -> Self {
        TensorOperator {
            l,
            n,
            entries: BTreeMap::new(),
        }
    }

    fn add_entry(&mut self, key: (Vec<u8>, Vec<u8>), c: Rational) {
        if Zero::is_zero(&c) {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.entries.entry(key) {
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

    /// T_l of a group algebra element.
    pub fn of_element(elem: &GroupAlgebraElement, l: usize) -> Self {
        let n = elem.n;
        let mut op = TensorOperator::zero(l, n);
        for w in all_words(l, n) {
            for (p, c) in elem.terms() {
                op.add_entry((w.clone(), word_after(&w, p)), c.clone());
            }
        }
        op
    }

    pub fn of_permutation(p: &Permutation, l: usize) -> Self {
        Self::of_element(&GroupAlgebraElement::of(p.clone()), l)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, input: &[u8], output: &[u8]) -> Rational {
        self.entries
            .get(&(input.to_vec(), output.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Operator composition: (self after other)(w) = self(other(w)).
    pub fn compose_after(&self, other: &TensorOperator) -> TensorOperator {
        assert_eq!((self.l, self.n), (other.l, other.n));
        let mut out = TensorOperator::zero(self.l, self.n);
        // index other's entries by output word
        let mut by_out: BTreeMap<&Vec<u8>, Vec<(&Vec<u8>, &Rational)>> = BTreeMap::new();
        for ((i, o), c) in &other.entries {
            by_out.entry(o).or_default().push((i, c));
        }
        for ((mid, out_w), c2) in &self.entries {
            if let Some(sources) = by_out.get(mid) {
                for (in_w, c1) in sources {
                    out.add_entry(((*in_w).clone(), out_w.clone()), *c1 * c2);
                }
            }
        }
        out
    }

    /// Flatten to a vector over the (input, output) word-pair basis.
    pub fn to_vector(&self, words: &[Vec<u8>]) -> Vec<Rational> {
        let index: BTreeMap<&Vec<u8>, usize> =
            words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let m = words.len();
        let mut v = alloc::vec![rat(0); m * m];
        for ((i, o), c) in &self.entries {
            v[index[i] * m + index[o]] = c.clone();
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_swap() {
        let id = TensorOperator::of_permutation(&Permutation::identity(2), 2);
        for w in all_words(2, 2) {
            assert_eq!(id.entry(&w, &w), rat(1));
        }
        let swap = TensorOperator::of_permutation(&Permutation::from_one_line(&[2, 1]), 2);
        assert_eq!(swap.entry(&[0, 1], &[1, 0]), rat(1));
        assert_eq!(swap.entry(&[0, 0], &[0, 0]), rat(1));
        assert_eq!(swap.entry(&[0, 1], &[0, 1]), rat(0));
    }

    #[test]
    fn homomorphism_on_random_pairs() {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let perms = Permutation::all(4);
        for _ in 0..10 {
            let a = perms.choose(&mut rng).unwrap();
            let b = perms.choose(&mut rng).unwrap();
            let ta = TensorOperator::of_permutation(a, 2);
            let tb = TensorOperator::of_permutation(b, 2);
            // T(a.then(b)) = T(a) compose T(b): the contravariant word
            // action makes T a homomorphism for the left-to-right product
            let tab = TensorOperator::of_permutation(&a.then(b), 2);
            assert_eq!(tab, ta.compose_after(&tb));
        }
    }

    #[test]
    fn kernel_elements_die() {
        // T_l(E_S) = 0 for |S| > l, exhaustively at small sizes
        for n in 2..=4usize {
            for l in 1..=3usize {
                let positions: Vec<usize> = (0..n).collect();
                for mask in 1u32..(1 << n) {
                    let s: Vec<usize> = positions
                        .iter()
                        .copied()
                        .filter(|&i| mask & (1 << i) != 0)
                        .collect();
                    if s.len() <= l {
                        continue;
                    }
                    let e = GroupAlgebraElement::antisymmetrizer(n, &s);
                    assert!(TensorOperator::of_element(&e, l).is_zero());
                }
            }
        }
    }
}
