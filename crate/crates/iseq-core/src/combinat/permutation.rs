//! Permutations in one-line notation.
//!
//! Values are stored 0-based internally; the one-line word `pi(1..n)` with
//! values `1..n` is the external form.  The product `a.then(b)` applies `a`
//! first: `(a.then(b))(x) = b(a(x))`.

use alloc::vec::Vec;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (0..n).collect(),
        }
    }

    /// From a 0-based word; checks bijectivity.
    pub fn from_word(word: Vec<usize>) -> Self {
        let n = word.len();
        let mut seen = alloc::vec![false; n];
        for &v in &word {
            assert!(v < n && !seen[v], "not a permutation word");
            seen[v] = true;
        }
        Permutation { word }
    }

    /// From a 1-based one-line word.
    pub fn from_one_line(word: &[usize]) -> Self {
        Permutation::from_word(word.iter().map(|&v| v - 1).collect())
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.word.iter().map(|&v| v + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.word[x]
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn inverse(&self) -> Self {
        let mut w = alloc::vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            w[v] = i;
        }
        Permutation { word: w }
    }

    /// Apply self first, then other.
    pub fn then(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len());
        Permutation {
            word: self.word.iter().map(|&v| other.word[v]).collect(),
        }
    }

    /// The reversal x -> n+1-x.
    pub fn iota(n: usize) -> Self {
        Permutation {
            word: (0..n).rev().collect(),
        }
    }

    pub fn is_involution(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| self.word[v] == i)
    }

    pub fn fixed_points(&self) -> usize {
        self.word.iter().enumerate().filter(|(i, &v)| *i == v).count()
    }

    /// Number of inversions of the one-line word.
    pub fn inversions(&self) -> usize {
        let mut c = 0;
        for i in 0..self.word.len() {
            for j in (i + 1)..self.word.len() {
                if self.word[i] > self.word[j] {
                    c += 1;
                }
            }
        }
        c
    }

    pub fn sign(&self) -> i64 {
        if self.inversions() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All permutations of S_n in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        if n <= 1 {
            return alloc::vec![Permutation::identity(n)];
        }
        let mut out = Vec::new();
        let mut word: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation { word: word.clone() });
            // next lexicographic permutation
            let mut i = n - 1;
            while i > 0 && word[i - 1] >= word[i] {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            let mut j = n - 1;
            while word[j] <= word[i - 1] {
                j -= 1;
            }
            word.swap(i - 1, j);
            word[i..].reverse();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_invert() {
        let a = Permutation::from_one_line(&[2, 3, 1]);
        let b = Permutation::from_one_line(&[1, 3, 2]);
        // (a.then(b))(1) = b(a(1)) = b(2) = 3
        assert_eq!(a.then(&b).one_line(), alloc::vec![3, 2, 1]);
        assert_eq!(a.then(&a.inverse()), Permutation::identity(3));
        assert_eq!(a.inversions(), 2);
        assert_eq!(a.sign(), 1);
    }

    #[test]
    fn enumeration_is_lex_and_complete() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert!(Permutation::iota(4).is_involution());
    }
}
