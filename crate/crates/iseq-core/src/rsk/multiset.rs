//! Weighted multisets of integer pairs and their (W1,W2)-monotone
//! subsequence statistics.
//!
//! A (W1,W2)-increasing sequence weakly increases in both coordinates, with
//! equality in a coordinate permitted only at letters of the corresponding
//! weak set.  A multiset is (W1,W2)-compatible when every pair whose letters
//! fall in opposite sectors occurs at most once.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

pub type Letters = BTreeSet<i64>;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WeightedMultiset {
    entries: BTreeMap<(i64, i64), usize>,
}

impl WeightedMultiset {
    pub fn new() -> Self {
        WeightedMultiset {
            entries: BTreeMap::new(),
        }
    }

    pub fn from_pairs(pairs: &[(i64, i64, usize)]) -> Self {
        let mut m = Self::new();
        for &(i, j, k) in pairs {
            m.add(i, j, k);
        }
        m
    }

    pub fn add(&mut self, i: i64, j: i64, mult: usize) {
        if mult == 0 {
            return;
        }
        *self.entries.entry((i, j)).or_insert(0) += mult;
    }

    pub fn mult(&self, i: i64, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(i64, i64), &usize)> {
        self.entries.iter()
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::new();
        for (&(i, j), &k) in &self.entries {
            m.add(j, i, k);
        }
        m
    }

    pub fn is_symmetric(&self) -> bool {
        self == &self.transpose()
    }

    /// Compatibility: mixed-sector pairs occur at most once.
    pub fn is_compatible(&self, w1: &Letters, w2: &Letters) -> bool {
        self.entries.iter().all(|(&(i, j), &k)| {
            if w1.contains(&i) != w2.contains(&j) {
                k <= 1
            } else {
                true
            }
        })
    }

    /// Expand into the two-line insertion order: entries sorted by first
    /// coordinate; among equal firsts, seconds ascend for weak letters and
    /// descend for strict ones.
    pub fn two_line(&self, w1: &Letters) -> Vec<(i64, i64)> {
        let mut by_first: BTreeMap<i64, Vec<(i64, usize)>> = BTreeMap::new();
        for (&(i, j), &k) in &self.entries {
            by_first.entry(i).or_default().push((j, k));
        }
        let mut out = Vec::with_capacity(self.total());
        for (i, mut js) in by_first {
            js.sort_unstable();
            if !w1.contains(&i) {
                js.reverse();
            }
            for (j, k) in js {
                for _ in 0..k {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// All submultisets (multiplicities bounded by the originals).
    pub fn submultisets(&self) -> Vec<WeightedMultiset> {
        let cells: Vec<((i64, i64), usize)> = self.entries.iter().map(|(&c, &k)| (c, k)).collect();
        let mut out = Vec::new();
        let mut choice = alloc::vec![0usize; cells.len()];
        loop {
            let mut m = WeightedMultiset::new();
            for (idx, &(cell, _)) in cells.iter().enumerate() {
                m.add(cell.0, cell.1, choice[idx]);
            }
            out.push(m);
            let mut pos = 0;
            while pos < cells.len() {
                if choice[pos] < cells[pos].1 {
                    choice[pos] += 1;
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
            if pos == cells.len() {
                break;
            }
        }
        out
    }
}

/// Longest (W1,W2)-increasing subsequence, by longest path in the cell
/// order: a cell contributes its full multiplicity when both letters are
/// weak, otherwise one.
pub fn lis_general(m: &WeightedMultiset, w1: &Letters, w2: &Letters) -> usize {
    longest_monotone(m, w1, w2, false)
}

/// Longest (W1,W2)-decreasing subsequence (second coordinate reversed).
pub fn lds_general(m: &WeightedMultiset, w1: &Letters, w2: &Letters) -> usize {
    longest_monotone(m, w1, w2, true)
}

fn longest_monotone(
    m: &WeightedMultiset,
    w1: &Letters,
    w2: &Letters,
    reverse_second: bool,
) -> usize {
    let cells: Vec<(i64, i64, usize)> = m
        .entries()
        .map(|(&(i, j), &k)| (i, j, k))
        .collect();
    let n = cells.len();
    let weight = |idx: usize| -> usize {
        let (i, j, k) = cells[idx];
        if w1.contains(&i) && w2.contains(&j) {
            k
        } else {
            1
        }
    };
    let step_ok = |a: usize, b: usize| -> bool {
        let (x, y, _) = cells[a];
        let (xp, yp, _) = cells[b];
        let first_ok = x < xp || (x == xp && w1.contains(&x));
        let second_ok = if reverse_second {
            y > yp || (y == yp && w2.contains(&y))
        } else {
            y < yp || (y == yp && w2.contains(&y))
        };
        (x, y) != (xp, yp) && first_ok && second_ok
    };
    let mut best = alloc::vec![0usize; n];
    let mut order: Vec<usize> = (0..n).collect();
    // longest path in the acyclic step relation
    order.sort_by_key(|&i| (cells[i].0, if reverse_second { -cells[i].1 } else { cells[i].1 }));
    let mut ans = 0;
    for (pos, &i) in order.iter().enumerate() {
        let mut b = weight(i);
        for &j in &order[..pos] {
            if step_ok(j, i) && best[j] + weight(i) > b {
                b = best[j] + weight(i);
            }
        }
        best[i] = b;
        ans = ans.max(b);
    }
    ans
}

/// Greene row statistic: the largest size of a submultiset whose longest
/// (complement,complement)-decreasing subsequence is at most k.
pub fn greene_rows(m: &WeightedMultiset, w1: &Letters, w2: &Letters, k: usize, all1: &Letters, all2: &Letters) -> usize {
    let c1: Letters = all1.difference(w1).copied().collect();
    let c2: Letters = all2.difference(w2).copied().collect();
    m.submultisets()
        .into_iter()
        .filter(|s| lds_general(s, &c1, &c2) <= k)
        .map(|s| s.total())
        .max()
        .unwrap_or(0)
}

/// Greene column statistic: the largest size of a submultiset whose longest
/// (W1,W2)-increasing subsequence is at most k.
pub fn greene_cols(m: &WeightedMultiset, w1: &Letters, w2: &Letters, k: usize) -> usize {
    m.submultisets()
        .into_iter()
        .filter(|s| lis_general(s, w1, w2) <= k)
        .map(|s| s.total())
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(xs: &[i64]) -> Letters {
        xs.iter().copied().collect()
    }

    #[test]
    fn compatibility() {
        let empty = WeightedMultiset::new();
        assert!(empty.is_compatible(&letters(&[]), &letters(&[])));
        let full = letters(&[1, 2]);
        let m = WeightedMultiset::from_pairs(&[(1, 1, 3)]);
        assert!(m.is_compatible(&full, &full));
        assert!(!m.is_compatible(&letters(&[]), &letters(&[1])));
        assert!(m.is_compatible(&letters(&[]), &letters(&[])));
    }

    #[test]
    fn lis_examples() {
        let any = letters(&[1, 2, 3]);
        let none = letters(&[]);
        let m = WeightedMultiset::from_pairs(&[(1, 1, 1), (2, 2, 1)]);
        assert_eq!(lis_general(&m, &any, &any), 2);
        assert_eq!(lis_general(&m, &none, &none), 2);
        let m = WeightedMultiset::from_pairs(&[(1, 2, 1), (2, 1, 1)]);
        assert_eq!(lis_general(&m, &any, &any), 1);
        assert_eq!(lds_general(&m, &none, &none), 2);
        // repeats only in the doubly-weak sector
        let m = WeightedMultiset::from_pairs(&[(1, 1, 3)]);
        assert_eq!(lis_general(&m, &letters(&[1]), &letters(&[1])), 3);
        assert_eq!(lis_general(&m, &none, &letters(&[1])), 1);
    }

    #[test]
    fn greene_trivial() {
        let any = letters(&[1, 2, 3]);
        let m = WeightedMultiset::from_pairs(&[(1, 1, 1)]);
        assert_eq!(greene_rows(&m, &any, &any, 1, &any, &any), 1);
        assert_eq!(greene_cols(&m, &any, &any, 1), 1);
        let empty = WeightedMultiset::new();
        assert_eq!(greene_rows(&empty, &any, &any, 2, &any, &any), 0);
    }
}
