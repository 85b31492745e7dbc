//! Insertion and reverse insertion for the generalized correspondence.
//!
//! Entries are processed in two-line order (firsts ascending; seconds
//! ascending under a weak first letter, descending under a strict one).
//! Inserting b into a row displaces the leftmost entry strictly greater
//! than b when b is weak, and the leftmost entry >= b when b is strict.
//! The conventions reduce to the row-insertion, dual, and column-strict
//! correspondences at the extreme sector choices; the exhaustive
//! bijectivity, content, Greene, and transpose suites certify them.

use super::bitableau::Bitableau;
use super::multiset::{Letters, WeightedMultiset};
use alloc::vec::Vec;

fn bump_position(row: &[i64], b: i64, weak: bool) -> Option<usize> {
    row.iter()
        .position(|&y| if weak { y > b } else { y >= b })
}

/// Insert the pair stream of a compatible multiset; returns (P, Q) with P
/// carrying first coordinates (recording) and Q second coordinates
/// (insertion).
pub fn knuth_correspondence(
    m: &WeightedMultiset,
    w1: &Letters,
    w2: &Letters,
) -> (Bitableau, Bitableau) {
    assert!(m.is_compatible(w1, w2), "incompatible multiset");
    let mut p = Bitableau::new();
    let mut q = Bitableau::new();
    for (i, j) in m.two_line(w1) {
        let mut value = j;
        let mut row = 0usize;
        loop {
            if row == q.rows.len() {
                q.rows.push(alloc::vec![value]);
                p.rows.push(alloc::vec![i]);
                break;
            }
            match bump_position(&q.rows[row], value, w2.contains(&value)) {
                None => {
                    q.rows[row].push(value);
                    p.rows[row].push(i);
                    break;
                }
                Some(pos) => {
                    let displaced = q.rows[row][pos];
                    q.rows[row][pos] = value;
                    value = displaced;
                    row += 1;
                }
            }
        }
    }
    (p, q)
}

fn reverse_bump_position(row: &[i64], v: i64, w2: &Letters) -> usize {
    // rightmost entry u with u < v, or u == v when v is strict
    let mut found = None;
    for (idx, &u) in row.iter().enumerate() {
        if u < v || (u == v && !w2.contains(&v)) {
            found = Some(idx);
        }
    }
    found.expect("reverse bump must find a landing spot")
}

/// Invert the correspondence: recover the multiset from a valid pair of
/// equal shape.
pub fn knuth_inverse(p: &Bitableau, q: &Bitableau, w1: &Letters, w2: &Letters) -> WeightedMultiset {
    assert_eq!(p.shape(), q.shape(), "shapes must agree");
    assert!(p.is_valid(w1), "first tableau invalid");
    assert!(q.is_valid(w2), "second tableau invalid");
    let mut p = p.clone();
    let mut q = q.clone();
    let mut out = WeightedMultiset::new();
    while let Some(&i) = p.rows.iter().flat_map(|r| r.iter()).max() {
        // cells labelled i: a horizontal strip for weak i (remove right to
        // left), a vertical strip for strict i (remove bottom to top)
        let mut cells: Vec<(usize, usize)> = Vec::new();
        for (r, row) in p.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == i {
                    cells.push((r, c));
                }
            }
        }
        if w1.contains(&i) {
            cells.sort_by_key(|&(r, c)| (core::cmp::Reverse(c), r));
        } else {
            cells.sort_by_key(|&(r, c)| (core::cmp::Reverse(r), c));
        }
        for (r, c) in cells {
            assert_eq!(p.rows[r].len(), c + 1, "removable corner expected");
            assert!(p.rows.len() == r + 1 || p.rows[r + 1].len() <= c);
            p.rows[r].pop();
            if p.rows[r].is_empty() {
                p.rows.remove(r);
            }
            let mut v = q.rows[r].pop().expect("matching cell");
            if q.rows[r].is_empty() {
                q.rows.remove(r);
            }
            for upper in (0..r).rev() {
                let pos = reverse_bump_position(&q.rows[upper], v, w2);
                core::mem::swap(&mut q.rows[upper][pos], &mut v);
            }
            out.add(i, v, 1);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(xs: &[i64]) -> Letters {
        xs.iter().copied().collect()
    }

    #[test]
    fn empty_and_singleton() {
        let w = letters(&[1, 2]);
        let (p, q) = knuth_correspondence(&WeightedMultiset::new(), &w, &w);
        assert!(p.rows.is_empty() && q.rows.is_empty());
        let m = WeightedMultiset::from_pairs(&[(2, 1, 1)]);
        let (p, q) = knuth_correspondence(&m, &w, &w);
        assert_eq!(p.rows, alloc::vec![alloc::vec![2]]);
        assert_eq!(q.rows, alloc::vec![alloc::vec![1]]);
        assert_eq!(knuth_inverse(&p, &q, &w, &w), m);
    }

    #[test]
    fn antichain_two_elements() {
        // {(1,2),(2,1)} with all letters weak: shape (1,1)
        let w = letters(&[1, 2]);
        let m = WeightedMultiset::from_pairs(&[(1, 2, 1), (2, 1, 1)]);
        let (p, q) = knuth_correspondence(&m, &w, &w);
        assert_eq!(p.rows, alloc::vec![alloc::vec![1], alloc::vec![2]]);
        assert_eq!(q.rows, alloc::vec![alloc::vec![1], alloc::vec![2]]);
        assert_eq!(knuth_inverse(&p, &q, &w, &w), m);
    }

    #[test]
    fn strict_decreasing_shape_certified_by_greene() {
        // strictly decreasing 3-element multiset in the all-strict sector:
        // the shape's first row equals the general lis
        let none = letters(&[]);
        let m = WeightedMultiset::from_pairs(&[(1, 3, 1), (2, 2, 1), (3, 1, 1)]);
        let (p, _q) = knuth_correspondence(&m, &none, &none);
        let shape = p.shape();
        assert_eq!(
            shape.part(0),
            super::super::multiset::lis_general(&m, &none, &none)
        );
    }
}
