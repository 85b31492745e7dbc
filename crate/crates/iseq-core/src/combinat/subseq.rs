//! Longest monotone subsequence lengths and Greene-style unions, for plain
//! integer words.  These are the brute-force oracles the determinant and
//! series routes are checked against.

use alloc::vec;
use alloc::vec::Vec;

/// Length of the longest strictly increasing subsequence.
pub fn lis(word: &[usize]) -> usize {
    longest_with(word, |a, b| a < b)
}

/// Length of the longest strictly decreasing subsequence.
pub fn lds(word: &[usize]) -> usize {
    longest_with(word, |a, b| a > b)
}

fn longest_with(word: &[usize], ok: impl Fn(usize, usize) -> bool) -> usize {
    let n = word.len();
    let mut best = vec![1usize; n];
    let mut ans = 0;
    for i in 0..n {
        for j in 0..i {
            if ok(word[j], word[i]) && best[j] + 1 > best[i] {
                best[i] = best[j] + 1;
            }
        }
        ans = ans.max(best[i]);
    }
    ans
}

/// Exhaustive oracle: maximum size of a subset of positions that can be
/// partitioned into at most `k` strictly increasing subsequences.
pub fn greene_union_size(word: &[usize], k: usize) -> usize {
    let n = word.len();
    let mut best = 0usize;
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let sub: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).map(|i| word[i]).collect();
        if partitions_into_increasing(&sub, k) {
            best = size;
        }
    }
    best
}

/// Same, for decreasing subsequences.
pub fn greene_union_size_decreasing(word: &[usize], k: usize) -> usize {
    let n = word.len();
    let flipped: Vec<usize> = word.iter().map(|&v| n + 1 - v).collect();
    greene_union_size(&flipped, k)
}

fn partitions_into_increasing(sub: &[usize], k: usize) -> bool {
    // greedy assignment with backtracking: tops[c] = last value of chain c
    fn rec(sub: &[usize], pos: usize, tops: &mut Vec<usize>, k: usize) -> bool {
        if pos == sub.len() {
            return true;
        }
        let v = sub[pos];
        let mut tried = Vec::new();
        for c in 0..tops.len() {
            if tops[c] < v && !tried.contains(&tops[c]) {
                tried.push(tops[c]);
                let old = tops[c];
                tops[c] = v;
                if rec(sub, pos + 1, tops, k) {
                    return true;
                }
                tops[c] = old;
            }
        }
        if tops.len() < k {
            tops.push(v);
            if rec(sub, pos + 1, tops, k) {
                return true;
            }
            tops.pop();
        }
        false
    }
    rec(sub, 0, &mut Vec::new(), k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lis_base_cases() {
        assert_eq!(lis(&[1, 2, 3]), 3);
        assert_eq!(lis(&[3, 2, 1]), 1);
        assert_eq!(lis(&[3, 1, 4, 2]), 2);
        assert_eq!(lds(&[3, 1, 4, 2]), 2);
        assert_eq!(lis(&[]), 0);
    }

    #[test]
    fn lis_exhaustive_oracle() {
        // compare DP against exhaustive subsequence enumeration on all words of S_5
        let perms = crate::combinat::Permutation::all(5);
        for p in perms.iter().step_by(7) {
            let w: Vec<usize> = p.one_line();
            let mut best = 0;
            for mask in 0u32..(1 << 5) {
                let sub: Vec<usize> =
                    (0..5).filter(|&i| mask & (1 << i) != 0).map(|i| w[i]).collect();
                if sub.windows(2).all(|ab| ab[0] < ab[1]) {
                    best = best.max(sub.len());
                }
            }
            assert_eq!(lis(&w), best);
        }
    }

    #[test]
    fn erdos_szekeres() {
        for p in crate::combinat::Permutation::all(5) {
            let w = p.one_line();
            assert!(lis(&w) * lds(&w) >= 5);
        }
    }

    #[test]
    fn greene_examples() {
        assert_eq!(greene_union_size(&[2, 1], 1), 1);
        assert_eq!(greene_union_size(&[3, 1, 4, 2], 2), 4);
        assert_eq!(greene_union_size(&[3, 1, 4, 2], 5), 4);
        assert_eq!(greene_union_size_decreasing(&[3, 1, 4, 2], 1), 2);
    }
}
