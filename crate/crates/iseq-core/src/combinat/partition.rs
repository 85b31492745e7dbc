//! Integer partitions and the constructions the Schur-sum identities need:
//! conjugates, odd-part counts, interleaved halves, doubled shapes, and the
//! 2-core / 2-quotient through the two-runner abacus.
//!
//! Abacus convention: pad to an even number `m` of parts, take beta numbers
//! `b_i = part_i + (m - i)`; runner `r` holds the beads congruent to `r`
//! mod 2.  The quotient pair is reported as (runner 0, runner 1).

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::One;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Partition {
    parts: Vec<usize>, // weakly decreasing, positive
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        assert!(
            parts.windows(2).all(|ab| ab[0] >= ab[1]),
            "parts must be weakly decreasing"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Number of odd parts.
    pub fn odd_parts(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    pub fn is_even(&self) -> bool {
        self.odd_parts() == 0
    }

    /// (parts 1,3,5,... ; parts 2,4,6,...) in 1-based numbering.
    pub fn interleave_split(&self) -> (Partition, Partition) {
        let plus = self.parts.iter().step_by(2).copied().collect();
        let minus = self.parts.iter().skip(1).step_by(2).copied().collect();
        (Partition::new(plus), Partition::new(minus))
    }

    /// Each part doubled: (2 a_1, 2 a_2, ...).
    pub fn doubled(&self) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&p| 2 * p).collect(),
        }
    }

    /// Each part repeated twice: (a_1, a_1, a_2, a_2, ...).
    pub fn squared(&self) -> Partition {
        let mut parts = Vec::with_capacity(2 * self.parts.len());
        for &p in &self.parts {
            parts.push(p);
            parts.push(p);
        }
        Partition { parts }
    }

    fn beta_numbers(&self, m: usize) -> Vec<usize> {
        assert!(m >= self.parts.len());
        (1..=m).map(|i| self.part(i - 1) + (m - i)).collect()
    }

    fn from_beta(mut betas: Vec<usize>) -> Partition {
        betas.sort_unstable_by(|a, b| b.cmp(a));
        let m = betas.len();
        let parts = betas
            .iter()
            .enumerate()
            .map(|(idx, &b)| b + idx + 1 - m)
            .collect();
        Partition::new(parts)
    }

    /// The 2-core (domino stripping via the abacus).
    pub fn two_core(&self) -> Partition {
        let m = self.parts.len() + self.parts.len() % 2;
        let betas = self.beta_numbers(m.max(2));
        let mut counts = [0usize, 0usize];
        for &b in &betas {
            counts[b % 2] += 1;
        }
        // push all beads to the bottom of their runners
        let mut packed = Vec::new();
        for r in 0..2 {
            for j in 0..counts[r] {
                packed.push(r + 2 * j);
            }
        }
        Partition::from_beta(packed)
    }

    /// The 2-quotient (runner 0, runner 1), with the two-runner abacus on an
    /// even number of beads.
    pub fn two_quotient(&self) -> (Partition, Partition) {
        let m = self.parts.len() + self.parts.len() % 2;
        let betas = self.beta_numbers(m.max(2));
        let mut runners: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        for &b in &betas {
            runners[b % 2].push(b / 2);
        }
        let quot = runners.map(Partition::from_beta);
        let [q0, q1] = quot;
        (q0, q1)
    }

    pub fn has_trivial_two_core(&self) -> bool {
        self.two_core().is_empty()
    }

    /// Rebuild a partition from its 2-core and 2-quotient, inverting
    /// [`Partition::two_core`]/[`Partition::two_quotient`].
    pub fn from_core_and_quotient(core: &Partition, q0: &Partition, q1: &Partition) -> Partition {
        // bead counts per runner for the core on m beads, m even and large enough
        let mut m = core.len().max(q0.len() + q1.len()) * 2 + 4;
        if m % 2 == 1 {
            m += 1;
        }
        let core_betas = core.beta_numbers(m);
        let mut counts = [0usize, 0usize];
        for &b in &core_betas {
            counts[b % 2] += 1;
        }
        let mut betas = Vec::new();
        for (r, q) in [(0usize, q0), (1usize, q1)] {
            let k = counts[r];
            assert!(q.len() <= k, "quotient too long for chosen bead count");
            for j in 1..=k {
                let pos = q.part(j - 1) + (k - j);
                betas.push(2 * pos + r);
            }
        }
        Partition::from_beta(betas)
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn syt_count(&self) -> BigInt {
        let n = self.size();
        let conj = self.conjugate();
        let mut numer = BigInt::one();
        for k in 1..=n {
            numer *= BigInt::from(k);
        }
        let mut denom = BigInt::one();
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p {
                let hook = (p - j) + (conj.part(j) - i) - 1;
                denom *= BigInt::from(hook);
            }
        }
        numer / denom
    }

    /// All partitions of exactly `n`.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            let hi = remaining.min(max);
            for p in (1..=hi).rev() {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n.max(1), &mut cur, &mut out);
        out
    }

    /// All partitions of size 0..=d.
    pub fn all_up_to(d: usize) -> Vec<Partition> {
        let mut out = vec![Partition::empty()];
        for n in 1..=d {
            out.extend(Partition::all_of_size(n));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn conjugate_and_odd_parts() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[3, 1]).odd_parts(), 2);
        assert_eq!(p(&[3, 1]).conjugate().conjugate(), p(&[3, 1]));
    }

    #[test]
    fn interleave_doubles() {
        let la = p(&[3, 2, 1]);
        let (plus, minus) = la.interleave_split();
        assert_eq!(plus, p(&[3, 1]));
        assert_eq!(minus, p(&[2]));
        assert_eq!(la.doubled(), p(&[6, 4, 2]));
        assert_eq!(la.squared(), p(&[3, 3, 2, 2, 1, 1]));
    }

    #[test]
    fn two_core_and_quotient() {
        // (2,2) is two dominos: trivial core, quotient ((1),(1)); the two
        // domino tilings match the two pairs of standard tableaux on the
        // quotient.
        let la = p(&[2, 2]);
        assert!(la.two_core().is_empty());
        let (q0, q1) = la.two_quotient();
        assert_eq!((q0, q1), (p(&[1]), p(&[1])));
        // single box has 2-core (1)
        assert_eq!(p(&[1]).two_core(), p(&[1]));
        // (2,1,1) strips to core (2,1,1)? no: remove the vertical domino
        assert_eq!(p(&[2, 1, 1]).two_core(), p(&[2]).two_core());
    }

    #[test]
    fn quotient_round_trip() {
        for la in Partition::all_up_to(9) {
            let core = la.two_core();
            let (q0, q1) = la.two_quotient();
            let back = Partition::from_core_and_quotient(&core, &q0, &q1);
            assert_eq!(back, la, "round trip failed for {:?}", la);
            assert_eq!(la.size(), core.size() + 2 * (q0.size() + q1.size()));
        }
    }

    #[test]
    fn trivial_core_iff_balanced_odd_parts() {
        // trivial 2-core iff f(plus) = f(minus) = f(lambda)/2
        for la in Partition::all_up_to(10) {
            let (plus, minus) = la.interleave_split();
            let balanced =
                plus.odd_parts() == minus.odd_parts() && 2 * plus.odd_parts() == la.odd_parts();
            assert_eq!(la.has_trivial_two_core(), balanced, "lambda = {:?}", la);
        }
    }

    #[test]
    fn syt_hook_counts() {
        assert_eq!(p(&[2, 1]).syt_count(), BigInt::from(2));
        assert_eq!(p(&[3, 2]).syt_count(), BigInt::from(5));
        assert_eq!(p(&[2, 2]).syt_count(), BigInt::from(2));
        let total: BigInt = Partition::all_of_size(4)
            .iter()
            .map(|la| {
                let c = la.syt_count();
                &c * &c
            })
            .sum();
        assert_eq!(total, BigInt::from(24)); // sum of (f^lambda)^2 = n!
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Partition::all_of_size(6).len(), 11);
        assert_eq!(Partition::all_up_to(4).len(), 1 + 1 + 2 + 3 + 5);
    }
}
