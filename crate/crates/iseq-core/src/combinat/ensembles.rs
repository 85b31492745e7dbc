//! The five symmetry ensembles, the rotation ensemble, and exact counting of
//! members with bounded increasing subsequence length.
//!
//! With iota the reversal x -> N+1-x of the underlying symmetric group:
//!
//! * `U`  — all of S_n
//! * `O`  — fixed-point-free involutions in S_{2n}
//! * `Sp` — pi in S_{2n} with pi = iota pi^{-1} iota and pi(x) != iota(x)
//! * `UU` — pi in S_{2n} commuting with iota
//! * `Uu` — fixed-point-free involutions in S_{4n} commuting with iota and
//!          avoiding pi(x) = iota(x)
//! * `Rot` — pi in S_{4n} with pi^2 = iota
//!
//! Streams are sorted lexicographically on the one-line word so counts and
//! reports are reproducible.

use super::permutation::Permutation;
use super::subseq::lis;
use alloc::vec::Vec;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Symmetry {
    U,
    O,
    Sp,
    UU,
    Uu,
    Rot,
}

impl Symmetry {
    /// Scaling constant for the Poissonized time change (the number of
    /// Young tableaux attached to an ensemble element).
    pub fn a_const(self) -> u32 {
        match self {
            Symmetry::O | Symmetry::Sp => 1,
            Symmetry::U | Symmetry::Uu => 2,
            Symmetry::UU => 4,
            Symmetry::Rot => panic!("rotation ensemble has no a-constant"),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Symmetry::U => "U",
            Symmetry::O => "O",
            Symmetry::Sp => "S",
            Symmetry::UU => "UU",
            Symmetry::Uu => "u",
            Symmetry::Rot => "rot",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Some(match tag {
            "U" => Symmetry::U,
            "O" => Symmetry::O,
            "S" => Symmetry::Sp,
            "UU" => Symmetry::UU,
            "u" => Symmetry::Uu,
            "rot" => Symmetry::Rot,
            _ => return None,
        })
    }

    /// Degree of the ambient symmetric group for parameter n.
    pub fn ambient(self, n: usize) -> usize {
        match self {
            Symmetry::U => n,
            Symmetry::O | Symmetry::Sp | Symmetry::UU => 2 * n,
            Symmetry::Uu | Symmetry::Rot => 4 * n,
        }
    }
}

/// Fixed-point-free involutions of S_m (m even), as permutations.
fn fpf_involutions(m: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word: Vec<usize> = alloc::vec![usize::MAX; m];
    fn rec(word: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        let m = word.len();
        let x = match (0..m).find(|&i| word[i] == usize::MAX) {
            Some(x) => x,
            None => {
                out.push(Permutation::from_word(word.clone()));
                return;
            }
        };
        for y in (x + 1)..m {
            if word[y] == usize::MAX {
                word[x] = y;
                word[y] = x;
                rec(word, out);
                word[x] = usize::MAX;
                word[y] = usize::MAX;
            }
        }
    }
    rec(&mut word, &mut out);
    out.sort();
    out
}

/// Centrally symmetric permutations: pi(iota(x)) = iota(pi(x)) on m points.
fn centrally_symmetric(m: usize) -> Vec<Permutation> {
    assert!(m % 2 == 0);
    let mut out = Vec::new();
    let mut word: Vec<usize> = alloc::vec![usize::MAX; m];
    fn rec(word: &mut Vec<usize>, pos: usize, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        let m = word.len();
        if pos == m / 2 {
            out.push(Permutation::from_word(word.clone()));
            return;
        }
        for v in 0..m {
            if !used[v] {
                let vm = m - 1 - v;
                word[pos] = v;
                word[m - 1 - pos] = vm;
                used[v] = true;
                used[vm] = true;
                rec(word, pos + 1, used, out);
                used[v] = false;
                used[vm] = false;
                word[pos] = usize::MAX;
                word[m - 1 - pos] = usize::MAX;
            }
        }
    }
    rec(&mut word, 0, &mut alloc::vec![false; m], &mut out);
    out.sort();
    out
}

/// Fixed-point-free involutions commuting with iota, avoiding pi(x) = iota(x).
fn uu_small_involutions(m: usize) -> Vec<Permutation> {
    assert!(m % 4 == 0);
    let mut out = Vec::new();
    let mut word: Vec<usize> = alloc::vec![usize::MAX; m];
    fn rec(word: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        let m = word.len();
        let x = match (0..m).find(|&i| word[i] == usize::MAX) {
            Some(x) => x,
            None => {
                out.push(Permutation::from_word(word.clone()));
                return;
            }
        };
        let xm = m - 1 - x;
        for y in 0..m {
            if word[y] != usize::MAX || y == x || y == xm {
                continue;
            }
            let ym = m - 1 - y;
            // pairing {x,y} forces {xm,ym}; these four are distinct here
            word[x] = y;
            word[y] = x;
            word[xm] = ym;
            word[ym] = xm;
            rec(word, out);
            word[x] = usize::MAX;
            word[y] = usize::MAX;
            word[xm] = usize::MAX;
            word[ym] = usize::MAX;
        }
    }
    rec(&mut word, &mut out);
    out.sort();
    out
}

/// Members of the symmetry ensemble, lexicographic on one-line words.
pub fn ensemble(sym: Symmetry, n: usize) -> Vec<Permutation> {
    match sym {
        Symmetry::U => Permutation::all(n),
        Symmetry::O => fpf_involutions(2 * n),
        Symmetry::Sp => {
            // pi = iota tau with tau a fixed-point-free involution
            let iota = Permutation::iota(2 * n);
            let mut v: Vec<Permutation> = fpf_involutions(2 * n)
                .into_iter()
                .map(|tau| tau.then(&iota))
                .collect();
            v.sort();
            v
        }
        Symmetry::UU => centrally_symmetric(2 * n),
        Symmetry::Uu => uu_small_involutions(4 * n),
        Symmetry::Rot => {
            // pi^2 = iota in S_{4n}; desk scale, direct filter
            let m = 4 * n;
            let iota = Permutation::iota(m);
            Permutation::all(m)
                .into_iter()
                .filter(|p| p.then(p) == iota)
                .collect()
        }
    }
}

/// Exact count of ensemble members with increasing subsequence length <= l.
pub fn f_count(sym: Symmetry, n: usize, l: usize) -> u64 {
    ensemble(sym, n)
        .iter()
        .filter(|p| lis(&p.one_line()) <= l)
        .count() as u64
}

/// Involutions of S_n (fixed points allowed).
pub fn involutions(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word: Vec<usize> = alloc::vec![usize::MAX; n];
    fn rec(word: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        let n = word.len();
        let x = match (0..n).find(|&i| word[i] == usize::MAX) {
            Some(x) => x,
            None => {
                out.push(Permutation::from_word(word.clone()));
                return;
            }
        };
        word[x] = x;
        rec(word, out);
        word[x] = usize::MAX;
        for y in (x + 1)..n {
            if word[y] == usize::MAX {
                word[x] = y;
                word[y] = x;
                rec(word, out);
                word[x] = usize::MAX;
                word[y] = usize::MAX;
            }
        }
    }
    rec(&mut word, &mut out);
    out.sort();
    out
}

/// Involutions of S_{2n} commuting with iota (fixed and anti-fixed points
/// allowed); the extended ensemble behind the two-parameter diagonal model.
pub fn symmetric_involutions(m: usize) -> Vec<Permutation> {
    assert!(m % 2 == 0);
    let mut out = Vec::new();
    let mut word: Vec<usize> = alloc::vec![usize::MAX; m];
    fn rec(word: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        let m = word.len();
        let x = match (0..m).find(|&i| word[i] == usize::MAX) {
            Some(x) => x,
            None => {
                out.push(Permutation::from_word(word.clone()));
                return;
            }
        };
        let xm = m - 1 - x;
        // fixed point (and its mirror)
        word[x] = x;
        word[xm] = xm;
        rec(word, out);
        // anti-fixed pair
        word[x] = xm;
        word[xm] = x;
        rec(word, out);
        word[x] = usize::MAX;
        word[xm] = usize::MAX;
        for y in 0..m {
            if word[y] != usize::MAX || y == x || y == xm {
                continue;
            }
            let ym = m - 1 - y;
            word[x] = y;
            word[y] = x;
            word[xm] = ym;
            word[ym] = xm;
            rec(word, out);
            word[x] = usize::MAX;
            word[y] = usize::MAX;
            word[xm] = usize::MAX;
            word[ym] = usize::MAX;
        }
    }
    rec(&mut word, &mut out);
    out.sort();
    out
}

/// Count of involutions of S_n with exactly m fixed points and lis <= l
/// (the O diagonal statistic), or of pi = iota tau with m anti-diagonal
/// points for the Sp case.
pub fn ftilde_count(sym: Symmetry, n: usize, m: usize, l: usize) -> u64 {
    match sym {
        Symmetry::O => involutions(n)
            .iter()
            .filter(|p| p.fixed_points() == m && lis(&p.one_line()) <= l)
            .count() as u64,
        Symmetry::Sp => {
            let iota = Permutation::iota(n);
            involutions(n)
                .iter()
                .map(|tau| tau.then(&iota))
                .filter(|p| {
                    let anti = (0..n).filter(|&x| p.apply(x) == n - 1 - x).count();
                    anti == m && lis(&p.one_line()) <= l
                })
                .count() as u64
        }
        _ => panic!("ftilde_count takes O or Sp; use ftilde_u_count for u"),
    }
}

/// Count of symmetric involutions of S_{2n} with m_plus diagonal point pairs
/// and m_minus anti-diagonal point pairs and lis <= l.
pub fn ftilde_u_count(n: usize, m_plus: usize, m_minus: usize, l: usize) -> u64 {
    symmetric_involutions(2 * n)
        .iter()
        .filter(|p| {
            let fix = p.fixed_points();
            let anti = (0..2 * n).filter(|&x| p.apply(x) == 2 * n - 1 - x).count();
            fix == 2 * m_plus && anti == 2 * m_minus && lis(&p.one_line()) <= l
        })
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::subseq::lds;

    fn fact(n: u64) -> u64 {
        (1..=n).product::<u64>().max(1)
    }

    #[test]
    fn ensemble_sizes() {
        // |U_n| = n!, |O_n| = |Sp_n| = (2n)!/(2^n n!), |UU_n| = 2^n n!,
        // |Uu_n| = (2n)!/n!
        for n in 1..=4usize {
            assert_eq!(ensemble(Symmetry::U, n).len() as u64, fact(n as u64));
            let dbl = fact(2 * n as u64) / (2u64.pow(n as u32) * fact(n as u64));
            assert_eq!(ensemble(Symmetry::O, n).len() as u64, dbl);
            assert_eq!(ensemble(Symmetry::Sp, n).len() as u64, dbl);
            assert_eq!(
                ensemble(Symmetry::UU, n).len() as u64,
                2u64.pow(n as u32) * fact(n as u64)
            );
        }
        for n in 1..=2usize {
            assert_eq!(
                ensemble(Symmetry::Uu, n).len() as u64,
                fact(2 * n as u64) / fact(n as u64)
            );
            assert_eq!(
                ensemble(Symmetry::Rot, n).len() as u64,
                fact(2 * n as u64) / fact(n as u64)
            );
        }
        assert_eq!(ensemble(Symmetry::U, 3).len(), 6);
        assert_eq!(ensemble(Symmetry::O, 3).len(), 15);
    }

    #[test]
    fn ensemble_membership_invariants() {
        let n = 3;
        for p in ensemble(Symmetry::O, n) {
            assert!(p.is_involution());
            assert_eq!(p.fixed_points(), 0);
        }
        let iota = Permutation::iota(2 * n);
        for p in ensemble(Symmetry::Sp, n) {
            assert_eq!(iota.then(&p.inverse()).then(&iota), p);
            assert!((0..2 * n).all(|x| p.apply(x) != 2 * n - 1 - x));
        }
        for p in ensemble(Symmetry::UU, n) {
            assert_eq!(iota.then(&p).then(&iota), p);
        }
    }

    #[test]
    fn f_count_examples() {
        // only 123 has lis 3 in S_3
        assert_eq!(f_count(Symmetry::U, 3, 2), 5);
        // of 2143, 3412, 4321 only 4321 has lis 1
        assert_eq!(f_count(Symmetry::O, 2, 1), 1);
        // f is weakly increasing in l, equal to the ensemble size at l = 2n
        for sym in [Symmetry::U, Symmetry::O, Symmetry::Sp, Symmetry::UU] {
            for n in 1..=3usize {
                let total = ensemble(sym, n).len() as u64;
                let mut prev = 0;
                for l in 0..=sym.ambient(n) {
                    let c = f_count(sym, n, l);
                    assert!(c >= prev);
                    prev = c;
                }
                assert_eq!(f_count(sym, n, sym.ambient(n)), total);
            }
        }
    }

    #[test]
    fn stutter_identities() {
        // f^S_{n,2l+1} = f^S_{n,2l} and same for u
        for n in 1..=3usize {
            for l in 0..=3usize {
                assert_eq!(
                    f_count(Symmetry::Sp, n, 2 * l + 1),
                    f_count(Symmetry::Sp, n, 2 * l)
                );
            }
        }
        for n in 1..=2usize {
            for l in 0..=2usize {
                assert_eq!(
                    f_count(Symmetry::Uu, n, 2 * l + 1),
                    f_count(Symmetry::Uu, n, 2 * l)
                );
            }
        }
    }

    #[test]
    fn convolution_identities() {
        // f^UU_{n,2l} = sum_m C(n,m)^2 f^U_{m,l} f^U_{n-m,l}
        fn binom(n: u64, k: u64) -> u64 {
            if k > n {
                return 0;
            }
            (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
        }
        for n in 0..=3usize {
            for l in 1..=3usize {
                let lhs = f_count(Symmetry::UU, n, 2 * l);
                let rhs: u64 = (0..=n)
                    .map(|m| {
                        binom(n as u64, m as u64).pow(2)
                            * f_count(Symmetry::U, m, l)
                            * f_count(Symmetry::U, n - m, l)
                    })
                    .sum();
                assert_eq!(lhs, rhs, "UU convolution at n={} l={}", n, l);
            }
        }
        // f^u_{n,2l} = C(2n,n) f^U_{n,l}
        for n in 0..=2usize {
            for l in 1..=3usize {
                assert_eq!(
                    f_count(Symmetry::Uu, n, 2 * l),
                    binom(2 * n as u64, n as u64) * f_count(Symmetry::U, n, l)
                );
            }
        }
    }

    #[test]
    fn ftilde_examples() {
        // the three transpositions of S_3 have one fixed point and lis 2
        assert_eq!(ftilde_count(Symmetry::O, 3, 1, 2), 3);
        // only the identity has n fixed points
        for l in 0..4 {
            assert_eq!(ftilde_count(Symmetry::O, 3, 3, l), u64::from(l >= 3));
        }
        assert_eq!(ftilde_count(Symmetry::Sp, 1, 1, 1), 1);
        // fixed-point sums exhaust the extended ensembles
        for n in 1..=5usize {
            let total: u64 = (0..=n).map(|m| ftilde_count(Symmetry::O, n, m, n)).sum();
            assert_eq!(total, involutions(n).len() as u64);
            let total: u64 = (0..=n).map(|m| ftilde_count(Symmetry::Sp, n, m, n)).sum();
            assert_eq!(total, involutions(n).len() as u64);
        }
        for n in 1..=3usize {
            let total: u64 = (0..=n)
                .flat_map(|a| (0..=n).map(move |b| (a, b)))
                .map(|(a, b)| ftilde_u_count(n, a, b, 2 * n))
                .sum();
            assert_eq!(total, symmetric_involutions(2 * n).len() as u64);
        }
    }

    #[test]
    fn rotation_lis_statistic() {
        // the lis over the rotation ensemble matches max(2 lis(pi), 2 lds(pi) - 1)
        // over S_n in distribution
        for n in 1..=2usize {
            let mut a: Vec<usize> = ensemble(Symmetry::Rot, n)
                .iter()
                .map(|p| lis(&p.one_line()))
                .collect();
            let mut b: Vec<usize> = Permutation::all(n)
                .iter()
                .flat_map(|p| {
                    let w = p.one_line();
                    let v = (2 * lis(&w)).max(2 * lds(&w)).max(2 * lds(&w) - 1);
                    let v = if 2 * lds(&w) >= 1 {
                        (2 * lis(&w)).max(2 * lds(&w) - 1)
                    } else {
                        v
                    };
                    // multiplicity |Rot_n| / n!
                    let mult = ensemble(Symmetry::Rot, n).len() / fact(n as u64) as usize;
                    core::iter::repeat(v).take(mult)
                })
                .collect();
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b);
        }
    }
}
