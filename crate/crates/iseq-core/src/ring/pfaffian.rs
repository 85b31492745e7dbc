//! Pfaffians, bordered pfaffians, and the discrete summation identities
//! built on them (de Bruijn's identity and Gordon's pfaffian-determinant
//! identity).
//!
//! Convention: `bordered_pfaffian(v, A)` is the pfaffian of the matrix with
//! `v` adjoined as the first row (entries `+v_j`) and `-v` as the first
//! column.  Under this convention both the even and odd cases of de Bruijn's
//! identity and Gordon's identity hold literally.

use super::{matrix::RingMatrix, Ring};
use alloc::{vec, vec::Vec};

/// Pfaffian of an antisymmetric matrix of even dimension, by expansion along
/// the first active index: pf(A) = sum_j (-1)^{j-1} A[a0][aj] pf(A minus a0,aj).
pub fn pfaffian<R: Ring>(m: &RingMatrix<R>, proto: &R) -> R {
    assert!(m.is_square(), "pfaffian of a non-square matrix");
    assert!(m.rows() % 2 == 0, "pfaffian needs even dimension");
    assert!(m.is_antisymmetric(), "pfaffian needs an antisymmetric matrix");
    let active: Vec<usize> = (0..m.rows()).collect();
    pf_rec(m, &active, proto)
}

fn pf_rec<R: Ring>(m: &RingMatrix<R>, active: &[usize], proto: &R) -> R {
    if active.is_empty() {
        return proto.one_like();
    }
    let a0 = active[0];
    let mut acc = proto.zero_like();
    let mut sign_neg = false;
    for (j, &aj) in active.iter().enumerate().skip(1) {
        let e = m.at(a0, aj);
        if !e.is_zero() {
            let rest: Vec<usize> = active
                .iter()
                .copied()
                .filter(|&x| x != a0 && x != aj)
                .collect();
            let sub = pf_rec(m, &rest, proto);
            let term = e.mul(&sub);
            if sign_neg {
                acc.sub_assign(&term);
            } else {
                acc.add_assign(&term);
            }
        }
        let _ = j;
        sign_neg = !sign_neg;
    }
    acc
}

/// Pfaffian of `A` bordered by `v` as the first row/column.
pub fn bordered_pfaffian<R: Ring>(v: &[R], m: &RingMatrix<R>, proto: &R) -> R {
    assert!(m.is_square());
    assert_eq!(v.len(), m.rows(), "border length must match the matrix");
    let n = m.rows();
    let b = RingMatrix::from_fn(n + 1, n + 1, proto, |i, j| {
        if i == 0 && j == 0 {
            proto.zero_like()
        } else if i == 0 {
            v[j - 1].clone()
        } else if j == 0 {
            v[i - 1].neg()
        } else {
            m.at(i - 1, j - 1).clone()
        }
    });
    pfaffian(&b, proto)
}

/// Brute-force pfaffian straight from the signed perfect-matching sum; test
/// oracle for the expansion above.
pub fn pfaffian_matching_sum<R: Ring>(m: &RingMatrix<R>, proto: &R) -> R {
    assert!(m.is_square() && m.rows() % 2 == 0);
    let n = m.rows();
    let mut acc = proto.zero_like();
    let mut perm: Vec<usize> = Vec::new();
    let mut used = vec![false; n];
    matching_rec(m, &mut perm, &mut used, proto, &mut acc);
    acc
}

fn inversion_sign(word: &[usize]) -> bool {
    let mut neg = false;
    for i in 0..word.len() {
        for j in (i + 1)..word.len() {
            if word[i] > word[j] {
                neg = !neg;
            }
        }
    }
    neg
}

fn matching_rec<R: Ring>(
    m: &RingMatrix<R>,
    perm: &mut Vec<usize>,
    used: &mut [bool],
    proto: &R,
    acc: &mut R,
) {
    let n = m.rows();
    if perm.len() == n {
        let mut prod = proto.one_like();
        for p in perm.chunks(2) {
            prod.mul_assign(m.at(p[0], p[1]));
        }
        if inversion_sign(perm) {
            acc.sub_assign(&prod);
        } else {
            acc.add_assign(&prod);
        }
        return;
    }
    let i = (0..n).find(|&k| !used[k]).unwrap();
    used[i] = true;
    perm.push(i);
    for j in (i + 1)..n {
        if used[j] {
            continue;
        }
        used[j] = true;
        perm.push(j);
        matching_rec(m, perm, used, proto, acc);
        perm.pop();
        used[j] = false;
    }
    perm.pop();
    used[i] = false;
}

/// de Bruijn's summation identity over a finite point set.
///
/// `rho` is an antisymmetric p x p table over the points, `phis` holds n
/// function tables of length p.  Returns true iff
/// sum over all x in points^n of pf(rho(x_j,x_k)) det(phi_j(x_k)) equals
/// n! times the (bordered, for odd n) pfaffian of the pair-integral matrix.
pub fn de_bruijn_check<R: Ring>(rho: &RingMatrix<R>, phis: &[Vec<R>], proto: &R) -> bool {
    assert!(rho.is_antisymmetric(), "rho must be antisymmetric");
    let p = rho.rows();
    let n = phis.len();
    assert!(phis.iter().all(|f| f.len() == p));

    // left side: brute-force sum over tuples
    let mut lhs = proto.zero_like();
    let mut tuple = vec![0usize; n];
    loop {
        let rho_m = RingMatrix::from_fn(n, n, proto, |j, k| rho.at(tuple[j], tuple[k]).clone());
        let det_m = RingMatrix::from_fn(n, n, proto, |j, k| phis[j][tuple[k]].clone());
        let pf_part = if n % 2 == 0 {
            pfaffian(&rho_m, proto)
        } else {
            let ones = vec![proto.one_like(); n];
            bordered_pfaffian(&ones, &rho_m, proto)
        };
        if !pf_part.is_zero() {
            lhs.add_assign(&pf_part.mul(&det_m.det_with_proto(proto)));
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == n {
                break;
            }
            tuple[pos] += 1;
            if tuple[pos] < p {
                break;
            }
            tuple[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
    }

    // right side: n! pf of the pair sums, bordered by the single sums for odd n
    let pair = RingMatrix::from_fn(n, n, proto, |j, k| {
        let mut acc = proto.zero_like();
        for x in 0..p {
            for y in 0..p {
                if rho.at(x, y).is_zero() {
                    continue;
                }
                acc.add_assign(&phis[j][x].mul(rho.at(x, y)).mul(&phis[k][y]));
            }
        }
        acc
    });
    let pf_rhs = if n % 2 == 0 {
        pfaffian(&pair, proto)
    } else {
        let sums: Vec<R> = (0..n)
            .map(|j| {
                let mut acc = proto.zero_like();
                for x in 0..p {
                    acc.add_assign(&phis[j][x]);
                }
                acc
            })
            .collect();
        bordered_pfaffian(&sums, &pair, proto)
    };
    let mut rhs = pf_rhs;
    for k in 2..=(n as i64) {
        rhs.mul_assign(&proto.from_i64_like(k));
    }
    lhs == rhs
}

/// Gordon's identity for an odd table x_{-j} = -x_j.
///
/// Even case: pf(x_{k-j})_{0<=j,k<2l} equals
/// det(sum_{0<=m<=k} x_{j-k+2m+1})_{0<=j,k<l}.
pub fn gordon_even_check<R: Ring>(xs: &dyn Fn(i64) -> R, l: usize, proto: &R) -> bool {
    let pf_m = RingMatrix::from_fn(2 * l, 2 * l, proto, |j, k| xs(k as i64 - j as i64));
    assert!(pf_m.is_antisymmetric(), "table must be odd in its index");
    let lhs = pfaffian(&pf_m, proto);
    let det_m = RingMatrix::from_fn(l, l, proto, |j, k| {
        let mut acc = proto.zero_like();
        for m in 0..=(k as i64) {
            acc.add_assign(&xs(j as i64 - k as i64 + 2 * m + 1));
        }
        acc
    });
    lhs == det_m.det_with_proto(proto)
}

/// Gordon's identity, bordered case with a formal Laurent variable z.
///
/// pf((z^{j-l})_{0<=j<2l+1}; (x_{k-j})) equals
/// det(sum_{0<=m<=k} (z+1/z) x_{j-k+2m+1} - (x_{j-k+2m} + x_{j-k+2m+2}))_{0<=j,k<l}.
pub fn gordon_odd_check<R: Ring>(xs: &dyn Fn(i64) -> R, l: usize, proto: &R) -> bool {
    use super::laurent::Laurent;
    let w = l as i64 + 2;
    let lift = |r: R| Laurent::constant(w, r.clone()).scale(&proto.one_like());
    let zero_l = Laurent::zero(w, proto);
    let zpow = |e: i64| {
        let mut t = Laurent::zero(w, proto);
        t.set(e, proto.one_like());
        t
    };
    let n = 2 * l + 1;
    let a = RingMatrix::from_fn(n, n, &zero_l, |j, k| lift(xs(k as i64 - j as i64)));
    let border: Vec<Laurent<R>> = (0..n).map(|j| zpow(j as i64 - l as i64)).collect();
    let lhs = bordered_pfaffian(&border, &a, &zero_l);

    let z_plus_zinv = {
        let mut t = Laurent::zero(w, proto);
        t.set(1, proto.one_like());
        t.set(-1, proto.one_like());
        t
    };
    let det_m = RingMatrix::from_fn(l, l, &zero_l, |j, k| {
        let mut acc = Laurent::zero(w, proto);
        for m in 0..=(k as i64) {
            let d = j as i64 - k as i64 + 2 * m;
            acc = acc.add(&z_plus_zinv.mul(&lift(xs(d + 1))));
            acc = acc.add(&lift(xs(d).add(&xs(d + 2))).scale(&proto.from_i64_like(-1)));
        }
        acc
    });
    lhs == det_m.det_with_proto(&zero_l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::matrix::det_rational;
    use crate::ring::rational::{rat, Rational};
    use rand::{Rng, SeedableRng};

    fn random_antisym(n: usize, rng: &mut impl Rng) -> RingMatrix<Rational> {
        let mut m = RingMatrix::from_fn(n, n, &rat(0), |_, _| rat(0));
        for i in 0..n {
            for j in (i + 1)..n {
                let v = rat(rng.gen_range(-5..=5));
                m.set(i, j, v.clone());
                m.set(j, i, -v);
            }
        }
        m
    }

    #[test]
    fn pfaffian_definition_small() {
        let m = RingMatrix::from_rows(vec![vec![rat(0), rat(7)], vec![rat(-7), rat(0)]]);
        assert_eq!(pfaffian(&m, &rat(0)), rat(7));
        // 4x4 generic: a01 a23 - a02 a13 + a03 a12
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let m = random_antisym(4, &mut rng);
        let expect = m.at(0, 1).mul(m.at(2, 3)) - m.at(0, 2).mul(m.at(1, 3))
            + m.at(0, 3).mul(m.at(1, 2));
        assert_eq!(pfaffian(&m, &rat(0)), expect);
        assert_eq!(pfaffian_matching_sum(&m, &rat(0)), expect);
    }

    #[test]
    fn pfaffian_squared_is_det() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for n in [2usize, 4, 6] {
            for _ in 0..5 {
                let m = random_antisym(n, &mut rng);
                let pf = pfaffian(&m, &rat(0));
                assert_eq!(&pf * &pf, det_rational(&m));
                assert_eq!(pf, pfaffian_matching_sum(&m, &rat(0)));
            }
        }
    }

    #[test]
    fn bordered_reduces_to_two_by_two() {
        let m = RingMatrix::from_rows(vec![vec![rat(0)]]);
        assert_eq!(bordered_pfaffian(&[rat(9)], &m, &rat(0)), rat(9));
        // zero border on odd matrix gives zero
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let m3 = random_antisym(3, &mut rng);
        assert_eq!(bordered_pfaffian(&[rat(0), rat(0), rat(0)], &m3, &rat(0)), rat(0));
    }

    #[test]
    fn bordered_matches_definition_expansion() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        let m3 = random_antisym(3, &mut rng);
        let v: Vec<Rational> = (0..3).map(|_| rat(rng.gen_range(-5..=5))).collect();
        let b = RingMatrix::from_fn(4, 4, &rat(0), |i, j| {
            if i == 0 && j == 0 {
                rat(0)
            } else if i == 0 {
                v[j - 1].clone()
            } else if j == 0 {
                -v[i - 1].clone()
            } else {
                m3.at(i - 1, j - 1).clone()
            }
        });
        assert_eq!(
            bordered_pfaffian(&v, &m3, &rat(0)),
            pfaffian_matching_sum(&b, &rat(0))
        );
    }

    #[test]
    fn de_bruijn_trivial_and_random() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        // all phi = 0: both sides vanish
        let rho = random_antisym(3, &mut rng);
        assert!(de_bruijn_check(&rho, &[vec![rat(0); 3], vec![rat(0); 3]], &rat(0)));
        for n in 2..=4usize {
            for p in 2..=4usize {
                for _ in 0..4 {
                    let rho = random_antisym(p, &mut rng);
                    let phis: Vec<Vec<Rational>> = (0..n)
                        .map(|_| (0..p).map(|_| rat(rng.gen_range(-3..=3))).collect())
                        .collect();
                    assert!(de_bruijn_check(&rho, &phis, &rat(0)), "n={} p={}", n, p);
                }
            }
        }
    }

    #[test]
    fn gordon_even_and_odd() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for l in 1..=3usize {
            for _ in 0..4 {
                let table: Vec<Rational> = (0..=(2 * l + 2)).map(|_| rat(rng.gen_range(-4..=4))).collect();
                let xs = move |j: i64| -> Rational {
                    if j == 0 {
                        rat(0)
                    } else if j > 0 {
                        table[j as usize].clone()
                    } else {
                        -table[(-j) as usize].clone()
                    }
                };
                assert!(gordon_even_check(&xs, l, &rat(0)), "even l={}", l);
                assert!(gordon_odd_check(&xs, l, &rat(0)), "odd l={}", l);
            }
        }
        // l=1 even case: pf over 2x2 is x_1, determinant side is x_1
        let xs = |j: i64| -> Rational {
            match j {
                1 => rat(5),
                -1 => rat(-5),
                _ => rat(0),
            }
        };
        assert!(gordon_even_check(&xs, 1, &rat(0)));
    }
}
