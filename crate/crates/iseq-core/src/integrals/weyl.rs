//! Constant-term oracle for U(l) expectations, straight from the Weyl
//! integration formula: an independent route to the Toeplitz determinant.

use crate::ring::laurent::Laurent;
use crate::ring::Ring;
use alloc::vec;
use alloc::vec::Vec;

/// (1/l!) CT_{z_1..z_l} of prod_{j != k} (1 - z_j/z_k) * prod_j f(z_j) g(1/z_j),
/// for Laurent-polynomial symbols f, g.  Guarded to l <= 3.
pub fn weyl_ct_unitary<R: Ring>(l: usize, f: &Laurent<R>, g: &Laurent<R>) -> R {
    assert!(l <= 3, "constant-term oracle is guarded to l <= 3");
    let proto = f.get(0).zero_like();
    if l == 0 {
        return proto.one_like();
    }
    let psi = f.mul(&g.reflect());
    // expand prod_{j != k} (1 - z_j/z_k) as exponent vectors with signs
    let mut terms: Vec<(Vec<i64>, bool)> = vec![(vec![0; l], false)];
    for j in 0..l {
        for k in 0..l {
            if j == k {
                continue;
            }
            let mut next = Vec::with_capacity(terms.len() * 2);
            for (v, neg) in &terms {
                next.push((v.clone(), *neg));
                let mut w = v.clone();
                w[j] += 1;
                w[k] -= 1;
                next.push((w, !*neg));
            }
            terms = next;
        }
    }
    let mut acc = proto.zero_like();
    let wnd = psi.window();
    'term: for (v, neg) in &terms {
        let mut prod = proto.one_like();
        for &e in v {
            if e.abs() > wnd {
                continue 'term; // coefficient is zero beyond the symbol support
            }
            prod.mul_assign(psi.get(-e));
            if prod.is_zero() {
                continue 'term;
            }
        }
        if *neg {
            acc.sub_assign(&prod);
        } else {
            acc.add_assign(&prod);
        }
    }
    let mut fact = 1i64;
    for k in 2..=(l as i64) {
        fact *= k;
    }
    acc.div_i64(fact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integrals::det_formulas::integral_det_two_sided;
    use crate::ring::rational::{rat, Rational};
    use rand::{Rng, SeedableRng};

    fn random_laurent(deg: i64, rng: &mut impl Rng) -> Laurent<Rational> {
        let mut l = Laurent::zero(16, &rat(0));
        for j in -deg..=deg {
            l.set(j, rat(rng.gen_range(-3..=3)));
        }
        l
    }

    #[test]
    fn trivial_cases() {
        let one = Laurent::constant(16, rat(1));
        assert_eq!(weyl_ct_unitary(1, &one, &one), rat(1));
        // l = 1: the Weyl density is 1, so the value is CT f(z)g(1/z)
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        let f = random_laurent(3, &mut rng);
        let g = random_laurent(3, &mut rng);
        assert_eq!(weyl_ct_unitary(1, &f, &g), f.mul(&g.reflect()).get(0).clone());
    }

    #[test]
    fn matches_toeplitz_route() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for l in 1..=3usize {
            for _ in 0..if l < 3 { 25 } else { 5 } {
                let f = random_laurent(3, &mut rng);
                let g = random_laurent(3, &mut rng);
                let ct = weyl_ct_unitary(l, &f, &g);
                let toeplitz = integral_det_two_sided(l, &f.mul(&g.reflect()));
                assert_eq!(ct, toeplitz, "l = {}", l);
            }
        }
    }
}
