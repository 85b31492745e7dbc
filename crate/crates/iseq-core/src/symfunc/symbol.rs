//! Circle symbols built from symmetric-function generating series: Laurent
//! windows whose coefficients are the g_j / i_j series
//! g_j(x;y) = sum_m h_m(x) h_{m+j}(y), truncated exactly by the degree cap.

use super::basis::HBasis;
use crate::integrals::det_formulas::Weight;
use crate::ring::laurent::Laurent;
use crate::ring::multipoly::MultiPoly;
use crate::ring::Ring;

/// H(z; A) = sum_{m >= 0} h_m(A) z^m as a one-sided Laurent window.
pub fn h_side(basis: &HBasis, window: i64) -> Laurent<MultiPoly> {
    let proto = MultiPoly::zero(basis.ctx());
    let mut l = Laurent::zero(window, &proto);
    for m in 0..=basis.max_degree().min(window as usize) {
        l.set(m as i64, basis.h(m as i64));
    }
    l
}

/// (1 + w z) for a parameter w.
pub fn linear_factor(w: &MultiPoly, window: i64) -> Laurent<MultiPoly> {
    let mut l = Laurent::constant(window, w.one_like());
    l.set(1, w.clone());
    l
}

/// (1 - w z)^{-1} = sum_a w^a z^a, exact because w is nilpotent in the
/// truncated parameter ring.
pub fn geometric_factor(w: &MultiPoly, window: i64) -> Laurent<MultiPoly> {
    let mut l = Laurent::zero(window, &w.zero_like());
    let mut pw = w.one_like();
    let mut a: i64 = 0;
    while a <= window && !pw.is_zero() {
        l.set(a, pw.clone());
        pw = pw.mul(w);
        a += 1;
    }
    l
}

/// Package a one-sided symbol g(z) into the Hankel weight: phi = g(z)g(1/z),
/// with the evaluations g(1), g(-1).
pub fn weight_of(g: &Laurent<MultiPoly>) -> Weight<MultiPoly> {
    Weight::new(g.mul(&g.reflect()), g.eval_sign(1), g.eval_sign(-1))
}

/// The Toeplitz symbol of a pair: phi = f(z) g(1/z).
pub fn toeplitz_symbol(f: &Laurent<MultiPoly>, g: &Laurent<MultiPoly>) -> Laurent<MultiPoly> {
    f.mul(&g.reflect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::multipoly::{VarClass, VarSet};
    use crate::ring::rational::rat;
    use crate::symfunc::basis::{standard_ctx, Alphabet, HBasis};

    #[test]
    fn gj_coefficients() {
        // [z^{-j}] H(z;x) H(1/z;y) = sum_m h_m(x) h_{m+j}(y)
        let (ctx, _) = standard_ctx(2, 2, 4);
        let bx = HBasis::new(&ctx, Alphabet::ordinary(alloc::vec![0, 1]), 4);
        let by = HBasis::new(&ctx, Alphabet::ordinary(alloc::vec![2, 3]), 4);
        let f = h_side(&bx, 8);
        let g = h_side(&by, 8);
        let phi = toeplitz_symbol(&f, &g);
        for j in 0..=2i64 {
            let mut expect = MultiPoly::zero(&ctx);
            for m in 0..=4i64 {
                expect = expect.add(&bx.h(m).mul(&by.h(m + j)));
            }
            assert_eq!(phi.get(-j), &expect, "g_{}", j);
        }
    }

    #[test]
    fn geometric_is_inverse_of_linear() {
        let ctx = VarSet::new(&[("b", VarClass::Param)], 0, 4);
        let b = MultiPoly::var_named(&ctx, "b");
        let geo = geometric_factor(&b, 6);
        let lin = {
            let mut l = Laurent::constant(6, b.one_like());
            l.set(1, b.neg());
            l
        };
        let prod = geo.mul(&lin);
        for j in -4..=4i64 {
            let expect = if j == 0 {
                MultiPoly::one(&ctx)
            } else {
                MultiPoly::zero(&ctx)
            };
            assert_eq!(prod.get(j), &expect, "z^{}", j);
        }
        assert_eq!(geo.eval_sign(1).coeff(&[2]), rat(1));
    }
}
