//! The pfaffian route to the alpha-weighted orthogonal sum, and the
//! alternating tuple-function lemma that pins the bordered sign convention.

use super::basis::HBasis;
use super::symbol::{h_side, weight_of};
use crate::combinat::Partition;
use crate::ring::matrix::RingMatrix;
use crate::ring::multipoly::MultiPoly;
use crate::ring::pfaffian::{bordered_pfaffian, pfaffian};
use crate::ring::Ring;
use alloc::vec::Vec;

/// F on an increasing tuple mu = mu_l(lambda) is alpha^{f(lambda)}
/// beta^{f(lambda')}; extended to all tuples as an alternating function.
pub fn f_tuple(mu: &[usize], alpha: &MultiPoly, beta: &MultiPoly) -> MultiPoly {
    // sort with sign
    let mut v: Vec<usize> = mu.to_vec();
    let mut sign = 1i64;
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            if v[i] > v[j] {
                v.swap(i, j);
                sign = -sign;
            } else if v[i] == v[j] {
                return alpha.zero_like();
            }
        }
    }
    // lambda_{l-j} = mu_j - j
    let l = v.len();
    let parts: Vec<usize> = (0..l).rev().map(|j| v[j] - j).collect();
    let la = Partition::new(parts);
    let val = alpha
        .pow(la.odd_parts() as u64)
        .mul(&beta.pow(la.conjugate().odd_parts() as u64));
    if sign < 0 {
        val.neg()
    } else {
        val
    }
}

/// Check the pfaffian expansion of the alternating tuple function: for a
/// strictly increasing tuple mu of length l,
///   l even: F(mu) = pf(F(mu_i, mu_k)) for generic alpha, beta;
///   l odd:  F(mu) = pf(F(mu_i); F(mu_i, mu_k)) under our +border
///           convention, valid on the specializations beta = 1 or
///           alpha = 1 (the only ones the sum identities use; the border
///           entries do not capture the joint (alpha, beta) grading).
pub fn f_mu_lemma_check(mu: &[usize], alpha: &MultiPoly, beta: &MultiPoly) -> bool {
    let l = mu.len();
    let proto = alpha.zero_like();
    let f2 = RingMatrix::from_fn(l, l, &proto, |i, k| f_tuple(&[mu[i], mu[k]], alpha, beta));
    let lhs = f_tuple(mu, alpha, beta);
    let rhs = if l % 2 == 0 {
        pfaffian(&f2, &proto)
    } else {
        let border: Vec<MultiPoly> = mu.iter().map(|&m| f_tuple(&[m], alpha, beta)).collect();
        bordered_pfaffian(&border, &f2, &proto)
    };
    lhs == rhs
}

/// The pfaffian form of sum over len(la) <= l of alpha^{f(la)} s_la(x) for
/// even l: pf(M0) + (1 - alpha^2)/2 * H(1;x) H(-1;x) * pf(M0'), where M0 is
/// the l x l antisymmetric matrix with upper entries
///   (1/2) sum_{0 <= d < k-j} [(1+alpha^2) i_{2d+1-(k-j)}
///                             + alpha (i_{2d-(k-j)} + i_{2d+2-(k-j)})]
/// and M0' is the (l-2) x (l-2) minor left over after the rank-2 part is
/// row-reduced away: its entries are the symmetric second difference
/// 2 M0(g) - M0(g+2) - M0(g-2) in the gap g = k-j, which works out to
///   (1+alpha^2)(i_{g-1} - i_{g+1}) + alpha (i_{g-2} - i_{g+2}).
/// At alpha = 0 this is the Toeplitz form i_{g-1} - i_{g+1}; at l = 2 the
/// minor is empty and the term is just the prefactor.
pub fn pfaffian_route_alpha_sum(basis: &HBasis, l: usize, alpha: &MultiPoly) -> MultiPoly {
    assert!(l >= 2 && l % 2 == 0, "even bound at least 2");
    let window = (2 * l + basis.max_degree() + 2) as i64;
    let w = weight_of(&h_side(basis, window));
    let i = |j: i64| w.phi.get(j).clone();
    let proto = alpha.zero_like();
    let one = alpha.one_like();
    let alpha2 = alpha.mul(alpha);
    let m0 = RingMatrix::from_fn(l, l, &proto, |j, k| {
        if j == k {
            return proto.clone();
        }
        let (j2, k2, flip) = if j < k { (j, k, false) } else { (k, j, true) };
        let gap = (k2 - j2) as i64;
        let mut acc = proto.clone();
        for dd in 0..gap {
            let d = 2 * dd;
            let t1 = one.add(&alpha2).mul(&i(d + 1 - gap));
            let t2 = alpha.mul(&i(d - gap).add(&i(d + 2 - gap)));
            acc.add_assign(&t1.add(&t2));
        }
        acc = acc.div_i64(2);
        if flip {
            acc.neg()
        } else {
            acc
        }
    });
    let first = pfaffian(&m0, &proto);
    let m0p = RingMatrix::from_fn(l - 2, l - 2, &proto, |j, k| {
        let g = k as i64 - j as i64;
        if g == 0 {
            return proto.clone();
        }
        let t1 = one.add(&alpha2).mul(&i(g - 1).sub(&i(g + 1)));
        let t2 = alpha.mul(&i(g - 2).sub(&i(g + 2)));
        t1.add(&t2)
    });
    let second = pfaffian(&m0p, &proto);
    let prefactor = one
        .sub(&alpha2)
        .mul(&basis.h_at_sign(1))
        .mul(&basis.h_at_sign(-1))
        .div_i64(2);
    first.add(&prefactor.mul(&second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::multipoly::{VarClass, VarSet};
    use crate::symfunc::basis::{standard_ctx, Alphabet, HBasis};
    use crate::symfunc::sums::{schur_sum, SumInputs, SumVariant};

    #[test]
    fn f_mu_lemma_even_and_odd() {
        let ctx = VarSet::new(&[("a", VarClass::Param), ("b", VarClass::Param)], 0, 40);
        let alpha = MultiPoly::var_named(&ctx, "a");
        let beta = MultiPoly::var_named(&ctx, "b");
        let one = MultiPoly::one(&ctx);
        // even tuples: generic alpha and beta
        for mu in [&[0usize, 1][..], &[1, 4], &[0, 1, 2, 4], &[1, 2, 5, 7], &[0, 2, 3, 5, 9, 11]] {
            assert!(f_mu_lemma_check(mu, &alpha, &beta), "even mu = {:?}", mu);
        }
        // odd tuples: the bordered case, on the specializations it is used at
        for mu in [&[0usize][..], &[3], &[0, 2, 5], &[1, 3, 4], &[0, 2, 3, 5, 8]] {
            assert!(f_mu_lemma_check(mu, &alpha, &one), "odd mu = {:?} (beta=1)", mu);
            assert!(f_mu_lemma_check(mu, &one, &beta), "odd mu = {:?} (alpha=1)", mu);
        }
        // and the generic odd case genuinely fails: the minus-signed display
        // belongs to the opposite border convention, and no global sign fixes
        // the joint grading
        assert!(!f_mu_lemma_check(&[0, 1, 2], &alpha, &beta));
    }

    #[test]
    fn alpha_pfaffian_route_matches_sum() {
        for (k, d, l) in [(1usize, 4usize, 2usize), (2, 4, 2), (2, 4, 4)] {
            let (ctx0, a) = standard_ctx(k, 0, d);
            // rebuild with an alpha parameter
            let mut decl: alloc::vec::Vec<(alloc::string::String, VarClass)> = (0..k)
                .map(|i| (alloc::format!("x{}", i + 1), VarClass::Main))
                .collect();
            decl.push(("alpha".into(), VarClass::Param));
            let refs: alloc::vec::Vec<(&str, VarClass)> =
                decl.iter().map(|(n, c)| (n.as_str(), *c)).collect();
            let ctx = VarSet::new(&refs, d, 4);
            let _ = ctx0;
            let basis = HBasis::new(&ctx, Alphabet::ordinary(a.xs.clone()), d);
            let alpha = MultiPoly::var_named(&ctx, "alpha");
            let lhs = schur_sum(
                SumVariant::AlphaOddParts,
                l,
                &SumInputs::single(&basis).with_alpha(&alpha),
            );
            let rhs = pfaffian_route_alpha_sum(&basis, l, &alpha);
            assert_eq!(lhs, rhs, "k={} d={} l={}", k, d, l);
        }
    }

    #[test]
    fn alpha_route_degree_zero_and_alpha_zero() {
        let (_, a) = standard_ctx(2, 0, 4);
        let ctx = VarSet::new(
            &[
                ("x1", VarClass::Main),
                ("x2", VarClass::Main),
                ("alpha", VarClass::Param),
            ],
            4,
            2,
        );
        let basis = HBasis::new(&ctx, Alphabet::ordinary(a.xs.clone()), 4);
        let alpha = MultiPoly::var_named(&ctx, "alpha");
        let route = pfaffian_route_alpha_sum(&basis, 2, &alpha);
        // degree-0 coefficient is 1
        assert_eq!(route.constant_term(), crate::ring::rational::rat(1));
        // alpha = 0 reduces to the even-part sum
        let at_zero = route.set_var_zero(ctx.index_of("alpha").unwrap());
        let even_sum = schur_sum(SumVariant::DoubledParts, 2, &SumInputs::single(&basis));
        assert_eq!(at_zero, even_sum);
    }
}
