//! The identity registry: each tag names one family of restricted
//! Schur-sum identities together with its determinant route, and `verify`
//! computes both sides exactly and compares every coefficient.

use super::basis::{Alphabet, HBasis};
use super::symbol::{geometric_factor, h_side, linear_factor, toeplitz_symbol, weight_of};
use super::sums::{schur_sum, SumInputs, SumVariant};
use crate::integrals::det_formulas::{integral_det, integral_det_two_sided, GroupSpec};
use crate::ring::multipoly::{MultiPoly, VarClass, VarSet};
use crate::ring::Ring;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::format;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdentityTag {
    /// Pair sum over bounded length vs the Toeplitz determinant.
    Gessel,
    /// Doubled-part sum vs the O(l) expectation.
    OrthEven,
    /// Repeated-part sum vs the Sp(2l) expectation.
    SympEven,
    /// alpha^{odd parts} sum vs O(l) with a linear factor.
    OrthAlpha,
    /// beta^{odd columns} sums vs Sp(2l), both parities of the bound.
    SympBeta,
    /// Unweighted sums, all three determinant forms.
    AllLambda,
    /// Second-column-bounded alpha sums, plain and det-twisted.
    ColBoundAlpha,
    /// Domino pair sum and repeated domino sum vs U(l) determinants.
    HyperPlain,
    /// alpha,beta-weighted domino sums vs U(l), all four displays.
    HyperAlphaBeta,
}

pub const ALL_TAGS: [IdentityTag; 9] = [
    IdentityTag::Gessel,
    IdentityTag::OrthEven,
    IdentityTag::SympEven,
    IdentityTag::OrthAlpha,
    IdentityTag::SympBeta,
    IdentityTag::AllLambda,
    IdentityTag::ColBoundAlpha,
    IdentityTag::HyperPlain,
    IdentityTag::HyperAlphaBeta,
];

impl IdentityTag {
    pub fn name(self) -> &'static str {
        match self {
            IdentityTag::Gessel => "gessel",
            IdentityTag::OrthEven => "o-even",
            IdentityTag::SympEven => "sp-even",
            IdentityTag::OrthAlpha => "o-alpha",
            IdentityTag::SympBeta => "sp-beta",
            IdentityTag::AllLambda => "all-lambda",
            IdentityTag::ColBoundAlpha => "col-bound-alpha",
            IdentityTag::HyperPlain => "hyper-plain",
            IdentityTag::HyperAlphaBeta => "hyper-alpha-beta",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        ALL_TAGS.iter().copied().find(|t| t.name() == s)
    }
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub tag: String,
    pub l: usize,
    pub vars: usize,
    pub degree: usize,
    pub param_degree: usize,
    pub pass: bool,
    /// subcheck name, monomial, lhs coefficient, rhs coefficient
    pub counterexample: Option<(String, String, String, String)>,
}

struct Checker {
    report: IdentityReport,
}

impl Checker {
    fn new(tag: IdentityTag, l: usize, vars: usize, degree: usize, param_degree: usize) -> Self {
        Checker {
            report: IdentityReport {
                tag: tag.name().to_string(),
                l,
                vars,
                degree,
                param_degree,
                pass: true,
                counterexample: None,
            },
        }
    }

    fn check(&mut self, name: &str, lhs: &MultiPoly, rhs: &MultiPoly) {
        if !self.report.pass {
            return;
        }
        if lhs != rhs {
            self.report.pass = false;
            let diff = lhs.sub(rhs);
            let (mono, _) = diff.terms().next().expect("nonzero difference");
            let ctx = lhs.ctx();
            let mono_str: Vec<String> = mono
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| format!("{}^{}", ctx.name(i), e))
                .collect();
            self.report.counterexample = Some((
                name.to_string(),
                mono_str.join("*"),
                format!("{}", lhs.coeff(mono)),
                format!("{}", rhs.coeff(mono)),
            ));
        }
    }
}

/// Verify one identity tag with bound `l`, `k` variables per alphabet, main
/// degree cap `d`, and formal parameter degree `param_deg`.
pub fn verify_identity(
    tag: IdentityTag,
    l: usize,
    k: usize,
    d: usize,
    param_deg: usize,
) -> IdentityReport {
    assert!(d >= 1, "degree cap must be at least 1");
    let mut ck = Checker::new(tag, l, k, d, param_deg);
    let window = (d + param_deg + 2).max(2 * l + 4) as i64;

    // contexts: x1..xk (+ y1..yk for pair tags), alpha, beta as parameters
    let pair_ctx = |with_y: bool| -> (Arc<VarSet>, Alphabet, Option<Alphabet>, usize, usize) {
        let mut names: Vec<String> = (1..=k).map(|i| format!("x{}", i)).collect();
        if with_y {
            names.extend((1..=k).map(|i| format!("y{}", i)));
        }
        names.push("alpha".to_string());
        names.push("beta".to_string());
        let decl: Vec<(&str, VarClass)> = names
            .iter()
            .enumerate()
            .map(|(i, n)| {
                let class = if i >= names.len() - 2 {
                    VarClass::Param
                } else {
                    VarClass::Main
                };
                (n.as_str(), class)
            })
            .collect();
        let ctx = VarSet::new(&decl, d, param_deg);
        let a = Alphabet::ordinary((0..k).collect());
        let b = if with_y {
            Some(Alphabet::ordinary((k..2 * k).collect()))
        } else {
            None
        };
        let na = names.len();
        (ctx, a, b, na - 2, na - 1)
    };

    match tag {
        IdentityTag::Gessel => {
            let (ctx, a, b, _, _) = pair_ctx(true);
            let ba = HBasis::new(&ctx, a, d);
            let bb = HBasis::new(&ctx, b.unwrap(), d);
            let lhs = schur_sum(SumVariant::PairSum, l, &SumInputs::pair(&ba, &bb));
            let phi = toeplitz_symbol(&h_side(&ba, window), &h_side(&bb, window));
            let rhs = integral_det_two_sided(l, &phi);
            ck.check("pair-sum", &lhs, &rhs);
        }
        IdentityTag::OrthEven => {
            let (ctx, a, _, _, _) = pair_ctx(false);
            let ba = HBasis::new(&ctx, a, d);
            let lhs = schur_sum(SumVariant::DoubledParts, l, &SumInputs::single(&ba));
            let w = weight_of(&h_side(&ba, window));
            let rhs = integral_det(GroupSpec::OFull(l), &w);
            ck.check("doubled-parts", &lhs, &rhs);
        }
        IdentityTag::SympEven => {
            let (ctx, a, _, _, _) = pair_ctx(false);
            let ba = HBasis::new(&ctx, a, d);
            let lhs = schur_sum(SumVariant::RepeatedParts, l, &SumInputs::single(&ba));
            let w = weight_of(&h_side(&ba, window));
            let rhs = integral_det(GroupSpec::Sp(2 * l), &w);
            ck.check("repeated-parts", &lhs, &rhs);
        }
        IdentityTag::OrthAlpha => {
            let (ctx, a, _, ai, _) = pair_ctx(false);
            let ba = HBasis::new(&ctx, a, d);
            let alpha = MultiPoly::var(&ctx, ai);
            let lhs = schur_sum(
                SumVariant::AlphaOddParts,
                l,
                &SumInputs::single(&ba).with_alpha(&alpha),
            );
            let g = linear_factor(&alpha, window).mul(&h_side(&ba, window));
            let rhs = integral_det(GroupSpec::OFull(l), &weight_of(&g));
            ck.check("alpha-odd-parts", &lhs, &rhs);
        }
        IdentityTag::SympBeta => {
            let (ctx, a, _, _, bi) = pair_ctx(false);
            let ba = HBasis::new(&ctx, a, d);
            let beta = MultiPoly::var(&ctx, bi);
            let lhs = schur_sum(
                SumVariant::BetaOddCols,
                2 * l,
                &SumInputs::single(&ba).with_beta(&beta),
            );
            let g = geometric_factor(&beta, window).mul(&h_side(&ba, window));
            let rhs = integral_det(GroupSpec::Sp(2 * l), &weight_of(&g));
            ck.check("beta-even-bound", &lhs, &rhs);

            let lhs = schur_sum(
                SumVariant::BetaOddCols,
                2 * l + 1,
                &SumInputs::single(&ba).with_beta(&beta),
            );
            let plain = integral_det(GroupSpec::Sp(2 * l), &weight_of(&h_side(&ba, window)));
            let rhs = ba.h_at(&beta).mul(&plain);
            ck.check("beta-odd-bound", &lhs, &rhs);
        }
        IdentityTag::AllLambda => {
            let (ctx, a, _, _, _) = pair_ctx(false);
            let _ = ctx;
            let ba = HBasis::new(&ctx, a, d);
            let w = weight_of(&h_side(&ba, window));
            // even bound: strip the H(-1;x) prefactor from the odd O^- form
            let lhs = schur_sum(SumVariant::All, 2 * l, &SumInputs::single(&ba));
            let om = integral_det(GroupSpec::OMinus(2 * l + 1), &w);
            let hm1_inv = ba.h_at_sign(-1).try_inverse().expect("unit constant");
            ck.check("even-bound", &lhs, &om.mul(&hm1_inv));
            // odd bound: H(1;x) times the Sp form
            let lhs = schur_sum(SumVariant::All, 2 * l + 1, &SumInputs::single(&ba));
            let sp = integral_det(GroupSpec::Sp(2 * l), &w);
            ck.check("odd-bound", &lhs, &ba.h_at_sign(1).mul(&sp));
            // E(1;x) route for both parities
            for bound in [2 * l, 2 * l + 1] {
                if bound == 0 {
                    continue;
                }
                let lhs = schur_sum(SumVariant::All, bound, &SumInputs::single(&ba));
                let om = integral_det(GroupSpec::OMinus(bound + 1), &w);
                let rhs = ba.e_at_sign(1).mul(&om);
                ck.check("e-route", &lhs, &rhs);
            }
        }
        IdentityTag::ColBoundAlpha => {
            let (ctx, a, _, ai, _) = pair_ctx(false);
            let ba = HBasis::new(&ctx, a, d);
            let alpha = MultiPoly::var(&ctx, ai);
            let w = weight_of(&h_side(&ba, window));
            let lhs = schur_sum(
                SumVariant::ColBoundAlpha,
                l,
                &SumInputs::single(&ba).with_alpha(&alpha),
            );
            let rhs = ba.e_at(&alpha).mul(&integral_det(GroupSpec::OFull(l), &w));
            ck.check("col-bound", &lhs, &rhs);
            if l >= 1 {
                let lhs = schur_sum(
                    SumVariant::ColBoundAlphaSigned,
                    l,
                    &SumInputs::single(&ba).with_alpha(&alpha),
                );
                let rhs = ba.e_at(&alpha).mul(&integral_det(GroupSpec::ODet(l), &w));
                ck.check("col-bound-signed", &lhs, &rhs);
            }
        }
        IdentityTag::HyperPlain => {
            let (ctx, a, b, _, _) = pair_ctx(true);
            let ba = HBasis::new(&ctx, a, d);
            let bb = HBasis::new(&ctx, b.unwrap(), d);
            let udet = integral_det_two_sided(
                l,
                &toeplitz_symbol(&h_side(&ba, window), &h_side(&bb, window)),
            );
            let lhs = schur_sum(SumVariant::TildePair, 2 * l, &SumInputs::pair(&ba, &bb));
            ck.check("tilde-pair", &lhs, &udet.mul(&udet));
            let lhs = schur_sum(SumVariant::TildeRepeated, l, &SumInputs::single(&ba));
            let rhs = integral_det_two_sided(
                l,
                &toeplitz_symbol(&h_side(&ba, window), &h_side(&ba, window)),
            );
            ck.check("tilde-repeated", &lhs, &rhs);
        }
        IdentityTag::HyperAlphaBeta => {
            let (ctx, a, _, ai, bi) = pair_ctx(false);
            let ba = HBasis::new(&ctx, a, d);
            let alpha = MultiPoly::var(&ctx, ai);
            let beta = MultiPoly::var(&ctx, bi);
            let hs = h_side(&ba, window);
            let inputs = |v: SumVariant, bound: usize| {
                schur_sum(v, bound, &SumInputs::single(&ba).with_alpha(&alpha).with_beta(&beta))
            };
            // even bound
            let lhs = inputs(SumVariant::TildeAlphaBeta, 2 * l);
            let f = linear_factor(&alpha, window)
                .mul(&geometric_factor(&beta, window))
                .mul(&hs);
            let rhs = integral_det_two_sided(l, &toeplitz_symbol(&f, &hs));
            ck.check("even-bound", &lhs, &rhs);
            // odd bound (Pieri route)
            let lhs = inputs(SumVariant::TildeAlphaBeta, 2 * l + 1);
            let f = linear_factor(&alpha, window).mul(&hs);
            let rhs = ba
                .h_at(&beta)
                .mul(&integral_det_two_sided(l, &toeplitz_symbol(&f, &hs)));
            ck.check("odd-bound", &lhs, &rhs);
            // column-bound, even and odd
            let lhs = inputs(SumVariant::TildeColBound, 2 * l);
            let f = geometric_factor(&beta, window).mul(&hs);
            let rhs = ba
                .e_at(&alpha)
                .mul(&integral_det_two_sided(l, &toeplitz_symbol(&f, &hs)));
            ck.check("col-even", &lhs, &rhs);
            let lhs = inputs(SumVariant::TildeColBound, 2 * l + 1);
            let rhs = ba
                .e_at(&alpha)
                .mul(&ba.h_at(&beta))
                .mul(&integral_det_two_sided(l, &toeplitz_symbol(&hs, &hs)));
            ck.check("col-odd", &lhs, &rhs);
        }
    }
    ck.report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_envelope_all_tags() {
        for tag in ALL_TAGS {
            for l in 1..=2usize {
                let rep = verify_identity(tag, l, 2, 4, 2);
                assert!(
                    rep.pass,
                    "tag {} failed at l={}: {:?}",
                    rep.tag, l, rep.counterexample
                );
            }
        }
    }

    #[test]
    fn gessel_l1_is_diagonal_sum() {
        // at l = 1 both sides equal sum_m h_m(x) h_m(y)
        let rep = verify_identity(IdentityTag::Gessel, 1, 2, 5, 0);
        assert!(rep.pass);
    }

    #[test]
    fn zero_bound_cases() {
        for tag in [IdentityTag::Gessel, IdentityTag::OrthEven, IdentityTag::SympEven] {
            let rep = verify_identity(tag, 0, 2, 3, 1);
            assert!(rep.pass, "{:?}", rep);
        }
    }
}
