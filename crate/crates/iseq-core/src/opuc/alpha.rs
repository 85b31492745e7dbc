//! Linear-factor modifications of the weight: the alpha-formulae for the
//! orthogonal components and the two-sided alpha/beta formula for U(l),
//! with alpha and beta as formal variables over the base series ring.

use super::build::{opuc_build, OpucData};
use super::Check;
use crate::integrals::bessel::{bessel_weight, exp_t};
use crate::integrals::det_formulas::{integral_det, integral_det_two_sided, GroupSpec, Weight};
use crate::ring::laurent::Laurent;
use crate::ring::multipoly::{MultiPoly, VarClass, VarSet};
use crate::ring::series::Series;
use crate::ring::Ring;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

pub type PSeries = Series<MultiPoly>;

/// Context with the two formal weight variables.
pub fn param_ctx(param_cap: usize) -> Arc<VarSet> {
    VarSet::new(
        &[("alpha", VarClass::Param), ("beta", VarClass::Param)],
        0,
        param_cap,
    )
}

/// Lift a rational-coefficient Laurent window into the parameter ring.
pub fn lift_weight(
    phi: &Laurent<crate::ring::series::TruncatedSeries>,
    ctx: &Arc<VarSet>,
) -> Laurent<PSeries> {
    let proto = Series::zero(0, &MultiPoly::zero(ctx));
    let mut out = Laurent::zero(phi.window(), &proto);
    for j in -phi.window()..=phi.window() {
        out.set(j, phi.get(j).map(|c| MultiPoly::constant(ctx, c.clone())));
    }
    out
}

fn lift_series(
    s: &crate::ring::series::TruncatedSeries,
    ctx: &Arc<VarSet>,
) -> PSeries {
    s.map(|c| MultiPoly::constant(ctx, c.clone()))
}

fn const_series(ctx: &Arc<VarSet>, order: usize, p: &MultiPoly) -> PSeries {
    let mut s = Series::zero(order, &MultiPoly::zero(ctx));
    s.set_coeff(0, p.clone());
    s
}

/// The Bessel weight lifted to the parameter ring, with its evaluations.
pub fn bessel_weight_lifted(
    ctx: &Arc<VarSet>,
    window: i64,
    order: usize,
) -> Weight<PSeries> {
    let phi = lift_weight(&bessel_weight(window, order), ctx);
    Weight::new(
        phi,
        lift_series(&exp_t(order, 1), ctx),
        lift_series(&exp_t(order, -1), ctx),
    )
}

/// Multiply a weight by the symbol factor (1 - a z), updating phi and the
/// boundary evaluations.
pub fn modify_linear(w: &Weight<PSeries>, a: &PSeries) -> Weight<PSeries> {
    let window = w.phi.window();
    let proto = w.phi.get(0).zero_like();
    let one = proto.one_like();
    let mut f = Laurent::zero(window, &proto);
    f.set(0, one.clone());
    f.set(1, a.neg());
    let phi = f.mul(&f.reflect()).mul(&w.phi);
    Weight::new(
        phi,
        one.sub(a).mul(&w.at_one),
        one.add(a).mul(&w.at_minus_one),
    )
}

/// The six special-case identities at a = -1 or +1 (over plain series) plus
/// the symbolic alpha-formulae for the orthogonal components.
pub fn alpha_formula_check(order: usize, l_max: usize, alpha_cap: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    let ctx = param_ctx(alpha_cap);
    let window = (2 * l_max + 6) as i64;
    let w = bessel_weight_lifted(&ctx, window, order);
    let data_max = 2 * l_max + 2;
    let data: OpucData<PSeries> =
        opuc_build(&w.phi, data_max).expect("Bessel weight is nondegenerate");
    let alpha_poly = MultiPoly::var_named(&ctx, "alpha");
    let alpha = const_series(&ctx, order, &alpha_poly);
    let w_alpha = modify_linear(&w, &alpha);
    // alpha = 0 sanity: both sides equal the unmodified expectation
    {
        let zero = const_series(&ctx, order, &MultiPoly::zero(&ctx));
        let w0 = modify_linear(&w, &zero);
        let same = integral_det(GroupSpec::OPlus(2 * l_max), &w0)
            == integral_det(GroupSpec::OPlus(2 * l_max), &w);
        checks.push(Check::new("alpha = 0 reduces to the base weight", same));
    }
    for l in 1..=l_max {
        // even components: factor pi*_{2l-1}(alpha) +- alpha pi_{2l-1}(alpha)
        let star = data.eval_star(2 * l - 1, &alpha);
        let plain = alpha.mul(&data.eval(2 * l - 1, &alpha));
        for (sign, group) in [(1i64, GroupSpec::OPlus(2 * l)), (-1, GroupSpec::OMinus(2 * l))] {
            let factor = if sign > 0 {
                star.add(&plain)
            } else {
                star.sub(&plain)
            };
            let lhs = integral_det(group, &w_alpha);
            let rhs = factor.mul(&integral_det(group, &w));
            checks.push(Check::new(
                format!("alpha formula {:?}", group),
                lhs == rhs,
            ));
        }
        // odd components: pi*_{2l}(alpha) -+ alpha pi_{2l}(alpha)
        let star = data.eval_star(2 * l, &alpha);
        let plain = alpha.mul(&data.eval(2 * l, &alpha));
        for (sign, group) in [
            (1i64, GroupSpec::OPlus(2 * l + 1)),
            (-1, GroupSpec::OMinus(2 * l + 1)),
        ] {
            let factor = if sign > 0 {
                star.sub(&plain)
            } else {
                star.add(&plain)
            };
            let lhs = integral_det(group, &w_alpha);
            let rhs = factor.mul(&integral_det(group, &w));
            checks.push(Check::new(
                format!("alpha formula {:?}", group),
                lhs == rhs,
            ));
        }
    }
    // special cases at alpha = -+1, over the same ring with constant factors
    let one = const_series(&ctx, order, &MultiPoly::one(&ctx));
    let minus_one = one.neg();
    let w_plus = modify_linear(&w, &minus_one); // factor (1 + z)
    let w_minus = modify_linear(&w, &one); // factor (1 - z)
    let two = one.add(&one);
    for l in 1..=(2 * l_max) {
        // E_{O+(l)} det((1+U) g) = 2 g(-1)^{-1} E_{O-(l+1)} det(g)
        let lhs = integral_det(GroupSpec::OPlus(l), &w_plus);
        let rhs = two
            .mul(&w.at_minus_one.try_inverse().expect("unit"))
            .mul(&integral_det(GroupSpec::OMinus(l + 1), &w));
        checks.push(Check::new(format!("(1+U) on O+({})", l), lhs == rhs));
        // E_{O-(l)} det((1+U) g) = 0
        let lhs = integral_det(GroupSpec::OMinus(l), &w_plus);
        checks.push(Check::new(format!("(1+U) on O-({}) vanishes", l), lhs.is_zero()));
    }
    for l in 1..=l_max {
        // E_{O+(2l)} det((1-U) g) = 2 g(1)^{-1} E_{O+(2l+1)} det(g)
        let lhs = integral_det(GroupSpec::OPlus(2 * l), &w_minus);
        let rhs = two
            .mul(&w.at_one.try_inverse().expect("unit"))
            .mul(&integral_det(GroupSpec::OPlus(2 * l + 1), &w));
        checks.push(Check::new(format!("(1-U) on O+({})", 2 * l), lhs == rhs));
        // E_{O-(2l)} det((1-U) g) = 0
        let lhs = integral_det(GroupSpec::OMinus(2 * l), &w_minus);
        checks.push(Check::new(
            format!("(1-U) on O-({}) vanishes", 2 * l),
            lhs.is_zero(),
        ));
        // E_{O+(2l+1)} det((1-U) g) = 0
        let lhs = integral_det(GroupSpec::OPlus(2 * l + 1), &w_minus);
        checks.push(Check::new(
            format!("(1-U) on O+({}) vanishes", 2 * l + 1),
            lhs.is_zero(),
        ));
        // E_{O-(2l+1)} det((1-U) g) = 2 g(1)^{-1} E_{O-(2l+2)} det(g)
        let lhs = integral_det(GroupSpec::OMinus(2 * l + 1), &w_minus);
        let rhs = two
            .mul(&w.at_one.try_inverse().expect("unit"))
            .mul(&integral_det(GroupSpec::OMinus(2 * l + 2), &w));
        checks.push(Check::new(format!("(1-U) on O-({})", 2 * l + 1), lhs == rhs));
    }
    checks
}

/// Two-sided U(l) formula: (pi*_l(a) pi*_l(b) - a b pi_l(a) pi_l(b))/(1-ab)
/// times E det(g g+) equals E det((1-aU)(1-bU+) g g+), with the quotient
/// certified by exact polynomial division in b.
pub fn unitary_alpha_beta_check(order: usize, l_max: usize, param_cap: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    let ctx = param_ctx(param_cap);
    let window = (2 * l_max + 6) as i64;
    let w = bessel_weight_lifted(&ctx, window, order);
    let data = opuc_build(&w.phi, l_max).expect("nondegenerate");
    let a_poly = MultiPoly::var_named(&ctx, "alpha");
    let b_poly = MultiPoly::var_named(&ctx, "beta");
    let a = const_series(&ctx, order, &a_poly);
    let b = const_series(&ctx, order, &b_poly);
    let ai = ctx.index_of("alpha").unwrap();
    let bi = ctx.index_of("beta").unwrap();
    let _ = ai;
    for l in 0..=l_max {
        let numerator = data
            .eval_star(l, &a)
            .mul(&data.eval_star(l, &b))
            .sub(&a.mul(&b).mul(&data.eval(l, &a)).mul(&data.eval(l, &b)));
        // divide by (1 - alpha beta) as a polynomial in beta:
        // q_k = n_k + alpha q_{k-1}; exactness demands n_d + alpha q_{d-1} = 0
        let beta_coeff = |s: &PSeries, k: u16| -> PSeries {
            s.map(|c| c.coeff_of_var_power(bi, k))
        };
        let bdeg = (l + 1) as u16;
        let mut q: Vec<PSeries> = Vec::new();
        let mut prev: Option<PSeries> = None;
        for k in 0..bdeg {
            let nk = beta_coeff(&numerator, k);
            let qk = match &prev {
                None => nk,
                Some(p) => nk.add(&a.mul(p)),
            };
            q.push(qk.clone());
            prev = Some(qk);
        }
        let remainder = beta_coeff(&numerator, bdeg).add(&a.mul(prev.as_ref().unwrap()));
        checks.push(Check::new(
            format!("numerator divisible by (1 - ab) at l={}", l),
            remainder.is_zero(),
        ));
        // reassemble the quotient with its beta powers
        let mut quotient = q[0].zero_like();
        let mut bpow = q[0].one_like();
        for qk in &q {
            quotient = quotient.add(&qk.mul(&bpow));
            bpow = bpow.mul(&b);
        }
        // both sides
        let base = integral_det_two_sided(l, &w.phi);
        let lhs = quotient.mul(&base);
        let proto = w.phi.get(0).zero_like();
        let one = proto.one_like();
        let mut fa = Laurent::zero(window, &proto);
        fa.set(0, one.clone());
        fa.set(1, a.neg());
        let mut fb = Laurent::zero(window, &proto);
        fb.set(0, one.clone());
        fb.set(1, b.neg());
        let phi_mod = fa.mul(&fb.reflect()).mul(&w.phi);
        let rhs = integral_det_two_sided(l, &phi_mod);
        checks.push(Check::new(format!("two-sided formula at l={}", l), lhs == rhs));
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opuc::all_pass;

    #[test]
    fn alpha_formulae_small() {
        let checks = alpha_formula_check(8, 2, 3);
        assert!(
            all_pass(&checks),
            "failing: {:?}",
            checks.iter().filter(|c| !c.pass).collect::<Vec<_>>()
        );
    }

    #[test]
    fn unitary_two_sided_small() {
        let checks = unitary_alpha_beta_check(8, 2, 6);
        assert!(
            all_pass(&checks),
            "failing: {:?}",
            checks.iter().filter(|c| !c.pass).collect::<Vec<_>>()
        );
    }

    #[test]
    fn weight_one_l1_explicit() {
        // weight 1, l = 1: pi_1(z) = z, pi*_1 = 1; quotient (1 - ab z ...)/(1-ab) = 1
        let ctx = param_ctx(4);
        let mut phi = Laurent::zero(
            6,
            &Series::zero(0, &MultiPoly::zero(&ctx)),
        );
        phi.set(0, const_series(&ctx, 0, &MultiPoly::one(&ctx)));
        let data = opuc_build(&phi, 1).unwrap();
        let a = const_series(&ctx, 0, &MultiPoly::var_named(&ctx, "alpha"));
        // pi*_1(a) = 1, pi_1(a) = a
        assert_eq!(data.eval_star(1, &a), a.one_like());
        assert_eq!(data.eval(1, &a), a);
    }
}
