//! The product formulas: each group expectation of det(g(U)) as a product of
//! norms and reflection values of the orthogonal polynomials, checked
//! exactly against the determinant route.

use super::build::OpucData;
use super::Check;
use crate::integrals::det_formulas::{integral_det, GroupSpec, Weight};
use crate::ring::Ring;
use alloc::format;
use alloc::vec::Vec;

fn prod_over<R: Ring>(one: &R, terms: impl Iterator<Item = R>) -> R {
    let mut acc = one.clone();
    for t in terms {
        acc.mul_assign(&t);
    }
    acc
}

/// Product form of E det(g(U)) over the given group, from the polynomial
/// data; None if a needed (1 +- pi(0)) factor is not invertible.
pub fn product_form<R: Ring>(group: GroupSpec, data: &OpucData<R>, w: &Weight<R>) -> Option<R> {
    let one = w.at_one.one_like();
    let inv_factor = |l: usize, sign: i64| -> Option<R> {
        let z0 = data.at_zero(l);
        let f = if sign > 0 { one.add(z0) } else { one.sub(z0) };
        f.try_inverse()
    };
    Some(match group {
        GroupSpec::U(l) => prod_over(&one, (0..l).map(|j| data.norm(j).clone())),
        GroupSpec::OPlus(m) => {
            if m == 0 {
                one.clone()
            } else if m % 2 == 0 {
                let l = m / 2;
                let mut acc = data.norm(0).clone();
                for j in 0..l.saturating_sub(1) {
                    acc.mul_assign(data.norm(2 * j + 2));
                    acc.mul_assign(&inv_factor(2 * j + 2, 1)?);
                }
                acc
            } else {
                let l = m / 2;
                let mut acc = w.at_one.clone();
                for j in 0..l {
                    acc.mul_assign(data.norm(2 * j + 1));
                    acc.mul_assign(&inv_factor(2 * j + 1, -1)?);
                }
                acc
            }
        }
        GroupSpec::OMinus(m) => {
            if m % 2 == 0 {
                let l = m / 2;
                let mut acc = w.at_one.mul(&w.at_minus_one);
                for j in 0..l.saturating_sub(1) {
                    acc.mul_assign(data.norm(2 * j + 2));
                    acc.mul_assign(&inv_factor(2 * j + 2, -1)?);
                }
                acc
            } else {
                let l = m / 2;
                let mut acc = w.at_minus_one.clone();
                for j in 0..l {
                    acc.mul_assign(data.norm(2 * j + 1));
                    acc.mul_assign(&inv_factor(2 * j + 1, 1)?);
                }
                acc
            }
        }
        GroupSpec::Sp(m) => {
            let l = m / 2;
            let mut acc = one.clone();
            for j in 0..l {
                acc.mul_assign(data.norm(2 * j + 2));
                acc.mul_assign(&inv_factor(2 * j + 2, -1)?);
            }
            acc
        }
        GroupSpec::OFull(_) | GroupSpec::ODet(_) => return None,
    })
}

/// Compare the product forms against the determinant route for every group
/// size reachable with polynomials up to the built degree.
pub fn verify_products<R: Ring>(data: &OpucData<R>, w: &Weight<R>, l_max: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    let mut push = |name: alloc::string::String, group: GroupSpec| {
        let lhs = match product_form(group, data, w) {
            Some(v) => v,
            None => {
                checks.push(Check::new(format!("{} (degenerate factor)", name), false));
                return;
            }
        };
        let rhs = integral_det(group, w);
        checks.push(Check::new(name, lhs == rhs));
    };
    for l in 0..=l_max {
        push(format!("U({}) norm product", l), GroupSpec::U(l));
        if 2 * l + 2 <= data.max_degree() {
            push(format!("O+({})", 2 * l), GroupSpec::OPlus(2 * l));
            push(format!("O-({})", 2 * l + 2), GroupSpec::OMinus(2 * l + 2));
            push(format!("Sp({})", 2 * l), GroupSpec::Sp(2 * l));
        }
        if 2 * l + 1 <= data.max_degree() {
            push(format!("O+({})", 2 * l + 1), GroupSpec::OPlus(2 * l + 1));
            push(format!("O-({})", 2 * l + 1), GroupSpec::OMinus(2 * l + 1));
        }
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integrals::bessel::{bessel_weight, exp_t};
    use crate::integrals::pseries::{d_series, DKind};
    use crate::opuc::build::opuc_build;
    use crate::opuc::all_pass;
    use crate::ring::Ring;

    #[test]
    fn bessel_products_match_determinants() {
        let order = 12;
        let window = 14;
        let phi = bessel_weight(window, order);
        let w = Weight::new(phi.clone(), exp_t(order, 1), exp_t(order, -1));
        let data = opuc_build(&phi, 8).unwrap();
        let checks = verify_products(&data, &w, 3);
        assert!(all_pass(&checks), "{:?}", checks);
    }

    #[test]
    fn sp2_product_is_dpp1() {
        // N_2 (1 - pi_2(0))^{-1} = D^{++}_1
        let order = 10;
        let phi = bessel_weight(12, order);
        let data = opuc_build(&phi, 4).unwrap();
        let one = data.norm(0).one_like();
        let f = one.sub(data.at_zero(2)).try_inverse().unwrap();
        assert_eq!(data.norm(2).mul(&f), d_series(DKind::PlusPlus, 1, order));
    }

    #[test]
    fn tail_products_approach_one() {
        // e^{-t^2} D_l(t) * prod_{l <= j < J} N_j -> 1 coefficientwise
        let order = 8;
        let phi = bessel_weight(14, order);
        let data = opuc_build(&phi, 12).unwrap();
        for l in 0..=2usize {
            let mut acc = d_series(DKind::Plain, l, order)
                .mul(&crate::ring::series::TruncatedSeries::exp_ct_pow(
                    order,
                    crate::ring::rational::rat(-1),
                    2,
                ));
            let mut j = l;
            // multiply tail norms until every coefficient up to the order
            // has stabilized at the identity
            while j < 12 {
                acc = acc.mul(data.norm(j));
                j += 1;
            }
            assert_eq!(acc, acc.one_like(), "l = {}", l);
        }
    }
}
