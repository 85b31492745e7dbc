//! The Bessel determinants D_l, D^{±±}_l and the Poissonized distribution
//! series P_l for the five symmetry types, with exact coefficient
//! extraction back to the counts f_{nl}.

use super::bessel::{bessel_weight, exp_t};
use super::det_formulas::{integral_det, GroupSpec, Weight};
use crate::combinat::Symmetry;
use crate::ring::rational::{factorial, rat, Rational};
use crate::ring::series::TruncatedSeries;
use crate::ring::Ring;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DKind {
    /// D_l = det(I_{j-k}), the U(l) Toeplitz determinant.
    Plain,
    /// D^{--}_l = (1/2) det(I_{j-k} + I_{j+k}), with D^{--}_0 = 1.
    MinusMinus,
    /// D^{++}_l = det(I_{j-k} - I_{j+k+2}).
    PlusPlus,
    /// D^{+-}_l = det(I_{j-k} - I_{j+k+1}).
    PlusMinus,
    /// D^{-+}_l = det(I_{j-k} + I_{j+k+1}).
    MinusPlus,
}

fn bessel_weight_for(l: usize, order: usize) -> Weight<TruncatedSeries> {
    let window = 2 * l as i64 + 2;
    Weight::new(bessel_weight(window, order), exp_t(order, 1), exp_t(order, -1))
}

/// D-series of the given kind and size, exact to the stated order.
pub fn d_series(kind: DKind, l: usize, order: usize) -> TruncatedSeries {
    let w = bessel_weight_for(l + 1, order);
    match kind {
        DKind::Plain => integral_det(GroupSpec::U(l), &w),
        DKind::MinusMinus => {
            if l == 0 {
                TruncatedSeries::constant(order, rat(1))
            } else {
                // the O^+(2l) formula without its special case at l = 0
                integral_det(GroupSpec::OPlus(2 * l), &w)
            }
        }
        DKind::PlusPlus => integral_det(GroupSpec::Sp(2 * l), &w),
        DKind::PlusMinus => {
            // strip the e^t prefactor from the O^+(2l+1) form
            let v = integral_det(GroupSpec::OPlus(2 * l + 1), &w);
            v.mul(&exp_t(order, -1))
        }
        DKind::MinusPlus => {
            let v = integral_det(GroupSpec::OMinus(2 * l + 1), &w);
            v.mul(&exp_t(order, 1))
        }
    }
}

fn exp_a_t2(order: usize, num: i64, den: i64) -> TruncatedSeries {
    // exp(num/den * t^2)
    let mut arg = TruncatedSeries::zero(order, &rat(0));
    if order >= 2 {
        arg.set_coeff(2, crate::ring::rational::ratio(num, den));
    }
    arg.exp()
}

/// The moment generating series e^{a t^2/2} P_l(t): its t^{2n} coefficient
/// is f_{nl}/(n! n!) for U and UU, and f_{nl}/(2n)! for O, Sp, u.
pub fn moment_series(sym: Symmetry, l: usize, order: usize) -> TruncatedSeries {
    match sym {
        Symmetry::U => d_series(DKind::Plain, l, order),
        Symmetry::UU => {
            if l % 2 == 0 {
                let d = d_series(DKind::Plain, l / 2, order);
                d.mul(&d)
            } else {
                let d0 = d_series(DKind::Plain, l / 2, order);
                let d1 = d_series(DKind::Plain, l / 2 + 1, order);
                d0.mul(&d1)
            }
        }
        Symmetry::Uu => d_series(DKind::Plain, l / 2, order),
        Symmetry::Sp => d_series(DKind::PlusPlus, l / 2, order),
        Symmetry::O => {
            if l == 0 {
                TruncatedSeries::constant(order, rat(1))
            } else if l % 2 == 0 {
                let a = d_series(DKind::MinusMinus, l / 2, order);
                let b = d_series(DKind::PlusPlus, l / 2 - 1, order);
                a.add(&b).div_i64(2)
            } else {
                let a = exp_t(order, 1).mul(&d_series(DKind::PlusMinus, l / 2, order));
                let b = exp_t(order, -1).mul(&d_series(DKind::MinusPlus, l / 2, order));
                a.add(&b).div_i64(2)
            }
        }
        Symmetry::Rot => panic!("use rotation::rotation_series"),
    }
}

/// P_l(t) = e^{-a t^2/2} * moment series.
pub fn p_series(sym: Symmetry, l: usize, order: usize) -> TruncatedSeries {
    let a = sym.a_const() as i64;
    moment_series(sym, l, order).mul(&exp_a_t2(order, -a, 2))
}

/// Extract f_{nl} from the series route; the result of the exact division
/// is asserted to be an integer.
pub fn f_from_series(sym: Symmetry, n: usize, l: usize) -> Rational {
    let order = 2 * n;
    let ms = moment_series(sym, l, order);
    let c = ms.coeff(2 * n).clone();
    match sym {
        Symmetry::U | Symmetry::UU => {
            let f = factorial(n as u64);
            c * &f * &f
        }
        Symmetry::O | Symmetry::Sp | Symmetry::Uu => c * factorial(2 * n as u64),
        Symmetry::Rot => panic!("use rotation::rotation_series"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::f_count;
    use crate::ring::rational::is_nonneg_integer;

    #[test]
    fn d_series_base_cases() {
        // D_0 = 1, D_1 = I_0(2t)
        assert_eq!(d_series(DKind::Plain, 0, 8), TruncatedSeries::constant(8, rat(1)));
        assert_eq!(d_series(DKind::Plain, 1, 8), super::super::bessel::bessel_i(0, 8));
        // 3!^2 [t^6] D_2 = 5  (matches the brute count f_{3,2} = 5)
        let d2 = d_series(DKind::Plain, 2, 6);
        assert_eq!(d2.coeff(6) * factorial(3) * factorial(3), rat(5));
        assert_eq!(d_series(DKind::MinusMinus, 0, 4), TruncatedSeries::constant(4, rat(1)));
    }

    #[test]
    fn moments_match_brute_force_spot() {
        // deeper sweep lives in the acceptance suite
        for (sym, n_max, l_max) in [
            (Symmetry::U, 4usize, 3usize),
            (Symmetry::O, 3, 3),
            (Symmetry::Sp, 3, 3),
            (Symmetry::UU, 3, 3),
            (Symmetry::Uu, 2, 3),
        ] {
            for n in 0..=n_max {
                for l in 1..=l_max {
                    let series = f_from_series(sym, n, l);
                    assert!(is_nonneg_integer(&series));
                    let brute = rat(f_count(sym, n, l) as i64);
                    assert_eq!(series, brute, "sym {:?} n={} l={}", sym, n, l);
                }
            }
        }
    }

    #[test]
    fn exceptional_o_zero() {
        // P^O_0 = e^{-t^2/2}
        let p = p_series(Symmetry::O, 0, 6);
        assert_eq!(p, exp_a_t2(6, -1, 2));
    }

    #[test]
    fn uu_and_u_products() {
        let order = 10;
        // P^UU_{2l} = (P^U_l)^2 and P^u_{2l} = P^U_l
        for l in 1..=3usize {
            let pu = p_series(Symmetry::U, l, order);
            assert_eq!(p_series(Symmetry::UU, 2 * l, order), pu.mul(&pu));
            assert_eq!(p_series(Symmetry::Uu, 2 * l, order), pu);
            let pu1 = p_series(Symmetry::U, l + 1, order);
            assert_eq!(p_series(Symmetry::UU, 2 * l + 1, order), pu.mul(&pu1));
        }
    }

    #[test]
    fn odd_moment_vanishing() {
        // E exp(t Tr U) over O(l) has even series: odd coefficients vanish
        for l in 1..=4usize {
            let m = moment_series(Symmetry::O, l, 9);
            for k in (1..=9).step_by(2) {
                assert!(m.coeff(k).is_zero(), "l={} k={}", l, k);
            }
        }
    }
}
