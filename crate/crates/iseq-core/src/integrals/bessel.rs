//! Modified Bessel coefficients of the exponential circle weight.
//!
//! I_j(2t) is the coefficient of z^j in exp(t(z + 1/z)):
//! I_j(2t) = sum_m t^m/m! * t^{j+m}/(j+m)!, with I_{-j} = I_j.

use crate::ring::laurent::Laurent;
use crate::ring::rational::{factorial, rat, Rational};
use crate::ring::series::TruncatedSeries;
use num_traits::One;

/// I_j(2t) as an exact truncated series of the given order.
pub fn bessel_i(j: i64, order: usize) -> TruncatedSeries {
    let j = j.unsigned_abs();
    let mut s = TruncatedSeries::zero(order, &rat(0));
    let mut m = 0u64;
    loop {
        let deg = j + 2 * m;
        if deg as usize > order {
            break;
        }
        let c = (factorial(m) * factorial(j + m)).recip();
        s.set_coeff(deg as usize, c);
        m += 1;
    }
    s
}

/// The two-sided exponential weight exp(t(z + 1/z)) as a Laurent window of
/// truncated series: entry j is I_j(2t).
pub fn bessel_weight(window: i64, order: usize) -> Laurent<TruncatedSeries> {
    let proto = TruncatedSeries::zero(order, &rat(0));
    let mut l = Laurent::zero(window, &proto);
    for j in -window..=window {
        l.set(j, bessel_i(j, order));
    }
    l
}

/// exp(t) and exp(-t) evaluated as series: the values g(1), g(-1) for the
/// one-sided symbol g(z) = exp(t z).
pub fn exp_t(order: usize, sign: i64) -> TruncatedSeries {
    let mut one = TruncatedSeries::zero(order, &Rational::one());
    one.set_coeff(0, Rational::one());
    let mut arg = TruncatedSeries::zero(order, &rat(0));
    if order >= 1 {
        arg.set_coeff(1, rat(sign));
    }
    arg.exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::ratio;
    use crate::ring::Ring;

    #[test]
    fn bessel_small_coefficients() {
        // I_0(2t) = 1 + t^2 + t^4/4 + ...
        let i0 = bessel_i(0, 6);
        assert_eq!(i0.coeff(0), &rat(1));
        assert_eq!(i0.coeff(2), &rat(1));
        assert_eq!(i0.coeff(4), &ratio(1, 4));
        assert_eq!(i0.coeff(6), &ratio(1, 36));
        // [t] I_1(2t) = 1
        let i1 = bessel_i(1, 5);
        assert_eq!(i1.coeff(1), &rat(1));
        assert_eq!(i1.coeff(3), &ratio(1, 2));
        // symmetry
        assert_eq!(bessel_i(-2, 8), bessel_i(2, 8));
    }

    #[test]
    fn weight_is_exp_product() {
        // exp(tz) * exp(t/z) has z^j coefficient I_j(2t); check by direct
        // Laurent multiplication of the truncated one-sided factors
        let order = 8;
        let w: i64 = 10;
        let proto = TruncatedSeries::zero(order, &rat(0));
        let mut ez = Laurent::zero(w, &proto);
        let mut einv = Laurent::zero(w, &proto);
        for k in 0..=w {
            let mut c = TruncatedSeries::zero(order, &rat(0));
            if (k as usize) <= order {
                c.set_coeff(k as usize, factorial(k as u64).recip());
            }
            ez.set(k, c.clone());
            einv.set(-k, c);
        }
        let prod = ez.mul(&einv);
        for j in -2..=2i64 {
            assert_eq!(prod.get(j), &bessel_i(j, order), "coefficient {}", j);
        }
    }
}
