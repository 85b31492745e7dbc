//! The rotation ensemble's block-determinant generating function.
//!
//! sum_n f_{n,L} t^{2n}/(2n)! is a block determinant with an upper block of
//! entries t^{j-i}/(j-i)! (floor(L/2) rows) and a lower block of entries
//! (-t)^{l+i-j}/(l+i-j)! with l = floor(L/2) (ceil(L/2) rows), L columns;
//! negative factorial arguments give zero entries.  The printed denominator
//! in the source identity reads (j-1)!; the exponent forces (j-i)!, which is
//! what is implemented and what the brute-force counts validate.

use crate::ring::matrix::RingMatrix;
use crate::ring::rational::{factorial, rat, Rational};
use crate::ring::series::TruncatedSeries;

fn t_pow_over_factorial(order: usize, e: i64, negate: bool) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order, &rat(0));
    if e >= 0 && (e as usize) <= order {
        let mut c: Rational = factorial(e as u64).recip();
        if negate && e % 2 == 1 {
            c = -c;
        }
        s.set_coeff(e as usize, c);
    }
    s
}

/// The generating series sum_n f_{n,bound} t^{2n}/(2n)! for the rotation
/// ensemble with increasing-subsequence bound `bound`.
pub fn rotation_series(bound: usize, order: usize) -> TruncatedSeries {
    let rows_top = bound / 2;
    let rows_bot = bound - rows_top;
    let l = rows_top as i64;
    let proto = TruncatedSeries::zero(order, &rat(0));
    let m = RingMatrix::from_fn(bound, bound, &proto, |r, j| {
        if r < rows_top {
            let i = r as i64;
            t_pow_over_factorial(order, j as i64 - i, false)
        } else {
            let i = (r - rows_top) as i64;
            t_pow_over_factorial(order, l + i - j as i64, true)
        }
    });
    let _ = rows_bot;
    m.det_with_proto(&proto)
}

/// f_{n,bound} for the rotation ensemble, from the determinant route.
pub fn rotation_f(n: usize, bound: usize) -> Rational {
    let s = rotation_series(bound, 2 * n);
    s.coeff(2 * n) * factorial(2 * n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{f_count, Symmetry};
    use crate::ring::rational::is_nonneg_integer;
    use crate::ring::Ring;

    #[test]
    fn constant_term_one() {
        for bound in 0..=5 {
            assert_eq!(rotation_series(bound, 4).coeff(0), &rat(1));
        }
    }

    #[test]
    fn matches_brute_force() {
        for n in 0..=2usize {
            for bound in 0..=4usize {
                let brute = rat(f_count(Symmetry::Rot, n, bound) as i64);
                let det = rotation_f(n, bound);
                assert!(is_nonneg_integer(&det));
                assert_eq!(det, brute, "n={} bound={}", n, bound);
            }
        }
    }

    #[test]
    fn erdos_szekeres_vanishing() {
        // f_{n,bound} = 0 for n > bound^2
        for bound in 0..=2usize {
            for n in (bound * bound + 1)..=(bound * bound + 2) {
                let s = rotation_series(bound, 2 * n);
                assert!(s.coeff(2 * n).is_zero(), "n={} bound={}", n, bound);
            }
        }
    }
}
