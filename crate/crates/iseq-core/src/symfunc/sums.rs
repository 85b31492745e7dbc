//! Restricted Schur sums: direct summation over the constrained partition
//! family, exact in the quotient ring.

use super::basis::HBasis;
use crate::combinat::Partition;
use crate::ring::multipoly::MultiPoly;
use crate::ring::Ring;
use alloc::vec::Vec;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SumVariant {
    /// sum over len(la) <= l of s_la(A) s_la(B)
    PairSum,
    /// sum over len(la) <= l of s_{2 la}(A)   (doubled parts)
    DoubledParts,
    /// sum over len(la) <= l of s_{la^2}(A)   (parts repeated twice)
    RepeatedParts,
    /// sum over len(la) <= l of alpha^{f(la)} s_la(A)
    AlphaOddParts,
    /// sum over len(la) <= l of beta^{f(la')} s_la(A)
    BetaOddCols,
    /// sum over len(la) <= l of s_la(A)
    All,
    /// sum over la'_2 <= l of alpha^{f(la)} s_la(A)
    ColBoundAlpha,
    /// sum over la'_2 <= l <= la'_1 of alpha^{2 la'_1 - l - f(la)} s_la(A)
    ColBoundAlphaSigned,
    /// sum over len(la) <= l of s~_la(A) s~_la(B)
    TildePair,
    /// sum over len(la) <= l of s~_{2 la^2}(A)
    TildeRepeated,
    /// sum over len(la) <= l of alpha^{f/2} beta^{f'/2} s~_la(A)
    TildeAlphaBeta,
    /// sum over la'_2 <= l of alpha^{f/2} beta^{f'/2} s~_la(A)
    TildeColBound,
}

pub struct SumInputs<'a> {
    pub a: &'a HBasis,
    pub b: Option<&'a HBasis>,
    pub alpha: Option<&'a MultiPoly>,
    pub beta: Option<&'a MultiPoly>,
}

impl<'a> SumInputs<'a> {
    pub fn single(a: &'a HBasis) -> Self {
        SumInputs {
            a,
            b: None,
            alpha: None,
            beta: None,
        }
    }

    pub fn pair(a: &'a HBasis, b: &'a HBasis) -> Self {
        SumInputs {
            a,
            b: Some(b),
            alpha: None,
            beta: None,
        }
    }

    pub fn with_alpha(mut self, alpha: &'a MultiPoly) -> Self {
        self.alpha = Some(alpha);
        self
    }

    pub fn with_beta(mut self, beta: &'a MultiPoly) -> Self {
        self.beta = Some(beta);
        self
    }
}

fn pow_param(w: &MultiPoly, e: usize) -> MultiPoly {
    w.pow(e as u64)
}

/// Direct summation over all partitions satisfying the variant constraint
/// whose term can contribute at or below the degree cap.
pub fn schur_sum(variant: SumVariant, l: usize, inp: &SumInputs<'_>) -> MultiPoly {
    let cap = inp.a.max_degree();
    let ctx = inp.a.ctx();
    let mut acc = MultiPoly::zero(ctx);
    // contributing degree per unit of |la| differs per variant
    let max_size = match variant {
        SumVariant::PairSum => cap / 2,
        SumVariant::DoubledParts | SumVariant::RepeatedParts => cap / 2,
        SumVariant::TildePair => cap,
        SumVariant::TildeRepeated => cap / 2,
        SumVariant::TildeAlphaBeta | SumVariant::TildeColBound => 2 * cap,
        _ => cap,
    };
    for la in Partition::all_up_to(max_size) {
        let term = match variant {
            SumVariant::PairSum => {
                if la.len() > l {
                    continue;
                }
                let b = inp.b.expect("pair sum needs a second alphabet");
                inp.a.schur(&la).mul(&b.schur(&la))
            }
            SumVariant::DoubledParts => {
                if la.len() > l {
                    continue;
                }
                inp.a.schur(&la.doubled())
            }
            SumVariant::RepeatedParts => {
                if la.len() > l {
                    continue;
                }
                inp.a.schur(&la.squared())
            }
            SumVariant::AlphaOddParts => {
                if la.len() > l {
                    continue;
                }
                let alpha = inp.alpha.expect("alpha weight required");
                inp.a.schur(&la).mul(&pow_param(alpha, la.odd_parts()))
            }
            SumVariant::BetaOddCols => {
                if la.len() > l {
                    continue;
                }
                let beta = inp.beta.expect("beta weight required");
                inp.a
                    .schur(&la)
                    .mul(&pow_param(beta, la.conjugate().odd_parts()))
            }
            SumVariant::All => {
                if la.len() > l {
                    continue;
                }
                inp.a.schur(&la)
            }
            SumVariant::ColBoundAlpha => {
                let conj = la.conjugate();
                if conj.part(1) > l {
                    continue;
                }
                let alpha = inp.alpha.expect("alpha weight required");
                inp.a.schur(&la).mul(&pow_param(alpha, la.odd_parts()))
            }
            SumVariant::ColBoundAlphaSigned => {
                let conj = la.conjugate();
                if conj.part(1) > l || conj.part(0) < l {
                    continue;
                }
                let alpha = inp.alpha.expect("alpha weight required");
                let e = 2 * conj.part(0) - l - la.odd_parts();
                inp.a.schur(&la).mul(&pow_param(alpha, e))
            }
            SumVariant::TildePair => {
                if la.len() > l {
                    continue;
                }
                let s = inp.a.schur_tilde(&la);
                if s.is_zero() {
                    continue;
                }
                let b = inp.b.expect("pair sum needs a second alphabet");
                s.mul(&b.schur_tilde(&la))
            }
            SumVariant::TildeRepeated => {
                if la.len() > l {
                    continue;
                }
                inp.a.schur_tilde(&la.squared().doubled())
            }
            SumVariant::TildeAlphaBeta | SumVariant::TildeColBound => {
                if let SumVariant::TildeAlphaBeta = variant {
                    if la.len() > l {
                        continue;
                    }
                } else if la.conjugate().part(1) > l {
                    continue;
                }
                if !la.has_trivial_two_core() {
                    continue;
                }
                let alpha = inp.alpha.expect("alpha weight required");
                let beta = inp.beta.expect("beta weight required");
                let f = la.odd_parts();
                let fc = la.conjugate().odd_parts();
                debug_assert!(f % 2 == 0 && fc % 2 == 0);
                inp.a
                    .schur_tilde(&la)
                    .mul(&pow_param(alpha, f / 2))
                    .mul(&pow_param(beta, fc / 2))
            }
        };
        acc = acc.add(&term);
    }
    acc
}

/// All partitions with at most `l` parts and size at most `d`.
pub fn partitions_bounded_length(l: usize, d: usize) -> Vec<Partition> {
    Partition::all_up_to(d)
        .into_iter()
        .filter(|la| la.len() <= l)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::multipoly::{MultiPoly, VarClass, VarSet};
    use crate::symfunc::basis::{standard_ctx, Alphabet, HBasis};

    #[test]
    fn l_zero_is_one() {
        let (ctx, a) = standard_ctx(2, 0, 5);
        let b = HBasis::new(&ctx, a, 5);
        let s = schur_sum(SumVariant::All, 0, &SumInputs::single(&b));
        assert_eq!(s, MultiPoly::one(&ctx));
    }

    #[test]
    fn alpha_degree_one_term() {
        // at degree 1 the alpha-weighted sum is alpha * s_(1)
        let ctx = VarSet::new(
            &[("x1", VarClass::Main), ("a", VarClass::Param)],
            1,
            1,
        );
        let basis = HBasis::new(&ctx, Alphabet::ordinary(alloc::vec![0]), 1);
        let alpha = MultiPoly::var_named(&ctx, "a");
        let s = schur_sum(
            SumVariant::AlphaOddParts,
            1,
            &SumInputs::single(&basis).with_alpha(&alpha),
        );
        // 1 + alpha x1 at this cap
        let expect = MultiPoly::one(&ctx).add(&alpha.mul(&MultiPoly::var_named(&ctx, "x1")));
        assert_eq!(s, expect);
    }

    #[test]
    fn tilde_repeated_is_square_sum() {
        // sum s~_{2 la^2} = sum s_la^2 over the same length bound
        let (ctx, a) = standard_ctx(2, 0, 6);
        let b = HBasis::new(&ctx, a, 6);
        for l in 0..=2usize {
            let lhs = schur_sum(SumVariant::TildeRepeated, l, &SumInputs::single(&b));
            let mut rhs = MultiPoly::zero(&ctx);
            for la in partitions_bounded_length(l, 3) {
                let s = b.schur(&la);
                rhs = rhs.add(&s.mul(&s));
            }
            assert_eq!(lhs, rhs, "l = {}", l);
        }
    }
}
