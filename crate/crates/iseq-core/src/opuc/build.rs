//! Gram-Schmidt construction of the monic orthogonal polynomials.

use crate::ring::laurent::Laurent;
use crate::ring::{horner, reverse_poly, Ring};
use alloc::vec::Vec;
use alloc::{format, string::String, vec};

#[derive(Clone, Debug)]
pub struct DegeneracyError {
    pub degree: usize,
    pub message: String,
}

/// Monic orthogonal polynomials pi_0..pi_L with norms N_j = (pi_j, pi_j).
#[derive(Clone, Debug)]
pub struct OpucData<R: Ring> {
    pi: Vec<Vec<R>>,
    norms: Vec<R>,
}

impl<R: Ring> OpucData<R> {
    pub fn max_degree(&self) -> usize {
        self.pi.len() - 1
    }

    /// Coefficient list of pi_l (constant first, leading 1 last).
    pub fn pi(&self, l: usize) -> &[R] {
        &self.pi[l]
    }

    /// Reversed polynomial pi*_l(z) = z^l pi_l(1/z).
    pub fn pi_star(&self, l: usize) -> Vec<R> {
        reverse_poly(&self.pi[l])
    }

    pub fn norm(&self, l: usize) -> &R {
        &self.norms[l]
    }

    /// The reflection value pi_l(0).
    pub fn at_zero(&self, l: usize) -> &R {
        &self.pi[l][0]
    }

    pub fn eval(&self, l: usize, x: &R) -> R {
        horner(&self.pi[l], x)
    }

    pub fn eval_star(&self, l: usize, x: &R) -> R {
        horner(&self.pi_star(l), x)
    }
}

/// Inner product (p, q) = sum p_a q_b c_{b-a}.
pub fn inner_product<R: Ring>(moments: &Laurent<R>, p: &[R], q: &[R]) -> R {
    let proto = moments.get(0).zero_like();
    let mut acc = proto;
    for (a, pa) in p.iter().enumerate() {
        if pa.is_zero() {
            continue;
        }
        for (b, qb) in q.iter().enumerate() {
            if qb.is_zero() {
                continue;
            }
            acc.add_assign(&pa.mul(qb).mul(moments.get(b as i64 - a as i64)));
        }
    }
    acc
}

/// Build pi_0..pi_max by exact Gram-Schmidt over the coefficient ring.
/// Fails with the first degree whose norm is not invertible.
pub fn opuc_build<R: Ring>(
    moments: &Laurent<R>,
    max: usize,
) -> Result<OpucData<R>, DegeneracyError> {
    assert!(
        moments.window() >= max as i64,
        "moment window too small for the requested degree"
    );
    let proto = moments.get(0).zero_like();
    let one = proto.one_like();
    let mut pi: Vec<Vec<R>> = Vec::with_capacity(max + 1);
    let mut norms: Vec<R> = Vec::with_capacity(max + 1);
    let mut norm_invs: Vec<R> = Vec::new();
    for l in 0..=max {
        let mut coeffs = vec![proto.clone(); l + 1];
        coeffs[l] = one.clone();
        // z^l minus its projections
        for j in 0..l {
            let mut zl = vec![proto.clone(); l + 1];
            zl[l] = one.clone();
            let overlap = inner_product(moments, &pi[j], &zl);
            if overlap.is_zero() {
                continue;
            }
            let factor = overlap.mul(&norm_invs[j]);
            for (c, pc) in coeffs.iter_mut().zip(pi[j].iter()) {
                c.sub_assign(&factor.mul(pc));
            }
        }
        let n = inner_product(moments, &coeffs, &coeffs);
        let n_inv = n.try_inverse().ok_or_else(|| DegeneracyError {
            degree: l,
            message: format!("norm at degree {} is not invertible", l),
        })?;
        pi.push(coeffs);
        norms.push(n);
        norm_invs.push(n_inv);
    }
    Ok(OpucData { pi, norms })
}
