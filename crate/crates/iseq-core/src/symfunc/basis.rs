//! Complete/elementary bases and Schur functions over a (super) alphabet.
//!
//! An alphabet is a set of variable indices split into an ordinary part `xs`
//! and a super part `ys`; the super complete functions are defined through
//! H(u; x/y) = H(u; x) E(u; y), so specializing `ys` empty recovers the
//! ordinary functions.  Schur functions come from the Jacobi-Trudi
//! determinant (or its dual, whichever matrix is smaller).

use crate::combinat::Partition;
use crate::ring::matrix::RingMatrix;
use crate::ring::multipoly::{MultiPoly, VarSet};
use crate::ring::rational::{rat, Rational};
use crate::ring::Ring;
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{vec, format};

#[derive(Clone, Debug)]
pub struct Alphabet {
    pub xs: Vec<usize>,
    pub ys: Vec<usize>,
}

impl Alphabet {
    pub fn ordinary(xs: Vec<usize>) -> Self {
        Alphabet { xs, ys: Vec::new() }
    }

    pub fn swapped(&self) -> Self {
        Alphabet {
            xs: self.ys.clone(),
            ys: self.xs.clone(),
        }
    }
}

/// Cached h- and e-tables for one alphabet, to a fixed maximum degree.
pub struct HBasis {
    ctx: Arc<VarSet>,
    alphabet: Alphabet,
    h: Vec<MultiPoly>,
    e: Vec<MultiPoly>,
}

fn complete_table(ctx: &Arc<VarSet>, vars: &[usize], max: usize) -> Vec<MultiPoly> {
    // H with one more variable v: h'_k = h_k + v h'_{k-1}
    let mut h = vec![MultiPoly::zero(ctx); max + 1];
    h[0] = MultiPoly::one(ctx);
    for &v in vars {
        let xv = MultiPoly::var(ctx, v);
        for k in 1..=max {
            let add = h[k - 1].mul(&xv);
            h[k] = h[k].add(&add);
        }
    }
    h
}

fn elementary_table(ctx: &Arc<VarSet>, vars: &[usize], max: usize) -> Vec<MultiPoly> {
    // E with one more variable v: e'_k = e_k + v e_{k-1}, updated downward
    let mut e = vec![MultiPoly::zero(ctx); max + 1];
    e[0] = MultiPoly::one(ctx);
    for &v in vars {
        let xv = MultiPoly::var(ctx, v);
        for k in (1..=max).rev() {
            let add = e[k - 1].mul(&xv);
            e[k] = e[k].add(&add);
        }
    }
    e
}

impl HBasis {
    pub fn new(ctx: &Arc<VarSet>, alphabet: Alphabet, max: usize) -> Self {
        let hx = complete_table(ctx, &alphabet.xs, max);
        let ey = elementary_table(ctx, &alphabet.ys, max);
        let h: Vec<MultiPoly> = (0..=max)
            .map(|m| {
                let mut acc = MultiPoly::zero(ctx);
                for a in 0..=m {
                    acc = acc.add(&hx[a].mul(&ey[m - a]));
                }
                acc
            })
            .collect();
        // e_m(x/y) = h_m(y/x)
        let hy = complete_table(ctx, &alphabet.ys, max);
        let ex = elementary_table(ctx, &alphabet.xs, max);
        let e: Vec<MultiPoly> = (0..=max)
            .map(|m| {
                let mut acc = MultiPoly::zero(ctx);
                for a in 0..=m {
                    acc = acc.add(&hy[a].mul(&ex[m - a]));
                }
                acc
            })
            .collect();
        HBasis {
            ctx: ctx.clone(),
            alphabet,
            h,
            e,
        }
    }

    pub fn ctx(&self) -> &Arc<VarSet> {
        &self.ctx
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn max_degree(&self) -> usize {
        self.h.len() - 1
    }

    /// h_j, with h_j = 0 for j < 0.
    pub fn h(&self, j: i64) -> MultiPoly {
        if j < 0 || j as usize >= self.h.len() {
            MultiPoly::zero(&self.ctx)
        } else {
            self.h[j as usize].clone()
        }
    }

    pub fn e(&self, j: i64) -> MultiPoly {
        if j < 0 || j as usize >= self.e.len() {
            MultiPoly::zero(&self.ctx)
        } else {
            self.e[j as usize].clone()
        }
    }

    /// H(s; A) for s = +-1: sum_m s^m h_m, exact in the quotient ring.
    pub fn h_at_sign(&self, s: i64) -> MultiPoly {
        let mut acc = MultiPoly::zero(&self.ctx);
        for (m, hm) in self.h.iter().enumerate() {
            if s == 1 || m % 2 == 0 {
                acc = acc.add(hm);
            } else {
                acc = acc.sub(hm);
            }
        }
        acc
    }

    /// E(s; A) for s = +-1.
    pub fn e_at_sign(&self, s: i64) -> MultiPoly {
        let mut acc = MultiPoly::zero(&self.ctx);
        for (m, em) in self.e.iter().enumerate() {
            if s == 1 || m % 2 == 0 {
                acc = acc.add(em);
            } else {
                acc = acc.sub(em);
            }
        }
        acc
    }

    /// H(w; A) = sum_m h_m w^m for a polynomial weight w (e.g. a formal
    /// parameter variable).
    pub fn h_at(&self, w: &MultiPoly) -> MultiPoly {
        let mut acc = MultiPoly::zero(&self.ctx);
        let mut pw = MultiPoly::one(&self.ctx);
        for hm in &self.h {
            acc = acc.add(&hm.mul(&pw));
            pw = pw.mul(w);
            if pw.is_zero() {
                break;
            }
        }
        acc
    }

    /// E(w; A) = sum_m e_m w^m.
    pub fn e_at(&self, w: &MultiPoly) -> MultiPoly {
        let mut acc = MultiPoly::zero(&self.ctx);
        let mut pw = MultiPoly::one(&self.ctx);
        for em in &self.e {
            acc = acc.add(&em.mul(&pw));
            pw = pw.mul(w);
            if pw.is_zero() {
                break;
            }
        }
        acc
    }

    /// Schur function by the Jacobi-Trudi determinant (dual form when the
    /// conjugate matrix is smaller).
    pub fn schur(&self, la: &Partition) -> MultiPoly {
        if la.is_empty() {
            return MultiPoly::one(&self.ctx);
        }
        let rows = la.len();
        let cols = la.part(0);
        let proto = MultiPoly::zero(&self.ctx);
        if rows <= cols {
            let m = RingMatrix::from_fn(rows, rows, &proto, |i, j| {
                self.h(la.part(i) as i64 - i as i64 + j as i64)
            });
            m.det_with_proto(&proto)
        } else {
            let conj = la.conjugate();
            let m = RingMatrix::from_fn(cols, cols, &proto, |i, j| {
                self.e(conj.part(i) as i64 - i as i64 + j as i64)
            });
            m.det_with_proto(&proto)
        }
    }

    /// The domino Schur function: product of the Schur functions of the
    /// 2-quotient when the 2-core is trivial, zero otherwise.
    pub fn schur_tilde(&self, la: &Partition) -> MultiPoly {
        if !la.has_trivial_two_core() {
            return MultiPoly::zero(&self.ctx);
        }
        let (q0, q1) = la.two_quotient();
        self.schur(&q0).mul(&self.schur(&q1))
    }

    /// The same function through the halving homomorphism phi_2 with
    /// h_{2n} -> h_n, h_{2n+1} -> 0, and the sign (-1)^{f(lambda)/2}.
    pub fn schur_tilde_phi2(&self, la: &Partition) -> MultiPoly {
        if la.is_empty() {
            return MultiPoly::one(&self.ctx);
        }
        let rows = la.len();
        let proto = MultiPoly::zero(&self.ctx);
        let m = RingMatrix::from_fn(rows, rows, &proto, |i, j| {
            let idx = la.part(i) as i64 - i as i64 + j as i64;
            if idx < 0 || idx % 2 != 0 {
                MultiPoly::zero(&self.ctx)
            } else {
                self.h(idx / 2)
            }
        });
        let d = m.det_with_proto(&proto);
        let f = la.odd_parts();
        if f % 2 != 0 {
            // odd f forces a nontrivial 2-core; the determinant vanishes
            return d;
        }
        if (f / 2) % 2 == 1 {
            d.neg()
        } else {
            d
        }
    }
}

/// Monomial-expansion oracle for ordinary Schur functions: sum over
/// semistandard tableaux of shape lambda with entries in the alphabet.
pub fn schur_tableau_oracle(ctx: &Arc<VarSet>, xs: &[usize], la: &Partition) -> MultiPoly {
    let mut acc = MultiPoly::zero(ctx);
    if la.is_empty() {
        return MultiPoly::one(ctx);
    }
    if la.len() > xs.len() {
        return acc;
    }
    let shape: Vec<usize> = la.parts().to_vec();
    let mut filling: Vec<Vec<usize>> = shape.iter().map(|&r| vec![0; r]).collect();
    fn rec(
        shape: &[usize],
        filling: &mut Vec<Vec<usize>>,
        xs: &[usize],
        row: usize,
        col: usize,
        ctx: &Arc<VarSet>,
        acc: &mut MultiPoly,
    ) {
        if row == shape.len() {
            let mut mono = vec![0u16; ctx.len()];
            for r in filling.iter() {
                for &v in r {
                    mono[xs[v]] += 1;
                }
            }
            acc.add_term(&mono, Rational::from(rat(1)));
            return;
        }
        let (nr, nc) = if col + 1 < shape[row] {
            (row, col + 1)
        } else {
            (row + 1, 0)
        };
        let lo = {
            let mut lo = 0usize;
            if col > 0 {
                lo = lo.max(filling[row][col - 1]); // weakly increasing rows
            }
            if row > 0 && col < shape[row - 1] {
                lo = lo.max(filling[row - 1][col] + 1); // strictly increasing columns
            }
            lo
        };
        for v in lo..xs.len() {
            filling[row][col] = v;
            rec(shape, filling, xs, nr, nc, ctx, acc);
        }
    }
    rec(&shape, &mut filling, xs, 0, 0, ctx, &mut acc);
    acc
}

/// Convenience: a fresh main-class context named x1..xk (plus y1..ym super
/// slots) with the given degree cap.
pub fn standard_ctx(k: usize, m: usize, cap: usize) -> (Arc<VarSet>, Alphabet) {
    let mut names: Vec<alloc::string::String> = Vec::new();
    for i in 1..=k {
        names.push(format!("x{}", i));
    }
    for i in 1..=m {
        names.push(format!("y{}", i));
    }
    let refs: Vec<(&str, crate::ring::multipoly::VarClass)> = names
        .iter()
        .map(|n| (n.as_str(), crate::ring::multipoly::VarClass::Main))
        .collect();
    let ctx = VarSet::new(&refs, cap, 0);
    let alphabet = Alphabet {
        xs: (0..k).collect(),
        ys: (k..k + m).collect(),
    };
    (ctx, alphabet)
}
