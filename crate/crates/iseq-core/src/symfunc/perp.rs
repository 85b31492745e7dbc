//! The skew operators E-perp(alpha) and H-perp(beta) on Schur expansions:
//! vertical- and horizontal-strip removal with weight per removed cell.
//!
//! On generators they are the substitutions h_m -> h_m + alpha h_{m-1}
//! (equivalently, adjoining alpha as a super variable) and
//! h_m -> sum_j beta^j h_{m-j} (adjoining beta as an ordinary variable).

use super::basis::HBasis;
use crate::combinat::Partition;
use crate::ring::multipoly::MultiPoly;
use crate::ring::Ring;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// A finite formal combination of Schur functions with polynomial weights.
pub type SchurExpansion = BTreeMap<Partition, MultiPoly>;

pub fn expansion_of(la: &Partition, one: &MultiPoly) -> SchurExpansion {
    let mut m = SchurExpansion::new();
    m.insert(la.clone(), one.one_like());
    m
}

fn add_to(exp: &mut SchurExpansion, la: Partition, c: MultiPoly) {
    let cur = exp.remove(&la);
    let v = match cur {
        Some(old) => old.add(&c),
        None => c,
    };
    if !v.is_zero() {
        exp.insert(la, v);
    }
}

/// Sub-partitions mu with la/mu a vertical strip (at most one cell per row).
fn vertical_strip_preds(la: &Partition) -> Vec<Partition> {
    let n = la.len();
    let mut out = Vec::new();
    let mut choice = alloc::vec![0usize; n];
    loop {
        let parts: Vec<usize> = (0..n).map(|i| la.part(i) - choice[i]).collect();
        if parts.windows(2).all(|ab| ab[0] >= ab[1]) {
            out.push(Partition::new(parts));
        }
        // increment binary odometer
        let mut i = 0;
        while i < n {
            if choice[i] == 0 && la.part(i) >= 1 {
                choice[i] = 1;
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    out
}

/// Sub-partitions mu with la/mu a horizontal strip (interlacing).
fn horizontal_strip_preds(la: &Partition) -> Vec<Partition> {
    let n = la.len();
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(la: &Partition, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == la.len() {
            out.push(Partition::new(cur.clone()));
            return;
        }
        let lo = la.part(i + 1);
        let hi = la.part(i);
        for m in lo..=hi {
            cur.push(m);
            rec(la, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(la, 0, &mut cur, &mut out);
    let _ = n;
    out
}

/// E-perp(alpha): sum over vertical-strip removals weighted by
/// alpha^{cells removed}.
pub fn e_perp(alpha: &MultiPoly, exp: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    for (la, c) in exp {
        for mu in vertical_strip_preds(la) {
            let k = la.size() - mu.size();
            add_to(&mut out, mu, c.mul(&alpha.pow(k as u64)));
        }
    }
    out
}

/// H-perp(beta): sum over horizontal-strip removals weighted by
/// beta^{cells removed}.
pub fn h_perp(beta: &MultiPoly, exp: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    for (la, c) in exp {
        for mu in horizontal_strip_preds(la) {
            let k = la.size() - mu.size();
            add_to(&mut out, mu, c.mul(&beta.pow(k as u64)));
        }
    }
    out
}

/// Evaluate an expansion in an alphabet.
pub fn eval_expansion(exp: &SchurExpansion, basis: &HBasis) -> MultiPoly {
    let mut acc = MultiPoly::zero(basis.ctx());
    for (la, c) in exp {
        acc = acc.add(&basis.schur(la).mul(c));
    }
    acc
}
