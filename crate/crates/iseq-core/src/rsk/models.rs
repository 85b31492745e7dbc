//! The five random-multiset models: each assigns independent multiplicities
//! to (orbits of) grid cells with geometric / Bernoulli / parity-geometric
//! weights, and the normalized probability that the general increasing
//! subsequence length stays at most l equals a restricted Schur sum in the
//! model's super alphabet.
//!
//! All comparisons are between exact polynomial truncations: the left side
//! enumerates every admissible multiset whose weight survives the degree
//! caps, the right side is the corresponding `schur_sum`.

use super::multiset::{lis_general, Letters, WeightedMultiset};
use crate::opuc::Check;
use crate::ring::multipoly::{MultiPoly, VarClass, VarSet};
use crate::ring::Ring;
use crate::symfunc::basis::{Alphabet, HBasis};
use crate::symfunc::sums::{schur_sum, SumInputs, SumVariant};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

#[derive(Clone, Debug)]
pub enum SlotWeight {
    /// multiplicity w >= 0, weight m^w
    Geometric(MultiPoly),
    /// multiplicity w <= 1, weight m^w
    Bernoulli(MultiPoly),
    /// multiplicity w >= 0, weight parity^{w mod 2} m^w
    GeometricParity(MultiPoly, MultiPoly),
}

#[derive(Clone, Debug)]
pub struct Slot {
    pub cells: Vec<(i64, i64)>,
    pub weight: SlotWeight,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModelKind {
    U,
    UU,
    O,
    S,
    SmallU,
}

impl ModelKind {
    pub fn tag(self) -> &'static str {
        match self {
            ModelKind::U => "U",
            ModelKind::UU => "UU",
            ModelKind::O => "O",
            ModelKind::S => "S",
            ModelKind::SmallU => "u",
        }
    }
}

pub struct DistModel {
    pub kind: ModelKind,
    pub ctx: Arc<VarSet>,
    pub slots: Vec<Slot>,
    pub w1: Letters,
    pub w2: Letters,
    pub z: MultiPoly,
    basis_a: HBasis,
    basis_b: Option<HBasis>,
    alpha: Option<MultiPoly>,
    beta: Option<MultiPoly>,
}

fn slot_weights(weight: &SlotWeight) -> Vec<(usize, MultiPoly)> {
    // all (multiplicity, weight) pairs with nonzero weight in the quotient
    let mut out = Vec::new();
    match weight {
        SlotWeight::Geometric(m) => {
            let mut w = 0usize;
            let mut pw = m.one_like();
            while !pw.is_zero() {
                out.push((w, pw.clone()));
                pw = pw.mul(m);
                w += 1;
            }
        }
        SlotWeight::Bernoulli(m) => {
            out.push((0, m.one_like()));
            if !m.is_zero() {
                out.push((1, m.clone()));
            }
        }
        SlotWeight::GeometricParity(parity, m) => {
            let mut w = 0usize;
            let mut pw = m.one_like();
            loop {
                let weight = if w % 2 == 1 { pw.mul(parity) } else { pw.clone() };
                if weight.is_zero() && pw.is_zero() {
                    break;
                }
                if !weight.is_zero() {
                    out.push((w, weight));
                } else if pw.is_zero() {
                    break;
                }
                pw = pw.mul(m);
                w += 1;
            }
        }
    }
    out
}

impl DistModel {
    /// Sum of weights over admissible multisets with lis <= l.
    pub fn lhs(&self, l: usize) -> MultiPoly {
        let mut acc = MultiPoly::zero(&self.ctx);
        let tables: Vec<Vec<(usize, MultiPoly)>> =
            self.slots.iter().map(|s| slot_weights(&s.weight)).collect();
        let mut stack_m = WeightedMultiset::new();
        self.enumerate(0, &tables, &mut stack_m, &MultiPoly::one(&self.ctx), l, &mut acc);
        acc
    }

    fn enumerate(
        &self,
        idx: usize,
        tables: &[Vec<(usize, MultiPoly)>],
        m: &mut WeightedMultiset,
        weight: &MultiPoly,
        l: usize,
        acc: &mut MultiPoly,
    ) {
        if idx == self.slots.len() {
            if lis_general(m, &self.w1, &self.w2) <= l {
                acc.add_assign(weight);
            }
            return;
        }
        for (mult, w) in &tables[idx] {
            let total = weight.mul(w);
            if total.is_zero() {
                continue;
            }
            let mut next = m.clone();
            for &(i, j) in &self.slots[idx].cells {
                next.add(i, j, *mult);
            }
            self.enumerate(idx + 1, tables, &mut next, &total, l, acc);
        }
    }

    /// The Schur-sum route for the same probability ratio.
    pub fn rhs(&self, l: usize) -> MultiPoly {
        match self.kind {
            ModelKind::U => schur_sum(
                SumVariant::PairSum,
                l,
                &SumInputs::pair(&self.basis_a, self.basis_b.as_ref().unwrap()),
            ),
            ModelKind::UU => schur_sum(
                SumVariant::TildePair,
                l,
                &SumInputs::pair(&self.basis_a, self.basis_b.as_ref().unwrap()),
            ),
            ModelKind::O => schur_sum(
                SumVariant::AlphaOddParts,
                l,
                &SumInputs::single(&self.basis_a).with_alpha(self.alpha.as_ref().unwrap()),
            ),
            ModelKind::S => schur_sum(
                SumVariant::BetaOddCols,
                l,
                &SumInputs::single(&self.basis_a).with_beta(self.beta.as_ref().unwrap()),
            ),
            ModelKind::SmallU => schur_sum(
                SumVariant::TildeAlphaBeta,
                l,
                &SumInputs::single(&self.basis_a)
                    .with_alpha(self.alpha.as_ref().unwrap())
                    .with_beta(self.beta.as_ref().unwrap()),
            ),
        }
    }

    /// Z times the unrestricted weight sum must be exactly 1.
    pub fn normalization_check(&self) -> Check {
        let big = usize::MAX / 2;
        let total = self.lhs(big);
        let prod = self.z.mul(&total);
        Check::new(
            format!("{} model normalization", self.kind.tag()),
            prod == MultiPoly::one(&self.ctx),
        )
    }

    pub fn distribution_checks(&self, l_max: usize) -> Vec<Check> {
        let mut checks = Vec::new();
        checks.push(self.normalization_check());
        for l in 0..=l_max {
            let lhs = self.lhs(l);
            let rhs = self.rhs(l);
            checks.push(Check::new(
                format!("{} model distribution at l={}", self.kind.tag(), l),
                lhs == rhs,
            ));
        }
        checks
    }
}

// --- normalizer products ---

fn inv(p: &MultiPoly) -> MultiPoly {
    p.try_inverse().expect("normalizer factor has unit constant term")
}

/// Z for the two-alphabet pair model: letters carry (value, weak).
fn z_pair(a: &[(MultiPoly, bool)], b: &[(MultiPoly, bool)], one: &MultiPoly) -> MultiPoly {
    let mut z = one.clone();
    for (va, ka) in a {
        for (vb, kb) in b {
            let prod = va.mul(vb);
            if ka == kb {
                z = z.mul(&one.sub(&prod));
            } else {
                z = z.mul(&inv(&one.add(&prod)));
            }
        }
    }
    z
}

/// Z for the symmetric one-alphabet models (O with alpha, S with beta
/// realized by swapping the weak flag convention at call sites).
fn z_diag(
    letters: &[(MultiPoly, bool)],
    diag: &MultiPoly,
    weak_gets_geometric: bool,
    one: &MultiPoly,
) -> MultiPoly {
    let mut z = one.clone();
    for (v, weak) in letters {
        let geometric_here = *weak == weak_gets_geometric;
        if geometric_here {
            z = z.mul(&one.sub(&diag.mul(v)));
        } else {
            z = z.mul(&inv(&one.add(&diag.mul(v))));
            z = z.mul(&one.sub(&v.mul(v)));
        }
    }
    for (i, (vi, ki)) in letters.iter().enumerate() {
        for (vj, kj) in letters.iter().skip(i + 1) {
            let prod = vi.mul(vj);
            if ki == kj {
                z = z.mul(&one.sub(&prod));
            } else {
                z = z.mul(&inv(&one.add(&prod)));
            }
        }
    }
    z
}

fn z_small_u(
    letters: &[(MultiPoly, bool)],
    alpha: &MultiPoly,
    beta: &MultiPoly,
    one: &MultiPoly,
) -> MultiPoly {
    let mut z = one.clone();
    for (v, weak) in letters {
        if *weak {
            z = z.mul(&inv(&one.add(&beta.mul(v))));
            z = z.mul(&one.sub(&alpha.mul(v)));
        } else {
            z = z.mul(&one.sub(&beta.mul(v)));
            z = z.mul(&inv(&one.add(&alpha.mul(v))));
        }
    }
    z.mul(&z_pair(letters, letters, one))
}

// --- model builders ---

/// Context with q1..qk, r1..rk main variables and alpha, beta parameters.
fn model_ctx(k: usize, d: usize, pcap: usize) -> Arc<VarSet> {
    let mut names: Vec<String> = (1..=k).map(|i| format!("q{}", i)).collect();
    names.extend((1..=k).map(|i| format!("r{}", i)));
    names.push("alpha".into());
    names.push("beta".into());
    let decl: Vec<(&str, VarClass)> = names
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let c = if i >= 2 * k { VarClass::Param } else { VarClass::Main };
            (n.as_str(), c)
        })
        .collect();
    VarSet::new(&decl, d, pcap)
}

fn qvar(ctx: &Arc<VarSet>, i: i64) -> MultiPoly {
    MultiPoly::var_named(ctx, &format!("q{}", i))
}

fn rvar(ctx: &Arc<VarSet>, i: i64) -> MultiPoly {
    MultiPoly::var_named(ctx, &format!("r{}", i))
}

fn letter_list(ctx: &Arc<VarSet>, k: usize, weak: &Letters, second: bool) -> Vec<(MultiPoly, bool)> {
    (1..=k as i64)
        .map(|i| {
            let v = if second { rvar(ctx, i) } else { qvar(ctx, i) };
            (v, weak.contains(&i))
        })
        .collect()
}

fn split_alphabet(ctx: &Arc<VarSet>, k: usize, weak: &Letters, second: bool) -> Alphabet {
    // ordinary part: complement letters; super part: weak letters
    let base = if second { k } else { 0 };
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for i in 1..=k as i64 {
        let idx = base + (i as usize - 1);
        if weak.contains(&i) {
            ys.push(idx);
        } else {
            xs.push(idx);
        }
    }
    Alphabet { xs, ys }
}

/// The plain two-alphabet model on [1..k] x [1..k].
pub fn model_u(k: usize, w1: &Letters, w2: &Letters, d: usize) -> DistModel {
    let ctx = model_ctx(k, d, 0);
    let one = MultiPoly::one(&ctx);
    let mut slots = Vec::new();
    for i in 1..=k as i64 {
        for j in 1..=k as i64 {
            let m = qvar(&ctx, i).mul(&rvar(&ctx, j));
            let same = w1.contains(&i) == w2.contains(&j);
            slots.push(Slot {
                cells: alloc::vec![(i, j)],
                weight: if same {
                    SlotWeight::Geometric(m)
                } else {
                    SlotWeight::Bernoulli(m)
                },
            });
        }
    }
    let z = z_pair(
        &letter_list(&ctx, k, w1, false),
        &letter_list(&ctx, k, w2, true),
        &one,
    );
    let basis_a = HBasis::new(&ctx, split_alphabet(&ctx, k, w1, false), d);
    let basis_b = HBasis::new(&ctx, split_alphabet(&ctx, k, w2, true), d);
    DistModel {
        kind: ModelKind::U,
        ctx,
        slots,
        w1: w1.clone(),
        w2: w2.clone(),
        z,
        basis_a,
        basis_b: Some(basis_b),
        alpha: None,
        beta: None,
    }
}

/// The centrally symmetric pair model on (+-[1..k])^2.
pub fn model_uu(k: usize, w1: &Letters, w2: &Letters, d: usize) -> DistModel {
    let ctx = model_ctx(k, d, 0);
    let one = MultiPoly::one(&ctx);
    let mut slots = Vec::new();
    let signed: Vec<i64> = (1..=k as i64).flat_map(|i| [i, -i]).collect();
    for &i in &signed {
        for &j in &signed {
            // orbit {(i,j), (-i,-j)}: keep the lexicographically smaller rep
            if (i, j) > (-i, -j) {
                continue;
            }
            let m = qvar(&ctx, i.abs()).mul(&rvar(&ctx, j.abs()));
            let same = w1.contains(&i.abs()) == w2.contains(&j.abs());
            slots.push(Slot {
                cells: alloc::vec![(i, j), (-i, -j)],
                weight: if same {
                    SlotWeight::Geometric(m)
                } else {
                    SlotWeight::Bernoulli(m)
                },
            });
        }
    }
    let za = z_pair(
        &letter_list(&ctx, k, w1, false),
        &letter_list(&ctx, k, w2, true),
        &one,
    );
    let z = za.mul(&za);
    let signed_weak = |w: &Letters| -> Letters {
        w.iter().flat_map(|&i| [i, -i]).collect()
    };
    let basis_a = HBasis::new(&ctx, split_alphabet(&ctx, k, w1, false), d);
    let basis_b = HBasis::new(&ctx, split_alphabet(&ctx, k, w2, true), d);
    DistModel {
        kind: ModelKind::UU,
        ctx,
        slots,
        w1: signed_weak(w1),
        w2: signed_weak(w2),
        z,
        basis_a,
        basis_b: Some(basis_b),
        alpha: None,
        beta: None,
    }
}

/// The symmetric one-alphabet model with diagonal parameter alpha.
pub fn model_o(k: usize, w: &Letters, d: usize, pcap: usize) -> DistModel {
    let ctx = model_ctx(k, d, pcap);
    let one = MultiPoly::one(&ctx);
    let alpha = MultiPoly::var_named(&ctx, "alpha");
    let mut slots = Vec::new();
    for i in 1..=k as i64 {
        for j in i..=k as i64 {
            if i == j {
                let weight = if w.contains(&i) {
                    SlotWeight::Geometric(alpha.mul(&qvar(&ctx, i)))
                } else {
                    SlotWeight::GeometricParity(alpha.clone(), qvar(&ctx, i))
                };
                slots.push(Slot {
                    cells: alloc::vec![(i, i)],
                    weight,
                });
            } else {
                let m = qvar(&ctx, i).mul(&qvar(&ctx, j));
                let same = w.contains(&i) == w.contains(&j);
                slots.push(Slot {
                    cells: alloc::vec![(i, j), (j, i)],
                    weight: if same {
                        SlotWeight::Geometric(m)
                    } else {
                        SlotWeight::Bernoulli(m)
                    },
                });
            }
        }
    }
    let letters = letter_list(&ctx, k, w, false);
    let z = z_diag(&letters, &alpha, true, &one);
    let basis_a = HBasis::new(&ctx, split_alphabet(&ctx, k, w, false), d);
    DistModel {
        kind: ModelKind::O,
        ctx,
        slots,
        w1: w.clone(),
        w2: w.clone(),
        z,
        basis_a,
        basis_b: None,
        alpha: Some(alpha),
        beta: None,
    }
}

/// The anti-symmetric model on [1..k] x (-[1..k]) with anti-diagonal
/// parameter beta.
pub fn model_s(k: usize, w: &Letters, d: usize, pcap: usize) -> DistModel {
    let ctx = model_ctx(k, d, pcap);
    let one = MultiPoly::one(&ctx);
    let beta = MultiPoly::var_named(&ctx, "beta");
    let mut slots = Vec::new();
    for i in 1..=k as i64 {
        for j in i..=k as i64 {
            if i == j {
                let weight = if w.contains(&i) {
                    SlotWeight::GeometricParity(beta.clone(), qvar(&ctx, i))
                } else {
                    SlotWeight::Geometric(beta.mul(&qvar(&ctx, i)))
                };
                slots.push(Slot {
                    cells: alloc::vec![(i, -i)],
                    weight,
                });
            } else {
                let m = qvar(&ctx, i).mul(&qvar(&ctx, j));
                let same = w.contains(&i) == w.contains(&j);
                slots.push(Slot {
                    cells: alloc::vec![(i, -j), (j, -i)],
                    weight: if same {
                        SlotWeight::Geometric(m)
                    } else {
                        SlotWeight::Bernoulli(m)
                    },
                });
            }
        }
    }
    let letters = letter_list(&ctx, k, w, false);
    let z = z_diag(&letters, &beta, false, &one);
    let basis_a = HBasis::new(&ctx, split_alphabet(&ctx, k, w, false), d);
    let w2: Letters = w.iter().map(|&i| -i).collect();
    DistModel {
        kind: ModelKind::S,
        ctx,
        slots,
        w1: w.clone(),
        w2,
        z,
        basis_a,
        basis_b: None,
        alpha: None,
        beta: Some(beta),
    }
}

/// The fully symmetric signed model with both diagonal parameters.
pub fn model_small_u(k: usize, w: &Letters, d: usize, pcap: usize) -> DistModel {
    let ctx = model_ctx(k, d, pcap);
    let one = MultiPoly::one(&ctx);
    let alpha = MultiPoly::var_named(&ctx, "alpha");
    let beta = MultiPoly::var_named(&ctx, "beta");
    let mut slots = Vec::new();
    // off-orbits: |i| != |j|, reps (a, b) and (a, -b) for a < b
    for a in 1..=k as i64 {
        for b in (a + 1)..=k as i64 {
            let m = qvar(&ctx, a).mul(&qvar(&ctx, b));
            let same = w.contains(&a) == w.contains(&b);
            for rep in [(a, b), (a, -b)] {
                let (i, j) = rep;
                slots.push(Slot {
                    cells: alloc::vec![(i, j), (-i, -j), (j, i), (-j, -i)],
                    weight: if same {
                        SlotWeight::Geometric(m.clone())
                    } else {
                        SlotWeight::Bernoulli(m.clone())
                    },
                });
            }
        }
    }
    for i in 1..=k as i64 {
        // diagonal orbit {(i,i), (-i,-i)}
        let weight = if w.contains(&i) {
            SlotWeight::Geometric(alpha.mul(&qvar(&ctx, i)))
        } else {
            SlotWeight::GeometricParity(alpha.clone(), qvar(&ctx, i))
        };
        slots.push(Slot {
            cells: alloc::vec![(i, i), (-i, -i)],
            weight,
        });
        // anti-diagonal orbit {(i,-i), (-i,i)}
        let weight = if w.contains(&i) {
            SlotWeight::GeometricParity(beta.clone(), qvar(&ctx, i))
        } else {
            SlotWeight::Geometric(beta.mul(&qvar(&ctx, i)))
        };
        slots.push(Slot {
            cells: alloc::vec![(i, -i), (-i, i)],
            weight,
        });
    }
    let letters = letter_list(&ctx, k, w, false);
    let z = z_small_u(&letters, &alpha, &beta, &one);
    let basis_a = HBasis::new(&ctx, split_alphabet(&ctx, k, w, false), d);
    let signed_weak: Letters = w.iter().flat_map(|&i| [i, -i]).collect();
    DistModel {
        kind: ModelKind::SmallU,
        ctx,
        slots,
        w1: signed_weak.clone(),
        w2: signed_weak,
        z,
        basis_a,
        basis_b: None,
        alpha: Some(alpha),
        beta: Some(beta),
    }
}

// --- equidistribution pairs ---

/// Context for the equidistribution checks: kq strict letters q_i, kr weak
/// letters r_i, and the two diagonal parameters.
fn equi_ctx(kq: usize, kr: usize, d: usize, pcap: usize) -> Arc<VarSet> {
    let mut names: Vec<String> = (1..=kq).map(|i| format!("q{}", i)).collect();
    names.extend((1..=kr).map(|i| format!("r{}", i)));
    names.push("alpha".into());
    names.push("beta".into());
    let decl: Vec<(&str, VarClass)> = names
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let c = if i >= kq + kr { VarClass::Param } else { VarClass::Main };
            (n.as_str(), c)
        })
        .collect();
    VarSet::new(&decl, d, pcap)
}

/// The displayed same-distribution pairs: a diagonal parameter can be traded
/// for an extra alphabet letter.  Each check compares the two normalized
/// probability series Z * (restricted Schur sum) exactly.
pub fn equidistribution_checks(
    kq: usize,
    kr: usize,
    d: usize,
    pcap: usize,
    l_max: usize,
) -> Vec<Check> {
    let mut checks = Vec::new();
    let ctx = equi_ctx(kq, kr, d, pcap);
    let one = MultiPoly::one(&ctx);
    let alpha = MultiPoly::var_named(&ctx, "alpha");
    let beta = MultiPoly::var_named(&ctx, "beta");
    let ai = ctx.index_of("alpha").unwrap();
    let bi = ctx.index_of("beta").unwrap();
    let zero = MultiPoly::zero(&ctx);
    let letters: Vec<(MultiPoly, bool)> = (0..kq)
        .map(|i| (MultiPoly::var(&ctx, i), false))
        .chain((0..kr).map(|i| (MultiPoly::var(&ctx, kq + i), true)))
        .collect();
    let qr = Alphabet {
        xs: (0..kq).collect(),
        ys: (kq..kq + kr).collect(),
    };
    let max_deg = d + pcap;
    let b_qr = HBasis::new(&ctx, qr.clone(), max_deg);
    let b_q_ar = HBasis::new(
        &ctx,
        Alphabet {
            xs: qr.xs.clone(),
            ys: qr.ys.iter().copied().chain([ai]).collect(),
        },
        max_deg,
    );
    let b_bq_r = HBasis::new(
        &ctx,
        Alphabet {
            xs: [bi].into_iter().chain(qr.xs.iter().copied()).collect(),
            ys: qr.ys.clone(),
        },
        max_deg,
    );
    let b_bq_ar = HBasis::new(
        &ctx,
        Alphabet {
            xs: [bi].into_iter().chain(qr.xs.iter().copied()).collect(),
            ys: qr.ys.iter().copied().chain([ai]).collect(),
        },
        max_deg,
    );
    let with_alpha: Vec<(MultiPoly, bool)> = letters
        .iter()
        .cloned()
        .chain([(alpha.clone(), true)])
        .collect();
    let with_alpha_beta: Vec<(MultiPoly, bool)> = with_alpha
        .iter()
        .cloned()
        .chain([(beta.clone(), false)])
        .collect();

    // alpha as a diagonal weight vs alpha as a weak letter
    let z_a = z_diag(&letters, &alpha, true, &one);
    let z_b = z_diag(&with_alpha, &zero, true, &one);
    for l in 0..=l_max {
        let lhs = z_a.mul(&schur_sum(
            SumVariant::AlphaOddParts,
            l,
            &SumInputs::single(&b_qr).with_alpha(&alpha),
        ));
        let rhs = z_b.mul(&schur_sum(
            SumVariant::DoubledParts,
            l,
            &SumInputs::single(&b_q_ar),
        ));
        checks.push(Check::new(format!("alpha-trade at l={}", l), lhs == rhs));
    }
    // floor of the anti-symmetric model: beta drops out at odd bounds
    let z_s_beta = z_diag(&letters, &beta, false, &one);
    let z_s_zero = z_diag(&letters, &zero, false, &one);
    for m in 0..=l_max {
        let lhs = z_s_beta.mul(&schur_sum(
            SumVariant::BetaOddCols,
            2 * m + 1,
            &SumInputs::single(&b_qr).with_beta(&beta),
        ));
        let rhs = z_s_zero.mul(&schur_sum(
            SumVariant::RepeatedParts,
            m,
            &SumInputs::single(&b_qr),
        ));
        checks.push(Check::new(format!("floor trade at m={}", m), lhs == rhs));
    }
    // ceiling: beta becomes a strict letter
    let z_s_bq = z_diag(
        &[(beta.clone(), false)]
            .into_iter()
            .chain(letters.iter().cloned())
            .collect::<Vec<_>>(),
        &zero,
        false,
        &one,
    );
    for m in 0..=l_max {
        let lhs = z_s_beta.mul(&schur_sum(
            SumVariant::BetaOddCols,
            2 * m,
            &SumInputs::single(&b_qr).with_beta(&beta),
        ));
        let rhs = z_s_bq.mul(&schur_sum(
            SumVariant::RepeatedParts,
            m,
            &SumInputs::single(&b_bq_r),
        ));
        checks.push(Check::new(format!("ceiling trade at m={}", m), lhs == rhs));
    }
    // the signed model folds onto the plain pair model
    let z_u = z_small_u(&letters, &alpha, &beta, &one);
    for m in 0..=l_max {
        let lhs = z_u.mul(&schur_sum(
            SumVariant::TildeAlphaBeta,
            2 * m + 1,
            &SumInputs::single(&b_qr).with_alpha(&alpha).with_beta(&beta),
        ));
        let rhs = z_pair(&with_alpha, &letters, &one).mul(&schur_sum(
            SumVariant::PairSum,
            m,
            &SumInputs::pair(&b_q_ar, &b_qr),
        ));
        checks.push(Check::new(format!("signed floor trade at m={}", m), lhs == rhs));
        let lhs = z_u.mul(&schur_sum(
            SumVariant::TildeAlphaBeta,
            2 * m,
            &SumInputs::single(&b_qr).with_alpha(&alpha).with_beta(&beta),
        ));
        let rhs = z_pair(&with_alpha_beta, &letters, &one).mul(&schur_sum(
            SumVariant::PairSum,
            m,
            &SumInputs::pair(&b_bq_ar, &b_qr),
        ));
        checks.push(Check::new(
            format!("signed ceiling trade at m={}", m),
            lhs == rhs,
        ));
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opuc::all_pass;

    fn letters(xs: &[i64]) -> Letters {
        xs.iter().copied().collect()
    }

    #[test]
    fn u_model_tiny() {
        for (w1, w2) in [
            (letters(&[]), letters(&[])),
            (letters(&[1]), letters(&[])),
            (letters(&[1, 2]), letters(&[2])),
        ] {
            let m = model_u(2, &w1, &w2, 4);
            let checks = m.distribution_checks(2);
            assert!(all_pass(&checks), "{:?} {:?}: {:?}", w1, w2, checks);
        }
    }

    #[test]
    fn o_model_tiny() {
        for w in [letters(&[]), letters(&[1]), letters(&[1, 2])] {
            let m = model_o(2, &w, 4, 3);
            let checks = m.distribution_checks(2);
            assert!(all_pass(&checks), "W={:?}: {:?}", w, checks);
        }
    }

    #[test]
    fn s_model_tiny() {
        for w in [letters(&[]), letters(&[2]), letters(&[1, 2])] {
            let m = model_s(2, &w, 4, 3);
            let checks = m.distribution_checks(2);
            assert!(all_pass(&checks), "W={:?}: {:?}", w, checks);
        }
    }

    #[test]
    fn uu_model_tiny() {
        let m = model_uu(1, &letters(&[1]), &letters(&[]), 4);
        let checks = m.distribution_checks(2);
        assert!(all_pass(&checks), "{:?}", checks);
    }

    #[test]
    fn small_u_model_tiny() {
        let m = model_small_u(1, &letters(&[]), 3, 3);
        let checks = m.distribution_checks(2);
        assert!(all_pass(&checks), "{:?}", checks);
        let m = model_small_u(1, &letters(&[1]), 3, 3);
        let checks = m.distribution_checks(2);
        assert!(all_pass(&checks), "{:?}", checks);
    }

    #[test]
    fn equidistribution_tiny() {
        let checks = equidistribution_checks(1, 1, 4, 2, 1);
        assert!(
            all_pass(&checks),
            "failing: {:?}",
            checks.iter().filter(|c| !c.pass).collect::<Vec<_>>()
        );
    }
}
