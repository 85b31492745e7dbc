//! The four half-line families p^{±±}: monic orthogonal polynomials for the
//! base weight times (1-x)^{±1/2} (1+x)^{±1/2}, realized without square
//! roots as Hankel systems in the moments L[x^k (modifier)] where the
//! modifier is 1, (1-x), (1+x) or (1-x^2) and L is the circle functional.

use super::build::OpucData;
use super::Check;
use crate::ring::laurent::Laurent;
use crate::ring::matrix::{solve_linear, RingMatrix};
use crate::ring::rational::binomial;
use crate::ring::Ring;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HalflineKind {
    MinusMinus,
    PlusMinus,
    MinusPlus,
    PlusPlus,
}

impl HalflineKind {
    /// Modifier polynomial in x, low degree first.
    fn modifier<R: Ring>(self, one: &R) -> Vec<R> {
        match self {
            HalflineKind::MinusMinus => vec![one.clone()],
            HalflineKind::PlusMinus => vec![one.clone(), one.neg()],
            HalflineKind::MinusPlus => vec![one.clone(), one.clone()],
            HalflineKind::PlusPlus => vec![one.clone(), one.zero_like(), one.neg()],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            HalflineKind::MinusMinus => "--",
            HalflineKind::PlusMinus => "+-",
            HalflineKind::MinusPlus => "-+",
            HalflineKind::PlusPlus => "++",
        }
    }
}

/// The circle functional on x-polynomials: L[x^k] = 2^{-k} sum_j C(k,j) c_{2j-k}.
pub struct ChebyshevMoments<R: Ring> {
    xk: Vec<R>,
}

impl<R: Ring> ChebyshevMoments<R> {
    pub fn new(moments: &Laurent<R>, max_power: usize) -> Self {
        let proto = moments.get(0).zero_like();
        let xk = (0..=max_power)
            .map(|k| {
                let mut acc = proto.zero_like();
                for j in 0..=k {
                    let coeff = moments.get(2 * j as i64 - k as i64);
                    let b: i64 = binomial(k as u64, j as u64)
                        .numer()
                        .try_into()
                        .expect("small binomial");
                    acc.add_assign(&coeff.mul(&proto.from_i64_like(b)));
                }
                // divide by 2^k
                let mut v = acc;
                for _ in 0..k {
                    v = v.div_i64(2);
                }
                v
            })
            .collect();
        ChebyshevMoments { xk }
    }

    /// L[p] for an x-polynomial.
    pub fn apply(&self, p: &[R]) -> R {
        let mut acc = self.xk[0].zero_like();
        for (k, c) in p.iter().enumerate() {
            if !c.is_zero() {
                acc.add_assign(&c.mul(&self.xk[k]));
            }
        }
        acc
    }
}

fn poly_mul<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    let proto = a
        .first()
        .or_else(|| b.first())
        .expect("nonempty polynomials")
        .zero_like();
    let mut out = vec![proto; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j].add_assign(&x.mul(y));
        }
    }
    out
}

/// One half-line family: monic p_l in x with norms under the modified
/// pairing.
pub struct HalflineData<R: Ring> {
    pub kind: HalflineKind,
    pub p: Vec<Vec<R>>,
    pub norms: Vec<R>,
}

pub fn halfline_build<R: Ring>(
    kind: HalflineKind,
    moments: &Laurent<R>,
    max: usize,
) -> Option<HalflineData<R>> {
    let proto = moments.get(0).zero_like();
    let one = proto.one_like();
    let cheb = ChebyshevMoments::new(moments, 2 * max + 3);
    let modifier = kind.modifier(&one);
    let pair = |p: &[R], q: &[R]| cheb.apply(&poly_mul(&poly_mul(p, q), &modifier));
    let mut ps: Vec<Vec<R>> = Vec::new();
    let mut norms: Vec<R> = Vec::new();
    for l in 0..=max {
        // solve G a = -rhs for the lower coefficients, G[j][k] = L[m x^{j+k}]
        let xpow = |k: usize| -> Vec<R> {
            let mut v = vec![proto.clone(); k + 1];
            v[k] = one.clone();
            v
        };
        let g = RingMatrix::from_fn(l, l, &proto, |j, k| pair(&xpow(j), &xpow(k)));
        let rhs: Vec<R> = (0..l).map(|j| pair(&xpow(j), &xpow(l)).neg()).collect();
        let lower = solve_linear(&g, &rhs)?;
        let mut coeffs = lower;
        coeffs.push(one.clone());
        let n = pair(&coeffs, &coeffs);
        ps.push(coeffs);
        norms.push(n);
    }
    Some(HalflineData {
        kind,
        p: ps,
        norms,
    })
}

/// (2z)^l p((z+1/z)/2) as a z-polynomial of degree 2l, low degree first.
fn lift_to_z<R: Ring>(p: &[R]) -> Vec<R> {
    let l = p.len() - 1;
    let proto = p[0].zero_like();
    let mut out = vec![proto.clone(); 2 * l + 1];
    for (k, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // 2^{l-k} z^{l-k} (z^2+1)^k
        let mut scale = c.one_like();
        for _ in 0..(l - k) {
            scale = scale.add(&scale); // times 2
        }
        let scale = scale.mul(c);
        for j in 0..=k {
            let b = binomial(k as u64, j as u64);
            let bi: i64 = b.numer().try_into().expect("small binomial");
            let term = scale.mul(&scale.from_i64_like(bi));
            out[(l - k) + 2 * j].add_assign(&term);
        }
    }
    out
}

fn z_shift<R: Ring>(p: &[R], by: usize) -> Vec<R> {
    let proto = p[0].zero_like();
    let mut out = vec![proto; p.len() + by];
    for (i, c) in p.iter().enumerate() {
        out[i + by] = c.clone();
    }
    out
}

fn poly_eq<R: Ring>(a: &[R], b: &[R]) -> bool {
    let n = a.len().max(b.len());
    let proto = a[0].zero_like();
    (0..n).all(|i| {
        let x = a.get(i).unwrap_or(&proto);
        let y = b.get(i).unwrap_or(&proto);
        x == y
    })
}

fn pad_sub<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    let n = a.len().max(b.len());
    let proto = a[0].zero_like();
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| proto.clone());
            let y = b.get(i).cloned().unwrap_or_else(|| proto.clone());
            x.sub(&y)
        })
        .collect()
}

fn pad_add<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    let n = a.len().max(b.len());
    let proto = a[0].zero_like();
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| proto.clone());
            let y = b.get(i).cloned().unwrap_or_else(|| proto.clone());
            x.add(&y)
        })
        .collect()
}

/// All displayed relations between the half-line families and the circle
/// polynomials, for 1 <= l <= l_max.
pub fn halfline_relations_check<R: Ring>(
    moments: &Laurent<R>,
    circle: &OpucData<R>,
    l_max: usize,
) -> Vec<Check> {
    let mut checks = Vec::new();
    let proto = moments.get(0).zero_like();
    let one = proto.one_like();
    let mm = halfline_build(HalflineKind::MinusMinus, moments, l_max);
    let pm = halfline_build(HalflineKind::PlusMinus, moments, l_max);
    let mp = halfline_build(HalflineKind::MinusPlus, moments, l_max);
    let pp = halfline_build(HalflineKind::PlusPlus, moments, l_max);
    let (mm, pm, mp, pp) = match (mm, pm, mp, pp) {
        (Some(a), Some(b), Some(c), Some(d)) => (a, b, c, d),
        _ => {
            checks.push(Check::new("half-line systems nondegenerate", false));
            return checks;
        }
    };
    let pi0 = |j: usize| circle.at_zero(j).clone();
    let prod_signs = |upto: usize, from: usize, alternate: bool| -> R {
        let mut acc = one.clone();
        for j in from..=upto {
            let z0 = pi0(j);
            let t = if alternate && j % 2 == 1 {
                one.sub(&z0)
            } else {
                one.add(&z0)
            };
            acc.mul_assign(&t);
        }
        acc
    };
    // p--_0 = 1
    checks.push(Check::new(
        "p--_0 = 1",
        mm.p[0].len() == 1 && mm.p[0][0] == one,
    ));
    for l in 1..=l_max {
        if 2 * l + 2 > circle.max_degree() {
            break;
        }
        // z-identities
        let lhs = lift_to_z(&mm.p[l]);
        let rhs = pad_add(&circle.pi_star(2 * l - 1), &z_shift(circle.pi(2 * l - 1), 1));
        checks.push(Check::new(
            format!("(2z)^{} p--_{} = pi*_{} + z pi_{}", l, l, 2 * l - 1, 2 * l - 1),
            poly_eq(&lhs, &rhs),
        ));
        let minus_z = {
            // (1 - z) as z-polynomial
            vec![one.clone(), one.neg()]
        };
        let lhs = poly_mul(&minus_z, &lift_to_z(&pm.p[l]));
        let rhs = pad_sub(&circle.pi_star(2 * l), &z_shift(circle.pi(2 * l), 1));
        checks.push(Check::new(
            format!("(1-z)(2z)^{} p+-_{} = pi*_{} - z pi_{}", l, l, 2 * l, 2 * l),
            poly_eq(&lhs, &rhs),
        ));
        let plus_z = vec![one.clone(), one.clone()];
        let lhs = poly_mul(&plus_z, &lift_to_z(&mp.p[l]));
        let rhs = pad_add(&circle.pi_star(2 * l), &z_shift(circle.pi(2 * l), 1));
        checks.push(Check::new(
            format!("(1+z)(2z)^{} p-+_{} = pi*_{} + z pi_{}", l, l, 2 * l, 2 * l),
            poly_eq(&lhs, &rhs),
        ));
        let one_minus_z2 = vec![one.clone(), proto.clone(), one.neg()];
        let lhs = poly_mul(&one_minus_z2, &lift_to_z(&pp.p[l]));
        let rhs = pad_sub(&circle.pi_star(2 * l + 1), &z_shift(circle.pi(2 * l + 1), 1));
        checks.push(Check::new(
            format!("(1-z^2)(2z)^{} p++_{} = pi*_{} - z pi_{}", l, l, 2 * l + 1, 2 * l + 1),
            poly_eq(&lhs, &rhs),
        ));
        // evaluations: p--_l(1) = 2^{-l} prod_{0<=j<2l}(1+pi_j(0)), the j=0
        // factor being 2 since pi_0(0) = 1
        let eval = |p: &[R], sign: i64| -> R {
            let mut acc = proto.zero_like();
            for (k, c) in p.iter().enumerate() {
                if sign == 1 || k % 2 == 0 {
                    acc.add_assign(c);
                } else {
                    acc.sub_assign(c);
                }
            }
            acc
        };
        let halve = |mut v: R, times: usize| -> R {
            for _ in 0..times {
                v = v.div_i64(2);
            }
            v
        };
        let lhs = eval(&mm.p[l], 1);
        let rhs = halve(prod_signs(2 * l - 1, 0, false), l);
        checks.push(Check::new(format!("p--_{}(1)", l), lhs == rhs));
        let lhs = eval(&mm.p[l], -1);
        let mut rhs = halve(prod_signs(2 * l - 1, 0, true), l);
        if l % 2 == 1 {
            rhs = rhs.neg();
        }
        checks.push(Check::new(format!("p--_{}(-1)", l), lhs == rhs));
        let lhs = eval(&pm.p[l], -1);
        let mut rhs = halve(prod_signs(2 * l, 1, true), l);
        if l % 2 == 1 {
            rhs = rhs.neg();
        }
        checks.push(Check::new(format!("p+-_{}(-1)", l), lhs == rhs));
        let lhs = eval(&mp.p[l], 1);
        let rhs = halve(prod_signs(2 * l, 1, false), l);
        checks.push(Check::new(format!("p-+_{}(1)", l), lhs == rhs));
        // norm chains
        let quarter = |mut v: R, times: usize| -> R {
            for _ in 0..times {
                v = v.div_i64(4);
            }
            v
        };
        let inv = |v: R| v.try_inverse();
        let n2l = circle.norm(2 * l).clone();
        let n2l1 = circle.norm(2 * l + 1).clone();
        let n2l2 = circle.norm(2 * l + 2).clone();
        if let Some(f) = inv(one.add(&pi0(2 * l))) {
            let rhs = quarter(n2l.mul(&f), l).mul(&one.add(&one));
            checks.push(Check::new(format!("N--_{}", l), mm.norms[l] == rhs));
        }
        let rhs_a = quarter(n2l.mul(&one.add(&pi0(2 * l + 1))), l);
        checks.push(Check::new(format!("N+-_{} (a)", l), pm.norms[l] == rhs_a));
        if let Some(f) = inv(one.sub(&pi0(2 * l + 1))) {
            let rhs_b = quarter(n2l1.mul(&f), l);
            checks.push(Check::new(format!("N+-_{} (b)", l), pm.norms[l] == rhs_b));
        }
        let rhs_a = quarter(n2l.mul(&one.sub(&pi0(2 * l + 1))), l);
        checks.push(Check::new(format!("N-+_{} (a)", l), mp.norms[l] == rhs_a));
        if let Some(f) = inv(one.add(&pi0(2 * l + 1))) {
            let rhs_b = quarter(n2l1.mul(&f), l);
            checks.push(Check::new(format!("N-+_{} (b)", l), mp.norms[l] == rhs_b));
        }
        let rhs_a = halve(quarter(n2l1.mul(&one.add(&pi0(2 * l + 2))), l), 1);
        checks.push(Check::new(format!("N++_{} (a)", l), pp.norms[l] == rhs_a));
        if let Some(f) = inv(one.sub(&pi0(2 * l + 2))) {
            let rhs_b = halve(quarter(n2l2.mul(&f), l), 1);
            checks.push(Check::new(format!("N++_{} (b)", l), pp.norms[l] == rhs_b));
        }
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integrals::bessel::bessel_weight;
    use crate::opuc::all_pass;
    use crate::opuc::build::opuc_build;
    use crate::ring::rational::rat;

    #[test]
    fn trivial_weight_chebyshev() {
        // weight 1: pi_j(0) = 0 so p--_l(1) = 2^{-l} (the monic Chebyshev value)
        let mut c = Laurent::zero(12, &rat(0));
        c.set(0, rat(1));
        let circle = opuc_build(&c, 10).unwrap();
        let checks = halfline_relations_check(&c, &circle, 3);
        assert!(all_pass(&checks), "{:?}", checks);
        let mm = halfline_build(HalflineKind::MinusMinus, &c, 3).unwrap();
        let at_one: crate::ring::rational::Rational = mm.p[3].iter().cloned().sum();
        assert_eq!(at_one, crate::ring::rational::ratio(1, 4));
    }

    #[test]
    fn bessel_ladder() {
        let order = 12;
        let window = 16;
        let c = bessel_weight(window, order);
        let circle = opuc_build(&c, 10).unwrap();
        let checks = halfline_relations_check(&c, &circle, 3);
        assert!(
            all_pass(&checks),
            "failing: {:?}",
            checks.iter().filter(|c| !c.pass).collect::<alloc::vec::Vec<_>>()
        );
    }
}
