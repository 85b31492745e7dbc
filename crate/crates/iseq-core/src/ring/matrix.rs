//! Matrices over a coefficient ring, with exact determinants and ranks.
//!
//! Determinant strategy: fraction-free Bareiss for rational matrices (after
//! clearing denominators), memoized expansion by minors for small matrices
//! over series/polynomial rings, and Gaussian elimination with invertible
//! pivots otherwise, falling back to expansion when a pivot is not a unit.

use super::{rational::Rational, Ring};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Debug)]
pub struct RingMatrix<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> RingMatrix<R> {
    pub fn from_fn(rows: usize, cols: usize, proto: &R, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        let _ = proto;
        RingMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        RingMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_antisymmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            if !self.at(i, i).is_zero() {
                return false;
            }
            for j in (i + 1)..self.cols {
                if !self.at(i, j).add(self.at(j, i)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows);
        let proto = &self.data[0];
        RingMatrix::from_fn(self.rows, rhs.cols, proto, |i, j| {
            let mut acc = proto.zero_like();
            for k in 0..self.cols {
                acc.add_assign(&self.at(i, k).mul(rhs.at(k, j)));
            }
            acc
        })
    }

    /// Determinant over an arbitrary commutative ring.
    ///
    /// The 0x0 determinant is the empty product; a zero-context prototype is
    /// needed for that case, so `det` requires at least one entry unless a
    /// prototype is supplied via [`RingMatrix::det_with_proto`].
    pub fn det(&self) -> R {
        assert!(self.is_square(), "determinant of a non-square matrix");
        assert!(self.rows > 0, "use det_with_proto for the 0x0 case");
        self.det_with_proto(&self.data[0].clone())
    }

    pub fn det_with_proto(&self, proto: &R) -> R {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return proto.one_like();
        }
        if n <= 8 {
            return self.det_minors(proto);
        }
        match self.det_gaussian(proto) {
            Some(d) => d,
            None => self.det_minors(proto),
        }
    }

    /// Expansion by minors along rows, memoized on the active column set.
    fn det_minors(&self, proto: &R) -> R {
        assert!(self.rows <= 31, "expansion by minors only for small matrices");
        let full: u32 = if self.rows == 32 {
            u32::MAX
        } else {
            (1u32 << self.rows) - 1
        };
        let mut memo: BTreeMap<u32, R> = BTreeMap::new();
        memo.insert(0, proto.one_like());
        self.det_minors_inner(full, &mut memo, proto)
    }

    fn det_minors_inner(&self, mask: u32, memo: &mut BTreeMap<u32, R>, proto: &R) -> R {
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let k = mask.count_ones() as usize;
        let row = self.rows - k; // expand along the k-th row from the bottom of the active block
        let mut acc = proto.zero_like();
        let mut sign = false;
        for j in 0..self.cols {
            if mask & (1 << j) == 0 {
                continue;
            }
            let e = self.at(row, j);
            if !e.is_zero() {
                let sub = self.det_minors_inner(mask & !(1 << j), memo, proto);
                let term = e.mul(&sub);
                if sign {
                    acc.sub_assign(&term);
                } else {
                    acc.add_assign(&term);
                }
            }
            sign = !sign;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// Gaussian elimination using invertible pivots; None if stuck.
    fn det_gaussian(&self, proto: &R) -> Option<R> {
        let n = self.rows;
        let mut m: Vec<Vec<R>> = (0..n)
            .map(|i| (0..n).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut det = proto.one_like();
        let mut negate = false;
        for col in 0..n {
            let mut pivot = None;
            for r in col..n {
                if m[r][col].try_inverse().is_some() {
                    pivot = Some(r);
                    break;
                }
            }
            let p = match pivot {
                Some(p) => p,
                None => {
                    if (col..n).all(|r| m[r][col].is_zero()) {
                        return Some(proto.zero_like());
                    }
                    return None; // nonzero but non-unit column: caller falls back
                }
            };
            if p != col {
                m.swap(p, col);
                negate = !negate;
            }
            let piv = m[col][col].clone();
            let piv_inv = piv.try_inverse().expect("chosen pivot is invertible");
            det.mul_assign(&piv);
            for r in (col + 1)..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = m[r][col].mul(&piv_inv);
                for c in col..n {
                    let sub = factor.mul(&m[col][c]);
                    m[r][c].sub_assign(&sub);
                }
            }
        }
        if negate {
            det = det.neg();
        }
        Some(det)
    }
}

/// Solve A x = b by Gaussian elimination with invertible pivots; None when
/// no invertible pivot can be found for some column (degenerate system).
pub fn solve_linear<R: Ring>(a: &RingMatrix<R>, b: &[R]) -> Option<Vec<R>> {
    assert!(a.is_square());
    let n = a.rows();
    assert_eq!(b.len(), n);
    if n == 0 {
        return Some(Vec::new());
    }
    let proto = b.first().map(|x| x.zero_like()).unwrap_or_else(|| a.at(0, 0).zero_like());
    let mut m: Vec<Vec<R>> = (0..n)
        .map(|i| {
            let mut row: Vec<R> = (0..n).map(|j| a.at(i, j).clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| m[r][col].try_inverse().is_some())?;
        m.swap(p, col);
        let inv = m[col][col].try_inverse().expect("pivot invertible");
        for c in col..=n {
            m[col][c] = m[col][c].mul(&inv);
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..=n {
                let sub = factor.mul(&m[col][c]);
                m[r][c].sub_assign(&sub);
            }
        }
    }
    let _ = proto;
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn det_bigint(mat: &[Vec<BigInt>]) -> BigInt {
    let n = mat.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(mat.iter().all(|r| r.len() == n));
    let mut m: Vec<Vec<BigInt>> = mat.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact by Sylvester's identity
            }
        }
        prev = m[k][k].clone();
        for row in m.iter_mut().skip(k + 1) {
            row[k] = BigInt::zero();
        }
    }
    sign * m[n - 1][n - 1].clone()
}

/// Determinant of a rational matrix via denominator clearing + Bareiss.
pub fn det_rational(mat: &RingMatrix<Rational>) -> Rational {
    assert!(mat.is_square());
    let n = mat.rows();
    if n == 0 {
        return Rational::one();
    }
    let mut scale = Rational::one();
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut lcm = BigInt::one();
        for j in 0..n {
            lcm = num_integer::lcm(lcm, mat.at(i, j).denom().clone());
        }
        scale *= Rational::from_integer(lcm.clone());
        rows.push(
            (0..n)
                .map(|j| {
                    let e = mat.at(i, j);
                    e.numer() * (&lcm / e.denom())
                })
                .collect(),
        );
    }
    Rational::from_integer(det_bigint(&rows)) / scale
}

/// Rank of a rational matrix by fraction-free integer elimination.
pub fn rank_rational(rows_in: &[Vec<Rational>]) -> usize {
    if rows_in.is_empty() {
        return 0;
    }
    let cols = rows_in[0].len();
    let mut rows: Vec<Vec<BigInt>> = rows_in
        .iter()
        .map(|r| {
            assert_eq!(r.len(), cols);
            let mut lcm = BigInt::one();
            for x in r {
                lcm = num_integer::lcm(lcm, x.denom().clone());
            }
            r.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => continue,
        };
        rows.swap(rank, p);
        for i in (rank + 1)..rows.len() {
            for j in (col + 1)..cols {
                let num = &rows[i][j] * &rows[rank][col] - &rows[i][col] * &rows[rank][j];
                rows[i][j] = &num / &prev;
            }
            rows[i][col] = BigInt::zero();
        }
        prev = rows[rank][col].clone();
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Reduce (gcd-normalize) a row of integers; keeps elimination entries small.
pub fn normalize_bigint_row(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        g = num_integer::gcd(g, x.abs());
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x = &*x / &g;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::rat;

    fn m2(a: i64, b: i64, c: i64, d: i64) -> RingMatrix<Rational> {
        RingMatrix::from_rows(vec![vec![rat(a), rat(b)], vec![rat(c), rat(d)]])
    }

    #[test]
    fn det_base_cases() {
        let empty: RingMatrix<Rational> = RingMatrix::from_rows(vec![]);
        assert_eq!(empty.det_with_proto(&rat(0)), rat(1));
        let one = RingMatrix::from_rows(vec![vec![rat(7)]]);
        assert_eq!(one.det(), rat(7));
        assert_eq!(m2(1, 2, 3, 4).det(), rat(-2));
        assert_eq!(det_rational(&m2(1, 2, 3, 4)), rat(-2));
    }

    #[test]
    fn det_multiplicative_and_consistent() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let n = rng.gen_range(1..=5);
            let a = RingMatrix::from_fn(n, n, &rat(0), |_, _| rat(rng.gen_range(-4..=4)));
            let b = RingMatrix::from_fn(n, n, &rat(0), |_, _| rat(rng.gen_range(-4..=4)));
            let ab = a.matmul(&b);
            assert_eq!(det_rational(&ab), det_rational(&a) * det_rational(&b));
            assert_eq!(ab.det(), det_rational(&ab));
        }
    }

    #[test]
    fn rank_certificates() {
        let rows = vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
            vec![rat(0), rat(1), rat(1)],
        ];
        assert_eq!(rank_rational(&rows), 2);
        assert_eq!(rank_rational(&[]), 0);
    }
}
