//! Exact dense linear algebra over the field of rational functions in `q`.
//!
//! Rank and nullspace are computed by fraction-free Bareiss elimination on a
//! denominator-cleared copy of the matrix, so every intermediate entry stays a
//! polynomial. A fast path evaluates the matrix at a rational value of `q`
//! and runs ordinary Gaussian elimination over arbitrary-precision rationals;
//! the rank at any specialization is a lower bound for the generic rank.

use num::rational::BigRational;
use num::Zero;

use super::poly::ZPoly;
use super::qrat::QRat;

/// Dense matrix of exact scalars, row major.
#[derive(Clone, Debug)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<QRat>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![QRat::zero(); rows * cols],
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &QRat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: QRat) {
        self.data[i * self.cols + j] = v;
    }

    /// Clear denominators row by row; preserves the row space and kernel.
    fn to_poly_rows(&self) -> Vec<Vec<ZPoly>> {
        (0..self.rows)
            .map(|i| {
                let mut lcm = ZPoly::one();
                for j in 0..self.cols {
                    let d = self.at(i, j).den();
                    let g = lcm.gcd(d);
                    lcm = lcm.mul(&d.divexact(&g));
                }
                (0..self.cols)
                    .map(|j| {
                        let e = self.at(i, j);
                        e.num().mul(&lcm.divexact(e.den()))
                    })
                    .collect()
            })
            .collect()
    }

    /// Exact rank over the function field.
    pub fn rank_symbolic(&self) -> usize {
        let mut m = self.to_poly_rows();
        bareiss_echelon(&mut m, self.cols).len()
    }

    /// Exact nullity and a kernel basis with `QRat` entries.
    pub fn nullspace_symbolic(&self) -> Vec<Vec<QRat>> {
        let mut m = self.to_poly_rows();
        let pivots = bareiss_echelon(&mut m, self.cols);
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut x = vec![QRat::zero(); self.cols];
            x[free] = QRat::one();
            // Echelon rows are ordered by pivot column; solve bottom-up.
            for (r, &pc) in pivots.iter().enumerate().rev() {
                let mut acc = QRat::zero();
                for j in (pc + 1)..self.cols {
                    if m[r][j].is_zero() || x[j].is_zero() {
                        continue;
                    }
                    acc = &acc + &(&QRat::from_poly(m[r][j].clone()) * &x[j]);
                }
                x[pc] = &(-&acc) / &QRat::from_poly(m[r][pc].clone());
            }
            debug_assert!(self.mul_vec_is_zero(&x));
            basis.push(x);
        }
        basis
    }

    fn mul_vec_is_zero(&self, x: &[QRat]) -> bool {
        for i in 0..self.rows {
            let mut acc = QRat::zero();
            for j in 0..self.cols {
                if !self.at(i, j).is_zero() && !x[j].is_zero() {
                    acc = &acc + &(self.at(i, j) * &x[j]);
                }
            }
            if !acc.is_zero() {
                return false;
            }
        }
        true
    }

    /// Rank after specializing `q` to a rational value. `None` when some
    /// entry's denominator vanishes there.
    pub fn rank_at(&self, q: &BigRational) -> Option<usize> {
        let mut m: Vec<Vec<BigRational>> = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for j in 0..self.cols {
                row.push(self.at(i, j).eval(q)?);
            }
            m.push(row);
        }
        Some(rational_rank(m))
    }
}

/// Certified rank: symbolic elimination cross-checked against two rational
/// specializations (specialized rank never exceeds the generic rank).
pub fn rank_certified(m: &QMat, probes: &[BigRational]) -> usize {
    let rank = m.rank_symbolic();
    for q in probes {
        if let Some(r) = m.rank_at(q) {
            assert!(
                r <= rank,
                "specialized rank exceeded symbolic rank: {r} > {rank}"
            );
        }
    }
    rank
}

/// Gaussian elimination over the rationals; consumes the matrix.
pub fn rational_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].clone().recip();
        for j in col..cols {
            let v = &m[rank][j] * &inv;
            m[rank][j] = v;
        }
        for i in (rank + 1)..rows {
            if m[i][col].is_zero() {
                continue;
            }
            let f = m[i][col].clone();
            for j in col..cols {
                let v = &m[i][j] - &(&f * &m[rank][j]);
                m[i][j] = v;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Fraction-free elimination to row echelon form (in place). Pivots are the
/// lowest-degree nonzero entries of each column to curb coefficient growth.
/// Returns the pivot columns; row `r` of the result has its pivot there.
fn bareiss_echelon(m: &mut [Vec<ZPoly>], cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut prev = ZPoly::one();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let mut best: Option<usize> = None;
        for i in r..rows {
            if m[i][col].is_zero() {
                continue;
            }
            if best.map_or(true, |b| m[i][col].degree() < m[b][col].degree()) {
                best = Some(i);
            }
        }
        let Some(p) = best else { continue };
        m.swap(r, p);
        for i in (r + 1)..rows {
            if m[i][col].is_zero() {
                // Still needs the Bareiss scaling to stay fraction free.
                for j in (col + 1)..cols {
                    if m[i][j].is_zero() {
                        continue;
                    }
                    m[i][j] = m[i][j].mul(&m[r][col]).divexact(&prev);
                }
                continue;
            }
            for j in (col + 1)..cols {
                let t = m[i][j].mul(&m[r][col]).sub(&m[i][col].mul(&m[r][j]));
                m[i][j] = t.divexact(&prev);
            }
            m[i][col] = ZPoly::zero();
        }
        prev = m[r][col].clone();
        pivots.push(col);
        r += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qrat::qint;
    use num::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn empty_and_identity() {
        let m = QMat::zeros(0, 0);
        assert_eq!(m.rank_symbolic(), 0);
        assert!(m.nullspace_symbolic().is_empty());
        let mut id = QMat::zeros(3, 3);
        for i in 0..3 {
            id.set(i, i, QRat::one());
        }
        assert_eq!(id.rank_symbolic(), 3);
        assert_eq!(rank_certified(&id, &[rat(5, 3), rat(7, 4)]), 3);
    }

    #[test]
    fn one_free_column() {
        // [q - q^-1, 0]: nullity 1
        let mut m = QMat::zeros(1, 2);
        m.set(0, 0, &QRat::q_pow(1) - &QRat::q_pow(-1));
        let ker = m.nullspace_symbolic();
        assert_eq!(ker.len(), 1);
        assert!(ker[0][0].is_zero());
        assert!(ker[0][1].is_one());
    }

    #[test]
    fn nonzero_polynomial_has_rank_one() {
        let mut m = QMat::zeros(1, 1);
        m.set(0, 0, &QRat::q_pow(1) - &QRat::one());
        assert_eq!(m.rank_symbolic(), 1);
        // rank at q=2 is a lower bound and here equals the generic rank
        assert_eq!(m.rank_at(&rat(2, 1)), Some(1));
        // at q=1 the entry vanishes: specialization drops rank
        assert_eq!(m.rank_at(&rat(1, 1)), Some(0));
    }

    #[test]
    fn kernel_vectors_annihilate() {
        // 2x3 with quantum-integer entries
        let mut m = QMat::zeros(2, 3);
        m.set(0, 0, qint(2));
        m.set(0, 1, qint(3));
        m.set(0, 2, QRat::one());
        m.set(1, 0, qint(3));
        m.set(1, 1, qint(2));
        m.set(1, 2, QRat::q_pow(-2));
        let ker = m.nullspace_symbolic();
        assert_eq!(ker.len(), 1);
        assert_eq!(m.rank_symbolic(), 2);
        assert_eq!(m.rank_at(&rat(5, 3)), Some(2));
    }

    #[test]
    fn dependent_rows_fold() {
        let mut m = QMat::zeros(3, 2);
        m.set(0, 0, qint(2));
        m.set(0, 1, QRat::one());
        m.set(1, 0, &qint(2) * &qint(2));
        m.set(1, 1, qint(2));
        m.set(2, 0, QRat::zero());
        m.set(2, 1, QRat::zero());
        assert_eq!(m.rank_symbolic(), 1);
        assert_eq!(m.nullspace_symbolic().len(), 1);
    }
}
