//! Dense integer-coefficient polynomials in the quantum parameter `q`.
//!
//! These are the building blocks of [`crate::scalar::QRat`]. Coefficients are
//! arbitrary-precision integers so that fraction-free elimination never
//! overflows. The gcd uses a primitive polynomial remainder sequence, which is
//! enough at the sizes this crate handles.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

/// Polynomial in `q` with `BigInt` coefficients, stored low degree first.
/// Invariant: the last coefficient is nonzero (the zero polynomial is empty).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly::constant(1)
    }

    pub fn constant(n: i64) -> Self {
        ZPoly::from_big(vec![BigInt::from(n)])
    }

    /// `c * q^k`, `k >= 0`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::from(c);
        ZPoly::from_big(v)
    }

    pub fn from_coeffs(c: &[i64]) -> Self {
        ZPoly::from_big(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn from_big(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; the zero polynomial reports -1.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn neg(&self) -> Self {
        ZPoly::from_big(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            v[i] += c;
        }
        ZPoly::from_big(v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        ZPoly::from_big(v)
    }

    pub fn mul_big(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly::from_big(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        ZPoly::from_big(v)
    }

    pub fn eval(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + BigRational::from(c.clone());
        }
        acc
    }

    /// Gcd of the coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let g = self.content();
        ZPoly::from_big(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Exact division; panics if `other` does not divide `self`.
    pub fn divexact(&self, other: &Self) -> Self {
        self.try_div(other)
            .expect("divexact: division was not exact")
    }

    /// Polynomial division returning the quotient only when the remainder is
    /// zero and all coefficient divisions are exact over the integers.
    pub fn try_div(&self, other: &Self) -> Option<Self> {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if self.degree() < other.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dq = (self.degree() - other.degree()) as usize;
        let mut quot = vec![BigInt::zero(); dq + 1];
        let lead = other.leading();
        for k in (0..=dq).rev() {
            let top = rem[k + other.degree() as usize].clone();
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            quot[k] = c.clone();
            for (j, b) in other.coeffs.iter().enumerate() {
                rem[k + j] -= &c * b;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(ZPoly::from_big(quot))
    }

    /// Pseudo-remainder: `lc(other)^(deg self - deg other + 1) * self mod other`.
    fn pseudo_rem(&self, other: &Self) -> Self {
        let mut r = self.clone();
        let dq = other.degree();
        let lq = other.leading();
        while !r.is_zero() && r.degree() >= dq {
            let shift = (r.degree() - dq) as usize;
            let lead_r = r.leading();
            r = r.mul_big(&lq).sub(&other.shift_up(shift).mul_big(&lead_r));
        }
        r
    }

    /// Polynomial gcd including integer content, leading coefficient positive.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.positive_leading();
        }
        if other.is_zero() {
            return self.positive_leading();
        }
        let c = self.content().gcd(&other.content());
        let mut p = self.primitive_part();
        let mut q = other.primitive_part();
        if p.degree() < q.degree() {
            std::mem::swap(&mut p, &mut q);
        }
        while !q.is_zero() {
            let r = p.pseudo_rem(&q).primitive_part();
            p = q;
            q = r;
        }
        p.primitive_part().mul_big(&c).positive_leading()
    }

    fn positive_leading(&self) -> Self {
        if self.leading().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{i}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> ZPoly {
        ZPoly::from_coeffs(c)
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[1, 2]); // 1 + 2q
        let b = p(&[-1, 1]); // q - 1
        assert_eq!(a.mul(&b), p(&[-1, -1, 2]));
        assert_eq!(a.add(&b), p(&[0, 3]));
        assert_eq!(a.sub(&a), ZPoly::zero());
        assert_eq!(p(&[0, 0, 6]).degree(), 2);
    }

    #[test]
    fn division_exact_and_inexact() {
        let a = p(&[-1, 0, 1]); // q^2 - 1
        let b = p(&[1, 1]); // q + 1
        assert_eq!(a.divexact(&b), p(&[-1, 1]));
        assert!(a.try_div(&p(&[2, 1])).is_none());
        assert!(p(&[1, 1]).try_div(&p(&[0, 2])).is_none());
    }

    #[test]
    fn gcd_with_content() {
        let a = p(&[2, 2]).mul(&p(&[-1, 1])); // 2(q+1)(q-1)
        let b = p(&[0, 4, 4]); // 4q(q+1)
        assert_eq!(a.gcd(&b), p(&[2, 2]));
        assert_eq!(p(&[0, 0, 1]).gcd(&p(&[0, 3])), p(&[0, 1]));
        assert_eq!(ZPoly::zero().gcd(&p(&[-3])), p(&[3]));
    }

    #[test]
    fn eval_descends_to_rationals() {
        let a = p(&[1, 0, 1]); // q^2 + 1
        let q = BigRational::new(BigInt::from(5), BigInt::from(3));
        assert_eq!(a.eval(&q), BigRational::new(BigInt::from(34), BigInt::from(9)));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[1, 0, 1]).to_string(), "q^2 + 1");
        assert_eq!(p(&[-2, 1]).to_string(), "q - 2");
        assert_eq!(p(&[0, -3]).to_string(), "-3*q");
        assert_eq!(ZPoly::zero().to_string(), "0");
    }
}
