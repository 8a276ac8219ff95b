//! Exact scalars: rational functions in the quantum parameter `q`.
//!
//! A [`QRat`] is a reduced fraction of integer polynomials in `q`. Negative
//! powers of `q` live in the denominator, so Laurent expressions such as
//! `q + q^-1` are stored as `(q^2 + 1)/q`. The denominator is normalized to
//! have positive leading coefficient and to share no factor with the
//! numerator.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::rational::BigRational;
use num::Zero;

use super::poly::ZPoly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: ZPoly,
    den: ZPoly,
}

impl QRat {
    pub fn new(num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.is_zero(), "QRat with zero denominator");
        if num.is_zero() {
            return QRat {
                num: ZPoly::zero(),
                den: ZPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.divexact(&g);
        let mut den = den.divexact(&g);
        if den.leading() < num::BigInt::zero() {
            num = num.neg();
            den = den.neg();
        }
        QRat { num, den }
    }

    pub fn zero() -> Self {
        QRat {
            num: ZPoly::zero(),
            den: ZPoly::one(),
        }
    }

    pub fn one() -> Self {
        QRat {
            num: ZPoly::one(),
            den: ZPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        QRat {
            num: ZPoly::constant(n),
            den: ZPoly::one(),
        }
    }

    pub fn from_poly(p: ZPoly) -> Self {
        QRat {
            num: p,
            den: ZPoly::one(),
        }
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            QRat::from_poly(ZPoly::monomial(1, k as usize))
        } else {
            QRat {
                num: ZPoly::one(),
                den: ZPoly::monomial(1, (-k) as usize),
            }
        }
    }

    pub fn num(&self) -> &ZPoly {
        &self.num
    }

    pub fn den(&self) -> &ZPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        QRat::new(self.den.clone(), self.num.clone())
    }

    /// Evaluate at a rational value of `q`; `None` if the denominator vanishes.
    pub fn eval(&self, q: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(q) / d)
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        QRat::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        QRat::new(
            self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        QRat::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Div for &QRat {
    type Output = QRat;
    fn div(self, rhs: &QRat) -> QRat {
        assert!(!rhs.is_zero(), "division by zero");
        QRat::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// The quantum integer `[i]_q = (q^i - q^-i)/(q - q^-1)`.
pub fn qint(i: i64) -> QRat {
    let n = i.unsigned_abs() as usize;
    if n == 0 {
        return QRat::zero();
    }
    // (q^i - q^-i)/(q - q^-1) = q^{1-i} (q^{2i} - 1)/(q^2 - 1)
    let num = ZPoly::monomial(1, 2 * n).sub(&ZPoly::one());
    let den = ZPoly::monomial(1, 2).sub(&ZPoly::one());
    let val = &QRat::from_poly(num.divexact(&den)) * &QRat::q_pow(1 - n as i64);
    if i < 0 {
        -&val
    } else {
        val
    }
}
