//! Multivariate polynomials in the torus coordinates `u_1, ..., u_n` with
//! coefficients in the `q`-field.
//!
//! These carry the generic singular vectors of the degeneration machinery.
//! The gcd (needed to strip common content when renormalizing projective
//! coordinates) uses the classical primitive remainder sequence, recursing on
//! the number of variables. Degrees and variable counts stay small here.

use std::collections::BTreeMap;
use std::fmt;

use super::qrat::QRat;

/// Sparse multivariate polynomial; keys are exponent vectors of fixed length.
#[derive(Clone, PartialEq, Eq)]
pub struct UPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, QRat>,
}

impl UPoly {
    pub fn zero(nvars: usize) -> Self {
        UPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: QRat) -> Self {
        let mut p = UPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        UPoly::constant(nvars, QRat::one())
    }

    /// The variable `u_k` (0-based), optionally scaled.
    pub fn var(nvars: usize, k: usize, coeff: QRat) -> Self {
        assert!(k < nvars);
        let mut p = UPoly::zero(nvars);
        if !coeff.is_zero() {
            let mut e = vec![0u16; nvars];
            e[k] = 1;
            p.terms.insert(e, coeff);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &QRat)> {
        self.terms.iter()
    }

    fn insert(&mut self, e: Vec<u16>, c: QRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        UPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = UPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert(e, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &QRat) -> Self {
        if c.is_zero() {
            return UPoly::zero(self.nvars);
        }
        UPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Substitute `u_i := q^m * u_j` (both 0-based, `i != j`).
    pub fn substitute(&self, i: usize, j: usize, m: i64) -> Self {
        assert!(i != j && i < self.nvars && j < self.nvars);
        let qm = QRat::q_pow(m);
        let mut out = UPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let ei = e[i];
            let mut e2 = e.clone();
            e2[i] = 0;
            e2[j] += ei;
            let mut coeff = c.clone();
            for _ in 0..ei {
                coeff = &coeff * &qm;
            }
            out.insert(e2, coeff);
        }
        out
    }

    /// Substitute `u_i := c` for a scalar `c`.
    pub fn substitute_const(&self, i: usize, c: &QRat) -> Self {
        assert!(i < self.nvars);
        let mut out = UPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            let mut e2 = e.clone();
            let ei = e2[i];
            e2[i] = 0;
            let mut coeff = v.clone();
            for _ in 0..ei {
                coeff = &coeff * c;
            }
            out.insert(e2, coeff);
        }
        out
    }

    /// The unique coefficient of a constant polynomial, if constant.
    pub fn as_constant(&self) -> Option<QRat> {
        if self.is_zero() {
            return Some(QRat::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.iter().all(|&x| x == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    fn degree_in(&self, v: usize) -> u16 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    /// View as univariate in `v`: coefficients (in the remaining variables)
    /// by ascending power of `v`.
    fn coeffs_in(&self, v: usize) -> Vec<UPoly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![UPoly::zero(self.nvars); d + 1];
        for (e, c) in &self.terms {
            let k = e[v] as usize;
            let mut e2 = e.clone();
            e2[v] = 0;
            out[k].insert(e2, c.clone());
        }
        out
    }

    fn from_coeffs_in(nvars: usize, v: usize, coeffs: &[UPoly]) -> UPoly {
        let mut out = UPoly::zero(nvars);
        for (k, c) in coeffs.iter().enumerate() {
            for (e, q) in &c.terms {
                let mut e2 = e.clone();
                e2[v] += k as u16;
                out.insert(e2, q.clone());
            }
        }
        out
    }

    /// Exact division; panics when the division is not exact.
    pub fn divexact(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = UPoly::zero(self.nvars);
        let (de, dc) = other
            .terms
            .iter()
            .next_back()
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        while !rem.is_zero() {
            let (re, rc) = rem
                .terms
                .iter()
                .next_back()
                .map(|(e, c)| (e.clone(), c.clone()))
                .unwrap();
            let e: Option<Vec<u16>> = re
                .iter()
                .zip(&de)
                .map(|(a, b)| a.checked_sub(*b))
                .collect();
            let Some(e) = e else {
                panic!("divexact: leading monomial not divisible")
            };
            let c = &rc / &dc;
            let mut t = UPoly::zero(self.nvars);
            t.insert(e, c);
            rem = rem.sub(&t.mul(other));
            quot = quot.add(&t);
        }
        quot
    }

    /// Gcd of two polynomials, normalized so its lex-leading coefficient is 1.
    pub fn gcd(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let g = gcd_rec(self, other, self.nvars);
        if g.is_zero() {
            return g;
        }
        let lead = g.terms.iter().next_back().unwrap().1.clone();
        g.scale(&lead.inv())
    }
}

/// Recursive gcd treating variables `0..active` as live.
fn gcd_rec(a: &UPoly, b: &UPoly, active: usize) -> UPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    // Find the top live variable actually used.
    let mut v = None;
    for k in (0..active).rev() {
        if a.degree_in(k) > 0 || b.degree_in(k) > 0 {
            v = Some(k);
            break;
        }
    }
    let Some(v) = v else {
        // Both constants in the live variables: over a field the gcd is 1.
        return UPoly::one(a.nvars);
    };

    let content = |p: &UPoly| -> UPoly {
        let cs = p.coeffs_in(v);
        let mut g = UPoly::zero(p.nvars);
        for c in cs.iter().filter(|c| !c.is_zero()) {
            g = gcd_rec(&g, c, v);
        }
        g
    };

    let ca = content(a);
    let cb = content(b);
    let cg = gcd_rec(&ca, &cb, v);
    let mut p = a.divexact(&ca).coeffs_in(v);
    let mut q = b.divexact(&cb).coeffs_in(v);
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    // Primitive PRS in u_v with coefficients in the remaining variables.
    loop {
        if q.iter().all(|c| c.is_zero()) {
            break;
        }
        let r = pseudo_rem_uni(&p, &q, a.nvars, v);
        p = q;
        q = r;
        // Make q primitive to keep sizes down.
        let qq = UPoly::from_coeffs_in(a.nvars, v, &q);
        if !qq.is_zero() {
            let c = content(&qq);
            q = qq.divexact(&c).coeffs_in(v);
        } else {
            q = vec![UPoly::zero(a.nvars)];
        }
    }
    let pp = UPoly::from_coeffs_in(a.nvars, v, &p);
    let c = content(&pp);
    pp.divexact(&c).mul(&cg)
}

fn pseudo_rem_uni(p: &[UPoly], q: &[UPoly], nvars: usize, v: usize) -> Vec<UPoly> {
    let mut r: Vec<UPoly> = p.to_vec();
    let dq = q.len() - 1;
    let lq = q[dq].clone();
    loop {
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
        if r.is_empty() || r.len() - 1 < dq {
            break;
        }
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        // r = r*lq - lr * q * u^(dr-dq)
        let mut out = vec![UPoly::zero(nvars); dr + 1];
        for (k, c) in r.iter().enumerate() {
            out[k] = c.mul(&lq);
        }
        for (k, c) in q.iter().enumerate() {
            let t = c.mul(&lr);
            out[k + dr - dq] = out[k + dr - dq].sub(&t);
        }
        r = out;
    }
    let _ = v;
    if r.is_empty() {
        r.push(UPoly::zero(nvars));
    }
    r
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (k, &p) in e.iter().enumerate() {
                if p == 1 {
                    write!(f, "*u{}", k + 1)?;
                } else if p > 1 {
                    write!(f, "*u{}^{}", k + 1, p)?;
                }
            }
        }
        Ok(())
    }
}
