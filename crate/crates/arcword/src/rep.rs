//! The representation-theoretic core: generator actions on tensor powers of
//! the two-dimensional module, the Catalan basis of weight-zero singular
//! vectors, exact computation of the trivial-submodule dimension `h(w)` as a
//! nullity over the `q`-field, R-matrices, the singular vectors attached to
//! irreducible arc configurations, pivots, and fast rule-based evaluation.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arc::{self, ArcConfig};
use crate::scalar::{QMat, QRat, ZPoly};
use crate::signs::SignSeq;
use crate::word::Word;
use crate::{Error, Result};

/// Default length cap for exact computations; beyond it the matrices get
/// large enough to warrant an explicit override.
pub const DEFAULT_LEN_CAP: usize = 14;

/// Element of a tensor power of the two-dimensional module, as a finitely
/// supported map from sign sequences to exact scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularVector {
    len: usize,
    coeffs: BTreeMap<SignSeq, QRat>,
}

impl SingularVector {
    pub fn zero(len: usize) -> Self {
        SingularVector {
            len,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn monomial(seq: SignSeq, c: QRat) -> Self {
        let mut v = SingularVector::zero(seq.len());
        v.add_term(seq, c);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, seq: SignSeq, c: QRat) {
        assert_eq!(seq.len(), self.len);
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(seq) {
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
        assert_eq!(self.len, other.len);
        let mut out = self.clone();
        for (s, c) in &other.coeffs {
            out.add_term(*s, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&QRat::from_int(-1)))
    }

    pub fn scale(&self, c: &QRat) -> Self {
        if c.is_zero() {
            return SingularVector::zero(self.len);
        }
        SingularVector {
            len: self.len,
            coeffs: self.coeffs.iter().map(|(s, v)| (*s, v * c)).collect(),
        }
    }

    pub fn coeff(&self, seq: &SignSeq) -> QRat {
        self.coeffs.get(seq).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SignSeq, &QRat)> {
        self.coeffs.iter()
    }

    /// Largest monomial in the `+ > -` lexicographic order.
    pub fn leading_term(&self) -> Option<(SignSeq, QRat)> {
        self.coeffs.iter().next_back().map(|(s, c)| (*s, c.clone()))
    }

    /// All supported sequences share the same weight `#(+) - #(-)`.
    pub fn is_weight_homogeneous(&self) -> bool {
        let mut it = self.coeffs.keys();
        let Some(first) = it.next() else { return true };
        let w = first.weight();
        it.all(|s| s.weight() == w)
    }
}

fn check_len(w: &Word, v: &SingularVector) -> Result<()> {
    if w.len() != v.len() {
        return Err(Error::Domain(format!(
            "vector length {} does not match word length {}",
            v.len(),
            w.len()
        )));
    }
    Ok(())
}

/// Action of `f_0` (coproduct `f_0 ⊗ 1 + K ⊗ f_0`, evaluation `q^{-a} e`):
/// flips a `-` at position `i` to `+` with weight `q^{-a_i} prod_{j<i} q^{e_j}`.
pub fn act_f0(w: &Word, v: &SingularVector) -> Result<SingularVector> {
    check_len(w, v)?;
    let mut out = SingularVector::zero(v.len());
    for (seq, c) in v.terms() {
        let mut prefix = 0i64;
        for i in 1..=v.len() {
            if !seq.is_plus(i) {
                let e = prefix - w.letter(i);
                out.add_term(seq.with_plus(i), c * &QRat::q_pow(e));
            }
            prefix += if seq.is_plus(i) { 1 } else { -1 };
        }
    }
    Ok(out)
}

/// Action of `e_1` (coproduct `e_1 ⊗ K + 1 ⊗ e_1`): flips `-` to `+` at `i`
/// with weight `prod_{j>i} q^{e_j}`.
pub fn act_e1(w: &Word, v: &SingularVector) -> Result<SingularVector> {
    check_len(w, v)?;
    let mut out = SingularVector::zero(v.len());
    for (seq, c) in v.terms() {
        let mut suffix = 0i64;
        for i in (1..=v.len()).rev() {
            if !seq.is_plus(i) {
                out.add_term(seq.with_plus(i), c * &QRat::q_pow(suffix));
            }
            suffix += if seq.is_plus(i) { 1 } else { -1 };
        }
    }
    Ok(out)
}

/// Action of `e_0` (coproduct `e_0 ⊗ K^{-1} + 1 ⊗ e_0`, evaluation `q^a f`).
pub fn act_e0(w: &Word, v: &SingularVector) -> Result<SingularVector> {
    check_len(w, v)?;
    let mut out = SingularVector::zero(v.len());
    for (seq, c) in v.terms() {
        let mut suffix = 0i64;
        for i in (1..=v.len()).rev() {
            if seq.is_plus(i) {
                let e = w.letter(i) - suffix;
                out.add_term(seq.with_minus(i), c * &QRat::q_pow(e));
            }
            suffix += if seq.is_plus(i) { 1 } else { -1 };
        }
    }
    Ok(out)
}

/// Action of `f_1` (coproduct `f_1 ⊗ 1 + K^{-1} ⊗ f_1`).
pub fn act_f1(w: &Word, v: &SingularVector) -> Result<SingularVector> {
    check_len(w, v)?;
    let mut out = SingularVector::zero(v.len());
    for (seq, c) in v.terms() {
        let mut prefix = 0i64;
        for i in 1..=v.len() {
            if seq.is_plus(i) {
                out.add_term(seq.with_minus(i), c * &QRat::q_pow(-prefix));
            }
            prefix += if seq.is_plus(i) { 1 } else { -1 };
        }
    }
    Ok(out)
}

/// Action of `K`: scales each monomial by `q^{weight}`.
pub fn act_k(w: &Word, v: &SingularVector) -> Result<SingularVector> {
    check_len(w, v)?;
    let mut out = SingularVector::zero(v.len());
    for (seq, c) in v.terms() {
        out.add_term(*seq, c * &QRat::q_pow(seq.weight()));
    }
    Ok(out)
}

/// The Catalan basis of the weight-zero singular space of the `2n`-fold
/// tensor power, ordered by descending lexicographic left-end sets.
pub struct CatalanBasis {
    pub n: usize,
    pub configs: Vec<ArcConfig>,
    index: HashMap<ArcConfig, usize>,
}

impl CatalanBasis {
    pub fn new(n: usize) -> Self {
        let configs = arc::ucatconf(n);
        let index = configs
            .iter()
            .enumerate()
            .map(|(k, c)| (c.clone(), k))
            .collect();
        CatalanBasis { n, configs, index }
    }

    pub fn dim(&self) -> usize {
        self.configs.len()
    }

    pub fn index_of(&self, c: &ArcConfig) -> Option<usize> {
        self.index.get(c).copied()
    }

    /// Expand coordinates over the Catalan basis into the standard basis.
    pub fn expand(&self, coords: &BTreeMap<usize, QRat>) -> SingularVector {
        let mut out = SingularVector::zero(2 * self.n);
        for (&k, c) in coords {
            for (seq, swaps) in catalan_monomials(&self.configs[k]) {
                let sign = if swaps % 2 == 0 { 1 } else { -1 };
                let coeff = &QRat::q_pow(-swaps) * &QRat::from_int(sign);
                out.add_term(seq, c * &coeff);
            }
        }
        out
    }
}

/// Standard-basis expansion of the Catalan vector `v_C`: each subset `S` of
/// arcs contributes the monomial with `S` swapped, with coefficient
/// `(-1)^{|S|} q^{-|S|}`. Returns `(sequence, |S|)` pairs.
fn catalan_monomials(c: &ArcConfig) -> Vec<(SignSeq, i64)> {
    let n = c.n();
    let base = arc::left_end_map(c);
    let mut out = Vec::with_capacity(1 << n);
    for s in 0..(1u32 << n) {
        let mut seq = base;
        for (k, &(i, j)) in c.arcs().iter().enumerate() {
            if s >> k & 1 == 1 {
                seq = seq.swapped(i as usize, j as usize);
            }
        }
        out.push((seq, s.count_ones() as i64));
    }
    out
}

/// The Catalan vector `v_C = prod (1 - q^{-1} P_{ij}) eps_C` for a
/// non-crossing configuration; its leading term is `eps_C`.
pub fn catalan_vector(c: &ArcConfig) -> Result<SingularVector> {
    if !c.is_catalan() {
        return Err(Error::Domain(format!("{c} has crossing arcs")));
    }
    let mut v = SingularVector::zero(c.positions());
    for (seq, k) in catalan_monomials(c) {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        v.add_term(seq, &QRat::q_pow(-k) * &QRat::from_int(sign));
    }
    Ok(v)
}

/// Sparse Laurent polynomial in `q` with integer coefficients.
type Laurent = BTreeMap<i64, i64>;

fn laurent_add(l: &mut Laurent, e: i64, c: i64) {
    let v = l.entry(e).or_insert(0);
    *v += c;
    if *v == 0 {
        l.remove(&e);
    }
}

fn laurent_to_qrat(l: &Laurent) -> QRat {
    if l.is_empty() {
        return QRat::zero();
    }
    let min = *l.keys().next().unwrap();
    let shift = min.min(0);
    let deg = (*l.keys().next_back().unwrap() - shift) as usize;
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    for (&e, &c) in l {
        coeffs[(e - shift) as usize] = BigInt::from(c);
    }
    let num = ZPoly::from_big(coeffs);
    if shift < 0 {
        QRat::new(num, ZPoly::monomial(1, (-shift) as usize))
    } else {
        QRat::from_poly(num)
    }
}

fn laurent_eval(l: &Laurent, q: &BigRational, inv: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for (&e, &c) in l {
        let b = if e >= 0 {
            num::pow::pow(q.clone(), e as usize)
        } else {
            num::pow::pow(inv.clone(), (-e) as usize)
        };
        acc += b * BigRational::from(BigInt::from(c));
    }
    acc
}

/// The matrix of `f_0` from the Catalan basis of weight-zero singular
/// vectors to standard monomials of weight `+2`.
pub struct F0Matrix {
    pub rows: Vec<SignSeq>,
    pub cols: usize,
    entries: HashMap<(usize, usize), Laurent>,
}

impl F0Matrix {
    pub fn nullity_at(&self, q: &BigRational) -> usize {
        let inv = q.clone().recip();
        let mut m = vec![vec![BigRational::zero(); self.cols]; self.rows.len()];
        for ((r, c), l) in &self.entries {
            m[*r][*c] = laurent_eval(l, q, &inv);
        }
        self.cols - crate::scalar::rational_rank(m)
    }

    /// Debug export: rows keyed by sign sequence, entries as scalar strings.
    pub fn to_json(&self) -> serde_json::Value {
        let mut cells: Vec<(usize, usize, String)> = self
            .entries
            .iter()
            .map(|(&(r, c), l)| (r, c, laurent_to_qrat(l).to_string()))
            .collect();
        cells.sort();
        serde_json::json!({
            "rows": self.rows.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            "cols": self.cols,
            "entries": cells
                .into_iter()
                .map(|(r, c, v)| serde_json::json!([r, c, v]))
                .collect::<Vec<_>>(),
        })
    }

    pub fn to_qmat(&self) -> QMat {
        let mut m = QMat::zeros(self.rows.len(), self.cols);
        for ((r, c), l) in &self.entries {
            m.set(*r, *c, laurent_to_qrat(l));
        }
        m
    }
}

/// Assemble the `f_0` matrix of a word over the Catalan basis.
pub fn f0_matrix(w: &Word, basis: &CatalanBasis) -> F0Matrix {
    assert_eq!(w.len(), 2 * basis.n);
    let mut sparse: Vec<(SignSeq, usize, i64, i64)> = Vec::new();
    for (col, c) in basis.configs.iter().enumerate() {
        for (seq, k) in catalan_monomials(c) {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            // act_f0 on the monomial: flip each '-' at position i
            let mut prefix = 0i64;
            for i in 1..=w.len() {
                if !seq.is_plus(i) {
                    let e = prefix - w.letter(i) - k;
                    sparse.push((seq.with_plus(i), col, e, sign));
                }
                prefix += if seq.is_plus(i) { 1 } else { -1 };
            }
        }
    }
    // deterministic row order: descending sign sequences
    let seqs: BTreeSet<SignSeq> = sparse.iter().map(|&(s, _, _, _)| s).collect();
    let rows: Vec<SignSeq> = seqs.into_iter().rev().collect();
    let row_ix: HashMap<SignSeq, usize> =
        rows.iter().enumerate().map(|(k, s)| (*s, k)).collect();
    let mut entries: HashMap<(usize, usize), Laurent> = HashMap::new();
    for (seq, col, e, c) in sparse {
        laurent_add(entries.entry((row_ix[&seq], col)).or_default(), e, c);
    }
    entries.retain(|_, l| !l.is_empty());
    F0Matrix {
        rows,
        cols: basis.dim(),
        entries,
    }
}

/// How an exact value was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Method {
    OddLength,
    Rule(&'static str),
    Specialized,
    Symbolic,
}

#[derive(Clone, Debug, Default)]
pub struct HOptions {
    /// Always run the symbolic elimination.
    pub certify: bool,
    /// Lift the default length cap.
    pub force: bool,
}

#[derive(Clone, Debug)]
pub struct HReport {
    pub word: Word,
    pub h: usize,
    pub method: Method,
    /// `|IConf(w)|`, a lower bound.
    pub lower: usize,
    /// `|SConf(w)|`, an upper bound.
    pub upper: usize,
    pub conf_count: usize,
}

/// Two fixed rational probes in `(1,3)` with numerator and denominator below
/// 100, drawn from a seeded generator so runs are reproducible.
pub fn specialization_probes() -> Vec<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa7c_0de);
    let mut out: Vec<BigRational> = Vec::new();
    while out.len() < 2 {
        let den = rng.gen_range(30..99i64);
        let num = rng.gen_range(den + 1..(3 * den).min(99));
        let r = BigRational::new(BigInt::from(num), BigInt::from(den));
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// Exact trivial-submodule dimension of a word. Odd lengths give 0.
/// Panics past the length cap; use [`h_report`] with options to override.
pub fn h_exact(w: &Word) -> usize {
    h_report(w, &HOptions::default()).expect("within caps").h
}

/// Exact `h(w)` with bound data and the method actually used. Default path:
/// evaluate the `f_0` matrix at two rational values of `q`; when the two
/// nullities agree and sit inside the `[|IConf|, |SConf|]` sandwich, accept;
/// otherwise (or with `certify`) run the fraction-free symbolic elimination.
pub fn h_report(w: &Word, opts: &HOptions) -> Result<HReport> {
    if w.len() % 2 != 0 {
        return Ok(HReport {
            word: w.clone(),
            h: 0,
            method: Method::OddLength,
            lower: 0,
            upper: 0,
            conf_count: 0,
        });
    }
    if w.len() > DEFAULT_LEN_CAP && !opts.force {
        return Err(Error::Domain(format!(
            "word length {} exceeds the default cap {DEFAULT_LEN_CAP}; memory \
             grows like the central binomial coefficient (force to override)",
            w.len()
        )));
    }
    let lower = arc::irreducible_configs(w).len();
    let upper = arc::steady_configs(w).len();
    let conf_count = arc::all_configs(w).len();
    let basis = CatalanBasis::new(w.len() / 2);
    let m = f0_matrix(w, &basis);
    if !opts.certify {
        let probes = specialization_probes();
        let n1 = m.nullity_at(&probes[0]);
        let n2 = m.nullity_at(&probes[1]);
        if n1 == n2 && lower <= n1 && n1 <= upper {
            return Ok(HReport {
                word: w.clone(),
                h: n1,
                method: Method::Specialized,
                lower,
                upper,
                conf_count,
            });
        }
    }
    let h = m.cols - m.to_qmat().rank_symbolic();
    if h < lower || h > upper {
        return Err(Error::Internal(format!(
            "h({w}) = {h} violates the sandwich [{lower}, {upper}]"
        )));
    }
    Ok(HReport {
        word: w.clone(),
        h,
        method: Method::Symbolic,
        lower,
        upper,
        conf_count,
    })
}

/// Exact `h` without the sandwich guard: accept agreeing specializations,
/// fall back to symbolic elimination on disagreement. Used by verification
/// harnesses that test the bounds themselves.
pub fn h_exact_unguarded(w: &Word) -> usize {
    if w.len() % 2 != 0 {
        return 0;
    }
    let basis = CatalanBasis::new(w.len() / 2);
    let m = f0_matrix(w, &basis);
    let probes = specialization_probes();
    let n1 = m.nullity_at(&probes[0]);
    let n2 = m.nullity_at(&probes[1]);
    if n1 == n2 {
        return n1;
    }
    m.cols - m.to_qmat().rank_symbolic()
}

/// Basis of the space of trivial submodules of a word.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub word: Word,
    pub basis: Vec<SingularVector>,
}

impl HomSpace {
    /// Serialize as a list of (sign sequence, scalar) records per vector.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "word": self.word.to_json(),
            "basis": self.basis.iter().map(|v| {
                v.terms()
                    .map(|(s, c)| serde_json::json!([s.to_string(), c.to_string()]))
                    .collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

/// Symbolic kernel of `f_0` on the weight-zero singular space, re-expressed
/// in the standard basis, with annihilation checks for `e_1`, `e_0`, `f_1`
/// and `K v = v`.
pub fn hom_space(w: &Word) -> Result<HomSpace> {
    if w.len() % 2 != 0 {
        return Ok(HomSpace {
            word: w.clone(),
            basis: Vec::new(),
        });
    }
    let basis = CatalanBasis::new(w.len() / 2);
    let m = f0_matrix(w, &basis);
    let kernel = m.to_qmat().nullspace_symbolic();
    let mut out = Vec::new();
    type Act = fn(&Word, &SingularVector) -> Result<SingularVector>;
    for k in kernel {
        let coords: BTreeMap<usize, QRat> = k
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let v = basis.expand(&coords);
        for (op, name) in [
            (act_f0 as Act, "f0"),
            (act_e1 as Act, "e1"),
            (act_e0 as Act, "e0"),
            (act_f1 as Act, "f1"),
        ] {
            if !op(w, &v)?.is_zero() {
                return Err(Error::Internal(format!(
                    "kernel vector of {w} is not annihilated by {name}"
                )));
            }
        }
        if act_k(w, &v)? != v {
            return Err(Error::Internal(format!(
                "kernel vector of {w} is not fixed by K"
            )));
        }
        out.push(v);
    }
    Ok(HomSpace {
        word: w.clone(),
        basis: out,
    })
}

/// `dim Hom(w1, w2) = h(w2 . dual(w1))`.
pub fn hom_dim(w1: &Word, w2: &Word) -> usize {
    h_exact(&w2.concat(&w1.dual()))
}

/// Pivot set: leading sign sequences of a row-reduced basis of the space of
/// trivial submodules, under the `+ > -` lexicographic order.
pub fn pivots(w: &Word) -> Result<Vec<SignSeq>> {
    let hom = hom_space(w)?;
    let mut vecs = hom.basis;
    let mut out = Vec::new();
    loop {
        let Some(best) = vecs
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .max_by_key(|(_, v)| v.leading_term().unwrap().0)
            .map(|(k, _)| k)
        else {
            break;
        };
        let v = vecs.swap_remove(best);
        let (lead, c) = v.leading_term().unwrap();
        out.push(lead);
        for u in &mut vecs {
            let uc = u.coeff(&lead);
            if !uc.is_zero() {
                *u = u.sub(&v.scale(&(&uc / &c)));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The 4x4 R-matrix on a pair of two-dimensional evaluation modules with
/// parameters `(a, b)`, in the basis `(++, +-, -+, --)`. It intertwines the
/// word `(a, b)` with `(b, a)`.
pub fn rmatrix_2dim(a: i64, b: i64) -> [[QRat; 4]; 4] {
    let z = QRat::q_pow(a - b);
    let q2 = QRat::q_pow(2);
    let corner = &z - &q2;
    let mid_same = &z - &(&z * &q2);
    let mid_new = &QRat::q_pow(a - b + 1) - &QRat::q_pow(1);
    let low = &QRat::one() - &q2;
    let zero = QRat::zero;
    [
        [corner.clone(), zero(), zero(), zero()],
        [zero(), mid_same, mid_new.clone(), zero()],
        [zero(), mid_new, low, zero()],
        [zero(), zero(), zero(), corner],
    ]
}

/// Eigenvalues of the intertwiner on a product of two evaluation strings:
/// `lambda_k = c prod_{l<k} (1 - z q^{m+n-2l}) prod_{l=k}^{min-1} (z - q^{m+n-2l})`
/// with `z = q^{a-b}` built from the evaluation parameters.
pub fn rmatrix_eigenvalues(
    alpha1: i64,
    beta1: i64,
    alpha2: i64,
    beta2: i64,
    c: &QRat,
) -> Result<Vec<QRat>> {
    for (a, b) in [(alpha1, beta1), (alpha2, beta2)] {
        if b < a || (b - a).rem_euclid(2) != 0 {
            return Err(Error::Domain(format!("invalid string [{a},{b}]")));
        }
    }
    let m = (beta1 - alpha1) / 2 + 1;
    let n = (beta2 - alpha2) / 2 + 1;
    let a = (alpha1 + beta1) / 2;
    let b = (alpha2 + beta2) / 2;
    let z = QRat::q_pow(a - b);
    let kmax = m.min(n);
    let mut out = Vec::new();
    for k in 0..=kmax {
        let mut acc = c.clone();
        for l in 0..k {
            acc = &acc * &(&QRat::one() - &(&z * &QRat::q_pow(m + n - 2 * l)));
        }
        for l in k..kmax {
            acc = &acc * &(&z - &QRat::q_pow(m + n - 2 * l));
        }
        out.push(acc);
    }
    Ok(out)
}

/// Scalar abstraction so the Catalan-coordinate R-matrix rules can run over
/// the `q`-field or over multivariate polynomial coefficients.
pub trait RingElem: Clone {
    fn r_add(&self, other: &Self) -> Self;
    fn r_mul(&self, other: &Self) -> Self;
    fn r_is_zero(&self) -> bool;
}

impl RingElem for QRat {
    fn r_add(&self, other: &Self) -> Self {
        self + other
    }
    fn r_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn r_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl RingElem for crate::scalar::UPoly {
    fn r_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn r_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn r_is_zero(&self) -> bool {
        self.is_zero()
    }
}

/// Apply the four-case R-matrix rules at slots `(i, i+1)` to a vector in
/// Catalan coordinates (keyed by configuration). `c_same` multiplies the
/// unchanged configuration, `c_new` the re-glued one, `c_short` the isolated
/// short-arc case.
pub fn rmatrix_catalan_rules<S: RingElem>(
    coords: &BTreeMap<ArcConfig, S>,
    i: u16,
    c_same: &S,
    c_new: &S,
    c_short: &S,
) -> BTreeMap<ArcConfig, S> {
    let mut out: BTreeMap<ArcConfig, S> = BTreeMap::new();
    let push = |out: &mut BTreeMap<ArcConfig, S>, cfg: ArcConfig, v: S| {
        if v.r_is_zero() {
            return;
        }
        match out.entry(cfg) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().r_add(&v);
                if s.r_is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    };
    for (cfg, c) in coords {
        let ((ai, aj), left_i) = cfg.arc_at(i).expect("position matched");
        if (ai, aj) == (i, i + 1) {
            // short arc right under the acting slots
            push(&mut out, cfg.clone(), c.r_mul(c_short));
            continue;
        }
        let ((bi, bj), left_j) = cfg.arc_at(i + 1).expect("position matched");
        let swapped = match (left_i, left_j) {
            // arcs (l, i), (i+1, r) -> (l, r), (i, i+1)
            (false, true) => vec![(ai, bj), (i, i + 1)],
            // nested left ends: (i, R), (i+1, r) -> (i, i+1), (r, R)
            (true, true) => vec![(i, i + 1), (bj, aj)],
            // nested right ends: (l2, i), (l1, i+1) -> (l1, l2), (i, i+1)
            (false, false) => vec![(bi, ai), (i, i + 1)],
            (true, false) => unreachable!("crossing arcs in a Catalan configuration"),
        };
        let mut arcs: Vec<(u16, u16)> = cfg
            .arcs()
            .iter()
            .copied()
            .filter(|&a| a != (ai, aj) && a != (bi, bj))
            .collect();
        arcs.extend(swapped);
        push(&mut out, cfg.clone(), c.r_mul(c_same));
        push(&mut out, ArcConfig::new(arcs), c.r_mul(c_new));
    }
    out
}

/// R-matrix action `R_{i,2n}(a, b)` on a vector in Catalan coordinates over
/// the `q`-field.
pub fn rmatrix_on_catalan(
    coords: &BTreeMap<ArcConfig, QRat>,
    i: u16,
    a: i64,
    b: i64,
) -> BTreeMap<ArcConfig, QRat> {
    let c_same = &QRat::q_pow(a - b) - &QRat::q_pow(2);
    let c_new = &QRat::q_pow(a - b + 1) - &QRat::q_pow(1);
    let c_short = &QRat::one() - &QRat::q_pow(a + 2 - b);
    rmatrix_catalan_rules(coords, i, &c_same, &c_new, &c_short)
}

/// The singular vector attached to an irreducible arc configuration, built
/// by the crossing-resolution recursion; its leading term has `+` exactly at
/// the left ends of the configuration.
pub fn sigma_vector(w: &Word, c: &ArcConfig) -> Result<SingularVector> {
    if c.positions() != w.len() || !c.is_valid_for(w) {
        return Err(Error::Domain(format!("{c} is not a configuration of {w}")));
    }
    if !c.is_irreducible(w) {
        return Err(Error::Domain(format!(
            "{c} has a reducible crossing in {w}"
        )));
    }
    let coords = sigma_coords(w.letters(), c)?;
    let basis = CatalanBasis::new(w.len() / 2);
    let ix: BTreeMap<usize, QRat> = coords
        .into_iter()
        .map(|(cfg, v)| (basis.index_of(&cfg).expect("catalan"), v))
        .collect();
    let v = basis.expand(&ix);
    debug_assert_eq!(v.leading_term().map(|(s, _)| s), Some(arc::left_end_map(c)));
    Ok(v)
}

fn sigma_coords(letters: &[i64], c: &ArcConfig) -> Result<BTreeMap<ArcConfig, QRat>> {
    if c.is_catalan() {
        let mut m = BTreeMap::new();
        m.insert(c.clone(), QRat::one());
        return Ok(m);
    }
    // crossing with minimal i2, then maximal i1
    let ((i1, j1), (i2, j2)) = c
        .crossings()
        .into_iter()
        .min_by_key(|&((i1, _), (i2, _))| (i2, std::cmp::Reverse(i1)))
        .expect("non-Catalan");
    if i2 == i1 + 1 {
        // swap the adjacent left ends and undo with an R-matrix
        let mut tilted: Vec<i64> = letters.to_vec();
        tilted.swap(i1 as usize - 1, i1 as usize);
        let mut arcs: Vec<(u16, u16)> = c
            .arcs()
            .iter()
            .copied()
            .filter(|&a| a != (i1, j1) && a != (i2, j2))
            .collect();
        arcs.push((i1, j2));
        arcs.push((i2, j1));
        let inner = sigma_coords(&tilted, &ArcConfig::new(arcs))?;
        let a = letters[i1 as usize]; // the word's letter at i1+1
        let b = letters[i1 as usize - 1];
        Ok(rmatrix_on_catalan(&inner, i1, a, b))
    } else {
        // a closed block sits strictly between the two left ends
        let lo = i1 as usize + 1;
        let hi = i2 as usize - 1;
        let mut inner_arcs = Vec::new();
        let mut outer_arcs = Vec::new();
        for &(x, y) in c.arcs() {
            let xin = (lo..=hi).contains(&(x as usize));
            let yin = (lo..=hi).contains(&(y as usize));
            if xin != yin {
                return Err(Error::Internal(
                    "crossing block is not closed; selection rule violated".into(),
                ));
            }
            if xin {
                inner_arcs.push((x, y));
            } else {
                outer_arcs.push((x, y));
            }
        }
        let inner_letters: Vec<i64> = letters[lo - 1..hi].to_vec();
        let outer_letters: Vec<i64> = letters[..lo - 1]
            .iter()
            .chain(&letters[hi..])
            .copied()
            .collect();
        let width = (hi - lo + 1) as u16;
        let inner_cfg = ArcConfig::new(
            inner_arcs
                .iter()
                .map(|&(x, y)| (x - lo as u16 + 1, y - lo as u16 + 1))
                .collect(),
        );
        let shrink = |p: u16| if p as usize >= lo { p - width } else { p };
        let outer_cfg = ArcConfig::new(
            outer_arcs
                .iter()
                .map(|&(x, y)| (shrink(x), shrink(y)))
                .collect(),
        );
        let inner = sigma_coords(&inner_letters, &inner_cfg)?;
        let outer = sigma_coords(&outer_letters, &outer_cfg)?;
        // merge: re-embed the inner block after position i1
        let grow = |p: u16| if p as usize >= lo { p + width } else { p };
        let mut out: BTreeMap<ArcConfig, QRat> = BTreeMap::new();
        for (ocfg, ocoef) in &outer {
            for (icfg, icoef) in &inner {
                let mut arcs: Vec<(u16, u16)> = ocfg
                    .arcs()
                    .iter()
                    .map(|&(x, y)| (grow(x), grow(y)))
                    .collect();
                arcs.extend(
                    icfg.arcs()
                        .iter()
                        .map(|&(x, y)| (x + lo as u16 - 1, y + lo as u16 - 1)),
                );
                let cfg = ArcConfig::new(arcs);
                debug_assert!(cfg.is_catalan());
                let v = ocoef * icoef;
                match out.entry(cfg) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(v);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = &*e.get() + &v;
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Rule-based fast path for `h(w)`: gap factorization, slide normalization,
/// the support-{0,2} rule, the sorted-word rule, and the single-4 algorithm.
/// Returns the value and the rule that closed the word, or `None`.
pub fn h_rules(w: &Word) -> Option<(usize, &'static str)> {
    if w.is_empty() {
        return Some((1, "empty"));
    }
    if w.len() % 2 != 0 {
        return Some((0, "odd-length"));
    }
    let w = w.normalize_shift();
    let parts = w.gap_factorize();
    if parts.len() > 1 {
        let mut acc = 1usize;
        for p in &parts {
            let (h, _) = h_rules(p)?;
            acc *= h;
        }
        return Some((acc, "gap-factorization"));
    }
    if !arc::has_config(&w) {
        return Some((0, "no-configuration"));
    }
    let mut v = w.clone();
    for _ in 0..w.len() {
        let n = v.normalize_shift();
        let supp = n.support();
        if supp.iter().all(|&a| a == 0 || a == 2) {
            // a configuration exists (slides preserve that), so h = 1
            return Some((1, "support-02"));
        }
        if n.letters().windows(2).all(|p| p[0] <= p[1]) {
            return Some((1, "weyl-sorted"));
        }
        if supp.iter().all(|&a| (0..=4).contains(&a))
            && supp.contains(&4)
            && n.positions_of(4).len() == 1
        {
            return Some((single_four(n.letters().to_vec()), "single-4"));
        }
        v = v.slide().expect("nonempty");
    }
    None
}

/// `h` for support-{0,2} words: 1 exactly when a configuration exists.
fn supp02_h(letters: &[i64]) -> usize {
    let w = Word::new(letters.to_vec()).expect("even letters");
    usize::from(arc::has_config(&w.normalize_shift()))
}

/// The one-letter-4 elimination for support `{0,2,4}` with a single 4.
fn single_four(mut letters: Vec<i64>) -> usize {
    loop {
        let n = letters.len();
        let four = letters.iter().position(|&a| a == 4).expect("single 4") + 1;
        // clear zeros to the right of the 4
        if let Some(z) = (four + 1..=n).rev().find(|&p| letters[p - 1] == 0) {
            if z == n {
                return 0; // a trailing smallest letter admits no arc
            }
            debug_assert_eq!(letters[z], 2);
            letters.remove(z); // the letter right after the zero
            letters.remove(z - 1);
            continue;
        }
        // no zeros right of the 4
        if four == n {
            // inverse slide: h(w 4) = h(0 w), a support-{0,2} word
            let mut moved = vec![0];
            moved.extend_from_slice(&letters[..n - 1]);
            return supp02_h(&moved);
        }
        if four == 1 {
            return 0;
        }
        if letters[four - 2] == 0 {
            letters.swap(four - 2, four - 1); // 0 and 4 commute
            continue;
        }
        if four == 2 {
            // a leading (2,4) pair carries no trivial component
            return supp02_h(&letters[2..]);
        }
        debug_assert_eq!(letters[four - 2], 2);
        if letters[four - 3] == 2 {
            // exchange 2,2,4,2 -> 2,4,2,2 to walk the 4 leftwards
            debug_assert_eq!(letters[four], 2);
            letters[four - 2] = 4;
            letters[four - 1] = 2;
            continue;
        }
        debug_assert_eq!(letters[four - 3], 0);
        // split across the short exact sequence of the factor 024
        let mut with_zero = letters.clone();
        with_zero.remove(four - 1); // drop the 4
        with_zero.remove(four - 2); // drop the 2
        let mut with_four = letters.clone();
        with_four.remove(four - 2); // drop the 2
        with_four.remove(four - 3); // drop the 0
        return supp02_h(&with_zero) + single_four(with_four);
    }
}

/// Search for a subword of `w1` admitting a configuration such that no
/// content-equal subword of `w2` does; such a subword witnesses that the
/// words are non-isomorphic. Requires equal contents. Absence of a witness
/// does not imply isomorphism.
pub fn nonisom_witness(w1: &Word, w2: &Word) -> Result<Option<Word>> {
    if w1.content() != w2.content() {
        return Err(Error::Domain(
            "words with different contents are trivially non-isomorphic".into(),
        ));
    }
    let n = w2.len();
    let mut ok_contents: HashSet<Vec<i64>> = HashSet::new();
    for mask in 0u32..(1 << n) {
        if mask == 0 || mask.count_ones() % 2 != 0 {
            continue;
        }
        let positions: Vec<usize> = (1..=n).filter(|&p| mask >> (p - 1) & 1 == 1).collect();
        let sub = w2.subword(&positions);
        if arc::has_config(&sub) {
            let mut key = sub.letters().to_vec();
            key.sort_unstable();
            ok_contents.insert(key);
        }
    }
    let n = w1.len();
    let mut candidates: Vec<Vec<usize>> = (0u32..(1 << n))
        .filter(|m| *m != 0 && m.count_ones() % 2 == 0)
        .map(|mask| {
            (1..=n)
                .filter(|&p| mask >> (p - 1) & 1 == 1)
                .collect::<Vec<usize>>()
        })
        .collect();
    candidates.sort_by_key(|p| (p.len(), p.clone()));
    for positions in candidates {
        let sub = w1.subword(&positions);
        if !arc::has_config(&sub) {
            continue;
        }
        let mut key = sub.letters().to_vec();
        key.sort_unstable();
        if !ok_contents.contains(&key) {
            return Ok(Some(sub));
        }
    }
    Ok(None)
}
