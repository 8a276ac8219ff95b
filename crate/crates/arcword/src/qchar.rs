//! q-characters of evaluation modules and their products.
//!
//! An ℓ-weight is a Laurent monomial in formal variables `1_a` (one per even
//! integer `a`); a q-character is a multiset of such monomials. The module
//! provides the character of an evaluation string, products, the count of
//! trivial composition factors both as a coefficient extraction and in
//! closed form, unique factorization of dominant monomials into strings in
//! pairwise general position, and composition-factor peeling.

use std::collections::BTreeMap;
use std::fmt;

use crate::word::Word;
use crate::{Error, Result};

/// Laurent monomial in the variables `1_a`: a finitely supported exponent map.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EllMonomial {
    exps: BTreeMap<i64, i64>,
}

impl EllMonomial {
    pub fn one() -> Self {
        EllMonomial::default()
    }

    /// `1_a^e`.
    pub fn var(a: i64, e: i64) -> Self {
        let mut m = EllMonomial::one();
        m.mul_var(a, e);
        m
    }

    pub fn mul_var(&mut self, a: i64, e: i64) {
        if e == 0 {
            return;
        }
        let v = self.exps.entry(a).or_insert(0);
        *v += e;
        if *v == 0 {
            self.exps.remove(&a);
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = self.clone();
        for (&a, &e) in &other.exps {
            m.mul_var(a, e);
        }
        m
    }

    pub fn exponent(&self, a: i64) -> i64 {
        self.exps.get(&a).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.exps.iter().map(|(&a, &e)| (a, e))
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// All exponents positive, or the empty monomial.
    pub fn is_dominant(&self) -> bool {
        self.exps.values().all(|&e| e > 0)
    }

    /// The rightmost variable occurs with a negative exponent.
    pub fn is_right_negative(&self) -> bool {
        self.exps.iter().next_back().map_or(false, |(_, &e)| e < 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.exps.values().sum()
    }

    /// Tie-break key for peeling: letters descending with their exponents.
    fn desc_key(&self) -> Vec<(i64, i64)> {
        self.exps.iter().rev().map(|(&a, &e)| (a, e)).collect()
    }
}

impl fmt::Debug for EllMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for EllMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, (&a, &e)) in self.exps.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "1_{a}")?;
            } else {
                write!(f, "1_{a}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Formal sum of ℓ-weights with positive integer multiplicities.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QCharacter {
    terms: BTreeMap<EllMonomial, i64>,
}

impl QCharacter {
    pub fn zero() -> Self {
        QCharacter::default()
    }

    pub fn one() -> Self {
        let mut c = QCharacter::zero();
        c.add_term(EllMonomial::one(), 1);
        c
    }

    pub fn add_term(&mut self, m: EllMonomial, mult: i64) {
        if mult == 0 {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(mult);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += mult;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, m: &EllMonomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&EllMonomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn total_multiplicity(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = QCharacter::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Subtract, failing if any multiplicity would drop below zero.
    pub fn sub_checked(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            let have = out.coeff(m);
            if have < c {
                return Err(Error::Internal(format!(
                    "character subtraction drives {m} to multiplicity {}",
                    have - c
                )));
            }
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn dominant_monomials(&self) -> Vec<(EllMonomial, i64)> {
        self.terms()
            .filter(|(m, _)| m.is_dominant())
            .map(|(m, c)| (m.clone(), c))
            .collect()
    }
}

impl fmt::Debug for QCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| {
                if c == 1 {
                    format!("{m}")
                } else {
                    format!("{c}*{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A multiset of evaluation strings `[alpha, beta]`, sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StringSet {
    strings: Vec<(i64, i64)>,
}

impl StringSet {
    pub fn new(mut strings: Vec<(i64, i64)>) -> Result<Self> {
        for &(a, b) in &strings {
            if b < a || (b - a).rem_euclid(2) != 0 {
                return Err(Error::Domain(format!("invalid string [{a},{b}]")));
            }
        }
        strings.sort_unstable();
        Ok(StringSet { strings })
    }

    pub fn trivial() -> Self {
        StringSet::default()
    }

    pub fn strings(&self) -> &[(i64, i64)] {
        &self.strings
    }

    pub fn is_trivial(&self) -> bool {
        self.strings.is_empty()
    }

    pub fn qchar(&self) -> QCharacter {
        let mut c = QCharacter::one();
        for &(a, b) in &self.strings {
            c = c.mul(&eval_module_qchar(a, b).expect("valid string"));
        }
        c
    }

    /// Product of the strings' dominant monomials.
    pub fn dominant_monomial(&self) -> EllMonomial {
        let mut m = EllMonomial::one();
        for &(a, b) in &self.strings {
            let mut x = a;
            while x <= b {
                m.mul_var(x, 1);
                x += 2;
            }
        }
        m
    }
}

impl fmt::Debug for StringSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for StringSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.strings.is_empty() {
            return write!(f, "C");
        }
        for &(a, b) in &self.strings {
            write!(f, "[{a},{b}]")?;
        }
        Ok(())
    }
}

/// Two strings are in general position when one contains the other or their
/// union is not a string (they are separated by a gap of at least 4).
pub fn general_position(s1: (i64, i64), s2: (i64, i64)) -> bool {
    let ((a1, b1), (a2, b2)) = (s1, s2);
    let nested = (a2 <= a1 && b1 <= b2) || (a1 <= a2 && b2 <= b1);
    let apart = b1 <= a2 - 4 || b2 <= a1 - 4;
    nested || apart
}

/// q-character of the evaluation module `[alpha, beta]`:
/// `sum_j 1_alpha ... 1_{beta-2j} * (1_{beta-2j+4} ... 1_{beta+2})^{-1}`.
pub fn eval_module_qchar(alpha: i64, beta: i64) -> Result<QCharacter> {
    if beta < alpha || (beta - alpha).rem_euclid(2) != 0 {
        return Err(Error::Domain(format!("invalid string [{alpha},{beta}]")));
    }
    let m = (beta - alpha) / 2 + 1;
    let mut c = QCharacter::zero();
    for j in 0..=m {
        let mut mon = EllMonomial::one();
        let mut x = alpha;
        while x <= beta - 2 * j {
            mon.mul_var(x, 1);
            x += 2;
        }
        let mut x = beta - 2 * j + 4;
        while x <= beta + 2 {
            mon.mul_var(x, -1);
            x += 2;
        }
        c.add_term(mon, 1);
    }
    Ok(c)
}

/// q-character of a word: the product over its two-dimensional factors.
pub fn word_qchar(w: &Word) -> QCharacter {
    let mut c = QCharacter::one();
    for &a in w.letters() {
        c = c.mul(&eval_module_qchar(a, a).expect("letters are even"));
    }
    c
}

/// Multiplicity of the empty monomial in the word's q-character: the number
/// of trivial composition factors.
pub fn h_char_coeff(w: &Word) -> i64 {
    word_qchar(w).coeff(&EllMonomial::one())
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let mut acc: i64 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Closed form for the trivial-factor count:
/// `prod_k binom(n_{2k}, m_{2k-1})` over the normalized support.
pub fn h_char_closed(w: &Word) -> i64 {
    if w.is_empty() {
        return 1;
    }
    let w = w.normalize_shift();
    let top = *w.support().last().unwrap();
    let mut acc = 1i64;
    let mut m_prev = 0i64; // m_{2k-1} accumulates as n_{2k-2} - m_{2k-3}
    let mut k = 1;
    while 2 * k <= top + 2 {
        let n_2k = w.positions_of(2 * k).len() as i64;
        let m = w.positions_of(2 * k - 2).len() as i64 - m_prev;
        acc *= binom(n_2k, m);
        if acc == 0 {
            return 0;
        }
        m_prev = m;
        k += 1;
    }
    // the final binomial is a delta: the arc balance must close out
    if m_prev != 0 {
        return 0;
    }
    acc
}

/// Factor a dominant monomial into the unique multiset of strings in
/// pairwise general position whose dominant monomials multiply to it.
///
/// Scanning letters upward, the number of open strings must match each
/// exponent; strings may only close when the count drops and only open when
/// it rises (a close next to an open would put two strings out of general
/// position), so the splitting is forced.
pub fn dominant_factorize(m: &EllMonomial) -> Result<StringSet> {
    if !m.is_dominant() {
        return Err(Error::Domain(format!("{m} is not dominant")));
    }
    let letters: Vec<(i64, i64)> = m.exponents().collect();
    let mut open: Vec<i64> = Vec::new(); // start letters, outermost first
    let mut done: Vec<(i64, i64)> = Vec::new();
    let mut prev: Option<i64> = None;
    let mut prev_count = 0i64;
    for &(a, e) in &letters {
        let contiguous = prev.map_or(false, |p| a == p + 2);
        if !contiguous {
            // close everything before a gap
            while let Some(s) = open.pop() {
                done.push((s, prev.unwrap()));
            }
            prev_count = 0;
        }
        if e >= prev_count {
            for _ in 0..(e - prev_count) {
                open.push(a);
            }
        } else {
            for _ in 0..(prev_count - e) {
                let s = open.pop().expect("count tracked");
                done.push((s, a - 2));
            }
        }
        prev = Some(a);
        prev_count = e;
    }
    while let Some(s) = open.pop() {
        done.push((s, prev.unwrap()));
    }
    let set = StringSet::new(done)?;
    debug_assert_eq!(set.dominant_monomial(), *m);
    for (i, &s1) in set.strings().iter().enumerate() {
        for &s2 in &set.strings()[i + 1..] {
            if !general_position(s1, s2) {
                return Err(Error::Internal(format!(
                    "factorization of {m} produced strings out of general position"
                )));
            }
        }
    }
    Ok(set)
}

/// Peel the composition factors off a word's q-character: repeatedly remove
/// the irreducible whose dominant monomial is maximal by total degree, ties
/// broken lexicographically on letters in descending order. Falls back to
/// the other maximal dominant monomials if a subtraction would go negative.
pub fn peel_composition_factors(w: &Word) -> Result<Vec<StringSet>> {
    let mut out = Vec::new();
    let chi = word_qchar(w);
    if !peel_rec(&chi, &mut out) {
        return Err(Error::Internal(format!(
            "no peeling order exhausts the character of {w}"
        )));
    }
    out.sort();
    Ok(out)
}

fn peel_rec(chi: &QCharacter, acc: &mut Vec<StringSet>) -> bool {
    if chi.is_zero() {
        return true;
    }
    let mut dominants = chi.dominant_monomials();
    if dominants.is_empty() {
        return false;
    }
    dominants.sort_by(|(a, _), (b, _)| {
        (b.total_degree(), b.desc_key()).cmp(&(a.total_degree(), a.desc_key()))
    });
    for (m, _) in &dominants {
        let Ok(factor) = dominant_factorize(m) else {
            continue;
        };
        let Ok(rest) = chi.sub_checked(&factor.qchar()) else {
            continue;
        };
        acc.push(factor.clone());
        if peel_rec(&rest, acc) {
            return true;
        }
        acc.pop();
    }
    false
}

/// The two non-split short exact sequences of a product of two strings with
/// `alpha1 < alpha2 <= beta1 + 2 <= beta2`: returns the submodule factor
/// `[alpha1, alpha2-4][beta1+4, beta2]` and the quotient factor
/// `[alpha1, beta2][alpha2, beta1]`; degenerate strings vanish.
pub fn two_string_product_sequences(
    a1: i64,
    b1: i64,
    a2: i64,
    b2: i64,
) -> Result<(StringSet, StringSet)> {
    for x in [a1, b1, a2, b2] {
        if x.rem_euclid(2) != 0 {
            return Err(Error::Domain("string endpoints must be even".into()));
        }
    }
    if !(a1 < a2 && a2 <= b1 + 2 && b1 + 2 <= b2) {
        return Err(Error::Domain(format!(
            "strings [{a1},{b1}], [{a2},{b2}] are not interlocked"
        )));
    }
    let keep = |a: i64, b: i64| -> Option<(i64, i64)> { (b >= a).then_some((a, b)) };
    let sub = StringSet::new(
        [keep(a1, a2 - 4), keep(b1 + 4, b2)]
            .into_iter()
            .flatten()
            .collect(),
    )?;
    let quot = StringSet::new([keep(a1, b2), keep(a2, b1)].into_iter().flatten().collect())?;
    Ok((sub, quot))
}

/// Number of degree-`n` basis monomials of the two-letter word algebra:
/// alternating monomials `x_1^{a_1} ... x_r^{a_r}` whose exponent sequence
/// rises weakly and then falls strictly. Matches the coefficients of
/// `prod_i (1+q^i)/(1-q^i)`.
pub fn overpartition_class_count(n: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    // Strictly decreasing sequences of parts < `below` summing to `total`.
    fn strict_tails(total: usize, below: usize) -> u64 {
        if total == 0 {
            return 1;
        }
        let mut acc = 0;
        for part in 1..below.min(total + 1) {
            acc += strict_tails(total - part, part);
        }
        acc
    }
    // Nondecreasing head with parts >= `min`, then optionally a nonempty
    // strictly decreasing tail below the last head part.
    fn heads(total: usize, min: usize) -> u64 {
        let mut acc = 0;
        for part in min..=total {
            let rest = total - part;
            if rest == 0 {
                acc += 1; // head ends the sequence
            } else {
                acc += heads(rest, part); // extend the head
                acc += strict_tails(rest, part); // switch to the tail
            }
        }
        acc
    }
    // Each exponent sequence carries two letter alternations (x... or y...).
    2 * heads(n, 1)
}
