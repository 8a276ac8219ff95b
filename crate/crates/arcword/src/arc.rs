//! Arcs and arc configurations of a word, with the combinatorial classes
//! that bound the trivial-submodule dimension: Catalan (non-crossing),
//! irreducible (lower bound), steady (upper bound), and the standard
//! configuration whose existence characterizes nonzero dimension. Also the
//! intersection polynomial, a generating function of reducible crossings.

use std::collections::HashMap;
use std::fmt;

use crate::signs::SignSeq;
use crate::word::Word;
use crate::{Error, Result};

/// A set of arcs `(left, right)` forming a perfect matching of `1..=2n`,
/// stored sorted by left end. An arc of a word joins a letter `a` to a
/// letter `a + 2` on its right.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcConfig {
    arcs: Vec<(u16, u16)>,
}

impl ArcConfig {
    pub fn new(mut arcs: Vec<(u16, u16)>) -> Self {
        arcs.sort_unstable();
        let c = ArcConfig { arcs };
        debug_assert!(c.is_matching());
        c
    }

    pub fn empty() -> Self {
        ArcConfig { arcs: Vec::new() }
    }

    fn is_matching(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        for &(i, j) in &self.arcs {
            if i >= j || !seen.insert(i) || !seen.insert(j) {
                return false;
            }
        }
        seen.len() == 2 * self.arcs.len()
            && seen.iter().max().map_or(true, |&m| m as usize <= self.positions())
    }

    pub fn arcs(&self) -> &[(u16, u16)] {
        &self.arcs
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    /// Number of matched positions, `2n`.
    pub fn positions(&self) -> usize {
        2 * self.arcs.len()
    }

    pub fn left_ends(&self) -> Vec<u16> {
        self.arcs.iter().map(|&(i, _)| i).collect()
    }

    pub fn right_ends(&self) -> Vec<u16> {
        let mut v: Vec<u16> = self.arcs.iter().map(|&(_, j)| j).collect();
        v.sort_unstable();
        v
    }

    /// Arc with the given left end, if any.
    pub fn arc_from(&self, left: u16) -> Option<(u16, u16)> {
        self.arcs.iter().copied().find(|&(i, _)| i == left)
    }

    /// The arc containing a position, with a flag for "position is the left end".
    pub fn arc_at(&self, pos: u16) -> Option<((u16, u16), bool)> {
        self.arcs
            .iter()
            .copied()
            .find_map(|a| {
                if a.0 == pos {
                    Some((a, true))
                } else if a.1 == pos {
                    Some((a, false))
                } else {
                    None
                }
            })
    }

    /// Do all arcs join letters `a` and `a + 2` of the word?
    pub fn is_valid_for(&self, w: &Word) -> bool {
        self.positions() == w.len()
            && self
                .arcs
                .iter()
                .all(|&(i, j)| w.letter(j as usize) == w.letter(i as usize) + 2)
    }

    /// All crossing pairs, each reported as `((i1,j1),(i2,j2))`, `i1 < i2`.
    pub fn crossings(&self) -> Vec<((u16, u16), (u16, u16))> {
        let mut out = Vec::new();
        for (k, &a) in self.arcs.iter().enumerate() {
            for &b in &self.arcs[k + 1..] {
                // arcs are sorted by left end, so a.0 < b.0
                if b.0 < a.1 && a.1 < b.1 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_catalan(&self) -> bool {
        self.crossings().is_empty()
    }

    /// Number of reducible crossings: crossings `(i1,j1),(i2,j2)` with
    /// `a_{i2}` equal to `a_{i1}` or `a_{i1} + 2`.
    pub fn reducible_crossings(&self, w: &Word) -> usize {
        self.crossings()
            .iter()
            .filter(|&&((i1, _), (i2, _))| {
                let a1 = w.letter(i1 as usize);
                let a2 = w.letter(i2 as usize);
                a2 == a1 || a2 == a1 + 2
            })
            .count()
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.reducible_crossings(w) == 0
    }

    /// No two crossing arcs of the same color.
    pub fn is_nconf(&self, w: &Word) -> bool {
        self.crossings()
            .iter()
            .all(|&((i1, _), (i2, _))| w.letter(i1 as usize) != w.letter(i2 as usize))
    }

    /// Serialize as a sorted list of `[left, right]` pairs.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.arcs
                .iter()
                .map(|&(i, j)| serde_json::json!([i, j]))
                .collect(),
        )
    }

    /// The slide-induced bijection `Conf(w) -> Conf(s(w))`.
    pub fn slide(&self) -> ArcConfig {
        let n2 = self.positions() as u16;
        let arcs = self
            .arcs
            .iter()
            .map(|&(i, j)| {
                if i == 1 {
                    (j - 1, n2)
                } else {
                    (i - 1, j - 1)
                }
            })
            .collect();
        ArcConfig::new(arcs)
    }
}

impl fmt::Debug for ArcConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ArcConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, j)) in self.arcs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({i},{j})")?;
        }
        write!(f, "}}")
    }
}

/// Exhaustive enumeration of `Conf(w)`, in lexicographic order of the sorted
/// arc lists. Odd-length words have no configurations.
pub fn all_configs(w: &Word) -> Vec<ArcConfig> {
    let n = w.len();
    if n % 2 != 0 {
        return Vec::new();
    }
    let mut used = vec![false; n + 1];
    let mut current: Vec<(u16, u16)> = Vec::with_capacity(n / 2);
    let mut out = Vec::new();
    fn rec(
        w: &Word,
        used: &mut Vec<bool>,
        current: &mut Vec<(u16, u16)>,
        out: &mut Vec<ArcConfig>,
    ) {
        let n = w.len();
        let Some(i) = (1..=n).find(|&p| !used[p]) else {
            out.push(ArcConfig {
                arcs: current.clone(),
            });
            return;
        };
        used[i] = true;
        let target = w.letter(i) + 2;
        for j in (i + 1)..=n {
            if used[j] || w.letter(j) != target {
                continue;
            }
            used[j] = true;
            current.push((i as u16, j as u16));
            rec(w, used, current, out);
            current.pop();
            used[j] = false;
        }
        used[i] = false;
    }
    rec(w, &mut used, &mut current, &mut out);
    out
}

/// Does the word admit any arc configuration? Equivalent to the existence of
/// the standard configuration, checked by the greedy construction.
pub fn has_config(w: &Word) -> bool {
    standard_config(w).is_some()
}

/// The standard arc configuration: repeatedly join the rightmost smallest
/// letter to the rightmost next letter. Present iff `Conf(w)` is nonempty.
pub fn standard_config(w: &Word) -> Option<ArcConfig> {
    let n = w.len();
    if n % 2 != 0 {
        return None;
    }
    let mut alive: Vec<usize> = (1..=n).collect();
    let mut arcs = Vec::with_capacity(n / 2);
    while !alive.is_empty() {
        let a = alive.iter().map(|&p| w.letter(p)).min().unwrap();
        let i = *alive.iter().filter(|&&p| w.letter(p) == a).max().unwrap();
        let j = *alive
            .iter()
            .filter(|&&p| w.letter(p) == a + 2)
            .max()
            .unwrap_or(&0);
        if j <= i {
            return None;
        }
        arcs.push((i as u16, j as u16));
        alive.retain(|&p| p != i && p != j);
    }
    Some(ArcConfig::new(arcs))
}

pub fn catalan_configs(w: &Word) -> Vec<ArcConfig> {
    all_configs(w).into_iter().filter(|c| c.is_catalan()).collect()
}

pub fn irreducible_configs(w: &Word) -> Vec<ArcConfig> {
    all_configs(w)
        .into_iter()
        .filter(|c| c.is_irreducible(w))
        .collect()
}

pub fn nconf_configs(w: &Word) -> Vec<ArcConfig> {
    all_configs(w).into_iter().filter(|c| c.is_nconf(w)).collect()
}

/// Per-color arc count `m_b = sum_j (-1)^j |I_w(b - 1 - 2j)|` for odd `b`.
/// Formal when `Conf(w)` is empty.
pub fn arc_count_by_color(w: &Word, b: i64) -> i64 {
    assert!(b.rem_euclid(2) == 1, "arc colors are odd integers");
    let min = match w.support().first() {
        None => return 0,
        Some(&m) => m,
    };
    let mut acc = 0i64;
    let mut letter = b - 1;
    let mut sign = 1i64;
    while letter >= min {
        acc += sign * w.positions_of(letter).len() as i64;
        sign = -sign;
        letter -= 2;
    }
    acc
}

/// The dual alternating sum `sum_j (-1)^j |I_w(b + 1 + 2j)|`.
pub fn arc_count_by_color_from_above(w: &Word, b: i64) -> i64 {
    assert!(b.rem_euclid(2) == 1);
    let max = match w.support().last() {
        None => return 0,
        Some(&m) => m,
    };
    let mut acc = 0i64;
    let mut letter = b + 1;
    let mut sign = 1i64;
    while letter <= max {
        acc += sign * w.positions_of(letter).len() as i64;
        sign = -sign;
        letter += 2;
    }
    acc
}

/// Intersection polynomial `p_w(x) = sum_C x^{J(C)}` over all configurations,
/// where `J` counts reducible crossings. Coefficients low degree first.
pub fn intersection_polynomial(w: &Word) -> Vec<i64> {
    let mut coeffs: Vec<i64> = Vec::new();
    for c in all_configs(w) {
        let j = c.reducible_crossings(w);
        if coeffs.len() <= j {
            coeffs.resize(j + 1, 0);
        }
        coeffs[j] += 1;
    }
    coeffs
}

pub fn poly_to_string(coeffs: &[i64]) -> String {
    if coeffs.is_empty() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let var = match k {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{k}"),
        };
        let s = match (c, k) {
            (1, k) if k > 0 => var,
            (-1, k) if k > 0 => format!("-{var}"),
            (c, 0) => format!("{c}"),
            (c, _) => format!("{c}{var}"),
        };
        parts.push(s);
    }
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = parts[0].clone();
    for p in &parts[1..] {
        if let Some(stripped) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(stripped);
        } else {
            out.push_str(" + ");
            out.push_str(p);
        }
    }
    out
}

/// Sign sequence with `+` exactly at the left ends of the configuration.
pub fn left_end_map(c: &ArcConfig) -> SignSeq {
    let mut s = SignSeq::new(c.positions());
    for &(i, _) in c.arcs() {
        s = s.with_plus(i as usize);
    }
    s
}

/// Remove a set of arcs from a configuration, reindexing the remaining
/// positions; returns the reduced word and configuration.
pub fn remove_arcs(w: &Word, c: &ArcConfig, drop: &[(u16, u16)]) -> (Word, ArcConfig) {
    let gone: std::collections::BTreeSet<u16> = drop
        .iter()
        .flat_map(|&(i, j)| [i, j])
        .collect();
    let keep: Vec<usize> = (1..=w.len() as u16)
        .filter(|p| !gone.contains(p))
        .map(|p| p as usize)
        .collect();
    let newpos: HashMap<u16, u16> = keep
        .iter()
        .enumerate()
        .map(|(k, &p)| (p as u16, k as u16 + 1))
        .collect();
    let arcs = c
        .arcs()
        .iter()
        .filter(|a| !drop.contains(a))
        .map(|&(i, j)| (newpos[&i], newpos[&j]))
        .collect();
    (w.subword(&keep), ArcConfig::new(arcs))
}

/// All uncolored perfect matchings of `1..=2n`.
pub fn uconf(n: usize) -> Vec<ArcConfig> {
    let mut out = Vec::new();
    let mut used = vec![false; 2 * n + 1];
    let mut current = Vec::new();
    fn rec(
        n2: usize,
        used: &mut Vec<bool>,
        current: &mut Vec<(u16, u16)>,
        out: &mut Vec<ArcConfig>,
    ) {
        let Some(i) = (1..=n2).find(|&p| !used[p]) else {
            out.push(ArcConfig {
                arcs: current.clone(),
            });
            return;
        };
        used[i] = true;
        for j in (i + 1)..=n2 {
            if used[j] {
                continue;
            }
            used[j] = true;
            current.push((i as u16, j as u16));
            rec(n2, used, current, out);
            current.pop();
            used[j] = false;
        }
        used[i] = false;
    }
    rec(2 * n, &mut used, &mut current, &mut out);
    out
}

/// All uncolored Catalan (non-crossing) matchings of `1..=2n`, ordered by
/// descending lexicographic left-end sets. This is the basis order for the
/// weight-zero singular space.
pub fn ucatconf(n: usize) -> Vec<ArcConfig> {
    fn gen(offset: u16, n2: u16, out: &mut Vec<Vec<(u16, u16)>>) {
        if n2 == 0 {
            out.push(Vec::new());
            return;
        }
        // position `offset+1` pairs with an even-offset partner
        for gap in (1..n2).step_by(2) {
            let j = offset + 1 + gap;
            let mut inner = Vec::new();
            gen(offset + 1, gap - 1, &mut inner);
            let mut outer = Vec::new();
            gen(j, n2 - gap - 1, &mut outer);
            for inn in &inner {
                for ou in &outer {
                    let mut arcs = vec![(offset + 1, j)];
                    arcs.extend_from_slice(inn);
                    arcs.extend_from_slice(ou);
                    out.push(arcs);
                }
            }
        }
    }
    let mut raw = Vec::new();
    gen(0, 2 * n as u16, &mut raw);
    let mut configs: Vec<ArcConfig> = raw.into_iter().map(ArcConfig::new).collect();
    configs.sort_by(|a, b| b.left_ends().cmp(&a.left_ends()));
    configs
}

/// A tensor product of evaluation strings, at most one of which is thicker
/// than a single letter; the shape consumed by the steady recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedProduct {
    pub factors: Vec<(i64, i64)>,
}

impl GeneralizedProduct {
    pub fn new(factors: Vec<(i64, i64)>) -> Result<Self> {
        for &(a, b) in &factors {
            if b < a || (b - a).rem_euclid(2) != 0 {
                return Err(Error::Domain(format!("invalid string [{a},{b}]")));
            }
        }
        Ok(GeneralizedProduct { factors })
    }

    pub fn from_word(w: &Word) -> Self {
        GeneralizedProduct {
            factors: w.letters().iter().map(|&a| (a, a)).collect(),
        }
    }
}

/// Steady arc configurations of a word: the recursive upper-bound class.
pub fn steady_configs(w: &Word) -> Vec<ArcConfig> {
    if w.len() % 2 != 0 {
        return Vec::new();
    }
    let mut memo = HashMap::new();
    let mut out = eval_steady_word(w.letters(), &mut memo);
    out.sort();
    out
}

/// Steady configurations of a generalized product `w1 [0..2m] w2`.
pub fn steady_configs_product(v: &GeneralizedProduct) -> Result<Vec<ArcConfig>> {
    let segments: Vec<usize> = v
        .factors
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| b > a)
        .map(|(k, _)| k)
        .collect();
    if segments.len() > 1 {
        return Err(Error::Domain(
            "steady recursion needs at most one thick factor".into(),
        ));
    }
    let mut memo = HashMap::new();
    let mut out = if segments.is_empty() {
        let letters: Vec<i64> = v.factors.iter().map(|&(a, _)| a).collect();
        if letters.len() % 2 != 0 {
            return Ok(Vec::new());
        }
        eval_steady_word(&letters, &mut memo)
    } else {
        let k = segments[0];
        let (alpha, beta) = v.factors[k];
        let w1: Vec<i64> = v.factors[..k].iter().map(|&(a, _)| a - alpha).collect();
        let w2: Vec<i64> = v.factors[k + 1..].iter().map(|&(a, _)| a - alpha).collect();
        if w1.iter().any(|&a| a < 0) || w2.iter().any(|&a| a <= 0) {
            return Err(Error::Domain(
                "steady recursion needs w1 >= segment minimum and w2 above it".into(),
            ));
        }
        let m = (beta - alpha) / 2;
        eval_steady_state(&w1, m, &w2, &mut memo)
    };
    out.sort();
    Ok(out)
}

type SteadyMemo = HashMap<(Vec<i64>, i64, Vec<i64>), Vec<ArcConfig>>;

fn eval_steady_word(letters: &[i64], memo: &mut SteadyMemo) -> Vec<ArcConfig> {
    if letters.is_empty() {
        return vec![ArcConfig::empty()];
    }
    let min = *letters.iter().min().unwrap();
    let norm: Vec<i64> = letters.iter().map(|a| a - min).collect();
    // split at the rightmost minimal letter: w = w1 (0) w2
    let r = norm.iter().rposition(|&a| a == 0).unwrap();
    let w1 = norm[..r].to_vec();
    let w2 = norm[r + 1..].to_vec();
    eval_steady_state(&w1, 0, &w2, memo)
}

/// Configurations of the product `w1 [0..2m] w2` produced by the steady
/// recursion, in positions local to the product (`w1`, then the `m+1`
/// segment slots, then `w2`).
fn eval_steady_state(w1: &[i64], m: i64, w2: &[i64], memo: &mut SteadyMemo) -> Vec<ArcConfig> {
    if w2.is_empty() {
        return Vec::new();
    }
    let key = (w1.to_vec(), m, w2.to_vec());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let lw1 = w1.len() as u16;
    let seg = (m + 1) as u16; // segment slot count
    let a = w2[0];
    let rest = &w2[1..];
    let result: Vec<ArcConfig> = if a != 2 * m + 2 {
        // iota_0: commute the letter leftwards across the segment
        let mut child_w1 = w1.to_vec();
        child_w1.push(a);
        let child = eval_steady_state(&child_w1, m, rest, memo);
        let map = |p: u16| -> u16 {
            if p <= lw1 {
                p
            } else if p == lw1 + 1 {
                lw1 + seg + 1
            } else if p <= lw1 + seg + 1 {
                p - 1
            } else {
                p
            }
        };
        child
            .into_iter()
            .map(|c| ArcConfig::new(c.arcs().iter().map(|&(i, j)| (map(i), map(j))).collect()))
            .collect()
    } else {
        // iota_1: the segment absorbs the letter
        let mut out = eval_steady_state(w1, m + 1, rest, memo);
        // iota_2: close an adjacent arc (2m)-(2m+2) and shrink the segment
        let child = if m >= 1 {
            eval_steady_state(w1, m - 1, rest, memo)
        } else {
            let mut plain = w1.to_vec();
            plain.extend_from_slice(rest);
            if plain.len() % 2 != 0 {
                Vec::new()
            } else {
                eval_steady_word(&plain, memo)
            }
        };
        let cut = lw1 + seg - 1; // last position kept in place
        for c in child {
            let mut arcs: Vec<(u16, u16)> = c
                .arcs()
                .iter()
                .map(|&(i, j)| {
                    let f = |p: u16| if p <= cut { p } else { p + 2 };
                    (f(i), f(j))
                })
                .collect();
            arcs.push((cut + 1, cut + 2));
            out.push(ArcConfig::new(arcs));
        }
        out
    };
    memo.insert(key, result.clone());
    result
}
