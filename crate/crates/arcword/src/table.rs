//! Classification tables and the conjecture-verification harness.
//!
//! The table lists words of a given even length with connected support and a
//! nonempty configuration set, one row per equivalence class under shifts,
//! slides, the anti-involution, and commutations of adjacent letters not
//! differing by 2. Each row carries the exact trivial-submodule dimension,
//! the configuration count, and the intersection polynomial.

use std::collections::{BTreeMap, BTreeSet};

use crate::arc;
use crate::degeneracy;
use crate::rep;
use crate::signs::SignSeq;
use crate::word::Word;
use crate::Result;

/// One table row, keyed by the canonical representative of its class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub word: Word,
    pub h: usize,
    pub conf_count: usize,
    /// Intersection polynomial coefficients, lowest degree first.
    pub poly: Vec<i64>,
}

/// Enumerate all words of the given even length with minimum letter 0,
/// connected support, and a nonempty configuration set. Words stream in
/// lexicographic order within each content.
pub fn for_each_word_with_config(len: usize, f: &mut dyn FnMut(&Word)) {
    if len == 0 || len % 2 != 0 {
        return;
    }
    // contents: counts n_{2k} >= 1 on a support {0, 2, ..., 2m} whose
    // per-color arc counts stay nonnegative and balance out at the top
    let mut counts: Vec<usize> = Vec::new();
    fn contents(
        remaining: usize,
        m_prev: i64,
        counts: &mut Vec<usize>,
        f: &mut dyn FnMut(&Word),
    ) {
        if remaining == 0 {
            if m_prev == 0 && !counts.is_empty() {
                emit_permutations(counts, f);
            }
            return;
        }
        let lo = if counts.is_empty() { 1 } else { m_prev.max(1) as usize };
        for n in lo..=remaining {
            // next color's arc count m = n - m_prev must stay nonnegative,
            // and each remaining letter needs at least one slot
            counts.push(n);
            contents(remaining - n, n as i64 - m_prev, counts, f);
            counts.pop();
        }
    }
    fn emit_permutations(counts: &[usize], f: &mut dyn FnMut(&Word)) {
        let mut left = counts.to_vec();
        let mut letters: Vec<i64> = Vec::with_capacity(counts.iter().sum());
        fn rec(left: &mut Vec<usize>, letters: &mut Vec<i64>, f: &mut dyn FnMut(&Word)) {
            if left.iter().all(|&c| c == 0) {
                let w = Word::new(letters.clone()).expect("even letters");
                if arc::has_config(&w) {
                    f(&w);
                }
                return;
            }
            for k in 0..left.len() {
                if left[k] == 0 {
                    continue;
                }
                left[k] -= 1;
                letters.push(2 * k as i64);
                rec(left, letters, f);
                letters.pop();
                left[k] += 1;
            }
        }
        rec(&mut left, &mut letters, f);
    }
    contents(len, 0, &mut counts, f);
}

/// Build the classification table for one length. With `conf_connected`,
/// only conf-connected classes are listed (the interesting rows; everything
/// else factors over its components).
pub fn build_table(len: usize, conf_connected: bool) -> Vec<TableRow> {
    // one node per commutation class; classes are then the connected
    // components under slides and the anti-involution
    let mut nodes: BTreeSet<Word> = BTreeSet::new();
    for_each_word_with_config(len, &mut |w| {
        nodes.insert(w.trace_node());
    });
    let nodes: Vec<Word> = nodes.into_iter().collect();
    let index: std::collections::HashMap<&Word, usize> =
        nodes.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for (k, node) in nodes.iter().enumerate() {
        for nb in node.node_neighbors() {
            // moves through a support gap leave the enumerated universe;
            // conf-connected classes never do
            let Some(&j) = index.get(&nb) else { continue };
            let (rk, rj) = (find(&mut parent, k), find(&mut parent, j));
            if rk != rj {
                parent[rk] = rj;
            }
        }
    }
    let mut reps: BTreeMap<usize, Word> = BTreeMap::new();
    for k in 0..nodes.len() {
        let r = find(&mut parent, k);
        let e = reps.entry(r).or_insert_with(|| nodes[k].clone());
        if nodes[k].letters() < e.letters() {
            *e = nodes[k].clone();
        }
    }
    let mut rows: Vec<TableRow> = Vec::new();
    for canon in reps.into_values() {
        if conf_connected && !canon.is_conf_connected() {
            continue;
        }
        rows.push(TableRow {
            h: rep::h_exact(&canon),
            conf_count: arc::all_configs(&canon).len(),
            poly: arc::intersection_polynomial(&canon),
            word: canon,
        });
    }
    rows.sort_by(|a, b| {
        b.h.cmp(&a.h)
            .then(b.conf_count.cmp(&a.conf_count))
            .then(a.word.letters().cmp(b.word.letters()))
    });
    rows
}

pub fn rows_to_csv(rows: &[TableRow]) -> String {
    let mut s = String::from("word,h,conf_count,poly\n");
    for r in rows {
        s.push_str(&format!(
            "{},{},{},{}\n",
            r.word,
            r.h,
            r.conf_count,
            arc::poly_to_string(&r.poly)
        ));
    }
    s
}

pub fn rows_to_json(len: usize, conf_connected: bool, rows: &[TableRow]) -> serde_json::Value {
    serde_json::json!({
        "length": len,
        "conf_connected": conf_connected,
        "rows": rows.iter().map(|r| serde_json::json!({
            "word": r.word.to_string(),
            "letters": r.word.to_json(),
            "h": r.h,
            "conf_count": r.conf_count,
            "poly": r.poly,
        })).collect::<Vec<_>>(),
    })
}

/// Outcome of one verification run.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub id: &'static str,
    pub checked: usize,
    pub counterexamples: Vec<String>,
    /// Theorem-backed checks must come back clean; conjectures only report.
    pub theorem_backed: bool,
}

fn conf_connected_corpus(max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut len = 2;
    while len <= max_len {
        for_each_word_with_config(len, &mut |w| {
            if w.is_conf_connected() {
                out.push(w.clone());
            }
        });
        len += 2;
    }
    out
}

/// `|IConf| <= h <= |SConf|` on all conf-connected words up to `max_len`.
pub fn verify_sandwich(max_len: usize) -> VerifyReport {
    let mut counterexamples = Vec::new();
    let corpus = conf_connected_corpus(max_len);
    for w in &corpus {
        let lo = arc::irreducible_configs(w).len();
        let hi = arc::steady_configs(w).len();
        let h = rep::h_exact_unguarded(w);
        if h < lo || h > hi {
            counterexamples.push(format!("{w}: h = {h} outside [{lo}, {hi}]"));
        }
    }
    VerifyReport {
        id: "sandwich",
        checked: corpus.len(),
        counterexamples,
        theorem_backed: true,
    }
}

/// `h(w) = h(s(w)) = h(omega(w))` on the conf-connected corpus.
pub fn verify_slide_invariance(max_len: usize) -> VerifyReport {
    let mut counterexamples = Vec::new();
    let corpus = conf_connected_corpus(max_len);
    for w in &corpus {
        let h = rep::h_exact_unguarded(w);
        let hs = rep::h_exact_unguarded(&w.slide().expect("nonempty"));
        let ho = rep::h_exact_unguarded(&w.omega());
        if hs != h {
            counterexamples.push(format!("{w}: slide changes h {h} -> {hs}"));
        }
        if ho != h {
            counterexamples.push(format!("{w}: omega changes h {h} -> {ho}"));
        }
    }
    VerifyReport {
        id: "slide-invariance",
        checked: corpus.len(),
        counterexamples,
        theorem_backed: true,
    }
}

/// Conjecture: removing the rightmost minimal arc of a conf-connected word
/// leaves a conf-connected word.
pub fn verify_vertex_over(max_len: usize) -> VerifyReport {
    let bad = degeneracy::vertex_over_check(max_len);
    let mut checked = 0;
    let mut len = 2;
    while len <= max_len {
        for_each_word_with_config(len, &mut |w| {
            if w.is_conf_connected() {
                checked += 1;
            }
        });
        len += 2;
    }
    VerifyReport {
        id: "vertex-over",
        checked,
        counterexamples: bad.iter().map(|w| w.to_string()).collect(),
        theorem_backed: false,
    }
}

/// Conjecture: every pivot is the left-end sequence of a steady configuration.
pub fn verify_pivots_steady(max_len: usize) -> Result<VerifyReport> {
    let mut counterexamples = Vec::new();
    let corpus = conf_connected_corpus(max_len);
    for w in &corpus {
        let steady_ends: BTreeSet<SignSeq> = arc::steady_configs(w)
            .iter()
            .map(arc::left_end_map)
            .collect();
        for p in rep::pivots(w)? {
            if !steady_ends.contains(&p) {
                counterexamples.push(format!("{w}: pivot {p} not a steady left-end set"));
            }
        }
    }
    Ok(VerifyReport {
        id: "pivots-steady",
        checked: corpus.len(),
        counterexamples,
        theorem_backed: false,
    })
}

/// Conjecture: restriction-chain limits of the standard configuration's
/// generic vector span the whole trivial-submodule space.
pub fn verify_deg_std_onto(max_len: usize) -> Result<VerifyReport> {
    let mut counterexamples = Vec::new();
    let corpus = conf_connected_corpus(max_len);
    for w in &corpus {
        let c = arc::standard_config(w).expect("conf-connected words have configs");
        let span = degeneracy::restriction_chain_span(w, &c)?;
        let h = rep::h_exact_unguarded(w);
        if span != h {
            counterexamples.push(format!("{w}: chain span {span} < h = {h}"));
        }
    }
    Ok(VerifyReport {
        id: "deg-std-onto",
        checked: corpus.len(),
        counterexamples,
        theorem_backed: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_counts() {
        let mut n2 = 0;
        for_each_word_with_config(2, &mut |word| {
            assert_eq!(word, &w("02"));
            n2 += 1;
        });
        assert_eq!(n2, 1);
        let mut words4 = Vec::new();
        for_each_word_with_config(4, &mut |word| words4.push(word.clone()));
        // length 4: contents 0022 (2 valid orders of 6... those with configs)
        // and 0202-type; all have min letter 0 and a configuration
        assert!(words4.contains(&w("0022")));
        assert!(words4.contains(&w("0202")));
        assert!(!words4.contains(&w("2200")));
        for word in &words4 {
            assert!(arc::has_config(word));
            assert_eq!(word.support()[0], 0);
        }
    }

    #[test]
    fn table_length_4_and_6() {
        let rows = build_table(4, true);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].word, w("0022"));
        assert_eq!(rows[0].h, 1);
        assert_eq!(rows[0].conf_count, 2);
        assert_eq!(rows[0].poly, vec![1, 1]);

        let rows = build_table(6, true);
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].word, w("020242"));
        assert_eq!((rows[0].h, rows[0].conf_count), (2, 3));
        assert_eq!(rows[0].poly, vec![2, 0, 1]);
        assert_eq!(rows[1].word, w("000222"));
        assert_eq!((rows[1].h, rows[1].conf_count), (1, 6));
        assert_eq!(rows[2].word, w("002022"));
        assert_eq!((rows[2].h, rows[2].conf_count), (1, 4));
    }

    #[test]
    fn table_is_deterministic() {
        let a = build_table(6, true);
        let b = build_table(6, true);
        assert_eq!(a, b);
        assert_eq!(rows_to_csv(&a), rows_to_csv(&b));
    }

    #[test]
    fn unrestricted_table_contains_products() {
        let rows = build_table(4, false);
        // includes the non-conf-connected class 0202 as well
        assert!(rows.iter().any(|r| r.word == w("0202")));
        assert!(rows.iter().any(|r| r.word == w("0022")));
        let r = rows.iter().find(|r| r.word == w("0202")).unwrap();
        assert_eq!((r.h, r.conf_count), (1, 1));
    }

    #[test]
    fn verify_reports_clean_small() {
        let r = verify_sandwich(6);
        assert!(r.counterexamples.is_empty());
        assert!(r.checked >= 4);
        let r = verify_slide_invariance(4);
        assert!(r.counterexamples.is_empty());
        let r = verify_vertex_over(6);
        assert!(r.counterexamples.is_empty());
        let r = verify_pivots_steady(6).unwrap();
        assert!(r.counterexamples.is_empty());
        let r = verify_deg_std_onto(4).unwrap();
        assert!(r.counterexamples.is_empty());
    }
}
