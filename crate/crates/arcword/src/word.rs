//! Words: finite sequences of even integers, standing for tensor products of
//! two-dimensional evaluation modules. Includes the symmetry operations that
//! preserve the trivial-submodule dimension (shift, slide, reversal), gap
//! factorization, conf-connectivity, and a canonical form for table keys.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::arc;
use crate::{Error, Result};

/// A word `(a_1, ..., a_k)` of even integer evaluation parameters.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<i64>,
}

impl Word {
    pub fn new(letters: Vec<i64>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|a| a.rem_euclid(2) != 0) {
            return Err(Error::Domain(format!(
                "letter {bad} is odd; evaluation parameters must be even"
            )));
        }
        Ok(Word { letters })
    }

    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at a 1-based position.
    pub fn letter(&self, pos: usize) -> i64 {
        self.letters[pos - 1]
    }

    /// 1-based positions carrying the letter `b` (the set `I_w(b)`).
    pub fn positions_of(&self, b: i64) -> Vec<usize> {
        (1..=self.len()).filter(|&p| self.letter(p) == b).collect()
    }

    /// Distinct letters, ascending.
    pub fn support(&self) -> Vec<i64> {
        let mut s: Vec<i64> = self.letters.clone();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Letter multiset.
    pub fn content(&self) -> BTreeMap<i64, usize> {
        let mut m = BTreeMap::new();
        for &a in &self.letters {
            *m.entry(a).or_insert(0) += 1;
        }
        m
    }

    /// Shift all letters so the minimum becomes 0; empty word unchanged.
    pub fn normalize_shift(&self) -> Word {
        match self.letters.iter().min() {
            None => self.clone(),
            Some(&m) => Word {
                letters: self.letters.iter().map(|a| a - m).collect(),
            },
        }
    }

    pub fn shifted(&self, by: i64) -> Word {
        assert_eq!(by.rem_euclid(2), 0);
        Word {
            letters: self.letters.iter().map(|a| a + by).collect(),
        }
    }

    /// The slide `(a_1, ..., a_k) -> (a_2, ..., a_k, a_1 + 4)`.
    pub fn slide(&self) -> Result<Word> {
        if self.is_empty() {
            return Err(Error::Domain("slide of the empty word".into()));
        }
        let mut letters: Vec<i64> = self.letters[1..].to_vec();
        letters.push(self.letters[0] + 4);
        Ok(Word { letters })
    }

    /// The anti-involution `(a_1, ..., a_n) -> (-a_n, ..., -a_1)`.
    pub fn omega(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|a| -a).collect(),
        }
    }

    /// The dual word `(a_k + 2, ..., a_1 + 2)`.
    pub fn dual(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|a| a + 2).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Subword at the given ascending 1-based positions.
    pub fn subword(&self, positions: &[usize]) -> Word {
        Word {
            letters: positions.iter().map(|&p| self.letter(p)).collect(),
        }
    }

    /// Split into maximal subwords whose supports are segments of `2Z`
    /// separated by gaps of at least 4; the trivial-submodule dimension
    /// multiplies over the parts.
    pub fn gap_factorize(&self) -> Vec<Word> {
        let supp = self.support();
        if supp.is_empty() {
            return Vec::new();
        }
        let mut segments: Vec<(i64, i64)> = Vec::new();
        let mut lo = supp[0];
        let mut hi = supp[0];
        for &a in &supp[1..] {
            if a - hi >= 4 {
                segments.push((lo, hi));
                lo = a;
            }
            hi = a;
        }
        segments.push((lo, hi));
        segments
            .into_iter()
            .map(|(lo, hi)| Word {
                letters: self
                    .letters
                    .iter()
                    .copied()
                    .filter(|&a| a >= lo && a <= hi)
                    .collect(),
            })
            .collect()
    }

    /// Positions partition under the transitive closure of "joined by an arc
    /// in some arc configuration", with the forced letter offsets.
    pub fn conf_components(&self) -> ConfPartition {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        // (i, j) are linked iff some configuration contains the arc, i.e. the
        // arc is color-valid and the word with both positions removed still
        // has a configuration.
        for i in 1..=n {
            for j in (i + 1)..=n {
                if self.letter(j) != self.letter(i) + 2 {
                    continue;
                }
                let (ri, rj) = (find(&mut parent, i - 1), find(&mut parent, j - 1));
                if ri == rj {
                    continue;
                }
                let rest: Vec<usize> = (1..=n).filter(|&p| p != i && p != j).collect();
                if arc::has_config(&self.subword(&rest)) {
                    parent[ri] = rj;
                }
            }
        }
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for p in 0..n {
            let r = find(&mut parent, p);
            blocks.entry(r).or_default().push(p + 1);
        }
        let mut blocks: Vec<Vec<usize>> = blocks.into_values().collect();
        blocks.sort_by_key(|b| b[0]);
        let mut offsets = vec![0i64; n];
        for b in &blocks {
            let base = b.iter().map(|&p| self.letter(p)).min().unwrap();
            for &p in b {
                offsets[p - 1] = self.letter(p) - base;
            }
        }
        ConfPartition { blocks, offsets }
    }

    pub fn is_conf_connected(&self) -> bool {
        !self.is_empty() && self.conf_components().blocks.len() == 1
    }

    /// Lexicographically least word reachable by swapping adjacent letters
    /// that do not differ by exactly 2.
    pub fn commutation_normal_form(&self) -> Word {
        let mut rest: Vec<i64> = self.letters.clone();
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            // A letter can move to the front iff everything before it
            // commutes with it; take the smallest such letter (leftmost
            // occurrence).
            let mut best: Option<usize> = None;
            for (i, &a) in rest.iter().enumerate() {
                if rest[..i].iter().all(|&b| (a - b).abs() != 2)
                    && best.map_or(true, |b| a < rest[b])
                {
                    best = Some(i);
                }
            }
            let i = best.expect("first letter is always movable");
            out.push(rest.remove(i));
        }
        Word { letters: out }
    }

    /// The node representing this word's commutation class after shift
    /// normalization.
    pub fn trace_node(&self) -> Word {
        self.normalize_shift().commutation_normal_form()
    }

    /// Successor nodes under one slide (applied to every class member whose
    /// first letter can differ) or the anti-involution.
    ///
    /// A letter occurrence can lead some member of the commutation class
    /// exactly when everything before it commutes with it, so sliding each
    /// such occurrence reaches every slide image of the class.
    pub fn node_neighbors(&self) -> Vec<Word> {
        let mut out = vec![self.omega().trace_node()];
        for i in 0..self.len() {
            let a = self.letters[i];
            if self.letters[..i].iter().all(|&b| (a - b).abs() != 2) {
                let mut rest: Vec<i64> = self
                    .letters
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i)
                    .map(|(_, &x)| x)
                    .collect();
                rest.push(a + 4);
                out.push(Word { letters: rest }.trace_node());
            }
        }
        out
    }

    /// All commutation-class nodes in the symmetry class of the word
    /// (closure under shifts, slides, the anti-involution, and adjacent
    /// commutations of letters not differing by 2), traversing only words
    /// with connected support.
    ///
    /// Words with a support gap have infinite symmetry classes (their parts
    /// slide apart indefinitely), so the closure is restricted to the
    /// connected-support universe. Conf-connected classes live entirely
    /// inside it, making the closure exact for them.
    pub fn class_nodes(&self) -> std::collections::BTreeSet<Word> {
        let start = self.trace_node();
        let mut seen = std::collections::BTreeSet::new();
        seen.insert(start.clone());
        let mut queue = vec![start];
        while let Some(node) = queue.pop() {
            for nb in node.node_neighbors() {
                if nb.gap_factorize().len() > 1 {
                    continue;
                }
                if seen.insert(nb.clone()) {
                    queue.push(nb);
                }
            }
        }
        seen
    }

    /// Canonical form for table keys: the lexicographically least word in
    /// the symmetry class (see [`Word::class_nodes`] for the closure).
    pub fn canonical(&self) -> Word {
        if self.is_empty() {
            return Word::empty();
        }
        self.class_nodes().into_iter().next().unwrap()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.letters
                .iter()
                .map(|&a| serde_json::Value::from(a))
                .collect(),
        )
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts comma-separated integers (`0,2,-2`) or compact digit strings
    /// (`020242`) whose characters are single even digits.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        if s.contains(',') || s.contains('-') || s.contains(' ') {
            let letters = s
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|e| Error::Parse(format!("bad letter '{t}': {e}")))
                })
                .collect::<Result<Vec<i64>>>()?;
            return Word::new(letters).map_err(|e| Error::Parse(e.to_string()));
        }
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c.to_digit(10) {
                Some(d) if d % 2 == 0 => letters.push(d as i64),
                Some(d) => {
                    return Err(Error::Parse(format!(
                        "odd digit {d} in compact word; letters must be even"
                    )))
                }
                None => {
                    return Err(Error::Parse(format!(
                        "unexpected character '{c}' in word"
                    )))
                }
            }
        }
        Ok(Word { letters })
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.iter().all(|&a| (0..=8).contains(&a)) && !self.is_empty() {
            for &a in &self.letters {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|a| a.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Partition of positions into conf-connected components with the forced
/// letter offsets inside each block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfPartition {
    /// Blocks of 1-based positions, sorted by least member.
    pub blocks: Vec<Vec<usize>>,
    /// Per position (index 0 = position 1): letter minus the block minimum.
    pub offsets: Vec<i64>,
}
