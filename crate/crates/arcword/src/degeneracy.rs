//! Generic words and singular vectors, hyperplane restriction, and the
//! degeneracy graph: the intersection poset of the affine planes cut out by
//! the arc equations `alpha_j = alpha_i + 2`, one plane per uncolored
//! matching, with the cyclic slide action.

use std::collections::{BTreeMap, BTreeSet};

use crate::arc::{self, ArcConfig};
use crate::rep::{self, CatalanBasis};
use crate::scalar::{QMat, QRat, UPoly};
use crate::word::Word;
use crate::{Error, Result};

/// Union-find over positions carrying integer offsets: merging `(x, y, d)`
/// records the constraint `alpha_y = alpha_x + d` and reports conflicts.
struct OffsetUf {
    parent: Vec<usize>,
    /// Offset of a node relative to its parent: `alpha_node = alpha_parent + delta`.
    delta: Vec<i64>,
}

impl OffsetUf {
    fn new(n: usize) -> Self {
        OffsetUf {
            parent: (0..n).collect(),
            delta: vec![0; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, i64) {
        if self.parent[x] == x {
            return (x, 0);
        }
        let (root, up) = self.find(self.parent[x]);
        self.parent[x] = root;
        self.delta[x] += up;
        (root, self.delta[x])
    }

    /// Enforce `alpha_y = alpha_x + d`; false on an inconsistency.
    fn union(&mut self, x: usize, y: usize, d: i64) -> bool {
        let (rx, ox) = self.find(x);
        let (ry, oy) = self.find(y);
        if rx == ry {
            return oy - ox == d;
        }
        // alpha_ry = alpha_y - oy = (alpha_rx + ox) + d - oy
        self.parent[ry] = rx;
        self.delta[ry] = ox + d - oy;
        true
    }
}

/// A vertex of the degeneracy graph: an affine plane described by a
/// partition of positions into components with integer offsets, in canonical
/// form (components numbered by least position, offsets floored at zero).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PlaneVertex {
    comp: Vec<u16>,
    off: Vec<i64>,
}

impl PlaneVertex {
    fn from_uf(mut uf: OffsetUf, n: usize) -> Self {
        let mut roots: BTreeMap<usize, u16> = BTreeMap::new();
        let mut comp = vec![0u16; n];
        let mut off = vec![0i64; n];
        for p in 0..n {
            let (r, o) = uf.find(p);
            let next = roots.len() as u16;
            let id = *roots.entry(r).or_insert(next);
            comp[p] = id;
            off[p] = o;
        }
        // normalize offsets so each component's minimum is zero
        let ncomp = roots.len();
        let mut min = vec![i64::MAX; ncomp];
        for p in 0..n {
            min[comp[p] as usize] = min[comp[p] as usize].min(off[p]);
        }
        for p in 0..n {
            off[p] -= min[comp[p] as usize];
        }
        PlaneVertex { comp, off }
    }

    /// The plane of one matching: `alpha_j = alpha_i + 2` per arc.
    pub fn from_config(c: &ArcConfig) -> Self {
        let n = c.positions();
        let mut uf = OffsetUf::new(n);
        for &(i, j) in c.arcs() {
            assert!(uf.union(i as usize - 1, j as usize - 1, 2));
        }
        PlaneVertex::from_uf(uf, n)
    }

    pub fn positions(&self) -> usize {
        self.comp.len()
    }

    /// Number of independent components = dimension of the plane.
    pub fn dim(&self) -> usize {
        self.comp.iter().map(|&c| c as usize).max().map_or(0, |m| m + 1)
    }

    /// Intersection of two planes; `None` when empty.
    pub fn intersect(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.positions(), other.positions());
        let n = self.positions();
        let mut uf = OffsetUf::new(n);
        for v in [self, other] {
            let mut anchor: BTreeMap<u16, usize> = BTreeMap::new();
            for p in 0..n {
                match anchor.entry(v.comp[p]) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(p);
                    }
                    std::collections::btree_map::Entry::Occupied(e) => {
                        let a = *e.get();
                        if !uf.union(a, p, v.off[p] - v.off[a]) {
                            return None;
                        }
                    }
                }
            }
        }
        Some(PlaneVertex::from_uf(uf, n))
    }

    /// Is `self` a subplane of `sup` (every constraint of `sup` holds here)?
    pub fn is_subplane_of(&self, sup: &Self) -> bool {
        let n = self.positions();
        let mut anchor: BTreeMap<u16, usize> = BTreeMap::new();
        for p in 0..n {
            match anchor.entry(sup.comp[p]) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(p);
                }
                std::collections::btree_map::Entry::Occupied(e) => {
                    let a = *e.get();
                    if self.comp[p] != self.comp[a]
                        || self.off[p] - self.off[a] != sup.off[p] - sup.off[a]
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Does the plane of the matching contain this vertex?
    pub fn lies_on(&self, c: &ArcConfig) -> bool {
        c.arcs().iter().all(|&(i, j)| {
            let (i, j) = (i as usize - 1, j as usize - 1);
            self.comp[i] == self.comp[j] && self.off[j] - self.off[i] == 2
        })
    }

    /// Image under the cyclic slide action
    /// `(a_1, ..., a_{2n}) -> (a_{2n} - 4, a_1, ..., a_{2n-1})`.
    pub fn rotate(&self) -> Self {
        let n = self.positions();
        let mut comp = vec![0u16; n];
        let mut off = vec![0i64; n];
        comp[0] = self.comp[n - 1];
        off[0] = self.off[n - 1] - 4;
        for p in 1..n {
            comp[p] = self.comp[p - 1];
            off[p] = self.off[p - 1];
        }
        // re-canonicalize component ids and offset floors
        let mut uf = OffsetUf::new(n);
        let mut anchor: BTreeMap<u16, usize> = BTreeMap::new();
        for p in 0..n {
            match anchor.entry(comp[p]) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(p);
                }
                std::collections::btree_map::Entry::Occupied(e) => {
                    let a = *e.get();
                    assert!(uf.union(a, p, off[p] - off[a]));
                }
            }
        }
        PlaneVertex::from_uf(uf, n)
    }

    /// An admissible generic word on the plane: components spaced far enough
    /// apart that letters from different components never differ by 0 or 2.
    pub fn generic_word(&self) -> Word {
        let ncomp = self.dim();
        let mut maxoff = vec![0i64; ncomp];
        for p in 0..self.positions() {
            maxoff[self.comp[p] as usize] = maxoff[self.comp[p] as usize].max(self.off[p]);
        }
        let mut shift = vec![0i64; ncomp];
        let mut acc = 0;
        for k in 0..ncomp {
            shift[k] = acc;
            acc += maxoff[k] + 6;
        }
        Word::new(
            (0..self.positions())
                .map(|p| self.off[p] + shift[self.comp[p] as usize])
                .collect(),
        )
        .expect("even offsets")
    }
}

/// The degeneracy graph on `2n` points: all nonempty intersections of the
/// matching planes, directed codimension-one containments, the sizes of the
/// maximal matching sets `S(A)`, the cyclic orbit decomposition, and the
/// trivial-submodule dimension of a generic admissible word per vertex.
pub struct DegeneracyGraph {
    pub n: usize,
    pub vertices: Vec<PlaneVertex>,
    /// Directed edges `(from, to)` with `dim(from) = dim(to) + 1`, `to ⊂ from`.
    pub edges: Vec<(usize, usize)>,
    /// `|S(A)|` per vertex: how many matching planes contain it.
    pub s_counts: Vec<usize>,
    /// Orbit id (index of the least vertex in the orbit) per vertex.
    pub orbits: Vec<usize>,
    /// `h` of a generic admissible word on each vertex.
    pub h_labels: Vec<usize>,
}

/// Default cap on `n` for the full graph; vertex counts grow superfactorially.
pub const DEFAULT_DG_CAP: usize = 4;

pub fn degeneracy_graph(n: usize, force: bool) -> Result<DegeneracyGraph> {
    if n > DEFAULT_DG_CAP && !force {
        return Err(Error::Domain(format!(
            "degeneracy graph for n = {n} exceeds the default cap {DEFAULT_DG_CAP}"
        )));
    }
    let matchings = arc::uconf(n);
    let gens: Vec<PlaneVertex> = matchings.iter().map(PlaneVertex::from_config).collect();
    let mut all: BTreeSet<PlaneVertex> = gens.iter().cloned().collect();
    let mut frontier: Vec<PlaneVertex> = gens.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for g in &gens {
                if let Some(w) = v.intersect(g) {
                    if all.insert(w.clone()) {
                        next.push(w);
                    }
                }
            }
        }
        frontier = next;
    }
    let vertices: Vec<PlaneVertex> = all.into_iter().collect();
    let index: BTreeMap<&PlaneVertex, usize> =
        vertices.iter().enumerate().map(|(k, v)| (v, k)).collect();
    let mut edges = Vec::new();
    for (a, va) in vertices.iter().enumerate() {
        for (b, vb) in vertices.iter().enumerate() {
            if va.dim() == vb.dim() + 1 && vb.is_subplane_of(va) {
                edges.push((a, b));
            }
        }
    }
    let s_counts = vertices
        .iter()
        .map(|v| matchings.iter().filter(|c| v.lies_on(c)).count())
        .collect();
    let mut orbits = vec![usize::MAX; vertices.len()];
    for start in 0..vertices.len() {
        if orbits[start] != usize::MAX {
            continue;
        }
        let mut orbit = vec![start];
        let mut v = vertices[start].rotate();
        while v != vertices[start] {
            orbit.push(index[&v]);
            v = v.rotate();
        }
        let id = *orbit.iter().min().unwrap();
        for k in orbit {
            orbits[k] = id;
        }
    }
    let h_labels = vertices
        .iter()
        .map(|v| {
            let w = v.generic_word();
            w.gap_factorize()
                .iter()
                .map(rep::h_exact)
                .product::<usize>()
        })
        .collect();
    Ok(DegeneracyGraph {
        n,
        vertices,
        edges,
        s_counts,
        orbits,
        h_labels,
    })
}

impl DegeneracyGraph {
    /// Orbit sizes per dimension, each multiset sorted ascending.
    pub fn orbit_sizes_by_dim(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
        for &o in &self.orbits {
            *sizes.entry(o).or_insert(0) += 1;
        }
        let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (&rep, &size) in &sizes {
            out.entry(self.vertices[rep].dim()).or_default().push(size);
        }
        for v in out.values_mut() {
            v.sort_unstable();
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "vertices": self.vertices.iter().enumerate().map(|(k, v)| serde_json::json!({
                "id": k,
                "dim": v.dim(),
                "s_count": self.s_counts[k],
                "orbit": self.orbits[k],
                "h": self.h_labels[k],
                "word": v.generic_word().to_json(),
            })).collect::<Vec<_>>(),
            "edges": self.edges,
        })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph dg {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            s.push_str(&format!(
                "  v{k} [label=\"dim {} h {}\"];\n",
                v.dim(),
                self.h_labels[k]
            ));
        }
        for &(a, b) in &self.edges {
            s.push_str(&format!("  v{a} -> v{b};\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// The word `w_C(a)` of a matching with prescribed arc parameters: letter
/// `a_k` at the k-th left end, `a_k + 2` at its right end.
pub fn generic_word(c: &ArcConfig, a: &[i64]) -> Word {
    assert_eq!(c.n(), a.len());
    let mut letters = vec![0i64; c.positions()];
    for (k, &(i, j)) in c.arcs().iter().enumerate() {
        letters[i as usize - 1] = a[k];
        letters[j as usize - 1] = a[k] + 2;
    }
    Word::new(letters).expect("even letters")
}

/// Generic singular vector in Catalan coordinates: polynomial coordinates in
/// the torus variables `u_1, ..., u_n` (one per arc, ordered by left end),
/// with common polynomial content divided out.
#[derive(Clone, Debug)]
pub struct GenericVector {
    pub nvars: usize,
    pub coords: BTreeMap<ArcConfig, UPoly>,
}

impl GenericVector {
    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Divide out the gcd of all coordinates.
    fn normalize_content(&mut self) {
        let mut g = UPoly::zero(self.nvars);
        for v in self.coords.values() {
            g = g.gcd(v);
        }
        if g.is_zero() || g.as_constant().is_some() {
            return;
        }
        for v in self.coords.values_mut() {
            *v = v.divexact(&g);
        }
    }

    /// Coordinates in the Catalan basis order (zero where absent).
    pub fn in_basis(&self, basis: &CatalanBasis) -> Vec<UPoly> {
        let mut out = vec![UPoly::zero(self.nvars); basis.dim()];
        for (cfg, v) in &self.coords {
            out[basis.index_of(cfg).expect("catalan coordinate")] = v.clone();
        }
        out
    }

    /// Projective equality: all cross-products of coordinates agree.
    pub fn proportional_to(&self, other: &Self) -> bool {
        if self.coords.len() != other.coords.len() {
            return false;
        }
        let mut ratio: Option<(UPoly, UPoly)> = None;
        for (cfg, a) in &self.coords {
            let Some(b) = other.coords.get(cfg) else {
                return false;
            };
            match &ratio {
                None => ratio = Some((a.clone(), b.clone())),
                Some((ra, rb)) => {
                    if a.mul(rb) != b.mul(ra) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Slot values of a matching: position -> `q^{0 or 2} u_k`.
fn slot_values(c: &ArcConfig) -> Vec<UPoly> {
    let n = c.n();
    let mut vals = vec![UPoly::zero(n); c.positions()];
    for (k, &(i, j)) in c.arcs().iter().enumerate() {
        vals[i as usize - 1] = UPoly::var(n, k, QRat::one());
        vals[j as usize - 1] = UPoly::var(n, k, QRat::q_pow(2));
    }
    vals
}

/// Build the generic singular vector of a matching by the crossing
/// resolution recursion, with homogeneous symbolic R-matrix coefficients.
pub fn generic_vector(c: &ArcConfig) -> GenericVector {
    let nvars = c.n();
    let vals = slot_values(c);
    let coords = generic_sigma(&vals, c, nvars);
    let mut v = GenericVector { nvars, coords };
    v.normalize_content();
    v
}

fn generic_sigma(vals: &[UPoly], c: &ArcConfig, nvars: usize) -> BTreeMap<ArcConfig, UPoly> {
    if c.is_catalan() {
        let mut m = BTreeMap::new();
        m.insert(c.clone(), UPoly::one(nvars));
        return m;
    }
    let ((i1, j1), (i2, j2)) = c
        .crossings()
        .into_iter()
        .min_by_key(|&((i1, _), (i2, _))| (i2, std::cmp::Reverse(i1)))
        .expect("non-Catalan");
    if i2 == i1 + 1 {
        let mut tilted = vals.to_vec();
        tilted.swap(i1 as usize - 1, i1 as usize);
        let mut arcs: Vec<(u16, u16)> = c
            .arcs()
            .iter()
            .copied()
            .filter(|&a| a != (i1, j1) && a != (i2, j2))
            .collect();
        arcs.push((i1, j2));
        arcs.push((i2, j1));
        let inner = generic_sigma(&tilted, &ArcConfig::new(arcs), nvars);
        // homogenized coefficients with X the original value at slot i1+1
        // and Y the original value at slot i1
        let x = &vals[i1 as usize];
        let y = &vals[i1 as usize - 1];
        let q2 = UPoly::constant(nvars, QRat::q_pow(2));
        let q1 = UPoly::constant(nvars, QRat::q_pow(1));
        let c_same = x.sub(&y.mul(&q2));
        let c_new = x.sub(y).mul(&q1);
        let c_short = y.sub(&x.mul(&q2));
        rep::rmatrix_catalan_rules(&inner, i1, &c_same, &c_new, &c_short)
    } else {
        let lo = i1 as usize + 1;
        let hi = i2 as usize - 1;
        let mut inner_arcs = Vec::new();
        let mut outer_arcs = Vec::new();
        for &(x, y) in c.arcs() {
            if (lo..=hi).contains(&(x as usize)) {
                inner_arcs.push((x, y));
            } else {
                outer_arcs.push((x, y));
            }
        }
        let width = (hi - lo + 1) as u16;
        let inner_vals: Vec<UPoly> = vals[lo - 1..hi].to_vec();
        let outer_vals: Vec<UPoly> = vals[..lo - 1].iter().chain(&vals[hi..]).cloned().collect();
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
        let inner = generic_sigma(&inner_vals, &inner_cfg, nvars);
        let outer = generic_sigma(&outer_vals, &outer_cfg, nvars);
        let grow = |p: u16| if p as usize >= lo { p + width } else { p };
        let mut out: BTreeMap<ArcConfig, UPoly> = BTreeMap::new();
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
                let v = ocoef.mul(icoef);
                match out.entry(cfg) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(v);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = e.get().add(&v);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                }
            }
        }
        out
    }
}

/// Restrict a generic vector to the hyperplane `u_i = q^m u_j` (1-based arc
/// indices) and renormalize the projective content. An identically zero
/// result signals an invalid restriction chain.
pub fn restrict(v: &GenericVector, i: usize, j: usize, m: i64) -> Result<GenericVector> {
    if i == 0 || j == 0 || i > v.nvars || j > v.nvars || i == j {
        return Err(Error::Domain(format!(
            "invalid restriction indices ({i}, {j}) for {} variables",
            v.nvars
        )));
    }
    let coords: BTreeMap<ArcConfig, UPoly> = v
        .coords
        .iter()
        .map(|(c, p)| (c.clone(), p.substitute(i - 1, j - 1, m)))
        .filter(|(_, p)| !p.is_zero())
        .collect();
    if coords.is_empty() {
        return Err(Error::Domain(
            "restriction chain killed the vector identically".into(),
        ));
    }
    let mut out = GenericVector {
        nvars: v.nvars,
        coords,
    };
    out.normalize_content();
    Ok(out)
}

/// Dimension of the span of all restriction-chain limits of the generic
/// vector of `c` toward the word `w`: chains substitute
/// `u_i = q^{a_i - a_j} u_j` in every merge order and collect the limits.
pub fn restriction_chain_span(w: &Word, c: &ArcConfig) -> Result<usize> {
    if !c.is_valid_for(w) {
        return Err(Error::Domain(format!("{c} is not a configuration of {w}")));
    }
    let n = c.n();
    let params: Vec<i64> = c.arcs().iter().map(|&(i, _)| w.letter(i as usize)).collect();
    let base = generic_vector(c);
    let basis = CatalanBasis::new(n);
    let mut limits: Vec<Vec<QRat>> = Vec::new();
    fn rec(
        v: &GenericVector,
        clusters: &mut Vec<usize>,
        params: &[i64],
        basis: &CatalanBasis,
        limits: &mut Vec<Vec<QRat>>,
    ) {
        let n = clusters.len();
        let live: BTreeSet<usize> = clusters.iter().copied().collect();
        if live.len() == 1 {
            // one free variable remains: set it to 1 and read off coordinates
            let root = *clusters.first().unwrap();
            let row: Vec<QRat> = v
                .in_basis(basis)
                .iter()
                .map(|p| {
                    p.substitute_const(root, &QRat::one())
                        .as_constant()
                        .expect("fully restricted")
                })
                .collect();
            if !limits.contains(&row) {
                limits.push(row);
            }
            return;
        }
        for i in 0..n {
            if clusters[i] != i {
                continue; // only cluster representatives act
            }
            for j in 0..n {
                if clusters[j] != j || i == j {
                    continue;
                }
                let m = params[i] - params[j];
                let Ok(next) = restrict(v, i + 1, j + 1, m) else {
                    continue;
                };
                let saved = clusters.clone();
                for ck in clusters.iter_mut() {
                    if *ck == i {
                        *ck = j;
                    }
                }
                rec(&next, clusters, params, basis, limits);
                *clusters = saved;
            }
        }
    }
    let mut clusters: Vec<usize> = (0..n).collect();
    rec(&base, &mut clusters, &params, &basis, &mut limits);
    let mut m = QMat::zeros(limits.len(), basis.dim());
    for (r, row) in limits.iter().enumerate() {
        for (col, v) in row.iter().enumerate() {
            m.set(r, col, v.clone());
        }
    }
    Ok(m.rank_symbolic())
}

/// Exhaustively test that removing the rightmost minimal arc's ends from a
/// conf-connected word leaves a conf-connected word; returns counterexamples.
pub fn vertex_over_check(max_len: usize) -> Vec<Word> {
    let mut bad = Vec::new();
    let mut len = 2;
    while len <= max_len {
        crate::table::for_each_word_with_config(len, &mut |w: &Word| {
            if !w.is_conf_connected() {
                return;
            }
            let a = *w.support().first().unwrap();
            let i = *w.positions_of(a).last().unwrap();
            let j = *w.positions_of(a + 2).last().unwrap();
            let keep: Vec<usize> = (1..=w.len()).filter(|&p| p != i && p != j).collect();
            let reduced = w.subword(&keep);
            if !reduced.is_empty() && !reduced.is_conf_connected() {
                bad.push(w.clone());
            }
        });
        len += 2;
    }
    bad
}
