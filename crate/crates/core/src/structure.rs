//! Blocks, connectivity, 2-separations and the witness finders used by the
//! structural checks. All searches walk vertices in ascending index order, so
//! every witness is deterministic.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::cycles::{for_each_cycle_of_length, odd_girth, Cycle};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_ORDER};
use crate::invariants::{criticality_given_chi, chromatic_number, is_k_colorable, DEFAULT_NODE_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    /// Maximal 2-connected pieces, bridges and isolated vertices, sorted by
    /// their ascending vertex lists.
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

struct Lowpoint<'g> {
    g: &'g Graph,
    disc: [usize; MAX_ORDER],
    low: [usize; MAX_ORDER],
    time: usize,
    edges: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
    cuts: VertexSet,
}

impl Lowpoint<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        let mut children = 0;
        for w in self.g.neighbors(u) {
            if self.disc[w] == usize::MAX {
                children += 1;
                self.edges.push((u, w));
                self.visit(w, Some(u));
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    if parent.is_some() {
                        self.cuts.insert(u);
                    }
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.edges.pop() {
                        block = block.with(a).with(b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(w) != parent && self.disc[w] < self.disc[u] {
                self.edges.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
        if parent.is_none() && children > 1 {
            self.cuts.insert(u);
        }
    }
}

/// Block/cut-vertex decomposition by Tarjan's lowpoint search.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let mut lp = Lowpoint {
        g,
        disc: [usize::MAX; MAX_ORDER],
        low: [0; MAX_ORDER],
        time: 0,
        edges: Vec::new(),
        blocks: Vec::new(),
        cuts: VertexSet::EMPTY,
    };
    for v in 0..g.order() {
        if lp.disc[v] == usize::MAX {
            if g.degree(v) == 0 {
                lp.disc[v] = lp.time;
                lp.time += 1;
                lp.blocks.push(VertexSet::singleton(v));
            } else {
                lp.visit(v, None);
            }
        }
    }
    let mut blocks = lp.blocks;
    blocks.sort_by_key(|b| b.to_vec());
    BlockDecomposition { blocks, cut_vertices: lp.cuts }
}

/// Connected, at least three vertices and no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.order() >= 3
        && g.is_connected()
        && (0..g.order()).all(|v| g.is_connected_within(g.vertices().without(v)))
}

/// At least four vertices and no set of at most two vertices disconnects.
pub fn is_three_connected(g: &Graph) -> bool {
    let all = g.vertices();
    is_two_connected(g)
        && g.order() >= 4
        && (0..g.order()).all(|u| {
            (u + 1..g.order()).all(|v| g.is_connected_within(all.without(u).without(v)))
        })
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths for
/// non-adjacent `s`, `t`, by augmenting paths in the vertex-split digraph.
fn local_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.order();
    let big = n as u8 + 1;
    let nodes = 2 * n;
    // v_in = 2v, v_out = 2v + 1
    let mut cap = vec![vec![0u8; nodes]; nodes];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = if v == s || v == t { big } else { 1 };
        for w in g.neighbors(v) {
            cap[2 * v + 1][2 * w] = big;
        }
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; nodes];
        prev[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..nodes {
                if prev[y] == usize::MAX && cap[x][y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut y = sink;
        while y != source {
            let x = prev[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
}

/// Exact vertex connectivity (`n - 1` for complete graphs).
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n < 2 {
        return Err(Error::TooSmall);
    }
    if !g.is_connected() {
        return Ok(0);
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(g, s, t));
            }
        }
    }
    Ok(best)
}

/// A split `(A, B)` with `A ∩ B = {u, v}` and no edges between `A - B` and
/// `B - A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoSeparation {
    pub a_side: VertexSet,
    pub b_side: VertexSet,
    pub cut: (usize, usize),
}

impl TwoSeparation {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let (u, v) = self.cut;
        let bad = |why: &str| Err(Error::InvalidSeparation(why.to_string()));
        if u == v || u >= g.order() || v >= g.order() {
            return bad("cut must be two distinct vertices of the graph");
        }
        let cut = VertexSet::from_iter([u, v]);
        if self.a_side.union(self.b_side) != g.vertices() {
            return bad("sides do not cover the vertex set");
        }
        if self.a_side.intersection(self.b_side) != cut {
            return bad("sides do not meet exactly in the cut");
        }
        if self.a_side.len() <= 2 || self.b_side.len() <= 2 {
            return bad("a side has no vertex outside the cut");
        }
        let a_only = self.a_side.difference(cut);
        let b_only = self.b_side.difference(cut);
        if a_only.iter().any(|x| !g.neighbors(x).intersection(b_only).is_empty()) {
            return bad("an edge joins the two sides outside the cut");
        }
        Ok(())
    }
}

/// Every pair `{u, v}` whose removal disconnects `g`, with the smallest
/// remaining component (ties: least vertex) on the `A` side.
pub fn two_separations(g: &Graph) -> Vec<TwoSeparation> {
    let all = g.vertices();
    let mut out = Vec::new();
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            let comps = g.components_within(all.without(u).without(v));
            if comps.len() < 2 {
                continue;
            }
            let smallest = comps.iter().copied().min_by_key(|c| c.len()).unwrap_or_default();
            let cut = VertexSet::from_iter([u, v]);
            out.push(TwoSeparation {
                a_side: smallest.union(cut),
                b_side: all.difference(smallest),
                cut: (u, v),
            });
        }
    }
    out
}

/// Spine `{x1, x2}` and pages of a book B*_r.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BookWitness {
    pub spine: (usize, usize),
    pub pages: Vec<usize>,
}

/// Witness when `g` is exactly a book: `r + 2` vertices, `2r + 1` edges, an
/// edge whose ends are both adjacent to every other vertex.
pub fn detect_book(g: &Graph) -> Option<BookWitness> {
    let n = g.order();
    if n < 3 || g.size() != 2 * (n - 2) + 1 {
        return None;
    }
    let all = g.vertices();
    g.edges()
        .find(|&(x, y)| {
            let pages = all.without(x).without(y);
            pages.is_subset(g.neighbors(x)) && pages.is_subset(g.neighbors(y))
        })
        .map(|(x, y)| BookWitness { spine: (x, y), pages: all.without(x).without(y).to_vec() })
}

/// Lexicographically first 4-clique.
pub fn find_k4(g: &Graph) -> Option<VertexSet> {
    for (a, b) in g.edges() {
        let common = g.neighbors(a).intersection(g.neighbors(b));
        for c in common.iter().filter(|&c| c > b) {
            let rest = common.intersection(g.neighbors(c));
            if let Some(d) = rest.iter().find(|&d| d > c) {
                return Some(VertexSet::from_iter([a, b, c, d]));
            }
        }
    }
    None
}

/// Every 4-clique, lexicographically.
pub fn all_k4s(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for (a, b) in g.edges() {
        let common = g.neighbors(a).intersection(g.neighbors(b));
        for c in common.iter().filter(|&c| c > b) {
            for d in common.intersection(g.neighbors(c)).iter().filter(|&d| d > c) {
                out.push(VertexSet::from_iter([a, b, c, d]));
            }
        }
    }
    out
}

/// Whether the five vertices in `rim` carry a 5-cycle as a subgraph.
fn has_five_cycle(g: &Graph, rim: VertexSet) -> bool {
    let r = rim.to_vec();
    // Fix r[0]; try every order of the other four (each cycle twice).
    let mut rest = [r[1], r[2], r[3], r[4]];
    let mut found = false;
    permute(&mut rest, 0, &mut |p| {
        let seq = [r[0], p[0], p[1], p[2], p[3]];
        if (0..5).all(|i| g.has_edge(seq[i], seq[(i + 1) % 5])) {
            found = true;
        }
    });
    found
}

fn permute(a: &mut [usize; 4], k: usize, f: &mut impl FnMut(&[usize; 4])) {
    if k == a.len() {
        f(a);
        return;
    }
    for i in k..a.len() {
        a.swap(k, i);
        permute(a, k + 1, f);
        a.swap(k, i);
    }
}

/// Six vertices containing W6 (hub joined to a 5-cycle) as a subgraph.
pub fn find_w6(g: &Graph) -> Option<VertexSet> {
    for hub in 0..g.order() {
        let nb = g.neighbors(hub).to_vec();
        if nb.len() < 5 {
            continue;
        }
        let mut found = None;
        choose(&nb, 5, &mut Vec::new(), 0, &mut |rim| {
            let rim: VertexSet = rim.iter().copied().collect();
            if found.is_none() && has_five_cycle(g, rim) {
                found = Some(rim.with(hub));
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

fn choose(items: &[usize], k: usize, cur: &mut Vec<usize>, from: usize, f: &mut impl FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for i in from..items.len() {
        cur.push(items[i]);
        choose(items, k, cur, i + 1, f);
        cur.pop();
    }
}

/// Shortest-first search for an induced odd cycle whose removal leaves a
/// connected graph (an empty remainder counts as connected).
pub fn non_separating_induced_odd_cycle(g: &Graph) -> Option<Cycle> {
    let start = odd_girth(g)?;
    let all = g.vertices();
    for m in (start..=g.order()).step_by(2) {
        let mut hit = None;
        for_each_cycle_of_length(g, m, |c| {
            let set: VertexSet = c.iter().copied().collect();
            if g.edges_within(set) == m && g.is_connected_within(all.difference(set)) {
                hit = Cycle::new(c.to_vec()).ok();
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// An odd cycle together with at least two of its chords.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalWitness {
    pub cycle: Cycle,
    pub diagonals: Vec<(usize, usize)>,
}

/// Scans odd cycles by increasing length for one with at least two chords.
pub fn odd_cycle_with_two_diagonals(g: &Graph) -> Option<DiagonalWitness> {
    let start = odd_girth(g)?;
    for m in (start.max(5)..=g.order()).step_by(2) {
        let mut hit = None;
        for_each_cycle_of_length(g, m, |c| {
            let set: VertexSet = c.iter().copied().collect();
            if g.edges_within(set) >= m + 2 {
                let cycle = Cycle::new(c.to_vec()).expect("enumerated cycles are simple");
                let diagonals = cycle.chords(g);
                hit = Some(DiagonalWitness { cycle, diagonals });
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Clause-by-clause outcome of the 2-cut decomposition test for one
/// assignment of the separation sides to `G1` and `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiracCheck {
    pub k: usize,
    pub cut: (usize, usize),
    /// `true` when `G1` is the separation's `A` side.
    pub g1_is_a_side: bool,
    pub uv_absent: bool,
    /// Every (k-1)-coloring of `G1` gives `u` and `v` the same color.
    pub g1_type1: bool,
    /// Every (k-1)-coloring of `G2` gives `u` and `v` distinct colors.
    pub g2_type2: bool,
    pub g1_plus_uv_critical: bool,
    pub g2_contracted_critical: bool,
}

impl DiracCheck {
    pub fn passed(&self) -> bool {
        self.uv_absent
            && self.g1_type1
            && self.g2_type2
            && self.g1_plus_uv_critical
            && self.g2_contracted_critical
    }

    fn score(&self) -> usize {
        [self.uv_absent, self.g1_type1, self.g2_type2, self.g1_plus_uv_critical, self.g2_contracted_critical]
            .iter()
            .filter(|&&b| b)
            .count()
    }
}

fn is_critical_with_chi(g: &Graph, k: usize) -> Result<bool> {
    let (chi, _) = chromatic_number(g)?;
    Ok(chi == k && criticality_given_chi(g, chi, DEFAULT_NODE_BUDGET)?.is_k_critical)
}

fn dirac_orientation(g: &Graph, sep: &TwoSeparation, k: usize, g1_is_a_side: bool) -> Result<DiracCheck> {
    let (u, v) = sep.cut;
    let (s1, s2) = if g1_is_a_side { (sep.a_side, sep.b_side) } else { (sep.b_side, sep.a_side) };
    let side = |s: VertexSet| {
        let (h, map) = g.induced(s);
        let iu = map.iter().position(|&x| x == u).expect("cut lies in both sides");
        let iv = map.iter().position(|&x| x == v).expect("cut lies in both sides");
        (h, iu, iv)
    };
    let (h1, u1, v1) = side(s1);
    let (h2, u2, v2) = side(s2);
    let colors = k.saturating_sub(1);
    let h1_plus = h1.with_edge(u1, v1)?;
    let h2_merged = h2.contract_pair(u2, v2)?;
    let budget = DEFAULT_NODE_BUDGET;
    Ok(DiracCheck {
        k,
        cut: sep.cut,
        g1_is_a_side,
        uv_absent: !g.has_edge(u, v),
        g1_type1: is_k_colorable(&h1, colors, budget)? && !is_k_colorable(&h1_plus, colors, budget)?,
        g2_type2: is_k_colorable(&h2, colors, budget)? && !is_k_colorable(&h2_merged, colors, budget)?,
        g1_plus_uv_critical: is_critical_with_chi(&h1_plus, k)?,
        g2_contracted_critical: is_critical_with_chi(&h2_merged, k)?,
    })
}

/// Tests both side assignments and returns a passing one if any, otherwise
/// the one satisfying more clauses (the `A`-as-`G1` assignment on ties).
/// `k` is χ(g); the caller is responsible for `g` being k-critical.
pub fn dirac_decomposition_check(g: &Graph, sep: &TwoSeparation) -> Result<DiracCheck> {
    sep.validate(g)?;
    let (k, _) = chromatic_number(g)?;
    let first = dirac_orientation(g, sep, k, true)?;
    if first.passed() {
        return Ok(first);
    }
    let second = dirac_orientation(g, sep, k, false)?;
    Ok(if second.score() > first.score() { second } else { first })
}
