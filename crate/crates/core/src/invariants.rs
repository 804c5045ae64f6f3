//! Exact chromatic number, clique number and criticality.
//!
//! Coloring is decided by a DSATUR-ordered backtracking search: the next
//! vertex is the uncolored one with the most distinct neighbor colors, ties
//! broken by uncolored degree and then by lowest index. Only one previously
//! unused color is ever tried at a branch, since unused colors are
//! interchangeable. The search counts branch nodes and fails with
//! [`Error::SolverBudgetExceeded`] rather than guess.
//!
//! Criticality is decided with edge deletions alone. If `v` has an incident
//! edge `e` then `G - v` is a subgraph of `G - e`, so `χ(G - v) <= χ(G - e)`;
//! an isolated vertex is the only case edge deletions cannot see, and it is
//! rejected separately (except for `K1`, which is 1-critical).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_ORDER};

/// Default branch-node budget for one exact solve.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Which construction produced a coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    ExactSolver,
    /// 2-coloring read off a bipartition.
    Bipartition,
    PhiConstruction,
    K4Extension,
    TypeAlternating,
    Extension,
}

/// A vertex coloring together with its palette size and origin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCertificate {
    pub colors: Vec<u8>,
    pub num_colors: usize,
    pub provenance: Provenance,
}

impl ColoringCertificate {
    pub fn new(colors: Vec<u8>, num_colors: usize, provenance: Provenance) -> Self {
        ColoringCertificate { colors, num_colors, provenance }
    }

    /// Proper, total and within the palette.
    pub fn is_proper_for(&self, g: &Graph) -> bool {
        self.colors.len() == g.order()
            && self.colors.iter().all(|&c| (c as usize) < self.num_colors)
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    pub fn uses_all_colors(&self) -> bool {
        let used: VertexSet = self.colors.iter().map(|&c| c as usize).collect();
        used.len() == self.num_colors
    }

    /// Proper and every palette color used.
    pub fn validate(&self, g: &Graph) -> bool {
        self.is_proper_for(g) && self.uses_all_colors()
    }
}

const UNCOLORED: u8 = u8::MAX;

struct ColorSearch<'g> {
    g: &'g Graph,
    k: usize,
    colors: [u8; MAX_ORDER],
    classes: [u32; MAX_ORDER],
    uncolored: u32,
    nodes: &'g mut u64,
    limit: u64,
}

impl ColorSearch<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c as u8;
        self.classes[c] |= 1 << v;
        self.uncolored &= !(1 << v);
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = UNCOLORED;
        self.classes[c] &= !(1 << v);
        self.uncolored |= 1 << v;
    }

    fn used_mask(&self) -> u32 {
        (0..self.k).filter(|&c| self.classes[c] != 0).fold(0, |m, c| m | 1 << c)
    }

    /// Colors still available to `v`, as a mask over `0..k`.
    fn free_colors(&self, v: usize) -> u32 {
        let nb = self.g.neighbors(v).bits();
        (0..self.k).filter(|&c| self.classes[c] & nb == 0).fold(0, |m, c| m | 1 << c)
    }

    fn pick(&self) -> usize {
        let mut best = (0usize, 0usize, usize::MAX);
        for v in VertexSet::from_bits(self.uncolored) {
            let nb = self.g.neighbors(v).bits();
            let sat = (0..self.k).filter(|&c| self.classes[c] & nb != 0).count();
            let deg = (nb & self.uncolored).count_ones() as usize;
            if best.2 == usize::MAX || (sat, deg) > (best.0, best.1) {
                best = (sat, deg, v);
            }
        }
        best.2
    }

    fn solve(&mut self) -> Result<bool> {
        if self.uncolored == 0 {
            return Ok(true);
        }
        *self.nodes += 1;
        if *self.nodes > self.limit {
            return Err(Error::SolverBudgetExceeded(self.limit));
        }
        let v = self.pick();
        let free = self.free_colors(v);
        let used = self.used_mask();
        let fresh = (!used & free).trailing_zeros();
        for c in VertexSet::from_bits(free) {
            if used >> c & 1 == 0 && c as u32 != fresh {
                continue;
            }
            self.assign(v, c);
            if self.solve()? {
                return Ok(true);
            }
            self.unassign(v, c);
        }
        Ok(false)
    }
}

/// Proper `k`-coloring extending `fixed`, if one exists. `nodes` accumulates
/// branch nodes across calls.
fn color_with(
    g: &Graph,
    k: usize,
    fixed: &[(usize, u8)],
    nodes: &mut u64,
    limit: u64,
) -> Result<Option<Vec<u8>>> {
    if g.order() == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let k = k.min(MAX_ORDER);
    let mut s = ColorSearch {
        g,
        k,
        colors: [UNCOLORED; MAX_ORDER],
        classes: [0; MAX_ORDER],
        uncolored: g.vertices().bits(),
        nodes,
        limit,
    };
    for &(v, c) in fixed {
        if s.classes[c as usize] & g.neighbors(v).bits() != 0 {
            return Ok(None);
        }
        s.assign(v, c as usize);
    }
    Ok(s.solve()?.then(|| s.colors[..g.order()].to_vec()))
}

/// Proper `k`-coloring of `g`, if one exists.
pub fn k_coloring(g: &Graph, k: usize, node_budget: u64) -> Result<Option<Vec<u8>>> {
    let mut nodes = 0;
    color_with(g, k, &[], &mut nodes, node_budget)
}

pub fn is_k_colorable(g: &Graph, k: usize, node_budget: u64) -> Result<bool> {
    Ok(k_coloring(g, k, node_budget)?.is_some())
}

/// Greedy DSATUR coloring (no backtracking), colors `0..returned count`.
fn greedy_dsatur(g: &Graph) -> (Vec<u8>, usize) {
    let n = g.order();
    let mut colors = vec![UNCOLORED; n];
    let mut classes = [0u32; MAX_ORDER];
    let mut uncolored = g.vertices().bits();
    let mut used = 0;
    while uncolored != 0 {
        let mut best = (0usize, 0usize, usize::MAX);
        for v in VertexSet::from_bits(uncolored) {
            let nb = g.neighbors(v).bits();
            let sat = (0..used).filter(|&c| classes[c] & nb != 0).count();
            let deg = (nb & uncolored).count_ones() as usize;
            if best.2 == usize::MAX || (sat, deg) > (best.0, best.1) {
                best = (sat, deg, v);
            }
        }
        let v = best.2;
        let nb = g.neighbors(v).bits();
        let c = (0..).find(|&c| classes[c] & nb == 0).unwrap_or(0);
        colors[v] = c as u8;
        classes[c] |= 1 << v;
        used = used.max(c + 1);
        uncolored &= !(1 << v);
    }
    (colors, used)
}

/// Exact χ with a certificate using exactly χ colors. Every value between the
/// clique lower bound and χ - 1 is refuted by exhaustive search.
pub fn chromatic_number(g: &Graph) -> Result<(usize, ColoringCertificate)> {
    chromatic_number_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn chromatic_number_with_budget(g: &Graph, node_budget: u64) -> Result<(usize, ColoringCertificate)> {
    if g.order() == 0 {
        return Ok((0, ColoringCertificate::new(Vec::new(), 0, Provenance::ExactSolver)));
    }
    let (lower, _) = clique_number(g);
    let (greedy, upper) = greedy_dsatur(g);
    let mut nodes = 0;
    for k in lower..upper {
        if let Some(colors) = color_with(g, k, &[], &mut nodes, node_budget)? {
            let cert = ColoringCertificate::new(colors, k, Provenance::ExactSolver);
            debug_assert!(cert.validate(g));
            return Ok((k, cert));
        }
    }
    let cert = ColoringCertificate::new(greedy, upper, Provenance::ExactSolver);
    debug_assert!(cert.validate(g));
    Ok((upper, cert))
}

fn clique_expand(g: &Graph, r: VertexSet, mut p: u32, best: &mut VertexSet) {
    // Greedy sequential coloring of p gives the bound used for pruning.
    let mut order = Vec::with_capacity(p.count_ones() as usize);
    let mut bound = Vec::with_capacity(order.capacity());
    let mut rest = p;
    let mut color = 0;
    while rest != 0 {
        color += 1;
        let mut q = rest;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !(1 << v) & !g.neighbors(v).bits();
            rest &= !(1 << v);
            order.push(v);
            bound.push(color);
        }
    }
    for i in (0..order.len()).rev() {
        if r.len() + bound[i] <= best.len() {
            return;
        }
        let v = order[i];
        let nr = r.with(v);
        let np = p & g.neighbors(v).bits();
        if np == 0 {
            if nr.len() > best.len() {
                *best = nr;
            }
        } else {
            clique_expand(g, nr, np, best);
        }
        p &= !(1 << v);
    }
}

/// ω(G) with a maximum clique.
pub fn clique_number(g: &Graph) -> (usize, VertexSet) {
    let mut best = VertexSet::EMPTY;
    if g.order() > 0 {
        clique_expand(g, VertexSet::EMPTY, g.vertices().bits(), &mut best);
    }
    (best.len(), best)
}

/// Why a graph is not critical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NonCriticalWitness {
    /// χ(G - e) = χ(G).
    Edge(usize, usize),
    IsolatedVertex(usize),
    /// The graph without vertices is not k-critical for any k.
    NoVertices,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub chi: usize,
    pub is_k_critical: bool,
    pub witness: Option<NonCriticalWitness>,
}

pub fn is_k_critical(g: &Graph) -> Result<CriticalityReport> {
    is_k_critical_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn is_k_critical_with_budget(g: &Graph, node_budget: u64) -> Result<CriticalityReport> {
    let (chi, _) = chromatic_number_with_budget(g, node_budget)?;
    criticality_given_chi(g, chi, node_budget)
}

/// Criticality test when χ(G) is already known.
pub fn criticality_given_chi(g: &Graph, chi: usize, node_budget: u64) -> Result<CriticalityReport> {
    let report = |witness: Option<NonCriticalWitness>| CriticalityReport {
        chi,
        is_k_critical: witness.is_none(),
        witness,
    };
    if g.order() == 0 {
        return Ok(report(Some(NonCriticalWitness::NoVertices)));
    }
    if g.order() > 1 {
        if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
            return Ok(report(Some(NonCriticalWitness::IsolatedVertex(v))));
        }
    }
    for (u, v) in g.edges() {
        let h = g.delete_edge(u, v)?;
        if !is_k_colorable(&h, chi - 1, node_budget)? {
            return Ok(report(Some(NonCriticalWitness::Edge(u, v))));
        }
    }
    Ok(report(None))
}

/// Deletes every edge whose removal keeps χ (lexicographic scan), then every
/// isolated vertex. One pass suffices: an edge that is critical stays
/// critical in every spanning subgraph that still has χ colors.
pub fn extract_critical_subgraph(g: &Graph) -> Result<Graph> {
    if g.order() == 0 {
        return Ok(*g);
    }
    let (chi, _) = chromatic_number(g)?;
    let mut h = *g;
    for (u, v) in g.edges() {
        let candidate = h.delete_edge(u, v)?;
        if !is_k_colorable(&candidate, chi - 1, DEFAULT_NODE_BUDGET)? {
            h = candidate;
        }
    }
    let mut keep: VertexSet = (0..h.order()).filter(|&v| h.degree(v) > 0).collect();
    if keep.is_empty() {
        keep = VertexSet::singleton(0);
    }
    Ok(h.induced(keep).0)
}

/// Proper `c`-coloring agreeing with `fixed`, or `None` when none exists.
pub fn extend_precoloring(
    g: &Graph,
    fixed: &BTreeMap<usize, u8>,
    c: usize,
) -> Result<Option<ColoringCertificate>> {
    for (&v, &col) in fixed {
        g.check_vertex(v)?;
        if col as usize >= c {
            return Err(Error::ImproperPrecoloring(format!("vertex {v} has color {col} >= {c}")));
        }
    }
    for (&u, &cu) in fixed {
        for (&v, &cv) in fixed.range(u + 1..) {
            if cu == cv && g.has_edge(u, v) {
                return Err(Error::ImproperPrecoloring(format!("edge {u}-{v} is monochromatic")));
            }
        }
    }
    let fixed: Vec<(usize, u8)> = fixed.iter().map(|(&v, &c)| (v, c)).collect();
    let mut nodes = 0;
    Ok(color_with(g, c, &fixed, &mut nodes, DEFAULT_NODE_BUDGET)?
        .map(|colors| ColoringCertificate::new(colors, c, Provenance::Extension)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{named_graph, NamedGraphId::*};

    fn named(id: crate::named::NamedGraphId) -> Graph {
        named_graph(id).unwrap()
    }

    #[test]
    fn chromatic_numbers() {
        for (id, chi) in [(Complete(4), 4), (Groetzsch, 4), (Petersen, 3), (Cycle(7), 3), (Cycle(8), 2), (Wheel(6), 4), (Chvatal, 4)] {
            let g = named(id);
            let (k, cert) = chromatic_number(&g).unwrap();
            assert_eq!(k, chi, "{id}");
            assert!(cert.validate(&g));
        }
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()).unwrap().0, 0);
        assert_eq!(chromatic_number(&Graph::empty(3).unwrap()).unwrap().0, 1);
    }

    #[test]
    fn solver_budget_is_a_hard_error() {
        let g = named(Groetzsch);
        assert!(matches!(
            chromatic_number_with_budget(&g, 5),
            Err(Error::SolverBudgetExceeded(5))
        ));
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&named(Complete(4))).0, 4);
        assert_eq!(clique_number(&named(Petersen)).0, 2);
        for r in 1..6 {
            let (w, set) = clique_number(&named(Book(r)));
            assert_eq!(w, 3);
            assert!(named(Book(r)).is_clique(set));
        }
    }

    #[test]
    fn criticality() {
        assert!(is_k_critical(&named(Complete(4))).unwrap().is_k_critical);
        assert!(is_k_critical(&named(Cycle(5))).unwrap().is_k_critical);
        let r = is_k_critical(&named(Groetzsch)).unwrap();
        assert_eq!((r.chi, r.is_k_critical), (4, true));
        assert!(is_k_critical(&Graph::empty(1).unwrap()).unwrap().is_k_critical);
        let r = is_k_critical(&named(Wheel(7))).unwrap();
        assert!(!r.is_k_critical);
        assert!(matches!(r.witness, Some(NonCriticalWitness::Edge(..))));
        let r = is_k_critical(&named(Complete(3)).disjoint_union(&Graph::empty(1).unwrap()).unwrap()).unwrap();
        assert_eq!(r.witness, Some(NonCriticalWitness::IsolatedVertex(3)));
    }

    #[test]
    fn critical_subgraph_extraction() {
        let c5_pendant = named(Cycle(5)).disjoint_union(&Graph::empty(1).unwrap()).unwrap().with_edge(0, 5).unwrap();
        assert_eq!(extract_critical_subgraph(&c5_pendant).unwrap(), named(Cycle(5)));
        let k4_plus_edge = named(Complete(4)).disjoint_union(&named(Complete(2))).unwrap();
        assert_eq!(extract_critical_subgraph(&k4_plus_edge).unwrap(), named(Complete(4)));
        let g = named(Groetzsch);
        assert_eq!(extract_critical_subgraph(&g).unwrap(), g);
    }

    #[test]
    fn precoloring_extension() {
        let c5 = named(Cycle(5));
        let cert = extend_precoloring(&c5, &BTreeMap::new(), 3).unwrap().unwrap();
        assert!(cert.is_proper_for(&c5));
        let k4 = named(Complete(4));
        let fixed = BTreeMap::from([(0, 0), (1, 1), (2, 2)]);
        assert_eq!(extend_precoloring(&k4, &fixed, 3).unwrap(), None);
        let fixed = BTreeMap::from([(0, 2), (1, 2)]);
        assert!(matches!(extend_precoloring(&k4, &fixed, 3), Err(Error::ImproperPrecoloring(_))));
        let fixed = BTreeMap::from([(0, 3)]);
        assert!(matches!(extend_precoloring(&k4, &fixed, 3), Err(Error::ImproperPrecoloring(_))));
        // Precolored vertices keep their colors even when a relabeling would do.
        let fixed = BTreeMap::from([(2, 1), (4, 0)]);
        let cert = extend_precoloring(&c5, &fixed, 3).unwrap().unwrap();
        assert_eq!((cert.colors[2], cert.colors[4]), (1, 0));
    }
}
