//! Cycle lengths and odd cycles.
//!
//! The spectrum comes from Johnson's circuit algorithm run on each block
//! separately (every cycle lies inside one block). Within a block the search
//! stops as soon as every length that block could possibly contain has been
//! seen. Odd girth is computed independently by breadth-first search in the
//! bipartite double cover.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_ORDER};
use crate::structure::block_decomposition;

/// Default number of cycles the spectrum enumeration may visit.
pub const DEFAULT_CYCLE_BUDGET: u64 = 10_000_000;

/// A simple cycle in canonical form: the least vertex first, then the
/// direction in which the second vertex is smaller than the last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Canonicalizes `vertices` (any rotation, either direction).
    pub fn new(mut vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidParameter(format!(
                "a cycle needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        let set: BTreeSet<_> = vertices.iter().collect();
        if set.len() != vertices.len() {
            return Err(Error::InvalidParameter("cycle repeats a vertex".into()));
        }
        let pos = (0..vertices.len()).min_by_key(|&i| vertices[i]).unwrap_or(0);
        vertices.rotate_left(pos);
        if vertices[1] > vertices[vertices.len() - 1] {
            vertices[1..].reverse();
        }
        Ok(Cycle { vertices })
    }

    fn from_canonical(vertices: &[usize]) -> Self {
        debug_assert!(vertices.len() >= 3 && vertices[1] < vertices[vertices.len() - 1]);
        debug_assert!(vertices.iter().all(|&v| v >= vertices[0]));
        Cycle { vertices: vertices.to_vec() }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges (= number of vertices).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    /// Vertex at position `i` taken modulo the length.
    pub fn at(&self, i: usize) -> usize {
        self.vertices[i % self.len()]
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// Consecutive pairs including the closing edge.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).map(|i| (self.at(i), self.at(i + 1)))
    }

    /// Checks that every consecutive pair is an edge of `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        self.vertices.iter().all(|&v| v < g.order()) && self.edges().all(|(u, v)| g.has_edge(u, v))
    }

    /// Edges of `g` joining two non-consecutive vertices of the cycle.
    pub fn chords(&self, g: &Graph) -> Vec<(usize, usize)> {
        let k = self.len();
        let mut out = Vec::new();
        for i in 0..k {
            for j in i + 2..k {
                if i == 0 && j == k - 1 {
                    continue;
                }
                let (u, v) = (self.vertices[i], self.vertices[j]);
                if g.has_edge(u, v) {
                    out.push((u.min(v), u.max(v)));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_induced(&self, g: &Graph) -> bool {
        g.edges_within(self.vertex_set()) == self.len()
    }
}

/// Cycle lengths found in a graph. `odd_lengths` is L(G).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSpectrum {
    pub lengths: BTreeSet<usize>,
    pub odd_lengths: BTreeSet<usize>,
    /// `false` only when the enumeration budget ran out before every block was
    /// either exhausted or saturated.
    pub complete: bool,
    pub cycles_visited: u64,
}

impl CycleSpectrum {
    fn from_lengths(lengths: BTreeSet<usize>, complete: bool, cycles_visited: u64) -> Self {
        let odd_lengths = lengths.iter().copied().filter(|x| x % 2 == 1).collect();
        CycleSpectrum { lengths, odd_lengths, complete, cycles_visited }
    }
}

/// Johnson's circuit search from a fixed start vertex on the symmetric
/// digraph of `g`, restricted to `allowed`. Every undirected cycle through
/// `start` is reached twice (once per direction); only the orientation with
/// `path[1] < path[last]` is reported. Two-edge circuits `s, v, s` count as
/// circuits for the blocking logic but are not reported.
struct CircuitSearch<'g, F> {
    g: &'g Graph,
    start: usize,
    allowed: u32,
    blocked: u32,
    bset: [u32; MAX_ORDER],
    stack: Vec<usize>,
    visit: F,
    stopped: bool,
}

impl<F: FnMut(&[usize]) -> ControlFlow<()>> CircuitSearch<'_, F> {
    fn unblock(&mut self, u: usize) {
        self.blocked &= !(1 << u);
        let waiting = std::mem::take(&mut self.bset[u]);
        for w in VertexSet::from_bits(waiting) {
            if self.blocked >> w & 1 == 1 {
                self.unblock(w);
            }
        }
    }

    fn circuit(&mut self, v: usize) -> bool {
        let mut found = false;
        self.stack.push(v);
        self.blocked |= 1 << v;
        let succ = self.g.neighbors(v).bits() & self.allowed;
        for w in VertexSet::from_bits(succ) {
            if self.stopped {
                break;
            }
            if w == self.start {
                found = true;
                let k = self.stack.len();
                if k >= 3 && self.stack[1] < self.stack[k - 1] && (self.visit)(&self.stack).is_break() {
                    self.stopped = true;
                }
            } else if self.blocked >> w & 1 == 0 && self.circuit(w) {
                found = true;
            }
        }
        if found {
            self.unblock(v);
        } else {
            for w in VertexSet::from_bits(succ) {
                self.bset[w] |= 1 << v;
            }
        }
        self.stack.pop();
        found
    }
}

/// Enumerates the cycles through `start` inside `allowed` whose other
/// vertices are all larger than `start`. Returns `false` if `visit` stopped
/// the search.
fn circuits_from<F>(g: &Graph, start: usize, allowed: VertexSet, visit: F) -> bool
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let above = allowed.bits() & !((1u64 << start) as u32).wrapping_sub(1);
    let comp = g.reach(start, VertexSet::from_bits(above));
    let mut search = CircuitSearch {
        g,
        start,
        allowed: comp.bits(),
        blocked: 0,
        bset: [0; MAX_ORDER],
        stack: Vec::with_capacity(MAX_ORDER),
        visit,
        stopped: false,
    };
    search.circuit(start);
    !search.stopped
}

fn cyclic_blocks(g: &Graph) -> Vec<VertexSet> {
    block_decomposition(g)
        .blocks
        .into_iter()
        .filter(|b| b.len() >= 3)
        .collect()
}

/// Visits every simple cycle of `g` exactly once, as a canonical vertex
/// sequence. Returns `false` if `visit` stopped early.
pub fn for_each_cycle<F>(g: &Graph, mut visit: F) -> bool
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    for block in cyclic_blocks(g) {
        for s in block {
            if !circuits_from(g, s, block, &mut visit) {
                return false;
            }
        }
    }
    true
}

/// Shortest cycle length, by breadth-first search from every vertex.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best = usize::MAX;
    for root in 0..n {
        let mut dist = [usize::MAX; MAX_ORDER];
        let mut parent = [usize::MAX; MAX_ORDER];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Lengths a block could possibly contain: from its girth (odd lengths from
/// its odd girth) up to its order, evens only up to twice the smaller side
/// when it is bipartite.
fn feasible_lengths(g: &Graph, block: VertexSet) -> BTreeSet<usize> {
    let (h, _) = g.induced(block);
    let Some(girth) = girth(&h) else {
        return BTreeSet::new();
    };
    match h.is_bipartite() {
        Some((a, b)) => {
            let top = 2 * a.len().min(b.len());
            (girth..=top).filter(|x| x % 2 == 0).collect()
        }
        None => {
            let odd_girth = odd_girth(&h).unwrap_or(usize::MAX);
            (girth..=h.order()).filter(|&x| x % 2 == 0 || x >= odd_girth).collect()
        }
    }
}

/// Cycle-length spectrum of `g`, visiting at most `budget` cycles.
pub fn cycle_lengths(g: &Graph, budget: u64) -> CycleSpectrum {
    let budget = budget.max(1);
    let mut lengths = BTreeSet::new();
    let mut visited = 0u64;
    let mut complete = true;
    'blocks: for block in cyclic_blocks(g) {
        let target = feasible_lengths(g, block);
        let mut found = BTreeSet::new();
        for s in block {
            let mut out_of_budget = false;
            circuits_from(g, s, block, |c| {
                visited += 1;
                found.insert(c.len());
                if found.len() == target.len() {
                    return ControlFlow::Break(());
                }
                if visited >= budget {
                    out_of_budget = true;
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            });
            if found.len() == target.len() {
                break;
            }
            if out_of_budget {
                lengths.extend(found);
                complete = false;
                break 'blocks;
            }
        }
        debug_assert!(found.is_subset(&target));
        lengths.extend(found);
    }
    CycleSpectrum::from_lengths(lengths, complete, visited)
}

/// L(G) shorthand with the default budget; `None` when incomplete.
pub fn odd_cycle_lengths(g: &Graph) -> Option<BTreeSet<usize>> {
    let s = cycle_lengths(g, DEFAULT_CYCLE_BUDGET);
    s.complete.then_some(s.odd_lengths)
}

/// Distance from `(v, 0)` to `(v, 1)` in the bipartite double cover, i.e.
/// the length of a shortest odd closed walk through `v`.
fn odd_walk_through(g: &Graph, v: usize) -> Option<usize> {
    let mut seen = [1u32 << v, 0u32];
    let mut frontier = [1u32 << v, 0u32];
    let mut d = 0;
    while frontier[0] | frontier[1] != 0 {
        d += 1;
        let mut next = [0u32; 2];
        for side in 0..2 {
            let mut reach = 0u32;
            for u in VertexSet::from_bits(frontier[side]) {
                reach |= g.neighbors(u).bits();
            }
            next[side ^ 1] = reach & !seen[side ^ 1];
        }
        if next[1] >> v & 1 == 1 {
            return Some(d);
        }
        seen[0] |= next[0];
        seen[1] |= next[1];
        frontier = next;
    }
    None
}

/// Length of a shortest odd cycle; `None` exactly when `g` is bipartite.
pub fn odd_girth(g: &Graph) -> Option<usize> {
    (0..g.order()).filter_map(|v| odd_walk_through(g, v)).min()
}

/// A shortest odd cycle through the least vertex that lies on one.
pub fn shortest_odd_cycle(g: &Graph) -> Option<Cycle> {
    let n = g.order();
    let (v, len) = (0..n)
        .filter_map(|v| odd_walk_through(g, v).map(|d| (v, d)))
        .min_by_key(|&(v, d)| (d, v))?;
    // Plain BFS over (vertex, parity) states with parent pointers.
    let idx = |u: usize, p: usize| 2 * u + p;
    let mut parent = vec![usize::MAX; 2 * n];
    let mut seen = vec![false; 2 * n];
    seen[idx(v, 0)] = true;
    let mut queue = std::collections::VecDeque::from([idx(v, 0)]);
    while let Some(state) = queue.pop_front() {
        if state == idx(v, 1) {
            break;
        }
        let (u, p) = (state / 2, state % 2);
        for w in g.neighbors(u) {
            let next = idx(w, p ^ 1);
            if !seen[next] {
                seen[next] = true;
                parent[next] = state;
                queue.push_back(next);
            }
        }
    }
    let mut walk = Vec::with_capacity(len);
    let mut state = idx(v, 1);
    while state != idx(v, 0) {
        state = parent[state];
        walk.push(state / 2);
    }
    debug_assert_eq!(walk.len(), len);
    Cycle::new(walk).ok()
}

/// Visits the cycles of length exactly `m` in canonical form, ordered by
/// least vertex and then depth-first with ascending neighbors. Returns
/// `false` if `visit` stopped early.
pub fn for_each_cycle_of_length<F>(g: &Graph, m: usize, mut visit: F) -> bool
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn extend<F: FnMut(&[usize]) -> ControlFlow<()>>(
        g: &Graph,
        m: usize,
        path: &mut Vec<usize>,
        free: u32,
        visit: &mut F,
    ) -> ControlFlow<()> {
        let last = path[path.len() - 1];
        if path.len() == m {
            if g.has_edge(last, path[0]) && path[1] < last {
                visit(path)?;
            }
            return ControlFlow::Continue(());
        }
        for w in VertexSet::from_bits(g.neighbors(last).bits() & free) {
            path.push(w);
            let r = extend(g, m, path, free & !(1 << w), visit);
            path.pop();
            r?;
        }
        ControlFlow::Continue(())
    }

    if m < 3 || m > g.order() {
        return true;
    }
    let mut path = Vec::with_capacity(m);
    for s in 0..g.order() {
        let above = g.vertices().bits() & !((2u64 << s) - 1) as u32;
        path.push(s);
        let r = extend(g, m, &mut path, above, &mut visit);
        path.pop();
        if r.is_break() {
            return false;
        }
    }
    true
}

/// Up to `limit` cycles of length `m`; the flag is `true` when more exist.
pub fn cycles_of_length(g: &Graph, m: usize, limit: usize) -> (Vec<Cycle>, bool) {
    let mut out = Vec::new();
    let mut truncated = false;
    for_each_cycle_of_length(g, m, |c| {
        if out.len() == limit {
            truncated = true;
            return ControlFlow::Break(());
        }
        out.push(Cycle::from_canonical(c));
        ControlFlow::Continue(())
    });
    (out, truncated)
}

/// Minimum of `|V(C) ∩ V(C')|` over unordered pairs of distinct odd cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairwiseIntersection {
    /// `None` when fewer than two odd cycles exist or the budget ran out.
    pub min: Option<usize>,
    pub complete: bool,
}

pub fn min_pairwise_odd_cycle_intersection(g: &Graph, budget: u64) -> Result<PairwiseIntersection> {
    if g.is_bipartite().is_some() {
        return Err(Error::BipartiteInput);
    }
    let mut sets: Vec<VertexSet> = Vec::new();
    let mut visited = 0u64;
    let finished = for_each_cycle(g, |c| {
        visited += 1;
        if c.len() % 2 == 1 {
            sets.push(c.iter().copied().collect());
        }
        if visited >= budget {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    if !finished {
        return Ok(PairwiseIntersection { min: None, complete: false });
    }
    sets.sort_unstable();
    let mut best: Option<usize> = None;
    // Distinct cycles on the same vertex set meet in all of it.
    for w in sets.windows(2) {
        if w[0] == w[1] {
            best = Some(best.map_or(w[0].len(), |b| b.min(w[0].len())));
        }
    }
    sets.dedup();
    'outer: for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let k = sets[i].intersection(sets[j]).len();
            if best.is_none_or(|b| k < b) {
                best = Some(k);
                if k == 0 {
                    break 'outer;
                }
            }
        }
    }
    Ok(PairwiseIntersection { min: best, complete: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{named_graph, NamedGraphId};
    use NamedGraphId::{Complete, CompleteBipartite, Groetzsch, Petersen, Wheel};

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn canonical_cycle_form() {
        let c = Cycle::new(vec![3, 1, 4, 2]).unwrap();
        assert_eq!(c.vertices(), &[1, 3, 2, 4]);
        assert!(Cycle::new(vec![0, 1]).is_err());
        assert!(Cycle::new(vec![0, 1, 0]).is_err());
    }

    #[test]
    fn spectra_of_named_graphs() {
        let s = cycle_lengths(&named_graph(Petersen).unwrap(), DEFAULT_CYCLE_BUDGET);
        assert_eq!(s.odd_lengths, set(&[5, 9]));
        assert_eq!(s.lengths, set(&[5, 6, 8, 9]));
        assert!(s.complete);
        let s = cycle_lengths(&named_graph(Groetzsch).unwrap(), DEFAULT_CYCLE_BUDGET);
        assert_eq!(s.odd_lengths, set(&[5, 7, 9, 11]));
        let s = cycle_lengths(&named_graph(NamedGraphId::Cycle(6)).unwrap(), DEFAULT_CYCLE_BUDGET);
        assert_eq!((s.lengths, s.odd_lengths), (set(&[6]), set(&[])));
        let s = cycle_lengths(&named_graph(Wheel(6)).unwrap(), DEFAULT_CYCLE_BUDGET);
        assert_eq!(s.odd_lengths, set(&[3, 5]));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let s = cycle_lengths(&named_graph(Petersen).unwrap(), 3);
        assert!(!s.complete);
        assert_eq!(s.cycles_visited, 3);
    }

    #[test]
    fn odd_girth_examples() {
        assert_eq!(odd_girth(&named_graph(NamedGraphId::Cycle(9)).unwrap()), Some(9));
        assert_eq!(odd_girth(&named_graph(Petersen).unwrap()), Some(5));
        assert_eq!(odd_girth(&named_graph(CompleteBipartite(3, 3)).unwrap()), None);
    }

    #[test]
    fn shortest_odd_cycle_examples() {
        let c5 = named_graph(NamedGraphId::Cycle(5)).unwrap();
        assert_eq!(shortest_odd_cycle(&c5).unwrap().vertices(), &[0, 1, 2, 3, 4]);
        let t = shortest_odd_cycle(&named_graph(Complete(4)).unwrap()).unwrap();
        assert_eq!(t.len(), 3);
        let p = named_graph(Petersen).unwrap();
        let c = shortest_odd_cycle(&p).unwrap();
        assert_eq!(c.len(), 5);
        assert!(c.validate(&p));
    }

    #[test]
    fn cycles_of_given_length() {
        let (c, more) = cycles_of_length(&named_graph(Complete(4)).unwrap(), 3, 10);
        assert_eq!((c.len(), more), (4, false));
        let (c, _) = cycles_of_length(&named_graph(Petersen).unwrap(), 5, 100);
        assert_eq!(c.len(), 12);
        let (c, _) = cycles_of_length(&named_graph(NamedGraphId::Cycle(7)).unwrap(), 5, 10);
        assert!(c.is_empty());
        let (c, more) = cycles_of_length(&named_graph(Complete(4)).unwrap(), 3, 2);
        assert_eq!((c.len(), more), (2, true));
    }

    #[test]
    fn pairwise_intersections() {
        let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let r = min_pairwise_odd_cycle_intersection(&bowtie, DEFAULT_CYCLE_BUDGET).unwrap();
        assert_eq!(r.min, Some(1));
        let apart = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        let r = min_pairwise_odd_cycle_intersection(&apart, DEFAULT_CYCLE_BUDGET).unwrap();
        assert_eq!(r.min, Some(0));
        assert_eq!(
            min_pairwise_odd_cycle_intersection(&named_graph(NamedGraphId::Cycle(6)).unwrap(), 10),
            Err(Error::BipartiteInput)
        );
    }
}
