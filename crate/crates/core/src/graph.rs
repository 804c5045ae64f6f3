//! Simple undirected graphs on at most [`MAX_ORDER`] vertices.
//!
//! Every neighborhood is a single `u32` bitset, so a [`Graph`] is a small
//! `Copy` value. Editing operations return new graphs and never mutate.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 32;

/// A set of vertex indices stored as a bitset.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == MAX_ORDER {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&x| x >= MAX_ORDER) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u32);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAX_ORDER],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::UnsupportedOrder(n));
        }
        Ok(Graph { n, adj: [0; MAX_ORDER] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighborhood rows, validating every invariant.
    pub fn from_rows(rows: &[u32]) -> Result<Self> {
        let mut g = Graph::empty(rows.len())?;
        g.adj[..rows.len()].copy_from_slice(rows);
        g.validate()?;
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.n]
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u) - 1) as u32)
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Checks symmetry, absence of loops and that no bit reaches past `n`.
    pub fn validate(&self) -> Result<()> {
        let all = VertexSet::full(self.n).bits();
        for u in 0..MAX_ORDER {
            let row = self.adj[u];
            if u >= self.n {
                if row != 0 {
                    return Err(Error::CorruptAdjacency(u));
                }
                continue;
            }
            if row & !all != 0 || row >> u & 1 == 1 {
                return Err(Error::CorruptAdjacency(u));
            }
            for v in VertexSet(row) {
                if self.adj[v] >> u & 1 == 0 {
                    return Err(Error::CorruptAdjacency(u));
                }
            }
        }
        Ok(())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { vertex: v, order: self.n })
        }
    }

    pub(crate) fn link(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn unlink(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Returns `g + uv`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut g = *self;
        g.link(u, v);
        Ok(g)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::EdgeAbsent(u, v));
        }
        let mut g = *self;
        g.unlink(u, v);
        debug_assert!(g.validate().is_ok());
        Ok(g)
    }

    /// Removes `v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let (g, _) = self.induced(self.vertices().without(v));
        Ok(g)
    }

    /// Identifies `u` and `v`. The merged vertex takes the smaller index,
    /// the larger index is removed and the remaining vertices are renumbered
    /// densely in their original order.
    pub fn contract_pair(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let mut g = *self;
        let merged = (g.adj[keep] | g.adj[gone]) & !(1 << keep) & !(1 << gone);
        for w in VertexSet(g.adj[gone]) {
            g.adj[w] &= !(1 << gone);
        }
        g.adj[gone] = 0;
        for w in VertexSet(merged) {
            g.adj[w] |= 1 << keep;
        }
        g.adj[keep] = merged;
        let (g, _) = g.induced(self.vertices().without(gone));
        Ok(g)
    }

    /// Subgraph induced by `set`, relabeled densely in ascending order. The
    /// second value maps new indices back to the original vertices.
    pub fn induced(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let set = set.intersection(self.vertices());
        let map: Vec<usize> = set.to_vec();
        let mut g = Graph { n: map.len(), adj: [0; MAX_ORDER] };
        for (i, &old) in map.iter().enumerate() {
            g.adj[i] = compress(self.adj[old] & set.bits(), set.bits());
        }
        debug_assert!(g.validate().is_ok());
        (g, map)
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, adj: [0; MAX_ORDER] };
        for u in 0..self.n {
            let mut row = 0u32;
            for v in VertexSet(self.adj[u]) {
                row |= 1 << perm[v];
            }
            g.adj[perm[u]] = row;
        }
        g
    }

    /// Disjoint union, with `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        g.adj[..self.n].copy_from_slice(self.rows());
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u32;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            next &= within.bits() & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// least vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within.intersection(self.vertices());
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach(v, rest);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// `true` for the induced subgraph on `within`; the empty set counts as
    /// connected.
    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.first() {
            None => true,
            Some(v) => self.reach(v, within) == within,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: VertexSet) -> usize {
        set.iter()
            .map(|v| (self.adj[v] & set.bits()).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.neighbors(v)))
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v] & set.bits() == 0)
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.adj[u] & self.adj[v] == 0)
    }

    /// Proper 2-coloring as parts `(A, B)` or `None` when an odd cycle exists.
    ///
    /// Each component is searched from its least vertex, which goes to `A`;
    /// in particular isolated vertices land in `A`.
    pub fn is_bipartite(&self) -> Option<(VertexSet, VertexSet)> {
        self.bipartition_within(self.vertices())
    }

    /// Same as [`Graph::is_bipartite`] for the subgraph induced by `within`.
    pub fn bipartition_within(&self, within: VertexSet) -> Option<(VertexSet, VertexSet)> {
        let mut a = VertexSet::EMPTY;
        let mut b = VertexSet::EMPTY;
        for comp in self.components_within(within) {
            let root = comp.first().unwrap_or(0);
            let mut side = [VertexSet::singleton(root), VertexSet::EMPTY];
            let mut frontier = VertexSet::singleton(root);
            let mut parity = 0;
            let mut seen = frontier;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next = next.union(self.neighbors(v));
                }
                next = next.intersection(comp);
                if !next.intersection(side[parity]).is_empty() {
                    return None;
                }
                parity ^= 1;
                side[parity] = side[parity].union(next);
                frontier = next.difference(seen);
                seen = seen.union(next);
            }
            if !side[0].intersection(side[1]).is_empty() {
                return None;
            }
            a = a.union(side[0]);
            b = b.union(side[1]);
        }
        Some((a, b))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Packs the bits of `x` selected by `mask` into the low bits (software pext).
fn compress(x: u32, mask: u32) -> u32 {
    let mut out = 0u32;
    let mut k = 0;
    for v in VertexSet(mask) {
        if x >> v & 1 == 1 {
            out |= 1 << k;
        }
        k += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn delete_vertex_of_k4_is_k3() {
        for v in 0..4 {
            assert_eq!(complete(4).delete_vertex(v).unwrap(), complete(3));
        }
    }

    #[test]
    fn contract_path_ends() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.contract_pair(0, 2).unwrap(), complete(2));
    }

    #[test]
    fn delete_edge_of_c5_gives_path() {
        let c5 = cycle(5);
        for (u, v) in c5.edges().collect::<Vec<_>>() {
            let p = c5.delete_edge(u, v).unwrap();
            assert_eq!(p.size(), 4);
            assert!(p.is_connected());
            assert_eq!((0..5).filter(|&x| p.degree(x) == 1).count(), 2);
        }
        assert!(matches!(c5.delete_edge(0, 2), Err(Error::EdgeAbsent(0, 2))));
    }

    #[test]
    fn editing_errors() {
        let g = cycle(4);
        assert!(matches!(g.delete_vertex(4), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(g.contract_pair(1, 1), Err(Error::SameVertex(1))));
        assert!(matches!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1))));
        assert!(matches!(Graph::empty(33), Err(Error::UnsupportedOrder(33))));
    }

    #[test]
    fn bipartition_conventions() {
        let (a, b) = cycle(6).is_bipartite().unwrap();
        assert_eq!((a.len(), b.len()), (3, 3));
        assert!(cycle(5).is_bipartite().is_none());
        let (a, b) = Graph::empty(4).unwrap().is_bipartite().unwrap();
        assert_eq!(a, VertexSet::full(4));
        assert!(b.is_empty());
    }

    #[test]
    fn rows_are_validated() {
        assert!(Graph::from_rows(&[0b10, 0b01]).is_ok());
        assert!(Graph::from_rows(&[0b10, 0b00]).is_err());
        assert!(Graph::from_rows(&[0b01]).is_err());
        assert!(Graph::from_rows(&[0b100, 0b000]).is_err());
    }

    #[test]
    fn induced_relabels_in_order() {
        let g = cycle(6);
        let (h, map) = g.induced(VertexSet::from_iter([1, 2, 3, 5]));
        assert_eq!(map, vec![1, 2, 3, 5]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }
}
