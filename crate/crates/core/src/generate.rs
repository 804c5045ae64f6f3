//! Isomorph-free exhaustive generation by canonical vertex augmentation.
//!
//! A graph on `n + 1` vertices is produced from its parent by adding vertex
//! `n` adjacent to a subset of the parent's vertices. The child is accepted
//! iff `n` lies in the automorphism orbit of the canonical deletion vertex:
//! the maximum-degree vertex with the least canonical position. Isomorphic
//! children of one parent are removed by comparing canonical forms.
//!
//! Triangle-freeness is hereditary, so restricting every level to
//! triangle-free graphs yields exactly the triangle-free graphs of each order.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_labeling, orbits};
use crate::graph::{Graph, VertexSet};

/// Counts of graphs per order `0..=9` (OEIS A000088).
pub const GRAPH_COUNTS: [usize; 10] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668];
/// Counts of connected graphs per order `0..=9` (OEIS A001349).
pub const CONNECTED_COUNTS: [usize; 10] = [1, 1, 1, 2, 6, 21, 112, 853, 11117, 261080];
/// Counts of triangle-free graphs per order `0..=11` (OEIS A006785).
pub const TRIANGLE_FREE_COUNTS: [usize; 12] = [1, 1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172, 105071];

fn accepts(child: &Graph, canon_order: &[usize], generators: &[Vec<usize>]) -> bool {
    let x = child.order() - 1;
    let max_deg = child.vertices().iter().map(|v| child.degree(v)).max().unwrap_or(0);
    let w = *canon_order
        .iter()
        .find(|&&v| child.degree(v) == max_deg)
        .expect("some vertex has maximum degree");
    if w == x {
        return true;
    }
    let orb = orbits(child.order(), generators);
    if orb[x] == orb[w] {
        return true;
    }
    let rooted = |r: usize| canonical_labeling(child, &[child.vertices().without(r), VertexSet::singleton(r)]).form;
    rooted(x) == rooted(w)
}

/// Canonical children of `parent`, in increasing order of the new vertex's
/// neighborhood bitmask.
fn children(parent: &Graph, triangle_free: bool) -> Vec<Graph> {
    let n = parent.order();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let max_parent = parent.vertices().iter().map(|v| parent.degree(v)).max().unwrap_or(0);
    for bits in 0u32..1 << n {
        let s = VertexSet::from_bits(bits);
        let k = s.len();
        if k + 1 < max_parent || (triangle_free && !parent.is_independent(s)) {
            continue;
        }
        let mut rows = parent.rows().to_vec();
        rows.push(bits);
        for v in s {
            rows[v] |= 1 << n;
        }
        let child = Graph::from_rows(&rows).expect("augmentation keeps the graph simple");
        if child.vertices().iter().any(|v| child.degree(v) > k) {
            continue;
        }
        let canon = canonical_labeling(&child, &[child.vertices()]);
        if accepts(&child, &canon.order, &canon.generators) && seen.insert(canon.form) {
            out.push(canon.form);
        }
    }
    out
}

/// All graphs of order exactly `n` up to isomorphism, as canonical forms.
/// With `triangle_free`, only triangle-free graphs.
pub fn graphs_of_order(n: usize, triangle_free: bool) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0).expect("order 0")];
    for _ in 0..n {
        level = level
            .par_iter()
            .map(|p| children(p, triangle_free))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect();
    }
    level
}

/// All graphs of orders `1..=max_n`, order by order. Returns each level as
/// it is generated so callers can stream them.
pub fn for_each_order<F>(max_n: usize, triangle_free: bool, mut visit: F)
where
    F: FnMut(usize, &[Graph]),
{
    let mut level = vec![Graph::empty(0).expect("order 0")];
    for n in 1..=max_n {
        level = level
            .par_iter()
            .map(|p| children(p, triangle_free))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect();
        visit(n, &level);
    }
}
