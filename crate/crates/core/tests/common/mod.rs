//! Slow, obviously-correct reference implementations used as oracles.
#![allow(dead_code)]

use std::collections::BTreeSet;

use oddcycles::{Graph, VertexSet};

/// Lengths of all simple cycles, by extending every path from its least
/// vertex and closing back to it.
pub fn naive_cycle_lengths(g: &Graph) -> BTreeSet<usize> {
    fn extend(g: &Graph, start: usize, path: &mut Vec<usize>, out: &mut BTreeSet<usize>) {
        let last = *path.last().unwrap();
        for w in 0..g.order() {
            if !g.has_edge(last, w) {
                continue;
            }
            if w == start && path.len() >= 3 {
                out.insert(path.len());
            } else if w > start && !path.contains(&w) {
                path.push(w);
                extend(g, start, path, out);
                path.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    for s in 0..g.order() {
        extend(g, s, &mut vec![s], &mut out);
    }
    out
}

/// Number of distinct cycles of length `m` (each closed walk counted once
/// per starting vertex and direction, then divided out).
pub fn naive_cycle_count(g: &Graph, m: usize) -> usize {
    fn extend(g: &Graph, m: usize, path: &mut Vec<usize>, count: &mut usize) {
        let last = *path.last().unwrap();
        if path.len() == m {
            if g.has_edge(last, path[0]) {
                *count += 1;
            }
            return;
        }
        for w in 0..g.order() {
            if g.has_edge(last, w) && !path.contains(&w) {
                path.push(w);
                extend(g, m, path, count);
                path.pop();
            }
        }
    }
    let mut count = 0;
    for s in 0..g.order() {
        extend(g, m, &mut vec![s], &mut count);
    }
    count / (2 * m)
}

/// Chromatic number as the fewest blocks of a partition of the vertices
/// into independent sets, trying every set partition.
pub fn brute_chromatic_number(g: &Graph) -> usize {
    fn rec(g: &Graph, v: usize, classes: &mut Vec<Vec<usize>>, best: &mut usize) {
        if classes.len() >= *best {
            return;
        }
        if v == g.order() {
            *best = classes.len();
            return;
        }
        for i in 0..classes.len() {
            if classes[i].iter().all(|&u| !g.has_edge(u, v)) {
                classes[i].push(v);
                rec(g, v + 1, classes, best);
                classes[i].pop();
            }
        }
        classes.push(vec![v]);
        rec(g, v + 1, classes, best);
        classes.pop();
    }
    let mut best = g.order() + 1;
    rec(g, 0, &mut Vec::new(), &mut best);
    best
}

pub fn brute_clique_number(g: &Graph) -> usize {
    (0u32..1 << g.order())
        .map(VertexSet::from_bits)
        .filter(|&s| s.iter().all(|u| s.iter().all(|v| u == v || g.has_edge(u, v))))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

fn connected(g: &Graph, s: VertexSet) -> bool {
    let Some(start) = s.first() else { return true };
    let mut seen = VertexSet::singleton(start);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for v in s.iter() {
            if g.has_edge(u, v) && !seen.contains(v) {
                seen.insert(v);
                stack.push(v);
            }
        }
    }
    seen == s
}

/// Blocks as the inclusion-maximal vertex sets inducing either an edge or a
/// connected subgraph on at least 3 vertices with no cut vertex, plus
/// isolated vertices. Sorted by vertex list.
pub fn naive_blocks(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    let good = |s: VertexSet| match s.len() {
        0 | 1 => false,
        2 => {
            let v = s.to_vec();
            g.has_edge(v[0], v[1])
        }
        _ => connected(g, s) && s.iter().all(|v| connected(g, s.without(v))),
    };
    let candidates: Vec<VertexSet> = (0u32..1 << n).map(VertexSet::from_bits).filter(|&s| good(s)).collect();
    let mut blocks: Vec<VertexSet> = candidates
        .iter()
        .copied()
        .filter(|&s| !candidates.iter().any(|&t| t != s && s.is_subset(t)))
        .collect();
    blocks.extend((0..n).filter(|&v| g.degree(v) == 0).map(VertexSet::singleton));
    blocks.sort_by_key(|s| s.to_vec());
    blocks
}

/// Cut vertices by deletion: removing them increases the number of
/// components.
pub fn naive_cut_vertices(g: &Graph) -> VertexSet {
    let components = |s: VertexSet| {
        let mut left = s;
        let mut count = 0;
        while let Some(v) = left.first() {
            let mut comp = VertexSet::singleton(v);
            loop {
                let grown = comp
                    .iter()
                    .fold(comp, |acc, u| acc.union(g.neighbors(u).intersection(s)));
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            left = left.difference(comp);
            count += 1;
        }
        count
    };
    let all = g.vertices();
    let base = components(all);
    all.iter().filter(|&v| components(all.without(v)) > base).collect()
}
