//! Canonical labeling by individualization and refinement.
//!
//! The search tree individualizes a vertex of the first non-singleton cell
//! and refines to an equitable partition. Each leaf orders the vertices; the
//! canonical form is the relabeled graph whose row sequence is
//! lexicographically largest over all leaves. Leaves with equal forms yield
//! automorphisms, which prune siblings in the same orbit of the pointwise
//! stabilizer of the current path.

use std::cmp::Ordering;

use crate::graph::{Graph, VertexSet, MAX_ORDER};

#[derive(Debug, Clone)]
pub struct Canon {
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    /// The graph relabeled by `order`.
    pub form: Graph,
    /// Automorphisms found during the search, as vertex maps.
    pub generators: Vec<Vec<usize>>,
}

impl Canon {
    /// Canonical position of every vertex.
    pub fn labeling(&self) -> Vec<usize> {
        let mut lab = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            lab[v] = i;
        }
        lab
    }
}

/// Splits cells by neighbor counts into other cells until the partition is
/// equitable. Fragments keep the position of their parent cell and are
/// ordered by increasing count.
fn refine(g: &Graph, cells: &mut Vec<VertexSet>) {
    let mut s = 0;
    while s < cells.len() {
        let splitter = cells[s];
        let mut next = Vec::with_capacity(cells.len());
        let mut changed = false;
        for &cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell);
                continue;
            }
            let mut buckets = [0u32; MAX_ORDER + 1];
            for v in cell {
                buckets[g.neighbors(v).intersection(splitter).len()] |= 1 << v;
            }
            let before = next.len();
            next.extend(buckets.iter().filter(|&&b| b != 0).map(|&b| VertexSet::from_bits(b)));
            changed |= next.len() - before > 1;
        }
        *cells = next;
        s = if changed { 0 } else { s + 1 };
    }
}

struct Leaf {
    path: Vec<usize>,
    order: Vec<usize>,
    rows: Vec<u32>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

fn diverge(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// Orbit representative (least member) of every vertex under the group
/// generated by `generators`.
pub fn orbits(n: usize, generators: &[Vec<usize>]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    for gen in generators {
        for (v, &w) in gen.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            parent[a.max(b)] = a.min(b);
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

impl Search<'_> {
    fn relabeled_rows(&self, order: &[usize]) -> Vec<u32> {
        let mut lab = [0usize; MAX_ORDER];
        for (i, &v) in order.iter().enumerate() {
            lab[v] = i;
        }
        order
            .iter()
            .map(|&v| self.g.neighbors(v).iter().fold(0u32, |r, w| r | 1 << lab[w]))
            .collect()
    }

    /// Returns the depth to resume at when an automorphism was found.
    fn leaf(&mut self, cells: &[VertexSet], path: &[usize]) -> Option<usize> {
        let order: Vec<usize> = cells.iter().map(|c| c.first().expect("non-empty cell")).collect();
        let rows = self.relabeled_rows(&order);
        let leaf = Leaf { path: path.to_vec(), order, rows };
        let Some(first) = &self.first else {
            self.first = Some(Leaf { path: leaf.path.clone(), order: leaf.order.clone(), rows: leaf.rows.clone() });
            self.best = Some(leaf);
            return None;
        };
        let best = self.best.as_ref().expect("best is set with first");
        let reference = if leaf.rows == first.rows {
            first
        } else {
            match leaf.rows.cmp(&best.rows) {
                Ordering::Greater => {
                    self.best = Some(leaf);
                    return None;
                }
                Ordering::Less => return None,
                Ordering::Equal => best,
            }
        };
        let mut gen = vec![0; leaf.order.len()];
        for (&a, &b) in reference.order.iter().zip(&leaf.order) {
            gen[a] = b;
        }
        let depth = diverge(&reference.path, &leaf.path);
        self.generators.push(gen);
        Some(depth)
    }

    fn descend(&mut self, cells: Vec<VertexSet>, path: &mut Vec<usize>) -> Option<usize> {
        let Some(t) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, path);
        };
        let depth = path.len();
        let target = cells[t];
        let mut tried = VertexSet::EMPTY;
        for v in target {
            if !tried.is_empty() {
                let fixing: Vec<Vec<usize>> = self
                    .generators
                    .iter()
                    .filter(|gen| path.iter().all(|&p| gen[p] == p))
                    .cloned()
                    .collect();
                let orb = orbits(self.g.order(), &fixing);
                if tried.iter().any(|u| orb[u] == orb[v]) {
                    continue;
                }
            }
            tried.insert(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(VertexSet::singleton(v));
            child.push(target.without(v));
            child.extend_from_slice(&cells[t + 1..]);
            refine(self.g, &mut child);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }
}

/// Canonical labeling of `g` respecting the ordered vertex partition
/// `cells` (colors). Graphs with equal partition shapes get equal forms iff
/// they are isomorphic by a map preserving the cells.
pub fn canonical_labeling(g: &Graph, cells: &[VertexSet]) -> Canon {
    debug_assert_eq!(
        cells.iter().fold(VertexSet::EMPTY, |s, &c| s.union(c)),
        g.vertices()
    );
    if g.order() == 0 {
        return Canon { order: Vec::new(), form: *g, generators: Vec::new() };
    }
    let mut search = Search { g, first: None, best: None, generators: Vec::new() };
    let mut start: Vec<VertexSet> = cells.iter().copied().filter(|c| !c.is_empty()).collect();
    refine(g, &mut start);
    search.descend(start, &mut Vec::new());
    let best = search.best.expect("search visits at least one leaf");
    let form = Graph::from_rows(&best.rows).expect("relabeling preserves simplicity");
    Canon { order: best.order, form, generators: search.generators }
}

/// The canonical form of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    canonical_labeling(g, &[g.vertices()]).form
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{named_graph, random_graph, NamedGraphId};

    fn shuffled(g: &Graph, seed: u64) -> Graph {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        g.permuted(&perm)
    }

    #[test]
    fn form_is_invariant_under_relabeling() {
        for seed in 0..40 {
            let g = random_graph(9, 0.4, seed).unwrap();
            let h = shuffled(&g, seed + 1000);
            assert_eq!(canonical_form(&g), canonical_form(&h), "seed {seed}");
            assert!(is_isomorphic(&g, &h));
        }
    }

    #[test]
    fn form_is_isomorphic_to_input() {
        let g = random_graph(10, 0.5, 7).unwrap();
        let c = canonical_labeling(&g, &[g.vertices()]);
        assert_eq!(g.permuted(&c.labeling()), c.form);
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let c6 = named_graph(NamedGraphId::Cycle(6)).unwrap();
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_isomorphic(&c6, &two_triangles));
    }

    #[test]
    fn generators_are_automorphisms_and_give_orbits() {
        let p = named_graph(NamedGraphId::Petersen).unwrap();
        let c = canonical_labeling(&p, &[p.vertices()]);
        for gen in &c.generators {
            assert_eq!(p.permuted(gen), p);
        }
        let orb = orbits(10, &c.generators);
        assert!(orb.iter().all(|&r| r == 0));

        let empty = Graph::empty(12).unwrap();
        let c = canonical_labeling(&empty, &[empty.vertices()]);
        assert!(orbits(12, &c.generators).iter().all(|&r| r == 0));
    }

    #[test]
    fn colored_partition_is_respected() {
        // Path 0-1-2: the ends are swapped by an automorphism, the middle is not.
        let p3 = named_graph(NamedGraphId::Path(3)).unwrap();
        let color = |x: usize| [p3.vertices().without(x), VertexSet::singleton(x)];
        let end0 = canonical_labeling(&p3, &color(0)).form;
        let end2 = canonical_labeling(&p3, &color(2)).form;
        let mid = canonical_labeling(&p3, &color(1)).form;
        assert_eq!(end0, end2);
        assert_ne!(end0, mid);
    }
}
