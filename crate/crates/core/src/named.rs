//! Named graph families and seeded random graphs.
//!
//! Vertex numbering (fixed, relied on by golden tests):
//!
//! * `petersen`: Kneser graph K(5,2). Vertex `i` is the `i`-th 2-subset of
//!   `{0..4}` in lexicographic order (`{0,1}, {0,2}, ..., {3,4}`); two
//!   vertices are adjacent when their subsets are disjoint.
//! * `groetzsch`: Mycielski graph of C5. `0..5` is the cycle, `5 + i` is the
//!   shadow of `i` (adjacent to the cycle neighbors of `i`), `10` is the apex
//!   adjacent to all shadows.
//! * `chvatal`: the 4-regular triangle-free Chvátal graph on 12 vertices with
//!   the usual edge list (hamiltonian cycle `0..12` is *not* implied).
//! * `complete(k)`, `path(k)`: vertices `0..k`, path edges `i, i+1`.
//! * `cycle(k)`: edges `i, i+1 mod k`, `k >= 3`.
//! * `wheel(k)`: hub `0`, rim `1..k` forming a cycle, `k >= 4`; `wheel(6)` is
//!   W6.
//! * `book(r)`: spine `0, 1`, pages `2..r+2`.
//! * `complete_bipartite(a, b)`: parts `0..a` and `a..a+b`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGraphId {
    Petersen,
    Groetzsch,
    Chvatal,
    Complete(usize),
    Cycle(usize),
    Wheel(usize),
    Book(usize),
    Path(usize),
    CompleteBipartite(usize, usize),
}

impl fmt::Display for NamedGraphId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraphId::Petersen => write!(f, "petersen"),
            NamedGraphId::Groetzsch => write!(f, "groetzsch"),
            NamedGraphId::Chvatal => write!(f, "chvatal"),
            NamedGraphId::Complete(k) => write!(f, "complete({k})"),
            NamedGraphId::Cycle(k) => write!(f, "cycle({k})"),
            NamedGraphId::Wheel(k) => write!(f, "wheel({k})"),
            NamedGraphId::Book(r) => write!(f, "book({r})"),
            NamedGraphId::Path(k) => write!(f, "path({k})"),
            NamedGraphId::CompleteBipartite(a, b) => write!(f, "complete_bipartite({a},{b})"),
        }
    }
}

impl FromStr for NamedGraphId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownName(s.to_string());
        let s = s.trim();
        let (name, args) = match s.find('(') {
            None => (s, Vec::new()),
            Some(open) => {
                let inner = s[open + 1..].strip_suffix(')').ok_or_else(unknown)?;
                let args = inner
                    .split(',')
                    .map(|a| a.trim().parse::<usize>().map_err(|_| unknown()))
                    .collect::<Result<Vec<_>>>()?;
                (&s[..open], args)
            }
        };
        let one = |ctor: fn(usize) -> NamedGraphId| match args[..] {
            [k] => Ok(ctor(k)),
            _ => Err(unknown()),
        };
        match (name, args.len()) {
            ("petersen", 0) => Ok(NamedGraphId::Petersen),
            ("groetzsch" | "grotzsch", 0) => Ok(NamedGraphId::Groetzsch),
            ("chvatal", 0) => Ok(NamedGraphId::Chvatal),
            ("complete", _) => one(NamedGraphId::Complete),
            ("cycle", _) => one(NamedGraphId::Cycle),
            ("wheel", _) => one(NamedGraphId::Wheel),
            ("book", _) => one(NamedGraphId::Book),
            ("path", _) => one(NamedGraphId::Path),
            ("complete_bipartite", 2) => Ok(NamedGraphId::CompleteBipartite(args[0], args[1])),
            _ => Err(unknown()),
        }
    }
}

const CHVATAL_EDGES: [(usize, usize); 24] = [
    (0, 1), (0, 4), (0, 6), (0, 9),
    (1, 2), (1, 5), (1, 7),
    (2, 3), (2, 6), (2, 8),
    (3, 4), (3, 7), (3, 9),
    (4, 5), (4, 8),
    (5, 10), (5, 11),
    (6, 10), (6, 11),
    (7, 8), (7, 11),
    (8, 10),
    (9, 10), (9, 11),
];

fn at_least(what: &str, k: usize, min: usize) -> Result<()> {
    if k < min {
        Err(Error::InvalidParameter(format!("{what} requires a parameter >= {min}, got {k}")))
    } else {
        Ok(())
    }
}

pub fn named_graph(id: NamedGraphId) -> Result<Graph> {
    use NamedGraphId::*;
    match id {
        Petersen => {
            let subsets: Vec<(usize, usize)> =
                (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
            let disjoint = |x: (usize, usize), y: (usize, usize)| {
                x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1
            };
            let edges = (0..10)
                .flat_map(|i| (i + 1..10).map(move |j| (i, j)))
                .filter(|&(i, j)| disjoint(subsets[i], subsets[j]));
            Graph::from_edges(10, edges)
        }
        Groetzsch => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((5 + i, (i + 1) % 5));
                edges.push((5 + i, (i + 4) % 5));
                edges.push((10, 5 + i));
            }
            Graph::from_edges(11, edges)
        }
        Chvatal => Graph::from_edges(12, CHVATAL_EDGES),
        Complete(k) => {
            at_least("complete", k, 1)?;
            Graph::from_edges(k, (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))))
        }
        Cycle(k) => {
            at_least("cycle", k, 3)?;
            Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
        }
        Wheel(k) => {
            at_least("wheel", k, 4)?;
            let rim = k - 1;
            let edges = (1..k).flat_map(|i| [(0, i), (i, 1 + i % rim)]);
            Graph::from_edges(k, edges)
        }
        Book(r) => {
            at_least("book", r, 1)?;
            let n = r.saturating_add(2);
            let edges = std::iter::once((0, 1)).chain((2..n).flat_map(|p| [(0, p), (1, p)]));
            Graph::from_edges(n, edges)
        }
        Path(k) => {
            at_least("path", k, 1)?;
            Graph::from_edges(k, (1..k).map(|i| (i - 1, i)))
        }
        CompleteBipartite(a, b) => {
            at_least("complete_bipartite", a.min(b), 1)?;
            let n = a.saturating_add(b);
            Graph::from_edges(n, (0..a).flat_map(|u| (a..n).map(move |v| (u, v))))
        }
    }
}

/// Erdős-Rényi G(n, p) from ChaCha8 seeded with `seed`. Pairs `(i, j)`,
/// `i < j`, are visited in lexicographic order and each consumes one
/// Bernoulli draw, so the output is identical on every platform.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n > MAX_ORDER {
        return Err(Error::UnsupportedOrder(n));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n)?;
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                g.link(i, j);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oversized_parameters_are_rejected() {
        for id in [NamedGraphId::Book(usize::MAX), NamedGraphId::CompleteBipartite(usize::MAX, 3), NamedGraphId::Complete(33)] {
            assert!(matches!(named_graph(id), Err(Error::UnsupportedOrder(_))), "{id}");
        }
    }

    #[test]
    fn petersen_shape() {
        let g = named_graph(NamedGraphId::Petersen).unwrap();
        assert_eq!((g.order(), g.size()), (10, 15));
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn groetzsch_and_chvatal_shapes() {
        let g = named_graph(NamedGraphId::Groetzsch).unwrap();
        assert_eq!((g.order(), g.size()), (11, 20));
        assert!(g.is_triangle_free());
        let c = named_graph(NamedGraphId::Chvatal).unwrap();
        assert_eq!((c.order(), c.size()), (12, 24));
        assert!((0..12).all(|v| c.degree(v) == 4));
        assert!(c.is_triangle_free());
    }

    #[test]
    fn small_families() {
        let b = named_graph(NamedGraphId::Book(3)).unwrap();
        assert_eq!((b.order(), b.size()), (5, 7));
        let w = named_graph(NamedGraphId::Wheel(6)).unwrap();
        assert_eq!((w.order(), w.size()), (6, 10));
        assert_eq!(w.degree(0), 5);
        assert!((1..6).all(|v| w.degree(v) == 3));
        let k = named_graph(NamedGraphId::CompleteBipartite(3, 3)).unwrap();
        assert_eq!(k.size(), 9);
        assert!(named_graph(NamedGraphId::Cycle(2)).is_err());
        assert!(named_graph(NamedGraphId::Complete(33)).is_err());
    }

    #[test]
    fn ids_round_trip_through_text() {
        for s in ["petersen", "groetzsch", "chvatal", "wheel(6)", "book(3)", "complete_bipartite(3,4)"] {
            let id: NamedGraphId = s.parse().unwrap();
            assert_eq!(id.to_string(), s);
        }
        assert!("wheel".parse::<NamedGraphId>().is_err());
        assert!("wheel(6".parse::<NamedGraphId>().is_err());
        assert!("petersen(1)".parse::<NamedGraphId>().is_err());
        assert!("complete_bipartite(3)".parse::<NamedGraphId>().is_err());
    }

    #[test]
    fn random_graph_extremes_and_determinism() {
        assert_eq!(random_graph(5, 0.0, 7).unwrap().size(), 0);
        assert_eq!(random_graph(5, 1.0, 7).unwrap(), named_graph(NamedGraphId::Complete(5)).unwrap());
        assert_eq!(random_graph(10, 0.5, 42).unwrap(), random_graph(10, 0.5, 42).unwrap());
        assert!(random_graph(4, 1.5, 0).is_err());
    }
}
