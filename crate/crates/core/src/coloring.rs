//! Explicit coloring constructions and an orchestrator that tries them before
//! the exact solver.
//!
//! Color convention: certificates use colors `0, 1, 2, ...`. The cycle
//! coloring with colors `{1, 2, 3}` is stored as `{0, 1, 2}` (subtract one);
//! the alternating construction already uses `{0, 1, 2}` and is stored as is.

use std::ops::ControlFlow;

use thiserror::Error;

use crate::cycles::{cycle_lengths, for_each_cycle_of_length, odd_girth, Cycle, DEFAULT_CYCLE_BUDGET};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::invariants::{chromatic_number_with_budget, clique_number, ColoringCertificate, Provenance, DEFAULT_NODE_BUDGET};
use crate::structure::all_k4s;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("vertex sequence is not a cycle of the graph: {0}")]
    NotACycle(String),
    #[error("diagonal {0}-{1} is missing")]
    MissingDiagonal(usize, usize),
    #[error("the cycle spans further chords besides the two diagonals")]
    ExtraChord,
    #[error("vertex set {0:?} is not a 4-clique")]
    NotAClique(VertexSet),
    #[error("component {0:?} of G - X is not bipartite")]
    ComponentNotBipartite(VertexSet),
    #[error("component {component:?} of G - X attaches to {attachments:?}")]
    TooManyAttachments { component: VertexSet, attachments: VertexSet },
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("construction produced an improper coloring")]
    Inconsistent,
}

/// An odd cycle `v0 .. v(k-1)` whose only chords are `v0v2` and `v1v3`, with
/// `S1 = {v3, v5, ..., v(k-2), v0}` and `S2 = {v2, v4, ..., v(k-1)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiPlan {
    /// Host vertex playing role `v_i`.
    roles: Vec<usize>,
    /// Subgraph induced on the cycle, vertex `i` being `v_i`.
    g0: Graph,
    s1: VertexSet,
    s2: VertexSet,
}

impl PhiPlan {
    /// Validates `roles` as `v0, ..., v(k-1)` in `g`.
    pub fn new(g: &Graph, roles: Vec<usize>) -> Result<Self, ConstructionError> {
        let k = roles.len();
        if k < 5 || k % 2 == 0 {
            return Err(ConstructionError::NotACycle(format!("need an odd length >= 5, got {k}")));
        }
        let cycle = Cycle::new(roles.clone()).map_err(|e| ConstructionError::NotACycle(e.to_string()))?;
        if !cycle.validate(g) {
            return Err(ConstructionError::NotACycle("consecutive roles are not adjacent".into()));
        }
        for (a, b) in [(0, 2), (1, 3)] {
            if !g.has_edge(roles[a], roles[b]) {
                return Err(ConstructionError::MissingDiagonal(roles[a], roles[b]));
            }
        }
        let span: VertexSet = roles.iter().copied().collect();
        if g.edges_within(span) != k + 2 {
            return Err(ConstructionError::ExtraChord);
        }
        let edges = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .filter(|&(i, j)| g.has_edge(roles[i], roles[j]));
        let g0 = Graph::from_edges(k, edges).expect("cycle subgraph is simple");
        let s1 = (3..k - 1).step_by(2).chain([0]).collect();
        let s2 = (2..k).step_by(2).collect();
        Ok(PhiPlan { roles, g0, s1, s2 })
    }

    /// Finds the rotation and direction of `cycle` under which its chords are
    /// exactly `v0v2` and `v1v3`.
    pub fn locate(g: &Graph, cycle: &Cycle) -> Result<Self, ConstructionError> {
        let k = cycle.len();
        let mut last = ConstructionError::ExtraChord;
        for reflect in [false, true] {
            for shift in 0..k {
                let roles: Vec<usize> = (0..k)
                    .map(|i| if reflect { cycle.at(shift + k - i) } else { cycle.at(shift + i) })
                    .collect();
                match PhiPlan::new(g, roles) {
                    Ok(plan) => return Ok(plan),
                    Err(e) => last = e,
                }
            }
        }
        Err(last)
    }

    pub fn roles(&self) -> &[usize] {
        &self.roles
    }

    /// `G0` with vertex `i` standing for `v_i`.
    pub fn g0(&self) -> &Graph {
        &self.g0
    }

    /// `S1` and `S2` as sets of role indices.
    pub fn parts(&self) -> (VertexSet, VertexSet) {
        (self.s1, self.s2)
    }
}

/// The 3-coloring of `G0`: `v1` gets color 2, `S1` color 0, `S2` color 1.
/// Indexed by role, like [`PhiPlan::g0`].
pub fn phi_base_coloring(plan: &PhiPlan) -> ColoringCertificate {
    let colors = (0..plan.roles.len())
        .map(|i| match i {
            1 => 2,
            _ if plan.s1.contains(i) => 0,
            _ => 1,
        })
        .collect();
    let cert = ColoringCertificate::new(colors, 3, Provenance::PhiConstruction);
    debug_assert!(cert.validate(&plan.g0));
    cert
}

/// Extends the coloring `x_i -> i` of a 4-clique `X` (ascending order) to
/// `g`. Each component `H` of `g - X` must be bipartite and attach to at most
/// two clique vertices; its parts then take the colors of the first two
/// unattached clique vertices.
pub fn extend_over_k4(g: &Graph, x: VertexSet) -> Result<ColoringCertificate, ConstructionError> {
    if x.len() != 4 || !x.is_subset(g.vertices()) || !g.is_clique(x) {
        return Err(ConstructionError::NotAClique(x));
    }
    let mut colors = vec![0u8; g.order()];
    let clique = x.to_vec();
    for (i, &v) in clique.iter().enumerate() {
        colors[v] = i as u8;
    }
    for comp in g.components_within(g.vertices().difference(x)) {
        let (a, b) = g
            .bipartition_within(comp)
            .ok_or(ConstructionError::ComponentNotBipartite(comp))?;
        let attachments: VertexSet = comp
            .iter()
            .fold(VertexSet::EMPTY, |s, v| s.union(g.neighbors(v)))
            .intersection(x);
        if attachments.len() > 2 {
            return Err(ConstructionError::TooManyAttachments { component: comp, attachments });
        }
        let free: Vec<u8> = clique
            .iter()
            .filter(|&&v| !attachments.contains(v))
            .map(|&v| colors[v])
            .collect();
        for v in a {
            colors[v] = free[0];
        }
        for v in b {
            colors[v] = free[1];
        }
    }
    let cert = ColoringCertificate::new(colors, 4, Provenance::K4Extension);
    if cert.is_proper_for(g) {
        Ok(cert)
    } else {
        Err(ConstructionError::Inconsistent)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleVertexType {
    /// All neighbors off the cycle lie in `A`.
    Type0,
    /// All neighbors off the cycle lie in `B`.
    Type1,
}

/// One tag per cycle position, in the cycle's vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeAssignment {
    pub tags: Vec<CycleVertexType>,
}

impl TypeAssignment {
    /// Tags from actual neighborhoods. A cycle vertex without neighbors off
    /// the cycle is tagged [`CycleVertexType::Type0`].
    pub fn from_neighborhoods(
        g: &Graph,
        cycle: &Cycle,
        parts: (VertexSet, VertexSet),
    ) -> Result<Self, ConstructionError> {
        let (a, b) = parts;
        let rest = a.union(b);
        cycle
            .vertices()
            .iter()
            .map(|&u| {
                let nb = g.neighbors(u).intersection(rest);
                if nb.is_subset(a) {
                    Ok(CycleVertexType::Type0)
                } else if nb.is_subset(b) {
                    Ok(CycleVertexType::Type1)
                } else {
                    Err(ConstructionError::PreconditionViolated(
                        "a cycle vertex has neighbors in both parts",
                    ))
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(|tags| TypeAssignment { tags })
    }
}

/// Colors `A` with 1 and `B` with 0, splits the cycle into maximal runs of
/// equal type and colors a run of type `j` alternately `j, 2, j, 2, ...`
/// starting from its first vertex in cycle order.
pub fn type_alternating_coloring(
    g: &Graph,
    cycle: &Cycle,
    parts: (VertexSet, VertexSet),
    tags: &TypeAssignment,
) -> Result<ColoringCertificate, ConstructionError> {
    use ConstructionError::PreconditionViolated as Violated;
    let (a, b) = parts;
    if !cycle.validate(g) {
        return Err(Violated("cycle is not a cycle of the graph"));
    }
    if !cycle.is_induced(g) {
        return Err(Violated("cycle is not induced"));
    }
    let on_cycle = cycle.vertex_set();
    let rest = g.vertices().difference(on_cycle);
    if a.union(b) != rest || !a.intersection(b).is_empty() {
        return Err(Violated("(A, B) does not partition G - V(C)"));
    }
    if !g.is_connected_within(rest) {
        return Err(Violated("G - V(C) is not connected"));
    }
    if !g.is_independent(a) || !g.is_independent(b) {
        return Err(Violated("(A, B) is not a bipartition of G - V(C)"));
    }
    if tags.tags.len() != cycle.len() {
        return Err(Violated("one tag per cycle vertex required"));
    }
    for (&u, &t) in cycle.vertices().iter().zip(&tags.tags) {
        let side = if t == CycleVertexType::Type0 { a } else { b };
        if !g.neighbors(u).intersection(rest).is_subset(side) {
            return Err(Violated("tags inconsistent with neighborhoods"));
        }
    }
    let k = cycle.len();
    let Some(start) = (0..k).find(|&i| tags.tags[i] != tags.tags[(i + k - 1) % k]) else {
        return Err(Violated("both types must occur on the cycle"));
    };
    let mut colors = vec![0u8; g.order()];
    for v in a {
        colors[v] = 1;
    }
    for v in b {
        colors[v] = 0;
    }
    let mut offset = 0;
    for step in 0..k {
        let i = (start + step) % k;
        if step > 0 && tags.tags[i] != tags.tags[(i + k - 1) % k] {
            offset = 0;
        }
        let j = match tags.tags[i] {
            CycleVertexType::Type0 => 0,
            CycleVertexType::Type1 => 1,
        };
        colors[cycle.at(i)] = if offset % 2 == 0 { j } else { 2 };
        offset += 1;
    }
    let cert = ColoringCertificate::new(colors, 3, Provenance::TypeAlternating);
    if cert.is_proper_for(g) {
        Ok(cert)
    } else {
        Err(ConstructionError::Inconsistent)
    }
}

fn try_k4_extension(g: &Graph) -> Option<ColoringCertificate> {
    if clique_number(g).0 < 4 {
        return None;
    }
    let spectrum = cycle_lengths(g, DEFAULT_CYCLE_BUDGET);
    let odd: Vec<usize> = spectrum.odd_lengths.iter().copied().collect();
    if !spectrum.complete || !matches!(odd[..], [3, long] if long >= 7) {
        return None;
    }
    all_k4s(g).into_iter().find_map(|x| extend_over_k4(g, x).ok())
}

fn try_type_alternating(g: &Graph) -> Option<ColoringCertificate> {
    let start = odd_girth(g)?;
    let all = g.vertices();
    let mut out = None;
    for m in (start..=g.order()).step_by(2) {
        for_each_cycle_of_length(g, m, |c| {
            let set: VertexSet = c.iter().copied().collect();
            let rest = all.difference(set);
            if g.edges_within(set) != m || rest.is_empty() || !g.is_connected_within(rest) {
                return ControlFlow::Continue(());
            }
            let Some(parts) = g.bipartition_within(rest) else {
                return ControlFlow::Continue(());
            };
            let cycle = Cycle::new(c.to_vec()).expect("enumerated cycles are simple");
            let attempt = TypeAssignment::from_neighborhoods(g, &cycle, parts)
                .and_then(|tags| type_alternating_coloring(g, &cycle, parts, &tags));
            match attempt {
                Ok(cert) => {
                    out = Some(cert);
                    ControlFlow::Break(())
                }
                Err(_) => ControlFlow::Continue(()),
            }
        });
        if out.is_some() {
            break;
        }
    }
    out
}

/// Tries, in order: the bipartition, the K4 extension (when `L(g) = {3, 3+2l}`
/// with `l >= 2` and `g` has a K4), the alternating construction around a
/// non-separating induced odd cycle, and finally the exact solver. The first
/// that applies wins; construction failures fall through.
pub fn constructive_three_color(g: &Graph) -> Result<ColoringCertificate> {
    constructive_three_color_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn constructive_three_color_with_budget(g: &Graph, node_budget: u64) -> Result<ColoringCertificate> {
    if let Some((a, b)) = g.is_bipartite() {
        let colors = (0..g.order()).map(|v| u8::from(b.contains(v))).collect();
        let used = usize::from(!a.is_empty()) + usize::from(!b.is_empty());
        return Ok(ColoringCertificate::new(colors, used, Provenance::Bipartition));
    }
    if let Some(cert) = try_k4_extension(g).or_else(|| try_type_alternating(g)) {
        debug_assert!(cert.is_proper_for(g));
        return Ok(cert);
    }
    Ok(chromatic_number_with_budget(g, node_budget)?.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::chromatic_number;
    use crate::named::{named_graph, NamedGraphId};

    /// Cycle `0..k` plus chords `0-2` and `1-3`.
    fn phi_host(k: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        edges.extend([(0, 2), (1, 3)]);
        Graph::from_edges(k, edges).unwrap()
    }

    #[test]
    fn phi_rule_for_seven_cycle() {
        let g = phi_host(7);
        let plan = PhiPlan::new(&g, (0..7).collect()).unwrap();
        let cert = phi_base_coloring(&plan);
        // colors 1, 2, 3 are stored as 0, 1, 2
        assert_eq!(cert.colors, vec![0, 2, 1, 0, 1, 0, 1]);
        assert!(cert.validate(plan.g0()));
    }

    #[test]
    fn phi_rule_for_nine_cycle() {
        let g = phi_host(9);
        let plan = PhiPlan::new(&g, (0..9).collect()).unwrap();
        let (s1, s2) = plan.parts();
        assert_eq!((s1.len(), s2.len()), (4, 4));
        assert!(phi_base_coloring(&plan).validate(plan.g0()));
    }

    #[test]
    fn phi_rejects_third_chord() {
        let g = phi_host(7).with_edge(4, 6).unwrap();
        assert_eq!(PhiPlan::new(&g, (0..7).collect()), Err(ConstructionError::ExtraChord));
        let g = phi_host(7).delete_edge(1, 3).unwrap();
        assert_eq!(PhiPlan::new(&g, (0..7).collect()), Err(ConstructionError::MissingDiagonal(1, 3)));
    }

    #[test]
    fn phi_locates_roles_on_relabeled_cycle() {
        // Chords 3-5 and 4-6 on the 7-cycle: v0 = 3 going upward.
        let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        edges.extend([(3, 5), (4, 6)]);
        let g = Graph::from_edges(7, edges).unwrap();
        let cycle = Cycle::new((0..7).collect()).unwrap();
        let plan = PhiPlan::locate(&g, &cycle).unwrap();
        assert_eq!(plan.roles(), &[3, 4, 5, 6, 0, 1, 2]);
    }

    #[test]
    fn k4_extension() {
        let k4 = named_graph(NamedGraphId::Complete(4)).unwrap();
        let cert = extend_over_k4(&k4, k4.vertices()).unwrap();
        assert!(cert.validate(&k4));
        // K4 plus an even path 0-4-5-1 between x1 and x2.
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (5, 1)]).unwrap();
        let cert = extend_over_k4(&g, VertexSet::from_iter([0, 1, 2, 3])).unwrap();
        assert!(cert.validate(&g));
        let k5 = named_graph(NamedGraphId::Complete(5)).unwrap();
        assert!(matches!(
            extend_over_k4(&k5, VertexSet::from_iter([0, 1, 2, 3])),
            Err(ConstructionError::TooManyAttachments { .. })
        ));
        let c5 = named_graph(NamedGraphId::Cycle(5)).unwrap();
        let g = k4.disjoint_union(&c5).unwrap();
        assert!(matches!(
            extend_over_k4(&g, VertexSet::from_iter([0, 1, 2, 3])),
            Err(ConstructionError::ComponentNotBipartite(_))
        ));
        assert!(matches!(
            extend_over_k4(&c5, VertexSet::from_iter([0, 1, 2, 3])),
            Err(ConstructionError::NotAClique(_))
        ));
    }

    /// 7-cycle `0..7` and the edge `7-8` (7 in A, 8 in B); cycle vertices
    /// 0 and 3 see `7`, vertices 1 and 5 see `8`.
    fn alternating_host() -> (Graph, Cycle, (VertexSet, VertexSet)) {
        let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        edges.extend([(7, 8), (0, 7), (3, 7), (1, 8), (5, 8)]);
        let g = Graph::from_edges(9, edges).unwrap();
        let cycle = Cycle::new((0..7).collect()).unwrap();
        (g, cycle, (VertexSet::singleton(7), VertexSet::singleton(8)))
    }

    #[test]
    fn alternating_coloring_with_mixed_types() {
        let (g, cycle, parts) = alternating_host();
        let tags = TypeAssignment::from_neighborhoods(&g, &cycle, parts).unwrap();
        let cert = type_alternating_coloring(&g, &cycle, parts, &tags).unwrap();
        assert!(cert.validate(&g));
        assert_eq!((cert.colors[7], cert.colors[8]), (1, 0));
    }

    #[test]
    fn alternating_coloring_preconditions() {
        // C5 plus h adjacent to cycle vertices 0 and 2: every tag is type 0.
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend([(5, 0), (5, 2)]);
        let g = Graph::from_edges(6, edges).unwrap();
        let cycle = Cycle::new((0..5).collect()).unwrap();
        let parts = (VertexSet::singleton(5), VertexSet::EMPTY);
        let tags = TypeAssignment::from_neighborhoods(&g, &cycle, parts).unwrap();
        assert!(matches!(
            type_alternating_coloring(&g, &cycle, parts, &tags),
            Err(ConstructionError::PreconditionViolated(_))
        ));

        let (g, cycle, parts) = alternating_host();
        let mut tags = TypeAssignment::from_neighborhoods(&g, &cycle, parts).unwrap();
        tags.tags[0] = CycleVertexType::Type1;
        assert_eq!(
            type_alternating_coloring(&g, &cycle, parts, &tags),
            Err(ConstructionError::PreconditionViolated("tags inconsistent with neighborhoods"))
        );
    }

    #[test]
    fn orchestrator_paths() {
        let c6 = named_graph(NamedGraphId::Cycle(6)).unwrap();
        let cert = constructive_three_color(&c6).unwrap();
        assert_eq!((cert.num_colors, cert.provenance), (2, Provenance::Bipartition));

        let p = named_graph(NamedGraphId::Petersen).unwrap();
        let cert = constructive_three_color(&p).unwrap();
        assert!(cert.validate(&p));
        assert_eq!(cert.num_colors, 3);

        let w6 = named_graph(NamedGraphId::Wheel(6)).unwrap();
        let cert = constructive_three_color(&w6).unwrap();
        assert_eq!((cert.num_colors, cert.provenance), (4, Provenance::ExactSolver));
        assert_eq!(chromatic_number(&w6).unwrap().0, 4);
    }

    #[test]
    fn orchestrator_uses_k4_extension() {
        // K4 on 0..4 with a 5-path 0-4-5-6-7-1 attached: L = {3, 7}.
        let g = Graph::from_edges(8, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7), (7, 1)]).unwrap();
        let s = cycle_lengths(&g, DEFAULT_CYCLE_BUDGET);
        assert_eq!(s.odd_lengths.iter().copied().collect::<Vec<_>>(), vec![3, 7]);
        let cert = constructive_three_color(&g).unwrap();
        assert_eq!(cert.provenance, Provenance::K4Extension);
        assert!(cert.validate(&g));
    }
}
