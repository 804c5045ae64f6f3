mod common;

use proptest::prelude::*;

use oddcycles::canon::{canonical_form, is_isomorphic};
use oddcycles::coloring::constructive_three_color;
use oddcycles::cycles::{cycle_lengths, cycles_of_length, odd_girth, shortest_odd_cycle, DEFAULT_CYCLE_BUDGET};
use oddcycles::invariants::{chromatic_number, clique_number, extract_critical_subgraph, is_k_critical};
use oddcycles::structure::{block_decomposition, two_separations, vertex_connectivity};
use oddcycles::{parse_graph6, to_graph6, Graph};

use common::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn graph6_round_trip(g in graph(32)) {
        let line = to_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(line.as_bytes()).unwrap(), g);
    }

    #[test]
    fn bipartite_iff_no_odd_cycle(g in graph(10)) {
        let s = cycle_lengths(&g, DEFAULT_CYCLE_BUDGET);
        prop_assert!(s.complete);
        prop_assert_eq!(g.is_bipartite().is_some(), s.odd_lengths.is_empty());
    }

    #[test]
    fn spectrum_matches_naive_enumeration(g in graph(9)) {
        let s = cycle_lengths(&g, DEFAULT_CYCLE_BUDGET);
        prop_assert_eq!(s.lengths, naive_cycle_lengths(&g));
    }

    #[test]
    fn odd_girth_is_least_odd_length(g in graph(10)) {
        let s = cycle_lengths(&g, DEFAULT_CYCLE_BUDGET);
        prop_assert_eq!(odd_girth(&g), s.odd_lengths.first().copied());
        if let Some(c) = shortest_odd_cycle(&g) {
            prop_assert!(c.validate(&g));
            prop_assert!(c.is_induced(&g));
            prop_assert_eq!(Some(c.len()), odd_girth(&g));
        }
    }

    #[test]
    fn cycle_counts_match_naive(g in graph(8), m in 3usize..=8) {
        let (cycles, truncated) = cycles_of_length(&g, m, usize::MAX);
        prop_assert!(!truncated);
        prop_assert_eq!(cycles.len(), naive_cycle_count(&g, m));
        prop_assert!(cycles.iter().all(|c| c.len() == m && c.validate(&g)));
    }

    #[test]
    fn chromatic_and_clique_numbers(g in graph(8)) {
        let (chi, cert) = chromatic_number(&g).unwrap();
        let (omega, clique) = clique_number(&g);
        prop_assert_eq!(chi, brute_chromatic_number(&g));
        prop_assert_eq!(omega, brute_clique_number(&g));
        prop_assert!(cert.validate(&g));
        prop_assert!(g.is_clique(clique) && clique.len() == omega);
        prop_assert!(omega <= chi);
    }

    #[test]
    fn gyarfas_bound(g in graph(9)) {
        let s = cycle_lengths(&g, DEFAULT_CYCLE_BUDGET);
        let (chi, _) = chromatic_number(&g).unwrap();
        prop_assert!(chi <= 2 * s.odd_lengths.len() + 2);
    }

    #[test]
    fn contracting_a_non_edge(g in graph(9), a in 0usize..9, b in 0usize..9) {
        let n = g.order();
        prop_assume!(n >= 2);
        let (u, v) = (a % n, b % n);
        prop_assume!(u != v && !g.has_edge(u, v));
        let h = g.contract_pair(u, v).unwrap();
        prop_assert_eq!(h.order(), n - 1);
        let common = g.neighbors(u).intersection(g.neighbors(v)).len();
        prop_assert_eq!(h.size(), g.size() - common);
        prop_assert!(chromatic_number(&h).unwrap().0 >= chromatic_number(&g).unwrap().0);
    }

    #[test]
    fn blocks_match_naive(g in graph(8)) {
        let d = block_decomposition(&g);
        prop_assert_eq!(d.blocks, naive_blocks(&g));
        prop_assert_eq!(d.cut_vertices, naive_cut_vertices(&g));
    }

    #[test]
    fn three_connected_iff_no_small_cut(g in graph(9)) {
        prop_assume!(g.order() >= 2 && g.is_connected());
        let kappa = vertex_connectivity(&g).unwrap();
        let no_small_cut = g.order() >= 4
            && naive_cut_vertices(&g).is_empty()
            && two_separations(&g).is_empty();
        prop_assert_eq!(kappa >= 3, no_small_cut);
        for sep in two_separations(&g) {
            prop_assert!(sep.validate(&g).is_ok());
        }
    }

    #[test]
    fn canonical_form_is_a_relabeling_invariant(
        (g, perm) in graph(10).prop_flat_map(|g| (Just(g), permutation(g.order())))
    ) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(is_isomorphic(&canonical_form(&g), &g));
    }

    #[test]
    fn extracted_subgraph_is_critical(g in graph(7)) {
        prop_assume!(g.order() > 0);
        let (chi, _) = chromatic_number(&g).unwrap();
        let h = extract_critical_subgraph(&g).unwrap();
        let report = is_k_critical(&h).unwrap();
        prop_assert_eq!(report.chi, chi);
        prop_assert!(report.is_k_critical);
    }

    #[test]
    fn orchestrator_colors_properly(g in graph(10)) {
        let cert = constructive_three_color(&g).unwrap();
        prop_assert!(cert.is_proper_for(&g));
        prop_assert!(cert.num_colors >= chromatic_number(&g).unwrap().0);
    }
}
