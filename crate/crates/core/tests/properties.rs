//! Randomized invariants of the solver pipeline, checked with proptest.

use mwis_core::decompose::{cus_kind, cycle_basis, decompose};
use mwis_core::graph::graph_from_integers;
use mwis_core::oracle::{oracle_amis, oracle_mwis, OracleConfig};
use mwis_core::solve::special_union;
use mwis_core::{
    greedy_mis, gwmin2_bound, gwmin_bound, solve_amisl, solve_composed, solve_mwis, MisCollection,
    NodeId, Rational, ScopeKind, SelectorKind, Weight, WeightedGraph,
};
use proptest::prelude::*;
use std::collections::BTreeSet;

/// Node ids `0..n`, integer weights, and one coin flip per candidate edge.
fn arb_graph(max_nodes: usize) -> impl Strategy<Value = WeightedGraph> {
    (0..=max_nodes).prop_flat_map(|n| {
        let weights = proptest::collection::vec(1u64..=50, n);
        let flags = proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2);
        (weights, flags).prop_map(move |(ws, flags)| {
            let nodes: Vec<(u32, u64)> =
                ws.iter().enumerate().map(|(i, &w)| (i as u32, w)).collect();
            let mut edges = Vec::new();
            let mut flag = flags.into_iter();
            for u in 0..n as u32 {
                for v in (u + 1)..n as u32 {
                    if flag.next().unwrap_or(false) {
                        edges.push((u, v));
                    }
                }
            }
            graph_from_integers(&nodes, &edges).expect("generated graph is valid")
        })
    })
}

fn arb_family() -> impl Strategy<Value = MisCollection> {
    proptest::collection::vec(proptest::collection::btree_set(0u32..12, 0..5), 0..8).prop_map(
        |sets| {
            MisCollection::from_sets(
                sets.into_iter()
                    .map(|s| s.into_iter().map(NodeId).collect::<BTreeSet<_>>()),
            )
        },
    )
}

fn relabel(g: &WeightedGraph, map: impl Fn(NodeId) -> NodeId) -> WeightedGraph {
    let nodes: Vec<(NodeId, Weight)> = g
        .nodes()
        .map(|id| (map(id), g.weight(id).unwrap().clone()))
        .collect();
    let edges: Vec<(NodeId, NodeId)> = g.edges().map(|(u, v)| (map(u), map(v))).collect();
    WeightedGraph::build(nodes, edges).expect("relabeling keeps the graph valid")
}

proptest! {
    #[test]
    fn cycle_basis_has_cyclomatic_size_and_real_cycles(g in arb_graph(10)) {
        let basis = cycle_basis(&g);
        let components = g.connected_components().len();
        prop_assert_eq!(basis.len(), g.edge_count() + components - g.node_count());
        for cycle in &basis {
            let nodes = cycle.nodes();
            prop_assert!(nodes.len() >= 3);
            let distinct: BTreeSet<_> = nodes.iter().copied().collect();
            prop_assert_eq!(distinct.len(), nodes.len());
            for i in 0..nodes.len() {
                let next = nodes[(i + 1) % nodes.len()];
                prop_assert!(g.neighbors(nodes[i]).unwrap().contains(&next));
            }
        }
    }

    #[test]
    fn decomposition_replays_cleanly_and_ends_trivial(g in arb_graph(10)) {
        let sd = decompose(&g);
        let mut remaining = g.node_set();
        let mut removed_so_far = BTreeSet::new();
        for entry in sd.entries() {
            prop_assert!(remaining.contains(&entry.removed()));
            prop_assert!(removed_so_far.insert(entry.removed()));
            remaining.remove(&entry.removed());
            prop_assert_eq!(&entry.remaining_nodes(), &remaining);
            let sub = g.induced_subgraph(&remaining).unwrap();
            let expected = sub.connected_components();
            prop_assert_eq!(entry.components(), &expected[..]);
        }
        let residual = g.induced_subgraph(&remaining).unwrap();
        for comp in residual.connected_components() {
            let sub = residual.induced_subgraph(&comp).unwrap();
            prop_assert!(matches!(cus_kind(&sub), Ok(Some(_))));
        }
    }

    #[test]
    fn exact_solver_matches_the_oracle(g in arb_graph(10)) {
        let config = OracleConfig::default();
        let exact = solve_mwis(&g);
        let reference = oracle_mwis(&g, &config).unwrap();
        prop_assert_eq!(exact.solution.total_weight(), reference.total_weight());
        prop_assert!(exact.verified_independent);
        prop_assert!(exact.verified_maximal);
    }

    #[test]
    fn listing_solver_matches_the_oracle(g in arb_graph(8)) {
        let config = OracleConfig::default();
        let listing = solve_amisl(&g);
        let reference = oracle_amis(&g, &config).unwrap();
        prop_assert_eq!(&listing.collection, &reference);
        for set in listing.collection.iter() {
            prop_assert_eq!(g.is_maximal_independent(set), Ok(true));
        }
    }

    #[test]
    fn listing_best_agrees_with_the_exact_solver(g in arb_graph(9)) {
        let exact = solve_mwis(&g);
        let listing = solve_amisl(&g);
        prop_assert_eq!(listing.best.total_weight(), exact.solution.total_weight());
    }

    #[test]
    fn order_preserving_relabeling_maps_the_solution(
        g in arb_graph(9),
        offset in 0u32..50,
        stride in 1u32..5,
    ) {
        let map = |id: NodeId| NodeId(offset + stride * id.value());
        let relabeled = relabel(&g, map);
        let original = solve_mwis(&g);
        let mapped = solve_mwis(&relabeled);
        let expected: BTreeSet<NodeId> = original.solution.members().iter().map(|&id| map(id)).collect();
        prop_assert_eq!(mapped.solution.members(), &expected);
        prop_assert_eq!(mapped.solution.total_weight(), original.solution.total_weight());
    }

    #[test]
    fn arbitrary_relabeling_keeps_the_optimum_weight(g in arb_graph(9), seed in any::<u64>()) {
        // A cheap seeded permutation of the ids.
        let n = g.node_count() as u64;
        let map = |id: NodeId| {
            let x = id.value() as u64;
            NodeId((((x * 2 + 1).wrapping_mul(seed | 1)) % n.max(1) * n.max(1) + x) as u32)
        };
        let relabeled = relabel(&g, map);
        let mapped = solve_mwis(&relabeled);
        let original = solve_mwis(&g);
        prop_assert_eq!(
            mapped.solution.total_weight(),
            original.solution.total_weight()
        );
    }

    #[test]
    fn rational_rescaling_preserves_the_chosen_set(
        g in arb_graph(9),
        p in 1u64..=12,
        q in 1u64..=12,
    ) {
        let factor = Rational::new(p.into(), q.into());
        let nodes: Vec<(NodeId, Weight)> = g
            .nodes()
            .map(|id| {
                let w = Weight::new(g.weight(id).unwrap().value() * &factor).unwrap();
                (id, w)
            })
            .collect();
        let edges: Vec<(NodeId, NodeId)> = g.edges().collect();
        let scaled = WeightedGraph::build(nodes, edges).unwrap();
        let original = solve_mwis(&g);
        let rescaled = solve_mwis(&scaled);
        prop_assert_eq!(rescaled.solution.members(), original.solution.members());
        prop_assert_eq!(
            rescaled.solution.total_weight(),
            &(original.solution.total_weight() * &factor)
        );
        for selector in [SelectorKind::Gwmin, SelectorKind::Gwmin2] {
            let scaled_pick = greedy_mis(&scaled, selector);
            let plain_pick = greedy_mis(&g, selector);
            prop_assert_eq!(scaled_pick.members(), plain_pick.members());
        }
    }

    #[test]
    fn special_union_keeps_exactly_the_maximal_sets(a in arb_family(), b in arb_family()) {
        let merged = special_union(&a, &b);
        let inputs: BTreeSet<_> = a.iter().chain(b.iter()).cloned().collect();
        for set in merged.iter() {
            prop_assert!(inputs.contains(set));
            for other in merged.iter() {
                prop_assert!(!(set != other && set.is_subset(other)));
            }
        }
        for set in &inputs {
            prop_assert!(merged.iter().any(|kept| set.is_subset(kept)));
        }
    }

    #[test]
    fn greedy_results_reach_their_guaranteed_bounds(g in arb_graph(12)) {
        let gwmin = greedy_mis(&g, SelectorKind::Gwmin);
        prop_assert!(gwmin.total_weight() >= &gwmin_bound(&g));
        let gwmin2 = greedy_mis(&g, SelectorKind::Gwmin2);
        prop_assert!(gwmin2.total_weight() >= &gwmin2_bound(&g));
        if !g.is_empty() {
            prop_assert_eq!(g.is_maximal_independent(gwmin.members()), Ok(true));
            prop_assert_eq!(g.is_maximal_independent(gwmin2.members()), Ok(true));
        }
    }

    #[test]
    fn composed_solvers_stay_between_validity_and_the_optimum(g in arb_graph(10)) {
        let optimum = solve_mwis(&g).solution.total_weight().clone();
        for selector in [SelectorKind::Gwmin, SelectorKind::Gwmin2] {
            for scope in [ScopeKind::WholeSubgraph, ScopeKind::NonNeighborSubgraph] {
                let out = solve_composed(&g, selector, scope);
                prop_assert!(out.verified_independent);
                prop_assert!(out.solution.total_weight() <= &optimum);
            }
        }
    }
}
