//! Greedy maximal-independent-set heuristics.
//!
//! Both run the same loop: score every remaining node, take the best scorer
//! (smallest id on ties), drop its closed neighborhood, repeat. They differ
//! only in the score:
//!
//! * [`SelectorKind::Gwmin`]: weight over degree plus one.
//! * [`SelectorKind::Gwmin2`]: weight over the total weight of the closed
//!   neighborhood.
//!
//! Each comes with a guaranteed lower bound on the weight it returns
//! ([`gwmin_bound`], [`gwmin2_bound`]), evaluated exactly.

use crate::graph::{IndependentSet, NodeId, WeightedGraph};
use crate::weight::Rational;
use num::BigInt;
use num::Zero;
use std::collections::{BTreeMap, BTreeSet};

/// Which greedy score drives node selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SelectorKind {
    Gwmin,
    Gwmin2,
}

/// Which subgraph a composed solver hands to the greedy when answering a
/// subproblem: the whole level graph, or just the non-neighbors of the
/// rejoined node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScopeKind {
    WholeSubgraph,
    NonNeighborSubgraph,
}

fn int(value: usize) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Runs the selected greedy heuristic. The result is always a maximal
/// independent set of `g`.
pub fn greedy_mis(g: &WeightedGraph, selector: SelectorKind) -> IndependentSet {
    let mut remaining = g.node_set();
    let mut degree: BTreeMap<NodeId, usize> = g
        .nodes()
        .map(|id| (id, g.degree(id).expect("graph node")))
        .collect();
    let mut closed_sum: BTreeMap<NodeId, Rational> = g
        .nodes()
        .map(|id| {
            let mut sum = g.weight(id).expect("graph node").value().clone();
            for &nbr in g.neighbors(id).expect("graph node") {
                sum += g.weight(nbr).expect("graph node").value();
            }
            (id, sum)
        })
        .collect();

    let mut chosen = BTreeSet::new();
    while !remaining.is_empty() {
        let mut best: Option<(NodeId, Rational)> = None;
        for &id in &remaining {
            let w = g.weight(id).expect("graph node").value();
            let score = match selector {
                SelectorKind::Gwmin => w / int(degree[&id] + 1),
                SelectorKind::Gwmin2 => w / &closed_sum[&id],
            };
            let better = match &best {
                Some((_, top)) => score > *top,
                None => true,
            };
            if better {
                best = Some((id, score));
            }
        }
        let (pick, _) = best.expect("remaining is non-empty");
        chosen.insert(pick);

        let dead: Vec<NodeId> = g
            .closed_neighborhood(pick)
            .expect("graph node")
            .intersection(&remaining)
            .copied()
            .collect();
        for &d in &dead {
            remaining.remove(&d);
        }
        for &d in &dead {
            let w = g.weight(d).expect("graph node").value().clone();
            for &nbr in g.neighbors(d).expect("graph node") {
                if remaining.contains(&nbr) {
                    *degree.get_mut(&nbr).expect("remaining node") -= 1;
                    *closed_sum.get_mut(&nbr).expect("remaining node") -= &w;
                }
            }
        }
    }
    IndependentSet::from_members(g, chosen)
}

/// Exact value of the guarantee for [`SelectorKind::Gwmin`]: the sum over
/// all nodes of weight divided by degree plus one.
pub fn gwmin_bound(g: &WeightedGraph) -> Rational {
    g.nodes().fold(Rational::zero(), |acc, id| {
        let w = g.weight(id).expect("graph node").value();
        acc + w / int(g.degree(id).expect("graph node") + 1)
    })
}

/// Exact value of the guarantee for [`SelectorKind::Gwmin2`]: the sum over
/// all nodes of weight squared divided by the closed-neighborhood weight.
pub fn gwmin2_bound(g: &WeightedGraph) -> Rational {
    g.nodes().fold(Rational::zero(), |acc, id| {
        let w = g.weight(id).expect("graph node").value();
        let mut closed = w.clone();
        for &nbr in g.neighbors(id).expect("graph node") {
            closed += g.weight(nbr).expect("graph node").value();
        }
        acc + w * w / closed
    })
}
