//! Brute-force references for small graphs.
//!
//! Two deliberately independent implementations: the MWIS oracle scans every
//! node subset with a bitmask dynamic program, while the maximal-set oracle
//! runs a plain include/exclude recursion with a maximality check at the
//! leaves. Solvers are tested against both; the two are also cross-checked
//! against each other.

use crate::graph::{IndependentSet, NodeId, WeightedGraph};
use crate::solve::MisCollection;
use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, ToPrimitive, Zero};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Hard ceiling on the subset scan regardless of configuration; beyond this
/// the enumeration would not finish in reasonable time anyway.
const ABSOLUTE_MAX_NODES: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_nodes: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_nodes: 20 }
    }
}

impl OracleConfig {
    fn effective_limit(&self) -> usize {
        self.max_nodes.min(ABSOLUTE_MAX_NODES)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {nodes} nodes, oracle limit is {limit}")]
    TooLarge { nodes: usize, limit: usize },
}

fn check_size(g: &WeightedGraph, config: &OracleConfig) -> Result<(), OracleError> {
    let nodes = g.node_count();
    let limit = config.effective_limit();
    if nodes > limit {
        Err(OracleError::TooLarge { nodes, limit })
    } else {
        Ok(())
    }
}

/// Exact maximum-weight independent set by scanning all `2^n` subsets.
///
/// Weights are compared exactly: they are rescaled to a common denominator
/// and summed as 128-bit integers, falling back to big integers if a graph
/// somehow carries weights that will not fit. Among maximum-weight sets the
/// one with the lexicographically smallest sorted member list wins.
pub fn oracle_mwis(
    g: &WeightedGraph,
    config: &OracleConfig,
) -> Result<IndependentSet, OracleError> {
    check_size(g, config)?;
    let ids = g.sorted_nodes();
    let n = ids.len();
    let index: BTreeMap<NodeId, usize> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
    let adj_masks: Vec<u64> = ids
        .iter()
        .map(|&id| {
            g.neighbors(id)
                .expect("graph node")
                .iter()
                .fold(0u64, |mask, nbr| mask | 1u64 << index[nbr])
        })
        .collect();

    let common: BigInt = ids.iter().fold(BigInt::one(), |acc, &id| {
        acc.lcm(g.weight(id).expect("graph node").value().denom())
    });
    let scaled: Vec<BigInt> = ids
        .iter()
        .map(|&id| {
            let w = g.weight(id).expect("graph node").value();
            w.numer() * (&common / w.denom())
        })
        .collect();
    let total: BigInt = scaled.iter().sum();

    let best_mask = match (
        scaled.iter().map(|s| s.to_i128()).collect::<Option<Vec<i128>>>(),
        total.to_i128(),
    ) {
        (Some(small), Some(_)) => scan_subsets(n, &adj_masks, &small, &ids),
        _ => scan_subsets(n, &adj_masks, &scaled, &ids),
    };

    let members: BTreeSet<NodeId> = ids
        .iter()
        .enumerate()
        .filter(|(i, _)| best_mask & (1u64 << i) != 0)
        .map(|(_, &id)| id)
        .collect();
    Ok(IndependentSet::from_members(g, members))
}

fn scan_subsets<T>(n: usize, adj_masks: &[u64], weights: &[T], ids: &[NodeId]) -> u64
where
    T: Clone + Ord + Zero + for<'a> std::ops::Add<&'a T, Output = T>,
{
    let size = 1usize << n;
    let mut independent = vec![false; size];
    let mut sum: Vec<T> = vec![T::zero(); size];
    independent[0] = true;
    let mut best_mask = 0u64;
    let mut best_sum = T::zero();
    for mask in 1..size {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let ok = independent[rest] && adj_masks[low] & mask as u64 == 0;
        independent[mask] = ok;
        sum[mask] = sum[rest].clone() + &weights[low];
        if !ok {
            continue;
        }
        if sum[mask] > best_sum
            || (sum[mask] == best_sum && lex_less(mask as u64, best_mask, ids))
        {
            best_sum = sum[mask].clone();
            best_mask = mask as u64;
        }
    }
    best_mask
}

fn members_of(mask: u64, ids: &[NodeId]) -> Vec<NodeId> {
    ids.iter()
        .enumerate()
        .filter(|(i, _)| mask & (1u64 << i) != 0)
        .map(|(_, &id)| id)
        .collect()
}

fn lex_less(a: u64, b: u64, ids: &[NodeId]) -> bool {
    members_of(a, ids) < members_of(b, ids)
}

/// All maximal independent sets by include/exclude recursion over the nodes
/// in ascending id order, checking maximality at every leaf.
pub fn oracle_amis(g: &WeightedGraph, config: &OracleConfig) -> Result<MisCollection, OracleError> {
    check_size(g, config)?;
    let ids = g.sorted_nodes();
    let mut chosen: BTreeSet<NodeId> = BTreeSet::new();
    let mut found: BTreeSet<BTreeSet<NodeId>> = BTreeSet::new();
    branch(g, &ids, 0, &mut chosen, &mut found);
    Ok(MisCollection::from_sets(found))
}

fn branch(
    g: &WeightedGraph,
    ids: &[NodeId],
    depth: usize,
    chosen: &mut BTreeSet<NodeId>,
    found: &mut BTreeSet<BTreeSet<NodeId>>,
) {
    if depth == ids.len() {
        if g.is_maximal_independent(chosen).expect("members are graph nodes") {
            found.insert(chosen.clone());
        }
        return;
    }
    let id = ids[depth];
    branch(g, ids, depth + 1, chosen, found);
    let compatible = g
        .neighbors(id)
        .expect("graph node")
        .intersection(chosen)
        .next()
        .is_none();
    if compatible {
        chosen.insert(id);
        branch(g, ids, depth + 1, chosen, found);
        chosen.remove(&id);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph_from_integers;
    use crate::weight::{Rational, Weight};

    fn ids(values: &[u32]) -> BTreeSet<NodeId> {
        values.iter().map(|&v| NodeId(v)).collect()
    }

    fn unit_path4() -> WeightedGraph {
        graph_from_integers(&[(0, 1), (1, 1), (2, 1), (3, 1)], &[(0, 1), (1, 2), (2, 3)])
            .unwrap()
    }

    #[test]
    fn mwis_of_a_unit_path_prefers_the_lexicographically_first_pair() {
        let best = oracle_mwis(&unit_path4(), &OracleConfig::default()).unwrap();
        assert_eq!(best.members(), &ids(&[0, 2]));
        assert_eq!(best.total_weight(), &Rational::from_integer(2.into()));
    }

    #[test]
    fn amis_of_a_unit_path_lists_exactly_three_sets() {
        let family = oracle_amis(&unit_path4(), &OracleConfig::default()).unwrap();
        let expected: BTreeSet<BTreeSet<NodeId>> =
            [ids(&[0, 2]), ids(&[0, 3]), ids(&[1, 3])].into_iter().collect();
        assert_eq!(family.as_sets(), &expected);
    }

    #[test]
    fn mwis_of_a_weighted_path_takes_the_endpoints() {
        let g = graph_from_integers(&[(0, 2), (1, 1), (2, 1), (3, 2)], &[(0, 1), (1, 2), (2, 3)])
            .unwrap();
        let best = oracle_mwis(&g, &OracleConfig::default()).unwrap();
        assert_eq!(best.members(), &ids(&[0, 3]));
        assert_eq!(best.total_weight(), &Rational::from_integer(4.into()));
    }

    #[test]
    fn five_cycle_has_five_maximal_sets_and_weight_two() {
        let g = graph_from_integers(
            &[(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)],
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
        )
        .unwrap();
        let best = oracle_mwis(&g, &OracleConfig::default()).unwrap();
        assert_eq!(best.total_weight(), &Rational::from_integer(2.into()));
        let family = oracle_amis(&g, &OracleConfig::default()).unwrap();
        assert_eq!(family.len(), 5);
    }

    #[test]
    fn oracles_agree_on_the_best_weight() {
        let g = graph_from_integers(
            &[(0, 3), (1, 5), (2, 2), (3, 4), (4, 1), (5, 6)],
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 3), (2, 5)],
        )
        .unwrap();
        let best = oracle_mwis(&g, &OracleConfig::default()).unwrap();
        let family = oracle_amis(&g, &OracleConfig::default()).unwrap();
        let family_best = family.best(&g);
        assert_eq!(best.total_weight(), family_best.total_weight());
    }

    #[test]
    fn empty_graph_yields_empty_set_and_singleton_family() {
        let empty = WeightedGraph::empty();
        let best = oracle_mwis(&empty, &OracleConfig::default()).unwrap();
        assert!(best.is_empty());
        let family = oracle_amis(&empty, &OracleConfig::default()).unwrap();
        assert_eq!(family.len(), 1);
        assert!(family.as_sets().contains(&BTreeSet::new()));
    }

    #[test]
    fn oversized_graphs_are_rejected() {
        let nodes: Vec<(u32, u64)> = (0..21).map(|id| (id, 1)).collect();
        let g = graph_from_integers(&nodes, &[]).unwrap();
        assert_eq!(
            oracle_mwis(&g, &OracleConfig::default()).unwrap_err(),
            OracleError::TooLarge { nodes: 21, limit: 20 }
        );
        assert!(oracle_mwis(&g, &OracleConfig { max_nodes: 25 }).is_ok());
    }

    #[test]
    fn big_integer_fallback_handles_huge_denominators() {
        // Three pairwise coprime denominators near 1e13 push the common
        // denominator beyond 128 bits.
        let d1 = 9_999_999_999_973u64;
        let d2 = 9_999_999_999_971u64;
        let d3 = 9_999_999_999_943u64;
        let node = |id: u32, num: u64, den: u64| {
            (
                NodeId(id),
                Weight::new(Rational::new(BigInt::from(num), BigInt::from(den))).unwrap(),
            )
        };
        let g = WeightedGraph::build(
            vec![node(0, 3, d1), node(1, 2, d2), node(2, 5, d3)],
            vec![(NodeId(0), NodeId(1)), (NodeId(1), NodeId(2))],
        )
        .unwrap();
        let best = oracle_mwis(&g, &OracleConfig::default()).unwrap();
        // {0, 2} is the only two-element independent set and outweighs any
        // single node.
        assert_eq!(best.members(), &ids(&[0, 2]));
    }
}
