//! Immutable simple undirected graphs with positive node weights.
//!
//! Node identities are stable: every derived graph (induced subgraph,
//! complement) keeps the original ids, so a node set taken from any
//! derivation can be compared or combined with sets from any other
//! derivation of the same host graph. Weight storage is shared between a
//! graph and its subgraphs behind an `Arc`, which keeps the solver's heavy
//! subgraph traffic cheap.

use crate::weight::{Rational, Weight};
use num::Zero;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Identifier of a graph node: a plain non-negative integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

impl NodeId {
    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("node {0} declared more than once")]
    DuplicateNode(NodeId),
    #[error("node {0} has a non-positive weight")]
    NonPositiveWeight(NodeId),
    #[error("self loop on node {0}")]
    SelfLoop(NodeId),
    #[error("edge ({0}, {1}) declared more than once")]
    DuplicateEdge(NodeId, NodeId),
    #[error("edge endpoint {0} is not a declared node")]
    UnknownEndpoint(NodeId),
    #[error("node {0} is not in the graph")]
    UnknownNode(NodeId),
    #[error("nodes {0} and {1} are adjacent, so the set is not independent")]
    NotIndependent(NodeId, NodeId),
}

/// A simple undirected graph with strictly positive node weights.
#[derive(Clone)]
pub struct WeightedGraph {
    weights: Arc<BTreeMap<NodeId, Weight>>,
    adjacency: BTreeMap<NodeId, BTreeSet<NodeId>>,
    edge_count: usize,
}

impl WeightedGraph {
    /// Validates and builds a graph from explicit node and edge lists.
    ///
    /// Rejects duplicate node ids, non-positive weights, self loops,
    /// duplicate edges (in either orientation), and edges naming undeclared
    /// nodes.
    pub fn build(
        nodes: Vec<(NodeId, Weight)>,
        edges: Vec<(NodeId, NodeId)>,
    ) -> Result<Self, GraphError> {
        let mut weights = BTreeMap::new();
        let mut adjacency: BTreeMap<NodeId, BTreeSet<NodeId>> = BTreeMap::new();
        for (id, weight) in nodes {
            if weights.insert(id, weight).is_some() {
                return Err(GraphError::DuplicateNode(id));
            }
            adjacency.insert(id, BTreeSet::new());
        }
        let mut edge_count = 0usize;
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for end in [u, v] {
                if !weights.contains_key(&end) {
                    return Err(GraphError::UnknownEndpoint(end));
                }
            }
            if !adjacency.get_mut(&u).expect("endpoint checked").insert(v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adjacency.get_mut(&v).expect("endpoint checked").insert(u);
            edge_count += 1;
        }
        Ok(WeightedGraph {
            weights: Arc::new(weights),
            adjacency,
            edge_count,
        })
    }

    pub fn empty() -> Self {
        WeightedGraph {
            weights: Arc::new(BTreeMap::new()),
            adjacency: BTreeMap::new(),
            edge_count: 0,
        }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn contains_node(&self, id: NodeId) -> bool {
        self.adjacency.contains_key(&id)
    }

    /// Node ids in ascending order.
    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.adjacency.keys().copied()
    }

    pub fn node_set(&self) -> BTreeSet<NodeId> {
        self.nodes().collect()
    }

    pub fn sorted_nodes(&self) -> Vec<NodeId> {
        self.nodes().collect()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency
            .iter()
            .flat_map(|(&u, nbrs)| nbrs.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn weight(&self, id: NodeId) -> Result<&Weight, GraphError> {
        if !self.contains_node(id) {
            return Err(GraphError::UnknownNode(id));
        }
        Ok(self.weights.get(&id).expect("present node has a weight"))
    }

    pub fn neighbors(&self, id: NodeId) -> Result<&BTreeSet<NodeId>, GraphError> {
        self.adjacency.get(&id).ok_or(GraphError::UnknownNode(id))
    }

    pub fn degree(&self, id: NodeId) -> Result<usize, GraphError> {
        Ok(self.neighbors(id)?.len())
    }

    /// The node itself plus its neighbors.
    pub fn closed_neighborhood(&self, id: NodeId) -> Result<BTreeSet<NodeId>, GraphError> {
        let mut set = self.neighbors(id)?.clone();
        set.insert(id);
        Ok(set)
    }

    /// Sum of all node weights.
    pub fn total_weight(&self) -> Rational {
        self.adjacency
            .keys()
            .map(|id| self.weights[id].value())
            .fold(Rational::zero(), |acc, w| acc + w)
    }

    /// The subgraph on `keep`, preserving ids, weights, and internal edges.
    pub fn induced_subgraph(&self, keep: &BTreeSet<NodeId>) -> Result<Self, GraphError> {
        let mut adjacency = BTreeMap::new();
        let mut edge_count = 0usize;
        for &id in keep {
            let nbrs = self.neighbors(id)?;
            let kept: BTreeSet<NodeId> = nbrs.intersection(keep).copied().collect();
            edge_count += kept.len();
            adjacency.insert(id, kept);
        }
        Ok(WeightedGraph {
            weights: Arc::clone(&self.weights),
            adjacency,
            edge_count: edge_count / 2,
        })
    }

    /// The graph with node `k` (and its incident edges) removed.
    pub fn complement_remove(&self, k: NodeId) -> Result<Self, GraphError> {
        if !self.contains_node(k) {
            return Err(GraphError::UnknownNode(k));
        }
        let mut keep = self.node_set();
        keep.remove(&k);
        self.induced_subgraph(&keep)
    }

    /// The subgraph on the non-neighbors of `k`: everything except `k` and
    /// its neighbors.
    pub fn complement_nonneighbors(&self, k: NodeId) -> Result<Self, GraphError> {
        let closed = self.closed_neighborhood(k)?;
        let keep: BTreeSet<NodeId> = self
            .nodes()
            .filter(|id| !closed.contains(id))
            .collect();
        self.induced_subgraph(&keep)
    }

    /// Connected components as node sets, ordered by smallest member id.
    pub fn connected_components(&self) -> Vec<BTreeSet<NodeId>> {
        let mut seen = BTreeSet::new();
        let mut components = Vec::new();
        for start in self.nodes() {
            if seen.contains(&start) {
                continue;
            }
            let mut component = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(id) = queue.pop_front() {
                component.insert(id);
                for &nbr in &self.adjacency[&id] {
                    if seen.insert(nbr) {
                        queue.push_back(nbr);
                    }
                }
            }
            components.push(component);
        }
        components
    }

    /// Whether the graph is connected. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Whether `set` contains no two adjacent nodes. The empty set is
    /// independent. Errors if `set` names a node outside the graph.
    pub fn is_independent(&self, set: &BTreeSet<NodeId>) -> Result<bool, GraphError> {
        for &id in set {
            let nbrs = self.neighbors(id)?;
            if nbrs.intersection(set).next().is_some() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `set` is independent and no node outside it could be added
    /// while keeping independence.
    pub fn is_maximal_independent(&self, set: &BTreeSet<NodeId>) -> Result<bool, GraphError> {
        if !self.is_independent(set)? {
            return Ok(false);
        }
        for id in self.nodes() {
            if set.contains(&id) {
                continue;
            }
            if self.adjacency[&id].intersection(set).next().is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Checked constructor for an [`IndependentSet`] drawn from this graph.
    pub fn independent_set(&self, members: BTreeSet<NodeId>) -> Result<IndependentSet, GraphError> {
        for &id in &members {
            let nbrs = self.neighbors(id)?;
            if let Some(&v) = nbrs.intersection(&members).next() {
                return Err(GraphError::NotIndependent(id, v));
            }
        }
        Ok(IndependentSet::from_members(self, members))
    }

    /// Sum of the weights of `members` (membership already validated by the
    /// caller).
    pub(crate) fn weight_of_members(&self, members: &BTreeSet<NodeId>) -> Rational {
        members
            .iter()
            .map(|id| self.weights[id].value())
            .fold(Rational::zero(), |acc, w| acc + w)
    }
}

impl PartialEq for WeightedGraph {
    fn eq(&self, other: &Self) -> bool {
        if self.adjacency != other.adjacency {
            return false;
        }
        self.nodes()
            .all(|id| self.weights[&id] == other.weights[&id])
    }
}

impl Eq for WeightedGraph {}

impl fmt::Debug for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeightedGraph")
            .field("nodes", &self.node_count())
            .field("edges", &self.edge_count())
            .finish()
    }
}

/// An independent set together with its exact total weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSet {
    members: BTreeSet<NodeId>,
    total_weight: Rational,
}

impl IndependentSet {
    pub fn empty() -> Self {
        IndependentSet {
            members: BTreeSet::new(),
            total_weight: Rational::zero(),
        }
    }

    /// Builds the set and computes its weight from `graph`. Debug builds
    /// assert independence; use [`WeightedGraph::independent_set`] when the
    /// members come from an untrusted source.
    pub fn from_members(graph: &WeightedGraph, members: BTreeSet<NodeId>) -> Self {
        debug_assert_eq!(graph.is_independent(&members), Ok(true));
        let total_weight = graph.weight_of_members(&members);
        IndependentSet {
            members,
            total_weight,
        }
    }

    /// Assembles a set whose weight the caller has already computed.
    pub(crate) fn from_parts(members: BTreeSet<NodeId>, total_weight: Rational) -> Self {
        IndependentSet {
            members,
            total_weight,
        }
    }

    pub fn members(&self) -> &BTreeSet<NodeId> {
        &self.members
    }

    pub fn total_weight(&self) -> &Rational {
        &self.total_weight
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, id: NodeId) -> bool {
        self.members.contains(&id)
    }

    pub fn sorted_members(&self) -> Vec<NodeId> {
        self.members.iter().copied().collect()
    }

    /// Union of two sets from disjoint parts of the same graph.
    pub(crate) fn disjoint_union(mut self, other: IndependentSet) -> IndependentSet {
        debug_assert!(self.members.is_disjoint(&other.members));
        self.members.extend(other.members);
        IndependentSet {
            members: self.members,
            total_weight: self.total_weight + other.total_weight,
        }
    }

    /// The part of the set lying inside `nodes`, reweighted from `graph`.
    pub(crate) fn restricted_to(&self, graph: &WeightedGraph, nodes: &BTreeSet<NodeId>) -> Self {
        let members: BTreeSet<NodeId> = self.members.intersection(nodes).copied().collect();
        let total_weight = graph.weight_of_members(&members);
        IndependentSet {
            members,
            total_weight,
        }
    }
}

/// Convenience for tests and examples: nodes as `(id, integer weight)`.
pub fn graph_from_integers(
    nodes: &[(u32, u64)],
    edges: &[(u32, u32)],
) -> Result<WeightedGraph, GraphError> {
    WeightedGraph::build(
        nodes
            .iter()
            .map(|&(id, w)| (NodeId(id), Weight::from_integer(w)))
            .collect(),
        edges.iter().map(|&(u, v)| (NodeId(u), NodeId(v))).collect(),
    )
}
