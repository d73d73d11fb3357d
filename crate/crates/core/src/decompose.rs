//! Phase one of the solver: dividing.
//!
//! A graph is worn down to trivially solvable pieces by removing one node at
//! a time: first the node sitting on the most fundamental cycles (until the
//! graph is a forest), then the middle node of the widest remaining
//! component (until every component has diameter at most two). Every removal
//! is recorded in a [`SubgraphsDictionary`] entry together with the
//! connected components left behind, which is exactly the information the
//! conquering phase replays in reverse.
//!
//! All choices are deterministic: spanning trees grow from the smallest node
//! id with neighbors visited in ascending order, and every tie falls to the
//! smallest id.

use crate::graph::{GraphError, NodeId, WeightedGraph};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("graph has no cycles")]
    Acyclic,
    #[error("graph is empty")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("no component has diameter 3 or more")]
    NotApplicable,
    #[error("graph has a cycle")]
    HasCycle,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A fundamental cycle: a closed walk of at least three distinct nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    nodes: Vec<NodeId>,
}

impl Cycle {
    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, id: NodeId) -> bool {
        self.nodes.contains(&id)
    }
}

/// A fundamental cycle basis of the graph, one basis per component, built on
/// spanning trees rooted at each component's smallest node id.
///
/// The basis always holds exactly `edges - nodes + components` cycles.
pub fn cycle_basis(g: &WeightedGraph) -> Vec<Cycle> {
    let mut cycles = Vec::new();
    let mut in_tree: BTreeSet<NodeId> = BTreeSet::new();
    for root in g.nodes() {
        if in_tree.contains(&root) {
            continue;
        }
        // Grow a spanning tree of the root's component. `used[v]` holds the
        // neighbors of `v` whose shared edge is already accounted for, so
        // each non-tree edge closes exactly one cycle.
        let mut pred: BTreeMap<NodeId, NodeId> = BTreeMap::from([(root, root)]);
        let mut used: BTreeMap<NodeId, BTreeSet<NodeId>> =
            BTreeMap::from([(root, BTreeSet::new())]);
        let mut stack = vec![root];
        while let Some(z) = stack.pop() {
            for &nbr in g.neighbors(z).expect("walk stays inside the graph") {
                if !used.contains_key(&nbr) {
                    pred.insert(nbr, z);
                    used.insert(nbr, BTreeSet::from([z]));
                    stack.push(nbr);
                } else if !used[&z].contains(&nbr) {
                    // Non-tree edge: walk tree predecessors from z until
                    // reaching a node already tied to nbr.
                    let mut cycle = vec![nbr, z];
                    let mut p = pred[&z];
                    while !used[&nbr].contains(&p) {
                        cycle.push(p);
                        p = pred[&p];
                    }
                    cycle.push(p);
                    cycles.push(Cycle { nodes: cycle });
                    used.get_mut(&nbr).expect("visited node").insert(z);
                }
            }
        }
        in_tree.extend(pred.keys().copied());
    }
    cycles
}

/// For every node, the number of basis cycles it lies on (zero included).
pub fn cycle_counts(g: &WeightedGraph) -> BTreeMap<NodeId, usize> {
    let mut counts: BTreeMap<NodeId, usize> = g.nodes().map(|id| (id, 0)).collect();
    for cycle in cycle_basis(g) {
        for id in cycle.nodes() {
            *counts.get_mut(id).expect("cycle node is a graph node") += 1;
        }
    }
    counts
}

/// The node lying on the most basis cycles, smallest id on ties.
pub fn max_cycle_node(g: &WeightedGraph) -> Result<NodeId, DecomposeError> {
    let counts = cycle_counts(g);
    let best = counts
        .iter()
        .filter(|(_, &count)| count > 0)
        .max_by(|(a_id, a_count), (b_id, b_count)| {
            a_count.cmp(b_count).then(b_id.cmp(a_id))
        })
        .map(|(&id, _)| id);
    best.ok_or(DecomposeError::Acyclic)
}

fn eccentricity(g: &WeightedGraph, start: NodeId) -> usize {
    let mut dist: BTreeMap<NodeId, usize> = BTreeMap::from([(start, 0)]);
    let mut queue = VecDeque::from([start]);
    let mut max = 0;
    while let Some(id) = queue.pop_front() {
        let d = dist[&id];
        max = max.max(d);
        for &nbr in g.neighbors(id).expect("walk stays inside the graph") {
            if !dist.contains_key(&nbr) {
                dist.insert(nbr, d + 1);
                queue.push_back(nbr);
            }
        }
    }
    max
}

fn component_diameter(g: &WeightedGraph, component: &BTreeSet<NodeId>) -> usize {
    component
        .iter()
        .map(|&id| eccentricity(g, id))
        .max()
        .unwrap_or(0)
}

/// Longest shortest path in a connected graph.
pub fn diameter(g: &WeightedGraph) -> Result<usize, DecomposeError> {
    if g.is_empty() {
        return Err(DecomposeError::EmptyGraph);
    }
    let components = g.connected_components();
    if components.len() > 1 {
        return Err(DecomposeError::Disconnected);
    }
    Ok(component_diameter(g, &components[0]))
}

fn has_cycle(g: &WeightedGraph) -> bool {
    // A simple graph is a forest exactly when every component is a tree.
    g.edge_count() + g.connected_components().len() != g.node_count()
}

/// The middle node of the widest component of an acyclic graph.
///
/// The target is the component of largest diameter (ties to the smallest
/// member id); it must have diameter at least three. The middle is found by
/// repeatedly stripping all nodes of degree at most one; the survivor of the
/// last non-empty round is the middle, taking the smaller id when two
/// survive.
pub fn middle_node(g: &WeightedGraph) -> Result<NodeId, DecomposeError> {
    if has_cycle(g) {
        return Err(DecomposeError::HasCycle);
    }
    let target = g
        .connected_components()
        .into_iter()
        .map(|comp| (component_diameter(g, &comp), comp))
        .max_by(|(da, ca), (db, cb)| da.cmp(db).then_with(|| cb.cmp(ca)))
        .filter(|(diam, _)| *diam >= 3)
        .map(|(_, comp)| comp)
        .ok_or(DecomposeError::NotApplicable)?;

    let mut remaining = target;
    loop {
        let shell: BTreeSet<NodeId> = remaining
            .iter()
            .copied()
            .filter(|&id| {
                let nbrs = g.neighbors(id).expect("component node");
                nbrs.intersection(&remaining).count() <= 1
            })
            .collect();
        let next: BTreeSet<NodeId> = remaining.difference(&shell).copied().collect();
        if next.is_empty() {
            let middle = *shell.iter().next().expect("last shell is non-empty");
            return Ok(middle);
        }
        remaining = next;
    }
}

/// The shape of a trivially solvable connected graph: a single node, a
/// single edge, or a star (a tree of diameter at most two).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CusKind {
    IsolatedNode,
    ConnectedPair,
    ShallowTree,
}

/// Classifies a connected graph as trivially solvable, or `None` if it is
/// not. The empty graph yields `None`; a disconnected graph is an error.
pub fn cus_kind(g: &WeightedGraph) -> Result<Option<CusKind>, DecomposeError> {
    if g.is_empty() {
        return Ok(None);
    }
    if !g.is_connected() {
        return Err(DecomposeError::Disconnected);
    }
    let n = g.node_count();
    let m = g.edge_count();
    if n == 1 {
        return Ok(Some(CusKind::IsolatedNode));
    }
    if n == 2 {
        debug_assert_eq!(m, 1, "connected two-node graph is a single edge");
        return Ok(Some(CusKind::ConnectedPair));
    }
    let is_tree = m == n - 1;
    let is_star = is_tree
        && g.nodes()
            .any(|id| g.degree(id).expect("graph node") == n - 1);
    Ok(if is_star { Some(CusKind::ShallowTree) } else { None })
}

pub fn is_cus(g: &WeightedGraph) -> Result<bool, DecomposeError> {
    Ok(cus_kind(g)?.is_some())
}

/// One removal: the node taken out and the connected components of the whole
/// graph right after taking it out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SdEntry {
    removed: NodeId,
    components: Vec<BTreeSet<NodeId>>,
}

impl SdEntry {
    pub fn removed(&self) -> NodeId {
        self.removed
    }

    pub fn components(&self) -> &[BTreeSet<NodeId>] {
        &self.components
    }

    /// All nodes present after this removal.
    pub fn remaining_nodes(&self) -> BTreeSet<NodeId> {
        self.components.iter().flatten().copied().collect()
    }
}

/// The ordered record of removals produced by [`decompose`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SubgraphsDictionary {
    entries: Vec<SdEntry>,
}

impl SubgraphsDictionary {
    pub fn entries(&self) -> &[SdEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Removed nodes in removal order.
    pub fn removed_nodes(&self) -> Vec<NodeId> {
        self.entries.iter().map(|e| e.removed).collect()
    }
}

/// Runs the full dividing phase and records every removal.
///
/// Cycle-heavy nodes go first, one per iteration with the basis rebuilt in
/// between, until the graph is a forest; then middle nodes go until every
/// component has diameter at most two. Applying the removals in order to `g`
/// therefore leaves a graph whose every component is trivially solvable.
pub fn decompose(g: &WeightedGraph) -> SubgraphsDictionary {
    let mut current = g.clone();
    let mut entries = Vec::new();
    let mut record_removal = |current: &mut WeightedGraph, node: NodeId| {
        *current = current
            .complement_remove(node)
            .expect("removal candidates come from the current graph");
        entries.push(SdEntry {
            removed: node,
            components: current.connected_components(),
        });
    };
    while let Ok(node) = max_cycle_node(&current) {
        record_removal(&mut current, node);
    }
    while let Ok(node) = middle_node(&current) {
        record_removal(&mut current, node);
    }
    debug_assert!(current
        .connected_components()
        .iter()
        .all(|comp| {
            let sub = current.induced_subgraph(comp).expect("component of current");
            is_cus(&sub) == Ok(true)
        }));
    SubgraphsDictionary { entries }
}
