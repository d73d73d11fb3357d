//! Solvers for the maximum weighted independent set (MWIS) problem and for
//! listing all maximal independent sets (AMISL) of simple node-weighted graphs.
//!
//! The crate is organised around a divide-and-conquer pipeline:
//!
//! * [`graph`] defines the immutable [`graph::WeightedGraph`] model and its
//!   basic operators (induced subgraphs, complements, components, independence
//!   predicates).
//! * [`decompose`] breaks a graph down to trivially solvable pieces by
//!   removing cycle-heavy nodes first and path-middle nodes second, recording
//!   every removal in a [`decompose::SubgraphsDictionary`].
//! * [`solve`] rebuilds optimal solutions level by level from that record:
//!   exact MWIS (`a1`), exhaustive maximal-set listing (`a2`), and the
//!   composed variants that answer subproblems greedily (`a4`, `a5`, `a7`,
//!   `a8`).
//! * [`greedy`] holds the two standalone greedy heuristics (`a3`, `a6`) and
//!   their guaranteed lower bounds.
//! * [`oracle`] provides small-graph brute-force references used to validate
//!   everything else.
//!
//! All weight arithmetic is exact rational arithmetic; floating point is used
//! only for reporting. All tie-breaks are deterministic (smallest node id),
//! so every solver is a pure function of its input graph.

pub mod decompose;
pub mod graph;
pub mod greedy;
pub mod oracle;
pub mod solve;
pub mod weight;

pub use graph::{GraphError, IndependentSet, NodeId, WeightedGraph};
pub use greedy::{greedy_mis, gwmin2_bound, gwmin_bound, ScopeKind, SelectorKind};
pub use solve::{
    solve_amisl, solve_amisl_within, solve_composed, solve_composed_within, solve_mwis,
    solve_mwis_within, AlgorithmId, AmislResult, BudgetExceeded, MisCollection, SolveResult,
};
pub use weight::{Rational, Weight};
