//! Phase two of the solver: conquering.
//!
//! The dividing phase leaves a record of removals ([`decompose`]); this
//! module replays it backwards. At every level the removed node `l` rejoins
//! the graph and two candidates compete:
//!
//! * the preliminary set: the best answer for the graph without `l`,
//!   assembled per component from memoized or trivially computed pieces;
//! * the compare set: `l` together with the best answer among the
//!   non-neighbors of `l`, obtained trivially, by recursion (exact
//!   algorithms), or by a greedy heuristic (composed algorithms).
//!
//! The heavier candidate wins the level (ties go to the preliminary set)
//! and is memoized under the node set of the level graph. The listing
//! variant carries whole families of maximal sets through the same
//! recursion, merging levels with [`special_union`].
//!
//! Every solved subgraph is keyed by its sorted node ids, so identical
//! subproblems arising anywhere in the recursion are solved once. Each
//! top-level call owns its memo tables; there is no shared state between
//! calls.

use crate::decompose::{cus_kind, decompose, CusKind};
use crate::graph::{GraphError, IndependentSet, NodeId, WeightedGraph};
use crate::greedy::{greedy_mis, ScopeKind, SelectorKind};
use crate::weight::Rational;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph is not a single trivially solvable component")]
    NotCus,
    #[error("component node sets overlap")]
    OverlappingComponents,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Returned when a budgeted solve runs out of time.
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("solve exceeded its time budget")]
pub struct BudgetExceeded;

/// The eight algorithms of the toolkit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlgorithmId {
    /// Exact MWIS by divide and conquer.
    A1,
    /// Exact listing of all maximal independent sets.
    A2,
    /// Greedy, weight over degree plus one.
    A3,
    /// A1 skeleton, unsolved compare sets answered by A3 on the whole level graph.
    A4,
    /// A1 skeleton, unsolved compare sets answered by A3 on the non-neighbors.
    A5,
    /// Greedy, weight over closed-neighborhood weight.
    A6,
    /// A1 skeleton, unsolved compare sets answered by A6 on the whole level graph.
    A7,
    /// A1 skeleton, unsolved compare sets answered by A6 on the non-neighbors.
    A8,
}

impl AlgorithmId {
    pub const ALL: [AlgorithmId; 8] = [
        AlgorithmId::A1,
        AlgorithmId::A2,
        AlgorithmId::A3,
        AlgorithmId::A4,
        AlgorithmId::A5,
        AlgorithmId::A6,
        AlgorithmId::A7,
        AlgorithmId::A8,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AlgorithmId::A1 => "a1",
            AlgorithmId::A2 => "a2",
            AlgorithmId::A3 => "a3",
            AlgorithmId::A4 => "a4",
            AlgorithmId::A5 => "a5",
            AlgorithmId::A6 => "a6",
            AlgorithmId::A7 => "a7",
            AlgorithmId::A8 => "a8",
        }
    }

    /// The id of the composed algorithm using this selector and scope.
    pub fn composed(selector: SelectorKind, scope: ScopeKind) -> AlgorithmId {
        match (selector, scope) {
            (SelectorKind::Gwmin, ScopeKind::WholeSubgraph) => AlgorithmId::A4,
            (SelectorKind::Gwmin, ScopeKind::NonNeighborSubgraph) => AlgorithmId::A5,
            (SelectorKind::Gwmin2, ScopeKind::WholeSubgraph) => AlgorithmId::A7,
            (SelectorKind::Gwmin2, ScopeKind::NonNeighborSubgraph) => AlgorithmId::A8,
        }
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgorithmId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        AlgorithmId::ALL
            .into_iter()
            .find(|a| a.as_str() == lower)
            .ok_or_else(|| format!("unknown algorithm {s:?}, expected a1..a8"))
    }
}

/// A family of maximal independent sets (members only; weights are always
/// taken from the graph when needed).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MisCollection {
    sets: BTreeSet<BTreeSet<NodeId>>,
}

impl MisCollection {
    pub fn new() -> Self {
        Self::default()
    }

    /// The family containing only the empty set: the answer for the empty
    /// graph.
    pub fn singleton_empty() -> Self {
        MisCollection {
            sets: BTreeSet::from([BTreeSet::new()]),
        }
    }

    pub fn from_sets(sets: impl IntoIterator<Item = BTreeSet<NodeId>>) -> Self {
        MisCollection {
            sets: sets.into_iter().collect(),
        }
    }

    pub fn as_sets(&self) -> &BTreeSet<BTreeSet<NodeId>> {
        &self.sets
    }

    pub fn iter(&self) -> impl Iterator<Item = &BTreeSet<NodeId>> {
        self.sets.iter()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, set: &BTreeSet<NodeId>) -> bool {
        self.sets.contains(set)
    }

    /// The heaviest member under `g`'s weights; ties fall to the
    /// lexicographically smallest sorted member list.
    pub fn best(&self, g: &WeightedGraph) -> IndependentSet {
        let mut top: Option<(Rational, &BTreeSet<NodeId>)> = None;
        for set in &self.sets {
            let weight = g.weight_of_members(set);
            let better = match &top {
                Some((best_weight, best_set)) => {
                    weight > *best_weight || (weight == *best_weight && set < *best_set)
                }
                None => true,
            };
            if better {
                top = Some((weight, set));
            }
        }
        match top {
            Some((_, set)) => IndependentSet::from_members(g, set.clone()),
            None => IndependentSet::empty(),
        }
    }
}

/// Union of two families with nested and duplicate sets dropped: a set
/// survives only if no other set in the union strictly contains it.
pub fn special_union(a: &MisCollection, b: &MisCollection) -> MisCollection {
    let mut all: Vec<&BTreeSet<NodeId>> = a.sets.union(&b.sets).collect();
    // A strict superset is always bigger, so scanning by descending size
    // only needs to test against what is already kept.
    all.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.cmp(y)));
    let mut kept: Vec<&BTreeSet<NodeId>> = Vec::with_capacity(all.len());
    for set in all {
        if !kept.iter().any(|k| set.is_subset(k)) {
            kept.push(set);
        }
    }
    MisCollection::from_sets(kept.into_iter().cloned())
}

/// One-comparison exact MWIS of a trivially solvable connected graph:
/// an isolated node, a single edge, or a star.
pub fn cus_mwis(g: &WeightedGraph) -> Result<IndependentSet, SolveError> {
    let kind = cus_kind(g).map_err(|_| SolveError::NotCus)?.ok_or(SolveError::NotCus)?;
    Ok(cus_solution(g, kind))
}

/// Both maximal independent sets of a trivially solvable connected graph
/// (just one for an isolated node).
pub fn cus_amis(g: &WeightedGraph) -> Result<MisCollection, SolveError> {
    let kind = cus_kind(g).map_err(|_| SolveError::NotCus)?.ok_or(SolveError::NotCus)?;
    Ok(cus_family(g, kind))
}

fn star_split(g: &WeightedGraph) -> (NodeId, BTreeSet<NodeId>) {
    let n = g.node_count();
    let center = g
        .nodes()
        .find(|&id| g.degree(id).expect("graph node") == n - 1)
        .expect("a star has a center adjacent to every leaf");
    let leaves: BTreeSet<NodeId> = g.nodes().filter(|&id| id != center).collect();
    (center, leaves)
}

fn cus_solution(g: &WeightedGraph, kind: CusKind) -> IndependentSet {
    match kind {
        CusKind::IsolatedNode => IndependentSet::from_members(g, g.node_set()),
        CusKind::ConnectedPair => {
            let mut nodes = g.nodes();
            let a = nodes.next().expect("pair has two nodes");
            let b = nodes.next().expect("pair has two nodes");
            // Heavier endpoint; ties fall to the smaller id, which is `a`.
            let winner = if g.weight(b).expect("graph node") > g.weight(a).expect("graph node") {
                b
            } else {
                a
            };
            IndependentSet::from_members(g, BTreeSet::from([winner]))
        }
        CusKind::ShallowTree => {
            let (center, leaves) = star_split(g);
            let center_set = IndependentSet::from_members(g, BTreeSet::from([center]));
            let leaf_set = IndependentSet::from_members(g, leaves);
            pick_heavier(center_set, leaf_set)
        }
    }
}

/// Heavier of two sets; on equal weight, the set containing the smaller
/// minimum id.
fn pick_heavier(a: IndependentSet, b: IndependentSet) -> IndependentSet {
    if b.total_weight() > a.total_weight() {
        return b;
    }
    if b.total_weight() == a.total_weight() {
        let a_min = a.members().iter().next();
        let b_min = b.members().iter().next();
        if let (Some(a_min), Some(b_min)) = (a_min, b_min) {
            if b_min < a_min {
                return b;
            }
        }
    }
    a
}

fn cus_family(g: &WeightedGraph, kind: CusKind) -> MisCollection {
    match kind {
        CusKind::IsolatedNode => MisCollection::from_sets([g.node_set()]),
        CusKind::ConnectedPair => {
            MisCollection::from_sets(g.nodes().map(|id| BTreeSet::from([id])))
        }
        CusKind::ShallowTree => {
            let (center, leaves) = star_split(g);
            MisCollection::from_sets([BTreeSet::from([center]), leaves])
        }
    }
}

/// Union of per-component answers; the components must be disjoint.
pub fn combine_components(parts: Vec<IndependentSet>) -> Result<IndependentSet, SolveError> {
    let mut members = BTreeSet::new();
    let mut total = Rational::from_integer(0.into());
    for part in parts {
        for &id in part.members() {
            if !members.insert(id) {
                return Err(SolveError::OverlappingComponents);
            }
        }
        total += part.total_weight();
    }
    Ok(IndependentSet::from_parts(members, total))
}

/// Cross product of per-component families: every way of choosing one
/// maximal set per component. The components must be disjoint.
pub fn combine_amis(parts: Vec<MisCollection>) -> Result<MisCollection, SolveError> {
    let mut seen: BTreeSet<NodeId> = BTreeSet::new();
    for part in &parts {
        let mut universe: BTreeSet<NodeId> = BTreeSet::new();
        for set in part.iter() {
            universe.extend(set.iter().copied());
        }
        for id in universe {
            if !seen.insert(id) {
                return Err(SolveError::OverlappingComponents);
            }
        }
    }
    cross_product(&parts, None).map_err(|_| unreachable!("no deadline set"))
}

fn cross_product(
    parts: &[MisCollection],
    deadline: Option<Instant>,
) -> Result<MisCollection, BudgetExceeded> {
    let mut acc: Vec<BTreeSet<NodeId>> = vec![BTreeSet::new()];
    for part in parts {
        let mut next = Vec::with_capacity(acc.len() * part.len().max(1));
        for base in &acc {
            for set in part.iter() {
                let mut merged = base.clone();
                merged.extend(set.iter().copied());
                next.push(merged);
                if next.len() % 4096 == 0 {
                    check_deadline(deadline)?;
                }
            }
        }
        acc = next;
    }
    Ok(MisCollection::from_sets(acc))
}

fn check_deadline(deadline: Option<Instant>) -> Result<(), BudgetExceeded> {
    match deadline {
        Some(d) if Instant::now() >= d => Err(BudgetExceeded),
        _ => Ok(()),
    }
}

/// The compare-set rule in isolation: `l` plus the best answer among the
/// non-neighbors of `l` in `g_l`. When the non-neighbor subgraph is already
/// trivially solvable it is solved directly; otherwise `sub_solver` answers
/// it.
pub fn compare_set(
    g_l: &WeightedGraph,
    l: NodeId,
    mut sub_solver: impl FnMut(&WeightedGraph) -> IndependentSet,
) -> Result<IndependentSet, SolveError> {
    let css = g_l.complement_nonneighbors(l)?;
    let rest = if css.is_empty() {
        IndependentSet::empty()
    } else if all_components_trivial(&css) {
        let parts = css
            .connected_components()
            .into_iter()
            .map(|comp| {
                let sub = css.induced_subgraph(&comp).expect("component of css");
                cus_mwis(&sub)
            })
            .collect::<Result<Vec<_>, _>>()?;
        combine_components(parts)?
    } else {
        sub_solver(&css)
    };
    Ok(adjoin(g_l, rest, l))
}

fn all_components_trivial(g: &WeightedGraph) -> bool {
    g.connected_components().iter().all(|comp| {
        let sub = g.induced_subgraph(comp).expect("component of g");
        matches!(cus_kind(&sub), Ok(Some(_)))
    })
}

fn adjoin(g: &WeightedGraph, rest: IndependentSet, l: NodeId) -> IndependentSet {
    let mut members = rest.members().clone();
    members.insert(l);
    let total = rest.total_weight() + g.weight(l).expect("level node").value();
    debug_assert_eq!(g.is_independent(&members), Ok(true));
    IndependentSet::from_parts(members, total)
}

/// Outcome of a single-solution solver run.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub algorithm: AlgorithmId,
    pub solution: IndependentSet,
    pub runtime_seconds: f64,
    pub verified_independent: bool,
    pub verified_maximal: bool,
}

/// Outcome of the listing solver.
#[derive(Debug, Clone)]
pub struct AmislResult {
    pub collection: MisCollection,
    pub best: IndependentSet,
    pub runtime_seconds: f64,
}

#[derive(Clone, Copy)]
enum CompareMode {
    Exact,
    Greedy(SelectorKind, ScopeKind),
}

struct MwisEngine {
    mode: CompareMode,
    deadline: Option<Instant>,
    memo: HashMap<Vec<NodeId>, IndependentSet>,
}

impl MwisEngine {
    fn new(mode: CompareMode, deadline: Option<Instant>) -> Self {
        MwisEngine {
            mode,
            deadline,
            memo: HashMap::new(),
        }
    }

    fn solve(&mut self, g: &WeightedGraph) -> Result<IndependentSet, BudgetExceeded> {
        check_deadline(self.deadline)?;
        if g.is_empty() {
            return Ok(IndependentSet::empty());
        }
        let key = g.sorted_nodes();
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let sd = decompose(g);
        let answer = if sd.is_empty() {
            self.combine_base(g)?
        } else {
            let mut answer = IndependentSet::empty();
            for entry in sd.entries().iter().rev() {
                check_deadline(self.deadline)?;
                let mut level_nodes = entry.remaining_nodes();
                level_nodes.insert(entry.removed());
                let level_key: Vec<NodeId> = level_nodes.iter().copied().collect();
                if let Some(hit) = self.memo.get(&level_key) {
                    answer = hit.clone();
                    continue;
                }
                let mut prelim = IndependentSet::empty();
                for comp in entry.components() {
                    let part = self.resolve_component(g, comp)?;
                    prelim = prelim.disjoint_union(part);
                }
                let level = g.induced_subgraph(&level_nodes).expect("nodes of g");
                let winner = self.level_winner(&level, entry.removed(), prelim)?;
                self.memo.insert(level_key, winner.clone());
                // On a disconnected level the winner splits cleanly: its
                // slice inside the rejoined node's component is itself an
                // optimum there, so it can be reused when a later level
                // asks for that component. Greedy compare sets mix in the
                // other components' scores, so the slice is only recorded
                // for the exact mode.
                if matches!(self.mode, CompareMode::Exact) {
                    let home = component_of(&level, entry.removed());
                    if home.len() < level.node_count() {
                        let slice = winner.restricted_to(&level, &home);
                        self.memo
                            .entry(home.into_iter().collect())
                            .or_insert(slice);
                    }
                }
                answer = winner;
            }
            answer
        };
        self.memo.entry(key).or_insert_with(|| answer.clone());
        Ok(answer)
    }

    /// Best answer for a graph whose components are all trivially solvable
    /// (used for the fully decomposed base and for trivially solvable
    /// non-neighbor subgraphs).
    fn combine_base(&mut self, g: &WeightedGraph) -> Result<IndependentSet, BudgetExceeded> {
        let mut acc = IndependentSet::empty();
        for comp in g.connected_components() {
            let part = self.resolve_component(g, &comp)?;
            acc = acc.disjoint_union(part);
        }
        Ok(acc)
    }

    /// Answer for one connected component: memoized, trivially solvable, or
    /// solved by a fresh dividing pass.
    fn resolve_component(
        &mut self,
        host: &WeightedGraph,
        comp: &BTreeSet<NodeId>,
    ) -> Result<IndependentSet, BudgetExceeded> {
        let key: Vec<NodeId> = comp.iter().copied().collect();
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let sub = host.induced_subgraph(comp).expect("component of host");
        if let Ok(Some(kind)) = cus_kind(&sub) {
            let part = cus_solution(&sub, kind);
            self.memo.insert(key, part.clone());
            return Ok(part);
        }
        self.solve(&sub)
    }

    fn level_winner(
        &mut self,
        level: &WeightedGraph,
        l: NodeId,
        prelim: IndependentSet,
    ) -> Result<IndependentSet, BudgetExceeded> {
        let css = level.complement_nonneighbors(l).expect("level node");
        let compare = if css.is_empty() || all_components_trivial(&css) {
            let rest = self.combine_base(&css)?;
            adjoin(level, rest, l)
        } else {
            match self.mode {
                CompareMode::Exact => {
                    // Even taking every non-neighbor cannot beat the
                    // preliminary set: skip the recursion.
                    let ceiling =
                        css.total_weight() + level.weight(l).expect("level node").value();
                    if ceiling <= *prelim.total_weight() {
                        return Ok(prelim);
                    }
                    let rest = self.solve(&css)?;
                    adjoin(level, rest, l)
                }
                CompareMode::Greedy(selector, ScopeKind::WholeSubgraph) => {
                    greedy_mis(level, selector)
                }
                CompareMode::Greedy(selector, ScopeKind::NonNeighborSubgraph) => {
                    adjoin(level, greedy_mis(&css, selector), l)
                }
            }
        };
        Ok(if compare.total_weight() > prelim.total_weight() {
            compare
        } else {
            prelim
        })
    }
}

struct AmislEngine {
    deadline: Option<Instant>,
    memo: HashMap<Vec<NodeId>, MisCollection>,
}

impl AmislEngine {
    fn new(deadline: Option<Instant>) -> Self {
        AmislEngine {
            deadline,
            memo: HashMap::new(),
        }
    }

    fn solve(&mut self, g: &WeightedGraph) -> Result<MisCollection, BudgetExceeded> {
        check_deadline(self.deadline)?;
        if g.is_empty() {
            return Ok(MisCollection::singleton_empty());
        }
        let key = g.sorted_nodes();
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let sd = decompose(g);
        let answer = if sd.is_empty() {
            self.combine_base(g)?
        } else {
            let mut answer = MisCollection::singleton_empty();
            for entry in sd.entries().iter().rev() {
                check_deadline(self.deadline)?;
                let mut level_nodes = entry.remaining_nodes();
                level_nodes.insert(entry.removed());
                let level_key: Vec<NodeId> = level_nodes.iter().copied().collect();
                if let Some(hit) = self.memo.get(&level_key) {
                    answer = hit.clone();
                    continue;
                }
                let parts = entry
                    .components()
                    .iter()
                    .map(|comp| self.resolve_component(g, comp))
                    .collect::<Result<Vec<_>, _>>()?;
                let prelim = cross_product(&parts, self.deadline)?;
                let level = g.induced_subgraph(&level_nodes).expect("nodes of g");
                let compare = self.level_compare(&level, entry.removed())?;
                let merged = special_union(&prelim, &compare);
                self.memo.insert(level_key, merged.clone());
                let home = component_of(&level, entry.removed());
                if home.len() < level.node_count() {
                    let slice = MisCollection::from_sets(
                        merged
                            .iter()
                            .map(|set| set.intersection(&home).copied().collect()),
                    );
                    self.memo
                        .entry(home.into_iter().collect())
                        .or_insert(slice);
                }
                answer = merged;
            }
            answer
        };
        self.memo.entry(key).or_insert_with(|| answer.clone());
        Ok(answer)
    }

    fn combine_base(&mut self, g: &WeightedGraph) -> Result<MisCollection, BudgetExceeded> {
        let parts = g
            .connected_components()
            .iter()
            .map(|comp| self.resolve_component(g, comp))
            .collect::<Result<Vec<_>, _>>()?;
        cross_product(&parts, self.deadline)
    }

    fn resolve_component(
        &mut self,
        host: &WeightedGraph,
        comp: &BTreeSet<NodeId>,
    ) -> Result<MisCollection, BudgetExceeded> {
        let key: Vec<NodeId> = comp.iter().copied().collect();
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let sub = host.induced_subgraph(comp).expect("component of host");
        if let Ok(Some(kind)) = cus_kind(&sub) {
            let family = cus_family(&sub, kind);
            self.memo.insert(key, family.clone());
            return Ok(family);
        }
        self.solve(&sub)
    }

    /// Every maximal set containing the rejoined node: the families of the
    /// non-neighbor subgraph, each set extended with `l`.
    fn level_compare(
        &mut self,
        level: &WeightedGraph,
        l: NodeId,
    ) -> Result<MisCollection, BudgetExceeded> {
        let css = level.complement_nonneighbors(l).expect("level node");
        let family = if css.is_empty() {
            MisCollection::singleton_empty()
        } else if all_components_trivial(&css) {
            self.combine_base(&css)?
        } else {
            self.solve(&css)?
        };
        Ok(MisCollection::from_sets(family.iter().map(|set| {
            let mut extended = set.clone();
            extended.insert(l);
            extended
        })))
    }
}

fn component_of(g: &WeightedGraph, start: NodeId) -> BTreeSet<NodeId> {
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(id) = queue.pop_front() {
        for &nbr in g.neighbors(id).expect("graph node") {
            if seen.insert(nbr) {
                queue.push_back(nbr);
            }
        }
    }
    seen
}

fn verify(g: &WeightedGraph, solution: &IndependentSet) -> (bool, bool) {
    let independent = g.is_independent(solution.members()).unwrap_or(false);
    let maximal = g.is_maximal_independent(solution.members()).unwrap_or(false);
    (independent, maximal)
}

/// A comparison winner can skip an addable node: the preliminary side never
/// re-admits the node removed at its level, and with greedy sub-answers it
/// may still outweigh the compare side. Exact winners cannot (re-adding the
/// node would beat them), so only composed answers need the top-up.
fn extend_to_maximal(g: &WeightedGraph, solution: IndependentSet) -> IndependentSet {
    let mut members = solution.members().clone();
    let mut grew = false;
    for id in g.nodes() {
        if !members.contains(&id)
            && g.neighbors(id)
                .expect("solution nodes come from g")
                .intersection(&members)
                .next()
                .is_none()
        {
            members.insert(id);
            grew = true;
        }
    }
    if grew {
        IndependentSet::from_members(g, members)
    } else {
        solution
    }
}

fn run_mwis(
    g: &WeightedGraph,
    mode: CompareMode,
    algorithm: AlgorithmId,
    deadline: Option<Instant>,
) -> Result<SolveResult, BudgetExceeded> {
    let started = Instant::now();
    let solution = MwisEngine::new(mode, deadline).solve(g)?;
    let solution = match mode {
        CompareMode::Exact => solution,
        CompareMode::Greedy(..) => extend_to_maximal(g, solution),
    };
    let runtime_seconds = started.elapsed().as_secs_f64();
    let (verified_independent, verified_maximal) = verify(g, &solution);
    Ok(SolveResult {
        algorithm,
        solution,
        runtime_seconds,
        verified_independent,
        verified_maximal,
    })
}

/// Exact maximum-weight independent set (algorithm `a1`).
pub fn solve_mwis(g: &WeightedGraph) -> SolveResult {
    run_mwis(g, CompareMode::Exact, AlgorithmId::A1, None).expect("no deadline set")
}

/// [`solve_mwis`] with a time budget.
pub fn solve_mwis_within(g: &WeightedGraph, budget: Duration) -> Result<SolveResult, BudgetExceeded> {
    run_mwis(g, CompareMode::Exact, AlgorithmId::A1, Some(Instant::now() + budget))
}

/// Composed solver (algorithms `a4`, `a5`, `a7`, `a8`): the exact recursion
/// skeleton, with compare sets that are not trivially solvable answered by
/// the selected greedy on the selected scope. The winner is topped up to a
/// maximal set before it is reported.
pub fn solve_composed(g: &WeightedGraph, selector: SelectorKind, scope: ScopeKind) -> SolveResult {
    run_mwis(
        g,
        CompareMode::Greedy(selector, scope),
        AlgorithmId::composed(selector, scope),
        None,
    )
    .expect("no deadline set")
}

/// [`solve_composed`] with a time budget.
pub fn solve_composed_within(
    g: &WeightedGraph,
    selector: SelectorKind,
    scope: ScopeKind,
    budget: Duration,
) -> Result<SolveResult, BudgetExceeded> {
    run_mwis(
        g,
        CompareMode::Greedy(selector, scope),
        AlgorithmId::composed(selector, scope),
        Some(Instant::now() + budget),
    )
}

fn run_amisl(
    g: &WeightedGraph,
    deadline: Option<Instant>,
) -> Result<AmislResult, BudgetExceeded> {
    let started = Instant::now();
    let collection = AmislEngine::new(deadline).solve(g)?;
    let runtime_seconds = started.elapsed().as_secs_f64();
    let best = collection.best(g);
    Ok(AmislResult {
        collection,
        best,
        runtime_seconds,
    })
}

/// All maximal independent sets, plus the heaviest one (algorithm `a2`).
pub fn solve_amisl(g: &WeightedGraph) -> AmislResult {
    run_amisl(g, None).expect("no deadline set")
}

/// [`solve_amisl`] with a time budget.
pub fn solve_amisl_within(g: &WeightedGraph, budget: Duration) -> Result<AmislResult, BudgetExceeded> {
    run_amisl(g, Some(Instant::now() + budget))
}
