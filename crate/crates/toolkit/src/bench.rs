//! Benchmark harness: run a set of algorithms over a set of graphs, record
//! exact weights and runtimes, and derive accuracy metrics.
//!
//! Accuracy is the signed weight error rate `(w - w_opt) / w_opt * 100`
//! against the exact optimum of the instance, which the harness takes from
//! the `a1` run (or `a2` when `a1` was not requested). Runs that exceed the
//! per-instance budget are recorded as timed out: their weight, runtime, and
//! error cells stay empty, and if the exact baseline itself timed out the
//! whole instance keeps empty error cells.
//!
//! Runs happen sequentially so that each wall-clock measurement times one
//! solver call and nothing else. Re-running the same inputs reproduces the
//! table byte for byte except for the runtime columns.

use mwis_core::weight::format_decimal;
use mwis_core::{
    greedy_mis, solve_amisl_within, solve_composed_within, solve_mwis_within, AlgorithmId,
    IndependentSet, Rational, ScopeKind, SelectorKind, WeightedGraph,
};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BenchError {
    #[error("optimum weight must be positive to compute an error rate")]
    ZeroOptimum,
    #[error("error rates need a1 or a2 among the requested algorithms")]
    MissingBaseline,
    #[error("algorithm {algorithm} returned a dependent set on instance {test_id}")]
    SolutionInvalid {
        test_id: usize,
        algorithm: AlgorithmId,
    },
}

/// Signed percentage by which `w` misses `w_optimum`; never positive when
/// `w <= w_optimum`.
pub fn weight_error_rate(w: &Rational, w_optimum: &Rational) -> Result<Rational, BenchError> {
    if w_optimum <= &Rational::from_integer(0.into()) {
        return Err(BenchError::ZeroOptimum);
    }
    Ok((w - w_optimum) / w_optimum * Rational::from_integer(100.into()))
}

/// One finished (graph, algorithm) run.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgRun {
    pub weight: Rational,
    pub runtime_seconds: f64,
}

/// One benchmark table row. Algorithms that were not requested, or that
/// timed out, have no entry in `runs`; error cells exist only where both the
/// run and the instance baseline finished.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub test_id: usize,
    pub edge_count: usize,
    pub node_count: usize,
    pub density: Rational,
    pub runs: BTreeMap<AlgorithmId, AlgRun>,
    pub signed_error: BTreeMap<AlgorithmId, Rational>,
    pub optimum: Option<Rational>,
}

impl BenchRecord {
    pub fn absolute_error(&self, algorithm: AlgorithmId) -> Option<Rational> {
        self.signed_error.get(&algorithm).map(|e| {
            if e < &Rational::from_integer(0.into()) {
                -e.clone()
            } else {
                e.clone()
            }
        })
    }
}

fn density_of(g: &WeightedGraph) -> Rational {
    let n = g.node_count() as u64;
    let pairs = n * n.saturating_sub(1) / 2;
    if pairs == 0 {
        Rational::from_integer(0.into())
    } else {
        Rational::new((g.edge_count() as u64).into(), pairs.into())
    }
}

/// Runs one algorithm on one graph, returning the solution set and its
/// wall-clock time, or `None` on timeout.
fn run_one(
    g: &WeightedGraph,
    algorithm: AlgorithmId,
    budget: Duration,
) -> Option<(IndependentSet, f64)> {
    match algorithm {
        AlgorithmId::A1 => solve_mwis_within(g, budget)
            .ok()
            .map(|out| (out.solution, out.runtime_seconds)),
        AlgorithmId::A2 => solve_amisl_within(g, budget)
            .ok()
            .map(|out| (out.best, out.runtime_seconds)),
        AlgorithmId::A3 | AlgorithmId::A6 => {
            let selector = if algorithm == AlgorithmId::A3 {
                SelectorKind::Gwmin
            } else {
                SelectorKind::Gwmin2
            };
            let started = Instant::now();
            let set = greedy_mis(g, selector);
            let elapsed = started.elapsed();
            (elapsed <= budget).then(|| (set, elapsed.as_secs_f64()))
        }
        AlgorithmId::A4 | AlgorithmId::A5 | AlgorithmId::A7 | AlgorithmId::A8 => {
            let selector = if matches!(algorithm, AlgorithmId::A4 | AlgorithmId::A5) {
                SelectorKind::Gwmin
            } else {
                SelectorKind::Gwmin2
            };
            let scope = if matches!(algorithm, AlgorithmId::A4 | AlgorithmId::A7) {
                ScopeKind::WholeSubgraph
            } else {
                ScopeKind::NonNeighborSubgraph
            };
            solve_composed_within(g, selector, scope, budget)
                .ok()
                .map(|out| (out.solution, out.runtime_seconds))
        }
    }
}

/// Runs `algorithms` over `graphs` with a per-run time budget and returns
/// one record per graph, sorted by (node count, edge count) and numbered
/// from 1. `a1` or `a2` must be requested; it supplies the optimum that the
/// error columns are measured against.
pub fn run_benchmark(
    graphs: &[WeightedGraph],
    algorithms: &[AlgorithmId],
    per_instance_budget: Duration,
) -> Result<Vec<BenchRecord>, BenchError> {
    let baseline_alg = if algorithms.contains(&AlgorithmId::A1) {
        AlgorithmId::A1
    } else if algorithms.contains(&AlgorithmId::A2) {
        AlgorithmId::A2
    } else {
        return Err(BenchError::MissingBaseline);
    };
    let mut order: Vec<usize> = (0..graphs.len()).collect();
    order.sort_by_key(|&i| (graphs[i].node_count(), graphs[i].edge_count()));
    let mut records = Vec::with_capacity(graphs.len());
    for (pos, &index) in order.iter().enumerate() {
        let g = &graphs[index];
        let test_id = pos + 1;
        let mut runs = BTreeMap::new();
        for &algorithm in AlgorithmId::ALL.iter() {
            if !algorithms.contains(&algorithm) {
                continue;
            }
            if let Some((set, runtime_seconds)) = run_one(g, algorithm, per_instance_budget) {
                if g.is_independent(set.members()) != Ok(true) {
                    return Err(BenchError::SolutionInvalid { test_id, algorithm });
                }
                runs.insert(
                    algorithm,
                    AlgRun {
                        weight: set.total_weight().clone(),
                        runtime_seconds,
                    },
                );
            }
        }
        let optimum = runs.get(&baseline_alg).map(|r| r.weight.clone());
        let mut signed_error = BTreeMap::new();
        if let Some(optimum) = &optimum {
            for (&algorithm, run) in &runs {
                signed_error.insert(algorithm, weight_error_rate(&run.weight, optimum)?);
            }
        }
        records.push(BenchRecord {
            test_id,
            edge_count: g.edge_count(),
            node_count: g.node_count(),
            density: density_of(g),
            runs,
            signed_error,
            optimum,
        });
    }
    Ok(records)
}

/// Fixed-schema CSV: identity columns, then weight/runtime pairs for a1..a8,
/// then signed and absolute error columns for a1..a8. Unrequested or
/// timed-out cells are empty.
pub fn records_to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::new();
    out.push_str("test_id,edges,nodes,density");
    for alg in AlgorithmId::ALL {
        write!(out, ",{alg}_weight,{alg}_runtime").unwrap();
    }
    for alg in AlgorithmId::ALL {
        write!(out, ",{alg}_err_signed").unwrap();
    }
    for alg in AlgorithmId::ALL {
        write!(out, ",{alg}_err_abs").unwrap();
    }
    out.push('\n');
    for record in records {
        write!(
            out,
            "{},{},{},{}",
            record.test_id,
            record.edge_count,
            record.node_count,
            format_decimal(&record.density)
        )
        .unwrap();
        for alg in AlgorithmId::ALL {
            match record.runs.get(&alg) {
                Some(run) => write!(
                    out,
                    ",{},{:.6}",
                    format_decimal(&run.weight),
                    run.runtime_seconds
                )
                .unwrap(),
                None => out.push_str(",,"),
            }
        }
        for alg in AlgorithmId::ALL {
            match record.signed_error.get(&alg) {
                Some(err) => write!(out, ",{}", format_decimal(err)).unwrap(),
                None => out.push(','),
            }
        }
        for alg in AlgorithmId::ALL {
            match record.absolute_error(alg) {
                Some(err) => write!(out, ",{}", format_decimal(&err)).unwrap(),
                None => out.push(','),
            }
        }
        out.push('\n');
    }
    out
}
