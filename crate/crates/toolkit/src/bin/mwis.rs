//! Command-line front end for the MWIS toolkit.
//!
//! Exit codes: 0 on success, 1 when a solver result fails verification or
//! disagrees with the oracles, 2 on input, format, or usage errors.

use clap::{Args, Parser, Subcommand};
use mwis_core::oracle::{oracle_amis, oracle_mwis, OracleConfig};
use mwis_core::weight::format_decimal;
use mwis_core::{
    greedy_mis, gwmin2_bound, gwmin_bound, solve_amisl, solve_composed, solve_mwis, AlgorithmId,
    IndependentSet, Rational, ScopeKind, SelectorKind, Weight, WeightedGraph,
};
use mwis_toolkit::{
    generate_graph, parse_graph, records_to_csv, run_benchmark, serialize_graph, BenchError,
    GeneratorSpec,
};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

#[derive(Parser)]
#[command(
    name = "mwis",
    about = "Exact, enumerating, greedy, and composed solvers for the maximum weighted independent set problem"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance with one algorithm and print a JSON record.
    Solve(SolveArgs),
    /// List every maximal independent set of an instance.
    Enumerate(EnumerateArgs),
    /// Generate a random instance file from a seeded spec.
    Gen(GenArgs),
    /// Run algorithms over a set of instance files and write a CSV table.
    Bench(BenchArgs),
    /// Check the solvers against the brute-force oracles on one instance.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Algorithm id: a1, a2, a3, a4, a5, a6, a7, a8.
    #[arg(long)]
    alg: AlgorithmId,
    #[arg(long)]
    input: PathBuf,
    /// Write the JSON record here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Exit with status 1 unless the result verifies as a maximal
    /// independent set.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    nodes: u32,
    /// Edge density in [0, 1] as a decimal, e.g. 0.35.
    #[arg(long)]
    density: String,
    /// Smallest sampleable weight (positive decimal).
    #[arg(long, default_value = "0.1")]
    wmin: String,
    /// Largest sampleable weight (positive decimal).
    #[arg(long, default_value = "100.0")]
    wmax: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the instance here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Instance files or directories of .graph files (comma-separated or
    /// repeated).
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    inputs: Vec<PathBuf>,
    /// Comma-separated algorithm ids, or "all". Must include a1 or a2.
    #[arg(long, value_delimiter = ',', num_args = 1.., default_value = "all")]
    algs: Vec<String>,
    /// Per-run time budget in seconds.
    #[arg(long, default_value_t = 60.0)]
    budget: f64,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    /// Oracle size cap; graphs with more nodes are rejected.
    #[arg(long, default_value_t = 20)]
    max_nodes: usize,
    /// Comma-separated algorithm ids, or "all".
    #[arg(long, value_delimiter = ',', num_args = 1.., default_value = "all")]
    algs: Vec<String>,
}

/// Error carrying the process exit status.
struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    fn mismatch(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_graph(path: &Path) -> CliResult<WeightedGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn write_or_print(output: Option<&Path>, content: &str) -> CliResult<()> {
    match output {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::input(format!("{}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn parse_algs(tokens: &[String]) -> CliResult<Vec<AlgorithmId>> {
    if tokens.iter().any(|t| t.eq_ignore_ascii_case("all")) {
        return Ok(AlgorithmId::ALL.to_vec());
    }
    let mut algs = Vec::new();
    for token in tokens {
        let alg: AlgorithmId = token.parse().map_err(CliError::input)?;
        if !algs.contains(&alg) {
            algs.push(alg);
        }
    }
    if algs.is_empty() {
        return Err(CliError::input("no algorithms selected"));
    }
    Ok(algs)
}

fn parse_weight_arg(name: &str, text: &str) -> CliResult<Rational> {
    Weight::parse_decimal(text)
        .map(|w| w.value().clone())
        .map_err(|e| CliError::input(format!("--{name} {text:?}: {e}")))
}

#[derive(Serialize)]
struct SolveRecord {
    algorithm: String,
    members: Vec<u32>,
    total_weight: String,
    runtime_seconds: f64,
    verified_independent: bool,
    verified_maximal: bool,
}

fn solve_record(
    algorithm: AlgorithmId,
    solution: &IndependentSet,
    runtime_seconds: f64,
    g: &WeightedGraph,
) -> SolveRecord {
    SolveRecord {
        algorithm: algorithm.to_string(),
        members: solution.sorted_members().iter().map(|id| id.value()).collect(),
        total_weight: format_decimal(solution.total_weight()),
        runtime_seconds,
        verified_independent: g.is_independent(solution.members()) == Ok(true),
        verified_maximal: g.is_maximal_independent(solution.members()) == Ok(true),
    }
}

fn run_algorithm(g: &WeightedGraph, algorithm: AlgorithmId) -> (IndependentSet, f64) {
    match algorithm {
        AlgorithmId::A1 => {
            let out = solve_mwis(g);
            (out.solution, out.runtime_seconds)
        }
        AlgorithmId::A2 => {
            let out = solve_amisl(g);
            (out.best, out.runtime_seconds)
        }
        AlgorithmId::A3 => timed_greedy(g, SelectorKind::Gwmin),
        AlgorithmId::A6 => timed_greedy(g, SelectorKind::Gwmin2),
        AlgorithmId::A4 => composed(g, SelectorKind::Gwmin, ScopeKind::WholeSubgraph),
        AlgorithmId::A5 => composed(g, SelectorKind::Gwmin, ScopeKind::NonNeighborSubgraph),
        AlgorithmId::A7 => composed(g, SelectorKind::Gwmin2, ScopeKind::WholeSubgraph),
        AlgorithmId::A8 => composed(g, SelectorKind::Gwmin2, ScopeKind::NonNeighborSubgraph),
    }
}

fn timed_greedy(g: &WeightedGraph, selector: SelectorKind) -> (IndependentSet, f64) {
    let started = std::time::Instant::now();
    let set = greedy_mis(g, selector);
    (set, started.elapsed().as_secs_f64())
}

fn composed(g: &WeightedGraph, selector: SelectorKind, scope: ScopeKind) -> (IndependentSet, f64) {
    let out = solve_composed(g, selector, scope);
    (out.solution, out.runtime_seconds)
}

fn cmd_solve(args: &SolveArgs) -> CliResult<()> {
    let g = read_graph(&args.input)?;
    let (solution, runtime) = run_algorithm(&g, args.alg);
    let record = solve_record(args.alg, &solution, runtime, &g);
    let mut json = serde_json::to_string_pretty(&record).expect("record serializes");
    json.push('\n');
    write_or_print(args.output.as_deref(), &json)?;
    if args.verify && !(record.verified_independent && record.verified_maximal) {
        return Err(CliError::mismatch(format!(
            "{} result failed verification on {}",
            args.alg,
            args.input.display()
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct EnumerateRecord {
    count: usize,
    sets: Vec<Vec<u32>>,
    best: BestRecord,
    runtime_seconds: f64,
}

#[derive(Serialize)]
struct BestRecord {
    members: Vec<u32>,
    total_weight: String,
}

fn cmd_enumerate(args: &EnumerateArgs) -> CliResult<()> {
    let g = read_graph(&args.input)?;
    let out = solve_amisl(&g);
    let record = EnumerateRecord {
        count: out.collection.len(),
        sets: out
            .collection
            .iter()
            .map(|set| set.iter().map(|id| id.value()).collect())
            .collect(),
        best: BestRecord {
            members: out.best.sorted_members().iter().map(|id| id.value()).collect(),
            total_weight: format_decimal(out.best.total_weight()),
        },
        runtime_seconds: out.runtime_seconds,
    };
    let mut json = serde_json::to_string_pretty(&record).expect("record serializes");
    json.push('\n');
    write_or_print(args.output.as_deref(), &json)
}

fn cmd_gen(args: &GenArgs) -> CliResult<()> {
    let density = mwis_core::weight::parse_decimal(&args.density)
        .ok_or_else(|| CliError::input(format!("--density {:?}: not a decimal", args.density)))?;
    let spec = GeneratorSpec {
        node_count: args.nodes,
        density,
        weight_low: parse_weight_arg("wmin", &args.wmin)?,
        weight_high: parse_weight_arg("wmax", &args.wmax)?,
        seed: args.seed,
    };
    let g = generate_graph(&spec).map_err(|e| CliError::input(e.to_string()))?;
    write_or_print(args.output.as_deref(), &serialize_graph(&g))
}

fn collect_inputs(paths: &[PathBuf]) -> CliResult<Vec<PathBuf>> {
    let mut files = Vec::new();
    for path in paths {
        if path.is_dir() {
            let mut entries: Vec<PathBuf> = std::fs::read_dir(path)
                .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?
                .filter_map(|entry| entry.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|ext| ext == "graph"))
                .collect();
            entries.sort();
            files.extend(entries);
        } else {
            files.push(path.clone());
        }
    }
    if files.is_empty() {
        return Err(CliError::input("no input files found"));
    }
    Ok(files)
}

fn cmd_bench(args: &BenchArgs) -> CliResult<()> {
    let algs = parse_algs(&args.algs)?;
    if !args.budget.is_finite() || args.budget < 0.0 {
        return Err(CliError::input("--budget must be a non-negative number"));
    }
    let files = collect_inputs(&args.inputs)?;
    let graphs: Vec<WeightedGraph> = files
        .iter()
        .map(|path| read_graph(path))
        .collect::<CliResult<_>>()?;
    let budget = Duration::from_secs_f64(args.budget);
    let records = run_benchmark(&graphs, &algs, budget).map_err(|e| match e {
        BenchError::SolutionInvalid { .. } => CliError::mismatch(e.to_string()),
        _ => CliError::input(e.to_string()),
    })?;
    write_or_print(args.output.as_deref(), &records_to_csv(&records))
}

fn cmd_verify(args: &VerifyArgs) -> CliResult<()> {
    let algs = parse_algs(&args.algs)?;
    let g = read_graph(&args.input)?;
    let config = OracleConfig {
        max_nodes: args.max_nodes,
    };
    let best = oracle_mwis(&g, &config).map_err(|e| CliError::input(e.to_string()))?;
    let family = oracle_amis(&g, &config).map_err(|e| CliError::input(e.to_string()))?;
    let optimum = best.total_weight();
    let mut failures = 0usize;
    for &alg in &algs {
        let mut problems: Vec<String> = Vec::new();
        let (solution, _) = run_algorithm(&g, alg);
        if g.is_independent(solution.members()) != Ok(true) {
            problems.push("returned a dependent set".into());
        }
        if !g.is_empty() && g.is_maximal_independent(solution.members()) != Ok(true) {
            problems.push("returned a non-maximal set".into());
        }
        match alg {
            AlgorithmId::A1 => {
                if solution.total_weight() != optimum {
                    problems.push(format!(
                        "weight {} differs from oracle optimum {}",
                        format_decimal(solution.total_weight()),
                        format_decimal(optimum)
                    ));
                }
            }
            AlgorithmId::A2 => {
                if solution.total_weight() != optimum {
                    problems.push("best listed set is not optimal".into());
                }
                let listed = solve_amisl(&g).collection;
                if listed != family {
                    problems.push(format!(
                        "listed {} maximal sets, oracle found {}",
                        listed.len(),
                        family.len()
                    ));
                }
            }
            _ => {
                if solution.total_weight() > optimum {
                    problems.push("weight exceeds the oracle optimum".into());
                }
                let bound = match alg {
                    AlgorithmId::A3 | AlgorithmId::A4 | AlgorithmId::A5 => gwmin_bound(&g),
                    _ => gwmin2_bound(&g),
                };
                if solution.total_weight() < &bound {
                    problems.push("weight falls below its guaranteed bound".into());
                }
            }
        }
        if problems.is_empty() {
            println!("{alg}: ok");
        } else {
            failures += 1;
            for problem in problems {
                println!("{alg}: MISMATCH: {problem}");
            }
        }
    }
    if failures > 0 {
        return Err(CliError::mismatch(format!(
            "{failures} algorithm(s) failed verification on {}",
            args.input.display()
        )));
    }
    println!("all {} algorithm(s) verified", algs.len());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("mwis: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}
