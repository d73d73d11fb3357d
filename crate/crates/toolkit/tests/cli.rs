//! End-to-end checks of the `mwis` binary.

use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn mwis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mwis"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mwis-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("scratch dir");
    dir
}

fn write(path: &Path, content: &str) {
    std::fs::write(path, content).expect("write test file");
}

const SQUARE: &str = "p 4 4\nn 0 1\nn 1 10\nn 2 1\nn 3 10\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n";

#[test]
fn solve_reports_the_exact_answer_as_json() {
    let dir = scratch_dir("solve");
    let input = dir.join("square.graph");
    write(&input, SQUARE);
    let out = mwis(&["solve", "--alg", "a1", "--input", input.to_str().unwrap()]);
    assert!(out.status.success(), "{out:?}");
    let record: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(record["algorithm"], "a1");
    assert_eq!(record["members"], serde_json::json!([1, 3]));
    assert_eq!(record["total_weight"], "20");
    assert_eq!(record["verified_independent"], true);
    assert_eq!(record["verified_maximal"], true);
}

#[test]
fn solve_accepts_every_algorithm_and_honors_verify() {
    let dir = scratch_dir("algs");
    let input = dir.join("square.graph");
    write(&input, SQUARE);
    for alg in ["a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8"] {
        let out = mwis(&[
            "solve", "--alg", alg, "--input", input.to_str().unwrap(), "--verify",
        ]);
        assert!(out.status.success(), "{alg}: {out:?}");
    }
}

#[test]
fn enumerate_lists_the_family() {
    let dir = scratch_dir("enumerate");
    let input = dir.join("path.graph");
    write(&input, "p 4 3\nn 0 1\nn 1 1\nn 2 1\nn 3 1\ne 0 1\ne 1 2\ne 2 3\n");
    let out = mwis(&["enumerate", "--input", input.to_str().unwrap()]);
    assert!(out.status.success(), "{out:?}");
    let record: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(record["count"], 3);
    assert_eq!(
        record["sets"],
        serde_json::json!([[0, 2], [0, 3], [1, 3]])
    );
    assert_eq!(record["best"]["total_weight"], "2");
}

#[test]
fn gen_writes_a_parseable_deterministic_instance() {
    let dir = scratch_dir("gen");
    let file_a = dir.join("a.graph");
    let file_b = dir.join("b.graph");
    for file in [&file_a, &file_b] {
        let out = mwis(&[
            "gen", "--nodes", "12", "--density", "0.4", "--seed", "7",
            "--output", file.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{out:?}");
    }
    let text_a = std::fs::read_to_string(&file_a).unwrap();
    let text_b = std::fs::read_to_string(&file_b).unwrap();
    assert_eq!(text_a, text_b);
    let g = mwis_toolkit::parse_graph(&text_a).unwrap();
    assert_eq!(g.node_count(), 12);
    assert_eq!(g.edge_count(), 26); // round(0.4 * 66)
}

#[test]
fn bench_writes_the_csv_table() {
    let dir = scratch_dir("bench");
    write(&dir.join("one.graph"), SQUARE);
    write(
        &dir.join("two.graph"),
        "p 2 1\nn 0 1.5\nn 1 2.0\ne 0 1\n",
    );
    let csv_path = dir.join("table.csv");
    let out = mwis(&[
        "bench",
        "--inputs", dir.to_str().unwrap(),
        "--algs", "a1,a3",
        "--budget", "10",
        "--output", csv_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{out:?}");
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("test_id,edges,nodes,density"));
    assert!(lines[1].starts_with("1,1,2,1,")); // 2-node instance first
    assert!(lines[2].starts_with("2,4,4,"));
    // a1 weight cell of the square row.
    assert_eq!(lines[2].split(',').nth(4), Some("20"));
}

#[test]
fn verify_passes_on_a_small_instance() {
    let dir = scratch_dir("verify");
    let input = dir.join("square.graph");
    write(&input, SQUARE);
    let out = mwis(&["verify", "--input", input.to_str().unwrap()]);
    assert!(out.status.success(), "{out:?}");
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("a1: ok"));
    assert!(stdout.contains("all 8 algorithm(s) verified"));
}

#[test]
fn input_errors_exit_with_status_two() {
    let dir = scratch_dir("errors");
    let missing = dir.join("nope.graph");
    let out = mwis(&["solve", "--alg", "a1", "--input", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let malformed = dir.join("bad.graph");
    write(&malformed, "p 2 0\nn 0 1\n");
    let out = mwis(&["solve", "--alg", "a1", "--input", malformed.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");

    let ok = dir.join("ok.graph");
    write(&ok, SQUARE);
    let out = mwis(&["bench", "--inputs", ok.to_str().unwrap(), "--algs", "a3"]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");

    let out = mwis(&["verify", "--input", ok.to_str().unwrap(), "--max-nodes", "2"]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");

    let out = mwis(&["gen", "--nodes", "5", "--density", "1.5"]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}
