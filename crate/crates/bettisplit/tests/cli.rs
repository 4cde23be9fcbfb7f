//! End-to-end tests of the command-line binary: output bytes, exit codes,
//! and determinism.

mod common;

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bettisplit"))
}

fn run(args: &[&str]) -> Output {
    let mut cmd = bin();
    for arg in args {
        if let Some(name) = arg.strip_prefix("fixture:") {
            cmd.arg(common::fixture_path(name));
        } else {
            cmd.arg(arg);
        }
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn covers_lists_the_fixture_covers() {
    let out = run(&["covers", "fixture:example_1_4.graph"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "{1,2,3}\n{2,3,4}\n{1,2,5}\n{4,5}\n");

    let json = run(&["covers", "fixture:example_1_4.graph", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(
        value,
        serde_json::json!({ "covers": [[1,2,3],[2,3,4],[1,2,5],[4,5]] })
    );
}

#[test]
fn covers_of_an_edgeless_graph_is_the_empty_set() {
    let dir = tempdir();
    let path = dir.join("edgeless.graph");
    std::fs::write(&path, "n 3\n").unwrap();
    let out = bin().arg("covers").arg(&path).output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "{}\n");
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn ideal_subcommand_renders_all_three_kinds() {
    let cover = run(&["ideal", "cover", "fixture:example_1_4.graph"]);
    assert_eq!(stdout(&cover), "(x1*x2*x3, x1*x2*x5, x2*x3*x4, x4*x5)\n");

    let edge = run(&["ideal", "edge", "fixture:example_1_4.graph"]);
    assert_eq!(stdout(&edge), "(x1*x4, x2*x4, x2*x5, x3*x5)\n");

    let assoc = run(&["ideal", "assoc", "fixture:example_1_4.graph", "--side", "r"]);
    assert_eq!(stdout(&assoc), "(x1*x2, x2*x3)\n");

    let assoc_left = run(&["ideal", "assoc", "fixture:example_1_4.graph", "--side", "l"]);
    assert_eq!(stdout(&assoc_left), "(x4, x5)\n");
}

#[test]
fn assoc_errors_on_an_isolated_generating_vertex() {
    let dir = tempdir();
    let path = dir.join("isolated.graph");
    std::fs::write(&path, "n 3\ne 1 2\n").unwrap();
    // canonical bipartition puts the isolated vertex 3 on the left side
    let out = bin().args(["ideal", "assoc", "--side", "l"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("isolated"), "{}", stderr(&out));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn betti_prints_the_fixture_table() {
    let out = run(&["betti", "fixture:example_1_4.graph"]);
    assert_eq!(
        stdout(&out),
        "0  00011  1\n0  01110  1\n0  11001  1\n0  11100  1\n\
         1  01111  1\n1  11011  1\n1  11101  1\n1  11110  1\n2  11111  1\n"
    );

    let graded = run(&["betti", "fixture:example_1_4.graph", "--graded"]);
    assert_eq!(stdout(&graded), "0  2  1\n0  3  3\n1  4  4\n2  5  1\n");

    let json = run(&["betti", "fixture:example_1_4_M.ideal", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(
        value,
        serde_json::json!({ "entries": [
            { "i": 0, "a": [0, 1, 1], "value": 1 },
            { "i": 0, "a": [1, 1, 0], "value": 1 },
            { "i": 1, "a": [1, 1, 1], "value": 1 },
        ]})
    );
}

#[test]
fn betti_accepts_inline_ideals_and_cross_checks_the_oracle() {
    let out = run(&["betti", "--ideal", "x1*x2, x2*x3 @ n=3", "--oracle"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0  011  1\n0  110  1\n1  111  1\n");

    // a prime field is accepted everywhere a field is
    let gf = run(&["betti", "--ideal", "x1*x2, x2*x3 @ n=3", "--field", "p:32003"]);
    assert_eq!(stdout(&gf), stdout(&out));
}

#[test]
fn verify_passing_claims_exit_zero() {
    for args in [
        vec!["verify", "cor1.2", "fixture:example_1_4.graph"],
        vec!["verify", "thm3.3", "fixture:example_1_4.graph", "--vertex", "4"],
        vec!["verify", "thm3.4", "fixture:example_1_4.graph", "--side", "r"],
        vec!["verify", "thm1.3", "fixture:example_1_4.graph"],
        vec!["verify", "prop2.2", "fixture:example_1_4.graph", "--set", "4,5"],
        vec!["verify", "lem3.2", "fixture:example_1_4.graph", "--set", "4,5"],
        vec!["verify", "leaf", "fixture:example_1_4.graph", "--vertex", "1"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stderr(&out));
        assert!(stdout(&out).contains("PASS"), "{args:?}: {}", stdout(&out));
    }
}

#[test]
fn verify_search_reports_the_pinned_counterexample() {
    let out = run(&["verify", "search", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("SPLIT FAIL at (i=1, j=5): lhs=0, rhs=1"), "{text}");
    assert!(text.contains("n=5 edges 1-5 2-4 3-4 3-5 4-5, v=3"), "{text}");

    // below the threshold the claim fails and the exit code says so
    let none = run(&["verify", "search", "--max-n", "4"]);
    assert_eq!(none.status.code(), Some(1));
    assert!(stdout(&none).contains("none found"), "{}", stdout(&none));
}

#[test]
fn verify_rejects_hypothesis_violations_as_usage_errors() {
    // not bipartite
    let out = run(&["verify", "cor1.2", "fixture:counterexample.graph"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not bipartite"), "{}", stderr(&out));

    // neighbourhood not independent
    let out = run(&["verify", "thm3.3", "fixture:counterexample.graph", "--vertex", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not independent"), "{}", stderr(&out));
}

#[test]
fn parse_errors_exit_two_with_line_numbers() {
    let dir = tempdir();
    let path = dir.join("broken.graph");
    std::fs::write(&path, "n 3\ne 1\n").unwrap();
    let out = bin().arg("covers").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn budget_errors_exit_three() {
    let out = run(&["betti", "--ideal", "x1 @ n=20"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("budget"), "{}", stderr(&out));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["betti", "fixture:example_1_4.graph", "--format", "json"],
        vec!["verify", "thm3.3", "fixture:example_1_4.graph", "--vertex", "4"],
        vec!["verify", "search", "--max-n", "5", "--format", "json"],
        vec!["covers", "fixture:example_1_4.graph"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");

        // worker count must not affect the result
        let mut single = args.clone();
        single.extend(["--workers", "1"]);
        assert_eq!(first.stdout, run(&single).stdout, "{single:?}");
    }
}

#[test]
fn timing_flag_is_the_only_source_of_nondeterminism() {
    let args = ["verify", "cor1.2", "fixture:example_1_4.graph", "--timing"];
    let out = run(&args);
    assert!(stdout(&out).contains("wall time"), "{}", stdout(&out));
    let plain = run(&["verify", "cor1.2", "fixture:example_1_4.graph"]);
    assert!(!stdout(&plain).contains("wall time"));
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("bettisplit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
