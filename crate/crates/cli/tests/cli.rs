//! End-to-end tests of the command-line interface: exit codes, output
//! determinism, and the normalization fixed point.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hypercr"))
}

fn write_instance(dir: &tempfile::TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, body).expect("write test instance");
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn hypercr")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn cr_reports_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let two_edge = write_instance(
        &dir,
        "two_edge.json",
        r#"{"type":"hypergraph","n":3,"edges":[[1,2],[1,2,3]]}"#,
    );
    let path = write_instance(
        &dir,
        "path.json",
        r#"{"type":"hypergraph","n":3,"edges":[[1,2],[2,3]]}"#,
    );

    let same = run(&["cr", two_edge.to_str().unwrap(), two_edge.to_str().unwrap()]);
    assert_eq!(same.status.code(), Some(0));
    assert_eq!(stdout(&same), "{\"distinguished\":false}\n");

    let diff = run(&["cr", two_edge.to_str().unwrap(), path.to_str().unwrap()]);
    assert_eq!(diff.status.code(), Some(0));
    assert_eq!(stdout(&diff), "{\"distinguished\":true,\"round\":1}\n");
}

#[test]
fn hom_counts_species() {
    let dir = tempfile::tempdir().unwrap();
    let b1 = write_instance(&dir, "b1.json", r#"{"type":"hypergraph","n":1,"edges":[[1]]}"#);
    let two_edge = write_instance(
        &dir,
        "two_edge.json",
        r#"{"type":"hypergraph","n":3,"edges":[[1,2],[1,2,3]]}"#,
    );

    let output = run(&["hom", "--kind", "inhom", b1.to_str().unwrap(), two_edge.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "5\n");

    let aut = run(&["hom", "--kind", "aut", two_edge.to_str().unwrap()]);
    assert_eq!(aut.status.code(), Some(0));
    assert_eq!(stdout(&aut), "2\n");
}

#[test]
fn hom_counts_colored_graph_homomorphisms() {
    let dir = tempfile::tempdir().unwrap();
    let dot = write_instance(
        &dir,
        "dot.json",
        r#"{"type":"cgraph","n":1,"colors":[1],"edges":[]}"#,
    );
    let inc = write_instance(
        &dir,
        "inc.json",
        r#"{"type":"cgraph","n":5,"colors":[1,1,1,2,2],"edges":[[1,4],[2,4],[1,5],[2,5],[3,5]]}"#,
    );
    let output = run(&["hom", "--kind", "hom", dot.to_str().unwrap(), inc.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "3\n");

    // Colored graphs only support plain homomorphism counting.
    let bad = run(&["hom", "--kind", "inhom", dot.to_str().unwrap(), inc.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_instance(&dir, "bad.json", r#"{"type":"hypergraph","n":2,"edges":[[]]}"#);
    let output = run(&["hom", "--kind", "aut", bad.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));

    let missing = run(&["cr", "/nonexistent.json", "/nonexistent.json"]);
    assert_eq!(missing.status.code(), Some(2));

    let usage = run(&["hom", "--kind", "nonsense", "x.json"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn failed_check_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let two_edge = write_instance(
        &dir,
        "two_edge.json",
        r#"{"type":"hypergraph","n":3,"edges":[[1,2],[1,2,3]]}"#,
    );
    let path = write_instance(
        &dir,
        "path.json",
        r#"{"type":"hypergraph","n":3,"edges":[[1,2],[2,3]]}"#,
    );
    // A distinguished pair with no witness inside a tiny budget: reported as
    // budget exhaustion, exit code 1.
    let output = run(&[
        "verify",
        "--check",
        "hom-equivalence",
        "--budget",
        "2",
        two_edge.to_str().unwrap(),
        path.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn named_checks_pass_on_valid_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let b2 = write_instance(&dir, "b2.json", r#"{"type":"hypergraph","n":2,"edges":[[1,2]]}"#);
    let two_edge = write_instance(
        &dir,
        "two_edge.json",
        r#"{"type":"hypergraph","n":3,"edges":[[1,2],[1,2,3]]}"#,
    );
    for check in ["decomposition-inhom", "decomposition-hom", "decomposition-loinj"] {
        let output = run(&[
            "verify",
            "--check",
            check,
            b2.to_str().unwrap(),
            two_edge.to_str().unwrap(),
        ]);
        assert_eq!(output.status.code(), Some(0), "{check} failed");
        assert!(stdout(&output).contains("\"ok\":true"));
    }
}

#[test]
fn fmt_normalization_is_a_fixed_point() {
    let dir = tempfile::tempdir().unwrap();
    let messy = write_instance(
        &dir,
        "messy.json",
        r#"{"type":"hypergraph","n":3,"edges":[[2,1],[3,2,1]]}"#,
    );
    let first = run(&["fmt", messy.to_str().unwrap()]);
    assert_eq!(first.status.code(), Some(0));
    let normalized = write_instance(&dir, "normalized.json", &stdout(&first));
    let second = run(&["fmt", normalized.to_str().unwrap()]);
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn enumeration_output_is_deterministic() {
    let args = ["enumerate", "--family", "ba", "--max-weight", "5"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(!stdout(&a).is_empty());
}

#[test]
fn dag_tools_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let tournament = run(&["dag", "tournament", "3"]);
    assert_eq!(
        stdout(&tournament),
        "{\"type\":\"digraph\",\"n\":3,\"arcs\":[[1,2],[1,3],[2,3]]}\n"
    );
    let t3 = write_instance(&dir, "t3.json", stdout(&tournament).trim());
    let loop1 = write_instance(&dir, "loop.json", r#"{"type":"digraph","n":1,"arcs":[[1,1]]}"#);

    let product = run(&["dag", "tensor", t3.to_str().unwrap(), loop1.to_str().unwrap()]);
    assert_eq!(product.status.code(), Some(0));

    let hom = run(&["dag", "hom", t3.to_str().unwrap(), t3.to_str().unwrap()]);
    assert_eq!(hom.status.code(), Some(0));

    let arc = write_instance(&dir, "arc.json", r#"{"type":"digraph","n":2,"arcs":[[1,2]]}"#);
    let two = write_instance(&dir, "two.json", r#"{"type":"digraph","n":2,"arcs":[]}"#);
    let sep = run(&["dag", "a3-distinguish", arc.to_str().unwrap(), two.to_str().unwrap()]);
    assert_eq!(sep.status.code(), Some(0));
    assert!(stdout(&sep).contains("\"witness\":{"));
}
