//! End-to-end runs of the `jp` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use judicious::degseq::DegreeSequence;
use judicious::graph::{bisection_slack, parity_bisection};
use judicious::io::{parse_graph, PartitionRecord};
use judicious::multipartite::{complete_multipartite, MultipartiteSpec};
use serde_json::Value;
use tempfile::TempDir;

fn jp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jp"))
        .args(args)
        .env_remove("JP_THREADS")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_owned()
}

fn write(p: &str, text: &str) {
    fs::write(Path::new(p), text).unwrap();
}

#[test]
fn realize_then_verify_round_trips() {
    let dir = TempDir::new().unwrap();
    let seq = path(&dir, "seq.txt");
    let graph = path(&dir, "g.txt");
    let cert = path(&dir, "cert.json");
    write(&seq, "3 3\n7 7 7\n3 3 3\n");
    let o = jp(&["hs", "realize", &seq, "-o", &graph, "--cert", &cert]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("reordered"));

    let g = parse_graph(&fs::read_to_string(&graph).unwrap()).unwrap();
    assert_eq!(g.degrees(), DegreeSequence::new(vec![7, 7, 7, 3, 3, 3, 3, 3]).unwrap().values());
    let c: Value = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();
    let slacks: Vec<i64> = serde_json::from_value(c["slacks"].clone()).unwrap();
    assert_eq!(slacks, bisection_slack(&g, &parity_bisection(&g)));
    assert_eq!(c["ok"], Value::Bool(true));

    assert_eq!(code(&jp(&["hs", "verify", &graph, "--cert", &cert])), 0);
}

#[test]
fn realize_to_stdout_is_a_parseable_graph_file() {
    let dir = TempDir::new().unwrap();
    let seq = path(&dir, "seq.txt");
    write(&seq, "2 2 2 2 2");
    let o = jp(&["hs", "realize", &seq]);
    assert_eq!(code(&o), 0);
    let g = parse_graph(&stdout(&o)).unwrap();
    assert_eq!(g.degrees(), vec![2; 5]);
    assert!(stdout(&o).contains("# certificate: "));
}

#[test]
fn corrupted_certificate_is_an_invariant_breach() {
    let dir = TempDir::new().unwrap();
    let seq = path(&dir, "seq.txt");
    let graph = path(&dir, "g.txt");
    let cert = path(&dir, "cert.json");
    write(&seq, "7 7 7 3 3 3 3 3");
    assert_eq!(code(&jp(&["hs", "realize", &seq, "-o", &graph, "--cert", &cert])), 0);
    let mut c: Value = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();
    c["slacks"][0] = Value::from(-1);
    write(&cert, &c.to_string());
    assert_eq!(code(&jp(&["hs", "verify", &graph, "--cert", &cert])), 3);

    // A graph whose parity bisection is not good, paired with a cert claiming it is.
    let bad = path(&dir, "bad.txt");
    write(&bad, "5 2\n0 2\n2 4\n");
    write(&cert, r#"{"slacks":[0,1,0,1,0],"ok":true}"#);
    assert_eq!(code(&jp(&["hs", "verify", &bad, "--cert", &cert])), 3);
    assert_eq!(code(&jp(&["hs", "verify", &bad])), 1);
}

#[test]
fn non_graphic_sequence_is_a_negative_verdict() {
    let dir = TempDir::new().unwrap();
    let seq = path(&dir, "seq.txt");
    write(&seq, "3 3 1 1");
    assert_eq!(code(&jp(&["degseq", "check", &seq])), 1);
    assert_eq!(code(&jp(&["hs", "realize", &seq])), 1);
    write(&seq, "3 3 2 2 2");
    assert_eq!(code(&jp(&["degseq", "check", &seq])), 0);
}

#[test]
fn multipartite_verdicts() {
    let o = jp(&["mp", "good", "3", "5", "11"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.starts_with("none"));
    assert!(out.contains("no good bisection (confirmed)"));
    assert_eq!(code(&jp(&["mp", "good", "3", "5", "7"])), 0);

    let o = jp(&["mp", "bisect", "3", "5", "11"]);
    assert_eq!(code(&o), 1);
    let rec: PartitionRecord = serde_json::from_str(&stdout(&o)).unwrap();
    let g = complete_multipartite(&MultipartiteSpec::new(vec![3, 5, 11]).unwrap());
    assert!(rec.to_bipartition(&g).unwrap().is_balanced());

    let o = jp(&["mp", "bisect", "2", "3", "5"]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&jp(&["mp", "minus-edge", "--between", "0", "2", "7", "9", "11"])), 1);
}

#[test]
fn counterexample_verification_output() {
    let o = jp(&["cx", "verify", "-i", "0"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "enumerated: 155 ≥ 154.875");

    let o = jp(&["--format", "json", "cx", "verify", "-i", "0"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["bound"], "1239/8");
    assert_eq!(v["value"], "155");

    let o = jp(&["--format", "json", "cx", "pairs", "-n", "2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, serde_json::json!([["36", "21"], ["133", "77"]]));
}

#[test]
fn triple_clique_graph_round_trips() {
    let dir = TempDir::new().unwrap();
    let graph = path(&dir, "g.txt");
    assert_eq!(code(&jp(&["cx", "graph", "-t", "5", "-o", &graph])), 0);
    let g = parse_graph(&fs::read_to_string(&graph).unwrap()).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (15, 30));
    assert_eq!(code(&jp(&["cx", "graph", "-t", "4"])), 2);
}

#[test]
fn norms_and_judicious_partitions() {
    let dir = TempDir::new().unwrap();
    let graph = path(&dir, "k5.txt");
    let edges: Vec<String> = (0..5).flat_map(|u| (u + 1..5).map(move |v| format!("{u} {v}"))).collect();
    write(&graph, &format!("5 10\n{}\n", edges.join("\n")));

    let o = jp(&["--format", "json", "norm", "min", &graph, "--lambda", "2"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], "10");
    assert_eq!(v["vs_bound"], "equal");

    let o = jp(&["--format", "json", "judicious", &graph]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rec: PartitionRecord = serde_json::from_value(v["partition"].clone()).unwrap();
    let g = parse_graph(&fs::read_to_string(&graph).unwrap()).unwrap();
    rec.to_bipartition(&g).unwrap();
    assert!(rec.cut >= v["min_cut"].as_u64().unwrap());

    let o = jp(&["--format", "json", "norm", "min", &graph, "--lambda", "2", "--k", "3"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], "2");
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(code(&jp(&["no-such-command"])), 2);
    assert_eq!(code(&jp(&["mp", "good"])), 2);
    assert_eq!(code(&jp(&["hs", "verify", "/nonexistent/graph.txt"])), 2);
    assert_eq!(code(&jp(&["norm", "bound", "-m", "2", "--lambda", "3/2"])), 2);
    let dir = TempDir::new().unwrap();
    let graph = path(&dir, "g.txt");
    write(&graph, "3 2\n0 1\n1 1\n");
    assert_eq!(code(&jp(&["judicious", &graph])), 2);
}

#[test]
fn thread_count_is_accepted() {
    assert_eq!(code(&jp(&["--threads", "1", "cx", "verify", "-i", "0"])), 0);
}
