use std::io::Write;
use std::process::{Command, Stdio};

use betti_cli::{run, CommandResult, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};
use betti_core::census::enumerate_graphs;
use betti_core::graph::{generators, to_edge_list, to_graph6};
use betti_core::{is_chordal, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn cli(args: &[&str]) -> CommandResult {
    run(std::iter::once("betti").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let r = cli(&full);
    (
        r.exit_code,
        r.json.expect("--json always yields a document"),
    )
}

fn graph_file(g: &Graph) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(to_edge_list(g).as_bytes()).unwrap();
    f
}

fn ints(v: &Value) -> Vec<i64> {
    serde_json::from_value(v.clone()).unwrap()
}

#[test]
fn from_omega_worked_example() {
    let r = cli(&["from-omega", "7,11,6,1,0"]);
    assert_eq!(r.exit_code, EXIT_OK);
    assert!(r.report.starts_with("sequence: IIDID\n"), "{}", r.report);
    assert!(r
        .report
        .contains("[7,11,6,1,0] -D-> [7,11,6,1] -I-> [3,2,0]"));
}

#[test]
fn from_omega_rejects_unrealizable() {
    let r = cli(&["from-omega", "1,1"]);
    assert_eq!(r.exit_code, EXIT_DOMAIN);
    let (code, doc) = json(&["from-omega", "1,1"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert_eq!(doc["error"], "NotRealizable");
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(cli(&["frobnicate"]).exit_code, EXIT_USAGE);
    assert_eq!(cli(&["from-omega", "1,x"]).exit_code, EXIT_USAGE);
    assert_eq!(
        cli(&["betti", "/nonexistent/graph.txt"]).exit_code,
        EXIT_USAGE
    );
    assert_eq!(cli(&["census", "--max", "12"]).exit_code, EXIT_USAGE);
    assert_eq!(cli(&["--help"]).exit_code, EXIT_OK);
}

#[test]
fn betti_reports_diagram_and_verdict() {
    let f = graph_file(&generators::cycle(4).unwrap());
    let path = f.path().to_str().unwrap();
    let r = cli(&["betti", path]);
    assert_eq!(r.exit_code, EXIT_OK);
    assert!(r.report.contains("1 . . .\n. 2 0 0\n"), "{}", r.report);
    assert!(r.report.contains("verdict: not chordal"));
    let (_, doc) = json(&["betti", path]);
    assert_eq!(ints(&doc["omega"]), [2, 0, 0]);
    assert_eq!(doc["beta00"], 1);
    assert_eq!(doc["c"], serde_json::json!(["2", "0", "0"]));
    assert_eq!(doc["certificate"], "wrong-sum");
    assert_eq!(doc["chordal"], false);
}

#[test]
fn threshold_rep_requires_chordal_input() {
    let f = graph_file(&generators::cycle(5).unwrap());
    let r = cli(&["threshold-rep", f.path().to_str().unwrap()]);
    assert_eq!(r.exit_code, EXIT_DOMAIN);
}

/// Feeding the ω that `betti` prints into `from-omega` yields the same
/// threshold graph that `threshold-rep` finds.
#[test]
fn betti_round_trips_through_from_omega() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut graphs: Vec<Graph> = enumerate_graphs(6)
        .unwrap()
        .into_iter()
        .map(|c| c.graph())
        .filter(is_chordal)
        .collect();
    for _ in 0..20 {
        let k = rng.gen_range(2..=12);
        let code: Vec<usize> = (0..k - 2).map(|_| rng.gen_range(1..=k)).collect();
        graphs.push(generators::tree_from_prufer(&code).unwrap());
    }
    for g in graphs {
        let f = graph_file(&g);
        let path = f.path().to_str().unwrap();
        let (code, doc) = json(&["betti", path]);
        assert_eq!(code, EXIT_OK);
        let omega = ints(&doc["omega"])
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",");
        let (_, rep) = json(&["threshold-rep", path]);
        if omega.is_empty() {
            assert_eq!(rep["sequence"], "");
            continue;
        }
        let (code, inv) = json(&["from-omega", &omega]);
        assert_eq!(code, EXIT_OK, "{omega}");
        assert_eq!(inv["sequence"], rep["sequence"]);
        assert_eq!(inv["edges"], rep["edges"]);
    }
}

#[test]
fn decompose_flags_inadmissible() {
    let (code, doc) = json(&["decompose", "3,2,0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc["c"], serde_json::json!(["0", "1", "0"]));
    assert_eq!(doc["lambda"], "1,2,0");
    let (code, doc) = json(&["decompose", "1,1"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert_eq!(doc["c"], serde_json::json!(["-1/2", "1/2"]));
    assert_eq!(doc["nonneg"], false);
    let (code, doc) = json(&["decompose", "6,8,3,0", "--m", "2"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert_eq!(doc["sums_to_m"], false);
}

#[test]
fn module_decompose_resums() {
    let (code, doc) = json(&["module-decompose", "14,22,12,2,0", "2"]);
    assert_eq!(code, EXIT_OK);
    let summands = doc["summands"].as_array().unwrap();
    assert_eq!(summands.len(), 2);
    let mut total = vec![0; 5];
    for s in summands {
        for (t, x) in total.iter_mut().zip(ints(&s["omega"])) {
            *t += x;
        }
        assert!(s["sequence"].as_str().unwrap().contains('I'));
    }
    assert_eq!(total, [14, 22, 12, 2, 0]);
    assert_eq!(
        cli(&["module-decompose", "1,1", "1"]).exit_code,
        EXIT_DOMAIN
    );
}

#[test]
fn alhc_both_directions() {
    let (_, fwd) = json(&["alhc", "7,11,6,1,0"]);
    assert_eq!(fwd["lambda"], "1,2,3,1,0");
    assert_eq!(fwd["lattice_point"], true);
    let (_, inv) = json(&["alhc", "--inverse", "1,2,3,1,0"]);
    assert_eq!(ints(&inv["omega"]), [7, 11, 6, 1, 0]);
    let (_, bad) = json(&["alhc", "--inverse", "1,3"]);
    assert_eq!(bad["alhc"], false);
}

#[test]
fn pure_diagram_entries() {
    let (_, doc) = json(&["pure", "0,2,3,4"]);
    let values: Vec<String> = doc["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["value"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(values, ["1", "6", "8", "3"]);
    assert_eq!(cli(&["pure", "0,3,2"]).exit_code, EXIT_USAGE);
}

#[test]
fn census_csv_and_json() {
    let r = cli(&["census", "--max", "5", "--csv"]);
    assert_eq!(
        r.report,
        "vertices,chordal,false_chordal,not_chordal\n1,1,0,0\n2,2,0,0\n3,4,0,0\n4,10,0,1\n5,27,0,7\n"
    );
    let (_, doc) = json(&["census", "--max", "4"]);
    assert_eq!(doc["rows"][3]["not_chordal"], 1);
}

#[test]
fn polytope_reports() {
    let (code, doc) = json(&["polytope", "ehrhart", "4", "3"]);
    assert_eq!((code, doc["count"].as_u64()), (EXIT_OK, Some(175)));
    let (code, doc) = json(&["polytope", "normal", "3", "3"]);
    assert_eq!((code, doc["pass"].as_bool()), (EXIT_OK, Some(true)));
    let (code, doc) = json(&["polytope", "reflexive", "3", "--matrices"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(ints(&doc["expected_diagonal"]), [1, 5]);
    let d = &doc["discrepancies"][0];
    assert_eq!(
        (d["row"].as_u64(), d["column"].as_u64()),
        (Some(2), Some(3))
    );
    assert_eq!(
        (d["solved"].as_str(), d["closed_form"].as_str()),
        (Some("1"), Some("2"))
    );
    assert_eq!(doc["solved_dual"].as_array().unwrap().len(), 2);
    let text = cli(&["polytope", "reflexive", "3"]).report;
    assert!(text.contains("DISCREPANCY"), "{text}");
}

#[test]
fn binary_reads_graph6_from_stdin() {
    let g = generators::path(4).unwrap();
    let mut child = Command::new(env!("CARGO_BIN_EXE_betti"))
        .args(["--graph6", "--json", "betti", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    writeln!(child.stdin.take().unwrap(), "{}", to_graph6(&g)).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(ints(&doc["omega"]), [3, 2, 0]);
}

#[test]
fn binary_exit_codes() {
    let status = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_betti"))
            .args(args)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(status(&["from-omega", "3,2,0"]), Some(0));
    assert_eq!(status(&["from-omega", "1,1"]), Some(1));
    assert_eq!(status(&["from-omega"]), Some(2));
}
