use std::process::{Command, Output};

use serde_json::Value;

fn propeller(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_propeller")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

const TUPLE_5: [&str; 8] = ["--n", "5", "--b", "1", "--c", "2", "--d", "2"];

#[test]
fn gen_graph6() {
    let o = propeller(&[&["gen"][..], &TUPLE_5, &["--format", "graph6"]].concat());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "NhfB@_Wa?H?Q@Q?j?Io");
}

#[test]
fn gen_other_formats() {
    let o = propeller(&[&["gen"][..], &TUPLE_5, &["--format", "json"]].concat());
    assert_eq!(json(&o)["vertexCount"], 15);
    let o = propeller(&[&["gen"][..], &TUPLE_5, &["--format", "dot"]].concat());
    assert!(stdout(&o).starts_with("graph {"));

    let path = std::env::temp_dir().join(format!("propeller-gen-{}.g6", std::process::id()));
    let o = propeller(&[&["gen"][..], &TUPLE_5, &["--out", path.to_str().unwrap()]].concat());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap().trim(), "NhfB@_Wa?H?Q@Q?j?Io");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn classify_reports_both_families() {
    let o = propeller(&["classify", "--n", "10", "--b", "6", "--c", "2", "--d", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["families"], serde_json::json!(["F2", "F4"]));
    assert_eq!(v["edgeTransitive"], true);
    assert!(v.get("witness").is_none());
}

#[test]
fn invariants_json() {
    let o = propeller(&["invariants", "--n", "13", "--b", "5", "--c", "2", "--d", "3"]);
    let v = json(&o);
    assert_eq!(v["girth"], 5);
    assert_eq!(v["perEdge"]["AWing"]["n6"], 8);
    assert_eq!(v["predictedN6"][0], 8);
    assert_eq!(v["group"]["order"], "26");
    assert_eq!(v["edgeTransitive"], false);
}

#[test]
fn check_aut_exit_codes() {
    let ok = propeller(&["check-aut", "--n", "10", "--b", "6", "--c", "2", "--d", "3", "--name", "Sigma2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["imageOfA0A1"], serde_json::json!(["A0", "B0"]));

    let rejected = propeller(&["check-aut", "--n", "12", "--b", "10", "--c", "2", "--d", "11", "--name", "Sigma1Star"]);
    assert_eq!(rejected.status.code(), Some(1));
    assert_eq!(json(&rejected)["automorphism"], false);

    let bad_helper = propeller(&[
        "check-aut", "--n", "12", "--b", "10", "--c", "2", "--d", "11", "--name", "Sigma1Star", "--helper", "1",
    ]);
    assert_eq!(bad_helper.status.code(), Some(1));
    assert!(json(&bad_helper)["reason"].as_str().unwrap().contains("constraint"));
}

#[test]
fn isomorphic_targets() {
    let o = propeller(&["isomorphic", "--n", "4", "--b", "2", "--c", "2", "--d", "1", "--to", "wreath:6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["isomorphic"], true);
    let o = propeller(&["isomorphic", "--n", "10", "--b", "6", "--c", "2", "--d", "3", "--to", "gpr:10,2,3,1,4"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["isomorphic"], false);
    let o = propeller(&["isomorphic", "--n", "5", "--b", "1", "--c", "2", "--d", "2", "--to", "pr:5,4,3,2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = propeller(&["isomorphic", "--n", "5", "--b", "1", "--c", "2", "--d", "2", "--to", "cube:3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn census_is_deterministic_across_jobs() {
    let a = propeller(&["census", "--min-n", "3", "--max-n", "11", "--jobs", "1"]);
    let b = propeller(&["census", "--min-n", "3", "--max-n", "11", "--jobs", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("n,b,c,d,girth,perEdgeN6,edgeTransitive,families,canonicalTuple\n"));
    assert!(String::from_utf8_lossy(&a.stderr).contains("records: "));
}

#[test]
fn census_filters_and_file_output() {
    let path = std::env::temp_dir().join(format!("propeller-census-{}.csv", std::process::id()));
    let o = propeller(&[
        "census", "--min-n", "3", "--max-n", "24", "--girth", "3", "--dedupe", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("girth 3:"));
    let csv = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(path).unwrap();
    let et: Vec<&str> = csv.lines().skip(1).filter(|l| l.contains(",true,")).collect();
    assert!(et.iter().all(|l| l.split(',').nth(4) == Some("3")));
    assert!(et.iter().any(|l| l.starts_with("24,")));
}

#[test]
fn verify_tables() {
    let o = propeller(&["verify", "--table", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("28 checks, 0 failed"));
    let o = propeller(&["verify", "--table", "identities", "--max-n", "48", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o)["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    let o = propeller(&["verify", "--table", "nonsurjective"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(propeller(&[]).status.code(), Some(2));
    assert_eq!(propeller(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(propeller(&["gen", "--n", "6", "--b", "1", "--c", "1", "--d", "3"]).status.code(), Some(2));
    assert_eq!(propeller(&["gen", "--n", "6"]).status.code(), Some(2));
    assert_eq!(propeller(&["census", "--max-n", "31"]).status.code(), Some(2));
    assert_eq!(propeller(&["census", "--min-n", "9", "--max-n", "5"]).status.code(), Some(2));
    assert_eq!(propeller(&["verify", "--table", "7"]).status.code(), Some(2));
    let o = propeller(&["check-aut", "--n", "5", "--b", "1", "--c", "2", "--d", "2", "--name", "Omega"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(propeller(&["--help"]).status.code(), Some(0));
}
