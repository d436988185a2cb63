use std::process::{Command, Output};

use serde_json::Value;

fn isolab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isolab"))
        .args(args)
        .env_remove("ISOLAB_GRAPH6")
        .env_remove("ISOLAB_CORPUS")
        .env_remove("ISOLAB_JSON")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = isolab(&all);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    });
    assert_eq!(doc["schema"], "isolab/1");
    (out.status.code().unwrap(), doc)
}

#[test]
fn bounds_on_petersen() {
    let (code, doc) = json(&["--corpus", "Petersen", "bounds"]);
    assert_eq!(code, 0);
    assert_eq!(doc["status"], "ok");
    let r = &doc["result"];
    assert_eq!(r["i"]["value"]["exact"], "1/1");
    assert_eq!(r["tight"]["mohar_lower"], true);
    assert!((r["mohar_upper"]["approx"].as_f64().unwrap() - 8f64.sqrt()).abs() < 1e-9);
}

#[test]
fn graph6_input_and_text_mode() {
    // C5
    let out = isolab(&["-g", "Dhc", "exact", "--param", "all"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("h:\n  value: 1/2\n"), "{text}");
}

#[test]
fn size_restricted_cut() {
    // Q3 (hypercube): the best 3-set is a path, 5 boundary edges.
    let (code, doc) = json(&["-g", "Gr`HOk", "exact", "--size", "3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["i_m"]["value"]["exact"], "5/3");
    let (code, _) = json(&["-g", "Gr`HOk", "exact", "--param", "h", "--size", "3"]);
    assert_eq!(code, 1);
}

#[test]
fn env_override_supplies_the_graph() {
    let out = Command::new(env!("CARGO_BIN_EXE_isolab"))
        .args(["--json", "exact"])
        .env("ISOLAB_CORPUS", "Heawood graph")
        .output()
        .unwrap();
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["result"]["i"]["value"]["exact"], "1/1");
}

#[test]
fn input_errors_exit_one() {
    let (code, doc) = json(&["-g", "bad!", "bounds"]);
    assert_eq!(code, 1);
    assert_eq!(doc["status"], "error");
    assert_eq!(doc["error"]["kind"], "input");
    assert!(doc["error"]["message"].as_str().unwrap().contains("byte 3"));

    let (code, doc) = json(&["bounds"]);
    assert_eq!(code, 1);
    assert!(doc["error"]["message"].as_str().unwrap().contains("no input graph"));

    let (code, _) = json(&["-g", "Dhc", "--corpus", "Petersen", "bounds"]);
    assert_eq!(code, 1);

    let (code, doc) = json(&["--corpus", "No Such Graph", "bounds"]);
    assert_eq!(code, 1);
    assert!(doc["error"]["message"].as_str().unwrap().contains("No Such Graph"));
}

#[test]
fn family_eval_and_domain_errors() {
    let out = isolab(&["family", "--eval", "hamming", "2", "3"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().last(), Some("value: 2"));

    let (code, doc) = json(&["family", "--eval", "cycle", "10"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["value"]["exact"], "2/5");

    let (code, doc) = json(&["family", "--eval", "symplectic", "2", "4"]);
    assert_eq!(code, 1);
    assert_eq!(doc["error"]["kind"], "domain");

    let (code, doc) = json(&["family", "--eval", "nonsense", "3"]);
    assert_eq!(code, 1);
    assert_eq!(doc["error"]["kind"], "input");
}

#[test]
fn family_verify_and_list() {
    let (code, doc) = json(&["family", "--verify", "complete_bipartite", "3", "4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["status"], "agrees");
    assert_eq!(doc["result"]["exhaustive"]["exact"], "2/1");

    let (_, doc) = json(&["family", "--list"]);
    let rows = doc["result"]["families"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["tag"] == "hypercube"));
}

#[test]
fn drg_array_and_graph() {
    let (code, doc) = json(&["drg", "--array", "3,2;1,1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["n"], 10);
    assert_eq!(doc["result"]["sparsity_lower"]["exact"], "1/5");

    let (code, doc) = json(&["--corpus", "Petersen", "drg"]);
    assert_eq!(code, 0);
    let r = &doc["result"];
    assert_eq!(r["lemma_holds"], true);
    assert_eq!(r["dual"]["psi"]["exact"], r["primal"]["value"]["exact"]);

    let (code, doc) = json(&["--corpus", "Frucht graph", "drg"]);
    assert_eq!(code, 1);
    assert_eq!(doc["error"]["kind"], "precondition");

    let (code, _) = json(&["drg", "--array", "3,2;1"]);
    assert_eq!(code, 1);
}

#[test]
fn power_matches_closed_form() {
    let (code, doc) = json(&["--corpus", "Heawood graph", "power", "--exact"]);
    assert_eq!(code, 0);
    let r = &doc["result"];
    let closed = r["closed_lower"]["value"]["approx"].as_f64().unwrap();
    let lp = r["lp_lower"]["bound"]["value"]["approx"].as_f64().unwrap();
    assert!((closed - lp).abs() < 1e-6);
    assert_eq!(r["i_power"]["value"]["exact"], "3/1");
}

#[test]
fn tables_subset() {
    let (code, doc) = json(&["tables", "A1", "--only", "Desargues"]);
    assert_eq!(code, 0);
    let rows = doc["result"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert!(rows[0]["cells"].as_array().unwrap().iter().all(|c| c["status"] == "match"));

    let (code, _) = json(&["tables", "A9"]);
    assert_eq!(code, 1);
}

#[test]
fn time_limit_gives_partial() {
    let (code, doc) = json(&["--corpus", "Sylvester Graph", "--budget", "0", "exact"]);
    assert_eq!(code, 2);
    assert_eq!(doc["status"], "partial");
    assert_eq!(doc["result"]["i"]["certified"], false);
}

#[test]
fn split_is_seeded() {
    let args = ["--seed", "7", "split", "--k", "4", "--trials", "5"];
    let (code, a) = json(&args);
    assert_eq!(code, 0);
    let (_, b) = json(&args);
    assert_eq!(a, b);
    assert_eq!(a["result"]["mode"], "exact");
    assert_eq!(a["result"]["records"].as_array().unwrap().len(), 5);
}
