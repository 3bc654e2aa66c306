use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const QUADRATIC: &str = "k=2 n=3\nlabels: 0 1\ntable: 0 0 0 1 0 0 1 0\n";
const CONSTANT: &str = "k=2 n=3\nlabels: 0 1\ntable: 1 1 1 1 1 1 1 1\n";

fn minors(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minors")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = minors(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("minors-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path
}

fn multiplicities(deck: &Value) -> Vec<u64> {
    let mut m: Vec<u64> =
        deck["cards"].as_array().unwrap().iter().map(|c| c["multiplicity"].as_u64().unwrap()).collect();
    m.sort();
    m
}

#[test]
fn deck_of_quadratic_has_two_cards() {
    let f = temp_file("quadratic.txt", QUADRATIC);
    let d = json(&["deck", f.to_str().unwrap()]);
    assert_eq!(d["distinct"], 2);
    assert_eq!(multiplicities(&d), vec![1, 2]);
    assert_eq!(d["unique_minor"], false);
}

#[test]
fn deck_of_constant_has_one_card() {
    let f = temp_file("constant.txt", CONSTANT);
    let d = json(&["deck", f.to_str().unwrap()]);
    assert_eq!(d["distinct"], 1);
    assert_eq!(multiplicities(&d), vec![3]);
}

#[test]
fn gallery_cyclic_pipes_into_deck() {
    let g = json(&["gallery", "--name", "cyclic", "--k", "3"]);
    assert_eq!(g["passed"], true);
    let text = g["functions"][0]["function"].as_str().unwrap();
    let f = temp_file("cyclic3.txt", text);
    let d = json(&["deck", f.to_str().unwrap()]);
    assert_eq!(d["distinct"], 1);
    assert_eq!(d["unique_minor"], true);
}

#[test]
fn classify_reports_every_kind() {
    let f = temp_file("constant-classify.txt", CONSTANT);
    let c = json(&["classify", f.to_str().unwrap()]);
    let verdicts = c["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 6);
    // A constant is determined by any key.
    assert!(verdicts.iter().all(|v| v["member"] == true), "{c}");
    let q = temp_file("quadratic-classify.txt", QUADRATIC);
    let c = json(&["classify", q.to_str().unwrap(), "--kind", "totally-symmetric"]);
    assert_eq!(c["verdicts"][0]["member"], false);
}

#[test]
fn equiv_and_minor() {
    let q = temp_file("quadratic-equiv.txt", QUADRATIC);
    let c = temp_file("constant-equiv.txt", CONSTANT);
    let e = json(&["equiv", q.to_str().unwrap(), q.to_str().unwrap()]);
    assert_eq!(e["equivalent"], true);
    let e = json(&["equiv", q.to_str().unwrap(), c.to_str().unwrap()]);
    assert_eq!(e["equivalent"], false);
    let m = json(&["minor", q.to_str().unwrap()]);
    assert_eq!(m["minors"].as_array().unwrap().len(), 3);
    let m = json(&["minor", q.to_str().unwrap(), "--couple", "1,2"]);
    assert_eq!(m["minors"][0]["couple"], serde_json::json!([1, 2]));
}

#[test]
fn equalizing_verdicts_with_oracle() {
    for (n, k, want) in [("3", "2", true), ("4", "3", false), ("6", "4", true)] {
        let v = json(&["equalizing", n, k, "--oracle"]);
        assert_eq!(v["equalizing"], want, "({n},{k})");
        assert_eq!(v["agree"], true);
    }
}

#[test]
fn k_equalizing_worked_example() {
    let v = json(&["k-equalizing", "3,1,5,2,6,4", "4", "--oracle", "--rules"]);
    assert_eq!(v["u_size"], 8);
    assert_eq!(v["delta_size"], 20);
    assert_eq!(v["group_size"], 24);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["agree"], true);
    let theta = json(&["k-equalizing", "1,3,2,5,4", "4"]);
    assert_eq!(theta["verdict"], false);
}

#[test]
fn recon_sweep_writes_report() {
    let dir = std::env::temp_dir().join(format!("minors-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sweep.json");
    let v = json(&["recon", "sweep", "--k", "2", "--n", "3", "--labels", "2",
        "--report", path.to_str().unwrap()]);
    assert_eq!(v["functions"], "256");
    let written: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written, v);
}

#[test]
fn budget_is_enforced() {
    let out = minors(&["recon", "sweep", "--k", "2", "--n", "4", "--labels", "2", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let v = json(&["verify", "worked-example"]);
    assert_eq!(v["passed"], true);
    assert!(v["reports"][0].get("elapsed_ms").is_none());
    let v = json(&["verify", "gallery"]);
    assert_eq!(v["passed"], true);
    let out = minors(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = ["verify", "properties", "--cases", "20", "--seed", "7", "--json"];
    let a = minors(&args);
    let b = minors(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let a = minors(&["--threads", "1", "recon", "sweep", "--k", "2", "--n", "3", "--labels", "2", "--json"]);
    let b = minors(&["recon", "sweep", "--k", "2", "--n", "3", "--labels", "2", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn malformed_file_fails() {
    let f = temp_file("bad.txt", "k=2 n=3\nlabels: 0 1\ntable: 0 1\n");
    let out = minors(&["deck", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}
