use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn kspectra(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kspectra"))
        .args(args)
        .env_remove("KSPECTRA_JOBS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn construct_hstar() {
    // K_2 ∨ (K_3 ∪ 3K_1): clique {0,1,2}, independent {3,4,5}, join {6,7}.
    let o = kspectra(&["construct", "--family", "hstar", "--n", "8", "--k", "2", "--t", "2"], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "Gw?F~{\n");
}

#[test]
fn oracle_on_k5() {
    let o = kspectra(&["oracle"], "D~{\n");
    assert!(o.status.success());
    let rec = &json_lines(&o)[0];
    assert_eq!(rec["min_max_degree"], 2);
    assert_eq!(rec["min_leaves"], 2);
    assert_eq!(rec["hamilton_path"], true);
}

#[test]
fn check_below_least_order() {
    let g = stdout(&kspectra(&["construct", "--family", "hstar", "--n", "15", "--k", "2", "--t", "1"], ""));
    let o = kspectra(&["check", "--theorem", "cor-hampath-comp", "--k", "2", "--t", "1"], &g);
    assert!(o.status.success());
    let rec = &json_lines(&o)[0];
    assert_eq!(rec["conclusion"], "PreconditionFailed");
    let order = rec["preconditions"].as_array().unwrap().iter().find(|p| p["name"] == "order").unwrap();
    assert_eq!(order["pass"], false);
    assert_eq!(order["required"], "n ≥ 16");
    assert_eq!(rec["tolerance"], 1e-10);
    assert_eq!(rec["decision_margin"], 1e-7);
}

#[test]
fn one_record_per_input_graph() {
    let o = kspectra(&["spectra"], ">>graph6<<D~{\n\nCF\nA_\n");
    assert!(o.status.success());
    let recs = json_lines(&o);
    assert_eq!(recs.len(), 3);
    assert!((recs[0]["rho"].as_f64().unwrap() - 4.0).abs() < 1e-9);
    assert!((recs[2]["q"].as_f64().unwrap() - 2.0).abs() < 1e-9);
}

#[test]
fn closure_of_c5() {
    // C_5 has degree sum 4 on every nonadjacent pair, so its 4-closure is K_5.
    let c5 = "Dhc";
    let o = kspectra(&["closure", "--graph6", c5, "--kended", "--format", "human"], "");
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("D~{"));
    assert_eq!(out.lines().count(), 6);
}

#[test]
fn sound_check_passes_on_extremal_graph() {
    let g = stdout(&kspectra(&["construct", "--family", "hstar", "--n", "16", "--k", "2", "--t", "1"], ""));
    let o = kspectra(&["check", "--theorem", "main", "--sound"], &g);
    assert!(o.status.success());
    let recs = json_lines(&o);
    assert_eq!(recs.len(), 10);
    assert_eq!(recs[0]["conclusion"], "ExtremalException");
    assert_eq!(recs[0]["soundness"]["tree_exists"], false);
}

#[test]
fn sweep_rows() {
    let o = kspectra(&["sweep", "--k", "2", "--t", "1", "--n-from", "16", "--n-to", "18"], "");
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows.len(), 4);
    // f(n,2,1) = 3n − 13
    assert!(rows[1].starts_with("16,2,1,85,85,35,true,"));
}

#[test]
fn verify_is_reproducible() {
    let args = ["verify", "--suite", "theorem-soundness", "--samples", "50", "--seed", "3"];
    let a = kspectra(&[&args[..], &["--jobs", "1"]].concat(), "");
    let b = kspectra(&[&args[..], &["--jobs", "3"]].concat(), "");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let rec = &json_lines(&a)[0];
    assert_eq!(rec["graphs_checked"], 500);
    assert!(rec.get("wall_time_secs").is_none());
}

#[test]
fn exit_codes() {
    assert_eq!(kspectra(&["spectra"], "not graph6 \u{1}\n").status.code(), Some(2));
    assert_eq!(kspectra(&["check", "--graph6", "D~{", "--theorem", "THM-NOPE"], "").status.code(), Some(2));
    assert_eq!(kspectra(&["spectra", "--graph6", "D~{", "--input", "x"], "").status.code(), Some(2));
    assert_eq!(kspectra(&["spectra", "--bogus"], "").status.code(), Some(2));
    assert_eq!(kspectra(&["verify", "--suite", "tightness", "--jobs", "0"], "").status.code(), Some(2));
}
