use std::process::{Command, Output};

fn qjac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qjac")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_g2() {
    let o = qjac(&["gen", "--name", "G2", "--qorder", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q^0: -1/24\nq^1: 1\nq^2: 3\nq^3: 4\nq^4: 7\n");
}

#[test]
fn gen_json_lists_coefficients() {
    let o = qjac(&["gen", "--name", "G4", "--qorder", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["coeffs"], serde_json::json!(["1/240", "1", "9"]));
}

#[test]
fn solve_a_prints_six_polynomials() {
    let o = qjac(&["solve", "--family", "A", "--max-k", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 6);
    assert!(out.contains("A_2 = 1/2*A^2 - G2"));
    assert!(out.contains("A_4 = 1/24*A^4 - 1/2*A^2*G2 + 1/3*G2^2 - 1/72*G4"));
}

#[test]
fn solve_c_with_fixed_l() {
    let o = qjac(&["solve", "--family", "C", "--max-k", "2", "--l", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("C_0,1 = 0\nC_1,1 = -2*G2^2 + 5/6*G4\n"), "{out}");
}

#[test]
fn derive_operators() {
    let o = qjac(&["derive", "--name", "Dtau", "G2"]);
    assert_eq!(stdout(&o).trim(), "-2*G2^2 + 5/6*G4");
    let o = qjac(&["derive", "--name", "dA", "A^3*G2"]);
    assert_eq!(stdout(&o).trim(), "3*A^2*G2");
}

#[test]
fn fit_from_expression_file() {
    let dir = std::env::temp_dir().join(format!("qjac-fit-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("in.json");
    std::fs::write(&path, r#"{"weight": 4, "index": 0, "expr": "G2^2 - 3*G4"}"#).unwrap();
    let o = qjac(&["fit", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim(), "G2^2 - 3*G4");
}

#[test]
fn residue_matches_table() {
    let o = qjac(&["residue", "--family", "A", "--k", "2", "--zorder", "3", "--qorder", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("matches table expansion: true\n"));
}

#[test]
fn verify_ring_passes() {
    let o = qjac(&["verify", "--suite", "ring"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let names: Vec<&str> = out.lines().map(|l| l.split(':').next().unwrap()).collect();
    assert_eq!(names, ["PASS ring.bootstrap", "PASS ring.commutators", "PASS ring.ramanujan"]);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qjac(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qjac(&["gen"]).status.code(), Some(2));
    assert_eq!(qjac(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(qjac(&["gen", "--name", "G2", "--qorder", "0"]).status.code(), Some(2));
    assert_eq!(qjac(&["derive", "--name", "Dz", "A"]).status.code(), Some(2));
    assert_eq!(qjac(&["gen", "--name", "G2+"]).status.code(), Some(2));
    assert_eq!(qjac(&["fit", "--input", "/nonexistent/file.json"]).status.code(), Some(2));
}

#[test]
fn unfittable_series_exits_1() {
    let dir = std::env::temp_dir().join(format!("qjac-nofit-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("in.json");
    // G2 is not of weight 4
    std::fs::write(&path, r#"{"weight": 4, "expr": "G2"}"#).unwrap();
    assert_eq!(qjac(&["fit", "--input", path.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn json_outputs_round_trip() {
    let o = qjac(&["derive", "--name", "Dp", "Theta*A", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let text = v["mero"].to_string();
    let m = qjac_ring::MeroQJac::from_json(&text).unwrap();
    assert_eq!(m.to_string(), v["result"].as_str().unwrap());
    // key order differs between the two writers; compare canonical forms
    let back: serde_json::Value = serde_json::from_str(&m.to_json()).unwrap();
    assert_eq!(back.to_string(), text);

    let o = qjac(&["verify", "--suite", "normalization", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let again: serde_json::Value = serde_json::from_str(&v.to_string()).unwrap();
    assert_eq!(v, again);
    assert_eq!(v["passed"], serde_json::json!(true));
}
