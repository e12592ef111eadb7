use std::process::{Command, Output};

use serde_json::Value;

fn knotforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotforge")).args(args).env_remove("KNOTFORGE_BUDGET").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn determinant_of_braid_trefoil() {
    let o = knotforge(&["invariant", "--braid", "s=2 w=[1,1,1]", "--name", "det"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "3");
}

#[test]
fn unknot_colorings() {
    let o = knotforge(&["invariant", "--pd", "/ (1)", "--name", "colorings:7"]);
    assert_eq!(stdout(&o).trim(), "7");
}

#[test]
fn invariant_json_output() {
    let o = knotforge(&["--format", "json", "invariant", "--gauss", "O1+U2+O3+U1+O2+U3+", "--name", "jones", "--name", "det"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["invariants"][0]["text"], "1*t^1 + 1*t^3 + -1*t^4");
    assert_eq!(v["invariants"][0]["summary"]["span"], 3);
    assert_eq!(v["invariants"][1]["value"], 3);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&knotforge(&["invariant", "--pd", "/ (1)", "--name", "nope"])), 2);
    assert_eq!(code(&knotforge(&["invariant", "--pd", "X[1,4,2", "--name", "det"])), 1);
    assert_eq!(code(&knotforge(&["parse", "--gauss", "O1+O2+U1+U2+"])), 1);
    assert_eq!(code(&knotforge(&["invariant", "--pd", "/ (1)(2)", "--name", "det"])), 6);
    assert_eq!(code(&knotforge(&["frobnicate"])), 1);
    assert_eq!(code(&knotforge(&["--help"])), 0);
}

#[test]
fn parse_reports_position() {
    let o = knotforge(&["parse", "--pd", "X[1,4,2,5];X[3,6,4,1]x"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("column"));
}

#[test]
fn parse_converts_notations() {
    let o = knotforge(&["parse", "--braid", "s=2 w=[1,1,1]", "--to", "gauss"]);
    assert_eq!(code(&o), 0);
    let gauss = stdout(&o).trim().to_string();
    let back = knotforge(&["invariant", "--gauss", &gauss, "--name", "det"]);
    assert_eq!(stdout(&back).trim(), "3");
    let o = knotforge(&["parse", "--pd", "/ (1)"]);
    assert_eq!(stdout(&o).trim(), "/ (1)");
}

#[test]
fn twist_unlink_into_hopf_link() {
    let o = knotforge(&["--format", "json", "twist", "--pd", "/ (1)(2)", "--region", "1+,2+", "--n", "1"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["crossing_delta"], 2);
    assert_eq!(v["regions"][0]["q"], 2);
    let hopf = knotforge(&["parse", "--braid", "s=2 w=[1,1]", "--canonical"]);
    assert_eq!(v["pd"].as_str().unwrap(), stdout(&hopf).trim());
}

#[test]
fn zero_twist_keeps_diagram() {
    let input = "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3] / (1..6)";
    let t = knotforge(&["twist", "--pd", input, "--region", "1+,3-", "--n", "0"]);
    let p = knotforge(&["parse", "--pd", input, "--canonical"]);
    assert_eq!(stdout(&t).lines().next(), stdout(&p).lines().next());
}

#[test]
fn shared_arcs_are_rejected() {
    let o = knotforge(&["twist", "--pd", "/ (1)(2)", "--region", "1+,2+", "--region", "2-,1+"]);
    assert_eq!(code(&o), 5);
    let o = knotforge(&["twist", "--pd", "/ (1)(2)", "--region", "1+,9+"]);
    assert_eq!(code(&o), 5);
}

#[test]
fn probe_exit_codes() {
    assert_eq!(code(&knotforge(&["probe", "ft", "--invariant", "a:2", "--order", "2", "--corpus", "census"])), 0);
    assert_eq!(code(&knotforge(&["probe", "ft", "--invariant", "colorings:3", "--order", "1", "--corpus", "census"])), 3);
    assert_eq!(code(&knotforge(&["probe", "nq", "--invariant", "colorings:4", "--order", "0", "--n", "2", "--q", "2"])), 0);
    assert_eq!(code(&knotforge(&["probe", "ft", "--invariant", "components", "--order", "0", "--budget", "4"])), 4);
    assert_eq!(code(&knotforge(&["probe", "ft", "--invariant", "bogus"])), 2);
}

#[test]
fn budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_knotforge"))
        .args(["probe", "ft", "--invariant", "components", "--order", "0"])
        .env("KNOTFORGE_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(code(&o), 4);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "budget_exhausted");
    assert_eq!(v["flags"]["budget"], 3);
}

#[test]
fn certificate_report_shape() {
    let dir = std::env::temp_dir().join(format!("knotforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = knotforge(&["probe", "nq", "--invariant", "jones", "--order", "0", "--n", "1", "--q", "0", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&o), 3);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["status"], "certificate");
    for key in ["invariant", "order", "n", "q", "strict", "tested_count", "tool", "flags"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let cert = &v["certificate"];
    assert_eq!(cert["value"], cert["reference_value"]);
    assert!(cert["diagram_pd"].as_str().unwrap().contains('/'));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn corpus_file() {
    let dir = std::env::temp_dir().join(format!("knotforge-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corpus.txt");
    std::fs::write(&path, "# two knots\nbraid: s=2 w=[1,1,1]\n\nO1+U2+O3+U1+O2+U3+\n").unwrap();
    let o = knotforge(&["probe", "ft", "--invariant", "c:2", "--order", "2", "--corpus", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["corpus_size"], 2);
    assert_eq!(v["tested_count"], 2);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["--format", "json", "census", "--name", "jones", "--name", "det"][..],
        &["probe", "nq", "--invariant", "c:2", "--order", "1", "--n", "1", "--q", "2", "--max-per-diagram", "5"][..],
    ] {
        assert_eq!(knotforge(args).stdout, knotforge(args).stdout);
    }
}

#[test]
fn census_verifies() {
    let o = knotforge(&["census", "--verify"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("verified 160 values"));
    let o = knotforge(&["--format", "csv", "census", "--name", "det"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines[0], "name,construction,crossings,pd,det");
    assert_eq!(lines.len(), 11);
}

#[test]
fn connected_sum_of_trefoils() {
    let o = knotforge(&["csum", "--left", "braid: s=2 w=[1,1,1]", "--right", "braid: s=2 w=[1,1,1]"]);
    assert_eq!(code(&o), 0);
    let pd = stdout(&o).trim().to_string();
    let det = knotforge(&["invariant", "--pd", &pd, "--name", "det"]);
    assert_eq!(stdout(&det).trim(), "9");
}
