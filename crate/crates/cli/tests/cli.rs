use std::process::{Command, Output};

use carlitz_core::basealg::{parse_a_poly, parse_ratfun, Render};
use carlitz_core::GaloisField;
use serde_json::Value;

fn carlitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_carlitz")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr_tag(out: &Output) -> String {
    let line = String::from_utf8_lossy(&out.stderr);
    assert_eq!(line.trim().lines().count(), 1, "diagnostic is one line: {line}");
    let v: Value = serde_json::from_str(line.trim()).expect("stderr is JSON");
    v["error"].as_str().expect("error tag").to_string()
}

#[test]
fn cwverify_worked_example() {
    let out = carlitz(&["cwverify", "--q", "2", "--a", "T", "--b", "1", "--kmax", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[0]["k"], 1);
    assert_eq!(rows[0]["lhs"], "1/T");
    assert!(rows.iter().all(|r| r["equal"] == true));
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 4);
}

#[test]
fn bc_vanishes_off_multiples_of_q_minus_one() {
    let out = carlitz(&["bc", "--q", "3", "--n", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out)["rows"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 7);
    assert_eq!(rows[6]["n"], 7);
    assert_eq!(rows[6]["value"], "0");
}

#[test]
fn stickelberger_worked_example() {
    let out = carlitz(&[
        "stickelberger",
        "--q",
        "2",
        "--pi",
        "T^2+T+1",
        "--level",
        "1",
        "--S",
        "inf",
        "--T",
        "T",
        "--udeg",
        "12",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let want = serde_json::json!({
        "q": 2, "pi": "T^2+T+1", "level": 1, "S": ["T^2+T+1", "inf"], "T": ["T"],
        "coeffs": [
            {"u": 0, "terms": [{"rep": "1", "c": 1}]},
            {"u": 1, "terms": [{"rep": "T", "c": -1}, {"rep": "T+1", "c": 1}]},
            {"u": 2, "terms": [{"rep": "1", "c": -1}, {"rep": "T", "c": 1}, {"rep": "T+1", "c": -1}]},
        ]
    });
    assert_eq!(json(&out), want);
}

#[test]
fn charval_lists_both_characters() {
    let out = carlitz(&["charval", "--q", "2", "--pi", "T^2+T+1", "--level", "1", "--S", "inf", "--T", "T"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let values: Vec<&str> = v["characters"].as_array().unwrap().iter().map(|c| c["value"].as_str().unwrap()).collect();
    assert_eq!(values.len(), 3);
    assert!(values.contains(&"-u^2+1"));
    assert_eq!(v["product"], "-4*u^6+6*u^5+3*u^4-6*u^3+1");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["phi", "--q", "6", "--a", "T"][..],
        &["phi", "--q", "2", "--a", "T+"],
        &["phi", "--q", "2", "--a", "x"],
        &["torsion", "--q", "2", "--pi", "T^2+1", "--n", "1"],
        &["phi", "--q", "2", "--a", "T", "--format", "csv"],
        &["phi", "--q", "2"],
        &["nosuchcommand"],
        &["zetaneg", "--q", "2", "--k", "1", "--kmax", "3"],
    ] {
        let out = carlitz(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        stderr_tag(&out);
    }
}

#[test]
fn internal_failures_exit_three() {
    let out = carlitz(&["stickelberger", "--q", "2", "--pi", "T^2+T+1", "--level", "1", "--S", "inf", "--udeg", "12"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stderr_tag(&out), "tail_not_vanishing");
    let out = carlitz(&["zetapos", "--q", "2", "--k", "1", "--D", "2", "--tail", "50"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stderr_tag(&out), "precision_exhausted");
}

#[test]
fn help_exits_zero() {
    assert_eq!(carlitz(&["--help"]).status.code(), Some(0));
    assert_eq!(carlitz(&["bc", "--help"]).status.code(), Some(0));
}

#[test]
fn csv_tables() {
    let out = carlitz(&["zetaneg", "--q", "3", "--kmax", "4", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "k,value\n1,1\n2,0\n3,1\n4,0\n");
    let out = carlitz(&["bc", "--q", "2", "--n", "2", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n,value,factorial\n1,1/(T^2+T),1\n2,1/(T^2+T),T^2+T\n");
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("carlitz-cli-{}.json", std::process::id()));
    let out = carlitz(&["factorial", "--q", "2", "--n", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["value"], "T^2+T");
}

#[test]
fn emitted_polynomials_reparse() {
    let f = GaloisField::get(3).unwrap();
    let v = json(&carlitz(&["bc", "--q", "3", "--n", "10"]));
    for row in v["rows"].as_array().unwrap() {
        for key in ["value", "factorial"] {
            let s = row[key].as_str().unwrap();
            assert_eq!(parse_ratfun(s, f).unwrap().render(), s);
        }
    }
    let v = json(&carlitz(&["minpoly", "--q", "3", "--pi", "T^2+1", "--n", "1"]));
    let pi = v["pi"].as_str().unwrap();
    assert_eq!(parse_a_poly(pi, f).unwrap().render(), pi);
    let v = json(&carlitz(&["stickelberger", "--q", "2", "--pi", "T^2+T+1", "--level", "2", "--S", "inf", "--T", "T"]));
    let f2 = GaloisField::get(2).unwrap();
    for c in v["coeffs"].as_array().unwrap() {
        for t in c["terms"].as_array().unwrap() {
            let rep = t["rep"].as_str().unwrap();
            assert_eq!(parse_a_poly(rep, f2).unwrap().render(), rep);
        }
    }
}
