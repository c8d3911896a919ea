//! Every property suite at quick scale, one test per suite.

use carlitz_core::checks::{all_checks, run_checks, Scale};

fn run_suite(suite: &str) {
    let checks: Vec<_> = all_checks().into_iter().filter(|c| c.suite == suite).collect();
    assert!(!checks.is_empty(), "no checks in suite {suite}");
    let failed: Vec<String> = run_checks(&checks, Scale::Quick)
        .into_iter()
        .filter(|o| !o.passed)
        .map(|o| format!("{}: {}", o.name, o.detail))
        .collect();
    assert!(failed.is_empty(), "{failed:#?}");
}

#[test]
fn basealg() {
    run_suite("basealg");
}

#[test]
fn carlitz() {
    run_suite("carlitz");
}

#[test]
fn cyclotomic() {
    run_suite("cyclotomic");
}

#[test]
fn coleman() {
    run_suite("coleman");
}

#[test]
fn coateswiles() {
    run_suite("coateswiles");
}

#[test]
fn lfun() {
    run_suite("lfun");
}
