//! Acceptance criteria 1-11. Each test prints one PASS/FAIL line.

use std::time::{Duration, Instant};

use brauer::verify::{run_criterion, Config};

fn criterion(k: u8, title: &str, cfg: Config, limit: Option<Duration>) {
    let t = Instant::now();
    let checks = run_criterion(k, &cfg).unwrap_or_else(|e| panic!("criterion {k} errored: {e}"));
    let elapsed = t.elapsed();
    let failed: Vec<_> = checks.iter().filter(|c| !c.ok).collect();
    let slow = limit.is_some_and(|l| elapsed > l);
    let ok = failed.is_empty() && !checks.is_empty() && !slow;
    println!(
        "{} criterion {k:2} {title}: {}/{} checks, {:.2}s{}",
        if ok { "PASS" } else { "FAIL" },
        checks.len() - failed.len(),
        checks.len(),
        elapsed.as_secs_f64(),
        limit.map_or(String::new(), |l| format!(" (limit {}s)", l.as_secs())),
    );
    for c in &failed {
        println!("    {}", c.line());
    }
    assert!(ok, "criterion {k} failed");
}

#[test]
fn c01_walk_face_structure() {
    criterion(1, "walk/face structure", Config::default(), Some(Duration::from_secs(5)));
}

#[test]
fn c02_derived_equivalence_reduction() {
    criterion(2, "derived-equivalence reduction", Config::default(), Some(Duration::from_secs(5)));
}

#[test]
fn c03_canonical_homs_vs_oracle() {
    criterion(3, "canonical homs vs oracle", Config { max_len: 10, ..Config::default() }, Some(Duration::from_secs(60)));
}

#[test]
fn c04_syzygy_formulas() {
    criterion(4, "syzygy formulas", Config::default(), None);
}

#[test]
fn c05_tube_classification() {
    criterion(5, "tube classification", Config::default(), None);
}

#[test]
fn c06_case1_tables() {
    criterion(6, "case-1 tables", Config::default(), None);
}

#[test]
fn c07_case2_tables() {
    criterion(7, "case-2 tables", Config::default(), None);
}

#[test]
fn c08_simple_component_tables() {
    criterion(8, "simple-component tables", Config::default(), None);
}

#[test]
fn c09_koszul_application() {
    criterion(9, "Koszul application", Config::default(), None);
}

#[test]
fn c10_ladder_verifier() {
    criterion(10, "ladder verifier", Config::default(), None);
}

#[test]
fn c11_omega_invariance() {
    criterion(11, "Omega-invariance of classification", Config::default(), None);
}
