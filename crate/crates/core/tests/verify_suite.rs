//! The check registry, runner and report as seen from outside the crate.

use std::collections::HashSet;

use pgl4_core::catalog::{Catalog, Value};
use pgl4_core::verify::{find_check, registry, render_markdown, render_text, run_all, run_check, Filter, RunOptions, Status, Tier};

fn options(filter: &str) -> RunOptions {
    RunOptions { filter: filter.parse().unwrap(), ..RunOptions::default() }
}

#[test]
fn registry_ids_are_unique_and_located() {
    let specs = registry();
    let ids: HashSet<&str> = specs.iter().map(|s| s.id).collect();
    assert_eq!(ids.len(), specs.len());
    for s in &specs {
        assert!(s.location.starts_with('§'), "{} has location {:?}", s.id, s.location);
        assert!(!s.tags.is_empty(), "{} has no tags", s.id);
    }
    assert!(specs.iter().any(|s| s.tier == Tier::Stretch));
    assert!(find_check("no-such-check").is_err());
}

#[test]
fn single_checks_pass() {
    for id in ["H-order", "table1-incidence", "ST-relations", "G144-type"] {
        let r = run_check(id).unwrap();
        assert_eq!(r.status, Status::Pass, "{id}: {}", r.evidence);
        assert!(r.erratum.is_none(), "{id}");
    }
}

#[test]
fn known_misprints_pass_with_an_erratum() {
    for id in ["A-word", "B-word", "t-sum", "q-eigenbasis", "sigma20-list"] {
        let r = run_check(id).unwrap();
        assert_eq!(r.status, Status::Pass, "{id}: {}", r.evidence);
        assert!(r.erratum.as_deref().is_some_and(|e| !e.is_empty()), "{id} should carry an erratum");
    }
}

#[test]
fn corrupted_table_fails_with_a_diff() {
    let cat = Catalog::standard().unwrap();
    let mut table = cat.table("Table1").unwrap().clone();
    let cell = &mut table.rows[3].1[4];
    *cell = if cell == "+" { "-".into() } else { "+".into() };
    let bad = cat.with_value("Table1", Value::Table(table)).unwrap();
    let report = run_all(bad, &options("table1-incidence"));
    let r = report.get("table1-incidence").unwrap();
    assert_eq!(r.status, Status::Fail);
    let diff = r.evidence["diff"].as_array().expect("diff list");
    assert!(!diff.is_empty());
    assert!(!report.succeeded(false));
}

#[test]
fn mutation_of_a_polynomial_is_caught() {
    // a perturbed S_1 no longer has nodes along its orbit of sixteen points
    let cat = Catalog::standard().unwrap();
    let s1 = cat.poly("S1@80").unwrap();
    let wrong = s1.try_add(&pgl4_core::poly::HomPoly::parse("x^4").unwrap().embed(s1.field_index()).unwrap()).unwrap();
    let bad = cat.with_value("S1@80", Value::Polynomial(wrong)).unwrap();
    let report = run_all(bad, &options("Si-singular-at-sigma16"));
    assert_eq!(report.get("Si-singular-at-sigma16").unwrap().status, Status::Fail);
}

#[test]
fn filters_match_ids_and_tags() {
    let f: Filter = "80-*".parse().unwrap();
    let picked: Vec<&str> = registry().iter().filter(|s| f.matches(s)).map(|s| s.id).collect();
    assert!(picked.contains(&"G80-orders") && picked.contains(&"rh-80"));
    assert!(!picked.iter().any(|id| id.contains("144") || *id == "A-word"));
    let exact: Filter = "table1-*,rh-80".parse().unwrap();
    let picked: Vec<&str> = registry().iter().filter(|s| exact.matches(s)).map(|s| s.id).collect();
    assert_eq!(picked, vec!["table1-incidence", "rh-80"]);
    assert!("[".parse::<Filter>().is_err());
}

#[test]
fn reports_are_deterministic_and_render() {
    let opts = RunOptions { jobs: 2, ..options("heisenberg,relations,table1") };
    let a = run_all(Catalog::standard().unwrap().clone(), &opts);
    let b = run_all(Catalog::standard().unwrap().clone(), &options("heisenberg,relations,table1"));
    assert_eq!(a.to_json_without_timing(), b.to_json_without_timing());
    assert!(a.succeeded(true));
    let json = a.to_json();
    for c in json["checks"].as_array().unwrap() {
        for key in ["check_id", "paper_location", "status", "evidence", "runtime_ms"] {
            assert!(c.get(key).is_some(), "missing {key}");
        }
    }
    assert!(render_markdown(&a).contains("table1-incidence"));
    assert!(render_text(&a).contains("pass"));
}

#[test]
fn strict_mode_counts_timeouts() {
    let opts = RunOptions { step_budget: 5, ..options("mckelvey-dim1") };
    let report = run_all(Catalog::standard().unwrap().clone(), &opts);
    assert_eq!(report.get("mckelvey-dim1").unwrap().status, Status::Timeout);
    assert!(report.succeeded(false));
    assert!(!report.succeeded(true));
    let core = run_all(Catalog::standard().unwrap().clone(), &RunOptions { core_only: true, ..opts });
    assert!(core.checks.is_empty());
}

#[test]
fn paper_level_checks_are_skipped() {
    let r = run_check("quartics-irreducible").unwrap();
    assert_eq!(r.status, Status::Skipped);
    assert!(r.note.is_some());
}
