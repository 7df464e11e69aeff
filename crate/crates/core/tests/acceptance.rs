//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Exits nonzero when a gating criterion fails, or when a criterion recorded as a
//! known conflict starts passing (so the record gets revisited).

mod common;

use std::process::ExitCode;
use std::time::Instant;

use pgl4_core::catalog::Catalog;
use pgl4_core::verify::{run_all, Report, RunOptions, Status};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Expect {
    Pass,
    /// Expected to fail because the printed data disagrees with the computation.
    KnownConflict(&'static str),
    /// Reported but never gating.
    NonGating,
}

struct Criterion {
    number: u32,
    title: &'static str,
    checks: &'static [&'static str],
    extra: Option<fn() -> Result<String, String>>,
    expect: Expect,
}

fn rh_oracle() -> Result<String, String> {
    common::rh::compare_small_problems(12, 5).map(|n| format!("oracle agrees on {n} problems"))
}

fn property_suites() -> Result<String, String> {
    let mut done = Vec::new();
    for (name, run) in common::props::suites() {
        run().map_err(|e| format!("{name}: {e}"))?;
        done.push(name);
    }
    Ok(format!(
        "{} suites x {} cases, seed {:#x}",
        done.len(),
        common::props::CASES,
        common::props::SEED
    ))
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        number: 1,
        title: "group orders",
        checks: &["H-order", "G80-orders", "G160-orders", "G320-orders", "G144-order"],
        extra: None,
        expect: Expect::Pass,
    },
    Criterion {
        number: 2,
        title: "group structure",
        checks: &["H-center-commutator", "Hbar-type", "G80-type", "G160-type", "G144-type", "inclusions-normality"],
        extra: None,
        expect: Expect::Pass,
    },
    Criterion {
        number: 3,
        title: "matrix relations",
        checks: &["ST-relations", "A-word", "B-word", "R-normalizes"],
        extra: None,
        expect: Expect::Pass,
    },
    Criterion {
        number: 4,
        title: "subgroups of the order-80 group",
        checks: &["G80-subgroup-classification", "H-irreducible-F2"],
        extra: None,
        expect: Expect::Pass,
    },
    Criterion {
        number: 5,
        title: "invariant counts",
        checks: &["inv-deg4-H", "no-low-degree-80", "five-quartics-80", "four-sextics-80", "unique-quadric-144", "four-quartics-144"],
        extra: None,
        expect: Expect::Pass,
    },
    Criterion {
        number: 6,
        title: "quartic eigenbases",
        checks: &["q-eigenbasis", "p-eigenbasis"],
        extra: None,
        expect: Expect::Pass,
    },
    Criterion {
        number: 7,
        title: "line/quadric incidence table",
        checks: &["table1-incidence", "lines-per-quadric-12", "quadric-pairs-4-lines"],
        extra: None,
        expect: Expect::Pass,
    },
    Criterion {
        number: 8,
        title: "line and point geometry",
        checks: &[
            "fixed-lines-30",
            "fixed-lines-disjoint",
            "triple-points",
            "sigma20-list",
            "sigma20-orbits",
            "L10-disjoint",
            "L10-prime-wheel",
            "L10-dprime-wheel",
            "L10-intersections",
        ],
        extra: None,
        expect: Expect::Pass,
    },
    Criterion {
        number: 9,
        title: "orbits",
        checks: &["sigma16-orbits", "sigma12-only", "Q144-curves", "sigma16-144-surfaces", "section4-orbit-table", "sigma-36"],
        extra: None,
        expect: Expect::Pass,
    },
    Criterion {
        number: 10,
        title: "quartic surfaces and singularities",
        checks: &["Si-singular-at-sigma16", "S144-singular", "table2-incidence", "S0-smooth", "Si-singular-exactly", "S144-singular-exactly"],
        extra: None,
        expect: Expect::Pass,
    },
    Criterion {
        number: 11,
        title: "Riemann-Hurwitz tables",
        checks: &["rh-80", "rh-144"],
        extra: Some(rh_oracle),
        expect: Expect::KnownConflict(
            "the genus-8 row listed for the order-144 action has no solution; computed rows are genus 13",
        ),
    },
    Criterion {
        number: 12,
        title: "line restriction of the degree-8 curves",
        checks: &["line-restriction-8"],
        extra: None,
        expect: Expect::Pass,
    },
    Criterion {
        number: 13,
        title: "one-dimensional intersection scheme (stretch)",
        checks: &["mckelvey-dim1"],
        extra: None,
        expect: Expect::NonGating,
    },
    Criterion {
        number: 14,
        title: "property suites",
        checks: &[],
        extra: Some(property_suites),
        expect: Expect::Pass,
    },
];

/// Whether every listed check passed, plus a short account of the ones that did not.
fn assess(report: &Report, c: &Criterion) -> (bool, Vec<String>) {
    let mut ok = true;
    let mut notes = Vec::new();
    for id in c.checks {
        match report.get(id) {
            Some(r) if r.status == Status::Pass => {
                if r.erratum.is_some() {
                    notes.push(format!("{id}: pass with erratum"));
                }
            }
            Some(r) => {
                ok = false;
                notes.push(format!("{id}: {}", r.status));
            }
            None => {
                ok = false;
                notes.push(format!("{id}: not registered"));
            }
        }
    }
    if let Some(extra) = c.extra {
        match extra() {
            Ok(msg) => notes.push(msg),
            Err(e) => {
                ok = false;
                notes.push(e);
            }
        }
    }
    (ok, notes)
}

fn main() -> ExitCode {
    let start = Instant::now();
    let catalog = Catalog::standard().expect("catalog loads").clone();
    let report = run_all(catalog, &RunOptions { jobs: 4, ..RunOptions::default() });
    let mut unexpected = 0;
    for c in CRITERIA {
        let (ok, notes) = assess(&report, c);
        let verdict = if ok { "PASS" } else { "FAIL" };
        let remark = match (c.expect, ok) {
            (Expect::Pass, true) | (Expect::NonGating, _) | (Expect::KnownConflict(_), false) => "",
            (Expect::Pass, false) => "  [unexpected]",
            (Expect::KnownConflict(_), true) => "  [unexpected pass of a known conflict]",
        };
        if !remark.is_empty() {
            unexpected += 1;
        }
        let label = match c.expect {
            Expect::NonGating => " (non-gating)",
            _ => "",
        };
        println!("criterion {:>2}: {verdict}  {}{label}{remark}", c.number, c.title);
        for n in &notes {
            println!("    {n}");
        }
        if let (Expect::KnownConflict(why), false) = (c.expect, ok) {
            println!("    known conflict: {why}");
        }
    }
    println!(
        "acceptance: {} criteria, {} unexpected, {} checks run in {:.1}s",
        CRITERIA.len(),
        unexpected,
        report.checks.len(),
        start.elapsed().as_secs_f64()
    );
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
