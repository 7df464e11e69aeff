//! End-to-end runs of the `pgl4` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn pgl4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pgl4"))
        .args(args)
        .env_remove("PGL4_OUTPUT_DIR")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&o.stdout)))
}

#[test]
fn orbit_of_a_point_under_g80() {
    let o = pgl4(&["orbit", "--group", "G80", "--point", "[1:0:1:0]", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["orbit_length"], 20);
    assert_eq!(v["stabilizer_order"], 4);
    assert_eq!(v["group_order"], 80);
    assert_eq!(v["points"].as_array().unwrap().len(), 20);
}

#[test]
fn orbit_text_output_and_linear_mode() {
    let o = pgl4(&["orbit", "--group", "H", "--point", "[1:2:3:5]"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("16 points"), "{text}");
    let lin = pgl4(&["orbit", "--group", "H", "--mode", "linear", "--point", "[1:2:3:5]", "--format", "json"]);
    assert_eq!(code(&lin), 0);
    assert_eq!(json(&lin)["group_order"], 32);
}

#[test]
fn invariants_report_characters_and_semi_invariants() {
    let o = pgl4(&["invariants", "--group", "G80", "--degree", "4", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["group_order"], 320);
    assert_eq!(v["total_multiplicity"], 5);

    let q = pgl4(&["invariants", "--group", "G144", "--degree", "2", "--format", "json"]);
    assert_eq!(code(&q), 0);
    let semi: Vec<String> = json(&q)["semi_invariants"].as_array().unwrap().iter().map(|s| s.as_str().unwrap().replace(' ', "")).collect();
    assert!(semi.iter().any(|s| s == "x*z+y*w"), "{semi:?}");
}

#[test]
fn riemann_hurwitz_enumeration() {
    let o = pgl4(&["rh", "--order", "80", "--stabilizers", "2,5", "--genus-max", "19", "--genus-min", "2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["orbit_lengths"], serde_json::json!([16, 40]));
    let sols = v["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 3);
    for s in sols {
        let g = s["genus"].as_i64().unwrap();
        assert!((2..=19).contains(&g));
    }
    assert_eq!(code(&pgl4(&["rh", "--order", "80", "--stabilizers", "3", "--genus-max", "5"])), 2);
}

#[test]
fn groebner_certifies_smoothness_and_times_out_on_small_budget() {
    let o = pgl4(&["groebner", "--key", "S0@80", "--jacobian", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["projective_dimension"], -1);
    assert_eq!(v["irrelevant"], true);

    let t = pgl4(&["groebner", "--key", "S0@80", "--jacobian", "--steps", "2"]);
    assert_eq!(code(&t), 1);

    let c = pgl4(&["groebner", "--poly", "x*z - y^2", "--poly", "y*w - z^2", "--poly", "x*w - y*z", "--print-basis", "--format", "json"]);
    assert_eq!(code(&c), 0);
    assert_eq!(json(&c)["projective_dimension"], 1);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(code(&pgl4(&["orbit", "--group", "G80", "--point", "[1:0:1:0]", "--field", "6"])), 2);
    assert_eq!(code(&pgl4(&["orbit", "--group", "NOPE", "--point", "[1:0:0:0]"])), 2);
    assert_eq!(code(&pgl4(&["orbit", "--group", "H", "--point", "[1:0:0]"])), 2);
    assert_eq!(code(&pgl4(&["orbit", "--group", "H", "--point", "[1:0:0:0]", "--mode", "affine"])), 2);
    assert_eq!(code(&pgl4(&["verify", "--filter", "no-such-*"])), 2);
    assert_eq!(code(&pgl4(&["verify", "--bogus"])), 2);
    assert_eq!(code(&pgl4(&[])), 2);
    assert_eq!(code(&pgl4(&["--help"])), 0);
}

#[test]
fn verify_writes_a_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reports/table1.json");
    let o = pgl4(&["verify", "--filter", "table1-*,H-order", "--format", "json", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 2);
    for c in checks {
        assert_eq!(c["status"], "pass");
        assert!(c["paper_location"].as_str().unwrap().starts_with('§'));
    }
    assert_eq!(v["summary"]["pass"], 2);
}

#[test]
fn relative_output_paths_use_the_output_directory() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_pgl4"))
        .args(["verify", "--filter", "H-order", "--format", "md", "-o", "report.md"])
        .env("PGL4_OUTPUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let md = std::fs::read_to_string(dir.path().join("report.md")).unwrap();
    assert!(md.contains("H-order"));
}

#[test]
fn verify_exit_codes_follow_statuses() {
    // a failing check (the printed order-144 genus table) makes the run fail
    assert_eq!(code(&pgl4(&["verify", "--filter", "rh-144"])), 1);
    // a stretch check that runs out of budget only matters under --strict
    assert_eq!(code(&pgl4(&["verify", "--filter", "mckelvey-dim1", "--steps", "5"])), 0);
    assert_eq!(code(&pgl4(&["verify", "--strict", "--with-stretch", "--filter", "mckelvey-dim1", "--steps", "5"])), 1);
    // without --with-stretch, strict mode leaves the stretch check out entirely
    assert_eq!(code(&pgl4(&["verify", "--strict", "--filter", "mckelvey-dim1"])), 2);
}

#[test]
fn list_checks_and_catalog_export() {
    let o = pgl4(&["list-checks", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|c| c["check_id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"table1-incidence") && ids.contains(&"mckelvey-dim1"));

    let e = pgl4(&["catalog", "export", "--key", "A", "--key", "q0", "--format", "json"]);
    assert_eq!(code(&e), 0);
    let text = String::from_utf8_lossy(&e.stdout);
    assert!(text.contains("erratum"), "{text}");
    assert_eq!(code(&pgl4(&["catalog", "export", "--key", "nope"])), 2);
}
