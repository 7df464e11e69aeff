//! Aggregated results and their JSON / Markdown / text renderings.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value as Json;

use super::{CheckResult, RunOptions, Status};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub timeout: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
    pub seed: u64,
    pub step_budget: usize,
}

impl Report {
    pub(super) fn new(checks: Vec<CheckResult>, options: &RunOptions) -> Report {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
                Status::Timeout => summary.timeout += 1,
            }
        }
        Report { checks, summary, seed: options.seed, step_budget: options.step_budget }
    }

    /// No failures; in strict mode, additionally no skips or timeouts.
    pub fn succeeded(&self, strict: bool) -> bool {
        self.summary.fail == 0 && (!strict || self.summary.skipped + self.summary.timeout == 0)
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check_id == id)
    }

    pub fn to_json(&self) -> Json {
        serde_json::to_value(self).expect("report serializes")
    }

    /// The JSON report with runtimes zeroed, for determinism comparisons.
    pub fn to_json_without_timing(&self) -> Json {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.runtime_ms = 0;
        }
        r.to_json()
    }
}

fn cell(v: &Json) -> String {
    match v {
        Json::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Renders `{"header": [...], "rows": [[label, cells...], ...]}` as a Markdown table.
fn markdown_table(out: &mut String, t: &Json) -> bool {
    let (Some(header), Some(rows)) = (t.get("header").and_then(Json::as_array), t.get("rows").and_then(Json::as_array)) else {
        return false;
    };
    let h: Vec<String> = header.iter().map(cell).collect();
    let _ = writeln!(out, "| {} |", h.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(h.len()));
    for r in rows {
        let cells: Vec<String> = r.as_array().map(|a| a.iter().map(cell).collect()).unwrap_or_default();
        let _ = writeln!(out, "| {} |", cells.join(" | "));
    }
    out.push('\n');
    true
}

pub fn render_markdown(report: &Report) -> String {
    let mut out = String::new();
    let s = &report.summary;
    let _ = writeln!(out, "# Verification report\n");
    let _ = writeln!(
        out,
        "{} pass, {} fail, {} skipped, {} timeout (seed {}, step budget {})\n",
        s.pass, s.fail, s.skipped, s.timeout, report.seed, report.step_budget
    );
    let _ = writeln!(out, "| check | status | location |\n|---|---|---|");
    for c in &report.checks {
        let _ = writeln!(out, "| {} | {} | {} |", c.check_id, c.status, c.paper_location.replace('|', "\\|"));
    }
    out.push('\n');
    for c in &report.checks {
        let _ = writeln!(out, "## {} ({})\n", c.check_id, c.status);
        let _ = writeln!(out, "Location: {}\n", c.paper_location);
        if let Some(e) = &c.erratum {
            let _ = writeln!(out, "Erratum: {e}\n");
        }
        if let Some(n) = &c.note {
            let _ = writeln!(out, "Note: {n}\n");
        }
        let Some(ev) = c.evidence.as_object() else { continue };
        for (k, v) in ev {
            if k == "claims" || k == "diff" {
                continue;
            }
            if k.ends_with("table") && v.is_object() {
                let _ = writeln!(out, "{k}:\n");
                if markdown_table(&mut out, v) {
                    continue;
                }
            }
            let _ = writeln!(out, "- {k}: `{}`", v);
        }
        if let Some(claims) = ev.get("claims").and_then(Json::as_array) {
            for cl in claims {
                let ok = cl.get("ok").and_then(Json::as_bool).unwrap_or(false);
                let _ = writeln!(
                    out,
                    "- [{}] {}: expected `{}`, computed `{}`",
                    if ok { "x" } else { " " },
                    cell(&cl["claim"]),
                    cl["expected"],
                    cl["computed"]
                );
            }
        }
        if let Some(err) = ev.get("error") {
            let _ = writeln!(out, "- error: {}", cell(err));
        }
        out.push('\n');
    }
    out
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    for c in &report.checks {
        let mut line = format!("{:<8} {:<32} {:>7} ms", c.status.to_string().to_uppercase(), c.check_id, c.runtime_ms);
        if c.erratum.is_some() {
            line.push_str("  [erratum]");
        }
        let _ = writeln!(out, "{line}");
        if c.status == Status::Fail {
            if let Some(diff) = c.evidence.get("diff").and_then(Json::as_array) {
                for d in diff {
                    let _ = writeln!(out, "         diff: {d}");
                }
            }
        }
    }
    let s = &report.summary;
    let _ = writeln!(out, "{} pass, {} fail, {} skipped, {} timeout", s.pass, s.fail, s.skipped, s.timeout);
    out
}
