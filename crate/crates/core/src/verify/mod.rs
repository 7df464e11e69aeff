//! The check registry and its runner.
//!
//! Each check binds catalog data to a computation and an expected outcome,
//! tagged with the place the claim is printed. Results carry structured
//! evidence; a failing result also carries the list of claims that did not hold.

mod checks_144;
mod checks_80;
mod checks_groups;
mod checks_lines;
mod checks_poly;
mod context;
mod report;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use glob::Pattern;
use serde::Serialize;
use serde_json::{json, Map, Value as Json};

use crate::catalog::Catalog;
use crate::error::{Error, Result};

pub use context::Context;
pub use report::{render_markdown, render_text, Report, Summary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Timeout,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Timeout => "timeout",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub paper_location: String,
    pub status: Status,
    pub evidence: Json,
    pub runtime_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub erratum: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// What a check body returns; the runner adds id, location and timing.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub status: Status,
    pub evidence: Json,
    pub erratum: Option<String>,
    pub note: Option<String>,
}

impl Outcome {
    pub fn skipped(note: impl Into<String>) -> Outcome {
        Outcome { status: Status::Skipped, evidence: json!({}), erratum: None, note: Some(note.into()) }
    }

    pub fn with_erratum(mut self, text: impl Into<String>) -> Outcome {
        self.erratum = Some(text.into());
        self
    }

    pub fn with_note(mut self, text: impl Into<String>) -> Outcome {
        self.note = Some(text.into());
        self
    }
}

/// Accumulates named claims (expected vs computed) plus free-form evidence.
#[derive(Debug, Default)]
pub struct Claims {
    claims: Vec<Json>,
    failed: Vec<Json>,
    extra: Map<String, Json>,
}

impl Claims {
    pub fn new() -> Claims {
        Claims::default()
    }

    /// Records `expected == computed`; returns whether it held.
    pub fn eq<T: Serialize + PartialEq>(&mut self, claim: &str, expected: T, computed: T) -> bool {
        let ok = expected == computed;
        let item = json!({ "claim": claim, "expected": expected, "computed": computed, "ok": ok });
        if !ok {
            self.failed.push(item.clone());
        }
        self.claims.push(item);
        ok
    }

    /// Records a boolean claim that is expected to be true.
    pub fn holds(&mut self, claim: &str, ok: bool) -> bool {
        self.eq(claim, true, ok)
    }

    pub fn info(&mut self, key: &str, value: impl Serialize) {
        self.extra.insert(key.to_string(), json!(value));
    }

    pub fn all_ok(&self) -> bool {
        self.failed.is_empty()
    }

    pub fn finish(self) -> Outcome {
        let mut ev = self.extra;
        let status = if self.failed.is_empty() { Status::Pass } else { Status::Fail };
        ev.insert("claims".into(), Json::Array(self.claims));
        if !self.failed.is_empty() {
            ev.insert("diff".into(), Json::Array(self.failed));
        }
        Outcome { status, evidence: Json::Object(ev), erratum: None, note: None }
    }
}

pub type CheckFn = fn(&Context) -> Result<Outcome>;

/// A registered check.
#[derive(Clone, Copy)]
pub struct CheckSpec {
    pub id: &'static str,
    pub location: &'static str,
    pub tags: &'static [&'static str],
    pub tier: Tier,
    pub run: CheckFn,
}

impl fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CheckSpec").field("id", &self.id).field("tags", &self.tags).finish()
    }
}

/// Core checks always run; the other tiers are left out of strict runs unless asked for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tier {
    Core,
    /// Long computations that may hit the step budget.
    Stretch,
    /// Claims resting on arguments outside the computational scope; always skipped.
    PaperLevel,
}

pub(crate) const fn check(id: &'static str, location: &'static str, tags: &'static [&'static str], run: CheckFn) -> CheckSpec {
    CheckSpec { id, location, tags, tier: Tier::Core, run }
}

pub(crate) const fn stretch(id: &'static str, location: &'static str, tags: &'static [&'static str], run: CheckFn) -> CheckSpec {
    CheckSpec { id, location, tags, tier: Tier::Stretch, run }
}

pub(crate) const fn paper_level(id: &'static str, location: &'static str, tags: &'static [&'static str], run: CheckFn) -> CheckSpec {
    CheckSpec { id, location, tags, tier: Tier::PaperLevel, run }
}

/// Every check, in report order.
pub fn registry() -> Vec<CheckSpec> {
    let mut v = Vec::new();
    v.extend_from_slice(checks_groups::CHECKS);
    v.extend_from_slice(checks_poly::CHECKS);
    v.extend_from_slice(checks_lines::CHECKS);
    v.extend_from_slice(checks_80::CHECKS);
    v.extend_from_slice(checks_144::CHECKS);
    v
}

pub fn find_check(id: &str) -> Result<CheckSpec> {
    registry()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownKey(format!("check {id}")))
}

/// Comma-separated glob patterns matched against check ids and tags.
#[derive(Debug, Clone, Default)]
pub struct Filter {
    patterns: Vec<Pattern>,
}

impl Filter {
    pub fn all() -> Filter {
        Filter::default()
    }

    pub fn matches(&self, spec: &CheckSpec) -> bool {
        self.patterns.is_empty()
            || self
                .patterns
                .iter()
                .any(|p| p.matches(spec.id) || spec.tags.iter().any(|t| p.matches(t)))
    }
}

impl FromStr for Filter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Filter> {
        let patterns = s
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| Pattern::new(p).map_err(|e| Error::Parse(format!("bad filter {p:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Filter { patterns })
    }
}

/// Runs one check against a context, converting errors into statuses.
pub fn run_spec(spec: &CheckSpec, ctx: &Context) -> CheckResult {
    let start = Instant::now();
    let outcome = match (spec.run)(ctx) {
        Ok(o) => o,
        Err(e @ Error::Timeout { .. }) => Outcome {
            status: Status::Timeout,
            evidence: json!({ "error": e.to_string() }),
            erratum: None,
            note: None,
        },
        Err(e) => Outcome {
            status: Status::Fail,
            evidence: json!({ "error": e.to_string(), "diff": [{ "claim": "computation completed", "error": e.to_string() }] }),
            erratum: None,
            note: None,
        },
    };
    CheckResult {
        check_id: spec.id.to_string(),
        paper_location: spec.location.to_string(),
        status: outcome.status,
        evidence: outcome.evidence,
        runtime_ms: start.elapsed().as_millis() as u64,
        erratum: outcome.erratum,
        note: outcome.note,
    }
}

/// Runs a single check in a fresh context over the built-in catalog.
pub fn run_check(id: &str) -> Result<CheckResult> {
    let spec = find_check(id)?;
    let ctx = Context::new(Catalog::standard()?.clone());
    Ok(run_spec(&spec, &ctx))
}

/// Runner settings.
#[derive(Debug, Clone)]
pub struct RunOptions {
    pub filter: Filter,
    pub jobs: usize,
    pub step_budget: usize,
    pub seed: u64,
    /// Run only core-tier checks.
    pub core_only: bool,
}

impl Default for RunOptions {
    fn default() -> RunOptions {
        RunOptions {
            filter: Filter::all(),
            jobs: 1,
            step_budget: crate::ideals::DEFAULT_STEP_BUDGET,
            seed: context::DEFAULT_SEED,
            core_only: false,
        }
    }
}

/// Runs every matching check; results come back in registry order.
pub fn run_all(catalog: Catalog, options: &RunOptions) -> Report {
    let specs: Vec<CheckSpec> = registry()
        .into_iter()
        .filter(|s| options.filter.matches(s) && (!options.core_only || s.tier == Tier::Core))
        .collect();
    let ctx = Context::new(catalog).with_step_budget(options.step_budget).with_seed(options.seed);
    let jobs = options.jobs.max(1);
    let mut slots: Vec<Option<CheckResult>> = vec![None; specs.len()];
    if jobs == 1 {
        for (k, s) in specs.iter().enumerate() {
            slots[k] = Some(run_spec(s, &ctx));
        }
    } else {
        let next = std::sync::atomic::AtomicUsize::new(0);
        let done = std::sync::Mutex::new(&mut slots);
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(|| loop {
                    let k = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                    if k >= specs.len() {
                        break;
                    }
                    let r = run_spec(&specs[k], &ctx);
                    done.lock().expect("result lock")[k] = Some(r);
                });
            }
        });
    }
    Report::new(slots.into_iter().map(|r| r.expect("every check ran")).collect(), options)
}
