use std::path::{Path, PathBuf};

use serde_json::json;

use pgl4_core::catalog::Catalog;
use pgl4_core::cyclo::{lcm_u32, MAX_FIELD_INDEX};
use pgl4_core::error::Error;
use pgl4_core::group::{MatrixGroup, Mode};
use pgl4_core::ideals::{IdealBasis, MonomialOrder, DEFAULT_STEP_BUDGET};
use pgl4_core::poly::{invariant_basis, one_dim_multiplicities, semi_invariant_basis, HomPoly};
use pgl4_core::projgeom::{orbit as point_orbit, ProjPoint};
use pgl4_core::rhenum::{solve, RHProblem};
use pgl4_core::verify::{registry, render_markdown, render_text, run_all, Filter, RunOptions};

use crate::{Format, GroebnerArgs, InvariantsArgs, OrbitArgs, RhArgs, VerifyArgs, OUTPUT_DIR_ENV};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let code = match e {
            Error::Parse(_)
            | Error::UnknownKey(_)
            | Error::Domain(_)
            | Error::Precondition(_)
            | Error::CostCap(_)
            | Error::GroupTooLarge { .. } => EXIT_USAGE,
            Error::Timeout { .. } => EXIT_FAILED,
            Error::DivisionByZero | Error::Internal(_) => EXIT_INTERNAL,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError { code: EXIT_INTERNAL, message: e.to_string() }
    }
}

type CliResult = Result<u8, CliError>;

fn resolve_output(path: &Path) -> PathBuf {
    match std::env::var_os(OUTPUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(p) => {
            let p = resolve_output(p);
            if let Some(parent) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent)?;
            }
            std::fs::write(&p, text)?;
            eprintln!("wrote {}", p.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn catalog() -> Result<&'static Catalog, CliError> {
    Ok(Catalog::standard()?)
}

/// Common field for the inputs, or the requested one if it contains them.
fn working_field(needed: u32, requested: Option<u32>) -> Result<u32, CliError> {
    match requested {
        None => Ok(needed),
        Some(n) if n == 0 || n > MAX_FIELD_INDEX => {
            Err(CliError::usage(format!("--field {n} is outside 1..={MAX_FIELD_INDEX}")))
        }
        Some(n) if n % needed != 0 => Err(CliError::usage(format!(
            "--field {n} lacks the roots of unity the input needs (a multiple of {needed} is required)"
        ))),
        Some(n) => Ok(n),
    }
}

pub fn verify(a: &VerifyArgs) -> CliResult {
    if a.jobs == 0 {
        return Err(CliError::usage("--jobs must be at least 1"));
    }
    let filter = match &a.filter {
        Some(f) => f.parse::<Filter>().map_err(|e| CliError::usage(e.to_string()))?,
        None => Filter::all(),
    };
    let options = RunOptions {
        filter,
        jobs: a.jobs,
        step_budget: a.steps.unwrap_or(DEFAULT_STEP_BUDGET),
        seed: a.seed.unwrap_or(RunOptions::default().seed),
        core_only: a.strict && !a.with_stretch,
    };
    let report = run_all(catalog()?.clone(), &options);
    if report.checks.is_empty() {
        return Err(CliError::usage("the filter selects no checks"));
    }
    let text = match a.format {
        Format::Json => pretty(&report.to_json()),
        Format::Md => render_markdown(&report),
        Format::Text => render_text(&report),
    };
    emit(&text, a.output.as_deref())?;
    let s = &report.summary;
    if a.output.is_some() {
        eprintln!("{} pass, {} fail, {} skipped, {} timeout", s.pass, s.fail, s.skipped, s.timeout);
    }
    Ok(if report.succeeded(a.strict) { EXIT_OK } else { EXIT_FAILED })
}

fn parse_mode(s: &str) -> Result<Mode, CliError> {
    s.parse::<Mode>().map_err(|_| CliError::usage(format!("unknown mode {s}; use linear or projective")))
}

pub fn orbit(a: &OrbitArgs) -> CliResult {
    let mode = parse_mode(&a.group.mode)?;
    let g = catalog()?.group(&a.group.group, mode)?;
    let p = ProjPoint::parse(&a.point)?;
    let n = working_field(lcm_u32(g.field_index(), p.field_index()), a.group.field)?;
    let (g, p) = (g.embed(n)?, p.embed(n)?);
    let o = point_orbit(&g, &p)?;
    let text = match a.format {
        Format::Json => pretty(&json!({
            "group": a.group.group,
            "mode": mode.to_string(),
            "group_order": o.group_order,
            "field": n,
            "point": p.to_string(),
            "orbit_length": o.len(),
            "stabilizer_order": o.stabilizer_order,
            "points": o.members.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
        })),
        _ => {
            let mut s = format!(
                "group {} ({mode}, order {}), field Q(ζ_{n})\norbit of {p}: {} points, stabilizer order {}\n",
                a.group.group,
                o.group_order,
                o.len(),
                o.stabilizer_order
            );
            for q in &o.members {
                s.push_str(&format!("  {q}\n"));
            }
            s
        }
    };
    emit(&text, None)?;
    Ok(EXIT_OK)
}

fn linear_group(key: &str, field: Option<u32>) -> Result<MatrixGroup, CliError> {
    let g = catalog()?.group(key, Mode::Linear)?;
    let n = working_field(g.field_index(), field)?;
    Ok(g.embed(n)?)
}

pub fn invariants(a: &InvariantsArgs) -> CliResult {
    let g = linear_group(&a.group, a.field)?;
    let mults = one_dim_multiplicities(&g, a.degree)?;
    let basis = invariant_basis(&g, a.degree)?;
    let nonzero: Vec<_> = mults.iter().filter(|m| m.multiplicity > 0).collect();
    let total: u64 = nonzero.iter().map(|m| m.multiplicity).sum();
    // Each character with positive multiplicity gives invariant hypersurfaces of the projective group.
    let semi: Vec<Vec<HomPoly>> = nonzero
        .iter()
        .map(|m| semi_invariant_basis(&g, a.degree, &m.character))
        .collect::<Result<_, _>>()?;
    let text = match a.format {
        Format::Json => pretty(&json!({
            "group": a.group,
            "group_order": g.order(),
            "degree": a.degree,
            "one_dimensional_characters": mults.len(),
            "multiplicities": nonzero.iter().map(|m| json!({
                "trivial": m.character.is_trivial(),
                "generator_values": m.generator_values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "multiplicity": m.multiplicity,
            })).collect::<Vec<_>>(),
            "semi_invariants": semi.iter().flatten().map(|f| f.normalized().to_string()).collect::<Vec<_>>(),
            "total_multiplicity": total,
            "invariants": basis.iter().map(|f| f.normalized().to_string()).collect::<Vec<_>>(),
        })),
        _ => {
            let mut s = format!(
                "group {} (linear lift, order {}), degree {}\n{} degree-one characters; nonzero multiplicities (total {total}):\n",
                a.group,
                g.order(),
                a.degree,
                mults.len()
            );
            for (m, basis) in nonzero.iter().zip(&semi) {
                let vals: Vec<String> = m.generator_values.iter().map(|v| v.to_string()).collect();
                let tag = if m.character.is_trivial() { " (trivial)" } else { "" };
                s.push_str(&format!("  [{}]{tag}: {}\n", vals.join(", "), m.multiplicity));
                for f in basis {
                    s.push_str(&format!("      {}\n", f.normalized()));
                }
            }
            s.push_str(&format!("invariant polynomials: {}\n", basis.len()));
            for f in &basis {
                s.push_str(&format!("  {}\n", f.normalized()));
            }
            s
        }
    };
    emit(&text, None)?;
    Ok(EXIT_OK)
}

pub fn rh(a: &RhArgs) -> CliResult {
    let problem = RHProblem::new(a.order, &a.stabilizers, a.genus_max)?.with_genus_min(a.genus_min);
    let sols = solve(&problem);
    let text = match a.format {
        Format::Json => pretty(&json!({
            "group_order": a.order,
            "orbit_lengths": problem.orbit_lengths(),
            "solutions": sols.iter().map(|s| json!({
                "genus": s.genus,
                "quotient_genus": s.quotient_genus,
                "counts": s.counts,
            })).collect::<Vec<_>>(),
        })),
        _ => {
            let mut s = format!(
                "|G| = {}, orbit lengths {:?}, {} <= g <= {}: {} solutions\n",
                a.order,
                problem.orbit_lengths(),
                a.genus_min,
                a.genus_max,
                sols.len()
            );
            for sol in &sols {
                s.push_str(&format!("  {sol}\n"));
            }
            s
        }
    };
    emit(&text, None)?;
    Ok(EXIT_OK)
}

pub fn groebner(a: &GroebnerArgs) -> CliResult {
    let cat = catalog()?;
    let mut polys = a.polys.iter().map(|s| HomPoly::parse(s)).collect::<Result<Vec<_>, _>>()?;
    for k in &a.keys {
        polys.push(cat.poly(k)?);
    }
    if polys.is_empty() {
        return Err(CliError::usage("give at least one --poly or --key"));
    }
    if a.jacobian {
        if polys.len() != 1 {
            return Err(CliError::usage("--jacobian needs exactly one polynomial"));
        }
        polys = polys[0].jacobian().to_vec();
    }
    let needed = polys.iter().fold(1, |n, f| lcm_u32(n, f.field_index()));
    let n = working_field(needed, a.field)?;
    let polys = polys.iter().map(|f| f.embed(n)).collect::<Result<Vec<_>, _>>()?;
    let order = a.order.parse::<MonomialOrder>().map_err(|e| CliError::usage(e.to_string()))?;
    let budget = a.steps.unwrap_or(DEFAULT_STEP_BUDGET);
    let gb = IdealBasis::new(polys, order)?.groebner(budget)?;
    let dim = gb.projective_dimension()?;
    let irrelevant = gb.is_irrelevant()?;
    let basis: Vec<String> = gb.generators().iter().map(|f| f.to_string()).collect();
    let text = match a.format {
        Format::Json => {
            let mut v = json!({
                "order": order.to_string(),
                "field": n,
                "steps": gb.steps(),
                "basis_size": basis.len(),
                "projective_dimension": dim,
                "irrelevant": irrelevant,
            });
            if a.print_basis {
                v["basis"] = json!(basis);
            }
            pretty(&v)
        }
        _ => {
            let mut s = format!(
                "{order} basis in Q(ζ_{n}): {} elements after {} steps\nprojective dimension {dim}{}\n",
                basis.len(),
                gb.steps(),
                if irrelevant { " (empty zero set)" } else { "" }
            );
            if a.print_basis {
                for f in &basis {
                    s.push_str(&format!("  {f}\n"));
                }
            }
            s
        }
    };
    emit(&text, None)?;
    Ok(EXIT_OK)
}

pub fn catalog_export(keys: &[String], format: Format, output: Option<&Path>) -> CliResult {
    let cat = catalog()?;
    let keys: Vec<&str> = if keys.is_empty() { cat.keys().collect() } else { keys.iter().map(String::as_str).collect() };
    let text = match format {
        Format::Json => pretty(&cat.export_json(&keys)?),
        Format::Text => cat.export_text(&keys)?,
        Format::Md => format!("```text\n{}```\n", cat.export_text(&keys)?),
    };
    emit(&text, output)?;
    Ok(EXIT_OK)
}

pub fn list_checks(format: Format) -> CliResult {
    let specs = registry();
    let text = match format {
        Format::Json => pretty(&json!(specs
            .iter()
            .map(|s| json!({ "check_id": s.id, "tier": s.tier, "tags": s.tags, "paper_location": s.location }))
            .collect::<Vec<_>>())),
        _ => specs
            .iter()
            .map(|s| {
                let tier = serde_json::to_value(s.tier).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
                format!("{:<28} {:<12} {:<40} {}\n", s.id, tier, s.tags.join(","), s.location)
            })
            .collect(),
    };
    emit(&text, None)?;
    Ok(EXIT_OK)
}
