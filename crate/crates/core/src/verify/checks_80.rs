//! Orbits of length 16, the invariant quartics S₀…S₄, genus bounds and the degree-8 curves.

use std::sync::Arc;

use serde_json::json;

use super::checks_lines::{key_set, point_strings};
use super::context::common_eigenspaces;
use super::{check, stretch, CheckSpec, Claims, Context, Outcome};
use crate::cyclo::{lcm_u32, CycNum};
use crate::error::{Error, Result};
use crate::group::Mode;
use crate::ideals::{IdealBasis, MonomialOrder};
use crate::poly::{BinaryForm, HomPoly};
use crate::projgeom::{orbit, Orbit, ProjPoint};
use crate::rhenum::{solve, RHProblem};

pub(super) const CHECKS: &[CheckSpec] = &[
    check("sigma16-orbits", "§5: \"There are exactly four G̅₈₀-orbits of length 16 in P^3\"", &["80-orbits"], sigma16_orbits),
    check("S0-smooth", "§5: \"we see that S_0 is smooth\"", &["80-surfaces", "groebner"], s0_smooth),
    check("Si-singular-at-sigma16", "§5: \"Sing(S_1)=Σ_16^1\"", &["80-surfaces"], si_singular),
    check("table2-incidence", "§5: \"Σ_16^j ⊂ S_i if and only if j≠2i mod 5\"", &["80-surfaces", "table2"], table2_incidence),
    check("rh-80", "§5 genus lemma: \"2g-2=-160+40a_40+64a_16\"", &["80-curves", "riemann-hurwitz"], rh_80),
    check("line-restriction-8", "§5 remark on degree-8 curves: \"μ^4-(4ξ_5^3+4ξ_5^2+2)μ^2+1\"", &["80-curves"], line_restriction),
    check("Si-singular-exactly", "§5: \"Sing(S_1)=Σ_16^1\"", &["80-surfaces", "groebner"], si_singular_exactly),
    stretch("mckelvey-dim1", "§5 remark on degree-8 curves: \"defines a one-dimensional subscheme in P^3\"", &["80-curves", "groebner"], mckelvey),
];

/// The four orbits of length 16, labelled by the printed representatives.
pub(super) fn sigma16(ctx: &Context) -> Result<Arc<Vec<Orbit>>> {
    ctx.memo("sigma16", || {
        let g = ctx.group("G80", Mode::Projective)?;
        ctx.catalog().points("Sigma16-reps")?.iter().map(|p| orbit(&g, p)).collect()
    })
}

fn sigma16_orbits(ctx: &Context) -> Result<Outcome> {
    let g = ctx.group("G80", Mode::Projective)?;
    let t = ctx.catalog().matrix("T")?;
    let spaces = common_eigenspaces(std::slice::from_ref(&t))?;
    let mut c = Claims::new();
    c.eq("eigenspace dimensions of T", vec![1; 4], spaces.iter().map(Vec::len).collect::<Vec<_>>());
    let fixed: Vec<ProjPoint> = spaces.iter().map(|s| ProjPoint::new(s[0].clone())).collect::<Result<_>>()?;
    let orbits: Vec<Orbit> = fixed.iter().map(|p| orbit(&g, p)).collect::<Result<_>>()?;
    c.eq("orbit lengths of the fixed points of T̅", vec![16; 4], orbits.iter().map(Orbit::len).collect::<Vec<_>>());
    c.eq("stabilizer orders", vec![5; 4], orbits.iter().map(|o| o.stabilizer_order).collect::<Vec<_>>());
    let n = orbits[0].members[0].field_index();
    let sets = orbits.iter().map(|o| key_set(&o.members, n)).collect::<Result<Vec<_>>>()?;
    let distinct = (0..4).all(|i| (i + 1..4).all(|j| sets[i].is_disjoint(&sets[j])));
    c.holds("the four orbits are distinct", distinct);
    let fives = g.order_statistics().get(&5).copied().unwrap_or(0);
    c.eq("elements of order 5 (16 conjugate subgroups)", 64, fives);
    let reps = ctx.catalog().points("Sigma16-reps")?;
    let mut hit = Vec::new();
    for r in &reps {
        let k = r.embed(lcm_u32(n, r.field_index()))?;
        let m = lcm_u32(n, k.field_index());
        let mut idx = None;
        for (j, o) in orbits.iter().enumerate() {
            if key_set(&o.members, m)?.contains(k.embed(m)?.key()) {
                idx = Some(j);
            }
        }
        hit.push(idx);
    }
    let mut sorted = hit.clone();
    sorted.sort();
    c.eq("printed representatives meet each orbit once", vec![Some(0), Some(1), Some(2), Some(3)], sorted);
    c.info("fixed_points_of_T", point_strings(&fixed));
    Ok(c.finish().with_note(
        "a stabilizer of order 5 is conjugate to <T̅>, whose fixed points are its four eigenpoints, so these are all orbits of length 16",
    ))
}

fn s0_smooth(ctx: &Context) -> Result<Outcome> {
    let q0 = ctx.catalog().poly("S0@80")?;
    let gb = IdealBasis::new(q0.jacobian().to_vec(), MonomialOrder::Degrevlex)?.groebner(ctx.step_budget())?;
    let mut c = Claims::new();
    c.holds("Jacobian ideal is irrelevant", gb.is_irrelevant()?);
    c.info("basis_size", gb.generators().len());
    c.info("steps", gb.steps());
    Ok(c.finish())
}

/// Vanishing of f and all partials at p.
pub(super) fn singular_at(f: &HomPoly, p: &ProjPoint) -> Result<bool> {
    let n = lcm_u32(f.field_index(), p.field_index());
    let f = f.embed(n)?;
    let p = p.embed(n)?;
    if !f.eval_point(&p)?.is_zero() {
        return Ok(false);
    }
    f.is_singular_at(&p)
}

pub(super) fn on_surface(f: &HomPoly, p: &ProjPoint) -> Result<bool> {
    let n = lcm_u32(f.field_index(), p.field_index());
    Ok(f.embed(n)?.eval_point(&p.embed(n)?)?.is_zero())
}

fn si_singular(ctx: &Context) -> Result<Outcome> {
    let orbits = sigma16(ctx)?;
    let mut c = Claims::new();
    for i in 1..=4 {
        let f = ctx.catalog().poly(&format!("S{i}@80"))?;
        let sing = orbits[i - 1]
            .members
            .iter()
            .map(|p| singular_at(&f, p))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|&b| b)
            .count();
        c.eq(&format!("points of Σ16^{i} singular on S{i}"), 16, sing);
    }
    Ok(c.finish().with_note("checks Σ16^i ⊂ Sing(S_i); equality is checked by Si-singular-exactly"))
}

fn table2_incidence(ctx: &Context) -> Result<Outcome> {
    let orbits = sigma16(ctx)?;
    let printed = ctx.catalog().table("Table2")?;
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    let mut rule = Vec::new();
    for (j, (label, cells)) in printed.rows.iter().enumerate() {
        let mut row = vec![label.clone()];
        for i in 0..4 {
            let f = ctx.catalog().poly(&format!("S{}@80", i + 1))?;
            let p = &orbits[j].members[0];
            let cell = if singular_at(&f, p)? {
                "Sing"
            } else if on_surface(&f, p)? {
                "+"
            } else {
                "-"
            };
            if cells[i] != cell {
                mismatches.push(format!("{label} / {}: printed {}, computed {cell}", printed.header[i + 1], cells[i]));
            }
            let contained = cell != "-";
            let expected = (j + 1) % 5 != (2 * (i + 1)) % 5;
            if contained != expected {
                rule.push(format!("Σ16^{} and S{}", j + 1, i + 1));
            }
            row.push(cell.to_string());
        }
        rows.push(row);
    }
    let mut c = Claims::new();
    c.info("table", json!({ "header": printed.header, "rows": rows }));
    c.eq("mismatched cells", Vec::<String>::new(), mismatches);
    c.eq("violations of Σ16^j ⊂ S_i ⟺ j ≠ 2i mod 5", Vec::<String>::new(), rule);
    Ok(c.finish())
}

/// Solves a genus problem and compares it with a printed table whose columns are rows of the solution.
pub(super) fn rh_table(ctx: &Context, order: u64, stabs: &[u64], gmax: u64, table_key: &str, genera: &[u64]) -> Result<Outcome> {
    let table = ctx.catalog().table(table_key)?;
    let problem = RHProblem::new(order, stabs, gmax)?.with_genus_min(2);
    let sols = solve(&problem);
    let lengths = problem.orbit_lengths();
    let mut computed: Vec<Vec<u64>> = sols
        .iter()
        .map(|s| std::iter::once(s.genus).chain(s.count_vector()).collect())
        .collect();
    computed.sort();
    // printed columns: g then a_l in the table's row order
    let cols = table.header.len() - 1;
    let mut printed = Vec::new();
    for k in 0..cols {
        let g: u64 = table.header[k + 1].parse().map_err(|_| Error::Parse("genus header".into()))?;
        let mut v = vec![g];
        for l in &lengths {
            let row = table
                .rows
                .iter()
                .find(|(lab, _)| lab == &format!("a{l}"))
                .ok_or_else(|| Error::Parse(format!("{table_key} has no row a{l}")))?;
            v.push(row.1[k].parse().map_err(|_| Error::Parse("count cell".into()))?);
        }
        printed.push(v);
    }
    printed.sort();
    let bad_rows: Vec<Vec<u64>> = printed
        .iter()
        .filter(|r| {
            let rhs = -2 * order as i64 + lengths.iter().zip(&r[1..]).map(|(&l, &a)| (order - l) as i64 * a as i64).sum::<i64>();
            2 * r[0] as i64 - 2 != rhs
        })
        .cloned()
        .collect();
    let mut genus_set: Vec<u64> = computed.iter().map(|r| r[0]).collect();
    genus_set.dedup();
    let mut c = Claims::new();
    c.info("orbit_lengths", &lengths);
    c.info("quotient_genera", sols.iter().map(|s| s.quotient_genus).collect::<Vec<_>>());
    c.info("solutions", sols.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    c.eq("printed rows violating the formula with quotient genus 0", Vec::<Vec<u64>>::new(), bad_rows);
    c.eq("possible genera", genera.to_vec(), genus_set);
    c.eq("rows (g, counts by ascending orbit length)", printed, computed);
    Ok(c.finish())
}

fn rh_80(ctx: &Context) -> Result<Outcome> {
    rh_table(ctx, 80, &[2, 5], 19, "RH80", &[5, 13, 17])
}

fn line_restriction(ctx: &Context) -> Result<Outcome> {
    let cat = ctx.catalog();
    let (line, _) = cat.line("ell")?;
    let table = cat.table("line-restriction")?;
    let mut c = Claims::new();
    // The form depends on the coordinate vectors, not only on the points: [μ : λi : λ : -μi].
    let p = raw_vector("0, i, 1, 0")?;
    let q = raw_vector("1, 0, 0, -i")?;
    c.holds("the parameterised points lie on the line", line.contains(&ProjPoint::new(p.clone())?) && line.contains(&ProjPoint::new(q.clone())?));
    let mut forms = serde_json::Map::new();
    for (label, cells) in &table.rows {
        let keys: Vec<&str> = label.split_whitespace().collect();
        let expected = BinaryForm::new(
            cells[0].split(',').map(|s| CycNum::parse(s.trim())).collect::<Result<Vec<_>>>()?,
        )?;
        let mut restricted = Vec::new();
        for k in &keys {
            let f = cat.poly(&format!("{k}@80"))?;
            let b = BinaryForm::restrict(&f, &p, &q)?;
            forms.insert(k.to_string(), json!(b.normalized().to_string()));
            restricted.push(b);
        }
        let n = restricted.iter().fold(expected.coeffs()[0].field_index(), |n, b| lcm_u32(n, b.coeffs()[0].field_index()));
        let lift = |b: &BinaryForm| -> Result<BinaryForm> {
            BinaryForm::new(b.coeffs().iter().map(|x| x.embed(n)).collect::<Result<_>>()?)
        };
        let e = lift(&expected)?;
        let r = restricted.iter().map(lift).collect::<Result<Vec<_>>>()?;
        c.holds(&format!("{} and {} restrict proportionally", keys[0], keys[1]), r[0].proportional_to(&r[1]));
        c.holds(&format!("restriction of {} matches the printed form", keys[0]), r[0].proportional_to(&e));
    }
    c.info("restrictions", forms);
    Ok(c.finish().with_note(
        "the line is parameterised as λ·(0,i,1,0) + μ·(1,0,0,-i); rescaling either vector by i swaps the two printed forms",
    ))
}

fn raw_vector(s: &str) -> Result<Vec<CycNum>> {
    s.split(',').map(|c| CycNum::parse(c.trim())).collect()
}

/// Hilbert function of the Jacobian ideal in two high degrees, and the dimension of its zero set.
pub(super) fn singular_scheme_length(ctx: &Context, f: &HomPoly) -> Result<(i32, Vec<String>)> {
    let gb = IdealBasis::new(f.jacobian().to_vec(), MonomialOrder::Degrevlex)?.groebner(ctx.step_budget())?;
    let dim = gb.projective_dimension()?;
    let vals = [20, 21].iter().map(|&d| gb.hilbert_function(d).map(|v| v.to_string())).collect::<Result<Vec<_>>>()?;
    Ok((dim, vals))
}

fn si_singular_exactly(ctx: &Context) -> Result<Outcome> {
    let f = ctx.catalog().poly("S1@80")?;
    let (dim, vals) = singular_scheme_length(ctx, &f)?;
    let mut c = Claims::new();
    c.eq("dimension of Sing(S1)", 0, dim);
    c.eq("length of the singular scheme in degrees 20, 21", vec!["16".to_string(), "16".to_string()], vals);
    Ok(c.finish().with_note("a reduced scheme of length 16 containing Σ16^1 is Σ16^1 with all singularities nodes; S2..S4 are Galois conjugates"))
}

fn mckelvey(ctx: &Context) -> Result<Outcome> {
    let cat = ctx.catalog();
    let f = cat.poly("S1@80")?;
    let g = cat.poly("S4@80")?;
    let (jf, jg) = (f.jacobian(), g.jacobian());
    let mut gens = vec![f.clone(), g.clone()];
    for a in 0..4 {
        for b in a + 1..4 {
            gens.push(jf[a].try_mul(&jg[b])?.try_sub(&jf[b].try_mul(&jg[a])?)?);
        }
    }
    let gb = IdealBasis::new(gens, MonomialOrder::Degrevlex)?.groebner(ctx.step_budget())?;
    let mut c = Claims::new();
    c.eq("projective dimension", 1, gb.projective_dimension()?);
    c.info("basis_size", gb.generators().len());
    Ok(c.finish())
}
