//! Group orders, structure, relations and subgroup scans.

use std::collections::BTreeMap;

use serde_json::json;

use super::{check, CheckSpec, Claims, Context, Outcome};
use crate::cyclo::lcm_u32;
use crate::error::Result;
use crate::group::{tag_subset, Cayley, GroupElement, IsoTag, MatrixGroup, Mode};
use crate::linalg::Mat;

pub(super) const CHECKS: &[CheckSpec] = &[
    check("H-order", "§3: \"Since |H|=32\"", &["heisenberg", "groups"], h_order),
    check("H-center-commutator", "§3: \"the center of H coincides with the commutator subgroup\"", &["heisenberg", "groups"], h_center),
    check("Hbar-type", "§3: \"H̅ ≅ μ₂⁴\"", &["heisenberg", "groups"], hbar_type),
    check("ST-relations", "§3: \"S^4=T^5=-I_4\"", &["relations", "80-groups"], st_relations),
    check("A-word", "§3: \"A=T^{4}\\cdot S\\cdot T\\cdot S\"", &["relations", "144-groups"], a_word),
    check("B-word", "§3: \"B=S\\cdot T^{4}\\cdot S\\cdot T\\cdot S\\cdot T^2\\cdot S\\cdot T^{3}\\cdot S\\cdot T\\cdot S\\cdot T^3\\cdot S\\cdot T^{3}\\cdot S\"", &["relations", "144-groups"], b_word),
    check("R-normalizes", "§3: \"Then R is also contained in N\"", &["relations", "80-groups"], r_normalizes),
    check("G80-orders", "§3: \"the group G̅₈₀\"", &["orders", "80-groups"], g80_orders),
    check("G160-orders", "§3: \"generated by ℍ and the matrices T and R^2\"", &["orders", "80-groups"], g160_orders),
    check("G320-orders", "§3: \"generated by ℍ and the matrices T and R\"", &["orders", "80-groups"], g320_orders),
    check("G144-order", "§3: \"G_144 is a finite subgroup of order 576\"", &["orders", "144-groups"], g144_order),
    check("inclusions-normality", "§3: \"the group G̅₈₀ is a normal subgroup in both G̅₁₆₀ and G̅₃₂₀\"", &["structure", "80-groups"], inclusions),
    check("G80-type", "§3: \"G̅₈₀≅μ₂⁴⋊μ₅\"", &["structure", "80-groups"], g80_type),
    check("G160-type", "§3: \"G̅₁₆₀ ≅ μ₂⁴⋊D₁₀\"", &["structure", "80-groups"], g160_type),
    check("G144-type", "§3: \"G̅₁₄₄ ≅ A₄×A₄\"", &["structure", "144-groups"], g144_type),
    check("G80-subgroup-classification", "§5: \"Then Γ is isomorphic to one of the following groups\"", &["subgroups", "80-groups"], g80_subgroups),
    check("H-irreducible-F2", "§5: \"the action of μ₅ on F₂⁴ is irreducible\"", &["subgroups", "80-groups"], h_irreducible),
];

fn orders(ctx: &Context, key: &str, linear: usize, projective: usize) -> Result<Outcome> {
    let mut c = Claims::new();
    c.eq(&format!("|{key}| (linear)"), linear, ctx.group(key, Mode::Linear)?.order());
    c.eq(&format!("|{key}| (projective)"), projective, ctx.group(key, Mode::Projective)?.order());
    Ok(c.finish())
}

fn h_order(ctx: &Context) -> Result<Outcome> {
    let mut c = Claims::new();
    c.eq("|H|", 32, ctx.group("H", Mode::Linear)?.order());
    c.eq("|H̅|", 16, ctx.group("H", Mode::Projective)?.order());
    c.eq("|ℍ|", 64, ctx.group("HH", Mode::Linear)?.order());
    c.eq("|ℍ̅|", 16, ctx.group("HH", Mode::Projective)?.order());
    Ok(c.finish())
}

fn scalar_strings(g: &MatrixGroup, idx: &[usize]) -> Vec<String> {
    let mut v: Vec<String> = idx
        .iter()
        .map(|&k| {
            let m = g.element(k).matrix();
            m.scalar_value().map_or_else(|| "non-scalar".to_string(), |s| format!("{s}*I"))
        })
        .collect();
    v.sort();
    v
}

fn h_center(ctx: &Context) -> Result<Outcome> {
    let h = ctx.group("H", Mode::Linear)?;
    let mut c = Claims::new();
    let n = h.field_index();
    let mut pm = vec![
        format!("{}*I", crate::cyclo::CycNum::from_int(n, -1)),
        format!("{}*I", crate::cyclo::CycNum::from_int(n, 1)),
    ];
    pm.sort();
    c.eq("center(H)", pm.clone(), scalar_strings(&h, &h.center()));
    let comm = h.commutator_subgroup()?;
    let idx: Vec<usize> = (0..comm.order()).collect();
    let comm = comm.embed(n)?;
    c.eq("[H,H]", pm, scalar_strings(&comm, &idx));
    Ok(c.finish())
}

fn hbar_type(ctx: &Context) -> Result<Outcome> {
    let h = ctx.group("H", Mode::Projective)?;
    let tag = h.tag_isomorphism_type()?;
    let mut c = Claims::new();
    c.eq("type", "elementary-abelian-2^4".to_string(), tag.name());
    c.holds("witness re-check", tag.verify(&h)?);
    Ok(c.finish())
}

fn st_relations(ctx: &Context) -> Result<Outcome> {
    let cat = ctx.catalog();
    let s = cat.matrix("S")?;
    let t = cat.matrix("T")?;
    let minus = Mat::identity(4, 1).scale(&crate::cyclo::CycNum::from_int(1, -1))?;
    let mut c = Claims::new();
    c.holds("S^4 = -I", s.pow(4) == minus.embed(s.field_index())?);
    c.holds("T^5 = -I", t.pow(5) == minus.embed(t.field_index())?);
    c.eq("order of S (linear)", 8, crate::group::element_order(&s, Mode::Linear)?);
    c.eq("order of T (linear)", 10, crate::group::element_order(&t, Mode::Linear)?);
    Ok(c.finish())
}

fn word(ctx: &Context, key: &str) -> Result<Outcome> {
    let cat = ctx.catalog();
    let mut c = Claims::new();
    c.holds(&format!("{key} equals its matrix"), cat.word_check(key)?);
    let entry = cat.get(key)?;
    let target = match &entry.value {
        crate::catalog::Value::Word { target: Some(t), .. } => t.clone(),
        _ => return Ok(c.finish()),
    };
    let printed = cat.printed_matrix(&target)?;
    let computed = cat.matrix(key)?;
    let diffs: Vec<_> = {
        let n = lcm_u32(printed.field_index(), computed.field_index());
        let (p, q) = (printed.embed(n)?, computed.embed(n)?);
        let mut v = Vec::new();
        for r in 0..4 {
            for col in 0..4 {
                if p.get(r, col) != q.get(r, col) {
                    v.push(json!({ "row": r + 1, "col": col + 1, "printed": p.get(r, col).to_string(), "word": q.get(r, col).to_string() }));
                }
            }
        }
        v
    };
    c.info("printed_vs_word", &diffs);
    c.info("printed_det", printed.det()?.to_string());
    c.eq("word determinant", "1".to_string(), computed.det()?.to_string());
    let mut out = c.finish();
    if let Some(e) = &cat.get(&target)?.erratum {
        out = out.with_erratum(format!("printed {target}: {}", e.note));
    }
    Ok(out)
}

fn a_word(ctx: &Context) -> Result<Outcome> {
    word(ctx, "A-word")
}

fn b_word(ctx: &Context) -> Result<Outcome> {
    word(ctx, "B-word")
}

/// Every conjugate g⁻¹·h·g of a generator h of ℍ lies in ℍ̅.
fn r_normalizes(ctx: &Context) -> Result<Outcome> {
    let cat = ctx.catalog();
    let hh = ctx.group("HH", Mode::Projective)?;
    let mut c = Claims::new();
    for key in ["R", "S", "T", "A", "B"] {
        let g = cat.matrix(key)?;
        let n = lcm_u32(g.field_index(), hh.field_index());
        let amb = hh.embed(n)?;
        let ge = GroupElement::new(g.embed(n)?, Mode::Projective)?;
        let mut ok = true;
        for h in amb.generators() {
            ok &= amb.contains(&h.conjugate_by(&ge)?);
        }
        c.holds(&format!("{key} normalizes ℍ̅"), ok);
    }
    Ok(c.finish())
}

fn g80_orders(ctx: &Context) -> Result<Outcome> {
    orders(ctx, "G80", 320, 80)
}

fn g160_orders(ctx: &Context) -> Result<Outcome> {
    orders(ctx, "G160", 640, 160)
}

fn g320_orders(ctx: &Context) -> Result<Outcome> {
    orders(ctx, "G320", 1280, 320)
}

fn g144_order(ctx: &Context) -> Result<Outcome> {
    orders(ctx, "G144", 576, 144)
}

fn inclusions(ctx: &Context) -> Result<Outcome> {
    let keys = ["H", "G80", "G160", "G320", "G144"];
    let groups = keys
        .iter()
        .map(|k| ctx.group(k, Mode::Projective))
        .collect::<Result<Vec<_>>>()?;
    let n = groups.iter().fold(1, |n, g| lcm_u32(n, g.field_index()));
    let g: BTreeMap<&str, MatrixGroup> = keys
        .iter()
        .zip(&groups)
        .map(|(k, g)| Ok((*k, g.embed(n)?)))
        .collect::<Result<_>>()?;
    let mut c = Claims::new();
    for (sub, sup) in [("G80", "G160"), ("G160", "G320"), ("G80", "G320"), ("H", "G80"), ("H", "G160"), ("H", "G320"), ("H", "G144")] {
        let ok = g[sub].is_subgroup_of(&g[sup]) && g[sup].is_normal(&g[sub])?;
        c.holds(&format!("{sub} normal in {sup}"), ok);
    }
    Ok(c.finish())
}

fn tag_check(ctx: &Context, key: &str, expected: &str) -> Result<Outcome> {
    let g = ctx.group(key, Mode::Projective)?;
    let tag = g.tag_isomorphism_type()?;
    let mut c = Claims::new();
    c.eq("type", expected.to_string(), tag.name());
    c.holds("witness re-check", tag.verify(&g)?);
    match &tag {
        IsoTag::E16semiC5 { normal, complement } | IsoTag::E16semiD10 { normal, complement } => {
            c.info("normal_subgroup_order", normal.len());
            c.info("complement_order", complement.len());
            let h = ctx.group("H", Mode::Projective)?;
            let n = lcm_u32(h.field_index(), g.field_index());
            let h = h.embed(n)?;
            let gn = g.embed(n)?;
            let normal_is_h = normal.len() == h.order() && normal.iter().all(|&k| h.contains(gn.element(k)));
            c.holds("normal 2^4 is the Heisenberg image", normal_is_h);
        }
        IsoTag::A4xA4 { left, right } => {
            c.info("left_factor_order", left.len());
            c.info("right_factor_order", right.len());
        }
        _ => {}
    }
    Ok(c.finish())
}

fn g80_type(ctx: &Context) -> Result<Outcome> {
    tag_check(ctx, "G80", "2^4:5")
}

fn g160_type(ctx: &Context) -> Result<Outcome> {
    tag_check(ctx, "G160", "2^4:D10")
}

fn g144_type(ctx: &Context) -> Result<Outcome> {
    tag_check(ctx, "G144", "A4xA4")
}

fn g80_subgroups(ctx: &Context) -> Result<Outcome> {
    let g = ctx.group("G80", Mode::Projective)?;
    let cay = Cayley::build(&g)?;
    let subs = g.generated_subgroups(4)?;
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut unexpected = Vec::new();
    for s in &subs {
        let tag = tag_subset(&cay, &s.members);
        let name = match &tag {
            IsoTag::Cyclic { n: 2, .. } => "elementary-abelian-2^1".to_string(),
            _ if s.members.count() == g.order() => "whole group".to_string(),
            t => t.name(),
        };
        let allowed = matches!(tag, IsoTag::Trivial | IsoTag::ElementaryAbelian2 { .. } | IsoTag::Cyclic { n: 2 | 5, .. })
            || s.members.count() == g.order();
        if !allowed {
            unexpected.push(name.clone());
        }
        *counts.entry(name).or_insert(0) += 1;
    }
    let mut c = Claims::new();
    c.info("subgroup_counts", &counts);
    c.info("subgroups_found", subs.len());
    c.eq("unexpected subgroup types", Vec::<String>::new(), unexpected);
    c.eq("number of 2^4 subgroups", 1, counts.get("elementary-abelian-2^4").copied().unwrap_or(0));
    Ok(c.finish())
}

/// Scans all subgroups of H̅ (subspaces of F₂⁴) for invariance under conjugation by T.
fn h_irreducible(ctx: &Context) -> Result<Outcome> {
    let h = ctx.group("H", Mode::Projective)?;
    let t = ctx.catalog().matrix("T")?;
    let n = lcm_u32(h.field_index(), t.field_index());
    let h = h.embed(n)?;
    let te = GroupElement::new(t.embed(n)?, Mode::Projective)?;
    let conj: Vec<usize> = h
        .elements()
        .iter()
        .map(|e| {
            let img = e.conjugate_by(&te)?;
            h.index_of(&img).ok_or_else(|| crate::error::Error::Internal("T does not normalize H̅".into()))
        })
        .collect::<Result<_>>()?;
    let subs = h.generated_subgroups(4)?;
    let mut invariant = Vec::new();
    for s in &subs {
        if s.members.iter().all(|k| s.members.contains(conj[k])) {
            invariant.push(s.members.count());
        }
    }
    let mut by_order: BTreeMap<usize, usize> = BTreeMap::new();
    for s in &subs {
        *by_order.entry(s.members.count()).or_insert(0) += 1;
    }
    let mut c = Claims::new();
    c.info("subgroups_by_order", &by_order);
    c.eq("subgroups of H̅", 67, subs.len());
    invariant.sort_unstable();
    c.eq("orders of T̅-invariant subgroups", vec![1, 16], invariant);
    Ok(c.finish())
}
