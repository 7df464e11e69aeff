//! The thirty lines, the ten quadrics, the triple points and the curves L₁₀, L₁₀′, L₁₀″.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde_json::json;

use super::context::common_fixed_points;
use super::{check, CheckSpec, Claims, Context, Outcome};
use crate::cyclo::lcm_u32;
use crate::error::{Error, Result};
use crate::group::{Cayley, IsoTag, Mode};
use crate::projgeom::{canonical_point_set, line_orbit, orbit, symmetric_difference, triple_point_census, Orbit, ProjLine, ProjPoint};

pub(super) const CHECKS: &[CheckSpec] = &[
    check("fixed-lines-30", "§3: \"the locus of fixed points of g consists of two skew lines\"", &["lines", "80-lines"], fixed_lines_30),
    check("fixed-lines-disjoint", "§3: \"{L_g,L'_g}∩{L_h,L'_h}=∅\"", &["lines", "80-lines"], fixed_lines_disjoint),
    check("table1-incidence", "§3 line table: \"Ten H-invariant quadrics and thirty lines in them\"", &["lines", "table1", "80-lines"], table1_incidence),
    check("lines-per-quadric-12", "§3: \"contains exactly 12 such lines\"", &["lines", "table1", "80-lines"], lines_per_quadric),
    check("quadric-pairs-4-lines", "§3: \"intersect in a quadruple of lines in L_30\"", &["lines", "table1", "80-lines"], quadric_pairs),
    check("triple-points", "§3: \"there are exactly three lines from L_30 passing through P\"", &["lines", "80-orbits"], triple_points),
    check("sigma20-list", "§3: \"Σ_20 be the subset in P^3 that consists of the 20 points\"", &["80-orbits"], sigma20_list),
    check("sigma20-orbits", "§5: \"are the only G̅₈₀-orbits of length 20 in P^3\"", &["80-orbits"], sigma20_orbits),
    check("L10-disjoint", "§5: \"The curve L_10 is a disjoint union of ten lines\"", &["80-lines", "80-curves"], l10_disjoint),
    check("L10-prime-wheel", "§5: \"j-i=±1 mod 5\"", &["80-lines", "80-curves"], l10_prime_wheel),
    check("L10-dprime-wheel", "§5: \"j-i=±2 mod 5\"", &["80-lines", "80-curves"], l10_dprime_wheel),
    check("L10-intersections", "§5: \"L_10'∩L_10''=Σ_20\"", &["80-lines", "80-curves"], l10_intersections),
];

/// Canonical sorted keys of a point set in field `n`.
pub(super) fn key_set(points: &[ProjPoint], n: u32) -> Result<BTreeSet<Vec<u8>>> {
    points.iter().map(|p| Ok(p.embed(n)?.key().to_vec())).collect()
}

pub(super) fn point_strings(points: &[ProjPoint]) -> Vec<String> {
    points.iter().map(|p| p.to_string()).collect()
}

fn lines_field(lines: &[ProjLine]) -> u32 {
    lines.iter().fold(1, |n, l| lcm_u32(n, l.field_index()))
}

fn line_keys(lines: &[ProjLine], n: u32) -> Result<BTreeSet<Vec<u8>>> {
    lines.iter().map(|l| Ok(l.embed(n)?.key().to_vec())).collect()
}

fn fixed_lines_30(ctx: &Context) -> Result<Outcome> {
    let pairs = ctx.involution_lines()?;
    let mut fixed: Vec<ProjLine> = Vec::new();
    for (a, b) in pairs.iter() {
        fixed.push(a.clone());
        fixed.push(b.clone());
    }
    let table: Vec<ProjLine> = ctx.lines30()?.iter().map(|(_, l)| l.clone()).collect();
    let mut all = fixed.clone();
    all.extend(table.iter().cloned());
    let n = lines_field(&all);
    let fk = line_keys(&fixed, n)?;
    let tk = line_keys(&table, n)?;
    let mut c = Claims::new();
    c.eq("involutions of H̅", 15, pairs.len());
    c.eq("distinct fixed lines", 30, fk.len());
    c.holds("fixed lines are the thirty table lines", fk == tk);
    Ok(c.finish())
}

fn fixed_lines_disjoint(ctx: &Context) -> Result<Outcome> {
    let pairs = ctx.involution_lines()?;
    let mut c = Claims::new();
    let mut skew = 0;
    for (a, b) in pairs.iter() {
        if a.is_skew_to(b)? {
            skew += 1;
        }
    }
    c.eq("pairs of skew fixed lines", 15, skew);
    let mut shared = 0;
    for (i, (a, b)) in pairs.iter().enumerate() {
        for (c2, d) in &pairs[i + 1..] {
            if a == c2 || a == d || b == c2 || b == d {
                shared += 1;
            }
        }
    }
    c.eq("pairs of involutions sharing a fixed line", 0, shared);
    Ok(c.finish())
}

/// Incidence of the thirty lines with the ten quadrics.
fn incidence(ctx: &Context) -> Result<Arc<Vec<(String, Vec<bool>)>>> {
    ctx.memo("line-quadric-incidence", || {
        let qs = (1..=10).map(|k| ctx.catalog().poly(&format!("Q{k}"))).collect::<Result<Vec<_>>>()?;
        ctx.lines30()?
            .iter()
            .map(|(label, l)| Ok((label.clone(), qs.iter().map(|q| q.contains_line(l)).collect::<Result<Vec<_>>>()?)))
            .collect()
    })
}

fn sign(b: bool) -> &'static str {
    if b {
        "+"
    } else {
        "-"
    }
}

fn table1_incidence(ctx: &Context) -> Result<Outcome> {
    let inc = incidence(ctx)?;
    let printed = ctx.catalog().table("Table1")?;
    let expected = printed.signs()?;
    let mut c = Claims::new();
    let rows: Vec<Vec<String>> = inc
        .iter()
        .map(|(l, v)| std::iter::once(l.clone()).chain(v.iter().map(|&b| sign(b).to_string())).collect())
        .collect();
    c.info("table", json!({ "header": printed.header, "rows": rows }));
    let mut mismatches = Vec::new();
    for ((label, got), want) in inc.iter().zip(&expected) {
        for (j, (g, w)) in got.iter().zip(want).enumerate() {
            if g != w {
                mismatches.push(format!("{label} / {}: printed {}, computed {}", printed.header[j + 1], sign(*w), sign(*g)));
            }
        }
    }
    c.eq("rows", expected.len(), inc.len());
    c.eq("mismatched cells", Vec::<String>::new(), mismatches);
    Ok(c.finish())
}

fn lines_per_quadric(ctx: &Context) -> Result<Outcome> {
    let inc = incidence(ctx)?;
    let per_quadric: Vec<usize> = (0..10).map(|j| inc.iter().filter(|(_, v)| v[j]).count()).collect();
    let per_line: Vec<usize> = inc.iter().map(|(_, v)| v.iter().filter(|&&b| b).count()).collect();
    let mut c = Claims::new();
    c.eq("lines on each quadric", vec![12; 10], per_quadric);
    c.eq("quadrics through each line", vec![4; 30], per_line);
    Ok(c.finish())
}

fn quadric_pairs(ctx: &Context) -> Result<Outcome> {
    let inc = incidence(ctx)?;
    let mut counts = BTreeMap::new();
    let mut bad = Vec::new();
    for i in 0..10 {
        for j in i + 1..10 {
            let k = inc.iter().filter(|(_, v)| v[i] && v[j]).count();
            *counts.entry(k).or_insert(0usize) += 1;
            if k != 4 {
                bad.push(format!("Q{} Q{}: {k}", i + 1, j + 1));
            }
        }
    }
    let mut c = Claims::new();
    c.info("shared_line_counts", &counts);
    c.eq("quadric pairs not sharing exactly four lines", Vec::<String>::new(), bad);
    Ok(c.finish())
}

/// The three orbits of length 20, each chosen as the orbit of a printed point
/// that contains the most points of its printed list.
pub(super) fn sigma20_orbits_computed(ctx: &Context) -> Result<Arc<Vec<(&'static str, Orbit)>>> {
    ctx.memo("sigma20-orbits", || {
        let g = ctx.group("G80", Mode::Projective)?;
        let mut out = Vec::new();
        for key in ["Sigma20", "Sigma20-prime", "Sigma20-dprime"] {
            let printed = ctx.catalog().points(key)?;
            let mut best: Option<(usize, Orbit)> = None;
            for p in &printed {
                let o = orbit(&g, p)?;
                let n = lcm_u32(o.members[0].field_index(), p.field_index());
                let ks = key_set(&o.members, n)?;
                let hits = key_set(&printed, n)?.intersection(&ks).count();
                if best.as_ref().map_or(true, |(h, _)| hits > *h) {
                    best = Some((hits, o));
                }
            }
            let (_, o) = best.ok_or_else(|| Error::Internal(format!("{key} is empty")))?;
            out.push((key, o));
        }
        Ok(out)
    })
}

fn triple_points(ctx: &Context) -> Result<Outcome> {
    let lines: Vec<ProjLine> = ctx.lines30()?.iter().map(|(_, l)| l.clone()).collect();
    let census = triple_point_census(&lines)?;
    let mut by_count: BTreeMap<usize, usize> = BTreeMap::new();
    for (_, k) in &census {
        *by_count.entry(*k).or_insert(0) += 1;
    }
    let orbits = sigma20_orbits_computed(ctx)?;
    let mut union = Vec::new();
    for (_, o) in orbits.iter() {
        union.extend(o.members.iter().cloned());
    }
    let pts: Vec<ProjPoint> = census.iter().map(|(p, _)| p.clone()).collect();
    let n = lcm_u32(lines_field(&lines), union[0].field_index());
    let mut c = Claims::new();
    c.info("lines_through_point_histogram", &by_count);
    c.eq("intersection points", 60, census.len());
    c.eq("points not on exactly three lines", 0, census.iter().filter(|(_, k)| *k != 3).count());
    c.holds("points = Σ20 ∪ Σ20' ∪ Σ20''", key_set(&pts, n)? == key_set(&union, n)?);
    Ok(c.finish())
}

/// Printed list vs computed orbit, for one list.
fn list_report(ctx: &Context, key: &str, o: &Orbit) -> Result<(serde_json::Value, bool)> {
    let printed = ctx.catalog().points(key)?;
    let distinct = canonical_point_set(&printed)?;
    let n = lcm_u32(o.members[0].field_index(), distinct[0].field_index());
    let d: Vec<ProjPoint> = distinct.iter().map(|p| p.embed(n)).collect::<Result<_>>()?;
    let m: Vec<ProjPoint> = o.members.iter().map(|p| p.embed(n)).collect::<Result<_>>()?;
    let (extra, missing) = symmetric_difference(&d, &m);
    let clean = printed.len() == distinct.len() && extra.is_empty() && missing.is_empty();
    Ok((
        json!({
            "printed_entries": printed.len(),
            "printed_distinct": distinct.len(),
            "printed_not_in_orbit": point_strings(&extra),
            "orbit_points_not_printed": point_strings(&missing),
        }),
        clean,
    ))
}

fn sigma20_list(ctx: &Context) -> Result<Outcome> {
    let orbits = sigma20_orbits_computed(ctx)?;
    let mut c = Claims::new();
    let mut errata = Vec::new();
    for (key, o) in orbits.iter() {
        c.eq(&format!("{key} orbit length"), 20, o.len());
        let (ev, clean) = list_report(ctx, key, o)?;
        c.info(key, ev);
        if !clean {
            errata.push(format!("{key}: printed list differs from the computed orbit"));
        }
        c.info(&format!("{key}_orbit"), point_strings(&o.members));
    }
    let mut out = c.finish();
    if !errata.is_empty() {
        out = out.with_erratum(errata.join("; "));
    }
    Ok(out)
}

/// Orbits of length 20 have Klein stabilizers inside H̅; scanning the fixed
/// points of every Klein subgroup finds them all.
fn sigma20_orbits(ctx: &Context) -> Result<Outcome> {
    let g = ctx.group("G80", Mode::Projective)?;
    let stats = g.order_statistics();
    let lifted = ctx.lifted("G80")?;
    let cay = Cayley::build(&g)?;
    let mut c = Claims::new();
    c.eq("element orders of G̅80", BTreeMap::from([(1u32, 1usize), (2, 15), (5, 64)]), stats.clone());
    let orbits = sigma20_orbits_computed(ctx)?;
    for (key, o) in orbits.iter() {
        c.eq(&format!("{key} length"), 20, o.len());
        let stab = crate::projgeom::stabilizer(&g, &o.seed)?;
        let tag = stab.tag_isomorphism_type()?;
        c.eq(&format!("{key} stabilizer"), "elementary-abelian-2^2".to_string(), tag.name());
    }
    let klein: Vec<_> = g
        .generated_subgroups(2)?
        .into_iter()
        .filter(|s| matches!(tag_subset_of(&cay, s), IsoTag::ElementaryAbelian2 { rank: 2 }))
        .collect();
    c.eq("Klein four-subgroups", 35, klein.len());
    let mut found: Vec<ProjPoint> = Vec::new();
    let mut lines_fixed = 0;
    for k in &klein {
        let mats: Vec<_> = k.generators.iter().map(|&e| lifted.lift_matrix(e).clone()).collect();
        let (pts, higher) = common_fixed_points(&mats)?;
        lines_fixed += higher;
        for p in pts {
            if orbit(&g, &p)?.len() == 20 {
                found.push(p);
            }
        }
    }
    let mut union = Vec::new();
    for (_, o) in orbits.iter() {
        union.extend(o.members.iter().cloned());
    }
    let n = found.iter().chain(&union).fold(1, |n, p| lcm_u32(n, p.field_index()));
    c.eq("positive-dimensional Klein fixed loci", 0, lines_fixed);
    c.holds("every length-20 orbit is Σ20, Σ20' or Σ20''", key_set(&found, n)? == key_set(&union, n)?);
    c.info("klein_fixed_points_with_orbit_20", key_set(&found, n)?.len());
    Ok(c.finish())
}

fn tag_subset_of(cay: &Cayley, s: &crate::group::GeneratedSubgroup) -> IsoTag {
    crate::group::tag_subset(cay, &s.members)
}

fn family(ctx: &Context, prefixes: &[&str]) -> Result<Vec<(String, ProjLine)>> {
    Ok(ctx
        .lines30()?
        .iter()
        .filter(|(l, _)| prefixes.iter().any(|p| l.strip_prefix(p).is_some_and(|r| r.starts_with('_'))))
        .cloned()
        .collect())
}

fn l10_disjoint(ctx: &Context) -> Result<Outcome> {
    let g = ctx.group("G80", Mode::Projective)?;
    let (seed, _) = ctx.catalog().line("ell")?;
    let orb = line_orbit(&g, &seed)?;
    let fam: Vec<ProjLine> = family(ctx, &["ell", "ellc"])?.into_iter().map(|(_, l)| l).collect();
    let n = lcm_u32(lines_field(&orb), lines_field(&fam));
    let mut c = Claims::new();
    c.eq("orbit of ℓ1", 10, orb.len());
    c.holds("orbit is ℓ_k ∪ ℓ̌_k", line_keys(&orb, n)? == line_keys(&fam, n)?);
    let mut meeting = 0;
    for (i, a) in orb.iter().enumerate() {
        for b in &orb[i + 1..] {
            if !a.is_skew_to(b)? {
                meeting += 1;
            }
        }
    }
    c.eq("meeting pairs", 0, meeting);
    Ok(c.finish())
}

/// Meeting pattern of a ten-line wheel against the rule j − i = ±step mod 5.
fn wheel(ctx: &Context, plain: &str, checked: &str, step: usize, sing_key: &str) -> Result<Outcome> {
    let a = family(ctx, &[plain])?;
    let b = family(ctx, &[checked])?;
    let rule = |i: usize, j: usize| (j + 5 - i) % 5 == step || (i + 5 - j) % 5 == step;
    let mut c = Claims::new();
    let mut wrong = Vec::new();
    let pairs: [(&str, &[(String, ProjLine)], &[(String, ProjLine)]); 3] = [("plain", &a, &a), ("checked", &b, &b), ("mixed", &a, &b)];
    for (kind, x, y) in pairs {
        for (i, (li, l)) in x.iter().enumerate() {
            for (j, (lj, m)) in y.iter().enumerate() {
                if kind != "mixed" && i == j {
                    continue;
                }
                let meets = !l.is_skew_to(m)?;
                if meets != rule(i, j) {
                    wrong.push(format!("{li} / {lj}: meets = {meets}"));
                }
            }
        }
    }
    c.eq("pairs violating the meeting rule", Vec::<String>::new(), wrong);
    let lines: Vec<ProjLine> = a.iter().chain(&b).map(|(_, l)| l.clone()).collect();
    let census = triple_point_census(&lines)?;
    c.eq("points on more than two lines", 0, census.iter().filter(|(_, k)| *k > 2).count());
    let nodes: Vec<ProjPoint> = census.iter().map(|(p, _)| p.clone()).collect();
    let orbits = sigma20_orbits_computed(ctx)?;
    let sigma = &orbits.iter().find(|(k, _)| *k == sing_key).expect("known key").1;
    let n = nodes.iter().chain(&sigma.members).fold(1, |n, p| lcm_u32(n, p.field_index()));
    c.holds(&format!("singular points = {sing_key}"), key_set(&nodes, n)? == key_set(&sigma.members, n)?);
    Ok(c.finish())
}

fn l10_prime_wheel(ctx: &Context) -> Result<Outcome> {
    wheel(ctx, "ell'", "ellc'", 1, "Sigma20-prime")
}

fn l10_dprime_wheel(ctx: &Context) -> Result<Outcome> {
    wheel(ctx, "ell''", "ellc''", 2, "Sigma20-dprime")
}

pub(super) fn meet_points(x: &[ProjLine], y: &[ProjLine]) -> Result<Vec<ProjPoint>> {
    let mut out = Vec::new();
    for a in x {
        for b in y {
            if a != b {
                if let Some(p) = a.meet(b)? {
                    out.push(p);
                }
            }
        }
    }
    Ok(out)
}

fn l10_intersections(ctx: &Context) -> Result<Outcome> {
    let get = |p: &[&str]| -> Result<Vec<ProjLine>> { Ok(family(ctx, p)?.into_iter().map(|(_, l)| l).collect()) };
    let l0 = get(&["ell", "ellc"])?;
    let l1 = get(&["ell'", "ellc'"])?;
    let l2 = get(&["ell''", "ellc''"])?;
    let orbits = sigma20_orbits_computed(ctx)?;
    let s = |k: usize| orbits[k].1.members.clone();
    let union = |v: &[usize]| v.iter().flat_map(|&k| s(k)).collect::<Vec<_>>();
    let mut all: Vec<ProjPoint> = union(&[0, 1, 2]);
    all.extend(meet_points(&l1, &l2)?);
    let n = lcm_u32(all.iter().fold(1, |n, p| lcm_u32(n, p.field_index())), lines_field(&l0));
    let ks = |p: &[ProjPoint]| key_set(p, n);
    let mut c = Claims::new();
    c.holds("L10'∩L10'' = Σ20", ks(&meet_points(&l1, &l2)?)? == ks(&s(0))?);
    c.holds("L10∩L10' = Σ20 ∪ Σ20'", ks(&meet_points(&l0, &l1)?)? == ks(&union(&[0, 1]))?);
    c.holds("L10∩L10'' = Σ20 ∪ Σ20''", ks(&meet_points(&l0, &l2)?)? == ks(&union(&[0, 2]))?);
    let l0n: Vec<ProjLine> = l0.iter().map(|l| l.embed(n)).collect::<Result<_>>()?;
    let on_l10 = union(&[0, 1, 2])
        .iter()
        .all(|p| p.embed(n).is_ok_and(|p| l0n.iter().any(|l| l.contains(&p))));
    c.holds("Σ20 ∪ Σ20' ∪ Σ20'' ⊂ L10", on_l10);
    let l1n: Vec<ProjLine> = l1.iter().map(|l| l.embed(n)).collect::<Result<_>>()?;
    let l2n: Vec<ProjLine> = l2.iter().map(|l| l.embed(n)).collect::<Result<_>>()?;
    let off = |pts: Vec<ProjPoint>, ls: &[ProjLine]| pts.iter().all(|p| p.embed(n).is_ok_and(|p| !ls.iter().any(|l| l.contains(&p))));
    c.holds("Σ20' ⊄ L10''", off(s(1), &l2n));
    c.holds("Σ20'' ⊄ L10'", off(s(2), &l1n));
    Ok(c.finish())
}
