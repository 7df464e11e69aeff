//! Invariants and semi-invariants: Reynolds averaging, character
//! multiplicities from class traces, and simultaneous eigenbases.

use num_traits::{Signed, ToPrimitive};

use super::{monomial_count, monomials, HomPoly, Substitution};
use crate::cyclo::{lcm_u32, CycNum, MAX_FIELD_INDEX};
use crate::error::{Error, Result};
use crate::group::{Character, GroupElement, MatrixGroup, Mode};
use crate::linalg::Mat;

const MONOMIAL_CAP: usize = 500;
const ACTION_ORDER_CAP: u64 = 1000;

/// Trace of M acting on degree-d polynomials, read off the diagonal of the action.
pub fn sym_power_trace(m: &Mat, d: u32) -> Result<CycNum> {
    let sub = Substitution::new(m, d)?;
    let mut acc = CycNum::zero(m.field_index());
    for e in monomials(d) {
        let img = sub.apply_monomial(&e)?;
        acc = &acc + &img.coeff(&e);
    }
    Ok(acc)
}

fn require_linear(g: &MatrixGroup) -> Result<()> {
    if g.mode() != Mode::Linear {
        return Err(Error::Precondition("polynomial actions need a linear group".into()));
    }
    Ok(())
}

/// Basis of the degree-d invariants, as RREF rows in the descending-lex monomial basis.
pub fn invariant_basis(g: &MatrixGroup, d: u32) -> Result<Vec<HomPoly>> {
    require_linear(g)?;
    let size = monomial_count(d);
    if size > MONOMIAL_CAP {
        return Err(Error::CostCap(format!(
            "{size} monomials of degree {d} exceed the cap of {MONOMIAL_CAP}"
        )));
    }
    let n = g.field_index();
    // Scalars act on degree d by z^d; their average decides whether anything survives.
    let mut scalar_sum = CycNum::zero(n);
    for k in g.scalar_kernel() {
        let z = g.element(k).matrix().get(0, 0).clone();
        scalar_sum = &scalar_sum + &z.pow(d as u64);
    }
    if scalar_sum.is_zero() {
        return Ok(vec![]);
    }
    let mons = monomials(d);
    let mut sums: Vec<HomPoly> = vec![HomPoly::zero(d, n); size];
    for r in g.scalar_coset_representatives() {
        let sub = Substitution::new(g.element(r).matrix(), d)?;
        for (j, e) in mons.iter().enumerate() {
            sums[j] = sums[j].try_add(&sub.apply_monomial(e)?)?;
        }
    }
    let rows: Vec<Vec<CycNum>> = sums.iter().map(HomPoly::coefficient_vector).collect();
    let ech = Mat::from_rows(rows)?.rref();
    let basis = (0..ech.rank)
        .map(|r| HomPoly::from_coefficient_vector(d, &ech.matrix.row(r)))
        .collect::<Result<Vec<_>>>()?;
    for f in &basis {
        for h in g.generators() {
            if f.act(h)? != *f {
                return Err(Error::Internal("averaged polynomial is not invariant".into()));
            }
        }
    }
    Ok(basis)
}

/// Basis of the degree-d semi-invariants with character χ (g·f = χ(g)·f), from the
/// projector Σ χ(g)⁻¹·(g·f) over all elements.
pub fn semi_invariant_basis(g: &MatrixGroup, d: u32, chi: &Character) -> Result<Vec<HomPoly>> {
    require_linear(g)?;
    let size = monomial_count(d);
    if size > MONOMIAL_CAP {
        return Err(Error::CostCap(format!(
            "{size} monomials of degree {d} exceed the cap of {MONOMIAL_CAP}"
        )));
    }
    if chi.exponents.len() != g.order() {
        return Err(Error::Precondition("character belongs to another group".into()));
    }
    let n = lcm_u32(g.field_index(), chi.modulus);
    if n > MAX_FIELD_INDEX {
        return Err(Error::Domain(format!("character values need field index {n}")));
    }
    let g = g.embed(n)?;
    let mons = monomials(d);
    let mut sums: Vec<HomPoly> = vec![HomPoly::zero(d, n); size];
    for (k, e) in g.elements().iter().enumerate() {
        let weight = chi.value(k).conjugate().embed(n)?;
        let sub = Substitution::new(e.matrix(), d)?;
        for (j, m) in mons.iter().enumerate() {
            sums[j] = sums[j].try_add(&sub.apply_monomial(m)?.scale(&weight))?;
        }
    }
    let rows: Vec<Vec<CycNum>> = sums.iter().map(HomPoly::coefficient_vector).collect();
    let ech = Mat::from_rows(rows)?.rref();
    let basis = (0..ech.rank)
        .map(|r| HomPoly::from_coefficient_vector(d, &ech.matrix.row(r)))
        .collect::<Result<Vec<_>>>()?;
    for f in &basis {
        for h in g.generators() {
            let k = g.index_of(h).expect("generator in group");
            let v = chi.value(k).embed(n)?;
            if f.act(h)? != f.scale(&v) {
                return Err(Error::Internal("projected polynomial is not semi-invariant".into()));
            }
        }
    }
    Ok(basis)
}

/// Multiplicity of one degree-one character in the degree-d representation.
#[derive(Debug, Clone)]
pub struct CharacterMultiplicity {
    pub character: Character,
    /// χ(g) for each generator of the group, as roots of unity.
    pub generator_values: Vec<CycNum>,
    pub multiplicity: u64,
}

/// Multiplicities ⟨χ_{Sym^d}, λ⟩ for every degree-one character λ, computed
/// from one trace per conjugacy class. The trivial-character multiplicity is
/// cross-checked against [`invariant_basis`].
pub fn one_dim_multiplicities(g: &MatrixGroup, d: u32) -> Result<Vec<CharacterMultiplicity>> {
    require_linear(g)?;
    let classes = g.conjugacy_classes();
    let chars = g.one_dim_characters()?;
    let traces = classes
        .iter()
        .map(|c| sym_power_trace(g.element(c[0]).matrix(), d))
        .collect::<Result<Vec<_>>>()?;
    let order = g.order() as i64;
    let mut out = Vec::with_capacity(chars.len());
    for chi in chars {
        let n = lcm_u32(g.field_index(), chi.modulus);
        if n > MAX_FIELD_INDEX {
            return Err(Error::Domain(format!("character values need field index {n}")));
        }
        let mut acc = CycNum::zero(n);
        for (c, t) in classes.iter().zip(&traces) {
            let v = chi.value(c[0]).conjugate().embed(n)?;
            acc = &acc + &(&t.embed(n)? * &v).scale_int(c.len() as i64);
        }
        let m = acc
            .to_rational()
            .map(|q| q / num_rational::BigRational::from_integer(order.into()))
            .filter(|q| q.is_integer() && !q.is_negative())
            .and_then(|q| q.to_integer().to_u64())
            .ok_or_else(|| {
                Error::Internal(format!("non-integral character multiplicity {acc}"))
            })?;
        let generator_values = g
            .generators()
            .iter()
            .map(|h| {
                let k = g.index_of(h).expect("generator in group");
                chi.value(k)
            })
            .collect();
        out.push(CharacterMultiplicity {
            character: chi,
            generator_values,
            multiplicity: m,
        });
    }
    let trivial = out.iter().find(|c| c.character.is_trivial()).map_or(0, |c| c.multiplicity);
    let dim = invariant_basis(g, d)?.len() as u64;
    if trivial != dim {
        return Err(Error::Internal(format!(
            "trivial multiplicity {trivial} disagrees with invariant dimension {dim}"
        )));
    }
    Ok(out)
}

/// A simultaneous eigenvector, with eigenvalues listed per acting element.
#[derive(Debug, Clone)]
pub struct SemiInvariant {
    pub eigenvalues: Vec<CycNum>,
    pub poly: HomPoly,
}

fn matrix_order(m: &Mat) -> Result<u64> {
    let mut acc = m.clone();
    for k in 1..=ACTION_ORDER_CAP {
        if acc.is_identity() {
            return Ok(k);
        }
        acc = acc.try_mul(m)?;
    }
    Err(Error::Internal("action on the span does not have finite order".into()))
}

/// Solves E·R = B for R, where E has full column rank.
fn solve_columns(e: &Mat, b: &Mat) -> Result<Mat> {
    let m = e.cols();
    let rows: Vec<Vec<CycNum>> = (0..e.rows())
        .map(|r| {
            let mut row = e.row(r);
            row.extend(b.row(r));
            row
        })
        .collect();
    let ech = Mat::from_rows(rows)?.rref();
    if ech.pivots.iter().take(m).copied().ne(0..m) || ech.pivots.len() != m {
        return Err(Error::Precondition("span is not stable under the action".into()));
    }
    let data: Vec<Vec<CycNum>> = (0..m)
        .map(|r| (m..m + b.cols()).map(|c| ech.matrix.get(r, c).clone()).collect())
        .collect();
    Mat::from_rows(data)
}

/// A simultaneous eigenbasis of the span of `polys` under commuting `elements`.
/// Each vector is normalised so its lexicographically greatest monomial has coefficient 1.
pub fn semi_invariant_eigenbasis(
    polys: &[HomPoly],
    elements: &[GroupElement],
) -> Result<Vec<SemiInvariant>> {
    let d = polys
        .first()
        .ok_or_else(|| Error::Precondition("empty polynomial list".into()))?
        .degree();
    if polys.iter().any(|p| p.degree() != d) {
        return Err(Error::Precondition("polynomials of mixed degree".into()));
    }
    let rows: Vec<Vec<CycNum>> = polys.iter().map(HomPoly::coefficient_vector).collect();
    let ech = Mat::from_rows(rows)?.rref();
    let k = ech.rank;
    let basis: Vec<Vec<CycNum>> = (0..k).map(|r| ech.matrix.row(r)).collect();
    let basis_polys: Vec<HomPoly> = basis
        .iter()
        .map(|v| HomPoly::from_coefficient_vector(d, v))
        .collect::<Result<_>>()?;
    let coords = |f: &HomPoly| -> Result<Vec<CycNum>> {
        let v = f.coefficient_vector();
        let c: Vec<CycNum> = ech.pivots[..k].iter().map(|&p| v[p].clone()).collect();
        // stability: v must equal Σ c_i b_i
        let mut recon = HomPoly::zero(d, f.field_index());
        for (ci, bi) in c.iter().zip(&basis_polys) {
            recon = recon.try_add(&bi.scale(ci))?;
        }
        if recon != *f {
            return Err(Error::Precondition("span is not stable under the action".into()));
        }
        Ok(c)
    };
    let mut actions = Vec::new();
    for g in elements {
        let cols = basis_polys
            .iter()
            .map(|b| coords(&b.act(g)?))
            .collect::<Result<Vec<_>>>()?;
        actions.push(Mat::from_rows(cols)?.transpose());
    }
    // commuting check
    for (i, a) in actions.iter().enumerate() {
        for b in &actions[i + 1..] {
            if a.try_mul(b)? != b.try_mul(a)? {
                return Err(Error::Precondition("acting elements do not commute on the span".into()));
            }
        }
    }
    let field = actions.iter().fold(ech.matrix.field_index(), |n, a| lcm_u32(n, a.field_index()));
    let mut spaces: Vec<(Vec<CycNum>, Mat)> = vec![(vec![], Mat::identity(k, field))];
    for a in &actions {
        let ord = matrix_order(a)? as u32;
        let mut next = Vec::new();
        for (vals, e) in spaces {
            let ae = a.try_mul(&e)?;
            let r = solve_columns(&e, &ae)?;
            let eig = r.eigen_lines(ord)?;
            for (lambda, vecs) in eig {
                let u = Mat::from_rows(vecs)?.transpose();
                let e2 = e.embed(lcm_u32(e.field_index(), u.field_index()))?.try_mul(&u)?;
                let mut v2 = vals.clone();
                v2.push(lambda);
                next.push((v2, e2));
            }
        }
        spaces = next;
    }
    let mut out = Vec::new();
    for (vals, e) in spaces {
        for c in 0..e.cols() {
            let mut f = HomPoly::zero(d, e.field_index());
            for (r, b) in basis_polys.iter().enumerate() {
                f = f.try_add(&b.scale(e.get(r, c)))?;
            }
            if f.is_zero() {
                return Err(Error::Internal("zero eigenvector".into()));
            }
            out.push(SemiInvariant {
                eigenvalues: vals.clone(),
                poly: f.normalized(),
            });
        }
    }
    Ok(out)
}
