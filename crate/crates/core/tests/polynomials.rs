//! Homogeneous polynomials, group actions and invariant spaces.

use pgl4_core::catalog::Catalog;
use pgl4_core::cyclo::{lcm_u32, CycNum};
use pgl4_core::error::Error;
use pgl4_core::group::{MatrixGroup, Mode};
use pgl4_core::linalg::Mat;
use pgl4_core::poly::{
    invariant_basis, monomial_count, monomials, one_dim_multiplicities, semi_invariant_basis, sym_power_trace,
    BinaryForm, HomPoly,
};

fn p(s: &str) -> HomPoly {
    HomPoly::parse(s).unwrap()
}

fn linear(key: &str) -> MatrixGroup {
    Catalog::standard().unwrap().group(key, Mode::Linear).unwrap()
}

/// dim of {f : g·f = f for every generator g}, from the fixed-point equations
/// on coefficient vectors.
fn fixed_space_dimension(g: &MatrixGroup, d: u32) -> usize {
    let n = g.field_index();
    let mons = monomials(d);
    let mut rows: Vec<Vec<CycNum>> = Vec::new();
    for h in g.generators() {
        // column j holds h·m_j - m_j
        let cols: Vec<Vec<CycNum>> = mons
            .iter()
            .map(|e| {
                let m = HomPoly::monomial(*e, CycNum::one(n));
                m.act_matrix(h.matrix()).unwrap().try_sub(&m).unwrap().embed(n).unwrap().coefficient_vector()
            })
            .collect();
        for r in 0..mons.len() {
            rows.push(cols.iter().map(|c| c[r].clone()).collect());
        }
    }
    mons.len() - Mat::from_rows(rows).unwrap().rank()
}

#[test]
fn parsing_and_printing_round_trip() {
    let f = p("x^2*y - 3*z^3 + 1/2*x*y*w");
    assert_eq!(f.degree(), 3);
    assert_eq!(p(&f.to_string()), f);
    assert_eq!(p("(1+i)*x*y").coeff(&[1, 1, 0, 0]), CycNum::parse("1+i").unwrap());
    assert!(matches!(HomPoly::parse("x^2 + y"), Err(Error::Parse(_))));
    assert!(matches!(HomPoly::parse(""), Err(Error::Parse(_))));
    assert!(HomPoly::parse("x^^2").is_err());
    assert_eq!(monomial_count(4), 35);
    assert_eq!(monomials(4).len(), 35);
}

#[test]
fn ring_operations() {
    let a = p("x + y");
    let b = p("x - y");
    assert_eq!(a.try_mul(&b).unwrap(), p("x^2 - y^2"));
    assert_eq!(a.pow(2), p("x^2 + 2*x*y + y^2"));
    assert!(a.try_add(&p("x^2")).is_err());
    assert_eq!(p("x^3*y").derivative(0), p("3*x^2*y"));
    let v: Vec<CycNum> = [1, 2, 3, 4].iter().map(|&k| CycNum::from_int(1, k)).collect();
    assert_eq!(p("x*w + y*z").eval(&v).unwrap(), CycNum::from_int(1, 10));
    assert!(p("2*x^2 + 4*y^2").proportional_to(&p("x^2 + 2*y^2")));
}

#[test]
fn singularity_detection() {
    let cone = p("x^2 + y^2 - z^2");
    let vertex = pgl4_core::projgeom::ProjPoint::parse("[0:0:0:1]").unwrap();
    assert!(cone.is_singular_at(&vertex).unwrap());
    let smooth = pgl4_core::projgeom::ProjPoint::parse("[3:4:5:0]").unwrap();
    assert!(cone.eval_point(&smooth).unwrap().is_zero());
    assert!(!cone.is_singular_at(&smooth).unwrap());
}

#[test]
fn restriction_to_a_line() {
    let one = CycNum::one(1);
    let zero = CycNum::zero(1);
    let e0 = vec![one.clone(), zero.clone(), zero.clone(), zero.clone()];
    let e1 = vec![zero.clone(), one.clone(), zero.clone(), zero.clone()];
    let f = BinaryForm::restrict(&p("x^2*y + z^3"), &e0, &e1).unwrap();
    assert_eq!(f.degree(), 3);
    let expected: Vec<CycNum> = [0, 1, 0, 0].iter().map(|&k| CycNum::from_int(1, k)).collect();
    assert_eq!(f.coeffs(), expected.as_slice());
    // λ(1,1,0,0) + μ(1,-1,0,0) in x*y gives λ² − μ²
    let a: Vec<CycNum> = [1, 1, 0, 0].iter().map(|&k| CycNum::from_int(1, k)).collect();
    let b: Vec<CycNum> = [1, -1, 0, 0].iter().map(|&k| CycNum::from_int(1, k)).collect();
    let g = BinaryForm::restrict(&p("x*y"), &a, &b).unwrap();
    let expected: Vec<CycNum> = [1, 0, -1].iter().map(|&k| CycNum::from_int(1, k)).collect();
    assert_eq!(g.coeffs(), expected.as_slice());
}

#[test]
fn invariant_dimensions_match_fixed_point_equations() {
    for (key, degrees) in [("H", &[2u32, 4][..]), ("HH", &[4][..]), ("G80", &[4, 8][..]), ("G144", &[2, 4][..])] {
        let g = linear(key);
        for &d in degrees {
            let basis = invariant_basis(&g, d).unwrap();
            assert_eq!(basis.len(), fixed_space_dimension(&g, d), "{key} degree {d}");
            for f in &basis {
                for h in g.generators() {
                    assert_eq!(f.act(h).unwrap(), *f);
                }
            }
        }
    }
}

#[test]
fn heisenberg_quartics_are_five_dimensional() {
    let cat = Catalog::standard().unwrap();
    let h = linear("H");
    let basis = invariant_basis(&h, 4).unwrap();
    assert_eq!(basis.len(), 5);
    let listed = cat.polys("U4").unwrap();
    let n = lcm_u32(h.field_index(), listed[0].field_index());
    let rows: Vec<Vec<CycNum>> = listed.iter().map(|f| f.embed(n).unwrap().coefficient_vector()).collect();
    assert_eq!(Mat::from_rows(rows.clone()).unwrap().rank(), 5);
    let mut all = rows;
    all.extend(basis.iter().map(|f| f.embed(n).unwrap().coefficient_vector()));
    assert_eq!(Mat::from_rows(all).unwrap().rank(), 5);
}

#[test]
fn g80_has_one_quartic_invariant() {
    let g = linear("G80");
    let basis = invariant_basis(&g, 4).unwrap();
    assert_eq!(basis.len(), 1);
    let q0 = Catalog::standard().unwrap().poly("q0").unwrap();
    let n = lcm_u32(q0.field_index(), basis[0].field_index());
    assert!(basis[0].embed(n).unwrap().proportional_to(&q0.embed(n).unwrap()));
}

#[test]
fn character_multiplicities_sum_correctly() {
    // H/[H,H] has 16 characters; for the Heisenberg group the quadrics split into
    // ten one-dimensional pieces, so the multiplicities sum to dim Sym^2 = 10.
    let h = linear("H");
    let mult = one_dim_multiplicities(&h, 2).unwrap();
    assert_eq!(mult.len(), 16);
    assert_eq!(mult.iter().map(|m| m.multiplicity).sum::<u64>(), 10);
    // trace of the identity on Sym^d is the monomial count
    let id = Mat::identity(4, 1);
    assert_eq!(sym_power_trace(&id, 3).unwrap(), CycNum::from_int(1, 20));
}

#[test]
fn g144_quadric_is_a_semi_invariant() {
    let g = linear("G144");
    assert!(invariant_basis(&g, 2).unwrap().is_empty());
    let target = p("x*z + y*w");
    let mut hits = 0;
    for chi in g.one_dim_characters().unwrap() {
        let basis = semi_invariant_basis(&g, 2, &chi).unwrap();
        for f in &basis {
            for h in g.generators() {
                let idx = g.index_of(h).unwrap();
                assert_eq!(f.act(h).unwrap(), f.scale(&chi.value(idx)));
            }
        }
        if basis.len() == 1 {
            let n = lcm_u32(basis[0].field_index(), target.field_index());
            if basis[0].embed(n).unwrap().proportional_to(&target.embed(n).unwrap()) {
                assert!(!chi.is_trivial());
                hits += 1;
            }
        }
    }
    assert_eq!(hits, 1);
}

#[test]
fn projective_groups_are_rejected_for_invariants() {
    let g = Catalog::standard().unwrap().group("H", Mode::Projective).unwrap();
    assert!(invariant_basis(&g, 2).is_err());
}
