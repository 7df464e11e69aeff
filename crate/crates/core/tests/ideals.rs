//! Gröbner bases and Hilbert functions against linear-algebra counts.

use num_bigint::BigInt;

use pgl4_core::cyclo::{lcm_u32, CycNum};
use pgl4_core::error::Error;
use pgl4_core::ideals::{hilbert_function, hilbert_numerator, krull_dimension, minimal_monomial_generators, IdealBasis, MonomialOrder};
use pgl4_core::linalg::Mat;
use pgl4_core::poly::{monomial_count, monomials, HomPoly};

fn p(s: &str) -> HomPoly {
    HomPoly::parse(s).unwrap()
}

fn ideal(gens: &[&str]) -> IdealBasis {
    IdealBasis::new(gens.iter().map(|s| p(s)).collect(), MonomialOrder::Degrevlex).unwrap()
}

/// dim R_d − dim I_d, with I_d spanned by all monomial multiples of the generators.
fn hilbert_by_rank(gens: &[HomPoly], d: u32) -> usize {
    let mut n = 1;
    for g in gens {
        n = lcm_u32(n, g.field_index());
    }
    let mut rows = Vec::new();
    for g in gens {
        if g.degree() > d {
            continue;
        }
        for e in monomials(d - g.degree()) {
            let m = HomPoly::monomial(e, CycNum::one(n));
            rows.push(m.try_mul(&g.embed(n).unwrap()).unwrap().coefficient_vector());
        }
    }
    let rank = if rows.is_empty() { 0 } else { Mat::from_rows(rows).unwrap().rank() };
    monomial_count(d) - rank
}

/// Number of degree-d monomials outside the monomial ideal.
fn standard_monomials(gens: &[[u32; 4]], d: u32) -> usize {
    monomials(d)
        .iter()
        .filter(|e| !gens.iter().any(|g| (0..4).all(|k| g[k] <= e[k])))
        .count()
}

#[test]
fn twisted_cubic() {
    let g = ideal(&["x*z - y^2", "y*w - z^2", "x*w - y*z"]).groebner(10_000).unwrap();
    assert!(g.is_groebner());
    assert!(g.s_pairs_reduce_to_zero().unwrap());
    assert_eq!(g.projective_dimension().unwrap(), 1);
    for d in 0..=6 {
        assert_eq!(g.hilbert_function(d).unwrap(), BigInt::from(3 * d + 1), "degree {d}");
    }
}

#[test]
fn two_quadrics_meet_in_a_quartic_curve() {
    let gens = ["x^2 + y^2 + z^2 + w^2", "x^2 + 2*y^2 + 3*z^2 + 4*w^2"];
    let g = ideal(&gens).groebner(10_000).unwrap();
    assert_eq!(g.projective_dimension().unwrap(), 1);
    let polys: Vec<HomPoly> = gens.iter().map(|s| p(s)).collect();
    for d in 1..=6 {
        assert_eq!(g.hilbert_function(d).unwrap(), BigInt::from(4 * d), "degree {d}");
        assert_eq!(hilbert_by_rank(&polys, d), 4 * d as usize);
    }
}

#[test]
fn hilbert_function_matches_rank_count() {
    let cases: [&[&str]; 4] = [
        &["x^2 - y*z", "x*y*w - z^3"],
        &["x^2 + i*y^2", "z^2 - w^2", "x*y*z*w"],
        &["x*y", "y*z", "z*w", "w*x"],
        &["x^3 + y^3 + z^3 + w^3"],
    ];
    for gens in cases {
        let polys: Vec<HomPoly> = gens.iter().map(|s| p(s)).collect();
        let g = ideal(gens).groebner(50_000).unwrap();
        for d in 0..=6 {
            assert_eq!(g.hilbert_function(d).unwrap(), BigInt::from(hilbert_by_rank(&polys, d)), "{gens:?} degree {d}");
        }
        for f in &polys {
            assert!(g.reduce(f).unwrap().is_zero());
        }
    }
}

#[test]
fn fermat_jacobian_is_irrelevant() {
    let f = p("x^4 + y^4 + z^4 + w^4");
    let g = IdealBasis::new(f.jacobian().to_vec(), MonomialOrder::Degrevlex).unwrap().groebner(10_000).unwrap();
    assert!(g.is_irrelevant().unwrap());
    assert_eq!(g.projective_dimension().unwrap(), -1);
    // the quotient is finite dimensional: 3^4 = 81 standard monomials in total
    let total: BigInt = (0..=8).map(|d| g.hilbert_function(d).unwrap()).sum();
    assert_eq!(total, BigInt::from(81));
}

#[test]
fn lex_and_degrevlex_agree_on_dimension() {
    let gens = vec![p("x*z - y^2"), p("y*w - z^2"), p("x*w - y*z")];
    let a = IdealBasis::new(gens.clone(), MonomialOrder::Lex).unwrap().groebner(10_000).unwrap();
    let b = IdealBasis::new(gens, MonomialOrder::Degrevlex).unwrap().groebner(10_000).unwrap();
    assert_eq!(a.projective_dimension().unwrap(), b.projective_dimension().unwrap());
    for d in 0..=5 {
        assert_eq!(a.hilbert_function(d).unwrap(), b.hilbert_function(d).unwrap());
    }
    assert_eq!("lex".parse::<MonomialOrder>().unwrap(), MonomialOrder::Lex);
    assert!("grevlex-ish".parse::<MonomialOrder>().is_err());
}

#[test]
fn monomial_hilbert_series_matches_counting() {
    let gens: Vec<[u32; 4]> = vec![[2, 0, 0, 0], [1, 1, 0, 0], [0, 3, 0, 0], [0, 0, 1, 1], [1, 0, 1, 0], [2, 0, 0, 0], [3, 1, 0, 0]];
    let min = minimal_monomial_generators(&gens);
    assert_eq!(min.len(), 5);
    let num = hilbert_numerator(&min).unwrap();
    for d in 0..=10 {
        assert_eq!(hilbert_function(&num, d), BigInt::from(standard_monomials(&min, d)), "degree {d}");
    }
    // the radical is (x, y, zw): two coordinate lines in A^4
    assert_eq!(krull_dimension(&min).unwrap(), 1);
    assert_eq!(krull_dimension(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]).unwrap(), 0);
}

#[test]
fn budget_exhaustion_is_a_timeout() {
    let f = p("x^4 + y^4 + z^4 + w^4 + x*y*z*w");
    let basis = IdealBasis::new(f.jacobian().to_vec(), MonomialOrder::Degrevlex).unwrap();
    match basis.groebner(3) {
        Err(Error::Timeout { budget, .. }) => assert_eq!(budget, 3),
        other => panic!("expected a timeout, got {other:?}"),
    }
}

#[test]
fn preconditions() {
    assert!(IdealBasis::new(vec![], MonomialOrder::Degrevlex).is_err());
    assert!(IdealBasis::new(vec![HomPoly::zero(2, 1)], MonomialOrder::Degrevlex).is_err());
    let raw = ideal(&["x^2", "y^2"]);
    assert!(!raw.is_groebner());
    assert!(raw.projective_dimension().is_err());
}
