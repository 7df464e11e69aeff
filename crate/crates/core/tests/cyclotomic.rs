//! Exact cyclotomic arithmetic checked against floating-point complex numbers.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use pgl4_core::cyclo::{euler_phi, lcm_u32, CycNum};
use pgl4_core::error::Error;

fn config() -> Config {
    Config {
        cases: 100,
        rng_seed: RngSeed::Fixed(0xc1c1_0001),
        failure_persistence: None,
        ..Config::default()
    }
}

/// Σ c_k ζ_n^k evaluated in floating point from the exact power-basis coefficients.
fn numeric(x: &CycNum) -> Complex64 {
    let n = x.field_index() as f64;
    x.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| Complex64::from_polar(c.to_f64().unwrap(), 2.0 * PI * k as f64 / n))
        .sum()
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-8 * (1.0 + a.norm().max(b.norm()))
}

fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn element(n: u32) -> impl Strategy<Value = CycNum> {
    prop::collection::vec((-9i64..=9, 1i64..=5), n as usize)
        .prop_map(move |cs| CycNum::from_coeffs(n, &cs.into_iter().map(|(p, q)| rational(p, q)).collect::<Vec<_>>()))
}

fn pair_in_related_fields() -> impl Strategy<Value = (CycNum, CycNum)> {
    prop::sample::select(vec![(4u32, 8u32), (5, 20), (3, 12), (12, 24), (8, 40), (1, 7)])
        .prop_flat_map(|(n, m)| (element(n), element(m)))
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn arithmetic_matches_complex_numbers((a, b) in pair_in_related_fields()) {
        prop_assert!(close(numeric(&a.try_add(&b).unwrap()), numeric(&a) + numeric(&b)));
        prop_assert!(close(numeric(&a.try_sub(&b).unwrap()), numeric(&a) - numeric(&b)));
        prop_assert!(close(numeric(&a.try_mul(&b).unwrap()), numeric(&a) * numeric(&b)));
        if !b.is_zero() {
            prop_assert!(close(numeric(&a.try_div(&b).unwrap()), numeric(&a) / numeric(&b)));
        }
        prop_assert!(close(numeric(&a.conjugate()), numeric(&a).conj()));
        prop_assert!(close(numeric(&a.pow(3)), numeric(&a).powi(3)));
    }

    #[test]
    fn embedding_preserves_value(a in element(12), k in 1u32..=5) {
        let m = 12 * k;
        let e = a.embed(m).unwrap();
        prop_assert_eq!(e.field_index(), m);
        prop_assert!(close(numeric(&e), numeric(&a)));
        prop_assert_eq!(e, a);
    }

    #[test]
    fn galois_action_is_substitution(a in element(20), j in prop::sample::select(vec![1i64, 3, 7, 9, 11, 13, 17, 19])) {
        // σ_j(Σ c_k ζ^k) = Σ c_k ζ^{jk}
        let expected: Complex64 = a
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| Complex64::from_polar(c.to_f64().unwrap(), 2.0 * PI * (j * k as i64) as f64 / 20.0))
            .sum();
        prop_assert!(close(numeric(&a.galois(j).unwrap()), expected));
    }
}

#[test]
fn power_basis_has_euler_phi_terms() {
    for n in [1u32, 2, 3, 4, 5, 8, 12, 20, 40, 60] {
        assert_eq!(CycNum::one(n).coeffs().len(), euler_phi(n), "n = {n}");
    }
    assert_eq!(euler_phi(40), 16);
    assert_eq!(lcm_u32(8, 12), 24);
}

#[test]
fn quadratic_gauss_sum_squares_to_five() {
    let z = |k| CycNum::root_of_unity(5, k);
    let g = z(1).try_sub(&z(2)).unwrap().try_sub(&z(3)).unwrap().try_add(&z(4)).unwrap();
    assert_eq!(g.try_mul(&g).unwrap(), CycNum::from_int(5, 5));
    assert!(close(numeric(&g), Complex64::new(5f64.sqrt(), 0.0)));
}

#[test]
fn square_root_of_two_from_eighth_roots() {
    let s = CycNum::root_of_unity(8, 1).try_add(&CycNum::root_of_unity(8, -1)).unwrap();
    assert_eq!(s.pow(2), CycNum::from_int(8, 2));
    assert!(!s.is_rational());
    assert_eq!(s.pow(2).to_rational(), Some(rational(2, 1)));
}

#[test]
fn roots_of_unity_have_expected_orders() {
    assert_eq!(CycNum::root_of_unity(12, 3).root_order(), Some(4));
    assert_eq!(CycNum::root_of_unity(40, 10).root_order(), Some(4));
    assert_eq!(CycNum::from_int(3, -1).root_order(), Some(2));
    assert_eq!(CycNum::from_int(4, 2).root_order(), None);
    let i = CycNum::parse("i").unwrap();
    assert_eq!(i, CycNum::root_of_unity(4, 1));
    assert_eq!(i.pow(2), CycNum::from_int(4, -1));
}

#[test]
fn literals_parse_into_smallest_field() {
    let x = CycNum::parse("1/2 + -3*z{40}^10").unwrap();
    assert_eq!(x.field_index(), 40);
    assert!(close(numeric(&x), Complex64::new(0.5, -3.0)));
    let y = CycNum::parse("(1 + i)*(1 - i)").unwrap();
    assert_eq!(y, CycNum::from_int(4, 2));
    assert_eq!(CycNum::parse_in("i", 20).unwrap().field_index(), 20);
    assert_eq!(CycNum::from_frac(3, 3, 6), CycNum::from_rational(3, &rational(1, 2)));
}

#[test]
fn errors_are_reported_not_panicked() {
    let a = CycNum::root_of_unity(3, 1);
    let b = CycNum::root_of_unity(4, 1);
    assert!(matches!(a.try_add(&b), Err(Error::Domain(_))));
    assert!(matches!(b.embed(6), Err(Error::Domain(_))));
    assert!(matches!(b.embed(100_000), Err(Error::Domain(_))));
    assert!(matches!(CycNum::zero(5).inverse(), Err(Error::DivisionByZero)));
    assert!(matches!(b.try_div(&CycNum::zero(4)), Err(Error::DivisionByZero)));
    assert!(matches!(b.galois(2), Err(Error::Domain(_))));
    assert!(matches!(CycNum::parse("1/0"), Err(Error::Parse(_))));
    assert!(matches!(CycNum::parse("z{4"), Err(Error::Parse(_))));
    assert!(matches!(CycNum::parse(""), Err(Error::Parse(_))));
    assert!(matches!(CycNum::parse("2 +"), Err(Error::Parse(_))));
    assert!(matches!(CycNum::parse_in("z{8}", 4), Err(Error::Domain(_))));
}
