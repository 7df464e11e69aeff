//! Randomised algebraic identities, 100 cases each with a fixed seed.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestRunner};

use pgl4_core::catalog::Catalog;
use pgl4_core::cyclo::CycNum;
use pgl4_core::group::{MatrixGroup, Mode};
use pgl4_core::linalg::Mat;
use pgl4_core::poly::{monomials, HomPoly};
use pgl4_core::projgeom::{orbit, stabilizer, ProjPoint};

pub const SEED: u64 = 0x5eed_2024;
pub const CASES: u32 = 100;

fn runner() -> TestRunner {
    TestRunner::new(Config {
        cases: CASES,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..Config::default()
    })
}

fn cyc(n: u32) -> impl Strategy<Value = CycNum> {
    prop::collection::vec((-6i64..=6, 1i64..=4), n as usize).prop_map(move |cs| {
        let q: Vec<BigRational> = cs.into_iter().map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b))).collect();
        CycNum::from_coeffs(n, &q)
    })
}

fn field_and_triple() -> impl Strategy<Value = (CycNum, CycNum, CycNum)> {
    prop::sample::select(vec![3u32, 4, 5, 8, 12, 20]).prop_flat_map(|n| (cyc(n), cyc(n), cyc(n)))
}

fn gaussian() -> impl Strategy<Value = CycNum> {
    (-2i64..=2, -2i64..=2).prop_map(|(a, b)| CycNum::from_int(4, a).try_add(&CycNum::root_of_unity(4, 1).scale_int(b)).unwrap())
}

fn point() -> impl Strategy<Value = ProjPoint> {
    prop::collection::vec(gaussian(), 4)
        .prop_filter("nonzero point", |v| v.iter().any(|c| !c.is_zero()))
        .prop_map(|v| ProjPoint::new(v).unwrap())
}

fn matrix() -> impl Strategy<Value = Mat> {
    prop::collection::vec(prop::collection::vec(gaussian(), 4), 4).prop_map(|rows| Mat::from_rows(rows).unwrap())
}

fn poly() -> impl Strategy<Value = HomPoly> {
    (1u32..=4).prop_flat_map(|d| {
        let mons = monomials(d);
        let k = mons.len();
        prop::collection::vec(gaussian(), k).prop_map(move |cs| HomPoly::from_terms(d, mons.clone().into_iter().zip(cs)).unwrap())
    })
}

const GROUPS: [&str; 3] = ["H", "G80", "G144"];

fn projective(key: &str) -> &'static MatrixGroup {
    static BUILT: OnceLock<Vec<MatrixGroup>> = OnceLock::new();
    let all = BUILT.get_or_init(|| {
        let cat = Catalog::standard().unwrap();
        GROUPS.iter().map(|k| cat.group(k, Mode::Linear).unwrap().projective_image()).collect()
    });
    &all[GROUPS.iter().position(|k| *k == key).unwrap()]
}

fn outcome<T: std::fmt::Debug>(r: Result<(), proptest::test_runner::TestError<T>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

pub fn field_axioms() -> Result<(), String> {
    outcome(runner().run(&field_and_triple(), |(a, b, c)| {
        let add = |x: &CycNum, y: &CycNum| x.try_add(y).unwrap();
        let mul = |x: &CycNum, y: &CycNum| x.try_mul(y).unwrap();
        prop_assert_eq!(add(&a, &b), add(&b, &a));
        prop_assert_eq!(mul(&a, &b), mul(&b, &a));
        prop_assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
        prop_assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
        prop_assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
        prop_assert!(add(&a, &-&a).is_zero());
        let n = a.field_index();
        prop_assert_eq!(mul(&a, &CycNum::one(n)), a.clone());
        if !a.is_zero() {
            prop_assert!(mul(&a, &a.inverse().unwrap()).is_one());
        }
        // embedding is a ring homomorphism
        let m = 2 * n;
        let (ea, eb) = (a.embed(m).unwrap(), b.embed(m).unwrap());
        prop_assert_eq!(mul(&a, &b).embed(m).unwrap(), mul(&ea, &eb));
        prop_assert_eq!(add(&a, &b).embed(m).unwrap(), add(&ea, &eb));
        Ok(())
    }))
}

pub fn orbit_stabilizer() -> Result<(), String> {
    outcome(runner().run(&(point(), 0usize..GROUPS.len()), |(p, which)| {
        let g = projective(GROUPS[which]);
        let o = orbit(g, &p).unwrap();
        prop_assert_eq!(o.len() * o.stabilizer_order, g.order());
        prop_assert_eq!(stabilizer(g, &p).unwrap().order(), o.stabilizer_order);
        Ok(())
    }))
}

pub fn euler_identity() -> Result<(), String> {
    outcome(runner().run(&poly(), |f| {
        // Σ x_k ∂f/∂x_k = deg(f)·f
        let n = f.field_index();
        let mut acc = HomPoly::zero(f.degree(), n);
        for (k, df) in f.jacobian().iter().enumerate() {
            acc = acc.try_add(&HomPoly::variable(k, n).try_mul(df).unwrap()).unwrap();
        }
        prop_assert_eq!(acc, f.scale(&CycNum::from_int(n, f.degree() as i64)));
        Ok(())
    }))
}

pub fn action_associativity() -> Result<(), String> {
    outcome(runner().run(&(poly(), matrix(), matrix(), point()), |(f, a, b, p)| {
        // (f∘A)∘B = f∘(AB) for polynomials; points compose the other way round.
        let ab = a.try_mul(&b).unwrap();
        prop_assert_eq!(f.act_matrix(&a).unwrap().act_matrix(&b).unwrap(), f.act_matrix(&ab).unwrap());
        let v: Vec<CycNum> = p.coords().to_vec();
        let av = a.mul_vec(&v).unwrap();
        prop_assert_eq!(f.act_matrix(&a).unwrap().eval(&v).unwrap(), f.eval(&av).unwrap());
        if !a.det().unwrap().is_zero() && !b.det().unwrap().is_zero() {
            prop_assert_eq!(p.apply(&a).unwrap().apply(&b).unwrap(), p.apply(&b.try_mul(&a).unwrap()).unwrap());
        }
        Ok(())
    }))
}

pub fn closure_idempotence() -> Result<(), String> {
    outcome(runner().run(&prop::collection::vec(any::<prop::sample::Index>(), 1..4), |picks| {
        let g = projective("G80");
        let gens: Vec<Mat> = picks.iter().map(|i| g.element(i.index(g.order())).matrix().clone()).collect();
        let h = MatrixGroup::close(&gens, Mode::Projective).unwrap();
        let all: Vec<Mat> = h.elements().iter().map(|e| e.matrix().clone()).collect();
        let again = MatrixGroup::close(&all, Mode::Projective).unwrap();
        prop_assert_eq!(again.order(), h.order());
        prop_assert!(again.is_subgroup_of(&h) && h.is_subgroup_of(&again));
        prop_assert_eq!(g.order() % h.order(), 0);
        Ok(())
    }))
}

/// Every suite by name, in a fixed order.
pub fn suites() -> Vec<(&'static str, fn() -> Result<(), String>)> {
    vec![
        ("field axioms", field_axioms as fn() -> Result<(), String>),
        ("orbit-stabilizer identity", orbit_stabilizer),
        ("Euler identity", euler_identity),
        ("action associativity", action_associativity),
        ("closure idempotence", closure_idempotence),
    ]
}
