//! Matrix groups from the catalog compared with small abstract models built here.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use pgl4_core::catalog::Catalog;
use pgl4_core::error::Error;
use pgl4_core::group::{IsoTag, MatrixGroup, Mode};

fn group(key: &str, mode: Mode) -> MatrixGroup {
    Catalog::standard().unwrap().group(key, mode).unwrap()
}

// ---- abstract models ----

type Perm = Vec<u8>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

fn perm_order(p: &Perm) -> u32 {
    let id: Perm = (0..p.len() as u8).collect();
    let mut q = p.clone();
    let mut k = 1;
    while q != id {
        q = compose(&q, p);
        k += 1;
    }
    k
}

fn perm_closure(gens: &[Perm]) -> BTreeSet<Perm> {
    let id: Perm = (0..gens[0].len() as u8).collect();
    let mut seen: BTreeSet<Perm> = BTreeSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = compose(&x, g);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

/// A4 × A4 acting on two disjoint sets of four points.
fn a4_times_a4() -> Vec<Perm> {
    let a: Perm = vec![1, 2, 0, 3, 4, 5, 6, 7];
    let b: Perm = vec![1, 0, 3, 2, 4, 5, 6, 7];
    let c: Perm = vec![0, 1, 2, 3, 5, 6, 4, 7];
    let d: Perm = vec![0, 1, 2, 3, 5, 4, 7, 6];
    perm_closure(&[a, b, c, d]).into_iter().collect()
}

fn histogram(orders: impl IntoIterator<Item = u32>) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for o in orders {
        *h.entry(o).or_insert(0) += 1;
    }
    h
}

/// F_16 = F_2[t]/(t^4 + t + 1); multiplication by an element of order 5 acts on F_2^4.
fn gf16_mul(a: u8, b: u8) -> u8 {
    let mut r: u16 = 0;
    for k in 0..4 {
        if b >> k & 1 == 1 {
            r ^= (a as u16) << k;
        }
    }
    for k in (4..8).rev() {
        if r >> k & 1 == 1 {
            r ^= 0b10011 << (k - 4);
        }
    }
    r as u8
}

/// Orders of elements of F_2^4 ⋊ ⟨c⟩ with c acting as multiplication by t^3 (order 5).
fn affine_2_4_by_5_orders() -> BTreeMap<u32, usize> {
    let c = 0b1000u8;
    let mut powers = vec![1u8];
    for _ in 1..5 {
        powers.push(gf16_mul(*powers.last().unwrap(), c));
    }
    assert_eq!(gf16_mul(powers[4], c), 1);
    let mul = |(v, i): (u8, usize), (w, j): (u8, usize)| (v ^ gf16_mul(powers[i], w), (i + j) % 5);
    let mut orders = Vec::new();
    for v in 0..16u8 {
        for i in 0..5 {
            let x = (v, i);
            let mut y = x;
            let mut k = 1;
            while y != (0, 0) {
                y = mul(y, x);
                k += 1;
            }
            orders.push(k);
        }
    }
    histogram(orders)
}

// ---- tests ----

#[test]
fn catalog_group_orders() {
    let expected = [("H", 32, 16), ("HH", 64, 16), ("G80", 320, 80), ("G160", 640, 160), ("G320", 1280, 320), ("G144", 576, 144)];
    for (key, linear, projective) in expected {
        let g = group(key, Mode::Linear);
        assert_eq!(g.order(), linear, "{key} linear");
        assert_eq!(g.projective_image().order(), projective, "{key} projective");
        assert_eq!(group(key, Mode::Projective).order(), projective, "{key} closed projectively");
    }
}

#[test]
fn heisenberg_image_is_elementary_abelian() {
    let h = group("H", Mode::Projective);
    assert!(h.is_abelian());
    assert_eq!(h.tag_isomorphism_type().unwrap(), IsoTag::ElementaryAbelian2 { rank: 4 });
    assert_eq!(h.one_dim_characters().unwrap().len(), 16);
    // the linear group is not abelian: its commutators are the scalars ±1
    let lin = group("H", Mode::Linear);
    assert!(!lin.is_abelian());
    let comm = lin.commutator_subgroup().unwrap();
    assert_eq!(comm.order(), 2);
    assert!(comm.elements().iter().all(|e| e.is_scalar()));
}

#[test]
fn g80_matches_affine_model() {
    let g = group("G80", Mode::Projective);
    assert_eq!(g.order_statistics(), affine_2_4_by_5_orders());
    let tag = g.tag_isomorphism_type().unwrap();
    assert!(matches!(tag, IsoTag::E16semiC5 { .. }), "{tag}");
    assert!(tag.verify(&g).unwrap());
    let h = group("H", Mode::Projective).embed(g.field_index()).unwrap();
    assert!(h.is_subgroup_of(&g));
    assert!(g.is_normal(&h).unwrap());
}

#[test]
fn g160_and_g320_contain_g80() {
    let g80 = group("G80", Mode::Projective);
    let g160 = group("G160", Mode::Projective);
    let g320 = group("G320", Mode::Projective);
    let n = g320.field_index();
    assert!(g80.embed(n).unwrap().is_subgroup_of(&g320));
    assert!(g160.embed(n).unwrap().is_subgroup_of(&g320));
    assert!(matches!(g160.tag_isomorphism_type().unwrap(), IsoTag::E16semiD10 { .. }));
}

#[test]
fn g144_matches_a4_squared() {
    let g = group("G144", Mode::Projective);
    let model = a4_times_a4();
    assert_eq!(model.len(), 144);
    assert_eq!(g.order_statistics(), histogram(model.iter().map(perm_order)));
    let tag = g.tag_isomorphism_type().unwrap();
    assert!(matches!(tag, IsoTag::A4xA4 { .. }), "{tag}");
    assert!(tag.verify(&g).unwrap());
    // A4 abelianises to C3, so the product has nine linear characters
    assert_eq!(g.one_dim_characters().unwrap().len(), 9);
    assert_eq!(g.center(), vec![g.index_of(&g.elements()[0]).unwrap()]);
}

#[test]
fn g144_two_generated_subgroups_match_model() {
    let g = group("G144", Mode::Projective);
    let found = g.generated_subgroups(2).unwrap();
    let ours = histogram(found.iter().map(|s| s.members.count() as u32));

    let model = a4_times_a4();
    let mut subgroups: HashSet<BTreeSet<Perm>> = HashSet::new();
    for (i, a) in model.iter().enumerate() {
        for b in &model[i..] {
            subgroups.insert(perm_closure(&[a.clone(), b.clone()]));
        }
    }
    let theirs = histogram(subgroups.iter().map(|s| s.len() as u32));
    assert_eq!(ours, theirs);
    assert_eq!(ours[&12], 50);
}

#[test]
fn closure_caps_and_cost_limits_are_errors() {
    let gens = Catalog::standard().unwrap().group_generators("G320").unwrap();
    assert!(matches!(MatrixGroup::close_with_cap(&gens, Mode::Linear, 100), Err(Error::GroupTooLarge { .. })));
    let big = group("G320", Mode::Linear);
    assert!(matches!(big.tag_isomorphism_type(), Err(Error::CostCap(_))));
    assert!(matches!(big.generated_subgroups(2), Err(Error::CostCap(_))));
    let g320 = group("G320", Mode::Projective);
    assert!(matches!(g320.generated_subgroups(4), Err(Error::CostCap(_))));
    assert!(matches!(g320.generated_subgroups(0), Err(Error::Precondition(_))));
}

#[test]
fn element_arithmetic() {
    let g = group("G80", Mode::Linear);
    for e in g.elements().iter().step_by(17) {
        let inv = e.inverse().unwrap();
        assert!(e.mul(&inv).is_identity());
        let k = e.order().unwrap();
        assert!(e.pow(k as u64).is_identity());
        assert_eq!(g.order() % k as usize, 0);
    }
    let classes = g.conjugacy_classes();
    assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), g.order());
}
