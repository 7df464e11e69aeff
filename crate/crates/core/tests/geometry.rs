//! Points, lines and orbits in P³.

use pgl4_core::catalog::Catalog;
use pgl4_core::cyclo::{lcm_u32, CycNum};
use pgl4_core::error::Error;
use pgl4_core::group::{MatrixGroup, Mode};
use pgl4_core::linalg::Mat;
use pgl4_core::projgeom::{
    canonical_point_set, fixed_lines_of_involution, line_orbit, orbit, stabilizer, symmetric_difference,
    triple_point_census, ProjLine, ProjPoint,
};

fn pt(s: &str) -> ProjPoint {
    ProjPoint::parse(s).unwrap()
}

fn projective(key: &str) -> MatrixGroup {
    Catalog::standard().unwrap().group(key, Mode::Projective).unwrap()
}

/// Stabilizer order by testing proportionality of v and Mv through a rank computation,
/// without going through point normalisation.
fn stabilizer_order_by_rank(g: &MatrixGroup, p: &ProjPoint) -> usize {
    let n = lcm_u32(g.field_index(), p.field_index());
    let v: Vec<CycNum> = p.embed(n).unwrap().coords().to_vec();
    g.elements()
        .iter()
        .filter(|e| {
            let w = e.matrix().embed(n).unwrap().mul_vec(&v).unwrap();
            Mat::from_rows(vec![v.clone(), w]).unwrap().rank() == 1
        })
        .count()
}

#[test]
fn points_are_normalised_and_compared_projectively() {
    let p = pt("[0:2:2*i:0]");
    assert_eq!(p, pt("[0:1:i:0]"));
    assert_eq!(p.coords()[1], CycNum::from_int(4, 1));
    assert_eq!(p, pt("[0:1:i:0]").embed(40).unwrap());
    assert!(matches!(ProjPoint::parse("[0:0:0:0]"), Err(Error::Precondition(_)) | Err(Error::Parse(_))));
    assert!(ProjPoint::parse("[1:2:3]").is_err());
    assert!(ProjPoint::parse("1:2:3:4").is_err());
}

#[test]
fn lines_through_points_meet_correctly() {
    let l = ProjLine::parse("[1:0:0:0]", "[0:1:0:0]").unwrap();
    let m = ProjLine::parse("[1:1:0:0]", "[0:0:1:0]").unwrap();
    let k = ProjLine::parse("[0:0:1:0]", "[0:0:0:1]").unwrap();
    assert!(l.contains(&pt("[3:5:0:0]")));
    assert!(!l.contains(&pt("[1:0:1:0]")));
    assert_eq!(l.meet(&m).unwrap(), Some(pt("[1:1:0:0]")));
    assert!(l.is_skew_to(&k).unwrap());
    assert!(matches!(l.meet(&l), Err(Error::Precondition(_))));
    let same = ProjLine::parse("[1:1:0:0]", "[1:-1:0:0]").unwrap();
    assert_eq!(same, l);
    assert!(ProjLine::through(&pt("[1:0:0:0]"), &pt("[2:0:0:0]")).is_err());
    let (a, b) = l.basis_points();
    assert!(l.contains(&a) && l.contains(&b) && a != b);
    let c = l.point_at(&CycNum::from_int(1, 2), &CycNum::from_int(1, 3)).unwrap();
    assert_eq!(c, pt("[2:3:0:0]"));
}

#[test]
fn lines_move_with_matrices() {
    let swap = Mat::parse_rows(&[&["0", "1", "0", "0"], &["1", "0", "0", "0"], &["0", "0", "0", "1"], &["0", "0", "1", "0"]]).unwrap();
    let l = ProjLine::parse("[1:0:0:0]", "[0:0:1:0]").unwrap();
    let img = l.apply(&swap).unwrap();
    assert!(img.contains(&pt("[0:1:0:0]")) && img.contains(&pt("[0:0:0:1]")));
    let (p, q) = l.basis_points();
    assert!(img.contains(&p.apply(&swap).unwrap()) && img.contains(&q.apply(&swap).unwrap()));
}

#[test]
fn orbit_stabilizer_agrees_with_rank_test() {
    for key in ["H", "G80", "G144"] {
        let g = projective(key);
        for s in ["[1:0:0:0]", "[1:0:1:0]", "[0:1:0:1]", "[1:1:1:1]", "[1:2:3:5]", "[1:i:0:0]"] {
            let p = pt(s);
            let o = orbit(&g, &p).unwrap();
            let by_rank = stabilizer_order_by_rank(&g, &p);
            assert_eq!(o.stabilizer_order, by_rank, "{key} {s}");
            assert_eq!(o.len() * by_rank, g.order(), "{key} {s}");
            assert!(o.contains(&p));
            assert_eq!(stabilizer(&g, &p).unwrap().order(), by_rank);
        }
    }
}

#[test]
fn generic_heisenberg_orbit_is_free() {
    let o = orbit(&projective("H"), &pt("[1:2:3:5]")).unwrap();
    assert_eq!((o.len(), o.stabilizer_order), (16, 1));
    assert_eq!(canonical_point_set(&o.members).unwrap().len(), 16);
}

#[test]
fn involution_fixed_lines_are_pointwise_fixed() {
    let g = projective("G80");
    let inv = g.elements().iter().find(|e| e.order().unwrap() == 2).unwrap();
    let (a, b) = fixed_lines_of_involution(inv).unwrap();
    assert!(a.is_skew_to(&b).unwrap());
    for l in [&a, &b] {
        let (p, q) = l.basis_points();
        let mid = l.point_at(&CycNum::one(1), &CycNum::from_int(1, 7)).unwrap();
        for x in [p, q, mid] {
            assert_eq!(x.apply_element(inv).unwrap(), x);
        }
    }
    let id = g.elements().iter().find(|e| e.is_identity()).unwrap();
    assert!(fixed_lines_of_involution(id).is_err());
}

#[test]
fn coordinate_tetrahedron_census() {
    let e = ["[1:0:0:0]", "[0:1:0:0]", "[0:0:1:0]", "[0:0:0:1]"];
    let mut edges = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            edges.push(ProjLine::parse(e[i], e[j]).unwrap());
        }
    }
    let census = triple_point_census(&edges).unwrap();
    assert_eq!(census.len(), 4);
    assert!(census.iter().all(|(_, c)| *c == 3));
    assert!(triple_point_census(&edges[..1]).is_err());
}

#[test]
fn line_orbit_of_an_edge_under_heisenberg() {
    let l = ProjLine::parse("[1:0:0:0]", "[0:1:0:0]").unwrap();
    let orb = line_orbit(&projective("H"), &l).unwrap();
    assert_eq!(16 % orb.len(), 0);
    for m in &orb {
        assert_eq!(orb.iter().filter(|x| *x == m).count(), 1);
    }
}

#[test]
fn symmetric_difference_is_up_to_scaling() {
    let a = vec![pt("[1:0:0:0]"), pt("[1:1:0:0]")];
    let b = vec![pt("[2:2:0:0]"), pt("[0:0:0:1]")];
    let (only_a, only_b) = symmetric_difference(&a, &b);
    assert_eq!(only_a, vec![pt("[1:0:0:0]")]);
    assert_eq!(only_b, vec![pt("[0:0:0:1]")]);
}
