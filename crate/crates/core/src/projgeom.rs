//! Points and lines of P³, orbits, stabilizers, fixed lines and incidences.

use std::collections::HashMap;
use std::fmt;

use crate::cyclo::{lcm_u32, CycNum, MAX_FIELD_INDEX};
use crate::error::{Error, Result};
use crate::group::{GroupElement, MatrixGroup};
use crate::linalg::{Mat, Vector};

/// A point of P³ with its first nonzero coordinate scaled to 1.
#[derive(Clone)]
pub struct ProjPoint {
    coords: Vec<CycNum>,
    key: Vec<u8>,
}

fn unify_vec(v: &[CycNum]) -> Result<Vec<CycNum>> {
    let mut n = 1;
    for c in v {
        n = lcm_u32(n, c.field_index());
    }
    if n > MAX_FIELD_INDEX {
        return Err(Error::Domain(format!("coordinates need field index {n}")));
    }
    v.iter().map(|c| c.embed(n)).collect()
}

impl ProjPoint {
    pub fn new(coords: Vec<CycNum>) -> Result<ProjPoint> {
        if coords.len() != 4 {
            return Err(Error::Precondition("points of P3 have 4 coordinates".into()));
        }
        let coords = unify_vec(&coords)?;
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or_else(|| Error::Precondition("all coordinates are zero".into()))?
            .inverse()?;
        let coords: Vec<CycNum> = coords.iter().map(|c| c * &lead).collect();
        let mut key = Vec::new();
        for c in &coords {
            c.encode_into(&mut key);
        }
        Ok(ProjPoint { coords, key })
    }

    /// Parses `[a:b:c:d]` with number literals as entries.
    pub fn parse(s: &str) -> Result<ProjPoint> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("point {s:?} must look like [a:b:c:d]")))?;
        let parts: Vec<&str> = inner.split(':').collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!("point {s:?} needs four coordinates")));
        }
        let coords = parts
            .iter()
            .map(|p| CycNum::parse(p))
            .collect::<Result<Vec<_>>>()?;
        ProjPoint::new(coords)
    }

    pub fn coords(&self) -> &[CycNum] {
        &self.coords
    }

    pub fn field_index(&self) -> u32 {
        self.coords[0].field_index()
    }

    pub fn key(&self) -> &[u8] {
        &self.key
    }

    pub fn embed(&self, n: u32) -> Result<ProjPoint> {
        ProjPoint::new(self.coords.iter().map(|c| c.embed(n)).collect::<Result<_>>()?)
    }

    /// v ↦ M·v.
    pub fn apply(&self, m: &Mat) -> Result<ProjPoint> {
        let n = lcm_u32(m.field_index(), self.field_index());
        let m = m.embed(n)?;
        let v: Vec<CycNum> = self.coords.iter().map(|c| c.embed(n)).collect::<Result<_>>()?;
        ProjPoint::new(m.mul_vec(&v)?)
    }

    pub fn apply_element(&self, g: &GroupElement) -> Result<ProjPoint> {
        self.apply(g.matrix())
    }
}

impl PartialEq for ProjPoint {
    fn eq(&self, other: &ProjPoint) -> bool {
        if self.field_index() == other.field_index() {
            self.key == other.key
        } else {
            self.coords == other.coords
        }
    }
}

impl Eq for ProjPoint {}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(" : "))
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A line of P³ stored as the reduced row echelon form of a 2×4 spanning matrix.
#[derive(Clone)]
pub struct ProjLine {
    span: Mat,
    key: Vec<u8>,
}

impl ProjLine {
    pub fn from_span(m: &Mat) -> Result<ProjLine> {
        if m.cols() != 4 {
            return Err(Error::Precondition("line spans have 4 columns".into()));
        }
        let e = m.rref();
        if e.rank != 2 {
            return Err(Error::Precondition(format!(
                "degenerate span: rank {} instead of 2",
                e.rank
            )));
        }
        let rows = e.matrix.row_vecs();
        let span = Mat::from_rows(rows[..2].to_vec())?;
        let key = span.canonical_bytes();
        Ok(ProjLine { span, key })
    }

    /// The line through two distinct points.
    pub fn through(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine> {
        if p == q {
            return Err(Error::Precondition("line through a repeated point".into()));
        }
        let m = Mat::from_rows(vec![p.coords.clone(), q.coords.clone()])?;
        ProjLine::from_span(&m)
    }

    pub fn parse(a: &str, b: &str) -> Result<ProjLine> {
        ProjLine::through(&ProjPoint::parse(a)?, &ProjPoint::parse(b)?)
    }

    pub fn span(&self) -> &Mat {
        &self.span
    }

    pub fn key(&self) -> &[u8] {
        &self.key
    }

    pub fn field_index(&self) -> u32 {
        self.span.field_index()
    }

    pub fn embed(&self, n: u32) -> Result<ProjLine> {
        ProjLine::from_span(&self.span.embed(n)?)
    }

    /// The two RREF basis rows as points.
    pub fn basis_points(&self) -> (ProjPoint, ProjPoint) {
        (
            ProjPoint::new(self.span.row(0)).expect("nonzero row"),
            ProjPoint::new(self.span.row(1)).expect("nonzero row"),
        )
    }

    /// λ·p + μ·q for the basis rows.
    pub fn point_at(&self, lambda: &CycNum, mu: &CycNum) -> Result<ProjPoint> {
        let v: Vector = (0..4)
            .map(|c| lambda * self.span.get(0, c) + mu * self.span.get(1, c))
            .collect();
        ProjPoint::new(v)
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        let mut rows = self.span.row_vecs();
        rows.push(p.coords.clone());
        Mat::from_rows(rows).is_ok_and(|m| m.rank() == 2)
    }

    pub fn apply(&self, m: &Mat) -> Result<ProjLine> {
        let n = lcm_u32(m.field_index(), self.field_index());
        let img = m.embed(n)?.try_mul(&self.span.embed(n)?.transpose())?;
        ProjLine::from_span(&img.transpose())
    }

    /// Intersection point, or `None` for skew lines.
    pub fn meet(&self, other: &ProjLine) -> Result<Option<ProjPoint>> {
        if self == other {
            return Err(Error::Precondition("intersection of a line with itself".into()));
        }
        let n = lcm_u32(self.field_index(), other.field_index());
        let a = self.span.embed(n)?;
        let b = other.span.embed(n)?;
        // columns r1, r2, -s1, -s2
        let mut cols = a.row_vecs();
        for r in b.row_vecs() {
            cols.push(r.iter().map(|c| -c).collect());
        }
        let m = Mat::from_rows(cols)?.transpose();
        let ker = m.kernel_basis();
        match ker.len() {
            0 => Ok(None),
            1 => {
                let k = &ker[0];
                let v: Vector = (0..4)
                    .map(|c| &k[0] * a.get(0, c) + &k[1] * a.get(1, c))
                    .collect();
                Ok(Some(ProjPoint::new(v)?))
            }
            _ => Err(Error::Internal("distinct lines with a 2-dim intersection".into())),
        }
    }

    pub fn is_skew_to(&self, other: &ProjLine) -> Result<bool> {
        Ok(self.meet(other)?.is_none())
    }
}

impl PartialEq for ProjLine {
    fn eq(&self, other: &ProjLine) -> bool {
        if self.field_index() == other.field_index() {
            self.key == other.key
        } else {
            self.span == other.span
        }
    }
}

impl Eq for ProjLine {}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = self.basis_points();
        write!(f, "<{p}, {q}>")
    }
}

impl fmt::Debug for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An orbit of a point under a projective group.
#[derive(Debug, Clone)]
pub struct Orbit {
    pub seed: ProjPoint,
    pub group: String,
    pub group_order: usize,
    pub members: Vec<ProjPoint>,
    pub stabilizer_order: usize,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.members.iter().any(|q| q == p)
    }
}

fn common_point_field(g: &MatrixGroup, p: &ProjPoint) -> Result<u32> {
    let n = lcm_u32(g.field_index(), p.field_index());
    if n > MAX_FIELD_INDEX {
        return Err(Error::Domain(format!("orbit needs field index {n}")));
    }
    Ok(n)
}

/// Images of `p` under every group element, deduplicated in first-seen order.
pub fn orbit(g: &MatrixGroup, p: &ProjPoint) -> Result<Orbit> {
    let n = common_point_field(g, p)?;
    let p = p.embed(n)?;
    let mut seen: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut members = Vec::new();
    let mut fixing = 0;
    for e in g.elements() {
        let q = p.apply(e.matrix())?;
        if q.key == p.key {
            fixing += 1;
        }
        if !seen.contains_key(&q.key) {
            seen.insert(q.key.clone(), members.len());
            members.push(q);
        }
    }
    let orb = Orbit {
        seed: p,
        group: g.name().unwrap_or("?").to_string(),
        group_order: g.order(),
        members,
        stabilizer_order: fixing,
    };
    if orb.members.len() * orb.stabilizer_order != g.order() {
        return Err(Error::Internal(format!(
            "orbit-stabilizer violated: {} * {} != {}",
            orb.members.len(),
            orb.stabilizer_order,
            g.order()
        )));
    }
    Ok(orb)
}

/// The subgroup of elements fixing `p`.
pub fn stabilizer(g: &MatrixGroup, p: &ProjPoint) -> Result<MatrixGroup> {
    let n = common_point_field(g, p)?;
    let p = p.embed(n)?;
    let mut members = Vec::new();
    for (k, e) in g.elements().iter().enumerate() {
        if p.apply(e.matrix())? == p {
            members.push(k);
        }
    }
    Ok(g.subgroup_from_indices(&members))
}

/// s with s² = c, when c is a root of unity or a rational square times one.
fn scalar_sqrt(c: &CycNum) -> Option<CycNum> {
    let n = c.field_index();
    if let Some(k) = c.root_order() {
        if k == 1 {
            return Some(CycNum::one(n));
        }
        let m = lcm_u32(n, 2 * k);
        return (m <= MAX_FIELD_INDEX).then(|| CycNum::root_of_unity(m, (m / (2 * k)) as i64));
    }
    for j in 0..lcm_u32(2, n) {
        let z = CycNum::root_of_unity(n, j as i64);
        let q = (c * &z.conjugate()).to_rational()?;
        if q <= num_rational::BigRational::from_integer(0.into()) {
            continue;
        }
        let (a, b) = (q.numer().sqrt(), q.denom().sqrt());
        if &a * &a == *q.numer() && &b * &b == *q.denom() {
            let s = CycNum::root_of_unity(lcm_u32(n, 2 * n), 1).pow(j as u64);
            let s = s.scale_rational(&num_rational::BigRational::new(a, b));
            return Some(s);
        }
    }
    None
}

/// The two lines of fixed points of a projective involution.
pub fn fixed_lines_of_involution(g: &GroupElement) -> Result<(ProjLine, ProjLine)> {
    let m = g.matrix();
    let sq = m.mul(m);
    let c = sq
        .scalar_value()
        .ok_or_else(|| Error::Precondition("matrix square is not scalar".into()))?;
    if m.scalar_value().is_some() {
        return Err(Error::Precondition("scalar matrix is not an involution".into()));
    }
    let s = scalar_sqrt(&c).ok_or_else(|| {
        Error::Precondition("no square root of the scalar M^2 in a cyclotomic field".into())
    })?;
    let n = lcm_u32(m.field_index(), s.field_index());
    let normalized = m.embed(n)?.scale(&s.embed(n)?.inverse()?)?;
    let eig = normalized.eigen_lines(2)?;
    let dims: Vec<usize> = eig.iter().map(|(_, b)| b.len()).collect();
    if dims != [2, 2] {
        return Err(Error::Precondition(format!(
            "not a P3 involution with line fixed locus: eigenspace dimensions {dims:?}"
        )));
    }
    let lines = eig
        .iter()
        .map(|(_, b)| ProjLine::from_span(&Mat::from_rows(b.clone())?))
        .collect::<Result<Vec<_>>>()?;
    // order the pair deterministically
    let (a, b) = (lines[0].clone(), lines[1].clone());
    if a.key <= b.key {
        Ok((a, b))
    } else {
        Ok((b, a))
    }
}

/// Images of a line under every group element, deduplicated in first-seen order.
pub fn line_orbit(g: &MatrixGroup, l: &ProjLine) -> Result<Vec<ProjLine>> {
    let n = lcm_u32(g.field_index(), l.field_index());
    let l = l.embed(n)?;
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for e in g.elements() {
        let img = l.apply(e.matrix())?;
        if seen.insert(img.key.clone()) {
            out.push(img);
        }
    }
    Ok(out)
}

/// Every pairwise intersection point of the lines, with the number of lines through it.
pub fn triple_point_census(lines: &[ProjLine]) -> Result<Vec<(ProjPoint, usize)>> {
    if lines.len() < 2 {
        return Err(Error::Precondition("census needs at least two lines".into()));
    }
    let mut n = 1;
    for l in lines {
        n = lcm_u32(n, l.field_index());
    }
    let lines: Vec<ProjLine> = lines.iter().map(|l| l.embed(n)).collect::<Result<_>>()?;
    let mut points: Vec<ProjPoint> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, a) in lines.iter().enumerate() {
        for b in &lines[i + 1..] {
            if let Some(p) = a.meet(b)? {
                if seen.insert(p.key.clone()) {
                    points.push(p);
                }
            }
        }
    }
    let mut out: Vec<(ProjPoint, usize)> = points
        .into_iter()
        .map(|p| {
            let c = lines.iter().filter(|l| l.contains(&p)).count();
            (p, c)
        })
        .collect();
    out.sort_by(|a, b| a.0.key.cmp(&b.0.key));
    Ok(out)
}

/// Sorts points by canonical key and removes duplicates.
pub fn canonical_point_set(points: &[ProjPoint]) -> Result<Vec<ProjPoint>> {
    let mut n = 1;
    for p in points {
        n = lcm_u32(n, p.field_index());
    }
    let mut v: Vec<ProjPoint> = points.iter().map(|p| p.embed(n)).collect::<Result<_>>()?;
    v.sort_by(|a, b| a.key.cmp(&b.key));
    v.dedup_by(|a, b| a.key == b.key);
    Ok(v)
}

/// Points of `a` missing from `b` and vice versa (set comparison up to field embedding).
pub fn symmetric_difference(a: &[ProjPoint], b: &[ProjPoint]) -> (Vec<ProjPoint>, Vec<ProjPoint>) {
    let only_a = a.iter().filter(|p| !b.contains(p)).cloned().collect();
    let only_b = b.iter().filter(|p| !a.contains(p)).cloned().collect();
    (only_a, only_b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Mode;

    fn pt(s: &str) -> ProjPoint {
        ProjPoint::parse(s).unwrap()
    }

    #[test]
    fn canonical_scaling() {
        assert_eq!(pt("[0:2:4:0]"), pt("[0:1:2:0]"));
        assert_eq!(pt("[i:0:0:1]").coords()[3], CycNum::parse("-i").unwrap());
        assert!(ProjPoint::parse("[0:0:0:0]").is_err());
        assert!(ProjPoint::parse("[1:2:3]").is_err());
    }

    #[test]
    fn lines_and_meets() {
        let l = ProjLine::through(&pt("[1:0:0:0]"), &pt("[0:1:0:0]")).unwrap();
        let m = ProjLine::through(&pt("[1:0:0:0]"), &pt("[0:0:1:0]")).unwrap();
        let k = ProjLine::through(&pt("[0:0:1:0]"), &pt("[0:0:0:1]")).unwrap();
        assert_eq!(l.meet(&m).unwrap(), Some(pt("[1:0:0:0]")));
        assert_eq!(l.meet(&k).unwrap(), None);
        assert!(l.meet(&l).is_err());
        assert_eq!(
            ProjLine::through(&pt("[0:1:0:0]"), &pt("[1:0:0:0]")).unwrap(),
            l
        );
        assert!(ProjLine::through(&pt("[1:0:0:0]"), &pt("[2:0:0:0]")).is_err());
    }

    #[test]
    fn census_of_concurrent_lines() {
        let a = ProjLine::through(&pt("[1:0:0:0]"), &pt("[0:1:0:0]")).unwrap();
        let b = ProjLine::through(&pt("[1:0:0:0]"), &pt("[0:0:1:0]")).unwrap();
        let c = ProjLine::through(&pt("[1:0:0:0]"), &pt("[0:1:1:0]")).unwrap();
        let census = triple_point_census(&[a.clone(), b, c]).unwrap();
        assert_eq!(census.len(), 1);
        assert_eq!(census[0].1, 3);
        let k = ProjLine::through(&pt("[0:0:1:0]"), &pt("[0:0:0:1]")).unwrap();
        assert!(triple_point_census(&[a, k]).unwrap().is_empty());
    }

    #[test]
    fn diagonal_involution_fixed_lines() {
        let t1 = Mat::parse_rows(&[
            &["1", "0", "0", "0"],
            &["0", "1", "0", "0"],
            &["0", "0", "-1", "0"],
            &["0", "0", "0", "-1"],
        ])
        .unwrap();
        let g = GroupElement::new(t1.clone(), Mode::Projective).unwrap();
        let (a, b) = fixed_lines_of_involution(&g).unwrap();
        let zw = ProjLine::through(&pt("[1:0:0:0]"), &pt("[0:1:0:0]")).unwrap();
        let xy = ProjLine::through(&pt("[0:0:1:0]"), &pt("[0:0:0:1]")).unwrap();
        assert!((a == zw && b == xy) || (a == xy && b == zw));
        let grp = MatrixGroup::close(&[t1], Mode::Projective).unwrap();
        let o = orbit(&grp, &pt("[1:0:1:0]")).unwrap();
        assert_eq!(o.len(), 2);
        assert_eq!(o.stabilizer_order, 1);
        assert_eq!(stabilizer(&grp, &pt("[1:1:0:0]")).unwrap().order(), 2);
    }
}
