//! Finite groups of 4×4 matrices, in linear or projective mode.
//!
//! Elements are deduplicated by the canonical byte encoding of their matrix.
//! In projective mode every matrix is first rescaled so that its first nonzero
//! entry (row-major) is 1, which identifies matrices differing by a scalar.

mod abelian;
mod iso;
mod subgroups;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::cyclo::{lcm_u32, CycNum, MAX_FIELD_INDEX};
use crate::error::{Error, Result};
use crate::linalg::Mat;

pub use abelian::{AbelianQuotient, Character};
pub use iso::{tag_subset, IsoTag};
pub use subgroups::{Cayley, ElementSet, GeneratedSubgroup, CAYLEY_LIMIT};

pub const DEFAULT_CLOSURE_CAP: usize = 10_000;
const ORDER_CAP: u32 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Linear,
    Projective,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Linear => "linear",
            Mode::Projective => "projective",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "linear" => Ok(Mode::Linear),
            "projective" => Ok(Mode::Projective),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

/// Rescales a square matrix so its first nonzero entry is 1.
pub fn projective_normalize(m: &Mat) -> Result<Mat> {
    let lead = m
        .entries()
        .iter()
        .find(|e| !e.is_zero())
        .ok_or_else(|| Error::Precondition("zero matrix has no projective class".into()))?;
    if lead.is_one() {
        return Ok(m.clone());
    }
    m.scale(&lead.inverse()?)
}

#[derive(Clone)]
pub struct GroupElement {
    matrix: Mat,
    mode: Mode,
    key: Vec<u8>,
}

impl GroupElement {
    pub fn new(matrix: Mat, mode: Mode) -> Result<GroupElement> {
        if matrix.rows() != 4 || matrix.cols() != 4 {
            return Err(Error::Precondition("group elements are 4x4 matrices".into()));
        }
        let matrix = match mode {
            Mode::Linear => matrix,
            Mode::Projective => projective_normalize(&matrix)?,
        };
        let key = matrix.canonical_bytes();
        Ok(GroupElement { matrix, mode, key })
    }

    pub fn identity(field: u32, mode: Mode) -> GroupElement {
        GroupElement::new(Mat::identity(4, field), mode).expect("identity is valid")
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn field_index(&self) -> u32 {
        self.matrix.field_index()
    }

    /// Canonical encoding used as the dedup key.
    pub fn key(&self) -> &[u8] {
        &self.key
    }

    pub fn embed(&self, n: u32) -> Result<GroupElement> {
        GroupElement::new(self.matrix.embed(n)?, self.mode)
    }

    pub fn with_mode(&self, mode: Mode) -> GroupElement {
        GroupElement::new(self.matrix.clone(), mode).expect("nonzero matrix")
    }

    pub fn try_mul(&self, other: &GroupElement) -> Result<GroupElement> {
        GroupElement::new(self.matrix.try_mul(&other.matrix)?, self.mode)
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        self.try_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn inverse(&self) -> Result<GroupElement> {
        GroupElement::new(self.matrix.inverse()?, self.mode)
    }

    pub fn pow(&self, e: u64) -> GroupElement {
        GroupElement::new(self.matrix.pow(e), self.mode).expect("invertible")
    }

    /// h⁻¹·self·h.
    pub fn conjugate_by(&self, h: &GroupElement) -> Result<GroupElement> {
        h.inverse()?.try_mul(self)?.try_mul(h)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// True when the matrix is a scalar multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        self.matrix.scalar_value().is_some()
    }

    /// Least k ≥ 1 with gᵏ trivial (identity in linear mode, scalar in projective mode).
    pub fn order(&self) -> Result<u32> {
        let mut acc = self.clone();
        for k in 1..=ORDER_CAP {
            let trivial = match self.mode {
                Mode::Linear => acc.is_identity(),
                Mode::Projective => acc.is_scalar(),
            };
            if trivial {
                return Ok(k);
            }
            acc = acc.try_mul(self)?;
        }
        Err(Error::CostCap(format!(
            "element order exceeds {ORDER_CAP}"
        )))
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &GroupElement) -> bool {
        if self.field_index() == other.field_index() {
            self.key == other.key
        } else {
            self.mode == other.mode && self.matrix == other.matrix
        }
    }
}

impl Eq for GroupElement {}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement[{}]\n{}", self.mode, self.matrix)
    }
}

/// A closed finite matrix group with its generators.
#[derive(Clone)]
pub struct MatrixGroup {
    mode: Mode,
    field: u32,
    name: Option<String>,
    generators: Vec<GroupElement>,
    elements: Vec<GroupElement>,
    index: HashMap<Vec<u8>, usize>,
}

fn common_field(mats: &[Mat]) -> Result<u32> {
    let mut n = 1;
    for m in mats {
        n = lcm_u32(n, m.field_index());
        if n > MAX_FIELD_INDEX {
            return Err(Error::Domain(format!("generators need field index {n}")));
        }
    }
    Ok(n)
}

impl MatrixGroup {
    /// Breadth-first closure of the generators with the default element cap.
    pub fn close(generators: &[Mat], mode: Mode) -> Result<MatrixGroup> {
        MatrixGroup::close_with_cap(generators, mode, DEFAULT_CLOSURE_CAP)
    }

    pub fn close_with_cap(generators: &[Mat], mode: Mode, cap: usize) -> Result<MatrixGroup> {
        let n = common_field(generators)?;
        let gens = generators
            .iter()
            .map(|m| {
                if m.det().map_or(true, |d| d.is_zero()) {
                    return Err(Error::Precondition("generator is not invertible".into()));
                }
                GroupElement::new(m.embed(n)?, mode)
            })
            .collect::<Result<Vec<_>>>()?;
        MatrixGroup::close_elements(gens, n, mode, cap)
    }

    fn close_elements(
        gens: Vec<GroupElement>,
        field: u32,
        mode: Mode,
        cap: usize,
    ) -> Result<MatrixGroup> {
        let id = GroupElement::identity(field, mode);
        let mut index = HashMap::new();
        index.insert(id.key.clone(), 0);
        let mut elements = vec![id];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let p = elements[i].try_mul(g)?;
                if !index.contains_key(&p.key) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    index.insert(p.key.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        Ok(MatrixGroup {
            mode,
            field,
            name: None,
            generators: gens,
            elements,
            index,
        })
    }

    /// Wraps an element list that is already known to be a group.
    pub(crate) fn from_closed(
        elements: Vec<GroupElement>,
        generators: Vec<GroupElement>,
        field: u32,
        mode: Mode,
    ) -> MatrixGroup {
        let index = elements
            .iter()
            .enumerate()
            .map(|(k, e)| (e.key.clone(), k))
            .collect();
        MatrixGroup {
            mode,
            field,
            name: None,
            generators,
            elements,
            index,
        }
    }

    /// Closure of group elements (all in this group's field).
    pub fn close_group_elements(&self, gens: Vec<GroupElement>) -> Result<MatrixGroup> {
        MatrixGroup::close_elements(gens, self.field, self.mode, DEFAULT_CLOSURE_CAP)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> MatrixGroup {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn field_index(&self) -> u32 {
        self.field
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &GroupElement {
        &self.elements[k]
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    /// Index of an element, after embedding it into this group's field and mode.
    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        if g.field_index() == self.field && g.mode == self.mode {
            return self.index.get(&g.key).copied();
        }
        let h = GroupElement::new(g.matrix.embed(self.field).ok()?, self.mode).ok()?;
        self.index.get(&h.key).copied()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.index_of(g).is_some()
    }

    pub fn contains_matrix(&self, m: &Mat) -> bool {
        GroupElement::new(m.clone(), self.mode).is_ok_and(|g| self.contains(&g))
    }

    /// Index of the product of two elements.
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].mul(&self.elements[b]);
        self.index[&p.key]
    }

    pub fn is_subgroup_of(&self, other: &MatrixGroup) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }

    /// The same group with elements re-expressed in Q(ζ_n).
    pub fn embed(&self, n: u32) -> Result<MatrixGroup> {
        if n == self.field {
            return Ok(self.clone());
        }
        let elements = self
            .elements
            .iter()
            .map(|e| e.embed(n))
            .collect::<Result<Vec<_>>>()?;
        let gens = self
            .generators
            .iter()
            .map(|e| e.embed(n))
            .collect::<Result<Vec<_>>>()?;
        let mut g = MatrixGroup::from_closed(elements, gens, n, self.mode);
        g.name = self.name.clone();
        Ok(g)
    }

    /// The image in PGL₄ (identity when already projective).
    pub fn projective_image(&self) -> MatrixGroup {
        if self.mode == Mode::Projective {
            return self.clone();
        }
        let mut seen = HashMap::new();
        let mut elements = Vec::new();
        for e in &self.elements {
            let p = e.with_mode(Mode::Projective);
            if !seen.contains_key(&p.key) {
                seen.insert(p.key.clone(), elements.len());
                elements.push(p);
            }
        }
        let gens = self
            .generators
            .iter()
            .map(|g| g.with_mode(Mode::Projective))
            .collect();
        let mut g = MatrixGroup::from_closed(elements, gens, self.field, Mode::Projective);
        g.name = self.name.clone();
        g
    }

    /// Scalar matrices contained in a linear group.
    pub fn scalar_kernel(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&k| self.elements[k].is_scalar())
            .collect()
    }

    /// One representative per coset of the scalar subgroup, smallest index first.
    pub fn scalar_coset_representatives(&self) -> Vec<usize> {
        let scalars: Vec<&GroupElement> = self
            .scalar_kernel()
            .into_iter()
            .map(|k| &self.elements[k])
            .collect();
        let mut seen = vec![false; self.order()];
        let mut reps = Vec::new();
        for k in 0..self.order() {
            if seen[k] {
                continue;
            }
            reps.push(k);
            for z in &scalars {
                seen[self.index[&self.elements[k].mul(z).key]] = true;
            }
        }
        reps
    }

    /// True iff conjugation by every generator of `self` maps `sub` into itself.
    pub fn is_normal(&self, sub: &MatrixGroup) -> Result<bool> {
        if !sub.is_subgroup_of(self) {
            return Err(Error::Precondition(
                "subgroup is not contained in the ambient group".into(),
            ));
        }
        for h in &self.generators {
            let h = h.embed(lcm_u32(h.field_index(), sub.field))?;
            let hinv = h.inverse()?;
            for x in &sub.elements {
                let c = hinv.try_mul(x)?.try_mul(&h)?;
                if !sub.contains(&c) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Conjugacy classes as sorted index lists, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let inv_gens: Vec<GroupElement> = self
            .generators
            .iter()
            .map(|g| g.inverse().expect("group element"))
            .collect();
        let mut class_of = vec![usize::MAX; self.order()];
        let mut classes = Vec::new();
        for start in 0..self.order() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = vec![start];
            class_of[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for (h, hi) in self.generators.iter().zip(&inv_gens) {
                    let c = hi.mul(&self.elements[x]).mul(h);
                    let k = self.index[&c.key];
                    if class_of[k] == usize::MAX {
                        class_of[k] = id;
                        members.push(k);
                        queue.push_back(k);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }

    /// Elements commuting with every generator.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&k| {
                let x = &self.elements[k];
                self.generators.iter().all(|h| x.mul(h) == h.mul(x))
            })
            .collect()
    }

    /// Smallest normal subgroup containing the given elements.
    pub fn normal_closure(&self, seeds: &[GroupElement]) -> Result<MatrixGroup> {
        let mut gens: Vec<GroupElement> = seeds.to_vec();
        gens.retain(|g| {
            !(match self.mode {
                Mode::Linear => g.is_identity(),
                Mode::Projective => g.is_scalar(),
            })
        });
        let inv_gens: Vec<GroupElement> = self
            .generators
            .iter()
            .map(|g| g.inverse())
            .collect::<Result<_>>()?;
        loop {
            let k = self.close_group_elements(gens.clone())?;
            let mut extra = None;
            'search: for x in &gens {
                for (h, hi) in self.generators.iter().zip(&inv_gens) {
                    let c = hi.try_mul(x)?.try_mul(h)?;
                    if !k.contains(&c) {
                        extra = Some(c);
                        break 'search;
                    }
                }
            }
            match extra {
                Some(c) => gens.push(c),
                None => return Ok(k),
            }
        }
    }

    /// [a, b] = a⁻¹b⁻¹ab.
    pub fn commutator(a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        a.inverse()?.try_mul(&b.inverse()?)?.try_mul(a)?.try_mul(b)
    }

    /// The derived subgroup, as the normal closure of generator commutators.
    pub fn commutator_subgroup(&self) -> Result<MatrixGroup> {
        let mut comms = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                comms.push(MatrixGroup::commutator(a, b)?);
            }
        }
        self.normal_closure(&comms)
    }

    /// Element orders of all members, in element order.
    pub fn element_orders(&self) -> Vec<u32> {
        self.elements
            .iter()
            .map(|e| e.order().expect("finite group element"))
            .collect()
    }

    /// Histogram of element orders.
    pub fn order_statistics(&self) -> std::collections::BTreeMap<u32, usize> {
        let mut stats = std::collections::BTreeMap::new();
        for o in self.element_orders() {
            *stats.entry(o).or_insert(0) += 1;
        }
        stats
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.mul(b) == b.mul(a))
        })
    }

    /// A subgroup from element indices (assumed closed); generators are the members.
    pub fn subgroup_from_indices(&self, members: &[usize]) -> MatrixGroup {
        let elements: Vec<GroupElement> = members.iter().map(|&k| self.elements[k].clone()).collect();
        let gens = elements.iter().filter(|e| !e.is_identity()).cloned().collect();
        let mut els = elements;
        // keep identity first for readability
        if let Some(p) = els.iter().position(GroupElement::is_identity) {
            els.swap(0, p);
        }
        MatrixGroup::from_closed(els, gens, self.field, self.mode)
    }
}

impl fmt::Debug for MatrixGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MatrixGroup({}, {}, order {}, field {})",
            self.name.as_deref().unwrap_or("?"),
            self.mode,
            self.order(),
            self.field
        )
    }
}

/// Order of a single matrix, in the given mode.
pub fn element_order(m: &Mat, mode: Mode) -> Result<u32> {
    GroupElement::new(m.clone(), mode)?.order()
}

/// Convenience: i·I₄ in Q(ζ_4).
pub fn i_scalar() -> Mat {
    Mat::scalar(4, &CycNum::root_of_unity(4, 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(p: [usize; 4]) -> Mat {
        let mut m = Mat::zeros(4, 4, 1);
        for (r, &c) in p.iter().enumerate() {
            m.set(r, c, CycNum::one(1)).unwrap();
        }
        m
    }

    fn diag(v: [i64; 4]) -> Mat {
        let mut m = Mat::zeros(4, 4, 1);
        for (k, x) in v.into_iter().enumerate() {
            m.set(k, k, CycNum::from_int(1, x)).unwrap();
        }
        m
    }

    fn heisenberg() -> Vec<Mat> {
        vec![
            perm([2, 3, 0, 1]),
            perm([1, 0, 3, 2]),
            diag([1, 1, -1, -1]),
            diag([1, -1, 1, -1]),
        ]
    }

    #[test]
    fn trivial_closure() {
        let g = MatrixGroup::close(&[Mat::identity(4, 1)], Mode::Linear).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn heisenberg_orders() {
        let lin = MatrixGroup::close(&heisenberg(), Mode::Linear).unwrap();
        assert_eq!(lin.order(), 32);
        let proj = MatrixGroup::close(&heisenberg(), Mode::Projective).unwrap();
        assert_eq!(proj.order(), 16);
        assert!(proj.element_orders().iter().all(|&o| o <= 2));
        assert_eq!(lin.projective_image().order() * lin.scalar_kernel().len(), 32);
    }

    #[test]
    fn heisenberg_classes_and_commutator() {
        let lin = MatrixGroup::close(&heisenberg(), Mode::Linear).unwrap();
        let classes = lin.conjugacy_classes();
        assert_eq!(classes.len(), 17);
        assert_eq!(classes.iter().filter(|c| c.len() == 1).count(), 2);
        let d = lin.commutator_subgroup().unwrap();
        assert_eq!(d.order(), 2);
        assert!(d.elements().iter().all(GroupElement::is_scalar));
        assert_eq!(lin.center().len(), 2);
        assert!(lin.is_normal(&d).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let r = MatrixGroup::close_with_cap(&heisenberg(), Mode::Linear, 10);
        assert_eq!(r.unwrap_err(), Error::GroupTooLarge { cap: 10 });
    }
}
