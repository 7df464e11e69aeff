//! Pattern-plus-witness recognition of the few small group shapes that occur.
//!
//! A tag is only produced together with element-index witnesses, and
//! [`IsoTag::verify`] re-checks those witnesses from the multiplication table.

use std::collections::BTreeMap;
use std::fmt;

use super::subgroups::{Cayley, ElementSet};
use super::MatrixGroup;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoTag {
    Trivial,
    /// Cyclic of order n, with a generating element.
    Cyclic { n: usize, generator: usize },
    /// (Z/2)^rank: commutative and every element squares to the identity.
    ElementaryAbelian2 { rank: u32 },
    /// Order 12, no element of order 6, with its normal Klein four-subgroup.
    A4 { klein: Vec<usize> },
    /// Two commuting normal A4 subgroups with trivial intersection spanning the group.
    A4xA4 { left: Vec<usize>, right: Vec<usize> },
    /// Normal (Z/2)^4 with a cyclic complement of order 5.
    E16semiC5 { normal: Vec<usize>, complement: Vec<usize> },
    /// Normal (Z/2)^4 with a dihedral complement of order 10.
    E16semiD10 { normal: Vec<usize>, complement: Vec<usize> },
    /// No pattern matched; order statistics for the record.
    Untagged { order: usize, order_stats: BTreeMap<u32, usize> },
}

impl fmt::Display for IsoTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoTag::Trivial => write!(f, "trivial"),
            IsoTag::Cyclic { n, .. } => write!(f, "cyclic-{n}"),
            IsoTag::ElementaryAbelian2 { rank } => write!(f, "elementary-abelian-2^{rank}"),
            IsoTag::A4 { .. } => write!(f, "A4"),
            IsoTag::A4xA4 { .. } => write!(f, "A4xA4"),
            IsoTag::E16semiC5 { .. } => write!(f, "2^4:5"),
            IsoTag::E16semiD10 { .. } => write!(f, "2^4:D10"),
            IsoTag::Untagged { order, .. } => write!(f, "untagged(order {order})"),
        }
    }
}

impl IsoTag {
    pub fn name(&self) -> String {
        self.to_string()
    }

    /// Re-checks the witness data against the group's multiplication table.
    pub fn verify(&self, g: &MatrixGroup) -> Result<bool> {
        let cay = Cayley::build(g)?;
        let all = ElementSet::from_indices(cay.order(), 0..cay.order());
        Ok(check_tag(self, &cay, &all))
    }
}

fn set(cay: &Cayley, v: &[usize]) -> ElementSet {
    ElementSet::from_indices(cay.order(), v.iter().copied())
}

fn is_elementary_2(cay: &Cayley, s: &ElementSet) -> bool {
    s.iter().all(|x| cay.element_order(x) <= 2) && cay.is_abelian_set(s)
}

fn is_normal_in(cay: &Cayley, s: &ElementSet, ambient: &ElementSet) -> bool {
    s.iter().all(|x| ambient.iter().all(|h| s.contains(cay.conj(x, h))))
}

fn check_a4(cay: &Cayley, s: &ElementSet, klein: &ElementSet) -> bool {
    s.count() == 12
        && cay.is_subgroup(s)
        && s.iter().all(|x| cay.element_order(x) != 6)
        && klein.count() == 4
        && klein.is_subset(s)
        && cay.is_subgroup(klein)
        && is_elementary_2(cay, klein)
        && is_normal_in(cay, klein, s)
}

fn klein_of(cay: &Cayley, s: &ElementSet) -> ElementSet {
    ElementSet::from_indices(cay.order(), s.iter().filter(|&x| cay.element_order(x) <= 2))
}

fn check_tag(tag: &IsoTag, cay: &Cayley, all: &ElementSet) -> bool {
    let n = cay.order();
    match tag {
        IsoTag::Trivial => n == 1,
        IsoTag::Cyclic { n: m, generator } => *m == n && cay.element_order(*generator) as usize == n,
        IsoTag::ElementaryAbelian2 { rank } => {
            n == 1usize << rank && is_elementary_2(cay, all)
        }
        IsoTag::A4 { klein } => check_a4(cay, all, &set(cay, klein)),
        IsoTag::A4xA4 { left, right } => {
            let (l, r) = (set(cay, left), set(cay, right));
            check_a4(cay, &l, &klein_of(cay, &l))
                && check_a4(cay, &r, &klein_of(cay, &r))
                && cay.is_normal(&l)
                && cay.is_normal(&r)
                && l.intersection_count(&r) == 1
                && l.iter().all(|a| r.iter().all(|b| cay.commute(a, b)))
                && cay.product(&l, &r).count() == n
        }
        IsoTag::E16semiC5 { normal, complement } => {
            let (h, k) = (set(cay, normal), set(cay, complement));
            h.count() == 16
                && cay.is_subgroup(&h)
                && is_elementary_2(cay, &h)
                && cay.is_normal(&h)
                && k.count() == 5
                && cay.is_subgroup(&k)
                && h.intersection_count(&k) == 1
                && cay.product(&h, &k).count() == n
        }
        IsoTag::E16semiD10 { normal, complement } => {
            let (h, k) = (set(cay, normal), set(cay, complement));
            h.count() == 16
                && cay.is_subgroup(&h)
                && is_elementary_2(cay, &h)
                && cay.is_normal(&h)
                && k.count() == 10
                && cay.is_subgroup(&k)
                && !cay.is_abelian_set(&k)
                && k.iter().filter(|&x| cay.element_order(x) == 2).count() == 5
                && h.intersection_count(&k) == 1
                && cay.product(&h, &k).count() == n
        }
        IsoTag::Untagged { .. } => false,
    }
}

/// Normal (Z/2)^4 obtained as the normal closure of an involution, if any.
fn normal_e16(cay: &Cayley) -> Option<ElementSet> {
    (0..cay.order())
        .filter(|&x| cay.element_order(x) == 2)
        .map(|x| cay.normal_closure(&[x]))
        .find(|s| s.count() == 16 && is_elementary_2(cay, s))
}

fn tag_from_cayley(cay: &Cayley) -> IsoTag {
    let n = cay.order();
    let all = ElementSet::from_indices(n, 0..n);
    if n == 1 {
        return IsoTag::Trivial;
    }
    if let Some(g) = (0..n).find(|&x| cay.element_order(x) as usize == n) {
        return IsoTag::Cyclic { n, generator: g };
    }
    if n.is_power_of_two() && is_elementary_2(cay, &all) {
        return IsoTag::ElementaryAbelian2 { rank: n.trailing_zeros() };
    }
    if n == 12 {
        let tag = IsoTag::A4 { klein: klein_of(cay, &all).to_vec() };
        if check_tag(&tag, cay, &all) {
            return tag;
        }
    }
    if n == 144 {
        let mut candidates: Vec<ElementSet> = Vec::new();
        for x in (0..n).filter(|&x| cay.element_order(x) == 3) {
            let s = cay.normal_closure(&[x]);
            if s.count() == 12 && check_a4(cay, &s, &klein_of(cay, &s)) && !candidates.contains(&s) {
                candidates.push(s);
            }
        }
        for (i, l) in candidates.iter().enumerate() {
            for r in &candidates[i + 1..] {
                let tag = IsoTag::A4xA4 { left: l.to_vec(), right: r.to_vec() };
                if check_tag(&tag, cay, &all) {
                    return tag;
                }
            }
        }
    }
    if n == 80 {
        if let Some(h) = normal_e16(cay) {
            if let Some(c) = (0..n).find(|&x| cay.element_order(x) == 5) {
                let tag = IsoTag::E16semiC5 {
                    normal: h.to_vec(),
                    complement: cay.cyclic(c).to_vec(),
                };
                if check_tag(&tag, cay, &all) {
                    return tag;
                }
            }
        }
    }
    if n == 160 {
        if let Some(h) = normal_e16(cay) {
            let fives: Vec<usize> = (0..n).filter(|&x| cay.element_order(x) == 5).collect();
            let invs: Vec<usize> = (0..n)
                .filter(|&x| cay.element_order(x) == 2 && !h.contains(x))
                .collect();
            for &a in fives.iter().take(1) {
                for &b in &invs {
                    let k = cay.closure(&[a, b]);
                    if k.count() != 10 {
                        continue;
                    }
                    let tag = IsoTag::E16semiD10 {
                        normal: h.to_vec(),
                        complement: k.to_vec(),
                    };
                    if check_tag(&tag, cay, &all) {
                        return tag;
                    }
                }
            }
        }
    }
    let mut order_stats = BTreeMap::new();
    for x in 0..n {
        *order_stats.entry(cay.element_order(x)).or_insert(0) += 1;
    }
    IsoTag::Untagged { order: n, order_stats }
}

impl MatrixGroup {
    /// Recognises the group shape (order ≤ 600) and returns the tag with witnesses.
    pub fn tag_isomorphism_type(&self) -> Result<IsoTag> {
        if self.order() > 600 {
            return Err(Error::CostCap(format!(
                "isomorphism tagging limited to order 600, got {}",
                self.order()
            )));
        }
        let cay = Cayley::build(self)?;
        Ok(tag_from_cayley(&cay))
    }
}

/// Tags an index subset of a group (used for subgroup classification).
pub fn tag_subset(cay: &Cayley, members: &ElementSet) -> IsoTag {
    let n = members.count();
    if n == 1 {
        return IsoTag::Trivial;
    }
    if let Some(g) = members.iter().find(|&x| cay.element_order(x) as usize == n) {
        return IsoTag::Cyclic { n, generator: g };
    }
    if n.is_power_of_two() && is_elementary_2(cay, members) {
        return IsoTag::ElementaryAbelian2 { rank: n.trailing_zeros() };
    }
    let mut order_stats = BTreeMap::new();
    for x in members.iter() {
        *order_stats.entry(cay.element_order(x)).or_insert(0) += 1;
    }
    IsoTag::Untagged { order: n, order_stats }
}
