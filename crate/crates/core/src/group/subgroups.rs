//! Index-based machinery for small groups: multiplication tables, element
//! subsets, and enumeration of subgroups generated by few elements.

use std::collections::{BTreeSet, HashSet, VecDeque};

use super::MatrixGroup;
use crate::error::{Error, Result};

/// Largest group for which a full multiplication table is built.
pub const CAYLEY_LIMIT: usize = 1500;

/// Fixed-size bit set over element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    len: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(len: usize) -> ElementSet {
        ElementSet {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> ElementSet {
        let mut s = ElementSet::empty(len);
        for k in idx {
            s.insert(k);
        }
        s
    }

    pub fn insert(&mut self, k: usize) -> bool {
        let (w, b) = (k / 64, k % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn contains(&self, k: usize) -> bool {
        self.words[k / 64] & (1 << (k % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&k| self.contains(k))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection_count(&self, other: &ElementSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }
}

/// Multiplication table with inverses and element orders.
#[derive(Debug, Clone)]
pub struct Cayley {
    n: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    identity: usize,
}

impl Cayley {
    pub fn build(g: &MatrixGroup) -> Result<Cayley> {
        let n = g.order();
        if n > CAYLEY_LIMIT {
            return Err(Error::CostCap(format!(
                "multiplication table for a group of order {n} (limit {CAYLEY_LIMIT})"
            )));
        }
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = g.mul_index(a, b) as u32;
            }
        }
        let identity = (0..n)
            .find(|&k| g.element(k).is_identity())
            .ok_or_else(|| Error::Internal("group without identity".into()))?;
        let mut inverse = vec![0u32; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| table[a * n + b] as usize == identity)
                .ok_or_else(|| Error::Internal("element without inverse".into()))?;
            inverse[a] = b as u32;
        }
        let mut orders = vec![0u32; n];
        for a in 0..n {
            let mut x = a;
            let mut k = 1;
            while x != identity {
                x = table[x * n + a] as usize;
                k += 1;
            }
            orders[a] = k;
        }
        Ok(Cayley {
            n,
            table,
            inverse,
            orders,
            identity,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn element_order(&self, a: usize) -> u32 {
        self.orders[a]
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// h⁻¹·x·h.
    pub fn conj(&self, x: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(h), x), h)
    }

    pub fn power(&self, a: usize, e: u32) -> usize {
        let mut x = self.identity;
        for _ in 0..e {
            x = self.mul(x, a);
        }
        x
    }

    /// Subgroup generated by the given elements.
    pub fn closure(&self, gens: &[usize]) -> ElementSet {
        let mut set = ElementSet::empty(self.n);
        set.insert(self.identity);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set
    }

    /// Cyclic subgroup ⟨a⟩.
    pub fn cyclic(&self, a: usize) -> ElementSet {
        self.closure(&[a])
    }

    pub fn is_subgroup(&self, s: &ElementSet) -> bool {
        s.contains(self.identity)
            && s.iter().all(|a| s.iter().all(|b| s.contains(self.mul(a, b))))
    }

    pub fn is_normal(&self, s: &ElementSet) -> bool {
        s.iter()
            .all(|x| (0..self.n).all(|h| s.contains(self.conj(x, h))))
    }

    pub fn is_abelian_set(&self, s: &ElementSet) -> bool {
        let v = s.to_vec();
        v.iter().all(|&a| v.iter().all(|&b| self.commute(a, b)))
    }

    /// Smallest normal subgroup containing the seeds.
    pub fn normal_closure(&self, seeds: &[usize]) -> ElementSet {
        let mut gens: BTreeSet<usize> = BTreeSet::new();
        for &s in seeds {
            for h in 0..self.n {
                gens.insert(self.conj(s, h));
            }
        }
        let gens: Vec<usize> = gens.into_iter().collect();
        self.closure(&gens)
    }

    /// Product set AB (a subgroup when one factor normalises the other).
    pub fn product(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.n);
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.mul(x, y));
            }
        }
        out
    }
}

/// A subgroup found by enumeration, with a generating set of minimal size found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedSubgroup {
    pub members: ElementSet,
    pub generators: Vec<usize>,
}

impl MatrixGroup {
    /// All distinct subgroups generated by at most `max_generators` elements.
    ///
    /// Allowed for |G| ≤ 600 with up to 3 generators, and |G| ≤ 160 with 4.
    pub fn generated_subgroups(&self, max_generators: usize) -> Result<Vec<GeneratedSubgroup>> {
        let n = self.order();
        if !(1..=4).contains(&max_generators) {
            return Err(Error::Precondition(
                "max_generators must be between 1 and 4".into(),
            ));
        }
        if n > 600 || (max_generators == 4 && n > 160) {
            return Err(Error::CostCap(format!(
                "subgroup enumeration with {max_generators} generators on a group of order {n}"
            )));
        }
        let cay = Cayley::build(self)?;
        subgroups_with(&cay, max_generators)
    }
}

pub(crate) fn subgroups_with(cay: &Cayley, max_generators: usize) -> Result<Vec<GeneratedSubgroup>> {
    let n = cay.order();
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let trivial = GeneratedSubgroup {
        members: cay.closure(&[]),
        generators: vec![],
    };
    seen.insert(trivial.members.clone());
    let mut all = vec![trivial.clone()];
    let mut level = vec![trivial];
    for _ in 0..max_generators {
        let mut next = Vec::new();
        for sub in &level {
            for x in 0..n {
                if sub.members.contains(x) {
                    continue;
                }
                let mut gens = sub.generators.clone();
                gens.push(x);
                let members = cay.closure(&gens);
                if seen.insert(members.clone()) {
                    let s = GeneratedSubgroup { members, generators: gens };
                    next.push(s.clone());
                    all.push(s);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    all.sort_by(|a, b| {
        a.members
            .count()
            .cmp(&b.members.count())
            .then_with(|| a.members.to_vec().cmp(&b.members.to_vec()))
    });
    Ok(all)
}
