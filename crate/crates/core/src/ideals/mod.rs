//! Gröbner bases of homogeneous ideals in four variables, and dimension data
//! read off the leading-monomial ideal.

mod hilbert;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::cyclo::{lcm_u32, CycNum, MAX_FIELD_INDEX};
use crate::error::{Error, Result};
use crate::poly::{Exponent, HomPoly};

pub use hilbert::{
    hilbert_function, hilbert_numerator, krull_dimension, minimal_monomial_generators,
    MONOMIAL_GENERATOR_CAP,
};

/// Default number of elementary reduction steps a single Gröbner computation may take.
pub const DEFAULT_STEP_BUDGET: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Degrevlex,
    Lex,
}

impl MonomialOrder {
    /// Compares two monomials; `Greater` means `a` is the larger one.
    pub fn compare(self, a: &Exponent, b: &Exponent) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Degrevlex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                da.cmp(&db).then_with(|| {
                    for k in (0..4).rev() {
                        if a[k] != b[k] {
                            return b[k].cmp(&a[k]);
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonomialOrder::Degrevlex => "degrevlex",
            MonomialOrder::Lex => "lex",
        })
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degrevlex" | "grevlex" => Ok(MonomialOrder::Degrevlex),
            "lex" => Ok(MonomialOrder::Lex),
            _ => Err(Error::Parse(format!("unknown monomial order {s:?}"))),
        }
    }
}

fn divides(a: &Exponent, b: &Exponent) -> bool {
    (0..4).all(|k| a[k] <= b[k])
}

fn lcm_exp(a: &Exponent, b: &Exponent) -> Exponent {
    [a[0].max(b[0]), a[1].max(b[1]), a[2].max(b[2]), a[3].max(b[3])]
}

fn sub_exp(a: &Exponent, b: &Exponent) -> Exponent {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

fn add_exp(a: &Exponent, b: &Exponent) -> Exponent {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

fn coprime(a: &Exponent, b: &Exponent) -> bool {
    (0..4).all(|k| a[k] == 0 || b[k] == 0)
}

/// Terms sorted in decreasing monomial order.
type Terms = Vec<(Exponent, CycNum)>;

struct Engine {
    order: MonomialOrder,
    budget: usize,
    steps: usize,
}

impl Engine {
    fn sort(&self, t: &mut Terms) {
        t.sort_by(|a, b| self.order.compare(&b.0, &a.0));
    }

    fn monic(&self, t: Terms) -> Terms {
        let inv = t[0].1.inverse().expect("nonzero leading coefficient");
        t.into_iter().map(|(e, c)| (e, &c * &inv)).collect()
    }

    /// p − c·x^shift·g, merging two sorted term lists.
    fn sub_scaled(&self, p: &[(Exponent, CycNum)], c: &CycNum, shift: &Exponent, g: &Terms) -> Terms {
        let mut out = Vec::with_capacity(p.len() + g.len());
        let (mut i, mut j) = (0, 0);
        while i < p.len() || j < g.len() {
            let gj = g.get(j).map(|(e, _)| add_exp(e, shift));
            let ord = match (p.get(i), &gj) {
                (Some((ep, _)), Some(eg)) => self.order.compare(ep, eg),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(p[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gj.expect("term"), -(c * &g[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = &p[i].1 - &(c * &g[j].1);
                    if !v.is_zero() {
                        out.push((p[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    fn tick(&mut self, basis_len: usize) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::Timeout {
                budget: self.budget,
                steps: self.steps - 1,
                basis_len,
            });
        }
        Ok(())
    }

    /// Full normal form of `p` with respect to monic `basis`.
    fn normal_form(&mut self, mut p: Terms, basis: &[Terms]) -> Result<Terms> {
        let mut rem = Vec::new();
        let mut start = 0;
        while start < p.len() {
            let (lt, lc) = (p[start].0, p[start].1.clone());
            match basis.iter().find(|g| divides(&g[0].0, &lt)) {
                Some(g) => {
                    self.tick(basis.len())?;
                    p = self.sub_scaled(&p[start..], &lc, &sub_exp(&lt, &g[0].0), g);
                    start = 0;
                }
                None => {
                    rem.push(p[start].clone());
                    start += 1;
                }
            }
        }
        Ok(rem)
    }

    fn s_poly(&self, f: &Terms, g: &Terms) -> Terms {
        let l = lcm_exp(&f[0].0, &g[0].0);
        let one = CycNum::one(f[0].1.field_index());
        let sf: Terms = f.iter().map(|(e, c)| (add_exp(e, &sub_exp(&l, &f[0].0)), c.clone())).collect();
        self.sub_scaled(&sf, &one, &sub_exp(&l, &g[0].0), g)
    }
}

/// Generators of an ideal together with the monomial order they are read in.
#[derive(Debug, Clone)]
pub struct IdealBasis {
    generators: Vec<HomPoly>,
    order: MonomialOrder,
    groebner: bool,
    field: u32,
    steps: usize,
}

impl IdealBasis {
    pub fn new(generators: Vec<HomPoly>, order: MonomialOrder) -> Result<IdealBasis> {
        if generators.is_empty() || generators.iter().any(HomPoly::is_zero) {
            return Err(Error::Precondition("ideal generators must be nonzero".into()));
        }
        let mut field = 1;
        for g in &generators {
            field = lcm_u32(field, g.field_index());
        }
        if field > MAX_FIELD_INDEX {
            return Err(Error::Domain(format!("ideal needs field index {field}")));
        }
        let generators = generators.iter().map(|g| g.embed(field)).collect::<Result<_>>()?;
        Ok(IdealBasis {
            generators,
            order,
            groebner: false,
            field,
            steps: 0,
        })
    }

    pub fn generators(&self) -> &[HomPoly] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_groebner(&self) -> bool {
        self.groebner
    }

    /// Reduction steps spent producing this basis (0 unless it came from [`IdealBasis::groebner`]).
    pub fn steps(&self) -> usize {
        self.steps
    }

    fn terms_of(&self, f: &HomPoly) -> Result<Terms> {
        let f = f.embed(lcm_u32(self.field, f.field_index()))?;
        let mut t: Terms = f.terms().iter().map(|(e, c)| (*e, c.clone())).collect();
        t.sort_by(|a, b| self.order.compare(&b.0, &a.0));
        Ok(t)
    }

    fn basis_terms(&self) -> Result<Vec<Terms>> {
        self.generators.iter().map(|g| self.terms_of(g)).collect()
    }

    /// Leading monomials of the generators in the basis order.
    pub fn leading_monomials(&self) -> Vec<Exponent> {
        self.generators
            .iter()
            .map(|g| {
                *g.terms()
                    .keys()
                    .max_by(|a, b| self.order.compare(a, b))
                    .expect("nonzero generator")
            })
            .collect()
    }

    /// Reduced Gröbner basis by Buchberger's algorithm with the normal selection strategy.
    pub fn groebner(&self, budget: usize) -> Result<IdealBasis> {
        let mut eng = Engine {
            order: self.order,
            budget,
            steps: 0,
        };
        let mut basis: Vec<Terms> = Vec::new();
        let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
        for g in &self.generators {
            let mut t = self.terms_of(g)?;
            eng.sort(&mut t);
            let k = basis.len();
            basis.push(eng.monic(t));
            for i in 0..k {
                pending.insert((i, k));
            }
        }
        while let Some(&(i, j)) = pending.iter().min_by(|a, b| {
            let la = lcm_exp(&basis[a.0][0].0, &basis[a.1][0].0);
            let lb = lcm_exp(&basis[b.0][0].0, &basis[b.1][0].0);
            self.order.compare(&la, &lb).then(a.cmp(b))
        }) {
            pending.remove(&(i, j));
            let (li, lj) = (basis[i][0].0, basis[j][0].0);
            if coprime(&li, &lj) {
                continue;
            }
            let l = lcm_exp(&li, &lj);
            let key = |a: usize, b: usize| (a.min(b), a.max(b));
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && divides(&basis[k][0].0, &l)
                    && !pending.contains(&key(i, k))
                    && !pending.contains(&key(j, k))
            });
            if chain {
                continue;
            }
            let s = eng.s_poly(&basis[i], &basis[j]);
            let r = eng.normal_form(s, &basis)?;
            if !r.is_empty() {
                let k = basis.len();
                basis.push(eng.monic(r));
                for a in 0..k {
                    pending.insert((a, k));
                }
            }
        }
        // Keep one element per minimal leading monomial, then inter-reduce tails.
        basis.sort_by(|a, b| self.order.compare(&a[0].0, &b[0].0));
        let mut minimal: Vec<Terms> = Vec::new();
        for g in basis {
            if !minimal.iter().any(|h| divides(&h[0].0, &g[0].0)) {
                minimal.push(g);
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let others: Vec<Terms> = minimal
                .iter()
                .enumerate()
                .filter(|&(m, _)| m != k)
                .map(|(_, g)| g.clone())
                .collect();
            let head = vec![minimal[k][0].clone()];
            let tail = eng.normal_form(minimal[k][1..].to_vec(), &others)?;
            reduced.push(head.into_iter().chain(tail).collect::<Terms>());
        }
        let generators = reduced
            .into_iter()
            .map(|t| {
                let d = t[0].0.iter().sum();
                HomPoly::from_terms(d, t)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IdealBasis {
            generators,
            order: self.order,
            groebner: true,
            field: self.field,
            steps: eng.steps,
        })
    }

    fn require_groebner(&self) -> Result<()> {
        if self.groebner {
            Ok(())
        } else {
            Err(Error::Precondition("basis is not flagged as a Gröbner basis".into()))
        }
    }

    /// Normal form of `f` against the generators (meaningful for a Gröbner basis).
    pub fn reduce(&self, f: &HomPoly) -> Result<HomPoly> {
        let mut eng = Engine {
            order: self.order,
            budget: usize::MAX,
            steps: 0,
        };
        let basis: Vec<Terms> = self
            .basis_terms()?
            .into_iter()
            .map(|t| eng.monic(t))
            .collect();
        let r = eng.normal_form(self.terms_of(f)?, &basis)?;
        if r.is_empty() {
            Ok(HomPoly::zero(f.degree(), self.field))
        } else {
            HomPoly::from_terms(f.degree(), r)
        }
    }

    /// Re-checks that every S-polynomial of the basis reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> Result<bool> {
        let mut eng = Engine {
            order: self.order,
            budget: usize::MAX,
            steps: 0,
        };
        let basis: Vec<Terms> = self.basis_terms()?.into_iter().map(|t| eng.monic(t)).collect();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let s = eng.s_poly(&basis[i], &basis[j]);
                if !eng.normal_form(s, &basis)?.is_empty() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True iff every variable has a pure power among the leading monomials,
    /// i.e. the affine zero set is the origin alone.
    pub fn is_irrelevant(&self) -> Result<bool> {
        self.require_groebner()?;
        let lms = self.leading_monomials();
        Ok((0..4).all(|k| {
            lms.iter()
                .any(|e| e[k] > 0 && (0..4).all(|m| m == k || e[m] == 0))
        }))
    }

    /// Dimension of the projective zero scheme, −1 when it is empty.
    pub fn projective_dimension(&self) -> Result<i32> {
        self.require_groebner()?;
        let gens = minimal_monomial_generators(&self.leading_monomials());
        Ok(krull_dimension(&gens)? - 1)
    }

    /// Value of the Hilbert function of the quotient ring in degree `d`.
    pub fn hilbert_function(&self, d: u32) -> Result<num_bigint::BigInt> {
        self.require_groebner()?;
        let gens = minimal_monomial_generators(&self.leading_monomials());
        Ok(hilbert_function(&hilbert_numerator(&gens)?, d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> HomPoly {
        HomPoly::parse(s).unwrap()
    }

    #[test]
    fn degrevlex_breaks_ties_on_last_variable() {
        let o = MonomialOrder::Degrevlex;
        assert_eq!(o.compare(&[1, 0, 0, 1], &[0, 1, 1, 0]), Ordering::Less);
        assert_eq!(o.compare(&[0, 2, 0, 0], &[1, 0, 1, 0]), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.compare(&[1, 0, 0, 1], &[0, 2, 0, 0]), Ordering::Greater);
    }

    #[test]
    fn toy_basis_contains_pure_powers() {
        let b = IdealBasis::new(vec![p("x^2"), p("x*y + y^2")], MonomialOrder::Degrevlex).unwrap();
        let gb = b.groebner(DEFAULT_STEP_BUDGET).unwrap();
        assert!(gb.s_pairs_reduce_to_zero().unwrap());
        let lms = gb.leading_monomials();
        assert!(lms.contains(&[2, 0, 0, 0]));
        assert!(lms.iter().any(|e| e[0] == 0 && e[2] == 0 && e[3] == 0 && e[1] > 0));
        for g in b.generators() {
            assert!(gb.reduce(g).unwrap().is_zero());
        }
    }

    #[test]
    fn irrelevance_and_dimension() {
        let all = IdealBasis::new(vec![p("x"), p("y"), p("z"), p("w")], MonomialOrder::Degrevlex)
            .unwrap()
            .groebner(100)
            .unwrap();
        assert!(all.is_irrelevant().unwrap());
        assert_eq!(all.projective_dimension().unwrap(), -1);
        let three = IdealBasis::new(vec![p("x"), p("y"), p("z")], MonomialOrder::Lex)
            .unwrap()
            .groebner(100)
            .unwrap();
        assert!(!three.is_irrelevant().unwrap());
        assert_eq!(three.projective_dimension().unwrap(), 0);
        let plane = IdealBasis::new(vec![p("x")], MonomialOrder::Degrevlex).unwrap().groebner(10).unwrap();
        assert_eq!(plane.projective_dimension().unwrap(), 2);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let b = IdealBasis::new(
            vec![p("x^3 + y^3 + z^3 + w^3"), p("x*y*z + y*z*w"), p("x^2*y + z^2*w")],
            MonomialOrder::Degrevlex,
        )
        .unwrap();
        assert!(matches!(b.groebner(1), Err(Error::Timeout { budget: 1, .. })));
    }

    #[test]
    fn unflagged_basis_is_rejected() {
        let b = IdealBasis::new(vec![p("x")], MonomialOrder::Lex).unwrap();
        assert!(b.is_irrelevant().is_err());
    }
}
