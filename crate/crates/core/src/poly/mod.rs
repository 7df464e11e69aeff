//! Homogeneous polynomials in x, y, z, w over a cyclotomic field, and the
//! group action (g·f)(v) = f(M·v).

mod binary;
mod invariants;
mod parse;

use std::collections::BTreeMap;
use std::fmt;

use crate::cyclo::{lcm_u32, CycNum, MAX_FIELD_INDEX};
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::linalg::Mat;
use crate::projgeom::{ProjLine, ProjPoint};

pub use binary::BinaryForm;
pub use invariants::{
    invariant_basis, one_dim_multiplicities, semi_invariant_basis, semi_invariant_eigenbasis,
    sym_power_trace,
    CharacterMultiplicity, SemiInvariant,
};

pub type Exponent = [u32; 4];

pub const VARIABLES: [&str; 4] = ["x", "y", "z", "w"];

/// All exponent vectors of total degree `d`, in descending lexicographic order.
pub fn monomials(d: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            for c in (0..=d - a - b).rev() {
                out.push([a, b, c, d - a - b - c]);
            }
        }
    }
    out
}

/// Number of monomials of degree `d` in four variables.
pub fn monomial_count(d: u32) -> usize {
    let d = d as usize;
    (d + 1) * (d + 2) * (d + 3) / 6
}

fn check_field(n: u32) -> Result<u32> {
    if n > MAX_FIELD_INDEX {
        Err(Error::Domain(format!("polynomial needs field index {n}")))
    } else {
        Ok(n)
    }
}

#[derive(Clone)]
pub struct HomPoly {
    degree: u32,
    field: u32,
    terms: BTreeMap<Exponent, CycNum>,
}

impl HomPoly {
    pub fn zero(degree: u32, field: u32) -> HomPoly {
        HomPoly {
            degree,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: CycNum) -> HomPoly {
        let mut p = HomPoly::zero(0, c.field_index());
        p.add_term([0; 4], c);
        p
    }

    pub fn monomial(e: Exponent, c: CycNum) -> HomPoly {
        let mut p = HomPoly::zero(e.iter().sum(), c.field_index());
        p.add_term(e, c);
        p
    }

    /// The variable with index `k` (0 = x, …, 3 = w).
    pub fn variable(k: usize, field: u32) -> HomPoly {
        let mut e = [0; 4];
        e[k] = 1;
        HomPoly::monomial(e, CycNum::one(field))
    }

    /// Builds a polynomial from terms; all exponent vectors must have the same degree.
    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = (Exponent, CycNum)>) -> Result<HomPoly> {
        let terms: Vec<(Exponent, CycNum)> = terms.into_iter().collect();
        let mut field = 1;
        for (e, c) in &terms {
            if e.iter().sum::<u32>() != degree {
                return Err(Error::Precondition(format!(
                    "monomial {e:?} is not of degree {degree}"
                )));
            }
            field = check_field(lcm_u32(field, c.field_index()))?;
        }
        let mut p = HomPoly::zero(degree, field);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponent, c: CycNum) {
        if c.is_zero() {
            return;
        }
        let n = lcm_u32(self.field, c.field_index());
        if n != self.field {
            *self = self.embed(n).expect("lcm field");
        }
        let c = c.embed(n).expect("lcm field");
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn field_index(&self) -> u32 {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, CycNum> {
        &self.terms
    }

    pub fn coeff(&self, e: &Exponent) -> CycNum {
        self.terms
            .get(e)
            .cloned()
            .unwrap_or_else(|| CycNum::zero(self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn embed(&self, n: u32) -> Result<HomPoly> {
        if n == self.field {
            return Ok(self.clone());
        }
        Ok(HomPoly {
            degree: self.degree,
            field: n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| Ok((*e, c.embed(n)?)))
                .collect::<Result<_>>()?,
        })
    }

    fn unified(&self, other: &HomPoly) -> Result<(HomPoly, HomPoly)> {
        let n = check_field(lcm_u32(self.field, other.field))?;
        Ok((self.embed(n)?, other.embed(n)?))
    }

    pub fn try_add(&self, other: &HomPoly) -> Result<HomPoly> {
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::Precondition(format!(
                "adding polynomials of degrees {} and {}",
                self.degree, other.degree
            )));
        }
        let (mut a, b) = self.unified(other)?;
        if a.is_zero() {
            a.degree = b.degree;
        }
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        Ok(a)
    }

    pub fn try_sub(&self, other: &HomPoly) -> Result<HomPoly> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> HomPoly {
        HomPoly {
            degree: self.degree,
            field: self.field,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &CycNum) -> HomPoly {
        if c.is_zero() {
            return HomPoly::zero(self.degree, self.field);
        }
        let n = lcm_u32(self.field, c.field_index());
        let c = c.embed(n).expect("lcm field");
        HomPoly {
            degree: self.degree,
            field: n,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, &v.embed(n).expect("lcm field") * &c))
                .collect(),
        }
    }

    pub fn try_mul(&self, other: &HomPoly) -> Result<HomPoly> {
        let (a, b) = self.unified(other)?;
        let mut out = HomPoly::zero(a.degree + b.degree, a.field);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> HomPoly {
        let mut acc = HomPoly::constant(CycNum::one(self.field));
        for _ in 0..k {
            acc = acc.try_mul(self).expect("same field");
        }
        acc
    }

    /// Linear combination Σ cᵢ·fᵢ.
    pub fn linear_combination(items: &[(CycNum, &HomPoly)]) -> Result<HomPoly> {
        let mut acc: Option<HomPoly> = None;
        for (c, f) in items {
            let t = f.scale(c);
            acc = Some(match acc {
                None => t,
                Some(a) => a.try_add(&t)?,
            });
        }
        acc.ok_or_else(|| Error::Precondition("empty linear combination".into()))
    }

    pub fn eval(&self, v: &[CycNum]) -> Result<CycNum> {
        let mut n = self.field;
        for c in v {
            n = check_field(lcm_u32(n, c.field_index()))?;
        }
        let v: Vec<CycNum> = v.iter().map(|c| c.embed(n)).collect::<Result<_>>()?;
        let mut acc = CycNum::zero(n);
        for (e, c) in &self.terms {
            let mut t = c.embed(n)?;
            for k in 0..4 {
                if e[k] > 0 {
                    t = &t * &v[k].pow(e[k] as u64);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    pub fn eval_point(&self, p: &ProjPoint) -> Result<CycNum> {
        self.eval(p.coords())
    }

    /// Substitution action (g·f)(v) = f(M·v).
    pub fn act_matrix(&self, m: &Mat) -> Result<HomPoly> {
        let sub = Substitution::new(m, self.degree)?;
        sub.apply(self)
    }

    pub fn act(&self, g: &GroupElement) -> Result<HomPoly> {
        self.act_matrix(g.matrix())
    }

    /// Formal partial derivative with respect to variable k.
    pub fn derivative(&self, k: usize) -> HomPoly {
        let mut out = HomPoly::zero(self.degree.saturating_sub(1), self.field);
        for (e, c) in &self.terms {
            if e[k] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[k] -= 1;
            out.add_term(e2, c.scale_int(e[k] as i64));
        }
        out
    }

    pub fn jacobian(&self) -> [HomPoly; 4] {
        [
            self.derivative(0),
            self.derivative(1),
            self.derivative(2),
            self.derivative(3),
        ]
    }

    /// True iff all partials vanish at p; p must lie on the surface.
    pub fn is_singular_at(&self, p: &ProjPoint) -> Result<bool> {
        if !self.eval_point(p)?.is_zero() {
            return Err(Error::Precondition(format!("point {p} is not on the surface")));
        }
        for d in self.jacobian() {
            if !d.eval_point(p)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// f(λ·p + μ·q) for two points spanning the line.
    pub fn restrict_to_line(&self, l: &ProjLine, basis: (&ProjPoint, &ProjPoint)) -> Result<BinaryForm> {
        let (p, q) = basis;
        if !l.contains(p) || !l.contains(q) {
            return Err(Error::Precondition("basis point is not on the line".into()));
        }
        if p == q {
            return Err(Error::Precondition("basis points coincide".into()));
        }
        BinaryForm::restrict(self, p.coords(), q.coords())
    }

    /// True iff the line lies on the surface f = 0.
    pub fn contains_line(&self, l: &ProjLine) -> Result<bool> {
        let (p, q) = l.basis_points();
        Ok(self.restrict_to_line(l, (&p, &q))?.is_zero())
    }

    /// Lexicographically greatest monomial (x > y > z > w) with a nonzero coefficient.
    pub fn leading_lex(&self) -> Option<(&Exponent, &CycNum)> {
        self.terms.iter().next_back()
    }

    /// Rescaled so the lexicographically greatest monomial has coefficient 1.
    pub fn normalized(&self) -> HomPoly {
        match self.leading_lex() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inverse().expect("nonzero")),
        }
    }

    /// Equality up to a nonzero scalar.
    pub fn proportional_to(&self, other: &HomPoly) -> bool {
        self.degree == other.degree && self.normalized() == other.normalized()
    }

    /// Coefficient vector in the basis [`monomials`]`(degree)`.
    pub fn coefficient_vector(&self) -> Vec<CycNum> {
        monomials(self.degree).iter().map(|e| self.coeff(e)).collect()
    }

    pub fn from_coefficient_vector(degree: u32, v: &[CycNum]) -> Result<HomPoly> {
        HomPoly::from_terms(degree, monomials(degree).into_iter().zip(v.iter().cloned()))
    }
}

impl PartialEq for HomPoly {
    fn eq(&self, other: &HomPoly) -> bool {
        if self.is_zero() && other.is_zero() {
            return true;
        }
        self.degree == other.degree
            && self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .all(|(e, c)| other.terms.get(e).is_some_and(|d| d == c))
    }
}

impl Eq for HomPoly {}

impl fmt::Display for HomPoly {
    /// Terms in descending lex order, e.g. `1/2*x^4 + 3*x^2*y^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = (0..4)
                .filter(|&k| e[k] > 0)
                .map(|k| {
                    if e[k] == 1 {
                        VARIABLES[k].to_string()
                    } else {
                        format!("{}^{}", VARIABLES[k], e[k])
                    }
                })
                .collect();
            let coeff = c.to_string();
            let needs_parens = coeff.contains(" + ");
            let coeff = if needs_parens { format!("({coeff})") } else { coeff };
            if mono.is_empty() {
                write!(f, "{coeff}")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{coeff}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomPoly[{}]({})", self.degree, self)
    }
}

/// Precomputed powers of the substituted linear forms (M·v)ᵢ.
pub struct Substitution {
    powers: Vec<Vec<HomPoly>>,
    field: u32,
}

impl Substitution {
    pub fn new(m: &Mat, max_degree: u32) -> Result<Substitution> {
        if m.rows() != 4 || m.cols() != 4 {
            return Err(Error::Precondition("substitution needs a 4x4 matrix".into()));
        }
        let field = m.field_index();
        let mut powers = Vec::with_capacity(4);
        for r in 0..4 {
            let lin = HomPoly::from_terms(
                1,
                (0..4).map(|c| {
                    let mut e = [0; 4];
                    e[c] = 1;
                    (e, m.get(r, c).clone())
                }),
            )?;
            let mut row = vec![HomPoly::constant(CycNum::one(field))];
            for k in 1..=max_degree as usize {
                let next = row[k - 1].try_mul(&lin)?;
                row.push(next);
            }
            powers.push(row);
        }
        Ok(Substitution { powers, field })
    }

    pub fn apply(&self, f: &HomPoly) -> Result<HomPoly> {
        let n = check_field(lcm_u32(self.field, f.field))?;
        let mut out = HomPoly::zero(f.degree, n);
        for (e, c) in &f.terms {
            out = out.try_add(&self.apply_monomial(e)?.scale(c))?;
        }
        Ok(out)
    }

    pub fn apply_monomial(&self, e: &Exponent) -> Result<HomPoly> {
        let mut acc: Option<HomPoly> = None;
        for k in 0..4 {
            if e[k] == 0 {
                continue;
            }
            let p = &self.powers[k][e[k] as usize];
            acc = Some(match acc {
                None => p.clone(),
                Some(a) => a.try_mul(p)?,
            });
        }
        Ok(acc.unwrap_or_else(|| HomPoly::constant(CycNum::one(self.field))))
    }
}
