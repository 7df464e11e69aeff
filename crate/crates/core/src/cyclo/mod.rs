//! Exact arithmetic in cyclotomic fields Q(ζ_n).
//!
//! An element is a residue modulo Φ_n in the power basis 1, ζ, …, ζ^{φ(n)-1},
//! stored as integer numerators over one positive common denominator. The
//! representation is kept reduced (gcd of denominator and numerators is 1), so
//! equality inside a field is plain coefficient comparison.

mod field;
mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use field::{euler_phi, Field, MAX_FIELD_INDEX};

#[derive(Clone)]
pub struct CycNum {
    field: &'static Field,
    num: Vec<BigInt>,
    den: BigInt,
}

pub(crate) fn gcd_u32(a: u32, b: u32) -> u32 {
    a.gcd(&b)
}

pub fn lcm_u32(a: u32, b: u32) -> u32 {
    a / gcd_u32(a, b) * b
}

fn check_index(n: u32) -> Result<()> {
    if n == 0 || n > MAX_FIELD_INDEX {
        return Err(Error::Domain(format!(
            "field index {n} outside 1..={MAX_FIELD_INDEX}"
        )));
    }
    Ok(())
}

impl CycNum {
    fn from_parts(field: &'static Field, num: Vec<BigInt>, den: BigInt) -> CycNum {
        let mut c = CycNum { field, num, den };
        c.normalize();
        c
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    pub fn zero(n: u32) -> CycNum {
        let f = Field::get(n);
        CycNum {
            field: f,
            num: vec![BigInt::zero(); f.degree()],
            den: BigInt::one(),
        }
    }

    pub fn one(n: u32) -> CycNum {
        CycNum::from_int(n, 1)
    }

    pub fn from_int(n: u32, v: i64) -> CycNum {
        let mut z = CycNum::zero(n);
        z.num[0] = BigInt::from(v);
        z
    }

    pub fn from_rational(n: u32, q: &BigRational) -> CycNum {
        let mut z = CycNum::zero(n);
        z.num[0] = q.numer().clone();
        z.den = q.denom().clone();
        z.normalize();
        z
    }

    /// `p / q` in Q(ζ_n). Panics when `q == 0`.
    pub fn from_frac(n: u32, p: i64, q: i64) -> CycNum {
        assert!(q != 0, "zero denominator");
        CycNum::from_parts(Field::get(n), {
            let mut v = vec![BigInt::zero(); Field::get(n).degree()];
            v[0] = BigInt::from(p);
            v
        }, BigInt::from(q))
    }

    /// ζ_n^k, with k taken modulo n.
    pub fn root_of_unity(n: u32, k: i64) -> CycNum {
        let f = Field::get(n);
        let e = k.rem_euclid(n as i64) as usize;
        CycNum {
            field: f,
            num: f.power(e).iter().map(|&c| BigInt::from(c)).collect(),
            den: BigInt::one(),
        }
    }

    /// Builds an element from rational power-basis coefficients (length at most φ(n)).
    /// Longer inputs are reduced modulo Φ_n.
    pub fn from_coeffs(n: u32, coeffs: &[BigRational]) -> CycNum {
        let f = Field::get(n);
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let mut acc = vec![BigInt::zero(); coeffs.len().max(f.degree())];
        for (k, c) in coeffs.iter().enumerate() {
            acc[k] = c.numer() * (&den / c.denom());
        }
        CycNum::from_parts(f, reduce_wide(f, acc), den)
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    pub fn field_index(&self) -> u32 {
        self.field.index()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    /// Power-basis coefficients as reduced rationals.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        BigRational::new(self.num[k].clone(), self.den.clone())
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    /// Re-expresses the number in Q(ζ_m) via ζ_n = ζ_m^{m/n}.
    pub fn embed(&self, m: u32) -> Result<CycNum> {
        check_index(m)?;
        let n = self.field_index();
        if m % n != 0 {
            return Err(Error::Domain(format!(
                "cannot embed Q(zeta_{n}) into Q(zeta_{m}): {n} does not divide {m}"
            )));
        }
        if m == n {
            return Ok(self.clone());
        }
        let target = Field::get(m);
        let step = (m / n) as usize;
        let mut acc = vec![BigInt::zero(); target.degree()];
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, &p) in target.power(k * step).iter().enumerate() {
                if p != 0 {
                    acc[t] += c * p;
                }
            }
        }
        Ok(CycNum::from_parts(target, acc, self.den.clone()))
    }

    /// Brings two operands into a common field when one index divides the other.
    pub fn unify(a: &CycNum, b: &CycNum) -> Result<(CycNum, CycNum)> {
        let (n, m) = (a.field_index(), b.field_index());
        if n == m {
            Ok((a.clone(), b.clone()))
        } else if m % n == 0 {
            Ok((a.embed(m)?, b.clone()))
        } else if n % m == 0 {
            Ok((a.clone(), b.embed(n)?))
        } else {
            Err(Error::Domain(format!(
                "no embedding between Q(zeta_{n}) and Q(zeta_{m})"
            )))
        }
    }

    fn common_index(&self, other: &CycNum) -> Result<u32> {
        let (n, m) = (self.field_index(), other.field_index());
        if m % n == 0 {
            Ok(m)
        } else if n % m == 0 {
            Ok(n)
        } else {
            Err(Error::Domain(format!(
                "no embedding between Q(zeta_{n}) and Q(zeta_{m})"
            )))
        }
    }

    pub fn try_add(&self, other: &CycNum) -> Result<CycNum> {
        self.combine(other, false)
    }

    pub fn try_sub(&self, other: &CycNum) -> Result<CycNum> {
        self.combine(other, true)
    }

    fn combine(&self, other: &CycNum, subtract: bool) -> Result<CycNum> {
        let idx = self.common_index(other)?;
        if self.field_index() != idx || other.field_index() != idx {
            let a = self.embed(idx)?;
            let b = other.embed(idx)?;
            return a.combine(&b, subtract);
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let num: Vec<BigInt> = if self.den == other.den {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if subtract { a - b } else { a + b })
                .collect()
        } else {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let l = a * &other.den;
                    let r = b * &self.den;
                    if subtract {
                        l - r
                    } else {
                        l + r
                    }
                })
                .collect()
        };
        let den = if self.den == other.den {
            self.den.clone()
        } else {
            &self.den * &other.den
        };
        Ok(CycNum::from_parts(self.field, num, den))
    }

    pub fn try_mul(&self, other: &CycNum) -> Result<CycNum> {
        let idx = self.common_index(other)?;
        if self.field_index() != idx || other.field_index() != idx {
            let a = self.embed(idx)?;
            let b = other.embed(idx)?;
            return a.try_mul(&b);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(CycNum::zero(idx));
        }
        let f = self.field;
        let phi = f.degree();
        let mut acc = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    acc[i + j] += a * b;
                }
            }
        }
        Ok(CycNum::from_parts(
            f,
            reduce_wide(f, acc),
            &self.den * &other.den,
        ))
    }

    /// Multiplies by a small integer.
    pub fn scale_int(&self, k: i64) -> CycNum {
        let num = self.num.iter().map(|c| c * k).collect();
        CycNum::from_parts(self.field, num, self.den.clone())
    }

    pub fn scale_rational(&self, q: &BigRational) -> CycNum {
        let num = self.num.iter().map(|c| c * q.numer()).collect();
        CycNum::from_parts(self.field, num, &self.den * q.denom())
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_n.
    pub fn inverse(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.field_index();
        if self.is_rational() {
            let mut z = CycNum::zero(n);
            z.num[0] = self.den.clone();
            z.den = self.num[0].clone();
            z.normalize();
            return Ok(z);
        }
        // s(x) * a(x) + t(x) * Phi(x) = 1 over Q[x]
        let a: Vec<BigRational> = self
            .num
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let phi_poly: Vec<BigRational> = self
            .field
            .cyclotomic_poly()
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let s = poly_inverse_mod(&a, &phi_poly)
            .ok_or_else(|| Error::Internal("non-invertible cyclotomic residue".into()))?;
        // inverse of num/den is den * num^{-1}
        let mut coeffs: Vec<BigRational> = s
            .into_iter()
            .map(|c| c * BigRational::from_integer(self.den.clone()))
            .collect();
        coeffs.resize(self.field.degree(), BigRational::zero());
        Ok(CycNum::from_coeffs(n, &coeffs))
    }

    pub fn try_div(&self, other: &CycNum) -> Result<CycNum> {
        self.try_mul(&other.inverse()?)
    }

    pub fn pow(&self, e: u64) -> CycNum {
        let mut base = self.clone();
        let mut acc = CycNum::one(self.field_index());
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents invert first.
    pub fn powi(&self, e: i64) -> Result<CycNum> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inverse()?.pow(e.unsigned_abs()))
        }
    }

    /// The Galois automorphism ζ ↦ ζ^j, for j coprime to n.
    pub fn galois(&self, j: i64) -> Result<CycNum> {
        let n = self.field_index() as i64;
        let j = j.rem_euclid(n);
        if j.gcd(&n) != 1 {
            return Err(Error::Domain(format!(
                "exponent {j} is not a unit modulo {n}"
            )));
        }
        let f = self.field;
        let mut acc = vec![BigInt::zero(); f.degree()];
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (k as i64 * j).rem_euclid(n) as usize;
            for (t, &p) in f.power(e).iter().enumerate() {
                if p != 0 {
                    acc[t] += c * p;
                }
            }
        }
        Ok(CycNum::from_parts(f, acc, self.den.clone()))
    }

    /// Complex conjugation, ζ ↦ ζ^{-1}.
    pub fn conjugate(&self) -> CycNum {
        self.galois(-1).expect("-1 is always a unit")
    }

    /// Order of the element as a root of unity, if it is one.
    pub fn root_order(&self) -> Option<u32> {
        if self.is_zero() || !self.den.is_one() {
            return None;
        }
        let n = self.field_index();
        let bound = lcm_u32(2, n);
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_one() {
                return Some(k);
            }
            acc = &acc * self;
        }
        None
    }

    /// Injective byte encoding of the reduced representation, including the field index.
    pub fn encode_into(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.field_index().to_le_bytes());
        push_bigint(out, &self.den);
        for c in &self.num {
            push_bigint(out, c);
        }
    }

    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut v = Vec::new();
        self.encode_into(&mut v);
        v
    }

    /// A deterministic total order (by field index, then coefficients as rationals).
    pub fn canonical_cmp(&self, other: &CycNum) -> Ordering {
        self.field_index()
            .cmp(&other.field_index())
            .then_with(|| self.coeffs().cmp(&other.coeffs()))
    }

    /// Rough size measure: total bit length of numerators and denominator.
    pub fn height_bits(&self) -> u64 {
        self.num.iter().map(|c| c.bits()).sum::<u64>() + self.den.bits()
    }

    /// Numeric value as a complex pair (for display and diagnostics only).
    pub fn approx(&self) -> (f64, f64) {
        let n = self.field_index() as f64;
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        let (mut re, mut im) = (0.0, 0.0);
        for (k, c) in self.num.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN) / den;
            let ang = 2.0 * std::f64::consts::PI * k as f64 / n;
            re += c * ang.cos();
            im += c * ang.sin();
        }
        (re, im)
    }
}

fn push_bigint(out: &mut Vec<u8>, v: &BigInt) {
    let bytes = v.to_signed_bytes_le();
    out.extend_from_slice(&(bytes.len() as u32).to_le_bytes());
    out.extend_from_slice(&bytes);
}

/// Folds coefficients of degree ≥ φ(n) back via the power table.
fn reduce_wide(f: &Field, mut acc: Vec<BigInt>) -> Vec<BigInt> {
    let phi = f.degree();
    if acc.len() <= phi {
        acc.resize(phi, BigInt::zero());
        return acc;
    }
    let high = acc.split_off(phi);
    for (off, c) in high.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (t, &p) in f.power(phi + off).iter().enumerate() {
            if p != 0 {
                acc[t] += &c * p;
            }
        }
    }
    acc
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let c = r.last().unwrap().clone() / &lead;
        for (t, bc) in b.iter().enumerate() {
            let v = &c * bc;
            r[k + t] -= v;
        }
        q[k] = c;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Returns s with s*a ≡ 1 (mod m), or None when gcd(a, m) is not constant.
fn poly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Vec<BigRational> = vec![];
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let s: Vec<BigRational> = s0.into_iter().map(|x| x / &c).collect();
    let (_, s) = poly_divrem(&s, m);
    Some(s)
}

impl PartialEq for CycNum {
    /// Mathematical equality; operands in different fields are compared in a common field.
    fn eq(&self, other: &CycNum) -> bool {
        if self.field_index() == other.field_index() {
            return self.den == other.den && self.num == other.num;
        }
        let l = lcm_u32(self.field_index(), other.field_index());
        match (self.embed(l), other.embed(l)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for CycNum {}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum[{}]({})", self.field_index(), self)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&CycNum> for &CycNum {
            type Output = CycNum;
            /// Panics when the operands share no field; use the `try_` form to handle that case.
            fn $method(self, rhs: &CycNum) -> CycNum {
                self.$inner(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                (&self).$method(rhs)
            }
        }
        impl $tr<CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            field: self.field,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i() -> CycNum {
        CycNum::root_of_unity(4, 1)
    }

    #[test]
    fn zeta_n_to_the_n_is_one() {
        for n in [1, 2, 3, 4, 5, 8, 12, 20, 40, 120] {
            let z = CycNum::root_of_unity(n, 1);
            assert!(z.pow(n as u64).is_one(), "n = {n}");
            assert_eq!(z.root_order(), Some(if n == 1 { 1 } else { n }));
        }
    }

    #[test]
    fn sqrt2_from_eighth_roots() {
        let s = CycNum::root_of_unity(8, 1) + CycNum::root_of_unity(8, 7);
        assert_eq!(&s * &s, CycNum::from_int(8, 2));
    }

    #[test]
    fn inverse_examples() {
        let one_plus_i = CycNum::one(4) + i();
        let expected = (CycNum::one(4) - i()).scale_rational(&BigRational::new(1.into(), 2.into()));
        assert_eq!(one_plus_i.inverse().unwrap(), expected);
        let z5 = CycNum::root_of_unity(5, 1);
        assert_eq!(z5.inverse().unwrap(), CycNum::root_of_unity(5, 4));
        assert_eq!(CycNum::zero(5).inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn embedding_of_i() {
        let e = i().embed(40).unwrap();
        assert_eq!(e, CycNum::root_of_unity(40, 10));
        assert!((&e * &e + CycNum::one(40)).is_zero());
        assert!(matches!(i().embed(10), Err(Error::Domain(_))));
    }

    #[test]
    fn conjugation() {
        assert_eq!(i().conjugate(), -i());
        let r = CycNum::root_of_unity(5, 1) + CycNum::root_of_unity(5, 4);
        assert_eq!(r.conjugate(), r);
    }

    #[test]
    fn mixed_fields() {
        let a = CycNum::root_of_unity(4, 1);
        let b = CycNum::root_of_unity(5, 1);
        assert!(matches!(a.try_add(&b), Err(Error::Domain(_))));
        let c = CycNum::root_of_unity(20, 5);
        assert_eq!(&a * &c, CycNum::from_int(20, -1));
        assert_eq!(a, c);
    }
}
