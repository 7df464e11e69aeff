use std::fmt;

use super::HomPoly;
use crate::cyclo::{lcm_u32, CycNum};
use crate::error::{Error, Result};

/// A binary form Σ c_k λ^{d-k} μ^k in the parameters of a line.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryForm {
    degree: u32,
    coeffs: Vec<CycNum>,
}

fn mul_forms(a: &[CycNum], b: &[CycNum]) -> Vec<CycNum> {
    let n = a[0].field_index();
    let mut out = vec![CycNum::zero(n); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    out
}

impl BinaryForm {
    pub fn new(coeffs: Vec<CycNum>) -> Result<BinaryForm> {
        if coeffs.is_empty() {
            return Err(Error::Precondition("binary form needs coefficients".into()));
        }
        let mut n = 1;
        for c in &coeffs {
            n = lcm_u32(n, c.field_index());
        }
        let coeffs = coeffs.iter().map(|c| c.embed(n)).collect::<Result<Vec<_>>>()?;
        Ok(BinaryForm {
            degree: coeffs.len() as u32 - 1,
            coeffs,
        })
    }

    /// f(λ·p + μ·q).
    pub fn restrict(f: &HomPoly, p: &[CycNum], q: &[CycNum]) -> Result<BinaryForm> {
        let mut n = f.field_index();
        for c in p.iter().chain(q) {
            n = lcm_u32(n, c.field_index());
        }
        let lin: Vec<Vec<CycNum>> = (0..4)
            .map(|k| Ok(vec![p[k].embed(n)?, q[k].embed(n)?]))
            .collect::<Result<_>>()?;
        let d = f.degree() as usize;
        let powers: Vec<Vec<Vec<CycNum>>> = lin
            .iter()
            .map(|l| {
                let mut row = vec![vec![CycNum::one(n)]];
                for k in 1..=d {
                    let next = mul_forms(&row[k - 1], l);
                    row.push(next);
                }
                row
            })
            .collect();
        let mut acc = vec![CycNum::zero(n); d + 1];
        for (e, c) in f.terms() {
            let mut t = vec![c.embed(n)?];
            for k in 0..4 {
                if e[k] > 0 {
                    t = mul_forms(&t, &powers[k][e[k] as usize]);
                }
            }
            for (a, b) in acc.iter_mut().zip(&t) {
                *a = &*a + b;
            }
        }
        BinaryForm::new(acc)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Coefficient of λ^{d-k} μ^k.
    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycNum::is_zero)
    }

    /// Scaled so the first nonzero coefficient (highest power of λ) is 1.
    pub fn normalized(&self) -> BinaryForm {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(c) => {
                let inv = c.inverse().expect("nonzero");
                BinaryForm {
                    degree: self.degree,
                    coeffs: self.coeffs.iter().map(|x| x * &inv).collect(),
                }
            }
        }
    }

    pub fn proportional_to(&self, other: &BinaryForm) -> bool {
        self.degree == other.degree && self.normalized() == other.normalized()
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree;
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = k as u32;
            let mut mono = Vec::new();
            if d - k > 0 {
                mono.push(if d - k == 1 { "l".to_string() } else { format!("l^{}", d - k) });
            }
            if k > 0 {
                mono.push(if k == 1 { "m".to_string() } else { format!("m^{k}") });
            }
            parts.push(format!("({c})*{}", mono.join("*")));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryForm({self})")
    }
}
