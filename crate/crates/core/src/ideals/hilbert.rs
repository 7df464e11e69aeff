//! Hilbert series of monomial ideals in four variables.
//!
//! The numerator N(t) of HS(t) = N(t)/(1−t)^4 satisfies
//! N(I + ⟨m⟩) = N(I) − t^{deg m}·N(I : m), which is inclusion–exclusion over
//! the generators organised as a recursion on colon ideals.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Exponent;

/// Largest number of minimal monomial generators accepted.
pub const MONOMIAL_GENERATOR_CAP: usize = 64;

fn divides(a: &Exponent, b: &Exponent) -> bool {
    (0..4).all(|k| a[k] <= b[k])
}

fn degree(e: &Exponent) -> usize {
    e.iter().sum::<u32>() as usize
}

/// Minimal generators, sorted and deduplicated.
pub fn minimal_monomial_generators(mons: &[Exponent]) -> Vec<Exponent> {
    let mut v: Vec<Exponent> = mons.to_vec();
    v.sort_by_key(|e| (degree(e), *e));
    v.dedup();
    let mut out: Vec<Exponent> = Vec::new();
    for e in v {
        if !out.iter().any(|m| divides(m, &e)) {
            out.push(e);
        }
    }
    out.sort();
    out
}

fn sub_poly(a: &mut Vec<BigInt>, b: &[BigInt], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (k, c) in b.iter().enumerate() {
        a[k + shift] -= c;
    }
}

fn numerator_rec(gens: &[Exponent], memo: &mut HashMap<Vec<Exponent>, Vec<BigInt>>) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::from(1)];
    }
    if gens.iter().any(|e| degree(e) == 0) {
        return vec![];
    }
    if let Some(v) = memo.get(gens) {
        return v.clone();
    }
    // Pairwise coprime generators contribute a product of (1 − t^{deg}).
    let coprime = (0..gens.len()).all(|i| {
        (i + 1..gens.len()).all(|j| (0..4).all(|k| gens[i][k] == 0 || gens[j][k] == 0))
    });
    let out = if coprime {
        let mut acc = vec![BigInt::from(1)];
        for g in gens {
            let snapshot = acc.clone();
            sub_poly(&mut acc, &snapshot, degree(g));
        }
        acc
    } else {
        let (last, rest) = gens.split_last().expect("nonempty");
        let mut acc = numerator_rec(rest, memo);
        let colon: Vec<Exponent> = rest
            .iter()
            .map(|r| std::array::from_fn(|k| r[k].saturating_sub(last[k])))
            .collect();
        let colon = minimal_monomial_generators(&colon);
        let c = numerator_rec(&colon, memo);
        sub_poly(&mut acc, &c, degree(last));
        acc
    };
    let mut out = out;
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    memo.insert(gens.to_vec(), out.clone());
    out
}

/// Numerator N(t) of the Hilbert series, as coefficients of 1, t, t², …
/// The empty vector is the zero polynomial (unit ideal).
pub fn hilbert_numerator(gens: &[Exponent]) -> Result<Vec<BigInt>> {
    let gens = minimal_monomial_generators(gens);
    if gens.len() > MONOMIAL_GENERATOR_CAP {
        return Err(Error::CostCap(format!(
            "{} minimal monomial generators exceed the cap of {MONOMIAL_GENERATOR_CAP}",
            gens.len()
        )));
    }
    Ok(numerator_rec(&gens, &mut HashMap::new()))
}

fn binom3(n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    BigInt::from((n + 1) * (n + 2) * (n + 3) / 6)
}

/// Hilbert function value in degree `d` from a series numerator.
pub fn hilbert_function(numerator: &[BigInt], d: u32) -> BigInt {
    numerator
        .iter()
        .enumerate()
        .map(|(k, c)| c * binom3(d as i64 - k as i64))
        .sum()
}

/// Krull dimension of the quotient ring: 4 minus the order of vanishing of N at t = 1.
/// The unit ideal gives 0, matching an empty projective scheme.
pub fn krull_dimension(gens: &[Exponent]) -> Result<i32> {
    let mut n = hilbert_numerator(gens)?;
    if n.is_empty() {
        return Ok(0);
    }
    let mut order = 0;
    loop {
        let at_one: BigInt = n.iter().sum();
        if !at_one.is_zero() || order == 4 {
            break;
        }
        // synthetic division by (1 − t)
        let mut q = vec![BigInt::zero(); n.len() - 1];
        let mut carry = BigInt::zero();
        for k in 0..n.len() - 1 {
            carry += &n[k];
            q[k] = carry.clone();
        }
        n = q;
        order += 1;
    }
    Ok(4 - order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::monomials;

    fn brute(gens: &[Exponent], d: u32) -> BigInt {
        BigInt::from(
            monomials(d)
                .iter()
                .filter(|m| !gens.iter().any(|g| divides(g, m)))
                .count(),
        )
    }

    #[test]
    fn matches_monomial_counting() {
        let cases: Vec<Vec<Exponent>> = vec![
            vec![],
            vec![[1, 0, 0, 0]],
            vec![[2, 0, 0, 0], [1, 1, 0, 0], [0, 3, 0, 0]],
            vec![[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [1, 0, 0, 1]],
            vec![[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2], [1, 1, 1, 1]],
        ];
        for g in &cases {
            let n = hilbert_numerator(g).unwrap();
            for d in 0..=10 {
                assert_eq!(hilbert_function(&n, d), brute(g, d), "{g:?} degree {d}");
            }
        }
    }

    #[test]
    fn dimensions_of_coordinate_subspaces() {
        assert_eq!(krull_dimension(&[]).unwrap(), 4);
        assert_eq!(krull_dimension(&[[1, 0, 0, 0]]).unwrap(), 3);
        assert_eq!(krull_dimension(&[[1, 0, 0, 0], [0, 1, 0, 0]]).unwrap(), 2);
        assert_eq!(krull_dimension(&[[0, 0, 0, 0]]).unwrap(), 0);
        assert_eq!(krull_dimension(&[[1, 1, 0, 0], [0, 0, 1, 1]]).unwrap(), 2);
    }
}
