//! Riemann–Hurwitz enumeration: all ways a group of order N can act on a
//! curve of genus g with cyclic point stabilizers of prescribed orders.
//!
//! 2g − 2 = N·(2ĝ − 2) + Σ_ℓ a_ℓ·(N − ℓ), where ℓ = N / s ranges over short
//! orbit lengths for admissible stabilizer orders s.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub const GENUS_LIMIT: u64 = 100;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RHProblem {
    pub group_order: u64,
    pub stabilizer_orders: Vec<u64>,
    pub genus_max: u64,
    /// Smallest genus reported; 0 lists everything.
    pub genus_min: u64,
}

impl RHProblem {
    pub fn new(group_order: u64, stabilizer_orders: &[u64], genus_max: u64) -> Result<RHProblem> {
        if group_order == 0 {
            return Err(Error::Precondition("group order must be positive".into()));
        }
        if genus_max > GENUS_LIMIT {
            return Err(Error::Precondition(format!("genus bound {genus_max} exceeds {GENUS_LIMIT}")));
        }
        let mut stabs = stabilizer_orders.to_vec();
        stabs.sort_unstable();
        stabs.dedup();
        if let Some(s) = stabs.iter().find(|&&s| s < 2 || group_order % s != 0) {
            return Err(Error::Precondition(format!(
                "stabilizer order {s} must exceed 1 and divide {group_order}"
            )));
        }
        Ok(RHProblem {
            group_order,
            stabilizer_orders: stabs,
            genus_max,
            genus_min: 0,
        })
    }

    pub fn with_genus_min(mut self, genus_min: u64) -> RHProblem {
        self.genus_min = genus_min;
        self
    }

    /// Short orbit lengths N/s, ascending.
    pub fn orbit_lengths(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.stabilizer_orders.iter().map(|s| self.group_order / s).collect();
        v.sort_unstable();
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RHSolution {
    pub genus: u64,
    pub quotient_genus: u64,
    /// Number of short orbits of each length; every admissible length is present.
    pub counts: BTreeMap<u64, u64>,
}

impl RHSolution {
    /// Re-substitutes into the Riemann–Hurwitz identity.
    pub fn satisfies(&self, group_order: u64) -> bool {
        let n = group_order as i128;
        let lhs = 2 * self.genus as i128 - 2;
        let rhs = n * (2 * self.quotient_genus as i128 - 2)
            + self
                .counts
                .iter()
                .map(|(&l, &a)| a as i128 * (n - l as i128))
                .sum::<i128>();
        lhs == rhs
    }

    /// Counts listed in ascending orbit length.
    pub fn count_vector(&self) -> Vec<u64> {
        self.counts.values().copied().collect()
    }
}

impl fmt::Display for RHSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g={} g_quot={}", self.genus, self.quotient_genus)?;
        for (l, a) in &self.counts {
            write!(f, " a{l}={a}")?;
        }
        Ok(())
    }
}

/// Nonnegative solutions of Σ a_k·w_k = target.
fn representations(target: u64, weights: &[u64], acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    match weights.split_first() {
        None => {
            if target == 0 {
                out.push(acc.clone());
            }
        }
        Some((&w, rest)) => {
            for a in 0..=target / w {
                acc.push(a);
                representations(target - a * w, rest, acc, out);
                acc.pop();
            }
        }
    }
}

/// All solutions with genus_min ≤ g ≤ genus_max, sorted by (g, ĝ, counts).
pub fn solve(problem: &RHProblem) -> Vec<RHSolution> {
    let n = problem.group_order as i64;
    let lengths = problem.orbit_lengths();
    let weights: Vec<u64> = lengths.iter().map(|&l| problem.group_order - l).collect();
    let mut out = Vec::new();
    for gq in 0.. {
        let base = n * (2 * gq as i64 - 2);
        if base > 2 * problem.genus_max as i64 - 2 {
            break;
        }
        for g in problem.genus_min..=problem.genus_max {
            let target = 2 * g as i64 - 2 - base;
            if target < 0 {
                continue;
            }
            let mut reps = Vec::new();
            representations(target as u64, &weights, &mut Vec::new(), &mut reps);
            for r in reps {
                out.push(RHSolution {
                    genus: g,
                    quotient_genus: gq,
                    counts: lengths.iter().copied().zip(r).collect(),
                });
            }
        }
    }
    out.sort_by(|a, b| {
        (a.genus, a.quotient_genus, a.count_vector()).cmp(&(b.genus, b.quotient_genus, b.count_vector()))
    });
    out
}
