//! Brute-force Riemann–Hurwitz search used as an oracle for the enumerator.

use std::collections::BTreeSet;

use pgl4_core::rhenum::{solve, RHProblem};

/// (g, ĝ, counts by ascending orbit length) found by trying every bounded tuple.
pub fn brute_force(order: u64, stabs: &[u64], gmax: u64) -> BTreeSet<(u64, u64, Vec<u64>)> {
    let mut lengths: Vec<u64> = stabs.iter().map(|s| order / s).collect();
    lengths.sort_unstable();
    lengths.dedup();
    let n = order as i64;
    // Any short-orbit count above this bound already overshoots 2·gmax − 2 even with ĝ = 0.
    let bound = |l: u64| ((2 * gmax as i64 + 2 * n) / (n - l as i64)) as u64;
    let mut out = BTreeSet::new();
    let mut counts = vec![0u64; lengths.len()];
    loop {
        for gq in 0..=gmax {
            let rhs = n * (2 * gq as i64 - 2)
                + counts.iter().zip(&lengths).map(|(&a, &l)| a as i64 * (n - l as i64)).sum::<i64>();
            if rhs % 2 == 0 && rhs >= -2 && rhs <= 2 * gmax as i64 - 2 {
                out.insert(((rhs + 2) as u64 / 2, gq, counts.clone()));
            }
        }
        // odometer over the count vector
        let mut k = 0;
        loop {
            if k == counts.len() {
                return out;
            }
            if counts[k] < bound(lengths[k]) {
                counts[k] += 1;
                break;
            }
            counts[k] = 0;
            k += 1;
        }
    }
}

fn proper_divisors(n: u64) -> Vec<u64> {
    (2..=n).filter(|d| n % d == 0).collect()
}

/// Compares the enumerator with the brute force for every order ≤ `max_order`,
/// every set of at most three stabilizer orders and every genus bound ≤ `max_genus`.
/// Returns the number of problems compared.
pub fn compare_small_problems(max_order: u64, max_genus: u64) -> Result<usize, String> {
    let mut cases = 0;
    for order in 2..=max_order {
        let divs = proper_divisors(order);
        for mask in 0..1usize << divs.len() {
            let stabs: Vec<u64> = divs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &d)| d).collect();
            if stabs.len() > 3 {
                continue;
            }
            for gmax in 0..=max_genus {
                let fast: BTreeSet<_> = solve(&RHProblem::new(order, &stabs, gmax).map_err(|e| e.to_string())?)
                    .into_iter()
                    .map(|s| (s.genus, s.quotient_genus, s.count_vector()))
                    .collect();
                let slow = brute_force(order, &stabs, gmax);
                if fast != slow {
                    return Err(format!("order {order}, stabilizers {stabs:?}, g <= {gmax}: {fast:?} vs {slow:?}"));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}
