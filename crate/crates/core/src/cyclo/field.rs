use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Largest field index accepted by [`Field::get`]. Keeps the i64 power table safe.
pub const MAX_FIELD_INDEX: u32 = 2048;

/// Static data for Q(ζ_n): the cyclotomic polynomial and the reduced powers of ζ.
#[derive(Debug)]
pub struct Field {
    n: u32,
    phi: usize,
    cyclotomic: Vec<i64>,
    powers: Vec<Vec<i64>>,
}

static REGISTRY: OnceLock<Mutex<HashMap<u32, &'static Field>>> = OnceLock::new();

impl Field {
    /// Returns the (interned) field Q(ζ_n).
    ///
    /// Panics when `n == 0` or `n > MAX_FIELD_INDEX`; callers validate user input first.
    pub fn get(n: u32) -> &'static Field {
        assert!(
            (1..=MAX_FIELD_INDEX).contains(&n),
            "cyclotomic field index {n} out of range"
        );
        let registry = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
        let mut map = registry.lock().expect("field registry poisoned");
        if let Some(f) = map.get(&n) {
            return f;
        }
        let field: &'static Field = Box::leak(Box::new(Field::build(n)));
        map.insert(n, field);
        field
    }

    fn build(n: u32) -> Field {
        let cyclotomic = cyclotomic_polynomial(n);
        let phi = cyclotomic.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic cyclotomic polynomial
            let top = cur[phi - 1];
            for t in (1..phi).rev() {
                cur[t] = cur[t - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for (t, c) in cur.iter_mut().enumerate() {
                    *c = c
                        .checked_sub(top.checked_mul(cyclotomic[t]).expect("power table overflow"))
                        .expect("power table overflow");
                }
            }
        }
        debug_assert!(cur[0] == 1 && cur[1..].iter().all(|&c| c == 0));
        Field {
            n,
            phi,
            cyclotomic,
            powers,
        }
    }

    pub fn index(&self) -> u32 {
        self.n
    }

    /// φ(n), the dimension over Q.
    pub fn degree(&self) -> usize {
        self.phi
    }

    /// Coefficients of Φ_n from the constant term upwards.
    pub fn cyclotomic_poly(&self) -> &[i64] {
        &self.cyclotomic
    }

    /// ζ^k reduced to the power basis; `k` is taken modulo n.
    pub fn power(&self, k: usize) -> &[i64] {
        &self.powers[k % self.n as usize]
    }
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Φ_n by dividing x^n - 1 by Φ_d for every proper divisor d.
pub(crate) fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let mut memo: HashMap<u32, Vec<i64>> = HashMap::new();
    cyclotomic_memo(n, &mut memo)
}

fn cyclotomic_memo(n: u32, memo: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let q = cyclotomic_memo(d, memo);
        p = exact_div_monic(&p, &q);
    }
    memo.insert(n, p.clone());
    p
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (t, &d) in den.iter().enumerate() {
                rem[k + t] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "non-exact cyclotomic division");
    quot
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> usize {
    let mut result = n as usize;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p as usize;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m as usize;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn degree_is_totient() {
        for n in 1..=130 {
            assert_eq!(Field::get(n).degree(), euler_phi(n), "n = {n}");
        }
    }
}
