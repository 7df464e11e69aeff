//! Abelianisation and degree-one characters.

use num_integer::Integer;

use super::MatrixGroup;
use crate::cyclo::CycNum;
use crate::error::{Error, Result};

/// The quotient G/[G,G] as a product of cyclic groups of prime-power order.
#[derive(Debug, Clone)]
pub struct AbelianQuotient {
    /// Cyclic factor orders (elementary divisors), ascending.
    pub factors: Vec<u32>,
    /// Element index → coset number.
    pub coset_of: Vec<usize>,
    /// Coset number → coordinates with respect to `basis`.
    pub coordinates: Vec<Vec<u32>>,
    /// Element indices whose cosets generate the cyclic factors.
    pub basis: Vec<usize>,
}

impl AbelianQuotient {
    pub fn order(&self) -> usize {
        self.coordinates.len()
    }

    /// Coordinates of a group element (by index).
    pub fn project(&self, element: usize) -> &[u32] {
        &self.coordinates[self.coset_of[element]]
    }
}

/// A homomorphism G → C*, stored as χ(g_k) = ζ_m^{exponents[k]}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub modulus: u32,
    pub exponents: Vec<u32>,
}

impl Character {
    pub fn value(&self, element: usize) -> CycNum {
        CycNum::root_of_unity(self.modulus, self.exponents[element] as i64)
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Pointwise product of two characters of the same group.
    pub fn product(&self, other: &Character) -> Character {
        let m = self.modulus.lcm(&other.modulus);
        let (a, b) = (m / self.modulus, m / other.modulus);
        Character {
            modulus: m,
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(x, y)| (x * a + y * b) % m)
                .collect(),
        }
    }
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Small abelian group given by its multiplication table on 0..q (0 = identity).
struct Quotient {
    q: usize,
    table: Vec<usize>,
}

impl Quotient {
    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.q + b]
    }

    fn pow(&self, a: usize, e: u32) -> usize {
        (0..e).fold(0, |x, _| self.mul(x, a))
    }

    fn order(&self, a: usize) -> u32 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    fn span(&self, gens: &[usize]) -> Vec<bool> {
        let mut inside = vec![false; self.q];
        inside[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    stack.push(y);
                }
            }
        }
        inside
    }
}

/// Picks elements of the requested orders that generate a subgroup of the product size.
fn find_basis(qt: &Quotient, candidates: &[usize], orders: &[u32], chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == orders.len() {
        return true;
    }
    let want = orders[chosen.len()];
    let target: usize = orders[..=chosen.len()].iter().map(|&o| o as usize).product();
    for &c in candidates {
        if qt.order(c) != want {
            continue;
        }
        chosen.push(c);
        let size = qt.span(chosen).iter().filter(|&&b| b).count();
        if size == target && find_basis(qt, candidates, orders, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

impl MatrixGroup {
    pub fn abelian_quotient(&self) -> Result<AbelianQuotient> {
        let n = self.order();
        let derived = self.commutator_subgroup()?;
        let d_idx: Vec<usize> = derived
            .elements()
            .iter()
            .map(|e| {
                self.index_of(e)
                    .ok_or_else(|| Error::Internal("commutator outside group".into()))
            })
            .collect::<Result<_>>()?;
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        // identity's coset first
        let id = (0..n).find(|&k| self.element(k).is_identity()).unwrap_or(0);
        for x in std::iter::once(id).chain(0..n) {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for &d in &d_idx {
                coset_of[self.mul_index(x, d)] = c;
            }
        }
        let q = reps.len();
        let mut table = vec![0usize; q * q];
        for a in 0..q {
            for b in 0..q {
                table[a * q + b] = coset_of[self.mul_index(reps[a], reps[b])];
            }
        }
        let qt = Quotient { q, table };

        let mut factors = Vec::new();
        let mut basis_cosets = Vec::new();
        for p in prime_factors(q as u32) {
            let part: Vec<usize> = (0..q)
                .filter(|&a| {
                    let mut o = qt.order(a);
                    while o % p == 0 {
                        o /= p;
                    }
                    o == 1
                })
                .collect();
            // counts[k] = log_p #{x : x^{p^k} = 1}
            let mut counts = vec![0u32];
            let mut k = 1;
            loop {
                let e = p.pow(k);
                let c = part.iter().filter(|&&a| qt.pow(a, e) == 0).count();
                let mut lg = 0;
                let mut v = c;
                while v > 1 {
                    v /= p as usize;
                    lg += 1;
                }
                counts.push(lg);
                if c == part.len() {
                    break;
                }
                k += 1;
            }
            // number of cyclic factors of order ≥ p^k is counts[k] - counts[k-1]
            let mut exps = Vec::new();
            for k in 1..counts.len() {
                let at_least = counts[k] - counts[k - 1];
                let at_least_next = if k + 1 < counts.len() {
                    counts[k + 1] - counts[k]
                } else {
                    0
                };
                for _ in 0..(at_least - at_least_next) {
                    exps.push(k as u32);
                }
            }
            exps.sort_unstable_by(|a, b| b.cmp(a));
            let orders: Vec<u32> = exps.iter().map(|&e| p.pow(e)).collect();
            let mut chosen = Vec::new();
            if !find_basis(&qt, &part, &orders, &mut chosen) {
                return Err(Error::Internal("no basis for abelian quotient".into()));
            }
            factors.extend(orders);
            basis_cosets.extend(chosen);
        }
        // coordinates by enumerating all exponent tuples
        let mut coordinates = vec![Vec::new(); q];
        let mut tuple = vec![0u32; factors.len()];
        let mut filled = 0;
        loop {
            let mut x = 0;
            for (b, &e) in basis_cosets.iter().zip(&tuple) {
                x = qt.mul(x, qt.pow(*b, e));
            }
            if coordinates[x].is_empty() || factors.is_empty() {
                coordinates[x] = tuple.clone();
                filled += 1;
            }
            let mut i = 0;
            while i < tuple.len() {
                tuple[i] += 1;
                if tuple[i] < factors[i] {
                    break;
                }
                tuple[i] = 0;
                i += 1;
            }
            if i == tuple.len() {
                break;
            }
        }
        if filled != q {
            return Err(Error::Internal("abelian quotient coordinates are not bijective".into()));
        }
        let mut order: Vec<usize> = (0..factors.len()).collect();
        order.sort_by_key(|&i| factors[i]);
        let factors_sorted = order.iter().map(|&i| factors[i]).collect();
        let coordinates = coordinates
            .into_iter()
            .map(|c| order.iter().map(|&i| c[i]).collect())
            .collect();
        let basis = order.iter().map(|&i| reps[basis_cosets[i]]).collect();
        Ok(AbelianQuotient {
            factors: factors_sorted,
            coset_of,
            coordinates,
            basis,
        })
    }

    /// All degree-one characters, trivial character first. Each is checked
    /// to be multiplicative on every pair of generators.
    pub fn one_dim_characters(&self) -> Result<Vec<Character>> {
        let aq = self.abelian_quotient()?;
        let m = aq.factors.iter().fold(1u32, |acc, &f| acc.lcm(&f));
        let mut out = Vec::new();
        let mut e = vec![0u32; aq.factors.len()];
        loop {
            let exponents = (0..self.order())
                .map(|k| {
                    let c = aq.project(k);
                    let mut s = 0u32;
                    for ((ei, ci), fi) in e.iter().zip(c).zip(&aq.factors) {
                        s = (s + ei * ci * (m / fi)) % m;
                    }
                    s
                })
                .collect();
            out.push(Character { modulus: m, exponents });
            let mut i = 0;
            while i < e.len() {
                e[i] += 1;
                if e[i] < aq.factors[i] {
                    break;
                }
                e[i] = 0;
                i += 1;
            }
            if i == e.len() {
                break;
            }
        }
        for chi in &out {
            for a in self.generators() {
                for b in self.generators() {
                    let (ia, ib) = (self.index_of(a), self.index_of(b));
                    let (Some(ia), Some(ib)) = (ia, ib) else {
                        return Err(Error::Internal("generator outside group".into()));
                    };
                    let iab = self.mul_index(ia, ib);
                    if (chi.exponents[ia] + chi.exponents[ib]) % m != chi.exponents[iab] {
                        return Err(Error::Internal("character is not multiplicative".into()));
                    }
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Mode;
    use crate::linalg::Mat;

    fn diag(v: [i64; 4]) -> Mat {
        let mut m = Mat::zeros(4, 4, 1);
        for (k, x) in v.into_iter().enumerate() {
            m.set(k, k, CycNum::from_int(1, x)).unwrap();
        }
        m
    }

    #[test]
    fn klein_four_quotient() {
        let g = MatrixGroup::close(&[diag([1, 1, -1, -1]), diag([1, -1, 1, -1])], Mode::Linear)
            .unwrap();
        let aq = g.abelian_quotient().unwrap();
        assert_eq!(aq.factors, vec![2, 2]);
        assert_eq!(g.one_dim_characters().unwrap().len(), 4);
    }

    #[test]
    fn cyclic_five() {
        let z = CycNum::root_of_unity(5, 1);
        let one = CycNum::one(5);
        let m = Mat::from_rows(vec![
            vec![z.clone(), CycNum::zero(5), CycNum::zero(5), CycNum::zero(5)],
            vec![CycNum::zero(5), one.clone(), CycNum::zero(5), CycNum::zero(5)],
            vec![CycNum::zero(5), CycNum::zero(5), one.clone(), CycNum::zero(5)],
            vec![CycNum::zero(5), CycNum::zero(5), CycNum::zero(5), one],
        ])
        .unwrap();
        let g = MatrixGroup::close(&[m], Mode::Linear).unwrap();
        assert_eq!(g.abelian_quotient().unwrap().factors, vec![5]);
        let chars = g.one_dim_characters().unwrap();
        assert_eq!(chars.len(), 5);
        assert!(chars[0].is_trivial());
    }
}
