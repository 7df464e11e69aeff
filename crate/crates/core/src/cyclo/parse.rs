//! Text syntax: sums of terms such as `1/2 + -3*z{40}^10`, with `i` as shorthand
//! for `z{4}^1`. Parenthesised sub-expressions are accepted as factors.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{lcm_u32, CycNum, MAX_FIELD_INDEX};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
enum Factor {
    Rational(BigRational),
    Root { n: u32, k: i64 },
    Group(Vec<Term>),
}

#[derive(Debug, Clone)]
struct Term {
    negative: bool,
    factors: Vec<Factor>,
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!(
            "{msg} at offset {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.s)
        )))
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).expect("ascii"))
    }

    fn expr(&mut self) -> Result<Vec<Term>> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    terms.push(self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let mut t = self.term()?;
                    t.negative = !t.negative;
                    terms.push(t);
                }
                _ => return Ok(terms),
            }
        }
    }

    fn term(&mut self) -> Result<Term> {
        let mut negative = false;
        loop {
            if self.eat(b'-') {
                negative = !negative;
            } else if !self.eat(b'+') {
                break;
            }
        }
        let mut factors = vec![self.factor()?];
        while self.eat(b'*') {
            factors.push(self.factor()?);
        }
        Ok(Term { negative, factors })
    }

    fn factor(&mut self) -> Result<Factor> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let p: BigInt = self.digits()?.parse().expect("digits");
                let mut q = BigInt::one();
                if self.eat(b'/') {
                    q = self.digits()?.parse().expect("digits");
                    if q.is_zero() {
                        return self.err("zero denominator");
                    }
                }
                Ok(Factor::Rational(BigRational::new(p, q)))
            }
            Some(b'i') => {
                self.pos += 1;
                let k = self.exponent()?;
                Ok(Factor::Root { n: 4, k })
            }
            Some(b'z') => {
                self.pos += 1;
                if !self.eat(b'{') {
                    return self.err("expected '{' after z");
                }
                let n: u32 = self
                    .digits()?
                    .parse()
                    .map_err(|_| Error::Parse("field index too large".into()))?;
                if n == 0 || n > MAX_FIELD_INDEX {
                    return self.err("field index out of range");
                }
                if !self.eat(b'}') {
                    return self.err("expected '}'");
                }
                let k = self.exponent()?;
                Ok(Factor::Root { n, k })
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(Factor::Group(inner))
            }
            _ => self.err("expected a number, root of unity or '('"),
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let neg = self.eat(b'-');
        let k: i64 = self
            .digits()?
            .parse()
            .map_err(|_| Error::Parse("exponent too large".into()))?;
        Ok(if neg { -k } else { k })
    }
}

fn required_index(terms: &[Term]) -> u32 {
    let mut n = 1;
    for t in terms {
        for f in &t.factors {
            n = match f {
                Factor::Rational(_) => n,
                Factor::Root { n: m, .. } => lcm_u32(n, *m),
                Factor::Group(inner) => lcm_u32(n, required_index(inner)),
            };
        }
    }
    n
}

fn evaluate(terms: &[Term], n: u32) -> CycNum {
    let mut acc = CycNum::zero(n);
    for t in terms {
        let mut prod = CycNum::one(n);
        for f in &t.factors {
            prod = match f {
                Factor::Rational(q) => prod.scale_rational(q),
                Factor::Root { n: m, k } => {
                    let z = CycNum::root_of_unity(n, k * (n / m) as i64);
                    &prod * &z
                }
                Factor::Group(inner) => &prod * &evaluate(inner, n),
            };
        }
        acc = if t.negative { &acc - &prod } else { &acc + &prod };
    }
    acc
}

fn parse_terms(s: &str) -> Result<Vec<Term>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty number literal".into()));
    }
    let mut p = Parser {
        s: compact.as_bytes(),
        pos: 0,
    };
    let terms = p.expr()?;
    if p.pos != compact.len() {
        return p.err("trailing input");
    }
    Ok(terms)
}

impl CycNum {
    /// Parses a literal into the smallest field containing all roots it mentions.
    pub fn parse(s: &str) -> Result<CycNum> {
        let terms = parse_terms(s)?;
        let n = required_index(&terms);
        if n > MAX_FIELD_INDEX {
            return Err(Error::Parse(format!("literal needs field index {n}")));
        }
        Ok(evaluate(&terms, n))
    }

    /// Parses a literal directly into Q(ζ_n); fails if a mentioned root is not in that field.
    pub fn parse_in(s: &str, n: u32) -> Result<CycNum> {
        let terms = parse_terms(s)?;
        let need = required_index(&terms);
        if n == 0 || n > MAX_FIELD_INDEX || n % need != 0 {
            return Err(Error::Domain(format!(
                "literal {s:?} needs roots of order {need}, not available in Q(zeta_{n})"
            )));
        }
        Ok(evaluate(&terms, n))
    }
}

impl FromStr for CycNum {
    type Err = Error;
    fn from_str(s: &str) -> Result<CycNum> {
        CycNum::parse(s)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CycNum {
    /// Canonical form: power-basis terms joined by " + ", e.g. `1/2 + -3*z{40}^10`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.field_index();
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write_rational(f, c)?;
            } else if c.is_one() {
                write!(f, "z{{{n}}}^{k}")?;
            } else if (-c).is_one() {
                write!(f, "-z{{{n}}}^{k}")?;
            } else {
                write_rational(f, c)?;
                write!(f, "*z{{{n}}}^{k}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_spec_literal() {
        let v = CycNum::parse("1/2 + -3*z{40}^10").unwrap();
        assert_eq!(v.field_index(), 40);
        let i = CycNum::root_of_unity(40, 10);
        assert_eq!(v, CycNum::from_frac(40, 1, 2) - i.scale_int(3));
    }

    #[test]
    fn whitespace_and_aliases() {
        assert_eq!(CycNum::parse(" i ").unwrap(), CycNum::root_of_unity(4, 1));
        assert_eq!(CycNum::parse("-i").unwrap(), CycNum::root_of_unity(4, 3));
        assert_eq!(
            CycNum::parse("(1+i)*(1-i)").unwrap(),
            CycNum::from_int(4, 2)
        );
        assert_eq!(CycNum::parse("z{5}^-1").unwrap(), CycNum::root_of_unity(5, 4));
    }

    #[test]
    fn mixed_roots_use_lcm() {
        let v = CycNum::parse("i*z{5}").unwrap();
        assert_eq!(v.field_index(), 20);
        assert!(CycNum::parse_in("z{5}", 8).is_err());
    }

    #[test]
    fn roundtrip() {
        for s in ["0", "1", "-7/3", "1/2 + -3*z{40}^10", "z{12}^5 + 2*z{12}^3"] {
            let v = CycNum::parse(s).unwrap();
            let back = CycNum::parse_in(&v.to_string(), v.field_index()).unwrap();
            assert_eq!(v, back, "{s}");
        }
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "z{0}", "1/0", "2x", "(1+i", "z{4"] {
            assert!(CycNum::parse(s).is_err(), "{s}");
        }
    }
}
