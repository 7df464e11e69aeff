//! Polynomial literals: sums of `coeff*x^a*y^b*z^c*w^d` with number-literal coefficients.

use std::str::FromStr;

use super::{Exponent, HomPoly};
use crate::cyclo::CycNum;
use crate::error::{Error, Result};

/// Splits at top-level occurrences of the separators, tracking (), {} nesting.
/// A sign directly after an operator or at the start belongs to the next operand.
fn split_top(s: &str, seps: &[char]) -> Vec<(char, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut lead = '+';
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        match ch {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            _ => {}
        }
        let is_sep = depth == 0
            && seps.contains(&ch)
            && !prev.is_none_or(|p| matches!(p, '*' | '+' | '-' | '^'));
        if is_sep {
            out.push((lead, std::mem::take(&mut cur)));
            lead = ch;
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    out.push((lead, cur));
    out
}

fn parse_term(t: &str) -> Result<(Exponent, CycNum)> {
    let mut e = [0u32; 4];
    let mut c = CycNum::one(1);
    let mut negative = false;
    let mut body = t;
    while let Some(rest) = body.strip_prefix('-') {
        negative = !negative;
        body = rest;
    }
    while let Some(rest) = body.strip_prefix('+') {
        body = rest;
    }
    for (_, f) in split_top(body, &['*']) {
        if f.is_empty() {
            return Err(Error::Parse(format!("empty factor in term {t:?}")));
        }
        let first = f.chars().next().expect("nonempty");
        let is_var = matches!(first, 'x' | 'y' | 'w') || (first == 'z' && !f.starts_with("z{"));
        if is_var {
            let k = match first {
                'x' => 0,
                'y' => 1,
                'z' => 2,
                _ => 3,
            };
            let rest = &f[1..];
            let pow = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .and_then(|r| r.parse::<u32>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad variable power {f:?}")))?
            };
            e[k] += pow;
        } else {
            let v = CycNum::parse(&f)?;
            let (a, b) = CycNum::unify(&c, &v).or_else(|_| {
                let n = crate::cyclo::lcm_u32(c.field_index(), v.field_index());
                Ok::<_, Error>((c.embed(n)?, v.embed(n)?))
            })?;
            c = &a * &b;
        }
    }
    if negative {
        c = -c;
    }
    Ok((e, c))
}

impl HomPoly {
    pub fn parse(s: &str) -> Result<HomPoly> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial literal".into()));
        }
        let mut terms = Vec::new();
        for (sign, t) in split_top(&compact, &['+', '-']) {
            if t.is_empty() {
                return Err(Error::Parse(format!("empty term in {s:?}")));
            }
            let (e, mut c) = parse_term(&t)?;
            if sign == '-' {
                c = -c;
            }
            terms.push((e, c));
        }
        let degree: u32 = terms[0].0.iter().sum();
        if terms.iter().any(|(e, _)| e.iter().sum::<u32>() != degree) {
            return Err(Error::Parse(format!("polynomial {s:?} is not homogeneous")));
        }
        HomPoly::from_terms(degree, terms)
    }
}

impl FromStr for HomPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<HomPoly> {
        HomPoly::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_terms_with_root_coefficients() {
        let f = HomPoly::parse("x*z + y*w").unwrap();
        assert_eq!(f.degree(), 2);
        assert_eq!(f.terms().len(), 2);
        let g = HomPoly::parse("-1/2*z{5}^2*x^2 + (1+i)*y*w - z^2").unwrap();
        assert_eq!(g.field_index(), 20);
        assert_eq!(g.coeff(&[0, 0, 2, 0]), CycNum::from_int(1, -1));
        assert_eq!(g.coeff(&[2, 0, 0, 0]), -CycNum::root_of_unity(5, 2).scale_rational(&num_rational::BigRational::new(1.into(), 2.into())));
    }

    #[test]
    fn roundtrip_through_display() {
        for s in ["x^4 + y^4 + z^4 + w^4", "x*y*z*w", "(1 + z{4}^1)*x^2 + -3/4*z*w"] {
            let f = HomPoly::parse(s).unwrap();
            let g = HomPoly::parse(&f.to_string()).unwrap();
            assert_eq!(f, g, "{s}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        for s in ["", "x^2 + y", "x^", "q*x", "x**y"] {
            assert!(HomPoly::parse(s).is_err(), "{s}");
        }
    }
}
