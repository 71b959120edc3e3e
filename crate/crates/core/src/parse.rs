//! Text and JSON forms of [`ExtPolynomial`].
//!
//! Text grammar:
//!
//! ```text
//! poly  := [sign] term { sign term }      sign := '+' | '-'
//! term  := coeff | coeff '*' mono | mono
//! coeff := integer | integer '/' positive-integer
//! mono  := 't' index { '*' 't' index }
//! ```
//!
//! Whitespace between tokens is ignored. Variables inside a `mono` may come in
//! any order; the term is normalized with the anticommutation sign, and a
//! repeated variable makes the term zero.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::polynomial::ExtPolynomial;
use crate::Rational;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn coeff(&mut self) -> Result<Rational> {
        let num: BigInt = self.digits()?.parse().unwrap();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den: BigInt = self.digits()?.parse().unwrap();
            if den.is_zero() {
                return self.err("zero denominator");
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn variable(&mut self, n: usize) -> Result<usize> {
        if self.peek() != Some(b't') {
            return self.err("expected a variable 't<index>'");
        }
        self.pos += 1;
        let at = self.pos;
        let index: usize = match self.digits()?.parse() {
            Ok(i) => i,
            Err(_) => return Err(Error::Parse { pos: at, msg: "index too large".into() }),
        };
        if index == 0 || index > n {
            return Err(Error::IndexOutOfRange { index, n });
        }
        Ok(index)
    }

    /// Product of variables in the given order, as (coefficient sign, monomial).
    fn mono(&mut self, n: usize) -> Result<Option<(Rational, Monomial)>> {
        let mut acc = Some((Rational::one(), Monomial::one(n)?));
        loop {
            let i = self.variable(n)?;
            if let Some((c, m)) = acc {
                acc = m.mul(&Monomial::var(n, i)?)?.map(|(s, prod)| {
                    (Rational::from_integer(s.as_i8().into()) * c, prod)
                });
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self, n: usize) -> Result<Option<(Rational, Monomial)>> {
        match self.peek() {
            Some(b't') => self.mono(n),
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.coeff()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    Ok(self.mono(n)?.map(|(s, m)| (s * coeff, m)))
                } else {
                    Ok(Some((coeff, Monomial::one(n)?)))
                }
            }
            Some(_) => self.err("expected a term"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses the shared text grammar into `R_n`.
pub fn parse_poly(n: usize, text: &str) -> Result<ExtPolynomial> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let mut terms = Vec::new();
    let mut negative = match p.peek() {
        Some(b'-') => {
            p.pos += 1;
            true
        }
        Some(b'+') => {
            p.pos += 1;
            false
        }
        _ => false,
    };
    loop {
        if let Some((c, m)) = p.term(n)? {
            terms.push((m, if negative { -c } else { c }));
        }
        match p.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(_) => return p.err("expected '+' or '-'"),
        }
        p.pos += 1;
    }
    ExtPolynomial::from_terms(n, terms)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub subset: Vec<usize>,
    pub coeff: String,
}

/// `{"n": N, "terms": [{"subset": [..sorted..], "coeff": "p/q"}]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonPoly {
    pub n: usize,
    pub terms: Vec<JsonTerm>,
}

impl From<&ExtPolynomial> for JsonPoly {
    fn from(p: &ExtPolynomial) -> JsonPoly {
        JsonPoly {
            n: p.n(),
            terms: p
                .terms()
                .rev()
                .map(|(m, c)| JsonTerm { subset: m.indices().collect(), coeff: c.to_string() })
                .collect(),
        }
    }
}

impl TryFrom<&JsonPoly> for ExtPolynomial {
    type Error = Error;

    fn try_from(j: &JsonPoly) -> Result<ExtPolynomial> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            let mut sorted = t.subset.clone();
            sorted.sort_unstable();
            if sorted != t.subset {
                return Err(Error::Parse { pos: 0, msg: format!("subset {:?} is not sorted", t.subset) });
            }
            let c = parse_rational(&t.coeff)?;
            terms.push((Monomial::new(j.n, sorted)?, c));
        }
        ExtPolynomial::from_terms(j.n, terms)
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let (negative, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let mut p = Parser { src: body.as_bytes(), pos: 0 };
    let c = p.coeff()?;
    if p.peek().is_some() {
        return p.err(format!("trailing input in coefficient {text:?}"));
    }
    Ok(if negative { -c } else { c })
}

pub fn to_json(p: &ExtPolynomial) -> serde_json::Value {
    serde_json::to_value(JsonPoly::from(p)).expect("JsonPoly serializes")
}

pub fn from_json(value: &serde_json::Value) -> Result<ExtPolynomial> {
    let j: JsonPoly = serde_json::from_value(value.clone())
        .map_err(|e| Error::Parse { pos: 0, msg: e.to_string() })?;
    ExtPolynomial::try_from(&j)
}

pub fn from_json_str(text: &str) -> Result<ExtPolynomial> {
    let j: JsonPoly =
        serde_json::from_str(text).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })?;
    ExtPolynomial::try_from(&j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn parses_example() {
        let p = parse_poly(3, "3/2*t1*t3 - t2").unwrap();
        assert_eq!(p.coeff(&Monomial::new(3, [1, 3]).unwrap()), q(3, 2));
        assert_eq!(p.coeff(&Monomial::new(3, [2]).unwrap()), q(-1, 1));
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn normalizes_variable_order() {
        let p = parse_poly(3, "t3*t1").unwrap();
        assert_eq!(p, parse_poly(3, "-t1*t3").unwrap());
        let p = parse_poly(3, "2*t3*t2*t1").unwrap();
        assert_eq!(p, parse_poly(3, "-2*t1*t2*t3").unwrap());
    }

    #[test]
    fn repeated_variable_is_zero() {
        assert!(parse_poly(3, "t1*t2*t1").unwrap().is_zero());
        assert_eq!(parse_poly(3, "t1*t1 + t2").unwrap(), parse_poly(3, "t2").unwrap());
    }

    #[test]
    fn constants_and_signs() {
        let p = parse_poly(2, "-1 + t1 + +0").unwrap_err();
        assert!(matches!(p, Error::Parse { .. }));
        assert_eq!(parse_poly(2, " - 4/6 ").unwrap().constant_term(), q(-2, 3));
        assert!(parse_poly(2, "0").unwrap().is_zero());
        assert!(parse_poly(2, "t1 - t1").unwrap().is_zero());
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "t", "t1 t2", "3/0*t1", "x1", "t1 +", "1/-2", "t1**t2", "3*"] {
            assert!(parse_poly(3, bad).is_err(), "{bad:?} should fail");
        }
        assert_eq!(parse_poly(2, "t3"), Err(Error::IndexOutOfRange { index: 3, n: 2 }));
        assert!(parse_poly(2, "t99999999999999999999999").is_err());
    }

    #[test]
    fn display_reparses() {
        let p = parse_poly(4, "-7/3*t4*t2 + 5 - t1*t2*t3 + 2*t3").unwrap();
        assert_eq!(parse_poly(4, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn json_form() {
        let p = parse_poly(3, "3/2*t1*t3 - t2").unwrap();
        let v = to_json(&p);
        assert_eq!(
            v,
            serde_json::json!({"n": 3, "terms": [
                {"subset": [1, 3], "coeff": "3/2"},
                {"subset": [2], "coeff": "-1"}
            ]})
        );
        assert_eq!(from_json(&v).unwrap(), p);
        let unsorted = serde_json::json!({"n": 3, "terms": [{"subset": [3, 1], "coeff": "1"}]});
        assert!(from_json(&unsorted).is_err());
    }
}
