//! Text and JSON forms of bases and field elements.
//!
//! Rationals are written `p/q`; polynomials are comma-separated integer
//! lists, constant term first. Field elements are either a coefficient list
//! (`"q0,q1,..."`) or a small arithmetic expression in `b` (beta), e.g.
//! `-b^9/(b^9+1)`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebraic::{Base, FieldElement, NumberField};
use crate::error::{Error, Result};

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn parse_rational_list(s: &str) -> Result<Vec<BigRational>> {
    s.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(',')
        .map(parse_rational)
        .collect()
}

pub fn parse_int_list(s: &str) -> Result<Vec<BigInt>> {
    s.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("invalid integer {t:?}")))
        })
        .collect()
}

pub fn rational_to_string(q: &BigRational) -> String {
    q.to_string()
}

/// Parses a field element: a coefficient list when the text contains a comma,
/// otherwise an expression in `b`.
pub fn parse_element(field: &Arc<NumberField>, s: &str) -> Result<FieldElement> {
    if s.contains(',') || s.trim_start().starts_with('[') {
        Ok(FieldElement::from_coeffs(field, parse_rational_list(s)?))
    } else {
        Expr::new(field, s).parse()
    }
}

/// Builds a base from the three command-line strings.
pub fn parse_base(minpoly: &str, iso: &str, l: &str) -> Result<Base> {
    let p = parse_int_list(minpoly)?;
    let iso = parse_rational_list(iso)?;
    if iso.len() != 2 {
        return Err(Error::Parse("isolating interval needs exactly two endpoints".into()));
    }
    let field = Base::field_for(&p, (iso[0].clone(), iso[1].clone()))?;
    Base::with_endpoint(parse_element(&field, l)?)
}

/// Serialized base: `{"minpoly": [...], "iso": [lo, hi], "l": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseRecord {
    #[serde(with = "string_or_number")]
    pub minpoly: Vec<String>,
    #[serde(with = "string_or_number")]
    pub iso: Vec<String>,
    #[serde(with = "string_or_number")]
    pub l: Vec<String>,
}

mod string_or_number {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[String], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<String>, D::Error> {
        let raw = Vec::<serde_json::Value>::deserialize(d)?;
        raw.into_iter()
            .map(|v| match v {
                serde_json::Value::String(s) => Ok(s),
                serde_json::Value::Number(n) => Ok(n.to_string()),
                other => Err(serde::de::Error::custom(format!("expected string or number, got {other}"))),
            })
            .collect()
    }
}

impl BaseRecord {
    pub fn from_base(b: &Base) -> Self {
        let g = b.field().generator();
        let (lo, hi) = g.interval();
        BaseRecord {
            minpoly: g.minpoly().iter().map(|c| c.to_string()).collect(),
            iso: vec![rational_to_string(lo), rational_to_string(hi)],
            l: b.l().coeff_strings(),
        }
    }

    pub fn to_base(&self) -> Result<Base> {
        let p = self
            .minpoly
            .iter()
            .map(|c| c.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("invalid integer {c:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if self.iso.len() != 2 {
            return Err(Error::Parse("isolating interval needs exactly two endpoints".into()));
        }
        let lo = parse_rational(&self.iso[0])?;
        let hi = parse_rational(&self.iso[1])?;
        let l = self.l.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>()?;
        Base::new(&p, (lo, hi), &l)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Beta,
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Token::Num(text.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            match word.as_str() {
                "b" | "beta" => out.push(Token::Beta),
                _ => return Err(Error::Parse(format!("unknown identifier {word:?}"))),
            }
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

/// Recursive-descent parser for `+ - * / ^ ( )` over integers and `b`.
struct Expr<'a> {
    field: &'a Arc<NumberField>,
    src: &'a str,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Expr<'a> {
    fn new(field: &'a Arc<NumberField>, src: &'a str) -> Self {
        Expr {
            field,
            src,
            tokens: Vec::new(),
            pos: 0,
        }
    }

    fn parse(mut self) -> Result<FieldElement> {
        self.tokens = tokenize(self.src)?;
        let v = self.sum()?;
        if self.pos != self.tokens.len() {
            return Err(self.error("trailing input"));
        }
        Ok(v)
    }

    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} in expression {:?}", self.src))
    }

    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Token::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn sum(&mut self) -> Result<FieldElement> {
        let mut acc = self.product()?;
        while let Some(c @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.product()?;
            acc = if c == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<FieldElement> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == '*' { &acc * &rhs } else { acc.checked_div(&rhs)? };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<FieldElement> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<FieldElement> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            let neg = if self.peek_op() == Some('-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = match self.tokens.get(self.pos) {
                Some(Token::Num(n)) => i64::try_from(n.clone()).map_err(|_| self.error("exponent too large"))?,
                _ => return Err(self.error("expected integer exponent")),
            };
            self.pos += 1;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<FieldElement> {
        let tok = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Token::Num(n)) => Ok(FieldElement::from_rational(self.field, BigRational::from_integer(n))),
            Some(Token::Beta) => Ok(FieldElement::generator(self.field)),
            Some(Token::Op('(')) => {
                let v = self.sum()?;
                if self.peek_op() != Some(')') {
                    return Err(self.error("missing ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.error("unexpected token")),
        }
    }
}
