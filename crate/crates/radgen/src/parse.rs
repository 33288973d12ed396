//! Expression parser for polynomials.
//!
//! Grammar:
//! ```text
//! poly   := ['-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := number | var | '(' poly ')'      -- optionally followed by '^' integer
//! number := integer ['/' integer]
//! ```
//! Every error carries the byte offset where it was detected.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::poly::{Coeff, Polynomial};
use crate::ring::{Monomial, VarSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    UnknownVariable { name: String, offset: usize },
    Unexpected { found: String, expected: &'static str, offset: usize },
    UnexpectedEnd { expected: &'static str, offset: usize },
    ZeroDenominator { offset: usize },
    ExponentTooLarge { offset: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::UnknownVariable { name, offset } => {
                write!(f, "unknown variable `{}` at byte {}", name, offset)
            }
            ParseError::Unexpected { found, expected, offset } => {
                write!(f, "expected {} but found `{}` at byte {}", expected, found, offset)
            }
            ParseError::UnexpectedEnd { expected, offset } => {
                write!(f, "expected {} but input ended at byte {}", expected, offset)
            }
            ParseError::ZeroDenominator { offset } => {
                write!(f, "zero denominator at byte {}", offset)
            }
            ParseError::ExponentTooLarge { offset } => {
                write!(f, "exponent too large at byte {}", offset)
            }
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => n.to_string(),
            Tok::Ident(s) => s.clone(),
            Tok::Plus => "+".into(),
            Tok::Minus => "-".into(),
            Tok::Star => "*".into(),
            Tok::Caret => "^".into(),
            Tok::Slash => "/".into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'+' => { toks.push((Tok::Plus, i)); i += 1; }
            b'-' => { toks.push((Tok::Minus, i)); i += 1; }
            b'*' => { toks.push((Tok::Star, i)); i += 1; }
            b'^' => { toks.push((Tok::Caret, i)); i += 1; }
            b'/' => { toks.push((Tok::Slash, i)); i += 1; }
            b'(' => { toks.push((Tok::LParen, i)); i += 1; }
            b')' => { toks.push((Tok::RParen, i)); i += 1; }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits parse as BigInt");
                toks.push((Tok::Int(n), start));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), start));
            }
            _ => {
                return Err(ParseError::Unexpected {
                    found: (b as char).to_string(),
                    expected: "a term",
                    offset: i,
                })
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    ring: &'a VarSet,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(Tok, usize)> {
        self.toks.get(self.pos)
    }

    fn next(&mut self, expected: &'static str) -> Result<(Tok, usize), ParseError> {
        let t = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or(ParseError::UnexpectedEnd { expected, offset: self.end })?;
        self.pos += 1;
        Ok(t)
    }

    fn poly(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        if let Some((Tok::Minus, _)) = self.peek() {
            self.pos += 1;
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some((tok, _)) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Tok::Minus => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while let Some((Tok::Star, _)) = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let (tok, off) = self.next("a factor")?;
        let base = match tok {
            Tok::Int(n) => {
                // Optional '/ integer' forms an exact rational literal.
                if let Some((Tok::Slash, _)) = self.peek() {
                    self.pos += 1;
                    let (dtok, doff) = self.next("a denominator")?;
                    match dtok {
                        Tok::Int(d) => {
                            if d.is_zero() {
                                return Err(ParseError::ZeroDenominator { offset: doff });
                            }
                            Polynomial::constant(self.ring, Coeff::new(n, d))
                        }
                        other => {
                            return Err(ParseError::Unexpected {
                                found: other.describe(),
                                expected: "a denominator",
                                offset: doff,
                            })
                        }
                    }
                } else {
                    Polynomial::constant(self.ring, Coeff::from_integer(n))
                }
            }
            Tok::Ident(name) => match self.ring.index(&name) {
                Some(idx) => Polynomial::from_monomial(
                    self.ring,
                    Monomial::var(idx, self.ring.len()),
                ),
                None => return Err(ParseError::UnknownVariable { name, offset: off }),
            },
            Tok::LParen => {
                let inner = self.poly()?;
                let (closing, coff) = self.next("`)`")?;
                if closing != Tok::RParen {
                    return Err(ParseError::Unexpected {
                        found: closing.describe(),
                        expected: "`)`",
                        offset: coff,
                    });
                }
                inner
            }
            other => {
                return Err(ParseError::Unexpected {
                    found: other.describe(),
                    expected: "a factor",
                    offset: off,
                })
            }
        };
        if let Some((Tok::Caret, _)) = self.peek() {
            self.pos += 1;
            let (etok, eoff) = self.next("an exponent")?;
            match etok {
                Tok::Int(n) => {
                    let e = u32::try_from(&n)
                        .map_err(|_| ParseError::ExponentTooLarge { offset: eoff })?;
                    if base.num_terms() == 1 && e > 1024 {
                        // Even single-term powers are materialized, so keep
                        // exponents within the monomial overflow budget.
                        return Err(ParseError::ExponentTooLarge { offset: eoff });
                    }
                    if base.num_terms() > 1 && e > 64 {
                        return Err(ParseError::ExponentTooLarge { offset: eoff });
                    }
                    return Ok(base.pow(e));
                }
                other => {
                    return Err(ParseError::Unexpected {
                        found: other.describe(),
                        expected: "an exponent",
                        offset: eoff,
                    })
                }
            }
        }
        Ok(base)
    }
}

pub fn parse_polynomial(text: &str, ring: &VarSet) -> Result<Polynomial, ParseError> {
    let toks = tokenize(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        ring,
        end: text.len(),
    };
    let p = parser.poly()?;
    if let Some((tok, off)) = parser.peek() {
        return Err(ParseError::Unexpected {
            found: tok.describe(),
            expected: "`+`, `-`, `*` or end of input",
            offset: *off,
        });
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> VarSet {
        VarSet::new(["x1", "x2", "x3", "x4", "x5", "x6", "x7"]).unwrap()
    }

    #[test]
    fn parses_single_monomial() {
        let p = parse_polynomial("x1*x5", &ring()).unwrap();
        assert_eq!(p.to_string(), "x1*x5");
        assert_eq!(p.num_terms(), 1);
    }

    #[test]
    fn zero_literal_is_empty() {
        let p = parse_polynomial("0", &ring()).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn ring_identity_normalizes_to_zero() {
        let p = parse_polynomial("(x3*x4+x5*x6)*x7 - x3*x4*x7 - x5*x6*x7", &ring()).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn reports_unknown_variable_offset() {
        let err = parse_polynomial("x1 + y2", &ring()).unwrap_err();
        assert_eq!(
            err,
            ParseError::UnknownVariable { name: "y2".into(), offset: 5 }
        );
    }

    #[test]
    fn reports_syntax_offset() {
        let err = parse_polynomial("x1 + * x2", &ring()).unwrap_err();
        match err {
            ParseError::Unexpected { offset, .. } => assert_eq!(offset, 5),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rational_literals() {
        let p = parse_polynomial("1/2*x1 - 3/4", &ring()).unwrap();
        assert_eq!(p.to_string(), "1/2*x1 - 3/4");
        assert!(parse_polynomial("1/0", &ring()).is_err());
    }

    #[test]
    fn parenthesized_powers() {
        let p = parse_polynomial("(x1+x2)^2", &ring()).unwrap();
        assert_eq!(p.to_string(), "x1^2 + 2*x1*x2 + x2^2");
    }
}
