//! A small reader for polynomial expressions such as
//! `288x^2 (x+1) y^6 - 48x(2x^2-7x-3)y^5` or `(1-4xy^2)(1-4y-12xy^2)`.
//!
//! `x` is the coefficient variable; `t` and `y` both name the series variable.
//! Juxtaposition means multiplication. A single top-level `/` separates the
//! numerator and denominator of a generating function.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::bivar::{BivarPoly, RationalGF};
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    X,
    T,
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < cs.len() && cs[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = cs[start..=i].iter().collect();
                out.push(Tok::Num(digits.parse().map_err(|_| Error::Parse(digits.clone()))?));
            }
            'x' => out.push(Tok::X),
            't' | 'y' => out.push(Tok::T),
            '+' => out.push(Tok::Plus),
            '-' => out.push(Tok::Minus),
            '*' => out.push(Tok::Star),
            '^' => out.push(Tok::Caret),
            '(' | '[' => out.push(Tok::Open),
            ')' | ']' => out.push(Tok::Close),
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<BivarPoly> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BivarPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Num(_)) | Some(Tok::X) | Some(Tok::T) | Some(Tok::Open) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<BivarPoly> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<BivarPoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                    Ok(base.pow(e))
                }
                other => Err(Error::Parse(format!("expected exponent, found {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<BivarPoly> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(BivarPoly::constant(LaurentPoly::constant(BigRational::from_integer(n)))),
            Some(Tok::X) => Ok(BivarPoly::constant(LaurentPoly::x_pow(1))),
            Some(Tok::T) => Ok(BivarPoly::t_monomial(LaurentPoly::one(), 1)),
            Some(Tok::Open) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::Close) => Ok(e),
                    other => Err(Error::Parse(format!("expected ')', found {other:?}"))),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parse a polynomial expression in `x` and `t` (or `y`).
pub fn parse_bivar(s: &str) -> Result<BivarPoly> {
    let mut p = Parser { toks: lex(s)?, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(e)
}

/// Parse a polynomial expression in `x` only.
pub fn parse_poly(s: &str) -> Result<LaurentPoly> {
    let b = parse_bivar(s)?;
    match b.t_degree() {
        None => Ok(LaurentPoly::zero()),
        Some(0) => Ok(b.coeff(0)),
        Some(_) => Err(Error::Parse(format!("{s:?} involves the series variable"))),
    }
}

/// Parse `numerator / denominator`; a missing denominator means 1.
pub fn parse_gf(s: &str) -> Result<RationalGF> {
    let mut depth = 0i32;
    let mut split = None;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '/' if depth == 0 => {
                if split.is_some() {
                    return Err(Error::Parse("more than one top-level '/'".into()));
                }
                split = Some(i);
            }
            _ => {}
        }
    }
    match split {
        Some(i) => RationalGF::new(parse_bivar(&s[..i])?, parse_bivar(&s[i + 1..])?),
        None => RationalGF::new(parse_bivar(s)?, BivarPoly::one()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn implicit_products_and_powers() {
        let p = parse_poly("16x(15x-2)").unwrap();
        assert_eq!(p, LaurentPoly::from_i64s(&[0, -32, 240]));
        let q = parse_poly("-4(x^2+12x+2)").unwrap();
        assert_eq!(q, LaurentPoly::from_i64s(&[-8, -48, -4]));
    }

    #[test]
    fn factored_denominator() {
        let b = parse_bivar("(1-4xy^2)(1-4y-12xy^2)(1-2y-12xy^2)").unwrap();
        assert_eq!(b.t_degree(), Some(6));
        assert_eq!(b.coeff(0), LaurentPoly::one());
        assert_eq!(b.coeff(1), LaurentPoly::from_i64s(&[-6]));
    }

    #[test]
    fn gf_split_at_top_level() {
        let gf = parse_gf("x t / (1 - x t)").unwrap();
        assert_eq!(gf.den.coeff(1), LaurentPoly::from_i64s(&[0, -1]));
        assert!(parse_gf("1/2/3").is_err());
        assert!(parse_bivar("2x + ").is_err());
    }
}
