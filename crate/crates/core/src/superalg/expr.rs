//! Textual form of ring elements.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' ['-'] integer]
//! atom   := integer ['/' integer] | generator | '(' expr ')'
//! ```
//!
//! Whitespace is insignificant. [`format`] emits the canonical term order and
//! `parse(format(p)) == p` for every element.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::Coeff;
use super::poly::{Monomial, SuperPoly};
use super::signature::{GenRef, RingSignature};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut column = 1;
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token {
                tok,
                line: l0,
                column: c0,
            });
            i += 1;
            column += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            column += i - start;
            out.push(Token {
                tok: Tok::Num(s.parse().expect("digits")),
                line: l0,
                column: c0,
            });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            column += i - start;
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                line: l0,
                column: c0,
            });
            continue;
        }
        return Err(Error::Syntax {
            line: l0,
            column: c0,
            message: format!("unexpected character `{c}`"),
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser<'a> {
    sig: &'a Arc<RingSignature>,
    toks: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, t: &Token, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: t.line,
            column: t.column,
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<SuperPoly> {
        let mut negate = false;
        match self.peek() {
            Tok::Plus => {
                self.next();
            }
            Tok::Minus => {
                self.next();
                negate = true;
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.next();
                    acc = acc.add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.next();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SuperPoly> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.next();
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<i64> {
        let mut negative = false;
        if *self.peek() == Tok::Minus {
            self.next();
            negative = true;
        }
        let t = self.next();
        match &t.tok {
            Tok::Num(n) => {
                let v: i64 = n
                    .try_into()
                    .map_err(|_| self.error_at(&t, "exponent out of range"))?;
                if v > i32::MAX as i64 {
                    return Err(self.error_at(&t, "exponent out of range"));
                }
                Ok(if negative { -v } else { v })
            }
            _ => Err(self.error_at(&t, "expected an integer exponent")),
        }
    }

    fn factor(&mut self) -> Result<SuperPoly> {
        let t = self.next();
        match t.tok.clone() {
            Tok::Num(n) => {
                let mut c = Coeff::from_integer(n);
                if *self.peek() == Tok::Slash {
                    self.next();
                    let d = self.next();
                    match d.tok {
                        Tok::Num(den) if !den.is_zero() => c /= Coeff::from_integer(den),
                        Tok::Num(_) => return Err(self.error_at(&d, "division by zero")),
                        _ => return Err(self.error_at(&d, "expected an integer denominator")),
                    }
                }
                let c = self.sig.field().try_reduce(c)?;
                let base = SuperPoly::constant(self.sig, c);
                if *self.peek() == Tok::Caret {
                    self.next();
                    let k = self.exponent()?;
                    return base.pow(k);
                }
                Ok(base)
            }
            Tok::Ident(name) => {
                let g = self
                    .sig
                    .lookup(&name)
                    .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
                let k = if *self.peek() == Tok::Caret {
                    self.next();
                    self.exponent()?
                } else {
                    1
                };
                match g {
                    GenRef::Even(i) => {
                        if k < 0 && !self.sig.is_laurent(i) {
                            return Err(Error::NegativeExponent(name));
                        }
                        let mut e = vec![0; self.sig.num_even()];
                        e[i] = k as i32;
                        SuperPoly::from_terms(self.sig, [(Monomial::new(e, 0), Coeff::one())])
                    }
                    GenRef::Odd(_) => match k {
                        k if k < 0 => Err(Error::ParityMisuse(format!(
                            "odd generator `{name}` has no inverse"
                        ))),
                        0 => Ok(SuperPoly::one(self.sig)),
                        1 => Ok(SuperPoly::generator(self.sig, g)),
                        _ => Ok(SuperPoly::zero(self.sig)),
                    },
                }
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.next();
                if close.tok != Tok::RParen {
                    return Err(self.error_at(&close, "expected `)`"));
                }
                if *self.peek() == Tok::Caret {
                    self.next();
                    let k = self.exponent()?;
                    return inner.pow(k);
                }
                Ok(inner)
            }
            Tok::End => Err(self.error_at(&t, "unexpected end of input")),
            other => Err(self.error_at(&t, format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses an element of the ring described by `sig`.
pub fn parse(text: &str, sig: &Arc<RingSignature>) -> Result<SuperPoly> {
    let toks = tokenize(text)?;
    let mut p = Parser { sig, toks, pos: 0 };
    let out = p.expr()?;
    let t = p.next();
    if t.tok != Tok::End {
        return Err(p.error_at(&t, "trailing input"));
    }
    Ok(out)
}

/// Identifiers appearing in `text`, paired with whether a negative power was
/// applied to them. Used to infer a ring from free-standing input.
pub fn scan_identifiers(text: &str) -> Result<Vec<(String, bool)>> {
    let toks = tokenize(text)?;
    let mut out: Vec<(String, bool)> = Vec::new();
    for (i, t) in toks.iter().enumerate() {
        if let Tok::Ident(name) = &t.tok {
            let negative = matches!(toks.get(i + 1).map(|t| &t.tok), Some(Tok::Caret))
                && matches!(toks.get(i + 2).map(|t| &t.tok), Some(Tok::Minus));
            match out.iter_mut().find(|(n, _)| n == name) {
                Some(entry) => entry.1 |= negative,
                None => out.push((name.clone(), negative)),
            }
        }
    }
    Ok(out)
}

/// Canonical text of an element.
pub fn format(p: &SuperPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let sig = p.signature();
    let field = sig.field();
    let mut out = String::new();
    for (k, (m, c)) in p.terms().enumerate() {
        let negative = field.is_negative(c);
        let mag = if negative { -c.clone() } else { c.clone() };
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        for (i, &e) in m.even_exponents().iter().enumerate() {
            let name = &sig.even_generators()[i].name;
            match e {
                0 => {}
                1 => factors.push(name.clone()),
                _ => factors.push(format!("{name}^{e}")),
            }
        }
        for i in m.odd_indices() {
            factors.push(sig.odd_generators()[i].clone());
        }
        let coeff = field.format_coeff(&mag);
        if factors.is_empty() {
            out.push_str(&coeff);
        } else {
            if !mag.is_one() {
                out.push_str(&coeff);
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}
