//! Canonical text rendering and parsing.
//!
//! Terms appear in descending graded-lex order, joined by ` + ` or ` - `;
//! each term is `c*v1^e1*v2^e2`, dropping `^1` and a unit coefficient.
//! Rationals are written `num/den` in lowest terms. Example:
//! `2*x^2*y - 3`.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::{parse_coefficient, Ring};
use super::vars::VariableSet;

/// Writes `terms` with the factors of each term in `order` (a permutation
/// of the variable indices).
fn write_terms<'a, R: Ring + 'a>(
    f: &mut fmt::Formatter<'_>,
    ring: &R,
    vars: &VariableSet,
    terms: impl Iterator<Item = &'a (Monomial, R::Elem)>,
    order: &[usize],
) -> fmt::Result {
    let mut empty = true;
    for (k, (m, c)) in terms.enumerate() {
        empty = false;
        let negative = ring.is_negative(c);
        match (k, negative) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let abs = if negative { ring.neg(c) } else { c.clone() };
        if m.is_one() {
            ring.fmt_elem(&abs, f)?;
            continue;
        }
        let mut first = true;
        if !ring.is_one(&abs) {
            ring.fmt_elem(&abs, f)?;
            first = false;
        }
        for &i in order {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(vars.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
    }
    if empty {
        f.write_str("0")?;
    }
    Ok(())
}

impl<R: Ring> fmt::Display for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order: Vec<usize> = (0..self.vars().len()).collect();
        write_terms(f, self.ring(), self.vars(), self.terms().iter(), &order)
    }
}

/// A rendering in lexicographic order under a variable priority: terms are
/// sorted by the exponent of the first priority variable, then the second,
/// and so on, and factors are written in priority order. Parses back to the
/// same polynomial.
pub struct PriorityDisplay<'a, R: Ring> {
    poly: &'a Polynomial<R>,
    priority: Vec<usize>,
}

impl<R: Ring> Polynomial<R> {
    /// Display in lex order under `priority`, a list of all variable names.
    pub fn display_by_priority(&self, priority: &[&str]) -> Result<PriorityDisplay<'_, R>, super::PolyError> {
        let mut order = Vec::with_capacity(priority.len());
        for name in priority {
            order.push(self.vars().require(name)?);
        }
        let mut seen = alloc::vec![false; self.vars().len()];
        for &i in &order {
            if core::mem::replace(&mut seen[i], true) {
                return Err(super::PolyError::DuplicateVariable(self.vars().name(i).into()));
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(super::PolyError::UnknownVariable(self.vars().name(i).into()));
        }
        Ok(PriorityDisplay { poly: self, priority: order })
    }
}

impl<R: Ring> fmt::Display for PriorityDisplay<'_, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let key = |m: &Monomial| -> Vec<u8> { self.priority.iter().map(|&i| m.exponent(i)).collect() };
        let mut terms: Vec<&(Monomial, R::Elem)> = self.poly.terms().iter().collect();
        terms.sort_by_cached_key(|(m, _)| core::cmp::Reverse(key(m)));
        write_terms(f, self.poly.ring(), self.poly.vars(), terms.into_iter(), &self.priority)
    }
}

/// A parse failure, positioned at the offending token (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message} (found `{token}`)")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub token: String,
    pub message: &'static str,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    col: usize,
}

struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src, pos: 0, line: 1, col: 1 }
    }

    fn bump(&mut self, c: char) {
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
    }

    fn tokens(mut self) -> Result<Vec<Spanned>, ParseError> {
        let mut out = Vec::new();
        loop {
            let rest = &self.src[self.pos..];
            let Some(c) = rest.chars().next() else {
                out.push(Spanned { tok: Tok::End, line: self.line, column: self.col });
                return Ok(out);
            };
            let (line, column) = (self.line, self.col);
            if c.is_whitespace() {
                self.bump(c);
            } else if c.is_ascii_digit() {
                let len = rest.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(rest.len());
                let text = rest[..len].to_string();
                for ch in text.chars() {
                    self.bump(ch);
                }
                out.push(Spanned { tok: Tok::Num(text), line, column });
            } else if c.is_ascii_alphabetic() {
                let len = rest.find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_')).unwrap_or(rest.len());
                let text = rest[..len].to_string();
                for ch in text.chars() {
                    self.bump(ch);
                }
                out.push(Spanned { tok: Tok::Ident(text), line, column });
            } else if "+-*^/".contains(c) {
                self.bump(c);
                out.push(Spanned { tok: Tok::Sym(c), line, column });
            } else {
                return Err(ParseError { line, column, token: c.to_string(), message: "unexpected character" });
            }
        }
    }
}

fn tok_text(t: &Tok) -> String {
    match t {
        Tok::Num(s) | Tok::Ident(s) => s.clone(),
        Tok::Sym(c) => c.to_string(),
        Tok::End => "end of input".to_string(),
    }
}

struct Parser<'a, R: Ring> {
    toks: Vec<Spanned>,
    at: usize,
    ring: &'a R,
    vars: &'a Arc<VariableSet>,
}

impl<R: Ring> Parser<'_, R> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn error(&self, message: &'static str) -> ParseError {
        let s = &self.toks[self.at];
        ParseError { line: s.line, column: s.column, token: tok_text(&s.tok), message }
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.at].tok.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn exponent(&mut self) -> Result<u8, ParseError> {
        match self.peek().clone() {
            Tok::Num(s) => {
                let e = s.parse::<u8>().map_err(|_| self.error("exponent out of range"))?;
                self.next();
                Ok(e)
            }
            _ => Err(self.error("expected an exponent")),
        }
    }

    fn term(&mut self) -> Result<(Monomial, R::Elem), ParseError> {
        let n = self.vars.len();
        let mut mono = Monomial::one(n);
        let mut coef = self.ring.one();
        loop {
            match self.peek().clone() {
                Tok::Num(s) => {
                    self.next();
                    let literal = if *self.peek() == Tok::Sym('/') {
                        self.next();
                        match self.next() {
                            Tok::Num(d) => {
                                let mut l = s.clone();
                                l.push('/');
                                l.push_str(&d);
                                l
                            }
                            _ => {
                                self.at -= 1;
                                return Err(self.error("expected a denominator"));
                            }
                        }
                    } else {
                        s
                    };
                    let c = parse_coefficient(self.ring, &literal).ok_or_else(|| {
                        self.at -= 1;
                        self.error("coefficient is not an element of the ring")
                    })?;
                    coef = self.ring.mul(&coef, &c);
                }
                Tok::Ident(name) => {
                    let Some(i) = self.vars.index_of(&name) else {
                        return Err(self.error("unknown variable"));
                    };
                    self.next();
                    let e = if *self.peek() == Tok::Sym('^') {
                        self.next();
                        self.exponent()?
                    } else {
                        1
                    };
                    mono = mono.mul(&Monomial::var(n, i, e));
                }
                _ => return Err(self.error("expected a number or a variable")),
            }
            if *self.peek() == Tok::Sym('*') {
                self.next();
            } else {
                return Ok((mono, coef));
            }
        }
    }

    fn polynomial(&mut self) -> Result<Vec<(Monomial, R::Elem)>, ParseError> {
        let mut terms = Vec::new();
        let mut negate = false;
        if *self.peek() == Tok::Sym('-') {
            self.next();
            negate = true;
        } else if *self.peek() == Tok::Sym('+') {
            self.next();
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negate { self.ring.neg(&c) } else { c }));
            match self.peek() {
                Tok::Sym('+') => negate = false,
                Tok::Sym('-') => negate = true,
                Tok::End => return Ok(terms),
                _ => return Err(self.error("expected `+`, `-` or end of input")),
            }
            self.next();
        }
    }
}

/// Parses text in the canonical format (any term order, repeated factors
/// allowed) into a canonical polynomial.
pub fn parse_polynomial<R: Ring>(text: &str, ring: &R, vars: &Arc<VariableSet>) -> Result<Polynomial<R>, ParseError> {
    let toks = Lexer::new(text).tokens()?;
    let mut parser = Parser { toks, at: 0, ring, vars };
    let terms = parser.polynomial()?;
    Ok(Polynomial::from_terms(ring.clone(), vars.clone(), terms))
}
