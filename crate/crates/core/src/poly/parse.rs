//! Parser for the textual polynomial grammar: signed integer coefficients,
//! `*` for products, `^` for powers, declared variable names, `+`/`-`
//! separators. Whitespace is ignored.

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            '^' => {
                out.push((i, Token::Caret));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v = text[start..i].parse::<u64>().map_err(|_| Error::Parse {
                    pos: start,
                    msg: "integer literal too large".into(),
                })?;
                out.push((start, Token::Int(v)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
            }
            other => {
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    tokens: Vec<(usize, Token)>,
    at: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() != Some(&Token::Caret) {
            return Ok(1);
        }
        self.at += 1;
        match self.peek() {
            Some(Token::Int(e)) => {
                let e = *e;
                if e > u16::MAX as u64 {
                    return self.err("exponent too large");
                }
                self.at += 1;
                Ok(e as u32)
            }
            _ => self.err("malformed exponent: expected a nonnegative integer after '^'"),
        }
    }

    fn term(&mut self) -> Result<(u32, Monomial)> {
        let field = *self.ring.field();
        let mut coeff = 1u32;
        let mut exps = vec![0u32; self.ring.nvars()];
        loop {
            match self.peek().cloned() {
                Some(Token::Int(v)) => {
                    self.at += 1;
                    if self.peek() == Some(&Token::Caret) {
                        return self
                            .err("malformed exponent: powers of integer literals are not allowed");
                    }
                    coeff = field.mul(coeff, (v % field.characteristic() as u64) as u32);
                }
                Some(Token::Ident(name)) => {
                    let Some(idx) = self.ring.var_index(&name) else {
                        return self.err(format!("unknown variable '{name}'"));
                    };
                    self.at += 1;
                    exps[idx] += self.exponent()?;
                }
                _ => return self.err("expected a coefficient or variable"),
            }
            if self.peek() == Some(&Token::Star) {
                self.at += 1;
            } else {
                break;
            }
        }
        Ok((coeff, Monomial::from_exponents(&exps)))
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let field = *self.ring.field();
        if self.tokens.is_empty() {
            return self.err("empty polynomial");
        }
        let mut terms = Vec::new();
        let mut first = true;
        while self.at < self.tokens.len() {
            let mut negative = false;
            match self.peek() {
                Some(Token::Plus) => self.at += 1,
                Some(Token::Minus) => {
                    negative = true;
                    self.at += 1;
                }
                _ if first => {}
                _ => return self.err("expected '+' or '-' between terms"),
            }
            first = false;
            let (c, m) = self.term()?;
            terms.push((if negative { field.neg(c) } else { c }, m));
        }
        Ok(Polynomial::from_terms(&field, terms))
    }
}

/// Parses `text` into a canonical polynomial of `ring`.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        ring,
        tokens,
        at: 0,
        end: text.len(),
    };
    parser.polynomial()
}
