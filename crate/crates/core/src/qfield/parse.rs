//! Parser for coordinate expressions.
//!
//! ```text
//! expr    := sign? term (('+' | '-') term)*
//! term    := rat ('*' radical)? | radical
//! radical := 'r2' | 'r3' | 'r6'
//! rat     := integer ('/' positive-integer)?
//! ```
//!
//! Whitespace is ignored. The optional leading sign lets negative values
//! round-trip through the canonical renderer.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{QuadNum, Rat};
use crate::Error;

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Parser { chars, pos: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { position: self.offset(), message: message.into() }
    }

    fn integer(&mut self) -> Result<BigInt, Error> {
        let start = self.pos;
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            self.pos = start;
            return Err(self.error("expected integer"));
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn radical(&mut self) -> Result<QuadNum, Error> {
        if self.peek() != Some('r') {
            return Err(self.error("expected radical r2, r3 or r6"));
        }
        self.pos += 1;
        let r = match self.peek() {
            Some('2') => QuadNum::sqrt2(),
            Some('3') => QuadNum::sqrt3(),
            Some('6') => QuadNum::sqrt6(),
            _ => return Err(self.error("expected 2, 3 or 6 after 'r'")),
        };
        self.pos += 1;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Err(self.error("unsupported radical"));
        }
        Ok(r)
    }

    fn term(&mut self) -> Result<QuadNum, Error> {
        match self.peek() {
            Some('r') => self.radical(),
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut den = BigInt::from(1);
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let at = self.offset();
                    den = self.integer()?;
                    if den.is_zero() {
                        return Err(Error::Parse { position: at, message: "zero denominator".into() });
                    }
                }
                let r = QuadNum::from_rat(Rat::from_bigints(num, den).expect("nonzero"));
                if self.peek() == Some('*') {
                    self.pos += 1;
                    Ok(&r * &self.radical()?)
                } else {
                    Ok(r)
                }
            }
            Some(_) => Err(self.error("expected number or radical")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn expr(&mut self) -> Result<QuadNum, Error> {
        let mut negate = false;
        match self.peek() {
            Some('-') => {
                negate = true;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        while let Some(op) = self.peek() {
            self.pos += 1;
            let t = match op {
                '+' => self.term()?,
                '-' => -self.term()?,
                _ => {
                    self.pos -= 1;
                    return Err(self.error(format!("unexpected '{op}'")));
                }
            };
            acc = acc + t;
        }
        Ok(acc)
    }
}

/// Parses a coordinate expression such as `"3/2 + 1/2*r3"`.
pub fn parse(text: &str) -> Result<QuadNum, Error> {
    Parser::new(text).expr()
}
