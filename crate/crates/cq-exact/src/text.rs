//! Text form of scalars: a small expression grammar covering literals like
//! `(q^2+1+q^-2)/(q-q^-1)`, `1/2+3/4*I`, `-I*q^3`.

use crate::field::FieldElem;
use crate::gaussrat::GaussRat;
use crate::{ExactError, Result};

pub fn parse_field(input: &str) -> Result<FieldElem> {
    let mut p = Parser::new(input);
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(ExactError::Parse {
            pos: p.pos,
            msg: "trailing input".into(),
        });
    }
    Ok(e)
}

pub fn parse_gauss(input: &str) -> Result<GaussRat> {
    let e = parse_field(input)?;
    let den_is_one = e.den() == &crate::laurent::Laurent::one();
    let constant = e.num().terms().all(|(k, _)| *k == 0);
    if den_is_one && constant {
        Ok(e.num().coeff(0))
    } else {
        Err(ExactError::Parse {
            pos: 0,
            msg: "expected a constant (no q)".into(),
        })
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(ExactError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<FieldElem> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.bump();
                -&self.term()?
            }
            Some(b'+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<FieldElem> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.bump();
                    let d = self.factor()?;
                    if d.is_zero() {
                        return Err(ExactError::DivisionByZero);
                    }
                    acc = &acc / &d;
                }
                // Implicit multiplication for juxtapositions like `2q` or `3I`.
                Some(c) if c == b'q' || c == b'I' || c == b'i' || c == b'(' => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<FieldElem> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let mut sign = 1i32;
            if self.peek() == Some(b'-') {
                self.bump();
                sign = -1;
            }
            let n = self.integer()? as i32;
            Ok(base.pow(sign * n))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<FieldElem> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let e = self.expr()?;
                if self.bump() != Some(b')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(b'q') => {
                self.bump();
                Ok(FieldElem::q())
            }
            Some(b'I') | Some(b'i') => {
                self.bump();
                Ok(FieldElem::i())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(FieldElem::from_int(n))
            }
            _ => self.err("expected a factor"),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<i64>()
            .map_err(|_| ExactError::Parse {
                pos: start,
                msg: "integer too large".into(),
            })
    }
}
