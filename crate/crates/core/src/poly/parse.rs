//! Text grammar for polynomials.
//!
//! ```text
//! poly   ::= ["+" | "-"] term (("+" | "-") term)*
//! term   ::= factor ("*" factor)*
//! factor ::= int ["/" posint] | var ["^" exp]
//! ```
//! Whitespace between tokens is ignored.

use alloc::format;
use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Coeff, Monomial, Polynomial};
use crate::error::{Error, Result};

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.pos, message: message.into() })
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(core::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn ident(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_' || self.s[self.pos] == b'\'')
        {
            self.pos += 1;
        }
        core::str::from_utf8(&self.s[start..self.pos]).unwrap()
    }
}

/// Parses `text` over the variables `names`.
pub fn parse_polynomial(text: &str, names: &[String]) -> Result<Polynomial> {
    let n = names.len();
    let mut c = Cursor { s: text.as_bytes(), pos: 0 };
    let mut out = Polynomial::zero(n);
    let mut first = true;
    loop {
        let sign = match c.peek() {
            Some(b'+') => {
                c.pos += 1;
                Coeff::one()
            }
            Some(b'-') => {
                c.pos += 1;
                -Coeff::one()
            }
            None if first => return c.err("empty polynomial"),
            None => break,
            Some(_) if first => Coeff::one(),
            Some(ch) => return c.err(format!("expected '+' or '-', found '{}'", ch as char)),
        };
        first = false;
        let (m, coef) = parse_term(&mut c, names)?;
        out.add_term(m, sign * coef);
        if c.peek().is_none() {
            break;
        }
    }
    Ok(out)
}

fn parse_term(c: &mut Cursor<'_>, names: &[String]) -> Result<(Monomial, Coeff)> {
    let n = names.len();
    let mut exps = alloc::vec![0u32; n];
    let mut coef = Coeff::one();
    loop {
        match c.peek() {
            Some(ch) if ch.is_ascii_digit() => {
                let num: BigInt = c.digits()?.parse().unwrap();
                let mut q = Coeff::from_integer(num);
                if c.peek() == Some(b'/') {
                    c.pos += 1;
                    let at = c.pos;
                    let den: BigInt = c.digits()?.parse().unwrap();
                    if den.is_zero() {
                        return Err(Error::Parse { position: at, message: "zero denominator".to_string() });
                    }
                    q /= Coeff::from_integer(den);
                }
                coef *= q;
            }
            Some(ch) if ch.is_ascii_alphabetic() || ch == b'_' => {
                let at = c.pos;
                let name = c.ident();
                let Some(i) = names.iter().position(|v| v == name) else {
                    return Err(Error::Parse { position: at, message: format!("unknown variable '{name}'") });
                };
                let mut e: u32 = 1;
                if c.peek() == Some(b'^') {
                    c.pos += 1;
                    let at = c.pos;
                    e = c
                        .digits()?
                        .parse()
                        .map_err(|_| Error::Parse { position: at, message: "exponent out of range".to_string() })?;
                }
                exps[i] = exps[i].checked_add(e).ok_or(Error::ExponentOverflow)?;
            }
            Some(ch) => return c.err(format!("expected a coefficient or variable, found '{}'", ch as char)),
            None => return c.err("unexpected end of input"),
        }
        if c.peek() == Some(b'*') {
            c.pos += 1;
        } else {
            break;
        }
    }
    Ok((Monomial(exps), coef))
}
