use super::OrderTerm;
use crate::error::{Error, Result};

/// Parses `t ::= <nat> | w | w* | z | e | t + t | t * t | (t)`.
///
/// `*` binds tighter than `+` and associates to the left. A `*` written
/// directly after `w` is the reverse order `w*` unless the next non-blank
/// character starts another factor (`w*2` is `w * 2`, `w* + 1` is `ω* + 1`).
/// No normalization is applied: `a + b + c` yields one three-part sum and
/// `(a + b) + c` a nested one.
pub fn parse_order_term(text: &str) -> Result<OrderTerm> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let t = p.sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(t)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, message: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn starts_factor(&self, at: usize) -> bool {
        let mut i = at;
        while i < self.src.len() && self.src[i].is_ascii_whitespace() {
            i += 1;
        }
        matches!(self.src.get(i), Some(c) if c.is_ascii_digit() || matches!(c, b'w' | b'z' | b'e' | b'('))
    }

    fn sum(&mut self) -> Result<OrderTerm> {
        let mut parts = vec![self.product()?];
        while self.peek() == Some(b'+') {
            self.pos += 1;
            parts.push(self.product()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            OrderTerm::Sum(parts)
        })
    }

    fn product(&mut self) -> Result<OrderTerm> {
        let mut acc = self.atom()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.atom()?;
            acc = OrderTerm::prod(acc, rhs);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<OrderTerm> {
        match self.peek() {
            None => Err(self.err("expected an order term")),
            Some(b'(') => {
                self.pos += 1;
                let t = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(t)
            }
            Some(b'w') => {
                self.pos += 1;
                if self.src.get(self.pos) == Some(&b'*') && !self.starts_factor(self.pos + 1) {
                    self.pos += 1;
                    Ok(OrderTerm::OmegaStar)
                } else {
                    Ok(OrderTerm::Omega)
                }
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(OrderTerm::Zeta)
            }
            Some(b'e') => {
                self.pos += 1;
                Ok(OrderTerm::Eta)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                digits
                    .parse()
                    .map(OrderTerm::Fin)
                    .map_err(|_| Error::Syntax {
                        offset: start,
                        message: "number too large".into(),
                    })
            }
            Some(_) => Err(self.err("expected an order term")),
        }
    }
}
