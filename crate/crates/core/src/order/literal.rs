//! Text forms of positions, cuts and completion points.
//!
//! Gap paths follow the term: a registered gap of `η` by name, `i|j` for the
//! seam between summands `i` and `j = i+1`, `i.path` inside summand `i`,
//! `(path,pos)` inside the copy of the inner factor at outer element `pos`,
//! and `[cut]` for a cut of the outer factor between whole copies.

use super::{CompletionPos, Cut, Position, View};
use crate::error::{Error, Result};
use crate::gap::Rational;
use crate::term::OrderTerm;

/// Splits at the first `sep` that is not nested in brackets.
pub(crate) fn split_top(s: &str, sep: char) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => return Some((&s[..i], &s[i + c.len_utf8()..])),
            _ => {}
        }
    }
    None
}

fn strip_wrapping(s: &str, open: char, close: char) -> Option<&str> {
    let inner = s.strip_prefix(open)?.strip_suffix(close)?;
    // reject "(a)(b)"-like inputs whose outer brackets do not match
    let mut depth = 0i32;
    for c in inner.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            _ => {}
        }
    }
    (depth == 0).then_some(inner)
}

impl View<'_> {
    fn bad_pos(&self, s: &str) -> Error {
        Error::InvalidPosition(format!("cannot read `{s}` as an element of {}", self.term))
    }

    fn bad_gap(&self, s: &str) -> Error {
        Error::InvalidPosition(format!("`{s}` does not name a gap of {}", self.term))
    }

    pub(crate) fn parse_pos(&self, s: &str) -> Result<Position> {
        let s = s.trim();
        let p = match self.term {
            OrderTerm::Fin(_) | OrderTerm::Omega => s.parse().ok().map(Position::Nat),
            OrderTerm::OmegaStar => s
                .strip_suffix('*')
                .and_then(|k| k.parse().ok())
                .map(Position::NatStar),
            OrderTerm::Zeta => s.parse().ok().map(Position::Int),
            OrderTerm::Eta => parse_rational(s).map(Position::Rat),
            OrderTerm::Sum(parts) => {
                let (i, rest) = s.split_once('.').ok_or_else(|| self.bad_pos(s))?;
                let i: usize = i.parse().map_err(|_| self.bad_pos(s))?;
                let part = parts.get(i).ok_or_else(|| self.bad_pos(s))?;
                Some(Position::part(
                    i,
                    View::new(part, self.reg).parse_pos(rest)?,
                ))
            }
            OrderTerm::Prod(a, b) => {
                let inner = strip_wrapping(s, '(', ')').ok_or_else(|| self.bad_pos(s))?;
                let (x, y) = split_top(inner, ',').ok_or_else(|| self.bad_pos(s))?;
                Some(Position::pair(
                    View::new(a, self.reg).parse_pos(x)?,
                    View::new(b, self.reg).parse_pos(y)?,
                ))
            }
        };
        let p = p.ok_or_else(|| self.bad_pos(s))?;
        if self.valid_pos(&p) {
            Ok(p)
        } else {
            Err(Error::InvalidPosition(format!(
                "`{s}` is not an element of {}",
                self.term
            )))
        }
    }

    /// Parses a gap path into its cut, checking that the cut is a gap.
    pub(crate) fn parse_gap_path(&self, s: &str) -> Result<Cut> {
        let s = s.trim();
        let cut = match self.term {
            OrderTerm::Eta => self
                .reg
                .get(s)
                .map(|g| Cut::Named(g.clone()))
                .ok_or_else(|| Error::UnknownGap(s.to_string()))?,
            OrderTerm::Sum(parts) => {
                if let Some((i, j)) = s.split_once('|').filter(|(i, _)| !i.contains('.')) {
                    let (i, j): (usize, usize) = match (i.trim().parse(), j.trim().parse()) {
                        (Ok(i), Ok(j)) => (i, j),
                        _ => return Err(self.bad_gap(s)),
                    };
                    if j != i + 1 || j >= parts.len() {
                        return Err(self.bad_gap(s));
                    }
                    Cut::InPart(j, Box::new(Cut::Bottom))
                } else {
                    let (i, rest) = s.split_once('.').ok_or_else(|| self.bad_gap(s))?;
                    let i: usize = i.parse().map_err(|_| self.bad_gap(s))?;
                    let part = parts.get(i).ok_or_else(|| self.bad_gap(s))?;
                    let local = View::new(part, self.reg).parse_gap_path(rest)?;
                    self.lift_part_cut(i, local)
                }
            }
            OrderTerm::Prod(a, b) => {
                if let Some(inner) = strip_wrapping(s, '[', ']') {
                    let oc = View::new(b, self.reg).parse_cut(inner)?;
                    self.lift_outer_cut(oc)
                } else {
                    let inner = strip_wrapping(s, '(', ')').ok_or_else(|| self.bad_gap(s))?;
                    let (path, pos) = split_top(inner, ',').ok_or_else(|| self.bad_gap(s))?;
                    let ic = View::new(a, self.reg).parse_gap_path(path)?;
                    let po = View::new(b, self.reg).parse_pos(pos)?;
                    self.lift_copy_cut(&po, ic)
                }
            }
            _ => return Err(self.bad_gap(s)),
        };
        if self.valid_cut(&cut) && self.is_gap(&cut) {
            Ok(cut)
        } else {
            Err(self.bad_gap(s))
        }
    }

    pub(crate) fn parse_cpos(&self, s: &str) -> Result<CompletionPos> {
        let s = s.trim();
        match s {
            "bottom" => return Ok(CompletionPos::Bottom),
            "top" => return Ok(CompletionPos::Top),
            _ => {}
        }
        if let Some(p) = s.strip_prefix("elem:") {
            return self.parse_pos(p).map(CompletionPos::Elem);
        }
        if let Some(path) = s
            .strip_prefix("gap:")
            .or_else(|| s.strip_prefix("structgap:"))
        {
            return self.parse_gap_path(path).map(CompletionPos::Gap);
        }
        Err(Error::InvalidPosition(format!(
            "cannot read `{s}` as a completion point"
        )))
    }

    pub(crate) fn parse_cut(&self, s: &str) -> Result<Cut> {
        let s = s.trim();
        match s {
            "bottom" => return Ok(Cut::Bottom),
            "top" => return Ok(Cut::Top),
            _ => {}
        }
        if let Some(p) = s.strip_prefix("before:") {
            return Ok(self.before(&self.parse_pos(p)?));
        }
        if let Some(p) = s.strip_prefix("after:") {
            return Ok(self.after(&self.parse_pos(p)?));
        }
        if let Some(g) = s.strip_prefix("at:") {
            return match self.parse_cpos(g)? {
                CompletionPos::Gap(c) => Ok(c),
                _ => Err(Error::InvalidPosition(format!("`{g}` is not a gap"))),
            };
        }
        Err(Error::InvalidPosition(format!(
            "cannot read `{s}` as a cut"
        )))
    }

    fn gap_path(&self, c: &Cut) -> String {
        match (self.term, c) {
            (_, Cut::Named(g)) => g.name().to_string(),
            (OrderTerm::Sum(_), Cut::InPart(i, l)) if **l == Cut::Bottom => {
                format!("{}|{}", i - 1, i)
            }
            (OrderTerm::Sum(parts), Cut::InPart(i, l)) => {
                format!("{i}.{}", View::new(&parts[*i], self.reg).gap_path(l))
            }
            (OrderTerm::Prod(a, _), Cut::InCopy(ic, po)) => {
                format!("({},{po})", View::new(a, self.reg).gap_path(ic))
            }
            (OrderTerm::Prod(_, b), Cut::Between(oc)) => {
                format!("[{}]", View::new(b, self.reg).cut_literal(oc))
            }
            _ => format!("{c:?}"),
        }
    }

    pub(crate) fn cpos_literal(&self, c: &CompletionPos) -> String {
        match c {
            CompletionPos::Bottom => "bottom".into(),
            CompletionPos::Top => "top".into(),
            CompletionPos::Elem(p) => format!("elem:{p}"),
            CompletionPos::Gap(Cut::Named(g)) => format!("gap:{}", g.name()),
            CompletionPos::Gap(c) => format!("structgap:{}", self.gap_path(c)),
        }
    }

    pub(crate) fn cut_literal(&self, c: &Cut) -> String {
        match c {
            Cut::Bottom => "bottom".into(),
            Cut::Top => "top".into(),
            _ => {
                if let Some(p) = self.max_below(c) {
                    format!("after:{p}")
                } else if let Some(q) = self.min_above(c) {
                    format!("before:{q}")
                } else {
                    format!("at:{}", self.cpos_literal(&CompletionPos::Gap(c.clone())))
                }
            }
        }
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let (n, d): (i128, i128) = (n.trim().parse().ok()?, d.trim().parse().ok()?);
            (d != 0).then(|| Rational::new(n, d))
        }
        None => s.parse().ok().map(Rational::from_integer),
    }
}
