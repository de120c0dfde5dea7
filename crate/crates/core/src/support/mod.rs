//! Supports of ultrafilters and formal ultrafilter tokens.
//!
//! A principal ultrafilter is supported by a point. A non-principal one
//! concentrates on an unbounded half of a cut: the initial segment `I` when
//! `I` has no greatest element, or the final segment `J` when `J` has no
//! least element. Both halves of one cut may be supports at the same time
//! (at a gap), so a support is stored as a side together with its cut.

mod interval;

use std::cmp::Ordering;

pub use interval::{interval_membership, transform_under_relation, IntervalSet};

use crate::error::{Error, Result, SupportDefect};
use crate::order::{CompletionPos, Cut, Order, Position, TermId};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Support {
    Point(Position),
    /// The initial segment of the cut.
    LeftHalf(Cut),
    /// The final segment of the cut.
    RightHalf(Cut),
}

impl Support {
    pub fn is_point(&self) -> bool {
        matches!(self, Support::Point(_))
    }
}

/// Sort key realizing the natural order of supports: `(sup I, -1)` for a
/// left half, `(x, 0)` for a point, `(inf J, +1)` for a right half, compared
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SupportKey {
    pub pos: CompletionPos,
    pub tag: i8,
}

pub fn validate_support(order: &Order, s: &Support) -> Result<()> {
    order.require_nonempty()?;
    match s {
        Support::Point(p) => order.check_position(p),
        Support::LeftHalf(c) => {
            order.check_cut(c)?;
            if *c == Cut::Bottom {
                Err(Error::InvalidSupport(SupportDefect::EmptySide))
            } else if order.max_below(c)?.is_some() {
                Err(Error::InvalidSupport(SupportDefect::HasGreatest))
            } else {
                Ok(())
            }
        }
        Support::RightHalf(c) => {
            order.check_cut(c)?;
            if *c == Cut::Top {
                Err(Error::InvalidSupport(SupportDefect::EmptySide))
            } else if order.min_above(c)?.is_some() {
                Err(Error::InvalidSupport(SupportDefect::HasLeast))
            } else {
                Ok(())
            }
        }
    }
}

/// Reads `pt:<pos>`, `L:<cut>` or `R:<cut>` and validates the result.
pub fn make_support(order: &Order, literal: &str) -> Result<Support> {
    let literal = literal.trim();
    let s = if let Some(p) = literal.strip_prefix("pt:") {
        Support::Point(order.parse_position(p)?)
    } else if let Some(c) = literal.strip_prefix("L:") {
        Support::LeftHalf(order.parse_cut(c)?)
    } else if let Some(c) = literal.strip_prefix("R:") {
        Support::RightHalf(order.parse_cut(c)?)
    } else {
        return Err(Error::InvalidToken(format!(
            "`{literal}` is not a support literal"
        )));
    };
    validate_support(order, &s)?;
    Ok(s)
}

pub fn support_literal(order: &Order, s: &Support) -> String {
    match s {
        Support::Point(p) => format!("pt:{p}"),
        Support::LeftHalf(c) => format!("L:{}", order.cut_literal(c)),
        Support::RightHalf(c) => format!("R:{}", order.cut_literal(c)),
    }
}

pub fn support_key(order: &Order, s: &Support) -> SupportKey {
    let v = order.view();
    match s {
        Support::Point(p) => SupportKey {
            pos: CompletionPos::Elem(p.clone()),
            tag: 0,
        },
        Support::LeftHalf(c) => SupportKey {
            pos: v.sup_initial(c),
            tag: -1,
        },
        Support::RightHalf(c) => SupportKey {
            pos: v.inf_final(c),
            tag: 1,
        },
    }
}

pub fn compare_keys(order: &Order, a: &SupportKey, b: &SupportKey) -> Ordering {
    order
        .view()
        .cmp_cpos(&a.pos, &b.pos)
        .then(a.tag.cmp(&b.tag))
}

pub fn support_compare(order: &Order, a: &Support, b: &Support) -> Result<Ordering> {
    validate_support(order, a)?;
    validate_support(order, b)?;
    Ok(compare_keys(
        order,
        &support_key(order, a),
        &support_key(order, b),
    ))
}

/// Where supports are attached when assembling `s(X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Locus {
    Elem(Position),
    Cut(Cut),
}

/// Supports attached to one locus, in increasing order.
///
/// An element `p` carries `L:before:p` when it is a limit from below, the
/// point itself, and `R:after:p` when it is a limit from above. A gap
/// carries both of its halves, the two ends carry the unbounded half on
/// that side if there is one. Jumps carry nothing, and so do cuts with an
/// extreme element on one side: their half belongs to that element.
pub fn local_contribution(order: &Order, locus: &Locus) -> Result<Vec<Support>> {
    order.require_nonempty()?;
    let v = order.view();
    match locus {
        Locus::Elem(p) => {
            let class = order.classify_position(p)?;
            let mut out = Vec::with_capacity(3);
            if class.is_left_limit {
                out.push(Support::LeftHalf(v.before(p)));
            }
            out.push(Support::Point(p.clone()));
            if class.is_right_limit {
                out.push(Support::RightHalf(v.after(p)));
            }
            Ok(out)
        }
        Locus::Cut(c) => {
            order.check_cut(c)?;
            Ok(match c {
                Cut::Bottom if v.min_elem().is_none() => vec![Support::RightHalf(Cut::Bottom)],
                Cut::Top if v.max_elem().is_none() => vec![Support::LeftHalf(Cut::Top)],
                Cut::Bottom | Cut::Top => Vec::new(),
                c if v.is_gap(c) => {
                    vec![Support::LeftHalf(c.clone()), Support::RightHalf(c.clone())]
                }
                _ => Vec::new(),
            })
        }
    }
}

/// A deterministic, sorted, duplicate-free sample of `s(X)`: the local
/// contributions of the sampled elements, of the sampled cuts, and of both
/// ends.
pub fn enumerate_supports(order: &Order, budget: usize) -> Result<Vec<Support>> {
    order.require_nonempty()?;
    let mut out = local_contribution(order, &Locus::Cut(Cut::Bottom))?;
    for p in order.sample_elements(budget)? {
        out.extend(local_contribution(order, &Locus::Elem(p))?);
    }
    for c in order.sample_cuts(budget)? {
        // besides gaps, any cut next to a limit element has a valid half
        for s in [Support::LeftHalf(c.clone()), Support::RightHalf(c)] {
            if validate_support(order, &s).is_ok() {
                out.push(s);
            }
        }
    }
    out.extend(local_contribution(order, &Locus::Cut(Cut::Top))?);
    let mut keyed: Vec<(SupportKey, Support)> = out
        .into_iter()
        .map(|s| (support_key(order, &s), s))
        .collect();
    keyed.sort_by(|a, b| compare_keys(order, &a.0, &b.0));
    keyed.dedup_by(|a, b| a.1 == b.1);
    Ok(keyed.into_iter().map(|(_, s)| s).collect())
}

/// A formal ultrafilter: a support plus an identity label.
///
/// A point supports exactly one ultrafilter, so principal tokens carry the
/// empty label. Tokens on a half-cut need a nonempty label made of ASCII
/// letters, digits and `_`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UltraToken {
    support: Support,
    label: String,
    term: TermId,
}

fn valid_label(l: &str) -> bool {
    !l.is_empty() && l.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl UltraToken {
    pub fn principal(order: &Order, p: Position) -> Result<Self> {
        order.check_position(&p)?;
        Ok(UltraToken {
            support: Support::Point(p),
            label: String::new(),
            term: order.id(),
        })
    }

    pub fn new(order: &Order, support: Support, label: &str) -> Result<Self> {
        validate_support(order, &support)?;
        match (&support, label) {
            (Support::Point(_), "") => {}
            (Support::Point(_), _) => {
                return Err(Error::InvalidToken(
                    "a principal token takes no label".into(),
                ));
            }
            (_, l) if !valid_label(l) => {
                return Err(Error::InvalidToken(format!(
                    "`{l}` is not a valid label for a half-cut token"
                )));
            }
            _ => {}
        }
        Ok(UltraToken {
            support,
            label: label.to_string(),
            term: order.id(),
        })
    }

    /// Reads `<support>` for principal tokens and `<support>#<label>`
    /// otherwise.
    pub fn parse(order: &Order, literal: &str) -> Result<Self> {
        let literal = literal.trim();
        let (s, label) = match literal.rsplit_once('#') {
            Some((s, l)) => {
                if l.is_empty() {
                    return Err(Error::InvalidToken(format!("empty label in `{literal}`")));
                }
                (s, l)
            }
            None => (literal, ""),
        };
        let support = make_support(order, s)?;
        if !support.is_point() && label.is_empty() {
            return Err(Error::InvalidToken(format!("`{literal}` needs a `#label`")));
        }
        UltraToken::new(order, support, label)
    }

    pub fn support(&self) -> &Support {
        &self.support
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn term(&self) -> TermId {
        self.term
    }

    pub fn is_principal(&self) -> bool {
        self.support.is_point()
    }

    pub fn literal(&self, order: &Order) -> String {
        let s = support_literal(order, &self.support);
        if self.label.is_empty() {
            s
        } else {
            format!("{s}#{}", self.label)
        }
    }

    pub(crate) fn check_term(&self, order: &Order) -> Result<()> {
        if self.term == order.id() {
            Ok(())
        } else {
            Err(Error::MixedTerms)
        }
    }
}

/// `per_support` tokens on every half-cut support (labels `a`, `b`, …) and
/// the single principal token on every point.
pub fn tokens_for(
    order: &Order,
    supports: &[Support],
    per_support: usize,
) -> Result<Vec<UltraToken>> {
    let mut out = Vec::new();
    for s in supports {
        if s.is_point() {
            out.push(UltraToken::new(order, s.clone(), "")?);
        } else {
            for i in 0..per_support {
                out.push(UltraToken::new(order, s.clone(), &token_label(i))?);
            }
        }
    }
    Ok(out)
}

/// `a`, `b`, …, `z`, `a1`, `b1`, …
pub fn token_label(i: usize) -> String {
    let c = (b'a' + (i % 26) as u8) as char;
    if i < 26 {
        c.to_string()
    } else {
        format!("{c}{}", i / 26)
    }
}

#[cfg(test)]
mod tests;
