//! The ordered set `s(X)` of supports.
//!
//! For scattered terms the order type of `s(X)` has a closed form, computed
//! by [`s_of_term`]. Terms with `η` content do not; for them
//! [`dense_profile_check`] verifies the local shape of `s(X)` instead.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

pub use crate::support::{local_contribution, Locus};

use crate::error::{Error, Result};
use crate::order::{Cut, Order, Position};
use crate::support::{enumerate_supports, support_compare, support_literal, Support};
use crate::term::{normalize_term, OrderTerm};

/// The supports of a term laid out in order: blocks of points indexed by a
/// leaf order, and single half-cut supports in between.
#[derive(Debug, Clone)]
enum Layout {
    Points(OrderTerm),
    Half,
    Sum(Vec<Layout>),
    /// One copy of the inner layout per element of the leaf order.
    Copies(Box<Layout>, OrderTerm),
}

fn layout(t: &OrderTerm) -> Result<Layout> {
    use OrderTerm::*;
    Ok(match t {
        Fin(_) => Layout::Points(t.clone()),
        Omega => Layout::Sum(vec![Layout::Points(Omega), Layout::Half]),
        OmegaStar => Layout::Sum(vec![Layout::Half, Layout::Points(OmegaStar)]),
        Zeta => Layout::Sum(vec![Layout::Half, Layout::Points(Zeta), Layout::Half]),
        Eta => return Err(Error::NotClosedForm),
        // seams between summands carry exactly the end halves of the
        // neighbouring summands, so s(a + b) = s(a) + s(b)
        Sum(parts) => Layout::Sum(parts.iter().map(layout).collect::<Result<_>>()?),
        // each outer point becomes a full copy of s(inner), end halves
        // included; each outer half stays a single support
        Prod(inner, outer) => substitute(&layout(outer)?, &layout(inner)?),
    })
}

fn substitute(outer: &Layout, inner: &Layout) -> Layout {
    match outer {
        Layout::Points(leaf) => Layout::Copies(Box::new(inner.clone()), leaf.clone()),
        Layout::Half => Layout::Half,
        Layout::Sum(parts) => Layout::Sum(parts.iter().map(|p| substitute(p, inner)).collect()),
        Layout::Copies(m, leaf) => Layout::Copies(Box::new(substitute(m, inner)), leaf.clone()),
    }
}

fn to_term(l: &Layout) -> OrderTerm {
    match l {
        Layout::Points(t) => t.clone(),
        Layout::Half => OrderTerm::Fin(1),
        Layout::Sum(parts) => OrderTerm::Sum(parts.iter().map(to_term).collect()),
        Layout::Copies(m, leaf) => OrderTerm::prod(to_term(m), leaf.clone()),
    }
}

/// The order type of `s(X)` for a scattered term, normalized.
pub fn s_of_term(t: &OrderTerm) -> Result<OrderTerm> {
    let t = normalize_term(t);
    if t.is_empty_order() {
        return Err(Error::EmptyOrder);
    }
    if t.has_dense_content() {
        return Err(Error::NotClosedForm);
    }
    Ok(normalize_term(&to_term(&layout(&t)?)))
}

/// `s` applied `n ≥ 1` times.
pub fn s_iterate(t: &OrderTerm, n: usize) -> Result<OrderTerm> {
    if n == 0 {
        return Err(Error::OutOfRange("iterate at least once".into()));
    }
    let mut cur = t.clone();
    for _ in 0..n {
        cur = s_of_term(&cur)?;
    }
    Ok(cur)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockCheck {
    pub locus: String,
    pub supports: Vec<String>,
    /// No sampled support lies strictly inside the block.
    pub consecutive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenseProfile {
    pub points: Vec<BlockCheck>,
    pub gaps: Vec<BlockCheck>,
    /// `R:bottom` exists and is below every sampled support; `None` when the
    /// order has a least element.
    pub bottom_end: Option<bool>,
    pub top_end: Option<bool>,
    pub sampled_supports: usize,
}

impl DenseProfile {
    /// Every point is a consecutive 3-block, every gap a consecutive
    /// 2-block, and each unbounded end holds its single support.
    pub fn holds(&self) -> bool {
        self.points
            .iter()
            .all(|b| b.supports.len() == 3 && b.consecutive)
            && self
                .gaps
                .iter()
                .all(|b| b.supports.len() == 2 && b.consecutive)
            && self.bottom_end != Some(false)
            && self.top_end != Some(false)
    }
}

/// Checks the blocks contributed at the given points and gaps against the
/// supports sampled with `budget`.
pub fn dense_profile_check(
    order: &Order,
    points: &[Position],
    gaps: &[Cut],
    budget: usize,
) -> Result<DenseProfile> {
    let mut universe = enumerate_supports(order, budget)?;
    let mut blocks = Vec::new();
    for p in points {
        blocks.push((
            p.to_string(),
            local_contribution(order, &Locus::Elem(p.clone()))?,
            true,
        ));
    }
    for g in gaps {
        if !order.is_gap(g)? {
            return Err(Error::InvalidPosition(format!(
                "`{}` is not a gap",
                order.cut_literal(g)
            )));
        }
        blocks.push((
            order.cut_literal(g),
            local_contribution(order, &Locus::Cut(g.clone()))?,
            false,
        ));
    }
    for (_, b, _) in &blocks {
        universe.extend(b.iter().cloned());
    }
    let cmp = |a: &Support, b: &Support| support_compare(order, a, b).expect("validated supports");
    universe.sort_by(cmp);
    universe.dedup();

    let mut profile = DenseProfile {
        points: Vec::new(),
        gaps: Vec::new(),
        bottom_end: None,
        top_end: None,
        sampled_supports: universe.len(),
    };
    for (locus, block, is_point) in blocks {
        let consecutive = match (block.first(), block.last()) {
            (Some(lo), Some(hi)) => {
                let inside = universe
                    .iter()
                    .filter(|s| cmp(s, lo) == Ordering::Greater && cmp(s, hi) == Ordering::Less)
                    .count();
                inside + 2 == block.len().max(2) || (block.len() == 1 && inside == 0)
            }
            _ => false,
        };
        let check = BlockCheck {
            locus,
            supports: block.iter().map(|s| support_literal(order, s)).collect(),
            consecutive,
        };
        if is_point {
            profile.points.push(check);
        } else {
            profile.gaps.push(check);
        }
    }
    if order.least().is_none() {
        let r = Support::RightHalf(Cut::Bottom);
        profile.bottom_end = Some(universe.first() == Some(&r));
    }
    if order.greatest().is_none() {
        let l = Support::LeftHalf(Cut::Top);
        profile.top_end = Some(universe.last() == Some(&l));
    }
    Ok(profile)
}

/// [`dense_profile_check`] on the sampled two-sided limit points and every
/// sampled gap.
pub fn dense_profile_sampled(order: &Order, budget: usize) -> Result<DenseProfile> {
    let mut points = Vec::new();
    for p in order.sample_elements(budget)? {
        let c = order.classify_position(&p)?;
        if c.is_left_limit && c.is_right_limit {
            points.push(p);
        }
    }
    let mut gaps = Vec::new();
    for c in order.sample_cuts(budget)? {
        if order.is_gap(&c)? {
            gaps.push(c);
        }
    }
    dense_profile_check(order, &points, &gaps, budget)
}
