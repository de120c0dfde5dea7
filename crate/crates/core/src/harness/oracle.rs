//! Definitional evaluation of the extended relations and operations.
//!
//! Everything here goes through set membership only: interval sets, the
//! transform `{x : {y : x R y} ∈ v}` and [`interval_membership`]. Nothing
//! calls `support_compare`, `ext_rel`, `ext_min` or `ext_max`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::order::{CompletionPos, Cut, Order, Position};
use crate::relations::{check_pair, Rel};
use crate::skew::SkewOps;
use crate::support::{
    interval_membership, transform_under_relation, IntervalSet, Support, UltraToken,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MinMax {
    Min,
    Max,
}

impl MinMax {
    pub fn name(self) -> &'static str {
        match self {
            MinMax::Min => "min",
            MinMax::Max => "max",
        }
    }
}

impl std::str::FromStr for MinMax {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(MinMax::Min),
            "max" => Ok(MinMax::Max),
            _ => Err(crate::Error::Config(format!("unknown operation `{s}`"))),
        }
    }
}

/// `u R̃ v` as `{x : {y : x R y} ∈ v} ∈ u`.
pub fn oracle_ext_rel(order: &Order, rel: Rel, u: &UltraToken, v: &UltraToken) -> Result<bool> {
    check_pair(order, u, v)?;
    let a = transform_under_relation(order, rel, v)?;
    interval_membership(order, &a, u)
}

/// `{y : op(x, y) ∈ S}`.
fn preimage(order: &Order, op: MinMax, x: &Position, s: &IntervalSet) -> Result<IntervalSet> {
    let at = CompletionPos::Elem(x.clone());
    // y on the far side of x gives op(x, y) = x; on the near side, y itself
    let (far, near) = match op {
        MinMax::Min => (Rel::Ge, Rel::Lt),
        MinMax::Max => (Rel::Le, Rel::Gt),
    };
    let own = if s.contains(order, x)? {
        IntervalSet::from_segment(order, far, &at)?
    } else {
        IntervalSet::empty(order)
    };
    let rest = s.intersect(&IntervalSet::from_segment(order, near, &at)?, order)?;
    own.union(&rest, order)
}

fn support_cuts(order: &Order, s: &Support) -> Result<Vec<Cut>> {
    Ok(match s {
        Support::Point(y) => vec![order.cut_before(y)?, order.cut_after(y)?],
        Support::LeftHalf(c) | Support::RightHalf(c) => vec![c.clone()],
    })
}

/// `S ∈ op̃(u, v)`, i.e. `{x : {y : op(x, y) ∈ S} ∈ v} ∈ u`.
pub fn oracle_minmax_membership(
    order: &Order,
    op: MinMax,
    u: &UltraToken,
    v: &UltraToken,
    s: &IntervalSet,
) -> Result<bool> {
    check_pair(order, u, v)?;
    interval_membership(order, &oracle_minmax_set(order, op, v, s)?, u)
}

/// `{x : {y : op(x, y) ∈ S} ∈ v}`.
///
/// The condition on `x` can only change where `x` crosses a boundary of `S`
/// or the support of `v`, so it is evaluated once per region between
/// consecutive boundaries.
pub fn oracle_minmax_set(
    order: &Order,
    op: MinMax,
    v: &UltraToken,
    s: &IntervalSet,
) -> Result<IntervalSet> {
    v.check_term(order)?;
    let mut cuts = vec![Cut::Bottom, Cut::Top];
    for (lo, hi) in s.intervals() {
        cuts.push(lo.clone());
        cuts.push(hi.clone());
    }
    cuts.extend(support_cuts(order, v.support())?);
    let mut err = None;
    cuts.sort_by(|a, b| {
        order.compare_cuts(a, b).unwrap_or_else(|e| {
            err = Some(e);
            Ordering::Equal
        })
    });
    if let Some(e) = err {
        return Err(e);
    }
    cuts.dedup();

    let view = order.view();
    let mut kept = Vec::new();
    for w in cuts.windows(2) {
        let Some(x) = view.witness(&w[0], &w[1]) else {
            continue;
        };
        if interval_membership(order, &preimage(order, op, &x, s)?, v)? {
            kept.push((w[0].clone(), w[1].clone()));
        }
    }
    IntervalSet::from_intervals(order, kept)
}

/// `miñ` and `max̃` selected by [`oracle_ext_rel`] in place of the closed
/// form of `≤̃`.
pub struct OracleOps<'a>(pub &'a Order);

impl OracleOps<'_> {
    fn picks_left(&self, u: &UltraToken, v: &UltraToken) -> Result<bool> {
        Ok(u == v || oracle_ext_rel(self.0, Rel::Le, u, v)?)
    }
}

impl SkewOps for OracleOps<'_> {
    fn min(&self, u: &UltraToken, v: &UltraToken) -> Result<UltraToken> {
        Ok(if self.picks_left(u, v)? {
            u.clone()
        } else {
            v.clone()
        })
    }

    fn max(&self, u: &UltraToken, v: &UltraToken) -> Result<UltraToken> {
        Ok(if self.picks_left(u, v)? {
            v.clone()
        } else {
            u.clone()
        })
    }
}
