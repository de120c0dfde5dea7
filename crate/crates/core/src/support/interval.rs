use std::cmp::Ordering;

use super::{Support, UltraToken};
use crate::error::{Error, Result};
use crate::order::{CompletionPos, Cut, Order, Position, TermId, View};
use crate::relations::Rel;

/// A finite union of intervals of an order.
///
/// Each interval `(lo, hi)` is the set of elements above the cut `lo` and
/// below the cut `hi`. Since cuts are canonical and `lo < hi` exactly when
/// some element lies between them, the list kept here (nonempty intervals,
/// sorted, with `hi` of one strictly below `lo` of the next) is unique for
/// each set. Open and closed ends at a gap collapse to the same cut.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalSet {
    term: TermId,
    intervals: Vec<(Cut, Cut)>,
}

impl IntervalSet {
    pub fn empty(order: &Order) -> Self {
        IntervalSet {
            term: order.id(),
            intervals: Vec::new(),
        }
    }

    pub fn full(order: &Order) -> Self {
        IntervalSet {
            term: order.id(),
            intervals: vec![(Cut::Bottom, Cut::Top)],
        }
    }

    pub fn from_intervals(
        order: &Order,
        intervals: impl IntoIterator<Item = (Cut, Cut)>,
    ) -> Result<Self> {
        order.require_nonempty()?;
        let mut v = Vec::new();
        for (lo, hi) in intervals {
            order.check_cut(&lo)?;
            order.check_cut(&hi)?;
            v.push((lo, hi));
        }
        Ok(IntervalSet {
            term: order.id(),
            intervals: canonical(order.view(), v),
        })
    }

    /// `X_{<a}`, `X_{≤a}`, `X_{>a}` or `X_{≥a}` for a completion point `a`.
    pub fn from_segment(order: &Order, rel: Rel, bound: &CompletionPos) -> Result<Self> {
        order.check_cpos(bound)?;
        let v = order.view();
        let iv = match rel {
            Rel::Lt => (Cut::Bottom, v.cut_below(bound)),
            Rel::Le => (Cut::Bottom, v.cut_above(bound)),
            Rel::Gt => (v.cut_above(bound), Cut::Top),
            Rel::Ge => (v.cut_below(bound), Cut::Top),
        };
        Ok(IntervalSet {
            term: order.id(),
            intervals: canonical(v, vec![iv]),
        })
    }

    pub fn term(&self) -> TermId {
        self.term
    }

    pub fn intervals(&self) -> &[(Cut, Cut)] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    fn check(&self, order: &Order) -> Result<()> {
        if self.term == order.id() {
            Ok(())
        } else {
            Err(Error::MixedTerms)
        }
    }

    pub fn complement(&self, order: &Order) -> Result<Self> {
        self.check(order)?;
        let mut out = Vec::with_capacity(self.intervals.len() + 1);
        let mut prev = Cut::Bottom;
        for (lo, hi) in &self.intervals {
            out.push((prev, lo.clone()));
            prev = hi.clone();
        }
        out.push((prev, Cut::Top));
        Ok(IntervalSet {
            term: self.term,
            intervals: canonical(order.view(), out),
        })
    }

    pub fn union(&self, other: &Self, order: &Order) -> Result<Self> {
        self.check(order)?;
        other.check(order)?;
        let all = self
            .intervals
            .iter()
            .chain(&other.intervals)
            .cloned()
            .collect();
        Ok(IntervalSet {
            term: self.term,
            intervals: canonical(order.view(), all),
        })
    }

    pub fn intersect(&self, other: &Self, order: &Order) -> Result<Self> {
        self.check(order)?;
        other.check(order)?;
        let v = order.view();
        let mut out = Vec::new();
        for (alo, ahi) in &self.intervals {
            for (blo, bhi) in &other.intervals {
                let lo = if v.cmp_cut(alo, blo) == Ordering::Less {
                    blo
                } else {
                    alo
                };
                let hi = if v.cmp_cut(ahi, bhi) == Ordering::Less {
                    ahi
                } else {
                    bhi
                };
                out.push((lo.clone(), hi.clone()));
            }
        }
        Ok(IntervalSet {
            term: self.term,
            intervals: canonical(v, out),
        })
    }

    pub fn contains(&self, order: &Order, x: &Position) -> Result<bool> {
        self.check(order)?;
        order.check_position(x)?;
        let v = order.view();
        Ok(self.intervals.iter().any(|(lo, hi)| {
            v.cmp_pos_cut(x, lo) == Ordering::Greater && v.cmp_pos_cut(x, hi) == Ordering::Less
        }))
    }

    /// Readable form, e.g. `(bottom, after:3) ∪ (after:7, top)`, or `∅`.
    pub fn describe(&self, order: &Order) -> String {
        if self.intervals.is_empty() {
            return "∅".into();
        }
        self.intervals
            .iter()
            .map(|(lo, hi)| format!("({}, {})", order.cut_literal(lo), order.cut_literal(hi)))
            .collect::<Vec<_>>()
            .join(" ∪ ")
    }
}

fn canonical(v: View<'_>, mut ivs: Vec<(Cut, Cut)>) -> Vec<(Cut, Cut)> {
    ivs.retain(|(lo, hi)| v.cmp_cut(lo, hi) == Ordering::Less);
    ivs.sort_by(|a, b| v.cmp_cut(&a.0, &b.0));
    let mut out: Vec<(Cut, Cut)> = Vec::with_capacity(ivs.len());
    for (lo, hi) in ivs {
        if let Some(last) = out.last_mut() {
            // touching or overlapping: no element separates them
            if v.cmp_cut(&lo, &last.1) != Ordering::Greater {
                if v.cmp_cut(&hi, &last.1) == Ordering::Greater {
                    last.1 = hi;
                }
                continue;
            }
        }
        out.push((lo, hi));
    }
    out
}

/// Decides `S ∈ u` from the definition of the support.
///
/// A principal token contains the sets holding its point. A token on the
/// left half `I` of a cut `c` contains exactly the sets that include a final
/// segment of `I`; for a union of intervals this means some interval starts
/// strictly inside `I` and reaches `c`. Right halves are dual. Both tests
/// are phrased as witness queries for elements between cuts.
pub fn interval_membership(order: &Order, s: &IntervalSet, u: &UltraToken) -> Result<bool> {
    s.check(order)?;
    u.check_term(order)?;
    let v = order.view();
    let between = |a: &Cut, b: &Cut| v.witness(a, b).is_some();
    Ok(match u.support() {
        Support::Point(x) => s.contains(order, x)?,
        Support::LeftHalf(c) => s
            .intervals
            .iter()
            .any(|(lo, hi)| between(lo, c) && !between(hi, c)),
        Support::RightHalf(c) => s
            .intervals
            .iter()
            .any(|(lo, hi)| between(c, hi) && !between(c, lo)),
    })
}

fn segment_from(order: &Order, rel: Rel, x: &Position) -> Result<IntervalSet> {
    // {y : x rel y}
    let flipped = match rel {
        Rel::Lt => Rel::Gt,
        Rel::Le => Rel::Ge,
        Rel::Gt => Rel::Lt,
        Rel::Ge => Rel::Le,
    };
    IntervalSet::from_segment(order, flipped, &CompletionPos::Elem(x.clone()))
}

/// `{x : {y : x rel y} ∈ v}`.
///
/// The condition on `x` can only change where `x` crosses the support of
/// `v`, so the order is split into the regions below, at and above the
/// support, the condition is evaluated by [`interval_membership`] at a
/// witness element of each region, and the regions where it holds are
/// joined.
pub fn transform_under_relation(order: &Order, rel: Rel, v: &UltraToken) -> Result<IntervalSet> {
    v.check_term(order)?;
    let view = order.view();
    let regions: Vec<(Cut, Cut)> = match v.support() {
        Support::Point(y) => {
            let (b, a) = (view.before(y), view.after(y));
            vec![(Cut::Bottom, b.clone()), (b, a.clone()), (a, Cut::Top)]
        }
        Support::LeftHalf(c) | Support::RightHalf(c) => {
            vec![(Cut::Bottom, c.clone()), (c.clone(), Cut::Top)]
        }
    };
    let mut kept = Vec::new();
    for (lo, hi) in regions {
        let Some(x) = view.witness(&lo, &hi) else {
            continue;
        };
        if interval_membership(order, &segment_from(order, rel, &x)?, v)? {
            kept.push((lo, hi));
        }
    }
    IntervalSet::from_intervals(order, kept)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(o: &Order, rel: Rel, lit: &str) -> IntervalSet {
        IntervalSet::from_segment(o, rel, &o.parse_cpos(lit).unwrap()).unwrap()
    }

    #[test]
    fn algebra_examples() {
        let w = Order::parse("w").unwrap();
        assert_eq!(
            seg(&w, Rel::Lt, "elem:5").complement(&w).unwrap(),
            seg(&w, Rel::Ge, "elem:5")
        );

        let z = Order::parse("z").unwrap();
        let s = seg(&z, Rel::Lt, "elem:2")
            .union(&seg(&z, Rel::Gt, "elem:7"), &z)
            .unwrap();
        assert_eq!(
            s.intersect(&seg(&z, Rel::Lt, "elem:3"), &z).unwrap(),
            seg(&z, Rel::Lt, "elem:2")
        );

        let e = Order::parse("e").unwrap();
        assert_eq!(seg(&e, Rel::Ge, "gap:sqrt2"), seg(&e, Rel::Gt, "gap:sqrt2"));
        assert!(seg(&e, Rel::Ge, "gap:sqrt2")
            .contains(&e, &Position::rat(3, 2))
            .unwrap());
        assert!(!seg(&e, Rel::Ge, "gap:sqrt2")
            .contains(&e, &Position::rat(7, 5))
            .unwrap());
    }

    #[test]
    fn adjacent_intervals_merge() {
        let w = Order::parse("w").unwrap();
        let a = seg(&w, Rel::Le, "elem:3");
        let b = seg(&w, Rel::Ge, "elem:4");
        assert_eq!(a.union(&b, &w).unwrap(), IntervalSet::full(&w));
        assert!(a.intersect(&b, &w).unwrap().is_empty());
        assert_eq!(
            IntervalSet::full(&w).complement(&w).unwrap(),
            IntervalSet::empty(&w)
        );
    }

    #[test]
    fn membership_examples() {
        let w = Order::parse("w").unwrap();
        let u = UltraToken::parse(&w, "L:top#a").unwrap();
        assert!(interval_membership(&w, &seg(&w, Rel::Gt, "elem:9"), &u).unwrap());
        assert!(!interval_membership(&w, &seg(&w, Rel::Lt, "elem:9"), &u).unwrap());

        let e = Order::parse("e").unwrap();
        let u = UltraToken::parse(&e, "R:at:gap:sqrt2#a").unwrap();
        assert!(interval_membership(&e, &seg(&e, Rel::Le, "elem:3/2"), &u).unwrap());
        assert!(!interval_membership(&e, &seg(&e, Rel::Lt, "gap:sqrt2"), &u).unwrap());
    }

    #[test]
    fn transform_examples() {
        let w = Order::parse("w").unwrap();
        let y = UltraToken::parse(&w, "pt:4").unwrap();
        assert_eq!(
            transform_under_relation(&w, Rel::Lt, &y).unwrap(),
            seg(&w, Rel::Lt, "elem:4")
        );
        assert_eq!(
            transform_under_relation(&w, Rel::Gt, &y).unwrap(),
            seg(&w, Rel::Gt, "elem:4")
        );
        let l = UltraToken::parse(&w, "L:top#a").unwrap();
        assert_eq!(
            transform_under_relation(&w, Rel::Lt, &l).unwrap(),
            IntervalSet::full(&w)
        );
        assert_eq!(
            transform_under_relation(&w, Rel::Gt, &l).unwrap(),
            IntervalSet::empty(&w)
        );

        let e = Order::parse("e").unwrap();
        let r = UltraToken::parse(&e, "R:at:gap:sqrt2#a").unwrap();
        // {x : X_{≥x} ∈ v} and {x : X_{≤x} ∈ v}
        assert_eq!(
            transform_under_relation(&e, Rel::Le, &r).unwrap(),
            seg(&e, Rel::Le, "gap:sqrt2")
        );
        assert_eq!(
            transform_under_relation(&e, Rel::Ge, &r).unwrap(),
            seg(&e, Rel::Gt, "gap:sqrt2")
        );
    }

    #[test]
    fn mixed_terms_rejected() {
        let w = Order::parse("w").unwrap();
        let z = Order::parse("z").unwrap();
        assert_eq!(
            IntervalSet::full(&w).union(&IntervalSet::full(&z), &w),
            Err(Error::MixedTerms)
        );
    }
}
