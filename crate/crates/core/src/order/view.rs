use std::cmp::Ordering;

use super::{CompletionPos, Cut, PointClass, Position};
use crate::gap::{GapRegistry, GapSpec, Rational, PROBE_BUDGET};
use crate::term::OrderTerm;

/// A term paired with the gap registry, so recursion into sub-terms keeps
/// access to gap comparisons.
#[derive(Clone, Copy)]
pub(crate) struct View<'a> {
    pub(crate) term: &'a OrderTerm,
    pub(crate) reg: &'a GapRegistry,
}

fn flip(o: Ordering) -> Ordering {
    o.reverse()
}

// Lower bound for a rational witness search on η.
enum Lo<'g> {
    NegInf,
    Strict(Rational),
    Gap(&'g GapSpec),
}

enum Hi<'g> {
    PosInf,
    Strict(Rational),
    Gap(&'g GapSpec),
}

fn half(a: &Rational, b: &Rational) -> Rational {
    (a + b) / Rational::from_integer(2)
}

fn rational_between(lo: Lo<'_>, hi: Hi<'_>) -> Option<Rational> {
    let one = Rational::from_integer(1);
    match (lo, hi) {
        (Lo::NegInf, Hi::PosInf) => Some(Rational::from_integer(0)),
        (Lo::NegInf, Hi::Strict(r)) => Some(r.floor() - one),
        (Lo::Strict(q), Hi::PosInf) => Some(q.floor() + one),
        (Lo::Strict(q), Hi::Strict(r)) => (q < r).then(|| half(&q, &r)),
        (Lo::NegInf, Hi::Gap(g)) => g.integer_below(),
        (Lo::Gap(g), Hi::PosInf) => g.integer_above(),
        (Lo::Strict(q), Hi::Gap(g)) => {
            if !g.is_below(&q) {
                return None;
            }
            let mut h = g.integer_above()?;
            for _ in 0..PROBE_BUDGET {
                let m = half(&q, &h);
                if g.is_below(&m) {
                    return Some(m);
                }
                h = m;
            }
            None
        }
        (Lo::Gap(g), Hi::Strict(r)) => {
            if g.is_below(&r) {
                return None;
            }
            let mut l = g.integer_below()?;
            for _ in 0..PROBE_BUDGET {
                let m = half(&l, &r);
                if !g.is_below(&m) {
                    return Some(m);
                }
                l = m;
            }
            None
        }
        (Lo::Gap(a), Hi::Gap(b)) => {
            let (mut l, mut h) = b.bracket()?;
            for _ in 0..PROBE_BUDGET {
                if !a.is_below(&l) {
                    return Some(l);
                }
                let m = half(&l, &h);
                if b.is_below(&m) {
                    l = m;
                } else {
                    h = m;
                }
            }
            None
        }
    }
}

impl<'a> View<'a> {
    pub(crate) fn new(term: &'a OrderTerm, reg: &'a GapRegistry) -> Self {
        View { term, reg }
    }

    fn sub(&self, t: &'a OrderTerm) -> View<'a> {
        View {
            term: t,
            reg: self.reg,
        }
    }

    fn parts(&self) -> &'a [OrderTerm] {
        match self.term {
            OrderTerm::Sum(parts) => parts,
            _ => unreachable!("sum expected"),
        }
    }

    fn factors(&self) -> (View<'a>, View<'a>) {
        match self.term {
            OrderTerm::Prod(a, b) => (self.sub(a), self.sub(b)),
            _ => unreachable!("product expected"),
        }
    }

    // ----- validity -------------------------------------------------------

    pub(crate) fn valid_pos(&self, p: &Position) -> bool {
        match (self.term, p) {
            (OrderTerm::Fin(n), Position::Nat(k)) => k < n,
            (OrderTerm::Omega, Position::Nat(_)) => true,
            (OrderTerm::OmegaStar, Position::NatStar(_)) => true,
            (OrderTerm::Zeta, Position::Int(_)) => true,
            (OrderTerm::Eta, Position::Rat(_)) => true,
            (OrderTerm::Sum(parts), Position::Part(i, sp)) => {
                parts.get(*i).is_some_and(|t| self.sub(t).valid_pos(sp))
            }
            (OrderTerm::Prod(a, b), Position::Pair(pa, pb)) => {
                self.sub(a).valid_pos(pa) && self.sub(b).valid_pos(pb)
            }
            _ => false,
        }
    }

    /// Checks shape and canonical form.
    pub(crate) fn valid_cut(&self, c: &Cut) -> bool {
        match c {
            Cut::Bottom | Cut::Top => return true,
            _ => {}
        }
        match (self.term, c) {
            (OrderTerm::Fin(n), Cut::Nat(k)) => *k > 0 && k < n,
            (OrderTerm::Omega, Cut::Nat(k)) => *k > 0,
            (OrderTerm::OmegaStar, Cut::NatStar(k)) => *k > 0,
            (OrderTerm::Zeta, Cut::Int(_)) => true,
            (OrderTerm::Eta, Cut::BelowRat(_) | Cut::AboveRat(_) | Cut::Named(_)) => true,
            (OrderTerm::Sum(parts), Cut::InPart(i, l)) => {
                *i < parts.len()
                    && match **l {
                        Cut::Bottom => *i > 0,
                        Cut::Top => false,
                        _ => self.sub(&parts[*i]).valid_cut(l),
                    }
            }
            (OrderTerm::Prod(a, b), Cut::InCopy(ic, po)) => {
                !matches!(**ic, Cut::Bottom | Cut::Top)
                    && self.sub(a).valid_cut(ic)
                    && self.sub(b).valid_pos(po)
            }
            (OrderTerm::Prod(_, b), Cut::Between(oc)) => {
                !matches!(**oc, Cut::Bottom | Cut::Top) && self.sub(b).valid_cut(oc)
            }
            _ => false,
        }
    }

    // ----- canonical constructors ----------------------------------------

    fn leaf_nat_cut(&self, k: u64) -> Cut {
        match self.term {
            OrderTerm::Fin(n) if k >= *n => Cut::Top,
            _ if k == 0 => Cut::Bottom,
            _ => Cut::Nat(k),
        }
    }

    fn sum_cut(&self, i: usize, local: Cut) -> Cut {
        let n = self.parts().len();
        match local {
            Cut::Top if i + 1 < n => Cut::InPart(i + 1, Box::new(Cut::Bottom)),
            Cut::Top => Cut::Top,
            Cut::Bottom if i == 0 => Cut::Bottom,
            l => Cut::InPart(i, Box::new(l)),
        }
    }

    fn between(&self, outer_cut: Cut) -> Cut {
        match outer_cut {
            Cut::Bottom => Cut::Bottom,
            Cut::Top => Cut::Top,
            oc => Cut::Between(Box::new(oc)),
        }
    }

    fn copy_cut(&self, outer_pos: &Position, inner_cut: Cut) -> Cut {
        let (_, outer) = self.factors();
        match inner_cut {
            Cut::Bottom => self.between(outer.before(outer_pos)),
            Cut::Top => self.between(outer.after(outer_pos)),
            ic => Cut::InCopy(Box::new(ic), Box::new(outer_pos.clone())),
        }
    }

    pub(crate) fn before(&self, p: &Position) -> Cut {
        match (self.term, p) {
            (OrderTerm::Fin(_) | OrderTerm::Omega, Position::Nat(k)) => self.leaf_nat_cut(*k),
            (OrderTerm::OmegaStar, Position::NatStar(k)) => Cut::NatStar(k + 1),
            (OrderTerm::Zeta, Position::Int(k)) => Cut::Int(*k),
            (OrderTerm::Eta, Position::Rat(q)) => Cut::BelowRat(*q),
            (OrderTerm::Sum(parts), Position::Part(i, sp)) => {
                self.sum_cut(*i, self.sub(&parts[*i]).before(sp))
            }
            (OrderTerm::Prod(a, _), Position::Pair(pi, po)) => {
                self.copy_cut(po, self.sub(a).before(pi))
            }
            _ => unreachable!("position does not fit the term"),
        }
    }

    pub(crate) fn after(&self, p: &Position) -> Cut {
        match (self.term, p) {
            (OrderTerm::Fin(_) | OrderTerm::Omega, Position::Nat(k)) => self.leaf_nat_cut(k + 1),
            (OrderTerm::OmegaStar, Position::NatStar(k)) => {
                if *k == 0 {
                    Cut::Top
                } else {
                    Cut::NatStar(*k)
                }
            }
            (OrderTerm::Zeta, Position::Int(k)) => Cut::Int(k + 1),
            (OrderTerm::Eta, Position::Rat(q)) => Cut::AboveRat(*q),
            (OrderTerm::Sum(parts), Position::Part(i, sp)) => {
                self.sum_cut(*i, self.sub(&parts[*i]).after(sp))
            }
            (OrderTerm::Prod(a, _), Position::Pair(pi, po)) => {
                self.copy_cut(po, self.sub(a).after(pi))
            }
            _ => unreachable!("position does not fit the term"),
        }
    }

    /// Builds the canonical cut for a summand-local cut.
    pub(crate) fn lift_part_cut(&self, i: usize, local: Cut) -> Cut {
        self.sum_cut(i, local)
    }

    pub(crate) fn lift_copy_cut(&self, outer_pos: &Position, inner_cut: Cut) -> Cut {
        self.copy_cut(outer_pos, inner_cut)
    }

    pub(crate) fn lift_outer_cut(&self, outer_cut: Cut) -> Cut {
        self.between(outer_cut)
    }

    // ----- comparisons ----------------------------------------------------

    pub(crate) fn cmp_pos(&self, a: &Position, b: &Position) -> Ordering {
        match (self.term, a, b) {
            (_, Position::Nat(x), Position::Nat(y)) => x.cmp(y),
            (_, Position::NatStar(x), Position::NatStar(y)) => y.cmp(x),
            (_, Position::Int(x), Position::Int(y)) => x.cmp(y),
            (_, Position::Rat(x), Position::Rat(y)) => x.cmp(y),
            (OrderTerm::Sum(parts), Position::Part(i, x), Position::Part(j, y)) => {
                i.cmp(j).then_with(|| self.sub(&parts[*i]).cmp_pos(x, y))
            }
            (OrderTerm::Prod(a, b), Position::Pair(xi, xo), Position::Pair(yi, yo)) => self
                .sub(b)
                .cmp_pos(xo, yo)
                .then_with(|| self.sub(a).cmp_pos(xi, yi)),
            _ => unreachable!("positions do not fit the term"),
        }
    }

    /// Element against cut; never `Equal`.
    pub(crate) fn cmp_pos_cut(&self, p: &Position, c: &Cut) -> Ordering {
        let below = |b: bool| if b { Ordering::Less } else { Ordering::Greater };
        match (self.term, p, c) {
            (_, _, Cut::Bottom) => Ordering::Greater,
            (_, _, Cut::Top) => Ordering::Less,
            (_, Position::Nat(x), Cut::Nat(k)) => below(x < k),
            // J = top k elements, i.e. indices 0*..(k-1)*
            (_, Position::NatStar(x), Cut::NatStar(k)) => below(x >= k),
            (_, Position::Int(x), Cut::Int(k)) => below(x < k),
            (_, Position::Rat(x), Cut::BelowRat(q)) => below(x < q),
            (_, Position::Rat(x), Cut::AboveRat(q)) => below(x <= q),
            (_, Position::Rat(x), Cut::Named(g)) => below(g.is_below(x)),
            (OrderTerm::Sum(parts), Position::Part(i, x), Cut::InPart(j, l)) => match i.cmp(j) {
                Ordering::Equal => self.sub(&parts[*i]).cmp_pos_cut(x, l),
                o => o,
            },
            (OrderTerm::Prod(a, b), Position::Pair(xi, xo), Cut::InCopy(ic, po)) => {
                match self.sub(b).cmp_pos(xo, po) {
                    Ordering::Equal => self.sub(a).cmp_pos_cut(xi, ic),
                    o => o,
                }
            }
            (OrderTerm::Prod(_, b), Position::Pair(_, xo), Cut::Between(oc)) => {
                self.sub(b).cmp_pos_cut(xo, oc)
            }
            _ => unreachable!("position and cut do not fit the term"),
        }
    }

    pub(crate) fn cmp_cut(&self, a: &Cut, b: &Cut) -> Ordering {
        match (a, b) {
            (Cut::Bottom, Cut::Bottom) | (Cut::Top, Cut::Top) => return Ordering::Equal,
            (Cut::Bottom, _) | (_, Cut::Top) => return Ordering::Less,
            (_, Cut::Bottom) | (Cut::Top, _) => return Ordering::Greater,
            _ => {}
        }
        match (self.term, a, b) {
            (_, Cut::Nat(x), Cut::Nat(y)) => x.cmp(y),
            (_, Cut::NatStar(x), Cut::NatStar(y)) => y.cmp(x),
            (_, Cut::Int(x), Cut::Int(y)) => x.cmp(y),
            (OrderTerm::Eta, _, _) => self.cmp_eta_cut(a, b),
            (OrderTerm::Sum(parts), Cut::InPart(i, x), Cut::InPart(j, y)) => {
                i.cmp(j).then_with(|| self.sub(&parts[*i]).cmp_cut(x, y))
            }
            (OrderTerm::Prod(a, b), Cut::InCopy(xc, xo), Cut::InCopy(yc, yo)) => self
                .sub(b)
                .cmp_pos(xo, yo)
                .then_with(|| self.sub(a).cmp_cut(xc, yc)),
            (OrderTerm::Prod(_, b), Cut::InCopy(_, xo), Cut::Between(oc)) => {
                self.sub(b).cmp_pos_cut(xo, oc)
            }
            (OrderTerm::Prod(_, b), Cut::Between(oc), Cut::InCopy(_, yo)) => {
                flip(self.sub(b).cmp_pos_cut(yo, oc))
            }
            (OrderTerm::Prod(_, b), Cut::Between(x), Cut::Between(y)) => self.sub(b).cmp_cut(x, y),
            _ => unreachable!("cuts do not fit the term"),
        }
    }

    fn cmp_eta_cut(&self, a: &Cut, b: &Cut) -> Ordering {
        // rational cuts as (q, -1) for X_{<q} and (q, +1) for X_{≤q}
        fn key(c: &Cut) -> Option<(Rational, i8)> {
            match c {
                Cut::BelowRat(q) => Some((*q, -1)),
                Cut::AboveRat(q) => Some((*q, 1)),
                _ => None,
            }
        }
        match (a, b) {
            (Cut::Named(g), Cut::Named(h)) => self.reg.compare(g, h).ordering(),
            (Cut::Named(g), other) => {
                let (q, _) = key(other).unwrap();
                if g.is_below(&q) {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            (_, Cut::Named(_)) => flip(self.cmp_eta_cut(b, a)),
            _ => key(a).unwrap().cmp(&key(b).unwrap()),
        }
    }

    pub(crate) fn cut_above(&self, c: &CompletionPos) -> Cut {
        match c {
            CompletionPos::Bottom => Cut::Bottom,
            CompletionPos::Top => Cut::Top,
            CompletionPos::Elem(p) => self.after(p),
            CompletionPos::Gap(g) => g.clone(),
        }
    }

    pub(crate) fn cut_below(&self, c: &CompletionPos) -> Cut {
        match c {
            CompletionPos::Bottom => Cut::Bottom,
            CompletionPos::Top => Cut::Top,
            CompletionPos::Elem(p) => self.before(p),
            CompletionPos::Gap(g) => g.clone(),
        }
    }

    pub(crate) fn cmp_cpos(&self, a: &CompletionPos, b: &CompletionPos) -> Ordering {
        use CompletionPos::*;
        match (a, b) {
            (Bottom, Bottom) | (Top, Top) => Ordering::Equal,
            (Bottom, _) | (_, Top) => Ordering::Less,
            (_, Bottom) | (Top, _) => Ordering::Greater,
            (Elem(x), Elem(y)) => self.cmp_pos(x, y),
            (Elem(x), Gap(g)) => self.cmp_pos_cut(x, g),
            (Gap(g), Elem(y)) => flip(self.cmp_pos_cut(y, g)),
            (Gap(g), Gap(h)) => self.cmp_cut(g, h),
        }
    }

    // ----- extremes -------------------------------------------------------

    pub(crate) fn min_elem(&self) -> Option<Position> {
        match self.term {
            OrderTerm::Fin(n) => (*n > 0).then_some(Position::Nat(0)),
            OrderTerm::Omega => Some(Position::Nat(0)),
            OrderTerm::OmegaStar | OrderTerm::Zeta | OrderTerm::Eta => None,
            OrderTerm::Sum(parts) => self.sub(&parts[0]).min_elem().map(|p| Position::part(0, p)),
            OrderTerm::Prod(a, b) => {
                let inner = self.sub(a).min_elem()?;
                let outer = self.sub(b).min_elem()?;
                Some(Position::pair(inner, outer))
            }
        }
    }

    pub(crate) fn max_elem(&self) -> Option<Position> {
        match self.term {
            OrderTerm::Fin(n) => (*n > 0).then(|| Position::Nat(n - 1)),
            OrderTerm::OmegaStar => Some(Position::NatStar(0)),
            OrderTerm::Omega | OrderTerm::Zeta | OrderTerm::Eta => None,
            OrderTerm::Sum(parts) => {
                let last = parts.len() - 1;
                self.sub(&parts[last])
                    .max_elem()
                    .map(|p| Position::part(last, p))
            }
            OrderTerm::Prod(a, b) => {
                let inner = self.sub(a).max_elem()?;
                let outer = self.sub(b).max_elem()?;
                Some(Position::pair(inner, outer))
            }
        }
    }

    /// Greatest element of `I`.
    pub(crate) fn max_below(&self, c: &Cut) -> Option<Position> {
        match (self.term, c) {
            (_, Cut::Bottom) => None,
            (_, Cut::Top) => self.max_elem(),
            (_, Cut::Nat(k)) => Some(Position::Nat(k - 1)),
            (_, Cut::NatStar(k)) => Some(Position::NatStar(*k)),
            (_, Cut::Int(k)) => Some(Position::Int(k - 1)),
            (_, Cut::AboveRat(q)) => Some(Position::Rat(*q)),
            (_, Cut::BelowRat(_) | Cut::Named(_)) => None,
            (OrderTerm::Sum(parts), Cut::InPart(i, l)) => match **l {
                Cut::Bottom => {
                    let prev = self.sub(&parts[i - 1]).max_elem()?;
                    Some(Position::part(i - 1, prev))
                }
                _ => self
                    .sub(&parts[*i])
                    .max_below(l)
                    .map(|p| Position::part(*i, p)),
            },
            (OrderTerm::Prod(a, _), Cut::InCopy(ic, po)) => self
                .sub(a)
                .max_below(ic)
                .map(|p| Position::pair(p, (**po).clone())),
            (OrderTerm::Prod(a, b), Cut::Between(oc)) => {
                let outer = self.sub(b).max_below(oc)?;
                let inner = self.sub(a).max_elem()?;
                Some(Position::pair(inner, outer))
            }
            _ => unreachable!("cut does not fit the term"),
        }
    }

    /// Least element of `J`.
    pub(crate) fn min_above(&self, c: &Cut) -> Option<Position> {
        match (self.term, c) {
            (_, Cut::Top) => None,
            (_, Cut::Bottom) => self.min_elem(),
            (_, Cut::Nat(k)) => Some(Position::Nat(*k)),
            (_, Cut::NatStar(k)) => Some(Position::NatStar(k - 1)),
            (_, Cut::Int(k)) => Some(Position::Int(*k)),
            (_, Cut::BelowRat(q)) => Some(Position::Rat(*q)),
            (_, Cut::AboveRat(_) | Cut::Named(_)) => None,
            (OrderTerm::Sum(parts), Cut::InPart(i, l)) => self
                .sub(&parts[*i])
                .min_above(l)
                .map(|p| Position::part(*i, p)),
            (OrderTerm::Prod(a, _), Cut::InCopy(ic, po)) => self
                .sub(a)
                .min_above(ic)
                .map(|p| Position::pair(p, (**po).clone())),
            (OrderTerm::Prod(a, b), Cut::Between(oc)) => {
                let outer = self.sub(b).min_above(oc)?;
                let inner = self.sub(a).min_elem()?;
                Some(Position::pair(inner, outer))
            }
            _ => unreachable!("cut does not fit the term"),
        }
    }

    pub(crate) fn is_gap(&self, c: &Cut) -> bool {
        !matches!(c, Cut::Bottom | Cut::Top)
            && self.max_below(c).is_none()
            && self.min_above(c).is_none()
    }

    pub(crate) fn classify(&self, p: &Position) -> PointClass {
        let b = self.before(p);
        let a = self.after(p);
        PointClass {
            is_left_limit: b != Cut::Bottom && self.max_below(&b).is_none(),
            is_right_limit: a != Cut::Top && self.min_above(&a).is_none(),
            is_min: b == Cut::Bottom,
            is_max: a == Cut::Top,
        }
    }

    pub(crate) fn sup_initial(&self, c: &Cut) -> CompletionPos {
        if let Some(m) = self.max_below(c) {
            return CompletionPos::Elem(m);
        }
        match c {
            Cut::Bottom => CompletionPos::Bottom,
            Cut::Top => CompletionPos::Top,
            _ => match self.min_above(c) {
                Some(q) => CompletionPos::Elem(q),
                None => CompletionPos::Gap(c.clone()),
            },
        }
    }

    pub(crate) fn inf_final(&self, c: &Cut) -> CompletionPos {
        if let Some(m) = self.min_above(c) {
            return CompletionPos::Elem(m);
        }
        match c {
            Cut::Bottom => CompletionPos::Bottom,
            Cut::Top => CompletionPos::Top,
            _ => match self.max_below(c) {
                Some(p) => CompletionPos::Elem(p),
                None => CompletionPos::Gap(c.clone()),
            },
        }
    }

    // ----- witnesses ------------------------------------------------------

    /// Some element `x` with `a < x < b`, built structurally.
    pub(crate) fn witness(&self, a: &Cut, b: &Cut) -> Option<Position> {
        if self.cmp_cut(a, b) != Ordering::Less {
            return None;
        }
        // distinct canonical cuts differ by at least one element, so the
        // least element above `a` (or greatest below `b`) lies between
        if let Some(x) = self.min_above(a) {
            return Some(x);
        }
        if let Some(x) = self.max_below(b) {
            return Some(x);
        }
        match self.term {
            OrderTerm::Fin(_) | OrderTerm::Omega | OrderTerm::OmegaStar => {
                unreachable!("discrete leaves always have an extreme witness")
            }
            OrderTerm::Zeta => Some(Position::Int(0)),
            OrderTerm::Eta => {
                let lo = match a {
                    Cut::Bottom => Lo::NegInf,
                    Cut::AboveRat(q) => Lo::Strict(*q),
                    Cut::Named(g) => Lo::Gap(g),
                    _ => unreachable!(),
                };
                let hi = match b {
                    Cut::Top => Hi::PosInf,
                    Cut::BelowRat(q) => Hi::Strict(*q),
                    Cut::Named(g) => Hi::Gap(g),
                    _ => unreachable!(),
                };
                rational_between(lo, hi).map(Position::Rat)
            }
            OrderTerm::Sum(parts) => {
                let last = parts.len() - 1;
                let (i, la) = match a {
                    Cut::Bottom => (0, Cut::Bottom),
                    Cut::InPart(i, l) => (*i, (**l).clone()),
                    _ => unreachable!(),
                };
                let (j, lb) = match b {
                    Cut::Top => (last, Cut::Top),
                    Cut::InPart(j, l) if **l == Cut::Bottom => (j - 1, Cut::Top),
                    Cut::InPart(j, l) => (*j, (**l).clone()),
                    _ => unreachable!(),
                };
                let upper = if i == j { lb } else { Cut::Top };
                self.sub(&parts[i])
                    .witness(&la, &upper)
                    .map(|x| Position::part(i, x))
            }
            OrderTerm::Prod(..) => self.witness_prod(a, b),
        }
    }

    fn witness_prod(&self, a: &Cut, b: &Cut) -> Option<Position> {
        let (inner, outer) = self.factors();
        enum Side {
            Copy(Position, Cut),
            Outer(Cut),
        }
        let as_outer = |c: &Cut, bottom: Cut| match c {
            Cut::Between(oc) => (**oc).clone(),
            _ => bottom,
        };
        let lower = match a {
            Cut::InCopy(ic, po) => Side::Copy((**po).clone(), (**ic).clone()),
            _ => {
                let oc = as_outer(a, Cut::Bottom);
                match outer.min_above(&oc) {
                    Some(q) => Side::Copy(q, Cut::Bottom),
                    None => Side::Outer(oc),
                }
            }
        };
        let upper = match b {
            Cut::InCopy(ic, po) => Side::Copy((**po).clone(), (**ic).clone()),
            _ => {
                let oc = as_outer(b, Cut::Top);
                match outer.max_below(&oc) {
                    Some(p) => Side::Copy(p, Cut::Top),
                    None => Side::Outer(oc),
                }
            }
        };
        let at = |x: Position, po: Position| Position::pair(x, po);
        match (lower, upper) {
            (Side::Copy(pa, ca), Side::Copy(pb, cb)) => {
                if outer.cmp_pos(&pa, &pb) == Ordering::Equal {
                    inner.witness(&ca, &cb).map(|x| at(x, pa))
                } else {
                    inner.witness(&ca, &Cut::Top).map(|x| at(x, pa))
                }
            }
            (Side::Copy(pa, ca), Side::Outer(_)) => {
                inner.witness(&ca, &Cut::Top).map(|x| at(x, pa))
            }
            (Side::Outer(_), Side::Copy(pb, cb)) => {
                inner.witness(&Cut::Bottom, &cb).map(|x| at(x, pb))
            }
            (Side::Outer(oa), Side::Outer(ob)) => {
                let w = outer.witness(&oa, &ob)?;
                inner.witness(&Cut::Bottom, &Cut::Top).map(|x| at(x, w))
            }
        }
    }

    // ----- sampling -------------------------------------------------------

    pub(crate) fn sample(&self, budget: usize) -> Vec<Position> {
        match self.term {
            OrderTerm::Fin(n) => {
                let n = *n;
                if n as usize <= budget {
                    (0..n).map(Position::Nat).collect()
                } else {
                    let front = budget.div_ceil(2) as u64;
                    let back = (budget / 2) as u64;
                    (0..front).chain(n - back..n).map(Position::Nat).collect()
                }
            }
            OrderTerm::Omega => (0..budget as u64).map(Position::Nat).collect(),
            OrderTerm::OmegaStar => (0..budget as u64).map(Position::NatStar).collect(),
            OrderTerm::Zeta => (0..budget as i64)
                .map(|k| if k % 2 == 0 { -(k / 2) } else { k / 2 + 1 })
                .map(Position::Int)
                .collect(),
            OrderTerm::Eta => super::dyadic_ladder(budget),
            OrderTerm::Sum(parts) => parts
                .iter()
                .enumerate()
                .flat_map(|(i, t)| {
                    self.sub(t)
                        .sample(budget)
                        .into_iter()
                        .map(move |p| Position::part(i, p))
                })
                .collect(),
            OrderTerm::Prod(..) => {
                let (inner, outer) = self.factors();
                let b = ceil_sqrt(budget);
                let xs = inner.sample(b);
                outer
                    .sample(b)
                    .into_iter()
                    .flat_map(|po| {
                        xs.iter()
                            .map(move |x| Position::pair(x.clone(), po.clone()))
                    })
                    .collect()
            }
        }
    }

    pub(crate) fn structural_cuts(&self, budget: usize) -> Vec<Cut> {
        match self.term {
            OrderTerm::Eta => self.reg.iter().map(|g| Cut::Named(g.clone())).collect(),
            OrderTerm::Sum(parts) => {
                let mut out = Vec::new();
                for (i, t) in parts.iter().enumerate() {
                    if i > 0 {
                        out.push(Cut::InPart(i, Box::new(Cut::Bottom)));
                    }
                    for c in self.sub(t).structural_cuts(budget) {
                        out.push(self.sum_cut(i, c));
                    }
                }
                out
            }
            OrderTerm::Prod(..) => {
                let (inner, outer) = self.factors();
                let b = ceil_sqrt(budget);
                let inner_cuts = inner.structural_cuts(b);
                let mut out = Vec::new();
                for po in outer.sample(b) {
                    for ic in &inner_cuts {
                        out.push(self.copy_cut(&po, ic.clone()));
                    }
                    out.push(self.between(outer.before(&po)));
                    out.push(self.between(outer.after(&po)));
                }
                for oc in outer.structural_cuts(b) {
                    out.push(self.between(oc));
                }
                out.retain(|c| !matches!(c, Cut::Bottom | Cut::Top));
                out
            }
            _ => Vec::new(),
        }
    }
}

fn ceil_sqrt(n: usize) -> usize {
    let mut r = 1;
    while r * r < n {
        r += 1;
    }
    r
}
