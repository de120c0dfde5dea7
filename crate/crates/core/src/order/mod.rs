//! Elements, cuts and Dedekind-completion points of a symbolic order.
//!
//! Everything is decided structurally from the shape of the [`OrderTerm`]:
//! comparisons, greatest/least elements of half-cuts, and witness elements
//! between two cuts. No search over the (infinite) carrier is performed,
//! except for bisection against registered gap predicates on `η`.

mod literal;
mod view;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gap::{GapRegistry, GapSpec, Rational};
use crate::term::{parse_order_term, OrderTerm};

pub(crate) use literal::split_top;
pub(crate) use view::View;

/// An element of an order, as a path through the term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Position {
    /// Index into a finite order or `ω`.
    Nat(u64),
    /// `k*`: the `k`-th element of `ω*` counted from the top.
    NatStar(u64),
    /// An integer of `ζ`.
    Int(i64),
    /// A rational of `η`.
    Rat(Rational),
    /// Sub-position inside a summand.
    Part(usize, Box<Position>),
    /// `(inner, outer)` inside a product.
    Pair(Box<Position>, Box<Position>),
}

impl Position {
    pub fn part(i: usize, p: Position) -> Self {
        Position::Part(i, Box::new(p))
    }

    pub fn pair(inner: Position, outer: Position) -> Self {
        Position::Pair(Box::new(inner), Box::new(outer))
    }

    pub fn rat(n: i128, d: i128) -> Self {
        Position::Rat(Rational::new(n, d))
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Position::Nat(k) => write!(f, "{k}"),
            Position::NatStar(k) => write!(f, "{k}*"),
            Position::Int(k) => write!(f, "{k}"),
            Position::Rat(q) => write!(f, "{q}"),
            Position::Part(i, p) => write!(f, "{i}.{p}"),
            Position::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

/// A cut `(I, J)` of an order in canonical form: every cut has exactly one
/// representation, so structural equality is equality of cuts.
///
/// Leaf variants are interpreted against the leaf term they belong to;
/// compound variants never carry a local bottom or top that could be
/// expressed further out.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Cut {
    /// `I = ∅`.
    Bottom,
    /// `J = ∅`.
    Top,
    /// Finite order or `ω`: `I` holds the first `k` elements, `k > 0`.
    Nat(u64),
    /// `ω*`: `J` holds the top `k` elements, `k > 0`.
    NatStar(u64),
    /// `ζ`: `I = X_{<k}`.
    Int(i64),
    /// `η`: `I = X_{<q}`.
    BelowRat(Rational),
    /// `η`: `I = X_{≤q}`.
    AboveRat(Rational),
    /// `η`: a registered irrational cut.
    Named(Arc<GapSpec>),
    /// Sum: a cut of summand `i`. A local bottom appears only for `i > 0`
    /// (the seam below summand `i`); a local top never appears.
    InPart(usize, Box<Cut>),
    /// Product: a proper cut of the copy of `inner` sitting at an outer
    /// element.
    InCopy(Box<Cut>, Box<Position>),
    /// Product: a proper cut of `outer`, falling between whole copies.
    Between(Box<Cut>),
}

/// A point of the Dedekind completion, extended by both ends.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CompletionPos {
    Bottom,
    Elem(Position),
    /// A proper gap, identified with its cut.
    Gap(Cut),
    Top,
}

/// Local shape of an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PointClass {
    /// `X_{<p}` is nonempty and has no greatest element.
    pub is_left_limit: bool,
    /// `X_{>p}` is nonempty and has no least element.
    pub is_right_limit: bool,
    pub is_min: bool,
    pub is_max: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Front,
    Back,
}

/// Fingerprint of an order, used to reject operands built over different
/// orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermId(u64);

/// An order term together with the gaps registered on its `η` components.
#[derive(Debug, Clone)]
pub struct Order {
    term: OrderTerm,
    gaps: GapRegistry,
    id: TermId,
}

fn has_empty_component(t: &OrderTerm) -> bool {
    match t {
        OrderTerm::Fin(0) => true,
        OrderTerm::Sum(parts) => parts.is_empty() || parts.iter().any(has_empty_component),
        OrderTerm::Prod(a, b) => has_empty_component(a) || has_empty_component(b),
        _ => false,
    }
}

impl Order {
    /// Uses the default gaps `sqrt2`, `sqrt3` and `e_minus_2`.
    pub fn new(term: OrderTerm) -> Result<Self> {
        Order::with_gaps(term, GapRegistry::default())
    }

    /// The empty order `0` is accepted as a whole; an empty component
    /// inside a sum or product is not.
    pub fn with_gaps(term: OrderTerm, gaps: GapRegistry) -> Result<Self> {
        if !term.is_empty_order() && has_empty_component(&term) {
            return Err(Error::EmptyOrder);
        }
        let mut h = std::collections::hash_map::DefaultHasher::new();
        term.to_string().hash(&mut h);
        for g in gaps.iter() {
            g.name().hash(&mut h);
        }
        Ok(Order {
            term,
            gaps,
            id: TermId(h.finish()),
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Order::new(parse_order_term(text)?)
    }

    pub fn term(&self) -> &OrderTerm {
        &self.term
    }

    pub fn gaps(&self) -> &GapRegistry {
        &self.gaps
    }

    pub fn id(&self) -> TermId {
        self.id
    }

    pub(crate) fn view(&self) -> View<'_> {
        View::new(&self.term, &self.gaps)
    }

    pub fn is_empty(&self) -> bool {
        self.term.is_empty_order()
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyOrder)
        } else {
            Ok(())
        }
    }

    pub fn check_position(&self, p: &Position) -> Result<()> {
        if !self.is_empty() && self.view().valid_pos(p) {
            Ok(())
        } else {
            Err(Error::InvalidPosition(format!(
                "`{p}` is not an element of {}",
                self.term
            )))
        }
    }

    pub fn check_cut(&self, c: &Cut) -> Result<()> {
        if !self.is_empty() && self.view().valid_cut(c) {
            Ok(())
        } else {
            Err(Error::InvalidPosition(format!(
                "not a canonical cut of {}",
                self.term
            )))
        }
    }

    pub fn check_cpos(&self, c: &CompletionPos) -> Result<()> {
        match c {
            CompletionPos::Bottom | CompletionPos::Top => self.require_nonempty(),
            CompletionPos::Elem(p) => self.check_position(p),
            CompletionPos::Gap(cut) => {
                self.check_cut(cut)?;
                if self.view().is_gap(cut) {
                    Ok(())
                } else {
                    Err(Error::InvalidPosition("cut is not a proper gap".into()))
                }
            }
        }
    }

    pub fn compare_elements(&self, a: &Position, b: &Position) -> Result<Ordering> {
        self.check_position(a)?;
        self.check_position(b)?;
        Ok(self.view().cmp_pos(a, b))
    }

    /// Total order on completion points: `Bottom` < elements and gaps < `Top`.
    pub fn position_compare(&self, a: &CompletionPos, b: &CompletionPos) -> Result<Ordering> {
        self.check_cpos(a)?;
        self.check_cpos(b)?;
        Ok(self.view().cmp_cpos(a, b))
    }

    pub fn compare_cuts(&self, a: &Cut, b: &Cut) -> Result<Ordering> {
        self.check_cut(a)?;
        self.check_cut(b)?;
        Ok(self.view().cmp_cut(a, b))
    }

    pub fn classify_position(&self, p: &Position) -> Result<PointClass> {
        self.check_position(p)?;
        Ok(self.view().classify(p))
    }

    /// Is there an element strictly between two completion points?
    pub fn exists_between(&self, lo: &CompletionPos, hi: &CompletionPos) -> Result<bool> {
        Ok(self.witness_between(lo, hi)?.is_some())
    }

    /// An element strictly between two completion points, if any.
    pub fn witness_between(
        &self,
        lo: &CompletionPos,
        hi: &CompletionPos,
    ) -> Result<Option<Position>> {
        self.check_cpos(lo)?;
        self.check_cpos(hi)?;
        let v = self.view();
        Ok(v.witness(&v.cut_above(lo), &v.cut_below(hi)))
    }

    /// The cut `(X_{<p}, X_{≥p})`.
    pub fn cut_before(&self, p: &Position) -> Result<Cut> {
        self.check_position(p)?;
        Ok(self.view().before(p))
    }

    /// The cut `(X_{≤p}, X_{>p})`.
    pub fn cut_after(&self, p: &Position) -> Result<Cut> {
        self.check_position(p)?;
        Ok(self.view().after(p))
    }

    /// Greatest element of the initial segment of `c`.
    pub fn max_below(&self, c: &Cut) -> Result<Option<Position>> {
        self.check_cut(c)?;
        Ok(self.view().max_below(c))
    }

    /// Least element of the final segment of `c`.
    pub fn min_above(&self, c: &Cut) -> Result<Option<Position>> {
        self.check_cut(c)?;
        Ok(self.view().min_above(c))
    }

    pub fn least(&self) -> Option<Position> {
        if self.is_empty() {
            None
        } else {
            self.view().min_elem()
        }
    }

    pub fn greatest(&self) -> Option<Position> {
        if self.is_empty() {
            None
        } else {
            self.view().max_elem()
        }
    }

    /// `count` elements walked inward from one end.
    ///
    /// From an end with an extreme element the walk follows immediate
    /// successors (or predecessors), so the output is strictly monotone.
    /// A bare `η` has no ends; it yields the dyadic sampling ladder
    /// `0, 1, 1/2, 3/2, 1/4, 3/4, …` instead, which is not monotone.
    pub fn enumerate_elements(&self, direction: Direction, count: usize) -> Result<Vec<Position>> {
        self.require_nonempty()?;
        if self.term == OrderTerm::Eta {
            return Ok(dyadic_ladder(count));
        }
        let v = self.view();
        let mut out = Vec::with_capacity(count);
        let mut cur = match direction {
            Direction::Front => v.min_elem(),
            Direction::Back => v.max_elem(),
        };
        if cur.is_none() && count > 0 {
            return Err(Error::NoCanonicalLadder);
        }
        while out.len() < count {
            let Some(p) = cur else {
                return Err(match direction {
                    Direction::Front if v.after(out.last().unwrap()) == Cut::Top => {
                        Error::OutOfRange(format!("only {} elements", out.len()))
                    }
                    Direction::Back if v.before(out.last().unwrap()) == Cut::Bottom => {
                        Error::OutOfRange(format!("only {} elements", out.len()))
                    }
                    _ => Error::NoCanonicalLadder,
                });
            };
            cur = match direction {
                Direction::Front => v.min_above(&v.after(&p)),
                Direction::Back => v.max_below(&v.before(&p)),
            };
            out.push(p);
        }
        Ok(out)
    }

    /// Deterministic sample of elements used to build test universes.
    ///
    /// Finite orders give up to `budget` elements (split between both
    /// ends), `ω` its first `budget` naturals, `ω*` its top `budget`,
    /// `ζ` the integers `0, 1, -1, 2, -2, …`, `η` the dyadic ladder.
    /// Each summand is sampled with the full budget; a product samples
    /// inner and outer with `⌈√budget⌉` each and takes all pairs.
    pub fn sample_elements(&self, budget: usize) -> Result<Vec<Position>> {
        self.require_nonempty()?;
        let v = self.view();
        let mut out = v.sample(budget.max(1));
        out.sort_by(|a, b| v.cmp_pos(a, b));
        out.dedup();
        Ok(out)
    }

    /// Proper cuts near the sample: seams of sums, cuts between sampled
    /// copies of products, and every registered gap on each `η`.
    pub fn sample_cuts(&self, budget: usize) -> Result<Vec<Cut>> {
        self.require_nonempty()?;
        let v = self.view();
        let mut out = v.structural_cuts(budget.max(1));
        out.sort_by(|a, b| v.cmp_cut(a, b));
        out.dedup();
        Ok(out)
    }

    pub fn is_gap(&self, c: &Cut) -> Result<bool> {
        self.check_cut(c)?;
        Ok(self.view().is_gap(c))
    }

    pub fn parse_position(&self, text: &str) -> Result<Position> {
        self.require_nonempty()?;
        let p = self.view().parse_pos(text.trim())?;
        self.check_position(&p)?;
        Ok(p)
    }

    /// Cut literals: `before:<pos>`, `after:<pos>`, `at:gap:<path>`,
    /// `at:structgap:<path>`, `bottom`, `top`.
    pub fn parse_cut(&self, text: &str) -> Result<Cut> {
        self.require_nonempty()?;
        self.view().parse_cut(text.trim())
    }

    /// Completion literals: `elem:<pos>`, `gap:<path>`, `structgap:<path>`,
    /// `bottom`, `top`.
    pub fn parse_cpos(&self, text: &str) -> Result<CompletionPos> {
        self.require_nonempty()?;
        self.view().parse_cpos(text.trim())
    }

    pub fn cut_literal(&self, c: &Cut) -> String {
        self.view().cut_literal(c)
    }

    pub fn cpos_literal(&self, c: &CompletionPos) -> String {
        self.view().cpos_literal(c)
    }

    /// The completion point `sup I` of a cut.
    pub fn sup_of_initial(&self, c: &Cut) -> Result<CompletionPos> {
        self.check_cut(c)?;
        Ok(self.view().sup_initial(c))
    }

    /// The completion point `inf J` of a cut.
    pub fn inf_of_final(&self, c: &Cut) -> Result<CompletionPos> {
        self.check_cut(c)?;
        Ok(self.view().inf_final(c))
    }
}

/// `0, 1, 1/2, 3/2, 1/4, 3/4, 5/4, 7/4, 1/8, …`: odd multiples of `2^-k`
/// in `[0, 2)`, level by level.
pub fn dyadic_ladder(count: usize) -> Vec<Position> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    out.push(Position::rat(0, 1));
    if count > 1 {
        out.push(Position::rat(1, 1));
    }
    let mut level: u32 = 1;
    while out.len() < count {
        let den: i128 = 1 << level;
        let mut num: i128 = 1;
        while num < 2 * den && out.len() < count {
            out.push(Position::rat(num, den));
            num += 2;
        }
        level += 1;
    }
    out
}

#[cfg(test)]
mod tests;
