//! Named irrational cuts of the rationals.
//!
//! A [`GapSpec`] is a decidable predicate telling, for each rational, on which
//! side of the cut it lies. Gaps are exercised wherever an `η` appears in a
//! term; their Dedekind completion is the reals, which never appear as
//! ground elements.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};

pub type Rational = Ratio<i128>;

/// Side of a gap on which a rational lies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Below,
    Above,
}

/// Number of halvings spent when separating two gaps or squeezing a rational
/// witness next to one.
pub const PROBE_BUDGET: usize = 96;

type Decide = dyn Fn(&Rational) -> Side + Send + Sync;

#[derive(Clone)]
pub struct GapSpec {
    name: String,
    decide: Arc<Decide>,
}

impl GapSpec {
    /// `decide` must be deterministic and monotone, and both sides must be
    /// nonempty.
    pub fn new(
        name: impl Into<String>,
        decide: impl Fn(&Rational) -> Side + Send + Sync + 'static,
    ) -> Self {
        GapSpec {
            name: name.into(),
            decide: Arc::new(decide),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn decide(&self, q: &Rational) -> Side {
        (self.decide)(q)
    }

    pub fn is_below(&self, q: &Rational) -> bool {
        self.decide(q) == Side::Below
    }

    /// An integer strictly below the gap.
    pub fn integer_below(&self) -> Option<Rational> {
        let mut k: i128 = 0;
        for _ in 0..120 {
            let q = Rational::from_integer(k);
            if self.is_below(&q) {
                return Some(q);
            }
            k = if k == 0 { -1 } else { k * 2 };
        }
        None
    }

    /// An integer strictly above the gap.
    pub fn integer_above(&self) -> Option<Rational> {
        let mut k: i128 = 0;
        for _ in 0..120 {
            let q = Rational::from_integer(k);
            if !self.is_below(&q) {
                return Some(q);
            }
            k = if k == 0 { 1 } else { k * 2 };
        }
        None
    }

    /// Rational bracket `lo < gap < hi`.
    pub fn bracket(&self) -> Option<(Rational, Rational)> {
        Some((self.integer_below()?, self.integer_above()?))
    }
}

impl fmt::Debug for GapSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GapSpec({})", self.name)
    }
}

impl PartialEq for GapSpec {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl Eq for GapSpec {}

impl std::hash::Hash for GapSpec {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.name.hash(state);
    }
}

fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / Rational::from_integer(2)
}

/// Looks for a rational strictly between two gaps by bisecting both brackets.
/// `None` means no separating rational was found within [`PROBE_BUDGET`].
pub fn separate(a: &GapSpec, b: &GapSpec) -> Option<Ordering> {
    let (mut la, mut ha) = a.bracket()?;
    let (mut lb, mut hb) = b.bracket()?;
    for _ in 0..PROBE_BUDGET {
        if ha <= lb {
            return Some(Ordering::Less);
        }
        if hb <= la {
            return Some(Ordering::Greater);
        }
        let ma = midpoint(&la, &ha);
        if a.is_below(&ma) {
            la = ma;
        } else {
            ha = ma;
        }
        let mb = midpoint(&lb, &hb);
        if b.is_below(&mb) {
            lb = mb;
        } else {
            hb = mb;
        }
    }
    None
}

/// Outcome of ordering two registered gaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapOrder {
    /// A separating rational was found.
    Verified(Ordering),
    /// No witness within the probe budget; ordered by name.
    Unverified(Ordering),
}

impl GapOrder {
    pub fn ordering(self) -> Ordering {
        match self {
            GapOrder::Verified(o) | GapOrder::Unverified(o) => o,
        }
    }
}

/// The gaps available on every `η` component of an order.
#[derive(Debug, Clone)]
pub struct GapRegistry {
    gaps: Vec<Arc<GapSpec>>,
    // pairwise order, indexed by position in `gaps`
    order: Vec<Vec<GapOrder>>,
    index: HashMap<String, usize>,
}

impl Default for GapRegistry {
    fn default() -> Self {
        GapRegistry::from_specs(vec![
            sqrt_gap("sqrt2", 2),
            sqrt_gap("sqrt3", 3),
            e_minus_2(),
        ])
    }
}

impl GapRegistry {
    pub fn empty() -> Self {
        GapRegistry::from_specs(Vec::new())
    }

    pub fn from_specs(specs: Vec<GapSpec>) -> Self {
        let mut reg = GapRegistry {
            gaps: Vec::new(),
            order: Vec::new(),
            index: HashMap::new(),
        };
        for s in specs {
            reg.register(s);
        }
        reg
    }

    /// Adds or replaces a gap. Its order against the existing gaps is probed
    /// once here.
    pub fn register(&mut self, spec: GapSpec) {
        if let Some(&i) = self.index.get(spec.name()) {
            self.gaps[i] = Arc::new(spec);
            self.recompute();
            return;
        }
        self.index.insert(spec.name().to_string(), self.gaps.len());
        self.gaps.push(Arc::new(spec));
        self.recompute();
    }

    fn recompute(&mut self) {
        let n = self.gaps.len();
        self.order = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            GapOrder::Verified(Ordering::Equal)
                        } else {
                            match separate(&self.gaps[i], &self.gaps[j]) {
                                Some(o) => GapOrder::Verified(o),
                                None => GapOrder::Unverified(
                                    self.gaps[i].name().cmp(self.gaps[j].name()),
                                ),
                            }
                        }
                    })
                    .collect()
            })
            .collect();
    }

    pub fn get(&self, name: &str) -> Option<&Arc<GapSpec>> {
        self.index.get(name).map(|&i| &self.gaps[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<GapSpec>> {
        self.gaps.iter()
    }

    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }

    pub fn compare(&self, a: &GapSpec, b: &GapSpec) -> GapOrder {
        if a.name() == b.name() {
            return GapOrder::Verified(Ordering::Equal);
        }
        match (self.index.get(a.name()), self.index.get(b.name())) {
            (Some(&i), Some(&j)) => self.order[i][j],
            _ => match separate(a, b) {
                Some(o) => GapOrder::Verified(o),
                None => GapOrder::Unverified(a.name().cmp(b.name())),
            },
        }
    }

    /// Pairs of registered gaps whose order rests on the name tie-break.
    pub fn unverified_pairs(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for i in 0..self.gaps.len() {
            for j in i + 1..self.gaps.len() {
                if matches!(self.order[i][j], GapOrder::Unverified(_)) {
                    out.push((
                        self.gaps[i].name().to_string(),
                        self.gaps[j].name().to_string(),
                    ));
                }
            }
        }
        out
    }
}

fn big(q: &Rational) -> BigRational {
    BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

/// The cut at `√k` for a non-square `k`.
pub fn sqrt_gap(name: &str, k: u32) -> GapSpec {
    GapSpec::new(name, move |q: &Rational| {
        if !q.is_positive() {
            return Side::Below;
        }
        let n = BigInt::from(*q.numer());
        let d = BigInt::from(*q.denom());
        if &n * &n < BigInt::from(k) * &d * &d {
            Side::Below
        } else {
            Side::Above
        }
    })
}

/// The cut at `e - 2`, decided with partial sums of `Σ 1/k!` and the tail
/// bound `e - s_n < 1/(n!·n)`.
pub fn e_minus_2() -> GapSpec {
    GapSpec::new("e_minus_2", |q: &Rational| {
        let q = big(q);
        let two = BigRational::from_integer(BigInt::from(2));
        let mut partial = BigRational::from_integer(BigInt::from(2)); // 1/0! + 1/1!
        let mut fact = BigInt::one();
        let mut n: u32 = 1;
        loop {
            n += 1;
            fact *= BigInt::from(n);
            partial += BigRational::new(BigInt::one(), fact.clone());
            let lower = &partial - &two;
            let upper = &lower + BigRational::new(BigInt::one(), &fact * BigInt::from(n));
            if q <= lower {
                return Side::Below;
            }
            if q >= upper {
                return Side::Above;
            }
            debug_assert!(!(&upper - &lower).is_zero());
        }
    })
}
