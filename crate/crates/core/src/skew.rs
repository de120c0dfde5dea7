//! The extended `min` and `max`, and law checking for the skew lattice they
//! form on ultrafilters.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::Order;
use crate::relations::{ext_rel, Rel};
use crate::support::{compare_keys, support_key, support_literal, Support, UltraToken};

/// `miñ(u, v)`: `u` when `u ≤̃ v` or `u = v`, otherwise `v`.
pub fn ext_min(order: &Order, u: &UltraToken, v: &UltraToken) -> Result<UltraToken> {
    Ok(if min_picks_left(order, u, v)? {
        u.clone()
    } else {
        v.clone()
    })
}

/// `max̃(u, v)`: `v` when `u ≤̃ v` or `u = v`, otherwise `u`.
pub fn ext_max(order: &Order, u: &UltraToken, v: &UltraToken) -> Result<UltraToken> {
    Ok(if min_picks_left(order, u, v)? {
        v.clone()
    } else {
        u.clone()
    })
}

fn min_picks_left(order: &Order, u: &UltraToken, v: &UltraToken) -> Result<bool> {
    Ok(ext_rel(order, Rel::Le, u, v)? || u == v)
}

/// A pair of binary operations on tokens of one order.
pub trait SkewOps {
    fn min(&self, u: &UltraToken, v: &UltraToken) -> Result<UltraToken>;
    fn max(&self, u: &UltraToken, v: &UltraToken) -> Result<UltraToken>;
}

/// The closed forms [`ext_min`] and [`ext_max`].
pub struct ClosedForm<'a>(pub &'a Order);

impl SkewOps for ClosedForm<'_> {
    fn min(&self, u: &UltraToken, v: &UltraToken) -> Result<UltraToken> {
        ext_min(self.0, u, v)
    }

    fn max(&self, u: &UltraToken, v: &UltraToken) -> Result<UltraToken> {
        ext_max(self.0, u, v)
    }
}

/// Deliberately broken variants of the closed forms, used to check that the
/// law checker notices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SkewMutant {
    /// `miñ` returns the other argument in both branches.
    SwappedBranch,
    /// The `u = v` test compares supports only, ignoring labels.
    DroppedEquality,
}

pub struct MutantOps<'a> {
    pub order: &'a Order,
    pub mutant: SkewMutant,
}

impl MutantOps<'_> {
    fn picks_left(&self, u: &UltraToken, v: &UltraToken) -> Result<bool> {
        match self.mutant {
            SkewMutant::SwappedBranch => min_picks_left(self.order, u, v),
            SkewMutant::DroppedEquality => {
                Ok(ext_rel(self.order, Rel::Le, u, v)? || u.support() == v.support())
            }
        }
    }
}

impl SkewOps for MutantOps<'_> {
    fn min(&self, u: &UltraToken, v: &UltraToken) -> Result<UltraToken> {
        let left = self.picks_left(u, v)?;
        let left = if self.mutant == SkewMutant::SwappedBranch {
            !left
        } else {
            left
        };
        Ok(if left { u.clone() } else { v.clone() })
    }

    fn max(&self, u: &UltraToken, v: &UltraToken) -> Result<UltraToken> {
        Ok(if self.picks_left(u, v)? {
            v.clone()
        } else {
            u.clone()
        })
    }
}

/// Green's relation `D` of the `miñ` band: `uvu = u ∧ vuv = v`.
pub fn d_related(order: &Order, u: &UltraToken, v: &UltraToken) -> Result<bool> {
    d_related_with(&ClosedForm(order), u, v)
}

fn d_related_with(ops: &dyn SkewOps, u: &UltraToken, v: &UltraToken) -> Result<bool> {
    Ok(ops.min(&ops.min(u, v)?, u)? == *u && ops.min(&ops.min(v, u)?, v)? == *v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassKind {
    /// Point support: the class is `{u}`.
    Singleton,
    /// Left-half support: `miñ` returns its left argument on the class and
    /// `max̃` its right one.
    MinLeftZero,
    /// Right-half support: the dual.
    MinRightZero,
}

pub fn equiv_class_kind(u: &UltraToken) -> ClassKind {
    match u.support() {
        Support::Point(_) => ClassKind::Singleton,
        Support::LeftHalf(_) => ClassKind::MinLeftZero,
        Support::RightHalf(_) => ClassKind::MinRightZero,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LawStatus {
    Pass,
    Fail,
    Vacuous,
}

impl fmt::Display for LawStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LawStatus::Pass => "pass",
            LawStatus::Fail => "fail",
            LawStatus::Vacuous => "vacuous",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawOutcome {
    pub law: String,
    pub status: LawStatus,
    pub instances: u64,
    pub counterexamples: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub universe_size: usize,
    pub laws: Vec<LawOutcome>,
}

impl LawReport {
    pub fn all_pass(&self) -> bool {
        self.laws.iter().all(|l| l.status != LawStatus::Fail)
    }

    pub fn law(&self, name: &str) -> Option<&LawOutcome> {
        self.laws.iter().find(|l| l.law == name)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.laws
            .iter()
            .filter(|l| l.status == LawStatus::Fail)
            .map(|l| l.law.as_str())
            .collect()
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "universe of {} tokens", self.universe_size)?;
        for l in &self.laws {
            writeln!(
                f,
                "{:<28} {:<8} {:>6} instances",
                l.law,
                l.status.to_string(),
                l.instances
            )?;
            for c in &l.counterexamples {
                writeln!(f, "    {c}")?;
            }
        }
        Ok(())
    }
}

/// At most this many counterexamples are kept per law.
const MAX_COUNTEREXAMPLES: usize = 8;

struct Law {
    name: &'static str,
    instances: u64,
    failures: Vec<String>,
    vacuous: bool,
}

impl Law {
    fn new(name: &'static str) -> Self {
        Law {
            name,
            instances: 0,
            failures: Vec::new(),
            vacuous: false,
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    fn finish(mut self) -> LawOutcome {
        self.failures.sort();
        self.failures.dedup();
        let status = if !self.failures.is_empty() {
            LawStatus::Fail
        } else if self.vacuous {
            LawStatus::Vacuous
        } else {
            LawStatus::Pass
        };
        self.failures.truncate(MAX_COUNTEREXAMPLES);
        LawOutcome {
            law: self.name.to_string(),
            status,
            instances: self.instances,
            counterexamples: self.failures,
        }
    }
}

/// Names of the laws in the order they appear in a [`LawReport`].
pub const LAW_NAMES: [&str; 19] = [
    "associativity_min",
    "associativity_max",
    "idempotency_min",
    "idempotency_max",
    "quasi_triviality_min",
    "quasi_triviality_max",
    "absorption_min_max",
    "absorption_max_min",
    "absorption_min_max_right",
    "absorption_max_min_right",
    "distributivity_min_left",
    "distributivity_max_left",
    "distributivity_min_right",
    "distributivity_max_right",
    "commutativity_failure_set",
    "d_equals_equiv",
    "rectangular_classes",
    "class_orientation",
    "quotient_iso",
];

/// Checks every law of a distributive skew lattice on all pairs and triples
/// of `universe`, for the closed-form operations.
pub fn check_axioms(order: &Order, universe: &[UltraToken]) -> Result<LawReport> {
    check_axioms_with(order, universe, &ClosedForm(order))
}

/// As [`check_axioms`], for any pair of operations.
///
/// Laws about non-commutativity and about classes with several tokens are
/// reported as vacuous when no support carries two tokens.
pub fn check_axioms_with(
    order: &Order,
    universe: &[UltraToken],
    ops: &dyn SkewOps,
) -> Result<LawReport> {
    if universe.is_empty() {
        return Err(Error::EmptyUniverse);
    }
    for u in universe {
        u.check_term(order)?;
    }
    let lit = |u: &UltraToken| u.literal(order);
    let u = universe;
    let n = u.len();

    // operation tables by index
    let index: std::collections::HashMap<&UltraToken, usize> =
        u.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut min_t = vec![vec![usize::MAX; n]; n];
    let mut max_t = vec![vec![usize::MAX; n]; n];
    let mut qt_min = Law::new("quasi_triviality_min");
    let mut qt_max = Law::new("quasi_triviality_max");
    for i in 0..n {
        for j in 0..n {
            let m = ops.min(&u[i], &u[j])?;
            let x = ops.max(&u[i], &u[j])?;
            qt_min.check(m == u[i] || m == u[j], || {
                format!("min({}, {}) = {}", lit(&u[i]), lit(&u[j]), lit(&m))
            });
            qt_max.check(x == u[i] || x == u[j], || {
                format!("max({}, {}) = {}", lit(&u[i]), lit(&u[j]), lit(&x))
            });
            // results outside the universe cannot occur for quasi-trivial
            // operations; if they do, that law fails and the tables fall
            // back to the left argument
            min_t[i][j] = index.get(&m).copied().unwrap_or(i);
            max_t[i][j] = index.get(&x).copied().unwrap_or(i);
        }
    }
    let mn = |a: usize, b: usize| min_t[a][b];
    let mx = |a: usize, b: usize| max_t[a][b];
    let name = |i: usize| lit(&u[i]);

    let mut assoc_min = Law::new("associativity_min");
    let mut assoc_max = Law::new("associativity_max");
    let mut dist = [
        Law::new("distributivity_min_left"),
        Law::new("distributivity_max_left"),
        Law::new("distributivity_min_right"),
        Law::new("distributivity_max_right"),
    ];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let triple = || format!("({}, {}, {})", name(a), name(b), name(c));
                assoc_min.check(mn(mn(a, b), c) == mn(a, mn(b, c)), triple);
                assoc_max.check(mx(mx(a, b), c) == mx(a, mx(b, c)), triple);
                // x(y+z) = xy+xz, x+yz = (x+y)(x+z), (x+y)z = xz+yz, xy+z = (x+z)(y+z)
                dist[0].check(mn(a, mx(b, c)) == mx(mn(a, b), mn(a, c)), triple);
                dist[1].check(mx(a, mn(b, c)) == mn(mx(a, b), mx(a, c)), triple);
                dist[2].check(mn(mx(a, b), c) == mx(mn(a, c), mn(b, c)), triple);
                dist[3].check(mx(mn(a, b), c) == mn(mx(a, c), mx(b, c)), triple);
            }
        }
    }

    let mut idem_min = Law::new("idempotency_min");
    let mut idem_max = Law::new("idempotency_max");
    for a in 0..n {
        idem_min.check(mn(a, a) == a, || name(a));
        idem_max.check(mx(a, a) == a, || name(a));
    }

    let mut absorption = [
        Law::new("absorption_min_max"),
        Law::new("absorption_max_min"),
        Law::new("absorption_min_max_right"),
        Law::new("absorption_max_min_right"),
    ];
    let supp_eq = |a: usize, b: usize| u[a].support() == u[b].support();
    let shared = (0..n).any(|a| (0..n).any(|b| a != b && supp_eq(a, b)));
    let mut comm = Law::new("commutativity_failure_set");
    comm.vacuous = !shared;
    let mut d_eq = Law::new("d_equals_equiv");
    let mut rect = Law::new("rectangular_classes");
    rect.vacuous = !shared;
    let mut orient = Law::new("class_orientation");
    orient.vacuous = !shared;
    for (a, ua) in u.iter().enumerate() {
        for b in 0..n {
            let pair = || format!("({}, {})", name(a), name(b));
            // x(x+y) = x, x+xy = x, (x+y)y = y, xy+y = y
            absorption[0].check(mn(a, mx(a, b)) == a, pair);
            absorption[1].check(mx(a, mn(a, b)) == a, pair);
            absorption[2].check(mn(mx(a, b), b) == b, pair);
            absorption[3].check(mx(mn(a, b), b) == b, pair);

            let fails = mn(a, b) != mn(b, a) || mx(a, b) != mx(b, a);
            let predicted = a != b && supp_eq(a, b);
            comm.check(fails == predicted, || {
                format!("{}: commutes = {}", pair(), !fails)
            });

            let d = mn(mn(a, b), a) == a && mn(mn(b, a), b) == b;
            d_eq.check(d == supp_eq(a, b), || format!("{}: D = {d}", pair()));

            if supp_eq(a, b) {
                rect.check(mn(mn(a, b), a) == a && mx(mx(a, b), a) == a, pair);
                let expected = match equiv_class_kind(ua) {
                    ClassKind::Singleton => (a, a),
                    ClassKind::MinLeftZero => (a, b),
                    ClassKind::MinRightZero => (b, a),
                };
                orient.check((mn(a, b), mx(a, b)) == expected, || {
                    format!(
                        "{}: min = {}, max = {}",
                        pair(),
                        name(mn(a, b)),
                        name(mx(a, b))
                    )
                });
            }
        }
    }

    let mut iso = Law::new("quotient_iso");
    match quotient_with(order, universe, ops) {
        Ok(q) => {
            iso.instances = (q.classes.len() * q.classes.len()) as u64;
            iso.failures = q.mismatches;
        }
        Err(Error::CongruenceViolation(msg)) => {
            iso.check(false, || msg);
        }
        Err(e) => return Err(e),
    }

    let [d0, d1, d2, d3] = dist;
    let [a0, a1, a2, a3] = absorption;
    let laws = vec![
        assoc_min, assoc_max, idem_min, idem_max, qt_min, qt_max, a0, a1, a2, a3, d0, d1, d2, d3,
        comm, d_eq, rect, orient, iso,
    ];
    Ok(LawReport {
        universe_size: n,
        laws: laws.into_iter().map(Law::finish).collect(),
    })
}

/// The quotient of a universe by `≡`, with the induced operations.
#[derive(Debug, Clone)]
pub struct Quotient {
    /// Classes in increasing order of their supports.
    pub classes: Vec<(Support, Vec<UltraToken>)>,
    /// `meet[i][j]` is the class of `miñ(a, b)` for `a` in class `i` and `b`
    /// in class `j`.
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    /// Table cells where the induced operation differs from min/max of the
    /// supports.
    pub mismatches: Vec<String>,
}

impl Quotient {
    pub fn is_isomorphic(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Classes as support literals.
    pub fn class_literals(&self, order: &Order) -> Vec<String> {
        self.classes
            .iter()
            .map(|(s, _)| support_literal(order, s))
            .collect()
    }
}

/// Splits `universe` into `≡`-classes, checks that `miñ` and `max̃` respect
/// them, and compares the induced operations with min and max of the chain
/// of supports.
pub fn quotient_lattice(order: &Order, universe: &[UltraToken]) -> Result<Quotient> {
    quotient_with(order, universe, &ClosedForm(order))
}

pub fn quotient_with(
    order: &Order,
    universe: &[UltraToken],
    ops: &dyn SkewOps,
) -> Result<Quotient> {
    if universe.is_empty() {
        return Err(Error::EmptyUniverse);
    }
    let mut classes: Vec<(Support, Vec<UltraToken>)> = Vec::new();
    for u in universe {
        u.check_term(order)?;
        match classes.iter_mut().find(|(s, _)| s == u.support()) {
            Some((_, members)) => members.push(u.clone()),
            None => classes.push((u.support().clone(), vec![u.clone()])),
        }
    }
    classes
        .sort_by(|a, b| compare_keys(order, &support_key(order, &a.0), &support_key(order, &b.0)));
    let find = |t: &UltraToken| classes.iter().position(|(s, _)| s == t.support());

    let k = classes.len();
    let mut meet = vec![vec![0; k]; k];
    let mut join = vec![vec![0; k]; k];
    for i in 0..k {
        for j in 0..k {
            let mut seen: Option<(usize, usize)> = None;
            for a in &classes[i].1 {
                for b in &classes[j].1 {
                    let m = find(&ops.min(a, b)?).ok_or_else(|| {
                        Error::CongruenceViolation("result outside the universe".into())
                    })?;
                    let x = find(&ops.max(a, b)?).ok_or_else(|| {
                        Error::CongruenceViolation("result outside the universe".into())
                    })?;
                    match seen {
                        None => seen = Some((m, x)),
                        Some(prev) if prev != (m, x) => {
                            return Err(Error::CongruenceViolation(format!(
                                "classes {} and {} do not determine the class of the result",
                                support_literal(order, &classes[i].0),
                                support_literal(order, &classes[j].0)
                            )));
                        }
                        _ => {}
                    }
                }
            }
            let (m, x) = seen.expect("classes are nonempty");
            meet[i][j] = m;
            join[i][j] = x;
        }
    }
    // classes are sorted by support, so min/max of supports are min/max of
    // indices
    let mut mismatches = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if meet[i][j] != i.min(j) || join[i][j] != i.max(j) {
                mismatches.push(format!(
                    "[{}] ∧ [{}] = [{}], ∨ = [{}]",
                    support_literal(order, &classes[i].0),
                    support_literal(order, &classes[j].0),
                    support_literal(order, &classes[meet[i][j]].0),
                    support_literal(order, &classes[join[i][j]].0)
                ));
            }
        }
    }
    Ok(Quotient {
        classes,
        meet,
        join,
        mismatches,
    })
}
