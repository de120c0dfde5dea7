//! The verification driver: configured terms × suites, with reproducible
//! machine-readable reports.

use std::cmp::Ordering;
use std::fmt;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gap::{e_minus_2, sqrt_gap, GapRegistry};
use crate::order::{CompletionPos, Cut, Direction, Order};
use crate::relations::{decide, equiv, ext_rel, reflexivity_kind, tri_leq, ReflexivityKind, Rel};
use crate::skew::{check_axioms_with, ClosedForm, LawStatus, MutantOps, SkewMutant, SkewOps};
use crate::stype::{dense_profile_sampled, local_contribution, s_of_term, Locus};
use crate::support::{
    enumerate_supports, interval_membership, support_compare, support_literal, tokens_for,
    validate_support, IntervalSet, Support, UltraToken,
};
use crate::term::{parse_order_term, OrderTerm};

use super::brute::{finite_bruteforce, MAX_N};
use super::oracle::{oracle_ext_rel, oracle_minmax_set, MinMax, OracleOps};

/// Fin(1..5), ω, ω*, ζ, η, ω + ω*, ω + ζ + ω*, ω·ω, ζ·ω, 2·ζ.
pub const STANDARD_TERMS: [&str; 14] = [
    "1",
    "2",
    "3",
    "4",
    "5",
    "w",
    "w*",
    "z",
    "e",
    "w + w*",
    "w + z + w*",
    "w * w",
    "z * w",
    "2 * z",
];

/// Fewest interval sets tried per pair of tokens, unless the order has
/// fewer interval sets altogether.
pub const MIN_SETS_PER_PAIR: usize = 20;
const MAX_COUNTEREXAMPLES: usize = 8;
/// Tokens over which every subset is checked for a least class.
const SUBSET_WINDOW: usize = 12;
const SKEW_UNIVERSE: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    /// Definitional evaluation on finite orders against the originals and
    /// the closed forms.
    Bruteforce,
    /// `oracle_ext_rel` against `ext_rel`.
    RelationOracle,
    /// Definitional `S ∈ op̃(u, v)` against membership in the closed form.
    MinmaxOracle,
    /// Transitivity, antisymmetry and connectedness failures, reflexivity.
    RelationLaws,
    /// `⊴` is a total preorder whose classes are the supports.
    Preorder,
    /// On well-orders `≤̃` is `⊴`, and sets of tokens have least classes.
    WellOrder,
    /// Skew lattice laws and the quotient, on small universes.
    SkewLaws,
    /// `s(X)`: closed forms, local blocks, dense profiles.
    SupportTypes,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Bruteforce,
        Suite::RelationOracle,
        Suite::MinmaxOracle,
        Suite::RelationLaws,
        Suite::Preorder,
        Suite::WellOrder,
        Suite::SkewLaws,
        Suite::SupportTypes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bruteforce => "bruteforce",
            Suite::RelationOracle => "relation_oracle",
            Suite::MinmaxOracle => "minmax_oracle",
            Suite::RelationLaws => "relation_laws",
            Suite::Preorder => "preorder",
            Suite::WellOrder => "well_order",
            Suite::SkewLaws => "skew_laws",
            Suite::SupportTypes => "support_types",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Faults injected on purpose to show the suites detect them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mutant {
    /// `ext_rel` answers for the relation with the other strictness.
    StrictnessFlip,
    SwappedBranch,
    DroppedEquality,
}

impl Mutant {
    fn skew(self) -> Option<SkewMutant> {
        match self {
            Mutant::StrictnessFlip => None,
            Mutant::SwappedBranch => Some(SkewMutant::SwappedBranch),
            Mutant::DroppedEquality => Some(SkewMutant::DroppedEquality),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub terms: Vec<String>,
    /// Gaps registered on every order: any of `sqrt2`, `sqrt3`, `e_minus_2`.
    pub gaps: Vec<String>,
    pub budget: usize,
    pub tokens_per_support: usize,
    pub seed: u64,
    pub suites: Vec<Suite>,
    /// Off by default so that reports are byte-identical across runs.
    pub record_timing: bool,
    /// Also check the skew laws for the operations built on the oracle.
    pub oracle_laws: bool,
    pub mutant: Option<Mutant>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            terms: STANDARD_TERMS.iter().map(|s| s.to_string()).collect(),
            gaps: vec!["sqrt2".into(), "sqrt3".into()],
            budget: 12,
            tokens_per_support: 2,
            seed: 42,
            suites: Suite::ALL.to_vec(),
            record_timing: false,
            oracle_laws: true,
            mutant: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub term: String,
    pub instances: u64,
    pub passed: u64,
    pub failed: u64,
    pub vacuous: u64,
    /// The first few failures.
    pub counterexamples: Vec<Counterexample>,
    pub seed: u64,
    pub wall_ms: u64,
}

impl SuiteReport {
    fn new(suite: Suite, term: &str, seed: u64) -> Self {
        SuiteReport {
            suite,
            term: term.to_string(),
            instances: 0,
            passed: 0,
            failed: 0,
            vacuous: 0,
            counterexamples: Vec::new(),
            seed,
            wall_ms: 0,
        }
    }

    fn check(&mut self, ok: bool, cx: impl FnOnce() -> Counterexample) {
        self.instances += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(cx());
            }
        }
    }

    fn check_eq<T: PartialEq + fmt::Debug>(
        &mut self,
        inputs: impl FnOnce() -> String,
        expected: T,
        actual: T,
    ) {
        let ok = expected == actual;
        self.check(ok, || Counterexample {
            inputs: inputs(),
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
        });
    }

    fn skip(&mut self) {
        self.instances += 1;
        self.vacuous += 1;
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub seed: u64,
    pub reports: Vec<SuiteReport>,
}

impl RunReport {
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(SuiteReport::ok)
    }

    pub fn failing(&self) -> Vec<&SuiteReport> {
        self.reports.iter().filter(|r| !r.ok()).collect()
    }

    pub fn for_suite(&self, suite: Suite) -> impl Iterator<Item = &SuiteReport> {
        self.reports.iter().filter(move |r| r.suite == suite)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed {}", self.seed)?;
        for r in &self.reports {
            let status = if r.ok() { "ok" } else { "FAIL" };
            writeln!(
                f,
                "{status:<4} {:<16} {:<12} {:>8} instances {:>8} passed {:>4} failed {:>6} vacuous",
                r.suite.name(),
                r.term,
                r.instances,
                r.passed,
                r.failed,
                r.vacuous
            )?;
            for c in &r.counterexamples {
                writeln!(
                    f,
                    "       {}: expected {}, got {}",
                    c.inputs, c.expected, c.actual
                )?;
            }
        }
        let failing = self.failing().len();
        write!(f, "{} reports, {failing} failing", self.reports.len())
    }
}

fn registry(names: &[String]) -> Result<GapRegistry> {
    let mut specs = Vec::new();
    for n in names {
        specs.push(match n.as_str() {
            "sqrt2" => sqrt_gap("sqrt2", 2),
            "sqrt3" => sqrt_gap("sqrt3", 3),
            "e_minus_2" => e_minus_2(),
            _ => return Err(Error::Config(format!("unknown gap `{n}`"))),
        });
    }
    Ok(GapRegistry::from_specs(specs))
}

/// One configured term with its sampled supports and tokens.
struct Subject {
    label: String,
    order: Order,
    supports: Vec<Support>,
    tokens: Vec<UltraToken>,
}

impl Subject {
    fn lit(&self, u: &UltraToken) -> String {
        u.literal(&self.order)
    }

    fn slit(&self, s: &Support) -> String {
        support_literal(&self.order, s)
    }
}

pub fn run_suite(config: &RunConfig) -> Result<RunReport> {
    if config.suites.is_empty() {
        return Err(Error::Config("no suites selected".into()));
    }
    if config.terms.is_empty() {
        return Err(Error::Config("no terms configured".into()));
    }
    if config.budget == 0 || config.tokens_per_support == 0 {
        return Err(Error::Config(
            "budget and tokens per support must be at least 1".into(),
        ));
    }
    let gaps = registry(&config.gaps)?;
    let mut subjects = Vec::new();
    for t in &config.terms {
        let order = Order::with_gaps(parse_order_term(t)?, gaps.clone())?;
        let supports = enumerate_supports(&order, config.budget)?;
        let tokens = tokens_for(&order, &supports, config.tokens_per_support)?;
        subjects.push(Subject {
            label: t.clone(),
            order,
            supports,
            tokens,
        });
    }
    let mut suites = config.suites.clone();
    suites.sort();
    suites.dedup();

    let mut reports = Vec::new();
    for suite in suites {
        for subj in &subjects {
            let start = Instant::now();
            let mut rep = SuiteReport::new(suite, &subj.label, config.seed);
            let applies = match suite {
                Suite::Bruteforce => bruteforce(subj, &mut rep)?,
                Suite::RelationOracle => relation_oracle(subj, config, &mut rep)?,
                Suite::MinmaxOracle => minmax_oracle(subj, config, &mut rep)?,
                Suite::RelationLaws => relation_laws(subj, &mut rep)?,
                Suite::Preorder => preorder(subj, &mut rep)?,
                Suite::WellOrder => well_order(subj, &mut rep)?,
                Suite::SkewLaws => skew_laws(subj, config, &mut rep)?,
                Suite::SupportTypes => support_types(subj, config, &mut rep)?,
            };
            if config.record_timing {
                rep.wall_ms = start.elapsed().as_millis() as u64;
            }
            if applies {
                reports.push(rep);
            }
        }
    }
    Ok(RunReport {
        seed: config.seed,
        reports,
    })
}

fn bruteforce(subj: &Subject, rep: &mut SuiteReport) -> Result<bool> {
    let OrderTerm::Fin(n) = *subj.order.term() else {
        return Ok(false);
    };
    let n = n as usize;
    if n == 0 || n > MAX_N {
        return Ok(false);
    }
    let brute = finite_bruteforce(n)?;
    let agreeing = brute.instances - brute.mismatches.len() as u64;
    rep.instances += agreeing;
    rep.passed += agreeing;
    for m in &brute.mismatches {
        rep.check(false, || Counterexample {
            inputs: m.clone(),
            expected: "the finite relation or operation".into(),
            actual: m.clone(),
        });
    }

    // the symbolic path restricted to principal tokens matches the tables
    let o = &subj.order;
    let pts: Vec<UltraToken> = o
        .enumerate_elements(Direction::Front, n)?
        .into_iter()
        .map(|p| UltraToken::principal(o, p))
        .collect::<Result<_>>()?;
    for (x, u) in pts.iter().enumerate() {
        for (y, v) in pts.iter().enumerate() {
            for rel in Rel::ALL {
                rep.check_eq(
                    || format!("{x} {rel} {y}"),
                    brute.relation(rel)[x][y],
                    ext_rel(o, rel, u, v)?,
                );
            }
            let m = pts
                .iter()
                .position(|t| *t == crate::skew::ext_min(o, u, v).unwrap());
            rep.check_eq(|| format!("min({x}, {y})"), brute.min_table[x][y], m);
            let m = pts
                .iter()
                .position(|t| *t == crate::skew::ext_max(o, u, v).unwrap());
            rep.check_eq(|| format!("max({x}, {y})"), brute.max_table[x][y], m);
        }
    }
    Ok(true)
}

fn mutated_ext_rel(order: &Order, rel: Rel, u: &UltraToken, v: &UltraToken) -> Result<bool> {
    let o = support_compare(order, u.support(), v.support())?;
    Ok(decide(rel.flip_strictness(), o, u.support()))
}

fn relation_oracle(subj: &Subject, config: &RunConfig, rep: &mut SuiteReport) -> Result<bool> {
    let o = &subj.order;
    for u in &subj.tokens {
        for v in &subj.tokens {
            for rel in Rel::ALL {
                let expected = oracle_ext_rel(o, rel, u, v)?;
                let actual = match config.mutant {
                    Some(Mutant::StrictnessFlip) => mutated_ext_rel(o, rel, u, v)?,
                    _ => ext_rel(o, rel, u, v)?,
                };
                rep.check_eq(
                    || format!("{} {rel} {}", subj.lit(u), subj.lit(v)),
                    expected,
                    actual,
                );
            }
        }
    }
    Ok(true)
}

/// Interval sets probing the tokens of `subj`: every subset of a small
/// finite order; otherwise the four segments at each sampled element, and
/// for each support the two halves around it and unions of segments on
/// either side of it.
pub(crate) fn probe_sets(
    order: &Order,
    supports: &[Support],
    budget: usize,
    seed: u64,
) -> Result<Vec<IntervalSet>> {
    let mut sets: Vec<IntervalSet> = vec![IntervalSet::empty(order), IntervalSet::full(order)];
    let mut push = |s: IntervalSet| {
        if !sets.contains(&s) {
            sets.push(s);
        }
    };
    match *order.term() {
        OrderTerm::Fin(n) if n <= 8 => {
            let pts = order.enumerate_elements(Direction::Front, n as usize)?;
            for mask in 0u32..1 << n {
                let mut ivs = Vec::new();
                for (i, p) in pts.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        ivs.push((order.cut_before(p)?, order.cut_after(p)?));
                    }
                }
                push(IntervalSet::from_intervals(order, ivs)?);
            }
        }
        _ => {
            for p in order.sample_elements(budget)? {
                for rel in Rel::ALL {
                    push(IntervalSet::from_segment(
                        order,
                        rel,
                        &CompletionPos::Elem(p.clone()),
                    )?);
                }
            }
            let view = order.view();
            for s in supports {
                let (lo, hi) = match s {
                    Support::Point(y) => (order.cut_before(y)?, order.cut_after(y)?),
                    Support::LeftHalf(c) | Support::RightHalf(c) => (c.clone(), c.clone()),
                };
                push(IntervalSet::from_intervals(
                    order,
                    [(Cut::Bottom, lo.clone())],
                )?);
                push(IntervalSet::from_intervals(
                    order,
                    [(hi.clone(), Cut::Top)],
                )?);
                let below = view.witness(&Cut::Bottom, &lo);
                let above = view.witness(&hi, &Cut::Top);
                if let (Some(a), Some(b)) = (below, above) {
                    let (ca, cb) = (order.cut_after(&a)?, order.cut_before(&b)?);
                    push(IntervalSet::from_intervals(
                        order,
                        [(ca.clone(), lo.clone()), (hi.clone(), cb.clone())],
                    )?);
                    push(IntervalSet::from_intervals(
                        order,
                        [(Cut::Bottom, ca), (cb, Cut::Top)],
                    )?);
                }
            }
        }
    }
    sets.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    Ok(sets)
}

fn minmax_oracle(subj: &Subject, config: &RunConfig, rep: &mut SuiteReport) -> Result<bool> {
    let o = &subj.order;
    let sets = probe_sets(o, &subj.supports, config.budget, config.seed)?;
    let exhaustive = matches!(*o.term(), OrderTerm::Fin(n) if sets.len() == 1 << n);
    rep.check(sets.len() >= MIN_SETS_PER_PAIR || exhaustive, || {
        Counterexample {
            inputs: "probe sets".into(),
            expected: format!("at least {MIN_SETS_PER_PAIR}"),
            actual: sets.len().to_string(),
        }
    });
    let closed = ClosedForm(o);
    let mutant = config.mutant.and_then(Mutant::skew).map(|m| MutantOps {
        order: o,
        mutant: m,
    });
    let ops: &dyn SkewOps = match &mutant {
        Some(m) => m,
        None => &closed,
    };
    // the oracle's set {x : {y : op(x, y) ∈ S} ∈ v} does not involve u
    for v in &subj.tokens {
        for op in [MinMax::Min, MinMax::Max] {
            let inner: Vec<IntervalSet> = sets
                .iter()
                .map(|s| oracle_minmax_set(o, op, v, s))
                .collect::<Result<_>>()?;
            for u in &subj.tokens {
                let result = match op {
                    MinMax::Min => ops.min(u, v)?,
                    MinMax::Max => ops.max(u, v)?,
                };
                for (s, a) in sets.iter().zip(&inner) {
                    let expected = interval_membership(o, a, u)?;
                    let actual = interval_membership(o, s, &result)?;
                    rep.check_eq(
                        || {
                            format!(
                                "{} ∈ {}({}, {})",
                                s.describe(o),
                                op.name(),
                                subj.lit(u),
                                subj.lit(v)
                            )
                        },
                        expected,
                        actual,
                    );
                }
            }
        }
    }
    Ok(true)
}

fn same_support_side<'a>(u: &'a UltraToken, v: &UltraToken) -> Option<&'a Support> {
    (u.support() == v.support()).then_some(u.support())
}

fn relation_laws(subj: &Subject, rep: &mut SuiteReport) -> Result<bool> {
    let o = &subj.order;
    let t = &subj.tokens;
    let n = t.len();
    let mut table = vec![vec![[false; 4]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for (k, rel) in Rel::ALL.into_iter().enumerate() {
                table[i][j][k] = ext_rel(o, rel, &t[i], &t[j])?;
            }
        }
    }
    let (lt, le, gt, ge) = (0, 1, 2, 3);
    let name = |i: usize| subj.lit(&t[i]);

    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for (k, rel) in Rel::ALL.into_iter().enumerate() {
                    let ok = !(table[a][b][k] && table[b][c][k]) || table[a][c][k];
                    rep.check(ok, || Counterexample {
                        inputs: format!("{} {rel} {} {rel} {}", name(a), name(b), name(c)),
                        expected: "transitive".into(),
                        actual: format!("not {} {rel} {}", name(a), name(c)),
                    });
                }
                // the mixed cases of the distributivity argument force u = v = w principal
                let iii = table[a][b][le] && table[a][c][ge] && table[b][c][le];
                let vi = table[a][b][ge] && table[a][c][le] && table[b][c][ge];
                let all_same_point = a == b && b == c && t[a].is_principal();
                rep.check(!(iii || vi) || all_same_point, || Counterexample {
                    inputs: format!("({}, {}, {})", name(a), name(b), name(c)),
                    expected: "u = v = w principal".into(),
                    actual: "distinct or non-principal".into(),
                });
            }
        }
    }

    let mut witness = false;
    for a in 0..n {
        for b in 0..n {
            let pair = || format!("({}, {})", name(a), name(b));
            let shared = same_support_side(&t[a], &t[b]);
            let left = matches!(shared, Some(Support::LeftHalf(_)));
            let right = matches!(shared, Some(Support::RightHalf(_)));
            rep.check_eq(
                || format!("antisymmetry of le fails at {}", pair()),
                a != b && left,
                a != b && table[a][b][le] && table[b][a][le],
            );
            rep.check_eq(
                || format!("antisymmetry of ge fails at {}", pair()),
                a != b && right,
                a != b && table[a][b][ge] && table[b][a][ge],
            );
            rep.check_eq(
                || format!("le disconnected at {}", pair()),
                right,
                !(table[a][b][le] || table[b][a][le]),
            );
            rep.check_eq(
                || format!("ge disconnected at {}", pair()),
                left,
                !(table[a][b][ge] || table[b][a][ge]),
            );
            rep.check_eq(
                || format!("le and ge both at {}", pair()),
                a == b && t[a].is_principal(),
                table[a][b][le] && table[a][b][ge],
            );
            rep.check(table[a][b][le] || table[a][b][ge], || Counterexample {
                inputs: pair(),
                expected: "le or ge".into(),
                actual: "neither".into(),
            });
            witness |= table[a][b][le] != table[b][a][ge];
        }
        let kind = match (table[a][a][lt], table[a][a][gt]) {
            (true, false) => Some(ReflexivityKind::LtReflexive),
            (false, true) => Some(ReflexivityKind::GtReflexive),
            (false, false) if table[a][a][le] && table[a][a][ge] => {
                Some(ReflexivityKind::Principal)
            }
            _ => None,
        };
        rep.check_eq(
            || format!("reflexivity of {}", name(a)),
            Some(reflexivity_kind(&t[a])),
            kind,
        );
    }
    if t.iter().all(UltraToken::is_principal) {
        rep.skip();
    } else {
        rep.check(witness, || Counterexample {
            inputs: "all pairs".into(),
            expected: "some le(u, v) != ge(v, u)".into(),
            actual: "none".into(),
        });
    }
    Ok(true)
}

fn preorder(subj: &Subject, rep: &mut SuiteReport) -> Result<bool> {
    let o = &subj.order;
    let t = &subj.tokens;
    let n = t.len();
    let mut tri = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            tri[i][j] = tri_leq(o, &t[i], &t[j])?;
        }
    }
    let name = |i: usize| subj.lit(&t[i]);
    for a in 0..n {
        rep.check_eq(|| format!("{} ⊴ itself", name(a)), true, tri[a][a]);
        for b in 0..n {
            let pair = || format!("({}, {})", name(a), name(b));
            rep.check_eq(
                || format!("totality at {}", pair()),
                true,
                tri[a][b] || tri[b][a],
            );
            let same = t[a].support() == t[b].support();
            rep.check_eq(|| format!("≡ at {}", pair()), same, equiv(o, &t[a], &t[b])?);
            rep.check_eq(
                || format!("mutual ⊴ at {}", pair()),
                same,
                tri[a][b] && tri[b][a],
            );
            let by_support =
                support_compare(o, t[a].support(), t[b].support())? != Ordering::Greater;
            rep.check_eq(
                || format!("quotient order at {}", pair()),
                by_support,
                tri[a][b],
            );
            for c in 0..n {
                rep.check(!(tri[a][b] && tri[b][c]) || tri[a][c], || Counterexample {
                    inputs: format!("{} ⊴ {} ⊴ {}", name(a), name(b), name(c)),
                    expected: "transitive".into(),
                    actual: "not transitive".into(),
                });
            }
        }
    }
    Ok(true)
}

fn is_well_order(t: &OrderTerm) -> bool {
    match t {
        OrderTerm::Fin(_) | OrderTerm::Omega => true,
        OrderTerm::OmegaStar | OrderTerm::Zeta | OrderTerm::Eta => false,
        OrderTerm::Sum(parts) => parts.iter().all(is_well_order),
        OrderTerm::Prod(a, b) => is_well_order(a) && is_well_order(b),
    }
}

fn well_order(subj: &Subject, rep: &mut SuiteReport) -> Result<bool> {
    let o = &subj.order;
    if !is_well_order(o.term()) || matches!(o.term(), OrderTerm::Fin(_)) {
        return Ok(false);
    }
    let t = &subj.tokens;
    for u in t {
        for v in t {
            let le = ext_rel(o, Rel::Le, u, v)?;
            rep.check_eq(
                || format!("le vs ⊴ at ({}, {})", subj.lit(u), subj.lit(v)),
                tri_leq(o, u, v)?,
                le,
            );
        }
    }
    let window = &t[..t.len().min(SUBSET_WINDOW)];
    let k = window.len();
    let mut tri = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            tri[i][j] = tri_leq(o, &window[i], &window[j])?;
        }
    }
    for mask in 1u32..1 << k {
        let members: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        let least = members.iter().any(|&m| members.iter().all(|&x| tri[m][x]));
        rep.check(least, || Counterexample {
            inputs: members
                .iter()
                .map(|&i| subj.lit(&window[i]))
                .collect::<Vec<_>>()
                .join(", "),
            expected: "a ⊴-least class".into(),
            actual: "none".into(),
        });
    }
    Ok(true)
}

/// Universes of at most six tokens: for each support carrying several
/// tokens, two of them together with tokens on the nearest other supports.
pub(crate) fn skew_universes(supports: &[Support], tokens: &[UltraToken]) -> Vec<Vec<UltraToken>> {
    let on = |s: &Support| {
        tokens
            .iter()
            .filter(|t| t.support() == s)
            .cloned()
            .collect::<Vec<_>>()
    };
    let mut out = Vec::new();
    for (i, s) in supports.iter().enumerate() {
        let here = on(s);
        if here.len() < 2 {
            continue;
        }
        let mut u: Vec<UltraToken> = here.into_iter().take(2).collect();
        for d in 1..supports.len() {
            for j in [i.checked_sub(d), Some(i + d)].into_iter().flatten() {
                if u.len() < SKEW_UNIVERSE {
                    if let Some(t) = supports.get(j).and_then(|s| on(s).into_iter().next()) {
                        u.push(t);
                    }
                }
            }
        }
        out.push(u);
    }
    if out.is_empty() {
        out.push(tokens.iter().take(SKEW_UNIVERSE).cloned().collect());
    }
    out
}

fn skew_laws(subj: &Subject, config: &RunConfig, rep: &mut SuiteReport) -> Result<bool> {
    let o = &subj.order;
    let closed = ClosedForm(o);
    let mutant = config.mutant.and_then(Mutant::skew).map(|m| MutantOps {
        order: o,
        mutant: m,
    });
    let oracle = OracleOps(o);
    let mut passes: Vec<(&str, &dyn SkewOps)> = vec![match &mutant {
        Some(m) => ("mutant", m as &dyn SkewOps),
        None => ("closed form", &closed),
    }];
    if config.oracle_laws {
        passes.push(("oracle", &oracle));
    }
    for universe in skew_universes(&subj.supports, &subj.tokens) {
        let names = universe
            .iter()
            .map(|u| subj.lit(u))
            .collect::<Vec<_>>()
            .join(", ");
        for (pass, ops) in &passes {
            let report = check_axioms_with(o, &universe, *ops)?;
            for law in &report.laws {
                match law.status {
                    LawStatus::Vacuous => rep.skip(),
                    status => rep.check(status == LawStatus::Pass, || Counterexample {
                        inputs: format!("{pass} {} on [{names}]", law.law),
                        expected: "holds".into(),
                        actual: law.counterexamples.first().cloned().unwrap_or_default(),
                    }),
                }
            }
        }
    }
    Ok(true)
}

/// Supports met walking inward from one end of the order, as long as the
/// walk stays on consecutive loci.
fn end_window(order: &Order, direction: Direction, count: usize) -> Result<Vec<Support>> {
    let (end, extreme) = match direction {
        Direction::Front => (Cut::Bottom, order.least()),
        Direction::Back => (Cut::Top, order.greatest()),
    };
    let mut out = local_contribution(order, &Locus::Cut(end))?;
    let mut cur = extreme;
    let mut steps = 0;
    while let Some(p) = cur {
        if steps == count {
            break;
        }
        let mut here = local_contribution(order, &Locus::Elem(p.clone()))?;
        if direction == Direction::Back {
            here.reverse();
        }
        out.extend(here);
        steps += 1;
        cur = match direction {
            Direction::Front => order.min_above(&order.cut_after(&p)?)?,
            Direction::Back => order.max_below(&order.cut_before(&p)?)?,
        };
    }
    Ok(out)
}

fn support_types(subj: &Subject, config: &RunConfig, rep: &mut SuiteReport) -> Result<bool> {
    let o = &subj.order;
    let budget = config.budget;
    let dense = o.term().has_dense_content();

    if dense {
        rep.check_eq(
            || "s of a dense term".into(),
            Err(Error::NotClosedForm),
            s_of_term(o.term()),
        );
        let profile = dense_profile_sampled(o, budget)?;
        for b in profile.points.iter() {
            rep.check_eq(
                || format!("block at {}", b.locus),
                (3, true),
                (b.supports.len(), b.consecutive),
            );
        }
        for b in profile.gaps.iter() {
            rep.check_eq(
                || format!("block at gap {}", b.locus),
                (2, true),
                (b.supports.len(), b.consecutive),
            );
        }
        rep.check_eq(
            || "bottom end".into(),
            o.least().is_none().then_some(true),
            profile.bottom_end,
        );
        rep.check_eq(
            || "top end".into(),
            o.greatest().is_none().then_some(true),
            profile.top_end,
        );
    } else {
        // a support is a left (right) limit in s(X) exactly when it is a
        // left (right) half, so both ends of s(X) must show the same
        // pattern as the supports met walking in from the ends of X
        let s = Order::new(s_of_term(o.term())?)?;
        for direction in [Direction::Front, Direction::Back] {
            let window = end_window(o, direction, budget)?;
            let shape: Vec<(bool, bool)> = window
                .iter()
                .map(|w| {
                    (
                        matches!(w, Support::LeftHalf(_)),
                        matches!(w, Support::RightHalf(_)),
                    )
                })
                .collect();
            let mut got = Vec::new();
            let mut cur = match direction {
                Direction::Front => s.least(),
                Direction::Back => s.greatest(),
            };
            while let Some(p) = cur {
                if got.len() == shape.len() {
                    break;
                }
                let c = s.classify_position(&p)?;
                got.push((c.is_left_limit, c.is_right_limit));
                cur = match direction {
                    Direction::Front => s.min_above(&s.cut_after(&p)?)?,
                    Direction::Back => s.max_below(&s.cut_before(&p)?)?,
                };
            }
            rep.check_eq(
                || format!("{direction:?} end of s({})", subj.label),
                shape,
                got,
            );
        }
    }

    // contributions concatenated in locus order are increasing
    let mut loci: Vec<(CompletionPos, Locus)> = vec![
        (CompletionPos::Bottom, Locus::Cut(Cut::Bottom)),
        (CompletionPos::Top, Locus::Cut(Cut::Top)),
    ];
    for p in o.sample_elements(budget)? {
        loci.push((CompletionPos::Elem(p.clone()), Locus::Elem(p)));
    }
    for c in o.sample_cuts(budget)? {
        if o.is_gap(&c)? {
            loci.push((CompletionPos::Gap(c.clone()), Locus::Cut(c)));
            continue;
        }
        // halves at other cuts belong to the neighbouring elements
        let n = local_contribution(o, &Locus::Cut(c.clone()))?.len();
        rep.check_eq(|| format!("non-gap cut {}", o.cut_literal(&c)), 0, n);
        for p in [o.max_below(&c)?, o.min_above(&c)?].into_iter().flatten() {
            loci.push((CompletionPos::Elem(p.clone()), Locus::Elem(p)));
        }
    }
    loci.sort_by(|a, b| o.position_compare(&a.0, &b.0).expect("validated loci"));
    loci.dedup_by(|a, b| a.0 == b.0);
    let mut seq: Vec<Support> = Vec::new();
    for (_, l) in &loci {
        seq.extend(local_contribution(o, l)?);
    }
    for w in seq.windows(2) {
        rep.check_eq(
            || format!("{} before {}", subj.slit(&w[0]), subj.slit(&w[1])),
            Ordering::Less,
            support_compare(o, &w[0], &w[1])?,
        );
    }
    for s in &subj.supports {
        rep.check_eq(
            || format!("{} is contributed", subj.slit(s)),
            true,
            seq.contains(s),
        );
    }

    // jumps between consecutive elements carry no half
    for p in o.sample_elements(budget)? {
        let after = o.cut_after(&p)?;
        if let Some(q) = o.min_above(&after)? {
            let before = o.cut_before(&q)?;
            let l = validate_support(o, &Support::LeftHalf(before)).is_err();
            let r = validate_support(o, &Support::RightHalf(after.clone())).is_err();
            rep.check_eq(
                || format!("jump after {p}"),
                (true, true, 0),
                (l, r, local_contribution(o, &Locus::Cut(after))?.len()),
            );
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(terms: &[&str], suites: &[Suite]) -> RunConfig {
        RunConfig {
            terms: terms.iter().map(|s| s.to_string()).collect(),
            budget: 6,
            suites: suites.to_vec(),
            ..RunConfig::default()
        }
    }

    #[test]
    fn config_errors() {
        let c = RunConfig {
            suites: vec![],
            ..RunConfig::default()
        };
        assert!(matches!(run_suite(&c), Err(Error::Config(_))));
        let c = RunConfig {
            gaps: vec!["pi".into()],
            ..RunConfig::default()
        };
        assert!(matches!(run_suite(&c), Err(Error::Config(_))));
        let c = RunConfig {
            budget: 0,
            ..RunConfig::default()
        };
        assert!(matches!(run_suite(&c), Err(Error::Config(_))));
    }

    #[test]
    fn config_json_defaults() {
        let c: RunConfig = serde_json::from_str(r#"{"seed": 7, "terms": ["w"]}"#).unwrap();
        assert_eq!(c.seed, 7);
        assert_eq!(c.budget, 12);
        assert!(serde_json::from_str::<RunConfig>(r#"{"bogus": 1}"#).is_err());
    }

    #[test]
    fn strictness_mutant_is_caught() {
        let mut c = quick(&["w"], &[Suite::RelationOracle]);
        assert!(run_suite(&c).unwrap().all_pass());
        c.mutant = Some(Mutant::StrictnessFlip);
        let r = run_suite(&c).unwrap();
        assert!(!r.all_pass());
        assert!(
            r.reports[0].counterexamples[0]
                .inputs
                .starts_with("pt:0 lt pt:0"),
            "{r}"
        );
    }

    #[test]
    fn probe_sets_are_plentiful() {
        for t in ["w", "z", "e", "w + w*", "2 * z", "5"] {
            let o = Order::parse(t).unwrap();
            let ss = enumerate_supports(&o, 12).unwrap();
            assert!(
                probe_sets(&o, &ss, 12, 1).unwrap().len() >= MIN_SETS_PER_PAIR,
                "{t}"
            );
        }
        let o = Order::parse("3").unwrap();
        assert_eq!(probe_sets(&o, &[], 12, 1).unwrap().len(), 8);
    }

    #[test]
    fn universes_share_a_support() {
        let o = Order::parse("z").unwrap();
        let ss = enumerate_supports(&o, 4).unwrap();
        let ts = tokens_for(&o, &ss, 2).unwrap();
        let us = skew_universes(&ss, &ts);
        assert_eq!(us.len(), 2);
        for u in us {
            assert!(u.len() <= SKEW_UNIVERSE);
            assert_eq!(u[0].support(), u[1].support());
        }
    }

    #[test]
    fn deterministic() {
        let c = quick(&["z", "3"], &[Suite::MinmaxOracle, Suite::Bruteforce]);
        assert_eq!(
            run_suite(&c).unwrap().to_json(),
            run_suite(&c).unwrap().to_json()
        );
    }
}
