//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::process::ExitCode;

use ultraorder::gap::{sqrt_gap, GapRegistry};
use ultraorder::harness::{finite_bruteforce, run_suite, RunConfig, Suite, STANDARD_TERMS};
use ultraorder::order::Order;
use ultraorder::relations::{equiv, ext_rel, tri_leq, Rel};
use ultraorder::skew::{
    check_axioms, check_axioms_with, d_related, equiv_class_kind, ext_max, ext_min,
    quotient_lattice, ClassKind, LawStatus, MutantOps, SkewMutant,
};
use ultraorder::stype::{dense_profile_sampled, s_iterate, s_of_term};
use ultraorder::support::{
    enumerate_supports, make_support, support_compare, tokens_for, Support, UltraToken,
};
use ultraorder::term::{normalize_term, parse_order_term, OrderTerm};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gaps() -> GapRegistry {
    GapRegistry::from_specs(vec![sqrt_gap("sqrt2", 2), sqrt_gap("sqrt3", 3)])
}

fn order(text: &str) -> Order {
    let t = parse_order_term(text).unwrap();
    Order::with_gaps(t, gaps()).unwrap()
}

fn suite_run(suite: Suite, terms: &[&str]) -> Outcome {
    let config = RunConfig {
        terms: terms.iter().map(|s| s.to_string()).collect(),
        suites: vec![suite],
        ..RunConfig::default()
    };
    let run = run_suite(&config).map_err(|e| e.to_string())?;
    let reports: Vec<_> = run.for_suite(suite).collect();
    ensure(!reports.is_empty(), || "no report".into())?;
    let instances: u64 = reports.iter().map(|r| r.instances).sum();
    if let Some(bad) = reports.iter().find(|r| !r.ok()) {
        let cx = bad
            .counterexamples
            .first()
            .map(|c| format!("{} (expected {}, got {})", c.inputs, c.expected, c.actual));
        return Err(format!(
            "{} on {}: {} failed, e.g. {}",
            suite,
            bad.term,
            bad.failed,
            cx.unwrap_or_default()
        ));
    }
    Ok(format!("{} terms, {instances} instances", reports.len()))
}

fn c1_finite_oracle() -> Outcome {
    let mut instances = 0;
    for n in 1..=5 {
        let r = finite_bruteforce(n).map_err(|e| e.to_string())?;
        ensure(r.agrees(), || format!("n = {n}: {:?}", r.mismatches))?;
        // independent re-check of the tables against the native order
        for x in 0..n {
            for y in 0..n {
                for rel in Rel::ALL {
                    ensure(r.relation(rel)[x][y] == rel.holds(x.cmp(&y)), || {
                        format!("{x} {rel} {y}")
                    })?;
                }
                ensure(
                    r.min_table[x][y] == Some(x.min(y)) && r.max_table[x][y] == Some(x.max(y)),
                    || format!("min/max({x}, {y})"),
                )?;
            }
        }
        instances += r.instances;
    }
    Ok(format!("n = 1..5, {instances} instances"))
}

fn c2_relation_oracle() -> Outcome {
    suite_run(Suite::RelationOracle, &STANDARD_TERMS)
}

fn c3_minmax_oracle() -> Outcome {
    suite_run(Suite::MinmaxOracle, &STANDARD_TERMS)
}

fn c4_relation_laws() -> Outcome {
    suite_run(Suite::RelationLaws, &STANDARD_TERMS)
}

fn c5_preorder() -> Outcome {
    suite_run(Suite::Preorder, &STANDARD_TERMS)
}

fn c6_well_order() -> Outcome {
    let terms = ["w", "w + w", "w * w"];
    let summary = suite_run(Suite::WellOrder, &terms)?;
    for t in terms {
        let o = order(t);
        let us = universe(&o, 12, 2);
        for u in &us {
            for v in &us {
                let (a, b) = (
                    ext_rel(&o, Rel::Le, u, v).unwrap(),
                    tri_leq(&o, u, v).unwrap(),
                );
                ensure(a == b, || {
                    format!("{t}: {} vs {}", u.literal(&o), v.literal(&o))
                })?;
            }
        }
    }
    Ok(summary)
}

fn universe(o: &Order, budget: usize, per: usize) -> Vec<UltraToken> {
    let ss = enumerate_supports(o, budget).unwrap();
    tokens_for(o, &ss, per).unwrap()
}

/// Universes of at most six tokens: two tokens on one non-principal support
/// and one token on each of the nearest other supports.
fn small_universes(o: &Order) -> Vec<Vec<UltraToken>> {
    let ss = enumerate_supports(o, 6).unwrap();
    let first = |s: &Support, k: usize| {
        tokens_for(o, std::slice::from_ref(s), 2)
            .unwrap()
            .into_iter()
            .take(k)
    };
    let mut out = Vec::new();
    for (i, s) in ss.iter().enumerate() {
        if s.is_point() {
            continue;
        }
        let mut u: Vec<UltraToken> = first(s, 2).collect();
        let mut d = 1;
        while u.len() < 6 && (d <= i || i + d < ss.len()) {
            for j in [i.checked_sub(d), Some(i + d)].into_iter().flatten() {
                if let Some(t) = ss.get(j) {
                    if u.len() < 6 {
                        u.extend(first(t, 1));
                    }
                }
            }
            d += 1;
        }
        out.push(u);
    }
    out
}

const IDENTITIES: [&str; 12] = [
    "associativity_min",
    "associativity_max",
    "idempotency_min",
    "idempotency_max",
    "absorption_min_max",
    "absorption_max_min",
    "absorption_min_max_right",
    "absorption_max_min_right",
    "distributivity_min_left",
    "distributivity_max_left",
    "distributivity_min_right",
    "distributivity_max_right",
];

fn c7_skew_laws() -> Outcome {
    let mut universes = 0;
    let mut failures: Vec<String> = Vec::new();
    let mut caught = [false, false];
    for t in STANDARD_TERMS {
        let o = order(t);
        for u in small_universes(&o) {
            universes += 1;
            let report = check_axioms(&o, &u).map_err(|e| e.to_string())?;
            for name in IDENTITIES {
                let law = report.law(name).ok_or_else(|| format!("{name} missing"))?;
                if law.status == LawStatus::Fail {
                    failures.push(format!(
                        "{t}: {name} {}",
                        law.counterexamples.first().cloned().unwrap_or_default()
                    ));
                }
            }
            // non-commutativity happens exactly on distinct tokens sharing a support
            for a in &u {
                for b in &u {
                    let fails = ext_min(&o, a, b).unwrap() != ext_min(&o, b, a).unwrap()
                        || ext_max(&o, a, b).unwrap() != ext_max(&o, b, a).unwrap();
                    ensure(fails == (a != b && a.support() == b.support()), || {
                        format!(
                            "{t}: commutativity at ({}, {})",
                            a.literal(&o),
                            b.literal(&o)
                        )
                    })?;
                }
            }
            ensure(
                report.law("commutativity_failure_set").map(|l| l.status) == Some(LawStatus::Pass),
                || format!("{t}: commutativity_failure_set"),
            )?;
            for (k, m) in [SkewMutant::SwappedBranch, SkewMutant::DroppedEquality]
                .into_iter()
                .enumerate()
            {
                let r = check_axioms_with(
                    &o,
                    &u,
                    &MutantOps {
                        order: &o,
                        mutant: m,
                    },
                )
                .map_err(|e| e.to_string())?;
                // only laws the closed form satisfies on this universe count
                caught[k] |= r.failed().iter().any(|l| !report.failed().contains(l));
            }
        }
    }
    ensure(caught == [true, true], || {
        format!("mutants caught: {caught:?}")
    })?;
    if !failures.is_empty() {
        failures.sort();
        let mut laws: Vec<&str> = failures
            .iter()
            .filter_map(|f| f.split(' ').find(|w| w.contains('_')))
            .collect();
        laws.sort();
        laws.dedup();
        let laws = laws.join(", ");
        let n = failures.len();
        failures.truncate(3);
        return Err(format!(
            "{n} identity failures over {universes} universes ({laws}), e.g. {}",
            failures.join("; ")
        ));
    }
    Ok(format!(
        "{universes} universes, commutativity set exact, both mutants caught"
    ))
}

fn c8_classes() -> Outcome {
    let mut pairs = 0;
    for t in STANDARD_TERMS {
        let o = order(t);
        let us = universe(&o, 6, 2);
        for u in &us {
            let kind = equiv_class_kind(u);
            let want = match u.support() {
                Support::Point(_) => ClassKind::Singleton,
                Support::LeftHalf(_) => ClassKind::MinLeftZero,
                Support::RightHalf(_) => ClassKind::MinRightZero,
            };
            ensure(kind == want, || {
                format!("{t}: class kind of {}", u.literal(&o))
            })?;
            for v in &us {
                pairs += 1;
                let d = d_related(&o, u, v).unwrap();
                ensure(d == equiv(&o, u, v).unwrap(), || {
                    format!("{t}: D at {} {}", u.literal(&o), v.literal(&o))
                })?;
                if u.support() == v.support() {
                    let m = ext_min(&o, u, v).unwrap();
                    let ok = match kind {
                        ClassKind::Singleton => m == *u,
                        ClassKind::MinLeftZero => m == *u && ext_max(&o, u, v).unwrap() == *v,
                        ClassKind::MinRightZero => m == *v && ext_max(&o, u, v).unwrap() == *u,
                    };
                    ensure(ok, || {
                        format!(
                            "{t}: class operations at {} {}",
                            u.literal(&o),
                            v.literal(&o)
                        )
                    })?;
                }
            }
        }
        let q = quotient_lattice(&o, &us).map_err(|e| e.to_string())?;
        ensure(q.is_isomorphic(), || format!("{t}: {:?}", q.mismatches))?;
        for w in q.classes.windows(2) {
            ensure(
                support_compare(&o, &w[0].0, &w[1].0).unwrap().is_lt(),
                || format!("{t}: class order"),
            )?;
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn c9_s_closed_forms() -> Outcome {
    let eq = |got: &OrderTerm, want: &str| {
        normalize_term(got) == normalize_term(&parse_order_term(want).unwrap())
    };
    let prod = |a: OrderTerm, b: OrderTerm| OrderTerm::prod(a, b);
    let cases: Vec<(OrderTerm, &str)> = vec![
        (OrderTerm::Fin(1), "1"),
        (OrderTerm::Fin(2), "2"),
        (OrderTerm::Fin(5), "5"),
        (OrderTerm::Omega, "w + 1"),
        (
            OrderTerm::sum([OrderTerm::Omega, OrderTerm::Omega]),
            "w + w + 1",
        ),
        (OrderTerm::Zeta, "1 + z + 1"),
        (prod(OrderTerm::Fin(2), OrderTerm::Zeta), "1 + 2 * z + 1"),
        (prod(OrderTerm::Omega, OrderTerm::Zeta), "1 + w * z + 1"),
    ];
    for (t, want) in &cases {
        let got = s_of_term(t).map_err(|e| e.to_string())?;
        ensure(eq(&got, want), || format!("s({t}) = {got}, want {want}"))?;
    }
    let twice = s_iterate(&OrderTerm::Omega, 2).map_err(|e| e.to_string())?;
    ensure(eq(&twice, "w + 2"), || format!("s(s(w)) = {twice}"))?;
    ensure(!eq(&twice, "w + 1"), || "s(s(w)) = s(w)".into())?;
    Ok(format!("{} closed forms, s(s(w)) = w + 2", cases.len()))
}

fn c10_dense_profile() -> Outcome {
    let o = Order::with_gaps(OrderTerm::Eta, gaps()).map_err(|e| e.to_string())?;
    let p = dense_profile_sampled(&o, 12).map_err(|e| e.to_string())?;
    ensure(p.holds(), || format!("{p:?}"))?;
    ensure(p.gaps.len() == 2 && !p.points.is_empty(), || {
        format!("{} points, {} gaps", p.points.len(), p.gaps.len())
    })?;
    ensure(
        p.bottom_end == Some(true) && p.top_end == Some(true),
        || "end supports".into(),
    )?;
    let kinds = |lits: &[String]| -> Vec<u8> {
        lits.iter()
            .map(|l| match make_support(&o, l).unwrap() {
                Support::LeftHalf(_) => 0,
                Support::Point(_) => 1,
                Support::RightHalf(_) => 2,
            })
            .collect()
    };
    for b in &p.points {
        ensure(kinds(&b.supports) == [0, 1, 2], || {
            format!("block at {}: {:?}", b.locus, b.supports)
        })?;
    }
    for b in &p.gaps {
        ensure(kinds(&b.supports) == [0, 2], || {
            format!("block at {}: {:?}", b.locus, b.supports)
        })?;
    }
    Ok(format!(
        "{} point blocks, {} gap blocks, both ends",
        p.points.len(),
        p.gaps.len()
    ))
}

fn c11_arithmetic() -> Outcome {
    let a = normalize_term(&OrderTerm::prod(OrderTerm::Fin(2), OrderTerm::Omega));
    ensure(a == OrderTerm::Omega, || format!("2 * w = {a}"))?;
    let b = normalize_term(&OrderTerm::prod(OrderTerm::Omega, OrderTerm::Fin(2)));
    ensure(
        b == OrderTerm::sum([OrderTerm::Omega, OrderTerm::Omega]),
        || format!("w * 2 = {b}"),
    )?;
    Ok("2 * w = w, w * 2 = w + w".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("finite definitional oracle", c1_finite_oracle),
        (
            "extended relations match the definition",
            c2_relation_oracle,
        ),
        ("extended min/max match the definition", c3_minmax_oracle),
        ("relation laws", c4_relation_laws),
        ("total preorder and its quotient", c5_preorder),
        ("well-ordered terms", c6_well_order),
        ("skew lattice identities and mutants", c7_skew_laws),
        ("classes, D and the quotient lattice", c8_classes),
        ("support type closed forms", c9_s_closed_forms),
        ("dense profile on the rationals", c10_dense_profile),
        ("arithmetic conventions", c11_arithmetic),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(msg) => println!("PASS {:>2} {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
