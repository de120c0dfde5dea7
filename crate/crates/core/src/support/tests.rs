use std::cmp::Ordering;

use super::*;
use crate::relations::Rel;

fn order(s: &str) -> Order {
    Order::parse(s).unwrap()
}

fn lits(o: &Order, ss: &[Support]) -> Vec<String> {
    ss.iter().map(|s| support_literal(o, s)).collect()
}

#[test]
fn make_support_examples() {
    let w = order("w");
    assert_eq!(
        make_support(&w, "L:top").unwrap(),
        Support::LeftHalf(Cut::Top)
    );
    assert_eq!(
        make_support(&w, "L:before:5"),
        Err(Error::InvalidSupport(SupportDefect::HasGreatest))
    );
    assert_eq!(
        make_support(&w, "R:bottom"),
        Err(Error::InvalidSupport(SupportDefect::HasLeast))
    );
    assert_eq!(
        make_support(&w, "L:bottom"),
        Err(Error::InvalidSupport(SupportDefect::EmptySide))
    );
    assert_eq!(
        make_support(&w, "R:top"),
        Err(Error::InvalidSupport(SupportDefect::EmptySide))
    );
    assert!(matches!(
        make_support(&w, "pt:x"),
        Err(Error::InvalidPosition(_))
    ));

    let e = order("e");
    let r = make_support(&e, "R:at:gap:sqrt2").unwrap();
    assert_eq!(
        r,
        Support::RightHalf(Cut::Named(e.gaps().get("sqrt2").unwrap().clone()))
    );
    // no least element above √2: some rational squeezes in above every candidate
    for q in ["3/2", "17/12", "577/408"] {
        let lo = e.parse_cpos("gap:sqrt2").unwrap();
        let hi = e.parse_cpos(&format!("elem:{q}")).unwrap();
        assert!(e.exists_between(&lo, &hi).unwrap());
    }
}

#[test]
fn support_key_examples() {
    let w = order("w");
    assert_eq!(
        support_key(&w, &make_support(&w, "pt:3").unwrap()),
        SupportKey {
            pos: CompletionPos::Elem(Position::Nat(3)),
            tag: 0
        }
    );
    assert_eq!(
        support_key(&w, &make_support(&w, "L:top").unwrap()),
        SupportKey {
            pos: CompletionPos::Top,
            tag: -1
        }
    );
    let e = order("e");
    assert_eq!(
        support_key(&e, &make_support(&e, "R:at:gap:sqrt2").unwrap()),
        SupportKey {
            pos: e.parse_cpos("gap:sqrt2").unwrap(),
            tag: 1
        }
    );
}

#[test]
fn support_compare_examples() {
    let cmp = |t: &str, a: &str, b: &str| {
        let o = order(t);
        support_compare(
            &o,
            &make_support(&o, a).unwrap(),
            &make_support(&o, b).unwrap(),
        )
        .unwrap()
    };
    assert_eq!(cmp("w", "pt:3", "L:top"), Ordering::Less);
    assert_eq!(cmp("z", "R:bottom", "pt:0"), Ordering::Less);
    assert_eq!(cmp("e", "L:at:gap:sqrt2", "R:at:gap:sqrt2"), Ordering::Less);
    assert_eq!(cmp("e", "R:after:1", "pt:1"), Ordering::Greater);
    assert_eq!(cmp("e", "L:before:1", "pt:1"), Ordering::Less);
}

#[test]
fn enumerate_examples() {
    let w = order("w");
    assert_eq!(
        lits(&w, &enumerate_supports(&w, 3).unwrap()),
        ["pt:0", "pt:1", "pt:2", "L:top"]
    );
    let z = order("z");
    assert_eq!(
        lits(&z, &enumerate_supports(&z, 1).unwrap()),
        ["R:bottom", "pt:0", "L:top"]
    );
    let s = order("w + w*");
    assert_eq!(
        lits(&s, &enumerate_supports(&s, 1).unwrap()),
        [
            "pt:0.0",
            "L:at:structgap:0|1",
            "R:at:structgap:0|1",
            "pt:1.0*"
        ]
    );
    assert_eq!(enumerate_supports(&order("0"), 3), Err(Error::EmptyOrder));
}

#[test]
fn literals_round_trip() {
    for t in [
        "w",
        "z",
        "e",
        "w + w*",
        "w * w",
        "z * w",
        "2 * z",
        "e * 2 + w",
    ] {
        let o = order(t);
        for s in enumerate_supports(&o, 9).unwrap() {
            let l = support_literal(&o, &s);
            assert_eq!(make_support(&o, &l).unwrap(), s, "{t}: {l}");
        }
    }
}

// Table (1) of the natural order of supports, each cell as a comparison
// of sups, infs and points in the completion.
fn table_cell(o: &Order, a: &Support, b: &Support) -> bool {
    let c = |x: &CompletionPos, y: &CompletionPos| o.position_compare(x, y).unwrap();
    let sup = |cut: &Cut| o.sup_of_initial(cut).unwrap();
    let inf = |cut: &Cut| o.inf_of_final(cut).unwrap();
    let el = |p: &Position| CompletionPos::Elem(p.clone());
    use Support::*;
    match (a, b) {
        (Point(x), Point(y)) => c(&el(x), &el(y)).is_lt(),
        (Point(x), LeftHalf(i)) => c(&el(x), &sup(i)).is_lt(),
        (Point(x), RightHalf(j)) => c(&el(x), &inf(j)).is_le(),
        (LeftHalf(i), Point(y)) => c(&sup(i), &el(y)).is_le(),
        (LeftHalf(i), LeftHalf(i2)) => c(&sup(i), &sup(i2)).is_lt(),
        (LeftHalf(i), RightHalf(j)) => c(&sup(i), &inf(j)).is_le(),
        (RightHalf(j), Point(y)) => c(&inf(j), &el(y)).is_lt(),
        (RightHalf(j), LeftHalf(i)) => c(&inf(j), &sup(i)).is_lt(),
        (RightHalf(j), RightHalf(j2)) => c(&inf(j), &inf(j2)).is_lt(),
    }
}

#[test]
fn keys_realize_the_table() {
    for t in [
        "4",
        "w",
        "w*",
        "z",
        "e",
        "w + w*",
        "w + z + w*",
        "w * w",
        "z * w",
        "2 * z",
        "e + 1 + e",
    ] {
        let o = order(t);
        let ss = enumerate_supports(&o, 8).unwrap();
        for a in &ss {
            for b in &ss {
                let got = support_compare(&o, a, b).unwrap();
                assert_eq!(
                    got == Ordering::Less,
                    table_cell(&o, a, b),
                    "{t}: {a:?} vs {b:?}"
                );
                assert_eq!(got == Ordering::Equal, a == b, "{t}: key injectivity");
            }
        }
    }
}

#[test]
fn membership_is_an_ultrafilter() {
    for t in ["w", "z", "e", "w + w*", "z * w"] {
        let o = order(t);
        let ss = enumerate_supports(&o, 6).unwrap();
        let toks = tokens_for(&o, &ss, 1).unwrap();
        let mut sets = vec![IntervalSet::full(&o), IntervalSet::empty(&o)];
        for p in o.sample_elements(6).unwrap() {
            for rel in Rel::ALL {
                sets.push(
                    IntervalSet::from_segment(&o, rel, &CompletionPos::Elem(p.clone())).unwrap(),
                );
            }
        }
        for u in &toks {
            assert!(interval_membership(&o, &IntervalSet::full(&o), u).unwrap());
            assert!(!interval_membership(&o, &IntervalSet::empty(&o), u).unwrap());
            for s in &sets {
                let inside = interval_membership(&o, s, u).unwrap();
                assert_ne!(
                    inside,
                    interval_membership(&o, &s.complement(&o).unwrap(), u).unwrap()
                );
                for s2 in &sets {
                    let either = inside || interval_membership(&o, s2, u).unwrap();
                    assert_eq!(
                        interval_membership(&o, &s.union(s2, &o).unwrap(), u).unwrap(),
                        either
                    );
                }
            }
        }
    }
}

#[test]
fn tokens_and_labels() {
    let w = order("w");
    assert!(matches!(
        UltraToken::parse(&w, "pt:5#a"),
        Err(Error::InvalidToken(_))
    ));
    assert!(matches!(
        UltraToken::parse(&w, "L:top"),
        Err(Error::InvalidToken(_))
    ));
    assert!(matches!(
        UltraToken::parse(&w, "L:top#"),
        Err(Error::InvalidToken(_))
    ));
    let a = UltraToken::parse(&w, "L:top#a").unwrap();
    assert_eq!(a.literal(&w), "L:top#a");
    assert_ne!(a, UltraToken::parse(&w, "L:top#b").unwrap());
    assert_eq!(
        UltraToken::parse(&w, "pt:5").unwrap(),
        UltraToken::principal(&w, Position::Nat(5)).unwrap()
    );
    assert_eq!(token_label(0), "a");
    assert_eq!(token_label(27), "b1");
}

#[test]
fn local_contributions() {
    let e = order("e");
    let p = local_contribution(&e, &Locus::Elem(Position::rat(1, 2))).unwrap();
    assert_eq!(lits(&e, &p), ["L:before:1/2", "pt:1/2", "R:after:1/2"]);
    let g = e.parse_cut("at:gap:sqrt2").unwrap();
    assert_eq!(local_contribution(&e, &Locus::Cut(g)).unwrap().len(), 2);
    let w = order("w");
    assert_eq!(
        lits(
            &w,
            &local_contribution(&w, &Locus::Elem(Position::Nat(4))).unwrap()
        ),
        ["pt:4"]
    );
    assert!(
        local_contribution(&w, &Locus::Cut(w.parse_cut("after:4").unwrap()))
            .unwrap()
            .is_empty()
    );
}
