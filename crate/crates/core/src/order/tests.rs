use std::cmp::Ordering;

use super::*;

fn order(s: &str) -> Order {
    Order::parse(s).unwrap()
}

fn cp(o: &Order, s: &str) -> CompletionPos {
    o.parse_cpos(s).unwrap()
}

#[test]
fn compare_examples() {
    let z = order("z");
    assert_eq!(
        z.position_compare(&cp(&z, "elem:-3"), &cp(&z, "elem:5"))
            .unwrap(),
        Ordering::Less
    );

    let e = order("e");
    assert_eq!(
        e.position_compare(&cp(&e, "gap:sqrt2"), &cp(&e, "elem:3/2"))
            .unwrap(),
        Ordering::Less
    );
    assert_eq!(
        e.position_compare(&cp(&e, "gap:sqrt2"), &cp(&e, "elem:17/12"))
            .unwrap(),
        Ordering::Less
    );
    assert_eq!(
        e.position_compare(&cp(&e, "gap:sqrt2"), &cp(&e, "elem:9/8"))
            .unwrap(),
        Ordering::Greater
    );

    let s = order("w + w*");
    assert_eq!(
        s.position_compare(&cp(&s, "structgap:0|1"), &cp(&s, "elem:0.7"))
            .unwrap(),
        Ordering::Greater
    );
    assert_eq!(
        s.position_compare(&cp(&s, "structgap:0|1"), &cp(&s, "elem:1.7*"))
            .unwrap(),
        Ordering::Less
    );
}

#[test]
fn classify_examples() {
    let w = order("w");
    let c = w.classify_position(&Position::Nat(0)).unwrap();
    assert!(c.is_min && !c.is_left_limit && !c.is_right_limit && !c.is_max);

    let e = order("e");
    let c = e.classify_position(&Position::rat(1, 2)).unwrap();
    assert!(c.is_left_limit && c.is_right_limit && !c.is_min && !c.is_max);

    let s = order("w + 1");
    let c = s
        .classify_position(&Position::part(1, Position::Nat(0)))
        .unwrap();
    assert!(c.is_max && c.is_left_limit && !c.is_right_limit);

    // (0, 1) in ω·ω is the limit of the first copy
    let ww = order("w * w");
    let c = ww
        .classify_position(&Position::pair(Position::Nat(0), Position::Nat(1)))
        .unwrap();
    assert!(c.is_left_limit && !c.is_right_limit);
}

#[test]
fn between_examples() {
    let w = order("w");
    assert!(!w
        .exists_between(&cp(&w, "elem:3"), &cp(&w, "elem:4"))
        .unwrap());
    assert!(w
        .exists_between(&cp(&w, "elem:3"), &cp(&w, "elem:5"))
        .unwrap());

    let e = order("e");
    let x = e
        .witness_between(&cp(&e, "elem:0"), &cp(&e, "gap:sqrt2"))
        .unwrap()
        .unwrap();
    assert_eq!(
        e.view()
            .cmp_pos_cut(&x, &e.parse_cut("at:gap:sqrt2").unwrap()),
        Ordering::Less
    );
    assert!(e
        .exists_between(&cp(&e, "gap:sqrt2"), &cp(&e, "gap:sqrt3"))
        .unwrap());
    assert!(!e
        .exists_between(&cp(&e, "gap:sqrt3"), &cp(&e, "gap:sqrt2"))
        .unwrap());
    assert!(e
        .exists_between(&cp(&e, "gap:e_minus_2"), &cp(&e, "elem:72/100"))
        .unwrap());

    let s = order("w + w*");
    assert!(s
        .exists_between(&cp(&s, "structgap:0|1"), &cp(&s, "top"))
        .unwrap());
    assert!(!s
        .exists_between(&cp(&s, "elem:1.0*"), &cp(&s, "top"))
        .unwrap());
}

#[test]
fn enumerate_examples() {
    let w = order("w");
    assert_eq!(
        w.enumerate_elements(Direction::Front, 3).unwrap(),
        vec![Position::Nat(0), Position::Nat(1), Position::Nat(2)]
    );
    assert_eq!(
        order("z").enumerate_elements(Direction::Back, 2),
        Err(Error::NoCanonicalLadder)
    );
    assert_eq!(
        order("w*").enumerate_elements(Direction::Front, 1),
        Err(Error::NoCanonicalLadder)
    );
    let s = order("2 + w");
    assert_eq!(
        s.enumerate_elements(Direction::Front, 3).unwrap(),
        vec![
            Position::part(0, Position::Nat(0)),
            Position::part(0, Position::Nat(1)),
            Position::part(1, Position::Nat(0)),
        ]
    );
    assert!(matches!(
        order("3").enumerate_elements(Direction::Front, 4),
        Err(Error::OutOfRange(_))
    ));
    let back = order("w*").enumerate_elements(Direction::Back, 3).unwrap();
    assert_eq!(
        back,
        vec![
            Position::NatStar(0),
            Position::NatStar(1),
            Position::NatStar(2)
        ]
    );
    assert_eq!(
        order("e").enumerate_elements(Direction::Front, 4).unwrap()[3],
        Position::rat(3, 2)
    );
}

#[test]
fn literals_round_trip() {
    for (t, lits) in [
        (
            "w + w*",
            vec!["bottom", "top", "elem:0.3", "elem:1.2*", "structgap:0|1"],
        ),
        ("e", vec!["gap:sqrt2", "gap:e_minus_2", "elem:-7/3"]),
        ("z * 2", vec!["structgap:[after:0]", "elem:(4,1)"]),
        ("e * w", vec!["structgap:(sqrt3,5)", "elem:(1/2,0)"]),
        ("1 + e + w*", vec!["structgap:1.sqrt2", "elem:2.0*"]),
    ] {
        let o = order(t);
        for l in lits {
            let c = o.parse_cpos(l).unwrap_or_else(|e| panic!("{t}: {l}: {e}"));
            assert_eq!(o.cpos_literal(&c), l, "{t}");
        }
    }
    let w = order("w");
    assert_eq!(w.cut_literal(&w.parse_cut("before:5").unwrap()), "after:4");
    assert_eq!(w.cut_literal(&w.parse_cut("after:0").unwrap()), "after:0");
    assert_eq!(w.parse_cut("before:0").unwrap(), Cut::Bottom);
}

#[test]
fn rejects_bad_literals() {
    let w = order("w + w*");
    assert!(w.parse_cpos("structgap:1|2").is_err());
    assert!(w.parse_cpos("elem:2.0").is_err());
    assert!(w.parse_cpos("elem:1.3").is_err());
    assert!(order("w + 1").parse_cpos("structgap:0|1").is_err());
    assert!(matches!(
        order("e").parse_cpos("gap:pi"),
        Err(Error::UnknownGap(_))
    ));
    assert!(order("5").parse_position("5").is_err());
    assert!(Order::parse("w + 0").is_err());
    let empty = order("0");
    assert_eq!(empty.sample_elements(3), Err(Error::EmptyOrder));
}

#[test]
fn samples_are_sorted_and_valid() {
    for t in [
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
        "e * 2 + w",
    ] {
        let o = order(t);
        let xs = o.sample_elements(12).unwrap();
        for w in xs.windows(2) {
            assert_eq!(
                o.compare_elements(&w[0], &w[1]).unwrap(),
                Ordering::Less,
                "{t}"
            );
        }
        let cs = o.sample_cuts(12).unwrap();
        for c in &cs {
            o.check_cut(c).unwrap();
        }
        for w in cs.windows(2) {
            assert_eq!(o.compare_cuts(&w[0], &w[1]).unwrap(), Ordering::Less, "{t}");
        }
    }
}

#[test]
fn cuts_agree_with_elements() {
    for t in ["w + w*", "w * w", "z * w", "e + 1", "(w + w*) * z"] {
        let o = order(t);
        let v = o.view();
        let xs = o.sample_elements(16).unwrap();
        for p in &xs {
            let b = v.before(p);
            let a = v.after(p);
            assert!(
                o.check_cut(&b).is_ok() && o.check_cut(&a).is_ok(),
                "{t} {p}"
            );
            assert_eq!(v.cmp_cut(&b, &a), Ordering::Less);
            for q in &xs {
                let expect = v.cmp_pos(q, p);
                assert_eq!(
                    v.cmp_pos_cut(q, &b) == Ordering::Less,
                    expect == Ordering::Less,
                    "{t} {q} vs before {p}"
                );
                assert_eq!(
                    v.cmp_pos_cut(q, &a) == Ordering::Less,
                    expect != Ordering::Greater,
                    "{t} {q} vs after {p}"
                );
            }
            if let Some(m) = v.max_below(&b) {
                assert_eq!(v.after(&m), b, "{t}: predecessor of {p}");
            }
            if let Some(m) = v.min_above(&a) {
                assert_eq!(v.before(&m), a, "{t}: successor of {p}");
            }
        }
    }
}

#[test]
fn dyadic_ladder_prefix() {
    let l: Vec<String> = dyadic_ladder(8).iter().map(|p| p.to_string()).collect();
    assert_eq!(l, ["0", "1", "1/2", "3/2", "1/4", "3/4", "5/4", "7/4"]);
}
