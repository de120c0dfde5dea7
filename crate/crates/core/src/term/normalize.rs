use super::OrderTerm;

/// Rewrites a term into the canonical form used for comparing order types.
///
/// Rules, applied bottom-up to a fixpoint:
/// - sums are flattened, `0` parts dropped, adjacent finite parts merged;
/// - `n + α → α` when `α` begins with a copy of `ω`, and `α + n → α` when it
///   ends with a copy of `ω*`;
/// - `a · 0 = 0 · a = 0`, `a · 1 = 1 · a = a`, `a · n = a + … + a` (up to n = 256);
/// - `n · ω = ω`, `n · ω* = ω*`, `n · ζ = ζ` for `n ≥ 1`;
/// - in `(a₁ + … + aₖ) · ζ` the summands may be rotated; the rotation with
///   the smallest normal form is kept.
///
/// Terms the rules do not reach are returned unchanged.
pub fn normalize_term(t: &OrderTerm) -> OrderTerm {
    match t {
        OrderTerm::Sum(parts) => normalize_sum(parts.iter().map(normalize_term).collect()),
        OrderTerm::Prod(a, b) => normalize_prod(normalize_term(a), normalize_term(b)),
        leaf => leaf.clone(),
    }
}

fn begins_with_omega(t: &OrderTerm) -> bool {
    match t {
        OrderTerm::Omega => true,
        OrderTerm::Sum(parts) => parts.first().is_some_and(begins_with_omega),
        OrderTerm::Prod(inner, outer) => begins_with_omega(inner) && outer.has_least(),
        _ => false,
    }
}

fn ends_with_omega_star(t: &OrderTerm) -> bool {
    match t {
        OrderTerm::OmegaStar => true,
        OrderTerm::Sum(parts) => parts.last().is_some_and(ends_with_omega_star),
        OrderTerm::Prod(inner, outer) => ends_with_omega_star(inner) && outer.has_greatest(),
        _ => false,
    }
}

fn normalize_sum(parts: Vec<OrderTerm>) -> OrderTerm {
    let mut flat = Vec::with_capacity(parts.len());
    for p in parts {
        match p {
            OrderTerm::Sum(inner) => flat.extend(inner),
            OrderTerm::Fin(0) => {}
            other => flat.push(other),
        }
    }
    let mut out: Vec<OrderTerm> = Vec::with_capacity(flat.len());
    for p in flat {
        let mut cur = p;
        while let Some(prev) = out.last() {
            match (prev, &cur) {
                (OrderTerm::Fin(a), OrderTerm::Fin(b)) => {
                    cur = OrderTerm::Fin(a + b);
                    out.pop();
                }
                (OrderTerm::Fin(_), next) if begins_with_omega(next) => {
                    out.pop();
                }
                (prev, OrderTerm::Fin(_)) if ends_with_omega_star(prev) => {
                    cur = out.pop().unwrap();
                }
                _ => break,
            }
        }
        out.push(cur);
    }
    match out.len() {
        0 => OrderTerm::Fin(0),
        1 => out.pop().unwrap(),
        _ => OrderTerm::Sum(out),
    }
}

/// Products `a · n` with larger `n` stay folded.
const MAX_UNROLL: u64 = 256;

fn normalize_prod(inner: OrderTerm, outer: OrderTerm) -> OrderTerm {
    use OrderTerm::*;
    match (&inner, &outer) {
        (Fin(0), _) | (_, Fin(0)) => Fin(0),
        (_, Fin(1)) => inner,
        (Fin(1), _) => outer,
        (_, Fin(n)) if *n <= MAX_UNROLL => normalize_sum(vec![inner.clone(); *n as usize]),
        (Fin(_), Omega | OmegaStar | Zeta) => outer,
        (Sum(parts), Zeta) => {
            let best = (0..parts.len())
                .map(|r| {
                    let mut rotated = parts.clone();
                    rotated.rotate_left(r);
                    normalize_sum(rotated)
                })
                .min_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)))
                .unwrap();
            match best {
                Fin(_) => Zeta,
                best => OrderTerm::prod(best, Zeta),
            }
        }
        _ => OrderTerm::prod(inner, outer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse_order_term;
    use OrderTerm::*;

    fn n(s: &str) -> OrderTerm {
        normalize_term(&parse_order_term(s).unwrap())
    }

    #[test]
    fn antilexicographic_conventions() {
        assert_eq!(normalize_term(&OrderTerm::prod(Fin(2), Omega)), Omega);
        assert_eq!(
            normalize_term(&OrderTerm::prod(Omega, Fin(2))),
            Sum(vec![Omega, Omega])
        );
    }

    #[test]
    fn finite_absorption() {
        assert_eq!(normalize_term(&Sum(vec![Fin(1), Omega])), Omega);
        assert_eq!(n("w* + 3"), OmegaStar);
        assert_eq!(n("w + 1 + 1"), Sum(vec![Omega, Fin(2)]));
        assert_eq!(n("1 + z + 1"), Sum(vec![Fin(1), Zeta, Fin(1)]));
        assert_eq!(n("1 + w * w"), OrderTerm::prod(Omega, Omega));
        assert_eq!(
            n("1 + w * z"),
            Sum(vec![Fin(1), OrderTerm::prod(Omega, Zeta)])
        );
        assert_eq!(n("2 + 3"), Fin(5));
        assert_eq!(n("0 + w + 0"), Omega);
        assert_eq!(n("w * 0"), Fin(0));
    }

    #[test]
    fn zeta_products_rotate() {
        assert_eq!(n("(w + 1) * z"), OrderTerm::prod(Omega, Zeta));
        assert_eq!(n("(1 + w*) * z"), OrderTerm::prod(OmegaStar, Zeta));
        assert_eq!(n("2 * z"), Zeta);
        assert_eq!(n("(w + 1) * z"), n("(1 + w) * z"));
    }

    #[test]
    fn idempotent_on_examples() {
        for s in [
            "w * 2 + 1",
            "(w + 1) * z",
            "1 + w + w* + 2",
            "e * 3",
            "(2 + w) * (z * 2)",
        ] {
            let once = n(s);
            assert_eq!(normalize_term(&once), once, "{s}");
        }
    }
}
