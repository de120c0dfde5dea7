//! Symbolic order types.
//!
//! An [`OrderTerm`] is built from the finite orders, `ω`, `ω*`, `ζ`, `η`,
//! ordered sums and antilexicographic products. `Prod(inner, outer)` stands
//! for `outer`-many consecutive copies of `inner`, so `2·ω = ω` while
//! `ω·2 = ω + ω`. This is the classical order-type convention; modern
//! ordinal notation writes the factors the other way around.

mod normalize;
mod parse;

use std::fmt;

pub use normalize::normalize_term;
pub use parse::parse_order_term;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrderTerm {
    /// A finite chain with `n` elements.
    Fin(u64),
    /// The naturals.
    Omega,
    /// The naturals reversed.
    OmegaStar,
    /// The integers.
    Zeta,
    /// The rationals.
    Eta,
    /// Ordered sum, parts listed from the bottom.
    Sum(Vec<OrderTerm>),
    /// `outer`-many copies of `inner`, compared on `outer` first.
    Prod(Box<OrderTerm>, Box<OrderTerm>),
}

impl OrderTerm {
    pub fn sum(parts: impl IntoIterator<Item = OrderTerm>) -> Self {
        OrderTerm::Sum(parts.into_iter().collect())
    }

    pub fn prod(inner: OrderTerm, outer: OrderTerm) -> Self {
        OrderTerm::Prod(Box::new(inner), Box::new(outer))
    }

    /// Number of nodes in the syntax tree.
    pub fn size(&self) -> usize {
        match self {
            OrderTerm::Sum(parts) => 1 + parts.iter().map(OrderTerm::size).sum::<usize>(),
            OrderTerm::Prod(a, b) => 1 + a.size() + b.size(),
            _ => 1,
        }
    }

    pub fn is_empty_order(&self) -> bool {
        matches!(self, OrderTerm::Fin(0))
    }

    /// True when the term mentions `η` anywhere.
    pub fn has_dense_content(&self) -> bool {
        match self {
            OrderTerm::Eta => true,
            OrderTerm::Sum(parts) => parts.iter().any(OrderTerm::has_dense_content),
            OrderTerm::Prod(a, b) => a.has_dense_content() || b.has_dense_content(),
            _ => false,
        }
    }

    pub fn has_least(&self) -> bool {
        match self {
            OrderTerm::Fin(n) => *n > 0,
            OrderTerm::Omega => true,
            OrderTerm::OmegaStar | OrderTerm::Zeta | OrderTerm::Eta => false,
            OrderTerm::Sum(parts) => parts.first().is_some_and(OrderTerm::has_least),
            OrderTerm::Prod(a, b) => a.has_least() && b.has_least(),
        }
    }

    pub fn has_greatest(&self) -> bool {
        match self {
            OrderTerm::Fin(n) => *n > 0,
            OrderTerm::OmegaStar => true,
            OrderTerm::Omega | OrderTerm::Zeta | OrderTerm::Eta => false,
            OrderTerm::Sum(parts) => parts.last().is_some_and(OrderTerm::has_greatest),
            OrderTerm::Prod(a, b) => a.has_greatest() && b.has_greatest(),
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, t: &OrderTerm, paren_prod: bool) -> fmt::Result {
    let needs = match t {
        OrderTerm::Sum(_) => true,
        OrderTerm::Prod(..) => paren_prod,
        _ => false,
    };
    if needs {
        write!(f, "({t})")
    } else {
        write!(f, "{t}")
    }
}

/// Prints in the input grammar: `3`, `w`, `w*`, `z`, `e`, `a + b`, `a * b`.
impl fmt::Display for OrderTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderTerm::Fin(n) => write!(f, "{n}"),
            OrderTerm::Omega => f.write_str("w"),
            OrderTerm::OmegaStar => f.write_str("w*"),
            OrderTerm::Zeta => f.write_str("z"),
            OrderTerm::Eta => f.write_str("e"),
            OrderTerm::Sum(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    // nested sums keep their parentheses so printing is faithful
                    write_operand(f, p, false)?;
                }
                Ok(())
            }
            OrderTerm::Prod(a, b) => {
                write_operand(f, a, false)?;
                f.write_str(" * ")?;
                write_operand(f, b, true)
            }
        }
    }
}
