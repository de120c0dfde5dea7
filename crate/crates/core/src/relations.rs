//! The extensions `<̃`, `≤̃`, `>̃`, `≥̃` of the order to ultrafilters, in
//! closed form, together with the linear pre-order `⊴` and its equivalence.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::Order;
use crate::support::{support_compare, Support, UltraToken};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rel {
    Lt,
    Le,
    Gt,
    Ge,
}

impl Rel {
    pub const ALL: [Rel; 4] = [Rel::Lt, Rel::Le, Rel::Gt, Rel::Ge];

    pub fn holds(self, o: Ordering) -> bool {
        match self {
            Rel::Lt => o == Ordering::Less,
            Rel::Le => o != Ordering::Greater,
            Rel::Gt => o == Ordering::Greater,
            Rel::Ge => o != Ordering::Less,
        }
    }

    /// `x rel y ⇔ y rel.converse() x`.
    pub fn converse(self) -> Rel {
        match self {
            Rel::Lt => Rel::Gt,
            Rel::Le => Rel::Ge,
            Rel::Gt => Rel::Lt,
            Rel::Ge => Rel::Le,
        }
    }

    pub fn is_strict(self) -> bool {
        matches!(self, Rel::Lt | Rel::Gt)
    }

    /// Toggles strictness, keeping the direction.
    pub fn flip_strictness(self) -> Rel {
        match self {
            Rel::Lt => Rel::Le,
            Rel::Le => Rel::Lt,
            Rel::Gt => Rel::Ge,
            Rel::Ge => Rel::Gt,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Rel::Lt => "lt",
            Rel::Le => "le",
            Rel::Gt => "gt",
            Rel::Ge => "ge",
        }
    }
}

impl fmt::Display for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lt" | "<" => Ok(Rel::Lt),
            "le" | "<=" => Ok(Rel::Le),
            "gt" | ">" => Ok(Rel::Gt),
            "ge" | ">=" => Ok(Rel::Ge),
            _ => Err(Error::Config(format!("unknown relation `{s}`"))),
        }
    }
}

pub(crate) fn check_pair(order: &Order, u: &UltraToken, v: &UltraToken) -> Result<()> {
    u.check_term(order)?;
    v.check_term(order)
}

/// Decides `u rel̃ v`.
///
/// Upward relations hold when `supp(u)` is below `supp(v)`, downward ones
/// when it is above. On a shared support the answer depends on its side:
/// two tokens on a left half are `<̃` each other (in both directions, even
/// when equal), two on a right half are `>̃` each other, and a shared point
/// means `u = v` principal, where only the non-strict relations hold.
pub fn ext_rel(order: &Order, rel: Rel, u: &UltraToken, v: &UltraToken) -> Result<bool> {
    check_pair(order, u, v)?;
    let o = support_compare(order, u.support(), v.support())?;
    Ok(decide(rel, o, u.support()))
}

pub(crate) fn decide(rel: Rel, supp_order: Ordering, shared: &Support) -> bool {
    let upward = matches!(rel, Rel::Lt | Rel::Le);
    match supp_order {
        Ordering::Less => upward,
        Ordering::Greater => !upward,
        Ordering::Equal => match shared {
            Support::LeftHalf(_) => upward,
            Support::RightHalf(_) => !upward,
            Support::Point(_) => !rel.is_strict(),
        },
    }
}

/// `u ⊴ v`: `u ≤̃ v` or `v ≥̃ u`, which amounts to `supp(u) ≤ supp(v)`.
pub fn tri_leq(order: &Order, u: &UltraToken, v: &UltraToken) -> Result<bool> {
    Ok(ext_rel(order, Rel::Le, u, v)? || ext_rel(order, Rel::Ge, v, u)?)
}

/// `u ≡ v`: equal supports.
pub fn equiv(order: &Order, u: &UltraToken, v: &UltraToken) -> Result<bool> {
    check_pair(order, u, v)?;
    Ok(u.support() == v.support())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReflexivityKind {
    /// `u <̃ u`; the support is a left half.
    LtReflexive,
    /// `u >̃ u`; the support is a right half.
    GtReflexive,
    /// `u ≤̃ u` and `u ≥̃ u` but neither strictly.
    Principal,
}

pub fn reflexivity_kind(u: &UltraToken) -> ReflexivityKind {
    match u.support() {
        Support::LeftHalf(_) => ReflexivityKind::LtReflexive,
        Support::RightHalf(_) => ReflexivityKind::GtReflexive,
        Support::Point(_) => ReflexivityKind::Principal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tok(o: &Order, s: &str) -> UltraToken {
        UltraToken::parse(o, s).unwrap()
    }

    #[test]
    fn theorem_examples() {
        let w = Order::parse("w").unwrap();
        assert!(ext_rel(&w, Rel::Lt, &tok(&w, "pt:2"), &tok(&w, "pt:5")).unwrap());
        let a = tok(&w, "L:top#a");
        assert!(ext_rel(&w, Rel::Lt, &a, &a).unwrap());
        assert!(!ext_rel(&w, Rel::Gt, &a, &a).unwrap());

        let z = Order::parse("z").unwrap();
        let (a, b) = (tok(&z, "R:bottom#a"), tok(&z, "R:bottom#b"));
        assert!(!ext_rel(&z, Rel::Lt, &a, &b).unwrap() && !ext_rel(&z, Rel::Lt, &b, &a).unwrap());
        assert!(ext_rel(&z, Rel::Gt, &a, &b).unwrap() && ext_rel(&z, Rel::Gt, &b, &a).unwrap());
        // ≤̃ does not commute with taking the inverse
        assert_ne!(
            ext_rel(&z, Rel::Le, &a, &b).unwrap(),
            ext_rel(&z, Rel::Ge, &b, &a).unwrap()
        );
        assert!(tri_leq(&z, &a, &b).unwrap() && tri_leq(&z, &b, &a).unwrap());
        assert!(equiv(&z, &a, &b).unwrap());
    }

    #[test]
    fn preorder_examples() {
        let w = Order::parse("w").unwrap();
        let (p, l) = (tok(&w, "pt:3"), tok(&w, "L:top#a"));
        assert!(tri_leq(&w, &p, &l).unwrap());
        assert!(!tri_leq(&w, &l, &p).unwrap());
        assert!(tri_leq(&w, &p, &p).unwrap());
    }

    #[test]
    fn reflexivity_examples() {
        let w = Order::parse("w").unwrap();
        let z = Order::parse("z").unwrap();
        assert_eq!(
            reflexivity_kind(&tok(&w, "L:top#a")),
            ReflexivityKind::LtReflexive
        );
        assert_eq!(
            reflexivity_kind(&tok(&z, "R:bottom#a")),
            ReflexivityKind::GtReflexive
        );
        assert_eq!(
            reflexivity_kind(&tok(&w, "pt:0")),
            ReflexivityKind::Principal
        );
    }

    #[test]
    fn mixed_terms() {
        let w = Order::parse("w").unwrap();
        let z = Order::parse("z").unwrap();
        assert_eq!(
            ext_rel(&w, Rel::Lt, &tok(&w, "pt:1"), &tok(&z, "pt:1")),
            Err(Error::MixedTerms)
        );
    }
}
