//! Ultrafilters on `{0, …, n-1}` as raw families of subsets.
//!
//! Subsets are bitmasks `< 2^n`; a family of subsets is a bitmask over the
//! `2^n` subsets, which fits a `u64` for `n ≤ 6`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relations::Rel;

use super::oracle::MinMax;

pub const MAX_N: usize = 6;
/// Largest `n` for which every family of subsets is enumerated.
pub const MAX_EXHAUSTIVE_N: usize = 4;

type Family = u64;

fn member(f: Family, s: usize) -> bool {
    f >> s & 1 == 1
}

fn principal(n: usize, x: usize) -> Family {
    (0..1usize << n)
        .filter(|s| s >> x & 1 == 1)
        .fold(0, |f, s| f | 1 << s)
}

fn is_ultrafilter(n: usize, f: Family) -> bool {
    let full = (1usize << n) - 1;
    if member(f, 0) || !member(f, full) {
        return false;
    }
    for a in 0..=full {
        if member(f, a) == member(f, full & !a) {
            return false;
        }
        if !member(f, a) {
            continue;
        }
        for b in 0..=full {
            if member(f, b) && !member(f, a & b) {
                return false;
            }
            if a & b == a && !member(f, b) {
                return false;
            }
        }
    }
    true
}

/// `{x : {y : x R y} ∈ v}`.
fn rel_transform(n: usize, rel: Rel, v: Family) -> usize {
    let mut out = 0;
    for x in 0..n {
        let ys = (0..n)
            .filter(|&y| rel.holds(x.cmp(&y)))
            .fold(0usize, |s, y| s | 1 << y);
        if member(v, ys) {
            out |= 1 << x;
        }
    }
    out
}

/// `op̃(u, v) = {S : {x : {y : op(x, y) ∈ S} ∈ v} ∈ u}`.
fn op_family(n: usize, op: MinMax, u: Family, v: Family) -> Family {
    let mut out = 0;
    for s in 0..1usize << n {
        let mut xs = 0usize;
        for x in 0..n {
            let ys = (0..n)
                .filter(|&y| {
                    let r = match op {
                        MinMax::Min => x.min(y),
                        MinMax::Max => x.max(y),
                    };
                    s >> r & 1 == 1
                })
                .fold(0usize, |acc, y| acc | 1 << y);
            if member(v, ys) {
                xs |= 1 << x;
            }
        }
        if member(u, xs) {
            out |= 1 << s;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelTable {
    pub rel: Rel,
    /// `table[x][y]` is `x̃ R̃ ỹ` by double membership.
    pub table: Vec<Vec<bool>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteReport {
    pub n: usize,
    /// Families enumerated when looking for ultrafilters, if done.
    pub families_enumerated: Option<u64>,
    /// Whether the ultrafilters found are exactly the `n` principal ones.
    pub only_principal: Option<bool>,
    pub relations: Vec<RelTable>,
    /// `min_table[x][y] = z` when `miñ(x̃, ỹ)` is the principal family of
    /// `z`; `None` if it is not principal.
    pub min_table: Vec<Vec<Option<usize>>>,
    pub max_table: Vec<Vec<Option<usize>>>,
    pub instances: u64,
    /// Cells disagreeing with `<`, `≤`, `>`, `≥`, `min`, `max` on `Fin(n)`.
    pub mismatches: Vec<String>,
}

impl BruteReport {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty() && self.only_principal != Some(false)
    }

    pub fn relation(&self, rel: Rel) -> &[Vec<bool>] {
        &self
            .relations
            .iter()
            .find(|t| t.rel == rel)
            .expect("all four relations are tabulated")
            .table
    }
}

/// Evaluates the extended relations and operations on `Fin(n)` straight
/// from their set-theoretic definitions.
pub fn finite_bruteforce(n: usize) -> Result<BruteReport> {
    if !(1..=MAX_N).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "n must be in 1..={MAX_N}, got {n}"
        )));
    }
    let ps: Vec<Family> = (0..n).map(|x| principal(n, x)).collect();
    let mut mismatches = Vec::new();
    let mut instances = 0u64;

    let (families_enumerated, only_principal) = if n <= MAX_EXHAUSTIVE_N {
        let count = 1u64 << (1u32 << n);
        let found: Vec<Family> = (0..count).filter(|&f| is_ultrafilter(n, f)).collect();
        instances += 1;
        let ok = found.len() == n && found.iter().all(|f| ps.contains(f));
        if !ok {
            mismatches.push(format!("ultrafilters on {n} points: {} found", found.len()));
        }
        (Some(count), Some(ok))
    } else {
        (None, None)
    };

    let mut relations = Vec::new();
    for rel in Rel::ALL {
        let mut table = vec![vec![false; n]; n];
        for x in 0..n {
            for y in 0..n {
                let got = member(ps[x], rel_transform(n, rel, ps[y]));
                table[x][y] = got;
                instances += 1;
                if got != rel.holds(x.cmp(&y)) {
                    mismatches.push(format!("{x} {rel} {y}: {got}"));
                }
            }
        }
        relations.push(RelTable { rel, table });
    }

    let mut tables = [vec![vec![None; n]; n], vec![vec![None; n]; n]];
    for (k, op) in [MinMax::Min, MinMax::Max].into_iter().enumerate() {
        for x in 0..n {
            for y in 0..n {
                let f = op_family(n, op, ps[x], ps[y]);
                let got = ps.iter().position(|&p| p == f);
                tables[k][x][y] = got;
                instances += 1;
                let want = if op == MinMax::Min {
                    x.min(y)
                } else {
                    x.max(y)
                };
                if got != Some(want) {
                    mismatches.push(format!("{}({x}, {y}): {got:?}", op.name()));
                }
            }
        }
    }
    let [min_table, max_table] = tables;
    Ok(BruteReport {
        n,
        families_enumerated,
        only_principal,
        relations,
        min_table,
        max_table,
        instances,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let r = finite_bruteforce(3).unwrap();
        assert!(r.agrees(), "{:?}", r.mismatches);
        assert!(r.relation(Rel::Lt)[1][2]);
        let one = finite_bruteforce(1).unwrap();
        assert_eq!(one.relation(Rel::Lt), [vec![false]]);
        assert_eq!(one.relation(Rel::Le), [vec![true]]);
        assert_eq!(finite_bruteforce(4).unwrap().min_table[2][3], Some(2));
    }

    #[test]
    fn only_principal_ultrafilters() {
        for n in 1..=MAX_EXHAUSTIVE_N {
            assert_eq!(finite_bruteforce(n).unwrap().only_principal, Some(true));
        }
        assert_eq!(finite_bruteforce(6).unwrap().only_principal, None);
    }

    #[test]
    fn range() {
        assert!(matches!(finite_bruteforce(0), Err(Error::OutOfRange(_))));
        assert!(matches!(finite_bruteforce(7), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn non_ultrafilters_rejected() {
        // the family of sets holding 0 or 1 is not an ultrafilter on 2 points
        let f = principal(2, 0) | principal(2, 1);
        assert!(!is_ultrafilter(2, f));
        assert!(is_ultrafilter(2, principal(2, 1)));
    }
}
