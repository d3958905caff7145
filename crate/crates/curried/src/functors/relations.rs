//! The composition relations among generators, checked on diagrams.
//!
//! Frames are enumerated exhaustively: every assignment of the labels of
//! `[s]` to the regions of the relation, for every `s` up to the bound. Each
//! relation is tagged with the case of the compatibility argument it covers.

use std::collections::BTreeMap;

use crate::diagram::{
    brauer_cap, brauer_cup, compose, partition_block, relabel_iota, restricted_eta, restricted_zeta, DiagramMorphism,
    Kind,
};
use crate::error::Result;
use crate::rational::Rational;
use crate::set::Set;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationReport {
    /// Frames checked per case.
    pub cases: BTreeMap<String, usize>,
    pub failures: Vec<String>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Whether each named case was reached by at least one frame.
    pub fn covers(&self, cases: &[&str]) -> bool {
        cases.iter().all(|c| self.cases.get(*c).is_some_and(|n| *n > 0))
    }

    fn record(&mut self, case: &str, ok: bool, at: impl FnOnce() -> String) {
        *self.cases.entry(case.to_string()).or_default() += 1;
        if !ok {
            self.failures.push(format!("{case} {}", at()));
        }
    }
}

/// Every way to place the labels of `[s]` into `regions` boxes.
fn assignments(s: usize, regions: usize) -> impl Iterator<Item = Vec<Set>> {
    let total = regions.pow(s as u32);
    (0..total).map(move |mut code| {
        let mut out = vec![Set::EMPTY; regions];
        for x in 1..=s {
            out[code % regions] = out[code % regions].with(x);
            code /= regions;
        }
        out
    })
}

fn single(x: Set) -> Option<usize> {
    (x.len() == 1).then(|| x.nth(0))
}

fn after(g: &DiagramMorphism, f: &DiagramMorphism, delta: &Rational) -> Result<DiagramMorphism> {
    compose(g, f, delta)
}

fn scalar_identity(kind: Kind, n: usize, delta: &Rational) -> DiagramMorphism {
    DiagramMorphism::identity(kind, n).scale(delta)
}

fn d(x: crate::diagram::Diagram) -> DiagramMorphism {
    DiagramMorphism::from_diagram(x)
}

/// Self-commutation of cups and of caps, and the three cap-after-cup cases
/// by the overlap `n` of the two pairs.
pub fn brauer_relations(max: usize, delta: &Rational) -> Result<RelationReport> {
    let mut r = RelationReport::default();
    for s in 0..=max {
        let full = Set::range(s);
        // regions: rest, {i}, {j}, {k}, {l}
        for v in assignments(s, 5) {
            let (Some(i), Some(j), Some(k), Some(l)) = (single(v[1]), single(v[2]), single(v[3]), single(v[4])) else {
                continue;
            };
            let (ij, kl) = (Set::from_labels([i, j]), Set::from_labels([k, l]));
            let at = || format!("S={full} i={i} j={j} k={k} l={l}");
            let lhs = after(&d(brauer_cup(full, i, j)?), &d(brauer_cup(full.minus(ij), k, l)?), delta)?;
            let rhs = after(&d(brauer_cup(full, k, l)?), &d(brauer_cup(full.minus(kl), i, j)?), delta)?;
            r.record("(a) cups commute", lhs == rhs, at);
            let lhs = after(&d(brauer_cap(full.minus(ij), k, l)?), &d(brauer_cap(full, i, j)?), delta)?;
            let rhs = after(&d(brauer_cap(full.minus(kl), i, j)?), &d(brauer_cap(full, k, l)?), delta)?;
            r.record("(a) caps commute", lhs == rhs, at);
            let lhs = after(&d(brauer_cap(full, k, l)?), &d(brauer_cup(full, i, j)?), delta)?;
            let rhs = after(&d(brauer_cup(full.minus(kl), i, j)?), &d(brauer_cap(full.minus(ij), k, l)?), delta)?;
            r.record("n=0", lhs == rhs, at);
        }
        // regions: rest, {i}, {j}, {k}
        for v in assignments(s, 4) {
            let (Some(i), Some(j), Some(k)) = (single(v[1]), single(v[2]), single(v[3])) else { continue };
            let lhs = after(&d(brauer_cap(full, i, j)?), &d(brauer_cup(full, j, k)?), delta)?;
            let rhs = d(relabel_iota(Kind::Brauer, full.without(j), i, k)?);
            r.record("n=1", lhs == rhs, || format!("S={full} i={i} j={j} k={k}"));
        }
        for v in assignments(s, 3) {
            let (Some(i), Some(j)) = (single(v[1]), single(v[2])) else { continue };
            let lhs = after(&d(brauer_cap(full, i, j)?), &d(brauer_cup(full, j, i)?), delta)?;
            let rhs = scalar_identity(Kind::Brauer, s - 2, delta);
            r.record("n=2", lhs == rhs, || format!("S={full} i={i} j={j}"));
        }
    }
    Ok(r)
}

/// `η^S_{i,A}` for `i = Some(_)`, `ζ^S_A` otherwise.
fn restricted(s: Set, i: Option<usize>, a: Set, delta: &Rational) -> Result<DiagramMorphism> {
    match i {
        Some(i) => Ok(d(restricted_eta(s, i, a)?)),
        None => restricted_zeta(s, a, delta),
    }
}

/// Commutation of `η`/`ζ` on disjoint supports, the shared-label cases
/// `η∘η` and `η∘ζ`, and the normalizations `η_{i,{j}} = ι`, `ζ_∅ = δ`.
pub fn restricted_relations(max: usize, delta: &Rational) -> Result<RelationReport> {
    let mut r = RelationReport::default();
    for s in 0..=max {
        let full = Set::range(s);
        // regions: rest, A, C, i, k; either of i and k may be absent (ζ)
        for v in assignments(s, 5) {
            let (a, c) = (v[1], v[2]);
            let (Some(i), Some(k)) = (pick(v[3]), pick(v[4])) else { continue };
            let (x1, x2) = (i.map_or(Set::EMPTY, Set::singleton), k.map_or(Set::EMPTY, Set::singleton));
            let lhs =
                after(&restricted(full.minus(x2), i, a, delta)?, &restricted(full.minus(a), k, c, delta)?, delta)?;
            let rhs =
                after(&restricted(full.minus(x1), k, c, delta)?, &restricted(full.minus(c), i, a, delta)?, delta)?;
            r.record("j∉A (a)", lhs == rhs, || format!("S={full} i={i:?} A={a} k={k:?} C={c}"));
        }
        // regions: rest, A, B∖j, {j}, {i}
        for v in assignments(s, 5) {
            let (a, bj) = (v[1], v[2]);
            let (Some(j), Some(i)) = (single(v[3]), single(v[4])) else { continue };
            let b = bj.with(j);
            let at = || format!("S={full} A={a} B={b} i={i} j={j}");
            let lhs =
                after(&d(restricted_eta(full.without(i), j, a)?), &d(restricted_eta(full.minus(a), i, b)?), delta)?;
            let rhs = d(restricted_eta(full.without(j), i, a.union(bj))?);
            r.record("j∈A (b)", lhs == rhs, at);
        }
        // regions: rest, A, B∖j, {j}
        for v in assignments(s, 4) {
            let (a, bj) = (v[1], v[2]);
            let Some(j) = single(v[3]) else { continue };
            let b = bj.with(j);
            let lhs = after(&d(restricted_eta(full, j, a)?), &restricted_zeta(full.minus(a), b, delta)?, delta)?;
            let rhs = restricted_zeta(full.without(j), a.union(bj), delta)?;
            r.record("j∈A (c)", lhs == rhs, || format!("S={full} A={a} B={b} j={j}"));
        }
        for v in assignments(s, 3) {
            let (Some(i), Some(j)) = (single(v[1]), single(v[2])) else { continue };
            let ok = d(restricted_eta(full, i, Set::singleton(j))?) == d(relabel_iota(Kind::Restricted, full, i, j)?);
            r.record("(d)", ok, || format!("S={full} i={i} j={j}"));
        }
        let ok = restricted_zeta(full, Set::EMPTY, delta)? == scalar_identity(Kind::Restricted, s, delta);
        r.record("(e)", ok, || format!("S={full}"));
    }
    Ok(r)
}

/// `None` for an empty region (no label), `Some(Some(x))` for a singleton.
fn pick(x: Set) -> Option<Option<usize>> {
    match x.len() {
        0 => Some(None),
        1 => Some(Some(x.nth(0))),
        _ => None,
    }
}

/// (D1) on disjoint frames, (D2) when `B∩D ≠ ∅` (with (D3) when nothing is
/// left outside `B∩D`), and (D4).
pub fn partition_relations(max: usize, delta: &Rational) -> Result<RelationReport> {
    let mut r = RelationReport::default();
    let eta = |s: Set, a: Set, b: Set| partition_block(s, a, b, delta);
    for s in 0..=max {
        let full = Set::range(s);
        // regions: rest, A, B∖D, C, D∖B, B∩D
        for v in assignments(s, 6) {
            let (a, c, bd) = (v[1], v[3], v[5]);
            let (b, dd) = (v[2].union(bd), v[4].union(bd));
            let at = || format!("S={full} A={a} B={b} C={c} D={dd}");
            let lhs = after(&eta(full.minus(c), dd, a)?, &eta(full.minus(a), c, b)?, delta)?;
            if bd.is_empty() {
                let rhs = after(&eta(full.minus(dd), c, b)?, &eta(full.minus(b), dd, a)?, delta)?;
                r.record("B∩D=∅ (D1)", lhs == rhs, at);
                continue;
            }
            let (x3, y3) = (c.union(v[4]), a.union(v[2]));
            let rhs = eta(full.minus(bd), x3, y3)?;
            let case = if x3.is_empty() && y3.is_empty() { "B∩D≠∅ (D2)+(D3)" } else { "B∩D≠∅ (D2)" };
            r.record(case, lhs == rhs, at);
        }
        for v in assignments(s, 3) {
            let (Some(i), Some(j)) = (single(v[1]), single(v[2])) else { continue };
            let ok = eta(full, Set::singleton(i), Set::singleton(j))? == d(relabel_iota(Kind::Partition, full, i, j)?);
            r.record("(D4)", ok, || format!("S={full} i={i} j={j}"));
        }
        let ok = eta(full, Set::EMPTY, Set::EMPTY)? == scalar_identity(Kind::Partition, s, delta);
        r.record("(D3)", ok, || format!("S={full}"));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deltas() -> [Rational; 3] {
        [Rational::zero(), Rational::one(), Rational::new(3, 2)]
    }

    #[test]
    fn brauer_relations_hold_with_every_case() {
        for delta in deltas() {
            let r = brauer_relations(4, &delta).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
            assert!(r.covers(&["n=0", "n=1", "n=2", "(a) cups commute", "(a) caps commute"]));
        }
    }

    #[test]
    fn restricted_relations_hold_with_every_case() {
        for delta in deltas() {
            let r = restricted_relations(4, &delta).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
            assert!(r.covers(&["j∉A (a)", "j∈A (b)", "j∈A (c)", "(d)", "(e)"]));
        }
    }

    #[test]
    fn partition_relations_hold_with_every_case() {
        for delta in deltas() {
            let r = partition_relations(4, &delta).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
            assert!(r.covers(&["B∩D=∅ (D1)", "B∩D≠∅ (D2)", "B∩D≠∅ (D2)+(D3)", "(D4)"]));
        }
    }

    #[test]
    fn wrong_loop_value_breaks_n2() {
        // composing at δ but comparing against a different scalar
        let r = brauer_relations(2, &Rational::from_int(2)).unwrap();
        assert!(r.passed());
        let lhs = after(
            &d(brauer_cap(Set::range(2), 1, 2).unwrap()),
            &d(brauer_cup(Set::range(2), 2, 1).unwrap()),
            &Rational::from_int(2),
        )
        .unwrap();
        assert_ne!(lhs, scalar_identity(Kind::Brauer, 0, &Rational::from_int(3)));
    }
}
