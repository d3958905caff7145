//! Named generators on labeled sets.
//!
//! A morphism `X -> Y` between label sets is stored as a diagram
//! `[|X|] -> [|Y|]` through the order-preserving identifications. Labels in
//! `X ∩ Y` not mentioned by a generator are joined by identity strands.

use super::{Diagram, DiagramMorphism, Kind};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::set::Set;

/// A diagram `src -> dst` with the given `(source part, target part)` blocks and
/// identity strands on the unmentioned common labels.
pub fn from_labeled(kind: Kind, src: Set, dst: Set, blocks: &[(Set, Set)]) -> Result<Diagram> {
    let n = src.len();
    let (mut used_s, mut used_t) = (Set::EMPTY, Set::EMPTY);
    let mut out = Vec::new();
    for &(a, b) in blocks {
        if !a.is_subset(src) || !b.is_subset(dst) || !a.is_disjoint(used_s) || !b.is_disjoint(used_t) {
            return Err(Error::InvalidIndices(format!("block {a}|{b} does not fit {src} -> {dst}")));
        }
        used_s = used_s.union(a);
        used_t = used_t.union(b);
        out.push(a.iter().map(|x| src.rank(x) as u8).chain(b.iter().map(|x| (n + dst.rank(x)) as u8)).collect());
    }
    let rest_s = src.minus(used_s);
    let rest_t = dst.minus(used_t);
    if rest_s != rest_t {
        return Err(Error::InvalidIndices(format!("labels {rest_s} and {rest_t} left unpaired")));
    }
    for x in rest_s.iter() {
        out.push(vec![src.rank(x) as u8, (n + dst.rank(x)) as u8]);
    }
    Diagram::new(kind, n, dst.len(), out)
}

pub fn identity_on(kind: Kind, s: Set) -> Diagram {
    Diagram::identity(kind, s.len())
}

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidIndices(what.into()))
    }
}

/// Brauer cup `S∖{i,j} -> S`: an edge between `i` and `j` in the target.
pub fn brauer_cup(s: Set, i: usize, j: usize) -> Result<Diagram> {
    require(i != j && s.contains(i) && s.contains(j), "cup needs distinct i, j in S")?;
    let pair = Set::from_labels([i, j]);
    from_labeled(Kind::Brauer, s.minus(pair), s, &[(Set::EMPTY, pair)])
}

/// Brauer cap `S -> S∖{i,j}`.
pub fn brauer_cap(s: Set, i: usize, j: usize) -> Result<Diagram> {
    require(i != j && s.contains(i) && s.contains(j), "cap needs distinct i, j in S")?;
    let pair = Set::from_labels([i, j]);
    from_labeled(Kind::Brauer, s, s.minus(pair), &[(pair, Set::EMPTY)])
}

/// `ι: S∖j -> S∖i` moving `i` to `j`; the identity when `i = j`.
pub fn relabel_iota(kind: Kind, s: Set, i: usize, j: usize) -> Result<Diagram> {
    require(s.contains(i) && s.contains(j), "ι needs i, j in S")?;
    if i == j {
        return Ok(identity_on(kind, s.without(i)));
    }
    from_labeled(kind, s.without(j), s.without(i), &[(Set::singleton(i), Set::singleton(j))])
}

/// Restricted `η_{i,A}: S∖A -> S∖i`, with `{i} ∪ A` one block (`i` below, `A` above).
pub fn restricted_eta(s: Set, i: usize, a: Set) -> Result<Diagram> {
    require(s.contains(i) && a.is_subset(s) && !a.contains(i), "η_{i,A} needs i ∈ S, A ⊆ S∖i")?;
    from_labeled(Kind::Restricted, s.minus(a), s.without(i), &[(Set::singleton(i), a)])
}

/// Restricted `ζ_A: S∖A -> S`, with `A` a block of the target; `ζ_∅ = δ·id`.
pub fn restricted_zeta(s: Set, a: Set, delta: &Rational) -> Result<DiagramMorphism> {
    require(a.is_subset(s), "ζ_A needs A ⊆ S")?;
    if a.is_empty() {
        return Ok(DiagramMorphism::scaled(identity_on(Kind::Restricted, s), delta.clone()));
    }
    Ok(DiagramMorphism::from_diagram(from_labeled(Kind::Restricted, s.minus(a), s, &[(Set::EMPTY, a)])?))
}

/// Partition `η_{A,B}: S∖B -> S∖A`, with `A ∪ B` one block; `η_{∅,∅} = δ·id`.
pub fn partition_block(s: Set, a: Set, b: Set, delta: &Rational) -> Result<DiagramMorphism> {
    require(a.is_subset(s) && b.is_subset(s) && a.is_disjoint(b), "η_{A,B} needs disjoint A, B ⊆ S")?;
    if a.is_empty() && b.is_empty() {
        return Ok(DiagramMorphism::scaled(identity_on(Kind::Partition, s), delta.clone()));
    }
    Ok(DiagramMorphism::from_diagram(from_labeled(Kind::Partition, s.minus(b), s.minus(a), &[(a, b)])?))
}

/// A map `f: [m] -> [n]` (1-based images) as the restricted diagram `[n] -> [m]`
/// with blocks `{x} ∪ f⁻¹(x)`.
pub fn embed_fa(f: &[usize], n: usize) -> Result<Diagram> {
    require(f.iter().all(|&x| (1..=n).contains(&x)), "function value outside codomain")?;
    let blocks = (1..=n)
        .map(|x| {
            let mut b = vec![(x - 1) as u8];
            b.extend(f.iter().enumerate().filter(|&(_, &fx)| fx == x).map(|(y, _)| (n + y) as u8));
            b
        })
        .collect();
    Diagram::new(Kind::Restricted, n, f.len(), blocks)
}
