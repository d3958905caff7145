//! Morphisms of the star product of two partition categories.
//!
//! A basic morphism `[n] -> [m]` picks a subset `A` of the source and `B` of the
//! target, a partition diagram `A -> B` for the first factor and one
//! `Aᶜ -> Bᶜ` for the second. Two basic morphisms compose to zero unless the
//! middle subsets agree.

use std::collections::BTreeMap;
use std::fmt;

use super::{Diagram, Kind};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::set::Set;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StarTerm {
    /// Source labels handled by the first factor.
    pub src_part: Set,
    /// Target labels handled by the first factor.
    pub tgt_part: Set,
    pub first: Diagram,
    pub second: Diagram,
}

impl StarTerm {
    pub fn new(n: usize, m: usize, src_part: Set, tgt_part: Set, first: Diagram, second: Diagram) -> Result<Self> {
        let ok = src_part.is_subset(Set::range(n))
            && tgt_part.is_subset(Set::range(m))
            && first.source() == src_part.len()
            && first.target() == tgt_part.len()
            && second.source() == n - src_part.len()
            && second.target() == m - tgt_part.len()
            && first.kind() == Kind::Partition
            && second.kind() == Kind::Partition;
        if !ok {
            return Err(Error::SizeMismatch("part sizes disagree with the component diagrams".into()));
        }
        Ok(StarTerm { src_part, tgt_part, first, second })
    }
}

impl fmt::Debug for StarTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{} ({}) ⋆ ({})", self.src_part, self.tgt_part, self.first, self.second)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StarMorphism {
    pub n: usize,
    pub m: usize,
    terms: BTreeMap<StarTerm, Rational>,
}

impl StarMorphism {
    pub fn zero(n: usize, m: usize) -> Self {
        StarMorphism { n, m, terms: BTreeMap::new() }
    }

    /// Sum over all decompositions of `[n]` of the pair of identities.
    pub fn identity(n: usize) -> Self {
        let mut out = Self::zero(n, n);
        for a in Set::range(n).subsets() {
            let k = a.len();
            let t = StarTerm {
                src_part: a,
                tgt_part: a,
                first: Diagram::identity(Kind::Partition, k),
                second: Diagram::identity(Kind::Partition, n - k),
            };
            out.add_term(t, &Rational::one());
        }
        out
    }

    pub fn from_term(n: usize, m: usize, t: StarTerm, c: Rational) -> Self {
        let mut out = Self::zero(n, m);
        out.add_term(t, &c);
        out
    }

    pub fn add_term(&mut self, t: StarTerm, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let sum = self.terms.get(&t).map_or_else(|| c.clone(), |v| v + c);
        if sum.is_zero() {
            self.terms.remove(&t);
        } else {
            self.terms.insert(t, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&StarTerm, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &StarMorphism) -> StarMorphism {
        let mut out = self.clone();
        for (t, c) in rhs.terms() {
            out.add_term(t.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> StarMorphism {
        let mut out = Self::zero(self.n, self.m);
        for (t, v) in self.terms() {
            out.add_term(t.clone(), &(v * c));
        }
        out
    }
}

/// `g ∘ f`, with loop parameters `δ` on the first factor and `ε` on the second.
pub fn star_compose(g: &StarMorphism, f: &StarMorphism, delta: &Rational, eps: &Rational) -> Result<StarMorphism> {
    if f.m != g.n {
        return Err(Error::SizeMismatch(format!("target {} vs source {}", f.m, g.n)));
    }
    let mut out = StarMorphism::zero(f.n, g.m);
    for (tg, cg) in g.terms() {
        for (tf, cf) in f.terms() {
            if tf.tgt_part != tg.src_part {
                continue;
            }
            let (d1, l1) = tg.first.compose_raw(&tf.first)?;
            let (d2, l2) = tg.second.compose_raw(&tf.second)?;
            let coef = &(cg * cf) * &(&delta.pow(l1 as u32) * &eps.pow(l2 as u32));
            let t = StarTerm { src_part: tf.src_part, tgt_part: tg.tgt_part, first: d1, second: d2 };
            out.add_term(t, &coef);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::compose_diagrams;

    fn term(n: usize, m: usize, a: &[usize], b: &[usize], first: &[&[u8]], second: &[&[u8]]) -> StarTerm {
        let (a, b) = (Set::from_labels(a.iter().copied()), Set::from_labels(b.iter().copied()));
        let d = |s: usize, t: usize, bl: &[&[u8]]| {
            Diagram::new(Kind::Partition, s, t, bl.iter().map(|x| x.to_vec()).collect()).unwrap()
        };
        let first = d(a.len(), b.len(), first);
        let second = d(n - a.len(), m - b.len(), second);
        StarTerm::new(n, m, a, b, first, second).unwrap()
    }

    #[test]
    fn mismatched_middle_is_zero() {
        let f = StarMorphism::from_term(1, 1, term(1, 1, &[1], &[1], &[&[0, 1]], &[]), Rational::one());
        let g = StarMorphism::from_term(1, 1, term(1, 1, &[], &[], &[], &[&[0, 1]]), Rational::one());
        let r = star_compose(&g, &f, &Rational::one(), &Rational::one()).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn identity_is_idempotent() {
        for n in 0..=3 {
            let id = StarMorphism::identity(n);
            assert_eq!(star_compose(&id, &id, &Rational::from_int(2), &Rational::new(1, 2)).unwrap(), id);
        }
    }

    #[test]
    fn matched_middle_composes_componentwise() {
        let (delta, eps) = (Rational::from_int(3), Rational::from_int(5));
        // first factor cuts the strand; second factor passes it through
        let f = term(2, 2, &[1], &[1], &[&[0], &[1]], &[&[0, 1]]);
        let g = term(2, 2, &[1], &[1], &[&[0], &[1]], &[&[0], &[1]]);
        let r = star_compose(
            &StarMorphism::from_term(2, 2, g.clone(), Rational::one()),
            &StarMorphism::from_term(2, 2, f.clone(), Rational::one()),
            &delta,
            &eps,
        )
        .unwrap();
        let c1 = compose_diagrams(&g.first, &f.first, &delta).unwrap();
        let c2 = compose_diagrams(&g.second, &f.second, &eps).unwrap();
        let (d1, k1) = c1.terms().next().map(|(d, c)| (d.clone(), c.clone())).unwrap();
        let (d2, k2) = c2.terms().next().map(|(d, c)| (d.clone(), c.clone())).unwrap();
        let expect =
            StarMorphism::from_term(2, 2, StarTerm::new(2, 2, f.src_part, g.tgt_part, d1, d2).unwrap(), &k1 * &k2);
        assert_eq!(r, expect);
        // the middle singleton blocks of the first factor close off: δ once
        assert_eq!(k1, delta);
        assert_eq!(k2, Rational::one());
    }
}
