//! Principal modules `M(S) = Hom([k], S)` with the category acting by
//! post-composition, and the labeled generators that act on them.

use std::collections::BTreeMap;

use super::Family;
use crate::diagram::{
    brauer_cap, brauer_cup, compose, enumerate_diagrams, from_labeled, partition_block, restricted_eta,
    restricted_zeta, star_compose, Diagram, DiagramMorphism, Kind, StarMorphism, StarTerm,
};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::set::Set;
use crate::species::{FbModule, FbMorphism};

/// A morphism of the category acting on a principal module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Morphism {
    Diagram(DiagramMorphism),
    Star(StarMorphism),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Basic {
    Diagram(Diagram),
    Star(StarTerm),
}

/// Which factor of `P(δ)⋆P(ε)` a generator lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    First,
    Second,
}

/// `A ∪ B` as one block of `S∖B -> S∖A` in one factor, identity strands
/// elsewhere split between the two factors in every way.
pub fn star_block(s: Set, a: Set, b: Set, factor: Factor) -> Result<StarMorphism> {
    if !a.is_disjoint(b) || !a.union(b).is_subset(s) {
        return Err(Error::InvalidIndices(format!("star block {a}|{b} does not fit {s}")));
    }
    let (src, dst) = (s.minus(b), s.minus(a));
    let strands = s.minus(a.union(b));
    let mut out = StarMorphism::zero(src.len(), dst.len());
    for r1 in strands.subsets() {
        let r2 = strands.minus(r1);
        let (mine, other) = match factor {
            Factor::First => (r1, r2),
            Factor::Second => (r2, r1),
        };
        let active = from_labeled(Kind::Partition, mine.union(a), mine.union(b), &[(a, b)])?;
        let passive = from_labeled(Kind::Partition, other, other, &[])?;
        let (first, second, src1, dst1) = match factor {
            Factor::First => (active, passive, mine.union(a), mine.union(b)),
            Factor::Second => (passive, active, other, other),
        };
        let t = StarTerm::new(src.len(), dst.len(), src.compress(src1), dst.compress(dst1), first, second)?;
        out.add_term(t, &Rational::one());
    }
    Ok(out)
}

/// The bijection diagram of `images` (0-based) in the star category.
fn star_permutation(images: &[usize]) -> Result<StarMorphism> {
    let n = images.len();
    let full = Set::range(n);
    let mut out = StarMorphism::zero(n, n);
    for a in full.subsets() {
        let image = Set::from_labels(a.iter().map(|x| images[x - 1] + 1));
        let strands = |part: Set| -> Vec<(Set, Set)> {
            part.iter().map(|x| (Set::singleton(x), Set::singleton(images[x - 1] + 1))).collect()
        };
        let first = from_labeled(Kind::Partition, a, image, &strands(a))?;
        let rest = full.minus(a);
        let second = from_labeled(Kind::Partition, rest, full.minus(image), &strands(rest))?;
        out.add_term(StarTerm::new(n, n, a, image, first, second)?, &Rational::one());
    }
    Ok(out)
}

fn star_identity_scaled(s: Set, c: &Rational) -> StarMorphism {
    StarMorphism::identity(s.len()).scale(c)
}

/// `Hom([k], -)` truncated at `N`, with its basis and the category action.
#[derive(Clone, Debug)]
pub struct PrincipalModule {
    pub family: Family,
    pub k: usize,
    basis: Vec<Vec<Basic>>,
    index: Vec<BTreeMap<Basic, usize>>,
}

impl PrincipalModule {
    pub fn new(family: Family, k: usize, truncation: usize) -> Result<Self> {
        let basis: Vec<Vec<Basic>> = (0..=truncation).map(|n| basic_morphisms(&family, k, n)).collect::<Result<_>>()?;
        let index = basis.iter().map(|b| b.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect()).collect();
        Ok(PrincipalModule { family, k, basis, index })
    }

    pub fn truncation(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.basis.get(n).map_or(0, Vec::len)
    }

    /// Matrix of post-composition with `g: [n] -> [m]`.
    pub fn act(&self, g: &Morphism) -> Result<Matrix> {
        let (n, m) = match g {
            Morphism::Diagram(d) => (d.n, d.m),
            Morphism::Star(s) => (s.n, s.m),
        };
        if n > self.truncation() || m > self.truncation() {
            return Err(Error::OutOfTruncation(n.max(m), self.truncation()));
        }
        let mut out = Matrix::zeros(self.dim(m), self.dim(n));
        for (col, b) in self.basis[n].iter().enumerate() {
            let image: Vec<(Basic, Rational)> = match (g, b) {
                (Morphism::Diagram(g), Basic::Diagram(d)) => {
                    let f = DiagramMorphism::from_diagram(d.clone());
                    let delta = self.family.delta();
                    compose(g, &f, &delta)?.terms().map(|(d, c)| (Basic::Diagram(d.clone()), c.clone())).collect()
                }
                (Morphism::Star(g), Basic::Star(t)) => {
                    let f = StarMorphism::from_term(self.k, n, t.clone(), Rational::one());
                    let (delta, eps) = (self.family.delta(), self.family.epsilon());
                    star_compose(g, &f, &delta, &eps)?
                        .terms()
                        .map(|(t, c)| (Basic::Star(t.clone()), c.clone()))
                        .collect()
                }
                _ => return Err(Error::KindMismatch("morphism and module come from different categories".into())),
            };
            for (x, c) in image {
                let row =
                    self.index[m].get(&x).ok_or_else(|| Error::KindMismatch("composite left the basis".into()))?;
                out.add_at(*row, col, &c);
            }
        }
        Ok(out)
    }

    pub fn permutation(&self, images: &[usize]) -> Result<Morphism> {
        Ok(match self.family {
            Family::Star(..) => Morphism::Star(star_permutation(images)?),
            _ => Morphism::Diagram(DiagramMorphism::from_diagram(Diagram::permutation(self.family.kind(), images))),
        })
    }

    /// `f ↦ f ∘ g` from this module to `target = Hom([k′], -)`, for
    /// `g: [k′] -> [k]`. Post-composition commutes with it, so it is a map of
    /// modules over the category.
    pub fn precompose(&self, target: &PrincipalModule, g: &DiagramMorphism) -> Result<FbMorphism> {
        if matches!(self.family, Family::Star(..)) || self.family != target.family {
            return Err(Error::KindMismatch("precomposition needs two diagram modules of one family".into()));
        }
        if (g.n, g.m) != (target.k, self.k) {
            return Err(Error::SizeMismatch(format!(
                "g must be [{}] -> [{}], got [{}] -> [{}]",
                target.k, self.k, g.n, g.m
            )));
        }
        let delta = self.family.delta();
        let maps = (0..=self.truncation().min(target.truncation()))
            .map(|n| {
                let mut out = Matrix::zeros(target.dim(n), self.dim(n));
                for (col, b) in self.basis[n].iter().enumerate() {
                    let Basic::Diagram(d) = b else { unreachable!("diagram families have diagram bases") };
                    for (e, c) in compose(&DiagramMorphism::from_diagram(d.clone()), g, &delta)?.terms() {
                        let row = target.index[n]
                            .get(&Basic::Diagram(e.clone()))
                            .ok_or_else(|| Error::KindMismatch("composite left the basis".into()))?;
                        out.add_at(*row, col, c);
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        Ok(FbMorphism { maps })
    }

    /// The underlying FB-module.
    pub fn fb_module(&self) -> Result<FbModule> {
        let mut degrees = Vec::new();
        for n in 0..=self.truncation() {
            let mut gens = Vec::new();
            for i in 0..n.saturating_sub(1) {
                let mut images: Vec<usize> = (0..n).collect();
                images.swap(i, i + 1);
                gens.push(self.act(&self.permutation(&images)?)?);
            }
            degrees.push(crate::species::Degree { dim: self.dim(n), gens });
        }
        Ok(FbModule::from_degrees(degrees))
    }

    /// The generator `η` on `S∖B -> S∖A` (with `ζ`, cups and caps as its
    /// special cases), as a morphism of this module's category.
    pub fn generator(&self, s: Set, a: Set, b: Set, factor: Factor) -> Result<Morphism> {
        let delta = self.family.delta();
        Ok(match self.family {
            Family::Brauer(_) => {
                if a.len() + b.len() != 2 || !(a.is_empty() || b.is_empty()) {
                    return Err(Error::Arity("Brauer generators join two labels on one side".into()));
                }
                let pair = a.union(b);
                let (i, j) = (pair.nth(0), pair.nth(1));
                let d = if a.is_empty() { brauer_cup(s, i, j)? } else { brauer_cap(s, i, j)? };
                Morphism::Diagram(DiagramMorphism::from_diagram(d))
            }
            Family::Restricted(_) => Morphism::Diagram(match a.len() {
                0 => restricted_zeta(s, b, &delta)?,
                1 => DiagramMorphism::from_diagram(restricted_eta(s, a.nth(0), b)?),
                _ => return Err(Error::Arity("restricted generators have at most one source label".into())),
            }),
            Family::Partition(_) => Morphism::Diagram(partition_block(s, a, b, &delta)?),
            Family::Star(_, ref eps) => Morphism::Star(if a.is_empty() && b.is_empty() {
                star_identity_scaled(s, if factor == Factor::First { &delta } else { eps })
            } else {
                star_block(s, a, b, factor)?
            }),
        })
    }
}

fn basic_morphisms(family: &Family, k: usize, n: usize) -> Result<Vec<Basic>> {
    if let Family::Star(..) = family {
        let mut out = Vec::new();
        for a in Set::range(k).subsets() {
            for b in Set::range(n).subsets() {
                for first in enumerate_diagrams(a.len(), b.len(), Kind::Partition)? {
                    for second in enumerate_diagrams(k - a.len(), n - b.len(), Kind::Partition)? {
                        out.push(Basic::Star(StarTerm::new(k, n, a, b, first.clone(), second)?));
                    }
                }
            }
        }
        out.sort();
        return Ok(out);
    }
    let mut out: Vec<Basic> = enumerate_diagrams(k, n, family.kind())?.into_iter().map(Basic::Diagram).collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::bell;

    #[test]
    fn principal_dimensions() {
        let q = Rational::one();
        let brauer = PrincipalModule::new(Family::Brauer(q.clone()), 0, 4).unwrap();
        assert_eq!((0..=4).map(|n| brauer.dim(n)).collect::<Vec<_>>(), [1, 0, 1, 0, 3]);
        let brauer1 = PrincipalModule::new(Family::Brauer(q.clone()), 1, 3).unwrap();
        assert_eq!(brauer1.dim(1), 1);
        let part = PrincipalModule::new(Family::Partition(q.clone()), 0, 5).unwrap();
        assert!((0..=5).all(|n| part.dim(n) as u64 == bell(n)));
        let star = PrincipalModule::new(Family::Star(q.clone(), q), 0, 3).unwrap();
        // Σ_t C(n,t) Bell(t) Bell(n-t)
        assert_eq!((0..=3).map(|n| star.dim(n)).collect::<Vec<_>>(), [1, 2, 6, 22]);
    }

    #[test]
    fn fb_modules_satisfy_coxeter_relations() {
        let q = Rational::new(3, 2);
        for family in [
            Family::Brauer(q.clone()),
            Family::Restricted(q.clone()),
            Family::Partition(q.clone()),
            Family::Star(q.clone(), q),
        ] {
            let m = PrincipalModule::new(family, 1, 4).unwrap().fb_module().unwrap();
            assert!(m.validate().is_empty());
        }
    }

    #[test]
    fn star_identity_acts_as_identity() {
        let (d, e) = (Rational::from_int(2), Rational::from_int(-1));
        let m = PrincipalModule::new(Family::Star(d, e), 0, 3).unwrap();
        let id = m.act(&Morphism::Star(StarMorphism::identity(3))).unwrap();
        assert_eq!(id, Matrix::identity(m.dim(3)));
        let sum = star_block(Set::range(3), Set::EMPTY, Set::singleton(1), Factor::First).unwrap();
        assert_eq!(sum.terms().count(), 4);
    }
}
