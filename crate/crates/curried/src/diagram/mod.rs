//! Brauer, partition and restricted partition diagrams.
//!
//! A diagram `[n] -> [m]` is a set partition of `n` source ("bottom") and
//! `m` target ("top") labels. Internally bottom label `b_i` is `i - 1` and top
//! label `t_j` is `n + j - 1`, so sorting blocks by least element puts bottom
//! labels first. Composition glues along the middle, takes the join and
//! multiplies by `δ` for every block that lives entirely in the middle.

mod enumerate;
mod factor;
mod generators;
mod star;
mod text;

pub use enumerate::{bell, double_factorial, enumerate_diagrams, hom_dim, ENUMERATION_BOUND, MAX_LABELS};
pub use factor::{t3_count, triangular_factorize};
pub use generators::{
    brauer_cap, brauer_cup, embed_fa, from_labeled, identity_on, partition_block, relabel_iota, restricted_eta,
    restricted_zeta,
};
pub use star::{star_compose, StarMorphism, StarTerm};
pub use text::{parse_diagram, parse_morphism, write_morphism};

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Brauer,
    Partition,
    Restricted,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Brauer => "brauer",
            Kind::Partition => "partition",
            Kind::Restricted => "restricted",
        }
    }

    pub fn parse(s: &str) -> Option<Kind> {
        match s {
            "brauer" => Some(Kind::Brauer),
            "partition" => Some(Kind::Partition),
            "restricted" => Some(Kind::Restricted),
            _ => None,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A single diagram in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: usize,
    m: usize,
    kind: Kind,
    blocks: Vec<Vec<u8>>,
}

impl Diagram {
    /// Canonicalizes and validates the kind invariant.
    pub fn new(kind: Kind, n: usize, m: usize, blocks: Vec<Vec<u8>>) -> Result<Self> {
        let total = n + m;
        if total > MAX_LABELS {
            return Err(Error::Bound(format!("{total} labels exceeds {MAX_LABELS}")));
        }
        let mut seen = vec![false; total];
        let mut blocks: Vec<Vec<u8>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidIndices("empty block".into()));
            }
            for &x in b {
                let x = x as usize;
                if x >= total || seen[x] {
                    return Err(Error::InvalidIndices(format!("label {x} repeated or out of range")));
                }
                seen[x] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidIndices("blocks do not cover all labels".into()));
        }
        blocks.sort();
        let d = Diagram { n, m, kind, blocks };
        if !d.satisfies_kind(kind) {
            return Err(Error::KindMismatch(format!("blocks violate the {kind} invariant")));
        }
        Ok(d)
    }

    pub(crate) fn new_unchecked(kind: Kind, n: usize, m: usize, mut blocks: Vec<Vec<u8>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        Diagram { n, m, kind, blocks }
    }

    pub fn identity(kind: Kind, n: usize) -> Self {
        let blocks = (0..n).map(|i| vec![i as u8, (n + i) as u8]).collect();
        Diagram { n, m: n, kind, blocks }
    }

    /// The bijection diagram with source `i` joined to target `images[i]` (0-based).
    pub fn permutation(kind: Kind, images: &[usize]) -> Self {
        let n = images.len();
        let blocks = images.iter().enumerate().map(|(i, &j)| vec![i as u8, (n + j) as u8]).collect();
        Self::new_unchecked(kind, n, n, blocks)
    }

    pub fn source(&self) -> usize {
        self.n
    }

    pub fn target(&self) -> usize {
        self.m
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn blocks(&self) -> &[Vec<u8>] {
        &self.blocks
    }

    pub fn is_source(&self, label: u8) -> bool {
        (label as usize) < self.n
    }

    /// Number of source and target labels in a block.
    pub fn split(&self, block: &[u8]) -> (usize, usize) {
        let s = block.iter().filter(|&&x| self.is_source(x)).count();
        (s, block.len() - s)
    }

    pub fn satisfies_kind(&self, kind: Kind) -> bool {
        match kind {
            Kind::Partition => true,
            Kind::Brauer => self.blocks.iter().all(|b| b.len() == 2),
            Kind::Restricted => self.blocks.iter().all(|b| self.split(b).0 <= 1),
        }
    }

    /// Same blocks, reinterpreted as a diagram of another kind.
    pub fn with_kind(&self, kind: Kind) -> Result<Self> {
        if !self.satisfies_kind(kind) {
            return Err(Error::KindMismatch(format!("diagram is not {kind}")));
        }
        Ok(Diagram { kind, ..self.clone() })
    }

    /// Every block meets the target and meets the source at most once.
    pub fn is_upwards(&self) -> bool {
        self.blocks.iter().all(|b| {
            let (s, t) = self.split(b);
            t >= 1 && s <= 1
        })
    }

    /// Every block meets the source and meets the target at most once.
    pub fn is_downwards(&self) -> bool {
        self.blocks.iter().all(|b| {
            let (s, t) = self.split(b);
            s >= 1 && t <= 1
        })
    }

    /// Upwards and downwards: the diagram of a bijection.
    pub fn is_bijection(&self) -> bool {
        self.is_upwards() && self.is_downwards()
    }

    /// Number of blocks meeting both source and target.
    pub fn propagating(&self) -> usize {
        self.blocks
            .iter()
            .filter(|b| {
                let (s, t) = self.split(b);
                s > 0 && t > 0
            })
            .count()
    }

    /// `self ∘ rhs` as (diagram, number of blocks closed off in the middle).
    pub fn compose_raw(&self, rhs: &Diagram) -> Result<(Diagram, usize)> {
        if rhs.m != self.n {
            return Err(Error::SizeMismatch(format!("target {} vs source {}", rhs.m, self.n)));
        }
        if rhs.kind != self.kind {
            return Err(Error::KindMismatch(format!("{} vs {}", rhs.kind, self.kind)));
        }
        let (n, mid, l) = (rhs.n, rhs.m, self.m);
        // nodes: rhs source 0..n, middle n..n+mid, self target n+mid..n+mid+l
        let total = n + mid + l;
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        let union = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(p, a), find(p, b));
            if ra != rb {
                p[ra.max(rb)] = ra.min(rb);
            }
        };
        for b in &rhs.blocks {
            for w in b.windows(2) {
                union(&mut parent, w[0] as usize, w[1] as usize);
            }
        }
        for b in &self.blocks {
            // self's source labels are the middle nodes, shifted by n
            let node = |x: u8| x as usize + n;
            for w in b.windows(2) {
                union(&mut parent, node(w[0]), node(w[1]));
            }
        }
        let mut groups: BTreeMap<usize, (Vec<u8>, bool)> = BTreeMap::new();
        for x in 0..total {
            let r = find(&mut parent, x);
            let e = groups.entry(r).or_insert((Vec::new(), false));
            if x < n {
                e.0.push(x as u8);
            } else if x >= n + mid {
                e.0.push((x - mid) as u8);
            }
            e.1 = true;
        }
        let mut loops = 0;
        let mut blocks = Vec::new();
        for (outer, _) in groups.into_values() {
            if outer.is_empty() {
                loops += 1;
            } else {
                blocks.push(outer);
            }
        }
        Ok((Diagram::new_unchecked(self.kind, n, l, blocks), loops))
    }

    /// Blocks as (source labels, target labels), both 1-based.
    pub fn labeled_blocks(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        self.blocks
            .iter()
            .map(|b| {
                let src = b.iter().filter(|&&x| self.is_source(x)).map(|&x| x as usize + 1).collect();
                let tgt = b.iter().filter(|&&x| !self.is_source(x)).map(|&x| x as usize - self.n + 1).collect();
                (src, tgt)
            })
            .collect()
    }

    /// Mirror image `[m] -> [n]`.
    pub fn flip(&self) -> Diagram {
        let (n, m) = (self.n, self.m);
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&x| {
                        let x = x as usize;
                        if x < n {
                            (m + x) as u8
                        } else {
                            (x - n) as u8
                        }
                    })
                    .collect()
            })
            .collect();
        Diagram::new_unchecked(self.kind, m, n, blocks)
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A rational combination of diagrams sharing source, target and kind.
#[derive(Clone, PartialEq, Eq)]
pub struct DiagramMorphism {
    pub n: usize,
    pub m: usize,
    pub kind: Kind,
    terms: BTreeMap<Diagram, Rational>,
}

impl DiagramMorphism {
    pub fn zero(kind: Kind, n: usize, m: usize) -> Self {
        DiagramMorphism { n, m, kind, terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: Diagram) -> Self {
        Self::scaled(d, Rational::one())
    }

    pub fn scaled(d: Diagram, c: Rational) -> Self {
        let mut out = Self::zero(d.kind, d.n, d.m);
        out.add_term(d, &c);
        out
    }

    pub fn identity(kind: Kind, n: usize) -> Self {
        Self::from_diagram(Diagram::identity(kind, n))
    }

    pub fn add_term(&mut self, d: Diagram, c: &Rational) {
        assert!(d.n == self.n && d.m == self.m && d.kind == self.kind, "term shape mismatch");
        if c.is_zero() {
            return;
        }
        let sum = self.terms.get(&d).map_or_else(|| c.clone(), |v| v + c);
        if sum.is_zero() {
            self.terms.remove(&d);
        } else {
            self.terms.insert(d, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, d: &Diagram) -> Rational {
        self.terms.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, rhs: &DiagramMorphism) -> DiagramMorphism {
        let mut out = self.clone();
        for (d, c) in rhs.terms() {
            out.add_term(d.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> DiagramMorphism {
        let mut out = Self::zero(self.kind, self.n, self.m);
        for (d, v) in self.terms() {
            out.add_term(d.clone(), &(v * c));
        }
        out
    }
}

impl fmt::Debug for DiagramMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_morphism(self))
    }
}

/// `g ∘ f` with loop parameter `δ`.
pub fn compose(g: &DiagramMorphism, f: &DiagramMorphism, delta: &Rational) -> Result<DiagramMorphism> {
    if f.m != g.n {
        return Err(Error::SizeMismatch(format!("target {} vs source {}", f.m, g.n)));
    }
    if f.kind != g.kind {
        return Err(Error::KindMismatch(format!("{} vs {}", f.kind, g.kind)));
    }
    let mut out = DiagramMorphism::zero(f.kind, f.n, g.m);
    for (dg, cg) in g.terms() {
        for (df, cf) in f.terms() {
            let (d, loops) = dg.compose_raw(df)?;
            out.add_term(d, &(&(cg * cf) * &delta.pow(loops as u32)));
        }
    }
    Ok(out)
}

/// Composition of single diagrams.
pub fn compose_diagrams(g: &Diagram, f: &Diagram, delta: &Rational) -> Result<DiagramMorphism> {
    let (d, loops) = g.compose_raw(f)?;
    Ok(DiagramMorphism::scaled(d, delta.pow(loops as u32)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(kind: Kind, n: usize, m: usize, blocks: &[&[u8]]) -> Diagram {
        Diagram::new(kind, n, m, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn cap_after_cup_is_a_loop() {
        let cup = d(Kind::Brauer, 0, 2, &[&[0, 1]]);
        let cap = d(Kind::Brauer, 2, 0, &[&[0, 1]]);
        let delta = Rational::new(3, 2);
        let r = compose(&DiagramMorphism::from_diagram(cap), &DiagramMorphism::from_diagram(cup), &delta).unwrap();
        assert_eq!(r, DiagramMorphism::scaled(Diagram::identity(Kind::Brauer, 0), delta));
    }

    #[test]
    fn identity_is_neutral() {
        let x = d(Kind::Partition, 2, 3, &[&[0, 2, 3], &[1], &[4]]);
        let r = compose_diagrams(&x, &Diagram::identity(Kind::Partition, 2), &Rational::from_int(7)).unwrap();
        assert_eq!(r, DiagramMorphism::from_diagram(x.clone()));
        let l = compose_diagrams(&Diagram::identity(Kind::Partition, 3), &x, &Rational::from_int(7)).unwrap();
        assert_eq!(l, DiagramMorphism::from_diagram(x));
    }

    #[test]
    fn kind_invariants_are_enforced() {
        assert!(Diagram::new(Kind::Brauer, 1, 2, vec![vec![0, 1, 2]]).is_err());
        assert!(Diagram::new(Kind::Restricted, 2, 1, vec![vec![0, 1, 2]]).is_err());
        assert!(Diagram::new(Kind::Partition, 1, 1, vec![vec![0]]).is_err());
    }

    #[test]
    fn flip_is_an_involution() {
        let x = d(Kind::Partition, 2, 3, &[&[0, 2, 3], &[1], &[4]]);
        assert_eq!(x.flip().flip(), x);
        assert_eq!(x.flip().source(), 3);
    }

    mod proptests {
        use super::*;
        use crate::diagram::enumerate_diagrams;
        use proptest::prelude::*;

        fn pick(n: usize, m: usize, kind: Kind, i: prop::sample::Index) -> Diagram {
            let ds = enumerate_diagrams(n, m, kind).unwrap();
            ds[i.index(ds.len())].clone()
        }

        fn kinds() -> impl Strategy<Value = Kind> {
            prop_oneof![Just(Kind::Brauer), Just(Kind::Partition), Just(Kind::Restricted)]
        }

        fn deltas() -> impl Strategy<Value = Rational> {
            prop_oneof![Just(Rational::zero()), Just(Rational::one()), Just(Rational::new(3, 2))]
        }

        proptest! {
            #[test]
            fn composition_is_associative(
                kind in kinds(), delta in deltas(),
                sizes in (0usize..3, 0usize..3, 0usize..3, 0usize..3),
                picks in (any::<prop::sample::Index>(), any::<prop::sample::Index>(), any::<prop::sample::Index>()),
            ) {
                let (a, b, c, d) = sizes;
                let parity_ok = kind != Kind::Brauer || ((a + b) % 2 == 0 && (b + c) % 2 == 0 && (c + d) % 2 == 0);
                prop_assume!(parity_ok);
                let f = DiagramMorphism::from_diagram(pick(a, b, kind, picks.0));
                let g = DiagramMorphism::from_diagram(pick(b, c, kind, picks.1));
                let h = DiagramMorphism::from_diagram(pick(c, d, kind, picks.2));
                let left = compose(&h, &compose(&g, &f, &delta).unwrap(), &delta).unwrap();
                let right = compose(&compose(&h, &g, &delta).unwrap(), &f, &delta).unwrap();
                prop_assert_eq!(left, right);
            }

            #[test]
            fn composites_stay_in_kind(
                kind in kinds(),
                sizes in (0usize..4, 0usize..4, 0usize..4),
                picks in (any::<prop::sample::Index>(), any::<prop::sample::Index>()),
            ) {
                let (a, b, c) = sizes;
                prop_assume!(kind != Kind::Brauer || ((a + b) % 2 == 0 && (b + c) % 2 == 0));
                let (d, _) = pick(b, c, kind, picks.1).compose_raw(&pick(a, b, kind, picks.0)).unwrap();
                prop_assert!(d.satisfies_kind(kind));
                prop_assert_eq!(d.kind(), kind);
            }
        }
    }
}
