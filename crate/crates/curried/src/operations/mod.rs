//! Natural families of maps `φ^S_{x̄,ȳ}: M(S∖ȳ) -> M(S∖x̄)`.
//!
//! An operation is stored by canonical-frame matrices keyed by a [`Slot`]
//! `(m, n, k, p)`: on `S = [p+m+n]` with `x̄ = (p+1..p+m)` and
//! `ȳ = (p+m+1..p+m+n)`, the slot holds the matrix `M([p+m]) -> M([p+n])` of
//! `φ^{S⨿K}_{x̄⨿K, ȳ⨿K}` for a `k`-element set `K`. Layers `k > 0` carry the
//! non-simple part and exist only for symmetric operations. Every other value
//! is obtained by naturality, so one matrix per frame suffices for all
//! orderings of `x̄` and `ȳ`. Missing slots are zero.
//!
//! The truncation bounds the ambient set: slot `(m, n, k, p)` is stored only
//! when `p + m + n + k <= N`.

mod commute;
mod maps;
mod text;

pub use commute::{commute_check, commute_failures, commute_witness, skew_commute_check, Frame};
pub use maps::{op_from_map, op_to_map, sym_comult_between, sym_mult_between, SymSide};
pub use text::{parse_operation, write_operation};
pub(crate) use text::{read_operation, write_operation_named};

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::perm::Permutation;
use crate::rational::Rational;
use crate::set::Set;
use crate::species::FbModule;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Symmetric,
    Skew,
    Plain,
}

impl Symmetry {
    pub fn name(self) -> &'static str {
        match self {
            Symmetry::Symmetric => "symmetric",
            Symmetry::Skew => "skew",
            Symmetry::Plain => "plain",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Symmetry::Symmetric, Symmetry::Skew, Symmetry::Plain].into_iter().find(|k| k.name() == s)
    }

    /// Factor picked up when two entries of `x̄` or of `ȳ` are swapped.
    fn swap_sign(self) -> Rational {
        match self {
            Symmetry::Skew => Rational::from_int(-1),
            _ => Rational::one(),
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub p: usize,
}

impl Slot {
    pub fn new(m: usize, n: usize, k: usize, p: usize) -> Self {
        Slot { m, n, k, p }
    }

    pub fn ambient(self) -> usize {
        self.p + self.m + self.n + self.k
    }

    pub fn source_degree(self) -> usize {
        self.p + self.m
    }

    pub fn target_degree(self) -> usize {
        self.p + self.n
    }

    /// `(S, x̄, ȳ)` of the canonical frame, without the layer labels.
    pub fn frame(self) -> (Set, Set, Set) {
        let (p, m, n) = (self.p, self.m, self.n);
        (Set::range(p + m + n), Set::interval(p + 1, p + m), Set::interval(p + m + 1, p + m + n))
    }

    /// Every slot of arity `(m, n)` and layer `k` within the truncation.
    pub fn all(m: usize, n: usize, k: usize, truncation: usize) -> impl Iterator<Item = Slot> {
        let top = truncation.checked_sub(m + n + k);
        (0..top.map_or(0, |t| t + 1)).map(move |p| Slot { m, n, k, p })
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} n={} k={} p={}", self.m, self.n, self.k, self.p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operation {
    truncation: usize,
    symmetry: Symmetry,
    blocks: BTreeMap<Slot, Matrix>,
}

impl Operation {
    pub fn new(truncation: usize, symmetry: Symmetry) -> Self {
        Operation { truncation, symmetry, blocks: BTreeMap::new() }
    }

    /// Builds an operation by filling every listed slot.
    pub fn tabulate(
        truncation: usize,
        symmetry: Symmetry,
        slots: impl IntoIterator<Item = Slot>,
        mut f: impl FnMut(Slot) -> Result<Matrix>,
    ) -> Result<Self> {
        let mut op = Self::new(truncation, symmetry);
        for s in slots {
            let m = f(s)?;
            op.insert(s, m)?;
        }
        Ok(op)
    }

    /// The identity `(0,0)`-operation.
    pub fn identity(module: &FbModule, truncation: usize) -> Result<Self> {
        Self::scalar(module, truncation, &Rational::one())
    }

    /// `c·id` as a `(0,0)`-operation.
    pub fn scalar(module: &FbModule, truncation: usize, c: &Rational) -> Result<Self> {
        Self::tabulate(truncation, Symmetry::Symmetric, Slot::all(0, 0, 0, truncation), |s| {
            Ok(Matrix::scalar(module.dim(s.p), c))
        })
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn with_symmetry(mut self, symmetry: Symmetry) -> Self {
        self.symmetry = symmetry;
        self
    }

    /// Stores a canonical matrix; zero matrices are dropped.
    pub fn insert(&mut self, slot: Slot, m: Matrix) -> Result<()> {
        if slot.ambient() > self.truncation {
            return Err(Error::OutOfTruncation(slot.ambient(), self.truncation));
        }
        if slot.k > 0 && self.symmetry != Symmetry::Symmetric {
            return Err(Error::KindMismatch("only symmetric operations have non-simple layers".into()));
        }
        if m.is_zero() {
            self.blocks.remove(&slot);
        } else {
            self.blocks.insert(slot, m);
        }
        Ok(())
    }

    pub fn get(&self, slot: Slot) -> Option<&Matrix> {
        self.blocks.get(&slot)
    }

    pub fn blocks(&self) -> impl Iterator<Item = (Slot, &Matrix)> {
        self.blocks.iter().map(|(s, m)| (*s, m))
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_simple(&self) -> bool {
        self.blocks.keys().all(|s| s.k == 0)
    }

    /// Whether any slot of this arity and layer is nonzero.
    pub fn has(&self, m: usize, n: usize, k: usize) -> bool {
        self.blocks.keys().any(|s| (s.m, s.n, s.k) == (m, n, k))
    }

    /// Stored matrix, or the zero matrix of the right shape.
    pub fn canonical(&self, module: &FbModule, slot: Slot) -> Matrix {
        self.blocks
            .get(&slot)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(module.dim(slot.target_degree()), module.dim(slot.source_degree())))
    }

    /// Keeps only the slots satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(Slot) -> bool) -> Operation {
        let blocks = self.blocks.iter().filter(|(s, _)| keep(**s)).map(|(s, m)| (*s, m.clone())).collect();
        Operation { truncation: self.truncation, symmetry: self.symmetry, blocks }
    }

    /// Drops the slots above a smaller truncation.
    pub fn truncate(&self, truncation: usize) -> Operation {
        let truncation = truncation.min(self.truncation);
        Operation { truncation, ..self.filter(|s| s.ambient() <= truncation) }
    }

    /// Pointwise `self + c·rhs`.
    pub fn combine(&self, rhs: &Operation, c: &Rational) -> Result<Operation> {
        if self.truncation != rhs.truncation {
            return Err(Error::TruncationMismatch(self.truncation, rhs.truncation));
        }
        let symmetry = if self.symmetry == rhs.symmetry { self.symmetry } else { Symmetry::Plain };
        let mut out = Operation { truncation: self.truncation, symmetry, blocks: self.blocks.clone() };
        for (s, m) in &rhs.blocks {
            let sum = match out.blocks.get(s) {
                Some(a) if a.rows() == m.rows() && a.cols() == m.cols() => a.combine(m, c),
                Some(_) => return Err(Error::SizeMismatch(format!("slot {s} has two shapes"))),
                None => m.scale(c),
            };
            out.insert(*s, sum)?;
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Operation) -> Result<Operation> {
        self.combine(rhs, &Rational::one())
    }

    pub fn sub(&self, rhs: &Operation) -> Result<Operation> {
        self.combine(rhs, &Rational::from_int(-1))
    }

    pub fn scale(&self, c: &Rational) -> Operation {
        let mut out = Operation::new(self.truncation, self.symmetry);
        for (s, m) in &self.blocks {
            out.insert(*s, m.scale(c)).expect("slot already fits");
        }
        out
    }

    /// `φ^S_{x̄,ȳ}` as a matrix `M(S∖ȳ) -> M(S∖x̄)` in order-preserving bases.
    pub fn eval(&self, module: &FbModule, s: Set, x: &[usize], y: &[usize]) -> Result<Matrix> {
        let xs = distinct(x, s, "x̄")?;
        let ys = distinct(y, s, "ȳ")?;
        if s.len() > self.truncation {
            return Err(Error::OutOfTruncation(s.len(), self.truncation));
        }
        if s.len() > module.truncation() {
            return Err(Error::TruncationMismatch(s.len(), module.truncation()));
        }
        let overlap = xs.inter(ys);
        if !overlap.is_empty() && self.symmetry != Symmetry::Symmetric {
            return Err(Error::KindMismatch("overlapping x̄ and ȳ need a symmetric operation".into()));
        }
        let x: Vec<usize> = x.iter().copied().filter(|e| !overlap.contains(*e)).collect();
        let y: Vec<usize> = y.iter().copied().filter(|e| !overlap.contains(*e)).collect();
        let t = s.minus(overlap);
        let rest = t.minus(xs).minus(ys);
        let slot = Slot::new(x.len(), y.len(), overlap.len(), rest.len());
        let Some(c) = self.blocks.get(&slot) else {
            return Ok(Matrix::zeros(module.dim(t.len() - x.len()), module.dim(t.len() - y.len())));
        };
        let src = to_frame(rest, &x);
        let dst = to_frame(rest, &y);
        Ok(module.act(&dst.inverse()).mul(c).mul(&module.act(&src)))
    }

    /// [`Operation::eval`] with increasing tuples.
    pub fn eval_sets(&self, module: &FbModule, s: Set, a: Set, b: Set) -> Result<Matrix> {
        self.eval(module, s, &a.to_vec(), &b.to_vec())
    }

    /// Slots whose matrix has the wrong shape or fails to commute with the
    /// relabelings of the untouched labels.
    pub fn naturality_failures(&self, module: &FbModule) -> Vec<Slot> {
        self.blocks
            .iter()
            .filter(|(s, c)| {
                let (src, dst) = (s.source_degree(), s.target_degree());
                if dst > module.truncation() || src > module.truncation() {
                    return true;
                }
                if c.rows() != module.dim(dst) || c.cols() != module.dim(src) {
                    return true;
                }
                (0..s.p.saturating_sub(1)).any(|i| module.gen(dst, i).mul(c) != c.mul(module.gen(src, i)))
            })
            .map(|(s, _)| *s)
            .collect()
    }

    /// Slots violating the declared behaviour under reordering `x̄` or `ȳ`.
    pub fn symmetry_failures(&self, module: &FbModule) -> Vec<Slot> {
        if self.symmetry == Symmetry::Plain {
            return Vec::new();
        }
        let sign = self.symmetry.swap_sign();
        self.blocks
            .iter()
            .filter(|(s, c)| {
                let signed = c.scale(&sign);
                let (src, dst) = (s.source_degree(), s.target_degree());
                (0..s.m.saturating_sub(1)).any(|i| c.mul(module.gen(src, s.p + i)) != signed)
                    || (0..s.n.saturating_sub(1)).any(|j| module.gen(dst, s.p + j).mul(c) != signed)
            })
            .map(|(s, _)| *s)
            .collect()
    }

    /// The simple operations `φ[k]`, each with truncation `N - k`.
    pub fn expand(&self) -> Vec<Operation> {
        let top = self.blocks.keys().map(|s| s.k).max().unwrap_or(0);
        (0..=top.min(self.truncation))
            .map(|k| {
                let mut layer = Operation::new(self.truncation - k, self.symmetry);
                for (s, m) in self.blocks.iter().filter(|(s, _)| s.k == k) {
                    layer.blocks.insert(Slot { k: 0, ..*s }, m.clone());
                }
                layer
            })
            .collect()
    }

    /// Reassembles `φ` from `φ[0], φ[1], ...`; layers past the truncation are cut.
    pub fn contract(layers: &[Operation], truncation: usize) -> Result<Operation> {
        let mut out = Operation::new(truncation, Symmetry::Symmetric);
        for (k, layer) in layers.iter().enumerate() {
            if !layer.is_simple() {
                return Err(Error::KindMismatch(format!("layer {k} is not simple")));
            }
            if k > 0 && !layer.is_zero() && layer.symmetry != Symmetry::Symmetric {
                return Err(Error::NotSymmetric);
            }
            if k == 0 {
                out.symmetry = layer.symmetry;
            }
            for (s, m) in &layer.blocks {
                let slot = Slot { k, ..*s };
                if slot.ambient() <= truncation {
                    out.blocks.insert(slot, m.clone());
                }
            }
        }
        Ok(out)
    }
}

fn distinct(t: &[usize], s: Set, what: &str) -> Result<Set> {
    let set = Set::from_labels(t.iter().copied());
    if set.len() != t.len() || !set.is_subset(s) {
        return Err(Error::InvalidIndices(format!("{what} = {t:?} must be distinct labels of {s}")));
    }
    Ok(set)
}

/// The bijection `rest ∪ tail -> [p + |tail|]` sending `rest` to `1..p` in
/// order and `tail[i]` to `p + 1 + i`.
fn to_frame(rest: Set, tail: &[usize]) -> Permutation {
    let src = rest.union(Set::from_labels(tail.iter().copied()));
    let p = rest.len();
    Permutation::induced(src, Set::range(src.len()), |e| {
        if rest.contains(e) {
            rest.rank(e) + 1
        } else {
            p + 1 + tail.iter().position(|&t| t == e).expect("label in tail")
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::species::{specht, Partition};

    /// `α^S_{i,j} = (ι_{i,j})_*`, the relabeling `S∖j -> S∖i` sending `i` to `j`.
    fn relabeling_op(module: &FbModule, n: usize) -> Operation {
        Operation::tabulate(n, Symmetry::Symmetric, Slot::all(1, 1, 0, n), |s| {
            let (full, x, y) = s.frame();
            let (i, j) = (x.nth(0), y.nth(0));
            Ok(module.relabel(full.without(j), full.without(i), |e| if e == i { j } else { e }))
        })
        .unwrap()
    }

    #[test]
    fn identity_evaluates_to_identity() {
        let m = specht(&Partition::new(vec![2, 1]), 4);
        let id = Operation::identity(&m, 4).unwrap();
        let s = Set::from_labels([2, 5, 7]);
        assert_eq!(id.eval(&m, s, &[], &[]).unwrap(), Matrix::identity(2));
        assert!(id.naturality_failures(&m).is_empty());
    }

    #[test]
    fn relabeling_op_evaluates_to_relabelings() {
        let m = specht(&Partition::new(vec![2, 1]), 4);
        let alpha = relabeling_op(&m, 4);
        assert!(alpha.naturality_failures(&m).is_empty());
        assert!(alpha.symmetry_failures(&m).is_empty());
        let s = Set::from_labels([1, 3, 4, 6]);
        for (i, j) in [(1, 6), (6, 1), (3, 4)] {
            let expect = m.relabel(s.without(j), s.without(i), |e| if e == i { j } else { e });
            assert_eq!(alpha.eval(&m, s, &[i], &[j]).unwrap(), expect);
        }
    }

    #[test]
    fn skew_flag_negates_under_reordering() {
        // sign species: one-dimensional, every swap acts by -1
        let sgn = FbModule::from_basis_action(3, |_| 1, |_, _, b| (b, Rational::from_int(-1)));
        let mut op = Operation::new(3, Symmetry::Skew);
        op.insert(Slot::new(0, 2, 0, 0), Matrix::identity(1)).unwrap();
        assert!(op.symmetry_failures(&sgn).is_empty());
        let s = Set::from_labels([3, 5]);
        let a = op.eval(&sgn, s, &[], &[3, 5]).unwrap();
        let b = op.eval(&sgn, s, &[], &[5, 3]).unwrap();
        assert_eq!(a, Matrix::identity(1));
        assert_eq!(b, a.neg());
        // on the trivial species the same block is symmetric, not skew
        let triv = FbModule::trivial_dims(3, |_| 1);
        assert_eq!(op.symmetry_failures(&triv), vec![Slot::new(0, 2, 0, 0)]);
    }

    #[test]
    fn broken_naturality_is_detected() {
        let m = specht(&Partition::new(vec![2, 1]), 4);
        let mut alpha = relabeling_op(&m, 4);
        let slot = Slot::new(1, 1, 0, 2);
        let mut c = alpha.get(slot).unwrap().clone();
        c.add_at(0, 0, &Rational::one());
        alpha.insert(slot, c).unwrap();
        assert_eq!(alpha.naturality_failures(&m), vec![slot]);
    }

    #[test]
    fn non_simple_layers_need_symmetry() {
        let m = FbModule::unit(2);
        let mut op = Operation::new(2, Symmetry::Plain);
        assert!(op.insert(Slot::new(0, 0, 1, 0), Matrix::identity(1)).is_err());
        assert!(op.insert(Slot::new(0, 0, 0, 3), Matrix::identity(0)).is_err());
        assert!(op.eval(&m, Set::range(1), &[1], &[1]).is_err());
    }

    #[test]
    fn overlapping_labels_read_the_right_layer() {
        let m = FbModule::trivial_dims(4, |_| 1);
        let mut op = Operation::new(4, Symmetry::Symmetric);
        op.insert(Slot::new(1, 0, 2, 1), Matrix::scalar(1, &Rational::from_int(7))).unwrap();
        let s = Set::range(4);
        // A = {1,2,3}, B = {2,3}: overlap of size 2, rest {4}
        assert_eq!(
            op.eval_sets(&m, s, Set::from_labels([1, 2, 3]), Set::from_labels([2, 3])).unwrap().get(0, 0),
            Rational::from_int(7)
        );
        assert!(op.eval_sets(&m, s, Set::from_labels([1, 2]), Set::from_labels([2])).unwrap().is_zero());
    }

    mod proptests {
        use super::*;
        use proptest::prelude::*;

        fn arb_symmetric() -> impl Strategy<Value = Operation> {
            // trivial one-dimensional species, so every scalar family is natural and symmetric
            proptest::collection::vec(((0usize..3, 0usize..3, 0usize..3, 0usize..3), -3i64..4), 0..10).prop_map(
                |entries| {
                    let mut op = Operation::new(4, Symmetry::Symmetric);
                    for ((m, n, k, p), c) in entries {
                        let s = Slot::new(m, n, k, p);
                        if s.ambient() <= 4 {
                            op.insert(s, Matrix::scalar(1, &Rational::from_int(c))).unwrap();
                        }
                    }
                    op
                },
            )
        }

        proptest! {
            #[test]
            fn contract_inverts_expand(op in arb_symmetric()) {
                prop_assert_eq!(Operation::contract(&op.expand(), 4).unwrap(), op);
            }

            #[test]
            fn eval_is_natural_in_the_ambient_set(op in arb_symmetric(), shift in 1usize..5) {
                let m = FbModule::trivial_dims(4, |_| 1);
                for (slot, c) in op.blocks() {
                    let (full, x, y) = slot.frame();
                    let k = Set::interval(full.len() + 1, full.len() + slot.k);
                    let moved = |t: Set| Set::from_labels(t.iter().map(|e| e * 2 + shift));
                    let got = op.eval_sets(&m, moved(full.union(k)), moved(x.union(k)), moved(y.union(k))).unwrap();
                    prop_assert_eq!(&got, c);
                }
            }
        }
    }
}
