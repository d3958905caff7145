//! Symmetric and divided powers of the standard module.
//!
//! `Symⁿ𝕍` and `Divⁿ𝕍` are one-dimensional on `n`-element sets with basis
//! `t^S` and `t^{[S]}`; every relabeling acts trivially on these vectors.

use super::{tensor, FbModule, FbMorphism, TensorLayout};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::set::Set;

pub fn sym_power(k: usize, truncation: usize) -> FbModule {
    FbModule::trivial_dims(truncation, |n| usize::from(n == k))
}

pub fn div_power(k: usize, truncation: usize) -> FbModule {
    FbModule::trivial_dims(truncation, |n| usize::from(n == k))
}

/// `Sym(𝕍) = ⊕ₙ Symⁿ𝕍`, one-dimensional in every degree.
pub fn sym_algebra(truncation: usize) -> FbModule {
    FbModule::trivial_dims(truncation, |_| 1)
}

/// `avg: Symᵏ𝕍 -> Divᵏ𝕍`, `t^S ↦ t^{[S]}`.
pub fn avg_iso(k: usize, truncation: usize) -> FbMorphism {
    FbMorphism::identity(&sym_power(k, truncation))
}

/// `m(t^A ⊗ t^B)`: `Some(A ∪ B)` for disjoint labels, `None` for zero.
pub fn sym_mult(a: Set, b: Set) -> Option<Set> {
    a.is_disjoint(b).then(|| a.union(b))
}

/// `Δ(t^S)` as its `2^{|S|}` ordered decompositions `(A, S∖A)`, A in colex order.
pub fn sym_comult(s: Set) -> Vec<(Set, Set)> {
    s.subsets().into_iter().map(|a| (a, s.minus(a))).collect()
}

/// `m: Sym⊗Sym -> Sym` as a morphism of modules.
pub fn mult_map(truncation: usize) -> FbMorphism {
    let sym = sym_algebra(truncation);
    let maps = (0..=truncation)
        .map(|n| {
            let lay = TensorLayout::new(&sym, &sym, n);
            let mut out = Matrix::zeros(1, lay.dim());
            for j in 0..lay.dim() {
                out.set(0, j, Rational::one());
            }
            out
        })
        .collect();
    FbMorphism { maps }
}

/// `Δ: Sym -> Sym⊗Sym` as a morphism of modules.
pub fn comult_map(truncation: usize) -> FbMorphism {
    FbMorphism { maps: mult_map(truncation).maps.iter().map(Matrix::transpose).collect() }
}

/// `Sym⊗Sym`, exposed for callers composing `m` and `Δ`.
pub fn sym_sym(truncation: usize) -> FbModule {
    let s = sym_algebra(truncation);
    tensor(&s, &s).expect("same truncation")
}
