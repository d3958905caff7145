//! Truncated FB-modules (linear species) over the rationals.
//!
//! A module stores, for each degree `n <= N`, a dimension and the matrices of
//! the adjacent transpositions `s_1..s_{n-1}`. A value on an arbitrary label
//! set `T` lives in the degree-`|T|` space via the order-preserving
//! identification `T ≅ [|T|]`; bijections between label sets act through
//! [`FbModule::relabel`].

mod specht;
mod sym;
mod tensor;
mod text;

pub use specht::{hook_length_dim, partitions_of, specht, standard_tableaux, Partition};
pub use sym::{avg_iso, comult_map, div_power, mult_map, sym_algebra, sym_comult, sym_mult, sym_power, sym_sym};
pub use tensor::{
    associator, associator_inverse, braiding, extend, lift, swap_outer, tensor, tensor_maps, TensorLayout,
};
pub(crate) use text::read_module;
pub use text::{parse_module, write_module, MAX_TRUNCATION};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::perm::Permutation;
use crate::rational::Rational;
use crate::set::Set;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degree {
    pub dim: usize,
    /// `gens[i]` is the action of the swap of labels `i+1` and `i+2`.
    pub gens: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FbModule {
    degrees: Vec<Degree>,
}

/// A violated Coxeter relation or malformed shape.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    Shape { degree: usize, detail: String },
    Order { degree: usize, i: usize },
    Braid { degree: usize, i: usize },
    FarCommute { degree: usize, i: usize, j: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        // generator indices are reported 1-based, as s_1..s_{n-1}
        match self {
            Violation::Shape { degree, detail } => write!(f, "degree {degree}: shape: {detail}"),
            Violation::Order { degree, i } => write!(f, "degree {degree}: s{}^2 != id", i + 1),
            Violation::Braid { degree, i } => write!(f, "degree {degree}: braid fails for s{},s{}", i + 1, i + 2),
            Violation::FarCommute { degree, i, j } => {
                write!(f, "degree {degree}: s{} and s{} do not commute", i + 1, j + 1)
            }
        }
    }
}

impl FbModule {
    /// Builds a module without checking Coxeter relations; see [`FbModule::validate`].
    pub fn from_degrees(degrees: Vec<Degree>) -> Self {
        assert!(!degrees.is_empty(), "a module has at least degree 0");
        FbModule { degrees }
    }

    pub fn zero(truncation: usize) -> Self {
        Self::trivial_dims(truncation, |_| 0)
    }

    /// The unit: one-dimensional in degree 0.
    pub fn unit(truncation: usize) -> Self {
        Self::trivial_dims(truncation, |n| usize::from(n == 0))
    }

    /// The standard module: one-dimensional in degree 1.
    pub fn standard(truncation: usize) -> Self {
        Self::trivial_dims(truncation, |n| usize::from(n == 1))
    }

    /// Trivial symmetric-group actions with the given dimensions.
    pub fn trivial_dims(truncation: usize, dim: impl Fn(usize) -> usize) -> Self {
        let degrees = (0..=truncation)
            .map(|n| {
                let d = dim(n);
                Degree { dim: d, gens: vec![Matrix::identity(d); n.saturating_sub(1)] }
            })
            .collect();
        FbModule { degrees }
    }

    /// Module whose degree-`n` basis is a finite set permuted by `S_n`.
    /// `act(n, i, b)` returns the image of basis element `b` under `s_{i+1}`.
    pub fn from_basis_action(
        truncation: usize,
        dim: impl Fn(usize) -> usize,
        act: impl Fn(usize, usize, usize) -> (usize, Rational),
    ) -> Self {
        let degrees = (0..=truncation)
            .map(|n| {
                let d = dim(n);
                let gens = (0..n.saturating_sub(1))
                    .map(|i| {
                        let mut m = Matrix::zeros(d, d);
                        for b in 0..d {
                            let (c, coef) = act(n, i, b);
                            m.add_at(c, b, &coef);
                        }
                        m
                    })
                    .collect();
                Degree { dim: d, gens }
            })
            .collect();
        FbModule { degrees }
    }

    pub fn truncation(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.degrees.get(n).map_or(0, |d| d.dim)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim).collect()
    }

    pub fn degree(&self, n: usize) -> &Degree {
        &self.degrees[n]
    }

    pub fn degrees(&self) -> &[Degree] {
        &self.degrees
    }

    pub fn gen(&self, n: usize, i: usize) -> &Matrix {
        &self.degrees[n].gens[i]
    }

    /// Same data cut down (or zero-padded) to a new truncation.
    pub fn truncate(&self, truncation: usize) -> Self {
        let degrees = (0..=truncation)
            .map(|n| {
                self.degrees
                    .get(n)
                    .cloned()
                    .unwrap_or(Degree { dim: 0, gens: vec![Matrix::zeros(0, 0); n.saturating_sub(1)] })
            })
            .collect();
        FbModule { degrees }
    }

    /// Every violated relation; empty iff the data is a valid module.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (n, deg) in self.degrees.iter().enumerate() {
            if deg.gens.len() != n.saturating_sub(1) {
                out.push(Violation::Shape {
                    degree: n,
                    detail: format!("expected {} generators, found {}", n.saturating_sub(1), deg.gens.len()),
                });
                continue;
            }
            if let Some(i) = deg.gens.iter().position(|g| g.rows() != deg.dim || g.cols() != deg.dim) {
                out.push(Violation::Shape { degree: n, detail: format!("generator s{} is not {0}x{0}", i + 1) });
                continue;
            }
            let g = &deg.gens;
            for i in 0..g.len() {
                if !g[i].mul(&g[i]).is_identity() {
                    out.push(Violation::Order { degree: n, i });
                }
                if i + 1 < g.len() && g[i].mul(&g[i + 1]).mul(&g[i]) != g[i + 1].mul(&g[i]).mul(&g[i + 1]) {
                    out.push(Violation::Braid { degree: n, i });
                }
                for j in i + 2..g.len() {
                    if g[i].mul(&g[j]) != g[j].mul(&g[i]) {
                        out.push(Violation::FarCommute { degree: n, i, j });
                    }
                }
            }
        }
        out
    }

    /// Matrix of `π_*` on the degree-`n` space, `n = π.len()`.
    pub fn act(&self, p: &Permutation) -> Matrix {
        let n = p.len();
        let d = self.dim(n);
        let mut acc = Matrix::identity(d);
        if d == 0 {
            return acc;
        }
        for &i in p.reduced_word().iter().rev() {
            acc = self.gen(n, i).mul(&acc);
        }
        acc
    }

    /// The map `M(src) -> M(dst)` induced by a bijection `f`, in the
    /// order-preserving bases of both sides.
    pub fn relabel(&self, src: Set, dst: Set, f: impl Fn(usize) -> usize) -> Matrix {
        self.act(&Permutation::induced(src, dst, f))
    }

    pub fn direct_sum(&self, other: &FbModule) -> Result<FbModule> {
        if self.truncation() != other.truncation() {
            return Err(Error::TruncationMismatch(self.truncation(), other.truncation()));
        }
        let degrees = self
            .degrees
            .iter()
            .zip(&other.degrees)
            .map(|(a, b)| {
                let d = a.dim + b.dim;
                let gens = a
                    .gens
                    .iter()
                    .zip(&b.gens)
                    .map(|(x, y)| {
                        let mut m = Matrix::zeros(d, d);
                        m.add_block(0, 0, x);
                        m.add_block(a.dim, a.dim, y);
                        m
                    })
                    .collect();
                Degree { dim: d, gens }
            })
            .collect();
        Ok(FbModule { degrees })
    }
}

/// A per-degree family of matrices `M_n -> M'_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FbMorphism {
    pub maps: Vec<Matrix>,
}

impl FbMorphism {
    pub fn identity(m: &FbModule) -> Self {
        FbMorphism { maps: m.dims().into_iter().map(Matrix::identity).collect() }
    }

    pub fn zero(src: &FbModule, dst: &FbModule) -> Self {
        FbMorphism { maps: (0..=src.truncation()).map(|n| Matrix::zeros(dst.dim(n), src.dim(n))).collect() }
    }

    pub fn scalar(m: &FbModule, c: &Rational) -> Self {
        FbMorphism { maps: m.dims().into_iter().map(|d| Matrix::scalar(d, c)).collect() }
    }

    pub fn truncation(&self) -> usize {
        self.maps.len() - 1
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &FbMorphism) -> FbMorphism {
        FbMorphism { maps: self.maps.iter().zip(&rhs.maps).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, rhs: &FbMorphism) -> FbMorphism {
        FbMorphism { maps: self.maps.iter().zip(&rhs.maps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, rhs: &FbMorphism) -> FbMorphism {
        FbMorphism { maps: self.maps.iter().zip(&rhs.maps).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Rational) -> FbMorphism {
        FbMorphism { maps: self.maps.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    /// First degree where the map fails to commute with a generator.
    pub fn equivariance_failure(&self, src: &FbModule, dst: &FbModule) -> Option<usize> {
        (0..self.maps.len()).find(|&n| {
            let f = &self.maps[n];
            if f.rows() != dst.dim(n) || f.cols() != src.dim(n) {
                return true;
            }
            (0..n.saturating_sub(1)).any(|i| f.mul(src.gen(n, i)) != dst.gen(n, i).mul(f))
        })
    }

    pub fn is_equivariant(&self, src: &FbModule, dst: &FbModule) -> bool {
        self.equivariance_failure(src, dst).is_none()
    }

    /// Projection onto equivariant maps: average `g f g^{-1}` over each symmetric group.
    pub fn symmetrize(&self, src: &FbModule, dst: &FbModule) -> FbMorphism {
        let maps = self
            .maps
            .iter()
            .enumerate()
            .map(|(n, f)| {
                let perms = Permutation::all(n);
                let mut acc = Matrix::zeros(f.rows(), f.cols());
                for p in &perms {
                    let g = dst.act(p);
                    let ginv = src.act(&p.inverse());
                    acc = acc.add(&g.mul(f).mul(&ginv));
                }
                acc.scale(&Rational::new(1, perms.len() as i64))
            })
            .collect();
        FbMorphism { maps }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_and_standard_are_valid() {
        assert!(FbModule::unit(4).validate().is_empty());
        assert!(FbModule::standard(4).validate().is_empty());
    }

    #[test]
    fn infinite_order_generator_is_reported() {
        let mut m = FbModule::zero(2);
        m.degrees[2] = Degree { dim: 2, gens: vec![Matrix::from_int_rows(&[&[1, 1], &[0, 1]])] };
        assert_eq!(m.validate(), vec![Violation::Order { degree: 2, i: 0 }]);
    }

    #[test]
    fn act_is_a_homomorphism() {
        let m = specht(&Partition::new(vec![2, 1]), 3);
        for p in Permutation::all(3) {
            for q in Permutation::all(3) {
                assert_eq!(m.act(&p.compose(&q)), m.act(&p).mul(&m.act(&q)));
            }
        }
    }
}
