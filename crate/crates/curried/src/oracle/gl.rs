//! `gl(n)` with matrix units `E_ij = v_i v_j^*`.

use super::{add_to, apply, difference, ClassicalRep, Combo, LieAlgebra};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gl {
    pub n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlModule {
    Trivial,
    Standard,
    StandardSquared,
}

impl Gl {
    pub fn new(n: usize) -> Self {
        Gl { n }
    }

    fn module_dim(&self, m: GlModule) -> usize {
        match m {
            GlModule::Trivial => 1,
            GlModule::Standard => self.n,
            GlModule::StandardSquared => self.n * self.n,
        }
    }

    /// `μ(E_ij)` applied to a basis vector of `m`.
    fn act(n: usize, m: GlModule, (i, j): (usize, usize), x: usize) -> Combo<usize> {
        let mut out = Combo::new();
        let one = Rational::one();
        match m {
            GlModule::Trivial => {}
            GlModule::Standard => {
                if x == j {
                    add_to(&mut out, i, &one);
                }
            }
            GlModule::StandardSquared => {
                let (k, l) = (x / n, x % n);
                if k == j {
                    add_to(&mut out, i * n + l, &one);
                }
                if l == j {
                    add_to(&mut out, k * n + i, &one);
                }
            }
        }
        out
    }

    pub fn rep(&self, m: GlModule) -> ClassicalRep<(usize, usize), usize> {
        let n = self.n;
        let name = match m {
            GlModule::Trivial => "trivial",
            GlModule::Standard => "V",
            GlModule::StandardSquared => "V⊗V",
        };
        ClassicalRep::new(name, (0..self.module_dim(m)).collect(), move |e, x| Gl::act(n, m, *e, *x))
    }

    /// `μ(E_ij)` as matrices, indexed `i·n + j`.
    pub fn matrices(&self, m: GlModule) -> Vec<Matrix> {
        let d = self.module_dim(m);
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                let mut mat = Matrix::zeros(d, d);
                for x in 0..d {
                    for (y, c) in Gl::act(self.n, m, (i, j), x) {
                        mat.add_at(y, x, &c);
                    }
                }
                out.push(mat);
            }
        }
        out
    }
}

impl LieAlgebra for Gl {
    type Label = (usize, usize);

    fn name(&self) -> String {
        format!("gl({})", self.n)
    }

    fn basis(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|i| (0..self.n).map(move |j| (i, j))).collect()
    }

    fn bracket(&self, &(i, j): &(usize, usize), &(k, l): &(usize, usize)) -> Combo<(usize, usize)> {
        let mut out = Combo::new();
        if j == k {
            add_to(&mut out, (i, l), &Rational::one());
        }
        if i == l {
            add_to(&mut out, (k, j), &Rational::from_int(-1));
        }
        out
    }
}

/// `a(v_i ⊗ x) = Σ_j v_j ⊗ μ(E_ij) x` as a matrix on `V ⊗ M`, with basis
/// `v_j ⊗ x` at index `j·d + x`.
pub fn curry_gl(n: usize, mu: &[Matrix]) -> Result<Matrix> {
    if mu.len() != n * n {
        return Err(Error::SizeMismatch(format!("expected {} matrices for gl({n}), got {}", n * n, mu.len())));
    }
    let d = mu[0].rows();
    let mut a = Matrix::zeros(n * d, n * d);
    for i in 0..n {
        for j in 0..n {
            a.add_block(j * d, i * d, &mu[i * n + j]);
        }
    }
    Ok(a)
}

pub fn uncurry_gl(n: usize, a: &Matrix) -> Result<Vec<Matrix>> {
    if n == 0 || a.rows() % n != 0 || !a.is_square() {
        return Err(Error::SizeMismatch(format!(
            "a {}×{} map is not an endomorphism of V⊗M for n = {n}",
            a.rows(),
            a.cols()
        )));
    }
    let d = a.rows() / n;
    Ok((0..n * n).map(|ij| a.block((ij % n) * d, (ij / n) * d, d, d)).collect())
}

type Triple<K> = (usize, usize, K);

fn curried<K: Ord + Clone + 'static>(
    n: usize,
    rep: &ClassicalRep<(usize, usize), K>,
    i: usize,
    x: &K,
) -> Combo<(usize, K)> {
    let mut out = Combo::new();
    for j in 0..n {
        for (y, c) in rep.act(&(i, j), x) {
            add_to(&mut out, (j, y), &c);
        }
    }
    out
}

/// Failures of `[a₁, a₂] = τ(a₁ − a₂)` on `V ⊗ V ⊗ M`.
pub fn glid_witnesses<K: Ord + Clone + std::fmt::Debug + 'static>(
    n: usize,
    rep: &ClassicalRep<(usize, usize), K>,
) -> Vec<String> {
    let a2 = |(i, k, x): &Triple<K>| -> Combo<Triple<K>> {
        curried(n, rep, *k, x).into_iter().map(|((j, y), c)| ((*i, j, y), c)).collect()
    };
    let a1 = |(i, k, x): &Triple<K>| -> Combo<Triple<K>> {
        curried(n, rep, *i, x).into_iter().map(|((j, y), c)| ((j, *k, y), c)).collect()
    };
    let tau =
        |v: Combo<Triple<K>>| -> Combo<Triple<K>> { v.into_iter().map(|((i, k, x), c)| ((k, i, x), c)).collect() };
    let mut out = Vec::new();
    for i in 0..n {
        for k in 0..n {
            for x in &rep.inputs {
                let v: Combo<Triple<K>> = [((i, k, x.clone()), Rational::one())].into();
                let lhs = difference(&apply(&apply(&v, a2), a1), &apply(&apply(&v, a1), a2));
                let rhs = tau(difference(&apply(&v, a1), &apply(&v, a2)));
                if lhs != rhs {
                    out.push(format!("[a₁,a₂] ≠ τ(a₁−a₂) on v{} ⊗ v{} ⊗ {x:?}", i + 1, k + 1));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{jacobi_witnesses, rep_witnesses};

    #[test]
    fn matrix_units_bracket() {
        let g = Gl::new(2);
        assert_eq!(g.bracket(&(0, 0), &(0, 1)), [((0, 1), Rational::one())].into());
        for n in 1..=3 {
            assert!(jacobi_witnesses(&Gl::new(n)).is_empty());
        }
    }

    #[test]
    fn currying_standard_gives_the_swap() {
        let g = Gl::new(2);
        let a = curry_gl(2, &g.matrices(GlModule::Standard)).unwrap();
        // v_i ⊗ v_k at index i·2 + k; a swaps the factors
        assert_eq!(a, Matrix::permutation(&[0, 2, 1, 3]));
        assert!(curry_gl(2, &g.matrices(GlModule::Trivial)).unwrap().is_zero());
    }

    #[test]
    fn currying_the_square_gives_two_transpositions() {
        let n = 2;
        let g = Gl::new(n);
        let a = curry_gl(n, &g.matrices(GlModule::StandardSquared)).unwrap();
        // basis v_j ⊗ (v_k ⊗ v_l) at j·4 + k·2 + l
        let idx = |p: [usize; 3]| p[0] * 4 + p[1] * 2 + p[2];
        let mut expected = Matrix::zeros(8, 8);
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    expected.add_at(idx([k, j, l]), idx([j, k, l]), &Rational::one());
                    expected.add_at(idx([l, k, j]), idx([j, k, l]), &Rational::one());
                }
            }
        }
        assert_eq!(a, expected);
    }

    #[test]
    fn curry_and_uncurry_are_inverse() {
        let g = Gl::new(3);
        for m in [GlModule::Trivial, GlModule::Standard, GlModule::StandardSquared] {
            let mu = g.matrices(m);
            let a = curry_gl(3, &mu).unwrap();
            assert_eq!(uncurry_gl(3, &a).unwrap(), mu);
            assert_eq!(curry_gl(3, &uncurry_gl(3, &a).unwrap()).unwrap(), a);
        }
    }

    #[test]
    fn representation_iff_glid() {
        let g = Gl::new(2);
        for m in [GlModule::Trivial, GlModule::Standard, GlModule::StandardSquared] {
            let r = g.rep(m);
            assert!(rep_witnesses(&g, &r).is_empty());
            assert!(glid_witnesses(2, &r).is_empty());
        }
        let bad = g.rep(GlModule::Standard).perturbed((0, 1), 0, 0, Rational::one());
        assert!(!rep_witnesses(&g, &bad).is_empty());
        assert!(!glid_witnesses(2, &bad).is_empty());
    }
}
