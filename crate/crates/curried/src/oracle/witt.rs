//! The Witt algebra of polynomial vector fields `ξ^α ∂_i`.

use super::{
    add_to, apply, difference, mono_add, mono_sub, monomials_up_to, unit, ClassicalRep, Combo, LieAlgebra, Mono,
};
use crate::rational::Rational;

/// `ξ^α ∂_i`.
pub type WittLabel = (Mono, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witt {
    pub n: usize,
    /// Bound on `|α|` for basis labels.
    pub degree: usize,
}

impl Witt {
    pub fn new(n: usize, degree: usize) -> Self {
        Witt { n, degree }
    }

    /// Vector fields acting on `ℚ[ξ]` as derivations.
    pub fn polynomial_rep(&self, degree: usize) -> ClassicalRep<WittLabel, Mono> {
        let n = self.n;
        ClassicalRep::new(
            format!("ℚ[ξ] (degree ≤ {degree})"),
            monomials_up_to(n, degree),
            move |(a, i): &WittLabel, g: &Mono| match mono_sub(g, &unit(n, *i)) {
                Some(rest) => [(mono_add(&rest, a), Rational::from_int(g[*i] as i64))].into(),
                None => Combo::new(),
            },
        )
    }
}

impl LieAlgebra for Witt {
    type Label = WittLabel;

    fn name(&self) -> String {
        format!("witt(n={}, degree ≤ {})", self.n, self.degree)
    }

    fn basis(&self) -> Vec<WittLabel> {
        monomials_up_to(self.n, self.degree)
            .into_iter()
            .flat_map(|a| (0..self.n).map(move |i| (a.clone(), i)))
            .collect()
    }

    /// `[ξ^α ∂_i, ξ^β ∂_j] = β_i ξ^{α+β−e_i} ∂_j − α_j ξ^{α+β−e_j} ∂_i`.
    fn bracket(&self, (a, i): &WittLabel, (b, j): &WittLabel) -> Combo<WittLabel> {
        let mut out = Combo::new();
        let sum = mono_add(a, b);
        if let Some(m) = mono_sub(&sum, &unit(self.n, *i)) {
            add_to(&mut out, (m, *j), &Rational::from_int(b[*i] as i64));
        }
        if let Some(m) = mono_sub(&sum, &unit(self.n, *j)) {
            add_to(&mut out, (m, *i), &Rational::from_int(-(a[*j] as i64)));
        }
        out
    }
}

type Out = (usize, usize, Mono);

fn curried(n: usize, rep: &ClassicalRep<WittLabel, Mono>, alpha: &Mono, x: &Mono) -> Combo<(usize, Mono)> {
    let mut out = Combo::new();
    for j in 0..n {
        for (y, c) in rep.act(&(alpha.clone(), j), x) {
            add_to(&mut out, (j, y), &c);
        }
    }
    out
}

/// `Sym ⊗ Sym ⊗ M -> V ⊗ V ⊗ M` through `Δ`, the swap, `m` and `a`.
fn a_prime(n: usize, rep: &ClassicalRep<WittLabel, Mono>, v: &Combo<(Mono, Mono, Mono)>) -> Combo<Out> {
    let s1 = apply(v, |(a, b, x)| {
        (0..n)
            .filter_map(|j| {
                mono_sub(b, &unit(n, j)).map(|r| ((a.clone(), j, r, x.clone()), Rational::from_int(b[j] as i64)))
            })
            .collect::<Combo<_>>()
    });
    let s2 = apply(&s1, |(a, j, r, x)| [((*j, a.clone(), r.clone(), x.clone()), Rational::one())].into());
    let s3 = apply(&s2, |(j, a, r, x)| [((*j, mono_add(a, r), x.clone()), Rational::one())].into());
    apply(&s3, |(j, f, x)| curried(n, rep, f, x).into_iter().map(|((i, y), c)| ((*j, i, y), c)).collect())
}

/// Failures of `[a₁, a₂] = a′ − a″` on `ξ^α ⊗ ξ^β ⊗ x` with `|α|, |β| ≤ sym_bound`.
pub fn witt_curry_witnesses(n: usize, sym_bound: usize, rep: &ClassicalRep<WittLabel, Mono>) -> Vec<String> {
    let mut out = Vec::new();
    let sym = monomials_up_to(n, sym_bound);
    for alpha in &sym {
        for beta in &sym {
            for x in &rep.inputs {
                let mut a1a2 = Combo::new();
                for ((i, y), c) in curried(n, rep, beta, x) {
                    for ((j, z), d) in curried(n, rep, alpha, &y) {
                        add_to(&mut a1a2, (j, i, z), &(&c * &d));
                    }
                }
                let mut a2a1 = Combo::new();
                for ((j, y), c) in curried(n, rep, alpha, x) {
                    for ((i, z), d) in curried(n, rep, beta, &y) {
                        add_to(&mut a2a1, (j, i, z), &(&c * &d));
                    }
                }
                let lhs = difference(&a1a2, &a2a1);
                let v: Combo<(Mono, Mono, Mono)> = [((alpha.clone(), beta.clone(), x.clone()), Rational::one())].into();
                let swapped: Combo<(Mono, Mono, Mono)> =
                    [((beta.clone(), alpha.clone(), x.clone()), Rational::one())].into();
                let a_pp: Combo<Out> =
                    a_prime(n, rep, &swapped).into_iter().map(|((j, i, y), c)| ((i, j, y), c)).collect();
                let rhs = difference(&a_prime(n, rep, &v), &a_pp);
                if lhs != rhs {
                    out.push(format!("[a₁,a₂] ≠ a′−a″ on ξ^{alpha:?} ⊗ ξ^{beta:?} ⊗ ξ^{x:?}"));
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
    fn bracket_of_two_shears() {
        let w = Witt::new(2, 2);
        let expected: Combo<WittLabel> =
            [((vec![1, 0], 0), Rational::one()), ((vec![0, 1], 1), Rational::from_int(-1))].into();
        assert_eq!(w.bracket(&(vec![1, 0], 1), &(vec![0, 1], 0)), expected);
        assert!(jacobi_witnesses(&w).is_empty());
    }

    #[test]
    fn derivations_iff_curried_identity() {
        let w = Witt::new(2, 2);
        let r = w.polynomial_rep(3);
        assert!(rep_witnesses(&w, &r).is_empty());
        assert!(witt_curry_witnesses(2, 2, &r).is_empty());
        let bad = r.perturbed((vec![0, 1], 0), vec![1, 0], vec![0, 0], Rational::from_int(2));
        assert!(!rep_witnesses(&w, &bad).is_empty());
        assert!(!witt_curry_witnesses(2, 2, &bad).is_empty());
    }
}
