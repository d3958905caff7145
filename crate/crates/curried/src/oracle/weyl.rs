//! The Weyl Lie algebra on `V ⊕ V*`, with basis the normally ordered
//! monomials `ξ^α η^σ` and `[η_i, ξ_j] = δ_ij`.

use super::{
    add_to, apply, below, binomial, degree, difference, factorial, mono_add, mono_sub, monomials_up_to, ClassicalRep,
    Combo, LieAlgebra, Mono,
};
use crate::rational::Rational;

/// `ξ^α η^σ`.
pub type WeylLabel = (Mono, Mono);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Weyl {
    pub n: usize,
    /// Bound on `|α| + |σ|` for basis labels.
    pub degree: usize,
}

/// `[ξ^α η^σ, ξ^β η^τ] = Σ_ε (C(β,ε)C(σ,ε) − C(α,ε)C(τ,ε)) ε! ξ^{α+β−ε} η^{σ+τ−ε}`.
pub fn weyl_commutator(alpha: &[u8], sigma: &[u8], beta: &[u8], tau: &[u8]) -> Combo<WeylLabel> {
    let top: Mono = alpha.iter().zip(beta).map(|(a, b)| *a.max(b)).collect();
    let mut out = Combo::new();
    for eps in below(&top) {
        let c = small_binomial(beta, &eps) * small_binomial(sigma, &eps)
            - small_binomial(alpha, &eps) * small_binomial(tau, &eps);
        if c == 0 {
            continue;
        }
        let (Some(x), Some(y)) = (mono_sub(&mono_add(alpha, beta), &eps), mono_sub(&mono_add(sigma, tau), &eps)) else {
            continue;
        };
        let fact: i64 = eps.iter().flat_map(|&e| 1..=e as i64).product();
        add_to(&mut out, (x, y), &Rational::from_int(c * fact));
    }
    out
}

/// `∏ C(a_i, b_i)` in machine integers; exponents here stay far below overflow.
fn small_binomial(a: &[u8], b: &[u8]) -> i64 {
    a.iter()
        .zip(b)
        .map(|(&a, &b)| {
            if b > a {
                return 0;
            }
            (0..b as i64).fold(1, |acc, k| acc * (a as i64 - k) / (k + 1))
        })
        .product()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Letter {
    Xi(usize),
    Eta(usize),
}

fn word(n: usize, xi: &[u8], eta: &[u8]) -> Vec<Letter> {
    let mut w = Vec::new();
    for i in 0..n {
        w.extend(std::iter::repeat(Letter::Xi(i)).take(xi[i] as usize));
    }
    for i in 0..n {
        w.extend(std::iter::repeat(Letter::Eta(i)).take(eta[i] as usize));
    }
    w
}

/// Moves every `η` right of every `ξ`, one adjacent pair at a time, using
/// `η_i ξ_i = ξ_i η_i + 1` and commutation of distinct variables.
fn normal_order(n: usize, w: Vec<Letter>) -> Combo<WeylLabel> {
    let mut out = Combo::new();
    let mut stack = vec![(w, Rational::one())];
    while let Some((w, c)) = stack.pop() {
        let pos = w.windows(2).position(|p| matches!(p, [Letter::Eta(_), Letter::Xi(_)]));
        match pos {
            None => {
                let (mut xi, mut eta) = (vec![0u8; n], vec![0u8; n]);
                for l in w {
                    match l {
                        Letter::Xi(i) => xi[i] += 1,
                        Letter::Eta(i) => eta[i] += 1,
                    }
                }
                add_to(&mut out, (xi, eta), &c);
            }
            Some(p) => {
                let (Letter::Eta(i), Letter::Xi(j)) = (w[p], w[p + 1]) else { unreachable!() };
                let mut swapped = w.clone();
                swapped.swap(p, p + 1);
                if i == j {
                    let mut contracted = w.clone();
                    contracted.drain(p..p + 2);
                    stack.push((contracted, c.clone()));
                }
                stack.push((swapped, c));
            }
        }
    }
    out
}

/// The commutator computed by normal-ordering both products.
pub fn normal_order_commutator(alpha: &[u8], sigma: &[u8], beta: &[u8], tau: &[u8]) -> Combo<WeylLabel> {
    let n = alpha.len();
    let (u, v) = (word(n, alpha, sigma), word(n, beta, tau));
    let uv = normal_order(n, [u.clone(), v.clone()].concat());
    let vu = normal_order(n, [v, u].concat());
    difference(&uv, &vu)
}

impl Weyl {
    pub fn new(n: usize, degree: usize) -> Self {
        Weyl { n, degree }
    }

    /// `ξ^α η^σ` acting on `ℚ[ξ]` by `ξ^α ∂^σ`; identities are asserted on
    /// monomials up to `degree`.
    pub fn polynomial_rep(&self, degree: usize) -> ClassicalRep<WeylLabel, Mono> {
        ClassicalRep::new(
            format!("ℚ[ξ] (degree ≤ {degree})"),
            monomials_up_to(self.n, degree),
            |(a, s): &WeylLabel, g: &Mono| match mono_sub(g, s) {
                Some(rest) => [(mono_add(&rest, a), &factorial(g) / &factorial(&rest))].into(),
                None => Combo::new(),
            },
        )
    }
}

impl LieAlgebra for Weyl {
    type Label = WeylLabel;

    fn name(&self) -> String {
        format!("weyl(n={}, degree ≤ {})", self.n, self.degree)
    }

    fn basis(&self) -> Vec<WeylLabel> {
        let all = monomials_up_to(2 * self.n, self.degree);
        all.into_iter().map(|m| (m[..self.n].to_vec(), m[self.n..].to_vec())).collect()
    }

    fn bracket(&self, (a, s): &WeylLabel, (b, t): &WeylLabel) -> Combo<WeylLabel> {
        weyl_commutator(a, s, b, t)
    }
}

type Triple = (Mono, Mono, Mono);
type Quad = (Mono, Mono, Mono, Mono);

/// `a(ξ^α ⊗ x) = Σ_σ ξ^[σ] ⊗ μ(ξ^α η^σ) x`, with `σ` ranging up to the larger
/// of `deg x` and the label bound (beyond both, every term vanishes).
fn curried(rep: &ClassicalRep<WeylLabel, Mono>, sigma_bound: usize, alpha: &Mono, x: &Mono) -> Combo<(Mono, Mono)> {
    let mut out = Combo::new();
    for sigma in monomials_up_to(alpha.len(), sigma_bound.max(degree(x))) {
        for (y, c) in rep.act(&(alpha.clone(), sigma.clone()), x) {
            add_to(&mut out, (sigma.clone(), y), &c);
        }
    }
    out
}

fn swap12(v: Combo<Triple>) -> Combo<Triple> {
    v.into_iter().map(|((a, b, x), c)| ((b, a, x), c)).collect()
}

/// The seven-step composite `S⊗S⊗M -> D⊗D⊗M`.
fn a_prime(rep: &ClassicalRep<WeylLabel, Mono>, sigma_bound: usize, v: &Combo<Triple>) -> Combo<Triple> {
    // id ⊗ Δ ⊗ id on Sym
    let s1 = apply(v, |(a, b, x)| {
        below(b)
            .into_iter()
            .map(|e| ((a.clone(), e.clone(), mono_sub(b, &e).unwrap(), x.clone()), binomial(b, &e)))
            .collect::<Combo<Quad>>()
    });
    // τ ⊗ id ⊗ id
    let s2 = apply(&s1, |(a, e, r, x)| [((e.clone(), a.clone(), r.clone(), x.clone()), Rational::one())].into());
    // id ⊗ m ⊗ id
    let s3 = apply(&s2, |(e, a, r, x)| [((e.clone(), mono_add(a, r), x.clone()), Rational::one())].into());
    // id ⊗ a
    let s4 = apply(&s3, |(e, f, x)| {
        curried(rep, sigma_bound, f, x)
            .into_iter()
            .map(|((rho, y), c)| ((e.clone(), rho, y), c))
            .collect::<Combo<Triple>>()
    });
    // id ⊗ Δ ⊗ id on divided powers
    let s5 = apply(&s4, |(e, rho, y)| {
        below(rho)
            .into_iter()
            .map(|nu| ((e.clone(), nu.clone(), mono_sub(rho, &nu).unwrap(), y.clone()), Rational::one()))
            .collect::<Combo<Quad>>()
    });
    // averaging S -> D on the first factor
    let s6 = apply(&s5, |k| [(k.clone(), factorial(&k.0))].into());
    // multiplication of divided powers
    apply(&s6, |(e, nu, mu, y)| [((mono_add(e, nu), mu.clone(), y.clone()), binomial(&mono_add(e, nu), e))].into())
}

/// Failures of `[a₁, a₂] = a′ − a″` on `ξ^α ⊗ ξ^β ⊗ x` with `|α|, |β| ≤ sym_bound`.
pub fn weyl_curry_witnesses(
    n: usize,
    sym_bound: usize,
    sigma_bound: usize,
    rep: &ClassicalRep<WeylLabel, Mono>,
) -> Vec<String> {
    let a2 = |(a, b, x): &Triple| -> Combo<Triple> {
        curried(rep, sigma_bound, b, x).into_iter().map(|((t, y), c)| ((a.clone(), t, y), c)).collect()
    };
    let a1 = |(a, t, y): &Triple| -> Combo<Triple> {
        curried(rep, sigma_bound, a, y).into_iter().map(|((s, z), c)| ((s, t.clone(), z), c)).collect()
    };
    let mut out = Vec::new();
    let sym = monomials_up_to(n, sym_bound);
    for alpha in &sym {
        for beta in &sym {
            for x in &rep.inputs {
                let v: Combo<Triple> = [((alpha.clone(), beta.clone(), x.clone()), Rational::one())].into();
                let lhs = difference(&apply(&apply(&v, a2), a1), &apply(&apply(&v, a1), a2));
                let a_pp = swap12(a_prime(rep, sigma_bound, &swap12(v.clone())));
                let rhs = difference(&a_prime(rep, sigma_bound, &v), &a_pp);
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
    fn defining_relation_and_self_bracket() {
        assert_eq!(weyl_commutator(&[0], &[1], &[1], &[0]), [((vec![0], vec![0]), Rational::one())].into());
        assert!(weyl_commutator(&[1], &[1], &[1], &[1]).is_empty());
    }

    #[test]
    fn formula_matches_normal_ordering() {
        for n in 1..=2 {
            let labels = Weyl::new(n, 2).basis();
            for (a, s) in &labels {
                for (b, t) in &labels {
                    assert_eq!(
                        weyl_commutator(a, s, b, t),
                        normal_order_commutator(a, s, b, t),
                        "{a:?}{s:?} {b:?}{t:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn polynomial_representation_iff_curried_identity() {
        let w = Weyl::new(1, 3);
        assert!(jacobi_witnesses(&w).is_empty());
        let r = w.polynomial_rep(3);
        assert!(rep_witnesses(&w, &r).is_empty());
        assert!(weyl_curry_witnesses(1, 2, 3, &r).is_empty());
        let bad = r.perturbed((vec![1], vec![0]), vec![0], vec![2], Rational::one());
        assert!(!rep_witnesses(&w, &bad).is_empty());
        assert!(!weyl_curry_witnesses(1, 2, 3, &bad).is_empty());
    }
}
