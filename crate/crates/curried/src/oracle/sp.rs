//! `sp(V ⊕ V*) = Div²(V*) ⊕ gl(V) ⊕ Div²(V)`, realized inside the Weyl
//! algebra by symmetrized quadratic elements.

use super::weyl::{weyl_commutator, WeylLabel};
use super::{
    add_scaled, add_to, apply, difference, glid_witnesses, monomials_of_degree, unit, ClassicalRep, Combo, LieAlgebra,
    Mono,
};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SpLabel {
    /// `v_i^* v_j^*` for `i < j`, `(v_i^*)^[2]` for `i = j`.
    Lower(usize, usize),
    /// `v_i v_j^*`.
    Mid(usize, usize),
    /// `v_i v_j` for `i < j`, `v_i^[2]` for `i = j`.
    Upper(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sp {
    pub n: usize,
}

fn half() -> Rational {
    Rational::new(1, 2)
}

fn pair_of(m: &[u8]) -> (usize, usize) {
    let mut idx = m.iter().enumerate().flat_map(|(i, &e)| std::iter::repeat(i).take(e as usize));
    let i = idx.next().expect("degree-2 monomial");
    (i, idx.next().expect("degree-2 monomial"))
}

fn var_of(m: &[u8]) -> usize {
    m.iter().position(|&e| e > 0).expect("degree-1 monomial")
}

impl Sp {
    pub fn new(n: usize) -> Self {
        Sp { n }
    }

    fn quadratic(&self, i: usize, j: usize, upper: bool) -> Combo<WeylLabel> {
        let m = super::mono_add(&unit(self.n, i), &unit(self.n, j));
        let zero = vec![0; self.n];
        let key = if upper { (m, zero) } else { (zero, m) };
        [(key, if i == j { half() } else { Rational::one() })].into()
    }

    pub fn to_weyl(&self, x: &SpLabel) -> Combo<WeylLabel> {
        match *x {
            SpLabel::Upper(i, j) => self.quadratic(i, j, true),
            SpLabel::Lower(i, j) => self.quadratic(i, j, false),
            SpLabel::Mid(i, j) => {
                let mut out: Combo<WeylLabel> = [((unit(self.n, i), unit(self.n, j)), Rational::one())].into();
                if i == j {
                    add_to(&mut out, (vec![0; self.n], vec![0; self.n]), &half());
                }
                out
            }
        }
    }

    /// Reads a Weyl element back in the sp basis; `None` outside the image.
    pub fn from_weyl(&self, v: &Combo<WeylLabel>) -> Option<Combo<SpLabel>> {
        let mut out = Combo::new();
        let mut constant = Rational::zero();
        for ((a, s), c) in v {
            match (super::degree(a), super::degree(s)) {
                (0, 0) => constant += c,
                (2, 0) | (0, 2) => {
                    let upper = super::degree(a) == 2;
                    let (i, j) = pair_of(if upper { a } else { s });
                    let coef = if i == j { c * &Rational::from_int(2) } else { c.clone() };
                    add_to(&mut out, if upper { SpLabel::Upper(i, j) } else { SpLabel::Lower(i, j) }, &coef);
                }
                (1, 1) => {
                    let (i, j) = (var_of(a), var_of(s));
                    add_to(&mut out, SpLabel::Mid(i, j), c);
                    if i == j {
                        constant -= &(c * &half());
                    }
                }
                _ => return None,
            }
        }
        constant.is_zero().then_some(out)
    }

    pub fn summand_dims(&self) -> (usize, usize, usize) {
        let basis = self.basis();
        let count = |f: fn(&SpLabel) -> bool| basis.iter().filter(|x| f(x)).count();
        (
            count(|x| matches!(x, SpLabel::Lower(..))),
            count(|x| matches!(x, SpLabel::Mid(..))),
            count(|x| matches!(x, SpLabel::Upper(..))),
        )
    }

    pub fn trivial_rep(&self) -> ClassicalRep<SpLabel, usize> {
        ClassicalRep::new("trivial", vec![0], |_, _| Combo::new())
    }

    /// `V ⊕ V*` with basis `ξ_1..ξ_n, η_1..η_n`, acted on by commutators.
    pub fn defining_rep(&self) -> ClassicalRep<SpLabel, usize> {
        let sp = *self;
        let n = self.n;
        ClassicalRep::new("V⊕V*", (0..2 * n).collect(), move |x, &u| {
            let (b, t) = if u < n { (unit(n, u), vec![0; n]) } else { (vec![0; n], unit(n, u - n)) };
            let mut out = Combo::new();
            for ((a, s), c) in sp.to_weyl(x) {
                for ((p, q), d) in weyl_commutator(&a, &s, &b, &t) {
                    let key = if super::degree(&p) == 1 { var_of(&p) } else { n + var_of(&q) };
                    add_to(&mut out, key, &(&c * &d));
                }
            }
            out
        })
    }
}

impl LieAlgebra for Sp {
    type Label = SpLabel;

    fn name(&self) -> String {
        format!("sp(V⊕V*, dim V = {})", self.n)
    }

    fn basis(&self) -> Vec<SpLabel> {
        let n = self.n;
        let tri = || (0..n).flat_map(move |i| (i..n).map(move |j| (i, j)));
        let mut out: Vec<SpLabel> = tri().map(|(i, j)| SpLabel::Lower(i, j)).collect();
        out.extend((0..n).flat_map(|i| (0..n).map(move |j| SpLabel::Mid(i, j))));
        out.extend(tri().map(|(i, j)| SpLabel::Upper(i, j)));
        out
    }

    fn bracket(&self, x: &SpLabel, y: &SpLabel) -> Combo<SpLabel> {
        let mut w = Combo::new();
        for ((a, s), c) in self.to_weyl(x) {
            for ((b, t), d) in self.to_weyl(y) {
                add_scaled(&mut w, &weyl_commutator(&a, &s, &b, &t), &(&c * &d));
            }
        }
        self.from_weyl(&w).expect("symmetrized quadratics are closed under the commutator")
    }
}

fn lower(m: &[u8]) -> SpLabel {
    let (i, j) = pair_of(m);
    SpLabel::Lower(i, j)
}

fn upper(m: &[u8]) -> SpLabel {
    let (i, j) = pair_of(m);
    SpLabel::Upper(i, j)
}

/// `E_ij` on the divided-power basis `v^[γ]` of `Div²(V)`.
fn div_act(n: usize, i: usize, j: usize, g: &Mono) -> Combo<Mono> {
    match super::mono_sub(g, &unit(n, j)) {
        None => Combo::new(),
        Some(r) => {
            let c = if i == j { g[i] } else { g[i] + 1 };
            [(super::mono_add(&r, &unit(n, i)), Rational::from_int(c as i64))].into()
        }
    }
}

/// `E_ij` on the monomial basis `v^γ` of `Sym²(V)`.
fn sym_act(n: usize, i: usize, j: usize, g: &Mono) -> Combo<Mono> {
    match super::mono_sub(g, &unit(n, j)) {
        None => Combo::new(),
        Some(r) => [(super::mono_add(&r, &unit(n, i)), Rational::from_int(g[j] as i64))].into(),
    }
}

/// Failures of the four curried conditions for `(a, b, b′)` read off `μ`:
/// the gl identity, (co)commutativity, equivariance of `b` and `b′`, and
/// `b′b − b₁b′₂ = (m ⊗ 1)(1 ⊗ a)(Δ ⊗ 1)`.
pub fn sp_curry_witnesses<K: Ord + Clone + std::fmt::Debug + 'static>(
    n: usize,
    rep: &ClassicalRep<SpLabel, K>,
) -> Vec<String> {
    let mut out = Vec::new();
    let r = rep.clone();
    let gl_part = ClassicalRep::new(rep.name.clone(), rep.inputs.clone(), move |&(i, j): &(usize, usize), x: &K| {
        r.act(&SpLabel::Mid(i, j), x)
    });
    out.extend(glid_witnesses(n, &gl_part).into_iter().map(|w| format!("(a) {w}")));

    let a = |i: usize, x: &K| -> Combo<(usize, K)> {
        let mut o = Combo::new();
        for j in 0..n {
            for (y, c) in rep.act(&SpLabel::Mid(i, j), x) {
                add_to(&mut o, (j, y), &c);
            }
        }
        o
    };
    let b = |g: &Mono, x: &K| rep.act(&upper(g), x);
    let b_prime = |x: &K| -> Combo<(Mono, K)> {
        let mut o = Combo::new();
        for g in monomials_of_degree(n, 2) {
            for (y, c) in rep.act(&lower(&g), x) {
                add_to(&mut o, (g.clone(), y), &c);
            }
        }
        o
    };
    let quads = monomials_of_degree(n, 2);

    for x in &rep.inputs {
        for g in &quads {
            for h in &quads {
                let gh = apply(&b(h, x), |y| b(g, y));
                let hg = apply(&b(g, x), |y| b(h, y));
                if gh != hg {
                    out.push(format!("(b) b is not commutative on {g:?} ⊗ {h:?} ⊗ {x:?}"));
                }
            }
        }
        let mut second = Combo::new();
        let mut first = Combo::new();
        for ((g, y), c) in b_prime(x) {
            for ((h, z), d) in b_prime(&y) {
                add_to(&mut second, (g.clone(), h.clone(), z.clone()), &(&c * &d));
                add_to(&mut first, (h, g.clone(), z), &(&c * &d));
            }
        }
        if first != second {
            out.push(format!("(b) b′ is not cocommutative on {x:?}"));
        }

        for i in 0..n {
            for g in &quads {
                let lhs = apply(&b(g, x), |y| a(i, y));
                let mut rhs = Combo::new();
                for ((j, y), c) in a(i, x) {
                    for (z, d) in b(g, &y) {
                        add_to(&mut rhs, (j, z), &(&c * &d));
                    }
                }
                for l in 0..n {
                    for (h, c) in div_act(n, i, l, g) {
                        for (z, d) in b(&h, x) {
                            add_to(&mut rhs, (l, z), &(&c * &d));
                        }
                    }
                }
                if lhs != rhs {
                    out.push(format!("(c) b is not equivariant on v{} ⊗ {g:?} ⊗ {x:?}", i + 1));
                }
            }
            let mut lhs = Combo::new();
            for ((j, y), c) in a(i, x) {
                for ((g, z), d) in b_prime(&y) {
                    add_to(&mut lhs, (j, g, z), &(&c * &d));
                }
            }
            let mut rhs = Combo::new();
            for ((g, y), c) in b_prime(x) {
                for ((j, z), d) in a(i, &y) {
                    add_to(&mut rhs, (j, g.clone(), z), &(&c * &d));
                }
                for l in 0..n {
                    for (h, d) in sym_act(n, i, l, &g) {
                        add_to(&mut rhs, (l, h, y.clone()), &(&c * &d));
                    }
                }
            }
            if lhs != rhs {
                out.push(format!("(c) b′ is not equivariant on v{} ⊗ {x:?}", i + 1));
            }
        }

        for g in &quads {
            let bb = apply(&b(g, x), |y| b_prime(y));
            let mut b1b2 = Combo::new();
            for ((h, y), c) in b_prime(x) {
                for (z, d) in b(g, &y) {
                    add_to(&mut b1b2, (h.clone(), z), &(&c * &d));
                }
            }
            let lhs = difference(&bb, &b1b2);
            let mut rhs = Combo::new();
            let (p0, q0) = pair_of(g);
            let splits = if p0 == q0 { vec![(p0, q0)] } else { vec![(p0, q0), (q0, p0)] };
            for (p, q) in splits {
                for ((r, y), c) in a(q, x) {
                    add_to(&mut rhs, (super::mono_add(&unit(n, p), &unit(n, r)), y), &c);
                }
            }
            if lhs != rhs {
                out.push(format!("(d) b′b − b₁b′₂ ≠ (m⊗1)(1⊗a)(Δ⊗1) on {g:?} ⊗ {x:?}"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{jacobi_witnesses, rep_witnesses, StructureConstants};

    #[test]
    fn decomposition_dimensions() {
        for n in 1..=3 {
            let sp = Sp::new(n);
            assert_eq!(sp.basis().len(), n * (2 * n + 1));
            assert_eq!(sp.summand_dims(), (n * (n + 1) / 2, n * n, n * (n + 1) / 2));
        }
    }

    #[test]
    fn brackets_follow_the_weyl_commutator() {
        let sp = Sp::new(2);
        assert!(jacobi_witnesses(&sp).is_empty());
        assert!(StructureConstants::build(&sp).antisymmetry_witnesses().is_empty());
        // [v_1^* v_2^*, v_1 v_2] = v_2^* v_2 + v_1^* v_1 read in gl(V)
        let expected: Combo<SpLabel> =
            [(SpLabel::Mid(0, 0), Rational::one()), (SpLabel::Mid(1, 1), Rational::one())].into();
        assert_eq!(sp.bracket(&SpLabel::Lower(0, 1), &SpLabel::Upper(0, 1)), expected);
        // the gl part brackets like matrix units
        assert_eq!(
            sp.bracket(&SpLabel::Mid(0, 1), &SpLabel::Mid(1, 0)),
            [(SpLabel::Mid(0, 0), Rational::one()), (SpLabel::Mid(1, 1), Rational::from_int(-1))].into()
        );
    }

    #[test]
    fn defining_representation_iff_curried_conditions() {
        let sp = Sp::new(2);
        for r in [sp.trivial_rep(), sp.defining_rep()] {
            assert!(rep_witnesses(&sp, &r).is_empty(), "{}", r.name);
            let w = sp_curry_witnesses(2, &r);
            assert!(w.is_empty(), "{w:?}");
        }
        let bad = sp.defining_rep().perturbed(SpLabel::Upper(0, 1), 2, 1, Rational::one());
        assert!(!rep_witnesses(&sp, &bad).is_empty());
        assert!(!sp_curry_witnesses(2, &bad).is_empty());
    }
}
