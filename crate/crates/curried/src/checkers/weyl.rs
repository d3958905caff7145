//! Curried Weyl algebra: `a: Sym𝕍⊗M -> Div𝕍⊗M` with `[a₁,a₂] = a′ − a″`.
//!
//! The B-form is a symmetric operation `φ` of every arity; the C-form is the
//! pair `(α, ω) = Θ(φ) = (φ[0] + φ[1], −φ[1])`. Since `φ[1]` at ambient size
//! `n` sits at `n + 1` in `φ`, Θ lowers the truncation by one and the round
//! trips are exact on the degrees both sides store.

use super::gl::commutator;
use super::{check_simple, commute_witnesses, layer, map_witnesses, Report, WeylRepData, Witness};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::operations::{Operation, Symmetry};
use crate::rational::Rational;
use crate::set::{consecutive_blocks, size_vectors, Set};
use crate::species::{
    associator, associator_inverse, comult_map, extend, lift, mult_map, swap_outer, sym_algebra, tensor, FbModule,
    FbMorphism,
};

pub fn theta(phi: &Operation) -> Result<(Operation, Operation)> {
    if phi.symmetry() != Symmetry::Symmetric && !phi.is_zero() {
        return Err(Error::NotSymmetric);
    }
    let n = phi.truncation();
    if n == 0 {
        return Err(Error::Bound("Θ needs truncation at least 1".into()));
    }
    let first = layer(phi, 1, n);
    let alpha = layer(phi, 0, n).truncate(n - 1).add(&first)?;
    Ok((alpha, first.scale(&Rational::from_int(-1))))
}

/// `φ[0] = α + ω`, `φ[n] = (−1)ⁿ ω`.
pub fn theta_inv(alpha: &Operation, omega: &Operation) -> Result<Operation> {
    let n = alpha.truncation().min(omega.truncation());
    let (alpha, omega) = (alpha.truncate(n), omega.truncate(n));
    let neg = omega.scale(&Rational::from_int(-1));
    let mut layers = vec![alpha.add(&omega)?];
    for k in 1..=n {
        layers.push(if k % 2 == 0 { omega.clone() } else { neg.clone() });
    }
    Operation::contract(&layers, n)
}

/// The 4-set frames of (B1)–(B3).
///
/// Region order: rest, A, B, C, D, A∩C, A∩D, B∩C, B∩D.
struct Quad {
    s: Set,
    a: Set,
    b: Set,
    c: Set,
    d: Set,
    ac: Set,
    bd: Set,
}

impl Quad {
    fn from_sizes(v: &[usize]) -> Quad {
        let r = consecutive_blocks(v);
        let s = r.iter().fold(Set::default(), |acc, x| acc.union(*x));
        Quad {
            s,
            a: r[1].union(r[5]).union(r[6]),
            b: r[2].union(r[7]).union(r[8]),
            c: r[3].union(r[5]).union(r[7]),
            d: r[4].union(r[6]).union(r[8]),
            ac: r[5],
            bd: r[8],
        }
    }

    fn location(&self) -> String {
        format!("S={} A={} B={} C={} D={}", self.s, self.a, self.b, self.c, self.d)
    }
}

/// `φ^{S'}_{x,y}`, or `None` past the truncation.
fn term(phi: &Operation, m: &FbModule, s: Set, x: Set, y: Set) -> Result<Option<Matrix>> {
    if s.len() > phi.truncation() || s.len() > m.truncation() {
        return Ok(None);
    }
    phi.eval_sets(m, s, x, y).map(Some)
}

fn product(l: Option<Matrix>, r: Option<Matrix>) -> Option<Matrix> {
    Some(l?.mul(&r?))
}

/// `Σ_{X ⊆ P} φ^{S∖X}_{(Q∖X)∪C, A∪(R∖X)}` over the subsets of `P`, optionally nonempty.
#[allow(clippy::too_many_arguments)]
fn subset_sum(
    phi: &Operation,
    m: &FbModule,
    s: Set,
    pool: Set,
    (q, c): (Set, Set),
    (a, r): (Set, Set),
    nonempty: bool,
) -> Result<Option<Matrix>> {
    let mut acc: Option<Matrix> = None;
    for x in pool.subsets().into_iter().filter(|x| !nonempty || !x.is_empty()) {
        let Some(t) = term(phi, m, s.minus(x), q.minus(x).union(c), a.union(r.minus(x)))? else {
            return Ok(None);
        };
        acc = Some(match acc {
            Some(sum) => sum.add(&t),
            None => t,
        });
    }
    Ok(acc)
}

fn b_operation_witnesses(w: &WeylRepData) -> Result<Vec<Witness>> {
    let (m, phi) = (&w.module, &w.phi);
    let n = phi.truncation().min(m.truncation());
    let mut out = Vec::new();
    for v in size_vectors(9, 2 * n) {
        let f = Quad::from_sizes(&v);
        let (s, a, b, c, d) = (f.s, f.a, f.b, f.c, f.d);
        let lhs_b12 = || -> Result<Option<Matrix>> {
            Ok(product(term(phi, m, s.minus(c), d, a)?, term(phi, m, s.minus(a), c, b)?))
        };
        let (name, lhs, rhs) = match (f.ac.is_empty(), f.bd.is_empty()) {
            (true, true) => {
                let rhs = product(term(phi, m, s.minus(d), c, b)?, term(phi, m, s.minus(b), d, a)?);
                ("(B1)", lhs_b12()?, rhs)
            }
            (true, false) => ("(B2)", lhs_b12()?, subset_sum(phi, m, s, f.bd, (d, c), (a, b), true)?),
            (false, false) => (
                "(B3)",
                subset_sum(phi, m, s, f.bd, (d, c), (a, b), false)?,
                subset_sum(phi, m, s, f.ac, (c, d), (b, a), false)?,
            ),
            (false, true) => continue,
        };
        if let (Some(l), Some(r)) = (lhs, rhs) {
            if l != r {
                out.push(Witness::new(name, s.len(), f.location()));
            }
        }
    }
    Ok(out)
}

/// `a′`: split `t^B`, move the split-off factor to the front, merge the
/// rest, act, split the output, and multiply the two leading factors.
fn a_prime(a: &FbMorphism, m: &FbModule) -> Result<FbMorphism> {
    let n = m.truncation();
    let sym = sym_algebra(n);
    let sym_m = tensor(&sym, m)?;
    let sym_sym = tensor(&sym, &sym)?;
    let sym_sym_m = tensor(&sym, &sym_m)?;
    let split = associator(&sym, &sym, m)?.compose(&extend(&comult_map(n), (&sym, &sym_sym), m));
    let merge = extend(&mult_map(n), (&sym_sym, &sym), m).compose(&associator_inverse(&sym, &sym, m)?);
    let lifted_split = lift(&sym, &split, (&sym_m, &sym_sym_m));
    // Sym and Div share the basis `t^A`, so the averaging step is the identity
    let steps = [
        lifted_split.clone(),
        swap_outer(&sym, &sym, &sym_m)?,
        lift(&sym, &merge, (&sym_sym_m, &sym_m)),
        lift(&sym, a, (&sym_m, &sym_m)),
        lifted_split,
        extend(&mult_map(n), (&sym_sym, &sym), &sym_m).compose(&associator_inverse(&sym, &sym, &sym_m)?),
    ];
    Ok(steps.iter().skip(1).fold(steps[0].clone(), |acc, f| f.compose(&acc)))
}

fn b_tensor_witnesses(w: &WeylRepData) -> Result<Vec<Witness>> {
    let m = &w.module;
    let sym = sym_algebra(m.truncation());
    let a = w.action()?;
    let ap = a_prime(&a, m)?;
    let tau = swap_outer(&sym, &sym, m)?;
    let app = tau.compose(&ap).compose(&tau);
    Ok(map_witnesses("[a1,a2]=a'-a''", &commutator(&a, &sym, &sym, m)?, &ap.sub(&app)))
}

pub fn check_weyl_b(w: &WeylRepData) -> Result<Report> {
    if w.phi.symmetry() != Symmetry::Symmetric && !w.phi.is_zero() {
        return Err(Error::NotSymmetric);
    }
    Ok(Report::new("weyl-B", b_operation_witnesses(w)?, Some(b_tensor_witnesses(w)?)))
}

/// Layers violating `φ[n] = (−1)^{n+1} φ[1]` for `n ≥ 2`.
pub fn b3_prime_witnesses(phi: &Operation) -> Vec<Witness> {
    let layers = phi.expand();
    let n = phi.truncation();
    let first = layer(phi, 1, n);
    (2..=n)
        .filter(|&k| {
            let sign = Rational::from_int(if k % 2 == 0 { -1 } else { 1 });
            let expected = first.truncate(n - k).scale(&sign);
            let got = layers.get(k).cloned().unwrap_or_else(|| Operation::new(n - k, Symmetry::Symmetric));
            !got.blocks().eq(expected.blocks())
        })
        .map(|k| Witness::new("(B3')", k, format!("layer={k}")))
        .collect()
}

pub fn check_weyl_c(module: &FbModule, alpha: &Operation, omega: &Operation) -> Result<Report> {
    check_simple(alpha, "α", None)?;
    check_simple(omega, "ω", None)?;
    let m = module;
    let mut out = commute_witnesses(m, &[("α,α", alpha, alpha), ("α,ω", alpha, omega), ("ω,ω", omega, omega)], "(C1)")?;
    let n = alpha.truncation().min(omega.truncation()).min(m.truncation());
    // regions: rest, A, B∖D, C, D∖B, B∩D
    for v in size_vectors(6, 2 * n) {
        if v[5] == 0 {
            continue;
        }
        let r = consecutive_blocks(&v);
        let s = r.iter().fold(Set::default(), |acc, x| acc.union(*x));
        let (a, c, bd) = (r[1], r[3], r[5]);
        let (b, d) = (r[2].union(bd), r[4].union(bd));
        let (s1, s2, s3) = (s.minus(c), s.minus(a), s.minus(bd));
        if [s1, s2, s3].iter().any(|x| x.len() > n) {
            continue;
        }
        let (x3, y3) = (c.union(d.minus(b)), a.union(b.minus(d)));
        let (a1, a2, a3) =
            (alpha.eval_sets(m, s1, d, a)?, alpha.eval_sets(m, s2, c, b)?, alpha.eval_sets(m, s3, x3, y3)?);
        let (w1, w2, w3) =
            (omega.eval_sets(m, s1, d, a)?, omega.eval_sets(m, s2, c, b)?, omega.eval_sets(m, s3, x3, y3)?);
        let sign = Rational::from_int(if bd.len() % 2 == 0 { -1 } else { 1 });
        let at = format!("S={s} A={a} B={b} C={c} D={d}");
        let checks = [
            ("(C2) α1α2=α3", a1.mul(&a2) == a3),
            ("(C2) α1ω2=0", a1.mul(&w2).is_zero()),
            ("(C2) ω1α2=0", w1.mul(&a2).is_zero()),
            ("(C2) ω1ω2=±ω3", w1.mul(&w2) == w3.scale(&sign)),
        ];
        for (name, ok) in checks {
            if !ok {
                out.push(Witness::new(name, s.len(), at.clone()));
            }
        }
    }
    Ok(Report::new("weyl-C", out, None))
}

/// `χ` with `φ^S_{∅,∅} = χ·id` in every degree, or the first degree where that fails.
pub fn central_character(w: &WeylRepData) -> std::result::Result<Rational, Witness> {
    let mut chi: Option<Rational> = None;
    for p in 0..=w.truncation().min(w.phi.truncation()) {
        let dim = w.module.dim(p);
        if dim == 0 {
            continue;
        }
        let c = w.phi.canonical(&w.module, crate::operations::Slot::new(0, 0, 0, p));
        let value = c.get(0, 0);
        let consistent = chi.as_ref().map_or(true, |x| *x == value);
        if c != Matrix::scalar(dim, &value) || !consistent {
            return Err(Witness::new("χ", p, format!("degree={p}")));
        }
        chi = Some(value);
    }
    Ok(chi.unwrap_or_else(Rational::zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operations::Slot;

    #[test]
    fn zero_data_has_character_zero_and_passes() {
        let m = FbModule::trivial_dims(3, |_| 1);
        let w = WeylRepData { module: m.clone(), phi: Operation::new(3, Symmetry::Symmetric) };
        assert_eq!(central_character(&w), Ok(Rational::zero()));
        assert!(check_weyl_b(&w).unwrap().passed());
        let (a, o) = theta(&w.phi).unwrap();
        assert!(check_weyl_c(&m, &a, &o).unwrap().passed());
    }

    #[test]
    fn degree_dependent_scalar_has_no_character() {
        let m = FbModule::trivial_dims(3, |_| 1);
        let phi = Operation::tabulate(3, Symmetry::Symmetric, Slot::all(0, 0, 0, 3), |s| {
            Ok(Matrix::scalar(1, &Rational::from_int(if s.p < 2 { 1 } else { 2 })))
        })
        .unwrap();
        let w = WeylRepData { module: m, phi };
        assert_eq!(central_character(&w).unwrap_err().degree, 2);
    }

    #[test]
    fn bare_scalar_fails_b2() {
        // t^∅ acting by 5 with nothing else misses the X = B∩D term
        let m = FbModule::trivial_dims(3, |_| 2);
        let phi = Operation::scalar(&m, 3, &Rational::from_int(5)).unwrap();
        let w = WeylRepData { module: m.clone(), phi };
        assert_eq!(central_character(&w), Ok(Rational::from_int(5)));
        let report = check_weyl_b(&w).unwrap();
        assert!(report.failed_conditions().contains("(B2)"), "{report}");
        assert!(report.agree());
    }

    #[test]
    fn theta_round_trips_within_the_margin() {
        let one = |c: i64| Matrix::scalar(1, &Rational::from_int(c));
        let mut alpha = Operation::new(4, Symmetry::Symmetric);
        let mut omega = Operation::new(4, Symmetry::Symmetric);
        for p in 0..=2 {
            alpha.insert(Slot::new(1, 1, 0, p), one(p as i64 + 2)).unwrap();
            alpha.insert(Slot::new(0, 2, 0, p), one(-1)).unwrap();
            omega.insert(Slot::new(1, 0, 0, p), one(3)).unwrap();
        }
        let phi = theta_inv(&alpha, &omega).unwrap();
        assert!(b3_prime_witnesses(&phi).is_empty());
        let (a, o) = theta(&phi).unwrap();
        assert_eq!((a.clone(), o.clone()), (alpha.truncate(3), omega.truncate(3)));
        assert_eq!(theta_inv(&a, &o).unwrap(), phi.truncate(3));
    }
}
