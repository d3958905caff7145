//! Curried Witt algebra: `a: Sym𝕍⊗M -> 𝕍⊗M` with `[a₁,a₂] = a′ − a″`.

use super::gl::commutator;
use super::{commute_witnesses, map_witnesses, Report, Witness, WittRepData};
use crate::error::{Error, Result};
use crate::operations::{sym_comult_between, Operation, SymSide, Symmetry};
use crate::set::{consecutive_blocks, size_vectors, Set};
use crate::species::{
    associator, associator_inverse, extend, lift, mult_map, swap_outer, sym_algebra, tensor, FbModule, FbMorphism,
};

fn check_arity(op: &Operation, name: &str, m: usize) -> Result<()> {
    if !op.is_simple() {
        return Err(Error::Arity(format!("{name} must be simple")));
    }
    if op.symmetry() != Symmetry::Symmetric && !op.is_zero() {
        return Err(Error::NotSymmetric);
    }
    match op.blocks().find(|(s, _)| s.m != m) {
        Some((s, _)) => Err(Error::Arity(format!("{name} has a block at {s}, expected ({m},*)"))),
        None => Ok(()),
    }
}

fn operation_witnesses(r: &WittRepData) -> Result<Vec<Witness>> {
    let (m, alpha, omega) = (&r.module, &r.alpha, &r.omega);
    let mut out = commute_witnesses(m, &[("α,α", alpha, alpha), ("α,ω", alpha, omega), ("ω,ω", omega, omega)], "(a)")?;
    let na = alpha.truncation().min(m.truncation());
    let nw = omega.truncation().min(m.truncation());

    // (b): regions rest, A, B∖j, then j and i
    for v in size_vectors(3, 2 * na) {
        let b = consecutive_blocks(&[v[0], v[1], v[2], 1, 1]);
        let (a_set, j, i) = (b[1], b[3].nth(0), b[4].nth(0));
        let b_set = b[2].with(j);
        let s = b.iter().fold(b[0], |acc, x| acc.union(*x));
        if s.len() - 1 > na || s.len() - a_set.len() > na {
            continue;
        }
        let lhs =
            alpha.eval_sets(m, s.without(i), b[3], a_set)?.mul(&alpha.eval_sets(m, s.minus(a_set), b[4], b_set)?);
        let rhs = alpha.eval_sets(m, s.without(j), b[4], a_set.union(b_set).without(j))?;
        if lhs != rhs {
            out.push(Witness::new("(b)", s.len(), format!("S={s} A={a_set} B={b_set} i={i} j={j}")));
        }
    }

    // (c): regions rest, A, B∖j, then j
    for v in size_vectors(3, na + nw) {
        let b = consecutive_blocks(&[v[0], v[1], v[2], 1]);
        let (a_set, j) = (b[1], b[3].nth(0));
        let b_set = b[2].with(j);
        let s = b.iter().fold(b[0], |acc, x| acc.union(*x));
        if s.len() > na || s.len() - a_set.len() > nw || s.len() - 1 > nw {
            continue;
        }
        let lhs = alpha.eval_sets(m, s, b[3], a_set)?.mul(&omega.eval_sets(m, s.minus(a_set), Set::range(0), b_set)?);
        let rhs = omega.eval_sets(m, s.without(j), Set::range(0), a_set.union(b_set).without(j))?;
        if lhs != rhs {
            out.push(Witness::new("(c)", s.len(), format!("S={s} A={a_set} B={b_set} j={j}")));
        }
    }
    Ok(out)
}

/// `a′: Sym⊗Sym⊗M -> 𝕍⊗𝕍⊗M`: split `t^B` into `t^j ⊗ t^{B∖j}`, bring `t^j`
/// out front, multiply the rest into the first factor, then act.
pub(super) fn a_prime(a: &FbMorphism, m: &FbModule) -> Result<FbMorphism> {
    let n = m.truncation();
    let (sym, v) = (sym_algebra(n), FbModule::standard(n));
    let sym_m = tensor(&sym, m)?;
    let v_sym = tensor(&v, &sym)?;
    let v_m = tensor(&v, m)?;
    let sym_sym = tensor(&sym, &sym)?;
    let sym_sym_m = tensor(&sym, &sym_m)?;
    let v_sym_m = tensor(&v, &sym_m)?;

    let delta = sym_comult_between(SymSide::All, SymSide::Power(1), SymSide::All, n);
    let split = associator(&v, &sym, m)?.compose(&extend(&delta, (&sym, &v_sym), m));
    let merge = extend(&mult_map(n), (&sym_sym, &sym), m).compose(&associator_inverse(&sym, &sym, m)?);
    Ok(lift(&v, a, (&sym_m, &v_m))
        .compose(&lift(&v, &merge, (&sym_sym_m, &sym_m)))
        .compose(&swap_outer(&sym, &v, &sym_m)?)
        .compose(&lift(&sym, &split, (&sym_m, &v_sym_m))))
}

fn tensor_witnesses(r: &WittRepData) -> Result<Vec<Witness>> {
    let m = &r.module;
    let n = m.truncation();
    let (sym, v) = (sym_algebra(n), FbModule::standard(n));
    let a = r.action()?;
    let ap = a_prime(&a, m)?;
    let app = swap_outer(&v, &v, m)?.compose(&ap).compose(&swap_outer(&sym, &sym, m)?);
    Ok(map_witnesses("[a1,a2]=a'-a''", &commutator(&a, &sym, &v, m)?, &ap.sub(&app)))
}

pub fn check_witt(r: &WittRepData) -> Result<Report> {
    check_arity(&r.alpha, "α", 1)?;
    check_arity(&r.omega, "ω", 0)?;
    Ok(Report::new("witt", operation_witnesses(r)?, Some(tensor_witnesses(r)?)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checkers::{extend_gl_to_witt, make_delta_standard, restrict_witt_to_gl};
    use crate::rational::Rational;
    use crate::species::{specht, Partition};

    #[test]
    fn trivial_data_passes() {
        let m = specht(&Partition::new(vec![2, 1]), 4);
        let r = WittRepData {
            module: m,
            alpha: Operation::new(4, Symmetry::Symmetric),
            omega: Operation::new(3, Symmetry::Symmetric),
        };
        let report = check_witt(&r).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn extension_by_zero_fails_b() {
        // (b) with A = ∅, B = {j,k} asks α^{S∖i}_{j,∅}α^S_{i,B} = α^{S∖j}_{i,k};
        // the left side is zero without higher terms
        for m in [FbModule::standard(4), FbModule::trivial_dims(4, |_| 1)] {
            let g = make_delta_standard(&m, &Rational::zero()).unwrap();
            let w = extend_gl_to_witt(&g);
            assert_eq!(restrict_witt_to_gl(&w).unwrap(), g);
            let report = check_witt(&w).unwrap();
            assert_eq!(report.failed_conditions().into_iter().collect::<Vec<_>>(), ["(b)"], "{report}");
            assert!(report.operation.iter().all(|w| w.location.contains("A={}")), "{report}");
            assert!(report.agree());
        }
        // Specht(2,1) lives in degree 3, too high for the failing frames at N = 4
        let g = make_delta_standard(&specht(&Partition::new(vec![2, 1]), 4), &Rational::zero()).unwrap();
        assert!(check_witt(&extend_gl_to_witt(&g)).unwrap().passed());
    }

    #[test]
    fn nonzero_omega_without_higher_terms_fails_c() {
        // ω = id with no α on Sym-degree ≥ 2 cannot satisfy (c)
        let m = FbModule::trivial_dims(4, |_| 1);
        let g = make_delta_standard(&m, &Rational::one()).unwrap();
        let report = check_witt(&extend_gl_to_witt(&g)).unwrap();
        assert!(report.failed_conditions().contains("(c)"), "{report}");
        assert!(report.agree());
    }
}
