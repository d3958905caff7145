//! Curried `gl(𝕍)`: a map `a: 𝕍⊗M -> 𝕍⊗M` with `[a₁,a₂] = τ(a₁ − a₂)`,
//! equivalently operations `α, ω` that commute and satisfy
//! `α^{S∖i}_{j,k} ∘ α^{S∖k}_{i,j} = α^{S∖j}_{i,k}`.

use super::{check_simple, commute_witnesses, map_witnesses, tail_frame, GlRepData, Report, Witness};
use crate::error::Result;
use crate::operations::{op_to_map, Operation, Slot, SymSide, Symmetry};
use crate::rational::Rational;
use crate::species::{associator, associator_inverse, extend, lift, swap_outer, tensor, FbModule, FbMorphism};

/// `α^S_{i,j}` relabels `i` to `j`, `ω = δ·id`.
pub fn make_delta_standard(module: &FbModule, delta: &Rational) -> Result<GlRepData> {
    let n = module.truncation();
    let alpha = Operation::tabulate(n, Symmetry::Symmetric, Slot::all(1, 1, 0, n), |s| {
        let (full, x, y) = s.frame();
        let (i, j) = (x.nth(0), y.nth(0));
        Ok(module.relabel(full.without(j), full.without(i), |e| if e == i { j } else { e }))
    })?;
    let omega = Operation::scalar(module, n.saturating_sub(1), delta)?;
    Ok(GlRepData { module: module.clone(), alpha, omega })
}

/// `a: 𝕍⊗M -> 𝕍⊗M`.
pub fn gl_action(r: &GlRepData) -> Result<FbMorphism> {
    let side = SymSide::Power(1);
    op_to_map(&r.phi()?, &r.module, side, side)
}

/// The action on `𝕍⊗(X⊗M)` of the tensor product of two representations.
pub fn tensor_action(x: &FbModule, a_x: &FbMorphism, m: &FbModule, a_m: &FbMorphism) -> Result<FbMorphism> {
    let v = FbModule::standard(x.truncation());
    let vx = tensor(&v, x)?;
    let vm = tensor(&v, m)?;
    let on_x = associator(&v, x, m)?.compose(&extend(a_x, (&vx, &vx), m)).compose(&associator_inverse(&v, x, m)?);
    let on_m = swap_outer(x, &v, m)?.compose(&lift(x, a_m, (&vm, &vm))).compose(&swap_outer(&v, x, m)?);
    Ok(on_x.add(&on_m))
}

pub fn tensor_product(r1: &GlRepData, r2: &GlRepData) -> Result<GlRepData> {
    let a = tensor_action(&r1.module, &gl_action(r1)?, &r2.module, &gl_action(r2)?)?;
    GlRepData::from_action(tensor(&r1.module, &r2.module)?, &a)
}

/// `f: X⊗M -> X'⊗M` acting on the outer factor of `X⊗(Y⊗M)`.
pub(super) fn outer(f: &FbMorphism, (x, x2): (&FbModule, &FbModule), y: &FbModule, m: &FbModule) -> Result<FbMorphism> {
    let (xm, x2m) = (tensor(x, m)?, tensor(x2, m)?);
    Ok(swap_outer(y, x2, m)?.compose(&lift(y, f, (&xm, &x2m))).compose(&swap_outer(x, y, m)?))
}

/// `a₁a₂ − a₂a₁: X⊗(X⊗M) -> X'⊗(X'⊗M)` for `a: X⊗M -> X'⊗M`.
pub(super) fn commutator(a: &FbMorphism, x: &FbModule, x2: &FbModule, m: &FbModule) -> Result<FbMorphism> {
    let (xm, x2m) = (tensor(x, m)?, tensor(x2, m)?);
    let a1a2 = outer(a, (x, x2), x2, m)?.compose(&lift(x, a, (&xm, &x2m)));
    let a2a1 = lift(x2, a, (&xm, &x2m)).compose(&outer(a, (x, x2), x, m)?);
    Ok(a1a2.sub(&a2a1))
}

/// Condition (b): `α^{S∖i}_{j,k} ∘ α^{S∖k}_{i,j} = α^{S∖j}_{i,k}`.
pub(super) fn gl_composition_witnesses(r: &GlRepData) -> Result<Vec<Witness>> {
    let (m, alpha) = (&r.module, &r.alpha);
    let mut out = Vec::new();
    let top = alpha.truncation().min(m.truncation());
    for p in 0..top.saturating_sub(1) {
        let (s, l) = tail_frame(p, 3);
        let (i, j, k) = (l[0], l[1], l[2]);
        let lhs = alpha.eval(m, s.without(i), &[j], &[k])?.mul(&alpha.eval(m, s.without(k), &[i], &[j])?);
        let rhs = alpha.eval(m, s.without(j), &[i], &[k])?;
        if lhs != rhs {
            out.push(Witness::new("(b)", s.len(), format!("S={s} i={i} j={j} k={k}")));
        }
    }
    Ok(out)
}

/// Tensor route: `[a₁,a₂] = τ(a₁ − a₂)` on `𝕍⊗𝕍⊗M`.
pub(super) fn gl_tensor_witnesses(module: &FbModule, a: &FbMorphism) -> Result<Vec<Witness>> {
    let v = FbModule::standard(module.truncation());
    let vm = tensor(&v, module)?;
    let a1 = outer(a, (&v, &v), &v, module)?;
    let a2 = lift(&v, a, (&vm, &vm));
    let tau = swap_outer(&v, &v, module)?;
    Ok(map_witnesses("[a1,a2]=τ(a1-a2)", &commutator(a, &v, &v, module)?, &tau.compose(&a1.sub(&a2))))
}

pub fn check_gl(r: &GlRepData) -> Result<Report> {
    check_simple(&r.alpha, "α", Some((1, 1)))?;
    check_simple(&r.omega, "ω", Some((0, 0)))?;
    let (m, alpha, omega) = (&r.module, &r.alpha, &r.omega);
    let mut ops = commute_witnesses(m, &[("α,α", alpha, alpha), ("α,ω", alpha, omega), ("ω,ω", omega, omega)], "(a)")?;
    ops.extend(gl_composition_witnesses(r)?);
    let tensor = gl_tensor_witnesses(&r.module, &gl_action(r)?)?;
    Ok(Report::new("gl", ops, Some(tensor)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use crate::species::{braiding, specht, Partition};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn bank(n: usize) -> Vec<FbModule> {
        let v = FbModule::standard(n);
        vec![
            FbModule::unit(n),
            v.clone(),
            tensor(&v, &v).unwrap(),
            specht(&Partition::new(vec![2, 1]), n),
            specht(&Partition::new(vec![1, 1]), n).direct_sum(&FbModule::trivial_dims(n, |_| 1)).unwrap(),
        ]
    }

    #[test]
    fn standard_module_with_zero_delta_acts_by_the_swap() {
        let v = FbModule::standard(3);
        let r = make_delta_standard(&v, &q(0)).unwrap();
        let a = gl_action(&r).unwrap();
        assert_eq!(a.maps[2], braiding(&v, &v).maps[2]);
        let report = check_gl(&r).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn delta_standard_structures_pass() {
        for m in bank(4) {
            for d in [0, 1, -2] {
                let r = make_delta_standard(&m, &q(d)).unwrap();
                assert!(r.omega.blocks().all(|(s, c)| *c == Matrix::scalar(m.dim(s.p), &q(d))));
                let report = check_gl(&r).unwrap();
                assert!(report.passed() && report.agree(), "δ={d}\n{report}");
            }
        }
    }

    #[test]
    fn zero_action_passes() {
        let m = specht(&Partition::new(vec![2]), 4);
        let n = m.truncation();
        let r = GlRepData {
            module: m,
            alpha: Operation::new(n, Symmetry::Symmetric),
            omega: Operation::new(n - 1, Symmetry::Symmetric),
        };
        assert!(check_gl(&r).unwrap().passed());
    }

    #[test]
    fn broken_composition_law_is_located() {
        // scaling α by 2 keeps it commuting with itself but breaks (b)
        let m = FbModule::trivial_dims(4, |_| 1);
        let mut r = make_delta_standard(&m, &q(1)).unwrap();
        r.alpha = r.alpha.scale(&q(2));
        let report = check_gl(&r).unwrap();
        assert!(report.failed_conditions().contains("(b)"), "{report}");
        assert!(!report.tensor_failures().is_empty());
        assert!(report.agree());
        let w = report.operation.iter().find(|w| w.condition == "(b)").unwrap();
        assert_eq!(w.degree, 3);
    }

    #[test]
    fn delta_standard_is_functorial() {
        // the projection 𝕍⊗𝕍 -> sign-part is equivariant and intertwines the actions
        let v = FbModule::standard(3);
        let vv = tensor(&v, &v).unwrap();
        let f = FbMorphism::identity(&vv).sub(&braiding(&v, &v));
        let r = make_delta_standard(&vv, &q(3)).unwrap();
        let a = gl_action(&r).unwrap();
        let vvv = tensor(&v, &vv).unwrap();
        let lifted = lift(&v, &f, (&vv, &vv));
        assert!(lifted.is_equivariant(&vvv, &vvv));
        assert_eq!(a.compose(&lifted), lifted.compose(&a));
    }

    #[test]
    fn tensor_products_and_twists() {
        let n = 4;
        let v = FbModule::standard(n);
        let r1 = make_delta_standard(&v, &q(1)).unwrap();
        let r2 = make_delta_standard(&FbModule::unit(n), &q(-2)).unwrap();
        let prod = tensor_product(&r1, &r2).unwrap();
        assert!(check_gl(&prod).unwrap().passed());
        let vv = tensor_product(&r1, &r1).unwrap();
        assert!(check_gl(&vv).unwrap().passed());
        // 𝟏(δ₁)⊗𝟏(δ₂) = 𝟏(δ₁+δ₂)
        let unit = FbModule::unit(n);
        let one = |d: i64| make_delta_standard(&unit, &q(d)).unwrap();
        let lhs = tensor_product(&one(2), &one(-5)).unwrap();
        assert_eq!(gl_action(&lhs).unwrap(), gl_action(&one(-3)).unwrap());
        let twisted = r1.twist(&q(7)).unwrap();
        assert!(check_gl(&twisted).unwrap().passed());
        assert_eq!(twisted, make_delta_standard(&v, &q(8)).unwrap());
    }

    mod proptests {
        use super::*;
        use crate::species::{specht, Partition};
        use proptest::prelude::*;

        fn small_rational() -> impl Strategy<Value = Rational> {
            (-6i64..=6, 1i64..=3).prop_map(|(n, d)| Rational::new(n, d))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]

            #[test]
            fn delta_standard_products_pass_and_twists_add(d1 in small_rational(), d2 in small_rational(), which in 0usize..3) {
                let n = 4;
                let m = match which {
                    0 => FbModule::standard(n),
                    1 => specht(&Partition::new(vec![1, 1]), n),
                    _ => FbModule::unit(n),
                };
                let r = make_delta_standard(&m, &d1).unwrap();
                let report = check_gl(&r).unwrap();
                prop_assert!(report.passed() && report.agree());
                let one = make_delta_standard(&FbModule::unit(n), &d2).unwrap();
                prop_assert!(check_gl(&tensor_product(&r, &one).unwrap()).unwrap().passed());
                prop_assert_eq!(r.twist(&d2).unwrap(), make_delta_standard(&m, &(&d1 + &d2)).unwrap());
                let units = tensor_product(&make_delta_standard(&FbModule::unit(n), &d1).unwrap(), &one).unwrap();
                let sum = make_delta_standard(&FbModule::unit(n), &(&d1 + &d2)).unwrap();
                prop_assert_eq!(gl_action(&units).unwrap(), gl_action(&sum).unwrap());
            }
        }
    }
}
