//! Curried `sp(𝕍⊕𝕍*)`: gl data plus `b: Div²𝕍⊗M -> M` and
//! `b′: M -> Sym²𝕍⊗M`, carried by the operations `β` and `β′`.

use super::gl::{gl_action, gl_composition_witnesses, gl_tensor_witnesses, make_delta_standard, tensor_action};
use super::{check_simple, commute_witnesses, map_witnesses, tail_frame, Report, SpRepData, Witness};
use crate::error::Result;
use crate::operations::{op_to_map, sym_comult_between, sym_mult_between, Operation, SymSide};
use crate::rational::Rational;
use crate::species::{associator, associator_inverse, extend, lift, swap_outer, sym_power, tensor, FbModule};

fn fits(module: &FbModule, terms: &[(&Operation, usize)]) -> bool {
    terms.iter().all(|(op, d)| *d <= op.truncation() && *d <= module.truncation())
}

fn operation_witnesses(r: &SpRepData) -> Result<Vec<Witness>> {
    let m = r.module();
    let (alpha, omega, beta, beta2) = (&r.gl.alpha, &r.gl.omega, &r.beta, &r.beta_prime);
    let ops = [alpha, omega, beta, beta2];
    let names = ["α,α", "α,ω", "α,β", "α,β′", "ω,ω", "ω,β", "ω,β′", "β,β", "β,β′", "β′,β′"];
    let mut pairs = Vec::new();
    for i in 0..4 {
        for j in i..4 {
            pairs.push((names[pairs.len()], ops[i], ops[j]));
        }
    }
    let mut out = commute_witnesses(m, &pairs, "(a)")?;
    out.extend(gl_composition_witnesses(&r.gl)?);
    let two = Rational::from_int(2);
    for p in 0..=m.truncation() {
        let (s, l) = tail_frame(p, 3);
        let (i, j, k) = (l[0], l[1], l[2]);
        let at = format!("S={s} i={i} j={j} k={k}");
        let d = s.len();
        if fits(m, &[(alpha, d), (beta, d - 1)]) {
            let lhs = alpha.eval(m, s, &[i], &[j])?.mul(&beta.eval(m, s.without(j), &[], &[i, k])?);
            if lhs != beta.eval(m, s.without(i), &[], &[j, k])? {
                out.push(Witness::new("(c)", d, at.clone()));
            }
        }
        if fits(m, &[(alpha, d), (beta2, d - 1)]) {
            let lhs = beta2.eval(m, s.without(i), &[j, k], &[])?.mul(&alpha.eval(m, s, &[i], &[j])?);
            if lhs != beta2.eval(m, s.without(j), &[i, k], &[])? {
                out.push(Witness::new("(c)", d, at.clone()));
            }
        }
        if fits(m, &[(beta, d), (beta2, d), (alpha, d - 1)]) {
            let lhs = beta2.eval(m, s, &[i, j], &[])?.mul(&beta.eval(m, s, &[], &[j, k])?);
            if lhs != alpha.eval(m, s.without(j), &[i], &[k])? {
                out.push(Witness::new("(d)", d, at));
            }
        }
        let (s, l) = tail_frame(p, 2);
        let (i, j) = (l[0], l[1]);
        if fits(m, &[(beta, p + 2), (beta2, p + 2), (omega, p)]) {
            let lhs = beta2.eval(m, s, &[i, j], &[])?.mul(&beta.eval(m, s, &[], &[i, j])?);
            if lhs != omega.eval(m, s.without(i).without(j), &[], &[])?.scale(&two) {
                out.push(Witness::new("(e)", p + 2, format!("S={s} i={i} j={j}")));
            }
        }
    }
    Ok(out)
}

/// Proposition-level identities on the maps `a, b, b′`.
fn tensor_witnesses(r: &SpRepData) -> Result<Vec<Witness>> {
    let m = r.module();
    let n = m.truncation();
    let a = gl_action(&r.gl)?;
    let mut out = gl_tensor_witnesses(m, &a)?;

    let v = FbModule::standard(n);
    let two = sym_power(2, n);
    let (p0, p2) = (SymSide::Power(0), SymSide::Power(2));
    let b = op_to_map(&r.beta, m, p2, p0)?;
    let b2 = op_to_map(&r.beta_prime, m, p0, p2)?;
    let two_m = tensor(&two, m)?;
    let vm = tensor(&v, m)?;
    let vv = tensor(&v, &v)?;

    // (b): commutative product, cocommutative coproduct
    let tau = swap_outer(&two, &two, m)?;
    let bb = b.compose(&lift(&two, &b, (&two_m, m)));
    out.extend(map_witnesses("(b) bb2=bb1", &bb, &bb.compose(&tau)));
    let cc = lift(&two, &b2, (m, &two_m)).compose(&b2);
    out.extend(map_witnesses("(b) b'1b'=b'2b'", &tau.compose(&cc), &cc));

    // (c): b, b′ intertwine the gl actions, with Div² carrying the 0-standard one
    let a_two = gl_action(&make_delta_standard(&two, &Rational::zero())?)?;
    let a_two_m = tensor_action(&two, &a_two, m, &a)?;
    let vb = lift(&v, &b, (&two_m, m));
    out.extend(map_witnesses("(c) b", &a.compose(&vb), &vb.compose(&a_two_m)));
    let vb2 = lift(&v, &b2, (m, &two_m));
    out.extend(map_witnesses("(c) b'", &a_two_m.compose(&vb2), &vb2.compose(&a)));

    // (d): b′b − b₁b′₂ = (m⊗1)(1⊗a)(Δ⊗1)
    let b1b2 = lift(&two, &b, (&two_m, m)).compose(&swap_outer(&two, &two, m)?).compose(&lift(&two, &b2, (m, &two_m)));
    let lhs = b2.compose(&b).sub(&b1b2);
    let delta = sym_comult_between(p2, SymSide::Power(1), SymSide::Power(1), n);
    let mult = sym_mult_between(SymSide::Power(1), SymSide::Power(1), p2, n);
    let rhs = extend(&mult, (&vv, &two), m)
        .compose(&associator_inverse(&v, &v, m)?)
        .compose(&lift(&v, &a, (&vm, &vm)))
        .compose(&associator(&v, &v, m)?)
        .compose(&extend(&delta, (&two, &vv), m));
    out.extend(map_witnesses("(d)", &lhs, &rhs));
    Ok(out)
}

pub fn check_sp(r: &SpRepData) -> Result<Report> {
    check_simple(&r.gl.alpha, "α", Some((1, 1)))?;
    check_simple(&r.gl.omega, "ω", Some((0, 0)))?;
    check_simple(&r.beta, "β", Some((0, 2)))?;
    check_simple(&r.beta_prime, "β′", Some((2, 0)))?;
    Ok(Report::new("sp", operation_witnesses(r)?, Some(tensor_witnesses(r)?)))
}
