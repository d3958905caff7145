//! The commuting square of two operations.
//!
//! For `x̄, ȳ, w̄, z̄ ⊆ S` the square compares
//! `ψ^{S∖x̄}_{w̄,z̄} ∘ φ^{S∖z̄}_{x̄,ȳ}` with `φ^{S∖w̄}_{x̄,ȳ} ∘ ψ^{S∖ȳ}_{w̄,z̄}`.
//! Both composites are defined only when `x̄ ∪ ȳ` misses `w̄ ∪ z̄`; `x̄` may
//! meet `ȳ` and `w̄` may meet `z̄`. By naturality it suffices to test one frame
//! per vector of Venn-region sizes, with regions laid out as consecutive blocks.

use std::fmt;

use super::Operation;
use crate::error::Result;
use crate::rational::Rational;
use crate::set::{consecutive_blocks, size_vectors, Set};
use crate::species::FbModule;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Frame {
    pub s: Set,
    pub x: Set,
    pub y: Set,
    pub w: Set,
    pub z: Set,
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S={} x={} y={} w={} z={}", self.s, self.x, self.y, self.w, self.z)
    }
}

/// Every frame where `φ` is evaluated within `nf` and `ψ` within `ns`.
///
/// Region order: rest, x̄ only, ȳ only, x̄∩ȳ, w̄ only, z̄ only, w̄∩z̄.
fn frames(phi: &Operation, psi: &Operation, nf: usize, ns: usize) -> Vec<Frame> {
    let mut out = Vec::new();
    for v in size_vectors(7, nf + ns) {
        let (xo, yo, xy, wo, zo, wz) = (v[1], v[2], v[3], v[4], v[5], v[6]);
        if !phi.has(xo, yo, xy) || !psi.has(wo, zo, wz) {
            continue;
        }
        let total: usize = v.iter().sum();
        let (x, y, w, z) = (xo + xy, yo + xy, wo + wz, zo + wz);
        if total - w.min(z) > nf || total - x.min(y) > ns {
            continue;
        }
        let b = consecutive_blocks(&v);
        out.push(Frame {
            s: Set::range(total),
            x: b[1].union(b[3]),
            y: b[2].union(b[3]),
            w: b[4].union(b[6]),
            z: b[5].union(b[6]),
        });
    }
    out
}

/// Every frame where `ψ∘φ ≠ sign·(φ∘ψ)` around the square.
pub fn commute_failures(module: &FbModule, phi: &Operation, psi: &Operation, sign: &Rational) -> Result<Vec<Frame>> {
    let nf = phi.truncation().min(module.truncation());
    let ns = psi.truncation().min(module.truncation());
    let mut out = Vec::new();
    for f in frames(phi, psi, nf, ns) {
        let lhs =
            psi.eval_sets(module, f.s.minus(f.x), f.w, f.z)?.mul(&phi.eval_sets(module, f.s.minus(f.z), f.x, f.y)?);
        let rhs =
            phi.eval_sets(module, f.s.minus(f.w), f.x, f.y)?.mul(&psi.eval_sets(module, f.s.minus(f.y), f.w, f.z)?);
        if lhs != rhs.scale(sign) {
            out.push(f);
        }
    }
    Ok(out)
}

/// First frame where `ψ∘φ ≠ sign·(φ∘ψ)` around the square, if any.
pub fn commute_witness(module: &FbModule, phi: &Operation, psi: &Operation, sign: &Rational) -> Result<Option<Frame>> {
    Ok(commute_failures(module, phi, psi, sign)?.into_iter().next())
}

pub fn commute_check(module: &FbModule, phi: &Operation, psi: &Operation) -> Result<bool> {
    Ok(commute_witness(module, phi, psi, &Rational::one())?.is_none())
}

pub fn skew_commute_check(module: &FbModule, phi: &Operation, psi: &Operation) -> Result<bool> {
    Ok(commute_witness(module, phi, psi, &Rational::from_int(-1))?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use crate::operations::{Slot, Symmetry};
    use crate::species::{specht, Partition};

    fn relabeling_op(module: &FbModule, n: usize) -> Operation {
        Operation::tabulate(n, Symmetry::Symmetric, Slot::all(1, 1, 0, n), |s| {
            let (full, x, y) = s.frame();
            let (i, j) = (x.nth(0), y.nth(0));
            Ok(module.relabel(full.without(j), full.without(i), |e| if e == i { j } else { e }))
        })
        .unwrap()
    }

    #[test]
    fn identity_commutes_with_everything() {
        let m = specht(&Partition::new(vec![2, 1]), 4);
        let id = Operation::identity(&m, 4).unwrap();
        let alpha = relabeling_op(&m, 4);
        assert!(commute_check(&m, &id, &alpha).unwrap());
        assert!(commute_check(&m, &alpha, &id).unwrap());
    }

    #[test]
    fn relabelings_commute_with_themselves() {
        for lambda in [vec![1], vec![2, 1], vec![1, 1]] {
            let m = specht(&Partition::new(lambda.clone()), 5).direct_sum(&FbModule::trivial_dims(5, |_| 1)).unwrap();
            let alpha = relabeling_op(&m, 5);
            assert!(commute_check(&m, &alpha, &alpha).unwrap(), "{lambda:?}");
        }
    }

    #[test]
    fn perturbed_relabeling_is_caught() {
        // on 𝕍⊗𝕍 only the slot with one rest label matters, and any 2×2 block is natural
        let v = FbModule::standard(4);
        let m = crate::species::tensor(&v, &v).unwrap();
        let mut alpha = relabeling_op(&m, 4);
        assert!(commute_check(&m, &alpha, &alpha).unwrap());
        let slot = Slot::new(1, 1, 0, 1);
        let mut c = alpha.get(slot).unwrap().clone();
        c.add_at(0, 1, &Rational::one());
        alpha.insert(slot, c).unwrap();
        assert!(alpha.naturality_failures(&m).is_empty());
        let w = commute_witness(&m, &alpha, &alpha, &Rational::one()).unwrap().expect("witness");
        assert_eq!(w.s.len(), 4);
    }

    /// Multiplication by `t` and the degree-weighted derivative on the
    /// trivial species do not commute: the two paths see the weight at
    /// ambient sizes that differ by one.
    #[test]
    fn an_operation_need_not_commute_with_itself() {
        let m = FbModule::trivial_dims(4, |_| 1);
        let mut op = Operation::new(4, Symmetry::Symmetric);
        for s in Slot::all(0, 1, 0, 4) {
            op.insert(s, Matrix::identity(1)).unwrap();
        }
        for s in Slot::all(1, 0, 0, 4) {
            op.insert(s, Matrix::scalar(1, &Rational::from_int(s.ambient() as i64))).unwrap();
        }
        let w = commute_witness(&m, &op, &op, &Rational::one()).unwrap().expect("witness");
        assert_eq!(w.x.len() + w.y.len(), 1);
        // each half on its own does commute with itself
        let up = op.filter(|s| s.n == 1);
        let down = op.filter(|s| s.m == 1);
        assert!(commute_check(&m, &up, &up).unwrap());
        assert!(commute_check(&m, &down, &down).unwrap());
    }

    #[test]
    fn skew_commuting_mechanics() {
        // a nonzero op that commutes with itself cannot also skew-commute
        let m = FbModule::trivial_dims(3, |_| 1);
        let mut up = Operation::new(3, Symmetry::Symmetric);
        for s in Slot::all(0, 1, 0, 3) {
            up.insert(s, Matrix::identity(1)).unwrap();
        }
        assert!(commute_check(&m, &up, &up).unwrap());
        assert!(!skew_commute_check(&m, &up, &up).unwrap());
        assert!(skew_commute_check(&m, &up, &up.scale(&Rational::zero())).unwrap());
    }
}
