//! The idempotents `ρᵢ` of `M([n])` cut out by a gl structure: move `i` to a
//! fresh label with `α`, then rename it back.

use super::{GlRepData, Report, Witness};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::perm::Permutation;
use crate::set::Set;

/// `ρ₁, …, ρₙ` on `M([n])`; needs `n + 1` within the truncation.
pub fn rho_idempotents(r: &GlRepData, n: usize) -> Result<Vec<Matrix>> {
    if n + 1 > r.truncation().min(r.alpha.truncation()) {
        return Err(Error::Bound(format!("ρ on M([{n}]) needs truncation at least {}", n + 1)));
    }
    let (s, star) = (Set::range(n), n + 1);
    let t = s.with(star);
    (1..=n)
        .map(|i| {
            let moved = r.alpha.eval(&r.module, t, &[i], &[star])?;
            Ok(r.module.relabel(t.without(i), s, |e| if e == star { i } else { e }).mul(&moved))
        })
        .collect()
}

/// Idempotence, commutation, and `πρᵢπ⁻¹ = ρ_{π(i)}` over all of `Sₙ`.
pub fn rho_report(r: &GlRepData, n: usize) -> Result<Report> {
    let rho = rho_idempotents(r, n)?;
    let mut out = Vec::new();
    for (i, p) in rho.iter().enumerate() {
        if p.mul(p) != *p {
            out.push(Witness::new("ρ²=ρ", n, format!("i={}", i + 1)));
        }
        for (j, q) in rho.iter().enumerate().skip(i + 1) {
            if p.mul(q) != q.mul(p) {
                out.push(Witness::new("ρρ'=ρ'ρ", n, format!("i={} j={}", i + 1, j + 1)));
            }
        }
    }
    for pi in Permutation::all(n) {
        let g = r.module.act(&pi);
        let g_inv = r.module.act(&pi.inverse());
        for (i, p) in rho.iter().enumerate() {
            if g.mul(p).mul(&g_inv) != rho[pi.apply(i)] {
                out.push(Witness::new("πρπ⁻¹", n, format!("π={:?} i={}", pi.images(), i + 1)));
            }
        }
    }
    Ok(Report::new("rho", out, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checkers::make_delta_standard;
    use crate::operations::{Operation, Symmetry};
    use crate::rational::Rational;
    use crate::species::{specht, tensor, FbModule, Partition};

    #[test]
    fn delta_standard_gives_identities() {
        let v = FbModule::standard(4);
        for m in [tensor(&v, &v).unwrap(), specht(&Partition::new(vec![2, 1]), 4)] {
            let r = make_delta_standard(&m, &Rational::from_int(3)).unwrap();
            for n in 0..=3 {
                let rho = rho_idempotents(&r, n).unwrap();
                assert!(rho.iter().all(|p| *p == Matrix::identity(m.dim(n))));
                assert!(rho_report(&r, n).unwrap().passed());
            }
        }
    }

    #[test]
    fn zero_alpha_gives_zero() {
        let m = FbModule::standard(4);
        let r = GlRepData {
            module: m,
            alpha: Operation::new(4, Symmetry::Symmetric),
            omega: Operation::new(3, Symmetry::Symmetric),
        };
        assert!(rho_idempotents(&r, 3).unwrap().iter().all(Matrix::is_zero));
        assert!(rho_report(&r, 3).unwrap().passed());
        assert!(rho_idempotents(&r, 4).is_err());
    }

    #[test]
    fn scaled_alpha_is_not_idempotent() {
        let m = FbModule::trivial_dims(4, |_| 2);
        let mut r = make_delta_standard(&m, &Rational::zero()).unwrap();
        r.alpha = r.alpha.scale(&Rational::from_int(2));
        let report = rho_report(&r, 2).unwrap();
        assert!(report.failed_conditions().contains("ρ²=ρ"), "{report}");
    }
}
