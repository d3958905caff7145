//! The module of colorings `S -> [x]`, on which `η_{i,A}` acts by merging
//! `A` into `i` and every `ζ` vanishes.

use super::{restricted_to_witt, slots, CategoryModule, Family};
use crate::checkers::WittRepData;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::operations::{Operation, Symmetry};
use crate::rational::Rational;
use crate::set::Set;
use crate::species::{Degree, FbModule};

/// Colorings of an `n`-set are indexed base `x`, position 0 least significant.
fn coloring(mut code: usize, x: usize, n: usize) -> Vec<usize> {
    (0..n)
        .map(|_| {
            let c = code % x;
            code /= x;
            c
        })
        .collect()
}

fn code(colors: &[usize], x: usize) -> usize {
    colors.iter().rev().fold(0, |acc, c| acc * x + c)
}

/// `f ↦ f∘g` for `g: S∖i -> S∖A` sending `A` to `i`.
fn merge_matrix(s: Set, i: usize, a: Set, x: usize) -> Matrix {
    let (src, dst) = (s.minus(a), s.without(i));
    let mut out = Matrix::zeros(x.pow(dst.len() as u32), x.pow(src.len() as u32));
    for col in 0..x.pow(src.len() as u32) {
        let f = coloring(col, x, src.len());
        let h: Vec<usize> = dst.iter().map(|t| f[src.rank(if a.contains(t) { i } else { t })]).collect();
        out.add_at(code(&h, x), col, &Rational::one());
    }
    out
}

/// The coloring module with `x` colors, truncated at `N`.
pub fn fa_module(x: usize, truncation: usize) -> Result<CategoryModule> {
    if x == 0 || (x as u128).pow(truncation as u32) > 1 << 12 {
        return Err(Error::Bound(format!("{x}^{truncation} colorings is out of range")));
    }
    let degrees = (0..=truncation)
        .map(|n| Degree { dim: x.pow(n as u32), gens: (1..n).map(|j| swap_matrix(n, j, x)).collect() })
        .collect();
    let eta = Operation::tabulate(truncation, Symmetry::Symmetric, slots(truncation, |a, _| a == 1), |s| {
        let (full, i, a) = s.frame();
        Ok(merge_matrix(full, i.nth(0), a, x))
    })?;
    let zeta = Operation::new(truncation.saturating_sub(1), Symmetry::Symmetric);
    Ok(CategoryModule {
        family: Family::Restricted(Rational::zero()),
        module: FbModule::from_degrees(degrees),
        generators: [("eta".to_string(), eta), ("zeta".to_string(), zeta)].into(),
    })
}

/// Action of the transposition `(j j+1)` on colorings of `[n]`.
fn swap_matrix(n: usize, j: usize, x: usize) -> Matrix {
    let size = x.pow(n as u32);
    let mut out = Matrix::zeros(size, size);
    for col in 0..size {
        let mut f = coloring(col, x, n);
        f.swap(j - 1, j);
        out.add_at(code(&f, x), col, &Rational::one());
    }
    out
}

/// The Witt data of a coloring module; its `ω` is identically zero.
pub fn fa_to_witt(m: &CategoryModule) -> Result<WittRepData> {
    let w = restricted_to_witt(m)?;
    if !w.omega.is_zero() {
        return Err(Error::CheckFailed("the ζ family of a coloring module must vanish".into()));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checkers::{check_witt, is_delta_standard, restrict_witt_to_gl};
    use crate::functors::restricted_relations;

    #[test]
    fn colorings_give_zero_standard_witt_data() {
        for x in [1, 2, 3] {
            let m = fa_module(x, 4).unwrap();
            assert!(m.module.validate().is_empty());
            let w = fa_to_witt(&m).unwrap();
            let report = check_witt(&w).unwrap();
            assert!(report.passed(), "x={x}\n{report}");
            assert!(is_delta_standard(&restrict_witt_to_gl(&w).unwrap(), &Rational::zero()).unwrap());
        }
        assert!(restricted_relations(3, &Rational::zero()).unwrap().passed());
    }

    #[test]
    fn merging_two_colors_identifies_them() {
        // η^{[2]}_{1,{2}} sends a coloring of {2} to the same color on {1}
        let m = merge_matrix(Set::range(2), 1, Set::singleton(2), 3);
        assert_eq!(m, Matrix::identity(3));
        // merging {2,3} into 1 on [3]: a color on {1} becomes a constant coloring of {2,3}
        let m = merge_matrix(Set::range(3), 1, Set::from_labels([2, 3]), 2);
        assert_eq!((m.rows(), m.cols()), (4, 2));
        assert_eq!((m.get(0, 0), m.get(3, 1), m.nnz()), (Rational::one(), Rational::one(), 2));
    }
}
