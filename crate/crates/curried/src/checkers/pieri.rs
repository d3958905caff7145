//! Eigenvalues of the 0-standard action on `𝕍⊗Specht(λ)`.
//!
//! The induction product `𝕍⊗M_λ` is multiplicity free, so `a` acts on each
//! summand `M_μ` by a scalar attached to the added box. Both sign conventions
//! for that scalar are tested; the report says which ones hold.

use std::fmt;

use super::{gl_action, make_delta_standard};
use crate::error::Result;
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::species::{hook_length_dim, specht, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Convention {
    /// `μ_i − i` for the box added in row `i`.
    ColumnMinusRow,
    /// `i − μ_i`.
    RowMinusColumn,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::ColumnMinusRow, Convention::RowMinusColumn];

    pub fn content(self, row: usize, mu: &Partition) -> i64 {
        let c = mu.parts()[row - 1] as i64 - row as i64;
        match self {
            Convention::ColumnMinusRow => c,
            Convention::RowMinusColumn => -c,
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::ColumnMinusRow => "μ_i − i",
            Convention::RowMinusColumn => "i − μ_i",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenspace {
    pub mu: Partition,
    pub eigenvalue: i64,
    /// `dim ker(a − c)`.
    pub kernel_dim: usize,
    pub hook_dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConventionOutcome {
    pub convention: Convention,
    pub product_vanishes: bool,
    /// Proper subsets of the addable boxes whose product already vanishes.
    pub vanishing_subproducts: Vec<Vec<Partition>>,
    pub eigenspaces: Vec<Eigenspace>,
}

impl ConventionOutcome {
    pub fn multiplicities_match(&self) -> bool {
        self.eigenspaces.iter().all(|e| e.kernel_dim as u64 == e.hook_dim)
    }

    pub fn holds(&self) -> bool {
        self.product_vanishes && self.vanishing_subproducts.is_empty() && self.multiplicities_match()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieriReport {
    pub lambda: Partition,
    /// Dimension of `(𝕍⊗M_λ)([|λ|+1])`.
    pub dim: usize,
    pub outcomes: Vec<ConventionOutcome>,
}

impl PieriReport {
    pub fn verified_by(&self) -> Vec<Convention> {
        self.outcomes.iter().filter(|o| o.holds()).map(|o| o.convention).collect()
    }

    /// The `μ_i − i` convention holds.
    pub fn passed(&self) -> bool {
        self.verified_by().contains(&Convention::ColumnMinusRow)
    }
}

impl fmt::Display for PieriReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ={} dim={}", self.lambda, self.dim)?;
        for o in &self.outcomes {
            let eig: Vec<String> =
                o.eigenspaces.iter().map(|e| format!("{}:{}×{}", e.mu, e.eigenvalue, e.kernel_dim)).collect();
            write!(f, "; {}: {} [{}]", o.convention, if o.holds() { "holds" } else { "fails" }, eig.join(" "))?;
        }
        Ok(())
    }
}

fn shifted(a: &Matrix, c: i64) -> Matrix {
    a.sub(&Matrix::scalar(a.rows(), &Rational::from_int(c)))
}

/// `a` on degree `|λ|+1` of `𝕍⊗Specht(λ)` with the 0-standard structure.
pub fn pieri_action(lambda: &Partition) -> Result<Matrix> {
    let n = lambda.size();
    let module = specht(lambda, n + 1);
    let r = make_delta_standard(&module, &Rational::zero())?;
    Ok(gl_action(&r)?.maps.swap_remove(n + 1))
}

pub fn pieri_check(lambda: &Partition) -> Result<PieriReport> {
    let a = pieri_action(lambda)?;
    let addable = lambda.addable();
    let outcomes = Convention::ALL
        .iter()
        .map(|&conv| {
            let factors: Vec<Matrix> = addable.iter().map(|(row, mu)| shifted(&a, conv.content(*row, mu))).collect();
            let product = |mask: usize| {
                (0..factors.len())
                    .filter(|b| mask >> b & 1 == 1)
                    .fold(Matrix::identity(a.rows()), |acc, b| acc.mul(&factors[b]))
            };
            let full = (1 << factors.len()) - 1;
            let vanishing_subproducts = (0..full)
                .filter(|&mask| product(mask).is_zero())
                .map(|mask| (0..addable.len()).filter(|b| mask >> b & 1 == 1).map(|b| addable[b].1.clone()).collect())
                .collect();
            let eigenspaces = addable
                .iter()
                .zip(&factors)
                .map(|((row, mu), f)| Eigenspace {
                    mu: mu.clone(),
                    eigenvalue: conv.content(*row, mu),
                    kernel_dim: a.rows() - f.rank(),
                    hook_dim: hook_length_dim(mu),
                })
                .collect();
            ConventionOutcome {
                convention: conv,
                product_vanishes: product(full).is_zero(),
                vanishing_subproducts,
                eigenspaces,
            }
        })
        .collect();
    Ok(PieriReport { lambda: lambda.clone(), dim: a.rows(), outcomes })
}

/// The partitions `∅, (1), (2), (1,1), (2,1)`.
pub fn pieri_battery() -> Vec<Partition> {
    [vec![], vec![1], vec![2], vec![1, 1], vec![2, 1]].into_iter().map(Partition::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_partition_gives_the_zero_map() {
        let a = pieri_action(&Partition::new(vec![])).unwrap();
        assert_eq!(a.rows(), 1);
        assert!(a.is_zero());
    }

    #[test]
    fn contents_of_small_partitions() {
        let mu = Partition::new(vec![2, 1]);
        assert_eq!(Convention::ColumnMinusRow.content(1, &mu), 1);
        assert_eq!(Convention::ColumnMinusRow.content(2, &mu), -1);
        assert_eq!(Convention::RowMinusColumn.content(2, &mu), 1);
    }

    #[test]
    fn battery_eigenvalues_are_contents() {
        for lambda in pieri_battery() {
            let r = pieri_check(&lambda).unwrap();
            assert!(r.passed(), "{r}");
            let total: usize = r.outcomes[0].eigenspaces.iter().map(|e| e.kernel_dim).sum();
            assert_eq!(total, r.dim, "{r}");
        }
    }

    #[test]
    fn sign_is_detected_on_a_row() {
        // (2) grows to (3) with content 2 and (2,1) with content −1: not symmetric
        let r = pieri_check(&Partition::new(vec![2])).unwrap();
        assert_eq!(r.verified_by(), vec![Convention::ColumnMinusRow]);
    }
}
