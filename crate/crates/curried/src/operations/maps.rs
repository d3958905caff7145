//! Symmetric operations as maps `Symⁿ𝕍⊗M -> Symᵐ𝕍⊗M`, through
//! `a(t^B⊗x) = Σ_A t^A⊗φ^S_{A,B}(x)`.

use super::{Operation, Slot, Symmetry};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::set::Set;
use crate::species::{sym_algebra, sym_power, tensor, FbModule, FbMorphism, TensorLayout};

/// The symmetric-power factor on one side of the map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymSide {
    Power(usize),
    /// All of `Sym(𝕍)`.
    All,
}

impl SymSide {
    pub fn module(self, truncation: usize) -> FbModule {
        match self {
            SymSide::Power(k) => sym_power(k, truncation),
            SymSide::All => sym_algebra(truncation),
        }
    }

    pub fn allows(self, size: usize) -> bool {
        match self {
            SymSide::Power(k) => k == size,
            SymSide::All => true,
        }
    }

    /// `Sym⊗M` for this side.
    pub fn tensor_with(self, module: &FbModule) -> FbModule {
        tensor(&self.module(module.truncation()), module).expect("same truncation")
    }
}

/// `m: X⊗Y -> Z` between pieces of `Sym(𝕍)`, `t^A⊗t^B ↦ t^{A∪B}`.
pub fn sym_mult_between(x: SymSide, y: SymSide, z: SymSide, truncation: usize) -> FbMorphism {
    let (mx, my) = (x.module(truncation), y.module(truncation));
    let maps = (0..=truncation)
        .map(|d| {
            let lay = TensorLayout::new(&mx, &my, d);
            let rows = usize::from(z.allows(d));
            let mut out = Matrix::zeros(rows, lay.dim());
            if rows == 1 {
                for j in 0..lay.dim() {
                    out.set(0, j, Rational::one());
                }
            }
            out
        })
        .collect();
    FbMorphism { maps }
}

/// `Δ: Z -> X⊗Y`, the transpose of [`sym_mult_between`].
pub fn sym_comult_between(z: SymSide, x: SymSide, y: SymSide, truncation: usize) -> FbMorphism {
    FbMorphism { maps: sym_mult_between(x, y, z, truncation).maps.iter().map(Matrix::transpose).collect() }
}

pub fn op_to_map(op: &Operation, module: &FbModule, src: SymSide, dst: SymSide) -> Result<FbMorphism> {
    if op.truncation() != module.truncation() {
        return Err(Error::TruncationMismatch(op.truncation(), module.truncation()));
    }
    if op.symmetry() != Symmetry::Symmetric && !op.is_zero() {
        return Err(Error::NotSymmetric);
    }
    let (sym_src, sym_dst) = (src.module(op.truncation()), dst.module(op.truncation()));
    let maps = (0..=op.truncation())
        .map(|d| {
            let ls = TensorLayout::new(&sym_src, module, d);
            let ld = TensorLayout::new(&sym_dst, module, d);
            let full = Set::range(d);
            let mut out = Matrix::zeros(ld.dim(), ls.dim());
            for b in full.subsets().into_iter().filter(|b| src.allows(b.len())) {
                let (col, _, cw) = ls.block(b);
                for a in full.subsets().into_iter().filter(|a| dst.allows(a.len())) {
                    let (row, _, rw) = ld.block(a);
                    if cw * rw > 0 {
                        out.add_block(row, col, &op.eval_sets(module, full, a, b)?);
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FbMorphism { maps })
}

/// Reads the canonical blocks off an equivariant map.
pub fn op_from_map(a: &FbMorphism, module: &FbModule, src: SymSide, dst: SymSide) -> Result<Operation> {
    let n = module.truncation();
    if a.truncation() != n {
        return Err(Error::TruncationMismatch(a.truncation(), n));
    }
    let (ts, td) = (src.tensor_with(module), dst.tensor_with(module));
    if let Some(d) = a.equivariance_failure(&ts, &td) {
        return Err(Error::NotEquivariant(d));
    }
    let (sym_src, sym_dst) = (src.module(n), dst.module(n));
    let mut op = Operation::new(n, Symmetry::Symmetric);
    for d in 0..=n {
        let ls = TensorLayout::new(&sym_src, module, d);
        let ld = TensorLayout::new(&sym_dst, module, d);
        for k in 0..=d {
            for m in (0..=d - k).filter(|m| dst.allows(m + k)) {
                for nn in (0..=d - k - m).filter(|nn| src.allows(nn + k)) {
                    let slot = Slot::new(m, nn, k, d - k - m - nn);
                    let (_, x, y) = slot.frame();
                    let layer = Set::interval(d - k + 1, d);
                    let (row, _, rw) = ld.block(x.union(layer));
                    let (col, _, cw) = ls.block(y.union(layer));
                    op.insert(slot, a.maps[d].block(row, col, rw, cw))?;
                }
            }
        }
    }
    Ok(op)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::species::{specht, Partition};

    #[test]
    fn zero_map_is_zero_operation() {
        let m = specht(&Partition::new(vec![1, 1]), 3);
        let (src, dst) = (SymSide::Power(1), SymSide::Power(1));
        let z = FbMorphism::zero(&src.tensor_with(&m), &dst.tensor_with(&m));
        let op = op_from_map(&z, &m, src, dst).unwrap();
        assert!(op.is_zero());
        assert_eq!(op_to_map(&op, &m, src, dst).unwrap(), z);
    }

    #[test]
    fn identity_on_v_tensor_m_is_the_layer_one_identity() {
        // a = id: ω = id in layer 1, α = 0
        let m = specht(&Partition::new(vec![2]), 3);
        let side = SymSide::Power(1);
        let id = FbMorphism::identity(&side.tensor_with(&m));
        let op = op_from_map(&id, &m, side, side).unwrap();
        assert!(!op.has(1, 1, 0));
        for (s, c) in op.blocks() {
            assert_eq!((s.m, s.n, s.k), (0, 0, 1));
            assert!(c.is_identity());
        }
        assert_eq!(op_to_map(&op, &m, side, side).unwrap(), id);
    }

    #[test]
    fn non_equivariant_input_is_rejected() {
        let m = FbModule::trivial_dims(2, |_| 1);
        let side = SymSide::Power(1);
        let t = side.tensor_with(&m);
        let mut bad = FbMorphism::identity(&t);
        bad.maps[2].set(0, 1, Rational::one());
        assert!(matches!(op_from_map(&bad, &m, side, side), Err(Error::NotEquivariant(2))));
    }

    mod proptests {
        use super::*;
        use proptest::prelude::*;

        fn sides() -> impl Strategy<Value = SymSide> {
            prop_oneof![(0usize..3).prop_map(SymSide::Power), Just(SymSide::All)]
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]

            #[test]
            fn map_round_trips_through_operation(
                src in sides(),
                dst in sides(),
                seed in proptest::collection::vec(-2i64..3, 64),
            ) {
                // a random equivariant map, made so by averaging over the group
                let m = specht(&Partition::new(vec![2, 1]), 4).direct_sum(&FbModule::trivial_dims(4, |_| 1)).unwrap();
                let (ts, td) = (src.tensor_with(&m), dst.tensor_with(&m));
                let mut raw = FbMorphism::zero(&ts, &td);
                let mut it = seed.iter().cycle();
                for (d, mat) in raw.maps.iter_mut().enumerate() {
                    for i in 0..mat.rows() {
                        for j in 0..mat.cols() {
                            if (i * 7 + j * 3 + d) % 5 == 0 {
                                mat.set(i, j, Rational::from_int(*it.next().unwrap()));
                            }
                        }
                    }
                }
                let a = raw.symmetrize(&ts, &td);
                let op = op_from_map(&a, &m, src, dst).unwrap();
                prop_assert!(op.naturality_failures(&m).is_empty());
                prop_assert!(op.symmetry_failures(&m).is_empty());
                prop_assert_eq!(op_to_map(&op, &m, src, dst).unwrap(), a);
            }
        }
    }
}
