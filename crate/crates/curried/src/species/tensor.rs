//! The induction tensor product `(M⊗N)(S) = ⊕_{A⊆S} M(A) ⊗ N(S∖A)`.
//!
//! Degree-`n` basis: subsets `A ⊆ [n]` in colex order, then the `M(A)`
//! index, then the `N([n]∖A)` index.

use super::{Degree, FbModule, FbMorphism};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::set::Set;

/// Index bookkeeping for one degree of a tensor product.
#[derive(Clone, Debug)]
pub struct TensorLayout {
    pub n: usize,
    left: Vec<usize>,
    right: Vec<usize>,
    /// Offset of the block for subset mask `a.0 >> 1`.
    offsets: Vec<usize>,
    dim: usize,
}

impl TensorLayout {
    pub fn new(m: &FbModule, p: &FbModule, n: usize) -> Self {
        let left: Vec<usize> = (0..=n).map(|k| m.dim(k)).collect();
        let right: Vec<usize> = (0..=n).map(|k| p.dim(k)).collect();
        let mut offsets = Vec::with_capacity(1 << n);
        let mut dim = 0;
        for a in Set::range(n).subsets() {
            offsets.push(dim);
            dim += left[a.len()] * right[n - a.len()];
        }
        TensorLayout { n, left, right, offsets, dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn full(&self) -> Set {
        Set::range(self.n)
    }

    /// `(offset, dim M(A), dim N(Aᶜ))`.
    pub fn block(&self, a: Set) -> (usize, usize, usize) {
        let k = a.len();
        (self.offsets[(a.0 >> 1) as usize], self.left[k], self.right[self.n - k])
    }

    pub fn index(&self, a: Set, x: usize, y: usize) -> usize {
        let (off, _, dr) = self.block(a);
        off + x * dr + y
    }

    /// Inverse of [`TensorLayout::index`].
    pub fn decode(&self, idx: usize) -> (Set, usize, usize) {
        assert!(idx < self.dim, "index out of range");
        // the last block starting at or before idx is nonempty, since later empty blocks start past it
        let pos = self.offsets.partition_point(|&o| o <= idx) - 1;
        let a = Set((pos as u64) << 1);
        let (off, _, dr) = self.block(a);
        let r = idx - off;
        (a, r / dr, r % dr)
    }

    /// All `(A, x, y)` in index order.
    pub fn basis(&self) -> Vec<(Set, usize, usize)> {
        let mut out = Vec::with_capacity(self.dim);
        for a in self.full().subsets() {
            let (_, dl, dr) = self.block(a);
            for x in 0..dl {
                for y in 0..dr {
                    out.push((a, x, y));
                }
            }
        }
        out
    }
}

/// The tensor product module.
pub fn tensor(m: &FbModule, p: &FbModule) -> Result<FbModule> {
    if m.truncation() != p.truncation() {
        return Err(Error::TruncationMismatch(m.truncation(), p.truncation()));
    }
    let degrees = (0..=m.truncation())
        .map(|n| {
            let lay = TensorLayout::new(m, p, n);
            let gens = (0..n.saturating_sub(1)).map(|i| tensor_generator(m, p, &lay, i)).collect();
            Degree { dim: lay.dim(), gens }
        })
        .collect();
    Ok(FbModule::from_degrees(degrees))
}

/// Matrix of the swap of labels `i+1, i+2` on `(M⊗N)_n`.
fn tensor_generator(m: &FbModule, p: &FbModule, lay: &TensorLayout, i: usize) -> Matrix {
    let (u, v) = (i + 1, i + 2);
    let full = lay.full();
    let mut out = Matrix::zeros(lay.dim(), lay.dim());
    for a in full.subsets() {
        let (off, dl, dr) = lay.block(a);
        if dl * dr == 0 {
            continue;
        }
        let b = full.minus(a);
        let swapped = match (a.contains(u), a.contains(v)) {
            (true, false) => a.without(u).with(v),
            (false, true) => a.without(v).with(u),
            _ => a,
        };
        let side = |s: Set, module: &FbModule| -> Matrix {
            if s.contains(u) && s.contains(v) {
                module.gen(s.len(), s.rank(u)).clone()
            } else {
                Matrix::identity(module.dim(s.len()))
            }
        };
        let block = side(a, m).kron(&side(b, p));
        let (off2, _, _) = lay.block(swapped);
        out.add_block(off2, off, &block);
    }
    out
}

/// `f ⊗ g: M⊗N -> M'⊗N'`.
pub fn tensor_maps(
    f: &FbMorphism,
    g: &FbMorphism,
    (m, p): (&FbModule, &FbModule),
    (m2, p2): (&FbModule, &FbModule),
) -> FbMorphism {
    let maps = (0..=m.truncation())
        .map(|n| {
            let src = TensorLayout::new(m, p, n);
            let dst = TensorLayout::new(m2, p2, n);
            let mut out = Matrix::zeros(dst.dim(), src.dim());
            for a in src.full().subsets() {
                let (so, sl, sr) = src.block(a);
                let (d_off, dl, dr) = dst.block(a);
                if sl * sr == 0 || dl * dr == 0 {
                    continue;
                }
                let k = a.len();
                out.add_block(d_off, so, &f.maps[k].kron(&g.maps[n - k]));
            }
            out
        })
        .collect();
    FbMorphism { maps }
}

/// The symmetry `τ: M⊗N -> N⊗M`, `(A, x, y) ↦ (Aᶜ, y, x)`.
pub fn braiding(m: &FbModule, p: &FbModule) -> FbMorphism {
    let maps = (0..=m.truncation())
        .map(|n| {
            let src = TensorLayout::new(m, p, n);
            let dst = TensorLayout::new(p, m, n);
            let mut out = Matrix::zeros(dst.dim(), src.dim());
            for (j, (a, x, y)) in src.basis().into_iter().enumerate() {
                out.set(dst.index(src.full().minus(a), y, x), j, crate::rational::Rational::one());
            }
            out
        })
        .collect();
    FbMorphism { maps }
}

/// The associator `(M⊗N)⊗P -> M⊗(N⊗P)`.
pub fn associator(m: &FbModule, n_mod: &FbModule, p: &FbModule) -> Result<FbMorphism> {
    let mn = tensor(m, n_mod)?;
    let np = tensor(n_mod, p)?;
    let maps = (0..=m.truncation())
        .map(|n| {
            let src = TensorLayout::new(&mn, p, n);
            let dst = TensorLayout::new(m, &np, n);
            let full = src.full();
            let mut out = Matrix::zeros(dst.dim(), src.dim());
            for (j, (a, w, z)) in src.basis().into_iter().enumerate() {
                let inner = TensorLayout::new(m, n_mod, a.len());
                let (b_canon, x, y) = inner.decode(w);
                let c = a.expand(b_canon);
                let rest = full.minus(c);
                let d = rest.compress(a.minus(c));
                let inner2 = TensorLayout::new(n_mod, p, rest.len());
                let u = inner2.index(d, y, z);
                out.set(dst.index(c, x, u), j, crate::rational::Rational::one());
            }
            out
        })
        .collect();
    Ok(FbMorphism { maps })
}

/// Inverse of [`associator`]; it permutes basis vectors, so this is the transpose.
pub fn associator_inverse(m: &FbModule, n_mod: &FbModule, p: &FbModule) -> Result<FbMorphism> {
    Ok(FbMorphism { maps: associator(m, n_mod, p)?.maps.iter().map(Matrix::transpose).collect() })
}

/// `id_X ⊗ f` for `f: P -> P'`.
pub fn lift(x: &FbModule, f: &FbMorphism, (src, dst): (&FbModule, &FbModule)) -> FbMorphism {
    tensor_maps(&FbMorphism::identity(x), f, (x, src), (x, dst))
}

/// `f ⊗ id_P` for `f: X -> X'`.
pub fn extend(f: &FbMorphism, (src, dst): (&FbModule, &FbModule), p: &FbModule) -> FbMorphism {
    tensor_maps(f, &FbMorphism::identity(p), (src, p), (dst, p))
}

/// `X⊗(Y⊗P) -> Y⊗(X⊗P)`, swapping the two outer factors.
pub fn swap_outer(x: &FbModule, y: &FbModule, p: &FbModule) -> Result<FbMorphism> {
    let (xy, yx) = (tensor(x, y)?, tensor(y, x)?);
    let mid = extend(&braiding(x, y), (&xy, &yx), p);
    Ok(associator(y, x, p)?.compose(&mid).compose(&associator_inverse(x, y, p)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::species::specht;
    use crate::species::Partition;

    #[test]
    fn v_tensor_v_degree_two() {
        let v = FbModule::standard(4);
        let vv = tensor(&v, &v).unwrap();
        assert_eq!(vv.dims(), vec![0, 0, 2, 0, 0]);
        assert_eq!(vv.gen(2, 0), &Matrix::from_int_rows(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn decode_inverts_index() {
        let m = specht(&Partition::new(vec![2, 1]), 4).direct_sum(&FbModule::standard(4)).unwrap();
        let v = FbModule::unit(4).direct_sum(&FbModule::standard(4)).unwrap();
        for n in 0..=4 {
            let lay = TensorLayout::new(&m, &v, n);
            for (idx, (a, x, y)) in lay.basis().into_iter().enumerate() {
                assert_eq!(lay.index(a, x, y), idx);
                assert_eq!(lay.decode(idx), (a, x, y));
            }
        }
    }

    #[test]
    fn swap_outer_is_an_involution_up_to_relabeling() {
        let v = FbModule::standard(4);
        let m = specht(&Partition::new(vec![2]), 4).direct_sum(&FbModule::unit(4)).unwrap();
        let s2 = crate::species::sym_power(2, 4);
        let there = swap_outer(&v, &s2, &m).unwrap();
        let back = swap_outer(&s2, &v, &m).unwrap();
        let vm = tensor(&v, &m).unwrap();
        let src = tensor(&v, &tensor(&s2, &m).unwrap()).unwrap();
        let dst = tensor(&s2, &vm).unwrap();
        assert!(there.is_equivariant(&src, &dst));
        assert_eq!(back.compose(&there), FbMorphism::identity(&src));
    }

    mod proptests {
        use super::*;
        use crate::species::sym_power;
        use proptest::prelude::*;

        const N: usize = 4;

        fn pool(i: usize) -> FbModule {
            match i {
                0 => FbModule::unit(N),
                1 => FbModule::standard(N),
                2 => specht(&Partition::new(vec![2]), N),
                3 => specht(&Partition::new(vec![1, 1]), N),
                4 => specht(&Partition::new(vec![2, 1]), N),
                5 => sym_power(2, N),
                _ => FbModule::standard(N).direct_sum(&FbModule::unit(N)).unwrap(),
            }
        }

        proptest! {
            #[test]
            fn braiding_is_an_equivariant_involution(i in 0usize..7, j in 0usize..7) {
                let (m, p) = (pool(i), pool(j));
                let (mp, pm) = (tensor(&m, &p).unwrap(), tensor(&p, &m).unwrap());
                prop_assert!(mp.validate().is_empty());
                let tau = braiding(&m, &p);
                prop_assert!(tau.is_equivariant(&mp, &pm));
                prop_assert_eq!(braiding(&p, &m).compose(&tau), FbMorphism::identity(&mp));
            }

            #[test]
            fn associator_is_an_equivariant_isomorphism(i in 0usize..7, j in 0usize..7, k in 0usize..7) {
                let (a, b, c) = (pool(i), pool(j), pool(k));
                let src = tensor(&tensor(&a, &b).unwrap(), &c).unwrap();
                let dst = tensor(&a, &tensor(&b, &c).unwrap()).unwrap();
                let alpha = associator(&a, &b, &c).unwrap();
                prop_assert!(alpha.is_equivariant(&src, &dst));
                prop_assert_eq!(associator_inverse(&a, &b, &c).unwrap().compose(&alpha), FbMorphism::identity(&src));
            }

            #[test]
            fn unit_laws_hold_on_the_nose(i in 0usize..7) {
                let (m, one) = (pool(i), FbModule::unit(N));
                prop_assert_eq!(&tensor(&one, &m).unwrap(), &m);
                prop_assert_eq!(&tensor(&m, &one).unwrap(), &m);
            }
        }
    }
}
