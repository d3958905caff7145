//! Sparse exact matrices acting on column vectors.
//!
//! Storage is column-major with only nonzero entries kept, so structural
//! equality is matrix equality. Most matrices in this crate are monomial
//! (relabelings, diagram actions), which keeps products cheap.

use std::collections::BTreeMap;
use std::fmt;

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, Rational>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![BTreeMap::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Rational::one())
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        let mut m = Self::zeros(n, n);
        if !c.is_zero() {
            for i in 0..n {
                m.data[i].insert(i, c.clone());
            }
        }
        m
    }

    /// Column `j` is the basis vector `images[j]`.
    pub fn permutation(images: &[usize]) -> Self {
        let n = images.len();
        let mut m = Self::zeros(n, n);
        for (j, &i) in images.iter().enumerate() {
            m.data[j].insert(i, Rational::one());
        }
        m
    }

    /// Row-major dense input.
    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<Rational>> =
            rows.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect();
        Self::from_rows(&rows)
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (j, col) in self.data.iter().enumerate() {
            for (&i, v) in col {
                out[i][j] = v.clone();
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.data[j].get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        if v.is_zero() {
            self.data[j].remove(&i);
        } else {
            self.data[j].insert(i, v);
        }
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Rational) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        if v.is_zero() {
            return;
        }
        let col = &mut self.data[j];
        let e = col.entry(i).or_insert_with(Rational::zero);
        *e += v;
        if e.is_zero() {
            col.remove(&i);
        }
    }

    /// Nonzero entries of column `j` as (row, value).
    pub fn column(&self, j: usize) -> impl Iterator<Item = (usize, &Rational)> {
        self.data[j].iter().map(|(&i, v)| (i, v))
    }

    /// All nonzero entries as (row, col, value), column-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data.iter().enumerate().flat_map(|(j, col)| col.iter().map(move |(&i, v)| (i, j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_empty())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.data.iter().enumerate().all(|(j, c)| c.len() == 1 && c.get(&j).is_some_and(|v| v.is_one()))
    }

    /// `self * rhs`. Panics on shape mismatch.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for (j, rcol) in rhs.data.iter().enumerate() {
            let acc = &mut out.data[j];
            for (&k, b) in rcol {
                for (&i, a) in &self.data[k] {
                    let e = acc.entry(i).or_insert_with(Rational::zero);
                    *e += &(a * b);
                }
            }
            acc.retain(|_, v| !v.is_zero());
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        self.combine(rhs, &Rational::one())
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        self.combine(rhs, &Rational::from_int(-1))
    }

    /// `self + c * rhs`.
    pub fn combine(&self, rhs: &Matrix, c: &Rational) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sum");
        let mut out = self.clone();
        for (j, col) in rhs.data.iter().enumerate() {
            for (&i, v) in col {
                out.add_at(i, j, &(v * c));
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        if c.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        let mut out = self.clone();
        for col in &mut out.data {
            for v in col.values_mut() {
                *v *= c;
            }
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&Rational::from_int(-1))
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for (i, j, v) in self.entries() {
            out.data[i].insert(j, v.clone());
        }
        out
    }

    /// Kronecker product; index `(i, k)` of the result is `i * rhs.rows + k`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for (i, j, a) in self.entries() {
            for (k, l, b) in rhs.entries() {
                out.data[j * rhs.cols + l].insert(i * rhs.rows + k, a * b);
            }
        }
        out
    }

    /// Writes `block` with its top-left corner at `(r0, c0)`, adding to existing entries.
    pub fn add_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for (i, j, v) in block.entries() {
            self.add_at(r0 + i, c0 + j, v);
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(rows, cols);
        for j in 0..cols {
            for (&i, v) in self.data[c0 + j].range(r0..r0 + rows) {
                out.data[j].insert(i - r0, v.clone());
            }
        }
        out
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "shape mismatch in apply");
        let mut out = vec![Rational::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (&i, a) in &self.data[j] {
                out[i] += &(a * x);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Rank by Gaussian elimination over the rationals.
    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        let (r, c) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..c {
            let Some(piv) = (rank..r).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, piv);
            let inv = rows[rank][col].recip().expect("nonzero pivot");
            for x in rows[rank].iter_mut() {
                *x *= &inv;
            }
            for i in 0..r {
                if i != rank && !rows[i][col].is_zero() {
                    let f = rows[i][col].clone();
                    for k in col..c {
                        let d = &f * &rows[rank][k];
                        rows[i][k] -= &d;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut inv = Matrix::identity(n).to_rows();
        for col in 0..n {
            let piv = (col..n).find(|&i| !a[i][col].is_zero())?;
            a.swap(col, piv);
            inv.swap(col, piv);
            let p = a[col][col].recip().expect("nonzero pivot");
            for k in 0..n {
                a[col][k] *= &p;
                inv[col][k] *= &p;
            }
            for i in 0..n {
                if i != col && !a[i][col].is_zero() {
                    let f = a[i][col].clone();
                    for k in 0..n {
                        let d = &f * &a[col][k];
                        a[i][k] -= &d;
                        let e = &f * &inv[col][k];
                        inv[i][k] -= &e;
                    }
                }
            }
        }
        Some(Matrix::from_rows(&inv))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for row in self.to_rows() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_matches_hand_computation() {
        let a = Matrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), Matrix::from_int_rows(&[&[2, 1], &[4, 3]]));
    }

    #[test]
    fn kron_indexing() {
        let a = Matrix::from_int_rows(&[&[1, 2]]);
        let b = Matrix::from_int_rows(&[&[1], &[3]]);
        assert_eq!(a.kron(&b), Matrix::from_int_rows(&[&[1, 2], &[3, 6]]));
    }

    #[test]
    fn rank_and_inverse() {
        let a = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(a.rank(), 1);
        assert!(a.inverse().is_none());
        let b = Matrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        assert!(b.mul(&b.inverse().unwrap()).is_identity());
    }

    mod proptests {
        use super::*;
        use proptest::prelude::*;

        fn small_matrix(r: usize, c: usize) -> impl Strategy<Value = Matrix> {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |xs| {
                let rows: Vec<Vec<Rational>> =
                    xs.chunks(c).map(|ch| ch.iter().map(|&x| Rational::from_int(x)).collect()).collect();
                Matrix::from_rows(&rows)
            })
        }

        proptest! {
            #[test]
            fn product_is_associative(a in small_matrix(3, 2), b in small_matrix(2, 4), c in small_matrix(4, 2)) {
                prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            }

            #[test]
            fn transpose_reverses_products(a in small_matrix(3, 2), b in small_matrix(2, 3)) {
                prop_assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
            }

            #[test]
            fn rank_is_transpose_invariant(a in small_matrix(3, 4)) {
                prop_assert_eq!(a.rank(), a.transpose().rank());
            }
        }
    }
}
