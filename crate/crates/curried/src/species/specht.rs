//! Specht modules from polytabloids.
//!
//! For a tableau `T`, the polytabloid `e_T = Σ_{q ∈ C_T} sgn(q) {qT}` is the
//! column antisymmetrizer applied to the tabloid of `T`, i.e. the image of the
//! Young symmetrizer in the permutation module on tabloids. Standard
//! polytabloids form a basis, and `σ e_T = e_{σT}` gives the action.

use std::collections::HashMap;

use super::{Degree, FbModule};
use crate::matrix::Matrix;
use crate::perm::Permutation;
use crate::rational::Rational;

/// An integer partition with nonincreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Drops zero parts; panics if the parts increase.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must be nonincreasing");
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Conjugate partition (column lengths).
    pub fn conjugate(&self) -> Partition {
        let w = self.0.first().copied().unwrap_or(0);
        Partition((0..w).map(|c| self.0.iter().filter(|&&r| r > c).count()).collect())
    }

    /// Partitions obtained by adding one box, with the 1-based row of the new box.
    pub fn addable(&self) -> Vec<(usize, Partition)> {
        let mut out = Vec::new();
        for i in 0..=self.0.len() {
            let cur = self.0.get(i).copied().unwrap_or(0);
            let above = if i == 0 { usize::MAX } else { self.0[i - 1] };
            if cur < above {
                let mut p = self.0.clone();
                if i == p.len() {
                    p.push(1);
                } else {
                    p[i] += 1;
                }
                out.push((i + 1, Partition(p)));
            }
        }
        out
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            go(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `n! / ∏ hooks`.
pub fn hook_length_dim(lambda: &Partition) -> u64 {
    let conj = lambda.conjugate();
    let n = lambda.size() as u64;
    let mut hooks: u64 = 1;
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            hooks *= ((row - j - 1) + (conj.0[j] - i - 1) + 1) as u64;
        }
    }
    (1..=n).product::<u64>() / hooks
}

/// Standard Young tableaux of shape `λ`, rows of 0-based entries, by brute-force
/// placement of `0..n` in order.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Vec<Vec<usize>>> {
    fn go(k: usize, n: usize, shape: &[usize], rows: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if k == n {
            out.push(rows.clone());
            return;
        }
        for i in 0..shape.len() {
            let len = rows[i].len();
            let fits_row = len < shape[i];
            let fits_col = i == 0 || rows[i - 1].len() > len;
            if fits_row && fits_col {
                rows[i].push(k);
                go(k + 1, n, shape, rows, out);
                rows[i].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); lambda.parts().len()];
    go(0, lambda.size(), lambda.parts(), &mut rows, &mut out);
    out
}

type Tabloid = Vec<u8>;

fn tabloid_of(rows: &[Vec<usize>], n: usize) -> Tabloid {
    let mut row_of = vec![0u8; n];
    for (i, row) in rows.iter().enumerate() {
        for &e in row {
            row_of[e] = i as u8;
        }
    }
    row_of
}

/// Polytabloid of a tableau as a sparse vector over tabloids.
fn polytabloid(rows: &[Vec<usize>], n: usize) -> HashMap<Tabloid, i64> {
    let width = rows.first().map_or(0, |r| r.len());
    let columns: Vec<Vec<usize>> =
        (0..width).map(|c| rows.iter().filter_map(|r| r.get(c).copied()).collect()).collect();
    let mut out = HashMap::new();
    let col_perms: Vec<Vec<Permutation>> = columns.iter().map(|c| Permutation::all(c.len())).collect();
    let mut choice = vec![0usize; width];
    loop {
        // apply the chosen permutation within each column
        let mut t: Vec<Vec<usize>> = rows.to_vec();
        let mut sign = 1i64;
        for (c, col) in columns.iter().enumerate() {
            let q = &col_perms[c][choice[c]];
            sign *= q.sign();
            for (r, _) in col.iter().enumerate() {
                t[r][c] = col[q.apply(r)];
            }
        }
        *out.entry(tabloid_of(&t, n)).or_insert(0) += sign;
        let mut c = 0;
        loop {
            if c == width {
                out.retain(|_, v| *v != 0);
                return out;
            }
            choice[c] += 1;
            if choice[c] < col_perms[c].len() {
                break;
            }
            choice[c] = 0;
            c += 1;
        }
    }
}

/// The Specht module `S^λ`, concentrated in degree `|λ|`.
pub fn specht(lambda: &Partition, truncation: usize) -> FbModule {
    let n = lambda.size();
    assert!(n <= truncation, "partition larger than truncation");
    let tabs = standard_tableaux(lambda);
    let f = tabs.len();
    let polys: Vec<HashMap<Tabloid, i64>> = tabs.iter().map(|t| polytabloid(t, n)).collect();
    let mut index: HashMap<Tabloid, usize> = HashMap::new();
    for p in &polys {
        for k in p.keys() {
            let next = index.len();
            index.entry(k.clone()).or_insert(next);
        }
    }
    let to_vec = |p: &HashMap<Tabloid, i64>, index: &mut HashMap<Tabloid, usize>| -> Vec<(usize, i64)> {
        p.iter()
            .map(|(k, &v)| {
                let next = index.len();
                (*index.entry(k.clone()).or_insert(next), v)
            })
            .collect()
    };
    let basis_cols: Vec<Vec<(usize, i64)>> = polys.iter().map(|p| to_vec(p, &mut index)).collect();

    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let images: Vec<Vec<(usize, i64)>> = tabs
            .iter()
            .map(|t| {
                let swapped: Vec<Vec<usize>> = t
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|&e| {
                                if e == i {
                                    i + 1
                                } else if e == i + 1 {
                                    i
                                } else {
                                    e
                                }
                            })
                            .collect()
                    })
                    .collect();
                to_vec(&polytabloid(&swapped, n), &mut index)
            })
            .collect();
        let dim = index.len();
        let build = |cols: &[Vec<(usize, i64)>]| {
            let mut m = Matrix::zeros(dim, cols.len());
            for (j, col) in cols.iter().enumerate() {
                for &(r, v) in col {
                    m.add_at(r, j, &Rational::from_int(v));
                }
            }
            m
        };
        let b = build(&basis_cols);
        let v = build(&images);
        let bt = b.transpose();
        let gram_inv = bt.mul(&b).inverse().expect("standard polytabloids are independent");
        let coords = gram_inv.mul(&bt).mul(&v);
        assert_eq!(b.mul(&coords), v, "image left the span of standard polytabloids");
        gens.push(coords);
    }
    let degrees = (0..=truncation)
        .map(|d| {
            if d == n {
                Degree { dim: f, gens: gens.clone() }
            } else {
                Degree { dim: 0, gens: vec![Matrix::zeros(0, 0); d.saturating_sub(1)] }
            }
        })
        .collect();
    FbModule::from_degrees(degrees)
}
