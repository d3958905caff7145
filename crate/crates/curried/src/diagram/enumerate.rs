use super::{Diagram, Kind};
use crate::error::{Error, Result};

/// Largest label count a single diagram may carry.
pub const MAX_LABELS: usize = 64;

/// Largest `n + m` accepted by [`enumerate_diagrams`].
pub const ENUMERATION_BOUND: usize = 10;

/// All diagrams `[n] -> [m]` of a kind, canonical and sorted.
pub fn enumerate_diagrams(n: usize, m: usize, kind: Kind) -> Result<Vec<Diagram>> {
    let total = n + m;
    if total > ENUMERATION_BOUND {
        return Err(Error::Bound(format!("n+m = {total} exceeds {ENUMERATION_BOUND}")));
    }
    let mut out = Vec::new();
    match kind {
        Kind::Brauer => {
            if total % 2 == 0 {
                let mut blocks = Vec::new();
                matchings(&mut vec![false; total], &mut blocks, &mut |b| {
                    out.push(Diagram::new_unchecked(kind, n, m, b.to_vec()))
                });
            }
        }
        Kind::Partition | Kind::Restricted => {
            // restricted growth strings: label x goes to block rgs[x] <= 1 + max so far
            let mut rgs = vec![0usize; total];
            set_partitions(0, 0, &mut rgs, &mut |rgs| {
                let k = rgs.iter().max().map_or(0, |&b| b + 1);
                let mut blocks = vec![Vec::new(); k];
                for (x, &b) in rgs.iter().enumerate() {
                    blocks[b].push(x as u8);
                }
                let d = Diagram::new_unchecked(kind, n, m, blocks);
                if d.satisfies_kind(kind) {
                    out.push(d);
                }
            });
        }
    }
    out.sort();
    Ok(out)
}

pub fn hom_dim(n: usize, m: usize, kind: Kind) -> Result<usize> {
    Ok(enumerate_diagrams(n, m, kind)?.len())
}

fn matchings(used: &mut Vec<bool>, blocks: &mut Vec<Vec<u8>>, emit: &mut impl FnMut(&[Vec<u8>])) {
    let Some(a) = used.iter().position(|u| !u) else {
        emit(blocks);
        return;
    };
    used[a] = true;
    for b in a + 1..used.len() {
        if !used[b] {
            used[b] = true;
            blocks.push(vec![a as u8, b as u8]);
            matchings(used, blocks, emit);
            blocks.pop();
            used[b] = false;
        }
    }
    used[a] = false;
}

fn set_partitions(x: usize, next: usize, rgs: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if x == rgs.len() {
        emit(rgs);
        return;
    }
    for b in 0..=next {
        rgs[x] = b;
        set_partitions(x + 1, next.max(b + 1), rgs, emit);
    }
}

/// Bell numbers via the Bell triangle.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &v in &row {
            next.push(next.last().unwrap() + v);
        }
        row = next;
    }
    row[0]
}

/// `(n)!! = n (n-2) ...`, with `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> u64 {
    let mut out = 1u64;
    let mut k = n;
    while k > 1 {
        out *= k as u64;
        k -= 2;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(hom_dim(2, 2, Kind::Brauer).unwrap(), 3);
        assert_eq!(hom_dim(1, 2, Kind::Brauer).unwrap(), 0);
        assert_eq!(hom_dim(2, 2, Kind::Partition).unwrap(), 15);
        assert_eq!(hom_dim(0, 0, Kind::Partition).unwrap(), 1);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(hom_dim(6, 5, Kind::Partition), Err(Error::Bound(_))));
    }

    #[test]
    fn enumeration_is_canonical_and_duplicate_free() {
        for kind in [Kind::Brauer, Kind::Partition, Kind::Restricted] {
            let ds = enumerate_diagrams(2, 3, kind).unwrap();
            for w in ds.windows(2) {
                assert!(w[0] < w[1]);
            }
            for d in &ds {
                let again = Diagram::new(kind, 2, 3, d.blocks().to_vec()).unwrap();
                assert_eq!(&again, d);
            }
        }
    }

    #[test]
    fn restricted_one_to_m_counts_all_partitions() {
        // with a single source label every partition is restricted
        assert_eq!(hom_dim(1, 3, Kind::Restricted).unwrap() as u64, bell(4));
    }

    #[test]
    fn bell_and_double_factorial_values() {
        assert_eq!((0..7).map(bell).collect::<Vec<_>>(), vec![1, 1, 2, 5, 15, 52, 203]);
        assert_eq!(double_factorial(-1), 1);
        assert_eq!(double_factorial(7), 105);
    }
}
