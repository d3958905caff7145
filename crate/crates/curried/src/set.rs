//! Finite label sets as bitmasks. Labels are `1..=63`; `[n]` is `{1..n}`.
//!
//! An arbitrary set `T` is identified with `[|T|]` by the unique
//! order-preserving bijection, so `rank` and `nth` are the two directions
//! of that identification.

use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Set(pub u64);

pub const MAX_LABEL: usize = 63;

impl Set {
    pub const EMPTY: Set = Set(0);

    /// `[n] = {1..n}`.
    pub fn range(n: usize) -> Set {
        assert!(n <= MAX_LABEL);
        Set(((1u64 << n) - 1) << 1)
    }

    /// `{a..=b}`, empty when `a > b`.
    pub fn interval(a: usize, b: usize) -> Set {
        if a > b {
            return Set::EMPTY;
        }
        Set(Set::range(b).0 & !Set::range(a - 1).0)
    }

    pub fn singleton(x: usize) -> Set {
        assert!((1..=MAX_LABEL).contains(&x), "label {x} out of range");
        Set(1u64 << x)
    }

    pub fn from_labels<I: IntoIterator<Item = usize>>(it: I) -> Set {
        it.into_iter().fold(Set::EMPTY, |s, x| s.with(x))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, x: usize) -> bool {
        x <= MAX_LABEL && self.0 >> x & 1 == 1
    }

    pub fn with(self, x: usize) -> Set {
        Set(self.0 | Set::singleton(x).0)
    }

    pub fn without(self, x: usize) -> Set {
        Set(self.0 & !Set::singleton(x).0)
    }

    pub fn union(self, o: Set) -> Set {
        Set(self.0 | o.0)
    }

    pub fn inter(self, o: Set) -> Set {
        Set(self.0 & o.0)
    }

    pub fn minus(self, o: Set) -> Set {
        Set(self.0 & !o.0)
    }

    pub fn is_disjoint(self, o: Set) -> bool {
        self.0 & o.0 == 0
    }

    pub fn is_subset(self, o: Set) -> bool {
        self.0 & !o.0 == 0
    }

    /// Ascending labels.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(x)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// 0-based position of `x` inside the set. Panics if absent.
    pub fn rank(self, x: usize) -> usize {
        assert!(self.contains(x), "label {x} not in {self:?}");
        (self.0 & ((1u64 << x) - 1)).count_ones() as usize
    }

    /// The element at 0-based position `r`.
    pub fn nth(self, r: usize) -> usize {
        self.iter().nth(r).expect("position out of range")
    }

    /// `sub ⊆ self` rewritten in the coordinates `self ≅ [|self|]`.
    pub fn compress(self, sub: Set) -> Set {
        debug_assert!(sub.is_subset(self));
        Set::from_labels(sub.iter().map(|x| self.rank(x) + 1))
    }

    /// Inverse of [`Set::compress`]: `canon ⊆ [|self|]` as a subset of `self`.
    pub fn expand(self, canon: Set) -> Set {
        Set::from_labels(canon.iter().map(|r| self.nth(r - 1)))
    }

    /// All subsets in colexicographic order (which is bitmask order).
    pub fn subsets(self) -> Vec<Set> {
        let mut out = Vec::with_capacity(1 << self.len());
        let mut sub = 0u64;
        loop {
            out.push(Set(sub));
            if sub == self.0 {
                break;
            }
            sub = (sub.wrapping_sub(self.0)) & self.0;
        }
        out.sort();
        out
    }

    /// Subsets of a fixed size, colexicographic.
    pub fn subsets_of_size(self, k: usize) -> Vec<Set> {
        self.subsets().into_iter().filter(|s| s.len() == k).collect()
    }
}

impl fmt::Debug for Set {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Set {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Region sizes for Venn-style frame enumeration: every vector of `regions`
/// naturals with sum at most `max_total`, in lexicographic order.
pub fn size_vectors(regions: usize, max_total: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, budget: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for k in 0..=budget {
            cur.push(k);
            go(left - 1, budget - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(regions, max_total, &mut Vec::new(), &mut out);
    out
}

/// Consecutive disjoint blocks of labels starting at 1 with the given sizes.
pub fn consecutive_blocks(sizes: &[usize]) -> Vec<Set> {
    let mut next = 1;
    sizes
        .iter()
        .map(|&k| {
            let s = Set::interval(next, next + k - 1);
            next += k;
            s
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nth_are_inverse() {
        let s = Set::from_labels([2, 5, 7]);
        for (r, x) in s.iter().enumerate() {
            assert_eq!(s.rank(x), r);
            assert_eq!(s.nth(r), x);
        }
    }

    #[test]
    fn subsets_are_colex() {
        let subs = Set::range(3).subsets();
        assert_eq!(subs.len(), 8);
        let expect: Vec<Set> = [vec![], vec![1], vec![2], vec![1, 2], vec![3], vec![1, 3], vec![2, 3], vec![1, 2, 3]]
            .into_iter()
            .map(Set::from_labels)
            .collect();
        assert_eq!(subs, expect);
    }

    #[test]
    fn blocks_partition_an_initial_segment() {
        let b = consecutive_blocks(&[2, 0, 3]);
        assert_eq!(b[0], Set::from_labels([1, 2]));
        assert!(b[1].is_empty());
        assert_eq!(b[2], Set::from_labels([3, 4, 5]));
    }

    #[test]
    fn size_vector_count() {
        // stars and bars: C(max + regions, regions)
        assert_eq!(size_vectors(3, 4).len(), 35);
    }
}
