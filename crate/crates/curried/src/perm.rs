//! Permutations of `[n]`, stored 0-based.

use std::fmt;

use crate::set::Set;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// 0-based images; `None` unless a bijection of `0..n`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation { images })
    }

    /// 1-based images, as written in text formats.
    pub fn from_one_based(images: &[usize]) -> Option<Self> {
        if images.contains(&0) {
            return None;
        }
        Self::from_images(images.iter().map(|x| x - 1).collect())
    }

    /// Adjacent transposition swapping positions `i` and `i + 1` (0-based).
    pub fn adjacent(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i, i + 1);
        p
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i, j);
        p
    }

    /// The permutation of `[t]` induced by a bijection `f: T -> T'` between two
    /// sets of the same size, after identifying both with `[t]` in order.
    pub fn induced(src: Set, dst: Set, f: impl Fn(usize) -> usize) -> Self {
        assert_eq!(src.len(), dst.len());
        let images = src.iter().map(|x| dst.rank(f(x))).collect();
        Self::from_images(images).expect("induced map is not a bijection")
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.len(), rhs.len());
        Permutation { images: rhs.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inversions(&self) -> usize {
        let n = self.len();
        (0..n).map(|i| (i + 1..n).filter(|&j| self.images[i] > self.images[j]).count()).sum()
    }

    pub fn sign(&self) -> i64 {
        if self.inversions() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// A reduced word: `self = s_{w[0]} ∘ s_{w[1]} ∘ ... ∘ s_{w[k-1]}` with
    /// `s_i` the 0-based adjacent transposition.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut p = self.images.clone();
        let mut right = Vec::new();
        while let Some(j) = (0..p.len().saturating_sub(1)).find(|&j| p[j] > p[j + 1]) {
            p.swap(j, j + 1);
            right.push(j);
        }
        right.reverse();
        right
    }

    /// All permutations of `[n]` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one: Vec<String> = self.images.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", one.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_signs() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().filter(|p| p.sign() == 1).count(), 12);
    }

    #[test]
    fn induced_relabeling() {
        // {2,5} -> {1,9} sending 2 -> 9 and 5 -> 1 is the swap of [2]
        let p =
            Permutation::induced(Set::from_labels([2, 5]), Set::from_labels([1, 9]), |x| if x == 2 { 9 } else { 1 });
        assert_eq!(p, Permutation::adjacent(2, 0));
    }

    mod proptests {
        use super::*;
        use proptest::prelude::*;

        fn perm(n: usize) -> impl Strategy<Value = Permutation> {
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
        }

        proptest! {
            #[test]
            fn reduced_word_reconstructs(p in perm(6)) {
                let w = p.reduced_word();
                prop_assert_eq!(w.len(), p.inversions());
                let rebuilt = w.iter().fold(Permutation::identity(6), |acc, &i| acc.compose(&Permutation::adjacent(6, i)));
                prop_assert_eq!(rebuilt, p);
            }

            #[test]
            fn sign_is_multiplicative(p in perm(5), q in perm(5)) {
                prop_assert_eq!(p.compose(&q).sign(), p.sign() * q.sign());
                prop_assert!(p.compose(&p.inverse()).is_identity());
            }
        }
    }
}
