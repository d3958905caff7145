use super::{enumerate_diagrams, Diagram, Kind};
use crate::error::Result;

/// Splits `d` as `up ∘ down` through the propagating blocks.
///
/// The middle object has one point per propagating block, ordered by the
/// block's least label, which is the fewest points any factorization can use.
/// No block closes off in the middle, so the recomposition is exact for every `δ`.
pub fn triangular_factorize(d: &Diagram) -> (Diagram, Diagram) {
    let (n, m) = (d.source(), d.target());
    let mut down = Vec::new();
    let mut up = Vec::new();
    let mut y = 0usize;
    let propagating: Vec<&Vec<u8>> = d
        .blocks()
        .iter()
        .filter(|b| {
            let (s, t) = d.split(b);
            s > 0 && t > 0
        })
        .collect();
    let mid = propagating.len();
    for b in d.blocks() {
        let src: Vec<u8> = b.iter().copied().filter(|&x| d.is_source(x)).collect();
        // targets of d become labels mid.. of the up diagram
        let tgt: Vec<u8> = b.iter().filter(|&&x| !d.is_source(x)).map(|&x| (x as usize - n + mid) as u8).collect();
        match (src.is_empty(), tgt.is_empty()) {
            (false, false) => {
                let mut db = src;
                db.push((n + y) as u8);
                down.push(db);
                let mut ub = vec![y as u8];
                ub.extend(tgt);
                up.push(ub);
                y += 1;
            }
            (false, true) => down.push(src),
            _ => up.push(tgt),
        }
    }
    (Diagram::new_unchecked(d.kind(), mid, m, up), Diagram::new_unchecked(d.kind(), n, mid, down))
}

/// `Σ_y #up([y]→[m]) · #down([n]→[y]) / y!`, which equals `hom_dim(n, m)`
/// when every morphism factors uniquely up to the middle bijections.
pub fn t3_count(n: usize, m: usize, kind: Kind) -> Result<u64> {
    let mut total = 0u64;
    for y in 0..=n.min(m) {
        let ups = enumerate_diagrams(y, m, kind)?.into_iter().filter(Diagram::is_upwards).count() as u64;
        let downs = enumerate_diagrams(n, y, kind)?.into_iter().filter(Diagram::is_downwards).count() as u64;
        let fact: u64 = (1..=y as u64).product();
        let pairs = ups * downs;
        assert_eq!(pairs % fact, 0, "middle bijections must act freely");
        total += pairs / fact;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{compose_diagrams, hom_dim, DiagramMorphism};
    use crate::rational::Rational;

    #[test]
    fn upwards_diagram_factors_through_identity() {
        let d = Diagram::new(Kind::Partition, 2, 3, vec![vec![0, 2, 3], vec![1, 4]]).unwrap();
        assert!(d.is_upwards());
        let (u, v) = triangular_factorize(&d);
        assert_eq!(u, d);
        assert_eq!(v, Diagram::identity(Kind::Partition, 2));
    }

    #[test]
    fn cap_then_cup() {
        let d = Diagram::new(Kind::Brauer, 2, 2, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let (u, v) = triangular_factorize(&d);
        assert_eq!((u.source(), u.target(), v.source(), v.target()), (0, 2, 2, 0));
        assert!(u.is_upwards() && v.is_downwards());
    }

    #[test]
    fn recomposition_is_exact() {
        for kind in [Kind::Brauer, Kind::Partition, Kind::Restricted] {
            for n in 0..=3 {
                for m in 0..=3 {
                    for d in enumerate_diagrams(n, m, kind).unwrap() {
                        let (u, v) = triangular_factorize(&d);
                        assert!(u.is_upwards() && v.is_downwards());
                        assert_eq!(u.source(), d.propagating());
                        let r = compose_diagrams(&u, &v, &Rational::zero()).unwrap();
                        assert_eq!(r, DiagramMorphism::from_diagram(d));
                    }
                }
            }
        }
    }

    #[test]
    fn t3_count_matches_hom_dim() {
        assert_eq!(t3_count(2, 2, Kind::Brauer).unwrap(), 3);
        for kind in [Kind::Brauer, Kind::Partition, Kind::Restricted] {
            for n in 0..=3 {
                for m in 0..=3 {
                    assert_eq!(t3_count(n, m, kind).unwrap() as usize, hom_dim(n, m, kind).unwrap(), "{kind} {n} {m}");
                }
            }
        }
    }
}
