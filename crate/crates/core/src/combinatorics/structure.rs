//! Pendant stars and degree-2 common neighbourhoods.

use crate::graph::Graph;

/// Sum over pendant-star centres of (pendant count − 1). A `K2` component
/// has two candidate centres with one pendant each and contributes 0.
pub fn star_degree(g: &Graph) -> usize {
    let n = g.order();
    let pendants: u64 = (0..n).filter(|&v| g.degree(v) == 1).fold(0, |m, v| m | 1u64 << v);
    let mut total = 0;
    for v in 0..n {
        let k = (g.neighbors(v) & pendants).count_ones() as usize;
        if k == 0 {
            continue;
        }
        if k == 1 && pendants >> v & 1 == 1 {
            // K2 component: count it once, as 1 − 1
            continue;
        }
        total += k - 1;
    }
    total
}

/// Vertices whose whole neighbourhood is exactly `{u, v}`.
pub fn common_neighborhood_set(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    assert_ne!(u, v, "common neighbourhood needs two distinct vertices");
    let target = 1u64 << u | 1u64 << v;
    (0..g.order()).filter(|&w| g.neighbors(w) == target).collect()
}

/// Every pair `(u, v)`, `u < v`, with a nonempty degree-2 common set.
pub fn all_deg2_sets(g: &Graph) -> Vec<((usize, usize), Vec<usize>)> {
    let mut out: Vec<((usize, usize), Vec<usize>)> = Vec::new();
    for w in 0..g.order() {
        let nb = g.neighbors(w);
        if nb.count_ones() != 2 {
            continue;
        }
        let u = nb.trailing_zeros() as usize;
        let v = 63 - nb.leading_zeros() as usize;
        match out.iter_mut().find(|(pair, _)| *pair == (u, v)) {
            Some((_, set)) => set.push(w),
            None => out.push(((u, v), vec![w])),
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{BinaryStarParams, Variant};

    #[test]
    fn star_degrees() {
        for n in 3..9 {
            assert_eq!(star_degree(&Graph::star(n).unwrap()), n - 2);
            assert_eq!(star_degree(&Graph::cycle(n).unwrap()), 0);
        }
        assert_eq!(star_degree(&Graph::complete(2).unwrap()), 0);
        for (p, q, r) in [(1, 1, 1), (3, 2, 2), (4, 1, 1)] {
            let g = Graph::binary_star(BinaryStarParams::new(Variant::B, p, q, r).unwrap()).unwrap();
            assert_eq!(star_degree(&g), p + r - 2);
        }
    }

    #[test]
    fn deg2_sets() {
        let g = Graph::binary_star(BinaryStarParams::new(Variant::B, 2, 3, 1).unwrap()).unwrap();
        let (u, v) = (g.order() - 2, g.order() - 1);
        assert_eq!(common_neighborhood_set(&g, u, v), vec![2, 3, 4]);
        assert_eq!(all_deg2_sets(&g), vec![((u, v), vec![2, 3, 4])]);
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(common_neighborhood_set(&c4, 0, 2), vec![1, 3]);
        assert!(all_deg2_sets(&Graph::complete(5).unwrap()).is_empty());
    }
}
