//! Maximum independent sets as maximum cliques of the complement, by
//! branch and bound with a greedy colouring bound (Tomita style).

use crate::graph::Graph;

struct CliqueSearch<'a> {
    adj: &'a [u64],
    best: u64,
}

impl CliqueSearch<'_> {
    /// Greedy colouring of `p`; returns vertices in colour order with the
    /// colour number of each, which bounds the clique size of any prefix.
    fn colour_sort(&self, p: u64) -> (Vec<usize>, Vec<u32>) {
        let mut order = Vec::with_capacity(p.count_ones() as usize);
        let mut bounds = Vec::with_capacity(order.capacity());
        let mut uncoloured = p;
        let mut colour = 0;
        while uncoloured != 0 {
            colour += 1;
            let mut q = uncoloured;
            while q != 0 {
                let v = q.trailing_zeros() as usize;
                q &= !(1u64 << v);
                q &= !self.adj[v];
                uncoloured &= !(1u64 << v);
                order.push(v);
                bounds.push(colour);
            }
        }
        (order, bounds)
    }

    fn expand(&mut self, r: u64, mut p: u64) {
        let (order, bounds) = self.colour_sort(p);
        for idx in (0..order.len()).rev() {
            if r.count_ones() + bounds[idx] <= self.best.count_ones() {
                return;
            }
            let v = order[idx];
            let nr = r | 1u64 << v;
            let np = p & self.adj[v];
            if np == 0 {
                if nr.count_ones() > self.best.count_ones() {
                    self.best = nr;
                }
            } else {
                self.expand(nr, np);
            }
            p &= !(1u64 << v);
        }
    }
}

fn max_clique(g: &Graph) -> u64 {
    let n = g.order();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = CliqueSearch { adj: g.rows(), best: 0 };
    search.expand(0, all);
    search.best
}

/// A maximum independent set, as sorted vertex indices.
pub fn max_independent_set(g: &Graph) -> Vec<usize> {
    let set = max_clique(&g.complement());
    debug_assert!(is_independent(g, set));
    (0..g.order()).filter(|&v| set >> v & 1 == 1).collect()
}

/// `α(G)`.
pub fn independence_number(g: &Graph) -> usize {
    max_clique(&g.complement()).count_ones() as usize
}

pub fn is_independent(g: &Graph, set: u64) -> bool {
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if g.neighbors(v) & set != 0 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{BinaryStarParams, Variant};

    #[test]
    fn families() {
        for n in 1..10 {
            assert_eq!(independence_number(&Graph::complete(n).unwrap()), 1);
            assert_eq!(independence_number(&Graph::empty(n).unwrap()), n);
            assert_eq!(independence_number(&Graph::star(n).unwrap()), (n - 1).max(1));
            assert_eq!(independence_number(&Graph::path(n).unwrap()), n.div_ceil(2));
        }
        assert_eq!(independence_number(&Graph::cycle(5).unwrap()), 2);
        let p3 = Graph::binary_star(BinaryStarParams::new(Variant::B, 0, 1, 0).unwrap()).unwrap();
        assert_eq!(independence_number(&p3), 2);
        let b = Graph::binary_star(BinaryStarParams::new(Variant::B, 2, 3, 1).unwrap()).unwrap();
        assert_eq!(independence_number(&b), 6);
    }

    #[test]
    fn witness_is_independent() {
        let g = Graph::cycle(9).unwrap();
        let set = max_independent_set(&g);
        assert_eq!(set.len(), 4);
        let mask = set.iter().fold(0u64, |m, &v| m | 1 << v);
        assert!(is_independent(&g, mask));
    }

    #[test]
    fn full_width_graph() {
        let g = Graph::empty(64).unwrap();
        assert_eq!(independence_number(&g), 64);
        let g = Graph::cycle(64).unwrap();
        assert_eq!(independence_number(&g), 32);
    }
}
