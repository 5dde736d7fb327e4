//! Canonical labelling by partition refinement and individualisation.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualise each vertex of the first non-singleton cell,
//! recurse. A leaf is a discrete partition, read as a relabelling; the leaf
//! whose relabelled upper triangle is lexicographically smallest wins.
//! Automorphisms found along the way (twin transpositions up front, equal
//! leaves later) prune children lying in the same orbit.

use std::fmt;

use crate::graph::Graph;
use crate::graph6::upper_triangle_sextets;

/// Upper-triangle adjacency bits of the canonically relabelled graph.
/// Equal forms iff isomorphic graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u8>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bits
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        let mut g6 = Vec::with_capacity(self.bits.len() + 4);
        if self.n <= 62 {
            g6.push(self.n as u8 + 63);
        } else {
            g6.push(126);
            for shift in [12, 6, 0] {
                g6.push(((self.n >> shift) & 63) as u8 + 63);
            }
        }
        g6.extend(self.bits.iter().map(|b| b + 63));
        crate::graph6::decode(std::str::from_utf8(&g6).unwrap()).expect("canonical bits decode")
    }

    pub fn to_graph6(&self) -> String {
        crate::graph6::encode(&self.to_graph())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_graph6())
    }
}

type Cells = Vec<Vec<usize>>;

fn mask_of(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |m, &v| m | 1u64 << v)
}

/// Refines to the coarsest equitable partition finer than `cells`. Cells are
/// split by neighbour count into each splitter cell, pieces ordered by count.
fn refine(g: &Graph, cells: &mut Cells) {
    let mut s = 0;
    while s < cells.len() {
        let splitter = mask_of(&cells[s]);
        let mut split_any = false;
        let mut c = 0;
        while c < cells.len() {
            if cells[c].len() == 1 {
                c += 1;
                continue;
            }
            let mut keyed: Vec<(u32, usize)> = cells[c]
                .iter()
                .map(|&v| ((g.neighbors(v) & splitter).count_ones(), v))
                .collect();
            if keyed.iter().all(|&(k, _)| k == keyed[0].0) {
                c += 1;
                continue;
            }
            keyed.sort_unstable();
            let mut pieces: Cells = Vec::new();
            let mut last = None;
            for (k, v) in keyed {
                if last != Some(k) {
                    pieces.push(Vec::new());
                    last = Some(k);
                }
                pieces.last_mut().unwrap().push(v);
            }
            let added = pieces.len();
            cells.splice(c..=c, pieces);
            c += added;
            split_any = true;
        }
        // a split can make earlier splitters informative again
        s = if split_any { 0 } else { s + 1 };
    }
}

struct Search<'a> {
    g: &'a Graph,
    autos: Vec<Vec<usize>>,
    first: Option<(Vec<u8>, Vec<usize>, Vec<usize>)>,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

fn relabel(g: &Graph, cells: &Cells) -> (Vec<u8>, Vec<usize>) {
    let mut perm = vec![0; g.order()];
    for (label, cell) in cells.iter().enumerate() {
        perm[cell[0]] = label;
    }
    (upper_triangle_sextets(&g.permute(&perm)), perm)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Search<'_> {
    /// Orbits of the automorphisms found so far that fix `path` pointwise.
    fn orbits(&self, path: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        for a in &self.autos {
            if path.iter().any(|&v| a[v] != v) {
                continue;
            }
            for (x, &y) in a.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx.max(ry)] = rx.min(ry);
                }
            }
        }
        (0..n).map(|x| find(&mut parent, x)).collect()
    }

    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        // from, to: vertex -> label with equal relabelled graphs
        let n = from.len();
        let mut inv = vec![0; n];
        for (v, &l) in from.iter().enumerate() {
            inv[l] = v;
        }
        let auto: Vec<usize> = (0..n).map(|x| inv[to[x]]).collect();
        if auto.iter().enumerate().any(|(i, &j)| i != j) {
            self.autos.push(auto);
        }
    }

    /// Returns `Some(depth)` to unwind the recursion up to that depth.
    fn visit(&mut self, mut cells: Cells, path: &mut Vec<usize>) -> Option<usize> {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let (key, perm) = relabel(self.g, &cells);
            let Some((first_key, first_perm, first_path)) = &self.first else {
                self.first = Some((key.clone(), perm.clone(), path.clone()));
                self.best = Some((key, perm));
                return None;
            };
            if &key == first_key {
                let (first_perm, first_path) = (first_perm.clone(), first_path.clone());
                self.record_automorphism(&first_perm, &perm);
                let common = first_path.iter().zip(path.iter()).take_while(|(a, b)| a == b).count();
                return Some(common);
            }
            let (best_key, best_perm) = self.best.as_ref().unwrap();
            match key.cmp(best_key) {
                std::cmp::Ordering::Less => self.best = Some((key, perm)),
                std::cmp::Ordering::Equal => {
                    let best_perm = best_perm.clone();
                    self.record_automorphism(&best_perm, &perm);
                }
                std::cmp::Ordering::Greater => {}
            }
            return None;
        };
        let depth = path.len();
        let candidates = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !tried.is_empty() {
                let orbit = self.orbits(path);
                if tried.iter().any(|&w| orbit[w] == orbit[v]) {
                    continue;
                }
            }
            tried.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&x| x != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            path.push(v);
            let jump = self.visit(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }
}

/// Transpositions of twin vertices (equal neighbourhoods apart from each
/// other), which are automorphisms of the whole graph.
fn twin_transpositions(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    let mut covered = 0u64;
    for a in 0..n {
        if covered >> a & 1 == 1 {
            continue;
        }
        for b in a + 1..n {
            let na = g.neighbors(a) & !(1u64 << b);
            let nb = g.neighbors(b) & !(1u64 << a);
            if na == nb {
                let mut t: Vec<usize> = (0..n).collect();
                t.swap(a, b);
                out.push(t);
                covered |= 1u64 << b;
            }
        }
    }
    out
}

/// Canonical relabelling: returns the form and a map `vertex -> label`.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    let mut search = Search { g, autos: twin_transpositions(g), first: None, best: None };
    // degree classes first keeps the initial refinement cheap
    let mut by_degree: Vec<(usize, usize)> = (0..n).map(|v| (g.degree(v), v)).collect();
    by_degree.sort_unstable();
    let mut cells: Cells = Vec::new();
    let mut last = None;
    for (d, v) in by_degree {
        if last != Some(d) {
            cells.push(Vec::new());
            last = Some(d);
        }
        cells.last_mut().unwrap().push(v);
    }
    search.visit(cells, &mut Vec::new());
    let (bits, perm) = search.best.expect("search visits at least one leaf");
    (CanonicalForm { n, bits }, perm)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// The canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, perm) = canonical_labeling(g);
    g.permute(&perm)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{BinaryStarParams, Variant};

    fn bs(v: Variant, p: usize, q: usize, r: usize) -> Graph {
        Graph::binary_star(BinaryStarParams::new(v, p, q, r).unwrap()).unwrap()
    }

    #[test]
    fn small_identities() {
        assert!(is_isomorphic(&Graph::path(4).unwrap(), &bs(Variant::BPrime, 1, 0, 1)));
        assert!(is_isomorphic(&Graph::path(4).unwrap(), &bs(Variant::B, 1, 1, 0)));
        assert!(is_isomorphic(&Graph::cycle(4).unwrap(), &bs(Variant::B, 0, 2, 0)));
        assert!(is_isomorphic(&Graph::path(5).unwrap(), &bs(Variant::B, 1, 1, 1)));
        assert!(is_isomorphic(&Graph::star(6).unwrap(), &bs(Variant::BPrime, 4, 0, 0)));
        assert!(!is_isomorphic(&Graph::path(4).unwrap(), &Graph::star(4).unwrap()));
        assert!(is_isomorphic(
            &Graph::complete_multipartite(&[2, 5]).unwrap(),
            &bs(Variant::B, 0, 5, 0)
        ));
    }

    #[test]
    fn construction_symmetry() {
        for v in [Variant::B, Variant::BPrime] {
            for (p, q, r) in [(3, 2, 1), (0, 3, 2), (4, 1, 2), (2, 2, 5)] {
                assert!(is_isomorphic(&bs(v, p, q, r), &bs(v, r, q, p)));
            }
        }
    }

    #[test]
    fn double_starlike_identities() {
        for (p, r) in [(1, 1), (3, 2), (2, 4)] {
            assert!(is_isomorphic(&Graph::double_starlike(p, 2, r).unwrap(), &Graph::double_star(p, r).unwrap()));
            assert!(is_isomorphic(&Graph::double_starlike(p, 3, r).unwrap(), &bs(Variant::B, p, 1, r)));
        }
        assert!(is_isomorphic(&Graph::double_starlike(1, 4, 1).unwrap(), &Graph::path(6).unwrap()));
        for p in 1..5 {
            assert!(is_isomorphic(&Graph::double_star(p, 0).unwrap(), &Graph::star(p + 2).unwrap()));
        }
    }

    #[test]
    fn complement_of_star_plus_isolated() {
        for n in 3..9 {
            for m in 2..n {
                let s = Graph::star(m).unwrap().disjoint_union(&Graph::empty(n - m).unwrap()).unwrap();
                assert!(is_isomorphic(&s.complement(), &Graph::k1_join_family(n, m).unwrap()));
            }
        }
    }

    #[test]
    fn canonical_graph_has_form() {
        let g = bs(Variant::B, 2, 3, 1);
        let c = canonical_graph(&g);
        assert_eq!(canonical_form(&c), canonical_form(&g));
        assert_eq!(canonical_form(&g).to_graph(), c);
    }

    #[test]
    fn symmetric_graphs_terminate() {
        // highly symmetric inputs stress the orbit pruning
        let rook = {
            let mut edges = Vec::new();
            for a in 0..9 {
                for b in a + 1..9 {
                    if a / 3 == b / 3 || a % 3 == b % 3 {
                        edges.push((a, b));
                    }
                }
            }
            Graph::from_edges(9, &edges).unwrap()
        };
        let perm = [3, 7, 1, 0, 8, 2, 5, 4, 6];
        assert_eq!(canonical_form(&rook), canonical_form(&rook.permute(&perm)));
        let petersen = Graph::from_edges(
            10,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
        )
        .unwrap();
        let perm = [9, 8, 7, 6, 5, 4, 3, 2, 1, 0];
        assert_eq!(canonical_form(&petersen), canonical_form(&petersen.permute(&perm)));
        assert!(!is_isomorphic(&petersen, &Graph::cycle(10).unwrap()));
        let big = Graph::empty(64).unwrap();
        assert_eq!(canonical_form(&big).order(), 64);
        let hyper = Graph::complete_multipartite(&[4, 4, 4, 4]).unwrap();
        assert_eq!(canonical_form(&hyper), canonical_form(&hyper.permute(&[
            15, 0, 14, 1, 13, 2, 12, 3, 11, 4, 10, 5, 9, 6, 8, 7
        ])));
    }
}
