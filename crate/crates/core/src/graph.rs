//! Simple undirected graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` neighbourhood row, so set operations on
//! neighbourhoods are single word operations. Every family constructor uses
//! a frozen vertex numbering, documented on the constructor, so Laplacian
//! matrices built from them have a reproducible block layout.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Which of the two binary star shapes to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// Centres not adjacent.
    B,
    /// Centres adjacent.
    BPrime,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::B => f.write_str("B"),
            Variant::BPrime => f.write_str("B'"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryStarParams {
    pub variant: Variant,
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

impl BinaryStarParams {
    pub fn new(variant: Variant, p: usize, q: usize, r: usize) -> Result<Self> {
        let params = BinaryStarParams { variant, p, q, r };
        params.validate()?;
        Ok(params)
    }

    pub fn order(&self) -> usize {
        self.p + self.q + self.r + 2
    }

    pub fn validate(&self) -> Result<()> {
        if self.order() > MAX_ORDER {
            return Err(Error::Overflow(self.order()));
        }
        if self.variant == Variant::B && self.q == 0 {
            return Err(Error::Params("B(p,0,r) is disconnected; q must be at least 1".into()));
        }
        Ok(())
    }

    /// Swaps the pendant counts so that `p >= r`.
    pub fn normalized(self) -> Self {
        if self.p >= self.r {
            self
        } else {
            BinaryStarParams { p: self.r, r: self.p, ..self }
        }
    }
}

impl fmt::Display for BinaryStarParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{},{})", self.variant, self.p, self.q, self.r)
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        Err(Error::Order(n))
    } else {
        Ok(())
    }
}

#[inline]
fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(i, j) in edges {
            g.check_pair(i, j)?;
            g.set(i, j, true);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbourhood rows, checking symmetry and loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph> {
        let n = rows.len();
        check_order(n)?;
        let mask = low_mask(n);
        for (i, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::Params(format!("row {i} has bits beyond order {n}")));
            }
            if row >> i & 1 == 1 {
                return Err(Error::Loop(i));
            }
            let mut rest = row;
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if rows[j] >> i & 1 == 0 {
                    return Err(Error::Params(format!("asymmetric pair ({i},{j})")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Graph {
        Graph { n: rows.len(), adj: rows }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Neighbourhood of `v` as a bit set.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            let mut rest = self.adj[i] & !low_mask(i + 1);
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.push((i, j));
            }
        }
        out
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        for v in [i, j] {
            if v >= self.n {
                return Err(Error::Vertex { vertex: v, n: self.n });
            }
        }
        if i == j {
            return Err(Error::Loop(i));
        }
        Ok(())
    }

    fn set(&mut self, i: usize, j: usize, on: bool) {
        if on {
            self.adj[i] |= 1 << j;
            self.adj[j] |= 1 << i;
        } else {
            self.adj[i] &= !(1 << j);
            self.adj[j] &= !(1 << i);
        }
    }

    /// Returns the graph with `{i,j}` added and whether the edge was new.
    pub fn add_edge(&self, i: usize, j: usize) -> Result<(Graph, bool)> {
        self.check_pair(i, j)?;
        let mut g = self.clone();
        let changed = !self.has_edge(i, j);
        g.set(i, j, true);
        Ok((g, changed))
    }

    /// Returns the graph with `{i,j}` removed and whether the edge existed.
    pub fn delete_edge(&self, i: usize, j: usize) -> Result<(Graph, bool)> {
        self.check_pair(i, j)?;
        let mut g = self.clone();
        let changed = self.has_edge(i, j);
        g.set(i, j, false);
        Ok((g, changed))
    }

    pub fn complement(&self) -> Graph {
        let mask = low_mask(self.n);
        let adj = (0..self.n).map(|i| !self.adj[i] & mask & !(1u64 << i)).collect();
        Graph { n: self.n, adj }
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (i, j) in self.edges() {
            let (a, b) = (perm[i], perm[j]);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Graph { n: self.n, adj }
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        nabla_blocks(&[Some(self), Some(other)], false)
    }

    pub fn join(&self, other: &Graph) -> Result<Graph> {
        nabla_blocks(&[Some(self), Some(other)], true)
    }

    /// Nonincreasing degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Vertex set of the component containing `start`.
    pub fn component_of(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn component_count(&self) -> usize {
        let mut remaining = low_mask(self.n);
        let mut count = 0;
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            remaining &= !self.component_of(v);
            count += 1;
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == low_mask(self.n)
    }

    pub fn sum_squared_degrees(&self) -> usize {
        self.degrees().iter().map(|d| d * d).sum()
    }

    /// Checks symmetry, absence of loops and the order range.
    pub fn is_well_formed(&self) -> bool {
        if self.n == 0 || self.n > MAX_ORDER || self.adj.len() != self.n {
            return false;
        }
        let mask = low_mask(self.n);
        (0..self.n).all(|i| {
            self.adj[i] & !mask == 0
                && self.adj[i] >> i & 1 == 0
                && (0..self.n).all(|j| self.has_edge(i, j) == self.has_edge(j, i))
        })
    }

    pub fn path(n: usize) -> Result<Graph> {
        check_order(n)?;
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::Params(format!("cycle needs at least 3 vertices, got {n}")));
        }
        check_order(n)?;
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Star of order `n`; vertex 0 is the centre.
    pub fn star(n: usize) -> Result<Graph> {
        check_order(n)?;
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph::empty(n)?.complement())
    }

    /// Parts occupy consecutive vertex blocks in the given order.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Params("multipartite parts must be nonempty".into()));
        }
        let n: usize = parts.iter().sum();
        if n > MAX_ORDER {
            return Err(Error::Overflow(n));
        }
        let mut block = vec![0usize; n];
        let mut at = 0;
        for (b, &size) in parts.iter().enumerate() {
            block[at..at + size].fill(b);
            at += size;
        }
        let mut g = Graph::empty(n)?;
        for i in 0..n {
            for j in i + 1..n {
                if block[i] != block[j] {
                    g.set(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// Double star `S(p,r)`: pendants of the first centre are `0..p`, those
    /// of the second are `p..p+r`, and the centres are `n-2`, `n-1`.
    pub fn double_star(p: usize, r: usize) -> Result<Graph> {
        Graph::binary_star(BinaryStarParams::new(Variant::BPrime, p, 0, r)?)
    }

    /// Binary star `B(p,q,r)` or `B'(p,q,r)`.
    ///
    /// Vertex order: private neighbours of `u` (`0..p`), shared neighbours
    /// (`p..p+q`), private neighbours of `v` (`p+q..p+q+r`), then `u = n-2`
    /// and `v = n-1`.
    pub fn binary_star(params: BinaryStarParams) -> Result<Graph> {
        params.validate()?;
        let BinaryStarParams { variant, p, q, r } = params;
        let n = params.order();
        let (u, v) = (n - 2, n - 1);
        let mut g = Graph::empty(n)?;
        for i in 0..p {
            g.set(i, u, true);
        }
        for i in p..p + q {
            g.set(i, u, true);
            g.set(i, v, true);
        }
        for i in p + q..p + q + r {
            g.set(i, v, true);
        }
        if variant == Variant::BPrime {
            g.set(u, v, true);
        }
        Ok(g)
    }

    /// Double starlike tree `H(p,len,q)`: `p` pendants (`0..p`) on one end of a
    /// path on `len` vertices (`p..p+len`), `q` pendants on the other end.
    pub fn double_starlike(p: usize, len: usize, q: usize) -> Result<Graph> {
        if len < 2 || p == 0 || q == 0 {
            return Err(Error::Params(format!(
                "double starlike tree needs len >= 2 and p, q >= 1; got ({p},{len},{q})"
            )));
        }
        let n = p + len + q;
        if n > MAX_ORDER {
            return Err(Error::Overflow(n));
        }
        let (a, b) = (p, p + len - 1);
        let mut g = Graph::empty(n)?;
        for i in 0..p {
            g.set(i, a, true);
        }
        for i in a..b {
            g.set(i, i + 1, true);
        }
        for i in b + 1..n {
            g.set(i, b, true);
        }
        Ok(g)
    }

    /// `K_1 ∇ K_{n-m} ∇ K_{m-1}` with blocks in that vertex order.
    pub fn k1_join_family(n: usize, m: usize) -> Result<Graph> {
        if n < 3 || m < 2 || m > n - 1 {
            return Err(Error::Params(format!(
                "k1 join family needs 2 <= m <= n-1; got n={n}, m={m}"
            )));
        }
        check_order(n)?;
        let k1 = Graph::complete(1)?;
        let mid = Graph::complete(n - m)?;
        let last = Graph::complete(m - 1)?;
        nabla_chain(&[Some(&k1), Some(&mid), Some(&last)])
    }
}

/// Chains blocks in order, joining consecutive nonempty blocks. `None` is an
/// empty block and breaks the chain at that position.
pub fn nabla_chain(parts: &[Option<&Graph>]) -> Result<Graph> {
    nabla_blocks(parts, true)
}

fn nabla_blocks(parts: &[Option<&Graph>], join: bool) -> Result<Graph> {
    let n: usize = parts.iter().flatten().map(|g| g.n).sum();
    if n > MAX_ORDER {
        return Err(Error::Overflow(n));
    }
    check_order(n)?;
    let mut adj = vec![0u64; n];
    let mut offset = 0;
    let mut prev: Option<(usize, usize)> = None;
    for part in parts {
        let Some(g) = part else {
            prev = None;
            continue;
        };
        for i in 0..g.n {
            adj[offset + i] = g.adj[i] << offset;
        }
        let block = low_mask(g.n) << offset;
        if join {
            if let Some((po, pn)) = prev {
                let prev_block = low_mask(pn) << po;
                for i in po..po + pn {
                    adj[i] |= block;
                }
                for row in adj.iter_mut().skip(offset).take(g.n) {
                    *row |= prev_block;
                }
            }
        }
        prev = Some((offset, g.n));
        offset += g.n;
    }
    Ok(Graph { n, adj })
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
