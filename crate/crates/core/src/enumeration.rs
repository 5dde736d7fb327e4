//! All graphs of a given order up to isomorphism, by vertex augmentation.
//!
//! Order `n` is built from order `n - 1`: every class gets one new vertex
//! joined to each possible neighbourhood, the result is canonicalised, and
//! duplicates are dropped. Levels are cached for the life of the process.

use std::collections::HashSet;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::combinatorics::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the enumerator will build.
pub const MAX_ENUMERATION_ORDER: usize = 9;

struct Level {
    all: Arc<Vec<Graph>>,
    connected: Arc<Vec<Graph>>,
}

fn cache() -> &'static Mutex<Vec<Level>> {
    static CACHE: OnceLock<Mutex<Vec<Level>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

fn extend(parents: &[Graph]) -> Vec<Graph> {
    let m = parents[0].order();
    let forms: HashSet<CanonicalForm> = parents
        .par_iter()
        .fold(HashSet::new, |mut seen, g| {
            let mut rows = g.rows().to_vec();
            rows.push(0);
            for nb in 0..1u64 << m {
                let mut child = rows.clone();
                child[m] = nb;
                for (v, row) in child.iter_mut().enumerate().take(m) {
                    if nb >> v & 1 == 1 {
                        *row |= 1 << m;
                    }
                }
                seen.insert(canonical_form(&Graph::from_rows_unchecked(child)));
            }
            seen
        })
        .reduce(HashSet::new, |a, b| {
            let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
            big.extend(small);
            big
        });
    let mut forms: Vec<CanonicalForm> = forms.into_iter().collect();
    forms.par_sort_unstable();
    forms.par_iter().map(CanonicalForm::to_graph).collect()
}

fn level(n: usize) -> Result<(Arc<Vec<Graph>>, Arc<Vec<Graph>>)> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::ResourceCap(n));
    }
    let mut levels = cache().lock().unwrap_or_else(|e| e.into_inner());
    if levels.is_empty() {
        let k1 = vec![Graph::empty(1)?];
        levels.push(Level { all: Arc::new(k1.clone()), connected: Arc::new(k1) });
    }
    while levels.len() < n {
        let all = extend(&levels.last().unwrap().all);
        let connected: Vec<Graph> = all.iter().filter(|g| g.is_connected()).cloned().collect();
        levels.push(Level { all: Arc::new(all), connected: Arc::new(connected) });
    }
    let lv = &levels[n - 1];
    Ok((lv.all.clone(), lv.connected.clone()))
}

/// The isomorphism classes of one order, canonically labelled and in
/// ascending canonical-form order. A shard sees every `stride`-th class.
#[derive(Clone, Debug)]
pub struct GraphStream {
    n: usize,
    connected_only: bool,
    items: Arc<Vec<Graph>>,
    offset: usize,
    stride: usize,
}

impl GraphStream {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn connected_only(&self) -> bool {
        self.connected_only
    }

    pub fn len(&self) -> usize {
        if self.offset >= self.items.len() {
            0
        } else {
            (self.items.len() - self.offset).div_ceil(self.stride)
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &Graph> + '_ {
        self.items.iter().skip(self.offset).step_by(self.stride)
    }

    pub fn to_vec(&self) -> Vec<Graph> {
        self.iter().cloned().collect()
    }
}

impl<'a> IntoIterator for &'a GraphStream {
    type Item = &'a Graph;
    type IntoIter = std::iter::StepBy<std::iter::Skip<std::slice::Iter<'a, Graph>>>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter().skip(self.offset).step_by(self.stride)
    }
}

/// All classes of order `n` (`1 <= n <= 9`), optionally connected only.
pub fn graphs(n: usize, connected_only: bool) -> Result<GraphStream> {
    let (all, connected) = level(n)?;
    let items = if connected_only { connected } else { all };
    Ok(GraphStream { n, connected_only, items, offset: 0, stride: 1 })
}

/// Splits a stream round-robin into `shards` disjoint sub-streams.
pub fn stream_partition(stream: &GraphStream, shards: usize) -> Vec<GraphStream> {
    let shards = shards.max(1);
    (0..shards)
        .map(|i| GraphStream {
            offset: stream.offset + i * stream.stride,
            stride: stream.stride * shards,
            ..stream.clone()
        })
        .collect()
}
