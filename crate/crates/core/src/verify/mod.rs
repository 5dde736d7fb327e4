//! Named checks for each claim, each producing a [`Report`].
//!
//! Exhaustive checks walk the enumerated classes in shards; partial results
//! merge associatively and counterexamples are kept sorted, so a report does
//! not depend on the shard count or on thread scheduling.

mod exhaustive;
mod families;
mod random;
mod report;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::enumeration::{stream_partition, GraphStream};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

pub use exhaustive::{
    classify_equality_alpha2, classify_equality_alpha_n_minus_2, cospectral_groups, dls_check,
    verify_cospectral_invariants, verify_degree_eigenvalue_bounds, verify_lower_bound,
};
pub use families::{
    feasible_degree_sequences, feasible_degree_sequences_with_bounds, figure7_candidates, sign_table,
    verify_algebraic_connectivity_corollary, verify_eigenvalue_brackets, verify_eigenvalue_brackets_sweep,
    verify_spanning_trees, SignRow,
};
pub use random::{random_graph, verify_interlacing, verify_multiplicity_lemmas};
pub use report::{Counterexample, Report, Stats, Status};

/// Knobs shared by every check.
#[derive(Clone, Debug)]
pub struct Options {
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    /// Counterexamples kept in a report.
    pub cap: usize,
    pub seed: u64,
    /// Record wall-clock time; off gives byte-identical reports.
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { jobs: 0, cap: 10, seed: 0, timing: true }
    }
}

impl Options {
    fn shards(&self) -> usize {
        let threads = if self.jobs == 0 { rayon::current_num_threads() } else { self.jobs };
        threads * 4
    }

    /// Runs `f` on a pool of `jobs` threads (the global pool when 0).
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        if self.jobs == 0 {
            return f();
        }
        match rayon::ThreadPoolBuilder::new().num_threads(self.jobs).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }
}

/// Partial result of a check; merging is associative and commutative.
#[derive(Clone, Debug, Default)]
pub(crate) struct Tally {
    cap: usize,
    examined: u64,
    violations: u64,
    examples: Vec<Counterexample>,
}

impl Tally {
    pub(crate) fn new(cap: usize) -> Tally {
        Tally { cap, ..Tally::default() }
    }

    pub(crate) fn examined(&mut self, k: u64) {
        self.examined += k;
    }

    pub(crate) fn fail(&mut self, g: &Graph, detail: impl Into<String>) {
        self.fail_raw(graph6::encode(g), detail.into());
    }

    pub(crate) fn fail_raw(&mut self, graph6: String, detail: String) {
        self.violations += 1;
        self.examples.push(Counterexample { graph6, detail });
        if self.examples.len() > 4 * self.cap.max(1) {
            self.trim();
        }
    }

    fn trim(&mut self) {
        self.examples.sort();
        self.examples.dedup();
        self.examples.truncate(self.cap);
    }

    pub(crate) fn merge(mut self, other: Tally) -> Tally {
        self.examined += other.examined;
        self.violations += other.violations;
        self.examples.extend(other.examples);
        self.trim();
        self
    }

    pub(crate) fn into_report(mut self, check: &str, params: Vec<(&str, serde_json::Value)>, started: Instant, opts: &Options) -> Report {
        self.trim();
        let elapsed_ms = if opts.timing { started.elapsed().as_millis() as u64 } else { 0 };
        Report {
            check: check.to_string(),
            params: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            status: if self.violations == 0 { Status::Pass } else { Status::Fail },
            counterexamples: self.examples,
            stats: Stats { graphs_examined: self.examined, violations: self.violations, elapsed_ms },
            info: Vec::new(),
        }
    }
}

/// Applies `f` to every graph of `stream`, shard-parallel.
pub(crate) fn sweep<F>(stream: &GraphStream, opts: &Options, f: F) -> Tally
where
    F: Fn(&Graph, &mut Tally) + Sync,
{
    stream_partition(stream, opts.shards())
        .into_par_iter()
        .map(|shard| {
            let mut t = Tally::new(opts.cap);
            for g in &shard {
                t.examined(1);
                f(g, &mut t);
            }
            t
        })
        .reduce(|| Tally::new(opts.cap), Tally::merge)
}

/// Applies `f` to each item of a list, in parallel.
pub(crate) fn sweep_items<T, F>(items: &[T], opts: &Options, f: F) -> Tally
where
    T: Sync,
    F: Fn(&T, &mut Tally) + Sync,
{
    items
        .par_iter()
        .fold(
            || Tally::new(opts.cap),
            |mut t, item| {
                t.examined(1);
                f(item, &mut t);
                t
            },
        )
        .reduce(|| Tally::new(opts.cap), Tally::merge)
}

/// Identifiers accepted by [`run`] and the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    LowerBound,
    Alpha2,
    AlphaNMinus2,
    Brackets,
    SpanningTrees,
    AlgebraicConnectivity,
    Multiplicity,
    Interlacing,
    DegreeBounds,
    Cospectral,
    Dls,
}

impl CheckId {
    pub const ALL: [CheckId; 11] = [
        CheckId::LowerBound,
        CheckId::Alpha2,
        CheckId::AlphaNMinus2,
        CheckId::Brackets,
        CheckId::SpanningTrees,
        CheckId::AlgebraicConnectivity,
        CheckId::Multiplicity,
        CheckId::Interlacing,
        CheckId::DegreeBounds,
        CheckId::Cospectral,
        CheckId::Dls,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::LowerBound => "lower-bound",
            CheckId::Alpha2 => "alpha2",
            CheckId::AlphaNMinus2 => "alpha-n-minus-2",
            CheckId::Brackets => "brackets",
            CheckId::SpanningTrees => "spanning-trees",
            CheckId::AlgebraicConnectivity => "algebraic-connectivity",
            CheckId::Multiplicity => "multiplicity",
            CheckId::Interlacing => "interlacing",
            CheckId::DegreeBounds => "degree-bounds",
            CheckId::Cospectral => "cospectral",
            CheckId::Dls => "dls",
        }
    }

    /// Default and largest accepted `max_n` (an order bound for family
    /// sweeps, an enumeration bound otherwise).
    pub fn max_n_range(self) -> (usize, usize) {
        match self {
            CheckId::LowerBound => (7, 9),
            CheckId::Alpha2 | CheckId::AlphaNMinus2 => (8, 9),
            CheckId::Brackets | CheckId::AlgebraicConnectivity => (14, 16),
            CheckId::SpanningTrees => (16, 16),
            CheckId::Multiplicity => (7, 7),
            CheckId::Interlacing => (10, 10),
            CheckId::DegreeBounds => (7, 9),
            CheckId::Cospectral => (8, 8),
            CheckId::Dls => (8, 9),
        }
    }

    pub fn default_trials(self) -> usize {
        match self {
            CheckId::Multiplicity => 1000,
            CheckId::Interlacing => 500,
            _ => 0,
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<CheckId> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check `{s}`")))
    }
}

/// Runs a check over its whole range: `max_n` and `trials` default per check.
pub fn run(id: CheckId, max_n: Option<usize>, trials: Option<usize>, opts: &Options) -> Result<Report> {
    let (default_n, cap) = id.max_n_range();
    let max_n = max_n.unwrap_or(default_n);
    if max_n > cap {
        return Err(Error::ResourceCap(max_n));
    }
    let trials = trials.unwrap_or(id.default_trials());
    opts.install(|| match id {
        CheckId::LowerBound => verify_lower_bound(max_n, opts),
        CheckId::Alpha2 => exhaustive::classify_range(id, 4, max_n, opts),
        CheckId::AlphaNMinus2 => exhaustive::classify_range(id, 4, max_n, opts),
        CheckId::Brackets => verify_eigenvalue_brackets_sweep(max_n, opts),
        CheckId::SpanningTrees => verify_spanning_trees(max_n, opts),
        CheckId::AlgebraicConnectivity => verify_algebraic_connectivity_corollary(max_n, opts),
        CheckId::Multiplicity => verify_multiplicity_lemmas(max_n, trials, opts),
        CheckId::Interlacing => verify_interlacing(trials, max_n, opts),
        CheckId::DegreeBounds => verify_degree_eigenvalue_bounds(max_n, opts),
        CheckId::Cospectral => verify_cospectral_invariants(max_n, opts),
        CheckId::Dls => dls_check(max_n, opts),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_round_trip() {
        for id in CheckId::ALL {
            assert_eq!(id.name().parse::<CheckId>().unwrap(), id);
        }
        assert!("nope".parse::<CheckId>().is_err());
    }

    #[test]
    fn tally_merge_is_order_insensitive() {
        let g = Graph::path(3).unwrap();
        let mut parts = Vec::new();
        for i in 0..6 {
            let mut t = Tally::new(3);
            t.examined(1);
            t.fail_raw(format!("g{}", 5 - i), "x".into());
            t.fail(&g, format!("d{i}"));
            parts.push(t);
        }
        let fwd = parts.iter().cloned().fold(Tally::new(3), Tally::merge);
        let rev = parts.iter().rev().cloned().fold(Tally::new(3), Tally::merge);
        assert_eq!(fwd.examples, rev.examples);
        assert_eq!(fwd.violations, 12);
        assert_eq!(fwd.examples.len(), 3);
    }

    #[test]
    fn caps_are_enforced() {
        let o = Options::default();
        assert!(matches!(run(CheckId::LowerBound, Some(10), None, &o), Err(Error::ResourceCap(10))));
        assert!(matches!(run(CheckId::Cospectral, Some(9), None, &o), Err(Error::ResourceCap(9))));
    }
}
