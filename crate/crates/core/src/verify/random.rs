//! Multiplicity lemmas and edge interlacing, exhaustively and on seeded
//! Erdős–Rényi graphs with edge probability 1/2.

use std::cmp::Ordering;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{sweep, sweep_items, CheckId, Options, Report, Tally};
use crate::algebra::{int, RealRoot, Rat, RootSummary};
use crate::combinatorics::{all_deg2_sets, star_degree};
use crate::enumeration::graphs;
use crate::error::Result;
use crate::graph::Graph;
use crate::spectral::charpoly;

/// `G(n, 1/2)` drawn from `rng`.
pub fn random_graph<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("order within bounds")
}

fn multiplicity_lemmas(g: &Graph, t: &mut Tally) {
    let mu = charpoly(g);
    let m1 = mu.multiplicity_at(&int(1));
    let sd = star_degree(g);
    if m1 < sd {
        t.fail(g, format!("mult(1)={m1} < star degree {sd}"));
    }
    let sets = all_deg2_sets(g);
    if sets.is_empty() {
        return;
    }
    let m2 = mu.multiplicity_at(&int(2));
    let mut sum = 0;
    for ((u, v), set) in &sets {
        if m2 + 1 < set.len() {
            t.fail(g, format!("mult(2)={m2} < |N({u},{v})|-1={}", set.len() - 1));
        }
        sum += set.len() - 1;
    }
    if m2 < sum {
        t.fail(g, format!("mult(2)={m2} < summed bound {sum}"));
    }
}

/// Multiplicity of 1 against the star degree, and of 2 against each
/// degree-2 common neighbourhood and their sum; all graphs `n <= n_exhaustive`
/// plus `trials` random graphs with `2 <= n <= 12`.
pub fn verify_multiplicity_lemmas(n_exhaustive: usize, trials: usize, opts: &Options) -> Result<Report> {
    let started = Instant::now();
    let mut total = Tally::new(opts.cap);
    for n in 1..=n_exhaustive {
        total = total.merge(sweep(&graphs(n, false)?, opts, multiplicity_lemmas));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let sample: Vec<Graph> = (0..trials)
        .map(|_| {
            let n = rng.gen_range(2..=12);
            random_graph(n, &mut rng)
        })
        .collect();
    total = total.merge(sweep_items(&sample, opts, multiplicity_lemmas));
    let params = vec![
        ("max_n", json!(n_exhaustive)),
        ("trials", json!(trials)),
        ("seed", json!(opts.seed)),
        ("model", json!("erdos-renyi p=1/2, 2<=n<=12")),
    ];
    Ok(total.into_report(CheckId::Multiplicity.name(), params, started, opts))
}

fn descending_roots(g: &Graph) -> Result<Vec<RealRoot>> {
    let mut roots = RootSummary::isolate(&charpoly(g), &Rat::from_integer(BigInt::from(1)))?.expanded();
    roots.reverse();
    Ok(roots)
}

/// Checks `λ_i(G-e) <= λ_i(G) <= λ_{i-1}(G-e)`; every comparison is exact.
pub(crate) fn interlacing_holds(g: &Graph, h: &Graph) -> Result<std::result::Result<(), String>> {
    let mut lg = descending_roots(g)?;
    let mut lh = descending_roots(h)?;
    for i in 0..lg.len() {
        if lh[i].compare(&mut lg[i])? == Ordering::Greater {
            return Ok(Err(format!("lambda_{}(G-e) > lambda_{}(G)", i + 1, i + 1)));
        }
        if i > 0 && lg[i].compare(&mut lh[i - 1])? == Ordering::Greater {
            return Ok(Err(format!("lambda_{}(G) > lambda_{}(G-e)", i + 1, i)));
        }
    }
    Ok(Ok(()))
}

/// Edge interlacing on `trials` random pairs `(G, e)` with `2 <= n <= max_n`.
pub fn verify_interlacing(trials: usize, max_n: usize, opts: &Options) -> Result<Report> {
    let started = Instant::now();
    let max_n = max_n.max(2);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut sample = Vec::with_capacity(trials);
    for _ in 0..trials {
        let n = rng.gen_range(2..=max_n);
        let mut g = random_graph(n, &mut rng);
        if g.edge_count() == 0 {
            let i = rng.gen_range(0..n - 1);
            let j = rng.gen_range(i + 1..n);
            g = g.add_edge(i, j)?.0;
        }
        let edges = g.edges();
        let e = edges[rng.gen_range(0..edges.len())];
        sample.push((g, e));
    }
    let t = sweep_items(&sample, opts, |(g, (i, j)), t| {
        let h = g.delete_edge(*i, *j).expect("edge of g").0;
        match interlacing_holds(g, &h) {
            Ok(Ok(())) => {}
            Ok(Err(why)) => t.fail(g, format!("e=({i},{j}): {why}")),
            Err(e) => t.fail(g, format!("e=({i},{j}): {e}")),
        }
    });
    let params = vec![
        ("max_n", json!(max_n)),
        ("trials", json!(trials)),
        ("seed", json!(opts.seed)),
        ("model", json!("erdos-renyi p=1/2, uniform edge")),
    ];
    Ok(t.into_report(CheckId::Interlacing.name(), params, started, opts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> Options {
        Options { timing: false, ..Options::default() }
    }

    #[test]
    fn interlacing_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let p4 = c4.delete_edge(0, 1).unwrap().0;
        assert_eq!(interlacing_holds(&c4, &p4).unwrap(), Ok(()));
        let k2 = Graph::complete(2).unwrap();
        let e2 = Graph::empty(2).unwrap();
        assert_eq!(interlacing_holds(&k2, &e2).unwrap(), Ok(()));
        // swapped roles must break the chain
        assert!(interlacing_holds(&p4, &c4).unwrap().is_err());
    }

    #[test]
    fn small_runs_pass_and_repeat() {
        let a = verify_interlacing(60, 8, &opts()).unwrap();
        assert!(a.passed(), "{}", a.to_text());
        assert_eq!(a.to_json(), verify_interlacing(60, 8, &opts()).unwrap().to_json());
        let m = verify_multiplicity_lemmas(5, 100, &opts()).unwrap();
        assert!(m.passed(), "{}", m.to_text());
        assert_eq!(m.stats.graphs_examined, 1 + 2 + 4 + 11 + 34 + 100);
    }
}
