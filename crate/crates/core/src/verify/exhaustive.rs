//! Checks that sweep every isomorphism class of an order.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;

use super::{sweep, CheckId, Options, Report, Tally};
use crate::algebra::{int, Interval};
use crate::combinatorics::{canonical_graph, independence_number};
use crate::enumeration::graphs;
use crate::error::Result;
use crate::graph::{BinaryStarParams, Graph, Variant};
use crate::graph6;
use crate::spectral::{Spectrum, SpectrumKey};

use super::families::{eigenvalue_one_multiplicity, figure7_candidates, figure7_trees_times_8};

/// `α(G) <= m_G[0, n - α(G)]` for every connected graph of order `3..=max_n`.
pub fn verify_lower_bound(max_n: usize, opts: &Options) -> Result<Report> {
    let started = Instant::now();
    let mut total = Tally::new(opts.cap);
    for n in 3..=max_n {
        let stream = graphs(n, true)?;
        total = total.merge(sweep(&stream, opts, |g, t| {
            let alpha = independence_number(g);
            let spec = Spectrum::of(g);
            let m = spec.count(&Interval::closed(int(0), int((n - alpha) as i64)));
            if alpha > m {
                t.fail(g, format!("alpha={alpha} m[0,{}]={m}", n - alpha));
            }
        }));
    }
    Ok(total.into_report(CheckId::LowerBound.name(), vec![("max_n", json!(max_n))], started, opts))
}

fn canonical_key(g: &Graph) -> String {
    graph6::encode(&canonical_graph(g))
}

/// Graphs of order `n` in a classification family, as canonical graph6.
fn family(id: CheckId, n: usize) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    match id {
        CheckId::Alpha2 => {
            for m in 2..n {
                out.insert(canonical_key(&Graph::k1_join_family(n, m)?), format!("K1+K{}+K{}", n - m, m - 1));
            }
        }
        _ => {
            let k = n - 2;
            for p in 0..=k {
                for q in 0..=k - p {
                    let r = k - p - q;
                    if r > p {
                        continue;
                    }
                    let mut members = Vec::new();
                    if q >= 1 && p + q + r >= 3 {
                        members.push(Variant::B);
                    }
                    if q >= 1 || p * r >= 2 {
                        members.push(Variant::BPrime);
                    }
                    for v in members {
                        let params = BinaryStarParams::new(v, p, q, r)?;
                        out.insert(canonical_key(&Graph::binary_star(params)?), params.to_string());
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Set equality between the graphs attaining equality and the family.
fn classify(id: CheckId, n: usize, opts: &Options) -> Result<Report> {
    let started = Instant::now();
    let stream = graphs(n, true)?;
    let hits: Vec<String> = stream
        .to_vec()
        .par_iter()
        .filter(|g| {
            let alpha = independence_number(g);
            let spec = Spectrum::of(g);
            match id {
                CheckId::Alpha2 => alpha == 2 && spec.count(&Interval::closed(int(0), int(n as i64 - 2))) == 2,
                _ => alpha + 2 == n && spec.count(&Interval::closed(int(0), int(2))) == n - 2,
            }
        })
        .map(graph6::encode)
        .collect();
    let equality: BTreeSet<String> = hits.into_iter().collect();
    let fam = family(id, n)?;
    let mut t = Tally::new(opts.cap);
    t.examined(stream.len() as u64);
    for g in &equality {
        if !fam.contains_key(g) {
            t.fail_raw(g.clone(), "attains equality but is not in the family".into());
        }
    }
    for (g, name) in &fam {
        if !equality.contains(g) {
            t.fail_raw(g.clone(), format!("family member {name} does not attain equality"));
        }
    }
    let mut report = t.into_report(id.name(), vec![("n", json!(n))], started, opts);
    report.info.push(format!("n={n}: equality set {} graphs, family {} classes", equality.len(), fam.len()));
    Ok(report)
}

/// Connected graphs with `α = 2` and `m_G[0, n-2] = 2` are exactly the
/// graphs `K1 ∇ K_{n-m} ∇ K_{m-1}`, `2 <= m <= n-1`.
pub fn classify_equality_alpha2(n: usize, opts: &Options) -> Result<Report> {
    classify(CheckId::Alpha2, n, opts)
}

/// Connected graphs with `α = n-2` and `m_G[0, 2] = n-2` are exactly the
/// binary stars `B(p,q,r)` with `p+q+r >= 3`, `B'(p,0,r)` with `pr >= 2` and
/// `B'(p,q,r)` with `q >= 1`.
pub fn classify_equality_alpha_n_minus_2(n: usize, opts: &Options) -> Result<Report> {
    classify(CheckId::AlphaNMinus2, n, opts)
}

pub(crate) fn classify_range(id: CheckId, lo: usize, hi: usize, opts: &Options) -> Result<Report> {
    let mut merged: Option<Report> = None;
    for n in lo..=hi {
        let r = classify(id, n, opts)?;
        match merged.as_mut() {
            None => merged = Some(r),
            Some(m) => m.absorb(r, opts.cap),
        }
    }
    let mut report = match merged {
        Some(r) => r,
        None => Tally::new(opts.cap).into_report(id.name(), Vec::new(), Instant::now(), opts),
    };
    report.params = [("max_n".to_string(), json!(hi)), ("min_n".to_string(), json!(lo))].into_iter().collect();
    Ok(report)
}

/// `λ1 >= d1+1`, `λ2 >= d2`, `λ3 >= d3-1` for connected graphs, `4 <= n <= max_n`.
pub fn verify_degree_eigenvalue_bounds(max_n: usize, opts: &Options) -> Result<Report> {
    let started = Instant::now();
    let mut total = Tally::new(opts.cap);
    for n in 4..=max_n {
        let stream = graphs(n, true)?;
        total = total.merge(sweep(&stream, opts, |g, t| {
            let d = g.degree_sequence();
            let spec = Spectrum::of(g);
            let bounds = [(1, d[0] as i64 + 1), (2, d[1] as i64), (3, d[2] as i64 - 1)];
            for (k, c) in bounds {
                if spec.lambda_k_vs(k, &int(c)) == std::cmp::Ordering::Less {
                    t.fail(g, format!("lambda_{k} < {c}"));
                }
            }
        }));
    }
    Ok(total.into_report(CheckId::DegreeBounds.name(), vec![("max_n", json!(max_n))], started, opts))
}

/// Nontrivial L-cospectral classes of order `n`, each sorted, in key order.
pub fn cospectral_groups(n: usize, connected_only: bool) -> Result<Vec<Vec<Graph>>> {
    let stream = graphs(n, connected_only)?;
    let keyed: Vec<(SpectrumKey, Graph)> =
        stream.to_vec().into_par_iter().map(|g| (SpectrumKey::of(&g), g)).collect();
    let mut groups: BTreeMap<SpectrumKey, Vec<Graph>> = BTreeMap::new();
    for (k, g) in keyed {
        groups.entry(k).or_default().push(g);
    }
    Ok(groups.into_values().filter(|v| v.len() > 1).collect())
}

struct Invariants {
    n: usize,
    edges: usize,
    components: usize,
    trees: BigInt,
    squares: usize,
}

/// Inside every L-cospectral class (all graphs of each order `<= max_n`),
/// order, size, component count, spanning-tree count and `Σ d_i^2` agree.
pub fn verify_cospectral_invariants(max_n: usize, opts: &Options) -> Result<Report> {
    let started = Instant::now();
    let mut total = Tally::new(opts.cap);
    let mut info = Vec::new();
    for n in 1..=max_n {
        let stream = graphs(n, false)?;
        // components are a spectral invariant only if they match mult(0)
        total = total.merge(sweep(&stream, opts, |g, t| {
            let zero = Spectrum::of(g).multiplicity_at(&int(0));
            if zero != g.component_count() {
                t.fail(g, format!("components={} but mult(0)={zero}", g.component_count()));
            }
        }));
        let groups = cospectral_groups(n, false)?;
        for group in &groups {
            let inv: Vec<Invariants> = group
                .iter()
                .map(|g| Invariants {
                    n: g.order(),
                    edges: g.edge_count(),
                    components: g.component_count(),
                    trees: crate::spectral::spanning_tree_count_by_determinant(g),
                    squares: g.sum_squared_degrees(),
                })
                .collect();
            for (g, i) in group.iter().zip(&inv).skip(1) {
                let a = &inv[0];
                let same = (a.n, a.edges, a.components, &a.trees, a.squares) == (i.n, i.edges, i.components, &i.trees, i.squares);
                if !same {
                    total.fail(g, format!("invariants differ from cospectral mate {}", graph6::encode(&group[0])));
                }
            }
        }
        if let Some(first) = groups.first() {
            let names: Vec<String> = first.iter().map(graph6::encode).collect();
            info.push(format!("n={n}: {} cospectral classes, e.g. {}", groups.len(), names.join(" ")));
        }
    }
    let mut report = total.into_report(CheckId::Cospectral.name(), vec![("max_n", json!(max_n))], started, opts);
    report.info = info;
    Ok(report)
}

/// Every `B(p,q,p)` and `B'(p,q,p)` of order `<= max_n` is alone in its
/// L-cospectral class among connected graphs. Mates must be connected since
/// the number of components is the multiplicity of 0.
pub fn dls_check(max_n: usize, opts: &Options) -> Result<Report> {
    let started = Instant::now();
    let mut total = Tally::new(opts.cap);
    let mut info = Vec::new();
    for n in 1..=max_n {
        let groups = cospectral_groups(n, true)?;
        let mut mates: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for group in &groups {
            let names: Vec<String> = group.iter().map(graph6::encode).collect();
            for name in &names {
                mates.insert(name.clone(), names.iter().filter(|x| *x != name).cloned().collect());
            }
        }
        total.examined(graphs(n, true)?.len() as u64);
        for p in 0..=n.saturating_sub(2) / 2 {
            let Some(q) = n.checked_sub(2 * p + 2) else { continue };
            for v in [Variant::B, Variant::BPrime] {
                let Ok(params) = BinaryStarParams::new(v, p, q, p) else { continue };
                let key = canonical_key(&Graph::binary_star(params)?);
                if let Some(others) = mates.get(&key) {
                    total.fail_raw(key.clone(), format!("{params} is L-cospectral with {}", others.join(" ")));
                }
                if v == Variant::B && p >= 1 && q >= 2 {
                    discriminate(p, q, &mut total)?;
                }
            }
        }
        info.push(format!("n={n}: {} nontrivial connected cospectral classes", groups.len()));
    }
    let mut report = total.into_report(CheckId::Dls.name(), vec![("max_n", json!(max_n))], started, opts);
    report.info = info;
    Ok(report)
}

/// The two leftover candidates for a mate of `B(p,q,p)` differ from it in
/// spanning-tree count, or for (b) at `q = 2` in the multiplicity of 1.
fn discriminate(p: usize, q: usize, t: &mut Tally) -> Result<()> {
    let star = Graph::binary_star(BinaryStarParams::new(Variant::B, p, q, p)?)?;
    let trees = crate::spectral::spanning_tree_count(&star);
    let (a, b) = figure7_candidates(p, q)?;
    let (ta, tb) = (crate::spectral::spanning_tree_count(&a), crate::spectral::spanning_tree_count(&b));
    let (wa, wb) = figure7_trees_times_8(q);
    if &ta * 8 != wa || &tb * 8 != wb {
        t.fail(&a, format!("candidate tree counts {ta}, {tb} disagree with the closed forms"));
    }
    if ta == trees {
        t.fail(&a, format!("candidate (a) for B({p},{q},{p}) has the same tree count"));
    }
    if tb == trees && eigenvalue_one_multiplicity(&b) == eigenvalue_one_multiplicity(&star) {
        t.fail(&b, format!("candidate (b) for B({p},{q},{p}) is not separated"));
    }
    Ok(())
}
