//! Browser bindings: explore binary star spectra, count eigenvalues of any
//! graph6 graph in an interval, and test the independence lower bound.
//!
//! Each export returns a JSON string; the plain functions behind them are
//! ordinary Rust so they are tested natively.

use std::cmp::Ordering;

use lapspec::algebra::{int, Interval, Rat};
use lapspec::combinatorics::{canonical_form, independence_number, max_independent_set};
use lapspec::spectral::Spectrum;
use lapspec::{graph6, BinaryStarParams, Graph, Variant};
use num_bigint::BigInt;
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct Eigenvalue {
    approx: f64,
    lo: String,
    hi: String,
    exact: bool,
    multiplicity: usize,
}

#[derive(Serialize)]
struct GraphView {
    graph6: String,
    order: usize,
    edges: Vec<(usize, usize)>,
    charpoly: String,
    eigenvalues: Vec<Eigenvalue>,
    spanning_trees: String,
}

fn view(g: &Graph) -> Result<GraphView, String> {
    let spec = Spectrum::of(g);
    let width = Rat::new(BigInt::from(1), BigInt::from(1) << 24);
    let roots = spec.roots(&width).map_err(|e| e.to_string())?;
    let eigenvalues = roots
        .entries()
        .iter()
        .map(|e| Eigenvalue {
            approx: e.root.to_f64(),
            lo: e.root.lo().to_string(),
            hi: e.root.hi().to_string(),
            exact: e.root.is_exact(),
            multiplicity: e.multiplicity,
        })
        .collect();
    Ok(GraphView {
        graph6: graph6::encode(g),
        order: g.order(),
        edges: g.edges(),
        charpoly: spec.charpoly().to_string(),
        eigenvalues,
        spanning_trees: spec.spanning_trees().to_string(),
    })
}

#[derive(Serialize)]
struct StarReport {
    name: String,
    #[serde(flatten)]
    view: GraphView,
    alpha: usize,
    /// `m_G[0, 2]`
    at_most_two: usize,
    /// `m_G(2, n]`
    above_two: usize,
    /// Whether `α = n-2` and `m_G[0,2] = n-2` both hold.
    attains_equality: bool,
    lambda3_vs_2: &'static str,
}

fn ordering_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
}

/// Spectrum and parameters of `B(p,q,r)` (`variant` "B") or `B'(p,q,r)`.
pub fn binary_star_report(variant: &str, p: usize, q: usize, r: usize) -> Result<String, String> {
    let v = match variant {
        "B" => Variant::B,
        "B'" | "BPrime" => Variant::BPrime,
        other => return Err(format!("unknown variant `{other}`")),
    };
    let params = BinaryStarParams::new(v, p, q, r).map_err(|e| e.to_string())?;
    if params.order() > 24 {
        return Err("the demo stops at 24 vertices".into());
    }
    let g = Graph::binary_star(params).map_err(|e| e.to_string())?;
    let n = g.order();
    let spec = Spectrum::of(&g);
    let alpha = independence_number(&g);
    let at_most_two = spec.count(&Interval::closed(int(0), int(2)));
    let report = StarReport {
        name: params.to_string(),
        view: view(&g)?,
        alpha,
        at_most_two,
        above_two: spec.count(&Interval::open_closed(int(2), int(n as i64))),
        attains_equality: alpha + 2 == n && at_most_two + 2 == n,
        lambda3_vs_2: if n >= 3 { ordering_name(spec.lambda_k_vs(3, &int(2))) } else { "n/a" },
    };
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct CountReport {
    interval: String,
    count: usize,
    #[serde(flatten)]
    view: GraphView,
}

/// Eigenvalues of a graph6 graph in an interval such as "[0,2]" or "(1/2,3)".
pub fn interval_count(code: &str, interval: &str) -> Result<String, String> {
    let g = graph6::decode(code.trim()).map_err(|e| e.to_string())?;
    if g.order() > 24 {
        return Err("the demo stops at 24 vertices".into());
    }
    let iv: Interval = interval.parse().map_err(|e: lapspec::Error| e.to_string())?;
    let count = Spectrum::of(&g).count(&iv);
    let report = CountReport { interval: iv.to_string(), count, view: view(&g)? };
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct BoundReport {
    graph6: String,
    order: usize,
    alpha: usize,
    witness: Vec<usize>,
    /// `m_G[0, n-α]`
    count: usize,
    holds: bool,
    equality: bool,
    /// Binary star with the same canonical form, if any.
    binary_star: Option<String>,
}

fn matching_binary_star(g: &Graph) -> Option<String> {
    let n = g.order();
    let form = canonical_form(g);
    for p in 0..=n.checked_sub(2)? {
        for q in 0..=n - 2 - p {
            let r = n - 2 - p - q;
            for v in [Variant::B, Variant::BPrime] {
                let Ok(params) = BinaryStarParams::new(v, p, q, r) else { continue };
                if canonical_form(&Graph::binary_star(params).ok()?) == form {
                    return Some(params.to_string());
                }
            }
        }
    }
    None
}

/// `α(G) <= m_G[0, n-α(G)]` for one graph, with the witness set.
pub fn lower_bound(code: &str) -> Result<String, String> {
    let g = graph6::decode(code.trim()).map_err(|e| e.to_string())?;
    if g.order() > 24 {
        return Err("the demo stops at 24 vertices".into());
    }
    let n = g.order();
    let witness = max_independent_set(&g);
    let alpha = witness.len();
    let count = Spectrum::of(&g).count(&Interval::closed(int(0), int((n - alpha) as i64)));
    let report = BoundReport {
        graph6: graph6::encode(&g),
        order: n,
        alpha,
        witness,
        count,
        holds: alpha <= count,
        equality: alpha == count,
        binary_star: matching_binary_star(&g),
    };
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = binaryStar)]
pub fn binary_star_js(variant: &str, p: usize, q: usize, r: usize) -> Result<String, JsValue> {
    binary_star_report(variant, p, q, r).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = intervalCount)]
pub fn interval_count_js(graph6: &str, interval: &str) -> Result<String, JsValue> {
    interval_count(graph6, interval).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = lowerBound)]
pub fn lower_bound_js(graph6: &str) -> Result<String, JsValue> {
    lower_bound(graph6).map_err(|e| JsValue::from_str(&e))
}
