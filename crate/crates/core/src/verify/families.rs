//! Checks on the binary star families, swept over parameter triples.

use std::cmp::Ordering;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::json;

use super::{sweep_items, CheckId, Options, Report, Tally};
use crate::algebra::{int, IntPoly, Rat};
use crate::enumeration::graphs;
use crate::error::{Error, Result};
use crate::graph::{BinaryStarParams, Graph, Variant};
use crate::spectral::{
    binary_star_prime_quartic, binary_star_quartic, charpoly, double_star_cubic, spanning_tree_count,
    spanning_tree_count_by_determinant, spanning_trees_from_charpoly, Spectrum,
};

/// Every valid parameter triple of order `3..=max_order`. With `normalized`
/// only `p >= r` is produced.
fn triples(max_order: usize, normalized: bool) -> Vec<BinaryStarParams> {
    let mut out = Vec::new();
    for n in 3..=max_order {
        for p in 0..=n - 2 {
            for q in 0..=n - 2 - p {
                let r = n - 2 - p - q;
                if normalized && r > p {
                    continue;
                }
                for v in [Variant::B, Variant::BPrime] {
                    if let Ok(params) = BinaryStarParams::new(v, p, q, r) {
                        out.push(params);
                    }
                }
            }
        }
    }
    out
}

/// Membership in the families of the `α = n-2` classification.
fn in_classification_family(b: &BinaryStarParams) -> bool {
    match b.variant {
        Variant::B => b.p + b.q + b.r >= 3,
        Variant::BPrime => b.q >= 1 || b.p * b.r >= 2,
    }
}

/// One evaluation of a factor polynomial: the point, the value computed by
/// evaluation, and the value claimed by the closed formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignRow {
    pub label: String,
    pub point: BigInt,
    pub computed: BigInt,
    pub expected: BigInt,
}

/// Sign table of the factor polynomial that carries `λ1` and `λ2`: the
/// quartic `f` for B, the double star cubic `g` for B' with `q = 0`, the
/// quartic `h` for B' otherwise.
pub fn sign_table(b: &BinaryStarParams) -> Vec<SignRow> {
    let (p, q, r) = (BigInt::from(b.p), BigInt::from(b.q), BigInt::from(b.r));
    let s = &p - &r;
    let one = BigInt::one();
    let (name, poly, rows): (&str, IntPoly, Vec<(BigInt, BigInt)>) = match (b.variant, b.q) {
        (Variant::B, _) => (
            "f",
            binary_star_quartic(b.p, b.q, b.r),
            vec![
                (BigInt::from(0), &q * (&p + &q + &r + 2)),
                (one.clone(), -(&p * &r)),
                (BigInt::from(2), &q * (&p + &q + &r - 2)),
                (&p + &q + 1, -(&q * (&q + &p - &r))),
                (
                    &p + &q + 2,
                    s.pow(3)
                        + s.pow(2) * (2 * &q + 2 * &r + 3)
                        + &s * (&q * &q + &q * (2 * &r + 3) + &r * &r + 4 * &r + 2)
                        + &r * (2 * &q + &r + 2),
                ),
            ],
        ),
        (Variant::BPrime, 0) => (
            "g",
            double_star_cubic(b.p, b.r),
            vec![
                (BigInt::from(0), -(&p + &r + 2u32)),
                (one.clone(), &p * &r),
                (BigInt::from(2), &s * (2 * &r - 1) + 2 * &r * (&r - 1)),
                (&p + 2, -r.clone()),
                (&p + 3, s.pow(2) + &s * (&r + 4) + 4),
            ],
        ),
        (Variant::BPrime, _) => (
            "h",
            binary_star_prime_quartic(b.p, b.q, b.r),
            vec![
                (BigInt::from(0), (&q + 2) * (&p + &q + &r + 2)),
                (one.clone(), -(&p * &r)),
                (BigInt::from(2), &q * (&p + &q + &r)),
                (&p + &q + 2, -(&p * &r)),
                (
                    &p + &q + 3,
                    s.pow(3)
                        + s.pow(2) * (2 * &q + 2 * &r + 5)
                        + &s * (&q * &q + &q * (2 * &r + 6) + &r * &r + 5 * &r + 8)
                        + (&q + 2) * (&q + 2 * &r + 2),
                ),
            ],
        ),
    };
    rows.into_iter()
        .map(|(x, expected)| SignRow {
            label: format!("{name}({x})"),
            computed: poly.eval_int(&x),
            point: x,
            expected,
        })
        .collect()
}

fn describe(ord: Ordering) -> &'static str {
    match ord {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    }
}

fn check_brackets(b: &BinaryStarParams, t: &mut Tally) -> Result<()> {
    let g = Graph::binary_star(*b)?;
    let n = g.order() as i64;
    let spec = Spectrum::of(&g);
    let (p, q) = (b.p as i64, b.q as i64);
    let fail = |t: &mut Tally, what: String| t.fail(&g, format!("{b}: {what}"));

    let above_two = spec.count(&crate::algebra::Interval::open_closed(int(2), int(n)));
    if above_two != 2 {
        fail(t, format!("m(2,n]={above_two}"));
    }
    let expect = |t: &mut Tally, k: usize, c: i64, want: Ordering| {
        let got = spec.lambda_k_vs(k, &int(c));
        if got != want {
            fail(t, format!("lambda_{k} {} {c}, expected {}", describe(got), describe(want)));
        }
    };
    // (λ2 lower, middle, λ1 upper) for the open bracket cases
    let bracket = match (b.variant, b.q, b.r) {
        (Variant::B, _, _) if p >= 1 => Some((p + q + 1, p + q + 2)),
        (Variant::B, _, _) => {
            expect(t, 1, n, Ordering::Equal);
            expect(t, 2, q, Ordering::Equal);
            None
        }
        (Variant::BPrime, 0, _) => Some((p + 2, p + 3)),
        (Variant::BPrime, _, 0) => {
            expect(t, 1, n, Ordering::Equal);
            expect(t, 2, q + 2, Ordering::Equal);
            None
        }
        (Variant::BPrime, _, _) => Some((p + q + 2, p + q + 3)),
    };
    if let Some((mid, top)) = bracket {
        expect(t, 2, 2, Ordering::Greater);
        expect(t, 2, mid, Ordering::Less);
        expect(t, 1, mid, Ordering::Greater);
        expect(t, 1, top, Ordering::Less);
    }
    if q >= 2 {
        expect(t, 3, 2, Ordering::Equal);
    }
    for row in sign_table(b) {
        if row.computed != row.expected {
            fail(t, format!("{} = {} but formula gives {}", row.label, row.computed, row.expected));
        }
    }
    Ok(())
}

/// Eigenvalue brackets and sign table for one member of the `α = n-2`
/// families (`p >= r`).
pub fn verify_eigenvalue_brackets(b: BinaryStarParams, opts: &Options) -> Result<Report> {
    let started = Instant::now();
    if b.p < b.r || !in_classification_family(&b) {
        return Err(Error::Params(format!("{b} needs p >= r and family membership")));
    }
    let mut t = Tally::new(opts.cap);
    t.examined(1);
    check_brackets(&b, &mut t)?;
    let params = vec![
        ("variant", json!(b.variant.to_string())),
        ("p", json!(b.p)),
        ("q", json!(b.q)),
        ("r", json!(b.r)),
    ];
    Ok(t.into_report(CheckId::Brackets.name(), params, started, opts))
}

/// [`verify_eigenvalue_brackets`] for every family member of order `<= max_order`.
pub fn verify_eigenvalue_brackets_sweep(max_order: usize, opts: &Options) -> Result<Report> {
    let started = Instant::now();
    let items: Vec<BinaryStarParams> = triples(max_order, true).into_iter().filter(in_classification_family).collect();
    let t = sweep_items(&items, opts, |b, t| {
        if let Err(e) = check_brackets(b, t) {
            t.fail_raw(String::new(), format!("{b}: {e}"));
        }
    });
    Ok(t.into_report(CheckId::Brackets.name(), vec![("max_n", json!(max_order))], started, opts))
}

/// `2^(q-1) q` for B, plus `2^q` for B'; computed as `2^q q / 2`.
fn expected_trees(b: &BinaryStarParams) -> BigInt {
    let pow = BigInt::one() << b.q;
    let base = &pow * BigInt::from(b.q) / 2;
    match b.variant {
        Variant::B => base,
        Variant::BPrime => base + pow,
    }
}

/// Spanning-tree formulas for every triple of order `<= max_order`, and the
/// coefficient method against the reduced determinant on all graphs `n <= 7`.
pub fn verify_spanning_trees(max_order: usize, opts: &Options) -> Result<Report> {
    let started = Instant::now();
    let items = triples(max_order, false);
    let mut t = sweep_items(&items, opts, |b, t| {
        let Ok(g) = Graph::binary_star(*b) else { return };
        let got = spanning_tree_count(&g);
        let want = expected_trees(b);
        if got != want {
            t.fail(&g, format!("{b}: {got} spanning trees, formula {want}"));
        }
    });
    let enumerated = max_order.min(7);
    for n in 1..=enumerated {
        let stream = graphs(n, false)?;
        t = t.merge(super::sweep(&stream, opts, |g, t| {
            let mu = charpoly(g);
            let (a, b) = (spanning_trees_from_charpoly(&mu, n), spanning_tree_count_by_determinant(g));
            if a != b {
                t.fail(g, format!("coefficient method {a}, determinant {b}"));
            }
        }));
    }
    let params = vec![("max_n", json!(max_order)), ("max_n_enumerated", json!(enumerated))];
    Ok(t.into_report(CheckId::SpanningTrees.name(), params, started, opts))
}

/// `0 < λ_{n-1} < 1` for every binary star with `pr != 0`.
pub fn verify_algebraic_connectivity_corollary(max_order: usize, opts: &Options) -> Result<Report> {
    let started = Instant::now();
    let items: Vec<BinaryStarParams> = triples(max_order, false).into_iter().filter(|b| b.p * b.r != 0).collect();
    let t = sweep_items(&items, opts, |b, t| {
        let Ok(g) = Graph::binary_star(*b) else { return };
        let spec = Spectrum::of(&g);
        let k = g.order() - 1;
        if spec.lambda_k_vs(k, &int(1)) != Ordering::Less {
            t.fail(&g, format!("{b}: algebraic connectivity not below 1"));
        }
        if spec.lambda_k_vs(k, &int(0)) != Ordering::Greater {
            t.fail(&g, format!("{b}: algebraic connectivity not positive"));
        }
    });
    Ok(t.into_report(CheckId::AlgebraicConnectivity.name(), vec![("max_n", json!(max_order))], started, opts))
}

/// Degree sequences `(d1, d2, 3^a, 2^b, 1^c)` of `n` vertices with the given
/// edge count and degree-square sum, `d1 <= d1_max`, `d2 <= d2_max`, every
/// later degree at most `tail_max` and at most `d2`. Sorted ascending.
pub fn feasible_degree_sequences_with_bounds(
    n: usize,
    edges: usize,
    squares: usize,
    d1_max: usize,
    d2_max: usize,
    tail_max: usize,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let tail_max = tail_max.min(3);
    for d1 in 1..=d1_max.min(n - 1) {
        for d2 in 1..=d1.min(d2_max) {
            for n3 in 0..=n - 2 {
                for n2 in 0..=n - 2 - n3 {
                    let n1 = n - 2 - n3 - n2;
                    if (n3 > 0 && (d2 < 3 || tail_max < 3)) || (n2 > 0 && (d2 < 2 || tail_max < 2)) {
                        continue;
                    }
                    if d1 + d2 + 3 * n3 + 2 * n2 + n1 != 2 * edges {
                        continue;
                    }
                    if d1 * d1 + d2 * d2 + 9 * n3 + 4 * n2 + n1 != squares {
                        continue;
                    }
                    let mut seq = vec![d1, d2];
                    seq.extend(std::iter::repeat(3).take(n3));
                    seq.extend(std::iter::repeat(2).take(n2));
                    seq.extend(std::iter::repeat(1).take(n1));
                    out.push(seq);
                }
            }
        }
    }
    out.sort();
    out
}

/// Candidate degree sequences of a graph L-cospectral with `B(p,q,p)` or
/// `B'(p,q,p)` of order `n`. Uses `d1 <= p+q` (B) or `d1 <= p+q+1` (B'),
/// which follow from `d1 <= λ1 - 1` and the upper bracket on `λ1`, and
/// `d3 <= 3` from `λ3 = 2`.
pub fn feasible_degree_sequences(n: usize, p: usize, q: usize, variant: Variant) -> Result<Vec<Vec<usize>>> {
    let params = BinaryStarParams::new(variant, p, q, p)?;
    if params.order() != n {
        return Err(Error::Params(format!("{params} has order {}, not {n}", params.order())));
    }
    let centre = p + q + usize::from(variant == Variant::BPrime);
    let edges = 2 * p + 2 * q + usize::from(variant == Variant::BPrime);
    let squares = 2 * centre * centre + 4 * q + 2 * p;
    Ok(feasible_degree_sequences_with_bounds(n, edges, squares, centre, centre, 3))
}

/// The two graphs with `q - 2` shared neighbours left over when two
/// vertices outside the common neighbourhood are adjacent: centres `u ~ v`,
/// `q - 2` shared degree-2 vertices, `p + 1` private neighbours each, and one
/// extra edge. In (a) it joins two private neighbours of `u`; in (b) it joins
/// a private neighbour of `u` to one of `v`.
pub fn figure7_candidates(p: usize, q: usize) -> Result<(Graph, Graph)> {
    if p < 1 || q < 2 {
        return Err(Error::Params(format!("candidates need p >= 1 and q >= 2, got ({p},{q})")));
    }
    let n = 2 * p + q + 2;
    let (u, v) = (n - 2, n - 1);
    let mut edges = vec![(u, v)];
    for i in 0..=p {
        edges.push((u, i));
        edges.push((v, p + 1 + i));
    }
    for w in 2 * p + 2..2 * p + q {
        edges.push((u, w));
        edges.push((v, w));
    }
    let a = Graph::from_edges(n, &[edges.as_slice(), &[(0, 1)]].concat())?;
    let b = Graph::from_edges(n, &[edges.as_slice(), &[(0, p + 1)]].concat())?;
    Ok((a, b))
}

/// Spanning-tree counts of the two candidates times 8, as closed forms:
/// `3q 2^q` and `(3q + 2) 2^q`.
pub(crate) fn figure7_trees_times_8(q: usize) -> (BigInt, BigInt) {
    let pow = BigInt::one() << q;
    (BigInt::from(3 * q) * &pow, BigInt::from(3 * q + 2) * pow)
}

pub(crate) fn eigenvalue_one_multiplicity(g: &Graph) -> usize {
    charpoly(g).multiplicity_at(&Rat::from_integer(BigInt::one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::is_isomorphic;

    fn opts() -> Options {
        Options { timing: false, ..Options::default() }
    }

    fn bp(v: Variant, p: usize, q: usize, r: usize) -> BinaryStarParams {
        BinaryStarParams::new(v, p, q, r).unwrap()
    }

    #[test]
    fn sign_table_examples() {
        let f = sign_table(&bp(Variant::B, 2, 1, 1));
        assert_eq!(f[0].computed, BigInt::from(6));
        assert_eq!(f[2].computed, BigInt::from(2));
        let h = sign_table(&bp(Variant::BPrime, 2, 3, 1));
        assert_eq!(h[1].computed, BigInt::from(-2));
        let g = sign_table(&bp(Variant::BPrime, 3, 0, 2));
        assert_eq!(g[3].computed, BigInt::from(-2));
        for row in f.iter().chain(&h).chain(&g) {
            assert_eq!(row.computed, row.expected, "{}", row.label);
        }
    }

    #[test]
    fn brackets_small_sweep() {
        let r = verify_eigenvalue_brackets_sweep(9, &opts()).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert!(verify_eigenvalue_brackets(bp(Variant::B, 1, 1, 0), &opts()).is_err());
        assert!(verify_eigenvalue_brackets(bp(Variant::BPrime, 1, 0, 1), &opts()).is_err());
    }

    #[test]
    fn tree_formulas() {
        assert_eq!(expected_trees(&bp(Variant::B, 0, 2, 0)), BigInt::from(4));
        assert_eq!(expected_trees(&bp(Variant::BPrime, 1, 2, 1)), BigInt::from(8));
        assert_eq!(expected_trees(&bp(Variant::B, 1, 1, 1)), BigInt::from(1));
        assert_eq!(expected_trees(&bp(Variant::BPrime, 3, 0, 2)), BigInt::from(1));
        let r = verify_spanning_trees(10, &opts()).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn corollary_small() {
        let r = verify_algebraic_connectivity_corollary(10, &opts()).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn degree_sequence_rows() {
        let f = |n, p, q| feasible_degree_sequences(n, p, q, Variant::B).unwrap();
        assert_eq!(f(6, 1, 2), vec![vec![3, 3, 2, 2, 1, 1]]);
        assert_eq!(f(6, 0, 4), vec![vec![4, 3, 3, 3, 2, 1], vec![4, 4, 2, 2, 2, 2]]);
        assert!(feasible_degree_sequences(7, 1, 2, Variant::B).is_err());
        for (p, q) in [(1, 2), (2, 3), (3, 1), (2, 2)] {
            for v in [Variant::B, Variant::BPrime] {
                let b = bp(v, p, q, p);
                let own = Graph::binary_star(b).unwrap().degree_sequence();
                assert!(feasible_degree_sequences(b.order(), p, q, v).unwrap().contains(&own), "{b}");
            }
        }
    }

    #[test]
    fn candidates() {
        for p in 1..4 {
            for q in 2..6 {
                let (a, b) = figure7_candidates(p, q).unwrap();
                let star = Graph::binary_star(bp(Variant::B, p, q, p)).unwrap();
                assert_eq!(a.edge_count(), star.edge_count());
                assert!(!is_isomorphic(&a, &star) && !is_isomorphic(&b, &star));
                let (ta, tb) = figure7_trees_times_8(q);
                assert_eq!(spanning_tree_count(&a) * 8, ta);
                assert_eq!(spanning_tree_count(&b) * 8, tb);
            }
            let (_, b) = figure7_candidates(p, 2).unwrap();
            let star = Graph::binary_star(bp(Variant::B, p, 2, p)).unwrap();
            assert_eq!(spanning_tree_count(&b), spanning_tree_count(&star));
            assert_eq!(eigenvalue_one_multiplicity(&b), 2 * p - 1);
            assert_eq!(eigenvalue_one_multiplicity(&star), 2 * p - 2);
        }
    }
}
