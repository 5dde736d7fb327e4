mod support;

use lapspec::combinatorics::{canonical_form, independence_number, is_independent, max_independent_set};
use lapspec::enumeration::graphs;
use lapspec::spectral::{charpoly, spanning_tree_count, spanning_tree_count_by_determinant};
use lapspec::verify::random_graph;
use lapspec::{BinaryStarParams, Graph, Variant};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn enumeration_matches_labelled_orbit_count() {
    for n in 1..=6 {
        let (all, connected) = support::labelled_class_counts(n);
        assert_eq!(graphs(n, false).unwrap().len(), all, "n={n}");
        assert_eq!(graphs(n, true).unwrap().len(), connected, "n={n}");
    }
}

#[test]
fn order_four_connected_classes() {
    let named = [
        Graph::path(4).unwrap(),
        Graph::cycle(4).unwrap(),
        Graph::star(4).unwrap(),
        Graph::complete(4).unwrap(),
        Graph::k1_join_family(4, 2).unwrap(),
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap(),
    ];
    let mut want: Vec<_> = named.iter().map(canonical_form).collect();
    want.sort();
    let got: Vec<_> = graphs(4, true).unwrap().iter().map(canonical_form).collect();
    assert_eq!(got, want);
}

#[test]
fn families_appear_in_streams() {
    for n in 3..=8 {
        let forms: std::collections::HashSet<_> = graphs(n, true).unwrap().iter().map(canonical_form).collect();
        for p in 0..=n - 2 {
            for q in 0..=n - 2 - p {
                for v in [Variant::B, Variant::BPrime] {
                    if let Ok(b) = BinaryStarParams::new(v, p, q, n - 2 - p - q) {
                        assert!(forms.contains(&canonical_form(&Graph::binary_star(b).unwrap())), "{b}");
                    }
                }
            }
        }
        for m in 2..n {
            assert!(forms.contains(&canonical_form(&Graph::k1_join_family(n, m).unwrap())));
        }
    }
}

#[test]
fn charpoly_matches_interpolated_determinants() {
    for n in 1..=6 {
        for g in &graphs(n, false).unwrap() {
            assert_eq!(charpoly(g), support::charpoly_by_interpolation(g), "{}", lapspec::graph6::encode(g));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let n = rng.gen_range(7..=12);
        let g = random_graph(n, &mut rng);
        assert_eq!(charpoly(&g), support::charpoly_by_interpolation(&g));
    }
}

#[test]
fn charpoly_trace_and_constant() {
    for g in &graphs(7, false).unwrap() {
        let mu = charpoly(g);
        assert_eq!(mu.degree(), Some(7));
        assert!(mu.coeff(0) == 0.into());
        assert_eq!(mu.coeff(6), num_bigint::BigInt::from(-2 * g.edge_count() as i64));
    }
}

#[test]
fn independence_matches_brute_force() {
    for n in 1..=7 {
        for g in &graphs(n, false).unwrap() {
            let alpha = independence_number(g);
            assert_eq!(alpha, support::brute_force_alpha(g), "{}", lapspec::graph6::encode(g));
            let set = max_independent_set(g);
            assert_eq!(set.len(), alpha);
            assert!(is_independent(g, set.iter().fold(0, |m, &v| m | 1 << v)));
        }
    }
}

#[test]
fn spanning_tree_methods_agree_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let n = rng.gen_range(1..=14);
        let g = random_graph(n, &mut rng);
        assert_eq!(spanning_tree_count(&g), spanning_tree_count_by_determinant(&g));
    }
}
