//! Independent oracles for the integration tests. Nothing here calls the
//! library's own algorithms for the quantity it checks.
#![allow(dead_code)]

use lapspec::algebra::{IntPoly, Rat};
use lapspec::Graph;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Determinant by Gaussian elimination over the rationals.
pub fn rational_det(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for c in col..n {
                let v = &f * &m[col][c];
                m[r][c] -= v;
            }
        }
    }
    det
}

fn laplacian_rows(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.order();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        g.degree(i) as i64
                    } else if g.has_edge(i, j) {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

/// `det(xI - L)` sampled at `x = 0..=n` and interpolated (Lagrange).
pub fn charpoly_by_interpolation(g: &Graph) -> IntPoly {
    let n = g.order();
    let l = laplacian_rows(g);
    let xs: Vec<i64> = (0..=n as i64).collect();
    let ys: Vec<Rat> = xs
        .iter()
        .map(|&x| {
            let m = (0..n)
                .map(|i| (0..n).map(|j| Rat::from_integer(BigInt::from(i64::from(i == j) * x - l[i][j]))).collect())
                .collect();
            rational_det(m)
        })
        .collect();
    let mut coeffs = vec![Rat::zero(); n + 1];
    for (i, &xi) in xs.iter().enumerate() {
        // basis polynomial prod_{j != i} (x - xj) / (xi - xj)
        let mut basis = vec![Rat::one()];
        let mut denom = Rat::one();
        for (j, &xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Rat::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * Rat::from_integer(BigInt::from(xj));
            }
            basis = next;
            denom *= Rat::from_integer(BigInt::from(xi - xj));
        }
        for (k, c) in basis.iter().enumerate() {
            coeffs[k] += c * &ys[i] / &denom;
        }
    }
    IntPoly::new(
        coeffs
            .into_iter()
            .map(|c| {
                assert!(c.is_integer(), "interpolated coefficient not integral");
                c.to_integer()
            })
            .collect(),
    )
}

/// Largest independent set by checking every subset.
pub fn brute_force_alpha(g: &Graph) -> usize {
    let n = g.order();
    let mut best = 0;
    for set in 0u64..1 << n {
        let size = set.count_ones() as usize;
        if size <= best {
            continue;
        }
        if (0..n).all(|v| set >> v & 1 == 0 || g.neighbors(v) & set == 0) {
            best = size;
        }
    }
    best
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism classes among all labelled graphs of order `n` (`n <= 6`),
/// found by marking whole orbits under the symmetric group.
/// Returns `(all classes, connected classes)`.
pub fn labelled_class_counts(n: usize) -> (usize, usize) {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i.min(j), i.max(j))).unwrap();
    let perms = permutations(n);
    let images: Vec<Vec<usize>> =
        perms.iter().map(|p| pairs.iter().map(|&(i, j)| index(p[i], p[j])).collect()).collect();
    let total = 1usize << pairs.len();
    let mut seen = vec![false; total];
    let (mut all, mut connected) = (0, 0);
    for code in 0..total {
        if seen[code] {
            continue;
        }
        all += 1;
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(k, _)| code >> k & 1 == 1).map(|(_, &e)| e).collect();
        if Graph::from_edges(n, &edges).unwrap().is_connected() {
            connected += 1;
        }
        for img in &images {
            let mut c = 0;
            for (k, &to) in img.iter().enumerate() {
                if code >> k & 1 == 1 {
                    c |= 1 << to;
                }
            }
            seen[c] = true;
        }
    }
    (all, connected)
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _sweep in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off < 1e-22 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
    ev
}

pub fn laplacian_f64(g: &Graph) -> Vec<Vec<f64>> {
    laplacian_rows(g).into_iter().map(|r| r.into_iter().map(|v| v as f64).collect()).collect()
}
