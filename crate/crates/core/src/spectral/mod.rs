//! Laplacian matrices, exact characteristic polynomials and eigenvalue
//! counting.
//!
//! Eigenvalues are never approximated: counts in an interval come from
//! Sturm chains of the squarefree factors of `μ(G,x) = det(xI - L(G))`,
//! weighted by multiplicity.

pub mod closed_form;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{IntPoly, Interval, Rat, RootSummary, SturmChain};
use crate::error::Result;
use crate::graph::Graph;

pub use closed_form::{
    binary_star_prime_quartic, binary_star_quartic, charpoly_binary_star,
    charpoly_binary_star_prime, charpoly_double_star, charpoly_join, charpoly_k1_join_family,
    double_star_cubic,
};

/// `L(G) = D(G) - A(G)`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaplacianMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl LaplacianMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    /// Symmetric, zero row sums, off-diagonal entries in `{0, -1}`.
    pub fn is_valid(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).map(|j| self.get(i, j)).sum::<i64>() == 0
                && (0..self.n).all(|j| {
                    self.get(i, j) == self.get(j, i) && (i == j || matches!(self.get(i, j), 0 | -1))
                })
        })
    }

    pub fn to_bigint_rows(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .chunks(self.n)
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }
}

pub fn laplacian(g: &Graph) -> LaplacianMatrix {
    let n = g.order();
    let mut entries = vec![0i64; n * n];
    for i in 0..n {
        entries[i * n + i] = g.degree(i) as i64;
        for j in 0..n {
            if g.has_edge(i, j) {
                entries[i * n + j] = -1;
            }
        }
    }
    LaplacianMatrix { n, entries }
}

/// Faddeev–LeVerrier in `i128`; `None` on overflow. Uses sparsity of `L`:
/// `(L·M)_ij = d_i M_ij - Σ_{k ~ i} M_kj`.
fn faddeev_leverrier_i128(g: &Graph) -> Option<Vec<i128>> {
    let n = g.order();
    let deg: Vec<i128> = (0..n).map(|v| g.degree(v) as i128).collect();
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut m = vec![0i128; n * n];
    let mut am = vec![0i128; n * n];
    for k in 1..=n {
        // M_k = L·M_{k-1} + c_{n-k+1} I
        for (dst, src) in m.iter_mut().zip(&am) {
            *dst = *src;
        }
        for i in 0..n {
            m[i * n + i] = m[i * n + i].checked_add(coeffs[n - k + 1])?;
        }
        let mut trace = 0i128;
        for i in 0..n {
            for j in 0..n {
                let mut acc = deg[i].checked_mul(m[i * n + j])?;
                let mut rest = g.neighbors(i);
                while rest != 0 {
                    let t = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    acc = acc.checked_sub(m[t * n + j])?;
                }
                am[i * n + j] = acc;
            }
            trace = trace.checked_add(am[i * n + i])?;
        }
        debug_assert_eq!(trace % k as i128, 0);
        coeffs[n - k] = -(trace / k as i128);
    }
    Some(coeffs)
}

fn faddeev_leverrier_big(g: &Graph) -> Vec<BigInt> {
    let n = g.order();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = vec![BigInt::zero(); n * n];
    let mut am = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        m.clone_from(&am);
        for i in 0..n {
            m[i * n + i] += &coeffs[n - k + 1];
        }
        let mut trace = BigInt::zero();
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::from(g.degree(i)) * &m[i * n + j];
                let mut rest = g.neighbors(i);
                while rest != 0 {
                    let t = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    acc -= &m[t * n + j];
                }
                am[i * n + j] = acc;
            }
            trace += &am[i * n + i];
        }
        let (q, r) = trace.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        coeffs[n - k] = -q;
    }
    coeffs
}

/// `μ(G,x) = det(xI - L(G))`, monic of degree `n`.
pub fn charpoly(g: &Graph) -> IntPoly {
    match faddeev_leverrier_i128(g) {
        Some(c) => IntPoly::new(c.into_iter().map(BigInt::from).collect()),
        None => IntPoly::new(faddeev_leverrier_big(g)),
    }
}

/// Fraction-free Gaussian elimination (Bareiss) with row pivoting.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate { -det } else { det }
}

/// Number of spanning trees, as `|[x^1] μ(G,x)| / n`.
pub fn spanning_tree_count(g: &Graph) -> BigInt {
    spanning_trees_from_charpoly(&charpoly(g), g.order())
}

pub fn spanning_trees_from_charpoly(mu: &IntPoly, n: usize) -> BigInt {
    let (q, r) = mu.coeff(1).abs().div_rem(&BigInt::from(n));
    assert!(r.is_zero(), "n divides the linear coefficient of a Laplacian polynomial");
    q
}

/// Number of spanning trees as the determinant of `L(G)` with row and
/// column 0 removed.
pub fn spanning_tree_count_by_determinant(g: &Graph) -> BigInt {
    let rows = laplacian(g).to_bigint_rows();
    let reduced: Vec<Vec<BigInt>> = rows.into_iter().skip(1).map(|r| r[1..].to_vec()).collect();
    bareiss_determinant(reduced)
}

/// Checks `x·μ(G, n-x) = (-1)^(n-1) (n-x) μ(Ḡ, x)`.
pub fn complement_identity_check(g: &Graph) -> bool {
    let n = g.order() as i64;
    let mu = charpoly(g);
    let mu_c = charpoly(&g.complement());
    let reflected = mu.compose_linear(&BigInt::from(-1), &BigInt::from(n));
    let lhs = &IntPoly::x() * &reflected;
    let n_minus_x = IntPoly::from_i64s(&[n, -1]);
    let mut rhs = &n_minus_x * &mu_c;
    if (n - 1) % 2 == 1 {
        rhs = -&rhs;
    }
    lhs == rhs
}

/// Full coefficient vector of `μ(G, x)`, so grouping by key never merges
/// graphs with different spectra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpectrumKey(Vec<BigInt>);

impl SpectrumKey {
    pub fn of(g: &Graph) -> SpectrumKey {
        SpectrumKey::from_charpoly(&charpoly(g))
    }

    pub fn from_charpoly(mu: &IntPoly) -> SpectrumKey {
        SpectrumKey(mu.coeffs().to_vec())
    }

    pub fn to_charpoly(&self) -> IntPoly {
        IntPoly::new(self.0.clone())
    }
}

/// Charpoly plus its squarefree factorisation and Sturm chains, for
/// answering many interval queries about one graph.
#[derive(Clone, Debug)]
pub struct Spectrum {
    n: usize,
    charpoly: IntPoly,
    factors: Vec<(SturmChain, usize)>,
}

impl Spectrum {
    pub fn of(g: &Graph) -> Spectrum {
        Spectrum::from_charpoly(charpoly(g))
    }

    pub fn from_charpoly(charpoly: IntPoly) -> Spectrum {
        let n = charpoly.degree().expect("nonzero characteristic polynomial");
        let factors = charpoly
            .squarefree_decomposition()
            .into_iter()
            .map(|(f, m)| (SturmChain::from_squarefree(f), m))
            .collect();
        Spectrum { n, charpoly, factors }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn charpoly(&self) -> &IntPoly {
        &self.charpoly
    }

    /// `m_G I`: eigenvalues in `interval`, with multiplicity.
    pub fn count(&self, interval: &Interval) -> usize {
        self.factors.iter().map(|(c, m)| m * c.count(interval)).sum()
    }

    pub fn multiplicity_at(&self, r: &Rat) -> usize {
        self.charpoly.multiplicity_at(r)
    }

    /// Compares the `k`-th largest eigenvalue (1-based) with `c` by counting:
    /// `λ_k > c` iff at least `k` eigenvalues exceed `c`, and `λ_k >= c` iff
    /// at least `k` eigenvalues are `>= c`.
    pub fn lambda_k_vs(&self, k: usize, c: &Rat) -> Ordering {
        assert!(k >= 1 && k <= self.n, "eigenvalue index out of range");
        if self.count(&Interval::above(c.clone())) >= k {
            Ordering::Greater
        } else if self.count(&Interval::at_least(c.clone())) >= k {
            Ordering::Equal
        } else {
            Ordering::Less
        }
    }

    /// Largest integer `d` with `d <= λ_k`.
    pub fn floor_lambda_k(&self, k: usize) -> i64 {
        let mut d = self.n as i64 * 2;
        while self.lambda_k_vs(k, &Rat::from_integer(d.into())) == Ordering::Less {
            d -= 1;
        }
        d
    }

    pub fn roots(&self, width: &Rat) -> Result<RootSummary> {
        RootSummary::isolate(&self.charpoly, width)
    }

    pub fn spanning_trees(&self) -> BigInt {
        spanning_trees_from_charpoly(&self.charpoly, self.n)
    }
}

pub fn m_count(g: &Graph, interval: &Interval) -> usize {
    Spectrum::of(g).count(interval)
}

pub fn lambda_k_vs(g: &Graph, k: usize, c: &Rat) -> Ordering {
    Spectrum::of(g).lambda_k_vs(k, c)
}
