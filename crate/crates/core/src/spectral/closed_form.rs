//! Closed-form Laplacian characteristic polynomials for the graph families
//! used in the classification. Factors written with a negative exponent in
//! degenerate parameter ranges are realised by asserted exact division.

use num_bigint::BigInt;

use crate::algebra::IntPoly;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::charpoly;

fn big(v: usize) -> BigInt {
    BigInt::from(v)
}

/// `x^4 - a1 x^3 + a2 x^2 - a3 x + a4` from the four given coefficients.
fn quartic(a1: BigInt, a2: BigInt, a3: BigInt, a4: BigInt) -> IntPoly {
    IntPoly::new(vec![a4, -a3, a2, -a1, BigInt::from(1)])
}

/// `x^3 - b1 x^2 + b2 x - b3`.
fn cubic(b1: BigInt, b2: BigInt, b3: BigInt) -> IntPoly {
    IntPoly::new(vec![-b3, b2, -b1, BigInt::from(1)])
}

/// Quartic factor of `μ(B(p,q,r))`.
pub fn binary_star_quartic(p: usize, q: usize, r: usize) -> IntPoly {
    let (p, q, r) = (big(p), big(q), big(r));
    let s = &p + &r;
    let a1 = 2 * &q + &s + 4;
    let a2 = &q * &q + &s * &q + &p * &r + 3 * (2 * &q + &s) + 5;
    let a3 = 2 * (&q * &q + &p * &q + &r * &q + &p * &r + 3 * &q + &s + 1);
    let a4 = (&s + &q + 2) * &q;
    quartic(a1, a2, a3, a4)
}

/// Quartic factor of `μ(B'(p,q,r))`.
pub fn binary_star_prime_quartic(p: usize, q: usize, r: usize) -> IntPoly {
    let (p, q, r) = (big(p), big(q), big(r));
    let s = &p + &r;
    let a1 = 2 * &q + &s + 6;
    let a2 = &q * &q + &s * &q + &p * &r + 4 * (2 * &q + &s) + 13;
    let a3 = 2 * (&q * &q + &p * &q + &r * &q + &p * &r) + 5 * (2 * &q + &s) + 12;
    let a4 = &q * &q + &s * &q + 2 * (2 * &q + &s) + 4;
    quartic(a1, a2, a3, a4)
}

/// Cubic factor of the double star `S(p,r)` on `n = p + r + 2` vertices:
/// `x^3 - (n+2)x^2 + (2n+pr+1)x - n`.
pub fn double_star_cubic(p: usize, r: usize) -> IntPoly {
    let n = big(p + r + 2);
    cubic(&n + 2, 2 * &n + big(p * r) + 1, n)
}

/// `x · (x-1)^e1 · (x-2)^e2 · core`, with negative exponents divided out.
fn assemble(e1: i64, e2: i64, core: IntPoly) -> Result<IntPoly> {
    let x1 = IntPoly::x_minus(1);
    let x2 = IntPoly::x_minus(2);
    let mut num = &IntPoly::x() * &core;
    let mut den = IntPoly::one();
    for (e, f) in [(e1, &x1), (e2, &x2)] {
        if e >= 0 {
            num = &num * &f.pow(e as usize);
        } else {
            den = &den * &f.pow((-e) as usize);
        }
    }
    num.exact_divide(&den)
}

/// `μ(S(p,r)) = x (x-1)^(n-4) (x^3 - (n+2)x^2 + (2n+pr+1)x - n)`.
pub fn charpoly_double_star(p: usize, r: usize) -> Result<IntPoly> {
    if p + r < 2 {
        return Err(Error::Params(format!("double star closed form needs p + r >= 2, got ({p},{r})")));
    }
    assemble((p + r + 2) as i64 - 4, 0, double_star_cubic(p, r))
}

/// `μ(B(p,q,r))` by its three-branch closed form.
pub fn charpoly_binary_star(p: usize, q: usize, r: usize) -> Result<IntPoly> {
    if q == 0 {
        return Err(Error::Params("B(p,0,r) is disconnected; q must be at least 1".into()));
    }
    let n = (p + q + r + 2) as i64;
    let q_i = q as i64;
    if p == 0 && r == 0 {
        // K_{2,q}
        let core = &IntPoly::x_minus(q_i) * &IntPoly::x_minus(n);
        return assemble(0, q_i - 1, core);
    }
    if p == 0 || r == 0 {
        let s = p.max(r);
        let (sb, qb) = (big(s), big(q));
        let b1 = 2 * &qb + &sb + 3;
        let b2 = &qb * &qb + &sb * &qb + 4 * &qb + 2 * &sb + 2;
        let b3 = (&sb + &qb + 2) * &qb;
        return assemble(s as i64 - 1, q_i - 1, cubic(b1, b2, b3));
    }
    assemble((p + r) as i64 - 2, q_i - 1, binary_star_quartic(p, q, r))
}

/// `μ(B'(p,q,r))`; the factored form is used when one side has no pendants.
pub fn charpoly_binary_star_prime(p: usize, q: usize, r: usize) -> Result<IntPoly> {
    if p + q + r < 1 {
        return Err(Error::Params("B'(0,0,0) is K2; no binary star closed form".into()));
    }
    let n = (p + q + r + 2) as i64;
    let q_i = q as i64;
    if p.min(r) == 0 && q >= 1 {
        let s = p.max(r) as i64;
        let core = &IntPoly::x_minus(q_i + 2) * &IntPoly::x_minus(n);
        return assemble(s, q_i - 1, core);
    }
    assemble((p + r) as i64 - 2, q_i - 1, binary_star_prime_quartic(p, q, r))
}

/// `μ(K1 ∇ K_{n-m} ∇ K_{m-1}) = x (x-(n-m)) (x-(n-1))^(m-2) (x-n)^(n-m)`.
pub fn charpoly_k1_join_family(n: usize, m: usize) -> Result<IntPoly> {
    if n < 3 || m < 2 || m > n - 1 {
        return Err(Error::Params(format!("k1 join family needs 2 <= m <= n-1; got n={n}, m={m}")));
    }
    let (ni, mi) = (n as i64, m as i64);
    let f = &(&IntPoly::x() * &IntPoly::x_minus(ni - mi)) * &IntPoly::x_minus(ni - 1).pow(m - 2);
    Ok(&f * &IntPoly::x_minus(ni).pow(n - m))
}

/// `μ(G1 ∇ G2) = x(x-n1-n2) μ(G1, x-n2) μ(G2, x-n1) / ((x-n1)(x-n2))`.
pub fn charpoly_join(g1: &Graph, g2: &Graph) -> Result<IntPoly> {
    let (n1, n2) = (g1.order() as i64, g2.order() as i64);
    if n1 + n2 > crate::graph::MAX_ORDER as i64 {
        return Err(Error::Overflow((n1 + n2) as usize));
    }
    let left = charpoly(g1).shift(-n2);
    let right = charpoly(g2).shift(-n1);
    let num = &(&(&IntPoly::x() * &IntPoly::x_minus(n1 + n2)) * &left) * &right;
    let den = &IntPoly::x_minus(n1) * &IntPoly::x_minus(n2);
    num.exact_divide(&den)
}
