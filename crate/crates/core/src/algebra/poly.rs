use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::Rat;
use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients, stored low
/// degree first with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> IntPoly {
        IntPoly::new(vec![c])
    }

    pub fn x() -> IntPoly {
        IntPoly::from_i64s(&[0, 1])
    }

    /// `x - c`.
    pub fn x_minus(c: i64) -> IntPoly {
        IntPoly::from_i64s(&[-c, 1])
    }

    /// `den·x - num`, the primitive linear factor vanishing at `r`.
    pub fn root_factor(r: &Rat) -> IntPoly {
        IntPoly::new(vec![-r.numer().clone(), r.denom().clone()])
    }

    pub fn monomial(c: BigInt, degree: usize) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        IntPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn lead(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: usize) -> IntPoly {
        let mut result = IntPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation over the rationals.
    pub fn eval_at(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + Rat::from_integer(c.clone()))
    }

    /// Sign of `p(x)`, computed as the homogenised integer sum
    /// `Σ c_i num^i den^(d-i)` which has the sign of `p(num/den)`.
    pub fn sign_at(&self, x: &Rat) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let (num, den) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc.sign_ordering()
    }

    /// `p(a·x + b)`.
    pub fn compose_linear(&self, a: &BigInt, b: &BigInt) -> IntPoly {
        let lin = IntPoly::new(vec![b.clone(), a.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(IntPoly::zero(), |acc, c| &(&acc * &lin) + &IntPoly::constant(c.clone()))
    }

    /// `p(x + c)`.
    pub fn shift(&self, c: i64) -> IntPoly {
        self.compose_linear(&BigInt::one(), &BigInt::from(c))
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.lead().is_negative() {
            c = -c;
        }
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Quotient and remainder over the integers when every step divides
    /// exactly; `None` if a leading-coefficient division leaves a fraction.
    fn div_rem_integral(&self, d: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg();
        let lead = d.lead();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        Some((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Exact quotient `self / d`; fails unless `d` divides `self` in `Z[x]`.
    pub fn exact_divide(&self, d: &IntPoly) -> Result<IntPoly> {
        match self.div_rem_integral(d) {
            Some((q, r)) if r.is_zero() => Ok(q),
            _ => Err(Error::InexactDivision),
        }
    }

    /// Pseudo-remainder `lc(d)^(deg self - deg d + 1) · self mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.deg() < d.deg() {
            return self.clone();
        }
        let dd = d.deg();
        let lead = d.lead();
        let mut steps = self.deg() - dd + 1;
        let mut rem = self.clone();
        while !rem.is_zero() && rem.deg() >= dd {
            let shift = rem.deg() - dd;
            let top = rem.lead();
            let scaled = rem.scale(&lead);
            rem = &scaled - &d.scale(&top).shift_up(shift);
            steps -= 1;
        }
        if steps > 0 {
            rem = rem.scale(&num_traits::pow(lead, steps));
        }
        rem
    }

    /// Primitive gcd with positive leading coefficient, via the subresultant
    /// remainder sequence. `gcd(p, 0)` is the primitive part of `p`.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = match (self.is_zero(), other.is_zero()) {
            (true, true) => return IntPoly::zero(),
            (_, true) => return self.primitive_part(),
            (true, _) => return other.primitive_part(),
            _ => (self.primitive_part(), other.primitive_part()),
        };
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = a.deg() - b.deg();
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b.primitive_part();
            }
            if r.deg() == 0 {
                return IntPoly::one();
            }
            let divisor = &g * num_traits::pow(h.clone(), delta);
            a = b;
            b = IntPoly::new(r.coeffs.iter().map(|c| c / &divisor).collect());
            g = a.lead();
            h = if delta == 0 {
                h
            } else {
                num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1)
            };
        }
    }

    /// Yun's squarefree decomposition: pairs `(f_i, i)` with `f_i` primitive,
    /// squarefree, pairwise coprime and of positive degree, such that the
    /// input equals `c · Π f_i^i` for an integer constant `c`.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, usize)> {
        assert!(!self.is_zero(), "squarefree decomposition of zero");
        let f = self.primitive_part();
        let mut out = Vec::new();
        if f.deg() == 0 {
            return out;
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_divide(&a0).expect("gcd divides f");
        let mut c = df.exact_divide(&a0).expect("gcd divides f'");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            b = b.exact_divide(&a).expect("gcd divides b");
            c = d.exact_divide(&a).expect("gcd divides d");
            d = &c - &b.derivative();
            if !a.is_constant() {
                out.push((a.primitive_part(), i));
            }
            i += 1;
        }
        out
    }

    /// Product of the distinct irreducible factors, primitive.
    pub fn squarefree_part(&self) -> IntPoly {
        let f = self.primitive_part();
        if f.is_constant() {
            return f;
        }
        f.exact_divide(&f.gcd(&f.derivative()))
            .expect("gcd divides f")
            .primitive_part()
    }

    /// Largest `k` with `(den·x - num)^k` dividing `self`.
    pub fn multiplicity_at(&self, r: &Rat) -> usize {
        assert!(!self.is_zero(), "multiplicity in the zero polynomial");
        let factor = IntPoly::root_factor(r);
        let mut p = self.clone();
        let mut k = 0;
        while p.sign_at(r) == Ordering::Equal {
            p = p.exact_divide(&factor).expect("Gauss lemma: primitive linear factor");
            k += 1;
        }
        k
    }

    /// Coefficients as decimal strings, low degree first.
    pub fn to_strings(&self) -> Vec<String> {
        if self.is_zero() {
            return vec!["0".into()];
        }
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn double_star_cubic_at_one() {
        // n = 6, pr = 4
        let cubic = p(&[-6, 17, -8, 1]);
        assert_eq!(cubic.eval_at(&rat(1, 1)), rat(4, 1));
        assert_eq!(cubic.sign_at(&rat(1, 1)), Ordering::Greater);
    }

    #[test]
    fn ring_ops() {
        assert_eq!(p(&[0, 0, 1]).derivative(), p(&[0, 2]));
        assert_eq!(p(&[-1, 0, 1]).exact_divide(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(p(&[-1, 0, 1]).exact_divide(&p(&[-2, 1])), Err(Error::InexactDivision));
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[0, 1]).shift(-2), p(&[-2, 1]));
        assert_eq!(p(&[1, 0, 1]).compose_linear(&BigInt::from(-1), &BigInt::from(3)), p(&[10, -6, 1]));
        assert!(p(&[0, 0, 0]).is_zero());
        assert_eq!(p(&[3, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn sign_matches_eval() {
        let f = p(&[5, -20, 21, -8, 1]);
        for num in -20..40 {
            for den in 1..5 {
                let x = rat(num, den);
                let v = f.eval_at(&x);
                assert_eq!(f.sign_at(&x), v.cmp(&Rat::zero()));
            }
        }
    }

    #[test]
    fn gcd_cases() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(p(&[-6, 0, 6]).gcd(&IntPoly::zero()), p(&[-1, 0, 1]));
        assert_eq!(p(&[1, 1]).gcd(&p(&[2, 1])), IntPoly::one());
        // (x-1)^2 (x+2) and (x-1)(x+5)^2
        let a = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[5, 1]).pow(2);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        // non-monic common factor 3x - 2
        let a = &p(&[-2, 3]) * &p(&[7, 0, 1]);
        let b = &p(&[-2, 3]).pow(2) * &p(&[1, 4]);
        assert_eq!(a.gcd(&b), p(&[-2, 3]));
    }

    #[test]
    fn squarefree() {
        let f = &p(&[-1, 1]).pow(2) * &p(&[-3, 1]);
        assert_eq!(f.squarefree_decomposition(), vec![(p(&[-3, 1]), 1), (p(&[-1, 1]), 2)]);
        let star5 = &(&p(&[0, 1]) * &p(&[-1, 1]).pow(3)) * &p(&[-5, 1]);
        assert_eq!(star5.squarefree_decomposition(), vec![(p(&[0, -5, 1]), 1), (p(&[-1, 1]), 3)]);
        let sf = p(&[-2, 0, 1]);
        assert_eq!(sf.squarefree_decomposition(), vec![(sf.clone(), 1)]);
    }

    #[test]
    fn multiplicity() {
        assert_eq!(p(&[0, 0, 1]).multiplicity_at(&rat(0, 1)), 2);
        assert_eq!(p(&[0, 0, 1]).multiplicity_at(&rat(1, 1)), 0);
        let f = &p(&[-2, 3]).pow(3) * &p(&[1, 1]);
        assert_eq!(f.multiplicity_at(&rat(2, 3)), 3);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-6, 17, -8, 1]).to_string(), "x^3 - 8x^2 + 17x - 6");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_strings() {
        let f = p(&[-6, 17, -8, 1]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"["-6","17","-8","1"]"#);
        let back: IntPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
