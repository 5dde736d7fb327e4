use std::cmp::Ordering;

use num_traits::Signed;

use crate::algebra::{Bound, IntPoly, Interval, Rat};

/// Sturm chain of a squarefree polynomial, built from sign-corrected
/// pseudo-remainders with the (positive) content divided out at each step.
/// The chain has the same sign pattern as the classical rational chain.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    /// `f` must be nonzero; it is reduced to its squarefree part first.
    pub fn new(f: &IntPoly) -> SturmChain {
        SturmChain::from_squarefree(f.squarefree_part())
    }

    /// Skips the squarefree reduction; `f` must already be squarefree.
    pub fn from_squarefree(f: IntPoly) -> SturmChain {
        assert!(!f.is_zero(), "Sturm chain of the zero polynomial");
        let mut chain = vec![f.clone()];
        let df = f.derivative();
        if df.is_zero() {
            return SturmChain { chain };
        }
        chain.push(df);
        loop {
            let n = chain.len();
            let (a, b) = (&chain[n - 2], &chain[n - 1]);
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let prem = a.pseudo_rem(b);
            if prem.is_zero() {
                break;
            }
            // prem = lc(b)^(delta+1) · rem; flip to get -rem up to a positive factor
            let flip = !(b.lead().is_negative() && delta % 2 == 0);
            let next = if flip { -&prem } else { prem };
            let c = next.content();
            let next = IntPoly::new(next.coeffs().iter().map(|x| x / &c).collect());
            chain.push(next);
        }
        SturmChain { chain }
    }

    pub fn poly(&self) -> &IntPoly {
        &self.chain[0]
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    fn count_variations(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = Ordering::Equal;
        let mut v = 0;
        for s in signs {
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &Rat) -> usize {
        Self::count_variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::count_variations(self.chain.iter().map(|p| {
            let mut s = p.lead().is_positive();
            if !positive && p.degree().unwrap() % 2 == 1 {
                s = !s;
            }
            if s { Ordering::Greater } else { Ordering::Less }
        }))
    }

    fn variations_at_bound(&self, b: &Bound, upper: bool) -> usize {
        match b {
            Bound::Closed(v) | Bound::Open(v) => self.variations_at(v),
            Bound::Unbounded => self.variations_at_infinity(upper),
        }
    }

    /// Number of distinct roots in `(a, b]`.
    pub fn count_half_open(&self, a: &Rat, b: &Rat) -> usize {
        if a >= b {
            return 0;
        }
        self.variations_at(a) - self.variations_at(b)
    }

    /// Number of distinct real roots inside `interval`.
    ///
    /// `V(a) - V(b)` counts roots in `(a, b]`; closed lower ends and open upper
    /// ends are then corrected by exact evaluation at the endpoint.
    pub fn count(&self, interval: &Interval) -> usize {
        if interval.is_empty() {
            return 0;
        }
        let f = self.poly();
        if let (Bound::Closed(a), Bound::Closed(b)) = (&interval.lo, &interval.hi) {
            if a == b {
                return usize::from(f.sign_at(a) == Ordering::Equal);
            }
        }
        let lo = self.variations_at_bound(&interval.lo, false);
        let hi = self.variations_at_bound(&interval.hi, true);
        let mut count = lo - hi;
        if let Bound::Closed(a) = &interval.lo {
            if f.sign_at(a) == Ordering::Equal {
                count += 1;
            }
        }
        if let Bound::Open(b) = &interval.hi {
            if f.sign_at(b) == Ordering::Equal {
                count -= 1;
            }
        }
        count
    }
}

/// Distinct real roots of `p` in `interval`.
pub fn sturm_count(p: &IntPoly, interval: &Interval) -> usize {
    SturmChain::new(p).count(interval)
}

/// Real roots of `p` in `interval`, counted with multiplicity.
pub fn count_roots_with_multiplicity(p: &IntPoly, interval: &Interval) -> usize {
    p.squarefree_decomposition()
        .into_iter()
        .map(|(f, m)| m * SturmChain::from_squarefree(f).count(interval))
        .sum()
}
