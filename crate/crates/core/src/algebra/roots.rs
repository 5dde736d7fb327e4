use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{int, IntPoly, Rat, SturmChain};
use crate::error::{Error, Result};

/// Isolating intervals are refined to width `2^-DEFAULT_WIDTH_LOG2` unless a
/// caller asks otherwise.
pub const DEFAULT_WIDTH_LOG2: u32 = 20;

/// Bisection steps allowed when separating or comparing two roots.
const COMPARE_BUDGET: usize = 4096;

/// A real algebraic number: either an exact rational, or the unique root of
/// a squarefree polynomial inside an open interval `(lo, hi)`.
#[derive(Clone)]
pub struct RealRoot {
    lo: Rat,
    hi: Rat,
    chain: Arc<SturmChain>,
}

impl RealRoot {
    pub fn exact(v: Rat) -> RealRoot {
        let chain = Arc::new(SturmChain::from_squarefree(IntPoly::root_factor(&v)));
        RealRoot { lo: v.clone(), hi: v, chain }
    }

    fn isolated(lo: Rat, hi: Rat, chain: Arc<SturmChain>) -> RealRoot {
        RealRoot { lo, hi, chain }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn value(&self) -> Option<&Rat> {
        self.is_exact().then_some(&self.lo)
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    /// Squarefree polynomial vanishing at this root.
    pub fn poly(&self) -> &IntPoly {
        self.chain.poly()
    }

    /// Halves the isolating interval; an exact hit at the midpoint turns the
    /// root into an exact rational.
    pub fn bisect(&mut self) {
        if self.is_exact() {
            return;
        }
        let mid = (&self.lo + &self.hi) / int(2);
        if self.poly().sign_at(&mid) == Ordering::Equal {
            self.lo = mid.clone();
            self.hi = mid;
            return;
        }
        if self.chain.count_half_open(&self.lo, &mid) == 1 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    pub fn refine_to(&mut self, width: &Rat) {
        while !self.is_exact() && &self.width() > width {
            self.bisect();
        }
    }

    /// Midpoint of the isolating interval, or the exact value.
    pub fn approx(&self) -> Rat {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn to_f64(&self) -> f64 {
        self.approx().to_f64().unwrap_or(f64::NAN)
    }

    pub fn cmp_rat(&mut self, r: &Rat) -> Ordering {
        loop {
            if self.is_exact() {
                return self.lo.cmp(r);
            }
            if r <= &self.lo {
                return Ordering::Greater;
            }
            if r >= &self.hi {
                return Ordering::Less;
            }
            if self.poly().sign_at(r) == Ordering::Equal {
                return Ordering::Equal;
            }
            self.bisect();
        }
    }

    /// Exact comparison. Overlapping intervals are certified equal when the
    /// gcd of the two defining polynomials has a root in the overlap;
    /// otherwise both are bisected until they separate.
    pub fn compare(&mut self, other: &mut RealRoot) -> Result<Ordering> {
        let mut common: Option<Option<SturmChain>> = None;
        for _ in 0..COMPARE_BUDGET {
            if other.is_exact() {
                return Ok(self.cmp_rat(&other.lo.clone()));
            }
            if self.is_exact() {
                return Ok(other.cmp_rat(&self.lo.clone()).reverse());
            }
            if self.hi <= other.lo {
                return Ok(Ordering::Less);
            }
            if other.hi <= self.lo {
                return Ok(Ordering::Greater);
            }
            let shared = common.get_or_insert_with(|| {
                let g = self.poly().gcd(other.poly());
                (!g.is_constant()).then(|| SturmChain::from_squarefree(g))
            });
            if let Some(g) = shared {
                let lo = (&self.lo).max(&other.lo).clone();
                let hi = (&self.hi).min(&other.hi).clone();
                let inside = g.count_half_open(&lo, &hi)
                    - usize::from(g.poly().sign_at(&hi) == Ordering::Equal);
                if inside > 0 {
                    return Ok(Ordering::Equal);
                }
            }
            self.bisect();
            other.bisect();
        }
        Err(Error::RefinementBudget)
    }
}

impl fmt::Debug for RealRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "root of {} in ({}, {})", self.poly(), self.lo, self.hi)
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootEntry {
    pub root: RealRoot,
    pub multiplicity: usize,
}

/// All real roots of a polynomial in ascending order with multiplicities.
#[derive(Clone, Debug)]
pub struct RootSummary {
    entries: Vec<RootEntry>,
}

/// Upper bound on the absolute value of every root (Fujiwara), rounded up
/// to an integer.
fn root_bound(f: &IntPoly) -> BigInt {
    let d = f.degree().expect("nonzero");
    let lead = f.lead().abs();
    let mut best = BigInt::zero();
    for k in 1..=d {
        let c = f.coeff(d - k).abs();
        if c.is_zero() {
            continue;
        }
        let t = c.div_ceil(&lead);
        let r = t.nth_root(k as u32) + BigInt::one();
        best = best.max(r);
    }
    best * 2 + 1
}

fn positive_divisors(v: &BigInt) -> Vec<BigInt> {
    let v = v.abs();
    let Some(n) = v.to_u64() else {
        // too large to factor by trial division; only the trivial divisors
        return vec![BigInt::one(), v];
    };
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n && d <= 1_000_000 {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d != n / d {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Roots of a squarefree polynomial, rationals reported exactly.
fn isolate_squarefree(f: IntPoly) -> Vec<RealRoot> {
    if f.is_constant() {
        return Vec::new();
    }
    let lead = f.lead().abs();
    let denominators = positive_divisors(&lead);
    let grid = Rat::new(BigInt::one(), lead.clone());
    let chain = Arc::new(SturmChain::from_squarefree(f));
    let bound = Rat::from_integer(root_bound(chain.poly()));
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let k = chain.count_half_open(&lo, &hi);
        if k == 0 {
            continue;
        }
        if k > 1 {
            let mid = (&lo + &hi) / int(2);
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
            continue;
        }
        if chain.poly().sign_at(&hi) == Ordering::Equal {
            out.push(RealRoot::exact(hi));
            continue;
        }
        let mut root = RealRoot::isolated(lo, hi, chain.clone());
        // once narrower than 1/|lead| the interval holds at most one
        // candidate a/b for each admissible denominator b
        root.refine_to(&grid);
        if !root.is_exact() {
            for b in &denominators {
                let b = Rat::from_integer(b.clone());
                let cand = (&root.lo * &b).ceil() / &b;
                if cand > root.lo && cand < root.hi && root.poly().sign_at(&cand) == Ordering::Equal {
                    root = RealRoot::exact(cand);
                    break;
                }
            }
        }
        out.push(root);
    }
    out
}

impl RootSummary {
    /// Isolates every real root of `p` (nonzero) to intervals of width at most
    /// `width`, reporting rational roots exactly.
    pub fn isolate(p: &IntPoly, width: &Rat) -> Result<RootSummary> {
        assert!(!p.is_zero(), "roots of the zero polynomial");
        assert!(width.is_positive(), "isolation width must be positive");
        let mut entries: Vec<RootEntry> = Vec::new();
        for (factor, multiplicity) in p.squarefree_decomposition() {
            for root in isolate_squarefree(factor) {
                let mut entry = RootEntry { root, multiplicity };
                let mut at = entries.len();
                for (i, existing) in entries.iter_mut().enumerate() {
                    if entry.root.compare(&mut existing.root)? == Ordering::Less {
                        at = i;
                        break;
                    }
                }
                entries.insert(at, entry);
            }
        }
        let mut summary = RootSummary { entries };
        summary.separate()?;
        summary.refine(width);
        Ok(summary)
    }

    pub fn with_default_width(p: &IntPoly) -> Result<RootSummary> {
        RootSummary::isolate(p, &Rat::new(BigInt::one(), BigInt::one() << DEFAULT_WIDTH_LOG2))
    }

    /// Makes neighbouring isolating intervals disjoint.
    fn separate(&mut self) -> Result<()> {
        for i in 1..self.entries.len() {
            let (left, right) = self.entries.split_at_mut(i);
            let ord = left[i - 1].root.compare(&mut right[0].root)?;
            debug_assert_eq!(ord, Ordering::Less);
        }
        Ok(())
    }

    /// Further bisection; never changes the number or order of entries.
    pub fn refine(&mut self, width: &Rat) {
        for e in &mut self.entries {
            e.root.refine_to(width);
        }
    }

    pub fn entries(&self) -> &[RootEntry] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// Roots repeated by multiplicity, ascending.
    pub fn expanded(&self) -> Vec<RealRoot> {
        self.entries
            .iter()
            .flat_map(|e| std::iter::repeat(e.root.clone()).take(e.multiplicity))
            .collect()
    }
}
