//! Exact arithmetic: integer polynomials, Sturm chains and real root
//! isolation. Nothing in here touches floating point.

mod interval;
mod poly;
mod roots;
mod sturm;

pub use interval::{Bound, Interval};
pub use poly::IntPoly;
pub use roots::{RealRoot, RootEntry, RootSummary, DEFAULT_WIDTH_LOG2};
pub use sturm::{count_roots_with_multiplicity, sturm_count, SturmChain};

/// Arbitrary-precision rational in lowest terms with a positive denominator.
pub type Rat = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}

pub fn int(v: i64) -> Rat {
    Rat::from_integer(v.into())
}
