use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::algebra::Rat;
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Bound {
    Closed(Rat),
    Open(Rat),
    Unbounded,
}

impl Bound {
    pub fn value(&self) -> Option<&Rat> {
        match self {
            Bound::Closed(v) | Bound::Open(v) => Some(v),
            Bound::Unbounded => None,
        }
    }
}

/// Real interval with independently open or closed ends.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Bound,
    pub hi: Bound,
}

impl Interval {
    pub fn closed(a: Rat, b: Rat) -> Interval {
        Interval { lo: Bound::Closed(a), hi: Bound::Closed(b) }
    }

    pub fn open(a: Rat, b: Rat) -> Interval {
        Interval { lo: Bound::Open(a), hi: Bound::Open(b) }
    }

    /// `(a, b]`
    pub fn open_closed(a: Rat, b: Rat) -> Interval {
        Interval { lo: Bound::Open(a), hi: Bound::Closed(b) }
    }

    /// `[a, b)`
    pub fn closed_open(a: Rat, b: Rat) -> Interval {
        Interval { lo: Bound::Closed(a), hi: Bound::Open(b) }
    }

    /// `(a, ∞)`
    pub fn above(a: Rat) -> Interval {
        Interval { lo: Bound::Open(a), hi: Bound::Unbounded }
    }

    /// `[a, ∞)`
    pub fn at_least(a: Rat) -> Interval {
        Interval { lo: Bound::Closed(a), hi: Bound::Unbounded }
    }

    pub fn all() -> Interval {
        Interval { lo: Bound::Unbounded, hi: Bound::Unbounded }
    }

    /// True when no real number satisfies both bounds.
    pub fn is_empty(&self) -> bool {
        match (&self.lo, &self.hi) {
            (Bound::Closed(a), Bound::Closed(b)) => a > b,
            (Bound::Closed(a) | Bound::Open(a), Bound::Closed(b) | Bound::Open(b)) => a >= b,
            _ => false,
        }
    }

    pub fn contains(&self, x: &Rat) -> bool {
        let lo_ok = match &self.lo {
            Bound::Closed(a) => x >= a,
            Bound::Open(a) => x > a,
            Bound::Unbounded => true,
        };
        let hi_ok = match &self.hi {
            Bound::Closed(b) => x <= b,
            Bound::Open(b) => x < b,
            Bound::Unbounded => true,
        };
        lo_ok && hi_ok
    }
}

fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational endpoint {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn is_infinite(s: &str, negative: bool) -> bool {
    let s = s.trim();
    let s = match (negative, s.strip_prefix('-'), s.strip_prefix('+')) {
        (true, Some(rest), _) => rest,
        (false, _, Some(rest)) => rest,
        (false, None, None) => s,
        _ => return false,
    };
    matches!(s, "inf" | "infinity" | "oo" | "∞")
}

impl FromStr for Interval {
    type Err = Error;

    /// Accepts `[a,b]`, `(a,b]`, `[a,b)`, `(a,b)` with integer or `p/q`
    /// endpoints; `-inf` / `inf` give unbounded ends next to a round bracket.
    fn from_str(text: &str) -> Result<Interval, Error> {
        let t = text.trim();
        let bad = |why: &str| Error::Parse(format!("interval {text:?}: {why}"));
        let (open_lo, rest) = match t.chars().next() {
            Some('[') => (false, &t[1..]),
            Some('(') => (true, &t[1..]),
            _ => return Err(bad("must start with '[' or '('")),
        };
        let (open_hi, body) = match rest.chars().last() {
            Some(']') => (false, &rest[..rest.len() - 1]),
            Some(')') => (true, &rest[..rest.len() - 1]),
            _ => return Err(bad("must end with ']' or ')'")),
        };
        let (a, b) = body.split_once(',').ok_or_else(|| bad("missing ','"))?;
        let lo = if is_infinite(a, true) {
            if !open_lo {
                return Err(bad("infinite end must be open"));
            }
            Bound::Unbounded
        } else {
            let v = parse_rat(a)?;
            if open_lo { Bound::Open(v) } else { Bound::Closed(v) }
        };
        let hi = if is_infinite(b, false) {
            if !open_hi {
                return Err(bad("infinite end must be open"));
            }
            Bound::Unbounded
        } else {
            let v = parse_rat(b)?;
            if open_hi { Bound::Open(v) } else { Bound::Closed(v) }
        };
        if let (Some(a), Some(b)) = (lo.value(), hi.value()) {
            if a > b {
                return Err(bad("lower end exceeds upper end"));
            }
        }
        Ok(Interval { lo, hi })
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lo {
            Bound::Closed(a) => write!(f, "[{a}")?,
            Bound::Open(a) => write!(f, "({a}")?,
            Bound::Unbounded => f.write_str("(-inf")?,
        }
        match &self.hi {
            Bound::Closed(b) => write!(f, ",{b}]"),
            Bound::Open(b) => write!(f, ",{b})"),
            Bound::Unbounded => f.write_str(",inf)"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn parse_forms() {
        assert_eq!("[0,2]".parse::<Interval>().unwrap(), Interval::closed(int(0), int(2)));
        assert_eq!("(2, 7]".parse::<Interval>().unwrap(), Interval::open_closed(int(2), int(7)));
        assert_eq!(
            "[1/2,5/3)".parse::<Interval>().unwrap(),
            Interval::closed_open(rat(1, 2), rat(5, 3))
        );
        assert_eq!("(-inf,inf)".parse::<Interval>().unwrap(), Interval::all());
        assert_eq!("[0,inf)".parse::<Interval>().unwrap(), Interval::at_least(int(0)));
        assert_eq!("[4/2,3]".parse::<Interval>().unwrap(), Interval::closed(int(2), int(3)));
    }

    #[test]
    fn parse_errors() {
        for bad in ["0,2", "[0,2", "[0;2]", "[3,2]", "[0,inf]", "[a,2]", "[1/0,2]", "[-inf,2]"] {
            assert!(bad.parse::<Interval>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trip() {
        for s in ["[0,2]", "(2,7]", "[1/2,5/3)", "(-inf,inf)", "(0,inf)"] {
            let i: Interval = s.parse().unwrap();
            assert_eq!(i.to_string(), s);
        }
    }

    #[test]
    fn emptiness() {
        assert!(!Interval::closed(int(1), int(1)).is_empty());
        assert!(Interval::open_closed(int(1), int(1)).is_empty());
        assert!(Interval::closed(int(0), int(2)).contains(&int(2)));
        assert!(!Interval::open_closed(int(0), int(2)).contains(&int(0)));
    }
}
