use std::fmt;

use serde::{Serialize, Serializer};

use super::rational::{format_rational, midpoint, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    /// −∞ when used as a lower end, +∞ as an upper end.
    Infinite,
    Open(Rational),
    Closed(Rational),
}

impl Endpoint {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            Endpoint::Infinite => None,
            Endpoint::Open(v) | Endpoint::Closed(v) => Some(v),
        }
    }

    pub fn is_closed(&self) -> bool {
        matches!(self, Endpoint::Closed(_))
    }
}

/// A real interval with rational or infinite endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl Interval {
    pub fn new(lo: Endpoint, hi: Endpoint) -> Self {
        if let (Some(a), Some(b)) = (lo.value(), hi.value()) {
            assert!(a <= b, "interval with lo > hi");
            if a == b {
                assert!(lo.is_closed() && hi.is_closed(), "degenerate interval must be a closed point");
            }
        }
        Interval { lo, hi }
    }

    pub fn real_line() -> Self {
        Interval::new(Endpoint::Infinite, Endpoint::Infinite)
    }

    pub fn open(a: Rational, b: Rational) -> Self {
        Interval::new(Endpoint::Open(a), Endpoint::Open(b))
    }

    pub fn closed(a: Rational, b: Rational) -> Self {
        Interval::new(Endpoint::Closed(a), Endpoint::Closed(b))
    }

    pub fn point(a: Rational) -> Self {
        Interval::new(Endpoint::Closed(a.clone()), Endpoint::Closed(a))
    }

    pub fn is_point(&self) -> bool {
        matches!((&self.lo, &self.hi), (Endpoint::Closed(a), Endpoint::Closed(b)) if a == b)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = match &self.lo {
            Endpoint::Infinite => true,
            Endpoint::Open(a) => x > a,
            Endpoint::Closed(a) => x >= a,
        };
        let below = match &self.hi {
            Endpoint::Infinite => true,
            Endpoint::Open(b) => x < b,
            Endpoint::Closed(b) => x <= b,
        };
        above && below
    }

    /// `None` for unbounded intervals.
    pub fn width(&self) -> Option<Rational> {
        Some(self.hi.value()? - self.lo.value()?)
    }

    pub fn midpoint(&self) -> Option<Rational> {
        Some(midpoint(self.lo.value()?, self.hi.value()?))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lo {
            Endpoint::Infinite => write!(f, "(-inf")?,
            Endpoint::Open(a) => write!(f, "({}", format_rational(a))?,
            Endpoint::Closed(a) => write!(f, "[{}", format_rational(a))?,
        }
        write!(f, ", ")?;
        match &self.hi {
            Endpoint::Infinite => write!(f, "+inf)"),
            Endpoint::Open(b) => write!(f, "{})", format_rational(b)),
            Endpoint::Closed(b) => write!(f, "{}]", format_rational(b)),
        }
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
