//! Intervals of exponents on which a bound is valid.

use std::fmt;

use serde::{Serialize, Serializer};

/// An interval of `p` values, possibly a single point, possibly reaching `∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PWindow {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl PWindow {
    pub const fn new(lo: f64, lo_closed: bool, hi: f64, hi_closed: bool) -> Self {
        Self {
            lo,
            hi,
            lo_closed,
            hi_closed,
        }
    }

    pub const fn point(p: f64) -> Self {
        Self::new(p, true, p, true)
    }

    pub const ALL: Self = Self::new(0.0, false, f64::INFINITY, true);
    pub const ONE_TO_TWO: Self = Self::new(1.0, true, 2.0, true);
    pub const ONE_TO_INF: Self = Self::new(1.0, true, f64::INFINITY, false);
    pub const OPEN_ONE_TO_TWO: Self = Self::new(1.0, false, 2.0, true);
    pub const ONE_ONLY: Self = Self::point(1.0);
    pub const TWO_ONLY: Self = Self::point(2.0);
    pub const INFINITY_ONLY: Self = Self::point(f64::INFINITY);

    pub fn contains(&self, p: f64) -> bool {
        if p.is_nan() {
            return false;
        }
        let above = if self.lo_closed { p >= self.lo } else { p > self.lo };
        let below = if self.hi_closed { p <= self.hi } else { p < self.hi };
        above && below
    }
}

fn fmt_end(x: f64) -> String {
    if x.is_infinite() {
        "inf".to_string()
    } else {
        format!("{x}")
    }
}

impl fmt::Display for PWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            return write!(f, "{{{}}}", fmt_end(self.lo));
        }
        write!(
            f,
            "{}{},{}{}",
            if self.lo_closed { '[' } else { '(' },
            fmt_end(self.lo),
            fmt_end(self.hi),
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

impl Serialize for PWindow {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
