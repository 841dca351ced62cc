//! Exact non-negative rationals for degree fractions such as `α`.

use core::fmt;
use core::str::FromStr;

use alloc::format;

use crate::{Error, Result};

/// A non-negative rational `num / den`, always stored in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidParameter(format!("zero denominator in {num}/{den}")));
        }
        let g = gcd(num, den).max(1);
        Ok(Self { num: num / g, den: den / g })
    }

    pub fn integer(value: u64) -> Self {
        Self { num: value, den: 1 }
    }

    pub fn numer(self) -> u64 {
        self.num
    }

    pub fn denom(self) -> u64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    /// `0 < self <= 1`.
    pub fn is_unit_fraction_range(self) -> bool {
        self.num > 0 && self.num <= self.den
    }

    /// `⌈self · d⌉`, exactly.
    pub fn ceil_mul(self, d: u64) -> u64 {
        let p = u128::from(self.num) * u128::from(d);
        let q = u128::from(self.den);
        p.div_ceil(q) as u64
    }

    /// `self / (1 - self)`, rounded up. Requires `self < 1`.
    pub fn ceil_odds(self) -> u64 {
        debug_assert!(self.num < self.den);
        self.num.div_ceil(self.den - self.num)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (u128::from(self.num) * u128::from(other.den))
            .cmp(&(u128::from(other.num) * u128::from(self.den)))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Ratio {
    type Err = Error;

    /// Accepts `a/b` or a bare integer `a`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("malformed rational `{s}`"));
        match s.trim().split_once('/') {
            Some((n, d)) => {
                let n = n.trim().parse().map_err(|_| bad())?;
                let d = d.trim().parse().map_err(|_| bad())?;
                Ratio::new(n, d)
            }
            None => Ok(Ratio::integer(s.trim().parse().map_err(|_| bad())?)),
        }
    }
}
