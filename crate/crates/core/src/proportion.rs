//! Exact rational proportions and the integer component-order threshold.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A rational `r = numerator / denominator` with `0 < r < 1`, kept in lowest
/// terms. Floating point never enters: `floor(r * n)` at integer boundaries
/// decides answers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Proportion {
    numerator: u64,
    denominator: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Proportion {
    pub fn new(numerator: u64, denominator: u64) -> Result<Self, Error> {
        if numerator == 0 || numerator >= denominator {
            return Err(Error::InvalidProportion(format!(
                "{numerator}/{denominator} is not strictly between 0 and 1"
            )));
        }
        let g = gcd(numerator, denominator);
        Ok(Proportion {
            numerator: numerator / g,
            denominator: denominator / g,
        })
    }

    pub fn numerator(self) -> u64 {
        self.numerator
    }

    pub fn denominator(self) -> u64 {
        self.denominator
    }

    /// `floor(r * n)`.
    pub fn floor_times(self, n: usize) -> usize {
        (self.numerator as u128 * n as u128 / self.denominator as u128) as usize
    }

    /// Threshold for a graph whose original order is `n`.
    pub fn threshold(self, n: usize) -> Threshold {
        Threshold::new(self, n)
    }

    /// The `1/k` proportion used by the equal-partition questions.
    pub fn reciprocal(k: u64) -> Result<Self, Error> {
        Proportion::new(1, k)
    }
}

impl fmt::Display for Proportion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl FromStr for Proportion {
    type Err = Error;

    /// Accepts only `A/B` with decimal integer parts.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidProportion(format!("expected A/B, got {s:?}"));
        let (a, b) = s.trim().split_once('/').ok_or_else(bad)?;
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|c| c.is_ascii_digit());
        if !digits(a) || !digits(b) {
            return Err(bad());
        }
        let a: u64 = a.parse().map_err(|_| bad())?;
        let b: u64 = b.parse().map_err(|_| bad())?;
        Proportion::new(a, b)
    }
}

impl TryFrom<String> for Proportion {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

impl From<Proportion> for String {
    fn from(r: Proportion) -> String {
        r.to_string()
    }
}

/// `tau = floor(r * n_original)`: the largest component order allowed in a
/// failure state. `n_original` is the order before any removals and does not
/// shrink when vertices are deleted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Threshold {
    tau: usize,
    n_original: usize,
    rn_is_integer: bool,
}

impl Threshold {
    pub fn new(r: Proportion, n_original: usize) -> Self {
        let scaled = r.numerator as u128 * n_original as u128;
        Threshold {
            tau: (scaled / r.denominator as u128) as usize,
            n_original,
            rn_is_integer: scaled.is_multiple_of(r.denominator as u128),
        }
    }

    pub fn tau(self) -> usize {
        self.tau
    }

    pub fn n_original(self) -> usize {
        self.n_original
    }

    pub fn rn_is_integer(self) -> bool {
        self.rn_is_integer
    }

    /// A component of this order may survive in a failure state.
    pub fn admits(self, order: usize) -> bool {
        order <= self.tau
    }
}
