use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which positions a query should answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PositionSpec {
    All,
    Single(usize),
    /// Inclusive, 1-based.
    Range(usize, usize),
}

impl PositionSpec {
    /// Resolves against a text of length `n`, rejecting positions past the end.
    pub fn resolve(&self, n: usize) -> Result<RangeInclusive<usize>> {
        let (a, b) = match *self {
            Self::All => return Ok(1..=n),
            Self::Single(k) => (k, k),
            Self::Range(a, b) => (a, b),
        };
        for k in [a, b] {
            crate::text::check_position(k, n)?;
        }
        Ok(a..=b)
    }
}

impl FromStr for PositionSpec {
    type Err = Error;

    /// Parses `A:B` (a range) or `K` (one position).
    fn from_str(spec: &str) -> Result<Self> {
        let bad = |reason| Error::InvalidPositionSpec {
            spec: spec.to_owned(),
            reason,
        };
        let num = |s: &str| -> Result<usize> {
            let s = s.trim();
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("expected a positive decimal integer"));
            }
            match s.parse::<usize>() {
                Ok(0) => Err(bad("positions start at 1")),
                Ok(v) => Ok(v),
                Err(_) => Err(bad("number too large")),
            }
        };
        match spec.split_once(':') {
            None => Ok(Self::Single(num(spec)?)),
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b)?);
                if a > b {
                    return Err(bad("range start exceeds range end"));
                }
                Ok(Self::Range(a, b))
            }
        }
    }
}
