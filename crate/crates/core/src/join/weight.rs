use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Weights `(w1, w2)` of the weighted 3-sphere: coprime, `w1 >= w2 >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    w1: u64,
    w2: u64,
}

impl WeightVector {
    pub fn new(w1: u64, w2: u64) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidWeights {
            w1,
            w2,
            reason: reason.into(),
        };
        if w1 == 0 || w2 == 0 {
            return Err(invalid("weights must be positive"));
        }
        if w1 < w2 {
            return Err(invalid("expected w1 >= w2"));
        }
        if w1.gcd(&w2) != 1 {
            return Err(invalid("weights must be coprime"));
        }
        Ok(Self { w1, w2 })
    }

    /// Like [`WeightVector::new`], with the entries put in order first.
    pub fn ordered(a: u64, b: u64) -> Result<Self> {
        Self::new(a.max(b), a.min(b))
    }

    pub fn w1(&self) -> u64 {
        self.w1
    }

    pub fn w2(&self) -> u64 {
        self.w2
    }

    /// `|w| = w1 + w2`.
    pub fn sum(&self) -> u128 {
        self.w1 as u128 + self.w2 as u128
    }

    /// `W = w1·w2`.
    pub fn product(&self) -> u128 {
        self.w1 as u128 * self.w2 as u128
    }

    pub fn difference(&self) -> u64 {
        self.w1 - self.w2
    }

    pub fn is_trivial(&self) -> bool {
        self.w1 == 1 && self.w2 == 1
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.w1, self.w2)
    }
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.w1, self.w2].serialize(serializer)
    }
}

/// Parses `"w1,w2"`.
impl FromStr for WeightVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("expected \"w1,w2\", got {s:?}"));
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        let a = a.trim().parse().map_err(|_| bad())?;
        let b = b.trim().parse().map_err(|_| bad())?;
        Self::new(a, b)
    }
}
