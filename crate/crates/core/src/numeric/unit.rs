use std::fmt;

use serde::Serialize;

use super::arith::{gcd, pow_mod};
use crate::error::{Error, Result};

/// A class in `(Z/m)^* / {±1}`, stored as `min(c, m - c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SignedUnitClass {
    modulus: u128,
    representative: u128,
}

impl SignedUnitClass {
    /// Sign-normalized class of the unit `a` modulo `m`.
    pub fn new(a: u128, m: u128) -> Result<Self> {
        if m == 0 {
            return Err(Error::Zero("modulus"));
        }
        let c = a % m;
        if m > 1 && gcd(c, m) != 1 {
            return Err(Error::NotAUnit {
                value: a,
                modulus: m,
            });
        }
        Ok(Self {
            modulus: m,
            representative: c.min(m - c),
        })
    }

    pub fn modulus(&self) -> u128 {
        self.modulus
    }

    pub fn representative(&self) -> u128 {
        self.representative
    }
}

impl fmt::Display for SignedUnitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "±{} mod {}", self.representative, self.modulus)
    }
}

/// The class of `a³` in `(Z/m)^* / {±1}`.
pub fn signed_cube_class(a: u128, m: u128) -> Result<SignedUnitClass> {
    if m == 0 {
        return Err(Error::Zero("modulus"));
    }
    if m > 1 && gcd(a % m, m) != 1 {
        return Err(Error::NotAUnit {
            value: a,
            modulus: m,
        });
    }
    SignedUnitClass::new(pow_mod(a, 3, m), m)
}
