use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use super::regular::has_regular_reeb;
use crate::error::{Error, Result};
use crate::join::{relative_fano_indices, WeightVector};

/// Fano index of `CP^1`, the quotient of `S^2 × S^3`.
const CP1_FANO_INDEX: u64 = 2;

/// An exact non-negative rational in lowest terms, serialized as `"num/den"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactRational {
    pub num: u64,
    pub den: u64,
}

impl ExactRational {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let g = num.gcd(&den);
        Self {
            num: num / g,
            den: den / g,
        }
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `Y^{p,q}` written as a join with `S^2 × S^3`, together with the log pair
/// `(S_h, Δ)` of its quasi-regular quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct YpqData {
    pub p: u64,
    pub q: u64,
    pub w: WeightVector,
    pub l1: u128,
    pub l2: u128,
    pub s: u128,
    pub n: u128,
    /// Ramification index.
    pub m: u128,
    /// `h` of the Hirzebruch surface `S_h`.
    pub hirzebruch_index: u128,
    /// `Δ = (1 - 1/m)(D1 + D2)`.
    pub branch_coefficient: ExactRational,
    pub regular: bool,
}

pub fn ypq_translate(p: u64, q: u64) -> Result<YpqData> {
    let invalid = |reason: &str| Error::InvalidYpq {
        p,
        q,
        reason: reason.into(),
    };
    if p < 2 {
        return Err(invalid("need p > 1"));
    }
    if q == 0 || q >= p {
        return Err(invalid("need 1 <= q < p"));
    }
    if p.gcd(&q) != 1 {
        return Err(invalid("p and q must be coprime"));
    }
    let (a, b) = (p as u128 + q as u128, (p - q) as u128);
    let g = a.gcd(&b);
    let w = WeightVector::new((a / g) as u64, (b / g) as u64)?;

    let idx = relative_fano_indices(CP1_FANO_INDEX, w)?;
    let (l1, l2) = (idx.l1, idx.l2);
    if l1 != g || l2 != p as u128 {
        return Err(Error::Invariant(format!(
            "Y^{{{p},{q}}}: expected (l1,l2) = ({g},{p}), got ({l1},{l2})"
        )));
    }

    let diff = w.difference() as u128;
    let s = l2.gcd(&diff);
    let n = l1 * diff / s;
    if !(l1 * diff).is_multiple_of(s) {
        return Err(Error::Invariant(format!(
            "Y^{{{p},{q}}}: s = {s} does not divide l1·(w1-w2)"
        )));
    }
    let sum = w.sum();
    let m = sum / (s * sum.gcd(&(CP1_FANO_INDEX as u128)));
    let m64 = u64::try_from(m).map_err(|_| Error::Overflow("ramification index"))?;

    Ok(YpqData {
        p,
        q,
        w,
        l1,
        l2,
        s,
        n,
        m,
        hirzebruch_index: n,
        branch_coefficient: ExactRational::new(m64 - 1, m64),
        regular: has_regular_reeb(CP1_FANO_INDEX, w).regular,
    })
}
