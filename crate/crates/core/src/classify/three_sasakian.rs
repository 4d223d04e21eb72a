use num_integer::Integer;
use serde::Serialize;

use super::family::{FamilyMember, Verdict};
use crate::error::{Error, Result};
use crate::join::WeightVector;

/// An Eschenburg-type 3-Sasakian 7-manifold `S(p)` against a join.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThreeSasakianComparison {
    pub p: [u64; 3],
    pub w: WeightVector,
    pub sigma2: u128,
    pub verdict: Verdict,
    pub reason: &'static str,
}

/// Never homotopy equivalent: `π4` of the join is `0`, while the
/// 3-Sasakian manifold has `π4 = Z_2`.
pub fn compare_with_3sasakian(p: [u64; 3], w: WeightVector) -> Result<ThreeSasakianComparison> {
    if p.contains(&0) {
        return Err(Error::InvalidArgument(format!(
            "{p:?}: entries must be positive"
        )));
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if p[i].gcd(&p[j]) != 1 {
            return Err(Error::InvalidArgument(format!(
                "{p:?}: entries must be pairwise coprime"
            )));
        }
    }
    FamilyMember::new(w)?;
    let [a, b, c] = p.map(u128::from);
    let sigma2 = a * b + a * c + b * c;
    if sigma2 % 2 == 0 {
        return Err(Error::Invariant(format!(
            "sigma2 = {sigma2} is even for {p:?}"
        )));
    }
    Ok(ThreeSasakianComparison {
        p,
        w,
        sigma2,
        verdict: Verdict::Inequivalent,
        reason: "π4 differs (0 vs Z2)",
    })
}
