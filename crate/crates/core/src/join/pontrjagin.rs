use serde::Serialize;

use super::weight::WeightVector;
use crate::error::{Error, Result};
use crate::numeric::arith::{mul_mod, neg_mod};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PontrjaginResidue {
    pub modulus: u128,
    pub residue: u128,
}

/// First Pontrjagin class of the 7-dimensional `S^5` join, as a multiple of
/// the `x²` generator of `H^4`.
///
/// When `3 ∤ |w|`, `H^4` has order `9W` and `p1 ≡ -6|w|²`. When `3 | |w|`,
/// `H^4` has order `W` and `p1 ≡ -6(|w|/3)²`.
pub fn first_pontrjagin(w: WeightVector) -> Result<PontrjaginResidue> {
    let sum = w.sum();
    let (modulus, base) = if sum.is_multiple_of(3) {
        (w.product(), sum / 3)
    } else {
        (
            w.product()
                .checked_mul(9)
                .ok_or(Error::Overflow("9*w1*w2"))?,
            sum,
        )
    };
    let six_sq = mul_mod(6, mul_mod(base, base, modulus), modulus);
    Ok(PontrjaginResidue {
        modulus,
        residue: neg_mod(six_sq, modulus),
    })
}

/// Real dimension `4(k - 4)` of the local moduli of SE metrics on the del
/// Pezzo joins; defined for `4 <= k <= 8`.
pub fn moduli_dimension(k: u8) -> Option<u32> {
    (4..=8).contains(&k).then(|| 4 * (k as u32 - 4))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p1(a: u64, b: u64) -> (u128, u128) {
        let r = first_pontrjagin(WeightVector::new(a, b).unwrap()).unwrap();
        (r.residue, r.modulus)
    }

    #[test]
    fn examples() {
        assert_eq!(p1(2, 1), (0, 2));
        assert_eq!(p1(5, 1), (1, 5));
        assert_eq!(p1(3, 2), (12, 54));
    }

    #[test]
    fn moduli() {
        assert_eq!(moduli_dimension(4), Some(0));
        assert_eq!(moduli_dimension(5), Some(4));
        assert_eq!(moduli_dimension(8), Some(16));
        assert_eq!(moduli_dimension(2), None);
        assert_eq!(moduli_dimension(9), None);
    }
}
