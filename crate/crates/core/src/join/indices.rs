use num_integer::Integer;
use serde::Serialize;

use super::base::{Admissibility, BaseManifold};
use super::weight::WeightVector;
use crate::error::{Error, Result};

/// Relative Fano indices `(l1, l2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FanoIndices {
    pub l1: u128,
    pub l2: u128,
}

/// `g = gcd(|w|, I)`, `l1 = I / g`, `l2 = |w| / g`.
///
/// These are the only values for which the contact bundle of the join has
/// vanishing first Chern class.
pub fn relative_fano_indices(fano_index: u64, w: WeightVector) -> Result<FanoIndices> {
    if fano_index == 0 {
        return Err(Error::Zero("Fano index"));
    }
    let i = fano_index as u128;
    let g = w.sum().gcd(&i);
    Ok(FanoIndices {
        l1: i / g,
        l2: w.sum() / g,
    })
}

/// A base, a weight vector, and the indices `(l1, l2)` of the join
/// `M ⋆_{l1,l2} S^3_w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct JoinSpec {
    pub base: BaseManifold,
    pub w: WeightVector,
    pub l1: u128,
    pub l2: u128,
}

impl JoinSpec {
    /// The join with its relative Fano indices.
    pub fn new(base: BaseManifold, w: WeightVector) -> Self {
        let FanoIndices { l1, l2 } =
            relative_fano_indices(base.fano_index(), w).expect("catalog Fano indices are positive");
        Self { base, w, l1, l2 }
    }

    /// A join with arbitrary indices, for smoothness and admissibility
    /// experiments.
    pub fn with_indices(base: BaseManifold, w: WeightVector, l1: u128, l2: u128) -> Result<Self> {
        if l1 == 0 || l2 == 0 {
            return Err(Error::Zero("join index"));
        }
        Ok(Self { base, w, l1, l2 })
    }

    /// Whether `(l1, l2)` are the relative Fano indices.
    pub fn is_canonical(&self) -> bool {
        relative_fano_indices(self.base.fano_index(), self.w)
            .map(|f| f.l1 == self.l1 && f.l2 == self.l2)
            .unwrap_or(false)
    }

    pub fn dim(&self) -> u32 {
        self.base.join_dim()
    }
}

/// `gcd(l2, l1·w1) = gcd(l2, l1·w2) = 1`.
pub fn smoothness_check(spec: &JoinSpec) -> bool {
    let coprime = |a: u128, b: u128| a.gcd(&b) == 1;
    coprime(spec.l2, spec.l1)
        && coprime(spec.l2, spec.w.w1() as u128)
        && coprime(spec.l2, spec.w.w2() as u128)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    pub verdict: Admissibility,
    /// One entry per failed or open clause.
    pub reasons: Vec<String>,
}

/// Whether the join carries a Sasaki–Einstein metric in its w-Sasaki cone.
pub fn se_admissible(base: BaseManifold, w: WeightVector) -> AdmissibilityReport {
    se_admissible_join(&JoinSpec::new(base, w))
}

pub fn se_admissible_join(spec: &JoinSpec) -> AdmissibilityReport {
    let mut failed = Vec::new();
    let mut open = Vec::new();
    match spec.base.ke_admissible() {
        Admissibility::Yes => {}
        Admissibility::No => failed.push(format!(
            "base {} carries no Kähler–Einstein metric",
            spec.base
        )),
        Admissibility::Unknown => open.push(format!(
            "existence of a Kähler–Einstein compatible SE metric over {} is open (2 < d < (n+1)/2)",
            spec.base
        )),
    }
    if spec.base.fano_index() < 1 {
        failed.push("Fano index must be positive".into());
    }
    if spec.w.w1() <= spec.w.w2() && !spec.w.is_trivial() {
        failed.push(format!("w = {} needs w1 > w2", spec.w));
    }
    if !spec.is_canonical() {
        let f = relative_fano_indices(spec.base.fano_index(), spec.w)
            .expect("catalog Fano indices are positive");
        failed.push(format!(
            "(l1,l2) = ({},{}) differ from the relative Fano indices ({},{})",
            spec.l1, spec.l2, f.l1, f.l2
        ));
    }
    let verdict = if !failed.is_empty() {
        Admissibility::No
    } else if !open.is_empty() {
        Admissibility::Unknown
    } else {
        Admissibility::Yes
    };
    failed.extend(open);
    AdmissibilityReport {
        verdict,
        reasons: failed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: u64, b: u64) -> WeightVector {
        WeightVector::new(a, b).unwrap()
    }

    fn idx(i: u64, a: u64, b: u64) -> (u128, u128) {
        let f = relative_fano_indices(i, w(a, b)).unwrap();
        (f.l1, f.l2)
    }

    #[test]
    fn fano_index_examples() {
        assert_eq!(idx(3, 2, 1), (1, 1));
        assert_eq!(idx(3, 5, 1), (1, 2));
        assert_eq!(idx(1, 7, 4), (1, 11));
        assert_eq!(idx(2, 3, 1), (1, 2));
        assert!(relative_fano_indices(0, w(2, 1)).is_err());
    }

    #[test]
    fn fano_indices_are_coprime() {
        for i in 1..40 {
            for a in 1..60 {
                for b in 1..=a {
                    if let Ok(v) = WeightVector::new(a, b) {
                        let f = relative_fano_indices(i, v).unwrap();
                        assert_eq!(f.l1.gcd(&f.l2), 1);
                        assert_eq!(f.l1 * v.sum(), f.l2 * i as u128);
                    }
                }
            }
        }
    }

    #[test]
    fn smoothness_examples() {
        assert!(smoothness_check(&JoinSpec::new(
            BaseManifold::cp2(),
            w(2, 1)
        )));
        assert!(smoothness_check(&JoinSpec::new(
            BaseManifold::cp1xcp1(),
            w(3, 1)
        )));
        let artificial = JoinSpec::with_indices(BaseManifold::cp2(), w(1, 1), 2, 4).unwrap();
        assert!(!smoothness_check(&artificial));
    }

    #[test]
    fn canonical_joins_are_smooth() {
        let bases = [
            BaseManifold::cp2(),
            BaseManifold::cp1xcp1(),
            BaseManifold::del_pezzo(5).unwrap(),
            BaseManifold::stiefel(4).unwrap(),
            BaseManifold::g2_plus(),
        ];
        for base in bases {
            for a in 1..80 {
                for b in 1..=a {
                    if let Ok(v) = WeightVector::new(a, b) {
                        assert!(smoothness_check(&JoinSpec::new(base, v)), "{base} {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn admissibility_examples() {
        let cp2 = se_admissible(BaseManifold::cp2(), w(2, 1));
        assert_eq!(cp2.verdict, Admissibility::Yes);
        assert!(cp2.reasons.is_empty());

        let fermat = se_admissible(BaseManifold::fermat(3, 10).unwrap(), w(2, 1));
        assert_eq!(fermat.verdict, Admissibility::Unknown);
        assert_eq!(fermat.reasons.len(), 1);

        let dp5 = se_admissible(BaseManifold::del_pezzo(5).unwrap(), w(4, 3));
        assert_eq!(dp5.verdict, Admissibility::Yes);

        let dp1 = se_admissible(BaseManifold::del_pezzo(1).unwrap(), w(3, 2));
        assert_eq!(dp1.verdict, Admissibility::No);

        let off = JoinSpec::with_indices(BaseManifold::cp2(), w(2, 1), 2, 3).unwrap();
        let r = se_admissible_join(&off);
        assert_eq!(r.verdict, Admissibility::No);
        assert_eq!(r.reasons.len(), 1);
    }
}
