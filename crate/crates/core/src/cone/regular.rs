use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde::Serialize;

use crate::join::WeightVector;

/// Default sum horizon for brute-force regularity scans.
pub const DEFAULT_SCAN_SUM: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Regularity {
    pub regular: bool,
    /// The `n` with `w1 - w2 = n·l2`; absent for `w = (1,1)`, which is
    /// regular without one.
    pub witness: Option<u128>,
}

/// A w-Sasaki cone containing a regular Reeb field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegularConeEntry {
    pub w: WeightVector,
    pub n: u128,
    /// `gcd(I_N, w1 + w2)`.
    #[serde(rename = "K")]
    pub k: u128,
}

/// The w-Sasaki cone is regular iff `w1 - w2 = n·l2` for some positive
/// integer `n`, where `l2 = |w| / gcd(I_N, |w|)`. A zero Fano index never
/// yields a regular cone.
pub fn has_regular_reeb(fano_index: u64, w: WeightVector) -> Regularity {
    if w.is_trivial() {
        return Regularity {
            regular: true,
            witness: None,
        };
    }
    let not_regular = Regularity {
        regular: false,
        witness: None,
    };
    if fano_index == 0 {
        return not_regular;
    }
    let g = w.sum().gcd(&(fano_index as u128));
    match witness(w.sum() / g, w.difference() as u128) {
        Some(n) => Regularity {
            regular: true,
            witness: Some(n),
        },
        None => not_regular,
    }
}

/// `n` with `diff = n·l2`, `n >= 1`.
#[inline]
fn witness<T>(l2: T, diff: T) -> Option<T>
where
    T: Copy
        + PartialEq
        + PartialOrd
        + std::ops::Rem<Output = T>
        + std::ops::Div<Output = T>
        + From<u8>,
{
    let zero = T::from(0);
    (diff > zero && diff % l2 == zero).then(|| diff / l2)
}

/// All `w != (1,1)` whose cone is regular, from the closed form
/// `w = (K+n, K-n) / gcd(K+n, K-n)`.
///
/// The closed form is evaluated at every divisor `K >= 2` of `I_N`; a
/// candidate is kept only if `gcd(I_N, |w|)` is the `K` it was built from.
/// Sorted by `(w1 + w2, w1)`.
pub fn enumerate_regular_cones(fano_index: u64) -> Vec<RegularConeEntry> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let i = fano_index as u128;
    for k in (2..=fano_index).filter(|k| fano_index.is_multiple_of(*k)) {
        for n in 1..k {
            let (a, b) = (k + n, k - n);
            let g = a.gcd(&b);
            let w = WeightVector::new(a / g, b / g).expect("reduced pair is coprime and ordered");
            let kk = w.sum().gcd(&i);
            if kk != k as u128 || !seen.insert(w) {
                continue;
            }
            let witness = has_regular_reeb(fano_index, w)
                .witness
                .expect("closed-form candidates satisfy the divisibility criterion");
            out.push(RegularConeEntry {
                w,
                n: witness,
                k: kk,
            });
        }
    }
    out.sort_by_key(|e| (e.w.sum(), e.w.w1()));
    out
}

/// Brute force: every coprime `w != (1,1)` with `w1 + w2 <= max_sum`, tested
/// against [`has_regular_reeb`] for each Fano index. Sorted like
/// [`enumerate_regular_cones`].
pub fn regular_cones_by_scan(
    fano_indices: &[u64],
    max_sum: u64,
) -> BTreeMap<u64, Vec<WeightVector>> {
    let mut out: BTreeMap<u64, Vec<WeightVector>> =
        fano_indices.iter().map(|&i| (i, Vec::new())).collect();
    let indices: Vec<u64> = out.keys().copied().filter(|&i| i > 0).collect();
    let mut l2 = vec![0u64; indices.len()];
    for sum in 3..=max_sum {
        for (slot, &i) in l2.iter_mut().zip(&indices) {
            *slot = sum / sum.gcd(&i);
        }
        for w2 in 1..=sum / 2 {
            if sum.gcd(&w2) != 1 {
                continue;
            }
            let diff = sum - 2 * w2;
            for (&l2, &i) in l2.iter().zip(&indices) {
                if witness(l2, diff).is_some() {
                    let w = WeightVector::new(sum - w2, w2).expect("coprime by construction");
                    out.get_mut(&i).expect("index present").push(w);
                }
            }
        }
    }
    for hits in out.values_mut() {
        hits.sort_by_key(|w| (w.sum(), w.w1()));
    }
    out
}
