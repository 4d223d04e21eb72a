use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::join::{del_pezzo_h4, WeightVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DelPezzoJoin {
    pub k: u8,
    pub w: WeightVector,
}

/// Two del Pezzo joins with equal `b2` and isomorphic `H^4`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DelPezzoCoincidence {
    pub a: DelPezzoJoin,
    pub b: DelPezzoJoin,
    pub b2: u64,
    pub invariant_factors: Vec<u128>,
}

fn order_key(j: &DelPezzoJoin) -> (u8, u64, u64) {
    (j.k, j.w.w1(), j.w.w2())
}

/// All unordered pairs of distinct joins with `1 <= k <= 8` and
/// `w1 + w2 <= max_sum` whose cohomology agrees in `b2` and the
/// invariant-factor form of `H^4`. Pairs are ordered internally and in the
/// list by `(k, w1, w2)`.
pub fn delpezzo_coincidences(max_sum: u64) -> Result<Vec<DelPezzoCoincidence>> {
    if max_sum == 0 {
        return Err(Error::Zero("max_sum"));
    }
    let mut buckets: HashMap<(u64, Vec<u128>), Vec<DelPezzoJoin>> = HashMap::new();
    for sum in 2..=max_sum {
        for w2 in 1..=sum / 2 {
            let Ok(w) = WeightVector::new(sum - w2, w2) else {
                continue;
            };
            for k in 1..=8u8 {
                let h4 = del_pezzo_h4(k as u32, w)?;
                buckets
                    .entry((k as u64 + 1, h4.invariant_factors().to_vec()))
                    .or_default()
                    .push(DelPezzoJoin { k, w });
            }
        }
    }
    let mut out = Vec::new();
    for ((b2, invariant_factors), mut joins) in buckets {
        if joins.len() < 2 {
            continue;
        }
        joins.sort_by_key(order_key);
        for (i, &a) in joins.iter().enumerate() {
            for &b in &joins[i + 1..] {
                out.push(DelPezzoCoincidence {
                    a,
                    b,
                    b2,
                    invariant_factors: invariant_factors.clone(),
                });
            }
        }
    }
    out.sort_by_key(|c| (order_key(&c.a), order_key(&c.b)));
    Ok(out)
}
