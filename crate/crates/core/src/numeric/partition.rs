use crate::error::{Error, Result};
use crate::join::WeightVector;

use super::factor::factorize;

/// All unordered splittings `W = w1·w2` with `gcd(w1, w2) = 1`, normalized to
/// `w1 >= w2` and sorted by `w1` descending.
///
/// Each prime power of `W` lands wholly in one factor, so a `W` with `k`
/// distinct primes has `2^(k-1)` partitions (one when `W = 1`).
pub fn coprime_partitions(w: u64) -> Result<Vec<WeightVector>> {
    if w == 0 {
        return Err(Error::Zero("W"));
    }
    let blocks: Vec<u64> = factorize(w)?.prime_powers().collect();
    if blocks.is_empty() {
        return Ok(vec![WeightVector::new(1, 1)?]);
    }
    // Fix the largest block in w1 to enumerate each unordered pair once.
    let (&pinned, free) = blocks.split_last().expect("non-empty");
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0u64..(1 << free.len()) {
        let mut a = pinned;
        for (i, &b) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a *= b;
            }
        }
        let b = w / a;
        out.push(WeightVector::new(a.max(b), a.min(b))?);
    }
    out.sort_by_key(|w| std::cmp::Reverse(w.w1()));
    Ok(out)
}
