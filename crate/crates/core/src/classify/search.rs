use std::thread;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use super::family::{
    classify_family, homeo_obstruction, CaseTag, HomeoObstruction, HOMOTOPY_CRITERION,
};
use crate::error::{Error, Result};
use crate::join::WeightVector;
use crate::numeric::SignedUnitClass;

/// Two distinct members of one family with the same homotopy invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalentPair {
    #[serde(rename = "W")]
    pub product: u64,
    pub case_tag: CaseTag,
    pub a: WeightVector,
    pub b: WeightVector,
    pub invariant: SignedUnitClass,
    pub homeo_obstruction: HomeoObstruction,
}

/// Class statistics for a family with at least two members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyStat {
    #[serde(rename = "W")]
    pub product: u64,
    pub case_tag: CaseTag,
    pub members: usize,
    /// `None` for an undetermined (even `|H^4|`) family.
    pub classes: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    #[serde(rename = "max_W")]
    pub max_w: u64,
    pub families_scanned: u64,
    pub multi_member_families: u64,
    pub undetermined_families: u64,
    pub undetermined_multi_member_families: u64,
    pub equivalent_pairs: u64,
    pub criterion: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub pairs: Vec<EquivalentPair>,
    pub family_stats: Vec<FamilyStat>,
    pub summary: SearchSummary,
}

#[derive(Default)]
struct ShardResult {
    pairs: Vec<EquivalentPair>,
    stats: Vec<FamilyStat>,
    families: u64,
    undetermined: u64,
    undetermined_multi: u64,
}

impl ShardResult {
    fn absorb(&mut self, other: ShardResult) {
        self.pairs.extend(other.pairs);
        self.stats.extend(other.stats);
        self.families += other.families;
        self.undetermined += other.undetermined;
        self.undetermined_multi += other.undetermined_multi;
    }
}

/// Scans every family `W = 1..=max_w`, sharded into contiguous `W` ranges.
/// The report is identical for every `shards >= 1`.
pub fn search_equivalent_pairs(max_w: u64, shards: usize) -> Result<SearchReport> {
    if max_w == 0 {
        return Err(Error::Zero("max_W"));
    }
    if shards == 0 {
        return Err(Error::Zero("shard count"));
    }
    let ranges = shard_ranges(max_w, shards);
    let results: Vec<Result<ShardResult>> = if ranges.len() == 1 {
        vec![scan_range(ranges[0].0, ranges[0].1)]
    } else {
        thread::scope(|s| {
            let handles: Vec<_> = ranges
                .iter()
                .map(|&(lo, hi)| s.spawn(move || scan_range(lo, hi)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search shard panicked"))
                .collect()
        })
    };

    let mut merged = ShardResult::default();
    for r in results {
        merged.absorb(r?);
    }
    let summary = SearchSummary {
        max_w,
        families_scanned: merged.families,
        multi_member_families: merged.stats.len() as u64,
        undetermined_families: merged.undetermined,
        undetermined_multi_member_families: merged.undetermined_multi,
        equivalent_pairs: merged.pairs.len() as u64,
        criterion: HOMOTOPY_CRITERION,
    };
    Ok(SearchReport {
        pairs: merged.pairs,
        family_stats: merged.stats,
        summary,
    })
}

/// Splits `1..=max_w` into at most `shards` non-empty contiguous ranges.
fn shard_ranges(max_w: u64, shards: usize) -> Vec<(u64, u64)> {
    let n = (shards as u64).min(max_w);
    let (base, extra) = (max_w / n, max_w % n);
    let mut out = Vec::with_capacity(n as usize);
    let mut lo = 1;
    for i in 0..n {
        let len = base + u64::from(i < extra);
        out.push((lo, lo + len - 1));
        lo += len;
    }
    out
}

fn scan_range(lo: u64, hi: u64) -> Result<ShardResult> {
    let mut out = ShardResult::default();
    for product in lo..=hi {
        let family = classify_family(product)?;
        out.families += 1;
        if !family.determined() {
            out.undetermined += 1;
            if family.members.len() > 1 {
                out.undetermined_multi += 1;
            }
        }
        if family.members.len() < 2 {
            continue;
        }
        out.stats.push(FamilyStat {
            product,
            case_tag: family.case_tag,
            members: family.members.len(),
            classes: family.class_count(),
        });
        let Some(classes) = &family.classes else {
            continue;
        };
        let mut pairs = Vec::new();
        for class in classes.iter().filter(|c| c.len() > 1) {
            for (i, &x) in class.iter().enumerate() {
                for &y in &class[i + 1..] {
                    let (a, b) = if (x.w1(), x.w2()) < (y.w1(), y.w2()) {
                        (x, y)
                    } else {
                        (y, x)
                    };
                    if !recheck_equivalence(a, b) {
                        return Err(Error::Invariant(format!(
                            "W = {product}: {a} ~ {b} not confirmed by independent evaluation"
                        )));
                    }
                    let invariant = family
                        .members
                        .iter()
                        .find(|m| m.member.w == a)
                        .map(|m| m.invariant)
                        .expect("class member belongs to family");
                    pairs.push(EquivalentPair {
                        product,
                        case_tag: family.case_tag,
                        a,
                        b,
                        invariant,
                        homeo_obstruction: homeo_obstruction(a, b)?,
                    });
                }
            }
        }
        pairs.sort_by_key(|p| (p.a.w1(), p.a.w2(), p.b.w1(), p.b.w2()));
        out.pairs.extend(pairs);
    }
    Ok(out)
}

/// Independent check of `l2(a)^3 = ±l2(b)^3` using exact big-integer cubes
/// and the case split on `W mod 3` directly.
pub fn recheck_equivalence(a: WeightVector, b: WeightVector) -> bool {
    let product = BigUint::from(a.w1()) * BigUint::from(a.w2());
    if product != BigUint::from(b.w1()) * BigUint::from(b.w2()) {
        return false;
    }
    let p0 = ((&product + 1u32) % 3u32).is_zero();
    let (modulus, divisor) = if p0 {
        (product.clone(), 3u32)
    } else {
        (product * 9u32, 1u32)
    };
    let cube = |w: WeightVector| {
        let l2 = (BigUint::from(w.w1()) + BigUint::from(w.w2())) / divisor;
        (&l2 * &l2 * &l2) % &modulus
    };
    let (ca, cb) = (cube(a), cube(b));
    ca == cb || ((&ca + &cb) % &modulus).is_zero()
}
