use std::fmt;

use crate::classify::{
    classify_family, delpezzo_coincidences, homotopy_equivalent, search_equivalent_pairs, CaseTag,
    DelPezzoJoin, Verdict,
};
use crate::cone::{enumerate_regular_cones, ypq_translate};
use crate::error::Result;
use crate::join::{cohomology_ring, BaseManifold, JoinSpec, WeightVector};
use crate::numeric::arith::{gcd, pow_mod};
use crate::numeric::is_prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReproStatus {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReproItem {
    pub name: &'static str,
    pub status: ReproStatus,
    pub detail: String,
}

impl fmt::Display for ReproItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.status {
            ReproStatus::Pass => "PASS",
            ReproStatus::Fail => "FAIL",
        };
        write!(f, "{s} {}: {}", self.name, self.detail)
    }
}

fn item(name: &'static str, ok: bool, detail: String) -> ReproItem {
    let status = if ok {
        ReproStatus::Pass
    } else {
        ReproStatus::Fail
    };
    ReproItem {
        name,
        status,
        detail,
    }
}

fn w(a: u64, b: u64) -> WeightVector {
    WeightVector::new(a, b).expect("fixed example weights are valid")
}

/// Families `W = 3p, 9p` for primes `p`, and the two worked families.
pub(crate) fn is_reference_family(product: u64) -> bool {
    let prime_factor =
        |k: u64| product.is_multiple_of(k) && is_prime(product / k) && product / k > 3;
    product == 165 || product == 6545 || prime_factor(3) || prime_factor(9)
}

/// Runs every reference example and reports one line per item.
pub fn run_repro() -> Result<Vec<ReproItem>> {
    Ok(vec![
        ex1()?,
        ex2()?,
        pairrem()?,
        findex(),
        ypq_regular()?,
        del_pezzo_z30()?,
        del_pezzo_uniqueness()?,
        search_reference_families()?,
    ])
}

fn ex1() -> Result<ReproItem> {
    let mut bad = Vec::new();
    let primes: Vec<u64> = (5..=97).filter(|&p| is_prime(p)).collect();
    for &p in &primes {
        let v1 = homotopy_equivalent(w(3 * p, 1), w(p, 3))?.verdict;
        let v2 = homotopy_equivalent(w(9 * p, 1), WeightVector::ordered(p, 9)?)?.verdict;
        let m = 27 * p as u128;
        let p = p as u128;
        let c1 = pow_mod(3 * p + 1, 3, m) == (9 * p + 1) % m;
        let c2 = pow_mod(p + 3, 3, m) == (pow_mod(p, 3, m) + 9 * p * p + 27) % m;
        if v1 != Verdict::Inequivalent || v2 != Verdict::Inequivalent || !c1 || !c2 {
            bad.push(p);
        }
    }
    Ok(item(
        "ex1",
        bad.is_empty(),
        format!(
            "(3p,1)/(p,3) and (9p,1)/(p,9) inequivalent for {} primes 5..97; failures {bad:?}",
            primes.len()
        ),
    ))
}

fn ex2() -> Result<ReproItem> {
    let expected = [
        w(6545, 1),
        w(1309, 5),
        w(935, 7),
        w(595, 11),
        w(385, 17),
        w(187, 35),
        w(119, 55),
        w(85, 77),
    ];
    let f = classify_family(6545)?;
    let members: Vec<WeightVector> = f.members.iter().map(|m| m.member.w).collect();
    let singletons = f
        .classes
        .as_ref()
        .is_some_and(|c| c.len() == 8 && c.iter().all(|c| c.len() == 1));
    let mut inequivalent = 0;
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if homotopy_equivalent(a, b)?.verdict == Verdict::Inequivalent {
                inequivalent += 1;
            }
        }
    }
    let ok = members == expected && f.case_tag == CaseTag::P0 && singletons && inequivalent == 28;
    Ok(item(
        "ex2",
        ok,
        format!(
            "W=6545: {} members, case {:?}, {} classes, {inequivalent}/28 pairs inequivalent",
            members.len(),
            f.case_tag,
            f.class_count()
                .map_or("undetermined".into(), |c| c.to_string())
        ),
    ))
}

fn pairrem() -> Result<ReproItem> {
    let f = classify_family(165)?;
    let members: Vec<WeightVector> = f.members.iter().map(|m| m.member.w).collect();
    let mut all = true;
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            all &= homotopy_equivalent(a, b)?.verdict == Verdict::Inequivalent;
        }
    }
    Ok(item(
        "pairrem",
        members.len() == 4 && all,
        format!(
            "W=165: members {}, pairwise inequivalent: {all}",
            members
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        ),
    ))
}

fn findex() -> ReproItem {
    let table = |i| -> Vec<(u64, u64)> {
        enumerate_regular_cones(i)
            .iter()
            .map(|e| (e.w.w1(), e.w.w2()))
            .collect()
    };
    let (t1, t2, t3) = (table(1), table(2), table(3));
    let ok = t1.is_empty() && t2 == [(3, 1)] && t3 == [(2, 1), (5, 1)];
    item(
        "Findex",
        ok,
        format!("I=1: {t1:?}, I=2: {t2:?}, I=3: {t3:?}"),
    )
}

fn ypq_regular() -> Result<ReproItem> {
    let mut regular = Vec::new();
    let mut checked = 0;
    for p in 2..=100u64 {
        for q in (1..p).filter(|&q| gcd(p as u128, q as u128) == 1) {
            checked += 1;
            if ypq_translate(p, q)?.regular {
                regular.push((p, q));
            }
        }
    }
    Ok(item(
        "Ypqcor",
        regular == [(2, 1)],
        format!("{checked} pairs with p <= 100; regular: {regular:?}"),
    ))
}

fn del_pezzo_z30() -> Result<ReproItem> {
    let dp1 = BaseManifold::del_pezzo(1)?;
    let h4 = |a, b| -> Result<String> {
        let r = cohomology_ring(&JoinSpec::new(dp1, w(a, b)))?;
        Ok(r.group(4).map(|g| g.to_string()).unwrap_or_default())
    };
    let (x, y) = (h4(3, 2)?, h4(5, 1)?);
    Ok(item(
        "Sk7man-remark",
        x == "Z_30" && y == "Z_30",
        format!("dP:1 with (3,2): H^4 = {x}; with (5,1): H^4 = {y}"),
    ))
}

/// The single-coincidence claim, checked at sum bound 100.
fn del_pezzo_uniqueness() -> Result<ReproItem> {
    let found = delpezzo_coincidences(100)?;
    let expected = (
        DelPezzoJoin { k: 1, w: w(3, 2) },
        DelPezzoJoin { k: 1, w: w(5, 1) },
    );
    let ok = found.len() == 1 && (found[0].a, found[0].b) == expected;
    let shown: Vec<String> = found
        .iter()
        .take(4)
        .map(|c| format!("k={} {}~{}", c.a.k, c.a.w, c.b.w))
        .collect();
    Ok(item(
        "Sk7man-unique",
        ok,
        format!(
            "{} coincident pairs with w1 + w2 <= 100; first: {}",
            found.len(),
            shown.join(", ")
        ),
    ))
}

fn search_reference_families() -> Result<ReproItem> {
    let report = search_equivalent_pairs(200, 1)?;
    let hits: Vec<u64> = report
        .pairs
        .iter()
        .map(|p| p.product)
        .filter(|&x| is_reference_family(x))
        .collect();
    Ok(item(
        "search-200",
        hits.is_empty(),
        format!(
            "{} equivalent pairs with W <= 200, {} in the 3p/9p/165 families",
            report.pairs.len(),
            hits.len()
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_families() {
        assert!(is_reference_family(15) && is_reference_family(45) && is_reference_family(165));
        assert!(!is_reference_family(155) && !is_reference_family(9) && !is_reference_family(27));
    }
}
