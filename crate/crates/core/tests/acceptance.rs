//! Acceptance suite: prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sejoin::classify::{
    delpezzo_coincidences, homeo_obstruction, homotopy_equivalent, Obstruction, Verdict,
};
use sejoin::cone::{
    enumerate_regular_cones, regular_cones_by_scan, ypq_translate, DEFAULT_SCAN_SUM,
};
use sejoin::join::{
    cohomology_ring, first_pontrjagin, BaseKind, BaseManifold, JoinSpec, WeightVector,
};
use sejoin::numeric::coprime_partitions;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn w(a: u64, b: u64) -> WeightVector {
    WeightVector::new(a, b).unwrap()
}

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    check(t < limit, format!("took {t:?}, limit {limit:?}"))
}

fn sejoin(args: &[&str]) -> (i32, Vec<u8>) {
    let o = Command::new(env!("CARGO_BIN_EXE_sejoin"))
        .args(args)
        .env_remove("SEJOIN_SHARDS")
        .output()
        .expect("binary runs");
    (o.status.code().unwrap_or(-1), o.stdout)
}

/// Signed cube class by exhaustive definition: the smaller of `c` and `m - c`.
fn oracle_class(l2: u128, m: u128) -> u128 {
    let c = l2 % m * (l2 % m) % m * (l2 % m) % m;
    c.min(m - c) % m.max(1)
}

fn c1_ex1() -> Outcome {
    let start = Instant::now();
    let primes: Vec<u64> = (5..=97).filter(|&p| is_prime(p)).collect();
    for &p in &primes {
        let p9 = WeightVector::ordered(p, 9).unwrap();
        for (a, b) in [(w(3 * p, 1), w(p, 3)), (w(9 * p, 1), p9)] {
            let v = homotopy_equivalent(a, b).map_err(|e| e.to_string())?;
            check(
                v.verdict == Verdict::Inequivalent,
                format!("{a} vs {b}: {:?}", v.verdict),
            )?;
            let m = 9 * a.product();
            let (ca, cb) = (oracle_class(a.sum(), m), oracle_class(b.sum(), m));
            check(ca != cb, format!("oracle says {a} ~ {b}"))?;
            check(
                (
                    v.invariant_a.representative(),
                    v.invariant_b.representative(),
                ) == (ca, cb),
                format!("{a},{b}: classes differ from oracle"),
            )?;
        }
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!(
        "{} primes, both pair types inequivalent",
        primes.len()
    ))
}

fn c2_ex2() -> Outcome {
    let start = Instant::now();
    let (code, out) = sejoin(&["classify", "--W", "6545"]);
    check(code == 0, format!("exit code {code}"))?;
    let v: Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    let members: Vec<(u64, u64)> = v["members"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| (m["w"][0].as_u64().unwrap(), m["w"][1].as_u64().unwrap()))
        .collect();
    let expected = [
        (6545, 1),
        (1309, 5),
        (935, 7),
        (595, 11),
        (385, 17),
        (187, 35),
        (119, 55),
        (85, 77),
    ];
    check(members == expected, format!("members {members:?}"))?;
    check(v["case_tag"] == "P0", "case tag")?;
    let classes = v["classes"].as_array().unwrap();
    check(
        classes.len() == 8 && classes.iter().all(|c| c.as_array().unwrap().len() == 1),
        "classes",
    )?;
    let mut inequivalent = 0;
    for (i, a) in expected.iter().enumerate() {
        for b in &expected[i + 1..] {
            let r = homotopy_equivalent(w(a.0, a.1), w(b.0, b.1)).unwrap();
            inequivalent += usize::from(r.verdict == Verdict::Inequivalent);
            let (ca, cb) = (
                oracle_class((a.0 + a.1) as u128 / 3, 6545),
                oracle_class((b.0 + b.1) as u128 / 3, 6545),
            );
            check(ca != cb, "oracle found an equivalence")?;
        }
    }
    check(
        inequivalent == 28,
        format!("{inequivalent}/28 inequivalent"),
    )?;
    within(start, Duration::from_secs(1))?;
    Ok("8 members, P0, 8 singleton classes, 28/28 pairs inequivalent".into())
}

fn c3_pairrem() -> Outcome {
    let parts = coprime_partitions(165).map_err(|e| e.to_string())?;
    check(parts.len() == 4, format!("{} members", parts.len()))?;
    for (i, &a) in parts.iter().enumerate() {
        for &b in &parts[i + 1..] {
            let v = homotopy_equivalent(a, b).unwrap().verdict;
            check(v == Verdict::Inequivalent, format!("{a} vs {b}: {v:?}"))?;
        }
    }
    Ok("4 members, 6 pairs inequivalent".into())
}

fn c4_regular_cones() -> Outcome {
    let start = Instant::now();
    let table = |i| -> Vec<(u64, u64)> {
        enumerate_regular_cones(i)
            .iter()
            .map(|e| (e.w.w1(), e.w.w2()))
            .collect()
    };
    check(table(1).is_empty(), "I=1 not empty")?;
    check(table(2) == [(3, 1)], format!("I=2: {:?}", table(2)))?;
    check(table(3) == [(2, 1), (5, 1)], format!("I=3: {:?}", table(3)))?;
    let indices: Vec<u64> = (1..=30).collect();
    let scan = regular_cones_by_scan(&indices, DEFAULT_SCAN_SUM);
    let mut total = 0;
    for i in indices {
        let closed: Vec<WeightVector> = enumerate_regular_cones(i)
            .iter()
            .map(|e| e.w)
            .filter(|w| w.sum() <= DEFAULT_SCAN_SUM as u128)
            .collect();
        check(
            closed == scan[&i],
            format!("I={i}: closed form and scan differ"),
        )?;
        total += closed.len();
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!(
        "I<=30 matches the brute-force scan to sum 10^4 ({total} cones) in {:?}",
        start.elapsed()
    ))
}

fn c5_ypq() -> Outcome {
    let mut count = 0;
    for p in 2..=500u64 {
        for q in (1..p).filter(|&q| gcd(p as u128, q as u128) == 1) {
            count += 1;
            let y = ypq_translate(p, q).map_err(|e| e.to_string())?;
            let g = gcd((p + q) as u128, (p - q) as u128);
            let ctx = format!("({p},{q})");
            check((y.l1, y.l2) == (g, p as u128), format!("{ctx}: l1,l2"))?;
            check(2 * p as u128 == g * y.w.sum(), format!("{ctx}: 2p = l1|w|"))?;
            let odd_sum = y.w.sum() % 2 == 1;
            check(
                !odd_sum || (y.l1 == 2 && p % 2 == 1),
                format!("{ctx}: odd parity law"),
            )?;
            check(odd_sum || y.l1 == 1, format!("{ctx}: even parity law"))?;
            let (m, n, num, den) = if p % 2 == 1 {
                (p, 2 * q, p - 1, p)
            } else {
                (p / 2, q, p - 2, p)
            };
            let g2 = gcd(num as u128, den as u128) as u64;
            check(
                (y.m, y.n, y.hirzebruch_index) == (m as u128, n as u128, n as u128),
                format!("{ctx}: (m,n,h) = ({},{},{})", y.m, y.n, y.hirzebruch_index),
            )?;
            check(
                (y.branch_coefficient.num, y.branch_coefficient.den) == (num / g2, den / g2),
                format!("{ctx}: branch {}", y.branch_coefficient),
            )?;
            check(
                y.regular == ((p, q) == (2, 1)),
                format!("{ctx}: regularity"),
            )?;
        }
    }
    Ok(format!("{count} pairs"))
}

fn distinct_primes(mut n: u64) -> u32 {
    let mut k = 0;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            k += 1;
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    k + u32::from(n > 1)
}

fn c6_partitions() -> Outcome {
    let start = Instant::now();
    for n in 2..=100_000u64 {
        let got = coprime_partitions(n).map_err(|e| e.to_string())?.len();
        let expected = 1usize << (distinct_primes(n) - 1);
        check(got == expected, format!("W={n}: {got} vs {expected}"))?;
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("2 <= W <= 10^5 in {:?}", start.elapsed()))
}

fn c7_h4_lemma() -> Outcome {
    let mut joins = 0;
    for r in 2..=5u32 {
        let base = BaseManifold::sphere(r).unwrap();
        let mut by_order = std::collections::HashMap::new();
        for w2 in 1..=2000u64 {
            for w1 in w2..=2000 / w2 {
                let Ok(wv) = WeightVector::new(w1, w2) else {
                    continue;
                };
                let spec = JoinSpec::new(base, wv);
                let order = cohomology_ring(&spec)
                    .map_err(|e| e.to_string())?
                    .group(4)
                    .and_then(|g| g.torsion_order())
                    .ok_or("missing H^4")?;
                joins += 1;
                let key = (wv.product(), spec.l1);
                if let Some(prev) = by_order.insert(order, key) {
                    check(
                        prev == key,
                        format!("r={r}: |H^4|={order} from {prev:?} and {key:?}"),
                    )?;
                }
            }
        }
    }
    Ok(format!("{joins} joins, no counterexample"))
}

fn c8_del_pezzo() -> Outcome {
    let found = delpezzo_coincidences(1000).map_err(|e| e.to_string())?;
    let first = found.first().ok_or("no coincidences")?;
    let target = (
        first.a.k,
        first.a.w,
        first.b.k,
        first.b.w,
        first.invariant_factors.clone(),
    );
    let ok = found.len() == 1 && target == (1, w(3, 2), 1, w(5, 1), vec![30]);
    let sample: Vec<String> = found
        .iter()
        .take(5)
        .map(|c| format!("{}~{} {:?}", c.a.w, c.b.w, c.invariant_factors))
        .collect();
    let msg = format!(
        "{} coincident pairs, first: {}",
        found.len(),
        sample.join(", ")
    );
    check(ok, msg.clone())?;
    Ok(msg)
}

/// `3|w|^2 - 9w1^2 - 9w2^2` reduced directly, as `(residue, modulus)`;
/// divided by 9 and reduced mod `W` when `3 | |w|`.
fn oracle_p1(a: u64, b: u64) -> (u128, u128) {
    let (a, b) = (a as i128, b as i128);
    let raw = 3 * (a + b) * (a + b) - 9 * a * a - 9 * b * b;
    let product = a * b;
    if (a + b) % 3 == 0 {
        ((raw / 9).rem_euclid(product) as u128, product as u128)
    } else {
        (raw.rem_euclid(9 * product) as u128, 9 * product as u128)
    }
}

fn c9_pontrjagin() -> Outcome {
    let o = homeo_obstruction(w(15, 1), w(5, 3)).map_err(|e| e.to_string())?;
    check(
        (o.verdict, o.residue_a, o.residue_b, o.modulus) == (Obstruction::Fail, 17, 38, 45),
        format!("{o:?}"),
    )?;
    let mut rng = StdRng::seed_from_u64(0x5e30_1700);
    let mut tested = 0;
    while tested < 200 {
        let (x, y) = (
            rng.gen_range(1..=1_000_000u64),
            rng.gen_range(1..=1_000_000u64),
        );
        let Ok(wv) = WeightVector::new(x.max(y), x.min(y)) else {
            continue;
        };
        let p1 = first_pontrjagin(wv).map_err(|e| e.to_string())?;
        let (residue, modulus) = oracle_p1(wv.w1(), wv.w2());
        check(
            (p1.residue, p1.modulus) == (residue, modulus),
            format!("{wv}: {p1:?} vs ({residue}, {modulus})"),
        )?;
        tested += 1;
    }
    Ok("(15,1)/(5,3) fails 17 vs 38 mod 45; 200 random p1 residues agree".into())
}

fn c10_determinism() -> Outcome {
    let runs: Vec<(i32, Vec<u8>)> = ["1", "4", "8"]
        .iter()
        .map(|s| sejoin(&["search", "--max-W", "10000", "--shards", s]))
        .collect();
    for (code, _) in &runs {
        check(*code == 0, format!("exit code {code}"))?;
    }
    check(
        runs[0].1 == runs[1].1 && runs[1].1 == runs[2].1,
        "outputs differ",
    )?;
    let pairs = String::from_utf8_lossy(&runs[0].1)
        .lines()
        .filter(|l| l.contains("\"record\":\"pair\""))
        .count();
    Ok(format!(
        "{} bytes identical for 1, 4, 8 shards ({pairs} equivalent pairs)",
        runs[0].1.len()
    ))
}

fn sweep_bases() -> Vec<BaseManifold> {
    let mut bases: Vec<BaseManifold> = (1..=6).map(|r| BaseManifold::sphere(r).unwrap()).collect();
    bases.push(BaseManifold::cp2());
    bases.push(BaseManifold::cp1xcp1());
    bases.extend((1..=8).map(|k| BaseManifold::del_pezzo(k).unwrap()));
    bases.extend((3..=5).map(|n| BaseManifold::stiefel(n).unwrap()));
    for (d, n) in [(3, 5), (3, 6), (4, 6), (5, 7), (2, 5)] {
        bases.push(BaseManifold::fermat(d, n).unwrap());
    }
    bases
}

fn c11_duality_sweep() -> Outcome {
    let bases = sweep_bases();
    let weights: Vec<WeightVector> = (2..)
        .flat_map(|s: u64| (1..=s / 2).filter_map(move |b| WeightVector::new(s - b, b).ok()))
        .take(1000usize.div_ceil(bases.len()))
        .collect();
    let mut combos = 0;
    let mut kinds = BTreeSet::new();
    for base in &bases {
        for &wv in &weights {
            if combos == 1000 {
                break;
            }
            combos += 1;
            let spec = JoinSpec::new(*base, wv);
            let report = cohomology_ring(&spec).map_err(|e| format!("{base} {wv}: {e}"))?;
            report
                .check_poincare_duality()
                .map_err(|e| format!("{base} {wv}: {e}"))?;
            kinds.insert(report.family.clone());
            if let BaseKind::DelPezzo { k } = base.kind() {
                let h4 = report.group(4).ok_or("missing H^4")?;
                let (s, p) = (wv.sum(), wv.product());
                let order = s.pow(k as u32) * p;
                check(
                    h4.torsion_order() == Some(order),
                    format!("{base} {wv}: |H^4|"),
                )?;
                let mut chain = vec![s; k as usize - 1];
                chain.push(s * p);
                check(
                    h4.invariant_factors() == chain,
                    format!("{base} {wv}: {h4}"),
                )?;
            }
        }
    }
    check(combos == 1000, format!("only {combos} combinations"))?;
    Ok(format!("{combos} reports over {} families", kinds.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("1 ex1 reproduction", c1_ex1),
        ("2 ex2 reproduction", c2_ex2),
        ("3 W=165 family", c3_pairrem),
        ("4 regular-cone table", c4_regular_cones),
        ("5 Y^{p,q} dictionary", c5_ypq),
        ("6 partition count", c6_partitions),
        ("7 H^4 order lemma", c7_h4_lemma),
        ("8 del Pezzo coincidence", c8_del_pezzo),
        ("9 Pontrjagin obstruction", c9_pontrjagin),
        ("10 determinism under parallelism", c10_determinism),
        ("11 duality and structure", c11_duality_sweep),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
