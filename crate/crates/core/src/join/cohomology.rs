//! Closed-form cohomology of the joins in the base catalog.
//!
//! Each family has a fixed presentation whose coefficients depend only on
//! `w`, `l1` and `l2`; nothing here runs a spectral sequence.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::base::{fermat_middle_betti, BaseKind};
use super::indices::{smoothness_check, JoinSpec};
use super::weight::WeightVector;
use crate::error::{Error, Result};
use crate::numeric::AbelianGroupForm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoefficientRing {
    Integers,
    Rationals,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

/// `coefficient · monomial = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub coefficient: u128,
    pub monomial: Vec<(String, u32)>,
}

impl Relation {
    fn new(coefficient: u128, monomial: &[(&str, u32)]) -> Self {
        Self {
            coefficient,
            monomial: monomial.iter().map(|&(g, e)| (g.to_string(), e)).collect(),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficient != 1 {
            write!(f, "{}*", self.coefficient)?;
        }
        let terms: Vec<String> = self
            .monomial
            .iter()
            .map(|(g, e)| {
                if *e == 1 {
                    g.clone()
                } else {
                    format!("{g}^{e}")
                }
            })
            .collect();
        write!(f, "{} = 0", terms.join("*"))
    }
}

impl Serialize for Relation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Relation", 3)?;
        s.serialize_field("coefficient", &self.coefficient)?;
        s.serialize_field("monomial", &self.monomial)?;
        s.serialize_field("display", &self.to_string())?;
        s.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub family: String,
    pub coefficients: CoefficientRing,
    /// Total dimension of the join.
    pub dimension: u32,
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
    /// Every known degree in `0..=dimension`, zero groups included.
    #[serde(serialize_with = "serialize_groups")]
    pub groups: BTreeMap<u32, AbelianGroupForm>,
    /// Degrees left undetermined by a partial report.
    pub unknown_degrees: Vec<u32>,
    pub partial: bool,
    pub notes: Vec<String>,
}

fn serialize_groups<S: Serializer>(
    groups: &BTreeMap<u32, AbelianGroupForm>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        degree: u32,
        group: &'a AbelianGroupForm,
    }
    serializer.collect_seq(
        groups
            .iter()
            .map(|(&degree, group)| Entry { degree, group }),
    )
}

impl CohomologyReport {
    pub fn group(&self, degree: u32) -> Option<&AbelianGroupForm> {
        self.groups.get(&degree)
    }

    /// Checks the group-level shadow of Poincaré duality on every pair of
    /// known degrees: `rank H^q = rank H^(D-q)` and
    /// `tors H^q = tors H^(D-q+1)`, with `H^0` and `H^D` free of rank one.
    pub fn check_poincare_duality(&self) -> Result<()> {
        let d = self.dimension;
        let fail = |msg: String| Err(Error::Invariant(format!("{}: {msg}", self.family)));
        for end in [0, d] {
            match self.group(end) {
                Some(g) if *g == AbelianGroupForm::free(1) => {}
                other => return fail(format!("H^{end} is {other:?}, expected Z")),
            }
        }
        for (&q, g) in &self.groups {
            if q > d {
                return fail(format!("degree {q} above dimension {d}"));
            }
            if let Some(dual) = self.group(d - q) {
                if dual.free_rank() != g.free_rank() {
                    return fail(format!(
                        "rank H^{q} = {} but rank H^{} = {}",
                        g.free_rank(),
                        d - q,
                        dual.free_rank()
                    ));
                }
            }
            if (1..=d).contains(&q) {
                if let Some(dual) = self.group(d - q + 1) {
                    if dual.torsion() != g.torsion() {
                        return fail(format!(
                            "tors H^{q} = {} but tors H^{} = {}",
                            g.torsion(),
                            d - q + 1,
                            dual.torsion()
                        ));
                    }
                }
            }
        }
        for q in 0..=d {
            if !self.groups.contains_key(&q) && !self.unknown_degrees.contains(&q) {
                return fail(format!("degree {q} neither reported nor marked unknown"));
            }
        }
        Ok(())
    }
}

fn cyclic(order: u128) -> AbelianGroupForm {
    AbelianGroupForm::from_parts(0, &[order]).expect("positive order")
}

fn fill_zeros(groups: &mut BTreeMap<u32, AbelianGroupForm>, dim: u32, unknown: &[u32]) {
    for q in 0..=dim {
        if !unknown.contains(&q) {
            groups.entry(q).or_insert_with(AbelianGroupForm::zero);
        }
    }
}

/// Order of the `x²` torsion class, `w1·w2·l1²`.
fn h4_coefficient(spec: &JoinSpec) -> Result<u128> {
    spec.l1
        .checked_mul(spec.l1)
        .and_then(|l| l.checked_mul(spec.w.product()))
        .ok_or(Error::Overflow("w1*w2*l1^2"))
}

/// Integral cohomology of the join.
pub fn cohomology_ring(spec: &JoinSpec) -> Result<CohomologyReport> {
    if !spec.is_canonical() {
        return Err(Error::Unsupported(
            "cohomology is tabulated only for the relative Fano indices".into(),
        ));
    }
    match spec.base.kind() {
        BaseKind::Sphere { r } => sphere_join(spec, r),
        BaseKind::Cp2 => sphere_join(spec, 2),
        BaseKind::Cp1xCp1 => cp1xcp1_join(spec),
        BaseKind::DelPezzo { k } => del_pezzo_join(spec, k as u32),
        BaseKind::Stiefel { n } => rational_sphere_partial(spec, 2 * n - 1),
        BaseKind::FermatBundle { n, .. } => rational_sphere_partial(spec, n),
        BaseKind::G2Plus => Err(Error::Unsupported(
            "G2+ is catalogued by Fano index only; no ring is tabulated".into(),
        )),
    }
}

/// `Z[x,y]/(w1 w2 l1² x², x^(r+1), x²y, y²)`, `|x| = 2`, `|y| = 2r+1`.
fn sphere_join(spec: &JoinSpec, r: u32) -> Result<CohomologyReport> {
    let dim = 2 * r + 3;
    let c = h4_coefficient(spec)?;
    let mut groups = BTreeMap::new();
    groups.insert(0, AbelianGroupForm::free(1));
    groups.insert(2, AbelianGroupForm::free(1));
    for j in 2..=r {
        groups.insert(2 * j, cyclic(c));
    }
    groups.insert(2 * r + 1, AbelianGroupForm::free(1));
    groups.insert(dim, AbelianGroupForm::free(1));
    fill_zeros(&mut groups, dim, &[]);
    Ok(CohomologyReport {
        family: "sphere-join".into(),
        coefficients: CoefficientRing::Integers,
        dimension: dim,
        generators: vec![
            Generator {
                name: "x".into(),
                degree: 2,
            },
            Generator {
                name: "y".into(),
                degree: 2 * r + 1,
            },
        ],
        relations: vec![
            Relation::new(c, &[("x", 2)]),
            Relation::new(1, &[("x", r + 1)]),
            Relation::new(1, &[("x", 2), ("y", 1)]),
            Relation::new(1, &[("y", 2)]),
        ],
        groups,
        unknown_degrees: vec![],
        partial: false,
        notes: vec![],
    })
}

/// `Z[x,y,u,z]/(x², l2·xy, w1 w2 l1²·y², z², u², zu, zx, ux, uy)`,
/// `|x| = |y| = 2`, `|z| = |u| = 5`.
fn cp1xcp1_join(spec: &JoinSpec) -> Result<CohomologyReport> {
    let c = h4_coefficient(spec)?;
    let mut groups = BTreeMap::new();
    groups.insert(0, AbelianGroupForm::free(1));
    groups.insert(2, AbelianGroupForm::free(2));
    groups.insert(4, AbelianGroupForm::from_parts(0, &[spec.l2, c])?);
    groups.insert(5, AbelianGroupForm::free(2));
    groups.insert(7, AbelianGroupForm::free(1));
    fill_zeros(&mut groups, 7, &[]);
    let gens = [("x", 2), ("y", 2), ("z", 5), ("u", 5)];
    Ok(CohomologyReport {
        family: "cp1xcp1-join".into(),
        coefficients: CoefficientRing::Integers,
        dimension: 7,
        generators: gens
            .iter()
            .map(|&(n, d)| Generator {
                name: n.into(),
                degree: d,
            })
            .collect(),
        relations: vec![
            Relation::new(1, &[("x", 2)]),
            Relation::new(spec.l2, &[("x", 1), ("y", 1)]),
            Relation::new(c, &[("y", 2)]),
            Relation::new(1, &[("z", 2)]),
            Relation::new(1, &[("u", 2)]),
            Relation::new(1, &[("z", 1), ("u", 1)]),
            Relation::new(1, &[("z", 1), ("x", 1)]),
            Relation::new(1, &[("u", 1), ("x", 1)]),
            Relation::new(1, &[("u", 1), ("y", 1)]),
        ],
        groups,
        unknown_degrees: vec![],
        partial: false,
        notes: vec![],
    })
}

/// `H^4` of a del Pezzo join of degree-`k` blow-up: `Z_|w|^k ⊕ Z_(w1 w2)`.
pub fn del_pezzo_h4(k: u32, w: WeightVector) -> Result<AbelianGroupForm> {
    let mut orders = vec![w.sum(); k as usize];
    orders.push(w.product());
    AbelianGroupForm::from_parts(0, &orders)
}

/// Lens space bundles over `CP^2 # k(-CP^2)`: `H^4 = Z_|w|^k ⊕ Z_(w1 w2)`.
fn del_pezzo_join(spec: &JoinSpec, k: u32) -> Result<CohomologyReport> {
    let sum = spec.w.sum();
    let product = spec.w.product();
    let mut groups = BTreeMap::new();
    groups.insert(0, AbelianGroupForm::free(1));
    groups.insert(2, AbelianGroupForm::free(k as u64 + 1));
    groups.insert(4, del_pezzo_h4(k, spec.w)?);
    groups.insert(5, AbelianGroupForm::free(k as u64 + 1));
    groups.insert(7, AbelianGroupForm::free(1));
    fill_zeros(&mut groups, 7, &[]);

    let alphas: Vec<String> = (1..=k).map(|i| format!("a{i}")).collect();
    let mut generators = vec![Generator {
        name: "s".into(),
        degree: 2,
    }];
    generators.extend(alphas.iter().map(|a| Generator {
        name: a.clone(),
        degree: 2,
    }));
    let mut relations = Vec::new();
    for i in 0..alphas.len() {
        for j in i..alphas.len() {
            let m = if i == j {
                vec![(alphas[i].clone(), 2)]
            } else {
                vec![(alphas[i].clone(), 1), (alphas[j].clone(), 1)]
            };
            relations.push(Relation {
                coefficient: 1,
                monomial: m,
            });
        }
    }
    relations.push(Relation::new(product, &[("s", 2)]));
    for a in &alphas {
        relations.push(Relation {
            coefficient: sum,
            monomial: vec![(a.clone(), 1), ("s".into(), 1)],
        });
    }
    Ok(CohomologyReport {
        family: "del-pezzo-join".into(),
        coefficients: CoefficientRing::Integers,
        dimension: 7,
        generators,
        relations,
        groups,
        unknown_degrees: vec![],
        partial: false,
        notes: vec!["relations are listed for the degree-2 generators only".into()],
    })
}

/// Joins with a Sasakian circle bundle over a Fermat hypersurface of complex
/// dimension `n > 4` (Stiefel manifolds are the quadric case). Only degrees
/// up to 5 and their Poincaré duals are determined.
fn rational_sphere_partial(spec: &JoinSpec, n: u32) -> Result<CohomologyReport> {
    if n <= 4 {
        return Err(Error::Unsupported(format!(
            "integral cohomology of {} joins is tabulated only when the hypersurface dimension exceeds 4 (got {n})",
            spec.base
        )));
    }
    let dim = 2 * n + 3;
    let c = h4_coefficient(spec)?;
    let low: [(u32, AbelianGroupForm); 6] = [
        (0, AbelianGroupForm::free(1)),
        (1, AbelianGroupForm::zero()),
        (2, AbelianGroupForm::free(1)),
        (3, AbelianGroupForm::zero()),
        (4, cyclic(c)),
        (5, AbelianGroupForm::zero()),
    ];
    let mut groups = BTreeMap::new();
    for (q, g) in &low {
        groups.insert(*q, g.clone());
    }
    // H^(D-q) has the rank of H^q and the torsion of H^(q+1).
    for q in 0..=4u32 {
        let rank = low[q as usize].1.free_rank();
        let tors = low[q as usize + 1].1.invariant_factors().to_vec();
        groups.insert(dim - q, AbelianGroupForm::from_parts(rank, &tors)?);
    }
    let unknown: Vec<u32> = (6..=dim - 5).collect();
    Ok(CohomologyReport {
        family: "rational-sphere-join".into(),
        coefficients: CoefficientRing::Integers,
        dimension: dim,
        generators: vec![Generator {
            name: "x".into(),
            degree: 2,
        }],
        relations: vec![],
        groups,
        unknown_degrees: unknown,
        partial: true,
        notes: vec![
            "simply connected; H^2 = Z, H^3 = H^5 = 0, H^4 cyclic of order w1*w2*l1^2".into(),
            "the homotopy-group identification accompanying H^2 = Z is not asserted".into(),
        ],
    })
}

/// `Q[x,y]/(x², y²)` with `|x| = 2`, `|y| = dim M`, for bases that are
/// rational homology spheres.
pub fn rational_cohomology_ring(spec: &JoinSpec) -> Result<CohomologyReport> {
    let rational_sphere = match spec.base.kind() {
        BaseKind::Sphere { .. } | BaseKind::Cp2 | BaseKind::Stiefel { .. } => true,
        BaseKind::FermatBundle { d, n } => fermat_middle_betti(d, n)?.b_n == 0u32.into(),
        BaseKind::Cp1xCp1 | BaseKind::DelPezzo { .. } | BaseKind::G2Plus => false,
    };
    if matches!(spec.base.kind(), BaseKind::G2Plus) {
        return Err(Error::Unsupported(
            "G2+ is catalogued by Fano index only; no ring is tabulated".into(),
        ));
    }
    if !rational_sphere {
        return Err(Error::Unsupported(format!(
            "{} is not a rational homology sphere",
            spec.base
        )));
    }
    if !smoothness_check(spec) {
        return Err(Error::Unsupported(
            "the rational ring needs gcd(l2, w1*w2*l1) = 1".into(),
        ));
    }
    let m = spec.base.dim();
    let dim = m + 2;
    let mut groups = BTreeMap::new();
    for q in [0, 2, m, dim] {
        groups.insert(q, AbelianGroupForm::free(1));
    }
    fill_zeros(&mut groups, dim, &[]);
    Ok(CohomologyReport {
        family: "rational-sphere-join".into(),
        coefficients: CoefficientRing::Rationals,
        dimension: dim,
        generators: vec![
            Generator {
                name: "x".into(),
                degree: 2,
            },
            Generator {
                name: "y".into(),
                degree: m,
            },
        ],
        relations: vec![Relation::new(1, &[("x", 2)]), Relation::new(1, &[("y", 2)])],
        groups,
        unknown_degrees: vec![],
        partial: false,
        notes: vec![],
    })
}
