use serde::Serialize;

use crate::error::{Error, Result};
use crate::join::{relative_fano_indices, WeightVector};
use crate::numeric::arith::mul_mod;
use crate::numeric::{coprime_partitions, signed_cube_class, SignedUnitClass};

/// Fano index of `CP^2`; every member of a family is an `S^5` join.
const CP2_FANO_INDEX: u64 = 3;

/// The criterion applied by [`homotopy_equivalent`], carried in reports.
pub const HOMOTOPY_CRITERION: &str =
    "equivalent iff l2(w)^3 = l2(w')^3 in (Z/l1^2 W)^*/{+-1}, not the reversed \
     'inequivalent iff' reading; applies when |H^4| is odd";

/// `P0` when `3 | W + 1` (equivalently `3 | w1 + w2`), else `P1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseTag {
    P0,
    P1,
}

impl CaseTag {
    pub fn of_product(w: u128) -> Self {
        if (w + 1).is_multiple_of(3) {
            CaseTag::P0
        } else {
            CaseTag::P1
        }
    }
}

/// A 7-dimensional join `S^5 ⋆_{l1,l2} S^3_w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    pub w: WeightVector,
    pub case_tag: CaseTag,
    pub l1: u128,
    pub l2: u128,
    pub h4_order: u128,
}

impl FamilyMember {
    pub fn new(w: WeightVector) -> Result<Self> {
        let idx = relative_fano_indices(CP2_FANO_INDEX, w)?;
        let product = w.product();
        let case_tag = CaseTag::of_product(product);
        let expected_l1 = match case_tag {
            CaseTag::P0 => 1,
            CaseTag::P1 => 3,
        };
        if idx.l1 != expected_l1 {
            return Err(Error::Invariant(format!(
                "w = {w}: case {case_tag:?} but l1 = {}",
                idx.l1
            )));
        }
        let h4_order = product
            .checked_mul(idx.l1 * idx.l1)
            .ok_or(Error::Overflow("|H^4|"))?;
        Ok(Self {
            w,
            case_tag,
            l1: idx.l1,
            l2: idx.l2,
            h4_order,
        })
    }

    pub fn product(&self) -> u128 {
        self.w.product()
    }
}

/// Sign-normalized class of `l2³` modulo `l1²·W`.
pub fn homotopy_invariant(w: WeightVector) -> Result<SignedUnitClass> {
    let m = FamilyMember::new(w)?;
    signed_cube_class(m.l2, m.h4_order)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Equivalent,
    Inequivalent,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceVerdict {
    pub verdict: Verdict,
    pub invariant_a: SignedUnitClass,
    pub invariant_b: SignedUnitClass,
    pub reason: String,
    pub criterion: &'static str,
}

pub fn homotopy_equivalent(a: WeightVector, b: WeightVector) -> Result<EquivalenceVerdict> {
    let (ma, mb) = (FamilyMember::new(a)?, FamilyMember::new(b)?);
    let invariant_a = signed_cube_class(ma.l2, ma.h4_order)?;
    let invariant_b = signed_cube_class(mb.l2, mb.h4_order)?;
    let (verdict, reason) = if a == b {
        (Verdict::Equivalent, "identical weights".to_string())
    } else if ma.product() != mb.product() {
        (
            Verdict::Inequivalent,
            format!(
                "cohomology rings differ: |H^4| = {} vs {}",
                ma.h4_order, mb.h4_order
            ),
        )
    } else if ma.h4_order % 2 == 0 {
        (
            Verdict::Undetermined,
            format!("|H^4| = {} is even", ma.h4_order),
        )
    } else if invariant_a == invariant_b {
        (
            Verdict::Equivalent,
            format!("l2^3 classes agree: {invariant_a}"),
        )
    } else {
        (
            Verdict::Inequivalent,
            format!("l2^3 classes differ: {invariant_a} vs {invariant_b}"),
        )
    };
    Ok(EquivalenceVerdict {
        verdict,
        invariant_a,
        invariant_b,
        reason,
        criterion: HOMOTOPY_CRITERION,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Obstruction {
    /// The necessary condition for a homeomorphism holds.
    Pass,
    /// The manifolds cannot be homeomorphic.
    Fail,
    Undetermined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HomeoObstruction {
    pub verdict: Obstruction,
    pub modulus: u128,
    pub residue_a: u128,
    pub residue_b: u128,
}

/// First-Pontrjagin obstruction: homeomorphic members of an odd family must
/// satisfy `2|w'|² ≡ 2|w|² (mod 3W)`.
pub fn homeo_obstruction(a: WeightVector, b: WeightVector) -> Result<HomeoObstruction> {
    let product = a.product();
    if product != b.product() {
        return Err(Error::InvalidArgument(format!(
            "homeo_obstruction needs equal products, got {} and {}",
            product,
            b.product()
        )));
    }
    let modulus = product.checked_mul(3).ok_or(Error::Overflow("3*w1*w2"))?;
    let residue = |w: WeightVector| mul_mod(2, mul_mod(w.sum(), w.sum(), modulus), modulus);
    let (residue_a, residue_b) = (residue(a), residue(b));
    let verdict = if product.is_multiple_of(2) {
        Obstruction::Undetermined
    } else if residue_a == residue_b {
        Obstruction::Pass
    } else {
        Obstruction::Fail
    };
    Ok(HomeoObstruction {
        verdict,
        modulus,
        residue_a,
        residue_b,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifiedMember {
    #[serde(flatten)]
    pub member: FamilyMember,
    pub invariant: SignedUnitClass,
    /// `None` when the family has even `|H^4|`.
    pub class_id: Option<usize>,
}

/// The joins with a fixed `W = w1·w2`, which share one cohomology ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyClassification {
    #[serde(rename = "W")]
    pub product: u64,
    pub case_tag: CaseTag,
    pub h4_order: u128,
    pub members: Vec<ClassifiedMember>,
    /// Homotopy classes, by member weights; `None` when undetermined.
    pub classes: Option<Vec<Vec<WeightVector>>>,
}

impl FamilyClassification {
    pub fn determined(&self) -> bool {
        self.classes.is_some()
    }

    pub fn class_count(&self) -> Option<usize> {
        self.classes.as_ref().map(Vec::len)
    }
}

/// Members come in `coprime_partitions` order; class ids are assigned in
/// order of first appearance.
pub fn classify_family(product: u64) -> Result<FamilyClassification> {
    let weights = coprime_partitions(product)?;
    let mut members = Vec::with_capacity(weights.len());
    for w in weights {
        let member = FamilyMember::new(w)?;
        let invariant = signed_cube_class(member.l2, member.h4_order)?;
        members.push(ClassifiedMember {
            member,
            invariant,
            class_id: None,
        });
    }
    let first = members[0].member;
    let classes = if first.h4_order % 2 == 1 {
        let mut reps: Vec<SignedUnitClass> = Vec::new();
        let mut classes: Vec<Vec<WeightVector>> = Vec::new();
        for m in &mut members {
            let id = match reps.iter().position(|r| *r == m.invariant) {
                Some(id) => id,
                None => {
                    reps.push(m.invariant);
                    classes.push(Vec::new());
                    reps.len() - 1
                }
            };
            m.class_id = Some(id);
            classes[id].push(m.member.w);
        }
        Some(classes)
    } else {
        None
    };
    Ok(FamilyClassification {
        product,
        case_tag: first.case_tag,
        h4_order: first.h4_order,
        members,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: u64, b: u64) -> WeightVector {
        WeightVector::new(a, b).unwrap()
    }

    fn rep(a: u64, b: u64) -> u128 {
        homotopy_invariant(w(a, b)).unwrap().representative()
    }

    #[test]
    fn invariant_examples() {
        assert_eq!(rep(15, 1), 46);
        assert_eq!(rep(5, 3), 28);
        assert_eq!(rep(1, 1), 1);
        let m = homotopy_invariant(w(15, 1)).unwrap().modulus();
        assert_eq!(m, 135);
    }

    #[test]
    fn case_tags() {
        let m = FamilyMember::new(w(6545, 1)).unwrap();
        assert_eq!((m.case_tag, m.l1, m.h4_order), (CaseTag::P0, 1, 6545));
        let m = FamilyMember::new(w(15, 1)).unwrap();
        assert_eq!((m.case_tag, m.l1, m.h4_order), (CaseTag::P1, 3, 135));
    }

    #[test]
    fn case_tag_depends_only_on_product() {
        for product in 1..3000u64 {
            let tags: Vec<CaseTag> = coprime_partitions(product)
                .unwrap()
                .into_iter()
                .map(|v| FamilyMember::new(v).unwrap().case_tag)
                .collect();
            assert!(tags.windows(2).all(|t| t[0] == t[1]), "W={product}");
        }
    }

    #[test]
    fn equivalence_examples() {
        let v = |a, b| homotopy_equivalent(a, b).unwrap().verdict;
        assert_eq!(v(w(15, 1), w(5, 3)), Verdict::Inequivalent);
        assert_eq!(v(w(165, 1), w(33, 5)), Verdict::Inequivalent);
        assert_eq!(v(w(85, 77), w(85, 77)), Verdict::Equivalent);
        assert_eq!(v(w(6545, 1), w(385, 17)), Verdict::Inequivalent);
        assert_eq!(v(w(15, 1), w(7, 2)), Verdict::Inequivalent);
        assert_eq!(v(w(10, 1), w(5, 2)), Verdict::Undetermined);
        assert_eq!(v(w(155, 1), w(31, 5)), Verdict::Equivalent);
    }

    #[test]
    fn obstruction_examples() {
        let o = homeo_obstruction(w(15, 1), w(5, 3)).unwrap();
        assert_eq!(
            (o.verdict, o.residue_a, o.residue_b, o.modulus),
            (Obstruction::Fail, 17, 38, 45)
        );
        let o = homeo_obstruction(w(5, 3), w(5, 3)).unwrap();
        assert_eq!(o.verdict, Obstruction::Pass);
        let o = homeo_obstruction(w(10, 1), w(5, 2)).unwrap();
        assert_eq!(o.verdict, Obstruction::Undetermined);
        assert!(homeo_obstruction(w(15, 1), w(7, 2)).is_err());

        let o = homeo_obstruction(w(6545, 1), w(85, 77)).unwrap();
        let m = 3 * 6545u128;
        assert_eq!(o.residue_a, 2 * 6546u128 * 6546 % m);
        assert_eq!(o.residue_b, 2 * 162u128 * 162 % m);
        let expected = if o.residue_a == o.residue_b {
            Obstruction::Pass
        } else {
            Obstruction::Fail
        };
        assert_eq!(o.verdict, expected);
    }

    #[test]
    fn family_examples() {
        let f = classify_family(6545).unwrap();
        assert_eq!(f.members.len(), 8);
        assert_eq!(f.case_tag, CaseTag::P0);
        assert_eq!(f.class_count(), Some(8));

        let f = classify_family(165).unwrap();
        assert_eq!((f.members.len(), f.class_count()), (4, Some(4)));

        let f = classify_family(1).unwrap();
        assert_eq!((f.members.len(), f.class_count()), (1, Some(1)));

        let f = classify_family(2).unwrap();
        assert_eq!(f.members.len(), 1);
        assert_eq!(f.members[0].member.w, w(2, 1));
        assert!(!f.determined());

        let f = classify_family(155).unwrap();
        assert_eq!(f.classes, Some(vec![vec![w(155, 1), w(31, 5)]]));
    }
}
