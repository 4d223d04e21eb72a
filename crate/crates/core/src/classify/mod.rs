//! Homotopy classification of the 7-dimensional joins `S^5 ⋆ S^3_w` with
//! fixed `W = w1·w2`, and the bounded searches built on it.

mod delpezzo;
mod family;
mod search;
mod three_sasakian;

pub use delpezzo::{delpezzo_coincidences, DelPezzoCoincidence, DelPezzoJoin};
pub use family::{
    classify_family, homeo_obstruction, homotopy_equivalent, homotopy_invariant, CaseTag,
    ClassifiedMember, EquivalenceVerdict, FamilyClassification, FamilyMember, HomeoObstruction,
    Obstruction, Verdict, HOMOTOPY_CRITERION,
};
pub use search::{
    recheck_equivalence, search_equivalent_pairs, EquivalentPair, FamilyStat, SearchReport,
    SearchSummary,
};
pub use three_sasakian::{compare_with_3sasakian, ThreeSasakianComparison};
