//! The base-manifold catalog and the invariants of a single join
//! `M ⋆_{l1,l2} S^3_w`.

mod base;
mod cohomology;
mod indices;
mod pontrjagin;
mod weight;

pub use base::{fermat_middle_betti, Admissibility, BaseKind, BaseManifold, MiddleBetti};
pub use cohomology::{
    cohomology_ring, del_pezzo_h4, rational_cohomology_ring, CoefficientRing, CohomologyReport,
    Generator, Relation,
};
pub use indices::{
    relative_fano_indices, se_admissible, se_admissible_join, smoothness_check,
    AdmissibilityReport, FanoIndices, JoinSpec,
};
pub use pontrjagin::{first_pontrjagin, moduli_dimension, PontrjaginResidue};
pub use weight::WeightVector;
