//! Exact invariants of the Sasaki–Einstein joins `M ⋆_{l1,l2} S^3_w` and the
//! homotopy classification of the 7-dimensional sphere-base family.
//!
//! * [`numeric`]: modular arithmetic, factorization, abelian group normal forms.
//! * [`join`]: base catalog, relative Fano indices, cohomology, Pontrjagin classes.
//! * [`cone`]: regular Reeb fields and the `Y^{p,q}` dictionary.
//! * [`classify`]: homotopy classes within a family and bounded searches.
//! * [`cli`]: the `sejoin` command line.

pub mod classify;
pub mod cli;
pub mod cone;
pub mod config;
mod error;
pub mod join;
pub mod numeric;
pub mod report;

pub use error::{Error, Result};
