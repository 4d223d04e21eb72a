//! Exact integer primitives shared by every other module: factorization,
//! coprime partitions, sign-normalized unit classes and canonical forms of
//! finite abelian groups.

mod abelian;
pub mod arith;
mod factor;
mod partition;
mod unit;

pub use abelian::{invariant_factors, AbelianGroupForm};
pub use factor::{factorize, is_prime, PrimeFactorization};
pub use partition::coprime_partitions;
pub use unit::{signed_cube_class, SignedUnitClass};
