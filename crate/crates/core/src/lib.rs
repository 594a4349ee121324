//! Combinatorics and loop-algebra computations for the singular locus of
//! Schubert varieties in twisted affine Grassmannians.
//!
//! Everything is exact: integers, rationals and the cyclotomic field of
//! order at most 3.

pub mod cyclo;
pub mod error;
pub mod linalg;
pub mod loopalg;
pub mod rootsys;
pub mod schubert;
pub mod twist;
pub mod verify;

pub use error::{Error, Result};
pub use rootsys::{build_root_system, CartanType, CorootVector, Coweight, FiniteRootSystem};
