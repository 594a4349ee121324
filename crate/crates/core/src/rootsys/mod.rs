//! Finite root systems in Bourbaki numbering.
//!
//! Short roots have squared length 2. Coweights are stored as pairing
//! vectors against the simple roots, so reflections and dominance tests
//! stay in integer arithmetic.

mod cartan;
mod coweight;
mod recognize;
mod system;

pub use cartan::{CartanType, Family, MAX_RANK};
pub use coweight::{CorootVector, Coweight};
pub use recognize::{connected_components, recognize, Component};
pub use system::{build_root_system, FiniteRootSystem, SubSystem};
