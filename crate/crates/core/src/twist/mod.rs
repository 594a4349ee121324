//! Twisted data: diagram automorphisms, their root orbits, the échelonnage
//! system Σ and the dictionary between Σ-affine roots and relative affine
//! roots at the distinguished vertex.

mod affine;
mod datum;

pub use affine::{translate_affine_root, AffineRootSigma, LevelSet, Progression, RelCase, RelativeAffineRoot};
pub use datum::{default_automorphism, Orbit, SigmaRootMeta, TwistedDatum, VertexKind};
