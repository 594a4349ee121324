//! Exact twisted loop algebras: a Chevalley basis, the lift of σ₀, the
//! invariant root vectors `e_a` and the adjoint action of `exp(e_b)`.

mod chevalley;
mod laurent;
mod matrix;
mod sigma;
mod twisted;
mod vector;

pub use chevalley::{build_chevalley, symmetric_orientation, Basis, ChevalleyAlgebra};
pub use laurent::{Laurent, LaurentMatrix};
pub use matrix::{matrix_cross_check, verify_sl2_factorization, MatrixCrossCheck, MatrixRealization};
pub use sigma::{sigma0_automorphism, SigmaTable};
pub use twisted::{CartanDirection, DegreeCheck, InvariantBasisReport, TwistedLoopAlgebra, MAX_WINDOW};
pub use vector::{LoopVector, TermRecord};
