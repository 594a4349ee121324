//! The dominance poset, minimal degenerations and tangent-space bounds for
//! Schubert varieties in the twisted affine Grassmannian.

mod certificate;
mod kvec;
mod poset;
mod stembridge;

pub use certificate::{
    certificate, smooth_locus_report, Mechanism, SmoothLocusReport, SmoothnessCertificate, StratumStatus, Verdict,
};
pub use kvec::{curve_fits, k_alpha, k_vector, root_curve_target, root_tangent_bound, KVector};
pub use poset::{covers_of, dominant_below, is_cover, strata_below, Stratum};
pub use stembridge::{classify_degeneration, make_edge, matching_cases, minimal_degenerations, DegenerationEdge};
