use serde::Serialize;

use super::kvec::{k_vector, KVector};
use super::poset::{check_dominant, strata_below};
use super::stembridge::classify_degeneration;
use crate::error::{Error, Result};
use crate::rootsys::Coweight;
use crate::twist::{TwistedDatum, VertexKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Singular,
    Inconclusive,
}

/// Tangent-space lower bound at `t^λ` inside the Schubert variety of μ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmoothnessCertificate {
    pub mu: Coweight,
    pub lambda: Coweight,
    pub stembridge_case: u8,
    pub dim: i64,
    pub root_bound: i64,
    pub cartan_extra: i64,
    /// `root_bound + cartan_extra`.
    pub total_bound: i64,
    /// A positive root α of Σ with `k_{−α} ≥ 1`, as a Σ-root index.
    pub witness_root: Option<usize>,
    pub k_vector: KVector,
    pub verdict: Verdict,
}

impl SmoothnessCertificate {
    pub fn total_bound(&self) -> i64 {
        self.total_bound
    }
}

fn require_special(datum: &TwistedDatum) -> Result<()> {
    match datum.vertex() {
        VertexKind::AbsolutelySpecial => Ok(()),
        VertexKind::SpecialOnly => Err(Error::NotAbsolutelySpecial),
    }
}

/// Singularity certificate for a minimal degeneration μ ⇝ λ.
pub fn certificate(datum: &TwistedDatum, mu: &Coweight, lambda: &Coweight) -> Result<SmoothnessCertificate> {
    require_special(datum)?;
    let sys = datum.sigma();
    check_dominant(sys, mu)?;
    check_dominant(sys, lambda)?;
    if !sys.in_coroot_lattice(&mu.minus(lambda)) {
        return Err(Error::NotInCorootLattice(mu.minus(lambda).0));
    }
    if !sys.dominance_leq(lambda, mu) {
        return Err(Error::NotBelow { lambda: lambda.0.clone(), mu: mu.0.clone() });
    }
    if !super::poset::is_cover(sys, mu, lambda) {
        return Err(Error::NotACover { mu: mu.0.clone(), lambda: lambda.0.clone() });
    }
    let stembridge_case = classify_degeneration(sys, mu, lambda)?;
    let k = k_vector(sys, lambda, mu)?;
    let witness_root = (0..sys.num_positive()).find(|&a| k.0[sys.negate(a)] >= 1);
    if datum.cartan_sigma_dim(1) == 0 {
        return Err(Error::ZeroCartan(format!("{}: invariant Cartan in degree −1 is zero", datum.label())));
    }
    let cartan_extra = i64::from(witness_root.is_some());
    let dim = sys.two_rho_pairing(mu);
    let root_bound = k.total();
    let total_bound = root_bound + cartan_extra;
    let verdict = if total_bound > dim { Verdict::Singular } else { Verdict::Inconclusive };
    Ok(SmoothnessCertificate {
        mu: mu.clone(),
        lambda: lambda.clone(),
        stembridge_case,
        dim,
        root_bound,
        cartan_extra,
        total_bound,
        witness_root,
        k_vector: k,
        verdict,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mechanism {
    /// λ = μ: the open orbit.
    OpenOrbit,
    /// μ ⇝ λ is a cover with a certificate.
    Certificate,
    /// λ lies below a certified cover; the smooth locus is open.
    Openness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumStatus {
    pub lambda: Coweight,
    pub dim: i64,
    pub smooth: bool,
    pub mechanism: Mechanism,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<SmoothnessCertificate>,
    /// For `Openness`: the cover ν of μ with λ ≼ ν.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub via_cover: Option<Coweight>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmoothLocusReport {
    pub mu: Coweight,
    pub dim: i64,
    pub strata: Vec<StratumStatus>,
}

impl SmoothLocusReport {
    /// True when exactly the open stratum is smooth and every cover carries a
    /// singular certificate.
    pub fn confirms_theorem(&self) -> bool {
        self.strata.iter().all(|s| match s.mechanism {
            Mechanism::OpenOrbit => s.smooth && s.lambda == self.mu,
            Mechanism::Certificate => {
                !s.smooth && s.certificate.as_ref().is_some_and(|c| c.verdict == Verdict::Singular)
            }
            Mechanism::Openness => !s.smooth && s.via_cover.is_some(),
        })
    }
}

/// Smoothness of every stratum of the Schubert variety of μ.
pub fn smooth_locus_report(datum: &TwistedDatum, mu: &Coweight) -> Result<SmoothLocusReport> {
    require_special(datum)?;
    let sys = datum.sigma();
    let strata = strata_below(sys, mu)?;
    let covers: Vec<Coweight> = super::poset::hasse_edges(&strata)
        .into_iter()
        .filter(|&(x, _)| x == 0)
        .map(|(_, y)| strata[y].lambda.clone())
        .collect();
    let mut out = Vec::with_capacity(strata.len());
    for s in &strata {
        let lambda = &s.lambda;
        let dim = sys.two_rho_pairing(lambda);
        let status = if lambda == mu {
            StratumStatus { lambda: lambda.clone(), dim, smooth: true, mechanism: Mechanism::OpenOrbit, certificate: None, via_cover: None }
        } else if covers.contains(lambda) {
            let cert = certificate(datum, mu, lambda)?;
            let smooth = cert.verdict != Verdict::Singular;
            StratumStatus { lambda: lambda.clone(), dim, smooth, mechanism: Mechanism::Certificate, certificate: Some(cert), via_cover: None }
        } else {
            let nu = covers
                .iter()
                .find(|nu| sys.dominance_leq(lambda, nu))
                .cloned()
                .ok_or_else(|| Error::Inconsistent(format!("{lambda} lies below no cover of {mu}")))?;
            StratumStatus { lambda: lambda.clone(), dim, smooth: false, mechanism: Mechanism::Openness, certificate: None, via_cover: Some(nu) }
        };
        out.push(status);
    }
    Ok(SmoothLocusReport { mu: mu.clone(), dim: sys.two_rho_pairing(mu), strata: out })
}
