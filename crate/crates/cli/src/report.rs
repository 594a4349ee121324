use affsch::loopalg::{
    matrix_cross_check, Basis, InvariantBasisReport, LoopVector, MatrixRealization, TermRecord, TwistedLoopAlgebra,
};
use affsch::rootsys::Family;
use affsch::schubert::{
    certificate, covers_of, is_cover, k_vector, make_edge, minimal_degenerations, smooth_locus_report, strata_below,
    DegenerationEdge, KVector, SmoothLocusReport, SmoothnessCertificate,
};
use affsch::twist::{AffineRootSigma, RelCase, TwistedDatum, VertexKind};
use affsch::verify::SuiteReport;
use affsch::{Coweight, CorootVector, Error, FiniteRootSystem, Result};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Default, Serialize)]
pub struct Request {
    pub command: &'static str,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub type_label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Coweight>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Coweight>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_pairing: Option<i64>,
}

#[derive(Debug, Serialize)]
pub struct ReportDocument<T> {
    pub schema_version: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub seed: u64,
    pub request: Request,
    pub pass: bool,
    pub result: T,
}

impl<T> ReportDocument<T> {
    pub fn new(request: Request, seed: u64, pass: bool, result: T) -> Self {
        Self { schema_version: SCHEMA_VERSION, tool: "affsch", version: env!("CARGO_PKG_VERSION"), seed, request, pass, result }
    }
}

#[derive(Debug, Serialize)]
pub struct DatumSummary {
    pub label: String,
    pub absolute_type: String,
    pub e: u32,
    pub sigma0: Vec<usize>,
    pub sigma_type: String,
    pub sigma_simple_vectors: Vec<Vec<i64>>,
    pub multipliable_roots: Vec<Vec<i64>>,
    pub vertex: VertexKind,
    pub sigma: FiniteRootSystem,
}

impl DatumSummary {
    pub fn new(t: &TwistedDatum) -> Self {
        let sys = t.sigma();
        Self {
            label: t.label().to_string(),
            absolute_type: t.absolute_type().to_string(),
            e: t.e(),
            sigma0: t.sigma0().to_vec(),
            sigma_type: sys.to_string(),
            sigma_simple_vectors: t.sigma_simple_vectors().to_vec(),
            multipliable_roots: (0..sys.num_roots()).filter(|&s| t.meta(s).multipliable).map(|s| sys.root(s).to_vec()).collect(),
            vertex: t.vertex(),
            sigma: sys.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Focus {
    pub lambda: Coweight,
    pub k_vector: KVector,
    pub root_bound: i64,
    pub is_cover: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<SmoothnessCertificate>,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeResult {
    pub datum: DatumSummary,
    pub mu: Coweight,
    pub dim: i64,
    pub covers: Vec<DegenerationEdge>,
    pub smooth_locus: SmoothLocusReport,
    pub confirms_theorem: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub focus: Option<Focus>,
}

fn check_input(sys: &FiniteRootSystem, nu: &Coweight) -> Result<()> {
    sys.check_rank(nu)?;
    if !sys.is_dominant(nu) {
        return Err(Error::NotDominant(nu.0.clone()));
    }
    Ok(())
}

pub fn analyze(t: &TwistedDatum, mu: &Coweight, lambda: Option<&Coweight>) -> Result<AnalyzeResult> {
    let sys = t.sigma();
    check_input(sys, mu)?;
    let focus = match lambda {
        None => None,
        Some(l) => {
            check_input(sys, l)?;
            if !sys.in_coroot_lattice(&mu.minus(l)) {
                return Err(Error::NotInCorootLattice(mu.minus(l).0));
            }
            let k = k_vector(sys, l, mu)?;
            let cover = is_cover(sys, mu, l);
            let cert = if cover { Some(certificate(t, mu, l)?) } else { None };
            Some(Focus { lambda: l.clone(), root_bound: k.total(), k_vector: k, is_cover: cover, certificate: cert })
        }
    };
    let covers = covers_of(sys, mu)?.into_iter().map(|s| make_edge(sys, mu, &s.lambda)).collect::<Result<_>>()?;
    let smooth_locus = smooth_locus_report(t, mu)?;
    Ok(AnalyzeResult {
        datum: DatumSummary::new(t),
        mu: mu.clone(),
        dim: sys.two_rho_pairing(mu),
        covers,
        confirms_theorem: smooth_locus.confirms_theorem(),
        smooth_locus,
        focus,
    })
}

#[derive(Debug, Serialize)]
pub struct PosetNode {
    pub lambda: Coweight,
    pub dim: i64,
    pub diff: CorootVector,
}

#[derive(Debug, Serialize)]
pub struct PosetResult {
    pub datum: DatumSummary,
    pub mu: Coweight,
    pub strata: Vec<PosetNode>,
    pub edges: Vec<DegenerationEdge>,
}

pub fn poset(t: &TwistedDatum, mu: &Coweight) -> Result<PosetResult> {
    let sys = t.sigma();
    check_input(sys, mu)?;
    let strata = strata_below(sys, mu)?
        .into_iter()
        .map(|s| PosetNode { dim: sys.two_rho_pairing(&s.lambda), lambda: s.lambda, diff: s.diff })
        .collect();
    Ok(PosetResult { datum: DatumSummary::new(t), mu: mu.clone(), strata, edges: minimal_degenerations(sys, mu)? })
}

#[derive(Debug, Serialize)]
pub struct VerifyResult {
    pub suites: Vec<SuiteReport>,
}

#[derive(Debug, Serialize)]
pub struct EaRecord {
    pub root: Vec<i64>,
    pub level: i64,
    pub case: RelCase,
    pub m: String,
    pub e_a: Vec<TermRecord>,
}

#[derive(Debug, Serialize)]
pub struct DegreeInventory {
    pub degree: i64,
    pub vectors: Vec<EaRecord>,
}

#[derive(Debug, Serialize)]
pub struct DirectionRecord {
    pub root: Vec<i64>,
    pub level: i64,
    pub companion_root: Vec<i64>,
    pub companion_level: i64,
    pub cartan: Vec<TermRecord>,
    pub invariant: bool,
}

#[derive(Debug, Serialize)]
pub struct MatrixRecord {
    pub root: Vec<i64>,
    pub level: i64,
    pub diagonal: Vec<String>,
    pub trace: String,
    pub agrees: bool,
}

#[derive(Debug, Serialize)]
pub struct Sl2Table {
    /// `Ad(exp(X_{−α} u⁻¹)) X_α`.
    pub expansion: Vec<TermRecord>,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct TrialityRecord {
    pub invariant_cartan_dim: usize,
    pub direction: Vec<TermRecord>,
    pub certificate: SmoothnessCertificate,
}

#[derive(Debug, Serialize)]
pub struct LoopcheckResult {
    pub datum: DatumSummary,
    pub window: i64,
    pub inventory: Vec<DegreeInventory>,
    pub invariant_basis: InvariantBasisReport,
    pub cartan_directions: Vec<DirectionRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix_check: Option<Vec<MatrixRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sl2_table: Option<Sl2Table>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triality: Option<TrialityRecord>,
    pub pass: bool,
}

pub fn loopcheck(t: &TwistedDatum, window: i64) -> Result<LoopcheckResult> {
    let tla = TwistedLoopAlgebra::new(t)?;
    let sys = t.sigma();
    let invariant_basis = tla.verify_invariant_basis(window)?;
    let mut inventory = Vec::new();
    for n in -window..=window {
        let mut vectors = Vec::new();
        for (a, rel) in t.relative_roots_at_degree(n) {
            let v = tla.make_e_a(&rel)?;
            vectors.push(EaRecord { root: sys.root(a.root).to_vec(), level: a.level, case: rel.case, m: rel.m.to_string(), e_a: tla.records(&v) });
        }
        inventory.push(DegreeInventory { degree: n, vectors });
    }
    let mut cartan_directions = Vec::new();
    let mut matrix = Vec::new();
    let a_type = t.absolute_type().family == Family::A;
    for root in 0..sys.num_roots() {
        let a = AffineRootSigma { root, level: -1 };
        let d = tla.cartan_direction(a)?;
        cartan_directions.push(DirectionRecord {
            root: sys.root(root).to_vec(),
            level: -1,
            companion_root: sys.root(d.b.root).to_vec(),
            companion_level: d.b.level,
            cartan: tla.records(&d.cartan),
            invariant: d.invariant,
        });
        if a_type {
            let m = matrix_cross_check(&tla, a)?;
            matrix.push(MatrixRecord {
                root: sys.root(root).to_vec(),
                level: -1,
                diagonal: m.diagonal().iter().map(ToString::to_string).collect(),
                trace: m.trace().to_string(),
                agrees: m.agrees,
            });
        }
    }
    let sl2_table = if t.is_split() && t.absolute_type().family == Family::A && t.absolute_type().rank == 1 {
        let alg = tla.algebra();
        let v = alg.ad_exp(&LoopVector::unit(Basis::X(1), -1), &LoopVector::unit(Basis::X(0), 0))?;
        let m = MatrixRealization::new(alg)?.apply(&v);
        Some(Sl2Table {
            expansion: tla.records(&v),
            matrix: m.0.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
        })
    } else {
        None
    };
    let triality = if t.e() == 3 {
        let beta = sys.simple_root_index(1);
        let d = tla.cartan_direction(AffineRootSigma { root: beta, level: -1 })?;
        let mu = Coweight(vec![0, 1]);
        Some(TrialityRecord {
            invariant_cartan_dim: t.cartan_sigma_dim(1),
            direction: tla.records(&d.cartan),
            certificate: certificate(t, &mu, &Coweight::zero(2))?,
        })
    } else {
        None
    };
    let pass = invariant_basis.pass()
        && cartan_directions.iter().all(|d| d.invariant)
        && matrix.iter().all(|m| m.agrees && m.trace == "0")
        && triality.as_ref().is_none_or(|tr| tr.invariant_cartan_dim == 1);
    Ok(LoopcheckResult {
        datum: DatumSummary::new(t),
        window,
        inventory,
        invariant_basis,
        cartan_directions,
        matrix_check: a_type.then_some(matrix),
        sl2_table,
        triality,
        pass,
    })
}
