//! Property sweeps over bounded families of root data.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::loopalg::{matrix_cross_check, verify_sl2_factorization, TwistedLoopAlgebra, MAX_WINDOW};
use crate::rootsys::{build_root_system, Coweight, FiniteRootSystem};
use crate::schubert::{classify_degeneration, covers_of, k_vector, strata_below};
use crate::twist::{AffineRootSigma, RelCase};

/// Root systems swept by the combinatorial suites.
pub const SWEEP_TYPES: [&str; 12] = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2"];
/// Twisted data checked by the invariant-basis suite.
pub const LOOP_BASIS_TYPES: [&str; 4] = ["2A2", "2A3", "2D4", "3D4"];
/// Data checked by the Cartan-direction suite.
pub const CARTAN_TYPES: [&str; 5] = ["A1", "2A2", "2A3", "2D4", "3D4"];

pub const MAX_SWEEP_RANK: usize = 8;
pub const MAX_SWEEP_PAIRING: i64 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    LoopBasis,
    CartanDirection,
    KSymmetry,
    Stembridge,
    MindegInequality,
    Sl2Factorization,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::LoopBasis,
        Suite::CartanDirection,
        Suite::KSymmetry,
        Suite::Stembridge,
        Suite::MindegInequality,
        Suite::Sl2Factorization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::LoopBasis => "loop-basis",
            Suite::CartanDirection => "cartan-direction",
            Suite::KSymmetry => "k-symmetry",
            Suite::Stembridge => "stembridge",
            Suite::MindegInequality => "mindeg-inequality",
            Suite::Sl2Factorization => "sl2-factorization",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::OutOfBounds(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub max_rank: usize,
    pub max_pairing: i64,
    pub window: i64,
    pub seed: u64,
    /// Random dominant pairs per type in the k-symmetry suite.
    pub random_pairs: usize,
    pub jobs: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self { max_rank: 4, max_pairing: 30, window: 6, seed: 0, random_pairs: 500, jobs: 1 }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_rank == 0 || self.max_rank > MAX_SWEEP_RANK {
            return Err(Error::OutOfBounds(format!("max rank {} outside 1..={MAX_SWEEP_RANK}", self.max_rank)));
        }
        if !(0..=MAX_SWEEP_PAIRING).contains(&self.max_pairing) {
            return Err(Error::OutOfBounds(format!("max pairing {} outside 0..={MAX_SWEEP_PAIRING}", self.max_pairing)));
        }
        if !(0..=MAX_WINDOW).contains(&self.window) {
            return Err(Error::OutOfBounds(format!("window {} outside 0..={MAX_WINDOW}", self.window)));
        }
        if self.jobs == 0 {
            return Err(Error::OutOfBounds("jobs must be at least 1".into()));
        }
        Ok(())
    }

    fn sweep_types(&self) -> Vec<&'static str> {
        SWEEP_TYPES.into_iter().filter(|l| l[1..].parse::<usize>().is_ok_and(|r| r <= self.max_rank)).collect()
    }
}

/// One checked instance.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Instance {
    pub system: String,
    pub input: String,
    pub outcome: String,
    pub ok: bool,
}

impl Instance {
    fn new(system: &str, input: String, outcome: String, ok: bool) -> Self {
        Self { system: system.to_string(), input, outcome, ok }
    }

    fn from_result(system: &str, input: String, r: Result<(String, bool)>) -> Self {
        match r {
            Ok((outcome, ok)) => Self::new(system, input, outcome, ok),
            Err(e) => Self::new(system, input, format!("error: {e}"), false),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub config: SweepConfig,
    pub checked: usize,
    pub failed: usize,
    pub pass: bool,
    /// Stembridge case counts `[case 1, …, case 5]` per type.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub histogram: Option<BTreeMap<String, [usize; 5]>>,
    pub counterexamples: Vec<Instance>,
    pub instances: Vec<Instance>,
}

/// Dominant coweights with `⟨μ, 2ρ⟩ ≤ bound`, in lexicographic order.
pub fn dominant_coweights(sys: &FiniteRootSystem, bound: i64) -> Vec<Coweight> {
    fn go(i: usize, p: &mut Vec<i64>, used: i64, w: &[i64], bound: i64, out: &mut Vec<Coweight>) {
        if i == p.len() {
            out.push(Coweight(p.clone()));
            return;
        }
        let mut c = 0;
        while used + c * w[i] <= bound {
            p[i] = c;
            go(i + 1, p, used + c * w[i], w, bound, out);
            c += 1;
        }
        p[i] = 0;
    }
    // ⟨μ, 2ρ⟩ = Σ μ_i (2ρ)_i with (2ρ)_i ≥ 1
    let w = sys.two_rho().to_vec();
    let mut out = Vec::new();
    go(0, &mut vec![0; sys.rank()], 0, &w, bound, &mut out);
    out
}

/// Every brute-force cover `μ ⇝ λ` with `⟨μ, 2ρ⟩ ≤ bound`.
pub fn degenerations(sys: &FiniteRootSystem, bound: i64) -> Result<Vec<(Coweight, Coweight)>> {
    let mut out = Vec::new();
    for mu in dominant_coweights(sys, bound) {
        for s in covers_of(sys, &mu)? {
            out.push((mu.clone(), s.lambda));
        }
    }
    Ok(out)
}

fn pair_input(mu: &Coweight, lambda: &Coweight) -> String {
    format!("mu={mu} lambda={lambda}")
}

fn per_type<T: Send>(cfg: &SweepConfig, labels: &[&'static str], f: impl Fn(usize, &'static str) -> T + Sync) -> Result<Vec<T>> {
    if cfg.jobs <= 1 {
        return Ok(labels.iter().enumerate().map(|(i, l)| f(i, l)).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::OutOfBounds(format!("thread pool: {e}")))?;
    Ok(pool.install(|| labels.par_iter().enumerate().map(|(i, l)| f(i, l)).collect()))
}

fn k_symmetry_check(sys: &FiniteRootSystem, mu: &Coweight, lambda: &Coweight) -> Result<(String, bool)> {
    let k = k_vector(sys, lambda, mu)?;
    let bad: Vec<usize> =
        (0..sys.num_roots()).filter(|&a| k.0[a] != k.0[sys.negate(a)] + sys.pairing(lambda, a)).collect();
    match bad.first() {
        None => Ok((format!("{} roots", sys.num_roots()), true)),
        Some(&a) => Ok((
            format!("fails at root {:?}: k = {}, k_neg = {}, pairing = {}", sys.root(a), k.0[a], k.0[sys.negate(a)], sys.pairing(lambda, a)),
            false,
        )),
    }
}

fn k_symmetry(cfg: &SweepConfig, index: usize, label: &'static str) -> Result<Vec<Instance>> {
    let sys = build_root_system(label)?;
    let mut out = Vec::new();
    for (mu, lambda) in degenerations(&sys, cfg.max_pairing)? {
        let r = k_symmetry_check(&sys, &mu, &lambda);
        out.push(Instance::from_result(label, format!("cover {}", pair_input(&mu, &lambda)), r));
    }
    let dominants = dominant_coweights(&sys, cfg.max_pairing);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(index as u64));
    let mut below: HashMap<usize, Vec<Coweight>> = HashMap::new();
    for draw in 0..cfg.random_pairs {
        let i = rng.gen_range(0..dominants.len());
        let mu = &dominants[i];
        let strata = match below.entry(i) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(strata_below(&sys, mu)?.into_iter().map(|s| s.lambda).collect()),
        };
        let lambda = strata[rng.gen_range(0..strata.len())].clone();
        let r = k_symmetry_check(&sys, mu, &lambda);
        out.push(Instance::from_result(label, format!("random#{draw:03} {}", pair_input(mu, &lambda)), r));
    }
    Ok(out)
}

fn stembridge(cfg: &SweepConfig, label: &'static str) -> Result<(Vec<Instance>, [usize; 5])> {
    let sys = build_root_system(label)?;
    let mut hist = [0; 5];
    let mut out = Vec::new();
    for (mu, lambda) in degenerations(&sys, cfg.max_pairing)? {
        let r = classify_degeneration(&sys, &mu, &lambda).map(|c| {
            hist[c as usize - 1] += 1;
            (format!("case {c}"), true)
        });
        out.push(Instance::from_result(label, pair_input(&mu, &lambda), r));
    }
    Ok((out, hist))
}

fn mindeg(cfg: &SweepConfig, label: &'static str) -> Result<Vec<Instance>> {
    let sys = build_root_system(label)?;
    let mut out = Vec::new();
    for (mu, lambda) in degenerations(&sys, cfg.max_pairing)? {
        let r = k_vector(&sys, &lambda, &mu).map(|k| {
            let dim = sys.two_rho_pairing(&mu);
            (format!("bound {} vs dim {dim}", k.total()), k.total() >= dim)
        });
        out.push(Instance::from_result(label, pair_input(&mu, &lambda), r));
    }
    Ok(out)
}

fn loop_basis(cfg: &SweepConfig, label: &'static str) -> Result<Vec<Instance>> {
    let t = TwistedLoopAlgebra::parse(label)?;
    let report = t.verify_invariant_basis(cfg.window)?;
    Ok(report
        .degrees
        .iter()
        .map(|d| {
            let outcome = format!(
                "fixed {} roots {} rank {} invariant {}",
                d.fixed_dim, d.root_count, d.e_a_rank, d.all_invariant
            );
            Instance::new(label, format!("degree {:+03}", d.degree), outcome, d.pass)
        })
        .collect())
}

fn cartan_direction(cfg: &SweepConfig, label: &'static str) -> Result<Vec<Instance>> {
    let t = TwistedLoopAlgebra::parse(label)?;
    let matrix = t.datum().absolute_type().family == crate::rootsys::Family::A;
    let mut out = Vec::new();
    for k in 1..=cfg.window.max(1) {
        for root in 0..t.datum().sigma().num_roots() {
            let a = AffineRootSigma { root, level: -k };
            if t.datum().sigma_affine_to_relative(a).case == RelCase::Case2a {
                continue;
            }
            let r = t.cartan_direction(a).and_then(|c| {
                let mut ok = c.invariant;
                let mut outcome = t.render(&c.cartan);
                if matrix {
                    let m = matrix_cross_check(&t, a)?;
                    ok &= m.agrees && m.trace().is_zero();
                    outcome.push_str(&format!("; matrix agrees {}, trace {}", m.agrees, m.trace()));
                }
                Ok((outcome, ok))
            });
            let v = t.datum().sigma().root(root);
            out.push(Instance::from_result(label, format!("root {v:?} level {:+03}", -k), r));
        }
    }
    Ok(out)
}

fn sl2(cfg: &SweepConfig) -> Vec<Instance> {
    let mut cases: Vec<(i64, Q)> = Vec::new();
    for k in 1..=3 {
        for x in [Q::from_integer(1), Q::from_integer(-2), Q::new(3, 2)] {
            cases.push((k, x));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..20 {
        let num = loop {
            let n: i64 = rng.gen_range(-9..=9);
            if n != 0 {
                break n;
            }
        };
        cases.push((rng.gen_range(1..=cfg.window.max(1)), Q::new(num, rng.gen_range(1..=9))));
    }
    cases
        .into_iter()
        .enumerate()
        .map(|(i, (k, x))| {
            let r = verify_sl2_factorization(k, x).map(|ok| (if ok { "identity holds" } else { "identity fails" }.to_string(), ok));
            Instance::from_result("A1", format!("#{i:02} k={k} x={x}"), r)
        })
        .collect()
}

fn flatten(parts: Vec<Result<Vec<Instance>>>) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

/// Runs a suite; instances are sorted by system, then input.
pub fn run_suite(suite: Suite, cfg: &SweepConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let types = cfg.sweep_types();
    let mut histogram = None;
    let mut instances = match suite {
        Suite::KSymmetry => flatten(per_type(cfg, &types, |i, l| k_symmetry(cfg, i, l))?)?,
        Suite::MindegInequality => flatten(per_type(cfg, &types, |_, l| mindeg(cfg, l))?)?,
        Suite::Stembridge => {
            let mut hist = BTreeMap::new();
            let mut all = Vec::new();
            for (l, r) in types.iter().zip(per_type(cfg, &types, |_, l| stembridge(cfg, l))?) {
                let (inst, h) = r?;
                hist.insert(l.to_string(), h);
                all.extend(inst);
            }
            histogram = Some(hist);
            all
        }
        Suite::LoopBasis => flatten(per_type(cfg, &LOOP_BASIS_TYPES, |_, l| loop_basis(cfg, l))?)?,
        Suite::CartanDirection => flatten(per_type(cfg, &CARTAN_TYPES, |_, l| cartan_direction(cfg, l))?)?,
        Suite::Sl2Factorization => sl2(cfg),
    };
    instances.sort();
    let counterexamples: Vec<Instance> = instances.iter().filter(|i| !i.ok).cloned().collect();
    Ok(SuiteReport {
        suite,
        config: *cfg,
        checked: instances.len(),
        failed: counterexamples.len(),
        pass: counterexamples.is_empty(),
        histogram,
        counterexamples,
        instances,
    })
}
