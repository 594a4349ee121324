use std::fmt::Write;

use affsch::loopalg::TermRecord;
use affsch::schubert::Mechanism;

use crate::report::{AnalyzeResult, DatumSummary, LoopcheckResult, PosetResult, VerifyResult};

fn terms(t: &[TermRecord]) -> String {
    if t.is_empty() {
        return "0".into();
    }
    t.iter()
        .map(|r| match r.u_exp {
            0 => format!("({}){}", r.coeff, r.basis),
            e => format!("({}){}·u^{e}", r.coeff, r.basis),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn datum(out: &mut String, d: &DatumSummary) {
    let _ = writeln!(out, "type {} (absolute {}, e = {}), Sigma = {}", d.label, d.absolute_type, d.e, d.sigma_type);
    let _ = writeln!(out, "  Sigma simple roots in absolute coordinates: {:?}", d.sigma_simple_vectors);
    if !d.multipliable_roots.is_empty() {
        let _ = writeln!(out, "  multipliable: {:?}", d.multipliable_roots);
    }
}

pub fn analyze(r: &AnalyzeResult) -> String {
    let mut out = String::new();
    datum(&mut out, &r.datum);
    let _ = writeln!(out, "mu = {}, dim = {}", r.mu, r.dim);
    for e in &r.covers {
        let _ = writeln!(out, "  cover {} -> {}: diff {}, case {}", e.mu, e.lambda, e.diff, e.case);
    }
    let _ = writeln!(out, "strata:");
    for s in &r.smooth_locus.strata {
        let how = match s.mechanism {
            Mechanism::OpenOrbit => "open orbit".to_string(),
            Mechanism::Certificate => {
                let c = s.certificate.as_ref().expect("certified strata carry a certificate");
                format!("certificate case {}, bound {} + {} = {} vs dim {}", c.stembridge_case, c.root_bound, c.cartan_extra, c.total_bound(), c.dim)
            }
            Mechanism::Openness => format!("below singular cover {}", s.via_cover.as_ref().map(ToString::to_string).unwrap_or_default()),
        };
        let state = if s.smooth { "smooth" } else { "singular" };
        let _ = writeln!(out, "  {} dim {}: {state} ({how})", s.lambda, s.dim);
    }
    if let Some(f) = &r.focus {
        let _ = writeln!(out, "lambda = {}: root bound {}, cover {}", f.lambda, f.root_bound, f.is_cover);
        let _ = writeln!(out, "  k-vector {:?}", f.k_vector.0);
        if let Some(c) = &f.certificate {
            let _ = writeln!(out, "  certificate: case {}, bound {} vs dim {}, {:?}", c.stembridge_case, c.total_bound(), c.dim, c.verdict);
        }
    }
    let _ = writeln!(out, "smooth locus is the open stratum: {}", r.confirms_theorem);
    out
}

pub fn poset(r: &PosetResult) -> String {
    let mut out = String::new();
    datum(&mut out, &r.datum);
    let _ = writeln!(out, "{} strata below {}:", r.strata.len(), r.mu);
    for s in &r.strata {
        let _ = writeln!(out, "  {} dim {} (mu - lambda = {} in coroots)", s.lambda, s.dim, s.diff);
    }
    let _ = writeln!(out, "{} covering edges:", r.edges.len());
    for e in &r.edges {
        let _ = writeln!(out, "  {} -> {}: case {}", e.mu, e.lambda, e.case);
    }
    out
}

pub fn verify(r: &VerifyResult) -> String {
    let mut out = String::new();
    for s in &r.suites {
        let verdict = if s.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{verdict} {}: {} checked, {} failed", s.suite, s.checked, s.failed);
        if let Some(h) = &s.histogram {
            for (t, counts) in h {
                let _ = writeln!(out, "  {t}: cases {counts:?}");
            }
        }
        for c in &s.counterexamples {
            let _ = writeln!(out, "  counterexample {} {}: {}", c.system, c.input, c.outcome);
        }
    }
    out
}

pub fn loopcheck(r: &LoopcheckResult) -> String {
    let mut out = String::new();
    datum(&mut out, &r.datum);
    for d in &r.inventory {
        let _ = writeln!(out, "degree {:+}: {} vectors", d.degree, d.vectors.len());
        for v in &d.vectors {
            let _ = writeln!(out, "  {:?}{:+} ({:?}, m = {}): {}", v.root, v.level, v.case, v.m, terms(&v.e_a));
        }
    }
    for d in &r.invariant_basis.degrees {
        let _ = writeln!(
            out,
            "basis degree {:+}: fixed {} roots {} rank {} {}",
            d.degree,
            d.fixed_dim,
            d.root_count,
            d.e_a_rank,
            if d.pass { "ok" } else { "MISMATCH" }
        );
    }
    for d in &r.cartan_directions {
        let _ = writeln!(
            out,
            "cartan {:?}{:+} with {:?}{:+}: {} (invariant {})",
            d.root,
            d.level,
            d.companion_root,
            d.companion_level,
            terms(&d.cartan),
            d.invariant
        );
    }
    if let Some(ms) = &r.matrix_check {
        for m in ms {
            let _ = writeln!(out, "matrix {:?}{:+}: diagonal [{}], trace {}, agrees {}", m.root, m.level, m.diagonal.join(", "), m.trace, m.agrees);
        }
    }
    if let Some(s) = &r.sl2_table {
        let _ = writeln!(out, "sl2: Ad(exp(X(-1)·u^-1)) X(1) = {}", terms(&s.expansion));
        for row in &s.matrix {
            let _ = writeln!(out, "  [{}]", row.join(", "));
        }
    }
    if let Some(t) = &r.triality {
        let _ = writeln!(out, "invariant Cartan in degree -1 has dimension {}", t.invariant_cartan_dim);
        let _ = writeln!(out, "triality direction: {}", terms(&t.direction));
        let c = &t.certificate;
        let _ = writeln!(out, "certificate (0,1) -> (0,0): bound {} + {} = {} vs dim {}, {:?}", c.root_bound, c.cartan_extra, c.total_bound(), c.dim, c.verdict);
    }
    let _ = writeln!(out, "{}", if r.pass { "PASS" } else { "FAIL" });
    out
}
