//! Pattern matching of minimal degenerations against the five shapes in
//! Stembridge's classification.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{CorootVector, Coweight, Family, FiniteRootSystem};

/// A minimal degeneration μ ⇝ λ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegenerationEdge {
    pub mu: Coweight,
    pub lambda: Coweight,
    pub diff: CorootVector,
    pub support: Vec<usize>,
    pub case: u8,
}

fn embedded_short_dominant_coroot(sys: &FiniteRootSystem, support: &[usize]) -> Option<(CorootVector, FiniteRootSystem)> {
    let sub = sys.sub_system(support);
    let c = sub.system.short_dominant_coroot().ok()?;
    Some((sub.embed(&c, sys.rank()), sub.system))
}

/// Every case whose defining pattern the pair satisfies.
pub fn matching_cases(sys: &FiniteRootSystem, mu: &Coweight, lambda: &Coweight) -> Result<Vec<u8>> {
    let diff = sys
        .coroot_coefficients(&mu.minus(lambda))
        .filter(|c| c.is_nonnegative() && c.0.iter().any(|&x| x > 0))
        .ok_or_else(|| Error::NotBelow { lambda: lambda.0.clone(), mu: mu.0.clone() })?;
    let support = diff.support();
    let mut cases = Vec::new();

    if support.len() == 1 && diff.0[support[0]] == 1 {
        cases.push(1);
    }
    let Some((sdc, sub)) = embedded_short_dominant_coroot(sys, &support) else {
        return Ok(cases);
    };
    let is_sdc = sdc == diff;
    let vanishes = support.iter().all(|&i| lambda.0[i] == 0);
    if is_sdc && vanishes {
        cases.push(2);
    }
    let ty = sub.cartan_type().expect("supports of covers are connected");
    let type_c = ty.family == Family::C || (ty.family == Family::B && ty.rank == 2);
    if is_sdc && type_c {
        let long = *support
            .iter()
            .max_by_key(|&&i| sys.norm(sys.simple_root_index(i)))
            .expect("support is nonempty");
        if support.iter().all(|&i| lambda.0[i] == i64::from(i == long)) {
            cases.push(3);
        }
    }
    if ty.family == Family::G {
        let (s, l) = {
            let (a, b) = (support[0], support[1]);
            if sys.norm(sys.simple_root_index(a)) < sys.norm(sys.simple_root_index(b)) {
                (a, b)
            } else {
                (b, a)
            }
        };
        let lam = (lambda.0[l], lambda.0[s]);
        let m = (mu.0[l], mu.0[s]);
        // (long, short) pairings
        if lam == (2, 0) && m == (1, 1) {
            cases.push(4);
        }
        if lam == (1, 0) && m == (0, 1) {
            cases.push(5);
        }
    }
    Ok(cases)
}

/// The Stembridge case of a minimal degeneration.
///
/// When the support has rank one and λ vanishes on it, the pair fits both
/// the simple-coroot and the short-dominant-coroot shapes. It is reported as
/// case 2 when λ = 0 and as case 1 otherwise.
pub fn classify_degeneration(sys: &FiniteRootSystem, mu: &Coweight, lambda: &Coweight) -> Result<u8> {
    let cases = matching_cases(sys, mu, lambda)?;
    match cases.as_slice() {
        [c] => Ok(*c),
        [1, 2] => Ok(if lambda.is_zero() { 2 } else { 1 }),
        [] => Err(Error::Unclassified(format!("{mu} ⇝ {lambda}"))),
        _ => Err(Error::Inconsistent(format!("{mu} ⇝ {lambda} matches cases {cases:?}"))),
    }
}

pub fn make_edge(sys: &FiniteRootSystem, mu: &Coweight, lambda: &Coweight) -> Result<DegenerationEdge> {
    let case = classify_degeneration(sys, mu, lambda)?;
    let diff = sys.coroot_coefficients(&mu.minus(lambda)).expect("checked by classification");
    Ok(DegenerationEdge { mu: mu.clone(), lambda: lambda.clone(), support: diff.support(), diff, case })
}

/// The full Hasse diagram below μ with every edge classified.
pub fn minimal_degenerations(sys: &FiniteRootSystem, mu: &Coweight) -> Result<Vec<DegenerationEdge>> {
    let strata = super::poset::strata_below(sys, mu)?;
    super::poset::hasse_edges(&strata)
        .into_iter()
        .map(|(x, y)| make_edge(sys, &strata[x].lambda, &strata[y].lambda))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    #[test]
    fn reference_patterns() {
        let a2 = build_root_system("A2").unwrap();
        assert_eq!(classify_degeneration(&a2, &Coweight(vec![2, 0]), &Coweight(vec![0, 1])).unwrap(), 1);
        assert_eq!(classify_degeneration(&a2, &Coweight(vec![1, 1]), &Coweight(vec![0, 0])).unwrap(), 2);
        let g2 = build_root_system("G2").unwrap();
        assert_eq!(classify_degeneration(&g2, &Coweight(vec![1, 0]), &Coweight(vec![0, 1])).unwrap(), 5);
        assert_eq!(classify_degeneration(&g2, &Coweight(vec![1, 1]), &Coweight(vec![0, 2])).unwrap(), 4);
        assert_eq!(classify_degeneration(&g2, &Coweight(vec![0, 1]), &Coweight(vec![0, 0])).unwrap(), 2);
    }

    #[test]
    fn c2_case_three() {
        // C2: α1 short, α2 long; λ pairs 1 with the long root
        let c2 = build_root_system("C2").unwrap();
        let lambda = Coweight(vec![0, 1]);
        let theta = c2.coroot_coweight(c2.highest_root());
        let mu = lambda.plus(&theta);
        assert_eq!(matching_cases(&c2, &mu, &lambda).unwrap(), vec![3]);
    }

    #[test]
    fn rank_one_support_with_vanishing_lambda() {
        let a1 = build_root_system("A1").unwrap();
        assert_eq!(matching_cases(&a1, &Coweight(vec![2]), &Coweight(vec![0])).unwrap(), vec![1, 2]);
        assert_eq!(classify_degeneration(&a1, &Coweight(vec![2]), &Coweight(vec![0])).unwrap(), 2);
        assert_eq!(classify_degeneration(&a1, &Coweight(vec![3]), &Coweight(vec![1])).unwrap(), 1);
    }

    #[test]
    fn triality_quasi_minuscule_edge() {
        let g2 = build_root_system("G2").unwrap();
        let edges = minimal_degenerations(&g2, &Coweight(vec![0, 1])).unwrap();
        assert_eq!(edges.len(), 1);
        assert_eq!(edges[0].case, 2);
        assert_eq!(edges[0].diff, CorootVector(vec![1, 2]));
    }
}
