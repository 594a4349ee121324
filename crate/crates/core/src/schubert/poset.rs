use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{CorootVector, Coweight, FiniteRootSystem};

/// A dominant coweight below μ together with the coefficients of μ − λ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub lambda: Coweight,
    pub diff: CorootVector,
}

fn leq(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn check_dominant(sys: &FiniteRootSystem, nu: &Coweight) -> Result<()> {
    sys.check_rank(nu)?;
    if sys.is_dominant(nu) {
        Ok(())
    } else {
        Err(Error::NotDominant(nu.0.clone()))
    }
}

/// Every dominant λ ≼ μ, ordered by decreasing dimension then decreasing
/// pairings; μ comes first.
///
/// Since `⟨α_i^∨, 2ρ⟩ = 2`, dominance of λ forces `Σ c_i ≤ ⟨μ,2ρ⟩ / 2` for the
/// coefficients `c` of μ − λ, which bounds the search.
pub fn strata_below(sys: &FiniteRootSystem, mu: &Coweight) -> Result<Vec<Stratum>> {
    check_dominant(sys, mu)?;
    let n = sys.rank();
    let budget = sys.two_rho_pairing(mu) / 2;
    let simple: Vec<Coweight> = (0..n).map(|i| sys.coroot_coweight(sys.simple_root_index(i))).collect();
    let mut out = Vec::new();
    let mut c = vec![0i64; n];
    fn go(
        i: usize,
        left: i64,
        cur: Coweight,
        c: &mut Vec<i64>,
        simple: &[Coweight],
        out: &mut Vec<Stratum>,
    ) {
        if i == c.len() {
            if cur.0.iter().all(|&p| p >= 0) {
                out.push(Stratum { lambda: cur, diff: CorootVector(c.clone()) });
            }
            return;
        }
        let mut nu = cur;
        for k in 0..=left {
            c[i] = k;
            let next = nu.minus(&simple[i]);
            go(i + 1, left - k, nu, c, simple, out);
            nu = next;
        }
        c[i] = 0;
    }
    go(0, budget, mu.clone(), &mut c, &simple, &mut out);
    out.sort_by(|a, b| {
        sys.two_rho_pairing(&b.lambda)
            .cmp(&sys.two_rho_pairing(&a.lambda))
            .then_with(|| b.lambda.cmp(&a.lambda))
    });
    Ok(out)
}

pub fn dominant_below(sys: &FiniteRootSystem, mu: &Coweight) -> Result<Vec<Coweight>> {
    Ok(strata_below(sys, mu)?.into_iter().map(|s| s.lambda).collect())
}

/// Covering pairs `(upper, lower)` of the strata list, as index pairs.
pub(crate) fn hasse_edges(strata: &[Stratum]) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..strata.len()).collect();
    let weight = |i: usize| strata[i].diff.0.iter().sum::<i64>();
    order.sort_by_key(|&i| (weight(i), i));
    let mut edges = Vec::new();
    for x in 0..strata.len() {
        let cx = &strata[x].diff.0;
        let mut minimal: Vec<usize> = Vec::new();
        for &y in &order {
            let cy = &strata[y].diff.0;
            if y == x || !leq(cx, cy) {
                continue;
            }
            if minimal.iter().all(|&m| !leq(&strata[m].diff.0, cy)) {
                minimal.push(y);
            }
        }
        minimal.sort_unstable();
        edges.extend(minimal.into_iter().map(|y| (x, y)));
    }
    edges
}

/// The dominant λ with μ ⇝ λ a minimal degeneration.
pub fn covers_of(sys: &FiniteRootSystem, mu: &Coweight) -> Result<Vec<Stratum>> {
    let strata = strata_below(sys, mu)?;
    let edges = hasse_edges(&strata);
    Ok(edges.into_iter().filter(|&(x, _)| x == 0).map(|(_, y)| strata[y].clone()).collect())
}

/// Whether μ ⇝ λ is a minimal degeneration, by direct search for an
/// intermediate dominant coweight.
pub fn is_cover(sys: &FiniteRootSystem, mu: &Coweight, lambda: &Coweight) -> bool {
    if mu == lambda || !sys.dominance_leq(lambda, mu) || !sys.is_dominant(lambda) || !sys.is_dominant(mu) {
        return false;
    }
    let c = sys.coroot_coefficients(&mu.minus(lambda)).expect("dominance implies integrality").0;
    let n = c.len();
    let mut cur = vec![0i64; n];
    loop {
        let mut i = 0;
        while i < n && cur[i] == c[i] {
            cur[i] = 0;
            i += 1;
        }
        if i == n {
            return true;
        }
        cur[i] += 1;
        if cur == c {
            continue;
        }
        let nu = mu.minus(&sys.coweight_of(&CorootVector(cur.clone())));
        if sys.is_dominant(&nu) {
            return false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    #[test]
    fn a1_chain() {
        let a1 = build_root_system("A1").unwrap();
        let below = dominant_below(&a1, &Coweight(vec![4])).unwrap();
        assert_eq!(below, vec![Coweight(vec![4]), Coweight(vec![2]), Coweight(vec![0])]);
        let strata = strata_below(&a1, &Coweight(vec![4])).unwrap();
        assert_eq!(hasse_edges(&strata), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn rejects_non_dominant() {
        let a2 = build_root_system("A2").unwrap();
        assert!(matches!(dominant_below(&a2, &Coweight(vec![-1, 2])), Err(Error::NotDominant(_))));
        assert!(matches!(dominant_below(&a2, &Coweight(vec![1])), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn cover_predicate_agrees_with_hasse() {
        let b3 = build_root_system("B3").unwrap();
        let mu = Coweight(vec![1, 0, 2]);
        let strata = strata_below(&b3, &mu).unwrap();
        let edges = hasse_edges(&strata);
        for x in 0..strata.len() {
            for y in 0..strata.len() {
                let direct = is_cover(&b3, &strata[x].lambda, &strata[y].lambda);
                assert_eq!(direct, edges.contains(&(x, y)), "{x} {y}");
            }
        }
    }
}
