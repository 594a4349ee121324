//! Identification of Cartan matrices up to relabeling.

use super::cartan::{CartanType, Family};

/// An irreducible piece of a (possibly reducible) Cartan matrix.
///
/// `indices[b]` is the index, in the matrix that was recognized, of the
/// simple root carrying Bourbaki label `b` of `ty`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Component {
    pub ty: CartanType,
    pub indices: Vec<usize>,
}

/// Connected components of the Dynkin diagram, each sorted ascending,
/// ordered by smallest member.
pub fn connected_components(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..n {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn candidates(rank: usize) -> Vec<CartanType> {
    [Family::A, Family::C, Family::B, Family::D, Family::E, Family::F, Family::G]
        .into_iter()
        .filter_map(|f| CartanType::new(f, rank).ok())
        .collect()
}

/// Finds `perm` with `cartan[perm[a]][perm[b]] == target[a][b]` for all a, b.
fn match_perm(cartan: &[Vec<i64>], nodes: &[usize], target: &[Vec<i64>]) -> Option<Vec<usize>> {
    fn go(
        cartan: &[Vec<i64>],
        nodes: &[usize],
        target: &[Vec<i64>],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let a = perm.len();
        if a == nodes.len() {
            return true;
        }
        for (k, &v) in nodes.iter().enumerate() {
            if used[k] {
                continue;
            }
            let fits = (0..a).all(|b| cartan[v][perm[b]] == target[a][b] && cartan[perm[b]][v] == target[b][a]);
            if fits {
                used[k] = true;
                perm.push(v);
                if go(cartan, nodes, target, perm, used) {
                    return true;
                }
                perm.pop();
                used[k] = false;
            }
        }
        false
    }
    let mut perm = Vec::with_capacity(nodes.len());
    let mut used = vec![false; nodes.len()];
    go(cartan, nodes, target, &mut perm, &mut used).then_some(perm)
}

/// Recognizes every irreducible component of a Cartan matrix.
///
/// Rank-2 double bonds are reported as `C2`. Returns `None` if some
/// component is not of finite type.
pub fn recognize(cartan: &[Vec<i64>]) -> Option<Vec<Component>> {
    connected_components(cartan)
        .into_iter()
        .map(|nodes| {
            candidates(nodes.len()).into_iter().find_map(|ty| {
                match_perm(cartan, &nodes, &ty.cartan_matrix()).map(|indices| Component { ty, indices })
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognizes_every_standard_type_under_reversal() {
        let labels = ["A1", "A5", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2"];
        for label in labels {
            let ty: CartanType = label.parse().unwrap();
            let c = ty.cartan_matrix();
            let n = c.len();
            let rev: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| c[n - 1 - i][n - 1 - j]).collect()).collect();
            let comps = recognize(&rev).unwrap();
            assert_eq!(comps.len(), 1);
            assert_eq!(comps[0].ty, ty, "{label}");
        }
    }

    #[test]
    fn b2_reads_as_c2() {
        let c = CartanType::new(Family::B, 2).unwrap().cartan_matrix();
        let comps = recognize(&c).unwrap();
        assert_eq!(comps[0].ty.to_string(), "C2");
        assert_eq!(comps[0].indices, vec![1, 0]);
    }

    #[test]
    fn reducible_pieces() {
        let c = vec![vec![2, 0, 0], vec![0, 2, -1], vec![0, -1, 2]];
        let comps = recognize(&c).unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].ty.to_string(), "A1");
        assert_eq!(comps[1].ty.to_string(), "A2");
        assert_eq!(comps[1].indices, vec![1, 2]);
    }

    #[test]
    fn affine_matrix_is_rejected() {
        let c = vec![vec![2, -2], vec![-2, 2]];
        assert!(recognize(&c).is_none());
    }
}
