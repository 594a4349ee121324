use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// An irreducible Cartan type such as `A3` or `G2`, with Bourbaki numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

pub const MAX_RANK: usize = 8;

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = rank <= MAX_RANK
            && match family {
                Family::A => rank >= 1,
                Family::B | Family::C => rank >= 2,
                Family::D => rank >= 4,
                Family::E => (6..=8).contains(&rank),
                Family::F => rank == 4,
                Family::G => rank == 2,
            };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::UnknownType(format!("{family:?}{rank}")))
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Squared lengths of the simple roots (short roots have length 2) and
    /// the edges of the Dynkin diagram, both in Bourbaki numbering.
    pub(crate) fn diagram(&self) -> (Vec<i64>, Vec<(usize, usize)>) {
        let n = self.rank;
        let chain = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self.family {
            Family::A => (vec![2; n], chain(n)),
            Family::B => {
                let mut norms = vec![4; n];
                norms[n - 1] = 2;
                (norms, chain(n))
            }
            Family::C => {
                let mut norms = vec![2; n];
                norms[n - 1] = 4;
                (norms, chain(n))
            }
            Family::D => {
                let mut edges = chain(n - 1);
                edges.push((n - 3, n - 1));
                (vec![2; n], edges)
            }
            Family::E => {
                let mut edges = vec![(0, 2), (1, 3)];
                edges.extend((2..n - 1).map(|i| (i, i + 1)));
                (vec![2; n], edges)
            }
            Family::F => (vec![4, 4, 2, 2], chain(4)),
            Family::G => (vec![2, 6], vec![(0, 1)]),
        }
    }

    /// Symmetric bilinear form on simple roots, normalized so short roots
    /// have squared length 2.
    pub fn form(&self) -> Vec<Vec<i64>> {
        let (norms, edges) = self.diagram();
        let n = self.rank;
        let mut b = vec![vec![0; n]; n];
        for i in 0..n {
            b[i][i] = norms[i];
        }
        for &(i, j) in &edges {
            let v = -norms[i].max(norms[j]) / 2;
            b[i][j] = v;
            b[j][i] = v;
        }
        b
    }

    /// `cartan[i][j] = <alpha_i^vee, alpha_j>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        cartan_from_form(&self.form())
    }
}

pub(crate) fn cartan_from_form(b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.len();
    (0..n)
        .map(|i| (0..n).map(|j| 2 * b[i][j] / b[i][i]).collect())
        .collect()
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::UnknownType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        CartanType::new(family, rank).map_err(|_| Error::UnknownType(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let t: CartanType = "g2".parse().unwrap();
        assert_eq!(t.to_string(), "G2");
        assert!("D3".parse::<CartanType>().is_err());
        assert!("A9".parse::<CartanType>().is_err());
        assert!("X2".parse::<CartanType>().is_err());
        assert!("E".parse::<CartanType>().is_err());
    }

    #[test]
    fn g2_cartan_convention() {
        // alpha_1 short: <alpha_1^vee, alpha_2> = -3
        let c = CartanType::new(Family::G, 2).unwrap().cartan_matrix();
        assert_eq!(c, vec![vec![2, -3], vec![-1, 2]]);
    }

    #[test]
    fn b_and_c_are_transposes() {
        for n in 2..=5 {
            let b = CartanType::new(Family::B, n).unwrap().cartan_matrix();
            let c = CartanType::new(Family::C, n).unwrap().cartan_matrix();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(b[i][j], c[j][i]);
                }
            }
        }
    }
}
