//! Dense exact linear algebra over small fields.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Q = Ratio<i64>;

/// The arithmetic needed by Gaussian elimination.
pub trait Field:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Field for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
{
}

/// Reduces `rows` in place to row echelon form and returns the rank.
pub fn row_reduce<F: Field>(rows: &mut [Vec<F>]) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = F::one() / rows[rank][col].clone();
        for c in col..ncols {
            rows[rank][c] = rows[rank][c].clone() * inv.clone();
        }
        for r in 0..nrows {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let delta = factor.clone() * rows[rank][c].clone();
                    rows[r][c] = rows[r][c].clone() - delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut work = rows.to_vec();
    row_reduce(&mut work)
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse<F: Field>(m: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = m.len();
    let mut aug: Vec<Vec<F>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    if row_reduce(&mut aug) < n {
        return None;
    }
    // full rank and reduced: left block is the identity
    if (0..n).any(|i| aug[i][i] != F::one()) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn to_rational(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    m.iter()
        .map(|r| r.iter().map(|&x| Q::from_integer(x)).collect())
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return vec![];
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// Determinant and adjugate of a nonsingular integer matrix, so that
/// `m^{-1} = adj / det`.
pub fn det_adjugate(m: &[Vec<i64>]) -> Option<(i64, Vec<Vec<i64>>)> {
    let inv = inverse(&to_rational(m))?;
    let det = determinant(m);
    let adj = inv
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let v = *x * Q::from_integer(det);
                    debug_assert!(v.is_integer());
                    v.to_integer()
                })
                .collect()
        })
        .collect();
    Some((det, adj))
}

/// Fraction-free determinant by rational elimination.
pub fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a = to_rational(m);
    let mut det = Q::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return 0;
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let piv = a[col][col];
        det *= piv;
        for r in col + 1..n {
            let f = a[r][col] / piv;
            if !f.is_zero() {
                for c in col..n {
                    let d = f * a[col][c];
                    a[r][c] -= d;
                }
            }
        }
    }
    det.to_integer()
}

/// Serializes a rational as `"p/q"` (or `"p"` when integral).
pub fn serialize_q<S: serde::Serializer>(q: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(q)
}

pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_dependent_rows() {
        let m = to_rational(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = vec![vec![2, -1], vec![-1, 2]];
        let (det, adj) = det_adjugate(&m).unwrap();
        assert_eq!(det, 3);
        assert_eq!(adj, vec![vec![2, 1], vec![1, 2]]);
    }

    #[test]
    fn singular_has_no_inverse() {
        let m = to_rational(&[vec![1, 1], vec![1, 1]]);
        assert!(inverse(&m).is_none());
        assert_eq!(determinant(&[vec![1, 1], vec![1, 1]]), 0);
    }

    #[test]
    fn determinant_of_cartan_g2() {
        assert_eq!(determinant(&[vec![2, -3], vec![-1, 2]]), 1);
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), -1);
    }
}
