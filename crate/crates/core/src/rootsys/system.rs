use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::cartan::{cartan_from_form, CartanType};
use super::coweight::{CorootVector, Coweight};
use super::recognize::{recognize, Component};
use crate::error::{Error, Result};
use crate::linalg::{det_adjugate, transpose};

/// A reduced finite root system with integral data.
///
/// Roots are stored in simple-root coordinates. The first `npos` entries of
/// `roots` are the positive roots sorted by height; entry `i + npos` is the
/// negative of entry `i`.
#[derive(Debug, Clone)]
pub struct FiniteRootSystem {
    components: Vec<Component>,
    form: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    npos: usize,
    index: HashMap<Vec<i64>, usize>,
    norms: Vec<i64>,
    coroots: Vec<Vec<i64>>,
    coroot_pairings: Vec<Vec<i64>>,
    ct_det: i64,
    ct_adj: Vec<Vec<i64>>,
    two_rho: Vec<i64>,
}

#[derive(Debug, Clone)]
pub struct SubSystem {
    pub system: FiniteRootSystem,
    /// `embedding[i]` is the ambient simple index of local simple root `i`.
    pub embedding: Vec<usize>,
}

impl FiniteRootSystem {
    pub fn build(ty: CartanType) -> Self {
        let comps = vec![Component { ty, indices: (0..ty.rank).collect() }];
        Self::from_parts(ty.form(), comps)
    }

    /// Builds the system with the given symmetric form on simple roots.
    pub fn from_form(form: Vec<Vec<i64>>) -> Result<Self> {
        let cartan = cartan_from_form(&form);
        let comps = recognize(&cartan).ok_or_else(|| Error::UnknownType(format!("{cartan:?}")))?;
        Ok(Self::from_parts(form, comps))
    }

    fn from_parts(form: Vec<Vec<i64>>, components: Vec<Component>) -> Self {
        let n = form.len();
        let cartan = cartan_from_form(&form);
        let roots = reflection_closure(&cartan);
        let npos = roots.len() / 2;
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let norm = |r: &[i64]| -> i64 {
            (0..n).map(|i| (0..n).map(|j| r[i] * form[i][j] * r[j]).sum::<i64>()).sum()
        };
        let norms: Vec<i64> = roots.iter().map(|r| norm(r)).collect();
        let coroots: Vec<Vec<i64>> = roots
            .iter()
            .zip(&norms)
            .map(|(r, &nr)| {
                (0..n)
                    .map(|i| {
                        let num = r[i] * form[i][i];
                        debug_assert_eq!(num % nr, 0);
                        num / nr
                    })
                    .collect()
            })
            .collect();
        let ct = transpose(&cartan);
        let coroot_pairings = coroots.iter().map(|c| crate::linalg::mat_vec(&ct, c)).collect();
        let (ct_det, ct_adj) = if n == 0 { (1, vec![]) } else { det_adjugate(&ct).expect("finite Cartan matrices are nonsingular") };
        let mut two_rho = vec![0; n];
        for r in &roots[..npos] {
            for (t, x) in two_rho.iter_mut().zip(r) {
                *t += x;
            }
        }
        Self { components, form, cartan, roots, npos, index, norms, coroots, coroot_pairings, ct_det, ct_adj, two_rho }
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// The type when irreducible.
    pub fn cartan_type(&self) -> Option<CartanType> {
        match self.components.as_slice() {
            [c] => Some(c.ty),
            _ => None,
        }
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn form(&self) -> &[Vec<i64>] {
        &self.form
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.npos
    }

    pub fn negate(&self, i: usize) -> usize {
        if i < self.npos {
            i + self.npos
        } else {
            i - self.npos
        }
    }

    pub fn root_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn simple_root_index(&self, i: usize) -> usize {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        self.index[&v]
    }

    pub fn norm(&self, i: usize) -> i64 {
        self.norms[i]
    }

    /// Squared length of a lattice vector in simple-root coordinates.
    pub fn norm_of(&self, v: &[i64]) -> i64 {
        let n = self.rank();
        (0..n).map(|i| (0..n).map(|j| v[i] * self.form[i][j] * v[j]).sum::<i64>()).sum()
    }

    pub fn height(&self, i: usize) -> i64 {
        self.roots[i].iter().sum()
    }

    pub fn highest_root(&self) -> usize {
        self.npos - 1
    }

    /// Coroot of root `i` in simple-coroot coordinates.
    pub fn coroot(&self, i: usize) -> CorootVector {
        CorootVector(self.coroots[i].clone())
    }

    /// The coroot of root `i` as a coweight.
    pub fn coroot_coweight(&self, i: usize) -> Coweight {
        Coweight(self.coroot_pairings[i].clone())
    }

    pub fn check_rank(&self, nu: &Coweight) -> Result<()> {
        if nu.0.len() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rank(), got: nu.0.len() })
        }
    }

    pub fn pairing(&self, nu: &Coweight, root: usize) -> i64 {
        self.roots[root].iter().zip(&nu.0).map(|(m, p)| m * p).sum()
    }

    pub fn simple_reflect(&self, nu: &Coweight, i: usize) -> Coweight {
        let pi = nu.0[i];
        Coweight(nu.0.iter().zip(&self.cartan[i]).map(|(p, a)| p - pi * a).collect())
    }

    /// `s_root(nu) = nu - <nu, root> root^vee`.
    pub fn reflect(&self, nu: &Coweight, root: usize) -> Coweight {
        let k = self.pairing(nu, root);
        self.sub_coroot(nu, root, k)
    }

    /// `nu - k root^vee`.
    pub fn sub_coroot(&self, nu: &Coweight, root: usize, k: i64) -> Coweight {
        Coweight(nu.0.iter().zip(&self.coroot_pairings[root]).map(|(p, c)| p - k * c).collect())
    }

    pub fn is_dominant(&self, nu: &Coweight) -> bool {
        nu.0.iter().all(|&p| p >= 0)
    }

    pub fn dominant_rep(&self, nu: &Coweight) -> Coweight {
        let mut cur = nu.clone();
        while let Some(i) = cur.0.iter().position(|&p| p < 0) {
            cur = self.simple_reflect(&cur, i);
        }
        cur
    }

    /// Solves `C^T c = pairings` over the integers.
    pub fn coroot_coefficients(&self, nu: &Coweight) -> Option<CorootVector> {
        let c: Option<Vec<i64>> = self
            .ct_adj
            .iter()
            .map(|row| {
                let s: i64 = row.iter().zip(&nu.0).map(|(a, p)| a * p).sum();
                (s % self.ct_det == 0).then(|| s / self.ct_det)
            })
            .collect();
        c.map(CorootVector)
    }

    pub fn in_coroot_lattice(&self, nu: &Coweight) -> bool {
        self.coroot_coefficients(nu).is_some()
    }

    pub fn coweight_of(&self, c: &CorootVector) -> Coweight {
        Coweight(crate::linalg::mat_vec(&transpose(&self.cartan), &c.0))
    }

    /// `lambda <= mu` in the dominance order.
    pub fn dominance_leq(&self, lambda: &Coweight, mu: &Coweight) -> bool {
        self.coroot_coefficients(&mu.minus(lambda))
            .is_some_and(|c| c.0.iter().all(|&x| x >= 0))
    }

    /// Simple-root coordinates of the sum of positive roots.
    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    pub fn two_rho_pairing(&self, mu: &Coweight) -> i64 {
        self.two_rho.iter().zip(&mu.0).map(|(r, p)| r * p).sum()
    }

    /// Root subsystem spanned by the given simple roots, ordered as given.
    pub fn sub_system(&self, simple: &[usize]) -> SubSystem {
        let mut sorted = simple.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() == self.rank() {
            return SubSystem { system: self.clone(), embedding: sorted };
        }
        let form = sorted.iter().map(|&i| sorted.iter().map(|&j| self.form[i][j]).collect()).collect();
        let system = Self::from_form(form).expect("subdiagrams of finite diagrams are finite");
        SubSystem { system, embedding: sorted }
    }

    /// Coroot of the highest root; the dominant coroot of minimal length.
    pub fn short_dominant_coroot(&self) -> Result<CorootVector> {
        if self.components.len() != 1 {
            return Err(Error::UnknownType(self.to_string()));
        }
        Ok(self.coroot(self.highest_root()))
    }
}

impl SubSystem {
    pub fn embed(&self, c: &CorootVector, ambient_rank: usize) -> CorootVector {
        let mut out = vec![0; ambient_rank];
        for (k, &i) in self.embedding.iter().enumerate() {
            out[i] = c.0[k];
        }
        CorootVector(out)
    }
}

impl fmt::Display for FiniteRootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.components.iter().map(|c| c.ty.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl Serialize for FiniteRootSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FiniteRootSystem", 4)?;
        st.serialize_field("type", &self.to_string())?;
        st.serialize_field("cartan", &self.cartan)?;
        st.serialize_field("positive_roots", &self.roots[..self.npos])?;
        st.serialize_field("two_rho", &self.two_rho)?;
        st.end()
    }
}

pub fn build_root_system(label: &str) -> Result<FiniteRootSystem> {
    Ok(FiniteRootSystem::build(label.parse()?))
}

fn reflection_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut seen: std::collections::HashSet<Vec<i64>> = std::collections::HashSet::new();
    let mut queue: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    for v in &queue {
        seen.insert(v.clone());
    }
    let mut head = 0;
    while head < queue.len() {
        let r = queue[head].clone();
        head += 1;
        for i in 0..n {
            let k: i64 = (0..n).map(|j| cartan[i][j] * r[j]).sum();
            if k == 0 {
                continue;
            }
            let mut s = r.clone();
            s[i] -= k;
            if seen.insert(s.clone()) {
                queue.push(s);
            }
        }
    }
    let mut pos: Vec<Vec<i64>> = queue.into_iter().filter(|r| r.iter().all(|&x| x >= 0)).collect();
    pos.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    let neg: Vec<Vec<i64>> = pos.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
    pos.extend(neg);
    pos
}
