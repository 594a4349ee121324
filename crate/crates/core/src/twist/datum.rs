use std::collections::HashMap;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{recognize, CartanType, Family, FiniteRootSystem};

/// Kind of the vertex the Grassmannian is attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexKind {
    AbsolutelySpecial,
    /// Special but not absolutely special; only exists for the C-BC types.
    SpecialOnly,
}

/// A σ₀-orbit of absolute roots, listed as `rep, σ₀(rep), σ₀²(rep), …`
/// where `rep` has the smallest root index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub roots: Vec<usize>,
    pub orthogonal: bool,
}

impl Orbit {
    pub fn rep(&self) -> usize {
        self.roots[0]
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// How the orbits attached to one root of Σ look.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaRootMeta {
    /// Size of the orbit of the non-divisible relative root.
    pub d: usize,
    pub multipliable: bool,
    /// Orbit whose relative root is proportional to this Σ-root; for a
    /// multipliable root this is the orbit of the shorter relative root.
    pub orbit: usize,
    /// Orbit of the doubled relative root, if any.
    pub double_orbit: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct TwistedDatum {
    label: String,
    absolute_type: CartanType,
    absolute: FiniteRootSystem,
    e: u32,
    sigma0: Vec<usize>,
    root_perm: Vec<usize>,
    orbits: Vec<Orbit>,
    orbit_of: Vec<usize>,
    sigma: FiniteRootSystem,
    sigma_simple_vectors: Vec<Vec<i64>>,
    sigma_meta: Vec<SigmaRootMeta>,
    vertex: VertexKind,
}

/// The standard automorphism of order `e` of a Dynkin diagram.
pub fn default_automorphism(ty: CartanType, e: u32) -> Option<Vec<usize>> {
    let n = ty.rank;
    match (e, ty.family) {
        (1, _) => Some((0..n).collect()),
        (2, Family::A) if n >= 2 => Some((0..n).map(|i| n - 1 - i).collect()),
        (2, Family::D) => {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(n - 2, n - 1);
            Some(p)
        }
        (2, Family::E) if n == 6 => Some(vec![5, 1, 4, 3, 2, 0]),
        (3, Family::D) if n == 4 => Some(vec![2, 1, 3, 0]),
        _ => None,
    }
}

fn compose_power(p: &[usize], k: u32) -> Vec<usize> {
    let mut out: Vec<usize> = (0..p.len()).collect();
    for _ in 0..k {
        out = out.iter().map(|&i| p[i]).collect();
    }
    out
}

fn check_automorphism(ty: CartanType, e: u32, p: &[usize]) -> Result<()> {
    let n = ty.rank;
    let bad = |why: &str| Err(Error::InvalidAutomorphism(format!("{p:?} on {ty}: {why}")));
    if p.len() != n {
        return bad("wrong length");
    }
    let mut seen = vec![false; n];
    for &i in p {
        if i >= n || seen[i] {
            return bad("not a permutation");
        }
        seen[i] = true;
    }
    let c = ty.cartan_matrix();
    if (0..n).any(|i| (0..n).any(|j| c[p[i]][p[j]] != c[i][j])) {
        return bad("does not preserve the Cartan matrix");
    }
    let id: Vec<usize> = (0..n).collect();
    if compose_power(p, e) != id {
        return bad("order does not divide e");
    }
    if e > 1 && p == id.as_slice() {
        return bad("identity has order 1");
    }
    Ok(())
}

fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

impl TwistedDatum {
    /// Parses labels such as `A3`, `2A3`, `3D4`.
    pub fn parse(label: &str) -> Result<Self> {
        let s = label.trim();
        let (e, rest) = match s.chars().next() {
            Some(c) if c.is_ascii_digit() => (c.to_digit(10).unwrap_or(0), &s[1..]),
            _ => (1, s),
        };
        let ty: CartanType = rest.parse().map_err(|_| Error::UnknownType(s.to_string()))?;
        Self::build(ty, e, None)
    }

    pub fn split(ty: CartanType) -> Self {
        Self::build(ty, 1, None).expect("the identity is always an automorphism")
    }

    pub fn build(ty: CartanType, e: u32, sigma0: Option<Vec<usize>>) -> Result<Self> {
        if !(1..=3).contains(&e) {
            return Err(Error::InvalidAutomorphism(format!("order {e} unsupported")));
        }
        if e > 1 && !ty.is_simply_laced() {
            return Err(Error::NotSimplyLaced(ty.to_string()));
        }
        let sigma0 = match sigma0 {
            Some(p) => p,
            None => default_automorphism(ty, e)
                .ok_or_else(|| Error::InvalidAutomorphism(format!("{ty} has no automorphism of order {e}")))?,
        };
        check_automorphism(ty, e, &sigma0)?;

        let absolute = FiniteRootSystem::build(ty);
        let n = ty.rank;
        let root_perm: Vec<usize> = absolute
            .roots()
            .iter()
            .map(|r| {
                let mut v = vec![0; n];
                for i in 0..n {
                    v[sigma0[i]] = r[i];
                }
                absolute.root_index(&v).expect("automorphisms permute roots")
            })
            .collect();

        let mut orbit_of = vec![usize::MAX; absolute.num_roots()];
        let mut orbits = Vec::new();
        for start in 0..absolute.num_roots() {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let mut roots = vec![start];
            let mut cur = root_perm[start];
            while cur != start {
                roots.push(cur);
                cur = root_perm[cur];
            }
            let orthogonal = roots.iter().enumerate().all(|(a, &x)| {
                roots[a + 1..].iter().all(|&y| inner(&absolute, absolute.root(x), absolute.root(y)) == 0)
            });
            for &r in &roots {
                orbit_of[r] = orbits.len();
            }
            orbits.push(Orbit { roots, orthogonal });
        }

        // modified norms of the simple orbits
        let mut simple_orbits: Vec<usize> = Vec::new();
        for i in 0..n {
            let o = orbit_of[absolute.simple_root_index(i)];
            if !simple_orbits.contains(&o) {
                simple_orbits.push(o);
            }
        }
        let modified_norm = |o: &Orbit| -> Vec<i64> {
            let mut v = vec![0; n];
            for &r in &o.roots {
                for (acc, x) in v.iter_mut().zip(absolute.root(r)) {
                    *acc += x;
                }
            }
            let f = if o.orthogonal { 1 } else { 2 };
            v.iter().map(|x| x * f).collect()
        };
        let images: Vec<Vec<i64>> = simple_orbits.iter().map(|&o| modified_norm(&orbits[o])).collect();
        let r = images.len();
        let raw: Vec<Vec<i64>> = (0..r).map(|a| (0..r).map(|b| inner(&absolute, &images[a], &images[b])).collect()).collect();
        let cartan: Vec<Vec<i64>> = (0..r).map(|a| (0..r).map(|b| 2 * raw[a][b] / raw[a][a]).collect()).collect();
        let comps = recognize(&cartan).ok_or_else(|| Error::Inconsistent("échelonnage matrix not of finite type".into()))?;
        let [comp] = comps.as_slice() else {
            return Err(Error::Inconsistent("échelonnage system is reducible".into()));
        };
        let sigma = FiniteRootSystem::build(comp.ty);
        let sigma_simple_vectors: Vec<Vec<i64>> = comp.indices.iter().map(|&k| images[k].clone()).collect();

        let mut by_direction: HashMap<Vec<i64>, usize> = HashMap::new();
        for s in 0..sigma.num_roots() {
            let v = expand(&sigma_simple_vectors, sigma.root(s), n);
            by_direction.insert(primitive(&v), s);
        }
        let mut attached: Vec<Vec<usize>> = vec![vec![]; sigma.num_roots()];
        for (oi, o) in orbits.iter().enumerate() {
            let mut v = vec![0; n];
            for &r in &o.roots {
                for (acc, x) in v.iter_mut().zip(absolute.root(r)) {
                    *acc += x;
                }
            }
            let s = *by_direction
                .get(&primitive(&v))
                .ok_or_else(|| Error::Inconsistent(format!("orbit {oi} has no proportional Σ-root")))?;
            attached[s].push(oi);
        }
        let sigma_meta = attached
            .iter()
            .enumerate()
            .map(|(s, os)| match os.as_slice() {
                [o] => Ok(SigmaRootMeta { d: orbits[*o].len(), multipliable: false, orbit: *o, double_orbit: None }),
                [a, b] => {
                    let (short, long) = if orbits[*a].orthogonal { (*b, *a) } else { (*a, *b) };
                    if orbits[short].orthogonal || orbits[short].len() != 2 || orbits[long].len() != 1 {
                        return Err(Error::Inconsistent(format!("Σ-root {s}: unexpected orbit pair")));
                    }
                    Ok(SigmaRootMeta { d: 2, multipliable: true, orbit: short, double_orbit: Some(long) })
                }
                _ => Err(Error::Inconsistent(format!("Σ-root {s} has {} orbits", os.len()))),
            })
            .collect::<Result<Vec<_>>>()?;

        let label = if e == 1 { ty.to_string() } else { format!("{e}{ty}") };
        Ok(Self {
            label,
            absolute_type: ty,
            absolute,
            e,
            sigma0,
            root_perm,
            orbits,
            orbit_of,
            sigma,
            sigma_simple_vectors,
            sigma_meta,
            vertex: VertexKind::AbsolutelySpecial,
        })
    }

    /// Same data, attached to a different vertex kind.
    pub fn with_vertex(mut self, vertex: VertexKind) -> Self {
        self.vertex = vertex;
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn absolute_type(&self) -> CartanType {
        self.absolute_type
    }

    pub fn absolute(&self) -> &FiniteRootSystem {
        &self.absolute
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn sigma0(&self) -> &[usize] {
        &self.sigma0
    }

    /// Action of σ₀ on absolute root indices.
    pub fn root_perm(&self) -> &[usize] {
        &self.root_perm
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn orbit_of(&self, root: usize) -> usize {
        self.orbit_of[root]
    }

    /// The échelonnage root system.
    pub fn sigma(&self) -> &FiniteRootSystem {
        &self.sigma
    }

    /// Modified norms of the simple orbits, indexed by the simple roots of Σ.
    pub fn sigma_simple_vectors(&self) -> &[Vec<i64>] {
        &self.sigma_simple_vectors
    }

    /// Σ-root `s` written in absolute simple-root coordinates.
    pub fn sigma_root_absolute(&self, s: usize) -> Vec<i64> {
        expand(&self.sigma_simple_vectors, self.sigma.root(s), self.absolute.rank())
    }

    pub fn meta(&self, s: usize) -> &SigmaRootMeta {
        &self.sigma_meta[s]
    }

    pub fn vertex(&self) -> VertexKind {
        self.vertex
    }

    pub fn is_split(&self) -> bool {
        self.e == 1
    }
}

fn inner(sys: &FiniteRootSystem, x: &[i64], y: &[i64]) -> i64 {
    let b = sys.form();
    let n = x.len();
    (0..n).map(|i| (0..n).map(|j| x[i] * b[i][j] * y[j]).sum::<i64>()).sum()
}

fn expand(basis: &[Vec<i64>], coeffs: &[i64], n: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    for (c, b) in coeffs.iter().zip(basis) {
        for (acc, x) in v.iter_mut().zip(b) {
            *acc += c * x;
        }
    }
    v
}
