//! Embeddings of S(n,m) into the Hamming graph K_m^n.
//!
//! Each map is available three ways: as a closed-form formula, as a
//! literal recursion over the self-similar structure of S(n,m), and as a
//! lower-triangular [`LinearMap`]. The test suite checks them against each
//! other.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind};
use crate::linear::LinearMap;
use crate::modular;
use crate::par::{self, Execution};
use crate::symmetry::PermutationSymmetry;
use crate::vertex::{Dims, Vertex};

/// Per-level multipliers `(c_1, ..., c_n)`, each a unit mod m.
///
/// At recursion step `k >= 2` (splitting off coordinate `k`) the copy of
/// S(n-k+1, m) prefixed by `i` is relabelled through the permutation
/// `j -> c_k (i + j) mod m`. `c_1` belongs to the base case S(1,m) = K_m,
/// which is normalized to the identity, so it never changes the map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwistFamily {
    m: u32,
    multipliers: Vec<u32>,
}

impl TwistFamily {
    pub fn new(m: u32, multipliers: Vec<u32>) -> Result<Self> {
        Dims::new(multipliers.len(), m)?;
        let multipliers: Vec<u32> = multipliers.into_iter().map(|c| c % m).collect();
        if let Some(&c) = multipliers.iter().find(|&&c| !modular::is_unit(c, m)) {
            return Err(Error::NotCoprime { c, m });
        }
        Ok(TwistFamily { m, multipliers })
    }

    pub fn constant(n: usize, m: u32, c: u32) -> Result<Self> {
        Self::new(m, vec![c; n])
    }

    /// All multipliers 1: the family of `phi`.
    pub fn phi(n: usize, m: u32) -> Result<Self> {
        Self::constant(n, m, 1)
    }

    /// All multipliers 2^{-1}: the family of `tau` (odd m only).
    pub fn tau(n: usize, m: u32) -> Result<Self> {
        let half = modular::half(m).ok_or(Error::EvenModulus(m))?;
        Self::constant(n, m, half)
    }

    /// Every family of length `n`: phi(m)^n of them, in lexicographic order.
    pub fn all(n: usize, m: u32) -> Result<Vec<Self>> {
        Dims::new(n, m)?;
        let units = modular::units(m);
        let mut out: Vec<Vec<u32>> = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    units.iter().map(move |&c| {
                        let mut p = prefix.clone();
                        p.push(c);
                        p
                    })
                })
                .collect();
        }
        Ok(out.into_iter().map(|multipliers| TwistFamily { m, multipliers }).collect())
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.multipliers.len()
    }

    pub fn multipliers(&self) -> &[u32] {
        &self.multipliers
    }

    /// Scale applied to output coordinate `i` (0-based) relative to `phi`:
    /// the product `c_2 ... c_{i+1}`.
    pub fn row_scale(&self, i: usize) -> u32 {
        self.multipliers[1..=i]
            .iter()
            .fold(1 % self.m, |acc, &c| modular::mul(acc, c, self.m))
    }
}

impl fmt::Display for TwistFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.multipliers.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// phi: coordinate `i` of the image is `v_i + sum_{j<i} 2^{i-1-j} v_j (mod m)`.
pub fn phi_forward(v: &Vertex) -> Vertex {
    let m = v.m();
    let mut out = Vec::with_capacity(v.n());
    // running value of sum_{j<i} 2^{i-1-j} v_j
    let mut carry = 0u32;
    for &d in v.digits() {
        out.push(modular::add(carry, d, m));
        carry = modular::add(modular::mul(carry, 2, m), d, m);
    }
    Vertex::from_reduced(out, m)
}

/// phi^{-1}: coordinate `i` is `w_i - sum_{j<i} w_j (mod m)`.
pub fn phi_inverse(w: &Vertex) -> Vertex {
    let m = w.m();
    let mut prefix = 0u32;
    let out = w
        .digits()
        .iter()
        .map(|&d| {
            let x = modular::sub(d, prefix, m);
            prefix = modular::add(prefix, d, m);
            x
        })
        .collect();
    Vertex::from_reduced(out, m)
}

/// phi evaluated over the integers, without reduction.
pub fn phi_forward_integer(v: &[i128]) -> Vec<i128> {
    let mut carry = 0i128;
    v.iter()
        .map(|&d| {
            let out = carry + d;
            carry = 2 * carry + d;
            out
        })
        .collect()
}

/// phi^{-1} evaluated over the integers, without reduction.
pub fn phi_inverse_integer(w: &[i128]) -> Vec<i128> {
    let mut prefix = 0i128;
    w.iter()
        .map(|&d| {
            let out = d - prefix;
            prefix += d;
            out
        })
        .collect()
}

/// tau (odd m): `t_i = 2^{-(i-1)} phi(v)_i (mod m)`. Fixes every corner.
pub fn tau_forward(v: &Vertex) -> Result<Vertex> {
    let m = v.m();
    let half = modular::half(m).ok_or(Error::EvenModulus(m))?;
    let mut scale = 1 % m;
    let out = phi_forward(v)
        .into_digits()
        .into_iter()
        .map(|x| {
            let t = modular::mul(scale, x, m);
            scale = modular::mul(scale, half, m);
            t
        })
        .collect();
    Ok(Vertex::from_reduced(out, m))
}

/// tau^{-1} (odd m): `v_i = 2^{i-1} t_i - sum_{j<i} 2^{j-1} t_j (mod m)`.
pub fn tau_inverse(t: &Vertex) -> Result<Vertex> {
    let m = t.m();
    if modular::half(m).is_none() {
        return Err(Error::EvenModulus(m));
    }
    let mut pow2 = 1 % m;
    let mut prefix = 0u32;
    let out = t
        .digits()
        .iter()
        .map(|&d| {
            let scaled = modular::mul(pow2, d, m);
            let v = modular::sub(scaled, prefix, m);
            prefix = modular::add(prefix, scaled, m);
            pow2 = modular::mul(pow2, 2, m);
            v
        })
        .collect();
    Ok(Vertex::from_reduced(out, m))
}

/// The generalized embedding, evaluated by unrolling its recursion on a
/// single vertex: emit the leading digit `h`, then twist the remaining
/// digits `x -> c (h + x)` with the next multiplier and recurse.
pub fn epsilon_forward(v: &Vertex, tw: &TwistFamily) -> Result<Vertex> {
    if v.n() != tw.n() || v.m() != tw.m() {
        return Err(Error::DimensionMismatch { n1: tw.n(), m1: tw.m(), n2: v.n(), m2: v.m() });
    }
    let m = v.m();
    let mut rest = v.digits().to_vec();
    let mut out = Vec::with_capacity(rest.len());
    for k in 0..v.n() {
        let head = rest[0];
        out.push(head);
        if k + 1 < v.n() {
            let c = tw.multipliers[k + 1];
            rest = rest[1..]
                .iter()
                .map(|&x| modular::mul(c, modular::add(head, x, m), m))
                .collect();
        }
    }
    Ok(Vertex::from_reduced(out, m))
}

/// The one-level twist `(v_1, v_1 + v_2, ..., v_1 + v_n)`: the top-level
/// relabelling of `phi` applied over the untwisted coordinatization of
/// S(n-1,m). Agrees with `phi` for n <= 2 and fails to embed for n >= 3.
pub fn single_twist_forward(v: &Vertex) -> Vertex {
    let m = v.m();
    let head = v.digits()[0];
    let out = v
        .digits()
        .iter()
        .enumerate()
        .map(|(i, &d)| if i == 0 { d } else { modular::add(head, d, m) })
        .collect();
    Vertex::from_reduced(out, m)
}

/// Which closed-form embedding a matrix or table describes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbeddingKind {
    Phi,
    Tau,
    Epsilon(TwistFamily),
}

/// The lower-triangular coefficient matrix of an embedding.
pub fn embedding_matrix(kind: &EmbeddingKind, n: usize, m: u32) -> Result<LinearMap> {
    Dims::new(n, m)?;
    let phi_row = |i: usize| -> Vec<u32> {
        (0..n)
            .map(|j| match j.cmp(&i) {
                std::cmp::Ordering::Less => modular::pow(2, (i - 1 - j) as u64, m),
                std::cmp::Ordering::Equal => 1 % m,
                std::cmp::Ordering::Greater => 0,
            })
            .collect()
    };
    let scales: Vec<u32> = match kind {
        EmbeddingKind::Phi => vec![1; n],
        EmbeddingKind::Tau => {
            let half = modular::half(m).ok_or(Error::EvenModulus(m))?;
            (0..n).map(|i| modular::pow(half, i as u64, m)).collect()
        }
        EmbeddingKind::Epsilon(tw) => {
            if tw.n() != n || tw.m() != m {
                return Err(Error::DimensionMismatch { n1: n, m1: m, n2: tw.n(), m2: tw.m() });
            }
            (0..n).map(|i| tw.row_scale(i)).collect()
        }
    };
    let rows = (0..n)
        .map(|i| phi_row(i).into_iter().map(|x| modular::mul(x, scales[i], m)).collect())
        .collect();
    Ok(LinearMap::from_rows_unchecked(m, rows))
}

/// A total function on Z_m^n stored as a rank table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    dims: Dims,
    image: Vec<u64>,
}

impl VertexMap {
    pub fn from_fn<F>(dims: Dims, exec: Execution, f: F) -> Result<Self>
    where
        F: Fn(&Vertex) -> Vertex + Sync + Send,
    {
        let dims = Dims::bounded(dims.n, dims.m)?;
        let image = par::map_range(exec, dims.size(), |r| dims.rank(&f(&dims.unrank(r))));
        Ok(VertexMap { dims, image })
    }

    /// Like [`VertexMap::from_fn`] for a fallible map; the first error wins.
    pub fn try_from_fn<F>(dims: Dims, exec: Execution, f: F) -> Result<Self>
    where
        F: Fn(&Vertex) -> Result<Vertex> + Sync + Send,
    {
        let dims = Dims::bounded(dims.n, dims.m)?;
        let image = par::map_range(exec, dims.size(), |r| f(&dims.unrank(r)).map(|w| dims.rank(&w)))
            .into_iter()
            .collect::<Result<Vec<u64>>>()?;
        Ok(VertexMap { dims, image })
    }

    pub fn from_ranks(dims: Dims, image: Vec<u64>) -> Result<Self> {
        let dims = Dims::bounded(dims.n, dims.m)?;
        if image.len() as u64 != dims.size() || image.iter().any(|&r| r >= dims.size()) {
            return Err(Error::Unsupported("rank table does not cover the vertex set".into()));
        }
        Ok(VertexMap { dims, image })
    }

    pub fn identity(dims: Dims) -> Result<Self> {
        let dims = Dims::bounded(dims.n, dims.m)?;
        Ok(VertexMap { dims, image: (0..dims.size()).collect() })
    }

    pub fn from_linear(lm: &LinearMap, exec: Execution) -> Result<Self> {
        let dims = Dims::new(lm.n(), lm.m())?;
        Self::from_fn(dims, exec, |v| Vertex::from_reduced(lm.apply_digits(v.digits()), v.m()))
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn ranks(&self) -> &[u64] {
        &self.image
    }

    pub fn apply(&self, v: &Vertex) -> Result<Vertex> {
        self.dims.check(v)?;
        Ok(self.dims.unrank(self.image[self.dims.rank(v) as usize]))
    }

    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.image.len()];
        self.image
            .iter()
            .all(|&r| !std::mem::replace(&mut seen[r as usize], true))
    }

    pub fn inverse(&self) -> Option<VertexMap> {
        if !self.is_bijection() {
            return None;
        }
        let mut inv = vec![0u64; self.image.len()];
        for (r, &s) in self.image.iter().enumerate() {
            inv[s as usize] = r as u64;
        }
        Some(VertexMap { dims: self.dims, image: inv })
    }

    /// The image graph `{ {f(u), f(v)} : {u,v} in g }`, requires a bijection.
    pub fn image_graph(&self, g: &Graph, exec: Execution) -> Result<Graph> {
        if g.dims() != self.dims {
            return Err(Error::DimensionMismatch { n1: self.dims.n, m1: self.dims.m, n2: g.dims().n, m2: g.dims().m });
        }
        if !self.is_bijection() {
            return Err(Error::Unsupported("image graph of a non-bijective map".into()));
        }
        Ok(g.relabel(&self.image, GraphKind::Custom, exec))
    }

    /// True when the m corners are sent onto the m constant vertices.
    pub fn has_constant_corners(&self) -> bool {
        (0..self.dims.m).all(|i| {
            let c = self.dims.constant(i);
            self.dims.unrank(self.image[self.dims.rank(&c) as usize]).is_constant()
        })
    }

    /// Two-column `vertex,image` CSV in lexicographic order of the domain.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("vertex,image\n");
        for (r, &s) in self.image.iter().enumerate() {
            out.push_str(&format!("{},{}\n", self.dims.unrank(r as u64), self.dims.unrank(s)));
        }
        out
    }
}

/// The generalized embedding built by literal recursion on tables: the map
/// on `{i} x S(k,m)` is the next-level map precomposed with the unique
/// symmetry of S(k,m) extending `j -> c (i + j)`.
pub fn epsilon_recursive(tw: &TwistFamily) -> Result<VertexMap> {
    epsilon_recursive_with(tw, Execution::default())
}

pub fn epsilon_recursive_with(tw: &TwistFamily, exec: Execution) -> Result<VertexMap> {
    let n = tw.n();
    let m = tw.m();
    let full = Dims::bounded(n, m)?;
    // level of dimension 1: identity on K_m
    let mut table: Vec<u64> = (0..u64::from(m)).collect();
    for level in (0..n - 1).rev() {
        let sub = Dims { n: n - level - 1, m };
        let dims = Dims { n: n - level, m };
        let c = tw.multipliers[level + 1];
        let twists: Vec<PermutationSymmetry> = (0..m)
            .map(|i| PermutationSymmetry::affine(m, c, i))
            .collect::<Result<_>>()?;
        let block = sub.size();
        let prev = &table;
        table = par::map_range(exec, dims.size(), |r| {
            let (i, w) = (r / block, r % block);
            let twisted = twists[i as usize].apply_digits(&sub.unrank_digits(w));
            i * block + prev[sub.rank_digits(&twisted) as usize]
        });
    }
    VertexMap::from_ranks(full, table)
}

/// phi by literal recursion; must agree with [`phi_forward`] everywhere.
pub fn phi_recursive(n: usize, m: u32) -> Result<VertexMap> {
    epsilon_recursive(&TwistFamily::phi(n, m)?)
}

/// The table of a closed-form embedding over all of Z_m^n.
pub fn embedding_table(kind: &EmbeddingKind, n: usize, m: u32, exec: Execution) -> Result<VertexMap> {
    let dims = Dims::bounded(n, m)?;
    match kind {
        EmbeddingKind::Phi => VertexMap::from_fn(dims, exec, phi_forward),
        EmbeddingKind::Tau => {
            modular::half(m).ok_or(Error::EvenModulus(m))?;
            VertexMap::try_from_fn(dims, exec, tau_forward)
        }
        EmbeddingKind::Epsilon(tw) => VertexMap::try_from_fn(dims, exec, |v| epsilon_forward(v, tw)),
    }
}
