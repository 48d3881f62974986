//! Sierpinski graphs S(n,m), Hamming graphs K_m^n and the single-twist
//! graph, all over the vertex set Z_m^n.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::vertex::{Dims, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphKind {
    Sierpinski,
    Hamming,
    SingleTwist,
    Custom,
}

impl GraphKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Sierpinski => "sierpinski",
            GraphKind::Hamming => "hamming",
            GraphKind::SingleTwist => "single_twist",
            GraphKind::Custom => "custom",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "sierpinski" => Some(GraphKind::Sierpinski),
            "hamming" => Some(GraphKind::Hamming),
            "single_twist" | "single-twist" => Some(GraphKind::SingleTwist),
            "custom" => Some(GraphKind::Custom),
            _ => None,
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An immutable graph on Z_m^n. Edges are held as sorted, deduplicated
/// rank pairs `(lo, hi)` with `lo < hi`; since ranks order vertices
/// lexicographically this is the canonical edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    dims: Dims,
    kind: GraphKind,
    edges: Vec<(u64, u64)>,
}

impl Graph {
    fn from_rank_pairs(dims: Dims, kind: GraphKind, mut edges: Vec<(u64, u64)>, exec: Execution) -> Self {
        par::sort_unstable(exec, &mut edges);
        edges.dedup();
        Graph { dims, kind, edges }
    }

    /// Builds a graph from arbitrary vertex pairs. Pairs are canonicalized;
    /// self-loops and foreign vertices are rejected.
    pub fn from_edges<I>(dims: Dims, kind: GraphKind, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let dims = Dims::bounded(dims.n, dims.m)?;
        let mut edges = Vec::new();
        for (u, v) in pairs {
            for w in [&u, &v] {
                dims.check(w)
                    .map_err(|e| Error::InvalidEdge(w.to_string(), e.to_string()))?;
            }
            if u == v {
                return Err(Error::InvalidEdge(u.to_string(), "self-loop".into()));
            }
            let (a, b) = (dims.rank(&u), dims.rank(&v));
            edges.push((a.min(b), a.max(b)));
        }
        Ok(Self::from_rank_pairs(dims, kind, edges, Execution::Sequential))
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn vertex_count(&self) -> u64 {
        self.dims.size()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_ranks(&self) -> &[(u64, u64)] {
        &self.edges
    }

    /// Edges in canonical (lexicographic) order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges
            .iter()
            .map(|&(a, b)| (self.dims.unrank(a), self.dims.unrank(b)))
    }

    pub fn contains_edge(&self, u: &Vertex, v: &Vertex) -> bool {
        if self.dims.check(u).is_err() || self.dims.check(v).is_err() {
            return false;
        }
        let (a, b) = (self.dims.rank(u), self.dims.rank(v));
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Degree of every vertex, indexed by rank.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.vertex_count() as usize];
        for &(a, b) in &self.edges {
            deg[a as usize] += 1;
            deg[b as usize] += 1;
        }
        deg
    }

    pub fn degree(&self, v: &Vertex) -> usize {
        let r = self.dims.rank(v);
        self.edges.iter().filter(|&&(a, b)| a == r || b == r).count()
    }

    /// Neighbour lists indexed by rank, each sorted.
    pub fn adjacency(&self) -> Vec<Vec<u64>> {
        let mut adj = vec![Vec::new(); self.vertex_count() as usize];
        for &(a, b) in &self.edges {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Breadth-first search from `source`: for every vertex (by rank) the
    /// distance, or `None` when unreachable, and the number of distinct
    /// shortest paths (saturating).
    pub fn geodesics_from(&self, source: &Vertex) -> Vec<(Option<u64>, u64)> {
        let adj = self.adjacency();
        let mut out = vec![(None, 0u64); adj.len()];
        let s = self.dims.rank(source) as usize;
        out[s] = (Some(0), 1);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let (du, cu) = out[u];
            let du = du.expect("queued vertices are labelled");
            for &w in &adj[u] {
                let w = w as usize;
                match out[w].0 {
                    None => {
                        out[w] = (Some(du + 1), cu);
                        queue.push_back(w);
                    }
                    Some(dw) if dw == du + 1 => out[w].1 = out[w].1.saturating_add(cu),
                    Some(_) => {}
                }
            }
        }
        out
    }

    /// The image of this graph under a vertex bijection given as a rank table.
    pub(crate) fn relabel(&self, image: &[u64], kind: GraphKind, exec: Execution) -> Graph {
        let edges = par::map_range(exec, self.edges.len() as u64, |i| {
            let (a, b) = self.edges[i as usize];
            let (x, y) = (image[a as usize], image[b as usize]);
            (x.min(y), x.max(y))
        });
        Self::from_rank_pairs(self.dims, kind, edges, exec)
    }
}

/// The three-condition adjacency rule of S(n,m): there is a level `h` with
/// `u` and `v` agreeing before `h`, differing at `h`, and every later digit
/// of `u` equal to `v_h` while every later digit of `v` equals `u_h`.
pub fn is_sierpinski_edge(u: &Vertex, v: &Vertex) -> Result<bool> {
    u.dims().check(v)?;
    let (a, b) = (u.digits(), v.digits());
    let Some(h) = a.iter().zip(b).position(|(x, y)| x != y) else {
        return Ok(false);
    };
    Ok(a[h + 1..].iter().all(|&x| x == b[h]) && b[h + 1..].iter().all(|&y| y == a[h]))
}

/// The unique exterior neighbour of a non-constant vertex: for
/// `v = w a b^k` (with `a != b`) it is `w b a^k`.
pub fn exterior_neighbor(v: &Vertex) -> Option<Vertex> {
    let d = v.digits();
    let last = *d.last()?;
    let h = d.iter().rposition(|&x| x != last)?;
    let mut digits = d[..h].to_vec();
    digits.push(last);
    digits.extend(std::iter::repeat(d[h]).take(d.len() - h - 1));
    Some(Vertex::from_reduced(digits, v.m()))
}

pub fn build_sierpinski(n: usize, m: u32) -> Result<Graph> {
    build_sierpinski_with(n, m, Execution::default())
}

pub fn build_sierpinski_with(n: usize, m: u32, exec: Execution) -> Result<Graph> {
    let dims = Dims::bounded(n, m)?;
    let edges = par::flat_map_range(exec, dims.size(), |r| {
        let v = dims.unrank(r);
        let mut out = Vec::with_capacity(m as usize);
        let last = n - 1;
        for d in v.digits()[last] + 1..m {
            out.push((r, r - u64::from(v.digits()[last]) + u64::from(d)));
        }
        if let Some(u) = exterior_neighbor(&v) {
            let s = dims.rank(&u);
            if s > r {
                out.push((r, s));
            }
        }
        out
    });
    Ok(Graph::from_rank_pairs(dims, GraphKind::Sierpinski, edges, exec))
}

/// S(n,m) by the self-similar construction: S(1,m) = K_m, and S(n,m) is
/// `m` prefixed copies of S(n-1,m) plus the bridges `{i j^(n-1), j i^(n-1)}`.
pub fn build_sierpinski_recursive(n: usize, m: u32) -> Result<Graph> {
    let dims = Dims::bounded(n, m)?;
    let mm = u64::from(m);
    let mut edges: Vec<(u64, u64)> = (0..mm)
        .flat_map(|i| (i + 1..mm).map(move |j| (i, j)))
        .collect();
    let mut block = mm;
    for level in 2..=n {
        let sub = Dims { n: level - 1, m };
        let mut next = Vec::with_capacity(edges.len() * m as usize + (m * m) as usize);
        for i in 0..mm {
            next.extend(edges.iter().map(|&(a, b)| (i * block + a, i * block + b)));
        }
        for i in 0..m {
            for j in i + 1..m {
                let ij = u64::from(i) * block + sub.rank(&sub.constant(j));
                let ji = u64::from(j) * block + sub.rank(&sub.constant(i));
                next.push((ij.min(ji), ij.max(ji)));
            }
        }
        edges = next;
        block *= mm;
    }
    Ok(Graph::from_rank_pairs(dims, GraphKind::Sierpinski, edges, Execution::Sequential))
}

pub fn build_hamming(n: usize, m: u32) -> Result<Graph> {
    build_hamming_with(n, m, Execution::default())
}

pub fn build_hamming_with(n: usize, m: u32, exec: Execution) -> Result<Graph> {
    let dims = Dims::bounded(n, m)?;
    let edges = par::flat_map_range(exec, dims.size(), |r| {
        let digits = dims.unrank_digits(r);
        let mut out = Vec::new();
        let mut place = 1u64;
        for &d in digits.iter().rev() {
            for e in d + 1..m {
                out.push((r, r + u64::from(e - d) * place));
            }
            place *= u64::from(m);
        }
        out
    });
    Ok(Graph::from_rank_pairs(dims, GraphKind::Hamming, edges, exec))
}

/// The single-twist graph: for each level `h`, join `w i k^(n-h)` and
/// `w j k^(n-h)` whenever `i != j` and `i + j = k (mod m)`. At `h = n` the
/// suffix is empty and every pair `i != j` is joined.
pub fn build_single_twist(n: usize, m: u32) -> Result<Graph> {
    build_single_twist_with(n, m, Execution::default())
}

pub fn build_single_twist_with(n: usize, m: u32, exec: Execution) -> Result<Graph> {
    let dims = Dims::bounded(n, m)?;
    let edges = par::flat_map_range(exec, dims.size(), |r| {
        let mut digits = dims.unrank_digits(r);
        let mut out = Vec::new();
        let last = n - 1;
        let i = digits[last];
        for j in i + 1..m {
            digits[last] = j;
            out.push((r, dims.rank_digits(&digits)));
        }
        digits[last] = i;
        // h < n: the suffix after position p must be constant
        for p in (0..last).rev() {
            let k = digits[p + 1];
            if p + 2 <= last && digits[p + 2] != k {
                break;
            }
            let i = digits[p];
            let j = (k + m - i) % m;
            if j != i {
                digits[p] = j;
                let s = dims.rank_digits(&digits);
                digits[p] = i;
                if s > r {
                    out.push((r, s));
                }
            }
        }
        out
    });
    Ok(Graph::from_rank_pairs(dims, GraphKind::SingleTwist, edges, exec))
}

/// The constant vertices `i^n`, the corners of S(n,m).
pub fn corners(n: usize, m: u32) -> Result<Vec<Vertex>> {
    let dims = Dims::new(n, m)?;
    Ok((0..m).map(|i| dims.constant(i)).collect())
}

/// The blocks `{w x : x in Z_m}` for every prefix `w` of length n-1; each
/// induces a K_m in S(n,m) and together they partition the vertex set.
pub fn km_decomposition(n: usize, m: u32) -> Result<Vec<Vec<Vertex>>> {
    let dims = Dims::bounded(n, m)?;
    let blocks = dims.size() / u64::from(m);
    Ok((0..blocks)
        .map(|b| {
            (0..u64::from(m))
                .map(|x| dims.unrank(b * u64::from(m) + x))
                .collect()
        })
        .collect())
}

pub fn vertex_count(n: usize, m: u32) -> BigUint {
    BigUint::from(m).pow(n as u32)
}

/// (m^{n+1} - m) / 2
pub fn sierpinski_edge_count(n: usize, m: u32) -> BigUint {
    (BigUint::from(m).pow(n as u32 + 1) - BigUint::from(m)) / 2u32
}

/// n (m - 1) m^n / 2
pub fn hamming_edge_count(n: usize, m: u32) -> BigUint {
    BigUint::from(n) * BigUint::from(m - 1) * vertex_count(n, m) / 2u32
}

/// |E(S(n,m))| / |E(K_m^n)| as an exact fraction, which reduces to
/// `(m^n - 1) / (n (m - 1) m^{n-1})`. It equals `1/n` only when n = 1.
pub fn edge_density(n: usize, m: u32) -> Result<BigRational> {
    Dims::new(n, m)?;
    let num = sierpinski_edge_count(n, m);
    let den = hamming_edge_count(n, m);
    debug_assert!(!den.is_zero());
    Ok(BigRational::new(num.into(), den.into()))
}

/// Degree multiset of S(n,m) as `(degree, multiplicity)` pairs.
pub fn sierpinski_degree_sequence(n: usize, m: u32) -> Vec<(usize, BigUint)> {
    let m_big = BigUint::from(m);
    if n == 1 {
        return vec![(m as usize - 1, m_big)];
    }
    vec![
        (m as usize - 1, m_big.clone()),
        (m as usize, vertex_count(n, m) - m_big),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn v(s: &str, m: u32) -> Vertex {
        Vertex::parse(s, m).unwrap()
    }

    fn one_over(n: usize) -> BigRational {
        BigRational::new(BigUint::one().into(), BigUint::from(n).into())
    }

    #[test]
    fn edge_rule_examples() {
        assert!(is_sierpinski_edge(&v("011", 2), &v("100", 2)).unwrap());
        assert!(is_sierpinski_edge(&v("00", 3), &v("02", 3)).unwrap());
        assert!(!is_sierpinski_edge(&v("012", 3), &v("120", 3)).unwrap());
        assert!(!is_sierpinski_edge(&v("012", 3), &v("012", 3)).unwrap());
        assert!(is_sierpinski_edge(&v("01", 3), &v("012", 3)).is_err());
        assert!(is_sierpinski_edge(&v("01", 3), &v("01", 4)).is_err());
    }

    #[test]
    fn s1_is_complete() {
        for m in 2..7 {
            let g = build_sierpinski(1, m).unwrap();
            assert_eq!(g.edge_count() as u32, m * (m - 1) / 2);
            assert_eq!(g, Graph { kind: GraphKind::Sierpinski, ..build_hamming(1, m).unwrap() });
        }
    }

    #[test]
    fn s33_counts() {
        let g = build_sierpinski(3, 3).unwrap();
        assert_eq!(g.vertex_count(), 27);
        assert_eq!(g.edge_count(), 39);
        for c in corners(3, 3).unwrap() {
            assert_eq!(g.degree(&c), 2);
        }
    }

    #[test]
    fn s_n2_is_a_path_in_binary_order() {
        for n in 1..=8 {
            let g = build_sierpinski(n, 2).unwrap();
            let expected: Vec<(u64, u64)> = (0..(1u64 << n) - 1).map(|r| (r, r + 1)).collect();
            assert_eq!(g.edge_ranks(), expected.as_slice());
            assert_eq!(corners(n, 2).unwrap(), vec![Dims::new(n, 2).unwrap().constant(0), Dims::new(n, 2).unwrap().constant(1)]);
        }
    }

    #[test]
    fn hamming_examples() {
        assert_eq!(build_hamming(1, 4).unwrap().edge_count(), 6);
        assert_eq!(build_hamming(3, 2).unwrap().edge_count(), 12);
        let g = build_hamming(2, 3).unwrap();
        assert_eq!(g.vertex_count(), 9);
        // exhaustive pair enumeration
        let dims = g.dims();
        let all: Vec<Vertex> = dims.vertices().collect();
        let mut brute = 0;
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                if a.hamming_distance(b) == 1 {
                    brute += 1;
                    assert!(g.contains_edge(a, b));
                }
            }
        }
        assert_eq!(brute, 18);
        assert_eq!(g.edge_count(), 18);
    }

    #[test]
    fn single_twist_counterexample_vertex() {
        let g = build_single_twist(3, 3).unwrap();
        let x = v("011", 3);
        assert_eq!(g.degree(&x), 4);
        for y in ["010", "012", "001", "111"] {
            assert!(g.contains_edge(&x, &v(y, 3)), "{y}");
        }
        assert_eq!(g.edges().filter(|(a, b)| a.hamming_distance(b) != 1).count(), 0);
    }

    #[test]
    fn single_twist_edge_count_matches_sierpinski() {
        for n in 1..=5 {
            for m in 2..=5 {
                let g = build_single_twist(n, m).unwrap();
                assert_eq!(BigUint::from(g.edge_count()), sierpinski_edge_count(n, m), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn decomposition_blocks() {
        assert_eq!(km_decomposition(1, 4).unwrap().len(), 1);
        let blocks = km_decomposition(2, 3).unwrap();
        assert_eq!(blocks.len(), 3);
        let g = build_sierpinski(2, 3).unwrap();
        for block in &blocks {
            assert_eq!(block.len(), 3);
            for (i, a) in block.iter().enumerate() {
                for b in &block[i + 1..] {
                    assert!(g.contains_edge(a, b));
                }
            }
        }
    }

    #[test]
    fn exterior_edges_match_rule() {
        let g = build_sierpinski(3, 4).unwrap();
        for x in g.dims().vertices() {
            match exterior_neighbor(&x) {
                None => assert!(x.is_constant()),
                Some(y) => {
                    assert!(is_sierpinski_edge(&x, &y).unwrap());
                    assert_eq!(exterior_neighbor(&y), Some(x.clone()));
                }
            }
        }
    }

    #[test]
    fn density() {
        assert_eq!(edge_density(1, 7).unwrap(), one_over(1));
        // 120 / 324 and 31 / 80 by direct edge counts
        let ratio = |a: u32, b: u32| BigRational::new(BigUint::from(a).into(), BigUint::from(b).into());
        assert_eq!(edge_density(4, 3).unwrap(), ratio(10, 27));
        assert_eq!(edge_density(5, 2).unwrap(), ratio(31, 80));
        for n in 1..=5 {
            for m in 2..=5 {
                let s = build_sierpinski(n, m).unwrap().edge_count() as u32;
                let k = build_hamming(n, m).unwrap().edge_count() as u32;
                assert_eq!(edge_density(n, m).unwrap(), ratio(s, k));
            }
        }
        assert!(edge_density(0, 3).is_err());
    }

    #[test]
    fn custom_graph_validation() {
        let dims = Dims::new(2, 3).unwrap();
        assert!(Graph::from_edges(dims, GraphKind::Custom, [(v("00", 3), v("00", 3))]).is_err());
        assert!(Graph::from_edges(dims, GraphKind::Custom, [(v("00", 3), v("000", 3))]).is_err());
        let g = Graph::from_edges(dims, GraphKind::Custom, [(v("12", 3), v("01", 3)), (v("01", 3), v("12", 3))]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges().next().unwrap(), (v("01", 3), v("12", 3)));
    }

    #[test]
    fn guard_rejects_huge() {
        assert!(matches!(build_sierpinski(15, 3), Err(Error::TooLarge { .. })));
        assert!(build_sierpinski(2, 100).is_ok());
        assert_eq!(sierpinski_edge_count(40, 7), (BigUint::from(7u32).pow(41) - 7u32) / 2u32);
    }

    #[test]
    fn bfs_on_path() {
        let g = build_sierpinski(3, 2).unwrap();
        let res = g.geodesics_from(&Dims::new(3, 2).unwrap().constant(0));
        for (r, &(d, c)) in res.iter().enumerate() {
            assert_eq!(d, Some(r as u64));
            assert_eq!(c, 1);
        }
    }
}
