//! Certificates that a vertex map is an embedding of S(n,m) into K_m^n,
//! plus layout metrics and a structural check for candidate graphs.
//!
//! A bijection whose image edges all sit at Hamming distance 1 is an
//! isomorphism from S(n,m) onto a subgraph of K_m^n, so no general
//! isomorphism search is needed for maps.

use petgraph::algo::is_isomorphic;
use petgraph::graphmap::UnGraphMap;
use serde::Serialize;

use crate::error::Result;
use crate::graph::{build_sierpinski_with, Graph};
use crate::embedding::VertexMap;
use crate::par::{self, Execution};
use crate::vertex::Vertex;

/// Violations kept verbatim in a report; the count covers all of them.
pub const MAX_REPORTED_VIOLATIONS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeViolation {
    pub u: String,
    pub v: String,
    pub image_u: String,
    pub image_v: String,
    pub distance: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub n: usize,
    pub m: u32,
    pub is_bijection: bool,
    pub all_edges_distance_one: bool,
    pub edge_count_preserved: bool,
    pub violation_count: usize,
    pub violations: Vec<EdgeViolation>,
    pub verdict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LayoutMetrics {
    pub wirelength: u64,
    pub bandwidth: usize,
}

#[derive(Clone, Default)]
struct EdgeScan {
    bad: usize,
    first: Vec<(u64, u64, usize)>,
    wirelength: u64,
    bandwidth: usize,
}

impl EdgeScan {
    fn merge(mut self, other: EdgeScan) -> EdgeScan {
        self.bad += other.bad;
        let room = MAX_REPORTED_VIOLATIONS - self.first.len().min(MAX_REPORTED_VIOLATIONS);
        self.first.extend(other.first.into_iter().take(room));
        self.wirelength += other.wirelength;
        self.bandwidth = self.bandwidth.max(other.bandwidth);
        self
    }
}

fn scan_edges(map: &VertexMap, s: &Graph, exec: Execution) -> EdgeScan {
    let dims = map.dims();
    let image = map.ranks();
    let step = |mut acc: EdgeScan, &(a, b): &(u64, u64)| {
        let x = dims.unrank_digits(image[a as usize]);
        let y = dims.unrank_digits(image[b as usize]);
        let d = x.iter().zip(&y).filter(|(p, q)| p != q).count();
        acc.wirelength += d as u64;
        acc.bandwidth = acc.bandwidth.max(d);
        if d != 1 {
            acc.bad += 1;
            if acc.first.len() < MAX_REPORTED_VIOLATIONS {
                acc.first.push((a, b, d));
            }
        }
        acc
    };
    par::fold_slice(exec, s.edge_ranks(), EdgeScan::default(), step, EdgeScan::merge)
}

pub fn verify_embedding(map: &VertexMap) -> Result<EmbeddingReport> {
    verify_embedding_with(map, Execution::default())
}

pub fn verify_embedding_with(map: &VertexMap, exec: Execution) -> Result<EmbeddingReport> {
    let dims = map.dims();
    let s = build_sierpinski_with(dims.n, dims.m, exec)?;
    let is_bijection = map.is_bijection();
    let scan = scan_edges(map, &s, exec);
    let edge_count_preserved = if is_bijection {
        // a bijection carries distinct edges to distinct pairs
        true
    } else {
        let mut pairs: Vec<(u64, u64)> = s
            .edge_ranks()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (map.ranks()[a as usize], map.ranks()[b as usize]);
                (x.min(y), x.max(y))
            })
            .filter(|(x, y)| x != y)
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        pairs.len() == s.edge_count()
    };
    let violations = scan
        .first
        .iter()
        .map(|&(a, b, distance)| EdgeViolation {
            u: dims.unrank(a).to_string(),
            v: dims.unrank(b).to_string(),
            image_u: dims.unrank(map.ranks()[a as usize]).to_string(),
            image_v: dims.unrank(map.ranks()[b as usize]).to_string(),
            distance,
        })
        .collect();
    let all_edges_distance_one = scan.bad == 0;
    Ok(EmbeddingReport {
        n: dims.n,
        m: dims.m,
        is_bijection,
        all_edges_distance_one,
        edge_count_preserved,
        violation_count: scan.bad,
        violations,
        verdict: is_bijection && all_edges_distance_one && edge_count_preserved,
    })
}

/// Wirelength and bandwidth of the layout of S(n,m) on K_m^n induced by
/// `map`: the sum and maximum of Hamming distances over image edges.
pub fn layout_metrics(map: &VertexMap) -> Result<LayoutMetrics> {
    layout_metrics_with(map, Execution::default())
}

pub fn layout_metrics_with(map: &VertexMap, exec: Execution) -> Result<LayoutMetrics> {
    let dims = map.dims();
    let s = build_sierpinski_with(dims.n, dims.m, exec)?;
    let scan = scan_edges(map, &s, exec);
    Ok(LayoutMetrics {
        wirelength: scan.wirelength,
        bandwidth: scan.bandwidth,
    })
}

/// Vertex counts above which the isomorphism search is skipped.
pub const ISOMORPHISM_SEARCH_LIMIT: u64 = 4096;

/// Structural check of a candidate coordinatization of S(n,m) given as a
/// graph on Z_m^n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoordinatizationReport {
    pub n: usize,
    pub m: u32,
    pub subgraph_of_hamming: bool,
    pub edge_count_matches: bool,
    pub degree_sequence_matches: bool,
    /// A vertex whose degree is impossible in S(n,m), with that degree.
    pub degree_violation: Option<(String, usize)>,
    /// First edge whose endpoints differ in more than one coordinate.
    pub distance_violation: Option<(String, String, usize)>,
    /// `None` when the cheap checks already failed or the graph is too big.
    pub isomorphic: Option<bool>,
    pub verdict: bool,
}

pub fn verify_coordinatization(g: &Graph) -> Result<CoordinatizationReport> {
    let dims = g.dims();
    let s = build_sierpinski_with(dims.n, dims.m, Execution::default())?;
    let distance_violation = g
        .edges()
        .map(|(a, b)| {
            let d = a.hamming_distance(&b);
            (a, b, d)
        })
        .find(|&(_, _, d)| d != 1)
        .map(|(a, b, d)| (a.to_string(), b.to_string(), d));
    let edge_count_matches = g.edge_count() == s.edge_count();

    let mut expected = s.degrees();
    let degrees = g.degrees();
    let max_deg = dims.m as usize;
    let degree_violation = degrees
        .iter()
        .enumerate()
        .find(|&(_, &d)| d > max_deg || d + 1 < max_deg)
        .map(|(r, &d)| (dims.unrank(r as u64).to_string(), d));
    let mut actual = degrees;
    expected.sort_unstable();
    actual.sort_unstable();
    let degree_sequence_matches = expected == actual;

    let cheap_ok = edge_count_matches && degree_sequence_matches;
    let isomorphic = (cheap_ok && g.vertex_count() <= ISOMORPHISM_SEARCH_LIMIT)
        .then(|| is_isomorphic(&to_petgraph(&s), &to_petgraph(g)));
    let subgraph_of_hamming = distance_violation.is_none();
    Ok(CoordinatizationReport {
        n: dims.n,
        m: dims.m,
        subgraph_of_hamming,
        edge_count_matches,
        degree_sequence_matches,
        degree_violation,
        distance_violation,
        isomorphic,
        verdict: subgraph_of_hamming && cheap_ok && isomorphic == Some(true),
    })
}

fn to_petgraph(g: &Graph) -> UnGraphMap<u64, ()> {
    let mut pg = UnGraphMap::with_capacity(g.vertex_count() as usize, g.edge_count());
    for r in 0..g.vertex_count() {
        pg.add_node(r);
    }
    for &(a, b) in g.edge_ranks() {
        pg.add_edge(a, b, ());
    }
    pg
}

/// Hamming distance between two vertices of the same space.
pub fn hamming_distance(u: &Vertex, v: &Vertex) -> usize {
    u.hamming_distance(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{embedding_table, single_twist_forward, EmbeddingKind};
    use crate::graph::build_single_twist;
    use crate::vertex::Dims;

    #[test]
    fn phi_passes() {
        for n in 1..=3 {
            for m in 2..=4 {
                let t = embedding_table(&EmbeddingKind::Phi, n, m, Execution::Sequential).unwrap();
                let r = verify_embedding(&t).unwrap();
                assert!(r.verdict, "n={n} m={m}: {r:?}");
            }
        }
    }

    #[test]
    fn identity_fails_on_exterior_edges() {
        let id = VertexMap::identity(Dims::new(3, 3).unwrap()).unwrap();
        let r = verify_embedding(&id).unwrap();
        assert!(r.is_bijection && !r.all_edges_distance_one && !r.verdict);
        // one exterior edge per pair of blocks at each level: 3 + 3*3
        assert_eq!(r.violation_count, 12);
        assert!(r.violations.iter().all(|v| v.distance >= 2));
    }

    #[test]
    fn single_twist_map_fails_for_n3() {
        let dims = Dims::new(3, 3).unwrap();
        let t = VertexMap::from_fn(dims, Execution::Sequential, single_twist_forward).unwrap();
        let r = verify_embedding(&t).unwrap();
        assert!(r.is_bijection);
        assert!(!r.verdict);
    }

    #[test]
    fn non_bijection_reported() {
        let dims = Dims::new(2, 3).unwrap();
        let zero = VertexMap::from_fn(dims, Execution::Sequential, |_| dims.constant(0)).unwrap();
        let r = verify_embedding(&zero).unwrap();
        assert!(!r.is_bijection && !r.edge_count_preserved && !r.verdict);
        assert_eq!(r.violations.len(), MAX_REPORTED_VIOLATIONS.min(12));
    }

    #[test]
    fn layout_examples() {
        let t = embedding_table(&EmbeddingKind::Phi, 3, 3, Execution::Sequential).unwrap();
        assert_eq!(layout_metrics(&t).unwrap(), LayoutMetrics { wirelength: 39, bandwidth: 1 });
        let id = VertexMap::identity(Dims::new(2, 2).unwrap()).unwrap();
        // path 00-01-10-11: distances 1, 2, 1
        assert_eq!(layout_metrics(&id).unwrap(), LayoutMetrics { wirelength: 4, bandwidth: 2 });
        let dims = Dims::new(1, 5).unwrap();
        let perm = VertexMap::from_fn(dims, Execution::Sequential, |v| {
            crate::vertex::Vertex::new(vec![(v.digits()[0] + 3) % 5], 5).unwrap()
        })
        .unwrap();
        assert_eq!(layout_metrics(&perm).unwrap(), LayoutMetrics { wirelength: 10, bandwidth: 1 });
    }

    #[test]
    fn single_twist_graph_checks() {
        let r = verify_coordinatization(&build_single_twist(3, 3).unwrap()).unwrap();
        assert!(r.subgraph_of_hamming && r.edge_count_matches);
        assert!(!r.degree_sequence_matches && !r.verdict);
        assert_eq!(r.isomorphic, None);
        let (_, d) = r.degree_violation.unwrap();
        assert_eq!(d, 4);

        let r = verify_coordinatization(&build_single_twist(2, 4).unwrap()).unwrap();
        assert!(r.verdict, "{r:?}");
    }
}
