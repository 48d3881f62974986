//! Text serializations of graphs: edge list, DOT, and JSON.
//!
//! Vertices are written as digit strings (`"0120"`) when m <= 10 and as
//! space-separated integers otherwise.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind};
use crate::vertex::{Dims, Vertex};

/// One edge per line, endpoints separated by a space, canonical order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (a, b) in g.edges() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

pub fn parse_edge_list(s: &str, dims: Dims, kind: GraphKind) -> Result<Graph> {
    let mut pairs = Vec::new();
    for line in s.lines().filter(|l| !l.trim().is_empty()) {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let (a, b) = if tokens.len() == 2 {
            (tokens[0].to_string(), tokens[1].to_string())
        } else if tokens.len() == 2 * dims.n {
            (tokens[..dims.n].join(" "), tokens[dims.n..].join(" "))
        } else {
            return Err(Error::Parse { input: line.to_string(), reason: "expected two vertices".into() });
        };
        pairs.push((Vertex::parse(&a, dims.m)?, Vertex::parse(&b, dims.m)?));
    }
    Graph::from_edges(dims, kind, pairs)
}

pub fn to_dot(g: &Graph) -> String {
    let dims = g.dims();
    let mut out = format!("graph \"{}_{}_{}\" {{\n", g.kind(), dims.n, dims.m);
    for v in dims.vertices() {
        let _ = writeln!(out, "  \"{v}\" [label=\"{v}\"];");
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "  \"{a}\" -- \"{b}\";");
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    m: u32,
    kind: String,
    edges: Vec<[String; 2]>,
}

pub fn to_json(g: &Graph) -> String {
    let doc = GraphJson {
        n: g.dims().n,
        m: g.dims().m,
        kind: g.kind().to_string(),
        edges: g.edges().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn from_json(s: &str) -> Result<Graph> {
    let doc: GraphJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
    let kind = GraphKind::from_name(&doc.kind)
        .ok_or_else(|| Error::Json(format!("unknown graph kind {:?}", doc.kind)))?;
    let dims = Dims::new(doc.n, doc.m)?;
    let pairs = doc
        .edges
        .iter()
        .map(|[a, b]| Ok((Vertex::parse(a, dims.m)?, Vertex::parse(b, dims.m)?)))
        .collect::<Result<Vec<_>>>()?;
    Graph::from_edges(dims, kind, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_hamming, build_sierpinski};

    #[test]
    fn edge_list_format() {
        let g = build_sierpinski(2, 2).unwrap();
        assert_eq!(to_edge_list(&g), "00 01\n01 10\n10 11\n");
        assert_eq!(parse_edge_list(&to_edge_list(&g), g.dims(), g.kind()).unwrap(), g);
    }

    #[test]
    fn wide_alphabet_roundtrip() {
        let g = build_sierpinski(2, 12).unwrap();
        let text = to_edge_list(&g);
        assert!(text.contains("0 11 11 0\n"));
        assert_eq!(parse_edge_list(&text, g.dims(), g.kind()).unwrap(), g);
        assert_eq!(from_json(&to_json(&g)).unwrap(), g);
    }

    #[test]
    fn json_schema() {
        let g = build_hamming(1, 3).unwrap();
        assert_eq!(
            to_json(&g),
            r#"{"n":1,"m":3,"kind":"hamming","edges":[["0","1"],["0","2"],["1","2"]]}"#
        );
        assert_eq!(from_json(&to_json(&g)).unwrap(), g);
        assert!(from_json(r#"{"n":1,"m":3,"kind":"nope","edges":[]}"#).is_err());
        assert!(from_json(r#"{"n":1,"m":3,"kind":"custom","edges":[["0","0"]]}"#).is_err());
    }

    #[test]
    fn dot_format() {
        let g = build_sierpinski(1, 2).unwrap();
        assert_eq!(
            to_dot(&g),
            "graph \"sierpinski_1_2\" {\n  \"0\" [label=\"0\"];\n  \"1\" [label=\"1\"];\n  \"0\" -- \"1\";\n}\n"
        );
    }
}
