use std::fmt::Write;

use anyhow::{bail, ensure, Context, Result};
use serde::Serialize;
use serde_json::json;

use sierpinski_core::export::{from_json, to_dot, to_edge_list, to_json};
use sierpinski_core::graph::{hamming_edge_count, sierpinski_edge_count};
use sierpinski_core::hanoi::{classic_table, constant_corners_for, solution_table, SolutionRow};
use sierpinski_core::verify::CoordinatizationReport;
use sierpinski_core::{
    build_hamming, build_sierpinski, build_single_twist, edge_density, embedding_matrix, embedding_table, eta,
    gray_sequence, layout_metrics, single_twist_forward, verify_coordinatization, verify_embedding, Coordinates,
    Dims, EmbeddingKind, EmbeddingReport, Execution, LayoutMetrics, LinearMap, TwistFamily, Vertex, VertexMap,
};

use crate::args::{Command, CoordChoice, Format, GraphChoice, GrayFormat, HanoiAction, MapChoice, Twist, VerifyChoice};

/// Output of one command and whether it counts as a pass.
pub struct Rendered {
    pub text: String,
    pub pass: bool,
}

impl Rendered {
    fn ok(text: String) -> Self {
        Rendered { text, pass: true }
    }
}

fn unsupported(format: Format, command: &str) -> anyhow::Error {
    anyhow::anyhow!("format {format:?} is not available for {command}")
}

pub fn render(command: &Command) -> Result<Rendered> {
    match command {
        Command::Gen { kind, size, format } => gen(*kind, size.n, size.m, *format).map(Rendered::ok),
        Command::Embed { kind, size, twist, matrix, invert, format } => {
            embed(*kind, size.n, size.m, twist, *matrix, *invert, *format).map(Rendered::ok)
        }
        Command::Verify { kind, n, m, twist, graph, format } => match graph {
            Some(path) => {
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let g = from_json(&text)?;
                let report = verify_coordinatization(&g)?;
                Ok(Rendered { pass: report.verdict, text: coordinatization_text(&report, *format)? })
            }
            None => {
                let (Some(kind), Some(n), Some(m)) = (kind, n, m) else {
                    bail!("verify needs a map kind with --n and --m, or --graph FILE");
                };
                verify(*kind, *n, *m, twist, *format)
            }
        },
        Command::Hanoi { action } => match action {
            HanoiAction::Classic { size, format } => {
                let rows = classic_table(size.n, size.m)?;
                table(&rows, size.n, size.m, *format).map(Rendered::ok)
            }
            HanoiAction::Solve { from, coords, m, format } => {
                let start = Vertex::parse(from, *m)?;
                let coords = match coords {
                    CoordChoice::S => Coordinates::S,
                    CoordChoice::T => Coordinates::T,
                };
                let rows = solution_table(&start, coords)?;
                table(&rows, start.n(), *m, *format).map(Rendered::ok)
            }
        },
        Command::Diplomats { n, format } => {
            let rows = classic_table(*n, 5)?;
            table(&rows, *n, 5, *format).map(Rendered::ok)
        }
        Command::Gray { n, format } => gray(*n, *format).map(Rendered::ok),
        Command::Density { size, format } => density(size.n, size.m, *format).map(Rendered::ok),
        Command::CornersSearch { m, n, format } => corners(*n, *m, *format).map(Rendered::ok),
    }
}

fn gen(kind: GraphChoice, n: usize, m: u32, format: Format) -> Result<String> {
    let g = match kind {
        GraphChoice::Sierpinski => build_sierpinski(n, m)?,
        GraphChoice::Hamming => build_hamming(n, m)?,
        GraphChoice::SingleTwist => build_single_twist(n, m)?,
    };
    Ok(match format {
        Format::Text | Format::Edgelist => to_edge_list(&g),
        Format::Csv => {
            let mut out = String::from("u,v\n");
            for (a, b) in g.edges() {
                let _ = writeln!(out, "{a},{b}");
            }
            out
        }
        Format::Json => to_json(&g) + "\n",
        Format::Dot => to_dot(&g),
    })
}

fn twist_family(twist: &Twist, n: usize, m: u32) -> Result<TwistFamily> {
    match (&twist.c, &twist.c_list) {
        (Some(c), _) => Ok(TwistFamily::constant(n, m, *c)?),
        (None, Some(list)) => {
            ensure!(list.len() == n, "--c-list has {} multipliers, expected n = {n}", list.len());
            Ok(TwistFamily::new(m, list.clone())?)
        }
        (None, None) => bail!("epsilon needs --c or --c-list"),
    }
}

fn embedding_kind(kind: MapChoice, twist: &Twist, n: usize, m: u32) -> Result<EmbeddingKind> {
    Ok(match kind {
        MapChoice::Phi => EmbeddingKind::Phi,
        MapChoice::Tau => EmbeddingKind::Tau,
        MapChoice::Epsilon => EmbeddingKind::Epsilon(twist_family(twist, n, m)?),
    })
}

fn map_name(kind: MapChoice) -> &'static str {
    match kind {
        MapChoice::Phi => "phi",
        MapChoice::Tau => "tau",
        MapChoice::Epsilon => "epsilon",
    }
}

fn embed(
    kind: MapChoice,
    n: usize,
    m: u32,
    twist: &Twist,
    matrix: bool,
    invert: bool,
    format: Format,
) -> Result<String> {
    let ek = embedding_kind(kind, twist, n, m)?;
    if matrix {
        let mut lm = embedding_matrix(&ek, n, m)?;
        if invert {
            lm = lm.invert()?;
        }
        return matrix_text(&lm, format);
    }
    let mut map = embedding_table(&ek, n, m, Execution::default())?;
    if invert {
        map = map.inverse().context("map is not a bijection")?;
    }
    let name = map_name(kind);
    let label = if invert { format!("{name}^-1") } else { name.to_string() };
    map_text(&map, &label, format)
}

fn matrix_text(lm: &LinearMap, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => lm.to_string(),
        Format::Csv => lm
            .rows()
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(",") + "\n")
            .collect(),
        Format::Json => lm.to_json() + "\n",
        other => return Err(unsupported(other, "embed --matrix")),
    })
}

fn map_text(map: &VertexMap, label: &str, format: Format) -> Result<String> {
    let dims = map.dims();
    let pairs = || {
        map.ranks()
            .iter()
            .enumerate()
            .map(move |(r, &s)| (dims.unrank(r as u64).to_string(), dims.unrank(s).to_string()))
    };
    Ok(match format {
        Format::Text => {
            let head = format!("{label}(v)");
            let w = dims.unrank(0).to_string().len().max(1);
            let mut out = format!("{:<w$}  {head}\n", "v");
            for (v, img) in pairs() {
                let _ = writeln!(out, "{v:<w$}  {img}");
            }
            out
        }
        Format::Csv => map.to_csv(),
        Format::Json => {
            let doc = json!({
                "map": label,
                "n": dims.n,
                "m": dims.m,
                "pairs": pairs().map(|(v, i)| [v, i]).collect::<Vec<_>>(),
            });
            doc.to_string() + "\n"
        }
        other => return Err(unsupported(other, "embed")),
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

#[derive(Serialize)]
struct MapVerification<'a> {
    map: &'a str,
    report: &'a EmbeddingReport,
    layout: LayoutMetrics,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph: Option<&'a CoordinatizationReport>,
    verdict: &'static str,
}

fn verify(kind: VerifyChoice, n: usize, m: u32, twist: &Twist, format: Format) -> Result<Rendered> {
    let dims = Dims::bounded(n, m)?;
    let exec = Execution::default();
    let (name, map) = match kind {
        VerifyChoice::Phi => ("phi", embedding_table(&EmbeddingKind::Phi, n, m, exec)?),
        VerifyChoice::Tau => ("tau", embedding_table(&EmbeddingKind::Tau, n, m, exec)?),
        VerifyChoice::Epsilon => {
            let tw = twist_family(twist, n, m)?;
            ("epsilon", embedding_table(&EmbeddingKind::Epsilon(tw), n, m, exec)?)
        }
        VerifyChoice::Identity => ("identity", VertexMap::identity(dims)?),
        VerifyChoice::SingleTwist => ("single-twist", VertexMap::from_fn(dims, exec, single_twist_forward)?),
    };
    let report = verify_embedding(&map)?;
    let layout = layout_metrics(&map)?;
    // the single twist is also checked as a graph in its own right
    let graph = match kind {
        VerifyChoice::SingleTwist => Some(verify_coordinatization(&build_single_twist(n, m)?)?),
        _ => None,
    };
    let pass = report.verdict && graph.as_ref().map_or(true, |g| g.verdict);
    let text = match format {
        Format::Text => {
            let mut out = format!("map {name} n={n} m={m}\n");
            let _ = writeln!(out, "bijection: {}", yes(report.is_bijection));
            let _ = writeln!(out, "edges at distance 1: {}", yes(report.all_edges_distance_one));
            let _ = writeln!(out, "edge count preserved: {}", yes(report.edge_count_preserved));
            let _ = writeln!(out, "violations: {}", report.violation_count);
            for e in &report.violations {
                let _ =
                    writeln!(out, "  {} -- {} maps to {} -- {} (distance {})", e.u, e.v, e.image_u, e.image_v, e.distance);
            }
            let _ = writeln!(out, "wirelength: {}", layout.wirelength);
            let _ = writeln!(out, "bandwidth: {}", layout.bandwidth);
            if let Some(g) = &graph {
                out.push_str(&coordinatization_lines(g));
            }
            let _ = writeln!(out, "verdict: {}", verdict(pass));
            out
        }
        Format::Json => {
            let doc = MapVerification { map: name, report: &report, layout, graph: graph.as_ref(), verdict: verdict(pass) };
            serde_json::to_string(&doc)? + "\n"
        }
        other => return Err(unsupported(other, "verify")),
    };
    Ok(Rendered { text, pass })
}

fn coordinatization_lines(r: &CoordinatizationReport) -> String {
    let mut out = format!("graph n={} m={}\n", r.n, r.m);
    let _ = writeln!(out, "subgraph of K_m^n: {}", yes(r.subgraph_of_hamming));
    if let Some((a, b, d)) = &r.distance_violation {
        let _ = writeln!(out, "  edge {a} -- {b} has distance {d}");
    }
    let _ = writeln!(out, "edge count matches: {}", yes(r.edge_count_matches));
    let _ = writeln!(out, "degree sequence matches: {}", yes(r.degree_sequence_matches));
    if let Some((v, d)) = &r.degree_violation {
        let _ = writeln!(out, "  vertex {v} has degree {d}");
    }
    let iso = match r.isomorphic {
        Some(b) => yes(b),
        None => "not checked",
    };
    let _ = writeln!(out, "isomorphic to S(n,m): {iso}");
    out
}

fn coordinatization_text(r: &CoordinatizationReport, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => coordinatization_lines(r) + &format!("verdict: {}\n", verdict(r.verdict)),
        Format::Json => serde_json::to_string(r)? + "\n",
        other => return Err(unsupported(other, "verify --graph")),
    })
}

fn table(rows: &[SolutionRow], n: usize, m: u32, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => {
            let s_head = format!("S({n},{m})");
            let t_head = format!("T({n},{m})");
            let lw = rows.iter().map(|r| r.step.to_string().len()).max().unwrap_or(1).max(1);
            let sw = rows.iter().map(|r| r.s.to_string().len()).max().unwrap_or(0).max(s_head.len());
            let tw = rows.iter().map(|r| r.t.to_string().len()).max().unwrap_or(0).max(t_head.len());
            let mut out = format!("{:>lw$}  {s_head:>sw$}  {t_head:>tw$}\n", "l");
            for r in rows {
                let _ = writeln!(out, "{:>lw$}  {:>sw$}  {:>tw$}", r.step, r.s.to_string(), r.t.to_string());
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("l,S,T\n");
            for r in rows {
                let _ = writeln!(out, "{},{},{}", r.step, r.s, r.t);
            }
            out
        }
        Format::Json => {
            let rows: Vec<_> =
                rows.iter().map(|r| json!({"l": r.step, "s": r.s.to_string(), "t": r.t.to_string()})).collect();
            json!({"n": n, "m": m, "rows": rows}).to_string() + "\n"
        }
        other => return Err(unsupported(other, "hanoi")),
    })
}

fn gray(n: usize, format: GrayFormat) -> Result<String> {
    let mut out = String::new();
    for w in gray_sequence(n)? {
        match format {
            GrayFormat::Bits => writeln!(out, "{w}")?,
            GrayFormat::Int => writeln!(out, "{}", eta(&w)?)?,
            GrayFormat::Both => writeln!(out, "{w} {}", eta(&w)?)?,
        }
    }
    Ok(out)
}

fn density(n: usize, m: u32, format: Format) -> Result<String> {
    let ratio = edge_density(n, m)?;
    let s = sierpinski_edge_count(n, m);
    let k = hamming_edge_count(n, m);
    Ok(match format {
        Format::Text => format!("n={n} m={m}\nS(n,m) edges: {s}\nK_m^n edges: {k}\ndensity: {ratio}\n"),
        Format::Json => {
            json!({"n": n, "m": m, "sierpinski_edges": s.to_string(), "hamming_edges": k.to_string(),
                   "density": ratio.to_string()})
            .to_string()
                + "\n"
        }
        other => return Err(unsupported(other, "density")),
    })
}

fn corners(n: usize, m: u32, format: Format) -> Result<String> {
    let r = constant_corners_for(n, m)?;
    Ok(match format {
        Format::Text => {
            let mut out = format!("n={n} m={m}\nrequired exterior edges: {}\n", r.required_exterior_edges);
            if let Some(max) = r.max_exterior_edges {
                let _ = writeln!(out, "max exterior edges: {max}");
            }
            let found = match &r.witness {
                Some(w) => format!("exists ({w})"),
                None if r.exists => "exists".to_string(),
                None => "none".to_string(),
            };
            let _ = writeln!(out, "constant corners: {found}");
            out
        }
        Format::Json => serde_json::to_string(&r)? + "\n",
        other => return Err(unsupported(other, "corners-search")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_layout_right_aligns() {
        let rows = classic_table(2, 3).unwrap();
        let text = table(&rows, 2, 3, Format::Text).unwrap();
        assert_eq!(text, "l  S(2,3)  T(2,3)\n0      00      00\n1      01      02\n2      10      12\n3      11      11\n");
    }

    #[test]
    fn graph_formats_are_rejected_for_tables() {
        let rows = classic_table(2, 3).unwrap();
        assert!(table(&rows, 2, 3, Format::Dot).is_err());
    }

    #[test]
    fn density_text() {
        let text = density(1, 4, Format::Text).unwrap();
        assert!(text.ends_with("density: 1\n"), "{text}");
    }

    #[test]
    fn edgelist_matches_graph() {
        let g: sierpinski_core::Graph = build_sierpinski(2, 2).unwrap();
        assert_eq!(gen(GraphChoice::Sierpinski, 2, 2, Format::Edgelist).unwrap(), to_edge_list(&g));
    }
}
