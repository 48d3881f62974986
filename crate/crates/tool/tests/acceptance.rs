//! Acceptance criteria, one PASS/FAIL line each. Every comparison is exact
//! (integer or rational equality); there are no tolerances to tune.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};

use num_bigint::BigInt;
use num_rational::BigRational;
use sierpinski_core::graph::build_single_twist;
use sierpinski_core::hanoi::is_legal_move_physical;
use sierpinski_core::verify::verify_coordinatization;
use sierpinski_core::{
    build_sierpinski, classic_solution, constant_corner_search, edge_density, embedding_matrix, epsilon_recursive,
    eta, gamma, gray_sequence, is_legal_move, layout_metrics, path_length_to_zero, phi_forward, phi_inverse,
    phi_recursive, position_coordinate, tau_forward, verify_embedding, wolfe_coordinate, Dims, EmbeddingKind,
    TwistFamily, Vertex, VertexMap,
};

type Outcome = Result<String, String>;

fn check(ok: bool, pass: impl Into<String>, fail: impl Into<String>) -> Outcome {
    if ok {
        Ok(pass.into())
    } else {
        Err(fail.into())
    }
}

fn desk(max_n: usize) -> impl Iterator<Item = (usize, u32)> {
    (1..=max_n).flat_map(|n| (2..=5u32).map(move |m| (n, m)))
}

fn v(s: &str, m: u32) -> Vertex {
    Vertex::parse(s, m).unwrap()
}

fn counting() -> Outcome {
    for (n, m) in desk(5) {
        let g = build_sierpinski(n, m).map_err(|e| e.to_string())?;
        let mn = u64::from(m).pow(n as u32);
        let edges = (mn * u64::from(m) - u64::from(m)) / 2;
        if g.edge_count() as u64 != edges {
            return Err(format!("S({n},{m}) has {} edges, expected {edges}", g.edge_count()));
        }
        let degrees = g.degrees();
        let low = degrees.iter().filter(|&&d| d == m as usize - 1).count() as u64;
        let full = degrees.iter().filter(|&&d| d == m as usize).count() as u64;
        if low != u64::from(m) || full != mn - u64::from(m) {
            return Err(format!("S({n},{m}) degree counts {low} x {} and {full} x {m}", m - 1));
        }
    }
    Ok("edge counts and degree sequences for n <= 5, m <= 5".into())
}

fn phi_embeds() -> Outcome {
    for (n, m) in desk(4) {
        let dims = Dims::new(n, m).unwrap();
        let map = VertexMap::from_fn(dims, Default::default(), phi_forward).unwrap();
        if !verify_embedding(&map).unwrap().verdict {
            return Err(format!("phi fails to embed S({n},{m})"));
        }
        let recursive = phi_recursive(n, m).unwrap();
        if recursive != map {
            return Err(format!("closed form and recursion differ for S({n},{m})"));
        }
    }
    Ok("phi embeds and matches its recursion for n <= 4, m <= 5".into())
}

fn counterexample() -> Outcome {
    let g = build_single_twist(3, 3).unwrap();
    let degree = g.degree(&v("011", 3));
    let report = verify_coordinatization(&g).unwrap();
    check(
        degree == 4 && !report.verdict,
        "vertex 011 has degree 4 and the single twist graph is rejected",
        format!("degree of 011 is {degree}, verdict {}", report.verdict),
    )
}

fn matrices() -> Outcome {
    let rows = |k, n, m| embedding_matrix(k, n, m).unwrap();
    let tau43 = rows(&EmbeddingKind::Tau, 4, 3);
    let tau45 = rows(&EmbeddingKind::Tau, 4, 5);
    let inv45 = tau45.invert().unwrap();
    let expect43 = [vec![1, 0, 0, 0], vec![2, 2, 0, 0], vec![2, 1, 1, 0], vec![2, 1, 2, 2]];
    let expect45 = [vec![1, 0, 0, 0], vec![3, 3, 0, 0], vec![3, 4, 4, 0], vec![3, 4, 2, 2]];
    let expect45_inv = [vec![1, 0, 0, 0], vec![4, 2, 0, 0], vec![4, 3, 4, 0], vec![4, 3, 1, 3]];
    let mut problems = Vec::new();
    if tau43.rows() != expect43 {
        problems.push("tau(4,3) matrix");
    }
    if tau43.invert().unwrap() != tau43 {
        problems.push("tau(4,3) not self-inverse");
    }
    if tau45.rows() != expect45 {
        problems.push("tau(4,5) matrix");
    }
    if inv45.rows() != expect45_inv {
        problems.push("tau(4,5) inverse");
    }
    if inv45 == tau45 {
        problems.push("tau(4,5) is self-inverse");
    }
    check(problems.is_empty(), "tau matrices for (4,3) and (4,5) and their inverses", problems.join(", "))
}

const PUBLISHED_SOLVE_1020: [(u64, &str, &str); 15] = [
    (14, "1210", "1020"),
    (13, "1201", "1010"),
    (12, "1200", "1011"),
    (11, "1022", "1211"),
    (10, "1020", "1210"),
    (9, "1002", "1220"),
    (8, "1000", "1222"),
    (7, "0111", "0222"),
    (6, "0110", "0220"),
    (5, "0101", "0210"),
    (4, "0100", "0211"),
    (3, "0011", "0010"),
    (2, "0010", "0012"),
    (1, "0001", "0001"),
    (0, "0000", "0000"),
];

const PUBLISHED_CLASSIC_4_5: [(u64, &str, &str); 16] = [
    (0, "0000", "0000"),
    (1, "0001", "0002"),
    (2, "0010", "0042"),
    (3, "0011", "0044"),
    (4, "0100", "0344"),
    (5, "0101", "0341"),
    (6, "0110", "0331"),
    (7, "0111", "0333"),
    (8, "1000", "1333"),
    (9, "1001", "1330"),
    (10, "1010", "1320"),
    (11, "1011", "1322"),
    (12, "1100", "1122"),
    (13, "1101", "1124"),
    (14, "1110", "1114"),
    (15, "1111", "1111"),
];

fn run_cli(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_sierpinski")).args(args).output().expect("binary runs");
    assert!(out.status.success(), "sierpinski {} exited with {}", args.join(" "), out.status);
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn fixture(name: &str) -> String {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

/// Cells of a text table that differ from the reference rows.
fn table_mismatches(text: &str, reference: &[(u64, &str, &str)]) -> Vec<String> {
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split_whitespace().collect()).collect();
    let mut bad = Vec::new();
    if rows.len() != reference.len() {
        bad.push(format!("{} rows instead of {}", rows.len(), reference.len()));
    }
    for (row, (l, s, t)) in rows.iter().zip(reference) {
        let l = l.to_string();
        for (col, (got, want)) in ["l", "S", "T"].iter().zip(row.iter().zip([l.as_str(), *s, *t])) {
            if *got != want {
                bad.push(format!("l={l} {col}: output {got}, published {want}"));
            }
        }
    }
    bad
}

fn golden_tables() -> Outcome {
    let solve = run_cli(&["hanoi", "solve", "--from", "1020"]);
    let classic = run_cli(&["hanoi", "classic", "--n", "4", "--m", "5"]);
    let mut problems = Vec::new();
    if solve != fixture("hanoi_solve_1020_T_m3.txt") {
        problems.push("solve output differs from its fixture".to_string());
    }
    if classic != fixture("hanoi_classic_n4_m5.txt") {
        problems.push("classic output differs from its fixture".to_string());
    }
    for cell in table_mismatches(&solve, &PUBLISHED_SOLVE_1020) {
        problems.push(format!("published 15-row table, {cell}"));
    }
    for cell in table_mismatches(&classic, &PUBLISHED_CLASSIC_4_5) {
        problems.push(format!("published 16-row table, {cell}"));
    }
    check(problems.is_empty(), "both tables match fixtures and the published rows", problems.join("; "))
}

fn path_length_oracle() -> Outcome {
    for n in 1..=6 {
        let g = build_sierpinski(n, 3).unwrap();
        let dims = g.dims();
        let bfs = g.geodesics_from(&dims.constant(0));
        for x in dims.vertices() {
            let (dist, count) = bfs[dims.rank(&x) as usize];
            let len = u64::try_from(&path_length_to_zero(&x)).unwrap();
            if Some(len) != dist || count != 1 {
                return Err(format!("{x}: formula {len}, bfs {dist:?}, {count} geodesics"));
            }
        }
    }
    let l = path_length_to_zero(&v("1210", 3));
    check(l == 14u32.into(), "path lengths equal BFS with unique geodesics, l(1210) = 14", format!("l(1210) = {l}"))
}

/// Gray words by reflection: prefix 0 to the previous list, then 1 to it reversed.
fn reflected_gray(n: usize) -> Vec<Vec<u32>> {
    let mut words = vec![Vec::new()];
    for _ in 0..n {
        let mut next: Vec<Vec<u32>> = words.iter().map(|w| [vec![0], w.clone()].concat()).collect();
        next.extend(words.iter().rev().map(|w| [vec![1], w.clone()].concat()));
        words = next;
    }
    words
}

fn gray_codes() -> Outcome {
    for n in 1..=16 {
        let seq: Vec<Vec<u32>> = gray_sequence(n).unwrap().iter().map(|w| w.digits().to_vec()).collect();
        if seq != reflected_gray(n) {
            return Err(format!("gray sequence differs from reflection for n = {n}"));
        }
    }
    for n in 1..=12 {
        for w in Dims::new(n, 2).unwrap().vertices() {
            if gamma(&w).unwrap() != eta(&phi_inverse(&w)).unwrap() {
                return Err(format!("gamma({w}) differs from eta(phi^-1({w}))"));
            }
        }
    }
    Ok("reflected Gray for n <= 16, gamma = eta o phi^-1 for n <= 12".into())
}

fn hanoi_formulas() -> Outcome {
    for n in 1..=10 {
        let path = classic_solution(n, 3).unwrap();
        for (l, pos) in path.positions.iter().enumerate() {
            for i in 1..=n {
                let a = position_coordinate(l as u64, i, n).unwrap();
                let b = wolfe_coordinate(l as u64, i, n).unwrap();
                let c = pos.digits()[i - 1];
                if a != b || b != c {
                    return Err(format!("n={n} l={l} disc {i}: {a} {b} {c}"));
                }
            }
        }
        for w in path.positions.windows(2) {
            if !is_legal_move(&w[0], &w[1]).unwrap() || !is_legal_move_physical(&w[0], &w[1]).unwrap() {
                return Err(format!("illegal move {} -> {}", w[0], w[1]));
            }
        }
    }
    Ok("three peg formulas agree and every move is legal for n <= 10".into())
}

fn generalized_embeddings() -> Outcome {
    let families = TwistFamily::all(2, 5).unwrap();
    let mut tables = BTreeSet::new();
    for tw in &families {
        let map = epsilon_recursive(tw).unwrap();
        if !verify_embedding(&map).unwrap().verdict {
            return Err(format!("family {tw} is not an embedding"));
        }
        tables.insert(map.ranks().to_vec());
    }
    check(
        families.len() == 16 && tables.len() == families.len(),
        "16 twist families, all embeddings, pairwise distinct",
        format!("{} families all embed but only {} distinct maps", families.len(), tables.len()),
    )
}

fn constant_corners() -> Outcome {
    for m in [3u32, 5, 7] {
        for n in 1..=5 {
            let dims = Dims::new(n, m).unwrap();
            if (0..m).any(|i| tau_forward(&dims.constant(i)).unwrap() != dims.constant(i)) {
                return Err(format!("tau moves a corner of S({n},{m})"));
            }
        }
    }
    let r = constant_corner_search(4).unwrap();
    check(
        !r.exists && r.max_exterior_edges == Some(4) && r.required_exterior_edges == 6,
        "tau fixes corners for m = 3, 5, 7; m = 4 has at most 4 < 6 exterior edges",
        format!("m = 4 search: {r:?}"),
    )
}

fn layout_and_density() -> Outcome {
    for (n, m) in desk(4) {
        let dims = Dims::new(n, m).unwrap();
        let map = VertexMap::from_fn(dims, Default::default(), phi_forward).unwrap();
        let metrics = layout_metrics(&map).unwrap();
        let wirelength = (u64::from(m).pow(n as u32 + 1) - u64::from(m)) / 2;
        if metrics.wirelength != wirelength || metrics.bandwidth != 1 {
            return Err(format!("S({n},{m}): {metrics:?}"));
        }
    }
    let wrong: Vec<String> = desk(4)
        .filter_map(|(n, m)| {
            let d = edge_density(n, m).unwrap();
            let expected = BigRational::new(BigInt::from(1), BigInt::from(n));
            (d != expected).then(|| format!("({n},{m}) = {d}"))
        })
        .collect();
    check(
        wrong.is_empty(),
        "wirelength and bandwidth 1 for n <= 4, m <= 5; density 1/n",
        format!("wirelength and bandwidth hold; density differs from 1/n at {}", wrong.join(", ")),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("counting", counting),
        ("phi embedding", phi_embeds),
        ("single twist counterexample", counterexample),
        ("tau matrices", matrices),
        ("golden tables", golden_tables),
        ("shortest path oracle", path_length_oracle),
        ("gray code", gray_codes),
        ("hanoi formula equivalence", hanoi_formulas),
        ("generalized embeddings", generalized_embeddings),
        ("constant corners", constant_corners),
        ("layout metrics and density", layout_and_density),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS  {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
