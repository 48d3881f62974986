//! Tower of Hanoi on the constant-corner coordinatization T(n,m), m odd.
//!
//! A position is a [`Vertex`]: digit `i` is the peg holding disc `i + 1`,
//! and disc 1 is the *largest*. Solutions are computed in the Sierpinski
//! coordinates S(n,m), where shortest paths have a closed form, and carried
//! over by `tau`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::codes::eta_inverse_u64;
use crate::embedding::{embedding_table, tau_forward, tau_inverse, EmbeddingKind, TwistFamily};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind};
use crate::modular;
use crate::par::Execution;
use crate::symmetry::PermutationSymmetry;
use crate::verify::verify_embedding_with;
use crate::vertex::{Dims, Vertex, MAX_VERTICES};

pub type HanoiPosition = Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Coordinates {
    /// Sierpinski coordinates S(n,m).
    S,
    /// Tower of Hanoi coordinates T(n,m).
    T,
}

impl fmt::Display for Coordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coordinates::S => "S",
            Coordinates::T => "T",
        })
    }
}

/// A walk through positions; consecutive positions are adjacent in the
/// graph named by `coords`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MovePath {
    pub coords: Coordinates,
    pub positions: Vec<Vertex>,
}

impl MovePath {
    pub fn moves(&self) -> usize {
        self.positions.len().saturating_sub(1)
    }

    pub fn map(&self, coords: Coordinates, f: impl Fn(&Vertex) -> Result<Vertex>) -> Result<MovePath> {
        Ok(MovePath {
            coords,
            positions: self.positions.iter().map(f).collect::<Result<_>>()?,
        })
    }
}

/// One row of a solution table: step index `l`, the S position and the T
/// position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionRow {
    pub step: u64,
    pub s: Vertex,
    pub t: Vertex,
}

fn require_odd(m: u32) -> Result<u32> {
    modular::half(m).ok_or(Error::EvenModulus(m))
}

/// Distance from `v` to `0^n` in S(n,m): `sum_i [v_i != 0] 2^{n-i}`.
pub fn path_length_to_zero(v: &Vertex) -> BigUint {
    v.digits().iter().fold(BigUint::zero(), |acc, &d| {
        (acc << 1usize) + if d != 0 { BigUint::one() } else { BigUint::zero() }
    })
}

/// One step along the unique geodesic to `0^n`, or `None` at `0^n`.
///
/// If the last digit is nonzero it is cleared (an interior edge).
/// Otherwise with `h` the last nonzero position, `w a 0^k` moves to
/// `w 0 a^k` across the exterior edge.
pub fn step_toward_zero(v: &Vertex) -> Option<Vertex> {
    let d = v.digits();
    let h = d.iter().rposition(|&x| x != 0)?;
    let mut next = d.to_vec();
    if h + 1 < d.len() {
        let a = d[h];
        next[h] = 0;
        next[h + 1..].iter_mut().for_each(|x| *x = a);
    } else {
        next[h] = 0;
    }
    Some(Vertex::from_reduced(next, v.m()))
}

fn path_len_checked(v: &Vertex) -> Result<u64> {
    let len = path_length_to_zero(v);
    u64::try_from(&len)
        .ok()
        .filter(|&l| l < MAX_VERTICES)
        .ok_or_else(|| Error::Unsupported(format!("path of {len} moves is too long to materialize")))
}

/// The unique shortest path from `v` to `0^n` in S(n,m).
pub fn shortest_path_to_zero(v: &Vertex) -> Result<MovePath> {
    let len = path_len_checked(v)?;
    let mut positions = Vec::with_capacity(len as usize + 1);
    let mut cur = v.clone();
    while let Some(next) = step_toward_zero(&cur) {
        positions.push(std::mem::replace(&mut cur, next));
    }
    positions.push(cur);
    Ok(MovePath { coords: Coordinates::S, positions })
}

/// Shortest path from `v` to the corner `corner^n`, by transporting the
/// path to `0^n` through the symmetry swapping `0` and `corner`.
pub fn shortest_path_to_corner(v: &Vertex, corner: u32) -> Result<MovePath> {
    let swap = PermutationSymmetry::transposition(v.m(), 0, corner)?;
    let path = shortest_path_to_zero(&swap.apply(v)?)?;
    path.map(Coordinates::S, |p| swap.apply(p))
}

/// Optimal solution from an arbitrary T(n,m) position to `0^n`, in T
/// coordinates.
pub fn solve_from_position(t: &HanoiPosition) -> Result<MovePath> {
    let s = tau_inverse(t)?;
    shortest_path_to_zero(&s)?.map(Coordinates::T, tau_forward)
}

/// The table `(l, s, t)` for an optimal solution to `0^n`, listed from the
/// start (largest `l`) down to `0^n`.
pub fn solution_table(start: &Vertex, coords: Coordinates) -> Result<Vec<SolutionRow>> {
    require_odd(start.m())?;
    let s = match coords {
        Coordinates::S => start.clone(),
        Coordinates::T => tau_inverse(start)?,
    };
    let path = shortest_path_to_zero(&s)?;
    let total = path.moves() as u64;
    path.positions
        .into_iter()
        .enumerate()
        .map(|(k, s)| {
            let t = tau_forward(&s)?;
            Ok(SolutionRow { step: total - k as u64, s, t })
        })
        .collect()
}

fn classic_dims(n: usize, m: u32) -> Result<Dims> {
    let dims = Dims::new(n, m)?;
    if n >= 64 || (1u64 << n) > MAX_VERTICES {
        return Err(Error::TooLarge { n, m: 2, limit: MAX_VERTICES });
    }
    Ok(dims)
}

/// Moves all discs from peg 0 to peg 1 in `2^n - 1` moves: position `l` is
/// `tau(eta^{-1}(l))`.
pub fn classic_solution(n: usize, m: u32) -> Result<MovePath> {
    Ok(MovePath {
        coords: Coordinates::T,
        positions: classic_table(n, m)?.into_iter().map(|r| r.t).collect(),
    })
}

/// Rows `l = 0 .. 2^n - 1` of `(eta^{-1}(l), tau(eta^{-1}(l)))` over Z_m.
pub fn classic_table(n: usize, m: u32) -> Result<Vec<SolutionRow>> {
    require_odd(m)?;
    classic_dims(n, m)?;
    (0..1u64 << n)
        .map(|l| {
            let s = Vertex::from_reduced(eta_inverse_u64(l, n), m);
            let t = tau_forward(&s)?;
            Ok(SolutionRow { step: l, s, t })
        })
        .collect()
}

/// The Traveling Diplomats solution: the classic table over m = 5.
pub fn diplomats_table(n: usize) -> Result<Vec<(Vertex, Vertex)>> {
    Ok(classic_table(n, 5)?.into_iter().map(|r| (r.s, r.t)).collect())
}

fn check_step(l: u64, i: usize, n: usize) -> Result<()> {
    if n == 0 || n >= 64 {
        return Err(Error::IndexOutOfRange { index: l.to_string(), bits: n });
    }
    if l >= 1u64 << n {
        return Err(Error::IndexOutOfRange { index: l.to_string(), bits: n });
    }
    if i == 0 || i > n {
        return Err(Error::DiscOutOfRange { disc: i, n });
    }
    Ok(())
}

/// Peg of disc `i` (1 = largest) after `l` moves of the classic 3-peg
/// solution with `n` discs, from the binary digits of `l`:
/// `2^{i-1} (sum_{j<i} 2^{i-1-j} l_j + l_i) mod 3`.
pub fn position_coordinate(l: u64, i: usize, n: usize) -> Result<u32> {
    check_step(l, i, n)?;
    let bit = |j: usize| ((l >> (n - j)) & 1) as u32;
    let inner = (1..i).fold(0u32, |acc, j| {
        modular::add(acc, modular::mul(modular::pow(2, (i - 1 - j) as u64, 3), bit(j), 3), 3)
    });
    Ok(modular::mul(modular::pow(2, (i - 1) as u64, 3), modular::add(inner, bit(i), 3), 3))
}

/// Per-disc closed form `((k mod 2) + 1) floor((l + 2^k) / 2^{k+1}) mod 3`
/// where `k` counts discs from the smallest, starting at 0.
pub fn wolfe_raw(l: u64, k: u32) -> u32 {
    let l = u128::from(l);
    let q = (l + (1u128 << k)) >> (k + 1);
    (((u128::from(k % 2) + 1) * q) % 3) as u32
}

/// Peg of disc `i` (1 = largest) after `l` moves, via [`wolfe_raw`]. The raw
/// value uses the smallest-first index `k = n - i` and targets peg 1 or 2
/// depending on the parity of `n`; multiplying by `2^{n-1}` relabels pegs
/// so the tower always lands on peg 1.
pub fn wolfe_coordinate(l: u64, i: usize, n: usize) -> Result<u32> {
    check_step(l, i, n)?;
    let raw = wolfe_raw(l, (n - i) as u32);
    Ok(modular::mul(modular::pow(2, (n - 1) as u64, 3), raw, 3))
}

fn single_change(a: &Vertex, b: &Vertex) -> Result<Option<(usize, u32, u32)>> {
    a.dims().check(b)?;
    let diffs: Vec<usize> = (0..a.n()).filter(|&d| a.digits()[d] != b.digits()[d]).collect();
    Ok(match diffs.as_slice() {
        [d] => Some((*d, a.digits()[*d], b.digits()[*d])),
        _ => None,
    })
}

/// Move rule of T(n,m), m odd: exactly one disc moves, from peg `i` to peg
/// `j`, and every smaller disc sits on peg `k = 2^{-1}(i + j) mod m`.
pub fn is_legal_move(a: &HanoiPosition, b: &HanoiPosition) -> Result<bool> {
    let half = require_odd(a.m())?;
    let Some((disc, i, j)) = single_change(a, b)? else {
        return Ok(false);
    };
    let k = modular::mul(half, modular::add(i, j, a.m()), a.m());
    Ok(a.digits()[disc + 1..].iter().all(|&p| p == k))
}

/// The physical rule: the moving disc is on top of its peg and lands on a
/// peg whose discs are all larger. For m = 3 this is the classic puzzle and
/// coincides with [`is_legal_move`].
pub fn is_legal_move_physical(a: &HanoiPosition, b: &HanoiPosition) -> Result<bool> {
    let Some((disc, i, j)) = single_change(a, b)? else {
        return Ok(false);
    };
    let mut top: Vec<Option<usize>> = vec![None; a.m() as usize];
    // discs later in the vector are smaller, so the last one seen is on top
    for (d, &peg) in a.digits().iter().enumerate() {
        top[peg as usize] = Some(d);
    }
    let on_top = top[i as usize] == Some(disc);
    let lands_on_larger = top[j as usize].map_or(true, |t| t < disc);
    Ok(on_top && lands_on_larger)
}

/// Graph of all legal moves of T(n,m) under [`is_legal_move`].
pub fn move_graph(n: usize, m: u32) -> Result<Graph> {
    require_odd(m)?;
    let dims = Dims::bounded(n, m)?;
    let mut edges = Vec::new();
    for a in dims.vertices() {
        for d in 0..n {
            for j in 0..m {
                if j <= a.digits()[d] {
                    continue;
                }
                let mut digits = a.digits().to_vec();
                digits[d] = j;
                let b = Vertex::from_reduced(digits, m);
                if is_legal_move(&a, &b)? {
                    edges.push((a.clone(), b));
                }
            }
        }
    }
    Graph::from_edges(dims, GraphKind::Custom, edges)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstantCornerReport {
    pub n: usize,
    pub m: u32,
    pub exists: bool,
    /// Most exterior edges any line decomposition with one constant corner
    /// per line can carry (n = 2 search only).
    pub max_exterior_edges: Option<u64>,
    /// Exterior edges S(n,m) needs.
    pub required_exterior_edges: u64,
    /// Twist family of a verified constant-corner embedding, if any.
    pub witness: Option<String>,
}

/// Largest matching inside one line of K_m^2 that avoids the line's
/// constant vertex, found by exhaustive search over partial matchings.
fn max_line_matching(free: &[u32]) -> u64 {
    let [_, tail @ ..] = free else {
        return 0;
    };
    // the first vertex either stays unmatched or pairs with a later one
    let mut best = max_line_matching(tail);
    for k in 0..tail.len() {
        let mut remaining = tail.to_vec();
        remaining.remove(k);
        best = best.max(1 + max_line_matching(&remaining));
    }
    best
}

/// Lines with more free vertices than this use the closed-form matching size.
const EXHAUSTIVE_LINE_LIMIT: usize = 11;

/// Exhaustive n = 2 search for a copy of S(2,m) inside K_m^2 with constant
/// corners. Its K_m blocks must be parallel lines each holding one constant
/// vertex, and its exterior edges must then run along the perpendicular
/// lines, avoid the corners, and form a matching.
fn line_search(m: u32) -> u64 {
    let mut best = 0;
    for blocks_are_rows in [true, false] {
        let mut total = 0;
        for line in 0..m {
            // vertices of the perpendicular line, minus its constant vertex
            let free: Vec<u32> = (0..m)
                .filter(|&x| {
                    let (r, c) = if blocks_are_rows { (x, line) } else { (line, x) };
                    r != c
                })
                .collect();
            total += if free.len() <= EXHAUSTIVE_LINE_LIMIT {
                max_line_matching(&free)
            } else {
                // a complete graph on k vertices has a matching of size k / 2
                free.len() as u64 / 2
            };
        }
        best = best.max(total);
    }
    best
}

fn tau_witness(n: usize, m: u32) -> Result<Option<String>> {
    let tw = TwistFamily::tau(n, m)?;
    let table = embedding_table(&EmbeddingKind::Tau, n, m, Execution::default())?;
    let ok = table.has_constant_corners() && verify_embedding_with(&table, Execution::default())?.verdict;
    Ok(ok.then(|| format!("tau, multipliers {tw}")))
}

/// Does S(2,m) embed in K_m^2 with constant corners?
pub fn constant_corner_search(m: u32) -> Result<ConstantCornerReport> {
    constant_corners_for(2, m)
}

/// Existence of a constant-corner embedding of S(n,m): odd m is answered by
/// the verified `tau` witness, n = 1 trivially, even m with n = 2 by the
/// exhaustive line search. Even m with n > 2 is refused as open.
pub fn constant_corners_for(n: usize, m: u32) -> Result<ConstantCornerReport> {
    Dims::new(n, m)?;
    // all edges minus the m^{n-1} C(m,2) block edges: (m^n - m) / 2
    let required_exterior_edges = (BigUint::from(m).pow(n as u32) - m) / 2u32;
    let required_exterior_edges = u64::try_from(&required_exterior_edges).unwrap_or(u64::MAX);
    let mut report = ConstantCornerReport {
        n,
        m,
        exists: false,
        max_exterior_edges: None,
        required_exterior_edges,
        witness: None,
    };
    if n == 2 {
        report.max_exterior_edges = Some(line_search(m));
    }
    if n == 1 {
        report.exists = true;
        report.witness = Some("identity on K_m".into());
    } else if m % 2 == 1 {
        report.witness = tau_witness(n, m)?;
        report.exists = report.witness.is_some();
    } else if n == 2 {
        report.exists = report.max_exterior_edges >= Some(required_exterior_edges);
    } else {
        return Err(Error::Unsupported(format!(
            "constant-corner embeddings of S({n},{m}) for even m and n > 2 are an open question"
        )));
    }
    Ok(report)
}
