//! Lower-triangular linear maps over Z_m.
//!
//! Row `i` expresses output coordinate `i` in terms of inputs `0..=i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modular;
use crate::vertex::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawLinearMap")]
pub struct LinearMap {
    m: u32,
    rows: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
struct RawLinearMap {
    m: u32,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<RawLinearMap> for LinearMap {
    type Error = Error;

    fn try_from(raw: RawLinearMap) -> Result<Self> {
        LinearMap::new(raw.m, raw.rows)
    }
}

impl LinearMap {
    /// Validates shape, reduces entries, and requires a zero upper triangle
    /// and a unit diagonal mod `m`.
    pub fn new(m: u32, rows: Vec<Vec<u32>>) -> Result<Self> {
        if m < 2 {
            return Err(Error::AlphabetTooSmall(m));
        }
        let n = rows.len();
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut reduced = Vec::with_capacity(n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotLowerTriangular(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            let row: Vec<u32> = row.into_iter().map(|x| x % m).collect();
            if let Some(j) = (i + 1..n).find(|&j| row[j] != 0) {
                return Err(Error::NotLowerTriangular(format!("nonzero entry at ({i}, {j})")));
            }
            if !modular::is_unit(row[i], m) {
                return Err(Error::SingularDiagonal { row: i, entry: row[i], m });
            }
            reduced.push(row);
        }
        Ok(LinearMap { m, rows: reduced })
    }

    pub fn identity(n: usize, m: u32) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
            .collect();
        LinearMap { m, rows }
    }

    pub(crate) fn from_rows_unchecked(m: u32, rows: Vec<Vec<u32>>) -> Self {
        LinearMap { m, rows }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn apply(&self, v: &Vertex) -> Result<Vertex> {
        if v.n() != self.n() || v.m() != self.m {
            return Err(Error::DimensionMismatch { n1: self.n(), m1: self.m, n2: v.n(), m2: v.m() });
        }
        Ok(Vertex::from_reduced(self.apply_digits(v.digits()), self.m))
    }

    pub(crate) fn apply_digits(&self, digits: &[u32]) -> Vec<u32> {
        let m = u64::from(self.m);
        self.rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let acc = row[..=i]
                    .iter()
                    .zip(digits)
                    .fold(0u64, |acc, (&a, &x)| (acc + u64::from(a) * u64::from(x)) % m);
                acc as u32
            })
            .collect()
    }

    /// `self ∘ other`, i.e. the matrix product `self · other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        if self.n() != other.n() || self.m != other.m {
            return Err(Error::DimensionMismatch { n1: self.n(), m1: self.m, n2: other.n(), m2: other.m });
        }
        let n = self.n();
        let m = self.m;
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (j..=i).fold(0u32, |acc, k| {
                            modular::add(acc, modular::mul(self.rows[i][k], other.rows[k][j], m), m)
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(LinearMap { m, rows })
    }

    /// Inverse by forward substitution on `L X = I`.
    pub fn invert(&self) -> Result<LinearMap> {
        let n = self.n();
        let m = self.m;
        let mut x = vec![vec![0u32; n]; n];
        for i in 0..n {
            let d = self.rows[i][i];
            let d_inv = modular::inverse(d, m).ok_or(Error::SingularDiagonal { row: i, entry: d, m })?;
            for j in 0..=i {
                let mut rhs = u32::from(i == j);
                for k in j..i {
                    rhs = modular::sub(rhs, modular::mul(self.rows[i][k], x[k][j], m), m);
                }
                x[i][j] = modular::mul(d_inv, rhs, m);
            }
        }
        Ok(LinearMap { m, rows: x })
    }

    pub fn is_identity(&self) -> bool {
        *self == LinearMap::identity(self.n(), self.m)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))
    }
}

/// Space-separated rows, one per line.
impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let parts: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

pub fn invert_linear_map(lm: &LinearMap) -> Result<LinearMap> {
    lm.invert()
}
