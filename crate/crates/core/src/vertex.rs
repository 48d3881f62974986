use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex set a graph constructor will materialize.
pub const MAX_VERTICES: u64 = 10_000_000;

/// The shared parameters of a vertex space Z_m^n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dims {
    pub n: usize,
    pub m: u32,
}

impl Dims {
    pub fn new(n: usize, m: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::ZeroDimension);
        }
        if m < 2 {
            return Err(Error::AlphabetTooSmall(m));
        }
        Ok(Dims { n, m })
    }

    /// Like [`Dims::new`] but also enforces the materialization guard.
    pub fn bounded(n: usize, m: u32) -> Result<Self> {
        let dims = Dims::new(n, m)?;
        dims.vertex_count()
            .filter(|&c| c <= MAX_VERTICES)
            .ok_or(Error::TooLarge { n, m, limit: MAX_VERTICES })?;
        Ok(dims)
    }

    /// m^n, or `None` on u64 overflow.
    pub fn vertex_count(self) -> Option<u64> {
        let exp = u32::try_from(self.n).ok()?;
        u64::from(self.m).checked_pow(exp)
    }

    /// Vertex count for a space that already passed [`Dims::bounded`].
    pub(crate) fn size(self) -> u64 {
        self.vertex_count().expect("bounded dims")
    }

    /// Base-m value of a digit slice, most significant digit first. Because
    /// all vertices have the same length, rank order is lexicographic order.
    pub(crate) fn rank_digits(self, digits: &[u32]) -> u64 {
        digits
            .iter()
            .fold(0u64, |acc, &d| acc * u64::from(self.m) + u64::from(d))
    }

    pub(crate) fn unrank_digits(self, mut rank: u64) -> Vec<u32> {
        let m = u64::from(self.m);
        let mut digits = vec![0u32; self.n];
        for slot in digits.iter_mut().rev() {
            *slot = (rank % m) as u32;
            rank /= m;
        }
        digits
    }

    pub fn rank(self, v: &Vertex) -> u64 {
        self.rank_digits(v.digits())
    }

    pub fn unrank(self, rank: u64) -> Vertex {
        Vertex {
            digits: self.unrank_digits(rank),
            m: self.m,
        }
    }

    pub fn constant(self, digit: u32) -> Vertex {
        Vertex {
            digits: vec![digit; self.n],
            m: self.m,
        }
    }

    pub fn check(self, v: &Vertex) -> Result<()> {
        if v.dims() != self {
            return Err(Error::DimensionMismatch {
                n1: self.n,
                m1: self.m,
                n2: v.n(),
                m2: v.m(),
            });
        }
        Ok(())
    }

    /// All vertices in lexicographic order.
    pub fn vertices(self) -> impl Iterator<Item = Vertex> {
        (0..self.size()).map(move |r| self.unrank(r))
    }
}

/// A point of Z_m^n, most significant digit first: digit `i` is v_{i+1}, and in
/// the Hanoi reading it is the peg of disc `i + 1` (disc 1 is the largest).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    digits: Vec<u32>,
    m: u32,
}

impl Vertex {
    pub fn new(digits: Vec<u32>, m: u32) -> Result<Self> {
        Dims::new(digits.len(), m)?;
        if let Some(&digit) = digits.iter().find(|&&d| d >= m) {
            return Err(Error::DigitOutOfRange { digit, m });
        }
        Ok(Vertex { digits, m })
    }

    /// Builds a vertex from digits already reduced mod `m`.
    pub(crate) fn from_reduced(digits: Vec<u32>, m: u32) -> Self {
        debug_assert!(digits.iter().all(|&d| d < m));
        Vertex { digits, m }
    }

    /// Parses either a run of decimal digits (`"1201"`, only when m <= 10) or
    /// whitespace-separated integers (`"1 2 0 1"`, any m).
    pub fn parse(s: &str, m: u32) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = s.trim();
        let digits: Vec<u32> = if trimmed.contains(char::is_whitespace) {
            trimmed
                .split_whitespace()
                .map(|t| t.parse::<u32>().map_err(|_| err("not an integer")))
                .collect::<Result<_>>()?
        } else {
            if m > 10 && trimmed.len() > 1 {
                return Err(err("digit strings need m <= 10; separate digits with spaces"));
            }
            trimmed
                .chars()
                .map(|c| c.to_digit(10).ok_or_else(|| err("not a decimal digit")))
                .collect::<Result<_>>()?
        };
        if digits.is_empty() {
            return Err(err("empty"));
        }
        Vertex::new(digits, m)
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn n(&self) -> usize {
        self.digits.len()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn dims(&self) -> Dims {
        Dims { n: self.n(), m: self.m }
    }

    pub fn is_constant(&self) -> bool {
        self.digits.windows(2).all(|w| w[0] == w[1])
    }

    pub fn hamming_distance(&self, other: &Vertex) -> usize {
        self.digits
            .iter()
            .zip(&other.digits)
            .filter(|(a, b)| a != b)
            .count()
    }

    pub fn into_digits(self) -> Vec<u32> {
        self.digits
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m <= 10 {
            for d in &self.digits {
                write!(f, "{d}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.digits.iter().map(u32::to_string).collect();
            f.write_str(&parts.join(" "))
        }
    }
}
