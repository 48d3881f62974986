use crate::error::{Error, Result};
use crate::vertex::Vertex;

/// A permutation of the alphabet Z_m, acting on vertices digit by digit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationSymmetry {
    pi: Vec<u32>,
}

impl PermutationSymmetry {
    pub fn new(pi: Vec<u32>) -> Result<Self> {
        let m = pi.len() as u32;
        let mut seen = vec![false; pi.len()];
        for &x in &pi {
            if x >= m || std::mem::replace(&mut seen[x as usize], true) {
                return Err(Error::NotAPermutation(m));
            }
        }
        Ok(PermutationSymmetry { pi })
    }

    pub fn identity(m: u32) -> Self {
        PermutationSymmetry { pi: (0..m).collect() }
    }

    pub fn transposition(m: u32, a: u32, b: u32) -> Result<Self> {
        let mut pi: Vec<u32> = (0..m).collect();
        if a >= m || b >= m {
            return Err(Error::NotAPermutation(m));
        }
        pi.swap(a as usize, b as usize);
        Ok(PermutationSymmetry { pi })
    }

    /// The affine permutation `j -> c (i + j) mod m`; bijective iff `c` is a unit.
    pub fn affine(m: u32, c: u32, i: u32) -> Result<Self> {
        Self::new((0..m).map(|j| crate::modular::mul(c, crate::modular::add(i, j, m), m)).collect())
    }

    pub fn m(&self) -> u32 {
        self.pi.len() as u32
    }

    pub fn image(&self, digit: u32) -> u32 {
        self.pi[digit as usize]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.pi.len()];
        for (x, &y) in self.pi.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        PermutationSymmetry { pi: inv }
    }

    pub fn apply(&self, v: &Vertex) -> Result<Vertex> {
        if v.m() != self.m() {
            return Err(Error::DimensionMismatch { n1: v.n(), m1: self.m(), n2: v.n(), m2: v.m() });
        }
        Ok(Vertex::from_reduced(self.apply_digits(v.digits()), v.m()))
    }

    pub(crate) fn apply_digits(&self, digits: &[u32]) -> Vec<u32> {
        digits.iter().map(|&d| self.pi[d as usize]).collect()
    }
}

/// Convenience wrapper: `sigma_pi(v)`.
pub fn apply_symmetry(pi: &PermutationSymmetry, v: &Vertex) -> Result<Vertex> {
    pi.apply(v)
}
