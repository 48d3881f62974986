//! Integer codings of {0,1}^n: the natural binary value `eta`, the Gray
//! index `gamma`, and the Gray sequence obtained by pushing the path
//! S(n,2) through `phi`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::embedding::phi_forward;
use crate::error::{Error, Result};
use crate::vertex::{Vertex, MAX_VERTICES};

/// A vertex of Z_2^n.
pub type BitVertex = Vertex;

fn require_bits(v: &Vertex) -> Result<()> {
    if v.m() != 2 {
        return Err(Error::Unsupported(format!("binary coding needs m = 2, got m = {}", v.m())));
    }
    Ok(())
}

/// `sum_i 2^{n-i} v_i`, most significant digit first.
pub fn eta(v: &BitVertex) -> Result<BigUint> {
    require_bits(v)?;
    Ok(v.digits().iter().fold(BigUint::zero(), |acc, &d| (acc << 1usize) + d))
}

pub fn eta_inverse(l: &BigUint, n: usize) -> Result<BitVertex> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if l.bits() > n as u64 {
        return Err(Error::IndexOutOfRange { index: l.to_string(), bits: n });
    }
    let digits = (0..n).rev().map(|k| u32::from(l.bit(k as u64))).collect();
    Vertex::new(digits, 2)
}

pub(crate) fn eta_inverse_u64(l: u64, n: usize) -> Vec<u32> {
    (0..n).rev().map(|k| ((l >> k) & 1) as u32).collect()
}

/// Position of `w` in the Gray order: `sum_i (sum_{j<=i} w_j mod 2) 2^{n-i}`.
pub fn gamma(w: &BitVertex) -> Result<BigUint> {
    require_bits(w)?;
    let mut parity = 0u32;
    Ok(w.digits().iter().fold(BigUint::zero(), |acc, &d| {
        parity ^= d;
        (acc << 1usize) + parity
    }))
}

/// `phi(eta^{-1}(l))` for `l = 0 .. 2^n - 1`.
pub fn gray_sequence(n: usize) -> Result<Vec<BitVertex>> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if n >= 64 || (1u64 << n) > MAX_VERTICES {
        return Err(Error::TooLarge { n, m: 2, limit: MAX_VERTICES });
    }
    Ok((0..1u64 << n)
        .map(|l| phi_forward(&Vertex::from_reduced(eta_inverse_u64(l, n), 2)))
        .collect())
}

/// 2^n as an exact integer.
pub fn code_space_size(n: usize) -> BigUint {
    BigUint::one() << n
}
