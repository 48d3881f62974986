//! Small helpers for arithmetic in Z_m. All results are canonical
//! representatives in `0..m`.

use num_integer::Integer;

pub fn reduce(x: i64, m: u32) -> u32 {
    x.rem_euclid(i64::from(m)) as u32
}

pub fn add(a: u32, b: u32, m: u32) -> u32 {
    ((u64::from(a) + u64::from(b)) % u64::from(m)) as u32
}

pub fn sub(a: u32, b: u32, m: u32) -> u32 {
    let m64 = u64::from(m);
    ((u64::from(a) % m64 + m64 - u64::from(b) % m64) % m64) as u32
}

pub fn mul(a: u32, b: u32, m: u32) -> u32 {
    ((u64::from(a) * u64::from(b)) % u64::from(m)) as u32
}

pub fn pow(base: u32, mut exp: u64, m: u32) -> u32 {
    let m64 = u64::from(m);
    let mut acc = 1 % m64;
    let mut b = u64::from(base) % m64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m64;
        }
        b = b * b % m64;
        exp >>= 1;
    }
    acc as u32
}

/// Multiplicative inverse of `a` mod `m`, if it exists.
pub fn inverse(a: u32, m: u32) -> Option<u32> {
    let g = i64::from(a).extended_gcd(&i64::from(m));
    if g.gcd != 1 {
        return None;
    }
    Some(reduce(g.x, m))
}

pub fn is_unit(a: u32, m: u32) -> bool {
    u64::from(a).gcd(&u64::from(m)) == 1
}

/// 2^{-1} mod m, which is (m + 1) / 2 for odd m.
pub fn half(m: u32) -> Option<u32> {
    inverse(2 % m, m)
}

/// The units of Z_m in increasing order; there are Euler-phi(m) of them.
pub fn units(m: u32) -> Vec<u32> {
    (1..m).filter(|&a| is_unit(a, m)).collect()
}

pub fn totient(m: u32) -> u32 {
    units(m).len() as u32
}
