//! Small-integer number theory shared by every module.

use num_integer::Integer;

use crate::error::{Error, Result};

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn ensure_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Canonical residue of `x` modulo `n`, always in `[0, n)`.
#[inline]
pub fn residue(x: i64, n: usize) -> usize {
    x.rem_euclid(n as i64) as usize
}

/// Inverse of `g` modulo `n` via the extended Euclidean algorithm.
pub fn mod_inverse(g: i64, n: usize) -> Result<usize> {
    let ni = n as i64;
    let g = g.rem_euclid(ni);
    let ext = g.extended_gcd(&ni);
    if ext.gcd != 1 {
        return Err(Error::NotAUnit { g, n });
    }
    Ok(residue(ext.x, n))
}

/// The units of Z/nZ in increasing order. Z/1Z has the single unit 0.
pub fn units(n: usize) -> Vec<usize> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|&g| g.gcd(&n) == 1).collect()
}

#[inline]
pub fn floor_div(a: i64, b: i64) -> i64 {
    Integer::div_floor(&a, &b)
}

#[inline]
pub fn ceil_div(a: i64, b: i64) -> i64 {
    -Integer::div_floor(&-a, &b)
}
