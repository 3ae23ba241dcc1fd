//! Closed-form bounds on the largest C-(k,l)-sum-free subset of Z/nZ.
//!
//! Every quantity is exact integer arithmetic. Raw values, which can be
//! negative for small `n`, are kept next to the values clamped at 0.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use crate::arith::{ceil_div, divisors, ensure_prime, floor_div, residue, units};
use crate::cyclic::CyclicSet;
use crate::error::{Error, Result};

/// Which result produced a [`BoundsReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundsMethod {
    /// `C = {0}`: the classical maximum, exact.
    Classical,
    /// `C = {0, 1, ..., c-1}` or a shift-mult image of it.
    PrefixNoise,
    /// `C = {0, s}` with `gcd(s, n) = 1`, reduced to `{0, 1}`.
    TwoElementCoprime,
    /// `C = {0, s}` with `gcd(s, n) > 1`.
    TwoElement,
    /// `C = {0, p}` with `p` a prime divisor of `n`.
    ZeroPrime,
    /// Any other noise set: lower bound from the smallest enclosing
    /// progression, upper bound from the best two-element subset.
    Generic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub lower: usize,
    pub upper: usize,
    pub raw_lower: i64,
    pub raw_upper: i64,
    /// `gcd(n, k - l)`.
    pub delta: usize,
    pub chi: i64,
    pub r: usize,
    /// `c` for prefix noise, `s` for two-element noise.
    pub noise_param: usize,
    /// Best coset-lift term, when the method has one.
    pub coset_term: Option<usize>,
    /// Divisor -> term for the max-over-divisors formulas.
    pub per_divisor_terms: BTreeMap<usize, usize>,
    pub method: BoundsMethod,
}

impl BoundsReport {
    pub fn gap(&self) -> usize {
        self.upper - self.lower
    }
}

fn validate(n: usize, k: usize, l: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if l == 0 || k <= l {
        return Err(Error::InvalidParams(format!(
            "need k > l >= 1, got k={k}, l={l}"
        )));
    }
    Ok(())
}

fn validate_c(c: usize) -> Result<()> {
    if c < 2 {
        return Err(Error::InvalidParams(format!("need c >= 2, got {c}")));
    }
    Ok(())
}

/// `floor((n + 2(c-2)) / (k+l)) - (c-2)`.
pub fn chi(n: usize, k: usize, l: usize, c: usize) -> Result<i64> {
    validate(n, k, l)?;
    validate_c(c)?;
    let t = c as i64 - 2;
    Ok(floor_div(n as i64 + 2 * t, (k + l) as i64) - t)
}

/// Bounds for `C = {0, 1, ..., c-1}`.
///
/// The upper bound is `chi`; the lower bound is
/// `floor((n + 2(c-2) - r) / (k+l)) - (c-2)` with
/// `r = (-k chi - (k-1)(c-2)) mod gcd(n, k-l)`. It is also the length of the
/// longest sum-free interval, and never more than 1 below the upper bound.
pub fn bounds_prefix_noise(n: usize, k: usize, l: usize, c: usize) -> Result<BoundsReport> {
    let chi_val = chi(n, k, l, c)?;
    let t = c as i64 - 2;
    let h = (k + l) as i64;
    let (ki, ni) = (k as i64, n as i64);
    let delta = n.gcd(&(k - l));
    assert!(delta > 0, "k > l makes delta positive");
    let r = residue(-ki * chi_val - (ki - 1) * t, delta);
    let floor_term = floor_div(ni + 2 * t, h);
    debug_assert_eq!(r, residue(-ki * floor_term + t, delta));
    let raw_lower = floor_div(ni + 2 * t - r as i64, h) - t;
    Ok(BoundsReport {
        n,
        k,
        l,
        lower: raw_lower.max(0) as usize,
        upper: chi_val.max(0) as usize,
        raw_lower,
        raw_upper: chi_val,
        delta,
        chi: chi_val,
        r,
        noise_param: c,
        coset_term: None,
        per_divisor_terms: BTreeMap::new(),
        method: BoundsMethod::PrefixNoise,
    })
}

/// Bounds for `C = {0, s}`.
///
/// With `d = gcd(s, n)` the coset term is `max over e | d of mu_{k,l}(Z/eZ) n/e`.
/// The lower bound is the larger of the coset term and the prefix lower
/// bound for `{0, ..., d}` (since `{0, s}` and `{0, d}` are shift-mult
/// equivalent); the upper bound is the larger of the coset term and
/// `floor(n / (k+l))`. If the coset term reaches `floor(n / (k+l))` the two
/// coincide. For `d = 1` this is exactly the `{0, 1}` prefix bound.
pub fn bounds_two_element(n: usize, k: usize, l: usize, s: usize) -> Result<BoundsReport> {
    validate(n, k, l)?;
    if s == 0 || s >= n {
        return Err(Error::InvalidParams(format!("need 1 <= s < n, got s={s}")));
    }
    let d = s.gcd(&n);
    if d == 1 {
        let mut report = bounds_prefix_noise(n, k, l, 2)?;
        report.noise_param = s;
        report.method = BoundsMethod::TwoElementCoprime;
        return Ok(report);
    }
    let mut terms = BTreeMap::new();
    for e in divisors(d) {
        terms.insert(e, bajnok_matzke(e, k, l)? * (n / e));
    }
    let coset = terms.values().copied().max().unwrap_or(0);
    let interval = bounds_prefix_noise(n, k, l, d + 1)?;
    Ok(combine_coset(
        n,
        k,
        l,
        s,
        coset,
        terms,
        &interval,
        BoundsMethod::TwoElement,
    ))
}

#[allow(clippy::too_many_arguments)]
fn combine_coset(
    n: usize,
    k: usize,
    l: usize,
    s: usize,
    coset: usize,
    terms: BTreeMap<usize, usize>,
    interval: &BoundsReport,
    method: BoundsMethod,
) -> BoundsReport {
    let torus = torus_upper_unchecked(n, k, l);
    let raw_lower = interval.raw_lower.max(coset as i64);
    let upper = coset.max(torus);
    BoundsReport {
        n,
        k,
        l,
        lower: coset.max(interval.lower),
        upper,
        raw_lower,
        raw_upper: upper as i64,
        delta: interval.delta,
        chi: interval.chi,
        r: interval.r,
        noise_param: s,
        coset_term: Some(coset),
        per_divisor_terms: terms,
        method,
    }
}

/// Bounds for `C = {0, p}` with `p` a prime dividing `n`.
///
/// The coset term is `ceil((p-1)/(k+l)) n/p` when `p` does not divide `k - l`
/// and 0 when it does; the rest is as in [`bounds_two_element`].
pub fn bounds_zero_p(n: usize, k: usize, l: usize, p: usize) -> Result<BoundsReport> {
    validate(n, k, l)?;
    ensure_prime(p as u64)?;
    if !n.is_multiple_of(p) {
        return Err(Error::NotADivisor { e: p, n });
    }
    if p == n {
        return Err(Error::InvalidParams(format!("need p < n, got p={p}")));
    }
    let coset = bier_chin_prime(p, k, l)? * (n / p);
    let terms = BTreeMap::from([(1, 0), (p, coset)]);
    let interval = bounds_prefix_noise(n, k, l, p + 1)?;
    Ok(combine_coset(
        n,
        k,
        l,
        p,
        coset,
        terms,
        &interval,
        BoundsMethod::ZeroPrime,
    ))
}

/// Per-divisor terms of the classical maximum.
///
/// For `d | n`: `delta_d = gcd(d, k-l)`, `f_d = ceil((d - delta_d)/(k+l))`,
/// `r_d = l f_d mod delta_d`, term `ceil((d - delta_d + r_d)/(k+l)) n/d`.
pub fn bajnok_matzke_terms(n: usize, k: usize, l: usize) -> Result<BTreeMap<usize, usize>> {
    validate(n, k, l)?;
    let h = (k + l) as i64;
    let mut terms = BTreeMap::new();
    for d in divisors(n) {
        let delta_d = d.gcd(&(k - l)) as i64;
        let f = ceil_div(d as i64 - delta_d, h);
        let r = (l as i64 * f).rem_euclid(delta_d);
        let factor = ceil_div(d as i64 - (delta_d - r), h).max(0) as usize;
        terms.insert(d, factor * (n / d));
    }
    Ok(terms)
}

/// Largest (k,l)-sum-free subset of Z/nZ (noise `{0}`).
pub fn bajnok_matzke(n: usize, k: usize, l: usize) -> Result<usize> {
    Ok(bajnok_matzke_terms(n, k, l)?
        .values()
        .copied()
        .max()
        .unwrap_or(0))
}

/// Largest sum-free subset of Z/nZ, i.e. the `(2, 1)` case.
pub fn diamanda_yap(n: usize) -> Result<usize> {
    bajnok_matzke(n, 2, 1)
}

/// The `gcd(n, k-l) = 1` case of [`bajnok_matzke`].
pub fn hamidoune_plagne(n: usize, k: usize, l: usize) -> Result<usize> {
    validate(n, k, l)?;
    if n.gcd(&(k - l)) != 1 {
        return Err(Error::InvalidParams(format!(
            "need gcd(n, k-l) = 1, got gcd({n}, {}) = {}",
            k - l,
            n.gcd(&(k - l))
        )));
    }
    bajnok_matzke(n, k, l)
}

/// Largest (k,l)-sum-free subset of Z/pZ for prime `p`.
pub fn bier_chin_prime(p: usize, k: usize, l: usize) -> Result<usize> {
    ensure_prime(p as u64)?;
    validate(p, k, l)?;
    if (k - l).is_multiple_of(p) {
        Ok(0)
    } else {
        Ok(ceil_div(p as i64 - 1, (k + l) as i64) as usize)
    }
}

fn torus_upper_unchecked(n: usize, k: usize, l: usize) -> usize {
    n / (k + l)
}

/// `floor(n / (k+l))`, the upper bound for `{0, 1}` noise.
pub fn torus_upper(n: usize, k: usize, l: usize) -> Result<usize> {
    validate(n, k, l)?;
    Ok(torus_upper_unchecked(n, k, l))
}

/// Bounds for an arbitrary nonempty noise set, using the sharpest result
/// that applies to its shape.
pub fn bounds_for_noise(n: usize, k: usize, l: usize, c: &CyclicSet) -> Result<BoundsReport> {
    validate(n, k, l)?;
    if c.modulus() != n {
        return Err(Error::ModulusMismatch {
            left: n,
            right: c.modulus(),
        });
    }
    let elems = c.elements();
    match elems.len() {
        0 => return Err(Error::EmptyNoise),
        1 => {
            let terms = bajnok_matzke_terms(n, k, l)?;
            let mu = terms.values().copied().max().unwrap_or(0);
            let prefix = bounds_prefix_noise(n, k, l, 2)?;
            return Ok(BoundsReport {
                lower: mu,
                upper: mu,
                raw_lower: mu as i64,
                raw_upper: mu as i64,
                noise_param: 1,
                coset_term: None,
                per_divisor_terms: terms,
                method: BoundsMethod::Classical,
                chi: prefix.chi,
                r: prefix.r,
                ..prefix
            });
        }
        2 => {
            let s = elems[1] - elems[0];
            return bounds_two_element(n, k, l, s);
        }
        _ => {}
    }
    // Smallest c such that some unit multiple of C fits in a length-c window.
    let span = units(n)
        .into_iter()
        .filter_map(|g| c.scale(g as i64).ok())
        .map(|scaled| cyclic_span(&scaled))
        .min()
        .expect("at least one unit");
    let interval = bounds_prefix_noise(n, k, l, span)?;
    if span == elems.len() {
        return Ok(BoundsReport {
            noise_param: span,
            ..interval
        });
    }
    let mut upper = n;
    for (i, &a) in elems.iter().enumerate() {
        for &b in &elems[i + 1..] {
            upper = upper.min(bounds_two_element(n, k, l, b - a)?.upper);
        }
    }
    Ok(BoundsReport {
        lower: interval.lower.min(upper),
        upper,
        raw_upper: upper as i64,
        noise_param: span,
        method: BoundsMethod::Generic,
        ..interval
    })
}

/// Length of the shortest cyclic interval containing a nonempty set.
fn cyclic_span(c: &CyclicSet) -> usize {
    let n = c.modulus();
    let elems = c.elements();
    // Largest gap between cyclically consecutive members is left out.
    let mut largest_gap = 0;
    for (i, &x) in elems.iter().enumerate() {
        let next = elems[(i + 1) % elems.len()];
        let gap = residue(next as i64 - x as i64, n);
        let gap = if gap == 0 { n } else { gap };
        largest_gap = largest_gap.max(gap);
    }
    n - largest_gap + 1
}
