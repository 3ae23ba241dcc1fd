//! Shift-mult equivalence of noise sets.
//!
//! `C ~ D` iff `D = g(C + {h})` for a unit `g` and any `h`. Both transforms
//! preserve the largest sum-free size, so a noise set can be replaced by any
//! member of its class.

use std::collections::{BTreeSet, HashSet};

use crate::arith::{ensure_prime, mod_inverse, residue, units};
use crate::cyclic::CyclicSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Lexicographically least member of the class.
    pub representative: CyclicSet,
    /// Number of distinct sets `g(C + {h})`.
    pub orbit_size: usize,
}

/// `g(C + {h})`.
pub fn apply_transform(c: &CyclicSet, g: i64, h: i64) -> Result<CyclicSet> {
    c.translate(h).scale(g)
}

/// Enumerates the whole orbit and keeps the least member.
pub fn canonicalize(c: &CyclicSet) -> CanonicalForm {
    let n = c.modulus();
    let mut seen = HashSet::new();
    let mut best: Option<CyclicSet> = None;
    for g in units(n) {
        for h in 0..n {
            let image = c
                .translate(h as i64)
                .scale(g as i64)
                .expect("units(n) yields units");
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image.clone());
            }
            seen.insert(image);
        }
    }
    CanonicalForm {
        representative: best.expect("Z/nZ has at least one unit"),
        orbit_size: seen.len(),
    }
}

pub fn are_equivalent(c: &CyclicSet, d: &CyclicSet) -> Result<bool> {
    if c.modulus() != d.modulus() {
        return Err(Error::ModulusMismatch {
            left: c.modulus(),
            right: d.modulus(),
        });
    }
    if c.len() != d.len() {
        return Ok(false);
    }
    Ok(canonicalize(c).representative == canonicalize(d).representative)
}

/// All `d` with `{0, 1, d} ~ {0, 1, c}` over Z/pZ:
/// `{c, 1/c, 1-c, 1/(1-c), (c-1)/c, c/(c-1)}`, deduplicated.
pub fn size3_orbit(c: i64, p: usize) -> Result<BTreeSet<usize>> {
    ensure_prime(p as u64)?;
    let c = residue(c, p);
    if c == 0 || c == 1 {
        return Err(Error::InvalidParams(format!(
            "need c outside {{0, 1}} mod {p}, got {c}"
        )));
    }
    let ci = c as i64;
    let inv_c = mod_inverse(ci, p)? as i64;
    let inv_cm1 = mod_inverse(ci - 1, p)? as i64;
    let candidates = [
        ci,
        inv_c,
        -(ci - 1),
        -inv_cm1,
        (ci - 1) * inv_c,
        ci * inv_cm1,
    ];
    Ok(candidates.iter().map(|&x| residue(x, p)).collect())
}
