//! The C-(k,l)-sum-free predicate and the exact optimizer for the largest
//! C-(k,l)-sum-free subset of Z/nZ.
//!
//! The optimizer is the ground truth every closed-form bound is checked
//! against, so its answer never depends on those formulas: a formula may
//! only choose the size at which the search starts. A reported `mu` is exact
//! once a complete search at size `mu + 1` has come back empty, because
//! subsets of sum-free sets are sum-free.

use num_integer::Integer;
use rayon::prelude::*;

use crate::arith::{ceil_div, divisors};
use crate::bounds;
use crate::cyclic::{iterated_noisy, CyclicSet};
use crate::error::{Error, Result};

/// Default largest modulus the optimizer accepts without an override.
pub const DEFAULT_SEARCH_CEILING: usize = 64;
/// Largest modulus the bitmask kernel supports.
pub const KERNEL_MAX_MODULUS: usize = 256;
pub const DEFAULT_WITNESS_CAP: usize = 8;

/// The triple `(n, k, l)` with `k > l >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SumFreeParams {
    n: usize,
    k: usize,
    l: usize,
}

impl SumFreeParams {
    pub fn new(n: usize, k: usize, l: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        if l == 0 || k <= l {
            return Err(Error::InvalidParams(format!(
                "need k > l >= 1, got k={k}, l={l}"
            )));
        }
        Ok(Self { n, k, l })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// `gcd(n, k - l)`.
    pub fn delta(&self) -> usize {
        self.n.gcd(&(self.k - self.l))
    }

    /// Same `(k, l)` over a different modulus.
    pub fn with_modulus(&self, n: usize) -> Result<Self> {
        Self::new(n, self.k, self.l)
    }
}

fn check_operands(a: &CyclicSet, c: &CyclicSet, params: &SumFreeParams) -> Result<()> {
    for m in [a.modulus(), c.modulus()] {
        if m != params.n {
            return Err(Error::ModulusMismatch {
                left: params.n,
                right: m,
            });
        }
    }
    if c.is_empty() {
        return Err(Error::EmptyNoise);
    }
    Ok(())
}

/// Whether `k *_C A` and `l *_C A` are disjoint. The empty set is sum-free.
pub fn is_sumfree(a: &CyclicSet, c: &CyclicSet, params: &SumFreeParams) -> Result<bool> {
    check_operands(a, c, params)?;
    if a.is_empty() {
        return Ok(true);
    }
    let big = iterated_noisy(params.k, a, c)?;
    let small = iterated_noisy(params.l, a, c)?;
    Ok(big.is_disjoint(&small))
}

/// Outcome of [`brute_force_mu`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub mu: usize,
    /// Optimal sets in lexicographic order, capped. Only sets whose least
    /// element is the smallest in its translation class are listed.
    pub witnesses: Vec<CyclicSet>,
    pub nodes_explored: u64,
    /// False when a node budget cut the search short; `mu` is then only a
    /// lower bound.
    pub exhaustive: bool,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub witness_cap: usize,
    pub ceiling: usize,
    /// Node budget per top-level branch of each fixed-size search.
    pub node_budget: Option<u64>,
    pub parallel: bool,
    /// Size to start at. Defaults to the closed-form lower bound when the
    /// noise set has a recognised shape.
    pub start_size: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            witness_cap: DEFAULT_WITNESS_CAP,
            ceiling: DEFAULT_SEARCH_CEILING,
            node_budget: None,
            parallel: true,
            start_size: None,
        }
    }
}

/// Exact `mu_{k,l}^C(Z/nZ)` with default options and the given witness cap.
pub fn brute_force_mu(
    params: &SumFreeParams,
    c: &CyclicSet,
    witness_cap: usize,
) -> Result<SearchResult> {
    search_mu(
        params,
        c,
        &SearchOptions {
            witness_cap,
            ..SearchOptions::default()
        },
    )
}

/// Size-stepping certificate search.
///
/// Starting from a size hint `m`, a successful size-`m` search moves up and a
/// failed one moves down, until a found size sits directly below a size
/// whose search failed.
pub fn search_mu(
    params: &SumFreeParams,
    c: &CyclicSet,
    opts: &SearchOptions,
) -> Result<SearchResult> {
    let n = params.n;
    let ceiling = opts.ceiling.min(KERNEL_MAX_MODULUS);
    if n > ceiling {
        return Err(Error::SearchCeiling { n, ceiling });
    }
    check_operands(&CyclicSet::empty(n)?, c, params)?;
    let start = opts
        .start_size
        .unwrap_or_else(|| size_hint(params, c))
        .clamp(1, n);
    if n <= 128 {
        Ok(run_search(&Kernel::<u128>::new(params, c), start, opts))
    } else {
        Ok(run_search(&Kernel::<Wide>::new(params, c), start, opts))
    }
}

fn run_search<M: Mask>(kernel: &Kernel<M>, start: usize, opts: &SearchOptions) -> SearchResult {
    let n = kernel.n;
    let mut nodes = 0u64;
    let mut best: Option<(usize, Vec<M>)> = None;
    // Whether the search at best + 1 completed without finding anything.
    let mut above_closed;

    let first = kernel.search_level(start, opts);
    nodes += first.nodes;
    if !first.witnesses.is_empty() {
        best = Some((start, first.witnesses));
        let mut m = start + 1;
        loop {
            if m > n {
                above_closed = true;
                break;
            }
            let level = kernel.search_level(m, opts);
            nodes += level.nodes;
            if level.witnesses.is_empty() {
                above_closed = !level.truncated;
                break;
            }
            best = Some((m, level.witnesses));
            m += 1;
        }
    } else {
        above_closed = !first.truncated;
        let mut m = start;
        while m > 1 {
            m -= 1;
            let level = kernel.search_level(m, opts);
            nodes += level.nodes;
            if !level.witnesses.is_empty() {
                best = Some((m, level.witnesses));
                break;
            }
            above_closed = !level.truncated;
        }
    }

    let (mu, masks) = best.unwrap_or((0, Vec::new()));
    let witnesses = masks
        .into_iter()
        .take(opts.witness_cap)
        .map(|m| kernel.to_set(m))
        .collect();
    SearchResult {
        mu,
        witnesses,
        nodes_explored: nodes,
        exhaustive: above_closed,
    }
}

/// Starting size for the search; any value gives the same answer.
fn size_hint(params: &SumFreeParams, c: &CyclicSet) -> usize {
    let (n, k, l) = (params.n, params.k, params.l);
    let elems = c.elements();
    let is_prefix = CyclicSet::prefix(n, elems.len()).is_ok_and(|p| p == *c);
    let hint = match elems.as_slice() {
        [0] => bounds::bajnok_matzke(n, k, l).ok(),
        [0, s] => bounds::bounds_two_element(n, k, l, *s)
            .ok()
            .map(|b| b.lower),
        _ if is_prefix => bounds::bounds_prefix_noise(n, k, l, elems.len())
            .ok()
            .map(|b| b.lower),
        _ => None,
    };
    hint.unwrap_or(1).max(1)
}

/// Fixed-width bitmask over Z/nZ, bit `i` for residue `i`.
trait Mask: Copy + Eq + Send + Sync {
    const BITS: usize;
    fn zero() -> Self;
    fn low(n: usize) -> Self;
    fn bit(i: usize) -> Self;
    fn or(self, o: Self) -> Self;
    fn and(self, o: Self) -> Self;
    fn test(self, i: usize) -> bool;
    /// Cyclic left rotation by `0 < g < n` within the low `n` bits.
    fn rot(self, g: usize, n: usize, full: Self) -> Self;
}

impl Mask for u128 {
    const BITS: usize = 128;

    fn zero() -> Self {
        0
    }

    fn low(n: usize) -> Self {
        if n == 128 {
            u128::MAX
        } else {
            (1u128 << n) - 1
        }
    }

    fn bit(i: usize) -> Self {
        1u128 << i
    }

    #[inline]
    fn or(self, o: Self) -> Self {
        self | o
    }

    #[inline]
    fn and(self, o: Self) -> Self {
        self & o
    }

    fn test(self, i: usize) -> bool {
        self >> i & 1 == 1
    }

    #[inline]
    fn rot(self, g: usize, n: usize, full: Self) -> Self {
        ((self << g) | (self >> (n - g))) & full
    }
}

/// 256-bit mask for `128 < n <= 256`.
#[derive(Clone, Copy, PartialEq, Eq)]
struct Wide([u64; 4]);

impl Wide {
    fn shl(self, s: usize) -> Self {
        let (q, r) = (s / 64, s % 64);
        let mut out = [0u64; 4];
        for i in (q..4).rev() {
            let src = i - q;
            out[i] = self.0[src] << r;
            if r > 0 && src > 0 {
                out[i] |= self.0[src - 1] >> (64 - r);
            }
        }
        Wide(out)
    }

    fn shr(self, s: usize) -> Self {
        let (q, r) = (s / 64, s % 64);
        let mut out = [0u64; 4];
        for (i, o) in out.iter_mut().enumerate().take(4 - q) {
            let src = i + q;
            *o = self.0[src] >> r;
            if r > 0 && src + 1 < 4 {
                *o |= self.0[src + 1] << (64 - r);
            }
        }
        Wide(out)
    }
}

impl Mask for Wide {
    const BITS: usize = 256;

    fn zero() -> Self {
        Wide([0; 4])
    }

    fn low(n: usize) -> Self {
        let mut out = [0u64; 4];
        for (i, w) in out.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *w = u64::MAX;
            } else if n > lo {
                *w = (1u64 << (n - lo)) - 1;
            }
        }
        Wide(out)
    }

    fn bit(i: usize) -> Self {
        let mut out = [0u64; 4];
        out[i / 64] = 1 << (i % 64);
        Wide(out)
    }

    #[inline]
    fn or(self, o: Self) -> Self {
        Wide(std::array::from_fn(|i| self.0[i] | o.0[i]))
    }

    #[inline]
    fn and(self, o: Self) -> Self {
        Wide(std::array::from_fn(|i| self.0[i] & o.0[i]))
    }

    fn test(self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn rot(self, g: usize, n: usize, full: Self) -> Self {
        self.shl(g).or(self.shr(n - g)).and(full)
    }
}

struct LevelOutcome<M> {
    witnesses: Vec<M>,
    nodes: u64,
    truncated: bool,
}

/// Bitmask search kernel.
struct Kernel<M> {
    n: usize,
    full: M,
    k: usize,
    l: usize,
    noise: Vec<u32>,
    /// Least elements are restricted to `0..reps`: translating by a multiple
    /// of `n / delta` maps sum-free sets to sum-free sets.
    reps: usize,
}

impl<M: Mask> Kernel<M> {
    fn new(params: &SumFreeParams, c: &CyclicSet) -> Self {
        let n = params.n;
        assert!(n <= M::BITS);
        Self {
            n,
            full: M::low(n),
            k: params.k,
            l: params.l,
            noise: c.iter().map(|x| x as u32).collect(),
            reps: n / params.delta(),
        }
    }

    #[inline]
    fn rot(&self, x: M, g: u32) -> M {
        if g == 0 {
            x
        } else {
            x.rot(g as usize, self.n, self.full)
        }
    }

    #[inline]
    fn sum_with(&self, s: M, elems: &[u32]) -> M {
        elems
            .iter()
            .fold(M::zero(), |acc, &e| acc.or(self.rot(s, e)))
    }

    fn is_sumfree(&self, elems: &[u32], mask: M) -> bool {
        let mut level = mask;
        let mut small = if self.l == 1 { mask } else { M::zero() };
        for j in 2..=self.k {
            level = self.sum_with(self.sum_with(level, elems), &self.noise);
            if level == self.full {
                return false;
            }
            if j == self.l {
                small = level;
            }
        }
        level.and(small) == M::zero()
    }

    fn to_set(&self, mask: M) -> CyclicSet {
        CyclicSet::new(
            self.n,
            (0..self.n).filter(|&i| mask.test(i)).map(|i| i as i64),
        )
        .expect("kernel modulus is valid")
    }

    fn search_level(&self, target: usize, opts: &SearchOptions) -> LevelOutcome<M> {
        let cap = opts.witness_cap.max(1);
        let run = |r: usize| {
            let mut walker = Walker {
                kernel: self,
                target,
                cap,
                budget: opts.node_budget,
                nodes: 0,
                truncated: false,
                elems: Vec::with_capacity(target),
                witnesses: Vec::new(),
            };
            walker.root(r as u32);
            walker
        };
        let branches: Vec<Walker<M>> = if opts.parallel {
            (0..self.reps).into_par_iter().map(run).collect()
        } else {
            (0..self.reps).map(run).collect()
        };
        let mut out = LevelOutcome {
            witnesses: Vec::new(),
            nodes: 0,
            truncated: false,
        };
        for b in branches {
            out.nodes += b.nodes;
            out.truncated |= b.truncated;
            if out.witnesses.len() < cap {
                let room = cap - out.witnesses.len();
                out.witnesses.extend(b.witnesses.into_iter().take(room));
            }
        }
        out
    }
}

/// Depth-first enumeration of sum-free sets of one size with a fixed least
/// element, extending in increasing element order.
struct Walker<'a, M> {
    kernel: &'a Kernel<M>,
    target: usize,
    cap: usize,
    budget: Option<u64>,
    nodes: u64,
    truncated: bool,
    elems: Vec<u32>,
    witnesses: Vec<M>,
}

impl<M: Mask> Walker<'_, M> {
    fn done(&self) -> bool {
        self.truncated || self.witnesses.len() >= self.cap
    }

    fn visit(&mut self, x: u32, mask: M) -> Option<M> {
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                self.truncated = true;
                return None;
            }
        }
        let mask = mask.or(M::bit(x as usize));
        self.elems.push(x);
        if self.kernel.is_sumfree(&self.elems, mask) {
            Some(mask)
        } else {
            self.elems.pop();
            None
        }
    }

    fn root(&mut self, r: u32) {
        if let Some(mask) = self.visit(r, M::zero()) {
            self.extend(r + 1, mask);
            self.elems.pop();
        }
    }

    fn extend(&mut self, next: u32, mask: M) {
        if self.elems.len() == self.target {
            self.witnesses.push(mask);
            return;
        }
        let n = self.kernel.n as u32;
        for x in next..n {
            if self.elems.len() + ((n - x) as usize) < self.target || self.done() {
                return;
            }
            if let Some(m) = self.visit(x, mask) {
                self.extend(x + 1, m);
                self.elems.pop();
            }
        }
    }
}

/// A longest C-(k,l)-sum-free interval for `C = {0, ..., c-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalWitness {
    pub length: usize,
    /// Empty when no nonempty interval qualifies.
    pub witness: CyclicSet,
}

/// Finds the longest sum-free interval by scanning every start point and
/// length; the first start (smallest residue) of maximal length is returned.
pub fn longest_interval(params: &SumFreeParams, c: usize) -> Result<IntervalWitness> {
    if c < 2 {
        return Err(Error::InvalidParams(format!("need c >= 2, got {c}")));
    }
    let n = params.n;
    let noise = CyclicSet::prefix(n, c)?;
    let mut best = IntervalWitness {
        length: 0,
        witness: CyclicSet::empty(n)?,
    };
    // Sub-intervals of sum-free intervals are sum-free, so lengths are scanned
    // upward until one fails everywhere.
    for m in 1..n {
        let mut found = None;
        for a in 0..n {
            let candidate = CyclicSet::interval(n, a as i64, m)?;
            if is_sumfree(&candidate, &noise, params)? {
                found = Some(candidate);
                break;
            }
        }
        match found {
            Some(w) => {
                best = IntervalWitness {
                    length: m,
                    witness: w,
                }
            }
            None => break,
        }
    }
    Ok(best)
}

/// A large `{0, s}`-(k,l)-sum-free set.
///
/// Candidates are the lifts of maximal (k,l)-sum-free subsets of Z/eZ for
/// every `e | gcd(s, n)`, and the longest `{0, ..., d}`-sum-free interval
/// (with `d = gcd(s, n)`) carried onto `{0, s}` by the unit `u` with
/// `u * d = s`. The largest candidate wins; ties go to the coset lift.
pub fn build_0s_witness(params: &SumFreeParams, s: usize) -> Result<CyclicSet> {
    let n = params.n;
    if s == 0 || s >= n {
        return Err(Error::InvalidParams(format!("need 1 <= s < n, got s={s}")));
    }
    let d = s.gcd(&n);
    let mut best = CyclicSet::empty(n)?;
    let lift_opts = SearchOptions {
        witness_cap: 1,
        ceiling: KERNEL_MAX_MODULUS,
        ..SearchOptions::default()
    };
    for e in divisors(d) {
        let sub = params.with_modulus(e)?;
        let res = search_mu(&sub, &CyclicSet::new(e, [0])?, &lift_opts)?;
        if let Some(b) = res.witnesses.first() {
            let lifted = b.lift(n)?;
            if lifted.len() > best.len() {
                best = lifted;
            }
        }
    }
    let interval = longest_interval(params, d + 1)?;
    if interval.length > best.len() {
        best = interval.witness.scale(unit_taking(d, s, n) as i64)?;
    }
    Ok(best)
}

/// A unit `u` of Z/nZ with `u * d = s (mod n)`, where `d = gcd(s, n)`.
fn unit_taking(d: usize, s: usize, n: usize) -> usize {
    let (s1, n1) = (s / d, n / d);
    (0..d.max(1))
        .map(|t| (s1 + t * n1) % n)
        .find(|&u| u.gcd(&n) == 1)
        .unwrap_or(1)
}

/// Whether `z` sits strictly inside a gap of `A` short enough that adding it
/// leaves `k *_C A` unchanged, for `C = {0, ..., c-1}`.
///
/// The gap is measured cyclically from the nearest member before `z` to the
/// nearest member after it, and must be below `c - ceil((c-2)/k)`. Both
/// neighbours are distinct from `z`, so the gap is at least 2.
pub fn is_redundant(a: &CyclicSet, z: usize, c: usize, k: usize) -> Result<bool> {
    if c < 2 {
        return Err(Error::InvalidParams(format!("need c >= 2, got {c}")));
    }
    if k == 0 {
        return Err(Error::InvalidParams("need k >= 1".into()));
    }
    let n = a.modulus();
    let z = z % n;
    let before = (1..n).find(|&d| a.contains((z + n - d) % n));
    let after = (1..n).find(|&d| a.contains((z + d) % n));
    let threshold = c as i64 - ceil_div(c as i64 - 2, k as i64);
    Ok(match (before, after) {
        (Some(b), Some(f)) => ((b + f) as i64) < threshold,
        _ => false,
    })
}
