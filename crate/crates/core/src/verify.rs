//! Reproduction harness: formula-vs-oracle sweeps, the interval conjecture
//! scan and seeded property suites.
//!
//! Rows are computed independently (in parallel) and always come back in
//! grid order. Random sampling uses a ChaCha stream seeded from a single
//! `u64`, so a report depends only on its inputs and seed. Elapsed times
//! are the only nondeterministic fields.

use std::time::Instant;

use num_integer::Integer;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{is_prime, units};
use crate::bounds::{
    bounds_for_noise, bounds_prefix_noise, bounds_two_element, bounds_zero_p, BoundsReport,
};
use crate::cyclic::{noisy_sum, CyclicSet};
use crate::equivalence::{apply_transform, are_equivalent, size3_orbit};
use crate::error::{Error, Result};
use crate::sumfree::{is_sumfree, longest_interval, search_mu, SearchOptions, SumFreeParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NoiseKind {
    Prefix,
    TwoElement,
    Custom,
}

impl NoiseKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            NoiseKind::Prefix => "prefix",
            NoiseKind::TwoElement => "two_element",
            NoiseKind::Custom => "custom",
        }
    }
}

/// One grid point: closed-form bounds next to the oracle value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub c_or_s: usize,
    pub noise_kind: NoiseKind,
    /// Literal of the noise set actually used.
    pub noise: String,
    pub formula_lower: usize,
    pub formula_upper: usize,
    pub oracle_mu: usize,
    pub exhaustive: bool,
    /// Oracle equals the lower bound.
    pub tight: bool,
    /// Oracle equals `max(0, lower)`; only meaningful for prefix noise.
    pub matches_conjecture: bool,
    /// Bounds differ and the oracle reaches a positive upper bound.
    pub counterexample: bool,
    pub witness: Option<String>,
    pub elapsed_ms: u64,
}

/// Grid for [`sandwich_sweep`]. Covers `n_min <= n <= n_max`,
/// `1 <= l < k <= k_max` with `l <= l_max`, and `2 <= c <= c_max` for
/// prefix noise or every `s` in `2..n` with `gcd(s, n) > 1` for two-element
/// noise.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRanges {
    pub n_min: usize,
    pub n_max: usize,
    pub k_max: usize,
    pub l_max: usize,
    pub c_max: usize,
    /// Noise for [`NoiseKind::Custom`], reduced modulo each `n`.
    pub custom_noise: Option<Vec<i64>>,
}

impl Default for SweepRanges {
    fn default() -> Self {
        Self {
            n_min: 1,
            n_max: 30,
            k_max: 6,
            l_max: 5,
            c_max: 4,
            custom_noise: None,
        }
    }
}

/// Grid for [`conjecture_scan`]: `2 <= c <= c_max`, `1 <= l <= l_max`,
/// `l < k <= k_max`, `1 <= n < n_factor (k + l)`, optionally capped at
/// `n <= n_max`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ScanRanges {
    pub c_max: usize,
    pub k_max: usize,
    pub l_max: usize,
    pub n_factor: usize,
    pub n_max: Option<usize>,
}

impl ScanRanges {
    /// Small enough for a laptop in a few minutes.
    pub fn desk() -> Self {
        Self {
            c_max: 4,
            k_max: 8,
            l_max: 3,
            n_factor: 3,
            n_max: None,
        }
    }

    /// The full published range (`c <= 10`, `l < 10`, `k < 20`,
    /// `n < 5(k + l)`). Long running.
    pub fn full() -> Self {
        Self {
            c_max: 10,
            k_max: 19,
            l_max: 9,
            n_factor: 5,
            n_max: None,
        }
    }

    fn n_limit(&self, k: usize, l: usize) -> usize {
        let budget = (self.n_factor * (k + l)).saturating_sub(1);
        self.n_max.map_or(budget, |m| budget.min(m))
    }

    pub fn max_modulus(&self) -> usize {
        if self.k_max < 2 {
            return 0;
        }
        self.n_limit(self.k_max, self.l_max.min(self.k_max - 1))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub rows: Vec<SweepRow>,
    pub counterexamples: Vec<SweepRow>,
    pub incomplete_rows: usize,
}

fn oracle_opts(search: &SearchOptions) -> SearchOptions {
    SearchOptions {
        witness_cap: 1,
        parallel: false,
        ..search.clone()
    }
}

fn make_row(
    params: &SumFreeParams,
    noise: &CyclicSet,
    kind: NoiseKind,
    c_or_s: usize,
    bounds: &BoundsReport,
    search: &SearchOptions,
) -> Result<SweepRow> {
    let started = Instant::now();
    let res = search_mu(params, noise, &oracle_opts(search))?;
    let (lower, upper) = (bounds.lower, bounds.upper);
    Ok(SweepRow {
        n: params.n(),
        k: params.k(),
        l: params.l(),
        c_or_s,
        noise_kind: kind,
        noise: noise.to_literal(),
        formula_lower: lower,
        formula_upper: upper,
        oracle_mu: res.mu,
        exhaustive: res.exhaustive,
        tight: res.mu == lower,
        matches_conjecture: res.mu == lower,
        counterexample: res.exhaustive && lower != upper && res.mu == upper && upper > 0,
        witness: res.witnesses.first().map(CyclicSet::to_literal),
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

fn check_ceiling(n: usize, search: &SearchOptions) -> Result<()> {
    let ceiling = search.ceiling.min(crate::sumfree::KERNEL_MAX_MODULUS);
    if n > ceiling {
        return Err(Error::SearchCeiling { n, ceiling });
    }
    Ok(())
}

/// Compares the prefix-noise bounds with the oracle on every grid point and
/// flags rows where the bounds differ and the oracle attains the (positive)
/// upper bound. Counterexamples are reported, not treated as errors.
pub fn conjecture_scan(ranges: &ScanRanges, search: &SearchOptions) -> Result<ScanReport> {
    check_ceiling(ranges.max_modulus(), search)?;
    let mut grid = Vec::new();
    for c in 2..=ranges.c_max {
        for k in 2..=ranges.k_max {
            for l in 1..=ranges.l_max.min(k - 1) {
                for n in 1..=ranges.n_limit(k, l) {
                    grid.push((c, k, l, n));
                }
            }
        }
    }
    let rows = grid
        .par_iter()
        .map(|&(c, k, l, n)| {
            let params = SumFreeParams::new(n, k, l)?;
            let bounds = bounds_prefix_noise(n, k, l, c)?;
            make_row(
                &params,
                &CyclicSet::prefix(n, c)?,
                NoiseKind::Prefix,
                c,
                &bounds,
                search,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let counterexamples = rows.iter().filter(|r| r.counterexample).cloned().collect();
    let incomplete_rows = rows.iter().filter(|r| !r.exhaustive).count();
    Ok(ScanReport {
        rows,
        counterexamples,
        incomplete_rows,
    })
}

fn sweep_grid(kind: NoiseKind, ranges: &SweepRanges) -> Vec<(usize, usize, usize, usize)> {
    let mut grid = Vec::new();
    for n in ranges.n_min.max(1)..=ranges.n_max {
        for k in 2..=ranges.k_max {
            for l in 1..=ranges.l_max.min(k - 1) {
                match kind {
                    NoiseKind::Prefix => {
                        for c in 2..=ranges.c_max {
                            grid.push((n, k, l, c));
                        }
                    }
                    NoiseKind::TwoElement => {
                        for s in 2..n {
                            if s.gcd(&n) > 1 {
                                grid.push((n, k, l, s));
                            }
                        }
                    }
                    NoiseKind::Custom => grid.push((n, k, l, 0)),
                }
            }
        }
    }
    grid
}

fn sweep_point(
    kind: NoiseKind,
    ranges: &SweepRanges,
    (n, k, l, param): (usize, usize, usize, usize),
    search: &SearchOptions,
) -> Result<(SweepRow, Option<String>)> {
    let params = SumFreeParams::new(n, k, l)?;
    let mut problems = Vec::new();
    let (noise, bounds) = match kind {
        NoiseKind::Prefix => {
            let b = bounds_prefix_noise(n, k, l, param)?;
            if b.gap() > 1 {
                problems.push(format!("gap {} > 1", b.gap()));
            }
            if b.delta == 1 && b.gap() != 0 {
                problems.push("delta = 1 but bounds differ".to_string());
            }
            (CyclicSet::prefix(n, param)?, b)
        }
        NoiseKind::TwoElement => {
            let b = bounds_two_element(n, k, l, param)?;
            if is_prime(param as u64) && n % param == 0 {
                let z = bounds_zero_p(n, k, l, param)?;
                if (z.lower, z.upper) != (b.lower, b.upper) {
                    problems.push(format!(
                        "{{0,p}} bounds ({}, {}) disagree",
                        z.lower, z.upper
                    ));
                }
            }
            (CyclicSet::new(n, [0, param as i64])?, b)
        }
        NoiseKind::Custom => {
            let xs = ranges.custom_noise.clone().unwrap_or_else(|| vec![0]);
            let c = CyclicSet::new(n, xs)?;
            let b = bounds_for_noise(n, k, l, &c)?;
            (c, b)
        }
    };
    let row = make_row(&params, &noise, kind, param, &bounds, search)?;
    if row.exhaustive {
        if !(row.formula_lower <= row.oracle_mu && row.oracle_mu <= row.formula_upper) {
            problems.push(format!(
                "oracle {} outside [{}, {}]",
                row.oracle_mu, row.formula_lower, row.formula_upper
            ));
        }
        if let Some(coset) = bounds.coset_term {
            if coset >= n / (k + l)
                && !(bounds.lower == bounds.upper && bounds.upper == row.oracle_mu)
            {
                problems.push("equality branch does not pin the oracle".to_string());
            }
        }
    }
    let diagnostic = (!problems.is_empty()).then(|| {
        format!(
            "n={n} k={k} l={l} {}={param} noise={{{}}}: {}",
            if kind == NoiseKind::TwoElement {
                "s"
            } else {
                "c"
            },
            row.noise,
            problems.join("; ")
        )
    });
    Ok((row, diagnostic))
}

/// One row per grid point; any row outside its bounds aborts with a
/// diagnostic, since that would contradict a proved inequality.
pub fn sandwich_sweep(
    kind: NoiseKind,
    ranges: &SweepRanges,
    search: &SearchOptions,
) -> Result<Vec<SweepRow>> {
    if kind == NoiseKind::Custom && ranges.custom_noise.as_ref().is_none_or(Vec::is_empty) {
        return Err(Error::EmptyNoise);
    }
    check_ceiling(ranges.n_max, search)?;
    let grid = sweep_grid(kind, ranges);
    let results = grid
        .par_iter()
        .map(|&point| sweep_point(kind, ranges, point, search))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::with_capacity(results.len());
    for (row, problem) in results {
        if let Some(p) = problem {
            return Err(Error::SandwichViolation(p));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Summary of a property suite.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub passes: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            ..Self::default()
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if ok {
            self.passes += 1;
        } else if self.failures.len() < 20 {
            self.failures.push(describe());
        }
    }

    pub fn all_passed(&self) -> bool {
        self.passes == self.cases
    }
}

/// Longest sum-free interval against the prefix lower bound, over the
/// prefix sweep grid.
pub fn interval_suite(ranges: &SweepRanges) -> Result<SuiteReport> {
    let grid = sweep_grid(NoiseKind::Prefix, ranges);
    let checks = grid
        .par_iter()
        .map(|&(n, k, l, c)| -> Result<(bool, String)> {
            let params = SumFreeParams::new(n, k, l)?;
            let b = bounds_prefix_noise(n, k, l, c)?;
            let w = longest_interval(&params, c)?;
            let noise = CyclicSet::prefix(n, c)?;
            let ok = w.length == b.lower
                && w.witness.len() == w.length
                && is_sumfree(&w.witness, &noise, &params)?;
            Ok((
                ok,
                format!(
                    "n={n} k={k} l={l} c={c}: interval {} vs lower {}",
                    w.length, b.lower
                ),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = SuiteReport::new("longest_interval");
    for (ok, msg) in checks {
        report.record(ok, || msg);
    }
    Ok(report)
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize, min_size: usize) -> CyclicSet {
    let size = rng.gen_range(min_size.min(n)..=n);
    let elems = sample(rng, n, size).into_iter().map(|x| x as i64);
    CyclicSet::new(n, elems).expect("valid modulus")
}

/// Random cosets of random subgroups, to hit Kneser's equality cases.
fn random_coset_union(rng: &mut ChaCha8Rng, n: usize) -> CyclicSet {
    let divs = crate::arith::divisors(n);
    let d = divs[rng.gen_range(0..divs.len())];
    let reps = rng.gen_range(1..=d);
    let starts = sample(rng, d, reps).into_iter().collect::<Vec<_>>();
    CyclicSet::new(
        n,
        starts
            .into_iter()
            .flat_map(|s| (s..n).step_by(d))
            .map(|x| x as i64),
    )
    .expect("valid modulus")
}

#[derive(Clone, Debug, Serialize)]
pub struct KneserReport {
    pub trials: usize,
    pub kneser: SuiteReport,
    pub substab: SuiteReport,
}

/// Samples nonempty `A, B` (and a noise set `C`) and checks
/// `|A+B| >= |A+H| + |B+H| - |H|` for `H = stab(A+B)`, plus
/// `stab(A) <= stab(A+B)` and `stab(A) <= stab(A +_C B)`.
pub fn kneser_suite(trials: usize, n_max: usize, seed: u64) -> Result<KneserReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut kneser = SuiteReport::new("kneser");
    let mut substab = SuiteReport::new("substab");
    for _ in 0..trials {
        let n = rng.gen_range(1..=n_max.max(1));
        let (a, b) = if rng.gen_bool(0.2) {
            (
                random_coset_union(&mut rng, n),
                random_coset_union(&mut rng, n),
            )
        } else {
            (random_subset(&mut rng, n, 1), random_subset(&mut rng, n, 1))
        };
        let c = random_subset(&mut rng, n, 1);
        let sum = a.minkowski_sum(&b)?;
        let h = sum.stabilizer();
        let hs = h.to_set();
        let rhs = a.minkowski_sum(&hs)?.len() + b.minkowski_sum(&hs)?.len() - h.order();
        kneser.record(sum.len() >= rhs, || {
            format!("A={a:?} B={b:?}: |A+B|={} < {rhs}", sum.len())
        });
        let sa = a.stabilizer();
        let noisy = noisy_sum(&a, &b, &c)?;
        substab.record(
            sa.is_subgroup_of(&h) && sa.is_subgroup_of(&noisy.stabilizer()),
            || format!("A={a:?} B={b:?} C={c:?}: stab(A)={sa}"),
        );
    }
    Ok(KneserReport {
        trials,
        kneser,
        substab,
    })
}

/// Builds random sum-free sets greedily and checks that every set along a
/// random removal chain stays sum-free.
pub fn closure_suite(chains: usize, n_max: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("downward_closure");
    for _ in 0..chains {
        let n = rng.gen_range(2..=n_max.max(2));
        let k = rng.gen_range(2..=5);
        let l = rng.gen_range(1..k);
        let params = SumFreeParams::new(n, k, l)?;
        let noise = random_subset(&mut rng, n, 1);
        let noise = if noise.len() > 3 {
            CyclicSet::prefix(n, rng.gen_range(1..=3))?
        } else {
            noise
        };
        let mut a = CyclicSet::empty(n)?;
        for x in sample(&mut rng, n, n).into_iter() {
            let grown = a.with(x as i64);
            if is_sumfree(&grown, &noise, &params)? {
                a = grown;
            }
        }
        let mut elems = a.elements();
        while !elems.is_empty() {
            let idx = rng.gen_range(0..elems.len());
            elems.swap_remove(idx);
            let sub = CyclicSet::new(n, elems.iter().map(|&x| x as i64))?;
            let ok = is_sumfree(&sub, &noise, &params)?;
            report.record(ok, || format!("{sub:?} under {params:?} C={noise:?}"));
        }
    }
    Ok(report)
}

/// For every subset `A` of Z/nZ with `n <= n_max`, every `(k, l)` with
/// `k <= 4` and noise in `{0}`, `{0,1}`, `{0,2}`: translating by the
/// generator `n / gcd(n, k-l)` of `{t : (k-l)t = 0}` preserves sum-freeness.
pub fn translation_suite(n_max: usize) -> Result<SuiteReport> {
    let mut cases = Vec::new();
    for n in 1..=n_max {
        for k in 2..=4usize {
            for l in 1..k {
                if n.gcd(&(k - l)) > 1 {
                    cases.push((n, k, l));
                }
            }
        }
    }
    let results = cases
        .par_iter()
        .map(|&(n, k, l)| -> Result<(usize, Vec<String>)> {
            let params = SumFreeParams::new(n, k, l)?;
            let t = (n / params.delta()) as i64;
            let mut count = 0;
            let mut bad = Vec::new();
            for noise in [vec![0i64], vec![0, 1], vec![0, 2]] {
                let c = CyclicSet::new(n, noise)?;
                for bits in 0u64..1 << n {
                    let a = CyclicSet::new(n, (0..n as i64).filter(|i| bits >> i & 1 == 1))?;
                    count += 1;
                    if is_sumfree(&a, &c, &params)? != is_sumfree(&a.translate(t), &c, &params)? {
                        bad.push(format!("A={a:?} t={t} {params:?} C={c:?}"));
                    }
                }
            }
            Ok((count, bad))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = SuiteReport::new("translation_symmetry");
    for (count, bad) in results {
        report.cases += count;
        report.passes += count - bad.len();
        report.failures.extend(bad.into_iter().take(20));
    }
    Ok(report)
}

/// `project(lift(B)) = B`, `lift(project(A)) ⊇ A`, and `(A * g) / g = A`.
pub fn lift_scale_suite(trials: usize, n_max: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("lift_project_scale");
    for _ in 0..trials {
        let n = rng.gen_range(1..=n_max.max(1));
        let divs = crate::arith::divisors(n);
        let e = divs[rng.gen_range(0..divs.len())];
        let a = random_subset(&mut rng, n, 0);
        let b = random_subset(&mut rng, e, 0);
        let round = b.lift(n)?.project(e)?;
        report.record(round == b, || {
            format!("project(lift({b:?}), {e}) = {round:?}")
        });
        let hull = a.project(e)?.lift(n)?;
        report.record(a.is_subset(&hull), || {
            format!("{a:?} not in lift(project, {e})")
        });
        report.record(hull.len() == a.project(e)?.len() * (n / e), || {
            format!("lift size of {a:?} over {e}")
        });
        let us = units(n);
        let g = us[rng.gen_range(0..us.len())] as i64;
        let back = a.scale(g)?.divide(g)?;
        report.record(back == a && a.scale(g)?.len() == a.len(), || {
            format!("scale {a:?} by {g}")
        });
    }
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    pub mu_invariance: SuiteReport,
    pub size3_orbits: SuiteReport,
}

/// Random noise sets and random `g(C + {h})` images: the oracle value must
/// not change, for `(k, l)` in `{(2,1), (3,1), (3,2)}`.
pub fn equivalence_suite(trials: usize, n_max: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::new();
    for _ in 0..trials {
        let n = rng.gen_range(2..=n_max.max(2));
        let size = rng.gen_range(1..=n.min(4));
        let c = CyclicSet::new(n, sample(&mut rng, n, size).into_iter().map(|x| x as i64))?;
        let us = units(n);
        let g = us[rng.gen_range(0..us.len())] as i64;
        let h = rng.gen_range(0..n) as i64;
        cases.push((c, g, h));
    }
    let opts = SearchOptions {
        parallel: false,
        witness_cap: 1,
        ..SearchOptions::default()
    };
    let results = cases
        .par_iter()
        .map(|(c, g, h)| -> Result<(bool, String)> {
            let d = apply_transform(c, *g, *h)?;
            let n = c.modulus();
            let mut ok = true;
            let mut values = Vec::new();
            for (k, l) in [(2, 1), (3, 1), (3, 2)] {
                let params = SumFreeParams::new(n, k, l)?;
                let mc = search_mu(&params, c, &opts)?.mu;
                let md = search_mu(&params, &d, &opts)?.mu;
                ok &= mc == md;
                values.push(format!("({k},{l}): {mc} vs {md}"));
            }
            Ok((ok, format!("C={c:?} g={g} h={h}: {}", values.join(", "))))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = SuiteReport::new("mu_invariance");
    for (ok, msg) in results {
        report.record(ok, || msg);
    }
    Ok(report)
}

/// `d in size3_orbit(c, p)` against orbit enumeration of `{0,1,c}` and
/// `{0,1,d}`, for all primes up to `p_max`. Mismatches are reported.
pub fn orbit_suite(p_max: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("size3_orbit");
    for p in (2..=p_max).filter(|&p| is_prime(p as u64)) {
        for c in 2..p {
            let orbit = size3_orbit(c as i64, p)?;
            let base = CyclicSet::new(p, [0, 1, c as i64])?;
            for d in 2..p {
                let other = CyclicSet::new(p, [0, 1, d as i64])?;
                let brute = are_equivalent(&base, &other)?;
                report.record(orbit.contains(&d) == brute, || {
                    format!(
                        "p={p} c={c} d={d}: formula {} vs orbit {brute}",
                        orbit.contains(&d)
                    )
                });
            }
        }
    }
    Ok(report)
}

/// Largest `c - ceil((c-2)/k)` over the given ranges.
fn redundancy_threshold(cs: &[usize], ks: &[usize]) -> usize {
    cs.iter()
        .flat_map(|&c| ks.iter().map(move |&k| c - (c - 2).div_ceil(k)))
        .max()
        .unwrap_or(0)
}

/// Whenever `is_redundant(A, z, c, k)` holds, `k *_C A` and
/// `k *_C (A ∪ {z})` are equal, for `C = {0, ..., c-1}`.
///
/// Translation reduces to `z = 0`. Every `A` whose neighbours of 0 are
/// closer together than the largest threshold is enumerated, so every
/// redundant configuration with `n <= n_max` is covered; the remaining sets
/// are sampled to confirm the predicate rejects them.
pub fn redundancy_suite(
    n_max: usize,
    cs: &[usize],
    ks: &[usize],
    seed: u64,
) -> Result<SuiteReport> {
    if cs.iter().any(|&c| c < 2) || ks.contains(&0) {
        return Err(Error::InvalidParams("need c >= 2 and k >= 1".into()));
    }
    let limit = redundancy_threshold(cs, ks);
    let mut shapes = Vec::new();
    for n in 2..=n_max {
        for before in 1..n {
            for after in 1..n {
                if before + after < limit && before + after <= n {
                    shapes.push((n, before, after));
                }
            }
        }
    }
    let noise = |n: usize, c: usize| CyclicSet::prefix(n, c.min(n)).expect("n > 0");
    let results = shapes
        .par_iter()
        .map(
            |&(n, before, after)| -> Result<(usize, usize, Vec<String>)> {
                let free = if before + after == n {
                    0
                } else {
                    n - before - after - 1
                };
                let (mut cases, mut redundant, mut bad) = (0, 0, Vec::new());
                for bits in 0u64..1 << free {
                    let rest = (0..free)
                        .filter(|i| bits >> i & 1 == 1)
                        .map(|i| (after + 1 + i) as i64);
                    let a = CyclicSet::new(n, rest.chain([after as i64, (n - before) as i64]))?;
                    let with_z = a.with(0);
                    for &c in cs {
                        let cset = noise(n, c);
                        for &k in ks {
                            cases += 1;
                            if !crate::sumfree::is_redundant(&a, 0, c, k)? {
                                continue;
                            }
                            redundant += 1;
                            if crate::cyclic::iterated_noisy(k, &with_z, &cset)?
                                != crate::cyclic::iterated_noisy(k, &a, &cset)?
                            {
                                bad.push(format!("n={n} A={a} z=0 c={c} k={k}"));
                            }
                        }
                    }
                }
                Ok((cases, redundant, bad))
            },
        )
        .collect::<Result<Vec<_>>>()?;
    let mut report = SuiteReport::new("redundancy");
    let mut redundant = 0;
    for (cases, r, bad) in results {
        redundant += r;
        report.cases += cases;
        report.passes += cases - bad.len();
        report.failures.extend(bad.into_iter().take(20));
    }
    report.record(redundant > 0, || "no redundant configuration found".into());
    // Sets with a wide gap around 0 must never be flagged.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..2000 {
        let n = rng.gen_range(2..=n_max.max(2));
        let a = random_subset(&mut rng, n, 1);
        if a.contains(0) {
            continue;
        }
        let b = (1..n).find(|&d| a.contains(n - d)).unwrap_or(n);
        let f = (1..n).find(|&d| a.contains(d)).unwrap_or(n);
        if b + f < limit {
            continue;
        }
        for &c in cs {
            for &k in ks {
                let flagged = crate::sumfree::is_redundant(&a, 0, c, k)?;
                report.record(!flagged, || {
                    format!("n={n} A={a} flagged with gap {}", b + f)
                });
            }
        }
    }
    Ok(report)
}
