//! Acceptance suite. Every criterion runs at its stated size and time limit
//! and prints one PASS/FAIL line; the test fails if any criterion does.

use std::io::Write;
use std::time::{Duration, Instant};

use noisysum::arith::{divisors, is_prime};
use noisysum::sumfree::KERNEL_MAX_MODULUS;
use noisysum::verify::{self, NoiseKind, ScanRanges, SuiteReport, SweepRanges};
use noisysum::*;
use num_integer::Integer;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

const SEED: u64 = 0x5EED_2024;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite(report: &SuiteReport) -> Outcome {
    ensure(report.all_passed(), || {
        format!(
            "{}: {}/{} passed, first failures {:?}",
            report.name, report.passes, report.cases, report.failures
        )
    })?;
    Ok(format!(
        "{} {}/{}",
        report.name, report.passes, report.cases
    ))
}

fn set(n: usize, xs: &[i64]) -> CyclicSet {
    CyclicSet::new(n, xs.iter().copied()).unwrap()
}

fn params(n: usize, k: usize, l: usize) -> SumFreeParams {
    SumFreeParams::new(n, k, l).unwrap()
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn golden_values() -> Outcome {
    let c01 = set(10, &[0, 1]);
    let r = brute_force_mu(&params(10, 2, 1), &c01, 8).map_err(err)?;
    ensure(r.mu == 3, || format!("mu(10,2,1) = {}", r.mu))?;
    let w = set(10, &[4, 5, 6]);
    ensure(
        is_sumfree(&w, &c01, &params(10, 2, 1)).map_err(err)?,
        || "{4,5,6} rejected".into(),
    )?;
    ensure(r.witnesses.contains(&w), || {
        "{4,5,6} not among witnesses".into()
    })?;
    for (c, mu, lower, upper) in [(2usize, 2usize, 2usize, 3usize), (3, 1, 1, 2)] {
        let noise = CyclicSet::prefix(40, c).map_err(err)?;
        let got = brute_force_mu(&params(40, 9, 4), &noise, 1).map_err(err)?;
        ensure(got.mu == mu && got.exhaustive, || {
            format!("mu(40,9,4,c={c}) = {}", got.mu)
        })?;
        let b = bounds_prefix_noise(40, 9, 4, c).map_err(err)?;
        ensure((b.lower, b.upper) == (lower, upper), || {
            format!("bounds(40,9,4,c={c}) = ({}, {})", b.lower, b.upper)
        })?;
    }
    Ok("mu 3 / 2 / 1, bounds (2,3) and (1,2)".into())
}

fn prefix_ranges() -> SweepRanges {
    SweepRanges {
        n_min: 1,
        n_max: 30,
        k_max: 6,
        l_max: 5,
        c_max: 4,
        custom_noise: None,
    }
}

fn prefix_sandwich() -> Outcome {
    let rows = verify::sandwich_sweep(
        NoiseKind::Prefix,
        &prefix_ranges(),
        &SearchOptions::default(),
    )
    .map_err(err)?;
    let expected: usize = (2..=6).map(|k| k - 1).sum::<usize>() * 30 * 3;
    ensure(rows.len() == expected, || {
        format!("{} rows, expected {expected}", rows.len())
    })?;
    for r in &rows {
        let gap = r.formula_upper - r.formula_lower;
        let delta = r.n.gcd(&(r.k - r.l));
        ensure(r.exhaustive, || format!("row {r:?} not exhaustive"))?;
        ensure(
            r.formula_lower <= r.oracle_mu && r.oracle_mu <= r.formula_upper,
            || format!("not sandwiched: {r:?}"),
        )?;
        ensure(gap <= 1 && (delta != 1 || gap == 0), || {
            format!("gap {gap}, delta {delta}: {r:?}")
        })?;
    }
    let tight = rows.iter().filter(|r| r.tight).count();
    Ok(format!("{} rows sandwiched, {tight} tight", rows.len()))
}

fn constructive_lower_bound() -> Outcome {
    let report = verify::interval_suite(&prefix_ranges()).map_err(err)?;
    // Spot-check the clamp independently of the suite.
    for (n, k, l, c) in [
        (2usize, 5usize, 1usize, 4usize),
        (7, 6, 1, 4),
        (30, 6, 5, 4),
    ] {
        let b = bounds_prefix_noise(n, k, l, c).map_err(err)?;
        let w = longest_interval(&params(n, k, l), c).map_err(err)?;
        ensure(w.length as i64 == b.raw_lower.max(0), || {
            format!(
                "({n},{k},{l},{c}): interval {} vs raw lower {}",
                w.length, b.raw_lower
            )
        })?;
    }
    suite(&report)
}

fn two_element_sandwich() -> Outcome {
    let ranges = SweepRanges {
        k_max: 5,
        l_max: 4,
        ..prefix_ranges()
    };
    let rows = verify::sandwich_sweep(NoiseKind::TwoElement, &ranges, &SearchOptions::default())
        .map_err(err)?;
    let mut equality_rows = 0;
    for r in &rows {
        ensure(r.exhaustive, || format!("row {r:?} not exhaustive"))?;
        ensure(r.c_or_s.gcd(&r.n) > 1, || format!("unit s in {r:?}"))?;
        ensure(
            r.formula_lower <= r.oracle_mu && r.oracle_mu <= r.formula_upper,
            || format!("not sandwiched: {r:?}"),
        )?;
        let b = bounds_two_element(r.n, r.k, r.l, r.c_or_s).map_err(err)?;
        if b.coset_term.unwrap_or(0) >= r.n / (r.k + r.l) {
            equality_rows += 1;
            ensure(b.lower == b.upper && b.upper == r.oracle_mu, || {
                format!("equality branch fails: {r:?}")
            })?;
        }
    }
    let mut zero_p = 0;
    for n in 2..=30usize {
        for p in divisors(n)
            .into_iter()
            .filter(|&p| p < n && is_prime(p as u64))
        {
            for k in 2..=5 {
                for l in 1..k {
                    let a = bounds_zero_p(n, k, l, p).map_err(err)?;
                    let b = bounds_two_element(n, k, l, p).map_err(err)?;
                    ensure((a.lower, a.upper) == (b.lower, b.upper), || {
                        format!(
                            "({n},{k},{l},p={p}): ({},{}) vs ({},{})",
                            a.lower, a.upper, b.lower, b.upper
                        )
                    })?;
                    zero_p += 1;
                }
            }
        }
    }
    Ok(format!(
        "{} rows sandwiched, {equality_rows} on the equality branch, {zero_p} prime cases agree",
        rows.len()
    ))
}

fn classical_formulas() -> Outcome {
    let opts = SearchOptions {
        witness_cap: 1,
        ..SearchOptions::default()
    };
    let mut cases = 0;
    for n in 1..=24usize {
        for k in 2..=5 {
            for l in 1..k {
                let oracle = search_mu(&params(n, k, l), &set(n, &[0]), &opts).map_err(err)?;
                let formula = bajnok_matzke(n, k, l).map_err(err)?;
                ensure(oracle.exhaustive && oracle.mu == formula, || {
                    format!("({n},{k},{l}): formula {formula}, oracle {}", oracle.mu)
                })?;
                cases += 1;
            }
        }
    }
    for p in (2..=23usize).filter(|&p| is_prime(p as u64)) {
        for k in 2..=6 {
            for l in 1..k {
                let oracle = search_mu(&params(p, k, l), &set(p, &[0]), &opts).map_err(err)?;
                let formula = bier_chin_prime(p, k, l).map_err(err)?;
                ensure(oracle.mu == formula, || {
                    format!(
                        "p={p} ({k},{l}): prime formula {formula}, oracle {}",
                        oracle.mu
                    )
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases agree"))
}

fn property_suites() -> Outcome {
    let kneser = verify::kneser_suite(1000, 64, SEED).map_err(err)?;
    ensure(kneser.trials == 1000, || "wrong trial count".into())?;
    let parts = [
        suite(&kneser.kneser)?,
        suite(&kneser.substab)?,
        suite(&verify::closure_suite(500, 32, SEED).map_err(err)?)?,
        suite(&verify::translation_suite(16).map_err(err)?)?,
        suite(&verify::lift_scale_suite(500, 64, SEED).map_err(err)?)?,
    ];
    Ok(parts.join(", "))
}

fn equivalence_invariance() -> Outcome {
    let mu = verify::equivalence_suite(200, 14, SEED).map_err(err)?;
    ensure(mu.cases == 200, || format!("{} cases", mu.cases))?;
    let orbits = verify::orbit_suite(13).map_err(err)?;
    Ok(format!("{}, {}", suite(&mu)?, suite(&orbits)?))
}

fn conjecture_scan() -> Outcome {
    let ranges = ScanRanges::desk();
    ensure(ranges.max_modulus() <= KERNEL_MAX_MODULUS, || {
        "desk grid too large".into()
    })?;
    let report = verify::conjecture_scan(&ranges, &SearchOptions::default()).map_err(err)?;
    ensure(report.incomplete_rows == 0, || {
        format!("{} uncertified rows", report.incomplete_rows)
    })?;
    ensure(report.counterexamples.is_empty(), || {
        format!("counterexamples: {:?}", report.counterexamples)
    })?;
    let open = report
        .rows
        .iter()
        .filter(|r| r.formula_lower != r.formula_upper)
        .count();
    Ok(format!(
        "{} rows, {open} with a gap, 0 counterexamples",
        report.rows.len()
    ))
}

fn redundancy_lemma() -> Outcome {
    let report = verify::redundancy_suite(24, &[2, 3, 4, 5], &[1, 2, 3], SEED).map_err(err)?;
    suite(&report)
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 9] = [
        ("1 golden values", Duration::from_secs(5), golden_values),
        (
            "2 prefix sandwich",
            Duration::from_secs(120),
            prefix_sandwich,
        ),
        (
            "3 constructive lower bound",
            Duration::from_secs(120),
            constructive_lower_bound,
        ),
        (
            "4 two-element sandwich",
            Duration::from_secs(300),
            two_element_sandwich,
        ),
        (
            "5 classical formulas",
            Duration::from_secs(120),
            classical_formulas,
        ),
        (
            "6 property suites",
            Duration::from_secs(60),
            property_suites,
        ),
        (
            "7 equivalence invariance",
            Duration::from_secs(120),
            equivalence_invariance,
        ),
        (
            "8 conjecture scan",
            Duration::from_secs(600),
            conjecture_scan,
        ),
        (
            "9 redundancy lemma",
            Duration::from_secs(60),
            redundancy_lemma,
        ),
    ];
    let mut failed = Vec::new();
    let mut out = std::io::stdout();
    for (name, limit, run) in criteria {
        let started = Instant::now();
        let outcome = run();
        let elapsed = started.elapsed();
        let verdict = match &outcome {
            Ok(_) if elapsed <= limit => "PASS",
            _ => "FAIL",
        };
        let detail = match outcome {
            Ok(d) => d,
            Err(e) => e,
        };
        // Written straight to stdout so the lines survive output capture.
        writeln!(
            out,
            "{verdict} criterion {name}: {:.2}s (limit {}s) {detail}",
            elapsed.as_secs_f64(),
            limit.as_secs()
        )
        .unwrap();
        if verdict == "FAIL" {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
