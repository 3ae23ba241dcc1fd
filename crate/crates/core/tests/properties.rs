mod common;

use proptest::collection::vec;
use proptest::prelude::*;

use noisysum::arith::units;
use noisysum::*;

fn from_bits(n: usize, bits: &[bool]) -> CyclicSet {
    CyclicSet::new(n, (0..n).filter(|&i| bits[i]).map(|i| i as i64)).unwrap()
}

fn nonempty(n: usize, bits: &[bool], fallback: usize) -> CyclicSet {
    let s = from_bits(n, bits);
    if s.is_empty() {
        s.with(fallback as i64)
    } else {
        s
    }
}

/// Modulus with three random subsets of it.
fn triple(n_max: usize) -> impl Strategy<Value = (usize, Vec<bool>, Vec<bool>, Vec<bool>)> {
    (1..=n_max).prop_flat_map(|n| {
        (
            Just(n),
            vec(any::<bool>(), n),
            vec(any::<bool>(), n),
            vec(any::<bool>(), n),
        )
    })
}

fn sparse_triple(n_max: usize) -> impl Strategy<Value = (usize, Vec<bool>, Vec<bool>, Vec<bool>)> {
    (1..=n_max).prop_flat_map(|n| {
        (
            Just(n),
            vec(prop::bool::weighted(0.15), n),
            vec(prop::bool::weighted(0.15), n),
            vec(prop::bool::weighted(0.15), n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn sum_is_commutative_and_associative((n, a, b, c) in triple(80)) {
        let (a, b, c) = (from_bits(n, &a), from_bits(n, &b), from_bits(n, &c));
        prop_assert_eq!(a.minkowski_sum(&b).unwrap(), b.minkowski_sum(&a).unwrap());
        prop_assert_eq!(
            a.minkowski_sum(&b).unwrap().minkowski_sum(&c).unwrap(),
            a.minkowski_sum(&b.minkowski_sum(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn sum_matches_reference((n, a, b, _c) in sparse_triple(150)) {
        let (a, b) = (from_bits(n, &a), from_bits(n, &b));
        let expect = common::sum(n, &a.iter().collect(), &b.iter().collect());
        prop_assert_eq!(a.minkowski_sum(&b).unwrap().iter().collect::<common::Naive>(), expect);
    }

    #[test]
    fn sum_size_bounds((n, a, b, _c) in sparse_triple(64), x in 0usize..64) {
        let (a, b) = (nonempty(n, &a, x % n), nonempty(n, &b, x % n));
        let s = a.minkowski_sum(&b).unwrap();
        prop_assert!(s.len() >= a.len().max(b.len()));
        prop_assert!(s.len() <= a.len() * b.len());
    }

    #[test]
    fn kneser_inequality((n, a, b, _c) in sparse_triple(64), x in 0usize..64) {
        let (a, b) = (nonempty(n, &a, x % n), nonempty(n, &b, x % n));
        let s = a.minkowski_sum(&b).unwrap();
        let h = s.stabilizer();
        let hs = h.to_set();
        let rhs = a.minkowski_sum(&hs).unwrap().len() + b.minkowski_sum(&hs).unwrap().len();
        prop_assert!(s.len() + h.order() >= rhs);
    }

    #[test]
    fn stabilizer_structure((n, a, b, _c) in triple(64)) {
        let (a, b) = (from_bits(n, &a), from_bits(n, &b));
        let g = a.stabilizer().generator();
        prop_assert_eq!(n % g, 0);
        for m in 0..n / g {
            prop_assert_eq!(a.translate((m * g) as i64), a.clone());
        }
        // The generator is the least such divisor.
        for d in (1..g).filter(|d| n % d == 0) {
            prop_assert_ne!(a.translate(d as i64), a.clone());
        }
        if !a.is_empty() && !b.is_empty() {
            let gs = a.minkowski_sum(&b).unwrap().stabilizer().generator();
            prop_assert_eq!(g % gs, 0);
        }
    }

    #[test]
    fn iterated_recurrence((n, a, _b, c) in sparse_triple(40), k in 2usize..6, x in 0usize..40) {
        let (a, c) = (nonempty(n, &a, x % n), nonempty(n, &c, 0));
        let prev = iterated_noisy(k - 1, &a, &c).unwrap();
        prop_assert_eq!(iterated_noisy(k, &a, &c).unwrap(), noisy_sum(&prev, &a, &c).unwrap());
        let naive = common::iterated(n, k, &a.iter().collect(), &c.iter().collect());
        prop_assert_eq!(iterated_noisy(k, &a, &c).unwrap().iter().collect::<common::Naive>(), naive);
    }

    #[test]
    fn lift_project((n, a, _b, _c) in triple(120), pick in 0usize..64) {
        let a = from_bits(n, &a);
        let divs = noisysum::arith::divisors(n);
        let e = divs[pick % divs.len()];
        let proj = a.project(e).unwrap();
        prop_assert_eq!(proj.lift(n).unwrap().project(e).unwrap(), proj.clone());
        prop_assert!(a.is_subset(&proj.lift(n).unwrap()));
    }

    #[test]
    fn scale_round_trip((n, a, _b, _c) in triple(120), pick in 0usize..1000) {
        let a = from_bits(n, &a);
        let us = units(n);
        let g = us[pick % us.len()] as i64;
        prop_assert_eq!(a.scale(g).unwrap().divide(g).unwrap(), a.clone());
        prop_assert_eq!(a.scale(g).unwrap().len(), a.len());
    }

    #[test]
    fn literal_round_trip((n, a, _b, _c) in triple(200)) {
        let a = from_bits(n, &a);
        prop_assert_eq!(CyclicSet::parse(n, &a.to_literal()).unwrap(), a);
    }

    #[test]
    fn downward_closure((n, a, _b, _c) in sparse_triple(30), k in 2usize..5, c in 1usize..4, drop in 0usize..30) {
        let l = 1 + drop % (k - 1);
        let params = SumFreeParams::new(n, k, l).unwrap();
        let noise = CyclicSet::prefix(n, c.min(n)).unwrap();
        let a = from_bits(n, &a);
        if is_sumfree(&a, &noise, &params).unwrap() {
            let elems = a.elements();
            if !elems.is_empty() {
                let x = elems[drop % elems.len()];
                let sub = CyclicSet::new(n, elems.iter().filter(|&&y| y != x).map(|&y| y as i64)).unwrap();
                prop_assert!(is_sumfree(&sub, &noise, &params).unwrap());
            }
        }
    }

    #[test]
    fn prefix_bounds_shape(n in 1usize..400, k in 2usize..12, l0 in 1usize..12, c in 2usize..12) {
        let l = 1 + (l0 - 1) % (k - 1);
        let b = bounds_prefix_noise(n, k, l, c).unwrap();
        prop_assert!(b.gap() <= 1);
        prop_assert!(b.lower <= b.upper);
        if b.delta == 1 {
            prop_assert_eq!(b.lower, b.upper);
        }
        let t = c as i64 - 2;
        let f = (n as i64 + 2 * t).div_euclid((k + l) as i64);
        prop_assert_eq!(b.r as i64, (-(k as i64) * f + t).rem_euclid(b.delta as i64));
        prop_assert_eq!(b.r as i64, (-(k as i64) * b.chi - (k as i64 - 1) * t).rem_euclid(b.delta as i64));
    }

    #[test]
    fn interval_length_near_chi(n in 1usize..60, k in 2usize..7, l0 in 1usize..7, c in 2usize..6) {
        let l = 1 + (l0 - 1) % (k - 1);
        let params = SumFreeParams::new(n, k, l).unwrap();
        let w = longest_interval(&params, c).unwrap();
        let chi = chi(n, k, l, c).unwrap();
        prop_assert!(w.length as i64 == chi.max(0) || w.length as i64 == (chi - 1).max(0));
        prop_assert_eq!(w.length, bounds_prefix_noise(n, k, l, c).unwrap().lower);
        prop_assert!(is_sumfree(&w.witness, &CyclicSet::prefix(n, c).unwrap(), &params).unwrap());
    }

    #[test]
    fn equivalence_is_an_equivalence((n, a, b, c) in sparse_triple(16), g in 0usize..100, h in 0i64..16) {
        let x = nonempty(n, &a, 0);
        let y = nonempty(n, &b, 0);
        let z = nonempty(n, &c, 0);
        prop_assert!(are_equivalent(&x, &x).unwrap());
        prop_assert_eq!(are_equivalent(&x, &y).unwrap(), are_equivalent(&y, &x).unwrap());
        if are_equivalent(&x, &y).unwrap() && are_equivalent(&y, &z).unwrap() {
            prop_assert!(are_equivalent(&x, &z).unwrap());
        }
        let us = units(n);
        let img = apply_transform(&x, us[g % us.len()] as i64, h).unwrap();
        prop_assert!(are_equivalent(&x, &img).unwrap());
        prop_assert_eq!(canonicalize(&img), canonicalize(&x));
    }

    #[test]
    fn composite_transforms_stay_in_orbit(
        (n, a, _b, _c) in sparse_triple(20),
        steps in vec((0usize..100, 0i64..20), 1..5),
    ) {
        let start = nonempty(n, &a, 0);
        let us = units(n);
        let mut cur = start.clone();
        for (g, h) in steps {
            cur = cur.translate(h).scale(us[g % us.len()] as i64).unwrap();
        }
        let orbit = common::orbit(n, &start.iter().collect());
        prop_assert!(orbit.contains(&cur.elements()));
    }
}

#[test]
fn size3_orbits_partition_residues() {
    for pr in [3usize, 5, 7, 11, 13] {
        let mut covered = std::collections::BTreeSet::new();
        for c in 2..pr {
            let orbit = size3_orbit(c as i64, pr).unwrap();
            covered.extend(orbit.iter().copied());
            for &d in &orbit {
                assert!(
                    size3_orbit(d as i64, pr).unwrap().contains(&c),
                    "p={pr} c={c} d={d}"
                );
                // Membership is an equivalence, so orbits coincide.
                assert_eq!(size3_orbit(d as i64, pr).unwrap(), orbit);
            }
        }
        assert_eq!(covered, (2..pr).collect());
    }
}
