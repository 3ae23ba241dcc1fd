//! Slow, obviously-correct reference implementations over `BTreeSet`s.
//! Nothing here touches the bitmask code paths of the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Naive = BTreeSet<usize>;

pub fn naive(n: usize, xs: &[i64]) -> Naive {
    xs.iter()
        .map(|&x| x.rem_euclid(n as i64) as usize)
        .collect()
}

pub fn sum(n: usize, a: &Naive, b: &Naive) -> Naive {
    let mut out = Naive::new();
    for &x in a {
        for &y in b {
            out.insert((x + y) % n);
        }
    }
    out
}

pub fn noisy(n: usize, a: &Naive, b: &Naive, c: &Naive) -> Naive {
    sum(n, &sum(n, a, b), c)
}

/// `kA + (k-1)C`, built as `A +_C A +_C ... +_C A`.
pub fn iterated(n: usize, k: usize, a: &Naive, c: &Naive) -> Naive {
    let mut acc = a.clone();
    for _ in 1..k {
        acc = noisy(n, &acc, a, c);
    }
    acc
}

pub fn sumfree(n: usize, k: usize, l: usize, a: &Naive, c: &Naive) -> bool {
    iterated(n, k, a, c).is_disjoint(&iterated(n, l, a, c))
}

pub fn subsets(n: usize) -> impl Iterator<Item = Naive> {
    (0u64..1 << n).map(move |bits| (0..n).filter(|i| bits >> i & 1 == 1).collect())
}

/// Largest sum-free subset by scanning all `2^n` subsets.
pub fn mu(n: usize, k: usize, l: usize, c: &Naive) -> usize {
    subsets(n)
        .filter(|a| sumfree(n, k, l, a, c))
        .map(|a| a.len())
        .max()
        .unwrap_or(0)
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All images `g(C + h)` over units `g` and shifts `h`.
pub fn orbit(n: usize, c: &Naive) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for g in (1..=n.max(1)).filter(|&g| gcd(g % n.max(1), n) == 1 || n == 1) {
        for h in 0..n {
            let img: Naive = c.iter().map(|&x| ((x + h) * g) % n).collect();
            out.insert(img.into_iter().collect());
        }
    }
    out
}
