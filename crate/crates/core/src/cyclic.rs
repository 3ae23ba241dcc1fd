//! Exact set arithmetic in Z/nZ.
//!
//! A [`CyclicSet`] is a membership bitmask over the residues `0..n`, stored
//! in 64-bit words. Adding a singleton is a rotation of the mask; a general
//! sumset is the union of the rotations of one operand by every element of
//! the other (the smaller one is iterated).

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::arith::{divisors, mod_inverse, residue};
use crate::error::{Error, Result};

/// Largest modulus accepted by [`CyclicSet`] constructors.
pub const MAX_MODULUS: usize = 1 << 16;

const WORD_BITS: usize = 64;

/// A subset of Z/nZ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclicSet {
    modulus: usize,
    words: Vec<u64>,
}

fn check_modulus(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if n > MAX_MODULUS {
        return Err(Error::ModulusTooLarge {
            n: n as u64,
            max: MAX_MODULUS as u64,
        });
    }
    Ok(())
}

fn word_count(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// `out |= src << s`, dropping bits that fall off the end of `out`.
fn shl_or(src: &[u64], s: usize, out: &mut [u64]) {
    let (ws, bs) = (s / WORD_BITS, s % WORD_BITS);
    for (i, &w) in src.iter().enumerate() {
        let j = i + ws;
        if j >= out.len() {
            break;
        }
        out[j] |= w << bs;
        if bs != 0 && j + 1 < out.len() {
            out[j + 1] |= w >> (WORD_BITS - bs);
        }
    }
}

/// `out |= src >> s`.
fn shr_or(src: &[u64], s: usize, out: &mut [u64]) {
    let (ws, bs) = (s / WORD_BITS, s % WORD_BITS);
    for (j, o) in out.iter_mut().enumerate() {
        let i = j + ws;
        if i >= src.len() {
            break;
        }
        let mut v = src[i] >> bs;
        if bs != 0 && i + 1 < src.len() {
            v |= src[i + 1] << (WORD_BITS - bs);
        }
        *o |= v;
    }
}

impl CyclicSet {
    /// The empty subset of Z/nZ.
    pub fn empty(n: usize) -> Result<Self> {
        check_modulus(n)?;
        Ok(Self {
            modulus: n,
            words: vec![0; word_count(n)],
        })
    }

    /// All of Z/nZ.
    pub fn full(n: usize) -> Result<Self> {
        let mut set = Self::empty(n)?;
        set.words.iter_mut().for_each(|w| *w = u64::MAX);
        set.trim();
        Ok(set)
    }

    /// Builds a set from arbitrary integers, reducing each modulo `n`.
    pub fn new<I>(n: usize, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = i64>,
    {
        let mut set = Self::empty(n)?;
        for x in elements {
            set.set_bit(residue(x, n));
        }
        Ok(set)
    }

    /// The cyclic interval `{start, start + 1, ..., start + len - 1}`.
    pub fn interval(n: usize, start: i64, len: usize) -> Result<Self> {
        Self::new(n, (0..len as i64).map(|i| start + i))
    }

    /// The prefix interval `{0, 1, ..., c - 1}`.
    pub fn prefix(n: usize, c: usize) -> Result<Self> {
        Self::interval(n, 0, c)
    }

    /// Parses a set literal such as `"0,1,5"` relative to modulus `n`.
    ///
    /// Entries must be non-negative integers; they are reduced modulo `n`.
    /// The empty string (or only whitespace) is the empty set.
    pub fn parse(n: usize, literal: &str) -> Result<Self> {
        let trimmed = literal.trim();
        let mut values = Vec::new();
        if !trimmed.is_empty() {
            for part in trimmed.split(',') {
                let part = part.trim();
                let v: u64 = part.parse().map_err(|_| Error::InvalidLiteral {
                    literal: literal.to_string(),
                    reason: format!("{part:?} is not a non-negative integer"),
                })?;
                values.push((v % n.max(1) as u64) as i64);
            }
        }
        Self::new(n, values)
    }

    /// Canonical literal: members in ascending order, comma separated.
    pub fn to_literal(&self) -> String {
        let parts: Vec<String> = self.iter().map(|x| x.to_string()).collect();
        parts.join(",")
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.modulus
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.modulus && self.words[x / WORD_BITS] & (1u64 << (x % WORD_BITS)) != 0
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD_BITS + b)
            })
        })
    }

    pub fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Raw mask words, least significant residue first.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// A copy of this set with `x mod n` added.
    pub fn with(&self, x: i64) -> Self {
        let mut out = self.clone();
        out.set_bit(residue(x, self.modulus));
        out
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        let mut out = self.clone();
        out.words
            .iter_mut()
            .zip(&other.words)
            .for_each(|(a, b)| *a |= b);
        Ok(out)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        let mut out = self.clone();
        out.words
            .iter_mut()
            .zip(&other.words)
            .for_each(|(a, b)| *a &= b);
        Ok(out)
    }

    /// Panics if the moduli differ.
    pub fn is_disjoint(&self, other: &Self) -> bool {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Panics if the moduli differ.
    pub fn is_subset(&self, other: &Self) -> bool {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// `A + {g mod n}`.
    pub fn translate(&self, g: i64) -> Self {
        let mut out = vec![0; self.words.len()];
        self.rotate_or(residue(g, self.modulus), &mut out);
        Self {
            modulus: self.modulus,
            words: out,
        }
    }

    /// `-A`.
    pub fn negate(&self) -> Self {
        let n = self.modulus;
        let mut out = Self {
            modulus: n,
            words: vec![0; self.words.len()],
        };
        for x in self.iter() {
            out.set_bit((n - x) % n);
        }
        out
    }

    /// `{g * a : a in A}` for a unit `g`. Division by `g` is scaling by its inverse.
    pub fn scale(&self, g: i64) -> Result<Self> {
        let n = self.modulus;
        if (residue(g, n) as u64).gcd(&(n as u64)) != 1 {
            return Err(Error::NotAUnit { g, n });
        }
        let g = residue(g, n) as u64;
        let mut out = Self::empty(n)?;
        for x in self.iter() {
            out.set_bit(((x as u64 * g) % n as u64) as usize);
        }
        Ok(out)
    }

    /// `A / g`, i.e. scaling by the inverse of the unit `g`.
    pub fn divide(&self, g: i64) -> Result<Self> {
        let inv = mod_inverse(g, self.modulus)?;
        self.scale(inv as i64)
    }

    /// The Minkowski sum `A + B`.
    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = vec![0; self.words.len()];
        for g in small.iter() {
            large.rotate_or(g, &mut out);
        }
        Ok(Self {
            modulus: self.modulus,
            words: out,
        })
    }

    /// The difference set `A - B`.
    pub fn difference_set(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        self.minkowski_sum(&other.negate())
    }

    /// The stabilizer `{g : g + A = A}`.
    ///
    /// Only divisors of `n` are tested, smallest first. The empty set and the
    /// full group are stabilized by everything and get generator 1; nothing in
    /// the sumset theory ever asks for the stabilizer of the empty set, so this
    /// is a convention.
    pub fn stabilizer(&self) -> Subgroup {
        let n = self.modulus;
        let generator = divisors(n)
            .into_iter()
            .find(|&d| d == n || self.translate(d as i64) == *self)
            .unwrap_or(n);
        Subgroup {
            modulus: n,
            generator,
        }
    }

    /// Image under the canonical projection Z/nZ -> Z/eZ.
    pub fn project(&self, e: usize) -> Result<Self> {
        let n = self.modulus;
        if e == 0 || !n.is_multiple_of(e) {
            return Err(Error::NotADivisor { e, n });
        }
        let mut out = Self::empty(e)?;
        for x in self.iter() {
            out.set_bit(x % e);
        }
        Ok(out)
    }

    /// Full preimage of this subset of Z/eZ under Z/nZ -> Z/eZ.
    pub fn lift(&self, n: usize) -> Result<Self> {
        let e = self.modulus;
        if n == 0 || !n.is_multiple_of(e) {
            return Err(Error::NotADivisor { e, n });
        }
        let mut out = Self::empty(n)?;
        for x in self.iter() {
            for y in (x..n).step_by(e) {
                out.set_bit(y);
            }
        }
        Ok(out)
    }

    fn same_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        Ok(())
    }

    fn set_bit(&mut self, x: usize) {
        self.words[x / WORD_BITS] |= 1u64 << (x % WORD_BITS);
    }

    fn trim(&mut self) {
        let rem = self.modulus % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// `out |= A + {g}` for `0 <= g < n`.
    fn rotate_or(&self, g: usize, out: &mut [u64]) {
        let n = self.modulus;
        if g == 0 {
            out.iter_mut().zip(&self.words).for_each(|(o, w)| *o |= w);
            return;
        }
        if let ([w], [o]) = (self.words.as_slice(), &mut *out) {
            let low = if n == WORD_BITS {
                u64::MAX
            } else {
                (1u64 << n) - 1
            };
            *o |= ((w << g) | (w >> (n - g))) & low;
            return;
        }
        shr_or(&self.words, n - g, out);
        shl_or(&self.words, g, out);
        // Bits past n - 1 are never set in `out`, so the shl spill is all
        // that this clears.
        let rem = n % WORD_BITS;
        if rem != 0 {
            if let Some(last) = out.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl Ord for CyclicSet {
    /// Moduli first, then the ascending member lists lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.modulus
            .cmp(&other.modulus)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for CyclicSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CyclicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl fmt::Debug for CyclicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}} mod {}", self.to_literal(), self.modulus)
    }
}

/// `A +_C B = A + B + C`.
pub fn noisy_sum(a: &CyclicSet, b: &CyclicSet, c: &CyclicSet) -> Result<CyclicSet> {
    if c.is_empty() {
        return Err(Error::EmptyNoise);
    }
    a.minkowski_sum(b)?.minkowski_sum(c)
}

/// `k *_C A = kA + (k - 1)C`, with `1 *_C A = A`.
pub fn iterated_noisy(k: usize, a: &CyclicSet, c: &CyclicSet) -> Result<CyclicSet> {
    if k == 0 {
        return Err(Error::InvalidParams("k must be at least 1".into()));
    }
    if a.is_empty() {
        return Err(Error::EmptySet("A"));
    }
    if c.is_empty() {
        return Err(Error::EmptyNoise);
    }
    a.same_modulus(c)?;
    let mut acc = a.clone();
    for _ in 1..k {
        acc = acc.minkowski_sum(a)?.minkowski_sum(c)?;
    }
    Ok(acc)
}

/// The subgroup `<d>` of Z/nZ, where `d | n`. `d = n` is `{0}` and `d = 1` is
/// the whole group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    modulus: usize,
    generator: usize,
}

impl Subgroup {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        check_modulus(n)?;
        if d == 0 || !n.is_multiple_of(d) {
            return Err(Error::NotADivisor { e: d, n });
        }
        Ok(Self {
            modulus: n,
            generator: d,
        })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn generator(&self) -> usize {
        self.generator
    }

    pub fn order(&self) -> usize {
        self.modulus / self.generator
    }

    pub fn is_trivial(&self) -> bool {
        self.generator == self.modulus
    }

    pub fn contains(&self, x: usize) -> bool {
        x.is_multiple_of(self.generator)
    }

    /// `self <= other` in the subgroup lattice.
    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.modulus == other.modulus && self.generator.is_multiple_of(other.generator)
    }

    pub fn to_set(&self) -> CyclicSet {
        CyclicSet::new(
            self.modulus,
            (0..self.modulus as i64).step_by(self.generator),
        )
        .expect("modulus validated at construction")
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}> in Z/{}Z", self.generator, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, xs: &[i64]) -> CyclicSet {
        CyclicSet::new(n, xs.iter().copied()).unwrap()
    }

    /// Pairwise enumeration, independent of the mask rotations.
    fn naive_sum(a: &CyclicSet, b: &CyclicSet) -> CyclicSet {
        let n = a.modulus();
        let mut xs = Vec::new();
        for x in a.iter() {
            for y in b.iter() {
                xs.push(((x + y) % n) as i64);
            }
        }
        set(n, &xs)
    }

    #[test]
    fn make_set_reduces_and_dedups() {
        assert_eq!(set(5, &[7, 2]).elements(), vec![2]);
        assert!(set(10, &[]).is_empty());
        assert_eq!(set(10, &[4, 5, 6]).elements(), vec![4, 5, 6]);
        assert_eq!(set(10, &[-1]).elements(), vec![9]);
        assert_eq!(CyclicSet::new(0, [1]), Err(Error::ZeroModulus));
        assert!(CyclicSet::empty(MAX_MODULUS + 1).is_err());
    }

    #[test]
    fn minkowski_examples() {
        let a = set(5, &[1, 2]);
        let b = set(5, &[0, 3]);
        assert_eq!(a.minkowski_sum(&b).unwrap().elements(), vec![0, 1, 2, 4]);
        assert_eq!(a.minkowski_sum(&set(5, &[0])).unwrap(), a);
        assert!(set(5, &[]).minkowski_sum(&b).unwrap().is_empty());
        assert!(a.minkowski_sum(&set(6, &[0])).is_err());
    }

    #[test]
    fn multiword_rotation_matches_enumeration() {
        for n in [63, 64, 65, 127, 128, 129, 200] {
            let a = set(n, &[0, 1, 5, 62, 63, 64, (n - 1) as i64]);
            let b = set(n, &[3, 40, 70, 130]);
            assert_eq!(a.minkowski_sum(&b).unwrap(), naive_sum(&a, &b), "n={n}");
            for g in [0, 1, 63, 64, 65, n as i64 - 1] {
                let t = a.translate(g);
                let expect = set(n, &a.iter().map(|x| x as i64 + g).collect::<Vec<_>>());
                assert_eq!(t, expect, "n={n} g={g}");
            }
        }
    }

    #[test]
    fn noisy_examples() {
        let c = set(10, &[0, 1]);
        assert_eq!(
            noisy_sum(&set(10, &[0]), &set(10, &[0]), &c)
                .unwrap()
                .elements(),
            vec![0, 1]
        );
        assert_eq!(
            noisy_sum(&set(5, &[1, 2]), &set(5, &[0, 3]), &set(5, &[0]))
                .unwrap()
                .elements(),
            vec![0, 1, 2, 4]
        );
        let a = set(10, &[4, 5, 6]);
        assert_eq!(
            noisy_sum(&a, &a, &c).unwrap().elements(),
            vec![0, 1, 2, 3, 8, 9]
        );
        assert_eq!(noisy_sum(&a, &a, &set(10, &[])), Err(Error::EmptyNoise));
    }

    #[test]
    fn iterated_examples() {
        let c = set(10, &[0, 1]);
        let a = set(10, &[4, 5, 6]);
        assert_eq!(iterated_noisy(1, &a, &c).unwrap(), a);
        assert_eq!(
            iterated_noisy(2, &set(10, &[0]), &c).unwrap().elements(),
            vec![0, 1]
        );
        assert_eq!(
            iterated_noisy(2, &a, &c).unwrap(),
            noisy_sum(&a, &a, &c).unwrap()
        );
        assert!(iterated_noisy(0, &a, &c).is_err());
        assert!(iterated_noisy(2, &set(10, &[]), &c).is_err());
    }

    #[test]
    fn differences() {
        assert_eq!(
            set(7, &[3])
                .difference_set(&set(7, &[3]))
                .unwrap()
                .elements(),
            vec![0]
        );
        let a = set(5, &[0, 1]);
        assert_eq!(a.difference_set(&a).unwrap().elements(), vec![0, 1, 4]);
        assert!(set(5, &[]).difference_set(&a).unwrap().is_empty());
    }

    #[test]
    fn stabilizers() {
        assert_eq!(set(6, &[0, 2, 4]).stabilizer().generator(), 2);
        assert_eq!(set(5, &[0, 1]).stabilizer().generator(), 5);
        assert_eq!(CyclicSet::full(8).unwrap().stabilizer().generator(), 1);
        assert_eq!(CyclicSet::empty(8).unwrap().stabilizer().generator(), 1);
        let h = set(12, &[1, 4, 7, 10, 2, 5, 8, 11]).stabilizer();
        assert_eq!((h.generator(), h.order()), (3, 4));
    }

    #[test]
    fn translate_and_scale() {
        assert_eq!(set(10, &[0, 1]).translate(3).elements(), vec![3, 4]);
        assert_eq!(set(10, &[9]).translate(1).elements(), vec![0]);
        let a = set(10, &[2, 7]);
        assert_eq!(a.translate(0), a);
        assert_eq!(set(5, &[0, 2]).scale(3).unwrap().elements(), vec![0, 1]);
        assert_eq!(a.scale(1).unwrap(), a);
        assert_eq!(
            set(4, &[0, 2]).scale(2),
            Err(Error::NotAUnit { g: 2, n: 4 })
        );
        assert_eq!(set(5, &[0, 1]).divide(2).unwrap().elements(), vec![0, 3]);
    }

    #[test]
    fn project_and_lift() {
        assert_eq!(
            set(10, &[0, 5, 7]).project(5).unwrap().elements(),
            vec![0, 2]
        );
        let a = set(10, &[3, 8]);
        assert_eq!(a.project(10).unwrap(), a);
        assert!(set(10, &[]).project(5).unwrap().is_empty());
        assert!(a.project(3).is_err());
        assert_eq!(set(2, &[1]).lift(6).unwrap().elements(), vec![1, 3, 5]);
        assert!(CyclicSet::full(3).unwrap().lift(12).unwrap().is_full());
        assert!(set(4, &[1]).lift(6).is_err());
    }

    #[test]
    fn literal_round_trip() {
        let a = CyclicSet::parse(10, " 5, 0,1 ,15").unwrap();
        assert_eq!(a.to_literal(), "0,1,5");
        assert_eq!(CyclicSet::parse(10, &a.to_literal()).unwrap(), a);
        assert!(CyclicSet::parse(10, "").unwrap().is_empty());
        assert!(CyclicSet::parse(10, "1,-2").is_err());
        assert!(CyclicSet::parse(10, "1,,2").is_err());
    }

    #[test]
    fn lexicographic_order() {
        assert!(set(5, &[0, 1]) < set(5, &[0, 2]));
        assert!(set(5, &[0, 4]) < set(5, &[1]));
        assert!(set(5, &[0]) < set(5, &[0, 1]));
    }

    #[test]
    fn subgroup_lattice() {
        let h = Subgroup::new(12, 4).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.to_set().elements(), vec![0, 4, 8]);
        assert!(h.is_subgroup_of(&Subgroup::new(12, 2).unwrap()));
        assert!(!h.is_subgroup_of(&Subgroup::new(12, 3).unwrap()));
        assert!(Subgroup::new(12, 5).is_err());
    }
}
