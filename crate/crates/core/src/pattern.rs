//! Quadrant marked mesh patterns and the brute-force distribution oracle.
//!
//! For a point `(i, σ_i)` of the graph of `σ`, quadrant I holds the points
//! up and to the right, II up-left, III down-left, IV down-right. A
//! pattern puts a lower bound (or an emptiness requirement) on each.

use std::fmt;
use std::str::FromStr;
use std::thread;

use serde::{Deserialize, Serialize};

use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::perm::{AlternatingClass, AlternatingWalker, Permutation};

/// Default enumeration limit: `E_13` is about 2.2e7 permutations.
pub const DEFAULT_BUDGET: usize = 13;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuadrantSpec {
    AtLeast(u32),
    MustBeEmpty,
}

impl QuadrantSpec {
    #[inline]
    pub fn accepts(self, count: u32) -> bool {
        match self {
            QuadrantSpec::AtLeast(k) => count >= k,
            QuadrantSpec::MustBeEmpty => count == 0,
        }
    }
}

impl fmt::Display for QuadrantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadrantSpec::AtLeast(k) => write!(f, "{k}"),
            QuadrantSpec::MustBeEmpty => f.write_str("e"),
        }
    }
}

/// `MMP(a, b, c, d)`, requirements for quadrants I through IV.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct QuadrantPattern {
    pub quadrants: [QuadrantSpec; 4],
}

impl QuadrantPattern {
    pub const fn new(a: QuadrantSpec, b: QuadrantSpec, c: QuadrantSpec, d: QuadrantSpec) -> Self {
        QuadrantPattern { quadrants: [a, b, c, d] }
    }

    /// `MMP(1,0,∅,0)`, the pattern the recursion and series paths cover.
    pub const fn one_zero_empty_zero() -> Self {
        use QuadrantSpec::*;
        QuadrantPattern::new(AtLeast(1), AtLeast(0), MustBeEmpty, AtLeast(0))
    }

    #[inline]
    pub fn accepts(&self, counts: QuadrantCounts) -> bool {
        let [a, b, c, d] = self.quadrants;
        a.accepts(counts.0) && b.accepts(counts.1) && c.accepts(counts.2) && d.accepts(counts.3)
    }

    /// The pattern whose statistic on `σ^r` equals this one's on `σ`.
    pub fn under_reverse(&self) -> Self {
        let [a, b, c, d] = self.quadrants;
        QuadrantPattern::new(b, a, d, c)
    }

    /// The pattern whose statistic on `σ^c` equals this one's on `σ`.
    pub fn under_complement(&self) -> Self {
        let [a, b, c, d] = self.quadrants;
        QuadrantPattern::new(d, c, b, a)
    }

    pub fn under_reverse_complement(&self) -> Self {
        let [a, b, c, d] = self.quadrants;
        QuadrantPattern::new(c, d, a, b)
    }

    /// All 81 patterns with every entry in `{0, 1, ∅}`.
    pub fn small_patterns() -> Vec<QuadrantPattern> {
        use QuadrantSpec::*;
        let choices = [AtLeast(0), AtLeast(1), MustBeEmpty];
        let mut out = Vec::with_capacity(81);
        for a in choices {
            for b in choices {
                for c in choices {
                    for d in choices {
                        out.push(QuadrantPattern::new(a, b, c, d));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for QuadrantPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.quadrants;
        write!(f, "{a},{b},{c},{d}")
    }
}

/// Four comma-separated tokens, each a nonnegative integer or `e` for ∅.
impl FromStr for QuadrantPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::PatternSyntax {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(err("expected four comma-separated entries"));
        }
        let mut quadrants = [QuadrantSpec::AtLeast(0); 4];
        for (slot, tok) in quadrants.iter_mut().zip(&parts) {
            *slot = match *tok {
                "e" | "E" | "∅" => QuadrantSpec::MustBeEmpty,
                t => QuadrantSpec::AtLeast(
                    t.parse().map_err(|_| err("entries must be nonnegative integers or 'e'"))?,
                ),
            };
        }
        Ok(QuadrantPattern { quadrants })
    }
}

impl TryFrom<String> for QuadrantPattern {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<QuadrantPattern> for String {
    fn from(p: QuadrantPattern) -> String {
        p.to_string()
    }
}

/// Points in quadrants I, II, III, IV.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadrantCounts(pub u32, pub u32, pub u32, pub u32);

fn check_position(p: &Permutation, i: usize) -> Result<()> {
    if i == 0 || i > p.len() {
        return Err(Error::PositionOutOfRange { position: i, len: p.len() });
    }
    Ok(())
}

/// Direct count around the 1-based position `i`.
pub fn quadrant_counts(p: &Permutation, i: usize) -> Result<QuadrantCounts> {
    check_position(p, i)?;
    let v = p.values()[i - 1];
    let mut q = QuadrantCounts(0, 0, 0, 0);
    for (j, &w) in p.values().iter().enumerate() {
        let j = j + 1;
        match (j > i, w > v) {
            _ if j == i => {}
            (true, true) => q.0 += 1,
            (false, true) => q.1 += 1,
            (false, false) => q.2 += 1,
            (true, false) => q.3 += 1,
        }
    }
    Ok(q)
}

pub fn matches(p: &Permutation, i: usize, pat: &QuadrantPattern) -> Result<bool> {
    quadrant_counts(p, i).map(|q| pat.accepts(q))
}

/// Number of positions matching `pat`.
pub fn mmp(p: &Permutation, pat: &QuadrantPattern) -> u32 {
    mmp_slice(p.values(), pat)
}

/// Quadrant counts for every position in one left-to-right pass. Only the
/// down-left count needs the prefix; the other three follow from it.
#[inline]
pub(crate) fn for_each_quadrant(values: &[u32], mut f: impl FnMut(QuadrantCounts)) {
    let n = values.len() as u32;
    let mut seen: u64 = 0;
    for (i, &v) in values.iter().enumerate() {
        let left_lower = (seen & ((1u64 << v) - 1)).count_ones();
        let left_higher = i as u32 - left_lower;
        let right_lower = v - 1 - left_lower;
        let right_higher = n - v - left_higher;
        seen |= 1 << v;
        f(QuadrantCounts(right_higher, left_higher, left_lower, right_lower));
    }
}

#[inline]
pub(crate) fn mmp_slice(values: &[u32], pat: &QuadrantPattern) -> u32 {
    let mut count = 0;
    for_each_quadrant(values, |q| count += pat.accepts(q) as u32);
    count
}

/// Enumeration limits and sharding for the brute-force paths.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub budget: usize,
    pub shards: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions { budget: DEFAULT_BUDGET, shards: 1 }
    }
}

impl EnumerationOptions {
    pub fn with_shards(shards: usize) -> Self {
        EnumerationOptions { shards, ..Default::default() }
    }

    fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::EmptyLength);
        }
        if n > self.budget {
            return Err(Error::BudgetExceeded { len: n, limit: self.budget });
        }
        Ok(())
    }
}

/// Distribution refined by whether `σ_1 = n`: `top` collects the
/// permutations starting with their maximum, `rest` everything else.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedDistribution {
    pub top: Poly,
    pub rest: Poly,
}

impl MarkedDistribution {
    /// `y = 1`: the plain distribution.
    pub fn plain(&self) -> Poly {
        &self.top + &self.rest
    }

    /// `y = x`: the barred polynomial.
    pub fn barred(&self) -> Poly {
        &self.top.shift(1) + &self.rest
    }
}

#[derive(Clone, Debug)]
struct Tally {
    top: Vec<u64>,
    rest: Vec<u64>,
}

impl Tally {
    fn new(n: usize) -> Self {
        Tally { top: vec![0; n + 1], rest: vec![0; n + 1] }
    }

    fn merge(&mut self, other: &Tally) {
        for (a, b) in self.top.iter_mut().zip(&other.top) {
            *a += b;
        }
        for (a, b) in self.rest.iter_mut().zip(&other.rest) {
            *a += b;
        }
    }
}

fn tally_shard(
    n: usize,
    class: AlternatingClass,
    firsts: &[u32],
    patterns: &[QuadrantPattern],
) -> Result<Vec<Tally>> {
    let mut tallies = vec![Tally::new(n); patterns.len()];
    let mut stat = vec![0usize; patterns.len()];
    for &first in firsts {
        let mut walker = AlternatingWalker::with_first(n, class, first)?;
        let is_top = first as usize == n;
        while let Some(values) = walker.advance() {
            stat.iter_mut().for_each(|s| *s = 0);
            for_each_quadrant(values, |q| {
                for (s, pat) in stat.iter_mut().zip(patterns) {
                    *s += pat.accepts(q) as usize;
                }
            });
            for (t, &s) in tallies.iter_mut().zip(&stat) {
                if is_top {
                    t.top[s] += 1;
                } else {
                    t.rest[s] += 1;
                }
            }
        }
    }
    Ok(tallies)
}

/// Marked distributions of several patterns over one class, in a single
/// pass over the permutations. Shards split the class by `σ_1`; the
/// combined counts do not depend on the shard count.
pub fn marked_distributions(
    n: usize,
    class: AlternatingClass,
    patterns: &[QuadrantPattern],
    opts: &EnumerationOptions,
) -> Result<Vec<MarkedDistribution>> {
    opts.check(n)?;
    let shards = opts.shards.clamp(1, n);
    let firsts: Vec<Vec<u32>> = (0..shards)
        .map(|s| (1..=n as u32).filter(|f| (*f as usize - 1) % shards == s).collect())
        .collect();
    let parts: Vec<Result<Vec<Tally>>> = if shards == 1 {
        vec![tally_shard(n, class, &firsts[0], patterns)]
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = firsts
                .iter()
                .map(|fs| scope.spawn(move || tally_shard(n, class, fs, patterns)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("enumeration shard panicked"))
                .collect()
        })
    };
    let mut total = vec![Tally::new(n); patterns.len()];
    for part in parts {
        for (t, p) in total.iter_mut().zip(&part?) {
            t.merge(p);
        }
    }
    Ok(total
        .into_iter()
        .map(|t| MarkedDistribution {
            top: Poly::from_counts(&t.top),
            rest: Poly::from_counts(&t.rest),
        })
        .collect())
}

pub fn marked_distribution(
    n: usize,
    class: AlternatingClass,
    pat: &QuadrantPattern,
    opts: &EnumerationOptions,
) -> Result<MarkedDistribution> {
    let mut v = marked_distributions(n, class, std::slice::from_ref(pat), opts)?;
    Ok(v.remove(0))
}

/// `Σ x^{mmp(σ)}` over the alternating permutations of length `n`.
pub fn distribution(
    n: usize,
    class: AlternatingClass,
    pat: &QuadrantPattern,
    opts: &EnumerationOptions,
) -> Result<Poly> {
    marked_distribution(n, class, pat, opts).map(|m| m.plain())
}

/// Machine-readable distribution record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionRecord {
    pub n: usize,
    pub class: AlternatingClass,
    pub pattern: QuadrantPattern,
    pub coeffs: Poly,
}
