//! Permutations in one-line notation, up-down / down-up classification and
//! an output-sensitive generator for alternating permutations.
//!
//! Positions and values are 1-based, as in the usual one-line notation.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Longest permutation the bitmask generator can produce.
pub const MAX_GENERATED_LEN: usize = 31;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Validates that `values` is a bijection onto `1..=n` with `n >= 1`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::EmptyLength);
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation { values, len: n });
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    /// The empty permutation; only produced by [`reduce`] on an empty input.
    pub fn empty() -> Self {
        Permutation { values: Vec::new() }
    }

    pub(crate) fn from_trusted(values: Vec<u32>) -> Self {
        Permutation { values }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `σ_i` for 1-based `i`.
    pub fn at(&self, i: usize) -> Option<u32> {
        i.checked_sub(1).and_then(|j| self.values.get(j).copied())
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;
    fn try_from(values: Vec<u32>) -> Result<Self> {
        Permutation::new(values)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.values
    }
}

/// Space-separated one-line notation (`1 3 2`), the CSV row format.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlternatingClass {
    /// `σ_1 < σ_2 > σ_3 < ...`
    #[serde(rename = "UD")]
    UpDown,
    /// `σ_1 > σ_2 < σ_3 > ...`
    #[serde(rename = "DU")]
    DownUp,
}

impl AlternatingClass {
    pub fn tag(self) -> &'static str {
        match self {
            AlternatingClass::UpDown => "UD",
            AlternatingClass::DownUp => "DU",
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            AlternatingClass::UpDown => AlternatingClass::DownUp,
            AlternatingClass::DownUp => AlternatingClass::UpDown,
        }
    }

    /// Whether the step from 1-based position `i` to `i + 1` must ascend.
    fn ascends_after(self, i: usize) -> bool {
        (i % 2 == 1) == (self == AlternatingClass::UpDown)
    }
}

impl fmt::Display for AlternatingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for AlternatingClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "UD" | "ud" => Ok(AlternatingClass::UpDown),
            "DU" | "du" => Ok(AlternatingClass::DownUp),
            _ => Err(Error::Precondition(format!("unknown class {s:?}, expected UD or DU"))),
        }
    }
}

pub fn descent_set(p: &Permutation) -> BTreeSet<usize> {
    p.values
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .collect()
}

pub fn is_alternating(p: &Permutation, class: AlternatingClass) -> bool {
    let n = p.len();
    let des = descent_set(p);
    (1..n).all(|i| des.contains(&i) != class.ascends_after(i))
}

pub fn reverse(p: &Permutation) -> Permutation {
    Permutation::from_trusted(p.values.iter().rev().copied().collect())
}

pub fn complement(p: &Permutation) -> Permutation {
    let top = p.len() as u32 + 1;
    Permutation::from_trusted(p.values.iter().map(|v| top - v).collect())
}

pub fn reverse_complement(p: &Permutation) -> Permutation {
    complement(&reverse(p))
}

/// Order-isomorphic permutation of `1..=k` for a sequence of distinct integers.
pub fn reduce(s: &[i64]) -> Result<Permutation> {
    let mut order: Vec<usize> = (0..s.len()).collect();
    order.sort_by_key(|&i| s[i]);
    let mut values = vec![0u32; s.len()];
    for (rank, w) in order.windows(2).enumerate() {
        if s[w[0]] == s[w[1]] {
            return Err(Error::RepeatedEntry(s[w[0]]));
        }
        values[w[0]] = rank as u32 + 1;
    }
    if let Some(&last) = order.last() {
        values[last] = s.len() as u32;
    }
    Ok(Permutation::from_trusted(values))
}

fn check_len(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyLength);
    }
    if n > MAX_GENERATED_LEN {
        return Err(Error::Precondition(format!(
            "generator supports lengths up to {MAX_GENERATED_LEN}, got {n}"
        )));
    }
    Ok(())
}

/// Depth-first walk over the alternating permutations of one class, in
/// lexicographic order.
///
/// A prefix ending at `v` that must ascend next extends to a full
/// alternating permutation iff some unused value exceeds `v` (place the
/// largest unused value and continue with any alternating arrangement of
/// the rest), and symmetrically for descents. Candidates are filtered by
/// that test so the walk never enters a dead branch.
///
/// `advance` lends the current permutation as a slice, which keeps the
/// enumeration loops allocation-free.
#[derive(Clone, Debug)]
pub struct AlternatingWalker {
    n: usize,
    class: AlternatingClass,
    full: u32,
    first_mask: u32,
    used: u32,
    prefix: Vec<u32>,
    candidates: Vec<u32>,
    started: bool,
    finished: bool,
}

#[inline]
fn bits_below(v: u32) -> u32 {
    // bits 1..v-1
    ((1u32 << v) - 1) & !1
}

#[inline]
fn bits_above(v: u32, full: u32) -> u32 {
    full & !((1u64 << (v + 1)) - 1) as u32
}

impl AlternatingWalker {
    pub fn new(n: usize, class: AlternatingClass) -> Result<Self> {
        check_len(n)?;
        let full = (((1u64 << (n + 1)) - 1) as u32) & !1;
        Ok(AlternatingWalker {
            n,
            class,
            full,
            first_mask: full,
            used: 0,
            prefix: Vec::with_capacity(n),
            candidates: vec![0; n],
            started: false,
            finished: false,
        })
    }

    /// Restricts the walk to permutations with `σ_1 = first`. The shards
    /// for `first = 1..=n` partition the class.
    pub fn with_first(n: usize, class: AlternatingClass, first: u32) -> Result<Self> {
        let mut w = AlternatingWalker::new(n, class)?;
        if first == 0 || first as usize > n {
            return Err(Error::PositionOutOfRange { position: first as usize, len: n });
        }
        w.first_mask = 1 << first;
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    fn candidates_at(&self, depth: usize) -> u32 {
        let free = self.full & !self.used;
        let mut c = if depth == 0 {
            free & self.first_mask
        } else {
            let prev = self.prefix[depth - 1];
            if self.class.ascends_after(depth) {
                bits_above(prev, self.full) & free
            } else {
                bits_below(prev) & free
            }
        };
        if depth + 1 < self.n {
            if self.class.ascends_after(depth + 1) {
                let highest = 31 - free.leading_zeros();
                c &= bits_below(highest);
            } else {
                let lowest = free.trailing_zeros();
                c &= bits_above(lowest, self.full);
            }
        }
        c
    }

    fn pop(&mut self) {
        if let Some(v) = self.prefix.pop() {
            self.used &= !(1 << v);
        }
    }

    pub fn advance(&mut self) -> Option<&[u32]> {
        if self.finished {
            return None;
        }
        let mut depth;
        if !self.started {
            self.started = true;
            depth = 0;
            self.candidates[0] = self.candidates_at(0);
        } else {
            depth = self.n - 1;
            self.pop();
        }
        loop {
            let c = self.candidates[depth];
            if c == 0 {
                if depth == 0 {
                    self.finished = true;
                    return None;
                }
                depth -= 1;
                self.pop();
                continue;
            }
            let v = c.trailing_zeros();
            self.candidates[depth] = c & (c - 1);
            self.prefix.push(v);
            self.used |= 1 << v;
            if depth + 1 == self.n {
                return Some(&self.prefix);
            }
            depth += 1;
            self.candidates[depth] = self.candidates_at(depth);
        }
    }
}

impl Iterator for AlternatingWalker {
    type Item = Permutation;
    fn next(&mut self) -> Option<Permutation> {
        self.advance().map(|s| Permutation::from_trusted(s.to_vec()))
    }
}

/// Every permutation of length `n` in `class`, lexicographically.
pub fn generate_alternating(n: usize, class: AlternatingClass) -> Result<AlternatingWalker> {
    AlternatingWalker::new(n, class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use AlternatingClass::*;

    fn perm(digits: &str) -> Permutation {
        Permutation::new(digits.bytes().map(|b| (b - b'0') as u32).collect()).unwrap()
    }

    #[test]
    fn descents() {
        assert_eq!(descent_set(&perm("132")), BTreeSet::from([2]));
        assert!(descent_set(&perm("123")).is_empty());
        assert_eq!(descent_set(&perm("471569283")), BTreeSet::from([2, 6, 8]));
    }

    #[test]
    fn classification() {
        assert!(is_alternating(&perm("132"), UpDown));
        assert!(!is_alternating(&perm("132"), DownUp));
        // 2 > 1 < 4 < 5: the third step ascends, so this is not down-up.
        assert!(!is_alternating(&perm("21453"), DownUp));
        assert!(is_alternating(&perm("21435"), DownUp));
        assert!(is_alternating(&perm("1"), UpDown));
        assert!(is_alternating(&perm("1"), DownUp));
    }

    #[test]
    fn symmetry_maps() {
        assert_eq!(reverse(&perm("132")), perm("231"));
        assert_eq!(complement(&perm("132")), perm("312"));
        // reverse: 4231, complement: 1324.
        assert_eq!(reverse_complement(&perm("1324")), perm("1324"));
        assert_eq!(reverse_complement(&perm("1342")), perm("3124"));
    }

    #[test]
    fn reduction() {
        assert_eq!(reduce(&[4, 7, 5]).unwrap(), perm("132"));
        assert_eq!(reduce(&[9]).unwrap(), perm("1"));
        assert_eq!(reduce(&[7, 1, 5, 6, 9, 2, 8, 3]).unwrap(), perm("61458273"));
        assert_eq!(reduce(&[3, 5, 3]), Err(Error::RepeatedEntry(3)));
        assert!(reduce(&[]).unwrap().is_empty());
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![]).is_err());
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
    }

    #[test]
    fn small_generation() {
        let one: Vec<_> = generate_alternating(1, UpDown).unwrap().collect();
        assert_eq!(one, vec![perm("1")]);
        let ud4: Vec<_> = generate_alternating(4, UpDown).unwrap().collect();
        assert_eq!(
            ud4,
            ["1324", "1423", "2314", "2413", "3412"].map(perm).to_vec()
        );
        assert_eq!(generate_alternating(7, UpDown).unwrap().count(), 272);
        assert_eq!(generate_alternating(7, DownUp).unwrap().count(), 272);
        assert!(generate_alternating(0, UpDown).is_err());
    }

    #[test]
    fn shards_partition_the_class() {
        for class in [UpDown, DownUp] {
            let all: Vec<_> = generate_alternating(8, class).unwrap().collect();
            let sharded: Vec<_> = (1..=8)
                .flat_map(|f| AlternatingWalker::with_first(8, class, f).unwrap())
                .collect();
            assert_eq!(all, sharded);
        }
    }

    #[test]
    fn exhausted_walker_stays_exhausted() {
        let mut w = generate_alternating(3, DownUp).unwrap();
        assert_eq!(w.by_ref().count(), 2);
        assert!(w.advance().is_none());
    }

    #[test]
    fn json_form() {
        let p = perm("2413");
        assert_eq!(serde_json::to_string(&p).unwrap(), "[2,4,1,3]");
        assert_eq!(serde_json::from_str::<Permutation>("[2,4,1,3]").unwrap(), p);
        assert!(serde_json::from_str::<Permutation>("[2,2]").is_err());
        assert_eq!(p.to_string(), "2 4 1 3");
    }
}
