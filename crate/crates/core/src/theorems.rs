//! Executable verdicts for the coefficient identities, symmetries,
//! relations and conjectures about the `MMP(1,0,∅,0)` families.
//!
//! Ground truth is the brute-force oracle, then the recursions, then the
//! series; a printed formula that disagrees is reported, never patched
//! silently.

use std::collections::HashMap;
use std::fmt;
use std::ops::RangeInclusive;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{binomial, double_factorial, format_rational, ratio, rational, Poly, Rational};
use crate::error::{Error, Result};
use crate::family::{AlternatingFamily, BarredFamily};
use crate::pattern::{marked_distributions, EnumerationOptions, MarkedDistribution, QuadrantPattern};
use crate::perm::AlternatingClass;
use crate::published::{empty_quadrant_tables, one_zero_tables, PrintedTable};
use crate::recurrences::{FamilyTable, ZigzagTable};
use crate::series::{closed_form, EgfSeries, FamilySeries, Pochhammer};

use AlternatingFamily::{A, B, C, D};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    /// Expected to hold; a refutation fails the run.
    Theorem,
    /// Open conjecture; a refutation is a finding, not a failure.
    Conjecture,
    /// Informational comparison with no expected outcome.
    Report,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: usize,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n = {}: expected {}, got {}", self.n, self.expected, self.actual)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Status {
    Confirmed,
    Refuted { counterexample: Counterexample },
    ConfirmedAfterCorrection { correction: String, printed: Counterexample },
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Confirmed => "confirmed",
            Status::Refuted { .. } => "refuted",
            Status::ConfirmedAfterCorrection { .. } => "confirmed-after-correction",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub claim: String,
    pub range: String,
    pub kind: ClaimKind,
    #[serde(flatten)]
    pub status: Status,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Verdict {
    fn new(claim: impl Into<String>, range: impl Into<String>, kind: ClaimKind, status: Status) -> Self {
        Verdict { claim: claim.into(), range: range.into(), kind, status, notes: Vec::new() }
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn is_confirmed(&self) -> bool {
        !matches!(self.status, Status::Refuted { .. })
    }

    /// A refuted claim that was expected to hold.
    pub fn is_failure(&self) -> bool {
        self.kind == ClaimKind::Theorem && !self.is_confirmed()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<27} {:<34} {}", self.status.label(), self.claim, self.range)?;
        match &self.status {
            Status::Confirmed => {}
            Status::Refuted { counterexample } => write!(f, "\n    counterexample: {counterexample}")?,
            Status::ConfirmedAfterCorrection { correction, printed } => {
                write!(f, "\n    printed form fails at {printed}\n    correction: {correction}")?
            }
        }
        for n in &self.notes {
            write!(f, "\n    note: {n}")?;
        }
        Ok(())
    }
}

/// True iff some expected-confirmed claim was refuted.
pub fn any_failure(verdicts: &[Verdict]) -> bool {
    verdicts.iter().any(Verdict::is_failure)
}

fn range_label(ns: &RangeInclusive<usize>) -> String {
    format!("{} <= n <= {}", ns.start(), ns.end())
}

/// Runs `f(n)` over `ns`, returning `(expected, actual)`, and stops at the
/// first (hence minimal) disagreement.
fn first_mismatch<T: PartialEq + fmt::Display>(
    ns: RangeInclusive<usize>,
    mut f: impl FnMut(usize) -> Result<(T, T)>,
) -> Result<Option<Counterexample>> {
    for n in ns {
        let (expected, actual) = f(n)?;
        if expected != actual {
            return Ok(Some(Counterexample {
                n,
                expected: expected.to_string(),
                actual: actual.to_string(),
            }));
        }
    }
    Ok(None)
}

fn claim_over<T: PartialEq + fmt::Display>(
    claim: &str,
    kind: ClaimKind,
    ns: RangeInclusive<usize>,
    f: impl FnMut(usize) -> Result<(T, T)>,
) -> Result<Verdict> {
    let range = range_label(&ns);
    let status = match first_mismatch(ns, f)? {
        None => Status::Confirmed,
        Some(counterexample) => Status::Refuted { counterexample },
    };
    Ok(Verdict::new(claim, range, kind, status))
}

fn q(n: i64) -> Rational {
    rational(n)
}

fn dfact(k: i64) -> Rational {
    Rational::from_integer(double_factorial(k))
}

fn binom(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial(n, k))
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Term {
    power: Option<usize>,
    coeff: Rational,
}

impl Term {
    fn new(power: usize, coeff: Rational) -> Self {
        Term { power: Some(power), coeff }
    }

    fn top(p: &Poly) -> Self {
        Term { power: p.degree(), coeff: p.leading_coeff() }
    }

    fn bottom(p: &Poly) -> Self {
        let power = p.lowest_degree();
        Term { power, coeff: power.map_or_else(Rational::zero, |k| p.coeff(k)) }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.power {
            Some(k) => write!(f, "{} x^{k}", format_rational(&self.coeff)),
            None => f.write_str("0"),
        }
    }
}

/// Brute-force distributions of the patterns needed by the suite, for both
/// classes and every length up to a bound.
#[derive(Clone, Debug)]
pub struct OracleSweep {
    max_len: usize,
    opts: EnumerationOptions,
    results: HashMap<(AlternatingClass, usize), Vec<MarkedDistribution>>,
}

impl OracleSweep {
    /// `(1,0,∅,0)`, `(0,0,∅,0)` and `(1,0,0,0)`.
    pub fn patterns() -> [QuadrantPattern; 3] {
        ["1,0,e,0", "0,0,e,0", "1,0,0,0"].map(|s| s.parse().expect("valid pattern"))
    }

    pub fn compute(max_len: usize, opts: &EnumerationOptions) -> Result<Self> {
        let patterns = Self::patterns();
        let mut results = HashMap::new();
        for len in 1..=max_len {
            for class in [AlternatingClass::UpDown, AlternatingClass::DownUp] {
                results.insert((class, len), marked_distributions(len, class, &patterns, opts)?);
            }
        }
        Ok(OracleSweep { max_len, opts: *opts, results })
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn options(&self) -> &EnumerationOptions {
        &self.opts
    }

    pub fn marked(&self, class: AlternatingClass, len: usize, pat: &QuadrantPattern) -> Option<&MarkedDistribution> {
        let idx = Self::patterns().iter().position(|p| p == pat)?;
        self.results.get(&(class, len)).map(|v| &v[idx])
    }

    /// Family polynomial; length 0 gives the constant 1 of the even families.
    pub fn family(&self, fam: AlternatingFamily, len: usize, pat: &QuadrantPattern) -> Option<Poly> {
        if fam.check_len(len).is_err() {
            return None;
        }
        if len == 0 {
            return Some(Poly::one());
        }
        self.marked(fam.class(), len, pat).map(MarkedDistribution::plain)
    }

    pub fn barred(&self, fam: BarredFamily, len: usize) -> Option<Poly> {
        if fam.check_len(len).is_err() {
            return None;
        }
        if len == 0 {
            return Some(Poly::one());
        }
        self.marked(AlternatingClass::DownUp, len, &QuadrantPattern::one_zero_empty_zero())
            .map(MarkedDistribution::barred)
    }
}

/// The `MMP(1,0,∅,0)` polynomials (plain and barred) from one source.
#[derive(Clone, Debug)]
pub struct FamilyData {
    source: &'static str,
    max_len: usize,
    plain: HashMap<(AlternatingFamily, usize), Poly>,
    barred: HashMap<(BarredFamily, usize), Poly>,
    zigzag: ZigzagTable,
}

impl FamilyData {
    pub fn recursion(max_len: usize) -> Self {
        let table = FamilyTable::up_to_len(max_len);
        let mut data = FamilyData::empty("recursion", max_len);
        for len in 0..=max_len {
            for fam in AlternatingFamily::ALL {
                if let Ok(p) = table.family(fam, len) {
                    data.plain.insert((fam, len), p.clone());
                }
            }
            for fam in [BarredFamily::DBar, BarredFamily::CBar] {
                if let Ok(p) = table.barred(fam, len) {
                    data.barred.insert((fam, len), p.clone());
                }
            }
        }
        data
    }

    pub fn oracle(sweep: &OracleSweep) -> Self {
        let pat = QuadrantPattern::one_zero_empty_zero();
        let mut data = FamilyData::empty("oracle", sweep.max_len());
        for len in 0..=sweep.max_len() {
            for fam in AlternatingFamily::ALL {
                if let Some(p) = sweep.family(fam, len, &pat) {
                    data.plain.insert((fam, len), p);
                }
            }
            for fam in [BarredFamily::DBar, BarredFamily::CBar] {
                if let Some(p) = sweep.barred(fam, len) {
                    data.barred.insert((fam, len), p);
                }
            }
        }
        data
    }

    fn empty(source: &'static str, max_len: usize) -> Self {
        FamilyData {
            source,
            max_len,
            plain: HashMap::new(),
            barred: HashMap::new(),
            zigzag: ZigzagTable::up_to(max_len.max(1)),
        }
    }

    pub fn source(&self) -> &'static str {
        self.source
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn plain(&self, fam: AlternatingFamily, len: usize) -> Result<&Poly> {
        fam.check_len(len)?;
        self.plain.get(&(fam, len)).ok_or_else(|| self.missing(len))
    }

    pub fn barred(&self, fam: BarredFamily, len: usize) -> Result<&Poly> {
        fam.check_len(len)?;
        self.barred.get(&(fam, len)).ok_or_else(|| self.missing(len))
    }

    fn missing(&self, len: usize) -> Error {
        Error::Precondition(format!("length {len} not available from the {} data (max {})", self.source, self.max_len))
    }

    /// Zigzag number `E_n` as a rational; `E_0 = 1`.
    fn e(&self, n: usize) -> Rational {
        Rational::from_integer(self.zigzag.get(n).clone())
    }

    fn coeff(&self, fam: AlternatingFamily, len: usize, k: usize) -> Result<Rational> {
        Ok(self.plain(fam, len)?.coeff(k))
    }

    fn require(&self, len: usize) -> Result<()> {
        if len > self.max_len {
            return Err(self.missing(len));
        }
        Ok(())
    }
}

/// Symmetry of the four class/parity families under reverse, complement
/// and reverse-complement, for every pattern with entries in {0, 1, ∅}.
pub fn check_prop1(max_len: usize, opts: &EnumerationOptions) -> Result<Vec<Verdict>> {
    use AlternatingClass::{DownUp, UpDown};
    let patterns = QuadrantPattern::small_patterns();
    let index: HashMap<QuadrantPattern, usize> = patterns.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut dists: HashMap<(AlternatingClass, usize), Vec<Poly>> = HashMap::new();
    for len in 1..=max_len {
        for class in [UpDown, DownUp] {
            let d = marked_distributions(len, class, &patterns, opts)?;
            dists.insert((class, len), d.iter().map(MarkedDistribution::plain).collect());
        }
    }
    let parts = [
        ("symmetry.A (even up-down)", UpDown, 0),
        ("symmetry.C (even down-up)", DownUp, 0),
        ("symmetry.B (odd up-down)", UpDown, 1),
        ("symmetry.D (odd down-up)", DownUp, 1),
    ];
    let mut verdicts = Vec::new();
    for (claim, class, parity) in parts {
        let mut failure = None;
        'lens: for len in (1..=max_len).filter(|l| l % 2 == parity) {
            let even = len % 2 == 0;
            let class_r = if even { class.opposite() } else { class };
            let class_c = class.opposite();
            let class_rc = if even { class } else { class.opposite() };
            for pat in &patterns {
                let lhs = &dists[&(class, len)][index[pat]];
                let images = [
                    (class_r, pat.under_reverse()),
                    (class_c, pat.under_complement()),
                    (class_rc, pat.under_reverse_complement()),
                ];
                for (cls, image) in images {
                    let rhs = &dists[&(cls, len)][index[&image]];
                    if lhs != rhs {
                        failure = Some(Counterexample {
                            n: len,
                            expected: format!("{} over {class} for ({pat})", lhs),
                            actual: format!("{} over {cls} for ({image})", rhs),
                        });
                        break 'lens;
                    }
                }
            }
        }
        let status = match failure {
            None => Status::Confirmed,
            Some(counterexample) => Status::Refuted { counterexample },
        };
        verdicts.push(
            Verdict::new(claim, format!("lengths <= {max_len}, {} patterns", patterns.len()), ClaimKind::Theorem, status)
                .note("n is the permutation length"),
        );
    }
    Ok(verdicts)
}

/// Lowest coefficients: all four families start at `x^1`.
pub fn check_lowest(data: &FamilyData, n_max: usize) -> Result<Vec<Verdict>> {
    data.require(2 * n_max + 1)?;
    let e = |n: usize| data.e(n);
    Ok(vec![
        claim_over("lowest.A", ClaimKind::Theorem, 1..=n_max, |n| {
            Ok((Term::new(1, e(2 * n - 1)), Term::bottom(data.plain(A, 2 * n)?)))
        })?,
        claim_over("lowest.B", ClaimKind::Theorem, 1..=n_max, |n| {
            Ok((Term::new(1, e(2 * n) + e(2 * n - 1)), Term::bottom(data.plain(B, 2 * n + 1)?)))
        })?,
        claim_over("lowest.C", ClaimKind::Theorem, 2..=n_max, |n| {
            Ok((Term::new(1, e(2 * n - 2) + e(2 * n - 3)), Term::bottom(data.plain(C, 2 * n)?)))
        })?
        .note("read as the coefficient of x^1; the printed statement writes x^k"),
        claim_over("lowest.D", ClaimKind::Theorem, 1..=n_max, |n| {
            Ok((Term::new(1, e(2 * n - 1)), Term::bottom(data.plain(D, 2 * n + 1)?)))
        })?
        .note("read as the coefficient of x^1; the printed statement writes x^k"),
    ])
}

/// Top degree and leading coefficient of every family, plus D̄.
pub fn check_highest(data: &FamilyData, n_max: usize) -> Result<Vec<Verdict>> {
    data.require(2 * n_max + 1)?;
    let mut literal_d = None;
    for n in 2..=n_max.max(2) {
        if 2 * n - 1 > data.max_len() {
            break;
        }
        let actual = Term::top(data.plain(D, 2 * n - 1)?);
        if actual.power != Some(n + 1) {
            literal_d = Some(format!(
                "literal index D_(2n-1) with top power x^(n+1) fails at n = {n}: top term is {actual}"
            ));
            break;
        }
    }
    let mut d = claim_over("highest.D", ClaimKind::Theorem, 1..=n_max, |n| {
        let n_ = n as i64;
        Ok((
            Term::new(n + 1, dfact(2 * n_) - dfact(2 * n_ - 1)),
            Term::top(data.plain(D, 2 * n + 1)?),
        ))
    })?
    .note("implemented as: D_(2n+1) has top power x^(n+1)");
    if let Some(msg) = literal_d {
        d = d.note(msg);
    }
    Ok(vec![
        claim_over("highest.A", ClaimKind::Theorem, 1..=n_max, |n| {
            Ok((Term::new(n, dfact(2 * n as i64 - 1)), Term::top(data.plain(A, 2 * n)?)))
        })?,
        claim_over("highest.B", ClaimKind::Theorem, 1..=n_max, |n| {
            let n_ = n as i64;
            Ok((Term::new(n, q(n_ + 1) * dfact(2 * n_ - 1)), Term::top(data.plain(B, 2 * n + 1)?)))
        })?,
        claim_over("highest.C", ClaimKind::Theorem, 2..=n_max, |n| {
            let n_ = n as i64;
            let coeff = q(2 * n_ * n_ - n_ - 1) * dfact(2 * n_ - 4) - q(n_) * dfact(2 * n_ - 3);
            Ok((Term::new(n, coeff), Term::top(data.plain(C, 2 * n)?)))
        })?,
        d,
        claim_over("highest.Dbar", ClaimKind::Theorem, 1..=n_max, |n| {
            Ok((
                Term::new(n + 1, dfact(2 * n as i64)),
                Term::top(data.barred(BarredFamily::DBar, 2 * n + 1)?),
            ))
        })?,
    ])
}

fn x2_d_formula(data: &FamilyData, n: usize, upper: usize) -> Rational {
    let n_ = n as i64;
    let mut v = q(2 * n_ - 1) * data.e(2 * n - 1);
    for k in 2..=upper {
        let k_ = k as i64;
        v += binom(2 * n_ - 1, 2 * k_ - 2) * data.e(2 * k - 3) * data.e(2 * n - 2 * k + 1);
    }
    v
}

/// Coefficients of `x^2`.
pub fn check_x2(data: &FamilyData, n_max: usize) -> Result<Vec<Verdict>> {
    data.require(2 * n_max + 1)?;
    let e = |n: usize| data.e(n);

    let a_part = claim_over("x2.A", ClaimKind::Theorem, 2..=n_max, |n| {
        let n_ = n as i64;
        let mut v = Rational::zero();
        for k in 1..n {
            v += binom(2 * n_ - 1, 2 * k as i64) * e(2 * k - 1) * e(2 * n - 2 * k - 1);
        }
        Ok((v, data.coeff(A, 2 * n, 2)?))
    })?;

    let b_formula = |n: usize| -> Result<(Rational, Rational)> {
        let n_ = n as i64;
        let mut v = data.coeff(A, 2 * n, 2)?;
        for k in 1..n {
            v += binom(2 * n_, 2 * k as i64) * e(2 * k - 1) * e(2 * n - 2 * k);
        }
        Ok((v, data.coeff(B, 2 * n + 1, 2)?))
    };
    let mut b_part = claim_over("x2.B", ClaimKind::Theorem, 3..=n_max, b_formula)?;
    if n_max >= 2 {
        let (f, v) = b_formula(2)?;
        b_part = b_part.note(if f == v {
            "also holds at n = 2, below the stated range".to_string()
        } else {
            format!("fails at n = 2 (below the stated range): formula {f}, value {v}")
        });
    }

    let printed = first_mismatch(2..=n_max, |n| Ok((x2_d_formula(data, n, n - 1), data.coeff(D, 2 * n + 1, 2)?)))?;
    let corrected = first_mismatch(2..=n_max, |n| Ok((x2_d_formula(data, n, n), data.coeff(D, 2 * n + 1, 2)?)))?;
    let status = match (printed, corrected) {
        (None, _) => Status::Confirmed,
        (Some(printed), None) => Status::ConfirmedAfterCorrection {
            correction: "sum over 2 <= k <= n instead of 2 <= k <= n-1".into(),
            printed,
        },
        (Some(_), Some(counterexample)) => Status::Refuted { counterexample },
    };
    let d_part = Verdict::new("x2.D", range_label(&(2..=n_max)), ClaimKind::Theorem, status);

    let c_part = claim_over("x2.C", ClaimKind::Theorem, 2..=n_max, |n| {
        let n_ = n as i64;
        let mut v = data.coeff(D, 2 * n - 1, 2)? + q(2 * n_ - 2) * e(2 * n - 2);
        for k in 2..n {
            let k_ = k as i64;
            v += binom(2 * n_ - 2, 2 * k_ - 2) * e(2 * k - 3) * e(2 * n - 2 * k);
        }
        Ok((v, data.coeff(C, 2 * n, 2)?))
    })?;

    Ok(vec![a_part, b_part, d_part, c_part])
}

/// Second-highest coefficients of every family, plus D̄.
pub fn check_second_highest(data: &FamilyData, n_max: usize) -> Result<Vec<Verdict>> {
    data.require(2 * n_max + 1)?;
    let a_part = claim_over("second-highest.A", ClaimKind::Theorem, 2..=n_max, |n| {
        let n_ = n as i64;
        let v = ratio(2, 3) * binom(n_, 2) * dfact(2 * n_ - 1);
        Ok((v, data.coeff(A, 2 * n, n - 1)?))
    })?;
    let b_part = claim_over("second-highest.B", ClaimKind::Theorem, 2..=n_max, |n| {
        let n_ = n as i64;
        let v = (ratio(7, 3) * binom(n_, 2) + q(2) * binom(n_, 3)) * dfact(2 * n_ - 1);
        Ok((v, data.coeff(B, 2 * n + 1, n - 1)?))
    })?;
    let d_value = |n: usize| -> Rational {
        let n_ = n as i64;
        let mut v = Rational::zero();
        for k in 1..=n_ {
            let mut prod = Rational::one();
            for i in k + 1..=n_ {
                prod *= q(2 * i - 1);
            }
            v += ratio((5 * k - 4) * k, 3) * dfact(2 * k - 2) * prod;
        }
        v - ratio(2, 3) * (binom(n_, 2) - q(1)) * dfact(2 * n_ - 1)
    };
    let d_part = claim_over("second-highest.D", ClaimKind::Theorem, 1..=n_max, |n| {
        Ok((d_value(n), data.coeff(D, 2 * n + 1, n)?))
    })?;
    let c_part = claim_over("second-highest.C", ClaimKind::Theorem, 3..=n_max, |n| {
        let n_ = n as i64;
        let v = data.coeff(D, 2 * n - 1, n - 1)?
            + binom(2 * n_ - 2, 2) * data.coeff(D, 2 * n - 3, n - 2)?
            + ratio(28 * n_ * n_ - 72 * n_ + 39, 24) * dfact(2 * n_ - 2)
            - ratio(5, 3) * binom(n_ - 1, 2) * dfact(2 * n_ - 3);
        Ok((v, data.coeff(C, 2 * n, n - 1)?))
    })?;
    let dbar_part = claim_over("second-highest.Dbar", ClaimKind::Theorem, 1..=n_max, |n| {
        let n_ = n as i64;
        let v = ratio(1, 3) * q(n_ * n_ - 1) * dfact(2 * n_);
        Ok((v, data.barred(BarredFamily::DBar, 2 * n + 1)?.coeff(n)))
    })?;
    Ok(vec![a_part, b_part, d_part, c_part, dbar_part])
}

/// Relations between `(1,0,∅,0)`, `(0,0,∅,0)` and `(1,0,0,0)` over
/// up-down permutations.
pub fn check_relations(sweep: &OracleSweep, max_len: usize) -> Result<Vec<Verdict>> {
    if max_len > sweep.max_len() {
        return Err(Error::Precondition(format!("relations need lengths up to {max_len}")));
    }
    let [one_e, zero_e, one_zero] = OracleSweep::patterns();
    let get = |fam, len, pat: &QuadrantPattern| {
        sweep.family(fam, len, pat).ok_or_else(|| Error::Precondition(format!("missing {fam} at length {len}")))
    };
    let half = max_len / 2;
    let odd_half = max_len.saturating_sub(1) / 2;
    Ok(vec![
        claim_over("relation.A-ignores-quadrant-I", ClaimKind::Theorem, 1..=half, |n| {
            Ok((get(A, 2 * n, &zero_e)?, get(A, 2 * n, &one_e)?))
        })?
        .note("(1,0,e,0) and (0,0,e,0) agree on even up-down permutations"),
        claim_over("relation.B-via-A", ClaimKind::Theorem, 0..=odd_half, |n| {
            let lhs = &get(B, 2 * n + 1, &zero_e)? + &(&Poly::one_minus_x() * &get(A, 2 * n, &one_e)?);
            Ok((lhs, get(B, 2 * n + 1, &one_e)?))
        })?
        .note("B^(0,0,e,0)_(2n+1) + (1-x) A^(1,0,e,0)_(2n) = B^(1,0,e,0)_(2n+1)"),
        claim_over("relation.A-mirror", ClaimKind::Theorem, 1..=half, |n| {
            let empty = get(A, 2 * n, &one_e)?;
            let full = get(A, 2 * n, &one_zero)?;
            let lhs: Vec<String> = (1..=n).map(|k| format_rational(&empty.coeff(k))).collect();
            let rhs: Vec<String> = (1..=n).map(|k| format_rational(&full.coeff(2 * n - k))).collect();
            Ok((lhs.join(","), rhs.join(",")))
        })?
        .note("coefficient of x^k in A^(1,0,e,0)_(2n) equals that of x^(2n-k) in A^(1,0,0,0)_(2n), 1 <= k <= n"),
    ])
}

/// Unimodality of the eight sequences (two patterns, four families).
pub fn check_unimodality(sweep: &OracleSweep, max_len: usize) -> Result<Vec<Verdict>> {
    if max_len > sweep.max_len() {
        return Err(Error::Precondition(format!("unimodality needs lengths up to {max_len}")));
    }
    let [one_e, _, one_zero] = OracleSweep::patterns();
    let mut verdicts = Vec::new();
    for pat in [one_e, one_zero] {
        for fam in AlternatingFamily::ALL {
            let lens: Vec<usize> = (1..=max_len).filter(|&l| fam.check_len(l).is_ok()).collect();
            let mut failure = None;
            for &len in &lens {
                let p = sweep.family(fam, len, &pat).expect("length within sweep");
                if !p.is_unimodal() {
                    failure = Some(Counterexample { n: len, expected: "unimodal".into(), actual: p.to_string() });
                    break;
                }
            }
            let status = match failure {
                None => Status::Confirmed,
                Some(counterexample) => Status::Refuted { counterexample },
            };
            verdicts.push(Verdict::new(
                format!("unimodal.{fam}^({pat})"),
                format!("lengths <= {max_len}"),
                ClaimKind::Conjecture,
                status,
            ));
        }
    }
    Ok(verdicts)
}

fn table_claim(
    table: &PrintedTable,
    method: &str,
    max_len: usize,
    mut compute: impl FnMut(usize) -> Result<Poly>,
) -> Result<Verdict> {
    let entries = table.entries();
    let checked: Vec<_> = entries.iter().filter(|(len, _)| *len <= max_len).collect();
    let mut failure = None;
    for (row, (len, printed)) in table.rows.iter().zip(entries.iter()) {
        if *len > max_len {
            continue;
        }
        let got = compute(*len)?;
        if &got != printed {
            failure = Some(Counterexample { n: row.n, expected: printed.to_string(), actual: got.to_string() });
            break;
        }
    }
    let status = match failure {
        None => Status::Confirmed,
        Some(counterexample) => Status::Refuted { counterexample },
    };
    let rows: Vec<usize> = table.rows.iter().zip(&entries).filter(|(_, (l, _))| *l <= max_len).map(|(r, _)| r.n).collect();
    let range = match (rows.first(), rows.last()) {
        (Some(a), Some(b)) => format!("rows {a}..{b}"),
        _ => "no rows".to_string(),
    };
    let mut v = Verdict::new(format!("table.{}.{method}", table.name()), range, ClaimKind::Theorem, status);
    if checked.len() < entries.len() {
        v = v.note(format!("{} printed rows beyond length {max_len} not checked", entries.len() - checked.len()));
    }
    Ok(v)
}

/// Published tables against recursion, series and brute force.
pub fn check_tables(sweep: &OracleSweep, order: usize) -> Result<Vec<Verdict>> {
    let recursion = FamilyTable::up_to_len(order.max(13));
    let series = FamilySeries::build(order)?;
    let mut verdicts = Vec::new();
    for table in empty_quadrant_tables() {
        let fam = table.family;
        verdicts.push(table_claim(table, "recursion", usize::MAX, |len| Ok(recursion.family(fam, len)?.clone()))?);
        verdicts.push(table_claim(table, "series", order, |len| Ok(series.family(fam).egf_coeff(len)))?);
        verdicts.push(table_claim(table, "oracle", sweep.max_len(), |len| {
            sweep.family(fam, len, &table.pattern).ok_or(Error::EmptyLength)
        })?);
    }
    for table in one_zero_tables() {
        let fam = table.family;
        verdicts.push(table_claim(table, "oracle", sweep.max_len(), |len| {
            sweep.family(fam, len, &table.pattern).ok_or(Error::EmptyLength)
        })?);
    }
    Ok(verdicts)
}

fn first_series_mismatch(expected: &EgfSeries, actual: &EgfSeries) -> Option<Counterexample> {
    let top = expected.order().min(actual.order());
    (0..=top).find_map(|m| {
        let (e, a) = (expected.egf_coeff(m), actual.egf_coeff(m));
        (e != a).then(|| Counterexample { n: m, expected: e.to_string(), actual: a.to_string() })
    })
}

fn series_claim(claim: &str, kind: ClaimKind, expected: &EgfSeries, actual: &EgfSeries) -> Verdict {
    let status = match first_series_mismatch(expected, actual) {
        None => Status::Confirmed,
        Some(counterexample) => Status::Refuted { counterexample },
    };
    Verdict::new(claim, format!("t^0..t^{}", expected.order()), kind, status)
        .note("n is the power of t; values are EGF coefficients")
}

fn rows_as_series(order: usize, row: impl Fn(usize) -> Option<Poly>) -> EgfSeries {
    EgfSeries::from_egf(order, |m| row(m).unwrap_or_else(Poly::zero))
}

/// Generating functions built from ODEs and closed forms against the
/// recursion polynomials, and the two readings of the hypergeometric form.
pub fn check_closed_forms(order: usize) -> Result<Vec<Verdict>> {
    let table = FamilyTable::up_to_len(order);
    let fs = FamilySeries::build(order)?;
    let mut verdicts = Vec::new();
    for fam in AlternatingFamily::ALL {
        let rows = rows_as_series(order, |m| table.family(fam, m).ok().cloned());
        verdicts.push(series_claim(&format!("series.{fam}"), ClaimKind::Theorem, &rows, fs.family(fam)));
    }
    for fam in [BarredFamily::DBar, BarredFamily::CBar] {
        let rows = rows_as_series(order, |m| table.barred(fam, m).ok().cloned());
        verdicts.push(series_claim(&format!("series.{fam}"), ClaimKind::Theorem, &rows, fs.barred(fam)));
    }
    verdicts.push(
        series_claim("closed-form.Dbar", ClaimKind::Theorem, &fs.dbar, &closed_form::dbar(order)?)
            .note("x sec^x ∫ cos^x solves D̄' = x + x tan(t) D̄ (argument t)"),
    );
    verdicts.push(series_claim("closed-form.D", ClaimKind::Theorem, &fs.d, &closed_form::d(order)?));
    verdicts.push(
        series_claim("closed-form.C", ClaimKind::Theorem, &fs.c, &closed_form::c(order, &fs.b, true)?)
            .note("inner integrand cos(y)^x; outer term (1-x) ∫_0^t B(z,x) dz"),
    );
    verdicts.push(
        series_claim("closed-form.C.plain-cos", ClaimKind::Report, &fs.c, &closed_form::c(order, &fs.b, false)?)
            .note("variant with inner integrand cos(y) and no exponent"),
    );
    let mut agreeing = Vec::new();
    for conv in Pochhammer::BOTH {
        let v = series_claim(
            &format!("closed-form.B.2F1.{}", format!("{conv:?}").to_lowercase()),
            ClaimKind::Report,
            &fs.b,
            &closed_form::b(order, conv)?,
        );
        if v.is_confirmed() {
            agreeing.push(format!("{conv:?}").to_lowercase());
        }
        verdicts.push(v);
    }
    let summary = if agreeing.is_empty() {
        "neither Pochhammer convention reproduces the ODE solution for B".to_string()
    } else {
        format!("convention reproducing the ODE solution for B: {}", agreeing.join(", "))
    };
    if let Some(last) = verdicts.last_mut() {
        last.notes.push(summary);
    }
    Ok(verdicts)
}

/// Every check the suite knows, selectable by name.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    Symmetry,
    Lowest,
    Highest,
    X2,
    SecondHighest,
    Relations,
    Unimodality,
    Tables,
    ClosedForms,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Symmetry,
        Check::Lowest,
        Check::Highest,
        Check::X2,
        Check::SecondHighest,
        Check::Relations,
        Check::Unimodality,
        Check::Tables,
        Check::ClosedForms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Symmetry => "symmetry",
            Check::Lowest => "lowest",
            Check::Highest => "highest",
            Check::X2 => "x2",
            Check::SecondHighest => "second-highest",
            Check::Relations => "relations",
            Check::Unimodality => "unimodality",
            Check::Tables => "tables",
            Check::ClosedForms => "closed-forms",
        }
    }

    fn needs_sweep(self) -> bool {
        matches!(self, Check::Relations | Check::Unimodality | Check::Tables)
    }
}

impl std::str::FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown check {s:?}")))
    }
}

/// Where the coefficient checks take their polynomials from.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DataSource {
    Recursion,
    Oracle,
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Largest `n` for the coefficient checks (lengths up to `2n + 1`).
    pub n_max: usize,
    /// Largest length for the symmetry sweep.
    pub symmetry_len: usize,
    /// Largest length for brute-force relations, tables and unimodality.
    pub oracle_len: usize,
    pub order: usize,
    pub source: DataSource,
    pub opts: EnumerationOptions,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_max: 6,
            symmetry_len: 8,
            oracle_len: 12,
            order: crate::series::DEFAULT_ORDER,
            source: DataSource::Recursion,
            opts: EnumerationOptions::default(),
        }
    }
}

pub fn run_checks(checks: &[Check], cfg: &SuiteConfig) -> Result<Vec<Verdict>> {
    let coefficient = checks.iter().any(|c| matches!(c, Check::Lowest | Check::Highest | Check::X2 | Check::SecondHighest));
    let sweep_len = match (checks.iter().any(|c| c.needs_sweep()), coefficient && cfg.source == DataSource::Oracle) {
        (_, true) => Some(cfg.oracle_len.max(2 * cfg.n_max + 1)),
        (true, false) => Some(cfg.oracle_len),
        _ => None,
    };
    let sweep = sweep_len.map(|len| OracleSweep::compute(len, &cfg.opts)).transpose()?;
    let data = coefficient.then(|| match (&sweep, cfg.source) {
        (Some(s), DataSource::Oracle) => FamilyData::oracle(s),
        _ => FamilyData::recursion(2 * cfg.n_max + 1),
    });

    let mut out = Vec::new();
    for &check in checks {
        let verdicts = match check {
            Check::Symmetry => check_prop1(cfg.symmetry_len, &cfg.opts)?,
            Check::Lowest => check_lowest(data.as_ref().expect("built"), cfg.n_max)?,
            Check::Highest => check_highest(data.as_ref().expect("built"), cfg.n_max)?,
            Check::X2 => check_x2(data.as_ref().expect("built"), cfg.n_max)?,
            Check::SecondHighest => check_second_highest(data.as_ref().expect("built"), cfg.n_max)?,
            Check::Relations => check_relations(sweep.as_ref().expect("built"), cfg.oracle_len)?,
            Check::Unimodality => check_unimodality(sweep.as_ref().expect("built"), cfg.oracle_len)?,
            Check::Tables => check_tables(sweep.as_ref().expect("built"), cfg.order)?,
            Check::ClosedForms => check_closed_forms(cfg.order)?,
        };
        out.extend(verdicts);
    }
    if let Some(d) = &data {
        for v in out.iter_mut().filter(|v| {
            ["lowest.", "highest.", "x2.", "second-highest."].iter().any(|p| v.claim.starts_with(p))
        }) {
            v.notes.push(format!("values from {}", d.source()));
        }
    }
    Ok(out)
}
