//! Acceptance gate: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so every line prints even when an earlier criterion
//! fails; the process exits non-zero if any criterion fails.

mod support;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use mmp_core::algebra::{rational, Poly};
use mmp_core::pattern::{marked_distributions, DistributionRecord};
use mmp_core::published::{empty_quadrant_tables, one_zero_tables};
use mmp_core::recurrences::{FamilyTable, ZigzagTable};
use mmp_core::series::{sec_series, tan_series, FamilySeries, DEFAULT_ORDER};
use mmp_core::theorems::{
    check_closed_forms, check_highest, check_lowest, check_prop1, check_relations, check_second_highest,
    check_unimodality, check_x2, ClaimKind, FamilyData, OracleSweep, Status, Verdict,
};
use mmp_core::{AlternatingClass, AlternatingFamily, EnumerationOptions};
use num_bigint::BigInt;
use proptest::test_runner::{Config, TestRunner};

struct Report {
    pass: bool,
    summary: String,
    details: Vec<String>,
}

impl Report {
    fn new(pass: bool, summary: impl Into<String>, details: Vec<String>) -> Self {
        Report { pass, summary: summary.into(), details }
    }
}

/// Oracle sweep shared by several criteria, lengths 1..=13, unsharded.
struct Shared {
    sweep: OracleSweep,
    elapsed: Duration,
}

fn mismatches<'a>(
    rows: impl Iterator<Item = (String, &'a Poly, Poly)>,
) -> Vec<String> {
    rows.filter(|(_, want, got)| *want != got)
        .map(|(label, want, got)| format!("{label}: printed {want}, computed {got}"))
        .collect()
}

fn criterion_1() -> Report {
    let start = Instant::now();
    let table = FamilyTable::up_to_len(13);
    let series = FamilySeries::build(DEFAULT_ORDER).unwrap();
    let mut details = Vec::new();
    let mut rows = 0;
    for t in empty_quadrant_tables() {
        let entries = t.entries();
        rows += entries.len();
        let rec = entries.iter().zip(t.rows).map(|((len, p), r)| {
            (format!("{} row {} via recursion", t.name(), r.n), p, table.family(t.family, *len).unwrap().clone())
        });
        details.extend(mismatches(rec));
        let ser = entries.iter().zip(t.rows).map(|((len, p), r)| {
            (format!("{} row {} via series", t.name(), r.n), p, series.family(t.family).egf_coeff(*len))
        });
        details.extend(mismatches(ser));
    }
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(5);
    let exact = details.is_empty();
    details.push(format!("runtime {elapsed:.2?} (limit 5 s)"));
    Report::new(
        exact && fast,
        format!("printed (1,0,e,0) tables via recursion and series at order 13 ({rows} rows, exact)"),
        details,
    )
}

fn criterion_2(shared: &Shared) -> Report {
    let mut details = Vec::new();
    let mut checked = 0;
    for t in empty_quadrant_tables() {
        let entries = t.entries();
        let rows = entries.iter().zip(t.rows).filter(|((len, _), _)| *len <= 12).map(|((len, p), r)| {
            checked += 1;
            (format!("{} row {} via oracle", t.name(), r.n), p, shared.sweep.family(t.family, *len, &t.pattern).unwrap())
        });
        details.extend(mismatches(rows));
    }
    let table_ok = details.is_empty();

    // Lengths 12 and 13, sharded against unsharded, and against the recursion.
    let recursion = FamilyTable::up_to_len(13);
    let patterns = OracleSweep::patterns();
    let sharded = EnumerationOptions::with_shards(4);
    let start = Instant::now();
    let mut identical = true;
    let mut agrees = true;
    for len in [12usize, 13] {
        for class in [AlternatingClass::UpDown, AlternatingClass::DownUp] {
            let split = marked_distributions(len, class, &patterns, &sharded).unwrap();
            for (pat, dist) in patterns.iter().zip(&split) {
                let whole = shared.sweep.marked(class, len, pat).unwrap();
                let json = |p: &Poly| {
                    serde_json::to_string(&DistributionRecord { n: len, class, pattern: *pat, coeffs: p.clone() }).unwrap()
                };
                identical &= json(&dist.plain()) == json(&whole.plain()) && dist == whole;
            }
            let fam = AlternatingFamily::of(class, len);
            agrees &= recursion.family(fam, len).unwrap() == &split[0].plain();
        }
    }
    let sharded_time = start.elapsed();
    let timed = shared.elapsed.max(sharded_time);
    let fast = timed < Duration::from_secs(600);
    details.push(format!(
        "{checked} printed rows with length <= 12 compared; lengths 1..=13 unsharded in {:.2?}, lengths 12..=13 with 4 shards in {sharded_time:.2?} (limit 600 s)",
        shared.elapsed
    ));
    details.push(format!("sharded output byte-identical: {identical}; lengths 12, 13 equal the recursion: {agrees}"));
    Report::new(
        table_ok && identical && agrees && fast,
        "brute force reproduces the printed (1,0,e,0) tables for lengths <= 12",
        details,
    )
}

fn criterion_3() -> Report {
    let want: [i64; 12] = [1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765];
    let sec = sec_series(12);
    let tan = tan_series(12);
    let zigzag = ZigzagTable::up_to(12);
    let mut details = Vec::new();
    for (i, &w) in want.iter().enumerate() {
        let n = i + 1;
        let s = if n % 2 == 0 { &sec } else { &tan };
        let got = s.egf_coeff(n);
        if got != Poly::from_ints(&[w]) || zigzag.get(n) != &BigInt::from(w) {
            details.push(format!("n = {n}: expected {w}, series {got}, triangle {}", zigzag.get(n)));
        }
    }
    Report::new(details.is_empty(), "sec/tan coefficients equal the zigzag numbers for n <= 12", details)
}

fn criterion_4(shared: &Shared) -> Report {
    let mut details = Vec::new();
    let mut checked = 0;
    for t in one_zero_tables() {
        let entries = t.entries();
        let rows = entries.iter().zip(t.rows).filter(|((len, _), _)| *len <= 12).map(|((len, p), r)| {
            checked += 1;
            (format!("{} row {}", t.name(), r.n), p, shared.sweep.family(t.family, *len, &t.pattern).unwrap())
        });
        details.extend(mismatches(rows));
    }
    let pass = details.is_empty();
    details.push(format!("{checked} printed rows compared"));
    Report::new(pass, "brute force reproduces the printed (1,0,0,0) rows with length <= 12", details)
}

fn all_confirmed(vs: &[Verdict]) -> Vec<String> {
    vs.iter().filter(|v| v.status != Status::Confirmed).map(|v| v.to_string()).collect()
}

fn criterion_5() -> Report {
    let vs = check_prop1(8, &EnumerationOptions::default()).unwrap();
    let details = all_confirmed(&vs);
    Report::new(
        details.is_empty() && vs.len() == 4,
        "four symmetry equalities for all 81 patterns over {0,1,e}, lengths <= 8",
        details,
    )
}

fn coefficient_verdicts(data: &FamilyData) -> Vec<Verdict> {
    let mut vs = check_lowest(data, 6).unwrap();
    vs.extend(check_highest(data, 6).unwrap());
    vs.extend(check_second_highest(data, 6).unwrap());
    vs.extend(check_x2(data, 6).unwrap());
    vs
}

fn criterion_6(shared: &Shared) -> Report {
    let mut details = Vec::new();
    let mut pass = true;
    for data in [FamilyData::oracle(&shared.sweep), FamilyData::recursion(13)] {
        for v in coefficient_verdicts(&data) {
            if v.claim == "x2.D" {
                match &v.status {
                    Status::ConfirmedAfterCorrection { printed, .. } if printed.n == 2 && printed.actual == "9" => {}
                    _ => {
                        pass = false;
                        details.push(format!("[{}] {v}", data.source()));
                    }
                }
            } else if v.status != Status::Confirmed {
                pass = false;
                details.push(format!("[{}] {v}", data.source()));
            }
        }
        let d = |len| data.plain(AlternatingFamily::D, len).unwrap().coeff(2);
        let values = (d(5), d(7));
        if values != (rational(9), rational(110)) {
            pass = false;
            details.push(format!("[{}] x^2 of D_5, D_7 = {:?}", data.source(), values));
        }
    }
    details.push("x2.D confirmed after correcting the upper limit to n (oracle 9 at n = 2, 110 at n = 3)".into());
    Report::new(
        pass,
        "lowest, highest, second-highest and x^2 coefficient identities for n <= 6, oracle and recursion",
        details,
    )
}

fn criterion_7() -> Report {
    let vs = check_closed_forms(DEFAULT_ORDER).unwrap();
    let theorem_failures: Vec<String> =
        vs.iter().filter(|v| v.kind == ClaimKind::Theorem && v.status != Status::Confirmed).map(|v| v.to_string()).collect();
    let hyper: Vec<&Verdict> = vs.iter().filter(|v| v.claim.starts_with("closed-form.B.2F1")).collect();
    let mut details: Vec<String> = theorem_failures.clone();
    for v in &hyper {
        details.push(format!("report: {} -> {}", v.claim, v.status.label()));
    }
    if let Some(n) = hyper.last().and_then(|v| v.notes.last()) {
        details.push(n.clone());
    }
    Report::new(
        theorem_failures.is_empty() && hyper.len() == 2,
        "ODE/closed-form series match the recursion through t^13; 2F1 form of B reported for both conventions",
        details,
    )
}

fn criterion_8(shared: &Shared) -> Report {
    let vs = check_relations(&shared.sweep, 12).unwrap();
    let details = all_confirmed(&vs);
    Report::new(details.is_empty() && vs.len() == 3, "three relations between the patterns, lengths <= 12", details)
}

fn criterion_9(shared: &Shared) -> Report {
    let vs = check_unimodality(&shared.sweep, 12).unwrap();
    let details = all_confirmed(&vs);
    let summary = if details.is_empty() {
        "all eight sequences unimodal for lengths <= 12".to_string()
    } else {
        "unimodality counterexample found (reported finding)".to_string()
    };
    Report::new(details.is_empty() && vs.len() == 8, summary, details)
}

fn criterion_10() -> Report {
    use support::*;
    let cases = 1000;
    let mut details = Vec::new();
    let mut run = |name: &str, result: Result<(), String>| {
        if let Err(e) = result {
            details.push(format!("{name}: {e}"));
        }
    };
    let runner = || TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    run("ode residual", runner().run(&(series(), series(), poly()), |(p, q, y)| ode_residual_vanishes(p, q, y)).map_err(|e| e.to_string()));
    run("series ring axioms", runner().run(&(series(), series(), series()), |(f, g, h)| series_ring_axioms(f, g, h)).map_err(|e| e.to_string()));
    run("series inverses", runner().run(&(unit_series(), series()), |(f, g)| series_inverses(f, g)).map_err(|e| e.to_string()));
    run("involution laws", runner().run(&permutation(12), involution_laws).map_err(|e| e.to_string()));
    run("reduce laws", runner().run(&distinct_ints(), reduce_laws).map_err(|e| e.to_string()));
    run(
        "distribution at x = 1",
        runner()
            .run(&(1usize..=9, class(), pattern()), |(n, c, p)| distribution_at_one_is_zigzag(n, c, p))
            .map_err(|e| e.to_string()),
    );
    Report::new(details.is_empty(), format!("property suites, {cases} randomized cases each"), details)
}

fn guarded(f: impl FnOnce() -> Report) -> Report {
    catch_unwind(AssertUnwindSafe(f))
        .unwrap_or_else(|_| Report::new(false, "criterion panicked", vec!["see panic message above".into()]))
}

fn main() {
    let start = Instant::now();
    let sweep = OracleSweep::compute(13, &EnumerationOptions::default()).expect("oracle sweep");
    let shared = Shared { sweep, elapsed: start.elapsed() };

    let reports = [
        guarded(criterion_1),
        guarded(|| criterion_2(&shared)),
        guarded(criterion_3),
        guarded(|| criterion_4(&shared)),
        guarded(criterion_5),
        guarded(|| criterion_6(&shared)),
        guarded(criterion_7),
        guarded(|| criterion_8(&shared)),
        guarded(|| criterion_9(&shared)),
        guarded(criterion_10),
    ];
    let mut failed = 0;
    for (i, r) in reports.iter().enumerate() {
        println!("{} criterion {:>2}: {}", if r.pass { "PASS" } else { "FAIL" }, i + 1, r.summary);
        for d in &r.details {
            for line in d.lines() {
                println!("        {line}");
            }
        }
        failed += !r.pass as usize;
    }
    println!("acceptance: {} passed, {failed} failed", reports.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
