//! `mmp`: distributions, tables, series and verdicts for quadrant marked
//! mesh pattern statistics on alternating permutations.

mod render;

use std::fmt;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mmp_core::family::AnyFamily;
use mmp_core::pattern::{distribution, marked_distribution};
use mmp_core::perm::generate_alternating;
use mmp_core::recurrences::FamilyTable;
use mmp_core::series::{FamilySeries, SeriesRecord, DEFAULT_ORDER};
use mmp_core::theorems::{any_failure, run_checks, Check, DataSource, SuiteConfig};
use mmp_core::{AlternatingClass, AlternatingFamily, EnumerationOptions, Poly, QuadrantPattern};

use render::{DistRow, Format, TableRow};

#[derive(Parser, Debug)]
#[command(name = "mmp", version, about = "Quadrant marked mesh pattern statistics on alternating permutations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One distribution polynomial.
    Dist(DistArgs),
    /// Family polynomials over a range of rows.
    Table(TableArgs),
    /// EGF coefficients of a family's generating function.
    Series(SeriesArgs),
    /// Run identity and conjecture checks.
    Verify(VerifyArgs),
    /// Machine-readable export of any of the above, or of permutations.
    Export(ExportArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Recursion,
    Series,
    All,
}

impl Method {
    fn expand(self) -> Vec<Method> {
        match self {
            Method::All => vec![Method::Oracle, Method::Recursion, Method::Series],
            m => vec![m],
        }
    }

    fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Recursion => "recursion",
            Method::Series => "series",
            Method::All => "all",
        }
    }
}

#[derive(Args, Debug, Clone)]
struct Enumeration {
    /// Largest permutation length the brute-force paths may enumerate.
    #[arg(long, env = "MMP_BUDGET", default_value_t = mmp_core::pattern::DEFAULT_BUDGET)]
    budget: usize,
    /// Worker threads for enumeration, split by first value.
    #[arg(long, default_value_t = 1)]
    shards: usize,
}

impl Enumeration {
    fn options(&self) -> EnumerationOptions {
        EnumerationOptions { budget: self.budget, shards: self.shards.max(1) }
    }
}

#[derive(Args, Debug, Clone)]
struct DistArgs {
    #[arg(long)]
    class: AlternatingClass,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "1,0,e,0")]
    pattern: QuadrantPattern,
    #[arg(long, value_enum, default_value_t = Method::Oracle)]
    method: Method,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    enumeration: Enumeration,
}

#[derive(Args, Debug, Clone)]
struct TableArgs {
    #[arg(long)]
    family: AnyFamily,
    /// Inclusive row range `a..b`; row n is length 2n (A, C, Cbar) or 2n+1 (B, D, Dbar).
    #[arg(long, default_value = "0..6")]
    rows: RowRange,
    #[arg(long, default_value = "1,0,e,0")]
    pattern: QuadrantPattern,
    #[arg(long, value_enum, default_value_t = Method::Recursion)]
    method: Method,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    enumeration: Enumeration,
}

#[derive(Args, Debug, Clone)]
struct SeriesArgs {
    #[arg(long)]
    family: AnyFamily,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Source {
    Recursion,
    Oracle,
}

#[derive(Args, Debug, Clone)]
struct VerifyArgs {
    /// Checks to run (repeatable); all when omitted.
    #[arg(long = "check")]
    checks: Vec<CheckName>,
    /// Largest n for the coefficient checks.
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    /// Largest length for the symmetry sweep.
    #[arg(long, default_value_t = 8)]
    symmetry_len: usize,
    /// Largest length for the brute-force relation, table and unimodality checks.
    #[arg(long, default_value_t = 12)]
    oracle_len: usize,
    /// Polynomials used by the coefficient checks.
    #[arg(long, value_enum, default_value_t = Source::Recursion)]
    source: Source,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    enumeration: Enumeration,
}

#[derive(Subcommand, Debug)]
enum ExportTarget {
    Dist(DistArgs),
    Table(TableArgs),
    Series(SeriesArgs),
    Verify(VerifyArgs),
    /// Every alternating permutation of one class and length.
    Perms(PermsArgs),
}

#[derive(Args, Debug)]
struct ExportArgs {
    #[command(subcommand)]
    target: ExportTarget,
}

#[derive(Args, Debug, Clone)]
struct PermsArgs {
    #[arg(long)]
    class: AlternatingClass,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(flatten)]
    enumeration: Enumeration,
}

#[derive(Copy, Clone, Debug)]
struct CheckName(Check);

impl FromStr for CheckName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        s.parse().map(CheckName).map_err(|_| {
            let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
            format!("unknown check {s:?}; expected one of {}", names.join(", "))
        })
    }
}

#[derive(Copy, Clone, Debug)]
struct RowRange {
    start: usize,
    end: usize,
}

impl FromStr for RowRange {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s:?}"))?;
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad row bound {t:?}: {e}"));
        let (start, end) = (parse(a)?, parse(b.trim_start_matches('='))?);
        if start > end {
            return Err(format!("empty row range {s:?}"));
        }
        Ok(RowRange { start, end })
    }
}

#[derive(Debug)]
enum Failure {
    /// Bad input: exit status 2.
    Usage(String),
    /// Methods disagree or a claim was refuted: exit status 1.
    Disagreement(String),
}

impl From<mmp_core::Error> for Failure {
    fn from(e: mmp_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "error: {m}"),
            Failure::Disagreement(m) => write!(f, "disagreement: {m}"),
        }
    }
}

type Outcome = Result<String, Failure>;

fn require_default_pattern(pattern: &QuadrantPattern, method: Method) -> Result<(), Failure> {
    if method != Method::Oracle && *pattern != QuadrantPattern::one_zero_empty_zero() {
        return Err(Failure::Usage(format!(
            "method {} is only available for pattern 1,0,e,0 (got {pattern}); use --method oracle",
            method.name()
        )));
    }
    Ok(())
}

fn run_dist(args: &DistArgs) -> Outcome {
    if args.n == 0 {
        return Err(Failure::Usage("length must be at least 1".into()));
    }
    require_default_pattern(&args.pattern, args.method)?;
    let fam = AlternatingFamily::of(args.class, args.n);
    let mut rows = Vec::new();
    for m in args.method.expand() {
        let poly = match m {
            Method::Oracle => distribution(args.n, args.class, &args.pattern, &args.enumeration.options())?,
            Method::Recursion => FamilyTable::up_to_len(args.n).family(fam, args.n)?.clone(),
            Method::Series => FamilySeries::build(args.order.max(args.n))?.family(fam).egf_coeff(args.n),
            Method::All => unreachable!("expanded"),
        };
        rows.push(DistRow::new(m.name(), args.n, args.class, args.pattern, poly));
    }
    let agree = rows.windows(2).all(|w| w[0].record.coeffs == w[1].record.coeffs);
    let out = render::dist(&rows, args.format, rows.len() > 1);
    if !agree {
        print!("{out}");
        return Err(Failure::Disagreement("methods produced different polynomials".into()));
    }
    Ok(out)
}

fn oracle_row(fam: AnyFamily, len: usize, pattern: &QuadrantPattern, opts: &EnumerationOptions) -> Result<Poly, Failure> {
    if len == 0 {
        return Ok(Poly::one());
    }
    Ok(match fam {
        AnyFamily::Plain(f) => distribution(len, f.class(), pattern, opts)?,
        AnyFamily::Barred(_) => marked_distribution(len, AlternatingClass::DownUp, pattern, opts)?.barred(),
    })
}

fn run_table(args: &TableArgs) -> Outcome {
    require_default_pattern(&args.pattern, args.method)?;
    if matches!(args.family, AnyFamily::Barred(_)) && args.pattern != QuadrantPattern::one_zero_empty_zero() {
        return Err(Failure::Usage("barred families are defined for pattern 1,0,e,0 only".into()));
    }
    let fam = args.family;
    let max_len = fam.row_len(args.rows.end);
    let methods = args.method.expand();
    let table = FamilyTable::up_to_len(max_len);
    let series = if methods.contains(&Method::Series) { Some(FamilySeries::build(args.order.max(max_len))?) } else { None };

    let mut per_method: Vec<Vec<TableRow>> = Vec::new();
    for &m in &methods {
        let mut rows = Vec::new();
        for n in args.rows.start..=args.rows.end {
            let len = fam.row_len(n);
            let poly = match (m, fam) {
                (Method::Oracle, _) => oracle_row(fam, len, &args.pattern, &args.enumeration.options())?,
                (Method::Recursion, AnyFamily::Plain(f)) => table.family(f, len)?.clone(),
                (Method::Recursion, AnyFamily::Barred(b)) => table.barred(b, len)?.clone(),
                (Method::Series, AnyFamily::Plain(f)) => series.as_ref().expect("built").family(f).egf_coeff(len),
                (Method::Series, AnyFamily::Barred(b)) => series.as_ref().expect("built").barred(b).egf_coeff(len),
                (Method::All, _) => unreachable!("expanded"),
            };
            rows.push(TableRow { n, len, family: fam.to_string(), pattern: args.pattern, coeffs: poly });
        }
        per_method.push(rows);
    }
    let out = render::table(&per_method[0], args.format);
    if per_method.windows(2).any(|w| w[0] != w[1]) {
        print!("{out}");
        return Err(Failure::Disagreement("methods produced different tables".into()));
    }
    if methods.len() > 1 {
        let names: Vec<&str> = methods.iter().map(|m| m.name()).collect();
        eprintln!("agreement: {}", names.join(", "));
    }
    Ok(out)
}

fn run_series(args: &SeriesArgs) -> Outcome {
    let fs = FamilySeries::build(args.order)?;
    let s = match args.family {
        AnyFamily::Plain(f) => fs.family(f),
        AnyFamily::Barred(b) => fs.barred(b),
    };
    Ok(render::series(&SeriesRecord::new(args.family.to_string(), s), args.format))
}

fn run_verify(args: &VerifyArgs) -> Outcome {
    let checks: Vec<Check> = if args.checks.is_empty() {
        Check::ALL.to_vec()
    } else {
        args.checks.iter().map(|c| c.0).collect()
    };
    let cfg = SuiteConfig {
        n_max: args.n_max,
        symmetry_len: args.symmetry_len,
        oracle_len: args.oracle_len,
        order: args.order,
        source: match args.source {
            Source::Recursion => DataSource::Recursion,
            Source::Oracle => DataSource::Oracle,
        },
        opts: args.enumeration.options(),
    };
    let verdicts = run_checks(&checks, &cfg)?;
    let out = render::verdicts(&verdicts, args.format);
    if any_failure(&verdicts) {
        print!("{out}");
        return Err(Failure::Disagreement("at least one expected identity was refuted".into()));
    }
    Ok(out)
}

fn run_perms(args: &PermsArgs) -> Outcome {
    if args.n > args.enumeration.budget {
        return Err(mmp_core::Error::BudgetExceeded { len: args.n, limit: args.enumeration.budget }.into());
    }
    let perms: Vec<_> = generate_alternating(args.n, args.class)?.collect();
    Ok(render::perms(&perms, args.format))
}

fn with_default_json(format: Format) -> Format {
    if format == Format::Text { Format::Json } else { format }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Dist(a) => run_dist(&a),
        Command::Table(a) => run_table(&a),
        Command::Series(a) => run_series(&a),
        Command::Verify(a) => run_verify(&a),
        Command::Export(e) => match e.target {
            ExportTarget::Dist(mut a) => {
                a.format = with_default_json(a.format);
                run_dist(&a)
            }
            ExportTarget::Table(mut a) => {
                a.format = with_default_json(a.format);
                run_table(&a)
            }
            ExportTarget::Series(mut a) => {
                a.format = with_default_json(a.format);
                run_series(&a)
            }
            ExportTarget::Verify(mut a) => {
                a.format = with_default_json(a.format);
                run_verify(&a)
            }
            ExportTarget::Perms(a) => run_perms(&a),
        },
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{f}");
            match f {
                Failure::Usage(_) => ExitCode::from(2),
                Failure::Disagreement(_) => ExitCode::from(1),
            }
        }
    }
}
