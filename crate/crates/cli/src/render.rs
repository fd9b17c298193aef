use clap::ValueEnum;
use mmp_core::pattern::DistributionRecord;
use mmp_core::series::SeriesRecord;
use mmp_core::theorems::{Status, Verdict};
use mmp_core::{AlternatingClass, Permutation, Poly, QuadrantPattern};
use serde::{Deserialize, Serialize};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistRow {
    pub method: String,
    #[serde(flatten)]
    pub record: DistributionRecord,
}

impl DistRow {
    pub fn new(method: &str, n: usize, class: AlternatingClass, pattern: QuadrantPattern, coeffs: Poly) -> Self {
        DistRow { method: method.to_string(), record: DistributionRecord { n, class, pattern, coeffs } }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: usize,
    pub len: usize,
    pub family: String,
    pub pattern: QuadrantPattern,
    pub coeffs: Poly,
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn coeff_field(p: &Poly) -> String {
    p.to_strings().join(" ")
}

pub fn dist(rows: &[DistRow], format: Format, with_agreement: bool) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            if rows.len() == 1 {
                out.push_str(&format!("{} | {}\n", rows[0].record.n, rows[0].record.coeffs));
            } else {
                let width = rows.iter().map(|r| r.method.len()).max().unwrap_or(0);
                for r in rows {
                    out.push_str(&format!("{:<width$} | {}\n", r.method, r.record.coeffs));
                }
            }
            if with_agreement {
                let agree = rows.windows(2).all(|w| w[0].record.coeffs == w[1].record.coeffs);
                out.push_str(if agree { "agreement: yes\n" } else { "agreement: no\n" });
            }
            out
        }
        Format::Json => json(rows),
        Format::Csv => csv(
            &["method", "n", "class", "pattern", "coeffs"],
            rows.iter().map(|r| {
                vec![
                    r.method.clone(),
                    r.record.n.to_string(),
                    r.record.class.to_string(),
                    r.record.pattern.to_string(),
                    coeff_field(&r.record.coeffs),
                ]
            }),
        ),
    }
}

pub fn table_text(rows: &[TableRow]) -> String {
    rows.iter().map(|r| format!("{} | {}\n", r.n, r.coeffs)).collect()
}

pub fn table(rows: &[TableRow], format: Format) -> String {
    match format {
        Format::Text => table_text(rows),
        Format::Json => json(rows),
        Format::Csv => csv(
            &["n", "len", "family", "pattern", "coeffs"],
            rows.iter().map(|r| {
                vec![r.n.to_string(), r.len.to_string(), r.family.clone(), r.pattern.to_string(), coeff_field(&r.coeffs)]
            }),
        ),
    }
}

pub fn series(record: &SeriesRecord, format: Format) -> String {
    match format {
        Format::Text => record.coeffs.iter().map(|(m, p)| format!("{m} | {p}\n")).collect(),
        Format::Json => json(record),
        Format::Csv => csv(
            &["family", "power", "coeffs"],
            record.coeffs.iter().map(|(m, p)| vec![record.family.clone(), m.to_string(), coeff_field(p)]),
        ),
    }
}

pub fn verdicts(vs: &[Verdict], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out: String = vs.iter().map(|v| format!("{v}\n")).collect();
            let count = |f: fn(&Status) -> bool| vs.iter().filter(|v| f(&v.status)).count();
            out.push_str(&format!(
                "{} verdicts: {} confirmed, {} confirmed-after-correction, {} refuted ({} failing)\n",
                vs.len(),
                count(|s| matches!(s, Status::Confirmed)),
                count(|s| matches!(s, Status::ConfirmedAfterCorrection { .. })),
                count(|s| matches!(s, Status::Refuted { .. })),
                vs.iter().filter(|v| v.is_failure()).count(),
            ));
            out
        }
        Format::Json => json(vs),
        Format::Csv => csv(
            &["claim", "kind", "status", "range", "notes"],
            vs.iter().map(|v| {
                vec![
                    v.claim.clone(),
                    serde_json::to_value(v.kind).ok().and_then(|k| k.as_str().map(String::from)).unwrap_or_default(),
                    v.status.label().to_string(),
                    v.range.clone(),
                    v.notes.join("; "),
                ]
            }),
        ),
    }
}

pub fn perms(ps: &[Permutation], format: Format) -> String {
    match format {
        Format::Json => json(ps),
        Format::Text | Format::Csv => ps.iter().map(|p| format!("{p}\n")).collect(),
    }
}
