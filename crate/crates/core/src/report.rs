//! CSV and JSON emission of audit records.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::certify::{PropertyKind, Verdict};
use crate::error::{Error, Result};

pub const CSV_HEADER: &str = "graph_id,a,b,x,y,lambda2,property,k,threshold,verdict,oracle,sound";

/// One certificate joined with the matching oracle answer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub graph_id: String,
    pub a: usize,
    pub b: usize,
    pub x: usize,
    pub y: usize,
    pub lambda2: f64,
    pub property: PropertyKind,
    /// 0 for properties without a `k`.
    pub k: usize,
    pub threshold: Option<f64>,
    pub verdict: Verdict,
    pub oracle: usize,
    pub sound: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::InvalidParam(format!("unknown format `{other}`"))),
        }
    }
}

/// Formats like C's `%.12g`: 12 significant digits, trailing zeros dropped,
/// scientific notation when the decimal exponent is below -4 or at least 12.
pub fn fmt_sig12(value: f64) -> String {
    if value == 0.0 {
        return "0".into();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let sci = format!("{value:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..12).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{mantissa}e{sign}{:02}", exp.abs());
    }
    let decimals = (11 - exp) as usize;
    trim_zeros(&format!("{value:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn round12(value: f64) -> f64 {
    fmt_sig12(value).parse().expect("formatted float parses")
}

fn rounded(record: &AuditRecord) -> AuditRecord {
    AuditRecord {
        lambda2: round12(record.lambda2),
        threshold: record.threshold.map(round12),
        ..record.clone()
    }
}

pub fn report_emit(records: &[AuditRecord], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for r in records {
                let threshold = r.threshold.map(fmt_sig12).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{},{}",
                    r.graph_id,
                    r.a,
                    r.b,
                    r.x,
                    r.y,
                    fmt_sig12(r.lambda2),
                    r.property,
                    r.k,
                    threshold,
                    r.verdict,
                    r.oracle,
                    r.sound
                );
            }
            out
        }
        Format::Json => {
            let rounded: Vec<AuditRecord> = records.iter().map(rounded).collect();
            let mut out = serde_json::to_string_pretty(&rounded).expect("records serialize");
            out.push('\n');
            out
        }
    }
}

pub fn parse_json_records(text: &str) -> Result<Vec<AuditRecord>> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        reason: e.to_string(),
    })
}
