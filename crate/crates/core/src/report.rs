//! JSON and CSV encodings of campaign and suite reports.
//!
//! Exact quantities (coefficients, lcm values, thresholds) are written as
//! decimal strings. Field order is fixed by the struct layout, so parsing a
//! document into [`CampaignJson`] and serializing it again reproduces it byte
//! for byte.

use std::io::Write;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::verifier::{CampaignReport, ExceptionRecord, SuiteOutcome, SweepConfig};
use crate::IntPoly;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("`{0}` is not a decimal integer")]
    BadInteger(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExceptionJson {
    /// Constant term first.
    pub coeffs: Vec<String>,
    pub n: u64,
    pub lcm: String,
    pub threshold: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignJson {
    pub config: SweepConfig,
    pub checked_count: u64,
    pub exceptions: Vec<ExceptionJson>,
    pub duration_s: f64,
}

impl From<&ExceptionRecord> for ExceptionJson {
    fn from(e: &ExceptionRecord) -> Self {
        Self {
            coeffs: e.f.coeffs().iter().map(|c| c.to_string()).collect(),
            n: e.n,
            lcm: e.lcm_value.to_string(),
            threshold: e.threshold.to_string(),
        }
    }
}

impl From<&CampaignReport> for CampaignJson {
    fn from(r: &CampaignReport) -> Self {
        Self {
            config: r.config,
            checked_count: r.checked_count,
            exceptions: r.exceptions.iter().map(ExceptionJson::from).collect(),
            duration_s: r.duration.as_secs_f64(),
        }
    }
}

fn parse_int(s: &str) -> Result<BigInt, ReportError> {
    s.parse().map_err(|_| ReportError::BadInteger(s.to_string()))
}

fn parse_nat(s: &str) -> Result<BigUint, ReportError> {
    s.parse().map_err(|_| ReportError::BadInteger(s.to_string()))
}

impl ExceptionJson {
    pub fn to_record(&self) -> Result<ExceptionRecord, ReportError> {
        let coeffs = self.coeffs.iter().map(|c| parse_int(c)).collect::<Result<_, _>>()?;
        Ok(ExceptionRecord {
            f: IntPoly::from_coeffs(coeffs),
            n: self.n,
            lcm_value: parse_nat(&self.lcm)?,
            threshold: parse_nat(&self.threshold)?,
        })
    }
}

impl CampaignJson {
    pub fn parse(s: &str) -> Result<Self, ReportError> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_string_pretty(&self) -> Result<String, ReportError> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

pub fn campaign_to_json(report: &CampaignReport) -> Result<String, ReportError> {
    CampaignJson::from(report).to_string_pretty()
}

#[derive(Serialize)]
struct ExceptionRow<'a> {
    coeffs: String,
    n: u64,
    lcm: &'a str,
    threshold: &'a str,
}

/// One row per exception: `coeffs,n,lcm,threshold`, with the coefficient
/// list comma-joined (and therefore quoted).
pub fn write_campaign_csv<W: Write>(report: &CampaignReport, out: W) -> Result<(), ReportError> {
    let mut w = csv::Writer::from_writer(out);
    let rows: Vec<ExceptionJson> = report.exceptions.iter().map(ExceptionJson::from).collect();
    if rows.is_empty() {
        w.write_record(["coeffs", "n", "lcm", "threshold"])?;
    }
    for row in &rows {
        w.serialize(ExceptionRow {
            coeffs: row.coeffs.join(","),
            n: row.n,
            lcm: &row.lcm,
            threshold: &row.threshold,
        })?;
    }
    w.flush()?;
    Ok(())
}

pub fn suites_to_json(outcomes: &[SuiteOutcome]) -> Result<String, ReportError> {
    Ok(serde_json::to_string_pretty(outcomes)?)
}

pub fn write_suites_csv<W: Write>(outcomes: &[SuiteOutcome], out: W) -> Result<(), ReportError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["suite", "checked", "failures", "first_counterexample"])?;
    for o in outcomes {
        w.write_record([
            o.suite.name().to_string(),
            o.checked.to_string(),
            o.failures.to_string(),
            o.first_counterexample.clone().unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
