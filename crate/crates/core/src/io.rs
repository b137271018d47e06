//! Dataset ingestion and deterministic report serialization.
//!
//! Input is either CSV with an `id,mu,nu` header or a JSON array of
//! `{"id": .., "mu": .., "nu": ..}` objects. Reports render every real in
//! fixed decimal notation at a chosen [`Precision`]; the same report always
//! produces the same bytes.

use std::fmt;
use std::io::Read;
use std::path::Path;
use std::str::FromStr;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};

use crate::algebra::BipolarFuzzySet;
use crate::error::{Error, Result};
use crate::kernel::{BipolarValue, ValueClass};
use crate::measures::audit::AuditReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl Format {
    /// `.json` means JSON; anything else is read as CSV.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Csv,
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

/// One input row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetRecord {
    pub id: String,
    pub mu: f64,
    pub nu: f64,
}

impl DatasetRecord {
    /// `record` is the 1-based position used in error messages.
    fn validate(self, record: usize) -> Result<(String, BipolarValue)> {
        if self.id.is_empty() {
            return Err(Error::Parse {
                record,
                message: "empty id".into(),
            });
        }
        for (field, value) in [("mu", self.mu), ("nu", self.nu)] {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::RecordOutOfRange {
                    record,
                    id: self.id,
                    field,
                    value,
                });
            }
        }
        let value = BipolarValue::new(self.mu, self.nu)?;
        Ok((self.id, value))
    }
}

pub fn read_dataset<R: Read>(source: R, format: Format) -> Result<BipolarFuzzySet> {
    match format {
        Format::Csv => read_csv(source),
        Format::Json => read_json(source),
    }
}

fn read_csv<R: Read>(source: R) -> Result<BipolarFuzzySet> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(source);
    let headers = reader.headers()?.clone();
    let column = |name: &'static str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or(Error::MissingColumn(name))
    };
    let (id_col, mu_col, nu_col) = (column("id")?, column("mu")?, column("nu")?);

    let mut set = BipolarFuzzySet::new();
    for row in reader.records() {
        let row = row?;
        let line = row.position().map_or(0, |p| p.line() as usize);
        let number = |col: usize, name: &str| -> Result<f64> {
            let raw = row.get(col).unwrap_or("");
            raw.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| Error::Parse {
                    record: line,
                    message: format!("{name} = `{raw}` is not a finite number"),
                })
        };
        let record = DatasetRecord {
            id: row.get(id_col).unwrap_or("").to_string(),
            mu: number(mu_col, "mu")?,
            nu: number(nu_col, "nu")?,
        };
        let (id, value) = record.validate(line)?;
        set.insert(id, value)?;
    }
    Ok(set)
}

fn read_json<R: Read>(source: R) -> Result<BipolarFuzzySet> {
    let records: Vec<DatasetRecord> = serde_json::from_reader(source)?;
    let mut set = BipolarFuzzySet::new();
    for (k, record) in records.into_iter().enumerate() {
        let (id, value) = record.validate(k + 1)?;
        set.insert(id, value)?;
    }
    Ok(set)
}

/// Writes a set back in the input format, degrees at full precision.
pub fn write_dataset(set: &BipolarFuzzySet, format: Format) -> Result<Vec<u8>> {
    let records: Vec<DatasetRecord> = set
        .iter()
        .map(|(id, x)| DatasetRecord {
            id: id.to_string(),
            mu: x.mu(),
            nu: x.nu(),
        })
        .collect();
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["id", "mu", "nu"])?;
            for r in &records {
                w.write_record([r.id.clone(), r.mu.to_string(), r.nu.to_string()])?;
            }
            Ok(w.into_inner().map_err(|e| e.into_error())?)
        }
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(&records)?;
            out.push(b'\n');
            Ok(out)
        }
    }
}

/// How reals are rendered in reports. Computation never sees this.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    /// Fixed notation carrying this many significant digits.
    Significant(u32),
    /// Two decimals, cut toward zero, the way the published tables print them.
    Paper,
}

impl Default for Precision {
    fn default() -> Self {
        Precision::Significant(6)
    }
}

impl Precision {
    pub fn render(self, x: f64) -> String {
        if !x.is_finite() {
            // reports only hold finite values; keep the output parseable anyway
            return "null".into();
        }
        let s = match self {
            Precision::Significant(digits) => {
                let digits = digits.max(1) as i32;
                let decimals = if x == 0.0 {
                    digits - 1
                } else {
                    (digits - 1 - x.abs().log10().floor() as i32).max(0)
                };
                format!("{:.*}", decimals as usize, x)
            }
            Precision::Paper => {
                // the 1e-9 nudge keeps 0.7999999999 from printing as 0.79
                let cut = (x.abs() * 100.0 + 1e-9).floor() / 100.0;
                format!("{:.2}", cut.copysign(x))
            }
        };
        match s.strip_prefix('-') {
            Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
            _ => s,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub dataset: String,
    pub command: String,
    pub distance_kind: Option<String>,
    pub cardinality_kinds: Vec<String>,
    pub entropy_kinds: Vec<String>,
    pub norm_pair: Option<String>,
    pub tool_version: String,
}

impl Metadata {
    pub fn new(dataset: impl Into<String>, command: impl Into<String>) -> Self {
        Self {
            dataset: dataset.into(),
            command: command.into(),
            distance_kind: None,
            cardinality_kinds: Vec::new(),
            entropy_kinds: Vec::new(),
            norm_pair: None,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

/// Decomposition of one element plus any requested measures.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementRow {
    pub id: String,
    pub mu: f64,
    pub nu: f64,
    pub t: f64,
    pub f: f64,
    pub u: f64,
    pub c: f64,
    pub i: f64,
    pub tau: f64,
    pub omega: f64,
    pub class: ValueClass,
    pub cardinality: IndexMap<String, Option<f64>>,
    pub entropy: IndexMap<String, Option<f64>>,
}

impl ElementRow {
    pub fn decompose(id: &str, x: &BipolarValue) -> Self {
        let p = x.to_penta();
        let v = p.to_tau_omega();
        Self {
            id: id.to_string(),
            mu: x.mu(),
            nu: x.nu(),
            t: p.t,
            f: p.f,
            u: p.u,
            c: p.c,
            i: p.i,
            tau: v.tau,
            omega: v.omega,
            class: x.classify(),
            cardinality: IndexMap::new(),
            entropy: IndexMap::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregateRow {
    pub name: String,
    pub kind: String,
    pub value: f64,
}

/// Strictly lower-triangular matrix; row `k` has `k` entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairwiseMatrix {
    /// `similarity` or `distance`.
    pub measure: String,
    pub kind: String,
    pub ids: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureReport {
    pub metadata: Metadata,
    pub elements: Vec<ElementRow>,
    pub aggregates: Vec<AggregateRow>,
    pub similarity: Option<PairwiseMatrix>,
}

impl MeasureReport {
    pub fn new(metadata: Metadata) -> Self {
        Self {
            metadata,
            elements: Vec::new(),
            aggregates: Vec::new(),
            similarity: None,
        }
    }
}

pub fn write_report(
    report: &MeasureReport,
    format: Format,
    precision: Precision,
) -> Result<Vec<u8>> {
    match format {
        Format::Json => render_json(report, precision),
        Format::Csv => report_csv(report, precision),
    }
}

pub fn write_audit(report: &AuditReport, format: Format, precision: Precision) -> Result<Vec<u8>> {
    match format {
        Format::Json => render_json(report, precision),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["target", "axiom", "status", "checks", "skipped", "witness"])?;
            for r in &report.results {
                w.write_record([
                    report.target.clone(),
                    r.axiom.to_string(),
                    r.status.to_string(),
                    r.checks.to_string(),
                    r.skipped.to_string(),
                    r.witness
                        .as_ref()
                        .map(|w| w.to_string())
                        .unwrap_or_default(),
                ])?;
            }
            Ok(w.into_inner().map_err(|e| e.into_error())?)
        }
    }
}

fn render_json<T: Serialize>(value: &T, precision: Precision) -> Result<Vec<u8>> {
    let mut tree = serde_json::to_value(value)?;
    fix_numbers(&mut tree, precision);
    let mut out = serde_json::to_vec_pretty(&tree)?;
    out.push(b'\n');
    Ok(out)
}

fn fix_numbers(value: &mut Value, precision: Precision) {
    match value {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().unwrap_or(f64::NAN);
            *value = Number::from_str(&precision.render(x)).map_or(Value::Null, Value::Number);
        }
        Value::Array(items) => items.iter_mut().for_each(|v| fix_numbers(v, precision)),
        Value::Object(map) => map.values_mut().for_each(|v| fix_numbers(v, precision)),
        _ => {}
    }
}

fn report_csv(report: &MeasureReport, precision: Precision) -> Result<Vec<u8>> {
    let num = |x: f64| precision.render(x);
    let opt = |x: Option<f64>| x.map(num).unwrap_or_default();
    let mut out = Vec::new();

    let meta = &report.metadata;
    let mut header: Vec<String> = [
        "id", "mu", "nu", "t", "f", "u", "c", "i", "tau", "omega", "class",
    ]
    .map(String::from)
    .to_vec();
    header.extend(meta.cardinality_kinds.iter().map(|k| format!("card_{k}")));
    header.extend(meta.entropy_kinds.iter().map(|k| format!("entropy_{k}")));

    let mut w = csv::Writer::from_writer(&mut out);
    w.write_record(&header)?;
    for row in &report.elements {
        let mut rec = vec![row.id.clone()];
        rec.extend(
            [
                row.mu, row.nu, row.t, row.f, row.u, row.c, row.i, row.tau, row.omega,
            ]
            .map(num),
        );
        rec.push(row.class.as_str().to_string());
        rec.extend(
            meta.cardinality_kinds
                .iter()
                .map(|k| opt(row.cardinality.get(k).copied().flatten())),
        );
        rec.extend(
            meta.entropy_kinds
                .iter()
                .map(|k| opt(row.entropy.get(k).copied().flatten())),
        );
        w.write_record(&rec)?;
    }
    w.flush()?;
    drop(w);

    if !report.aggregates.is_empty() {
        out.push(b'\n');
        let mut w = csv::Writer::from_writer(&mut out);
        w.write_record(["aggregate", "kind", "value"])?;
        for a in &report.aggregates {
            w.write_record([a.name.clone(), a.kind.clone(), num(a.value)])?;
        }
        w.flush()?;
    }

    if let Some(m) = &report.similarity {
        out.push(b'\n');
        let mut w = csv::Writer::from_writer(&mut out);
        w.write_record(["row", "column", &format!("{}_{}", m.measure, m.kind)])?;
        for (r, row) in m.rows.iter().enumerate() {
            for (c, value) in row.iter().enumerate() {
                w.write_record([m.ids[r].clone(), m.ids[c].clone(), num(*value)])?;
            }
        }
        w.flush()?;
    }
    Ok(out)
}
