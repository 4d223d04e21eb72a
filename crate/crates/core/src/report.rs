//! Canonical JSON and the record emitters used by the CLI.
//!
//! Every object is emitted with sorted keys and without floating point, so
//! parsing a report and serializing it again reproduces the same bytes.

use std::io::Write;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};
use serde_json::{Map, Number, Value};

use crate::error::{Error, Result};

/// Serializes a big integer as a JSON number rather than a string.
pub fn big_number<S: Serializer>(
    n: &BigUint,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    let number = Number::from_str(&n.to_string()).map_err(serde::ser::Error::custom)?;
    number.serialize(serializer)
}

pub fn to_canonical_value<T: Serialize>(value: &T) -> Result<Value> {
    serde_json::to_value(value).map_err(|e| Error::Invariant(format!("serialization failed: {e}")))
}

/// Compact JSON with sorted object keys.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let v = to_canonical_value(value)?;
    serde_json::to_string(&v).map_err(|e| Error::Invariant(format!("serialization failed: {e}")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    /// One canonical JSON object per line.
    #[default]
    Json,
    /// One row per record; nested values are embedded as JSON text. A new
    /// header is written whenever the column set changes.
    Csv,
    /// Aligned plain-text columns.
    Table,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "table" => Ok(Self::Table),
            _ => Err(Error::InvalidArgument(format!(
                "unknown output format {s:?}; expected json, csv or table"
            ))),
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("write failed: {e}"))
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => serde_json::to_string(other).expect("values always serialize"),
    }
}

fn as_object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("value".into(), other);
            m
        }
    }
}

/// Writes a sequence of records in the requested format.
pub fn emit(records: &[Value], format: OutputFormat, out: &mut dyn Write) -> Result<()> {
    match format {
        OutputFormat::Json => {
            for r in records {
                let line = serde_json::to_string(r).map_err(|e| Error::Invariant(e.to_string()))?;
                writeln!(out, "{line}").map_err(io_err)?;
            }
        }
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .flexible(true)
                .from_writer(Vec::new());
            let mut header: Option<Vec<String>> = None;
            for r in records {
                let obj = as_object(r.clone());
                let keys: Vec<String> = obj.keys().cloned().collect();
                if header.as_ref() != Some(&keys) {
                    w.write_record(&keys)
                        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
                    header = Some(keys);
                }
                w.write_record(obj.values().map(cell))
                    .map_err(|e| Error::InvalidArgument(e.to_string()))?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| Error::InvalidArgument(e.to_string()))?;
            out.write_all(&bytes).map_err(io_err)?;
        }
        OutputFormat::Table => {
            let mut i = 0;
            while i < records.len() {
                let keys: Vec<String> = as_object(records[i].clone()).keys().cloned().collect();
                let mut rows = Vec::new();
                while i < records.len() {
                    let obj = as_object(records[i].clone());
                    if obj.keys().ne(keys.iter()) {
                        break;
                    }
                    rows.push(obj.values().map(cell).collect::<Vec<_>>());
                    i += 1;
                }
                write_table(&keys, &rows, out)?;
            }
        }
    }
    Ok(())
}

fn write_table(keys: &[String], rows: &[Vec<String>], out: &mut dyn Write) -> Result<()> {
    let widths: Vec<usize> = (0..keys.len())
        .map(|c| {
            rows.iter()
                .map(|r| r[c].chars().count())
                .chain([keys[c].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: &[String]| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    writeln!(out, "{}", line(keys)).map_err(io_err)?;
    for r in rows {
        writeln!(out, "{}", line(r)).map_err(io_err)?;
    }
    Ok(())
}
