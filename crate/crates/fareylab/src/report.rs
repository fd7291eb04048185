//! Machine-readable output records.
//!
//! Every CLI invocation emits one or more [`OutputRecord`]s. Exact
//! integers travel as decimal strings so no value ever passes through
//! floating point; reals carry 12 significant digits. Field order is
//! fixed by insertion, so identical invocations serialize to identical
//! bytes.

use std::io::Write;

use indexmap::IndexMap;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: IndexMap<String, String>,
    pub outputs: IndexMap<String, String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_detail: Option<String>,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        OutputRecord {
            command: command.to_string(),
            inputs: IndexMap::new(),
            outputs: IndexMap::new(),
            status: Status::Ok,
            error_detail: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    /// Records an exact integer output as a decimal string.
    pub fn output_int(mut self, key: &str, value: impl ToString) -> Self {
        self.outputs.insert(key.to_string(), value.to_string());
        self
    }

    /// Records a real output with 12 significant digits.
    pub fn output_real(mut self, key: &str, value: f64) -> Self {
        self.outputs.insert(key.to_string(), fmt_real(value));
        self
    }

    pub fn output_str(mut self, key: &str, value: impl ToString) -> Self {
        self.outputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn fail(mut self, error: &Error) -> Self {
        self.status = Status::Error;
        self.error_detail = Some(error.to_string());
        self
    }
}

/// 12 significant digits, scientific notation. Deterministic for any
/// finite input.
pub fn fmt_real(value: f64) -> String {
    format!("{value:.11e}")
}

/// Output encodings. JSON is the stable machine interface (one object
/// per line); CSV is a flat projection with a header row; text is for
/// humans and carries no stability promise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn write_records(records: &[OutputRecord], format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => write_json(records, out),
        Format::Csv => write_csv(records, out),
        Format::Text => write_text(records, out),
    }
}

fn io_err(err: std::io::Error) -> Error {
    Error::resource(format!("output write failed: {err}"))
}

fn write_json(records: &[OutputRecord], out: &mut dyn Write) -> Result<()> {
    for record in records {
        let line = serde_json::to_string(record)
            .map_err(|err| Error::resource(format!("serialization failed: {err}")))?;
        writeln!(out, "{line}").map_err(io_err)?;
    }
    Ok(())
}

fn write_csv(records: &[OutputRecord], out: &mut dyn Write) -> Result<()> {
    let Some(first) = records.first() else {
        return Ok(());
    };
    let mut header: Vec<&str> = vec!["command"];
    header.extend(first.inputs.keys().map(String::as_str));
    header.extend(first.outputs.keys().map(String::as_str));
    header.push("status");
    header.push("error_detail");

    let mut writer = csv::Writer::from_writer(vec![]);
    writer.write_record(&header).map_err(csv_err)?;
    for record in records {
        let mut row: Vec<String> = vec![record.command.clone()];
        // Rows follow the first record's schema; all records of one
        // command share it.
        for key in first.inputs.keys() {
            row.push(record.inputs.get(key).cloned().unwrap_or_default());
        }
        for key in first.outputs.keys() {
            row.push(record.outputs.get(key).cloned().unwrap_or_default());
        }
        row.push(
            match record.status {
                Status::Ok => "ok",
                Status::Error => "error",
            }
            .to_string(),
        );
        row.push(record.error_detail.clone().unwrap_or_default());
        writer.write_record(&row).map_err(csv_err)?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|err| Error::resource(format!("csv flush failed: {err}")))?;
    out.write_all(&bytes).map_err(io_err)
}

fn csv_err(err: csv::Error) -> Error {
    Error::resource(format!("csv write failed: {err}"))
}

fn write_text(records: &[OutputRecord], out: &mut dyn Write) -> Result<()> {
    for record in records {
        let inputs = record
            .inputs
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(out, "{} {}", record.command, inputs).map_err(io_err)?;
        for (key, value) in &record.outputs {
            writeln!(out, "  {key} = {value}").map_err(io_err)?;
        }
        if let Some(detail) = &record.error_detail {
            writeln!(out, "  error: {detail}").map_err(io_err)?;
        }
    }
    Ok(())
}
