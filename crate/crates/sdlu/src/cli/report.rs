//! Structured command output, rendered as aligned text or JSON.
//!
//! Numbers carry both a decimal reading and, on the exact backend, the
//! underlying rational, so `--format json` output is machine-checkable
//! without re-deriving fractions from decimals.

use std::fmt::Write as _;

use serde::Serialize;

use crate::scalar::Scalar;

/// Output format for rendered reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// A numeric report entry: decimal always, exact form when available.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportNum {
    pub decimal: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rational: Option<String>,
}

impl ReportNum {
    pub fn of<T: Scalar>(value: &T) -> Self {
        ReportNum {
            decimal: value.to_f64(),
            rational: value.rational_repr(),
        }
    }

    fn render(&self) -> String {
        let decimal = format!("{}", self.decimal);
        match &self.rational {
            Some(r) if *r != decimal => format!("{r} ({decimal})"),
            _ => decimal,
        }
    }
}

/// One report value.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Number(ReportNum),
    NumberList(Vec<ReportNum>),
    Text(String),
    Bool(bool),
    Count(u64),
}

impl Value {
    fn render(&self) -> String {
        match self {
            Value::Number(n) => n.render(),
            Value::NumberList(ns) => ns
                .iter()
                .map(ReportNum::render)
                .collect::<Vec<_>>()
                .join(", "),
            Value::Text(s) => s.clone(),
            Value::Bool(b) => b.to_string(),
            Value::Count(c) => c.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Entry {
    pub key: String,
    pub value: Value,
}

/// A titled block of key/value findings.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Section {
    pub title: String,
    pub entries: Vec<Entry>,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Section {
            title: title.into(),
            entries: Vec::new(),
        }
    }

    pub fn push(mut self, key: impl Into<String>, value: Value) -> Self {
        self.entries.push(Entry {
            key: key.into(),
            value,
        });
        self
    }

    pub fn num<T: Scalar>(self, key: impl Into<String>, value: &T) -> Self {
        self.push(key, Value::Number(ReportNum::of(value)))
    }

    pub fn nums<T: Scalar>(self, key: impl Into<String>, values: &[T]) -> Self {
        self.push(
            key,
            Value::NumberList(values.iter().map(ReportNum::of).collect()),
        )
    }

    pub fn text(self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.push(key, Value::Text(value.into()))
    }

    pub fn flag(self, key: impl Into<String>, value: bool) -> Self {
        self.push(key, Value::Bool(value))
    }

    pub fn count(self, key: impl Into<String>, value: usize) -> Self {
        self.push(key, Value::Count(value as u64))
    }
}

/// A complete command result.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub backend: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub label: String,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(command: &str, exact: bool, seed: Option<u64>, label: &str) -> Self {
        Report {
            command: command.to_string(),
            backend: if exact { "exact" } else { "float" }.to_string(),
            seed,
            label: label.to_string(),
            sections: Vec::new(),
        }
    }

    pub fn section(mut self, section: Section) -> Self {
        self.sections.push(section);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut out =
                    serde_json::to_string_pretty(self).expect("report serialization is total");
                out.push('\n');
                out
            }
            Format::Text => {
                let mut out = String::new();
                let _ = writeln!(out, "command: {}", self.command);
                let _ = writeln!(out, "backend: {}", self.backend);
                if let Some(seed) = self.seed {
                    let _ = writeln!(out, "seed: {seed}");
                }
                let _ = writeln!(out, "label: {}", self.label);
                for section in &self.sections {
                    let _ = writeln!(out);
                    let _ = writeln!(out, "[{}]", section.title);
                    for entry in &section.entries {
                        let _ = writeln!(out, "{}: {}", entry.key, entry.value.render());
                    }
                }
                out
            }
        }
    }
}
