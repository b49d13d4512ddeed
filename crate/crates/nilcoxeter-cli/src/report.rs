//! Command output, rendered as text or JSON.

use std::fmt::Write;

use serde::Serialize;
use serde_json::{Map, Value};

/// A pass/fail verdict on one invariant.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Verdict {
    pub fn new(name: impl Into<String>, passed: bool, checked: usize, detail: Option<String>) -> Self {
        Self { name: name.into(), passed, checked, detail }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Self { name: name.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        self.rows.push(row);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: Map<String, Value>,
    /// Lines printed first in text mode.
    pub summary: Vec<String>,
    pub values: Map<String, Value>,
    pub tables: Vec<Table>,
    pub checks: Vec<Verdict>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.into(),
            parameters: Map::new(),
            summary: Vec::new(),
            values: Map::new(),
            tables: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, v: impl Serialize) {
        self.parameters.insert(key.into(), serde_json::to_value(v).expect("serializable"));
    }

    pub fn value(&mut self, key: &str, v: impl Serialize) {
        self.values.insert(key.into(), serde_json::to_value(v).expect("serializable"));
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.summary.push(s.into());
    }

    pub fn check(&mut self, v: Verdict) {
        self.checks.push(v);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Name of the first failing check.
    pub fn first_failure(&self) -> Option<&Verdict> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.summary {
            let _ = writeln!(out, "{l}");
        }
        for t in &self.tables {
            let _ = writeln!(out, "{}:", t.name);
            let cells: Vec<Vec<String>> = std::iter::once(t.columns.clone())
                .chain(t.rows.iter().map(|r| r.iter().map(cell).collect()))
                .collect();
            let widths: Vec<usize> = (0..t.columns.len())
                .map(|c| cells.iter().map(|r| r.get(c).map_or(0, |s| s.chars().count())).max().unwrap_or(0))
                .collect();
            for r in &cells {
                let padded: Vec<String> =
                    r.iter().zip(&widths).map(|(s, &w)| format!("{s:>w$}")).collect();
                let _ = writeln!(out, "  {}", padded.join("  ").trim_end());
            }
        }
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = write!(out, "{status} {} ({} checked)", c.name, c.checked);
            if let Some(d) = &c.detail {
                let _ = write!(out, ": {d}");
            }
            out.push('\n');
        }
        out
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}
