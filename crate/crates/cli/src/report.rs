//! Reports: one structure, rendered as text or JSON.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetUsage {
    pub steps: u64,
    pub max_steps: u64,
    pub peak_basis: usize,
    pub max_basis: usize,
}

/// Effective options, after flags and document options are merged.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Effective {
    pub tor_bound: usize,
    pub homology_bound: usize,
    pub window: (i64, i64),
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub ring: String,
    pub options: Effective,
    pub verdicts: BTreeMap<String, Value>,
    pub tables: BTreeMap<String, Table>,
    pub witnesses: BTreeMap<String, String>,
    pub budget: BudgetUsage,
    /// Only with `--timing`; keeps default output byte-stable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(command: &str, ring: String, options: Effective) -> Self {
        Report {
            schema: SCHEMA,
            command: command.to_string(),
            ring,
            options,
            verdicts: BTreeMap::new(),
            tables: BTreeMap::new(),
            witnesses: BTreeMap::new(),
            budget: BudgetUsage { steps: 0, max_steps: 0, peak_basis: 0, max_basis: 0 },
            timing_ms: None,
        }
    }

    pub fn verdict(&mut self, key: &str, v: impl Into<Value>) {
        self.verdicts.insert(key.to_string(), v.into());
    }

    pub fn witness(&mut self, key: &str, v: impl Into<String>) {
        self.witnesses.insert(key.to_string(), v.into());
    }

    pub fn table(&mut self, key: &str, t: Table) {
        self.tables.insert(key.to_string(), t);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} on {}", self.command, self.ring);
        for (k, v) in &self.verdicts {
            let _ = writeln!(s, "  {k}: {}", plain(v));
        }
        for (k, v) in &self.witnesses {
            let _ = writeln!(s, "  {k}: {v}");
        }
        for (name, t) in &self.tables {
            let _ = writeln!(s, "\n{name}");
            let cells: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(plain).collect()).collect();
            let widths: Vec<usize> = (0..t.columns.len())
                .map(|c| cells.iter().map(|r| r[c].len()).chain([t.columns[c].len()]).max().unwrap_or(0))
                .collect();
            let line = |row: &[String]| {
                row.iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            let _ = writeln!(s, "  {}", line(&t.columns));
            for r in &cells {
                let _ = writeln!(s, "  {}", line(r));
            }
        }
        let o = &self.options;
        let _ = writeln!(
            s,
            "\noptions: window {}:{}, tor bound {}, homology bound {}{}",
            o.window.0,
            o.window.1,
            o.tor_bound,
            o.homology_bound,
            o.twist.map(|t| format!(", twist {t}")).unwrap_or_default()
        );
        let b = &self.budget;
        let _ =
            writeln!(s, "budget: {} of {} steps, peak basis {} of {}", b.steps, b.max_steps, b.peak_basis, b.max_basis);
        if let Some(t) = self.timing_ms {
            let _ = writeln!(s, "time: {t} ms");
        }
        s
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => format!("[{}]", a.iter().map(plain).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}
