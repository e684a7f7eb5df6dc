//! Rectangular result tables and their CSV / JSON encodings.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::config::{ExperimentConfig, Format};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Metadata {
    pub config: ExperimentConfig,
    pub version: String,
    /// Seconds spent in the experiment; the only nondeterministic field.
    pub wall_clock_s: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResultTable {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    /// Structured per-experiment extras, emitted in JSON only.
    pub details: Vec<Value>,
    pub metadata: Option<Metadata>,
}

/// `{:.16e}`: 17 significant digits, exact round trip for doubles.
pub fn fmt_scalar(v: f64) -> String {
    format!("{v:.16e}")
}

impl ResultTable {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            details: Vec::new(),
            metadata: None,
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        assert_eq!(row.len(), self.columns.len(), "row width differs from the header");
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    /// `Some(all rows pass)` when the table has a `pass` column.
    pub fn passed(&self) -> Option<bool> {
        self.column("pass").map(|p| !p.is_empty() && p.iter().all(|&v| v == 1.0))
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    /// Header and rows only; byte-identical across runs of one config.
    pub fn csv_data(&self) -> String {
        let mut s = self.columns.join(",");
        s.push('\n');
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|&v| fmt_scalar(v)).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        if let Some(m) = &self.metadata {
            let cfg = serde_json::to_string(&m.config).expect("config serializes");
            writeln!(s, "# config: {cfg}").unwrap();
            writeln!(s, "# version: {}", m.version).unwrap();
            writeln!(s, "# wall_clock_s: {}", m.wall_clock_s).unwrap();
        }
        s + &self.csv_data()
    }

    /// Columns as arrays; non-finite values become their CSV spelling.
    pub fn json_data(&self) -> Value {
        let mut data = Map::new();
        for (i, c) in self.columns.iter().enumerate() {
            let col: Vec<Value> = self
                .rows
                .iter()
                .map(|r| {
                    let v = r[i];
                    if v.is_finite() {
                        json!(v)
                    } else {
                        json!(fmt_scalar(v))
                    }
                })
                .collect();
            data.insert(c.clone(), Value::Array(col));
        }
        json!({ "columns": self.columns, "data": data, "details": self.details })
    }

    pub fn to_json(&self) -> String {
        let mut v = self.json_data();
        if let Some(m) = &self.metadata {
            v["metadata"] = serde_json::to_value(m).expect("metadata serializes");
        }
        serde_json::to_string_pretty(&v).expect("table serializes") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trips_doubles() {
        let mut t = ResultTable::new(&["a", "b"]);
        t.push(vec![0.1, std::f64::consts::PI]);
        t.push(vec![f64::INFINITY, -1e-300]);
        let csv = t.csv_data();
        let back: Vec<f64> = csv.lines().nth(1).unwrap().split(',').map(|s| s.parse().unwrap()).collect();
        assert_eq!(back, vec![0.1, std::f64::consts::PI]);
        assert!(csv.contains("inf"));
        assert_eq!(t.passed(), None);
    }

    #[test]
    fn pass_column() {
        let mut t = ResultTable::new(&["x", "pass"]);
        t.push(vec![1.0, 1.0]);
        assert_eq!(t.passed(), Some(true));
        t.push(vec![2.0, 0.0]);
        assert_eq!(t.passed(), Some(false));
        let j = t.json_data();
        assert_eq!(j["data"]["x"][1], json!(2.0));
    }
}
