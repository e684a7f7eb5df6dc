//! Experiment configuration, schedules and `--set` overrides.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    /// Points per axis.
    pub n: usize,
    /// Half-width of line grids; ignored on the torus.
    pub l: f64,
    pub d: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum Schedule {
    List { values: Vec<f64> },
    /// `start, start + step, ...` up to `stop` inclusive.
    Range { start: f64, stop: f64, step: f64 },
    /// Powers of two from `start` to `stop` inclusive.
    Dyadic { start: f64, stop: f64 },
}

impl Schedule {
    pub fn values(&self) -> CliResult<Vec<f64>> {
        let bad = |m: String| Err(CliError::Validation(format!("schedule: {m}")));
        let v = match *self {
            Self::List { ref values } => values.clone(),
            Self::Range { start, stop, step } => {
                if !(step > 0.0 && start.is_finite() && stop.is_finite()) || stop < start {
                    return bad(format!("range {start}..{stop} step {step} is empty or unbounded"));
                }
                let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
                if count > 1_000_000 {
                    return bad(format!("range has {count} points; raise the step"));
                }
                // index-based so the points do not drift
                (0..count).map(|i| start + step * i as f64).collect()
            }
            Self::Dyadic { start, stop } => {
                if !(start > 0.0 && stop >= start && stop.is_finite()) {
                    return bad(format!("dyadic {start}..{stop} needs 0 < start ≤ stop"));
                }
                if start.log2().fract() != 0.0 || stop.log2().fract() != 0.0 {
                    return bad("dyadic endpoints must be powers of two".into());
                }
                let (a, b) = (start.log2() as i32, stop.log2() as i32);
                (a..=b).map(|k| 2f64.powi(k)).collect()
            }
        };
        if v.is_empty() {
            return bad("no points".into());
        }
        if let Some(x) = v.iter().find(|x| x.is_nan()) {
            return bad(format!("{x} is not a number"));
        }
        Ok(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Full experiment description; every field is always serialized.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: String,
    pub grid: GridConfig,
    /// Catalog key, or a comma-separated list of keys.
    pub function: String,
    pub method: String,
    pub schedule: Schedule,
    pub seed: u64,
    /// `-` writes to stdout.
    pub out: String,
    pub format: Format,
    /// Extra scalars; values parse as numbers, with `inf` allowed.
    pub params: BTreeMap<String, String>,
}

impl ExperimentConfig {
    pub fn blank(experiment: &str) -> Self {
        Self {
            experiment: experiment.to_string(),
            grid: GridConfig { n: 1024, l: 8.0, d: 1 },
            function: String::new(),
            method: String::new(),
            schedule: Schedule::List { values: vec![] },
            seed: 0,
            out: "-".into(),
            format: Format::Csv,
            params: BTreeMap::new(),
        }
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn param(&self, key: &str) -> CliResult<f64> {
        let raw = self
            .params
            .get(key)
            .ok_or_else(|| CliError::Validation(format!("params.{key} is missing")))?;
        parse_scalar(raw).ok_or_else(|| CliError::Validation(format!("params.{key} = {raw:?} is not a number")))
    }

    pub fn count(&self, key: &str) -> CliResult<usize> {
        let v = self.param(key)?;
        if v < 0.0 || v.fract() != 0.0 || v > 1e9 {
            return Err(CliError::Validation(format!("params.{key} = {v} is not a count")));
        }
        Ok(v as usize)
    }

    /// Comma-separated catalog keys, splitting only outside parentheses.
    pub fn functions(&self) -> Vec<String> {
        let mut out = Vec::new();
        let (mut depth, mut cur) = (0i32, String::new());
        for c in self.function.chars() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            if c == ',' && depth == 0 {
                out.push(cur.trim().to_string());
                cur.clear();
            } else {
                cur.push(c);
            }
        }
        if !cur.trim().is_empty() {
            out.push(cur.trim().to_string());
        }
        out
    }

    /// Apply `key=value`, where `key` is a dotted path such as `grid.n`.
    pub fn set(&mut self, assignment: &str) -> CliResult<()> {
        let (key, raw) = assignment
            .split_once('=')
            .ok_or_else(|| CliError::Validation(format!("--set {assignment:?} is not key=value")))?;
        let mut root = serde_json::to_value(&*self).expect("config serializes");
        let path: Vec<&str> = key.trim().split('.').collect();
        let mut node = &mut root;
        for (i, part) in path.iter().enumerate() {
            let last = i + 1 == path.len();
            let obj = node
                .as_object_mut()
                .ok_or_else(|| CliError::Validation(format!("{key}: {part} is not a nested field")))?;
            let free = path[..i] == ["params"];
            if !obj.contains_key(*part) && !free {
                let keys: Vec<String> = obj.keys().cloned().collect();
                return Err(CliError::Validation(format!("unknown field {key:?}{}", suggest(part, &keys))));
            }
            if last {
                let v = if free || path == ["function"] || path == ["method"] || path == ["experiment"] || path == ["out"] {
                    Value::String(raw.to_string())
                } else {
                    serde_json::from_str(raw).unwrap_or_else(|_| Value::String(raw.to_string()))
                };
                obj.insert(part.to_string(), v);
                break;
            }
            node = obj.get_mut(*part).expect("checked above");
        }
        *self = serde_json::from_value(root).map_err(|e| CliError::Validation(format!("--set {key}: {e}")))?;
        Ok(())
    }
}

pub fn parse_scalar(raw: &str) -> Option<f64> {
    match raw.trim() {
        "inf" | "+inf" | "infinity" => Some(f64::INFINITY),
        s => s.parse().ok().filter(|v: &f64| !v.is_nan()),
    }
}

/// `" (did you mean ...?)"` for the closest candidate, or an empty string.
pub fn suggest(key: &str, candidates: &[String]) -> String {
    candidates
        .iter()
        .map(|c| (strsim::levenshtein(key, c), c))
        .filter(|(d, c)| *d <= 3.max(c.len() / 3))
        .min()
        .map(|(_, c)| format!(" (did you mean {c:?}?)"))
        .unwrap_or_default()
}
