//! Line-oriented report documents.
//!
//! A report is an ordered list of `key: value` lines. Reals are printed with
//! 12 significant digits, trailing zeros trimmed but at least one decimal
//! kept (`4/7` prints as `0.571428571429`, one as `1.0`). Lists of reals are
//! bracketed and comma-separated. Parsing a rendered document and rendering
//! it again reproduces the same bytes.

use std::fmt::Write as _;

use serde_json::{Map, Number, Value as Json};

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Text(String),
    Bool(bool),
    Int(u64),
    Real(f64),
    List(Vec<f64>),
}

impl Value {
    fn render(&self) -> String {
        match self {
            Value::Text(s) => s.clone(),
            Value::Bool(b) => b.to_string(),
            Value::Int(i) => i.to_string(),
            Value::Real(r) => format_real(*r),
            Value::List(values) => {
                let items: Vec<String> = values.iter().map(|&v| format_real(v)).collect();
                format!("[{}]", items.join(", "))
            }
        }
    }

    fn parse(raw: &str) -> Value {
        match raw {
            "true" => return Value::Bool(true),
            "false" => return Value::Bool(false),
            _ => {}
        }
        if let Some(inner) = raw.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            if inner.trim().is_empty() {
                return Value::List(Vec::new());
            }
            let parsed: Option<Vec<f64>> =
                inner.split(',').map(|v| v.trim().parse().ok()).collect();
            if let Some(values) = parsed {
                return Value::List(values);
            }
        }
        if let Ok(i) = raw.parse::<u64>() {
            return Value::Int(i);
        }
        if raw.contains(['.', 'e', 'E']) {
            if let Ok(r) = raw.parse::<f64>() {
                if r.is_finite() {
                    return Value::Real(r);
                }
            }
        }
        Value::Text(raw.to_string())
    }

    fn to_json(&self) -> Json {
        match self {
            Value::Text(s) => Json::String(s.clone()),
            Value::Bool(b) => Json::Bool(*b),
            Value::Int(i) => Json::Number((*i).into()),
            Value::Real(r) => real_to_json(*r),
            Value::List(values) => Json::Array(values.iter().map(|&v| real_to_json(v)).collect()),
        }
    }
}

fn real_to_json(r: f64) -> Json {
    let rounded: f64 = format_real(r).parse().unwrap_or(r);
    Number::from_f64(rounded).map_or(Json::Null, Json::Number)
}

/// Formats `v` with 12 significant digits.
pub fn format_real(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    if v == 0.0 {
        return "0.0".to_string();
    }
    let sci = format!("{v:.11e}");
    let (mantissa, exponent) = sci.split_once('e').expect("exponent form");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if (-5..12).contains(&exponent) {
        let decimals = (11 - exponent).max(0) as usize;
        trim_zeros(format!("{v:.decimals$}"))
    } else {
        format!("{}e{exponent}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(mut s: String) -> String {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.push('0');
        }
    }
    s
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ReportDocument {
    entries: Vec<(String, Value)>,
}

impl ReportDocument {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: Value) -> &mut Self {
        self.entries.push((key.into(), value));
        self
    }

    pub fn text(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        self.push(key, Value::Text(value.into()))
    }

    pub fn flag(&mut self, key: &str, value: bool) -> &mut Self {
        self.push(key, Value::Bool(value))
    }

    pub fn int(&mut self, key: &str, value: usize) -> &mut Self {
        self.push(key, Value::Int(value as u64))
    }

    pub fn real(&mut self, key: &str, value: f64) -> &mut Self {
        self.push(key, Value::Real(value))
    }

    pub fn list(&mut self, key: &str, values: &[f64]) -> &mut Self {
        self.push(key, Value::List(values.to_vec()))
    }

    pub fn entries(&self) -> &[(String, Value)] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn get_real(&self, key: &str) -> Option<f64> {
        match self.get(key)? {
            Value::Real(r) => Some(*r),
            Value::Int(i) => Some(*i as f64),
            _ => None,
        }
    }

    pub fn get_bool(&self, key: &str) -> Option<bool> {
        match self.get(key)? {
            Value::Bool(b) => Some(*b),
            _ => None,
        }
    }

    pub fn get_text(&self, key: &str) -> Option<&str> {
        match self.get(key)? {
            Value::Text(s) => Some(s),
            _ => None,
        }
    }

    /// Renders the `key: value` form, one entry per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.entries {
            writeln!(out, "{key}: {}", value.render()).expect("writing to a String");
        }
        out
    }

    /// Renders a JSON object with keys in document order.
    pub fn render_json(&self) -> String {
        let map: Map<String, Json> = self
            .entries
            .iter()
            .map(|(k, v)| (k.clone(), v.to_json()))
            .collect();
        let mut out = serde_json::to_string_pretty(&Json::Object(map)).expect("valid JSON");
        out.push('\n');
        out
    }

    /// Parses the `key: value` form. Blank lines are skipped; a line without
    /// `": "` is an error.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut doc = Self::new();
        for (number, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (key, raw) = line
                .split_once(": ")
                .ok_or_else(|| format!("line {}: expected 'key: value'", number + 1))?;
            doc.push(key, Value::parse(raw));
        }
        Ok(doc)
    }
}
