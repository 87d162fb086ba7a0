//! Deterministic rendering: 12 significant digits everywhere, stable key order.

use serde_json::{Map, Value};

pub const SCHEMA: &str = "v1";

/// A plot-ready CSV view of a result.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// `field,value` rows from a nested JSON object, paths joined with '.'.
    pub fn flatten(v: &Value) -> Self {
        let mut t = Table::new(&["field", "value"]);
        flatten_into(v, String::new(), &mut t);
        t
    }
}

fn flatten_into(v: &Value, path: String, t: &mut Table) {
    let join = |k: &str| {
        if path.is_empty() {
            k.to_string()
        } else {
            format!("{path}.{k}")
        }
    };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| flatten_into(x, join(k), t)),
        Value::Array(a) => a
            .iter()
            .enumerate()
            .for_each(|(i, x)| flatten_into(x, join(&i.to_string()), t)),
        leaf => t.push(vec![Value::String(path), leaf.clone()]),
    }
}

/// Rounds to 12 significant digits; non-finite values pass through.
pub fn sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

pub fn round_json(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = sig12(n.as_f64().unwrap_or(f64::NAN));
            serde_json::Number::from_f64(x)
                .map(Value::Number)
                .unwrap_or(Value::Null)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_json).collect()),
        Value::Object(m) => Value::Object(m.into_iter().map(|(k, x)| (k, round_json(x))).collect::<Map<_, _>>()),
        other => other,
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => i.to_string(),
            (_, Some(u)) => u.to_string(),
            _ => number(n.as_f64().unwrap_or(f64::NAN)),
        },
        other => other.to_string(),
    }
}

/// Plain decimal in the usual range, exponent form outside it.
pub fn number(x: f64) -> String {
    let r = sig12(x);
    let a = r.abs();
    if r == 0.0 || (1e-4..1e15).contains(&a) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

/// Indented JSON with object-free arrays kept on one line when short.
pub fn render_json(v: Value) -> String {
    let mut s = String::new();
    write_value(&round_json(v), 0, &mut s);
    s.push('\n');
    s
}

fn has_object(v: &Value) -> bool {
    match v {
        Value::Object(_) => true,
        Value::Array(a) => a.iter().any(has_object),
        _ => false,
    }
}

fn write_value(v: &Value, depth: usize, s: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Object(m) if !m.is_empty() => {
            s.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                s.push_str(&pad(depth + 1));
                s.push_str(&Value::String(k.clone()).to_string());
                s.push_str(": ");
                write_value(x, depth + 1, s);
                s.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            s.push_str(&pad(depth));
            s.push('}');
        }
        Value::Array(a) if !a.is_empty() => {
            let flat = v.to_string();
            if !has_object(v) && flat.len() <= 100 {
                s.push_str(&flat.replace(',', ", "));
                return;
            }
            s.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                s.push_str(&pad(depth + 1));
                write_value(x, depth + 1, s);
                s.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
            }
            s.push_str(&pad(depth));
            s.push(']');
        }
        leaf => s.push_str(&leaf.to_string()),
    }
}

pub fn render_csv(t: &Table) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&t.header)?;
    for row in &t.rows {
        w.write_record(row.iter().map(cell))?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("CSV of UTF-8 cells is UTF-8"))
}
