//! JSON input documents: `{"u": [[lo, hi], ...], "v": [...]?, "base_index": int?}`.

use opial_core::{Interval, IntervalSequence, Rational};
use serde_json::{json, Map, Value};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("{path}: cannot read {value} as an exact rational")]
    NonRational { path: String, value: String },
}

fn schema(path: &str, message: impl Into<String>) -> InputError {
    InputError::Schema {
        path: path.to_string(),
        message: message.into(),
    }
}

/// One sequence, or two for the pair inequalities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Input {
    pub u: IntervalSequence,
    pub v: Option<IntervalSequence>,
}

impl Input {
    /// The document form, with endpoints written as exact rational strings.
    pub fn to_json(&self) -> Value {
        let items = |s: &IntervalSequence| -> Value {
            s.items()
                .iter()
                .map(|x| json!([x.lo().to_string(), x.hi().to_string()]))
                .collect()
        };
        let mut doc = Map::new();
        doc.insert("u".into(), items(&self.u));
        if let Some(v) = &self.v {
            doc.insert("v".into(), items(v));
        }
        doc.insert("base_index".into(), json!(self.u.base()));
        Value::Object(doc)
    }
}

pub fn parse_sequence(text: &str) -> Result<Input, InputError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| InputError::Json(e.to_string()))?;
    let obj = doc.as_object().ok_or_else(|| schema("$", "expected an object"))?;
    if let Some(key) = obj.keys().find(|k| !matches!(k.as_str(), "u" | "v" | "base_index")) {
        return Err(schema(&format!("$.{key}"), "unknown field"));
    }
    let base = match obj.get("base_index") {
        None => 0,
        Some(b) => b
            .as_i64()
            .ok_or_else(|| schema("$.base_index", "expected an integer"))?,
    };
    let u = obj.get("u").ok_or_else(|| schema("$", "missing field \"u\""))?;
    let u = IntervalSequence::with_base(intervals(u, "$.u")?, base);
    let v = match obj.get("v") {
        None | Some(Value::Null) => None,
        Some(v) => Some(IntervalSequence::with_base(intervals(v, "$.v")?, base)),
    };
    Ok(Input { u, v })
}

fn intervals(value: &Value, path: &str) -> Result<Vec<Interval>, InputError> {
    let arr = value.as_array().ok_or_else(|| schema(path, "expected an array of intervals"))?;
    if arr.is_empty() {
        return Err(schema(path, "expected at least one interval"));
    }
    arr.iter()
        .enumerate()
        .map(|(i, item)| {
            let here = format!("{path}[{i}]");
            let pair = item
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| schema(&here, "expected [lo, hi]"))?;
            let lo = endpoint(&pair[0], &format!("{here}[0]"))?;
            let hi = endpoint(&pair[1], &format!("{here}[1]"))?;
            if lo > hi {
                return Err(schema(&here, format!("lower endpoint {lo} exceeds upper endpoint {hi}")));
            }
            Ok(Interval::new(lo, hi).expect("ordered"))
        })
        .collect()
}

fn endpoint(value: &Value, path: &str) -> Result<Rational, InputError> {
    // with arbitrary_precision a number keeps its literal text, so 0.1 stays 1/10
    let text = match value {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(schema(path, "expected a number or a rational string")),
    };
    text.parse().map_err(|_| InputError::NonRational {
        path: path.to_string(),
        value: value.to_string(),
    })
}
