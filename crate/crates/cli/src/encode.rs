//! JSON encodings. Rationals are `"n/d"` strings; decimals only appear in
//! fields whose names end in `_approx`.

use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use eidos_core::rational::format_rational;
use eidos_core::{Certificate, ContentVector, Distribution, LogExpr, Rational, Weight};

pub const SCHEMA: &str = "eidos/1";

pub fn rational(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

/// A sum of logarithms, as `"n/d"` when it is rational.
pub fn log_value(l: &LogExpr) -> Value {
    match l.as_rational() {
        Some(r) => rational(&r),
        None => Value::String(l.to_string()),
    }
}

pub fn weight(w: &Weight) -> Value {
    rational(w.value())
}

/// A JSON number when it fits, else a decimal string.
pub fn integer(n: &num_bigint::BigInt) -> Value {
    match n.to_u64() {
        Some(v) => json!(v),
        None => Value::String(n.to_string()),
    }
}

pub fn content(c: &ContentVector) -> Value {
    let map: Map<String, Value> = c
        .components()
        .map(|(k, v)| (k.to_string(), rational(v)))
        .collect();
    Value::Object(map)
}

pub fn distribution(d: &Distribution) -> Value {
    Value::Array(
        d.entries()
            .iter()
            .map(|(t, p)| json!([t.to_string(), rational(p)]))
            .collect(),
    )
}

pub fn certificate(c: &Certificate) -> Value {
    Value::Array(c.to_text().lines().map(|l| json!(l)).collect())
}

/// Adds the schema tag in front of an object's fields.
pub fn with_schema(body: Value) -> Value {
    let mut out = Map::new();
    out.insert("schema".into(), json!(SCHEMA));
    if let Value::Object(fields) = body {
        out.extend(fields);
    }
    Value::Object(out)
}

/// Follows a dotted path of object keys and array indices.
pub fn lookup<'a>(v: &'a Value, path: &str) -> Option<&'a Value> {
    path.split('.').try_fold(v, |cur, key| match cur {
        Value::Object(m) => m.get(key),
        Value::Array(a) => key.parse::<usize>().ok().and_then(|i| a.get(i)),
        _ => None,
    })
}
