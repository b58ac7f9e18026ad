//! JSON encoding of modules and results. Rationals are strings, object keys
//! come out sorted, and output is byte-stable.

use hlad_core::linalg::Inertia;
use hlad_core::standard::FormalCharacter;
use hlad_core::{Matrix, ModuleRep, Rational, Weight};
use serde_json::{json, Value};

use crate::CliError;

pub fn rational(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn weight(w: &Weight) -> Value {
    Value::Array(w.coords().iter().map(rational).collect())
}

pub fn matrix(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(rational).collect()))
            .collect(),
    )
}

pub fn inertia(i: &Inertia) -> Value {
    json!({ "positive": i.positive, "negative": i.negative, "zero": i.zero })
}

pub fn character(c: &FormalCharacter) -> Value {
    Value::Array(
        c.entries()
            .map(|(w, m)| json!({ "weight": weight(w), "multiplicity": m }))
            .collect(),
    )
}

pub fn module(m: &ModuleRep) -> Value {
    let mut v = json!({
        "n": m.n,
        "dim": m.dim,
        "t": m.t.iter().map(matrix).collect::<Vec<_>>(),
        "eps": m.eps.iter().map(matrix).collect::<Vec<_>>(),
        "labels": m.labels,
    });
    if let Some(cc) = &m.central_character {
        v["central_character"] = weight(cc);
    }
    v
}

fn bad(what: &str) -> CliError {
    CliError::Input(format!("module JSON: {what}"))
}

fn parse_rational(v: &Value) -> Result<Rational, CliError> {
    match v {
        Value::String(s) => s.trim().parse().map_err(|_| bad("entry is not a rational")),
        Value::Number(n) => n
            .as_i64()
            .map(|k| Rational::from_integer(k.into()))
            .ok_or_else(|| bad("numeric entry is not an integer")),
        _ => Err(bad("entry is not a rational")),
    }
}

fn parse_matrix(v: &Value) -> Result<Matrix, CliError> {
    let rows = v
        .as_array()
        .ok_or_else(|| bad("matrix is not an array"))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| bad("matrix row is not an array"))?
                .iter()
                .map(parse_rational)
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(rows)?)
}

fn parse_matrices(v: &Value, key: &str) -> Result<Vec<Matrix>, CliError> {
    v.get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| bad(&format!("missing array {key:?}")))?
        .iter()
        .map(parse_matrix)
        .collect()
}

pub fn parse_module(v: &Value) -> Result<ModuleRep, CliError> {
    let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing n"))? as usize;
    let t = parse_matrices(v, "t")?;
    let eps = parse_matrices(v, "eps")?;
    let dim = eps.first().map_or(0, Matrix::rows);
    let labels = match v.get("labels").and_then(Value::as_array) {
        Some(ls) => ls.iter().map(|l| l.as_str().map(str::to_owned).ok_or_else(|| bad("label is not a string"))).collect::<Result<_, _>>()?,
        None => (0..dim).map(|k| k.to_string()).collect(),
    };
    let mut m = ModuleRep::new(n, t, eps, labels)?;
    if let Some(d) = v.get("dim").and_then(Value::as_u64) {
        if d as usize != m.dim {
            return Err(bad("dim disagrees with the matrices"));
        }
    }
    if let Some(cc) = v.get("central_character") {
        let coords = cc
            .as_array()
            .ok_or_else(|| bad("central_character is not an array"))?
            .iter()
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()?;
        m = m.with_central_character(Weight(coords));
    }
    Ok(m)
}

pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
