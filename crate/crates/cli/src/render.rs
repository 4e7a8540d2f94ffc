//! Rendering of polynomials and matrices in the output formats.

use goeritz::bipartite::{LockCounts, QuadEntry};
use goeritz::goeritz::{JonesNormData, SymMatrix};
use goeritz::polyring::{text, LaurentPoly, PolyValue};
use serde_json::{json, Value};

use crate::Format;

pub fn q_poly(format: Format, p: &LaurentPoly) -> String {
    match format {
        Format::Latex => text::latex(p),
        _ => text::plain(p),
    }
}

pub fn q_poly_json(p: &LaurentPoly) -> Value {
    json!({ "terms": text::json_terms(p) })
}

pub fn value(format: Format, v: &PolyValue) -> String {
    match format {
        Format::Latex => v.to_latex(),
        _ => v.to_plain(),
    }
}

/// The classical matrix in the input schema.
pub fn matrix_json(m: &SymMatrix<i64>, norm: JonesNormData, unreduced: bool, delete: Option<usize>) -> Value {
    let mut v = json!({ "matrix": m.rows(), "W": norm.w, "Wr": norm.wr, "unreduced": unreduced });
    if let Some(k) = delete {
        v["delete"] = json!(k);
    }
    v
}

/// The quadruple matrix in the input schema.
pub fn quad_json(m: &SymMatrix<QuadEntry>, counts: &LockCounts, unreduced: bool, delete: Option<usize>) -> Value {
    let entries: Vec<Vec<[i64; 4]>> =
        m.rows().iter().map(|r| r.iter().map(|e| [e.x, e.y, e.z, e.t]).collect()).collect();
    let mut v = json!({ "entries": entries, "counts": counts, "unreduced": unreduced });
    if let Some(k) = delete {
        v["delete"] = json!(k);
    }
    v
}

/// One line per field, or a JSON object.
pub fn report(format: Format, fields: Vec<(String, Value)>) -> String {
    if format == Format::Json {
        let obj: serde_json::Map<String, Value> = fields.into_iter().collect();
        return pretty(&Value::Object(obj));
    }
    let mut out = String::new();
    for (k, v) in fields {
        let s = match v {
            Value::String(s) => s,
            v => v.to_string(),
        };
        out.push_str(&format!("{k}: {s}\n"));
    }
    out
}

pub fn field(k: impl Into<String>, v: impl Into<Value>) -> (String, Value) {
    (k.into(), v.into())
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
