//! JSON import and export of symmetric functions.
//!
//! The schema keeps coefficients as canonical printed strings so the file
//! is both human-readable and reparsed exactly:
//!
//! ```text
//!     {
//!       "basis": "P",
//!       "degree": 3,
//!       "entries": [ { "partition": "2,1", "coefficient": "(1-t)/(1-q)" }, .. ]
//!     }
//! ```

use crate::{Basis, MacError, SymFunc};
use exactalg::parse_ratfunc;
use partitions::Partition;
use serde_json::{json, Value};

/// Serializes a symmetric function; entries appear in partition order.
pub fn symfunc_to_json(f: &SymFunc) -> Value {
    let entries: Vec<Value> = f
        .iter()
        .map(|(lambda, c)| {
            json!({
                "partition": lambda.to_string(),
                "coefficient": c.to_string(),
            })
        })
        .collect();
    json!({
        "basis": f.basis().letter(),
        "degree": f.degree(),
        "entries": entries,
    })
}

/// Parses a symmetric function back; every validation failure names the
/// offending field.
pub fn symfunc_from_json(v: &Value) -> Result<SymFunc, MacError> {
    let bad = |msg: &str| MacError::BadSerialization(msg.to_string());
    let basis_str = v
        .get("basis")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing basis"))?;
    let basis = Basis::from_letter(basis_str)
        .ok_or_else(|| MacError::BadSerialization(format!("unknown basis {basis_str:?}")))?;
    let degree = v
        .get("degree")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing degree"))? as u32;
    let entries = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing entries"))?;
    let mut coeffs = Vec::with_capacity(entries.len());
    for e in entries {
        let part_str = e
            .get("partition")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("entry without partition"))?;
        let lambda: Partition = part_str
            .parse()
            .map_err(|_| MacError::BadSerialization(format!("bad partition {part_str:?}")))?;
        let coeff_str = e
            .get("coefficient")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("entry without coefficient"))?;
        let coeff = parse_ratfunc(coeff_str)
            .map_err(|err| MacError::BadSerialization(format!("bad coefficient: {err}")))?;
        coeffs.push((lambda, coeff));
    }
    SymFunc::from_coeffs(basis, degree, coeffs)
}
