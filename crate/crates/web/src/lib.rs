//! Browser bindings. The plain functions return `Result<String, String>` so
//! they can be exercised natively; the `#[wasm_bindgen]` wrappers only adapt
//! the error type for JavaScript.

use cubedet_core::io::scalar_to_json;
use cubedet_core::verify::{random_cubic, GenSpec};
use cubedet_core::{cross_check, expand, parse_auto, serialize_text, Axis, ExpansionTrace};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn text_err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Every evaluation path plus the derived-law checks, as a JSON report.
pub fn analyse(input: &str) -> Result<String, String> {
    let a = parse_auto(input).map_err(text_err)?;
    let report = cross_check(&a).map_err(text_err)?;
    serde_json::to_string(&report).map_err(text_err)
}

fn trace_value(t: &ExpansionTrace) -> Value {
    let terms: Vec<Value> = t
        .terms
        .iter()
        .map(|x| {
            json!({
                "at": [x.at.i, x.at.j, x.at.k],
                "entry": scalar_to_json(x.entry),
                "sign": x.sign.to_string(),
                "minor": scalar_to_json(x.minor_value),
                "contribution": scalar_to_json(x.contribution),
            })
        })
        .collect();
    json!({
        "axis": t.axis.to_string(),
        "index": t.index,
        "terms": terms,
        "total": scalar_to_json(t.total),
    })
}

/// Term-by-term expansion along one layer. `axis` is `h`, `p` or `l`.
pub fn trace(input: &str, axis: &str, index: usize) -> Result<String, String> {
    let a = parse_auto(input).map_err(text_err)?;
    let axis = Axis::from_code(axis).ok_or_else(|| format!("unknown axis {axis:?}; expected h, p or l"))?;
    let t = expand(&a, axis, index).map_err(text_err)?;
    Ok(trace_value(&t).to_string())
}

/// Seeded random matrix in canonical text form. The seed arrives as a
/// decimal string because JavaScript numbers cannot hold every u64.
pub fn generate(order: usize, seed: &str, range: i64) -> Result<String, String> {
    let seed: u64 = seed.trim().parse().map_err(|_| format!("seed {seed:?} is not an unsigned integer"))?;
    let spec = GenSpec::new(order, seed, range).map_err(text_err)?;
    Ok(serialize_text(&random_cubic(&spec)))
}

#[wasm_bindgen]
pub fn verify_report(input: &str) -> Result<String, JsValue> {
    analyse(input).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn expansion_trace(input: &str, axis: &str, index: usize) -> Result<String, JsValue> {
    trace(input, axis, index).map_err(|e| JsValue::from_str(&e))
}

// `range` is u32 so JavaScript can pass an ordinary number; i64 would demand a BigInt.
#[wasm_bindgen]
pub fn random_matrix(order: usize, seed: &str, range: u32) -> Result<String, JsValue> {
    generate(order, seed, i64::from(range)).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE1: &str = "2\n4 -3\n-1 5\n\n-2 4\n-7 3\n";

    #[test]
    fn report_carries_every_path() {
        let v: Value = serde_json::from_str(&analyse(EXAMPLE1).unwrap()).unwrap();
        assert_eq!(v["det_value"], -3);
        assert_eq!(v["paths"].as_array().unwrap().len(), 8);
        assert_eq!(v["overall"], true);
    }

    #[test]
    fn trace_matches_hand_expansion() {
        let v: Value = serde_json::from_str(&trace(EXAMPLE1, "h", 1).unwrap()).unwrap();
        let got: Vec<i64> =
            v["terms"].as_array().unwrap().iter().map(|t| t["contribution"].as_i64().unwrap()).collect();
        assert_eq!(got, [12, -21, 10, -4]);
        assert_eq!(v["total"], -3);
    }

    #[test]
    fn bad_input_is_reported_not_panicked() {
        assert!(trace(EXAMPLE1, "x", 1).unwrap_err().contains("unknown axis"));
        assert!(trace(EXAMPLE1, "h", 3).is_err());
        assert!(analyse("2\n1 2\n3 4\n").is_err());
        assert!(generate(4, "1", 9).is_err());
        assert!(generate(2, "-1", 9).unwrap_err().contains("seed"));
    }

    #[test]
    fn generator_accepts_full_u64_seeds() {
        let text = generate(3, "18446744073709551615", 9).unwrap();
        assert_eq!(text, generate(3, "18446744073709551615", 9).unwrap());
        assert!(analyse(&text).is_ok());
    }
}
