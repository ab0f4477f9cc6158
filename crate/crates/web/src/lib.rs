//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Each exported function takes plain strings and numbers and returns a JSON
//! document, so the page needs no generated bindings beyond the glue file.
//! The `*_json` functions hold the logic and are what the native tests call.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use multinull::apps;
use multinull::ideal;
use multinull::json::{parse_grid, parse_multiset_compact};
use multinull::{parse_poly, FieldSpec, Multiset};

/// Largest `r` or `s` the table accepts.
pub const TABLE_LIMIT: u64 = 64;

/// `beta_p(r, s)` for `1 <= r <= max_r`, `1 <= s <= max_s`, as rows.
pub fn hopf_stiefel_table_json(p: u64, max_r: u64, max_s: u64) -> Result<String, String> {
    if max_r == 0 || max_s == 0 || max_r > TABLE_LIMIT || max_s > TABLE_LIMIT {
        return Err(format!("table sizes must lie in 1..={TABLE_LIMIT}"));
    }
    let mut rows = Vec::new();
    for r in 1..=max_r {
        let row = (1..=max_s)
            .map(|s| apps::hopf_stiefel(p, r, s))
            .collect::<Result<Vec<u64>, _>>()
            .map_err(|e| e.to_string())?;
        rows.push(row);
    }
    Ok(json!({"p": p, "rows": rows}).to_string())
}

fn multiset_value(m: &Multiset) -> Value {
    Value::Array(
        m.iter()
            .map(|(v, k)| json!({"value": v.to_string(), "mult": k}))
            .collect(),
    )
}

/// Sumset of two compact multisets (`0:2,3:1`) in `F_p`, with both sides of
/// the Cauchy-Davenport bound and of the degree inequality.
pub fn sumset_json(p: u64, a: &str, b: &str) -> Result<String, String> {
    let run = || -> multinull::Result<Value> {
        let spec = FieldSpec::prime(p)?;
        let a = parse_multiset_compact(a, spec)?;
        let b = parse_multiset_compact(b, spec)?;
        let sum = apps::sumset_multiset(&a, &b)?;
        let cd = apps::cd_check(&a, &b)?;
        let deg = apps::deg_check(&a, &b)?;
        Ok(json!({
            "a": a.to_string(),
            "b": b.to_string(),
            "sumset": multiset_value(&sum),
            "sumset_text": sum.to_string(),
            "cd": {"lhs": cd.lhs, "rhs": cd.rhs, "holds": cd.holds, "tight": cd.is_tight()},
            "deg": {"lhs": deg.lhs, "rhs": deg.rhs, "holds": deg.holds},
        }))
    };
    run().map(|v| v.to_string()).map_err(|e| e.to_string())
}

/// Reduction of a polynomial modulo the vanishing ideal of a grid given in
/// the JSON grid format.
pub fn reduce_json(grid: &str, poly: &str) -> Result<String, String> {
    let run = || -> multinull::Result<Value> {
        let g = parse_grid(grid)?;
        let f = parse_poly(poly, g.arity(), g.spec())?;
        let red = ideal::reduce(&f, &g)?;
        red.verify(&f, &g)?;
        let cofactors: Vec<String> = red.cofactors.iter().map(ToString::to_string).collect();
        let generators: Vec<String> = g.generators().iter().map(ToString::to_string).collect();
        Ok(json!({
            "field": g.spec().to_string(),
            "input": f.to_string(),
            "remainder": red.remainder.to_string(),
            "cofactors": cofactors,
            "generators": generators,
            "member": red.remainder.is_zero(),
        }))
    };
    run().map(|v| v.to_string()).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn hopf_stiefel_table(p: u32, max_r: u32, max_s: u32) -> Result<String, JsError> {
    hopf_stiefel_table_json(p as u64, max_r as u64, max_s as u64).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn sumset(p: u32, a: &str, b: &str) -> Result<String, JsError> {
    sumset_json(p as u64, a, b).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn reduce(grid: &str, poly: &str) -> Result<String, JsError> {
    reduce_json(grid, poly).map_err(|e| JsError::new(&e))
}
