//! Browser bindings for the generalized interval library: a thin
//! wasm-bindgen layer exposing expression evaluation, division and the
//! differentiability probe to the demo page in `www/`.
//!
//! All entry points take and return strings (rendered classes or JSON),
//! which keeps the JS side to a few lines of glue.

use gintervals::{
    bullet_differential, differentiability_probe, div_auto, eval_expr, parse_gelement, q2,
    render_gelement, GElement, ProbeRegion,
};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn class_json(x: &GElement) -> serde_json::Value {
    if x.p > x.q {
        json!({ "dual": { "lo": x.q, "hi": x.p } })
    } else {
        json!({ "lo": x.p, "hi": x.q })
    }
}

/// Evaluate an expression over interval classes (`[a,b]`, `dual[a,b]`,
/// points, `(p,q)`; `+`, `-`, `*`, parens) and render the result.
#[wasm_bindgen]
pub fn evaluate(expr: &str) -> String {
    match eval_expr(expr) {
        Ok(x) => render_gelement(&x),
        Err(e) => format!("error: {e}"),
    }
}

/// Divide Y by X with automatic strategy selection; returns a JSON
/// document with either the quotient/remainder/kind or a status.
#[wasm_bindgen]
pub fn divide(y: &str, x: &str) -> String {
    let parsed = parse_gelement(y).and_then(|y| parse_gelement(x).map(|x| (y, x)));
    let (y, x) = match parsed {
        Ok(pair) => pair,
        Err(e) => return json!({ "error": e.to_string() }).to_string(),
    };
    match div_auto(&y, &x) {
        Ok(res) => json!({
            "z": render_gelement(&res.quotient),
            "r": render_gelement(&res.remainder),
            "z_raw": class_json(&res.quotient),
            "r_raw": class_json(&res.remainder),
            "kind": format!("{:?}", res.kind),
        })
        .to_string(),
        Err(e) => json!({ "status": e.to_string() }).to_string(),
    }
}

/// Probe the square map for first-order linear approximation at `x0`,
/// over the full ball (`region = "full"`) or the wedge of proper
/// nonnegative displacements (`region = "first"`). Returns JSON with the
/// per-radius defect ratios and a verdict.
#[wasm_bindgen]
pub fn probe_square_map(x0: &str, region: &str, seed: u64) -> String {
    let x0 = match parse_gelement(x0) {
        Ok(x0) => x0,
        Err(e) => return json!({ "error": e.to_string() }).to_string(),
    };
    let region = match region {
        "first" => ProbeRegion::FirstProofRegion,
        _ => ProbeRegion::Full,
    };
    let l = bullet_differential(x0);
    let radii = [1e-1, 1e-2, 1e-3, 1e-4];
    let report = differentiability_probe(&|x| q2(x), &x0, &l, &radii, 2000, seed, region);
    json!({
        "radii": report.radii,
        "ratios": report.ratios,
        "verdict": format!("{:?}", report.verdict),
        "table": report.to_table(),
    })
    .to_string()
}
