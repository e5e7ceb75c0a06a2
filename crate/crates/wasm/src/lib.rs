//! Browser bindings for the static demo page in `www/`.
//!
//! Every export returns a JSON string (or an error message), so the page
//! needs no generated TypeScript types. The same functions compile natively
//! and are tested there.

use eulerian2::eulerian::eulerian_row;
use eulerian2::identities::{run_suite, IdentityId, IdentityReport, Value};
use eulerian2::norlund::{norlund_via_egf, norlund_via_eulerian, norlund_via_interpolation};
use eulerian2::{Rational, SuiteConfig};
use num_traits::ToPrimitive;
use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest inputs the page accepts; beyond these a click takes seconds.
pub const MAX_ROW: usize = 300;
pub const MAX_NORLUND: usize = 60;
pub const MAX_VERIFY: usize = 30;

fn strings(items: &[Rational]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn at_most(what: &str, n: usize, max: usize) -> Result<(), String> {
    if n > max {
        Err(format!("{what} is limited to {max} in the demo"))
    } else {
        Ok(())
    }
}

/// `{"n", "row": [..], "sum"}` with entries as decimal strings.
#[wasm_bindgen]
pub fn eulerian_row_json(n: usize) -> Result<String, String> {
    at_most("n", n, MAX_ROW)?;
    let row = eulerian_row(n).map_err(|e| e.to_string())?;
    let entries: Vec<String> = row.entries().iter().map(ToString::to_string).collect();
    Ok(json!({ "n": n, "row": entries, "sum": row.sum().to_string() }).to_string())
}

/// The Nörlund polynomial of order `n` built by `method` (`egf`, `closed` or
/// `interp`), plus `samples` points of `z ↦ B_n^(z)` on `[from, to]` for plotting.
#[wasm_bindgen]
pub fn norlund_json(
    n: usize,
    method: &str,
    from: f64,
    to: f64,
    samples: usize,
) -> Result<String, String> {
    at_most("n", n, MAX_NORLUND)?;
    let b = match method {
        "egf" => norlund_via_egf(n),
        "closed" => norlund_via_eulerian(n).map_err(|e| e.to_string())?,
        "interp" => norlund_via_interpolation(n),
        other => return Err(format!("unknown method {other:?}")),
    };
    let approx: Vec<f64> = b
        .poly()
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::NAN))
        .collect();
    let samples = samples.clamp(2, 2000);
    let points: Vec<[f64; 2]> = (0..samples)
        .map(|i| {
            let z = from + (to - from) * i as f64 / (samples - 1) as f64;
            [z, approx.iter().rev().fold(0.0, |acc, c| acc * z + c)]
        })
        .collect();
    Ok(json!({
        "n": n,
        "coeffs": strings(b.poly().coeffs()),
        "text": b.poly().to_string(),
        "points": points,
    })
    .to_string())
}

fn value_json(v: &Value) -> serde_json::Value {
    match v {
        Value::Rational(r) => json!(r.to_string()),
        Value::Polynomial(p) => json!(strings(p.coeffs())),
        Value::List(items) => json!(strings(items)),
    }
}

fn report_json(r: &IdentityReport) -> serde_json::Value {
    let params: serde_json::Map<String, serde_json::Value> = r
        .params
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    json!({
        "identity": r.identity.as_str(),
        "params": params,
        "lhs": value_json(&r.lhs),
        "rhs": value_json(&r.rhs),
        "holds": r.holds,
        "unexpected": r.is_unexpected(),
        "note": r.note,
    })
}

/// Names accepted by [`verify_json`].
#[wasm_bindgen]
pub fn identity_names() -> String {
    let names: Vec<&str> = IdentityId::ALL.iter().map(|id| id.as_str()).collect();
    json!(names).to_string()
}

/// Runs one identity for all parameters up to `n_max`.
#[wasm_bindgen]
pub fn verify_json(identity: &str, n_max: usize) -> Result<String, String> {
    at_most("n_max", n_max, MAX_VERIFY)?;
    let filter = IdentityId::resolve_filter(identity)
        .ok_or_else(|| format!("unknown identity {identity:?}"))?;
    let config = SuiteConfig {
        n_max,
        enumeration_cap: n_max.min(6),
        filter,
        ..SuiteConfig::default()
    };
    let reports = run_suite(&config).map_err(|e| e.to_string())?;
    let unexpected = reports.iter().filter(|r| r.is_unexpected()).count();
    let all: Vec<_> = reports.iter().map(report_json).collect();
    Ok(json!({ "reports": all, "unexpected": unexpected }).to_string())
}
