//! JSON-in, JSON-out bindings for the browser demo.
//!
//! Each exported function takes a problem document and returns a JSON
//! string: the result on success, `{"error": "..."}` otherwise. The plain
//! functions in [`api`] do the work and are what the native tests call.

use wasm_bindgen::prelude::wasm_bindgen;

pub mod api;

fn respond(result: Result<serde_json::Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => serde_json::json!({ "error": e }).to_string(),
    }
}

/// Ranks the problem's menu under `rule` (same syntax as the CLI).
#[wasm_bindgen]
pub fn rank(problem: &str, rule: &str) -> String {
    respond(api::rank(problem, rule))
}

/// Ranks the problem under the state-quantile anchor at `q`.
#[wasm_bindgen]
pub fn rank_quantile(problem: &str, q: f64) -> String {
    respond(api::rank(problem, &format!("anchored:quantile:{q}")))
}

/// Adds each act outside `base` (comma-separated) to it in turn and
/// classifies the effect.
#[wasm_bindgen]
pub fn decoy_scan(problem: &str, rule: &str, base: &str) -> String {
    respond(api::decoy_scan(problem, rule, base))
}

/// Looks for a dominated act that makes `target` the unique safety choice.
#[wasm_bindgen]
pub fn synthesize(problem: &str, base: &str, target: &str, epsilon: f64) -> String {
    respond(api::synthesize(problem, base, target, epsilon))
}
