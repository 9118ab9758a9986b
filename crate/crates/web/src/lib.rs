//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes plain strings and returns a JSON document. Failures
//! are reported in-band as `{"ok": false, "error": <code>, "message": …}`
//! so the page never has to catch exceptions.

use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

use plat_core::canonical::{canonical_form, check_theorem_range, normal_form, symmetry_group};
use plat_core::invariants::{summarize, DEFAULT_BRACKET_CAP};
use plat_core::twobridge::{cf_reconstruct, format_rational, numerator_abs, parse_rational, schubert_pair};
use plat_core::{ClosureStyle, PlatError, TwistMatrix};

fn respond(result: Result<Value, PlatError>) -> String {
    match result {
        Ok(mut v) => {
            v["ok"] = json!(true);
            v.to_string()
        }
        Err(e) => json!({ "ok": false, "error": e.code(), "message": e.to_string() }).to_string(),
    }
}

fn canonicalize_value(text: &str) -> Result<Value, PlatError> {
    let m = TwistMatrix::parse_any(text)?;
    let in_range = check_theorem_range(&m);
    let form = match &in_range {
        Ok(()) => canonical_form(&m)?,
        Err(_) => normal_form(&m),
    };
    let symmetries: Vec<String> = symmetry_group(&m).iter().map(ToString::to_string).collect();
    Ok(json!({
        "canonical": form.to_text(),
        "decides_equivalence": in_range.is_ok(),
        "range_note": in_range.err().map(|e| e.to_string()),
        "symmetries": symmetries,
        "braid": m.to_braid_word().to_string(),
        "crossings": m.crossing_count(),
    }))
}

fn invariants_value(text: &str, style: &str, cap: usize) -> Result<Value, PlatError> {
    let m = TwistMatrix::parse_any(text)?;
    let style: ClosureStyle = style
        .parse()
        .map_err(|message| PlatError::Parse { line: 1, message })?;
    let s = summarize(&m.closure(style), cap.min(DEFAULT_BRACKET_CAP));
    Ok(json!({
        "crossings": s.crossings,
        "components": s.components,
        "writhe": s.writhe,
        "determinant": s.determinant.to_string(),
        "jones": s.jones.map(|j| j.to_string()),
    }))
}

fn twobridge_value(input: &str) -> Result<Value, PlatError> {
    let input = input.trim();
    if input.contains('/') {
        let r = parse_rational(input)?;
        let e = cf_reconstruct(&r)?;
        return Ok(json!({ "rational": format_rational(&r), "expansion": e.to_string() }));
    }
    let coeffs = input
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>().map_err(|_| PlatError::Parse {
                line: 1,
                message: format!("`{t}` is not an integer"),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let pair = schubert_pair(&coeffs)?;
    let (r, r2) = pair.members();
    Ok(json!({
        "pair": [format_rational(r), format_rational(r2)],
        "determinant": numerator_abs(r).to_string(),
    }))
}

/// Canonical form, symmetry group and braid word of a twist matrix given in
/// the text or JSON format.
#[wasm_bindgen]
pub fn canonicalize(text: &str) -> String {
    respond(canonicalize_value(text))
}

/// Closure invariants; the Jones polynomial is omitted above `cap`
/// crossings (never more than the library default).
#[wasm_bindgen]
pub fn closure_invariants(text: &str, style: &str, cap: usize) -> String {
    respond(invariants_value(text, style, cap))
}

/// A rational `p/q` is expanded; a comma-separated list is turned into its
/// Schubert pair.
#[wasm_bindgen]
pub fn twobridge(input: &str) -> String {
    respond(twobridge_value(input))
}
