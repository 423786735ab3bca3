//! Browser bindings for the tupleval engine.
//!
//! Three operations are exported to JavaScript, each taking and returning
//! plain strings (results are JSON) so no custom serialization layer is
//! needed on the JS side:
//!
//! * [`truth_table`] — tabulate a propositional formula under a mode;
//! * [`check_sequent`] — check a sequent and return the verdict, with a
//!   self-certifying countermodel when it is invalid;
//! * [`explain_value`] — gloss a tuple value under a reading scheme.
//!
//! The `*_impl` functions contain all the logic and are exercised by
//! native unit tests; the `#[wasm_bindgen]` exports are one-line wrappers.
//! Build the browser package with `wasm-pack build --target web`.

use wasm_bindgen::prelude::wasm_bindgen;

use serde_json::json;
use tupleval_core::{
    check_first_order_bounded, check_propositional, designated_atoms_table, explain, parse_formula,
    parse_sequent, ConsequenceMode, ReadingScheme, TupleValue, DEFAULT_BUDGET,
};

/// Atom limit for browser truth tables; keeps the largest table (width 3,
/// four atoms) at 4096 rows.
const TABLE_ATOM_LIMIT: usize = 4;

/// Resolves CLI-style mode flags, defaulting like the command line does:
/// classical for three-valued semantics, tolerant for tuple semantics.
fn resolve_mode(semantics: &str, mode: &str, width: u8) -> Result<ConsequenceMode, String> {
    if semantics == "tuple" && !(1..=16).contains(&width) {
        return Err(format!("tuple width must be between 1 and 16, got {width}"));
    }
    let mode = match mode {
        "" if semantics == "tuple" => "tolerant",
        "" => "classical",
        other => other,
    };
    ConsequenceMode::from_parts(semantics, mode, width)
}

pub fn truth_table_impl(
    formula: &str,
    semantics: &str,
    mode: &str,
    width: u8,
) -> Result<String, String> {
    let f = parse_formula(formula, None).map_err(|e| e.render(formula))?;
    let mode = resolve_mode(semantics, mode, width)?;
    let table = designated_atoms_table(&f, &mode, TABLE_ATOM_LIMIT).map_err(|e| e.to_string())?;
    serde_json::to_string(&table).map_err(|e| e.to_string())
}

pub fn check_sequent_impl(
    sequent: &str,
    semantics: &str,
    mode: &str,
    width: u8,
    max_domain: usize,
) -> Result<String, String> {
    let seq = parse_sequent(sequent, None).map_err(|e| e.render(sequent))?;
    let mode = resolve_mode(semantics, mode, width)?;
    let verdict = if seq.is_propositional() {
        check_propositional(&seq, &mode, DEFAULT_BUDGET)
    } else {
        check_first_order_bounded(&seq, &mode, max_domain, DEFAULT_BUDGET)
    }
    .map_err(|e| e.to_string())?;
    serde_json::to_string(&verdict).map_err(|e| e.to_string())
}

pub fn explain_value_impl(value: &str, scheme: &str, labels: &str) -> Result<String, String> {
    let value: TupleValue = value.parse().map_err(|e| format!("{e}"))?;
    let labels: Vec<String> = if labels.trim().is_empty() {
        Vec::new()
    } else {
        labels.split(',').map(|l| l.trim().to_string()).collect()
    };
    let scheme = ReadingScheme::from_parts(scheme, &labels).map_err(|e| e.to_string())?;
    let gloss = explain(value, &scheme).map_err(|e| e.to_string())?;
    serde_json::to_string(&json!({
        "value": value.to_string(),
        "width": value.width(),
        "scheme": scheme.kind(),
        "gloss": gloss,
    }))
    .map_err(|e| e.to_string())
}

/// Tabulates a propositional formula. Returns the table as a JSON string:
/// `{"formula", "mode", "atoms", "rows": [{"inputs", "value", "designated"}]}`.
#[wasm_bindgen]
pub fn truth_table(
    formula: &str,
    semantics: &str,
    mode: &str,
    width: u8,
) -> Result<String, String> {
    truth_table_impl(formula, semantics, mode, width)
}

/// Checks a sequent and returns the verdict as a JSON string:
/// `{"valid", "mode", "interpretations_checked", "countermodel"?}`.
#[wasm_bindgen]
pub fn check_sequent(
    sequent: &str,
    semantics: &str,
    mode: &str,
    width: u8,
    max_domain: usize,
) -> Result<String, String> {
    check_sequent_impl(sequent, semantics, mode, width, max_domain)
}

/// Glosses a tuple value under a reading scheme (`plain`, `agents`,
/// `respects`, or `custom`; the latter two take comma-separated labels).
/// Returns `{"value", "width", "scheme", "gloss"}` as a JSON string.
#[wasm_bindgen]
pub fn explain_value(value: &str, scheme: &str, labels: &str) -> Result<String, String> {
    explain_value_impl(value, scheme, labels)
}
