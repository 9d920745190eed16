//! Browser bindings. Every function takes plain strings and numbers and
//! returns a JSON document; failures come back as `{"error": "..."}` so the
//! page needs no exception handling.

use nilorb::correspondence::{identify, pattern_to_matrix};
use nilorb::linalg::{ExactMatrix, GroupKind, IsotropicFlag, PatternKind};
use nilorb::patterns::{count_borel, enumerate, LinkPattern};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Enumerations above this rank are refused to keep the page responsive.
pub const MAX_DEMO_RANK: usize = 4;

fn error(msg: impl std::fmt::Display) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

fn kind_of(group: &str) -> Result<PatternKind, String> {
    PatternKind::parse(group).map_err(|e| e.to_string())
}

fn pattern_value(p: &LinkPattern) -> Value {
    serde_json::from_str(&p.to_json()).expect("pattern JSON is valid")
}

fn matrix_value(x: &ExactMatrix) -> Value {
    serde_json::from_str(&x.to_json()).expect("matrix JSON is valid")
}

/// All Borel orbits for the group of the given kind and matrix size:
/// `{group, count, orbits: [{text, pattern, matrix, orbit_dim}]}`.
#[wasm_bindgen]
pub fn list_orbits(group: &str, n: usize) -> String {
    let run = || -> Result<Value, String> {
        let g = GroupKind::from_size(kind_of(group)?, n).map_err(|e| e.to_string())?;
        if g.rank() > MAX_DEMO_RANK {
            return Err(format!("the demo lists orbits up to rank {MAX_DEMO_RANK}"));
        }
        let flag = IsotropicFlag::complete(g);
        let orbits = enumerate(g.pattern_kind(), &vec![1; g.rank()])
            .iter()
            .map(|p| {
                let x = pattern_to_matrix(p, g).map_err(|e| e.to_string())?;
                let dim = flag.orbit_dim(&x).map_err(|e| e.to_string())?;
                Ok(json!({
                    "text": p.to_string(),
                    "pattern": pattern_value(p),
                    "matrix": matrix_value(&x),
                    "orbit_dim": dim,
                }))
            })
            .collect::<Result<Vec<_>, String>>()?;
        Ok(json!({ "group": g.name(), "count": orbits.len(), "orbits": orbits }))
    };
    run().map(|v| v.to_string()).unwrap_or_else(error)
}

/// Identifies the Borel orbit of a matrix given as whitespace- and
/// comma-separated rows, one row per line, entries integers or p/q.
#[wasm_bindgen]
pub fn identify_matrix(group: &str, text: &str) -> String {
    let run = || -> Result<Value, String> {
        let rows: Vec<Vec<_>> = text
            .lines()
            .map(|line| {
                line.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(nilorb::linalg::parse_rational)
                    .collect::<nilorb::Result<Vec<_>>>()
            })
            .filter(|r| !matches!(r, Ok(v) if v.is_empty()))
            .collect::<nilorb::Result<_>>()
            .map_err(|e| e.to_string())?;
        let x = ExactMatrix::from_rows(rows).map_err(|e| e.to_string())?;
        if !x.is_square() {
            return Err(format!(
                "matrix must be square, got {}x{}",
                x.rows(),
                x.cols()
            ));
        }
        let g = GroupKind::from_size(kind_of(group)?, x.rows()).map_err(|e| e.to_string())?;
        let p = identify(&x, g).map_err(|e| e.to_string())?;
        let dim = IsotropicFlag::complete(g)
            .orbit_dim(&x)
            .map_err(|e| e.to_string())?;
        Ok(json!({
            "group": g.name(),
            "text": p.to_string(),
            "pattern": pattern_value(&p),
            "orbit_dim": dim,
        }))
    };
    run().map(|v| v.to_string()).unwrap_or_else(error)
}

/// Number of Borel orbits for ranks 0..=max_rank, from the recurrence.
#[wasm_bindgen]
pub fn orbit_counts(group: &str, max_rank: usize) -> String {
    match kind_of(group) {
        Ok(kind) => {
            let counts: Vec<String> = (0..=max_rank.min(60))
                .map(|l| count_borel(kind, l).to_string())
                .collect();
            json!({ "kind": kind.as_str(), "counts": counts }).to_string()
        }
        Err(e) => error(e),
    }
}
