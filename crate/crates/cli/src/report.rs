//! The JSON report emitted on standard output.
//!
//! Field layout is stable and documented in docs/report.schema.json; tests
//! round-trip CLI output through this type. Exact numbers are rendered as
//! `{"num": p, "den": q, "float": x}`; the float is presentation only.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    /// The input graph, echoed; absent for enumeration-driven commands.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<GraphEcho>,
    pub params: Params,
    pub results: Value,
    pub certificates: Value,
    pub timing_ms: u64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GraphEcho {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Default, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_cap: Option<usize>,
    pub caps: Caps,
    pub cache: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Caps {
    pub enumeration: usize,
    pub colorings: u64,
    pub code_search: u64,
    pub lp_vertices: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            enumeration: guessnum::graph::DEFAULT_ENUM_CAP,
            colorings: guessnum::guessing::INSTANCE_CAP,
            code_search: guessnum::guessing::SEARCH_CAP,
            lp_vertices: guessnum::entropy::MAX_LP_VERTICES,
        }
    }
}

/// `{"num": p, "den": q, "float": x}`.
pub fn rational(r: Rational64) -> Value {
    json!({
        "num": *r.numer(),
        "den": *r.denom(),
        "float": *r.numer() as f64 / *r.denom() as f64,
    })
}

/// Same rendering for big rationals (numerator and denominator as strings
/// when they exceed i64).
pub fn big_rational(r: &num_rational::BigRational) -> Value {
    use num_traits::ToPrimitive;
    let num = r.numer();
    let den = r.denom();
    let float = r.to_f64().unwrap_or(f64::NAN);
    match (num.to_i64(), den.to_i64()) {
        (Some(n), Some(d)) => json!({"num": n, "den": d, "float": float}),
        _ => json!({"num": num.to_string(), "den": den.to_string(), "float": float}),
    }
}

/// The exact pair (max fixed points, s) with its float rendering.
pub fn guessing_number(gn: &guessnum::guessing::GuessingNumber) -> Value {
    json!({
        "max_fixed_points": gn.max_fixed_points,
        "s": gn.s,
        "float": gn.value(),
    })
}
