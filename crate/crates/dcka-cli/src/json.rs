//! JSON rendering. Every rational is a `"num/den"` string.

use dcka::exact_core::{rat_string, Poly, Rat};
use dcka::operators::{OperatorPoly, PotentialForm};
use dcka::schemes::{Band, Convention, SpectrumModel};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Serialize)]
pub struct Envelope {
    pub version: &'static str,
    pub scheme: Option<String>,
    pub convention: String,
    pub payload: Value,
}

impl Envelope {
    pub fn new(scheme: Option<String>, convention: Convention, payload: Value) -> Self {
        Envelope { version: env!("CARGO_PKG_VERSION"), scheme, convention: convention.to_string(), payload }
    }
}

pub fn r(x: &Rat) -> Value {
    Value::String(rat_string(x))
}

/// Ascending coefficients.
pub fn poly(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(r).collect())
}

pub fn op_poly(p: &OperatorPoly) -> Value {
    json!({ "coefficients": poly(p.poly()), "text": p.to_string() })
}

pub fn potential(form: &PotentialForm) -> Value {
    json!({
        "m": form.m,
        "constant": r(&form.constant),
        "numerator": poly(form.remainder.num()),
        "denominator": poly(form.remainder.den()),
        "text": form.to_string(),
    })
}

pub fn bands(bs: &[Band]) -> Value {
    Value::Array(
        bs.iter()
            .map(|b| json!({ "lowest": r(&b.lowest), "count": b.count }))
            .collect(),
    )
}

pub fn spectrum(model: &SpectrumModel) -> Value {
    let mut by = serde_json::Map::new();
    for c in [Convention::Plus, Convention::Minus] {
        by.insert(c.to_string(), bands(&model.bands(c)));
    }
    json!({
        "positive_representative": model.positive.to_string(),
        "plus_minus_shift": r(&model.plus_minus_shift),
        "native_convention": model.native.to_string(),
        "native_offset_from_plus": r(&model.native_offset),
        "valence_levels": model.valence_count(),
        "bands": by,
    })
}
