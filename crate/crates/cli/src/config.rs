//! Job configuration: a single JSON document with the minimal polynomial
//! and the three coefficient vectors, all integers arbitrary precision
//! (serialized as decimal strings once they leave the 53-bit safe range).

use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde_json::Value;

use conic_core::{ConicInput, NumberRing, OracleConfig};

#[derive(Clone, Debug)]
pub struct JobConfig {
    pub min_poly: Vec<BigInt>,
    pub a: Vec<BigInt>,
    pub b: Vec<BigInt>,
    pub c: Vec<BigInt>,
    pub oracle_degree_bound: Option<u32>,
}

/// 2^53 − 1: the largest integer magnitude emitted as a JSON number.
const SAFE_JSON_INT: i64 = (1 << 53) - 1;

pub fn parse_bigint(v: &Value) -> Result<BigInt, String> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(format!("expected an integer, got {n}"))
            }
        }
        Value::String(s) => {
            BigInt::from_str(s.trim()).map_err(|_| format!("not a decimal integer: {s:?}"))
        }
        other => Err(format!("expected an integer or decimal string, got {other}")),
    }
}

pub fn bigint_to_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) if i.abs() <= SAFE_JSON_INT => Value::from(i),
        _ => Value::String(v.to_string()),
    }
}

fn parse_int_array(doc: &Value, key: &str) -> Result<Vec<BigInt>, String> {
    let arr = doc
        .get(key)
        .ok_or_else(|| format!("missing field {key:?}"))?
        .as_array()
        .ok_or_else(|| format!("field {key:?} must be an array"))?;
    arr.iter()
        .map(parse_bigint)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| format!("field {key:?}: {e}"))
}

impl JobConfig {
    pub fn from_json_str(text: &str) -> Result<JobConfig, String> {
        let doc: Value =
            serde_json::from_str(text).map_err(|e| format!("malformed JSON: {e}"))?;
        let min_poly = parse_int_array(&doc, "min_poly")?;
        if min_poly.len() < 2 {
            return Err("min_poly must have degree at least 1".into());
        }
        if !min_poly.last().unwrap().is_one() {
            return Err("min_poly must be monic (last entry 1)".into());
        }
        let n = min_poly.len() - 1;
        let mut cfg = JobConfig {
            min_poly,
            a: parse_int_array(&doc, "a")?,
            b: parse_int_array(&doc, "b")?,
            c: parse_int_array(&doc, "c")?,
            oracle_degree_bound: None,
        };
        for (name, v) in [("a", &cfg.a), ("b", &cfg.b), ("c", &cfg.c)] {
            if v.len() != n {
                return Err(format!(
                    "field {name:?} must have {n} coordinates (the ring degree), got {}",
                    v.len()
                ));
            }
        }
        if let Some(v) = doc.get("oracle_degree_bound") {
            let m = v
                .as_u64()
                .filter(|&m| m >= 1 && m <= 8)
                .ok_or("oracle_degree_bound must be an integer in 1..=8")?;
            cfg.oracle_degree_bound = Some(m as u32);
        }
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<JobConfig, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Self::from_json_str(&text)
    }

    /// Build the ring and the conic input; ring construction errors (not
    /// monic, reducible, wrong lengths) surface here, the maximality check
    /// happens later in the pipeline.
    pub fn to_input(&self) -> Result<ConicInput, String> {
        let ring = NumberRing::new(self.min_poly.clone()).map_err(|e| e.to_string())?;
        let a = ring.element(self.a.clone()).map_err(|e| e.to_string())?;
        let b = ring.element(self.b.clone()).map_err(|e| e.to_string())?;
        let c = ring.element(self.c.clone()).map_err(|e| e.to_string())?;
        Ok(ConicInput::new(a, b, c))
    }

    /// The oracle bound: an explicit flag wins over the config file, which
    /// wins over the default of 2.
    pub fn oracle_config(&self, flag: Option<u32>) -> OracleConfig {
        match flag.or(self.oracle_degree_bound) {
            Some(m) => OracleConfig::new(m),
            None => OracleConfig::default(),
        }
    }
}
