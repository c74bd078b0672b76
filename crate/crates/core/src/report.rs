//! Uniform JSON verdicts for the verifiers.
//!
//! Every check renders as one flat object
//! `{"check": …, "status": "pass"|"fail", …parameters, …details}` with keys in
//! sorted order and every exact number written as a decimal string.

use std::fmt;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Status::Pass
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// How a checked statement is backed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    /// A published proof exists; the check confirms the implementation.
    Proved,
    /// Stated without proof; the check is the only evidence here.
    ComputationallyVerified,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub check: String,
    pub status: Status,
    fields: Map<String, Value>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, ok: bool) -> Self {
        CheckReport {
            check: check.into(),
            status: Status::from_bool(ok),
            fields: Map::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Serialize) -> Self {
        let v = serde_json::to_value(value).expect("report field serializes");
        self.fields.insert(key.to_string(), v);
        self
    }

    /// Attaches a number as a decimal string.
    pub fn with_number(self, key: &str, value: impl fmt::Display) -> Self {
        let s = value.to_string();
        self.with(key, s)
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.get(key)
    }

    pub fn passed(&self) -> bool {
        self.status.passed()
    }

    pub fn to_json(&self) -> Value {
        let mut m = self.fields.clone();
        m.insert("check".into(), Value::String(self.check.clone()));
        m.insert("status".into(), serde_json::to_value(self.status).unwrap());
        Value::Object(m)
    }

    /// One line: `check key=value … status`.
    pub fn summary_line(&self) -> String {
        let mut out = format!("{:<14}", self.check);
        for (k, v) in &self.fields {
            match v {
                Value::String(s) => out.push_str(&format!(" {k}={s}")),
                Value::Number(n) => out.push_str(&format!(" {k}={n}")),
                Value::Bool(b) => out.push_str(&format!(" {k}={b}")),
                _ => {}
            }
        }
        out.push_str(&format!("  {}", self.status.to_string().to_uppercase()));
        out
    }
}

impl Serialize for CheckReport {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(ser)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_sorted_json() {
        let r = CheckReport::new("equid", true)
            .with("n", 5)
            .with_number("count", 120u64)
            .with("basis", Basis::ComputationallyVerified);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"basis":"computationally-verified","check":"equid","count":"120","n":5,"status":"pass"}"#
        );
        assert!(r.summary_line().ends_with("PASS"));
        assert!(!CheckReport::new("x", false).passed());
    }
}
