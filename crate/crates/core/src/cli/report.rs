//! Versioned machine-readable reports and their text rendering.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::exact::{format_rational, IntMatrix, ProjPoint, QuadExt, Rational};
use crate::polyhedral::{Cone, Fan};

pub const REPORT_VERSION: u32 = 1;

/// One claim with its value, the route that decided it, and the data that
/// lets a reader re-check it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub claim: String,
    pub value: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<String>,
    pub certificate: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub report_version: u32,
    pub command: String,
    pub subject: String,
    pub verdicts: Vec<Verdict>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(command: &str, subject: &str) -> Self {
        Report {
            report_version: REPORT_VERSION,
            command: command.to_string(),
            subject: subject.to_string(),
            verdicts: vec![],
            warnings: vec![],
        }
    }

    pub fn push(&mut self, claim: &str, value: Value, route: Option<String>, certificate: Value) {
        self.verdicts.push(Verdict { claim: claim.to_string(), value, route, certificate });
    }

    pub fn warn(&mut self, w: impl Into<String>) {
        self.warnings.push(w.into());
    }

    pub fn verdict(&self, claim: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.claim == claim)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports are plain JSON")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} ({})", self.subject, self.command)?;
        for v in &self.verdicts {
            write!(f, "  {}: {}", v.claim, compact(&v.value))?;
            if let Some(r) = &v.route {
                write!(f, "  [{r}]")?;
            }
            writeln!(f)?;
            if !v.certificate.is_null() {
                writeln!(f, "      certificate: {}", v.certificate)?;
            }
        }
        for w in &self.warnings {
            writeln!(f, "  warning: {w}")?;
        }
        Ok(())
    }
}

pub fn rational(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn integer(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(i) => json!(i),
        None => Value::String(x.to_string()),
    }
}

pub fn int_vector(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(integer).collect())
}

pub fn int_matrix(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| int_vector(r)).collect())
}

fn quad(q: &QuadExt) -> Value {
    match q.as_rational() {
        Some(r) => rational(r),
        None => json!({
            "a": format_rational(q.rational_part()),
            "b": format_rational(q.irrational_part()),
            "d": match q.field() {
                crate::exact::Field::Sqrt(d) => integer(d),
                crate::exact::Field::Rational => json!(1),
            },
        }),
    }
}

/// Homogeneous coordinates in the input-file format.
pub fn point(p: &ProjPoint) -> Value {
    json!([quad(p.x()), quad(p.y())])
}

pub fn cone(c: &Cone) -> Value {
    json!({ "generators": c.generators().iter().map(|g| int_vector(g)).collect::<Vec<_>>() })
}

/// `{"rank": n, "cones": [...]}` listing the maximal cones; faces are implied.
pub fn fan(f: &Fan) -> Value {
    json!({
        "rank": f.rank(),
        "cones": f.maximal_cones().iter().map(cone).collect::<Vec<_>>(),
    })
}
