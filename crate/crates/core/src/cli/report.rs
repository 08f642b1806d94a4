use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::engine::{ExponentResult, MatchingWitness, TraceEntry};
use crate::extended::Extended;

/// A rational as decimal strings, or the string `"infinity"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonNumber {
    Rational { num: String, den: String },
    Symbol(String),
}

impl JsonNumber {
    pub fn rational(q: &BigRational) -> Self {
        JsonNumber::Rational {
            num: q.numer().to_string(),
            den: q.denom().to_string(),
        }
    }

    pub fn integer(n: &BigInt) -> Self {
        JsonNumber::Rational {
            num: n.to_string(),
            den: "1".into(),
        }
    }

    pub fn infinity() -> Self {
        JsonNumber::Symbol("infinity".into())
    }

    pub fn from_extended(v: &Extended<BigRational>) -> Self {
        match v {
            Extended::Finite(q) => Self::rational(q),
            Extended::Infinity => Self::infinity(),
        }
    }

    pub fn from_extended_int(v: &Extended<BigInt>) -> Self {
        match v {
            Extended::Finite(n) => Self::integer(n),
            Extended::Infinity => Self::infinity(),
        }
    }

    fn human(&self) -> String {
        match self {
            JsonNumber::Rational { num, den } if den == "1" => num.clone(),
            JsonNumber::Rational { num, den } => format!("{num}/{den}"),
            JsonNumber::Symbol(s) if s == "infinity" => "∞".into(),
            JsonNumber::Symbol(s) => s.clone(),
        }
    }
}

/// 1-based witness as emitted in reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonWitness {
    pub tau: Vec<usize>,
    pub i0: usize,
}

impl From<&MatchingWitness> for JsonWitness {
    fn from(w: &MatchingWitness) -> Self {
        JsonWitness {
            tau: w.tau.iter().map(|t| t + 1).collect(),
            i0: w.i0 + 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTrace {
    pub s: u32,
    pub r: u64,
    pub ratio: JsonNumber,
}

impl From<&TraceEntry> for JsonTrace {
    fn from(e: &TraceEntry) -> Self {
        JsonTrace {
            s: e.s,
            r: e.r,
            ratio: JsonNumber::rational(&e.ratio),
        }
    }
}

/// Machine-readable result of one command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub value: Option<JsonNumber>,
    pub certificate: Option<String>,
    pub witness: Option<JsonWitness>,
    pub trace: Vec<JsonTrace>,
    pub warnings: Vec<String>,
    pub determinacy: Option<u64>,
    /// Command-specific extras.
    pub details: Value,
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Self {
        Report {
            command: command.into(),
            inputs,
            value: None,
            certificate: None,
            witness: None,
            trace: Vec::new(),
            warnings: Vec::new(),
            determinacy: None,
            details: Value::Object(Default::default()),
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) {
        if let Value::Object(map) = &mut self.details {
            map.insert(key.into(), value.into());
        }
    }

    pub fn absorb(&mut self, r: &ExponentResult) {
        self.value = Some(JsonNumber::from_extended(&r.value));
        self.certificate = Some(r.certificate.name().into());
        self.witness = r.certificate.witness().map(JsonWitness::from);
        self.trace = r.search_trace.iter().map(JsonTrace::from).collect();
        self.determinacy = r.determinacy;
        self.detail("certificate_detail", r.certificate.to_string());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if let Some(v) = &self.value {
            let _ = writeln!(out, "value: {}", v.human());
        }
        if let Some(c) = &self.certificate {
            let _ = writeln!(out, "certificate: {c}");
        }
        if let Some(w) = &self.witness {
            let tau: Vec<String> = w.tau.iter().map(|t| t.to_string()).collect();
            let _ = writeln!(out, "witness: τ = ({}), i₀ = {}", tau.join(" "), w.i0);
        }
        if let Some(s0) = self.determinacy {
            let _ = writeln!(out, "determinacy s₀: {s0}");
        }
        if !self.trace.is_empty() {
            let parts: Vec<String> = self
                .trace
                .iter()
                .map(|e| format!("s={} r={} ({})", e.s, e.r, e.ratio.human()))
                .collect();
            let _ = writeln!(out, "trace: {}", parts.join(", "));
        }
        if let Value::Object(map) = &self.details {
            for (k, v) in map {
                if VERBOSE_DETAILS.contains(&k.as_str()) {
                    continue;
                }
                if let Some(items) = corpus_lines(v) {
                    out.push_str(&items);
                    continue;
                }
                let _ = writeln!(out, "{}: {}", k.replace('_', " "), human_value(v));
            }
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        out
    }
}

/// Details that only appear in JSON output.
const VERBOSE_DETAILS: [&str; 2] = ["lower_pieces", "upper_pieces"];

fn human_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(human_value).collect::<Vec<_>>().join("; "),
        Value::Object(map) => match (map.get("num"), map.get("den")) {
            (Some(Value::String(n)), Some(Value::String(d))) if d == "1" => n.clone(),
            (Some(Value::String(n)), Some(Value::String(d))) => format!("{n}/{d}"),
            _ => v.to_string(),
        },
        other => other.to_string(),
    }
}

fn corpus_lines(v: &Value) -> Option<String> {
    let items = v.as_array()?;
    let mut out = String::new();
    for item in items {
        let name = item.get("name")?.as_str()?;
        let passed = item.get("passed")?.as_bool()?;
        let detail = item.get("detail")?.as_str()?;
        let tag = if passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{tag} {name}: {detail}");
    }
    Some(out)
}
