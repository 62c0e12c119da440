use std::collections::BTreeMap;
use std::fmt::Write as _;

use boundseq::seqgroup::FinSeq;
use boundseq::snf::CokernelStructure;
use boundseq::{IntMatrix, RingElem};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub data: Value,
}

/// Outcome of one command. Serialized field order is fixed, so identical
/// runs produce identical JSON.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub summary: Vec<String>,
    pub checks: Vec<Check>,
    /// The isomorphisms and identities the command relies on.
    pub facts: Vec<String>,
    pub notes: Vec<String>,
    pub exit_status: i32,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            summary: Vec::new(),
            checks: Vec::new(),
            facts: Vec::new(),
            notes: Vec::new(),
            exit_status: 0,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.summary.push(text.into());
        self
    }

    pub fn check(&mut self, name: &str, ok: bool, data: Value) -> &mut Self {
        self.checks.push(Check {
            name: name.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            data,
        });
        self
    }

    pub fn fact(&mut self, text: impl Into<String>) -> &mut Self {
        self.facts.push(text.into());
        self
    }

    pub fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.notes.push(text.into());
        self
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    /// Fixes `exit_status` from the checks.
    pub fn finish(mut self) -> Self {
        self.exit_status = if self.all_passed() { 0 } else { 1 };
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "== {} ==", self.command);
        if !self.parameters.is_empty() {
            let params: Vec<String> = self
                .parameters
                .iter()
                .map(|(k, v)| format!("{k}={}", plain(v)))
                .collect();
            let _ = writeln!(out, "parameters: {}", params.join(", "));
        }
        for line in &self.summary {
            let _ = writeln!(out, "{line}");
        }
        if !self.checks.is_empty() {
            let _ = writeln!(out, "checks:");
            for c in &self.checks {
                let tag = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                };
                let _ = writeln!(out, "  [{tag}] {}", c.name);
            }
        }
        if !self.facts.is_empty() {
            let _ = writeln!(out, "uses:");
            for f in &self.facts {
                let _ = writeln!(out, "  - {f}");
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        let _ = writeln!(out, "exit status: {}", self.exit_status);
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn elem_json(x: &RingElem) -> Value {
    json!({
        "degree": x.degree(),
        "coeffs": x.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "text": x.to_string(),
    })
}

pub fn coeff_tuple(x: &RingElem) -> String {
    let parts: Vec<String> = x.coeffs().iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn seq_json(a: &FinSeq) -> Value {
    json!({
        "degree": a.params().degree(),
        "terms": a.terms().iter().map(|t| t.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(|v| Value::String(v.to_string())).collect()))
            .collect(),
    )
}

pub fn cokernel_json(c: &CokernelStructure) -> Value {
    json!({
        "torsion": c.torsion.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "free_rank": c.free_rank,
    })
}

pub fn cokernel_text(c: &CokernelStructure) -> String {
    let mut parts: Vec<String> = Vec::new();
    match c.free_rank {
        0 => {}
        1 => parts.push("Z".into()),
        r => parts.push(format!("Z^{r}")),
    }
    parts.extend(c.torsion.iter().map(|d| format!("Z/{d}")));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ⊕ ")
    }
}
