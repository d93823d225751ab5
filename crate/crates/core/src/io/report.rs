use std::collections::BTreeMap;
use std::fmt::Write;

use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::report::{CheckReport, Violation};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// The outcome of one command: verdicts, derived quantities and the
/// structured failures of steps that could not run.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub command: String,
    pub checks: Vec<CheckReport>,
    pub derived: BTreeMap<String, Value>,
    pub errors: Vec<(String, String)>,
    pub wall_time: Option<f64>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.errors.is_empty() && self.checks.iter().all(|c| c.passed())
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn check(&mut self, mut r: CheckReport) {
        sort_all(&mut r);
        self.checks.push(r);
    }

    pub fn derive(&mut self, key: &str, value: impl Into<Value>) {
        self.derived.insert(key.to_string(), value.into());
    }

    pub fn error(&mut self, stage: &str, err: &Error) {
        self.errors.push((stage.to_string(), err.to_string()));
    }

    pub fn check_named(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Folds another report in, as one check section named after its command.
    pub fn absorb(&mut self, other: Report) {
        let mut wrapper = CheckReport::new(&other.command);
        for c in other.checks {
            wrapper.add_section(c);
        }
        self.checks.push(wrapper);
        for (k, v) in other.derived {
            self.derived.insert(format!("{}.{k}", other.command), v);
        }
        for (stage, e) in other.errors {
            self.errors.push((format!("{}.{stage}", other.command), e));
        }
    }

    pub fn to_json(&self) -> Value {
        let mut o = Map::new();
        o.insert("command".into(), json!(self.command));
        o.insert("passed".into(), json!(self.passed()));
        o.insert("checks".into(), Value::Array(self.checks.iter().map(check_json).collect()));
        o.insert("derived".into(), Value::Object(self.derived.clone().into_iter().collect()));
        o.insert(
            "errors".into(),
            Value::Array(self.errors.iter().map(|(s, e)| json!({"stage": s, "message": e})).collect()),
        );
        if let Some(t) = self.wall_time {
            o.insert("wall_time_seconds".into(), json!(t));
        }
        Value::Object(o)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => super::json::to_string(&self.to_json()),
            Format::Text => self.to_text(),
        }
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{}: {verdict}", self.command);
        for c in &self.checks {
            for line in c.summary().lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
        if !self.derived.is_empty() {
            let _ = writeln!(out, "derived:");
            for (k, v) in &self.derived {
                let _ = writeln!(out, "  {k} = {v}");
            }
        }
        for (stage, e) in &self.errors {
            let _ = writeln!(out, "error in {stage}: {e}");
        }
        if let Some(t) = self.wall_time {
            let _ = writeln!(out, "wall time: {t:.3}s");
        }
        out
    }
}

fn sort_all(r: &mut CheckReport) {
    r.sort();
    for s in &mut r.sections {
        sort_all(s);
    }
}

pub fn scalars_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn violation_json(v: &Violation) -> Value {
    json!({
        "identity": v.identity,
        "indices": v.indices,
        "lhs": scalars_json(&v.lhs),
        "rhs": scalars_json(&v.rhs),
    })
}

pub fn check_json(r: &CheckReport) -> Value {
    json!({
        "name": r.name,
        "passed": r.passed(),
        "violations": r.violations.iter().map(violation_json).collect::<Vec<_>>(),
        "notes": r.notes,
        "sections": r.sections.iter().map(check_json).collect::<Vec<_>>(),
    })
}
