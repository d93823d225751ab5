//! Verdicts with concrete witnesses.

use rayon::prelude::*;

use crate::scalar::Scalar;

/// One failed identity instance: the basis-index tuple it was evaluated on
/// and both sides as coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: String,
    pub indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

impl Violation {
    pub fn new(identity: &str, indices: &[usize], lhs: Vec<Scalar>, rhs: Vec<Scalar>) -> Self {
        Violation { identity: identity.to_string(), indices: indices.to_vec(), lhs, rhs }
    }
}

/// Returns a violation iff `lhs != rhs`.
pub fn expect_eq(identity: &str, indices: &[usize], lhs: Vec<Scalar>, rhs: Vec<Scalar>) -> Option<Violation> {
    (lhs != rhs).then(|| Violation::new(identity, indices, lhs, rhs))
}

/// A named verdict. It passes iff it has no violations and every section
/// passes. `notes` carry informational remarks that do not affect the verdict.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub violations: Vec<Violation>,
    pub sections: Vec<CheckReport>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(name: &str) -> Self {
        CheckReport { name: name.to_string(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.sections.iter().all(CheckReport::passed)
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn check(&mut self, v: Option<Violation>) {
        if let Some(v) = v {
            self.violations.push(v);
        }
    }

    /// Records a bare failure without vector witnesses.
    pub fn fail(&mut self, identity: &str, indices: &[usize]) {
        self.violations.push(Violation::new(identity, indices, Vec::new(), Vec::new()));
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn add_section(&mut self, section: CheckReport) {
        self.sections.push(section);
    }

    pub fn section(&self, name: &str) -> Option<&CheckReport> {
        self.sections.iter().find(|s| s.name == name)
    }

    /// All violations, including those of nested sections.
    pub fn all_violations(&self) -> Vec<&Violation> {
        let mut out: Vec<&Violation> = self.violations.iter().collect();
        for s in &self.sections {
            out.extend(s.all_violations());
        }
        out
    }

    pub fn sort(&mut self) {
        self.violations
            .sort_by(|a, b| a.indices.cmp(&b.indices).then_with(|| a.identity.cmp(&b.identity)));
    }

    /// One line per section, indented, for humans.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        self.write_summary(0, &mut out);
        out
    }

    fn write_summary(&self, depth: usize, out: &mut String) {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{}{}: {}", "  ".repeat(depth), self.name, verdict));
        if !self.violations.is_empty() {
            let v = &self.violations[0];
            out.push_str(&format!(
                " ({} violations; first: {} at {:?})",
                self.violations.len(),
                v.identity,
                v.indices
            ));
        }
        out.push('\n');
        for s in &self.sections {
            s.write_summary(depth + 1, out);
        }
    }
}

/// Every index tuple of the given dimensions, in lexicographic order.
pub fn index_tuples(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &d in dims {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..d).map(move |i| {
                    let mut t = prefix.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// Evaluates `check` on every index tuple (in parallel) and gathers the
/// violations into a report sorted by index tuple.
pub fn sweep<F>(name: &str, dims: &[usize], check: F) -> CheckReport
where
    F: Fn(&[usize]) -> Vec<Violation> + Sync,
{
    let violations: Vec<Violation> = index_tuples(dims)
        .par_iter()
        .flat_map_iter(|t| check(t))
        .collect();
    let mut report = CheckReport::new(name);
    report.violations = violations;
    report.sort();
    report
}
