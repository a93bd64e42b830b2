//! Clause-by-clause verification reports.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Whether a clause is a defining axiom or a consequence checked as a
/// regression test of the verifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClauseKind {
    Axiom,
    Derived,
    Check,
}

impl ClauseKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClauseKind::Axiom => "axiom",
            ClauseKind::Derived => "derived",
            ClauseKind::Check => "check",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Clause {
    pub name: String,
    pub kind: ClauseKind,
    pub passed: bool,
    /// Number of instances evaluated.
    pub checked: usize,
    /// The first failing instance, when any.
    pub witness: Option<String>,
}

/// Accumulates instances of one clause.
pub struct ClauseCheck {
    clause: Clause,
}

impl ClauseCheck {
    pub fn new(name: &str, kind: ClauseKind) -> Self {
        ClauseCheck { clause: Clause { name: name.to_string(), kind, passed: true, checked: 0, witness: None } }
    }

    /// Records one instance; `witness` is only evaluated on the first failure.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) -> bool {
        self.clause.checked += 1;
        if !ok && self.clause.passed {
            self.clause.passed = false;
            self.clause.witness = Some(witness());
        }
        ok
    }

    pub fn failed(&self) -> bool {
        !self.clause.passed
    }

    pub fn finish(self) -> Clause {
        self.clause
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub title: String,
    pub clauses: Vec<Clause>,
    /// Named quantities computed along the way (dimensions, sizes, flags).
    pub values: Vec<(String, String)>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(title: &str) -> Self {
        Report { title: title.to_string(), ..Default::default() }
    }

    pub fn push(&mut self, c: Clause) {
        self.clauses.push(c);
    }

    /// Adds a single-instance clause.
    pub fn assert(&mut self, name: &str, kind: ClauseKind, ok: bool, witness: impl FnOnce() -> String) {
        let mut c = ClauseCheck::new(name, kind);
        c.check(ok, witness);
        self.push(c.finish());
    }

    pub fn value(&mut self, name: &str, v: impl ToString) {
        self.values.push((name.to_string(), v.to_string()));
    }

    pub fn get_value(&self, name: &str) -> Option<&str> {
        self.values.iter().find(|(k, _)| k == name).map(|(_, v)| v.as_str())
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.passed)
    }

    /// Appends another report's clauses under a name prefix.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.clauses {
            c.name = alloc::format!("{prefix}.{}", c.name);
            self.clauses.push(c);
        }
        for (k, v) in other.values {
            self.values.push((alloc::format!("{prefix}.{k}"), v));
        }
        for n in other.notes {
            self.notes.push(alloc::format!("{prefix}: {n}"));
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} [{}]", self.title, if self.passed() { "PASS" } else { "FAIL" })?;
        for c in &self.clauses {
            write!(
                f,
                "  {:<4} {:<8} {} ({} checked)",
                if c.passed { "ok" } else { "FAIL" },
                c.kind.as_str(),
                c.name,
                c.checked
            )?;
            if let Some(w) = &c.witness {
                write!(f, ": {w}")?;
            }
            writeln!(f)?;
        }
        for (k, v) in &self.values {
            writeln!(f, "  {k} = {v}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    #[test]
    fn first_witness_is_kept() {
        let mut c = ClauseCheck::new("x", ClauseKind::Axiom);
        c.check(true, || "a".into());
        c.check(false, || "b".into());
        c.check(false, || "c".into());
        let c = c.finish();
        assert!(!c.passed);
        assert_eq!(c.checked, 3);
        assert_eq!(c.witness.as_deref(), Some("b"));
    }

    #[test]
    fn absorb_prefixes() {
        let mut inner = Report::new("inner");
        inner.assert("y", ClauseKind::Check, true, String::new);
        inner.value("dim", 4);
        let mut outer = Report::new("outer");
        outer.absorb("step", inner);
        assert!(outer.clause("step.y").is_some());
        assert_eq!(outer.get_value("step.dim"), Some("4"));
        assert!(format!("{outer}").contains("PASS"));
    }
}
