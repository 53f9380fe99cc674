use lomat_core::ring::RingKind;
use lomat_core::Error;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{error_kind, exit_code_for, EXIT_OK, EXIT_VERIFICATION};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
}

/// The JSON report written by every verb.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub verb: String,
    pub ring: String,
    pub n: usize,
    pub passed: bool,
    pub exit_code: u8,
    pub summary: String,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    /// Verb-specific output.
    #[serde(flatten)]
    pub fields: Map<String, Value>,
}

impl Report {
    pub fn new(verb: &str, ring: RingKind, n: usize) -> Self {
        Report {
            verb: verb.into(),
            ring: ring.code().into(),
            n,
            passed: false,
            exit_code: EXIT_OK,
            summary: String::new(),
            checks: Vec::new(),
            error: None,
            fields: Map::new(),
        }
    }

    /// Records a check and returns whether it passed.
    pub fn check(&mut self, name: impl Into<String>, pass: bool, witness: impl FnOnce() -> String) -> bool {
        let witness = if pass { None } else { Some(witness()) };
        self.checks.push(Check { name: name.into(), pass, witness });
        pass
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("report values serialize");
        self.fields.insert(key.into(), value);
    }

    /// Records a core error that ended the verb early.
    pub fn fail(&mut self, e: &Error) {
        self.exit_code = exit_code_for(e);
        self.error = Some(ErrorInfo { kind: error_kind(e).into(), message: e.to_string() });
    }

    /// Settles `passed`, `exit_code` and the summary line.
    pub fn finish(mut self, detail: Option<String>) -> Self {
        let failed_check = self.checks.iter().any(|c| !c.pass);
        if self.error.is_none() && failed_check {
            self.exit_code = EXIT_VERIFICATION;
        }
        self.passed = self.error.is_none() && !failed_check;
        let ok = self.checks.iter().filter(|c| c.pass).count();
        let mut summary = format!(
            "{}: {} ({}/{} checks passed)",
            self.verb,
            if self.passed { "PASS" } else { "FAIL" },
            ok,
            self.checks.len()
        );
        if let Some(d) = detail {
            summary.push_str(", ");
            summary.push_str(&d);
        }
        if let Some(e) = &self.error {
            summary.push_str(&format!(", {}: {}", e.kind, e.message));
        }
        self.summary = summary;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failed_check_means_verification_exit() {
        let mut r = Report::new("x", RingKind::Integers, 2);
        r.check("a", true, String::new);
        r.check("b", false, || "w".into());
        let r = r.finish(None);
        assert!(!r.passed);
        assert_eq!(r.exit_code, EXIT_VERIFICATION);
        assert_eq!(r.checks[1].witness.as_deref(), Some("w"));
        assert_eq!(r.summary, "x: FAIL (1/2 checks passed)");
    }

    #[test]
    fn errors_override_check_status() {
        let mut r = Report::new("x", RingKind::Integers, 2);
        r.fail(&Error::ResourceExhausted(3));
        let r = r.finish(None);
        assert_eq!(r.exit_code, 69);
        assert_eq!(r.error.as_ref().unwrap().kind, "ResourceExhausted");
    }

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("x", RingKind::QuadraticSqrt2, 3);
        r.check("a", false, || "why".into());
        r.set("X", vec![vec!["1+s2"]]);
        let r = r.finish(Some("d".into()));
        let text = serde_json::to_string_pretty(&r).unwrap();
        assert_eq!(serde_json::from_str::<Report>(&text).unwrap(), r);
    }
}
