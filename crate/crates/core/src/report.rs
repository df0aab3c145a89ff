//! Machine-readable check reports.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub paper_anchor: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, anchor: &str, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check { name: name.into(), paper_anchor: anchor.to_string(), pass: expected == actual, expected, actual }
    }

    /// A check whose verdict is not a plain string comparison.
    pub fn verdict(
        name: impl Into<String>,
        anchor: &str,
        expected: impl ToString,
        actual: impl ToString,
        pass: bool,
    ) -> Self {
        Check {
            name: name.into(),
            paper_anchor: anchor.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
        }
    }
}

/// A claim that was deliberately not evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub name: String,
    pub paper_anchor: String,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Input {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
}

/// Named values produced by a command, such as polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Output {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub input: Input,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<Skipped>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub outputs: Vec<Output>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(input: Input) -> Self {
        Report {
            version: VERSION.to_string(),
            input,
            checks: Vec::new(),
            skipped: Vec::new(),
            outputs: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("nilcent {}\n", self.version);
        let i = &self.input;
        let mut fields = vec![format!("command={}", i.command)];
        let opt = [
            ("kind", i.kind.clone()),
            ("partition", i.partition.clone()),
            ("suite", i.suite.clone()),
            ("max_n", i.max_n.map(|v| v.to_string())),
            ("seed", i.seed.map(|v| v.to_string())),
            ("file", i.file.clone()),
        ];
        fields.extend(opt.into_iter().filter_map(|(k, v)| v.map(|v| format!("{k}={v}"))));
        let _ = writeln!(out, "input: {}", fields.join(" "));
        for o in &self.outputs {
            if o.value.contains('\n') {
                let _ = writeln!(out, "{}:\n{}", o.name, o.value.trim_end());
            } else {
                let _ = writeln!(out, "{}: {}", o.name, o.value);
            }
        }
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{tag} {} [{}] expected={} actual={}", c.name, c.paper_anchor, c.expected, c.actual);
        }
        for s in &self.skipped {
            let _ = writeln!(out, "SKIPPED {} [{}] {}", s.name, s.paper_anchor, s.reason);
        }
        let _ = writeln!(
            out,
            "summary: {} passed, {} failed, {} skipped ({} ms)",
            self.checks.len() - self.failures(),
            self.failures(),
            self.skipped.len(),
            self.elapsed_ms
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_has_empty_checks() {
        let r = Report::new(Input { command: "verify".into(), ..Input::default() });
        let json = r.to_json();
        assert!(json.contains("\"checks\": []"));
        let keys: Vec<usize> = ["\"version\"", "\"input\"", "\"checks\"", "\"elapsed_ms\""]
            .iter()
            .map(|k| json.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn round_trip_and_failure() {
        let mut r = Report::new(Input { command: "info".into(), seed: Some(3), ..Input::default() });
        r.checks.push(Check::new("a", "centre dimension", "2", "2"));
        r.checks.push(Check::new("b", "index", "3", "4"));
        r.skipped.push(Skipped { name: "c".into(), paper_anchor: "x".into(), reason: "guard".into() });
        assert!(!r.all_pass());
        let json = r.to_json();
        assert!(json.contains("\"pass\": false"));
        assert_eq!(Report::from_json(&json).unwrap(), r);
        assert!(r.to_text().contains("FAIL b"));
    }
}
