//! Verification reports: deterministic per-check verdicts with explicit
//! checked/skipped instance counts, serializable to JSON and renderable
//! as text. Exit decisions key off `certified`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::par::ScanTally;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped-by-truncation")]
    SkippedByTruncation,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub verdict: Verdict,
    pub checked: u64,
    pub skipped: u64,
    pub witnesses: Vec<String>,
}

impl CheckReport {
    pub fn from_tally<W>(
        name: impl Into<String>,
        tally: &ScanTally<W>,
        render: impl Fn(&W) -> String,
    ) -> Self {
        let mut witnesses: Vec<String> = tally.witnesses.iter().map(render).collect();
        witnesses.sort();
        CheckReport {
            name: name.into(),
            verdict: if tally.passed() {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            checked: tally.checked,
            skipped: tally.skipped,
            witnesses,
        }
    }

    pub fn pass(name: impl Into<String>, checked: u64, skipped: u64) -> Self {
        CheckReport {
            name: name.into(),
            verdict: Verdict::Pass,
            checked,
            skipped,
            witnesses: Vec::new(),
        }
    }

    pub fn fail(name: impl Into<String>, witnesses: Vec<String>) -> Self {
        let mut witnesses = witnesses;
        witnesses.sort();
        witnesses.truncate(crate::par::WITNESS_CAP);
        CheckReport {
            name: name.into(),
            verdict: Verdict::Fail,
            checked: 0,
            skipped: 0,
            witnesses,
        }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            verdict: Verdict::SkippedByTruncation,
            checked: 0,
            skipped: 0,
            witnesses: vec![reason.into()],
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub example: String,
    pub params: BTreeMap<String, String>,
    /// Present on band-limited algebras; certification is then
    /// window-conditional.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<(i64, i64)>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
    /// Free-form reproducible facts: dimensions, classification, counts.
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub info: BTreeMap<String, String>,
    pub checks: Vec<CheckReport>,
}

impl VerificationReport {
    pub fn new(example: impl Into<String>) -> Self {
        VerificationReport {
            example: example.into(),
            params: BTreeMap::new(),
            window: None,
            notes: Vec::new(),
            info: BTreeMap::new(),
            checks: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.to_string(), value.to_string());
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn info(&mut self, key: &str, value: impl ToString) {
        self.info.insert(key.to_string(), value.to_string());
    }

    pub fn push(&mut self, check: CheckReport) {
        self.checks.push(check);
    }

    /// True when no check failed. With a window present this is a
    /// window-conditional verdict, never an absolute one.
    pub fn certified(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("example {}", self.example));
        if !self.params.is_empty() {
            let params: Vec<String> =
                self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!(" ({})", params.join(", ")));
        }
        out.push('\n');
        if let Some((lo, hi)) = self.window {
            out.push_str(&format!(
                "  certified within window [{lo}, {hi}] only; out-of-window instances are counted as skipped\n"
            ));
        }
        for note in &self.notes {
            out.push_str(&format!("  note: {note}\n"));
        }
        for (k, v) in &self.info {
            out.push_str(&format!("  {k}: {v}\n"));
        }
        for c in &self.checks {
            let verdict = match c.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::SkippedByTruncation => "SKIP(window)",
            };
            out.push_str(&format!(
                "  [{verdict}] {} (checked {}, skipped {})",
                c.name, c.checked, c.skipped
            ));
            if !c.witnesses.is_empty() {
                out.push_str(&format!(" witnesses: {}", c.witnesses.join("; ")));
            }
            out.push('\n');
        }
        let overall = if self.certified() {
            if self.window.is_some() {
                "PASS (window-conditional)"
            } else {
                "PASS"
            }
        } else {
            "FAIL"
        };
        out.push_str(&format!("  => {overall}\n"));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_json_names() {
        assert_eq!(
            serde_json::to_string(&Verdict::SkippedByTruncation).unwrap(),
            "\"skipped-by-truncation\""
        );
    }

    #[test]
    fn report_roundtrip_and_certification() {
        let mut r = VerificationReport::new("demo");
        r.param("n", 2);
        r.push(CheckReport::pass("closure", 10, 0));
        assert!(r.certified());
        r.push(CheckReport::fail("isotropy", vec!["(a,b)".into()]));
        assert!(!r.certified());
        let json = serde_json::to_string(&r).unwrap();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.checks.len(), 2);
        assert!(!back.certified());
        assert!(r.render_text().contains("FAIL"));
    }
}
