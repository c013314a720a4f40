//! Run reports: one versioned JSON document per CLI invocation, with a
//! plain-text rendering carrying the same verdict data.

use crate::check::SuiteOutcome;
use crate::dimension::{DimensionVerdict, Outcome};
use crate::spectra::SpectrumJson;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

pub const SCHEMA: &str = "latdim.run-report";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Holds,
    Fails,
    Unknown,
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok | Status::Holds | Status::Pass => 0,
            Status::Fails | Status::Fail => 1,
            Status::Error => 2,
            Status::Unknown => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Unknown => "unknown",
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

impl From<Outcome> for Status {
    fn from(o: Outcome) -> Self {
        match o {
            Outcome::Holds => Status::Holds,
            Outcome::Fails => Status::Fails,
            Outcome::Unknown => Status::Unknown,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessEntry {
    pub xs: Vec<String>,
    pub a: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictEntry {
    pub target: String,
    pub kind: String,
    pub strategy: String,
    pub bound: i64,
    pub outcome: String,
    pub exhaustive: bool,
    pub counterexample: Option<Vec<String>>,
    pub witnesses: Vec<WitnessEntry>,
    pub note: String,
}

impl VerdictEntry {
    pub fn from_verdict<E>(target: &str, kind: &str, strategy: &str, v: &DimensionVerdict<E>, show: impl Fn(&E) -> String) -> Self {
        let list = |xs: &[E]| xs.iter().map(&show).collect::<Vec<_>>();
        VerdictEntry {
            target: target.into(),
            kind: kind.into(),
            strategy: strategy.into(),
            bound: v.bound,
            outcome: v.outcome.to_string(),
            exhaustive: v.exhaustive,
            counterexample: v.counterexample.as_deref().map(list),
            witnesses: v.witnesses.iter().map(|w| WitnessEntry { xs: list(&w.xs), a: list(&w.a), m: w.m.clone() }).collect(),
            note: v.note.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub target: String,
    pub what: String,
    #[serde(flatten)]
    pub spectrum: SpectrumJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    pub version: u32,
    pub command: Vec<String>,
    pub status: Status,
    pub verdicts: Vec<VerdictEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub suites: Vec<SuiteOutcome>,
    pub error: Option<String>,
    /// Wall-clock times; the only field that varies between identical runs.
    pub timings_ms: BTreeMap<String, u64>,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport {
            schema: SCHEMA,
            version: SCHEMA_VERSION,
            command,
            status: Status::Ok,
            verdicts: Vec::new(),
            spectrum: None,
            suites: Vec::new(),
            error: None,
            timings_ms: BTreeMap::new(),
        }
    }

    pub fn failed(command: Vec<String>, error: impl Into<String>) -> Self {
        let mut r = RunReport::new(command);
        r.status = Status::Error;
        r.error = Some(error.into());
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    /// Everything but the timings, for comparing runs.
    pub fn to_json_without_timings(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report is serializable");
        if let Some(o) = v.as_object_mut() {
            o.remove("timings_ms");
        }
        serde_json::to_string_pretty(&v).expect("value is serializable")
    }

    pub fn to_text(&self, timings: bool) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command: {}", self.command.join(" "));
        let _ = writeln!(s, "status: {}", self.status.as_str());
        if let Some(e) = &self.error {
            let _ = writeln!(s, "error: {e}");
        }
        for v in &self.verdicts {
            let _ = writeln!(s, "{} <= {} on {} [{}]: {}{}", v.kind, v.bound, v.target, v.strategy, v.outcome, if v.exhaustive { "" } else { " (not exhaustive)" });
            if let Some(cx) = &v.counterexample {
                let _ = writeln!(s, "  counterexample: [{}]", cx.join(", "));
            }
            if !v.note.is_empty() {
                let _ = writeln!(s, "  note: {}", v.note);
            }
            for w in &v.witnesses {
                let _ = write!(s, "  witness: x = [{}], a = [{}]", w.xs.join(", "), w.a.join(", "));
                if let Some(m) = &w.m {
                    let _ = write!(s, ", m = {m:?}");
                }
                s.push('\n');
            }
        }
        if let Some(sp) = &self.spectrum {
            let _ = writeln!(s, "{} of {}: {} points", sp.what, sp.target, sp.spectrum.points.len());
            for (i, p) in sp.spectrum.points.iter().enumerate() {
                let _ = writeln!(s, "  p{i}: {p}");
            }
            for (a, b) in &sp.spectrum.order {
                let _ = writeln!(s, "  p{a} < p{b}");
            }
        }
        for o in &self.suites {
            let _ = writeln!(
                s,
                "suite {}: {} ({} instances, {} skipped, {}/{} checks passed, {} failures)",
                o.suite,
                if o.ok() { "pass" } else { "fail" },
                o.instances,
                o.skipped,
                o.passed,
                o.checks,
                o.failures
            );
            if let Some(f) = &o.first_failure {
                let _ = writeln!(s, "  first failure: {} on {} (size {}): {}", f.property, f.instance, f.size, f.detail);
            }
        }
        if timings {
            for (k, ms) in &self.timings_ms {
                let _ = writeln!(s, "time {k}: {ms} ms");
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dimension::Witness;

    fn sample() -> RunReport {
        let mut v = DimensionVerdict::new(1, Outcome::Holds);
        v.witnesses.push(Witness { xs: vec![2, 3], a: vec![5, 7], m: Some(vec![1, 2]) });
        v.note = "checked".into();
        let mut r = RunReport::new(vec!["latdim".into(), "ring-dim".into()]);
        r.verdicts.push(VerdictEntry::from_verdict("zmod:12", "kdim", "witness", &v, |x| x.to_string()));
        r.status = Status::Holds;
        r.timings_ms.insert("total".into(), 3);
        r
    }

    #[test]
    fn json_is_versioned() {
        let v: serde_json::Value = serde_json::from_str(&sample().to_json()).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["version"], SCHEMA_VERSION);
        assert_eq!(v["status"], "holds");
        assert_eq!(v["verdicts"][0]["witnesses"][0]["m"], serde_json::json!([1, 2]));
        assert!(sample().to_json_without_timings().find("timings_ms").is_none());
    }

    #[test]
    fn text_carries_the_verdict_data() {
        let r = sample();
        let text = r.to_text(false);
        let v = &r.verdicts[0];
        for needle in [v.kind.as_str(), v.target.as_str(), v.strategy.as_str(), v.outcome.as_str(), v.note.as_str(), "x = [2, 3]", "a = [5, 7]", "m = [1, 2]", "<= 1"] {
            assert!(text.contains(needle), "{needle} missing from\n{text}");
        }
        assert!(!text.contains("time total"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Status::Holds.exit_code(), 0);
        assert_eq!(Status::Fails.exit_code(), 1);
        assert_eq!(Status::Error.exit_code(), 2);
        assert_eq!(Status::Unknown.exit_code(), 3);
        assert_eq!(Status::Fail.exit_code(), 1);
    }
}
