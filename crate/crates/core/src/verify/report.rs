use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedNotApplicable,
    SkippedBudget,
    Observation,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedNotApplicable => "skipped-not-applicable",
            Status::SkippedBudget => "skipped-budget",
            Status::Observation => "observation",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub group: String,
    #[serde(skip)]
    pub order: usize,
    pub check: String,
    pub status: Status,
    pub witness: Value,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VerificationReport {
    pub entries: Vec<ReportEntry>,
}

impl VerificationReport {
    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn has_failures(&self) -> bool {
        self.failures().next().is_some()
    }

    pub fn entry(&self, group: &str, check: &str) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| e.group == group && e.check == check)
    }

    pub fn for_check<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a ReportEntry> + 'a {
        self.entries.iter().filter(move |e| e.check == check)
    }

    /// Sets every `elapsed_ms` to 0 so output is reproducible byte for byte.
    pub fn strip_timing(&mut self) {
        for e in &mut self.entries {
            e.elapsed_ms = 0;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("group,check,status\n");
        for e in &self.entries {
            let _ = writeln!(out, "{},{},{}", csv_field(&e.group), e.check, e.status.as_str());
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serialization() {
        let r = VerificationReport {
            entries: vec![ReportEntry {
                group: "a,b".into(),
                order: 4,
                check: "connectivity-main".into(),
                status: Status::SkippedBudget,
                witness: serde_json::json!({"k": 1}),
                elapsed_ms: 3,
            }],
        };
        assert_eq!(r.to_csv(), "group,check,status\n\"a,b\",connectivity-main,skipped-budget\n");
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v[0]["status"], "skipped-budget");
        assert_eq!(v[0]["elapsed_ms"], 3);
        assert!(v[0].get("order").is_none());
        assert!(!r.has_failures());
    }
}
