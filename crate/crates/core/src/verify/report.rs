use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub graphs_examined: u64,
    /// All violations found, including those beyond the kept examples.
    pub violations: u64,
    pub elapsed_ms: u64,
}

/// Outcome of one check. `status` is `fail` exactly when violations were
/// found; `counterexamples` holds the first few in sorted order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    pub stats: Stats,
    /// Informational lines (e.g. cospectral groups found); never affects status.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub info: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    /// Fixed-width summary line, then one line per counterexample and info item.
    pub fn to_text(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut out = format!(
            "{:<24} {:<4} examined={:<8} violations={:<6} elapsed_ms={:<8} {}\n",
            self.check,
            status,
            self.stats.graphs_examined,
            self.stats.violations,
            self.stats.elapsed_ms,
            params.join(" ")
        );
        for c in &self.counterexamples {
            let _ = writeln!(out, "  {:<20} {}", c.graph6, c.detail);
        }
        for line in &self.info {
            let _ = writeln!(out, "  # {line}");
        }
        out
    }

    /// Combines reports of the same check over disjoint ranges.
    pub(crate) fn absorb(&mut self, other: Report, cap: usize) {
        self.stats.graphs_examined += other.stats.graphs_examined;
        self.stats.violations += other.stats.violations;
        self.stats.elapsed_ms += other.stats.elapsed_ms;
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort();
        self.counterexamples.dedup();
        self.counterexamples.truncate(cap);
        self.info.extend(other.info);
        if self.stats.violations > 0 {
            self.status = Status::Fail;
        }
    }
}
