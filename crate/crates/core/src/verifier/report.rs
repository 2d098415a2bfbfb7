//! Structured check reports with JSON serialization.

use serde::{Deserialize, Serialize};
use std::time::Instant;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    /// The offending universe member (graph text, plus assignment when relevant).
    pub item: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub id: String,
    /// Human-readable description of the swept universe.
    pub universe: String,
    /// Instances on which the conclusion was evaluated.
    pub tested: u64,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
    pub notes: Vec<String>,
    /// False for randomized smoke runs; true for full sweeps of the
    /// declared universe.
    pub exhaustive: bool,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{}: {} ({} tested, {} failures, {} ms{})",
            self.id,
            if self.pass() { "pass" } else { "FAIL" },
            self.tested,
            self.failures.len(),
            self.elapsed_ms,
            if self.exhaustive { "" } else { ", smoke" },
        )
    }
}

/// In-progress report; accumulates failures and notes, stamps elapsed time.
pub struct Run {
    report: Report,
    start: Instant,
}

impl Run {
    pub fn new(id: &str, universe: String) -> Run {
        Run {
            report: Report {
                id: id.to_string(),
                universe,
                tested: 0,
                failures: Vec::new(),
                elapsed_ms: 0,
                notes: Vec::new(),
                exhaustive: true,
            },
            start: Instant::now(),
        }
    }

    pub fn smoke(mut self) -> Run {
        self.report.exhaustive = false;
        self.report.notes.push("randomized smoke run, not a proof".to_string());
        self
    }

    pub fn tested(&mut self, k: u64) {
        self.report.tested += k;
    }

    pub fn fail(&mut self, item: String, detail: String) {
        self.report.failures.push(Failure { item, detail });
    }

    pub fn absorb(&mut self, tested: u64, failures: Vec<Failure>) {
        self.report.tested += tested;
        self.report.failures.extend(failures);
    }

    pub fn note(&mut self, text: &str) {
        self.report.notes.push(text.to_string());
    }

    pub fn done(mut self) -> Report {
        self.report.elapsed_ms = self.start.elapsed().as_millis() as u64;
        self.report.failures.sort();
        self.report
    }
}
