//! Claim and report plumbing: every verified statement becomes one claim
//! with its anchor, expected and computed values, and a status.

use serde_json::json;
use std::time::Duration;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// The computation succeeded but contradicts the printed source
    /// value; the claim records the discrepancy instead of silently
    /// passing or failing.
    Flagged,
}

impl ClaimStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::Flagged => "flagged",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Claim {
    pub id: String,
    pub anchor: String,
    pub description: String,
    pub expected: String,
    pub computed: String,
    pub status: ClaimStatus,
}

impl Claim {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "id": self.id,
            "anchor": self.anchor,
            "description": self.description,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status.as_str(),
        })
    }
}

/// A scenario's outcome: it passes iff no claim failed (flagged
/// discrepancies are recorded but expected).
#[derive(Debug, Clone)]
pub struct Report {
    pub scenario: String,
    pub claims: Vec<Claim>,
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != ClaimStatus::Fail)
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let pass = self
            .claims
            .iter()
            .filter(|c| c.status == ClaimStatus::Pass)
            .count();
        let fail = self
            .claims
            .iter()
            .filter(|c| c.status == ClaimStatus::Fail)
            .count();
        let flagged = self
            .claims
            .iter()
            .filter(|c| c.status == ClaimStatus::Flagged)
            .count();
        (pass, fail, flagged)
    }

    /// Merges sub-reports in order, keeping claim order deterministic.
    pub fn aggregate(scenario: impl Into<String>, reports: Vec<Report>) -> Report {
        let elapsed = reports.iter().map(|r| r.elapsed).sum();
        let claims = reports.into_iter().flat_map(|r| r.claims).collect();
        Report {
            scenario: scenario.into(),
            claims,
            elapsed,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "scenario": self.scenario,
            "passed": self.passed(),
            "elapsed_ms": self.elapsed.as_millis() as u64,
            "claims": self.claims.iter().map(Claim::to_json).collect::<Vec<_>>(),
        })
    }

    /// One line per claim, plus a summary line. Long polynomial renderings
    /// are elided in the text view; the JSON manifest keeps them whole.
    pub fn render_text(&self) -> String {
        fn elide(text: &str) -> String {
            const LIMIT: usize = 120;
            if text.chars().count() <= LIMIT {
                return text.into();
            }
            let head: String = text.chars().take(LIMIT).collect();
            format!("{head}...")
        }
        let mut out = String::new();
        for claim in &self.claims {
            out.push_str(&format!(
                "[{:7}] {:40} {} (expected {}, got {}) [{}]\n",
                claim.status.as_str(),
                claim.id,
                elide(&claim.description),
                elide(&claim.expected),
                elide(&claim.computed),
                claim.anchor,
            ));
        }
        let (pass, fail, flagged) = self.counts();
        out.push_str(&format!(
            "{}: {} pass, {} fail, {} flagged in {:.1}s -> {}\n",
            self.scenario,
            pass,
            fail,
            flagged,
            self.elapsed.as_secs_f64(),
            if self.passed() { "PASS" } else { "FAIL" },
        ));
        out
    }
}
