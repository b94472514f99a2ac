//! Verification reports: every check produces a list of sub-claims with
//! expected and observed values, and fails as a whole if any sub-claim
//! fails. Reports serialize to JSON deterministically (field order is
//! fixed, collections are vectors in insertion order).

use serde::Serialize;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Detail {
    pub claim: String,
    pub expected: String,
    pub got: String,
    /// How the expectation was obtained: a frozen constant, a direct
    /// computation, or an independent oracle route.
    pub provenance: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub module: String,
    pub status: Status,
    pub details: Vec<Detail>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn first_failure(&self) -> Option<&Detail> {
        self.details.iter().find(|d| !d.ok)
    }
}

/// Incremental builder for a report; any failed sub-claim forces the
/// overall status to fail.
pub struct Recorder {
    check_name: String,
    module: String,
    details: Vec<Detail>,
    start: Instant,
}

impl Recorder {
    pub fn new(check_name: &str, module: &str) -> Self {
        Recorder {
            check_name: check_name.to_string(),
            module: module.to_string(),
            details: Vec::new(),
            start: Instant::now(),
        }
    }

    pub fn eq<T: PartialEq + std::fmt::Display>(
        &mut self,
        claim: &str,
        expected: T,
        got: T,
        provenance: &str,
    ) -> bool {
        let ok = expected == got;
        self.details.push(Detail {
            claim: claim.to_string(),
            expected: expected.to_string(),
            got: got.to_string(),
            provenance: provenance.to_string(),
            ok,
        });
        ok
    }

    pub fn require(&mut self, claim: &str, ok: bool, provenance: &str) -> bool {
        self.details.push(Detail {
            claim: claim.to_string(),
            expected: "true".to_string(),
            got: ok.to_string(),
            provenance: provenance.to_string(),
            ok,
        });
        ok
    }

    pub fn note(&mut self, claim: &str, value: &str, provenance: &str) {
        self.details.push(Detail {
            claim: claim.to_string(),
            expected: value.to_string(),
            got: value.to_string(),
            provenance: provenance.to_string(),
            ok: true,
        });
    }

    pub fn all_ok(&self) -> bool {
        self.details.iter().all(|d| d.ok)
    }

    pub fn finish(self) -> VerificationReport {
        let status = if self.all_ok() { Status::Pass } else { Status::Fail };
        VerificationReport {
            check_name: self.check_name,
            module: self.module,
            status,
            details: self.details,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}
