//! Named pass/fail results shared by the verification suites.

use std::time::Instant;

use serde::Serialize;

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status,
            detail: detail.into(),
            elapsed_ms: None,
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Self::new(name, if ok { Status::Pass } else { Status::Fail }, detail)
    }

    pub fn skipped(name: impl Into<String>, why: impl Into<String>) -> Self {
        Self::new(name, Status::Skipped, why)
    }

    /// Runs `f`, timing it. An error becomes a failed check carrying the message.
    pub fn run(name: impl Into<String>, f: impl FnOnce() -> Result<(bool, String)>) -> Self {
        let start = Instant::now();
        let mut check = match f() {
            Ok((ok, detail)) => Self::from_bool(name, ok, detail),
            Err(e) => Self::new(name, Status::Fail, format!("error: {e}")),
        };
        check.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
        check
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(Check::passed)
}
