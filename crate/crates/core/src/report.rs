//! Pass/fail summaries shared by every verification routine.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_failure: Option<String>,
    pub checked_coefficients: usize,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Report {
    pub fn pass(checked: usize) -> Self {
        Report { status: Status::Pass, first_failure: None, checked_coefficients: checked, notes: vec![] }
    }

    pub fn fail(checked: usize, msg: impl Into<String>) -> Self {
        Report { status: Status::Fail, first_failure: Some(msg.into()), checked_coefficients: checked, notes: vec![] }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Conjunction of several reports.
    pub fn all(reports: impl IntoIterator<Item = Report>) -> Self {
        let mut out = Report::pass(0);
        for r in reports {
            out.checked_coefficients += r.checked_coefficients;
            if out.passed() && !r.passed() {
                out.status = Status::Fail;
                out.first_failure = r.first_failure;
            }
            out.notes.extend(r.notes);
        }
        out
    }
}
