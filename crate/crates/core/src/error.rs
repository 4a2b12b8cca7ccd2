use thiserror::Error;

use crate::report::{AxiomReport, Law};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// Two routes to the same map disagreed (for example a non-associative input to `mu2`).
    #[error("consistency error: {0}")]
    Consistency(String),

    /// The input does not satisfy the laws an operation requires.
    #[error("precondition failed: {law} ({detail})")]
    Precondition {
        law: Law,
        detail: String,
        report: Box<AxiomReport>,
    },

    /// A result that must hold for every valid input failed to verify.
    #[error("theorem violation: {law} failed on output ({detail})")]
    TheoremViolation {
        law: Law,
        detail: String,
        report: Box<AxiomReport>,
    },

    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn precondition(report: AxiomReport) -> Error {
        let (law, detail) = first_failure(&report);
        Error::Precondition {
            law,
            detail,
            report: Box::new(report),
        }
    }

    pub(crate) fn theorem_violation(report: AxiomReport) -> Error {
        let (law, detail) = first_failure(&report);
        Error::TheoremViolation {
            law,
            detail,
            report: Box::new(report),
        }
    }

    pub(crate) fn parse(path: impl Into<String>, message: impl Into<String>) -> Error {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }

    /// The report attached to a precondition or theorem failure, if any.
    pub fn report(&self) -> Option<&AxiomReport> {
        match self {
            Error::Precondition { report, .. } | Error::TheoremViolation { report, .. } => Some(report),
            _ => None,
        }
    }
}

fn first_failure(report: &AxiomReport) -> (Law, String) {
    match report.failures().next() {
        Some(check) => (check.law, check.detail.clone()),
        None => (Law::Assoc, "report has no failing check".to_string()),
    }
}
