//! Runs the `torsion-mcg` checks for one genus and renders the results as
//! a text or JSON report.

pub mod config;
pub mod report;
pub mod suite;

pub use config::{Check, OutputFormat, RunConfig};
pub use report::{CheckReport, Item, Section, Verdict};
pub use suite::{full_theorem_report, run};

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    /// Bad flag combination or an unmet precondition; exit status 2.
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] torsion_mcg::Error),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed report: {0}")]
    Json(#[from] serde_json::Error),
}

impl VerifyError {
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            VerifyError::Config(_)
                | VerifyError::Core(
                    torsion_mcg::Error::GenusTooSmall { .. }
                        | torsion_mcg::Error::NotPrime(_)
                        | torsion_mcg::Error::Precondition(_)
                        | torsion_mcg::Error::ChainDoesNotFit { .. }
                )
        )
    }
}
