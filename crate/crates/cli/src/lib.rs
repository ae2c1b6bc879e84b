//! Command-line front end for `quartic-acm-core`: the catalog override file
//! format, table/JSON/CSV rendering, and the self-verification suite.

pub mod catalog_file;
pub mod commands;
pub mod render;
pub mod selfcheck;

use quartic_acm_core::Error as DomainError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Catalog(#[from] catalog_file::CatalogFileError),
    #[error("no decomposition of {0} over the {1} pool")]
    NoWitness(String, &'static str),
    #[error("{failed} of {total} self-checks failed")]
    SelfcheckFailed {
        failed: usize,
        total: usize,
        /// The rendered check list, destined for standard error.
        report: String,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 for domain failures, 2 for malformed input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Catalog(_) | CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}
