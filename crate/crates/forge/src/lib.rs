//! Command-line front end for `origami-forge-core`: origami and word-data
//! file formats, the fixture registry, seed-deterministic random origamis,
//! the randomized property sweep and JSON reports.

pub mod cli;
pub mod fixtures;
pub mod io;
pub mod random;
pub mod sweep;

use std::path::Path;

use origami_forge_core::freegroup::FreeGroupError;
use origami_forge_core::homology::HomologyError;
use origami_forge_core::hss::HssError;
use origami_forge_core::moebius::MoebiusError;
use origami_forge_core::origami::OrigamiError;
use origami_forge_core::subgroup::SubgroupError;

/// Errors of the front end.  All of them are domain errors (exit code 1).
#[derive(Debug, thiserror::Error)]
pub enum ForgeError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{path}: {source}")]
    InFile { path: String, source: Box<ForgeError> },
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Origami(#[from] OrigamiError),
    #[error(transparent)]
    FreeGroup(#[from] FreeGroupError),
    #[error(transparent)]
    Subgroup(#[from] SubgroupError),
    #[error(transparent)]
    Hss(#[from] HssError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Moebius(#[from] MoebiusError),
}

impl ForgeError {
    /// A stable machine-readable name of the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            ForgeError::Io { .. } => "io",
            ForgeError::Parse { .. } => "parse",
            ForgeError::InFile { source, .. } => source.kind(),
            ForgeError::UnknownName(_) => "unknown_name",
            ForgeError::Argument(_) => "argument",
            ForgeError::VerificationFailed(_) => "verification_failed",
            ForgeError::Origami(_) => "origami",
            ForgeError::FreeGroup(_) => "free_group",
            ForgeError::Subgroup(_) => "subgroup",
            ForgeError::Hss(_) => "hss",
            ForgeError::Homology(_) => "homology",
            ForgeError::Moebius(_) => "moebius",
        }
    }

    pub(crate) fn in_file(self, path: &Path) -> ForgeError {
        ForgeError::InFile { path: path.display().to_string(), source: Box::new(self) }
    }
}
