//! Location of the canonical 16-point set.

use std::path::PathBuf;

use dlab_core::xset::XSet;

use crate::formats::{read_pointset, FormatError};

/// Environment variable overriding the canonical set's path.
pub const DATA_ENV: &str = "DLAB_DATA";

/// `$DLAB_DATA` if set, else `data/x16.pts` at the workspace root.
pub fn canonical_x_path() -> PathBuf {
    match std::env::var_os(DATA_ENV) {
        Some(p) => PathBuf::from(p),
        None => PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/x16.pts"),
    }
}

#[derive(Debug, thiserror::Error)]
pub enum DataError {
    #[error("reading {path}: {source}")]
    Read { path: String, source: FormatError },
    #[error("{path}: not labeled 5 A, 5 B, 3 T1, 3 T2")]
    Labels { path: String },
}

pub fn load_canonical_x() -> Result<XSet, DataError> {
    let path = canonical_x_path();
    let shown = path.display().to_string();
    let ps = read_pointset(&path).map_err(|source| DataError::Read { path: shown.clone(), source })?;
    XSet::new(ps).map_err(|_| DataError::Labels { path: shown })
}
