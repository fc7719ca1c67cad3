//! Driver for the configuration search with a line-oriented trace.

use dlab_core::xset::{search_x, SearchFailure, XCandidate};

use crate::formats::format_pointset;

/// Runs [`search_x`], handing one `attempt seed verdict failed-check` line
/// per attempt to `trace`.
pub fn run_search(seed: u64, budget: u64, mut trace: impl FnMut(&str)) -> Result<XCandidate, SearchFailure> {
    search_x(seed, budget, |a| trace(&a.to_string()))
}

/// The point-set file for a candidate, with its provenance as comments.
pub fn candidate_file(c: &XCandidate) -> String {
    format!(
        "# 16-point configuration from `dlab search-x --seed {} --budget {}` (accepted at attempt {})\n{}",
        c.seed,
        c.attempt + 1,
        c.attempt,
        format_pointset(c.x.points())
    )
}
