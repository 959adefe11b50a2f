//! Serializable run metadata shared by the CLI and other front ends.

use serde::Serialize;

/// Metadata describing one evolution run, exported as JSON next to the CSV.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunMetadata {
    pub family: String,
    pub n_vertices: usize,
    pub degree: usize,
    pub loop_weight: f64,
    pub marked: usize,
    pub horizon: usize,
    /// "flag" when the step count came from the command line, "heuristic"
    /// when the default horizon formula chose it.
    pub horizon_source: String,
    pub peak_time: usize,
    pub peak_probability: f64,
    pub wall_time_ms: u128,
}
