//! Library behind the `cycleforge` binary: configuration, CSV ingestion,
//! the analysis pipeline, and report/CSV/SVG emission.
//!
//! Everything here is deterministic: identical config and data produce
//! byte-identical report, curve CSV and SVG output.

// NaN-rejecting comparisons: `!(x > 0)` catches NaN where `x <= 0` does not.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod error;
pub mod ingest;
pub mod output;
pub mod pipeline;
pub mod report;
pub mod svg;

pub use config::{load_config, parse_config, RunConfig};
pub use error::CliError;
pub use ingest::{ingest_csv, ingest_csv_unchecked};
pub use pipeline::{run_pipeline, PipelineOutput};
pub use report::Report;
