//! File emission: curve CSV and atomic whole-file writes.

use std::path::Path;

use cycleforge_core::cycle::CurveMeta;
use cycleforge_core::SampledCurve64;

use crate::error::CliError;

/// Writes bytes to `path` atomically: a temp file in the same directory
/// is renamed over the target, so readers never observe a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let io_err = |source: std::io::Error| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = std::path::PathBuf::from(tmp);
    std::fs::write(&tmp, bytes).map_err(io_err)?;
    std::fs::rename(&tmp, path).map_err(io_err)
}

/// Renders the curve as CSV with header `t,y_dd`, floats as shortest
/// round-trip decimals so re-ingestion reproduces the samples exactly.
pub fn curve_csv(curve: &SampledCurve64) -> String {
    let mut out = String::from("t,y_dd\n");
    for (t, y) in curve.ts().iter().zip(curve.ys()) {
        out.push_str(&format!("{t},{y}\n"));
    }
    out
}

/// Writes [`curve_csv`] atomically.
pub fn emit_curve_csv(curve: &SampledCurve64, path: &Path) -> Result<(), CliError> {
    write_atomic(path, curve_csv(curve).as_bytes())
}

/// Parses a curve CSV produced by [`curve_csv`].
pub fn parse_curve_csv(text: &str) -> Result<SampledCurve64, CliError> {
    let mut lines = text.lines();
    match lines.next() {
        Some("t,y_dd") => {}
        other => {
            return Err(CliError::Parse {
                line: 1,
                message: format!("expected header 't,y_dd', got '{}'", other.unwrap_or("")),
            })
        }
    }
    let mut ts = Vec::new();
    let mut ys = Vec::new();
    for (i, line) in lines.enumerate() {
        let line_no = (i + 2) as u64;
        let (t, y) = line.split_once(',').ok_or_else(|| CliError::Parse {
            line: line_no,
            message: "expected two comma-separated fields".to_string(),
        })?;
        let parse = |name: &str, s: &str| -> Result<f64, CliError> {
            s.parse().map_err(|_| CliError::Parse {
                line: line_no,
                message: format!("column '{name}': cannot parse '{s}' as a number"),
            })
        };
        ts.push(parse("t", t)?);
        ys.push(parse("y_dd", y)?);
    }
    SampledCurve64::new(ts, ys, CurveMeta::unspecified()).map_err(|e| CliError::Parse {
        line: 0,
        message: e.to_string(),
    })
}

/// Renders the aggregate series as CSV (used by the `aggregate`
/// subcommand).
pub fn sdf_csv(report_rows: &[crate::report::SdfRow]) -> String {
    let mut out = String::from("year,economic,social,environmental,aggregate\n");
    for row in report_rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.year, row.economic, row.social, row.environmental, row.aggregate
        ));
    }
    out
}
