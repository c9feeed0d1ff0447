//! Indicator CSV ingestion.
//!
//! Long format, UTF-8, one observation per row:
//!
//! ```text
//! year,indicator_id,value,weight
//! 2010,quick_ratio,0.42,1.0
//! ```
//!
//! The `weight` column may be omitted entirely, in which case every
//! weight defaults to 1.0 and a warning is recorded.

use std::path::Path;

use cycleforge_core::sdf::IndicatorDef;
use cycleforge_core::IndicatorPanel64;

use crate::error::CliError;

const FULL_HEADER: [&str; 4] = ["year", "indicator_id", "value", "weight"];
const NO_WEIGHT_HEADER: [&str; 3] = ["year", "indicator_id", "value"];

/// Parses a panel and requires it to pass validation; violations are
/// returned as [`CliError::Validation`].
pub fn ingest_csv(
    path: &Path,
    base_year: i32,
    defs: &[IndicatorDef],
) -> Result<(IndicatorPanel64, Vec<String>), CliError> {
    let (panel, warnings) = ingest_csv_unchecked(path, base_year, defs)?;
    let violations = panel.validate();
    if !violations.is_empty() {
        return Err(CliError::Validation { violations });
    }
    Ok((panel, warnings))
}

/// Parses a panel without validating completeness, so callers can report
/// the full violation list themselves.
pub fn ingest_csv_unchecked(
    path: &Path,
    base_year: i32,
    defs: &[IndicatorDef],
) -> Result<(IndicatorPanel64, Vec<String>), CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| csv_error(path, e))?;

    let headers = reader.headers().map_err(|e| csv_error(path, e))?.clone();
    let header_fields: Vec<&str> = headers.iter().collect();
    let has_weight = if header_fields == FULL_HEADER {
        true
    } else if header_fields == NO_WEIGHT_HEADER {
        false
    } else {
        return Err(CliError::Parse {
            line: 1,
            message: format!(
                "expected header 'year,indicator_id,value,weight' \
                 (weight column optional), got '{}'",
                header_fields.join(",")
            ),
        });
    };

    let mut warnings = Vec::new();
    if !has_weight {
        warnings.push(
            "weight column missing; all weights default to 1.0".to_string(),
        );
    }

    let mut panel =
        IndicatorPanel64::new(base_year, defs.to_vec()).map_err(|e| CliError::Stage {
            stage: "ingest",
            message: e.to_string(),
        })?;
    let mut seen = std::collections::BTreeSet::new();

    for record in reader.records() {
        let record = record.map_err(|e| csv_error(path, e))?;
        let line = record
            .position()
            .map(|p| p.line())
            .unwrap_or(0);
        let parse = |field: usize, name: &str| -> Result<&str, CliError> {
            record.get(field).ok_or_else(|| CliError::Parse {
                line,
                message: format!("missing column '{name}'"),
            })
        };

        let year: i32 = parse(0, "year")?.parse().map_err(|_| CliError::Parse {
            line,
            message: format!("column 'year': cannot parse '{}' as an integer", &record[0]),
        })?;
        let id = parse(1, "indicator_id")?.to_string();
        if id.is_empty() {
            return Err(CliError::Parse {
                line,
                message: "column 'indicator_id' is empty".to_string(),
            });
        }
        let value: f64 = parse(2, "value")?.parse().map_err(|_| CliError::Parse {
            line,
            message: format!("column 'value': cannot parse '{}' as a number", &record[2]),
        })?;
        let weight: f64 = if has_weight {
            parse(3, "weight")?.parse().map_err(|_| CliError::Parse {
                line,
                message: format!(
                    "column 'weight': cannot parse '{}' as a number",
                    &record[3]
                ),
            })?
        } else {
            1.0
        };

        if !seen.insert((year, id.clone())) {
            return Err(CliError::Parse {
                line,
                message: format!("duplicate row for year {year}, indicator '{id}'"),
            });
        }
        panel.insert(&id, year, value, weight).map_err(|e| CliError::Parse {
            line,
            message: e.to_string(),
        })?;
    }

    Ok((panel, warnings))
}

fn csv_error(path: &Path, e: csv::Error) -> CliError {
    match e.kind() {
        csv::ErrorKind::Io(_) => CliError::Io {
            path: path.to_path_buf(),
            source: std::io::Error::other(e.to_string()),
        },
        _ => CliError::Parse {
            line: e
                .position()
                .map(|p| p.line())
                .unwrap_or(0),
            message: e.to_string(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cycleforge_core::sdf::{Orientation, Pillar};
    use std::io::Write;

    fn defs() -> Vec<IndicatorDef> {
        vec![
            IndicatorDef::new("x1", Pillar::Economic, Orientation::Benefit, 0),
            IndicatorDef::new("x2", Pillar::Social, Orientation::Benefit, 0),
            IndicatorDef::new("x3", Pillar::Environmental, Orientation::Benefit, 0),
        ]
    }

    fn write_csv(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn parses_single_row() {
        let f = write_csv(
            "year,indicator_id,value,weight\n\
             2010,x1,0.42,1.0\n2010,x2,1.0,1.0\n2010,x3,1.0,1.0\n",
        );
        let (panel, warnings) = ingest_csv(f.path(), 2010, &defs()).unwrap();
        assert!(warnings.is_empty());
        assert_eq!(panel.value("x1", 2010), Some(0.42));
        assert_eq!(panel.weight("x1", 2010), Some(1.0));
    }

    #[test]
    fn missing_weight_column_defaults_with_warning() {
        let f = write_csv(
            "year,indicator_id,value\n2010,x1,0.5\n2010,x2,1.0\n2010,x3,1.0\n",
        );
        let (panel, warnings) = ingest_csv(f.path(), 2010, &defs()).unwrap();
        assert_eq!(warnings.len(), 1);
        assert!(warnings[0].contains("weight"));
        assert_eq!(panel.weight("x1", 2010), Some(1.0));
    }

    #[test]
    fn duplicate_row_names_line() {
        let f = write_csv(
            "year,indicator_id,value,weight\n\
             2010,x1,0.5,1\n2010,x1,0.6,1\n",
        );
        let err = ingest_csv(f.path(), 2010, &defs()).unwrap_err();
        match err {
            CliError::Parse { line, message } => {
                assert_eq!(line, 3);
                assert!(message.contains("duplicate"));
            }
            other => panic!("unexpected: {other}"),
        }
    }

    #[test]
    fn unknown_indicator_rejected() {
        let f = write_csv("year,indicator_id,value,weight\n2010,bogus,0.5,1\n");
        let err = ingest_csv(f.path(), 2010, &defs()).unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 2, .. }));
    }

    #[test]
    fn bad_header_rejected() {
        let f = write_csv("anno,indicator_id,value,weight\n");
        let err = ingest_csv(f.path(), 2010, &defs()).unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 1, .. }));
    }

    #[test]
    fn incomplete_panel_fails_validation() {
        let f = write_csv(
            "year,indicator_id,value,weight\n\
             2010,x1,0.5,1\n2010,x2,1.0,1\n2010,x3,1.0,1\n2011,x1,0.6,1\n",
        );
        let err = ingest_csv(f.path(), 2010, &defs()).unwrap_err();
        match err {
            CliError::Validation { violations } => assert!(!violations.is_empty()),
            other => panic!("unexpected: {other}"),
        }
    }
}
