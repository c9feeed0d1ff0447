//! Run configuration: a JSON document with exhaustive unknown-key
//! rejection, so a typo in a tolerance name fails loudly instead of
//! silently running with a default.

use std::path::Path;

use serde::Deserialize;

use cycleforge_core::sdf::{IndicatorDef, Orientation, Pillar};

use crate::error::CliError;

/// Fully validated run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub base_year: i32,
    pub period: f64,
    pub indicators: Vec<IndicatorDef>,
    pub interpolant: InterpolantChoice,
    pub logistic: LogisticSource,
    pub warp: WarpSpec,
    /// Calendar year mapped to logistic time zero; `None` means the warp
    /// base start.
    pub calendar_origin: Option<f64>,
    pub sampling: Sampling,
    pub tolerances: Tolerances,
    pub output: OutputNames,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InterpolantChoice {
    Lagrange,
    PiecewiseLinear,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LogisticSource {
    FitFromSeries,
    Explicit { capacity: f64, rate: f64, y_init: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WarpSpec {
    Affine { scale: f64, offset: f64 },
    AutoWindow { start: f64, end: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sampling {
    pub start: f64,
    pub end: f64,
    pub count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Zero-suppression threshold for inflection detection; `None` scales
    /// automatically with the curve's second differences.
    pub inflection_eps: Option<f64>,
    /// Flat-trend threshold for phase segmentation; `None` means
    /// `1e-9 * capacity`.
    pub flat_eps: Option<f64>,
    /// Fraction of capacity reported as the saturation time.
    pub fraction: f64,
}

#[derive(Debug, Clone)]
pub struct OutputNames {
    pub report: String,
    pub curve_csv: String,
    pub svg: String,
}

// ---------------------------------------------------------------------
// Raw serde layer. Every struct rejects unknown keys.

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    base_year: Option<i32>,
    period: Option<f64>,
    indicators: Vec<RawIndicator>,
    interpolant: Option<String>,
    logistic: Option<RawLogistic>,
    warp: Option<RawWarp>,
    calendar_origin: Option<f64>,
    sampling: RawSampling,
    tolerances: Option<RawTolerances>,
    output: Option<RawOutput>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIndicator {
    id: String,
    pillar: String,
    orientation: Option<i32>,
    scale_exponent: Option<i32>,
    description: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLogistic {
    source: String,
    capacity: Option<f64>,
    rate: Option<f64>,
    y_init: Option<f64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWarp {
    mode: String,
    scale: Option<f64>,
    offset: Option<f64>,
    window_start: Option<f64>,
    window_end: Option<f64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSampling {
    start: f64,
    end: f64,
    count: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTolerances {
    inflection_eps: Option<f64>,
    flat_eps: Option<f64>,
    fraction: Option<f64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    report: Option<String>,
    curve_csv: Option<String>,
    svg: Option<String>,
}

fn schema_err(field: &str, message: impl Into<String>) -> CliError {
    CliError::Schema {
        field: field.to_string(),
        message: message.into(),
    }
}

/// Loads and validates a [`RunConfig`] from a JSON file, applying the
/// documented defaults (base year 2010, period 10, Lagrange interpolant,
/// fit-from-series logistic, identity affine warp).
pub fn load_config(path: &Path) -> Result<RunConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config(&text)
}

/// [`load_config`] on an in-memory JSON document.
pub fn parse_config(text: &str) -> Result<RunConfig, CliError> {
    let raw: RawConfig = serde_json::from_str(text).map_err(|e| CliError::Schema {
        field: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    validate_raw(raw)
}

fn validate_raw(raw: RawConfig) -> Result<RunConfig, CliError> {
    let base_year = raw.base_year.unwrap_or(2010);
    let period = raw.period.unwrap_or(10.0);
    if !(period > 0.0) || !period.is_finite() {
        return Err(schema_err("period", format!("must be positive, got {period}")));
    }

    if raw.indicators.is_empty() {
        return Err(schema_err("indicators", "at least one indicator is required"));
    }
    let mut indicators = Vec::with_capacity(raw.indicators.len());
    for (i, ind) in raw.indicators.into_iter().enumerate() {
        let field = format!("indicators[{i}]");
        if ind.id.is_empty() {
            return Err(schema_err(&field, "id must be nonempty"));
        }
        let pillar = match ind.pillar.as_str() {
            "economic" => Pillar::Economic,
            "social" => Pillar::Social,
            "environmental" => Pillar::Environmental,
            other => {
                return Err(schema_err(
                    &format!("{field}.pillar"),
                    format!("unknown pillar '{other}'; allowed: economic, social, environmental"),
                ))
            }
        };
        let orientation = match ind.orientation {
            None => Orientation::Benefit,
            Some(sign) => Orientation::from_sign(sign).ok_or_else(|| {
                schema_err(
                    &format!("{field}.orientation"),
                    format!("must be 1 or -1, got {sign}"),
                )
            })?,
        };
        let mut def = IndicatorDef::new(
            &ind.id,
            pillar,
            orientation,
            ind.scale_exponent.unwrap_or(0),
        );
        if let Some(desc) = ind.description {
            def = def.with_description(&desc);
        }
        indicators.push(def);
    }

    let interpolant = match raw.interpolant.as_deref() {
        None | Some("lagrange") => InterpolantChoice::Lagrange,
        Some("piecewise_linear") => InterpolantChoice::PiecewiseLinear,
        Some(other) => {
            return Err(schema_err(
                "interpolant",
                format!("unknown kind '{other}'; allowed: lagrange, piecewise_linear"),
            ))
        }
    };

    let logistic = match raw.logistic {
        None => LogisticSource::FitFromSeries,
        Some(l) => match l.source.as_str() {
            "fit" => {
                if l.capacity.is_some() || l.rate.is_some() || l.y_init.is_some() {
                    return Err(schema_err(
                        "logistic",
                        "source 'fit' takes no explicit parameters",
                    ));
                }
                LogisticSource::FitFromSeries
            }
            "explicit" => {
                let capacity = l
                    .capacity
                    .ok_or_else(|| schema_err("logistic.capacity", "required for 'explicit'"))?;
                let rate = l
                    .rate
                    .ok_or_else(|| schema_err("logistic.rate", "required for 'explicit'"))?;
                let y_init = l
                    .y_init
                    .ok_or_else(|| schema_err("logistic.y_init", "required for 'explicit'"))?;
                LogisticSource::Explicit {
                    capacity,
                    rate,
                    y_init,
                }
            }
            other => {
                return Err(schema_err(
                    "logistic.source",
                    format!("unknown source '{other}'; allowed: fit, explicit"),
                ))
            }
        },
    };

    let warp = match raw.warp {
        None => WarpSpec::Affine {
            scale: 1.0,
            offset: 0.0,
        },
        Some(w) => match w.mode.as_str() {
            "affine" => {
                if w.window_start.is_some() || w.window_end.is_some() {
                    return Err(schema_err("warp", "mode 'affine' takes no window"));
                }
                let scale = w.scale.unwrap_or(1.0);
                if scale == 0.0 || !scale.is_finite() {
                    return Err(schema_err("warp.scale", "must be nonzero and finite"));
                }
                WarpSpec::Affine {
                    scale,
                    offset: w.offset.unwrap_or(0.0),
                }
            }
            "auto_window" => {
                if w.scale.is_some() || w.offset.is_some() {
                    return Err(schema_err(
                        "warp",
                        "mode 'auto_window' takes window_start/window_end, not scale/offset",
                    ));
                }
                let start = w.window_start.ok_or_else(|| {
                    schema_err("warp.window_start", "required for 'auto_window'")
                })?;
                let end = w
                    .window_end
                    .ok_or_else(|| schema_err("warp.window_end", "required for 'auto_window'"))?;
                if !(start < end) {
                    return Err(schema_err(
                        "warp.window_start",
                        "window_start must be below window_end",
                    ));
                }
                WarpSpec::AutoWindow { start, end }
            }
            other => {
                return Err(schema_err(
                    "warp.mode",
                    format!("unknown mode '{other}'; allowed: affine, auto_window"),
                ))
            }
        },
    };

    if !(raw.sampling.start < raw.sampling.end) {
        return Err(schema_err("sampling.start", "must be below sampling.end"));
    }
    if raw.sampling.count < 2 {
        return Err(schema_err("sampling.count", "must be at least 2"));
    }
    let sampling = Sampling {
        start: raw.sampling.start,
        end: raw.sampling.end,
        count: raw.sampling.count,
    };

    let tolerances = match raw.tolerances {
        None => Tolerances {
            inflection_eps: None,
            flat_eps: None,
            fraction: 0.9,
        },
        Some(t) => {
            let fraction = t.fraction.unwrap_or(0.9);
            if !(fraction > 0.0 && fraction < 1.0) {
                return Err(schema_err(
                    "tolerances.fraction",
                    format!("must be in (0, 1), got {fraction}"),
                ));
            }
            for (name, eps) in [
                ("tolerances.inflection_eps", t.inflection_eps),
                ("tolerances.flat_eps", t.flat_eps),
            ] {
                if let Some(e) = eps {
                    if !(e >= 0.0) || !e.is_finite() {
                        return Err(schema_err(name, "must be a finite non-negative number"));
                    }
                }
            }
            Tolerances {
                inflection_eps: t.inflection_eps,
                flat_eps: t.flat_eps,
                fraction,
            }
        }
    };

    let output = match raw.output {
        None => OutputNames {
            report: "report.txt".to_string(),
            curve_csv: "curve.csv".to_string(),
            svg: "curve.svg".to_string(),
        },
        Some(o) => OutputNames {
            report: o.report.unwrap_or_else(|| "report.txt".to_string()),
            curve_csv: o.curve_csv.unwrap_or_else(|| "curve.csv".to_string()),
            svg: o.svg.unwrap_or_else(|| "curve.svg".to_string()),
        },
    };

    Ok(RunConfig {
        base_year,
        period,
        indicators,
        interpolant,
        logistic,
        warp,
        calendar_origin: raw.calendar_origin,
        sampling,
        tolerances,
        output,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"{
        "indicators": [
            {"id": "e", "pillar": "economic"},
            {"id": "s", "pillar": "social"},
            {"id": "v", "pillar": "environmental"}
        ],
        "sampling": {"start": 2010, "end": 2040, "count": 301}
    }"#;

    #[test]
    fn minimal_config_gets_defaults() {
        let cfg = parse_config(MINIMAL).unwrap();
        assert_eq!(cfg.base_year, 2010);
        assert_eq!(cfg.period, 10.0);
        assert_eq!(cfg.interpolant, InterpolantChoice::Lagrange);
        assert_eq!(cfg.logistic, LogisticSource::FitFromSeries);
        assert_eq!(
            cfg.warp,
            WarpSpec::Affine {
                scale: 1.0,
                offset: 0.0
            }
        );
        assert_eq!(cfg.calendar_origin, None);
        assert_eq!(cfg.tolerances.fraction, 0.9);
        assert_eq!(cfg.output.report, "report.txt");
    }

    #[test]
    fn zero_period_rejected() {
        let text = MINIMAL.replace("\"sampling\"", "\"period\": 0, \"sampling\"");
        let err = parse_config(&text).unwrap_err();
        match err {
            CliError::Schema { field, .. } => assert_eq!(field, "period"),
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn unknown_interpolant_lists_allowed_kinds() {
        let text = MINIMAL.replace("\"sampling\"", "\"interpolant\": \"spline\", \"sampling\"");
        let err = parse_config(&text).unwrap_err();
        match err {
            CliError::Schema { field, message } => {
                assert_eq!(field, "interpolant");
                assert!(message.contains("lagrange"));
                assert!(message.contains("piecewise_linear"));
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn unknown_keys_rejected() {
        let text = MINIMAL.replace("\"sampling\"", "\"tollerances\": {}, \"sampling\"");
        assert!(matches!(
            parse_config(&text),
            Err(CliError::Schema { .. })
        ));
    }

    #[test]
    fn explicit_logistic_requires_all_parameters() {
        let text = MINIMAL.replace(
            "\"sampling\"",
            "\"logistic\": {\"source\": \"explicit\", \"capacity\": 10}, \"sampling\"",
        );
        let err = parse_config(&text).unwrap_err();
        match err {
            CliError::Schema { field, .. } => assert_eq!(field, "logistic.rate"),
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn bad_sampling_rejected() {
        let text = MINIMAL.replace(
            "{\"start\": 2010, \"end\": 2040, \"count\": 301}",
            "{\"start\": 2040, \"end\": 2010, \"count\": 301}",
        );
        assert!(matches!(parse_config(&text), Err(CliError::Schema { .. })));
    }
}
