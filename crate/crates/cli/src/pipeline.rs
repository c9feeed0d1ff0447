//! The end-to-end pipeline: aggregation, interpolation, periodic
//! extension, logistic model, composition, analysis.
//!
//! Every numeric output is produced by the same core-module calls a
//! caller would make by hand; the pipeline adds no arithmetic of its own,
//! only stage orchestration and error annotation.

use cycleforge_core::cycle::{CycleModel, TimeWarp};
use cycleforge_core::interpolation::{Interpolant, NodeSet};
use cycleforge_core::logistic::{fit_logistic, LogisticError};
use cycleforge_core::numerics::{default_sign_eps, find_root, second_differences, Bracket};
use cycleforge_core::periodic::PeriodicExtension;
use cycleforge_core::{IndicatorPanel64, LogisticModel64, SampledCurve64, SdfSeries64};

use crate::config::{InterpolantChoice, LogisticSource, RunConfig, WarpSpec};
use crate::error::CliError;
use crate::report::{
    FitSection, InflectionRow, LogisticSection, PeriodicitySection, PhaseRow, Report, SdfRow,
    TimingSection,
};

/// Grid size for the periodicity-deviation check.
const PERIODICITY_GRID: usize = 512;

/// Everything the pipeline produces: the report plus the sampled curve
/// the CSV and SVG emitters consume.
#[derive(Debug, Clone)]
pub struct PipelineOutput {
    pub report: Report,
    pub curve: SampledCurve64,
}

/// Runs the full pipeline. `input_warnings` (for example from CSV
/// ingestion) are carried into the report so it reflects every input
/// anomaly in one place.
pub fn run_pipeline(
    cfg: &RunConfig,
    panel: &IndicatorPanel64,
    input_warnings: &[String],
) -> Result<PipelineOutput, CliError> {
    let mut warnings: Vec<String> = input_warnings.to_vec();

    // validate
    let violations = panel.validate();
    if !violations.is_empty() {
        return Err(CliError::Validation { violations });
    }
    if panel.years().len() < 2 {
        return Err(CliError::Stage {
            stage: "validate",
            message: format!(
                "need at least 2 years of data, got {}",
                panel.years().len()
            ),
        });
    }

    // aggregate
    let series = panel.sdf_series().map_err(|e| CliError::Stage {
        stage: "aggregate",
        message: e.to_string(),
    })?;
    for (year, pillar, value) in series.negative_pillar_entries() {
        warnings.push(format!(
            "negative {pillar} pillar value {value} in year {year}"
        ));
    }

    // interpolate
    let (ts, vs) = series.aggregate_nodes();
    let span = ts[ts.len() - 1] - ts[0];
    if span != cfg.period {
        return Err(CliError::Stage {
            stage: "interpolate",
            message: format!(
                "panel years span {span} but the configured period is {}; \
                 the periodic base must cover exactly one period",
                cfg.period
            ),
        });
    }
    let nodes = NodeSet::new(ts, vs).map_err(|e| CliError::Stage {
        stage: "interpolate",
        message: e.to_string(),
    })?;
    let node_count = nodes.len();
    let interpolant = match cfg.interpolant {
        InterpolantChoice::Lagrange => {
            if node_count >= 12 {
                warnings.push(format!(
                    "{node_count} equispaced nodes is near the polynomial cap; \
                     the interpolant may oscillate (consider piecewise_linear)"
                ));
            }
            Interpolant::lagrange(nodes).map_err(|e| CliError::Stage {
                stage: "interpolate",
                message: e.to_string(),
            })?
        }
        InterpolantChoice::PiecewiseLinear => Interpolant::piecewise_linear(nodes),
    };

    // periodic extension
    let extension = PeriodicExtension::from_interpolant(interpolant).map_err(|e| {
        CliError::Stage {
            stage: "periodic",
            message: e.to_string(),
        }
    })?;
    let calendar_origin = cfg.calendar_origin.unwrap_or_else(|| extension.t0());

    // logistic model
    let (model, fit_section) = build_logistic(cfg, &series, calendar_origin)?;

    // warp
    let warp = match cfg.warp {
        WarpSpec::Affine { scale, offset } => {
            TimeWarp::new(extension, scale, offset).map_err(|e| CliError::Stage {
                stage: "warp",
                message: e.to_string(),
            })?
        }
        WarpSpec::AutoWindow { start, end } => TimeWarp::auto_window(extension, start, end)
            .map_err(|e| CliError::Stage {
                stage: "warp",
                message: e.to_string(),
            })?,
    };

    // composition and sampling
    let cycle = CycleModel::compose(model, warp, calendar_origin);
    let curve = cycle
        .sample(cfg.sampling.start, cfg.sampling.end, cfg.sampling.count)
        .map_err(|e| CliError::Stage {
            stage: "sample",
            message: e.to_string(),
        })?;

    // shape analysis
    let inflection_eps = match cfg.tolerances.inflection_eps {
        Some(eps) => eps,
        None => {
            let d2 = second_differences(curve.ts(), curve.ys()).map_err(|e| CliError::Stage {
                stage: "analysis",
                message: e.to_string(),
            })?;
            // Two noise floors: one relative to the observed second
            // differences, one anchored to capacity. The latter keeps a
            // flat curve (whose d2 is pure rounding noise) from reporting
            // phantom inflections: y-noise of order 1e-9 * capacity maps
            // to d2-noise of that over the squared grid step.
            let h_min = curve
                .ts()
                .windows(2)
                .map(|w| w[1] - w[0])
                .fold(f64::INFINITY, f64::min);
            default_sign_eps(&d2).max(1e-9 * model.capacity() / (h_min * h_min))
        }
    };
    let inflections = curve
        .inflection_points(inflection_eps)
        .map_err(|e| CliError::Stage {
            stage: "analysis",
            message: e.to_string(),
        })?;
    let flat_eps = cfg
        .tolerances
        .flat_eps
        .unwrap_or(1e-9 * model.capacity());
    let phases = curve.phase_segments(flat_eps).map_err(|e| CliError::Stage {
        stage: "analysis",
        message: e.to_string(),
    })?;
    let deviation = cycle
        .periodicity_deviation(cfg.period, PERIODICITY_GRID)
        .map_err(|e| CliError::Stage {
            stage: "analysis",
            message: e.to_string(),
        })?;

    // timing formulas, cross-checked against the bisection oracle
    let timing = timing_section(&model, cfg.tolerances.fraction)?;

    let report = Report {
        sdf: sdf_rows(&series),
        logistic: LogisticSection {
            source: match cfg.logistic {
                LogisticSource::FitFromSeries => "fitted".to_string(),
                LogisticSource::Explicit { .. } => "explicit".to_string(),
            },
            capacity: model.capacity(),
            rate: model.rate(),
            y_init: model.y_init(),
            fit: fit_section,
        },
        timing,
        inflections: inflections
            .iter()
            .map(|&(t, y)| InflectionRow { t, y })
            .collect(),
        phases: phases
            .iter()
            .map(|p| PhaseRow {
                start: p.start,
                end: p.end,
                trend: p.trend.name().to_string(),
            })
            .collect(),
        periodicity: PeriodicitySection {
            period: cfg.period,
            max_deviation: deviation,
        },
        warnings,
    };

    Ok(PipelineOutput { report, curve })
}

fn sdf_rows(series: &SdfSeries64) -> Vec<SdfRow> {
    series
        .years()
        .iter()
        .enumerate()
        .map(|(i, &year)| SdfRow {
            year,
            economic: series.economic()[i],
            social: series.social()[i],
            environmental: series.environmental()[i],
            aggregate: series.aggregate()[i],
        })
        .collect()
}

fn build_logistic(
    cfg: &RunConfig,
    series: &SdfSeries64,
    calendar_origin: f64,
) -> Result<(LogisticModel64, Option<FitSection>), CliError> {
    match cfg.logistic {
        LogisticSource::Explicit {
            capacity,
            rate,
            y_init,
        } => {
            let model =
                LogisticModel64::new(capacity, rate, y_init).map_err(|e| CliError::Stage {
                    stage: "logistic",
                    message: e.to_string(),
                })?;
            Ok((model, None))
        }
        LogisticSource::FitFromSeries => {
            let ts: Vec<f64> = series
                .years()
                .iter()
                .map(|&y| y as f64 - calendar_origin)
                .collect();
            let ys = series.aggregate().to_vec();
            let (model, diag) = fit_logistic(&ts, &ys, None).map_err(|e| match e {
                LogisticError::NoConvergence => CliError::Numerical {
                    stage: "fit",
                    message: e.to_string(),
                },
                _ => CliError::Stage {
                    stage: "fit",
                    message: e.to_string(),
                },
            })?;
            if !diag.converged || diag.degenerate {
                return Err(CliError::Numerical {
                    stage: "fit",
                    message: format!(
                        "fit did not converge to an identifiable model \
                         (residual_norm = {}, iterations = {}, converged = {}, degenerate = {})",
                        diag.residual_norm, diag.iterations, diag.converged, diag.degenerate
                    ),
                });
            }
            Ok((
                model,
                Some(FitSection {
                    residual_norm: diag.residual_norm,
                    iterations: diag.iterations,
                    converged: diag.converged,
                }),
            ))
        }
    }
}

fn timing_section(model: &LogisticModel64, fraction: f64) -> Result<TimingSection, CliError> {
    let numerical = |e: LogisticError| CliError::Numerical {
        stage: "timing",
        message: e.to_string(),
    };

    let doubling_time = model.doubling_time().map_err(numerical)?;
    let doubling_oracle = bisection_crossing(model, 2.0 * model.y_init())?;
    let time_to_fraction = model.time_to_fraction(fraction).map_err(numerical)?;
    let fraction_oracle = bisection_crossing(model, fraction * model.capacity())?;

    Ok(TimingSection {
        doubling_time,
        doubling_oracle_residual: (doubling_time - doubling_oracle).abs(),
        fraction,
        time_to_fraction,
        fraction_oracle_residual: (time_to_fraction - fraction_oracle).abs(),
    })
}

/// Independent check of the closed-form timing formulas: brackets the
/// crossing `y(t) = target` by doubling, then bisects.
fn bisection_crossing(model: &LogisticModel64, target: f64) -> Result<f64, CliError> {
    let mut hi = 1.0;
    while model.eval(hi) <= target {
        hi *= 2.0;
        if hi > 1e12 {
            return Err(CliError::Numerical {
                stage: "timing",
                message: format!("crossing y(t) = {target} not bracketable"),
            });
        }
    }
    let bracket = Bracket::new(-1e-9, hi).map_err(|e| CliError::Numerical {
        stage: "timing",
        message: e.to_string(),
    })?;
    find_root(|t| model.eval(t) - target, bracket, 1e-12).map_err(|e| CliError::Numerical {
        stage: "timing",
        message: e.to_string(),
    })
}
