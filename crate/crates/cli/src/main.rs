//! `cycleforge`: composite sustainability indices, interpolation,
//! periodic extension, logistic fitting, and long-cycle curve analysis.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cycleforge_cli::config::{load_config, RunConfig};
use cycleforge_cli::error::CliError;
use cycleforge_cli::ingest::{ingest_csv, ingest_csv_unchecked};
use cycleforge_cli::output::{emit_curve_csv, sdf_csv, write_atomic};
use cycleforge_cli::pipeline::run_pipeline;
use cycleforge_cli::svg::emit_svg;
use cycleforge_core::logistic::fit_logistic;
use cycleforge_core::IndicatorPanel64;

#[derive(Parser)]
#[command(
    name = "cycleforge",
    version,
    about = "Sustainable-development long-cycle analysis",
    long_about = "Ingests an indicator CSV and a JSON run configuration, aggregates the \
                  indicators into a sustainability index, interpolates and periodically \
                  extends it, fits or accepts a logistic growth model, composes both into \
                  a cycle curve, and reports its timing and shape."
)]
struct Cli {
    /// Run configuration (JSON). Falls back to $CYCLEFORGE_CONFIG.
    #[arg(long, global = true, env = "CYCLEFORGE_CONFIG", value_name = "PATH")]
    config: Option<PathBuf>,

    /// Indicator data (CSV, header `year,indicator_id,value,weight`).
    #[arg(long, global = true, value_name = "PATH")]
    data: Option<PathBuf>,

    /// Directory for emitted files.
    #[arg(long, global = true, default_value = ".", value_name = "DIR")]
    out_dir: PathBuf,

    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Suppress normal stdout output (errors still go to stderr).
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the indicator panel against every invariant and list all
    /// violations.
    Validate,
    /// Compute the per-year pillar values and aggregate index.
    Aggregate,
    /// Fit a logistic growth model to the aggregate series.
    Fit,
    /// Compose the cycle curve and emit curve CSV and SVG.
    Cycle,
    /// Run the full pipeline and emit report, curve CSV and SVG.
    Report,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let config_path = cli.config.as_deref().ok_or_else(|| CliError::Schema {
        field: "--config".to_string(),
        message: "no config given (flag --config or env CYCLEFORGE_CONFIG)".to_string(),
    })?;
    let cfg = load_config(config_path)?;
    let data_path = cli.data.as_deref().ok_or_else(|| CliError::Schema {
        field: "--data".to_string(),
        message: "no data file given (flag --data)".to_string(),
    })?;

    match cli.command {
        Command::Validate => cmd_validate(cli, &cfg, data_path),
        Command::Aggregate => cmd_aggregate(cli, &cfg, data_path),
        Command::Fit => cmd_fit(cli, &cfg, data_path),
        Command::Cycle => cmd_cycle(cli, &cfg, data_path),
        Command::Report => cmd_report(cli, &cfg, data_path),
    }
}

fn say(cli: &Cli, text: &str) {
    if !cli.quiet {
        println!("{text}");
    }
}

fn ingest(cfg: &RunConfig, data: &Path) -> Result<(IndicatorPanel64, Vec<String>), CliError> {
    ingest_csv(data, cfg.base_year, &cfg.indicators)
}

fn cmd_validate(cli: &Cli, cfg: &RunConfig, data: &Path) -> Result<(), CliError> {
    let (panel, warnings) = ingest_csv_unchecked(data, cfg.base_year, &cfg.indicators)?;
    let violations = panel.validate();
    for w in &warnings {
        say(cli, &format!("warning: {w}"));
    }
    if violations.is_empty() {
        say(
            cli,
            &format!(
                "panel valid: {} indicators, {} years",
                panel.defs().len(),
                panel.years().len()
            ),
        );
        Ok(())
    } else {
        Err(CliError::Validation { violations })
    }
}

fn cmd_aggregate(cli: &Cli, cfg: &RunConfig, data: &Path) -> Result<(), CliError> {
    let (panel, _) = ingest(cfg, data)?;
    let series = panel.sdf_series().map_err(|e| CliError::Stage {
        stage: "aggregate",
        message: e.to_string(),
    })?;
    let rows: Vec<cycleforge_cli::report::SdfRow> = series
        .years()
        .iter()
        .enumerate()
        .map(|(i, &year)| cycleforge_cli::report::SdfRow {
            year,
            economic: series.economic()[i],
            social: series.social()[i],
            environmental: series.environmental()[i],
            aggregate: series.aggregate()[i],
        })
        .collect();
    if cli.json {
        say(
            cli,
            &serde_json::to_string_pretty(&rows).expect("rows serialize"),
        );
    } else {
        say(cli, sdf_csv(&rows).trim_end());
    }
    Ok(())
}

fn cmd_fit(cli: &Cli, cfg: &RunConfig, data: &Path) -> Result<(), CliError> {
    let (panel, _) = ingest(cfg, data)?;
    let series = panel.sdf_series().map_err(|e| CliError::Stage {
        stage: "aggregate",
        message: e.to_string(),
    })?;
    let origin = cfg
        .calendar_origin
        .unwrap_or_else(|| panel.years()[0] as f64);
    let ts: Vec<f64> = series
        .years()
        .iter()
        .map(|&y| y as f64 - origin)
        .collect();
    let (model, diag) = fit_logistic(&ts, series.aggregate(), None).map_err(|e| {
        CliError::Numerical {
            stage: "fit",
            message: e.to_string(),
        }
    })?;
    if cli.json {
        let value = serde_json::json!({
            "capacity": model.capacity(),
            "rate": model.rate(),
            "y_init": model.y_init(),
            "residual_norm": diag.residual_norm,
            "iterations": diag.iterations,
            "converged": diag.converged,
            "degenerate": diag.degenerate,
        });
        say(cli, &serde_json::to_string_pretty(&value).expect("serializes"));
    } else {
        say(
            cli,
            &format!(
                "capacity = {}\nrate = {}\ny_init = {}\nresidual_norm = {}\n\
                 iterations = {}\nconverged = {}\ndegenerate = {}",
                model.capacity(),
                model.rate(),
                model.y_init(),
                diag.residual_norm,
                diag.iterations,
                diag.converged,
                diag.degenerate
            ),
        );
    }
    if !diag.converged || diag.degenerate {
        return Err(CliError::Numerical {
            stage: "fit",
            message: "fit did not converge to an identifiable model".to_string(),
        });
    }
    Ok(())
}

fn ensure_out_dir(dir: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    })
}

fn cmd_cycle(cli: &Cli, cfg: &RunConfig, data: &Path) -> Result<(), CliError> {
    let (panel, warnings) = ingest(cfg, data)?;
    let out = run_pipeline(cfg, &panel, &warnings)?;
    ensure_out_dir(&cli.out_dir)?;
    let csv_path = cli.out_dir.join(&cfg.output.curve_csv);
    let svg_path = cli.out_dir.join(&cfg.output.svg);
    let markers: Vec<(f64, f64)> = out.report.inflections.iter().map(|p| (p.t, p.y)).collect();
    emit_curve_csv(&out.curve, &csv_path)?;
    emit_svg(&out.curve, &markers, &svg_path)?;
    say(
        cli,
        &format!(
            "wrote {} ({} samples) and {} ({} inflection markers)",
            csv_path.display(),
            out.curve.len(),
            svg_path.display(),
            markers.len()
        ),
    );
    Ok(())
}

fn cmd_report(cli: &Cli, cfg: &RunConfig, data: &Path) -> Result<(), CliError> {
    let (panel, warnings) = ingest(cfg, data)?;
    let out = run_pipeline(cfg, &panel, &warnings)?;
    ensure_out_dir(&cli.out_dir)?;

    let rendered = if cli.json {
        out.report.render_json()
    } else {
        out.report.render_text()
    };
    let report_name = if cli.json {
        Path::new(&cfg.output.report)
            .with_extension("json")
            .to_string_lossy()
            .into_owned()
    } else {
        cfg.output.report.clone()
    };
    let report_path = cli.out_dir.join(report_name);
    write_atomic(&report_path, rendered.as_bytes())?;

    let csv_path = cli.out_dir.join(&cfg.output.curve_csv);
    let svg_path = cli.out_dir.join(&cfg.output.svg);
    let markers: Vec<(f64, f64)> = out.report.inflections.iter().map(|p| (p.t, p.y)).collect();
    emit_curve_csv(&out.curve, &csv_path)?;
    emit_svg(&out.curve, &markers, &svg_path)?;

    if !cli.quiet {
        print!("{rendered}");
    }
    Ok(())
}
