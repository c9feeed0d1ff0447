//! The analysis report: every number in it comes from one core-module
//! call, and rendering is deterministic (shortest round-trip floats,
//! stable ordering), so identical inputs produce byte-identical output.

use serde::Serialize;

/// Full pipeline report.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Report {
    pub sdf: Vec<SdfRow>,
    pub logistic: LogisticSection,
    pub timing: TimingSection,
    pub inflections: Vec<InflectionRow>,
    pub phases: Vec<PhaseRow>,
    pub periodicity: PeriodicitySection,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct SdfRow {
    pub year: i32,
    pub economic: f64,
    pub social: f64,
    pub environmental: f64,
    pub aggregate: f64,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct LogisticSection {
    /// `"fitted"` or `"explicit"`.
    pub source: String,
    pub capacity: f64,
    pub rate: f64,
    pub y_init: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fit: Option<FitSection>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct FitSection {
    pub residual_norm: f64,
    pub iterations: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct TimingSection {
    pub doubling_time: f64,
    /// |closed form - bisection oracle|.
    pub doubling_oracle_residual: f64,
    pub fraction: f64,
    pub time_to_fraction: f64,
    pub fraction_oracle_residual: f64,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct InflectionRow {
    pub t: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct PhaseRow {
    pub start: f64,
    pub end: f64,
    pub trend: String,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct PeriodicitySection {
    pub period: f64,
    pub max_deviation: f64,
}

impl Report {
    /// Plain-text rendering; floats use shortest round-trip decimals.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str("cycleforge report\n");
        out.push_str("=================\n\n");

        out.push_str("sustainable development function\n");
        out.push_str("year economic social environmental aggregate\n");
        for row in &self.sdf {
            out.push_str(&format!(
                "{} {} {} {} {}\n",
                row.year, row.economic, row.social, row.environmental, row.aggregate
            ));
        }
        out.push('\n');

        out.push_str(&format!("logistic model ({})\n", self.logistic.source));
        out.push_str(&format!("capacity = {}\n", self.logistic.capacity));
        out.push_str(&format!("rate = {}\n", self.logistic.rate));
        out.push_str(&format!("y_init = {}\n", self.logistic.y_init));
        if let Some(fit) = &self.logistic.fit {
            out.push_str(&format!(
                "fit: residual_norm = {}, iterations = {}, converged = {}\n",
                fit.residual_norm, fit.iterations, fit.converged
            ));
        }
        out.push('\n');

        out.push_str("timing\n");
        out.push_str(&format!(
            "doubling_time = {} (oracle residual {})\n",
            self.timing.doubling_time, self.timing.doubling_oracle_residual
        ));
        out.push_str(&format!(
            "time_to_fraction({}) = {} (oracle residual {})\n",
            self.timing.fraction, self.timing.time_to_fraction, self.timing.fraction_oracle_residual
        ));
        out.push('\n');

        out.push_str(&format!("inflections ({})\n", self.inflections.len()));
        for p in &self.inflections {
            out.push_str(&format!("t = {}, y = {}\n", p.t, p.y));
        }
        out.push('\n');

        out.push_str(&format!("phases ({})\n", self.phases.len()));
        for p in &self.phases {
            out.push_str(&format!("[{}, {}] {}\n", p.start, p.end, p.trend));
        }
        out.push('\n');

        out.push_str("periodicity\n");
        out.push_str(&format!(
            "period = {}, max deviation over one period = {}\n",
            self.periodicity.period, self.periodicity.max_deviation
        ));
        out.push('\n');

        out.push_str(&format!("warnings ({})\n", self.warnings.len()));
        for w in &self.warnings {
            out.push_str(&format!("- {w}\n"));
        }
        out
    }

    /// Pretty-printed JSON rendering with stable field order.
    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
