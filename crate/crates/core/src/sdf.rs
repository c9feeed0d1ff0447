//! The sustainable-development function: weighted, decimal-scaled
//! indicator panels aggregated into three pillar scores and their mean.
//!
//! Each pillar value at year `t` is the arithmetic mean over its
//! indicators of `orientation * weight(t) * value(t) * 10^scale_exponent`.
//! The scalar aggregate is the mean of the three pillar values.
//!
//! Panels are constructed leniently; [`IndicatorPanel::validate`] reports
//! every invariant violation instead of failing on the first, so callers
//! can show a complete diagnosis of a bad dataset.

use std::collections::BTreeMap;
use std::fmt;

use crate::real::{lit, to_f64, Real};

/// The three sustainability pillars.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pillar {
    Economic,
    Social,
    Environmental,
}

impl Pillar {
    pub const ALL: [Pillar; 3] = [Pillar::Economic, Pillar::Social, Pillar::Environmental];

    pub fn name(&self) -> &'static str {
        match self {
            Pillar::Economic => "economic",
            Pillar::Social => "social",
            Pillar::Environmental => "environmental",
        }
    }
}

impl fmt::Display for Pillar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Whether an indicator contributes positively or negatively to its
/// pillar. Harmful indicators (emissions, noise) enter with sign -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Benefit,
    Harm,
}

impl Orientation {
    pub fn sign<R: Real>(self) -> R {
        match self {
            Orientation::Benefit => R::one(),
            Orientation::Harm => -R::one(),
        }
    }

    /// Parses `+1` / `-1`.
    pub fn from_sign(sign: i32) -> Option<Self> {
        match sign {
            1 => Some(Orientation::Benefit),
            -1 => Some(Orientation::Harm),
            _ => None,
        }
    }

    pub fn as_sign(self) -> i32 {
        match self {
            Orientation::Benefit => 1,
            Orientation::Harm => -1,
        }
    }
}

/// Static description of one indicator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicatorDef {
    pub id: String,
    pub pillar: Pillar,
    pub orientation: Orientation,
    /// Exponent of the per-indicator decimal scale factor `10^k`,
    /// expected in `[-12, 12]`.
    pub scale_exponent: i32,
    pub description: String,
}

impl IndicatorDef {
    pub fn new(id: &str, pillar: Pillar, orientation: Orientation, scale_exponent: i32) -> Self {
        IndicatorDef {
            id: id.to_string(),
            pillar,
            orientation,
            scale_exponent,
            description: String::new(),
        }
    }

    pub fn with_description(mut self, description: &str) -> Self {
        self.description = description.to_string();
        self
    }
}

/// Allowed range of [`IndicatorDef::scale_exponent`].
pub const SCALE_EXPONENT_RANGE: (i32, i32) = (-12, 12);

/// One violation found by [`IndicatorPanel::validate`].
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    MissingValue { id: String, year: i32 },
    MissingWeight { id: String, year: i32 },
    EmptyPillar { pillar: Pillar },
    NegativeValue { id: String, year: i32, value: f64 },
    NegativeWeight { id: String, year: i32, weight: f64 },
    ExponentOutOfRange { id: String, exponent: i32 },
    YearBeforeBase { year: i32, base_year: i32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingValue { id, year } => {
                write!(f, "missing value for indicator '{id}' in year {year}")
            }
            Violation::MissingWeight { id, year } => {
                write!(f, "missing weight for indicator '{id}' in year {year}")
            }
            Violation::EmptyPillar { pillar } => {
                write!(f, "pillar '{pillar}' has no indicators")
            }
            Violation::NegativeValue { id, year, value } => {
                write!(f, "negative value {value} for indicator '{id}' in year {year}")
            }
            Violation::NegativeWeight { id, year, weight } => {
                write!(f, "negative weight {weight} for indicator '{id}' in year {year}")
            }
            Violation::ExponentOutOfRange { id, exponent } => write!(
                f,
                "scale exponent {exponent} for indicator '{id}' outside [-12, 12]"
            ),
            Violation::YearBeforeBase { year, base_year } => {
                write!(f, "year {year} precedes the base year {base_year}")
            }
        }
    }
}

/// Errors from panel construction and evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum SdfError {
    EmptyIndicatorId,
    DuplicateIndicator { id: String },
    UnknownIndicator { id: String },
    UnknownYear { year: i32 },
    EmptyPillar { pillar: Pillar },
    MissingValue { id: String, year: i32 },
    MissingWeight { id: String, year: i32 },
}

impl fmt::Display for SdfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SdfError::EmptyIndicatorId => write!(f, "indicator id must be nonempty"),
            SdfError::DuplicateIndicator { id } => {
                write!(f, "duplicate indicator id '{id}'")
            }
            SdfError::UnknownIndicator { id } => {
                write!(f, "indicator '{id}' is not defined in the panel")
            }
            SdfError::UnknownYear { year } => {
                write!(f, "year {year} has no data in the panel")
            }
            SdfError::EmptyPillar { pillar } => {
                write!(f, "pillar '{pillar}' has no indicators")
            }
            SdfError::MissingValue { id, year } => {
                write!(f, "missing value for indicator '{id}' in year {year}")
            }
            SdfError::MissingWeight { id, year } => {
                write!(f, "missing weight for indicator '{id}' in year {year}")
            }
        }
    }
}

impl std::error::Error for SdfError {}

/// Time-indexed indicator values and weights grouped into pillars.
#[derive(Debug, Clone, PartialEq)]
pub struct IndicatorPanel<R: Real> {
    base_year: i32,
    years: Vec<i32>,
    defs: Vec<IndicatorDef>,
    values: BTreeMap<(String, i32), R>,
    weights: BTreeMap<(String, i32), R>,
}

impl<R: Real> IndicatorPanel<R> {
    /// Creates an empty panel. Ids must be nonempty and unique; everything
    /// else (completeness, value ranges, exponents) is checked by
    /// [`IndicatorPanel::validate`] so that one pass reports all problems.
    pub fn new(base_year: i32, defs: Vec<IndicatorDef>) -> Result<Self, SdfError> {
        let mut seen = std::collections::BTreeSet::new();
        for def in &defs {
            if def.id.is_empty() {
                return Err(SdfError::EmptyIndicatorId);
            }
            if !seen.insert(def.id.clone()) {
                return Err(SdfError::DuplicateIndicator { id: def.id.clone() });
            }
        }
        Ok(IndicatorPanel {
            base_year,
            years: Vec::new(),
            defs,
            values: BTreeMap::new(),
            weights: BTreeMap::new(),
        })
    }

    /// Records the value and weight of one indicator for one year.
    pub fn insert(&mut self, id: &str, year: i32, value: R, weight: R) -> Result<(), SdfError> {
        if !self.defs.iter().any(|d| d.id == id) {
            return Err(SdfError::UnknownIndicator { id: id.to_string() });
        }
        if let Err(pos) = self.years.binary_search(&year) {
            self.years.insert(pos, year);
        }
        self.values.insert((id.to_string(), year), value);
        self.weights.insert((id.to_string(), year), weight);
        Ok(())
    }

    pub fn base_year(&self) -> i32 {
        self.base_year
    }

    /// Years with data, sorted ascending.
    pub fn years(&self) -> &[i32] {
        &self.years
    }

    pub fn defs(&self) -> &[IndicatorDef] {
        &self.defs
    }

    pub fn value(&self, id: &str, year: i32) -> Option<R> {
        self.values.get(&(id.to_string(), year)).copied()
    }

    pub fn weight(&self, id: &str, year: i32) -> Option<R> {
        self.weights.get(&(id.to_string(), year)).copied()
    }

    fn pillar_defs(&self, pillar: Pillar) -> Vec<&IndicatorDef> {
        let mut defs: Vec<&IndicatorDef> =
            self.defs.iter().filter(|d| d.pillar == pillar).collect();
        // Sort by id so the summation order (and hence the floating-point
        // result) does not depend on definition order.
        defs.sort_by(|a, b| a.id.cmp(&b.id));
        defs
    }

    /// Mean over the pillar's indicators of
    /// `orientation * weight(t) * value(t) * 10^scale_exponent`.
    pub fn pillar_value(&self, pillar: Pillar, year: i32) -> Result<R, SdfError> {
        if self.years.binary_search(&year).is_err() {
            return Err(SdfError::UnknownYear { year });
        }
        let defs = self.pillar_defs(pillar);
        if defs.is_empty() {
            return Err(SdfError::EmptyPillar { pillar });
        }
        let ten = lit::<R>(10.0);
        let mut sum = R::zero();
        for def in &defs {
            let key = (def.id.clone(), year);
            let value = self
                .values
                .get(&key)
                .copied()
                .ok_or_else(|| SdfError::MissingValue {
                    id: def.id.clone(),
                    year,
                })?;
            let weight = self
                .weights
                .get(&key)
                .copied()
                .ok_or_else(|| SdfError::MissingWeight {
                    id: def.id.clone(),
                    year,
                })?;
            sum = sum + def.orientation.sign::<R>() * weight * value * ten.powi(def.scale_exponent);
        }
        Ok(sum / lit::<R>(defs.len() as f64))
    }

    /// The three pillar values `(economic, social, environmental)` at one
    /// year.
    pub fn sdf_vector(&self, year: i32) -> Result<(R, R, R), SdfError> {
        Ok((
            self.pillar_value(Pillar::Economic, year)?,
            self.pillar_value(Pillar::Social, year)?,
            self.pillar_value(Pillar::Environmental, year)?,
        ))
    }

    /// The scalar aggregate: the arithmetic mean of the three pillar
    /// values at one year.
    pub fn sdf_aggregate(&self, year: i32) -> Result<R, SdfError> {
        let (f1, f2, f3) = self.sdf_vector(year)?;
        Ok((f1 + f2 + f3) / lit::<R>(3.0))
    }

    /// Evaluates the panel over all of its years.
    pub fn sdf_series(&self) -> Result<SdfSeries<R>, SdfError> {
        let mut series = SdfSeries {
            years: Vec::with_capacity(self.years.len()),
            f1: Vec::with_capacity(self.years.len()),
            f2: Vec::with_capacity(self.years.len()),
            f3: Vec::with_capacity(self.years.len()),
            f_agg: Vec::with_capacity(self.years.len()),
        };
        for &year in &self.years {
            let (f1, f2, f3) = self.sdf_vector(year)?;
            series.years.push(year);
            series.f1.push(f1);
            series.f2.push(f2);
            series.f3.push(f3);
            series.f_agg.push((f1 + f2 + f3) / lit::<R>(3.0));
        }
        Ok(series)
    }

    /// Checks every panel invariant and returns all violations found;
    /// an empty list means the panel is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for pillar in Pillar::ALL {
            if !self.defs.iter().any(|d| d.pillar == pillar) {
                out.push(Violation::EmptyPillar { pillar });
            }
        }
        for def in &self.defs {
            if def.scale_exponent < SCALE_EXPONENT_RANGE.0
                || def.scale_exponent > SCALE_EXPONENT_RANGE.1
            {
                out.push(Violation::ExponentOutOfRange {
                    id: def.id.clone(),
                    exponent: def.scale_exponent,
                });
            }
        }
        for &year in &self.years {
            if year < self.base_year {
                out.push(Violation::YearBeforeBase {
                    year,
                    base_year: self.base_year,
                });
            }
        }
        for def in &self.defs {
            for &year in &self.years {
                let key = (def.id.clone(), year);
                match self.values.get(&key) {
                    None => out.push(Violation::MissingValue {
                        id: def.id.clone(),
                        year,
                    }),
                    Some(&v) if v < R::zero() => out.push(Violation::NegativeValue {
                        id: def.id.clone(),
                        year,
                        value: to_f64(v),
                    }),
                    Some(_) => {}
                }
                match self.weights.get(&key) {
                    None => out.push(Violation::MissingWeight {
                        id: def.id.clone(),
                        year,
                    }),
                    Some(&w) if w < R::zero() => out.push(Violation::NegativeWeight {
                        id: def.id.clone(),
                        year,
                        weight: to_f64(w),
                    }),
                    Some(_) => {}
                }
            }
        }
        out
    }
}

/// The evaluated sustainable-development function over a year range.
#[derive(Debug, Clone, PartialEq)]
pub struct SdfSeries<R: Real> {
    years: Vec<i32>,
    f1: Vec<R>,
    f2: Vec<R>,
    f3: Vec<R>,
    f_agg: Vec<R>,
}

impl<R: Real> SdfSeries<R> {
    pub fn years(&self) -> &[i32] {
        &self.years
    }

    pub fn economic(&self) -> &[R] {
        &self.f1
    }

    pub fn social(&self) -> &[R] {
        &self.f2
    }

    pub fn environmental(&self) -> &[R] {
        &self.f3
    }

    pub fn aggregate(&self) -> &[R] {
        &self.f_agg
    }

    pub fn len(&self) -> usize {
        self.years.len()
    }

    pub fn is_empty(&self) -> bool {
        self.years.is_empty()
    }

    /// `(years as scalars, aggregate values)`, the node data for
    /// interpolating the aggregate over time.
    pub fn aggregate_nodes(&self) -> (Vec<R>, Vec<R>) {
        let ts = self
            .years
            .iter()
            .map(|&y| R::from_i32(y).expect("year fits in scalar"))
            .collect();
        (ts, self.f_agg.clone())
    }

    /// Entries where a pillar value is negative. Negative pillar values
    /// are representable (harmful indicators can dominate) but worth a
    /// warning, since the aggregate is conventionally non-negative.
    pub fn negative_pillar_entries(&self) -> Vec<(i32, Pillar, f64)> {
        let mut out = Vec::new();
        for (i, &year) in self.years.iter().enumerate() {
            for (pillar, series) in [
                (Pillar::Economic, &self.f1),
                (Pillar::Social, &self.f2),
                (Pillar::Environmental, &self.f3),
            ] {
                if series[i] < R::zero() {
                    out.push((year, pillar, to_f64(series[i])));
                }
            }
        }
        out
    }
}

/// Suggests a decimal scale exponent that lands `max_value * 10^k` in
/// `[0, 10)`: `k = -floor(log10(max_value))`, zero for non-positive input.
pub fn suggest_scale_exponent<R: Real>(max_value: R) -> i32 {
    if !(max_value > R::zero()) || !max_value.is_finite() {
        return 0;
    }
    let k = -max_value.log10().floor();
    k.to_i32().unwrap_or(0).clamp(SCALE_EXPONENT_RANGE.0, SCALE_EXPONENT_RANGE.1)
}

/// The documented catalog of indicator presets: nine economic ratios, two
/// social expense indicators, and nine environmental indicators (five
/// renewable-resource shares plus four harm-oriented load measures).
///
/// These are presets only; the aggregation treats every indicator
/// uniformly, and callers are free to define their own.
pub fn indicator_catalog() -> Vec<IndicatorDef> {
    use Orientation::{Benefit, Harm};
    use Pillar::{Economic, Environmental, Social};
    vec![
        IndicatorDef::new("global_settlement", Economic, Benefit, 0)
            .with_description("indicator of global settlement"),
        IndicatorDef::new("quick_ratio", Economic, Benefit, 0)
            .with_description("indicator of quick ratio"),
        IndicatorDef::new("capital_employed_profitability", Economic, Benefit, 0)
            .with_description("profitability of the capital employed"),
        IndicatorDef::new("gross_margin_sales", Economic, Benefit, 0)
            .with_description("gross margin on sales"),
        IndicatorDef::new("economic_profitability", Economic, Benefit, 0)
            .with_description("indicator of economic profitability"),
        IndicatorDef::new("production_cost_efficiency", Economic, Benefit, 0)
            .with_description("efficiency of production costs"),
        IndicatorDef::new("wage_share_in_costs", Economic, Benefit, 0)
            .with_description("share of wages in costs"),
        IndicatorDef::new("total_cost_efficiency_rate", Economic, Benefit, 0)
            .with_description("efficiency rate of the total costs"),
        IndicatorDef::new("production_capacity_use", Economic, Benefit, 0)
            .with_description("efficiency of using production capacity"),
        IndicatorDef::new("social_insurance_expenses", Social, Benefit, 0)
            .with_description("expenses with insurance and social protection"),
        IndicatorDef::new("protective_equipment_expenses", Social, Benefit, 0)
            .with_description("expenses for equipment and protective materials"),
        IndicatorDef::new("renewable_wind", Environmental, Benefit, 0)
            .with_description("renewable resource use: wind"),
        IndicatorDef::new("renewable_solar", Environmental, Benefit, 0)
            .with_description("renewable resource use: solar"),
        IndicatorDef::new("renewable_hydro", Environmental, Benefit, 0)
            .with_description("renewable resource use: hydro"),
        IndicatorDef::new("renewable_biomass", Environmental, Benefit, 0)
            .with_description("renewable resource use: biomass"),
        IndicatorDef::new("renewable_geothermal", Environmental, Benefit, 0)
            .with_description("renewable resource use: geothermal"),
        IndicatorDef::new("noxious_exposure_frequency", Environmental, Harm, 0)
            .with_description("frequency index of exposure to noxious agents"),
        IndicatorDef::new("pollutant_emissions", Environmental, Harm, 0)
            .with_description("amount of pollutant emissions into the atmosphere"),
        IndicatorDef::new("emissions_quantity", Environmental, Harm, 0)
            .with_description("quantity of emissions per year (ozone or warming relevant)"),
        IndicatorDef::new("work_environment_load", Environmental, Harm, 0)
            .with_description("work environment load: noise, vibration, radiation, heat"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_indicator_panel(value: f64, weight: f64, exponent: i32) -> IndicatorPanel<f64> {
        let defs = vec![
            IndicatorDef::new("e1", Pillar::Economic, Orientation::Benefit, exponent),
            IndicatorDef::new("s1", Pillar::Social, Orientation::Benefit, 0),
            IndicatorDef::new("v1", Pillar::Environmental, Orientation::Benefit, 0),
        ];
        let mut panel = IndicatorPanel::new(2010, defs).unwrap();
        panel.insert("e1", 2010, value, weight).unwrap();
        panel.insert("s1", 2010, 0.0, 1.0).unwrap();
        panel.insert("v1", 2010, 0.0, 1.0).unwrap();
        panel
    }

    #[test]
    fn pillar_value_identity_weights() {
        let panel = single_indicator_panel(0.5, 1.0, 0);
        assert_eq!(panel.pillar_value(Pillar::Economic, 2010).unwrap(), 0.5);
    }

    #[test]
    fn pillar_value_mean_of_two() {
        let defs = vec![
            IndicatorDef::new("a", Pillar::Economic, Orientation::Benefit, 0),
            IndicatorDef::new("b", Pillar::Economic, Orientation::Benefit, 0),
            IndicatorDef::new("s", Pillar::Social, Orientation::Benefit, 0),
            IndicatorDef::new("v", Pillar::Environmental, Orientation::Benefit, 0),
        ];
        let mut panel = IndicatorPanel::<f64>::new(2010, defs).unwrap();
        panel.insert("a", 2010, 0.4, 1.0).unwrap();
        panel.insert("b", 2010, 0.6, 1.0).unwrap();
        panel.insert("s", 2010, 0.0, 1.0).unwrap();
        panel.insert("v", 2010, 0.0, 1.0).unwrap();
        assert_eq!(panel.pillar_value(Pillar::Economic, 2010).unwrap(), 0.5);
    }

    #[test]
    fn pillar_value_decimal_shift() {
        let panel = single_indicator_panel(1234.0, 1.0, -3);
        assert!((panel.pillar_value(Pillar::Economic, 2010).unwrap() - 1.234).abs() <= 1e-12);
    }

    #[test]
    fn sdf_vector_examples() {
        let defs = vec![
            IndicatorDef::new("e", Pillar::Economic, Orientation::Benefit, 0),
            IndicatorDef::new("s", Pillar::Social, Orientation::Benefit, 0),
            IndicatorDef::new("v", Pillar::Environmental, Orientation::Benefit, 0),
        ];
        let mut panel = IndicatorPanel::<f64>::new(2010, defs).unwrap();
        panel.insert("e", 2010, 3.0, 1.0).unwrap();
        panel.insert("s", 2010, 6.0, 1.0).unwrap();
        panel.insert("v", 2010, 9.0, 1.0).unwrap();
        assert_eq!(panel.sdf_vector(2010).unwrap(), (3.0, 6.0, 9.0));
        assert_eq!(panel.sdf_aggregate(2010).unwrap(), 6.0);
    }

    #[test]
    fn sdf_vector_mixed_counts() {
        let defs = vec![
            IndicatorDef::new("e1", Pillar::Economic, Orientation::Benefit, 0),
            IndicatorDef::new("e2", Pillar::Economic, Orientation::Benefit, 0),
            IndicatorDef::new("s", Pillar::Social, Orientation::Benefit, 0),
            IndicatorDef::new("v", Pillar::Environmental, Orientation::Benefit, 0),
        ];
        let mut panel = IndicatorPanel::<f64>::new(2010, defs).unwrap();
        panel.insert("e1", 2010, 2.0, 1.0).unwrap();
        panel.insert("e2", 2010, 4.0, 1.0).unwrap();
        panel.insert("s", 2010, 5.0, 1.0).unwrap();
        panel.insert("v", 2010, 7.0, 1.0).unwrap();
        assert_eq!(panel.sdf_vector(2010).unwrap(), (3.0, 5.0, 7.0));
        assert_eq!(panel.sdf_aggregate(2010).unwrap(), 5.0);
    }

    #[test]
    fn zero_values_give_zero_vector() {
        let panel = single_indicator_panel(0.0, 1.0, 0);
        assert_eq!(panel.sdf_vector(2010).unwrap(), (0.0, 0.0, 0.0));
        assert_eq!(panel.sdf_aggregate(2010).unwrap(), 0.0);
    }

    #[test]
    fn single_year_series_matches_vector() {
        let panel = single_indicator_panel(0.5, 1.0, 0);
        let series = panel.sdf_series().unwrap();
        assert_eq!(series.len(), 1);
        let (f1, f2, f3) = panel.sdf_vector(2010).unwrap();
        assert_eq!(series.economic(), &[f1]);
        assert_eq!(series.social(), &[f2]);
        assert_eq!(series.environmental(), &[f3]);
        assert_eq!(series.aggregate(), &[panel.sdf_aggregate(2010).unwrap()]);
    }

    #[test]
    fn series_matches_per_year_calls() {
        let defs = vec![
            IndicatorDef::new("e", Pillar::Economic, Orientation::Benefit, 0),
            IndicatorDef::new("s", Pillar::Social, Orientation::Benefit, 0),
            IndicatorDef::new("v", Pillar::Environmental, Orientation::Benefit, 0),
        ];
        let mut panel = IndicatorPanel::<f64>::new(2010, defs).unwrap();
        for (i, year) in (2010..=2020).enumerate() {
            let v = 2.0f64.powi(i as i32);
            panel.insert("e", year, v, 1.0).unwrap();
            panel.insert("s", year, v, 1.0).unwrap();
            panel.insert("v", year, v, 1.0).unwrap();
        }
        let series = panel.sdf_series().unwrap();
        assert_eq!(series.len(), 11);
        for (i, &year) in series.years().iter().enumerate() {
            assert_eq!(series.aggregate()[i], panel.sdf_aggregate(year).unwrap());
        }
        // Values double each year, so the aggregate does too.
        for i in 1..series.len() {
            assert!(
                (series.aggregate()[i] / series.aggregate()[i - 1] - 2.0).abs() <= 1e-12
            );
        }
    }

    #[test]
    fn unknown_year_and_empty_pillar_errors() {
        let panel = single_indicator_panel(1.0, 1.0, 0);
        assert_eq!(
            panel.pillar_value(Pillar::Economic, 2011),
            Err(SdfError::UnknownYear { year: 2011 })
        );

        let defs = vec![IndicatorDef::new(
            "e",
            Pillar::Economic,
            Orientation::Benefit,
            0,
        )];
        let mut panel = IndicatorPanel::<f64>::new(2010, defs).unwrap();
        panel.insert("e", 2010, 1.0, 1.0).unwrap();
        assert_eq!(
            panel.pillar_value(Pillar::Social, 2010),
            Err(SdfError::EmptyPillar { pillar: Pillar::Social })
        );
    }

    #[test]
    fn validate_full_panel_is_clean() {
        let panel = single_indicator_panel(1.0, 1.0, 0);
        assert!(panel.validate().is_empty());
    }

    #[test]
    fn validate_reports_missing_value() {
        let defs = vec![
            IndicatorDef::new("e", Pillar::Economic, Orientation::Benefit, 0),
            IndicatorDef::new("s", Pillar::Social, Orientation::Benefit, 0),
            IndicatorDef::new("v", Pillar::Environmental, Orientation::Benefit, 0),
        ];
        let mut panel = IndicatorPanel::<f64>::new(2010, defs).unwrap();
        panel.insert("e", 2010, 1.0, 1.0).unwrap();
        panel.insert("s", 2010, 1.0, 1.0).unwrap();
        panel.insert("v", 2010, 1.0, 1.0).unwrap();
        panel.insert("e", 2011, 1.0, 1.0).unwrap();
        panel.insert("s", 2011, 1.0, 1.0).unwrap();
        let violations = panel.validate();
        assert!(violations.contains(&Violation::MissingValue {
            id: "v".to_string(),
            year: 2011
        }));
    }

    #[test]
    fn validate_reports_empty_pillar() {
        let defs = vec![
            IndicatorDef::new("e", Pillar::Economic, Orientation::Benefit, 0),
            IndicatorDef::new("s", Pillar::Social, Orientation::Benefit, 0),
        ];
        let panel = IndicatorPanel::<f64>::new(2010, defs).unwrap();
        assert!(panel.validate().contains(&Violation::EmptyPillar {
            pillar: Pillar::Environmental
        }));
    }

    #[test]
    fn validate_reports_exponent_and_negative_value() {
        let defs = vec![
            IndicatorDef::new("e", Pillar::Economic, Orientation::Benefit, 13),
            IndicatorDef::new("s", Pillar::Social, Orientation::Benefit, 0),
            IndicatorDef::new("v", Pillar::Environmental, Orientation::Benefit, 0),
        ];
        let mut panel = IndicatorPanel::<f64>::new(2010, defs).unwrap();
        panel.insert("e", 2010, -1.0, 1.0).unwrap();
        panel.insert("s", 2010, 1.0, 1.0).unwrap();
        panel.insert("v", 2010, 1.0, 1.0).unwrap();
        let violations = panel.validate();
        assert!(violations.iter().any(|v| matches!(
            v,
            Violation::ExponentOutOfRange { exponent: 13, .. }
        )));
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::NegativeValue { .. })));
    }

    #[test]
    fn duplicate_ids_rejected() {
        let defs = vec![
            IndicatorDef::new("x", Pillar::Economic, Orientation::Benefit, 0),
            IndicatorDef::new("x", Pillar::Social, Orientation::Benefit, 0),
        ];
        assert_eq!(
            IndicatorPanel::<f64>::new(2010, defs).unwrap_err(),
            SdfError::DuplicateIndicator { id: "x".to_string() }
        );
    }

    #[test]
    fn definition_order_does_not_change_results() {
        let mut defs = vec![
            IndicatorDef::new("b", Pillar::Economic, Orientation::Benefit, 0),
            IndicatorDef::new("a", Pillar::Economic, Orientation::Benefit, 0),
            IndicatorDef::new("c", Pillar::Economic, Orientation::Benefit, 0),
            IndicatorDef::new("s", Pillar::Social, Orientation::Benefit, 0),
            IndicatorDef::new("v", Pillar::Environmental, Orientation::Benefit, 0),
        ];
        let fill = |panel: &mut IndicatorPanel<f64>| {
            panel.insert("a", 2010, 0.1, 1.3).unwrap();
            panel.insert("b", 2010, 0.7, 0.9).unwrap();
            panel.insert("c", 2010, 0.3, 1.1).unwrap();
            panel.insert("s", 2010, 1.0, 1.0).unwrap();
            panel.insert("v", 2010, 1.0, 1.0).unwrap();
        };
        let mut p1 = IndicatorPanel::new(2010, defs.clone()).unwrap();
        fill(&mut p1);
        defs.reverse();
        let mut p2 = IndicatorPanel::new(2010, defs).unwrap();
        fill(&mut p2);
        // Bit-identical, not merely close.
        assert_eq!(
            p1.pillar_value(Pillar::Economic, 2010).unwrap(),
            p2.pillar_value(Pillar::Economic, 2010).unwrap()
        );
    }

    #[test]
    fn suggest_scale_exponent_lands_in_decade() {
        assert_eq!(suggest_scale_exponent(1234.0), -3);
        assert_eq!(suggest_scale_exponent(0.05), 2);
        assert_eq!(suggest_scale_exponent(7.0), 0);
        assert_eq!(suggest_scale_exponent(0.0), 0);
        for max in [0.003, 0.9, 1.0, 42.0, 99999.0] {
            let k = suggest_scale_exponent(max);
            let scaled = max * 10f64.powi(k);
            assert!((0.0..10.0).contains(&scaled), "max={max} scaled={scaled}");
        }
    }

    #[test]
    fn catalog_covers_all_pillars() {
        let defs = indicator_catalog();
        assert_eq!(defs.len(), 20);
        for pillar in Pillar::ALL {
            assert!(defs.iter().any(|d| d.pillar == pillar));
        }
        // Harm-oriented environmental loads keep their sign.
        assert!(defs
            .iter()
            .filter(|d| d.orientation == Orientation::Harm)
            .all(|d| d.pillar == Pillar::Environmental));
        let panel = IndicatorPanel::<f64>::new(2010, defs).unwrap();
        assert!(!panel
            .validate()
            .iter()
            .any(|v| matches!(v, Violation::EmptyPillar { .. })));
    }
}
