//! JSON run configuration.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use kgspec::bound::{CoefficientScheme, Model, QuantumNumbers, SearchWindow};
use kgspec::potential::{MassParams, PotentialParams};
use kgspec::reference::{TABLE1_MASS, TABLE1_POTENTIAL};
use kgspec::scatter::{HulthenParams, PhaseVariant, WoodsSaxonParams};
use serde::Deserialize;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default = "table1_potential")]
    pub potential: PotentialParams,
    #[serde(default = "table1_mass")]
    pub mass: MassParams,
    #[serde(default)]
    pub scheme: CoefficientScheme,
    /// Empty selects the command's default set.
    #[serde(default)]
    pub quantum: Vec<QuantumNumbers>,
    #[serde(default)]
    pub search: SearchConfig,
    pub tolerance: Option<f64>,
    pub output: Option<PathBuf>,
    pub table1: Option<Table1Config>,
    pub sweep: Option<SweepConfig>,
    pub scatter: Option<ScatterConfig>,
}

fn table1_potential() -> PotentialParams {
    TABLE1_POTENTIAL
}

fn table1_mass() -> MassParams {
    TABLE1_MASS
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SearchConfig {
    pub grid_points: usize,
    pub fraction: f64,
    pub tol: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        let w = SearchWindow::default();
        SearchConfig { grid_points: w.grid_points, fraction: w.fraction, tol: w.tol }
    }
}

/// Evenly spaced samples from `start` to `stop`.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Range {
    pub start: f64,
    pub stop: f64,
    pub samples: usize,
}

impl Range {
    pub fn values(&self) -> Vec<f64> {
        if self.samples == 1 {
            return vec![self.start];
        }
        let n = self.samples - 1;
        (0..=n).map(|i| self.start + (self.stop - self.start) * i as f64 / n as f64).collect()
    }

    fn validate(&self, what: &str, min_samples: usize) -> Result<()> {
        if !self.start.is_finite() || !self.stop.is_finite() {
            bail!("{what}: range bounds must be finite");
        }
        if self.samples < min_samples {
            bail!("{what}: need at least {min_samples} samples, got {}", self.samples);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Table1Config {
    /// Range of `S0` scanned when the table is not reproduced.
    pub s0_scan: Option<Range>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepVariable {
    V0,
    V1,
    S0,
    S1,
    Q,
    Alpha,
    M1,
}

impl SweepVariable {
    pub fn name(self) -> &'static str {
        match self {
            SweepVariable::V0 => "v0",
            SweepVariable::V1 => "v1",
            SweepVariable::S0 => "s0",
            SweepVariable::S1 => "s1",
            SweepVariable::Q => "q",
            SweepVariable::Alpha => "alpha",
            SweepVariable::M1 => "m1",
        }
    }

    pub fn apply(self, model: &Model, value: f64) -> Model {
        let mut m = *model;
        match self {
            SweepVariable::V0 => m.potential.v0 = value,
            SweepVariable::V1 => m.potential.v1 = value,
            SweepVariable::S0 => m.potential.s0 = value,
            SweepVariable::S1 => m.potential.s1 = value,
            SweepVariable::Q => m.potential.q = value,
            SweepVariable::Alpha => m.potential.alpha = value,
            SweepVariable::M1 => m.mass.m1 = value,
        }
        m
    }
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub variable: SweepVariable,
    pub range: Range,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScatterCase {
    /// The configured potential as given.
    #[default]
    General,
    Hulthen,
    WoodsSaxon,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScatterConfig {
    #[serde(default)]
    pub case: ScatterCase,
    pub hulthen: Option<HulthenParams>,
    pub woods_saxon: Option<WoodsSaxonParams>,
    pub energies: Range,
    #[serde(default)]
    pub variant: Variant,
    /// Run the numerical phase-shift oracle for each row.
    #[serde(default = "yes")]
    pub oracle: bool,
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    #[default]
    Standard,
    WithLn2,
}

impl From<Variant> for PhaseVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Standard => PhaseVariant::Standard,
            Variant::WithLn2 => PhaseVariant::WithLn2,
        }
    }
}

impl RunConfig {
    pub fn table1_default() -> Self {
        serde_json::from_str("{}").expect("empty config deserializes")
    }

    pub fn load(path: Option<&Path>) -> Result<Self> {
        let config = match path {
            None => Self::table1_default(),
            Some(p) => {
                let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                serde_json::from_str(&text).with_context(|| format!("parsing {}", p.display()))?
            }
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        self.model().validate().context("invalid model")?;
        for qn in &self.quantum {
            qn.validate().with_context(|| format!("invalid quantum numbers {qn:?}"))?;
        }
        if self.search.grid_points < 100 {
            bail!("search.grid_points must be at least 100");
        }
        if !(self.search.fraction > 0.0 && self.search.fraction < 1.0) {
            bail!("search.fraction must lie in (0, 1)");
        }
        if !(self.search.tol > 0.0) {
            bail!("search.tol must be positive");
        }
        if let Some(t) = self.tolerance {
            if !(t > 0.0) {
                bail!("tolerance must be positive");
            }
        }
        if let Some(t) = &self.table1 {
            if let Some(r) = &t.s0_scan {
                r.validate("table1.s0_scan", 2)?;
            }
        }
        if let Some(s) = &self.sweep {
            s.range.validate("sweep.range", 2)?;
            if matches!(s.variable, SweepVariable::Q | SweepVariable::Alpha)
                && (s.range.start <= 0.0 || s.range.stop <= 0.0)
            {
                bail!("sweep over {} needs a positive range", s.variable.name());
            }
        }
        if let Some(s) = &self.scatter {
            s.energies.validate("scatter.energies", 1)?;
            match s.case {
                ScatterCase::General => {}
                ScatterCase::Hulthen => {
                    let h = s.hulthen.context("scatter.case = hulthen needs a scatter.hulthen block")?;
                    h.to_model().validate().context("invalid Hulthén parameters")?;
                }
                ScatterCase::WoodsSaxon => {
                    let w = s.woods_saxon.context("scatter.case = woods_saxon needs a scatter.woods_saxon block")?;
                    if !(w.radius > 0.0) {
                        bail!("woods_saxon.radius must be positive");
                    }
                    w.to_hulthen().to_model().validate().context("invalid Woods-Saxon parameters")?;
                }
            }
        }
        Ok(())
    }

    pub fn model(&self) -> Model {
        Model::new(self.potential, self.mass).with_scheme(self.scheme)
    }

    pub fn search_window(&self) -> SearchWindow {
        SearchWindow {
            bounds: None,
            fraction: self.search.fraction,
            grid_points: self.search.grid_points,
            tol: self.search.tol,
        }
    }
}
