//! Experiment configuration, schema version 1.

use std::path::{Path, PathBuf};

use fiberspec_core::inverse::{NoiseModel, NoiseSharing, NoiseTarget, SimplexSettings};
use fiberspec_core::{Geometry, Measurements, Profile, SearchSettings};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub schema_version: u32,
    #[serde(default)]
    pub seed: Option<u64>,
    pub geometry: GeometryConfig,
    /// Known permittivities, used by `forward` and for error reporting.
    #[serde(default)]
    pub truth: Option<ProfileConfig>,
    #[serde(default)]
    pub measurements: Option<MeasurementSource>,
    #[serde(default)]
    pub forward: ForwardConfig,
    #[serde(default)]
    pub noise: NoiseConfig,
    #[serde(default)]
    pub tikhonov: TikhonovSection,
    #[serde(default)]
    pub landscape: LandscapeConfig,
    #[serde(default)]
    pub calibration: Option<CalibrationConfig>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometryConfig {
    pub radii: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileConfig {
    pub layers: Vec<f64>,
    pub cladding: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "snake_case", deny_unknown_fields)]
pub enum MeasurementSource {
    /// `[k², β²]` rows, as dispersion tables are printed.
    Inline { pairs_squared: Vec<[f64; 2]> },
    /// Solve the forward problem for `truth` at these `k²`.
    Forward { k_squared: Vec<f64> },
    /// A CSV with `k_squared` and `beta_squared` columns, such as the output
    /// of `forward`. Relative paths resolve against the config file.
    Csv { path: PathBuf },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SearchConfig {
    pub grid_points: usize,
    pub accept_tol: f64,
    pub refine_tol: f64,
    pub screening_factor: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        let s = SearchSettings::default();
        Self {
            grid_points: s.grid_points,
            accept_tol: s.accept_tol,
            refine_tol: s.refine_tol,
            screening_factor: s.screening_factor,
        }
    }
}

impl SearchConfig {
    pub fn settings(&self) -> SearchSettings {
        SearchSettings {
            grid_points: self.grid_points,
            accept_tol: self.accept_tol,
            refine_tol: self.refine_tol,
            screening_factor: self.screening_factor,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ForwardConfig {
    pub k_squared: Vec<f64>,
    pub order: u32,
    pub search: SearchConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TargetName {
    #[default]
    Beta,
    BetaSquared,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SharingName {
    #[default]
    Independent,
    Common,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct NoiseConfig {
    /// Level `p` for `reconstruct`.
    pub level: f64,
    /// Levels for `noise-sweep`.
    pub levels: Vec<f64>,
    pub trials: usize,
    pub target: TargetName,
    pub sharing: SharingName,
}

impl Default for NoiseConfig {
    fn default() -> Self {
        Self { level: 0.0, levels: Vec::new(), trials: 1, target: TargetName::Beta, sharing: SharingName::Independent }
    }
}

impl NoiseConfig {
    pub fn model(&self) -> NoiseModel {
        let target = match self.target {
            TargetName::Beta => NoiseTarget::Beta,
            TargetName::BetaSquared => NoiseTarget::BetaSquared,
        };
        let sharing = match self.sharing {
            SharingName::Independent => NoiseSharing::Independent,
            SharingName::Common => NoiseSharing::Common,
        };
        NoiseModel::new(target, sharing)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TikhonovSection {
    pub alpha: f64,
    pub starts: usize,
    pub mu: f64,
    pub perturbation: f64,
    pub penalty: f64,
    pub max_restarts: usize,
    pub max_evals: usize,
    /// Overrides the `β₁²/k₁²` first guess, `(ε_1, …, ε_n, ε_e)`.
    pub eps0: Option<Vec<f64>>,
}

impl Default for TikhonovSection {
    fn default() -> Self {
        let s = SimplexSettings::<f64>::default();
        Self {
            alpha: 0.01,
            starts: 32,
            mu: 1e-3,
            perturbation: 0.15,
            penalty: 1e2,
            max_restarts: 8,
            max_evals: s.max_evals,
            eps0: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Marker {
    pub label: String,
    pub eps: [f64; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LandscapeConfig {
    pub eps1: [f64; 2],
    pub eps_e: [f64; 2],
    /// Grid points along `ε₁` and `ε_e`.
    pub resolution: [usize; 2],
    pub markers: Vec<Marker>,
}

impl Default for LandscapeConfig {
    fn default() -> Self {
        Self { eps1: [2.0, 2.7], eps_e: [1.8, 2.4], resolution: [141, 121], markers: Vec::new() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CalibrationConfig {
    /// The `[k², β²]` row the radius is fitted to.
    pub row: [f64; 2],
    #[serde(default = "default_radius_range")]
    pub radius_range: [f64; 2],
    #[serde(default = "default_calibration_tol")]
    pub tol: f64,
}

fn default_radius_range() -> [f64; 2] {
    [0.5, 2.0]
}

fn default_calibration_tol() -> f64 {
    1e-11
}

fn config_error(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| config_error(format!("cannot read {}: {e}", path.display())))?;
        let mut cfg: Self =
            serde_json::from_str(&text).map_err(|e| config_error(format!("{}: {e}", path.display())))?;
        if cfg.schema_version != SCHEMA_VERSION {
            return Err(config_error(format!(
                "schema_version {} is not supported (expected {SCHEMA_VERSION})",
                cfg.schema_version
            )));
        }
        if let Some(MeasurementSource::Csv { path: p }) = &mut cfg.measurements {
            if p.is_relative() {
                if let Some(dir) = path.parent() {
                    *p = dir.join(&*p);
                }
            }
        }
        Ok(cfg)
    }

    pub fn geometry(&self) -> Result<Geometry, CliError> {
        Geometry::new(self.geometry.radii.clone()).map_err(|e| config_error(e.to_string()))
    }

    pub fn truth(&self) -> Result<Option<Profile>, CliError> {
        let Some(t) = &self.truth else { return Ok(None) };
        let p = Profile::new(t.layers.clone(), t.cladding).map_err(|e| config_error(format!("truth: {e}")))?;
        if p.layer_count() != self.geometry.radii.len() {
            return Err(config_error(format!(
                "truth has {} layers, geometry has {}",
                p.layer_count(),
                self.geometry.radii.len()
            )));
        }
        Ok(Some(p))
    }

    pub fn require_truth(&self, command: &str) -> Result<Profile, CliError> {
        self.truth()?.ok_or_else(|| config_error(format!("{command} needs `truth`")))
    }

    pub fn layer_count(&self) -> usize {
        self.geometry.radii.len()
    }

    /// Seed for noise draws and multistart, required once either is active.
    pub fn seed_for(&self, noisy: bool) -> Result<u64, CliError> {
        match self.seed {
            Some(s) => Ok(s),
            None if noisy || self.tikhonov.starts > 1 => {
                Err(config_error("`seed` is required when noise or multistart is active"))
            }
            None => Ok(0),
        }
    }

    pub fn validate_tikhonov(&self) -> Result<(), CliError> {
        let t = &self.tikhonov;
        if !(t.alpha > 0.0 && t.alpha.is_finite()) {
            return Err(config_error(format!("tikhonov.alpha must be positive, got {}", t.alpha)));
        }
        if t.starts == 0 {
            return Err(config_error("tikhonov.starts must be at least 1"));
        }
        if !(t.mu > 0.0 && t.perturbation >= 0.0 && t.penalty > 0.0 && t.max_evals > 0) {
            return Err(config_error("tikhonov.mu, penalty and max_evals must be positive"));
        }
        if let Some(e) = &t.eps0 {
            if e.len() != self.layer_count() + 1 {
                return Err(config_error(format!(
                    "tikhonov.eps0 has {} components, expected {}",
                    e.len(),
                    self.layer_count() + 1
                )));
            }
        }
        Ok(())
    }

    pub fn check_level(p: f64) -> Result<(), CliError> {
        if !(0.0..1.0).contains(&p) {
            return Err(config_error(format!("noise level must lie in [0, 1), got {p}")));
        }
        Ok(())
    }
}

/// Loads measured pairs from the configured source.
pub fn measurements(cfg: &ExperimentConfig) -> Result<Measurements, CliError> {
    let source = cfg.measurements.as_ref().ok_or_else(|| config_error("`measurements` is missing"))?;
    let squared: Vec<(f64, f64)> = match source {
        MeasurementSource::Inline { pairs_squared } => pairs_squared.iter().map(|r| (r[0], r[1])).collect(),
        MeasurementSource::Forward { k_squared } => {
            let truth = cfg.require_truth("a forward measurement source")?;
            let geom = cfg.geometry()?;
            let ks = k_values(k_squared)?;
            let curve = fiberspec_core::forward::fundamental_curve(
                &truth,
                &geom,
                0,
                &ks,
                &cfg.forward.search.settings(),
            )
            .map_err(CliError::from)?;
            if curve.len() != ks.len() {
                return Err(CliError::Numerical(format!(
                    "only {} of {} wavenumbers carry a guided mode",
                    curve.len(),
                    ks.len()
                )));
            }
            curve.iter().map(|p| (p.k_squared(), p.beta_squared())).collect()
        }
        MeasurementSource::Csv { path } => read_pairs_csv(path)?,
    };
    let data = Measurements::from_squared(&squared).map_err(|e| config_error(e.to_string()))?;
    data.check_layers(cfg.layer_count()).map_err(|e| config_error(e.to_string()))?;
    Ok(data)
}

pub fn k_values(k_squared: &[f64]) -> Result<Vec<f64>, CliError> {
    k_squared
        .iter()
        .map(|&k2| {
            if k2 > 0.0 && k2.is_finite() {
                Ok(k2.sqrt())
            } else {
                Err(config_error(format!("k² must be positive, got {k2}")))
            }
        })
        .collect()
}

fn read_pairs_csv(path: &Path) -> Result<Vec<(f64, f64)>, CliError> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| config_error(format!("{}: {e}", path.display())))?;
    let headers = reader.headers().map_err(|e| config_error(e.to_string()))?.clone();
    let col = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| config_error(format!("{} has no `{name}` column", path.display())))
    };
    let (ik, ib) = (col("k_squared")?, col("beta_squared")?);
    let mut out = Vec::new();
    for (line, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| config_error(e.to_string()))?;
        let parse = |i: usize| -> Result<f64, CliError> {
            rec.get(i)
                .and_then(|s| s.trim().parse().ok())
                .ok_or_else(|| config_error(format!("{} row {}: bad number", path.display(), line + 2)))
        };
        out.push((parse(ik)?, parse(ib)?));
    }
    Ok(out)
}
