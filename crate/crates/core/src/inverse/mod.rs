//! Reconstruction of layer permittivities from measured `(k, β)` pairs of the
//! fundamental mode.
//!
//! Each measurement contributes the residual `f_i(ε) = 1/cond A(k_i, β_i, ε)`
//! at `m = 0`, which vanishes when `β_i` is a propagation constant of the
//! profile `ε`. The regularized solution minimizes
//! `M_α(ε) = ½‖F(ε)‖² + (α/2)‖ε − ε₀‖²` over the admissible set `C ε ≤ q`.
//!
//! Vectors `ε` are laid out as `(ε_1, …, ε_n, ε_e)`.

mod constraints;
mod probe;
mod search;
mod simplex;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::scalar::Real;
use crate::waveguide::{self, Geometry, PermittivityProfile, WaveguideError};

pub use constraints::ConstraintSet;
pub use probe::{convexity_probe, ProbeReport, ProbeSettings};
pub use search::{minimize, ReconstructionResult, ReconstructionStatus, StartSummary};
pub use simplex::{nelder_mead, SimplexOutcome, SimplexSettings};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InverseError {
    #[error(transparent)]
    Waveguide(#[from] WaveguideError),
    #[error("invalid measurements: {0}")]
    BadMeasurements(String),
    #[error("invalid configuration: {0}")]
    BadConfig(String),
    #[error("initial guess cannot be made admissible: {0}")]
    InfeasibleStart(String),
    #[error("probe sample {0:?} leaves the admissible set")]
    InfeasibleSample(Vec<f64>),
    #[error("reference permittivity vector has zero norm")]
    ZeroNorm,
}

pub type Result<T> = std::result::Result<T, InverseError>;

/// Measured pairs `(k_i, β_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementSet<T> {
    pairs: Vec<(T, T)>,
}

impl<T: Real> MeasurementSet<T> {
    pub fn new(pairs: Vec<(T, T)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(InverseError::BadMeasurements("no pairs".into()));
        }
        for (i, &(k, b)) in pairs.iter().enumerate() {
            if !(k.is_finite() && b.is_finite() && k > T::zero() && b > T::zero()) {
                return Err(InverseError::BadMeasurements(format!("pair {} = ({k}, {b}) is not positive", i + 1)));
            }
        }
        Ok(Self { pairs })
    }

    /// From `(k², β²)` pairs, the form in which dispersion tables are usually printed.
    pub fn from_squared(pairs: &[(T, T)]) -> Result<Self> {
        for (i, &(k2, b2)) in pairs.iter().enumerate() {
            if !(k2 > T::zero() && b2 > T::zero()) {
                return Err(InverseError::BadMeasurements(format!("pair {} = ({k2}, {b2}) is not positive", i + 1)));
            }
        }
        Self::new(pairs.iter().map(|&(k2, b2)| (k2.sqrt(), b2.sqrt())).collect())
    }

    pub fn pairs(&self) -> &[(T, T)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// At least `n + 1` pairs are needed to determine `n + 1` permittivities.
    pub fn check_layers(&self, layer_count: usize) -> Result<()> {
        if self.len() < layer_count + 1 {
            return Err(InverseError::BadMeasurements(format!(
                "{} pairs cannot determine {} permittivities",
                self.len(),
                layer_count + 1
            )));
        }
        Ok(())
    }

    /// All `β_i` multiplied by `factor`, `k_i` unchanged.
    pub fn scaled(&self, factor: T) -> Result<Self> {
        Self::new(self.pairs.iter().map(|&(k, b)| (k, b * factor)).collect())
    }

    /// The pair with the smallest `k`.
    pub fn lowest(&self) -> (T, T) {
        *self
            .pairs
            .iter()
            .min_by(|a, b| a.0.partial_cmp(&b.0).unwrap())
            .unwrap()
    }
}

/// Maps a permittivity vector to residual components.
pub trait ResidualOperator<T>: Sync {
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn evaluate(&self, eps: &[T]) -> Result<Vec<T>>;
}

/// `f_i(ε) = 1/cond A(k_i, β_i, ε)` at `m = 0`.
///
/// Past the cladding line of a measurement (`β_i² < k_i² ε_e`) the cladding
/// column is continued to imaginary `σ`, so the functional is defined on the
/// whole admissible set.
#[derive(Debug, Clone)]
pub struct CondResidual<T> {
    data: MeasurementSet<T>,
    geom: Geometry<T>,
}

impl<T: Real> CondResidual<T> {
    pub fn new(data: MeasurementSet<T>, geom: Geometry<T>) -> Result<Self> {
        data.check_layers(geom.layer_count())?;
        Ok(Self { data, geom })
    }

    pub fn data(&self) -> &MeasurementSet<T> {
        &self.data
    }

    pub fn geometry(&self) -> &Geometry<T> {
        &self.geom
    }
}

impl<T: Real> ResidualOperator<T> for CondResidual<T> {
    fn len(&self) -> usize {
        self.data.len()
    }

    fn evaluate(&self, eps: &[T]) -> Result<Vec<T>> {
        if eps.len() != self.geom.layer_count() + 1 {
            return Err(WaveguideError::LayerMismatch {
                geometry: self.geom.layer_count(),
                profile: eps.len().saturating_sub(1),
            }
            .into());
        }
        let profile = PermittivityProfile::from_vector_unchecked(eps);
        self.data
            .pairs()
            .iter()
            .map(|&(k, b)| Ok(waveguide::inverse_condition_continued(k, b, &profile, &self.geom, 0)?))
            .collect()
    }
}

/// Identically zero residual, leaving only the quadratic anchor term.
#[derive(Debug, Clone, Copy)]
pub struct ZeroResidual {
    pub len: usize,
}

impl<T: Real> ResidualOperator<T> for ZeroResidual {
    fn len(&self) -> usize {
        self.len
    }

    fn evaluate(&self, _eps: &[T]) -> Result<Vec<T>> {
        Ok(vec![T::zero(); self.len])
    }
}

/// `F(ε)` for a profile against measured data.
pub fn residual<T: Real>(eps: &PermittivityProfile<T>, data: &MeasurementSet<T>, geom: &Geometry<T>) -> Result<Vec<T>> {
    CondResidual::new(data.clone(), geom.clone())?.evaluate(&eps.to_vector())
}

#[derive(Debug, Clone, PartialEq)]
pub struct TikhonovConfig<T> {
    /// Regularization parameter `α > 0`.
    pub alpha: T,
    /// Anchor `ε₀`, `(ε_1, …, ε_n, ε_e)`. The usual first guess has all
    /// components equal, so it is kept as a raw vector.
    pub eps0: Vec<T>,
    /// Multistart count.
    pub starts: usize,
    pub seed: u64,
    /// Half-width of the uniform box around the repaired `ε₀` from which
    /// extra starts are drawn.
    pub perturbation: T,
    pub simplex: SimplexSettings<T>,
    /// Penalty weight on the distance to the admissible set for the first
    /// descent; multiplied by 10 on each restart that ends infeasible.
    pub penalty: T,
    pub max_restarts: usize,
}

impl<T: Real> TikhonovConfig<T> {
    pub fn new(alpha: T, eps0: Vec<T>, seed: u64) -> Self {
        Self {
            alpha,
            eps0,
            starts: 32,
            seed,
            perturbation: T::lit(0.15),
            simplex: SimplexSettings::default(),
            penalty: T::lit(1e2),
            max_restarts: 8,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha >= T::zero() && self.alpha.is_finite()) {
            return Err(InverseError::BadConfig(format!("α must be nonnegative, got {}", self.alpha)));
        }
        if self.starts == 0 {
            return Err(InverseError::BadConfig("at least one start is required".into()));
        }
        if self.eps0.is_empty() || self.eps0.iter().any(|v| !v.is_finite()) {
            return Err(InverseError::InfeasibleStart(format!("ε₀ = {:?}", self.eps0)));
        }
        if !(self.perturbation >= T::zero() && self.penalty > T::zero()) {
            return Err(InverseError::BadConfig("perturbation and penalty must be positive".into()));
        }
        Ok(())
    }
}

/// `½‖F(ε)‖² + (α/2)‖ε − ε₀‖²`.
pub fn tikhonov_value<T: Real, R: ResidualOperator<T> + ?Sized>(
    eps: &[T],
    alpha: T,
    eps0: &[T],
    op: &R,
) -> Result<T> {
    let f = op.evaluate(eps)?;
    let fit: T = f.iter().map(|&v| v * v).sum();
    let anchor: T = eps.iter().zip(eps0).map(|(&a, &b)| (a - b) * (a - b)).sum();
    Ok(T::lit(0.5) * fit + T::lit(0.5) * alpha * anchor)
}

/// Every component set to `β²/k²` of the lowest-`k` pair.
pub fn initial_guess<T: Real>(data: &MeasurementSet<T>, layer_count: usize) -> Vec<T> {
    let (k, b) = data.lowest();
    vec![(b * b) / (k * k); layer_count + 1]
}

/// Which measured quantity the multiplicative noise factor applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NoiseTarget {
    /// `β̃_i = β_i (1 + p u_i)`.
    #[default]
    Beta,
    /// `β̃_i² = β_i² (1 + p u_i)`.
    BetaSquared,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NoiseSharing {
    /// One draw per measurement.
    #[default]
    Independent,
    /// A single draw scales every measurement.
    Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct NoiseModel {
    pub target: NoiseTarget,
    pub sharing: NoiseSharing,
}

impl NoiseModel {
    pub const fn new(target: NoiseTarget, sharing: NoiseSharing) -> Self {
        Self { target, sharing }
    }
}

/// Draws `u_i` uniform on the open interval `(−1, 1)`.
pub fn noise_draws(count: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| loop {
            let u: f64 = rng.gen_range(-1.0..1.0);
            if u > -1.0 {
                break u;
            }
        })
        .collect()
}

/// `β̃_i = β_i (1 + p u_i)` with independent draws.
pub fn add_noise<T: Real>(data: &MeasurementSet<T>, p: T, seed: u64) -> Result<MeasurementSet<T>> {
    add_noise_with(data, p, seed, NoiseModel::default())
}

pub fn add_noise_with<T: Real>(data: &MeasurementSet<T>, p: T, seed: u64, model: NoiseModel) -> Result<MeasurementSet<T>> {
    if !(p >= T::zero() && p < T::one()) {
        return Err(InverseError::BadConfig(format!("noise level must lie in [0, 1), got {p}")));
    }
    if p == T::zero() {
        return Ok(data.clone());
    }
    let draws = match model.sharing {
        NoiseSharing::Independent => noise_draws(data.len(), seed),
        NoiseSharing::Common => vec![noise_draws(1, seed)[0]; data.len()],
    };
    let pairs = data
        .pairs()
        .iter()
        .zip(draws)
        .map(|(&(k, b), u)| {
            let factor = T::one() + p * T::lit(u);
            match model.target {
                NoiseTarget::Beta => (k, b * factor),
                NoiseTarget::BetaSquared => (k, b * factor.sqrt()),
            }
        })
        .collect();
    MeasurementSet::new(pairs)
}

/// `‖ε − ε̃‖ / ‖ε‖` over the full permittivity vector.
pub fn relative_error<T: Real>(eps_true: &[T], eps_rec: &[T]) -> Result<T> {
    if eps_true.len() != eps_rec.len() {
        return Err(InverseError::BadConfig(format!(
            "vectors of length {} and {} cannot be compared",
            eps_true.len(),
            eps_rec.len()
        )));
    }
    let norm = eps_true.iter().map(|&v| v * v).sum::<T>().sqrt();
    if norm == T::zero() {
        return Err(InverseError::ZeroNorm);
    }
    let diff = eps_true.iter().zip(eps_rec).map(|(&a, &b)| (a - b) * (a - b)).sum::<T>().sqrt();
    Ok(diff / norm)
}
