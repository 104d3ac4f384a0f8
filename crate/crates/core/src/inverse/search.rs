//! Seeded multistart minimization of the Tikhonov functional on `C ε ≤ q`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::scalar::Real;

use super::simplex::nelder_mead;
use super::{tikhonov_value, ConstraintSet, InverseError, ResidualOperator, Result, TikhonovConfig};

/// Slack tolerance: 1e-12, widened to a few ulps for narrow scalars.
pub(crate) fn feasibility_tol<T: Real>() -> T {
    T::lit(1e-12).max(T::epsilon() * T::lit(64.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReconstructionStatus {
    Converged,
    /// The winning start exhausted its evaluation budget before the simplex
    /// collapsed.
    MaxEvaluations,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StartSummary<T> {
    pub index: usize,
    pub start: Vec<T>,
    pub end: Vec<T>,
    pub objective: T,
    pub evals: usize,
    /// Descents run, including the first.
    pub descents: usize,
    pub final_penalty: T,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReconstructionResult<T> {
    /// Regularized solution `ε_α`, `(ε_1, …, ε_n, ε_e)`.
    pub eps_alpha: Vec<T>,
    /// `M_α(ε_α)`.
    pub objective: T,
    /// `M_α` at the repaired initial guess.
    pub initial_objective: T,
    /// Relative error against a known truth, filled by [`ReconstructionResult::with_truth`].
    pub relative_error: Option<T>,
    pub winner: usize,
    pub status: ReconstructionStatus,
    pub starts_log: Vec<StartSummary<T>>,
}

impl<T: Real> ReconstructionResult<T> {
    pub fn with_truth(mut self, eps_true: &[T]) -> Result<Self> {
        self.relative_error = Some(super::relative_error(eps_true, &self.eps_alpha)?);
        Ok(self)
    }
}

fn start_points<T: Real>(origin: &[T], config: &TikhonovConfig<T>, constraints: &ConstraintSet<T>) -> Vec<Vec<T>> {
    let mut points = vec![origin.to_vec()];
    let half = config.perturbation.as_f64();
    for index in 1..config.starts {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(index as u64);
        let p: Vec<T> = origin
            .iter()
            .map(|&x| {
                let u: f64 = if half > 0.0 { rng.gen_range(-half..half) } else { 0.0 };
                x + T::lit(u)
            })
            .collect();
        points.push(constraints.project(&p));
    }
    points
}

fn descend<T: Real, R: ResidualOperator<T> + ?Sized>(
    index: usize,
    start: &[T],
    config: &TikhonovConfig<T>,
    constraints: &ConstraintSet<T>,
    op: &R,
) -> Result<StartSummary<T>> {
    let tol = feasibility_tol::<T>();
    let mut weight = config.penalty;
    let mut x = start.to_vec();
    let mut evals = 0;
    let mut descents = 0;
    let mut converged = false;
    let settings = config.simplex;
    while descents <= config.max_restarts {
        descents += 1;
        let w = weight;
        let phi = |y: &[T]| -> Result<T> {
            let p = constraints.project(y);
            let gap: T = y.iter().zip(&p).map(|(&a, &b)| (a - b) * (a - b)).sum();
            Ok(tikhonov_value(&p, config.alpha, &config.eps0, op)? + w * gap)
        };
        let out = nelder_mead(phi, &x, &settings)?;
        evals += out.evals;
        converged = out.converged;
        let moved = out.x.iter().zip(&x).map(|(&a, &b)| (a - b).abs()).fold(T::zero(), T::max);
        x = out.x;
        let p = constraints.project(&x);
        let gap = x.iter().zip(&p).map(|(&a, &b)| (a - b).abs()).fold(T::zero(), T::max);
        if gap > tol {
            weight = weight * T::lit(10.0);
            continue;
        }
        // a fresh simplex at the endpoint guards against premature collapse
        if moved <= settings.xtol || !converged {
            break;
        }
    }
    let end = constraints.project(&x);
    let objective = tikhonov_value(&end, config.alpha, &config.eps0, op)?;
    Ok(StartSummary {
        index,
        start: start.to_vec(),
        end,
        objective,
        evals,
        descents,
        final_penalty: weight,
        converged,
    })
}

/// Minimizes `M_α` over the admissible set from `config.starts` seeded starts.
///
/// Start 0 is `ε₀` with its layers lifted to `ε_e + μ`; the others add
/// uniform offsets of half-width `config.perturbation` and are projected onto
/// the admissible set. Each start runs a penalized simplex descent; the
/// feasible endpoint with the smallest objective wins, ties going to the
/// lowest start index. Starts run in parallel and each draws from its own
/// stream of the seeded generator, so the outcome does not depend on
/// scheduling.
pub fn minimize<T: Real, R: ResidualOperator<T> + ?Sized>(
    config: &TikhonovConfig<T>,
    constraints: &ConstraintSet<T>,
    op: &R,
) -> Result<ReconstructionResult<T>> {
    config.validate()?;
    if config.eps0.len() != constraints.dim() {
        return Err(InverseError::BadConfig(format!(
            "ε₀ has {} components, the constraint set expects {}",
            config.eps0.len(),
            constraints.dim()
        )));
    }
    let origin = constraints.lift_layers(&config.eps0);
    if !constraints.is_feasible(&origin, feasibility_tol()) {
        return Err(InverseError::InfeasibleStart(format!("{:?}", config.eps0)));
    }
    let initial_objective = tikhonov_value(&origin, config.alpha, &config.eps0, op)?;
    let starts = start_points(&origin, config, constraints);
    let log: Vec<StartSummary<T>> = starts
        .par_iter()
        .enumerate()
        .map(|(i, s)| descend(i, s, config, constraints, op))
        .collect::<Result<_>>()?;
    let winner = log
        .iter()
        .filter(|s| s.objective.is_finite())
        .min_by(|a, b| a.objective.partial_cmp(&b.objective).unwrap().then(a.index.cmp(&b.index)))
        .ok_or_else(|| InverseError::BadConfig("no start produced a finite objective".into()))?;
    Ok(ReconstructionResult {
        eps_alpha: winner.end.clone(),
        objective: winner.objective,
        initial_objective,
        relative_error: None,
        winner: winner.index,
        status: if winner.converged { ReconstructionStatus::Converged } else { ReconstructionStatus::MaxEvaluations },
        starts_log: log,
    })
}
