//! Finite-difference check of local strong convexity of `M_α`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::Real;

use super::{tikhonov_value, ConstraintSet, InverseError, ResidualOperator, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeSettings<T> {
    pub radius: T,
    /// Number of random pairs.
    pub samples: usize,
    pub seed: u64,
    /// Central-difference step per component.
    pub step: T,
}

impl<T: Real> ProbeSettings<T> {
    pub fn new(radius: T, samples: usize, seed: u64) -> Self {
        Self { radius, samples, seed, step: T::lit(1e-5) }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport<T> {
    /// `min (∇M(ε₁) − ∇M(ε₂), ε₁ − ε₂) / ‖ε₁ − ε₂‖²` over the sampled pairs.
    pub min_quotient: T,
    pub max_quotient: T,
    pub pairs: usize,
}

fn ball_point(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let r2: f64 = v.iter().map(|x| x * x).sum();
        if r2 <= 1.0 && r2 > 0.0 {
            return v;
        }
    }
}

fn gradient<T: Real, R: ResidualOperator<T> + ?Sized>(x: &[T], h: T, alpha: T, eps0: &[T], op: &R) -> Result<Vec<T>> {
    let mut g = Vec::with_capacity(x.len());
    let mut y = x.to_vec();
    for j in 0..x.len() {
        y[j] = x[j] + h;
        let up = tikhonov_value(&y, alpha, eps0, op)?;
        y[j] = x[j] - h;
        let down = tikhonov_value(&y, alpha, eps0, op)?;
        y[j] = x[j];
        g.push((up - down) / (T::lit(2.0) * h));
    }
    Ok(g)
}

/// Samples pairs in the ball of `settings.radius` around `center` and reports
/// the extreme monotonicity quotients of the finite-difference gradient. A
/// positive minimum is consistent with strong convexity on the ball; it is
/// not a proof.
pub fn convexity_probe<T: Real, R: ResidualOperator<T> + ?Sized>(
    center: &[T],
    alpha: T,
    eps0: &[T],
    op: &R,
    constraints: &ConstraintSet<T>,
    settings: &ProbeSettings<T>,
) -> Result<ProbeReport<T>> {
    if settings.samples == 0 || !(settings.radius > T::zero() && settings.step > T::zero()) {
        return Err(InverseError::BadConfig("probe needs samples, a radius and a step".into()));
    }
    let dim = center.len();
    let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
    let mut draw = || -> Result<Vec<T>> {
        let u = ball_point(&mut rng, dim);
        let p: Vec<T> = center.iter().zip(u).map(|(&c, v)| c + settings.radius * T::lit(v)).collect();
        // the difference stencil must stay admissible too
        if !constraints.slack(&p).iter().all(|&s| s >= settings.step * T::lit(2.0)) {
            return Err(InverseError::InfeasibleSample(p.iter().map(|v| v.as_f64()).collect()));
        }
        Ok(p)
    };
    let mut lo = T::infinity();
    let mut hi = T::neg_infinity();
    for _ in 0..settings.samples {
        let a = draw()?;
        let b = draw()?;
        let ga = gradient(&a, settings.step, alpha, eps0, op)?;
        let gb = gradient(&b, settings.step, alpha, eps0, op)?;
        let mut dot = T::zero();
        let mut dist = T::zero();
        for j in 0..dim {
            let d = a[j] - b[j];
            dot = dot + (ga[j] - gb[j]) * d;
            dist = dist + d * d;
        }
        let q = dot / dist;
        lo = lo.min(q);
        hi = hi.max(q);
    }
    Ok(ProbeReport { min_quotient: lo, max_quotient: hi, pairs: settings.samples })
}
