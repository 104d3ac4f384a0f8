use crate::scalar::Real;

use super::{InverseError, Result};

/// The admissible set `C ε ≤ q` for `ε = (ε_1, …, ε_n, ε_e)`: row 0 is
/// `ε_e ≥ 1`, row `l` is `ε_l ≥ ε_e + μ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstraintSet<T> {
    pub mu: T,
    pub layer_count: usize,
}

impl<T: Real> ConstraintSet<T> {
    pub fn new(mu: T, layer_count: usize) -> Result<Self> {
        if !(mu > T::zero() && mu.is_finite()) {
            return Err(InverseError::BadConfig(format!("μ must be positive, got {mu}")));
        }
        if layer_count == 0 {
            return Err(InverseError::BadConfig("at least one layer is required".into()));
        }
        Ok(Self { mu, layer_count })
    }

    pub fn dim(&self) -> usize {
        self.layer_count + 1
    }

    /// `C`, row-major, `(n+1) × (n+1)`.
    pub fn matrix(&self) -> Vec<Vec<T>> {
        let d = self.dim();
        let mut c = vec![vec![T::zero(); d]; d];
        c[0][d - 1] = -T::one();
        for l in 0..self.layer_count {
            c[l + 1][l] = -T::one();
            c[l + 1][d - 1] = T::one();
        }
        c
    }

    /// `q = (−1, −μ, …, −μ)`.
    pub fn bounds(&self) -> Vec<T> {
        let mut q = vec![-self.mu; self.dim()];
        q[0] = -T::one();
        q
    }

    /// `q − C ε`; every component is nonnegative on the admissible set.
    pub fn slack(&self, eps: &[T]) -> Vec<T> {
        self.matrix()
            .iter()
            .zip(self.bounds())
            .map(|(row, q)| q - row.iter().zip(eps).map(|(&c, &e)| c * e).sum::<T>())
            .collect()
    }

    pub fn is_feasible(&self, eps: &[T], tol: T) -> bool {
        eps.len() == self.dim() && self.slack(eps).iter().all(|&s| s >= -tol)
    }

    /// Repairs a point by keeping the cladding (raised to 1 if needed) and
    /// lifting every layer to at least `ε_e + μ`.
    pub fn lift_layers(&self, x: &[T]) -> Vec<T> {
        let n = self.layer_count;
        let t = x[n].max(T::one());
        let mut out: Vec<T> = x[..n].iter().map(|&v| v.max(t + self.mu)).collect();
        out.push(t);
        out
    }

    /// Euclidean projection onto the admissible set.
    ///
    /// For a fixed cladding value `t` the nearest layers are `max(x_l, t + μ)`,
    /// which leaves a convex piecewise-quadratic problem in `t` alone. Its
    /// minimizer is found segment by segment over the sorted breakpoints
    /// `x_l − μ` and then clamped to `t ≥ 1`.
    pub fn project(&self, x: &[T]) -> Vec<T> {
        let n = self.layer_count;
        let xe = x[n];
        let mut breaks: Vec<T> = x[..n].iter().map(|&v| v - self.mu).collect();
        breaks.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut sum = T::zero();
        let mut t = xe;
        for j in 0..=n {
            if j > 0 {
                sum = sum + breaks[j - 1];
            }
            let cand = (xe + sum) / T::from_usize(j + 1).unwrap();
            let lower_ok = j == 0 || cand >= breaks[j - 1];
            let upper_ok = j == n || cand <= breaks[j];
            if lower_ok && upper_ok {
                t = cand;
                break;
            }
        }
        let t = t.max(T::one());
        let mut out: Vec<T> = x[..n].iter().map(|&v| v.max(t + self.mu)).collect();
        out.push(t);
        out
    }
}
