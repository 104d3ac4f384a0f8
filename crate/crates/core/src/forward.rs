//! Propagation constants of guided modes at fixed `k`, and the fundamental
//! dispersion branch over a list of wavenumbers.
//!
//! The indicator `g(β) = 1/cond A(k, β, ε)` is scanned on a uniform grid over
//! the surface-mode interval `(k√ε_e, k√ε₊)`. Grid minima are refined by
//! golden-section search. When the determinant is real (one layer, `m = 0`,
//! real `χ_1`), each root is also located independently by bisection on the
//! sign change of `det A`.

use rayon::prelude::*;

use crate::scalar::Real;
use crate::waveguide::{self, Geometry, PermittivityProfile, Result, WaveguideError};

const MAX_GOLDEN_STEPS: usize = 400;
const MAX_BISECTION_STEPS: usize = 400;
const CUTOFF_FLAG: f64 = 1e-6;
const INTERVAL_MARGIN: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchSettings<T> {
    /// Number of β samples across the surface-mode interval.
    pub grid_points: usize,
    /// Largest indicator value accepted as a root.
    pub accept_tol: T,
    /// Bracket width at which golden-section refinement stops.
    pub refine_tol: T,
    /// Grid minima whose extrapolated floor exceeds `screening_factor * accept_tol` are skipped.
    pub screening_factor: T,
}

impl<T: Real> Default for SearchSettings<T> {
    fn default() -> Self {
        Self {
            grid_points: 2048,
            accept_tol: T::lit(1e-8),
            refine_tol: T::lit(1e-12),
            screening_factor: T::lit(1e3),
        }
    }
}

impl<T: Real> SearchSettings<T> {
    pub fn validate(&self) -> Result<()> {
        let ok = self.grid_points >= 64
            && self.accept_tol > T::zero()
            && self.refine_tol > T::zero()
            && self.screening_factor >= T::one();
        if ok {
            Ok(())
        } else {
            Err(WaveguideError::BadProfile(format!(
                "search settings out of range: grid_points={} accept_tol={} refine_tol={}",
                self.grid_points, self.accept_tol, self.refine_tol
            )))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersionPoint<T> {
    pub k: T,
    pub beta: T,
    /// Indicator `1/cond` at `beta`.
    pub residual: T,
    /// Width of the final golden-section bracket.
    pub bracket_width: T,
    /// `σ r_n` fell below `1e-6`; the mode is barely guided.
    pub cutoff_proximity: bool,
    /// Root from sign-change bisection on the real determinant, when available.
    pub cross_check: Option<T>,
}

impl<T: Real> DispersionPoint<T> {
    pub fn k_squared(&self) -> T {
        self.k * self.k
    }

    pub fn beta_squared(&self) -> T {
        self.beta * self.beta
    }
}

/// `(β_lo, β_hi)` strictly inside `(k√ε_e, k√ε₊)`.
pub fn surface_interval<T: Real>(k: T, eps: &PermittivityProfile<T>) -> (T, T) {
    let margin = T::lit(INTERVAL_MARGIN);
    let lo = k * eps.cladding().sqrt() * (T::one() + margin);
    let hi = k * eps.max_layer().sqrt() * (T::one() - margin);
    (lo, hi)
}

fn golden_section<T: Real>(
    f: &impl Fn(T) -> Result<T>,
    mut a: T,
    mut b: T,
    tol: T,
) -> Result<(T, T, T)> {
    let inv_phi = T::lit(0.618_033_988_749_894_8);
    let mut c = b - (b - a) * inv_phi;
    let mut d = a + (b - a) * inv_phi;
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    for _ in 0..MAX_GOLDEN_STEPS {
        if b - a <= tol || !(c > a && d < b && c < d) {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * inv_phi;
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * inv_phi;
            fd = f(d)?;
        }
    }
    let (x, fx) = if fc <= fd { (c, fc) } else { (d, fd) };
    Ok((x, fx, b - a))
}

fn bisect_sign_change<T: Real>(f: &impl Fn(T) -> Result<T>, mut a: T, mut b: T) -> Result<Option<T>> {
    let mut fa = f(a)?;
    let fb = f(b)?;
    if fa == T::zero() {
        return Ok(Some(a));
    }
    if fb == T::zero() {
        return Ok(Some(b));
    }
    if fa.signum() == fb.signum() {
        return Ok(None);
    }
    for _ in 0..MAX_BISECTION_STEPS {
        let mid = a + (b - a) * T::lit(0.5);
        if !(mid > a && mid < b) {
            break;
        }
        let fm = f(mid)?;
        if fm == T::zero() {
            return Ok(Some(mid));
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Ok(Some(a + (b - a) * T::lit(0.5)))
}

/// Extrapolated indicator floor around the grid minimum at `i`: the meeting
/// point of the secant lines through the two samples on either side. A
/// simple root between the samples gives a value near zero even when the
/// two flanks have very different slopes. `None` when the stencil does not
/// fit or the flanks are not falling toward `i`.
fn secant_floor<T: Real>(values: &[T], i: usize) -> Option<T> {
    if i < 2 || i + 2 >= values.len() {
        return None;
    }
    let left_slope = values[i - 1] - values[i - 2];
    let right_slope = values[i + 2] - values[i + 1];
    if !(left_slope < T::zero() && right_slope > T::zero()) {
        return None;
    }
    // grid steps measured from sample i-1
    let u = (values[i + 1] - values[i - 1] - T::lit(2.0) * right_slope) / (left_slope - right_slope);
    Some((values[i - 1] + left_slope * u).max(T::zero()))
}

/// All surface-mode roots at wavenumber `k`, in descending β.
pub fn find_roots<T: Real>(
    k: T,
    eps: &PermittivityProfile<T>,
    geom: &Geometry<T>,
    m: u32,
    settings: &SearchSettings<T>,
) -> Result<Vec<DispersionPoint<T>>> {
    settings.validate()?;
    if eps.layer_count() != geom.layer_count() {
        return Err(WaveguideError::LayerMismatch {
            geometry: geom.layer_count(),
            profile: eps.layer_count(),
        });
    }
    if !(k.is_finite() && k > T::zero()) {
        return Err(WaveguideError::BadWavenumber(k.as_f64()));
    }
    let (lo, hi) = surface_interval(k, eps);
    if !(hi > lo) {
        return Ok(Vec::new());
    }
    let indicator = |beta: T| waveguide::inverse_condition(k, beta, eps, geom, m);
    let n = settings.grid_points;
    let step = (hi - lo) / T::from_usize(n - 1).unwrap();
    let grid: Vec<T> = (0..n)
        .map(|i| if i == n - 1 { hi } else { lo + step * T::from_usize(i).unwrap() })
        .collect();
    let values = grid.iter().map(|&b| indicator(b)).collect::<Result<Vec<T>>>()?;

    let screen = settings.screening_factor * settings.accept_tol;
    let mut candidates = Vec::new();
    for i in 0..n {
        let left = if i > 0 { values[i - 1] } else { T::infinity() };
        let right = if i + 1 < n { values[i + 1] } else { T::infinity() };
        if !(values[i] <= left && values[i] < right) {
            continue;
        }
        let admit = values[i] < screen || secant_floor(&values, i).is_none_or(|f| f < screen);
        if admit {
            candidates.push((grid[i.saturating_sub(1)], grid[(i + 1).min(n - 1)]));
        }
    }

    let real_det = geom.layer_count() == 1 && m == 0;
    let det_re = |beta: T| waveguide::characteristic_value(k, beta, eps, geom, m).map(|d| d.re);
    let mut roots = Vec::new();
    for (a, b) in candidates {
        let (beta, residual, width) = golden_section(&indicator, a, b, settings.refine_tol)?;
        if !(residual <= settings.accept_tol) {
            continue;
        }
        let cross_check = if real_det && beta * beta < k * k * eps.layers()[0] {
            bisect_sign_change(&det_re, a, b)?
        } else {
            None
        };
        let sigma = (beta * beta - k * k * eps.cladding()).sqrt();
        roots.push(DispersionPoint {
            k,
            beta,
            residual,
            bracket_width: width,
            cutoff_proximity: sigma * geom.outer_radius() < T::lit(CUTOFF_FLAG),
            cross_check,
        });
    }
    roots.sort_by(|p, q| q.beta.partial_cmp(&p.beta).unwrap());
    // adjacent grid minima can refine onto the same root
    let merge = settings.refine_tol * T::lit(10.0);
    roots.dedup_by(|later, kept| (kept.beta - later.beta).abs() <= merge);
    Ok(roots)
}

/// Largest-β root at each `k`; wavenumbers without a guided mode are omitted.
/// Output is ordered by `k` regardless of evaluation order.
pub fn fundamental_curve<T: Real>(
    eps: &PermittivityProfile<T>,
    geom: &Geometry<T>,
    m: u32,
    ks: &[T],
    settings: &SearchSettings<T>,
) -> Result<Vec<DispersionPoint<T>>> {
    let per_k: Vec<Result<Option<DispersionPoint<T>>>> = ks
        .par_iter()
        .map(|&k| find_roots(k, eps, geom, m, settings).map(|r| r.into_iter().next()))
        .collect();
    let mut out = Vec::with_capacity(ks.len());
    for r in per_k {
        if let Some(p) = r? {
            out.push(p);
        }
    }
    out.sort_by(|p, q| p.k.partial_cmp(&q.k).unwrap());
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusCalibration<T> {
    pub radius: T,
    /// `β²(radius) − target β²`.
    pub misfit: T,
    pub iterations: usize,
}

/// Finds a single-interface radius `r` whose fundamental mode at `k` has
/// propagation constant `beta_target`, by bisection on `β(r)² − β_target²`
/// inside `[r_lo, r_hi]`.
pub fn calibrate_radius<T: Real>(
    k: T,
    beta_target: T,
    eps: &PermittivityProfile<T>,
    (r_lo, r_hi): (T, T),
    tol: T,
    settings: &SearchSettings<T>,
) -> Result<Option<RadiusCalibration<T>>> {
    let target = beta_target * beta_target;
    let misfit = |r: T| -> Result<Option<T>> {
        let geom = Geometry::single(r)?;
        let roots = find_roots(k, eps, &geom, 0, settings)?;
        Ok(roots.first().map(|p| p.beta * p.beta - target))
    };
    // below cutoff the mode hugs the cladding line, i.e. β² → k²ε_e < target
    let low = |v: Option<T>| v.unwrap_or(k * k * eps.cladding() - target);
    let (mut a, mut b) = (r_lo, r_hi);
    let mut fa = low(misfit(a)?);
    let fb = low(misfit(b)?);
    if fa.signum() == fb.signum() {
        return Ok(None);
    }
    let mut best = if fa.abs() < fb.abs() { (a, fa) } else { (b, fb) };
    for it in 0..200 {
        if best.1.abs() <= tol {
            return Ok(Some(RadiusCalibration { radius: best.0, misfit: best.1, iterations: it }));
        }
        let mid = a + (b - a) * T::lit(0.5);
        if !(mid > a && mid < b) {
            break;
        }
        let fm = low(misfit(mid)?);
        if fm.abs() < best.1.abs() {
            best = (mid, fm);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Ok(Some(RadiusCalibration { radius: best.0, misfit: best.1, iterations: 200 }))
}
