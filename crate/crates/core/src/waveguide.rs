//! Layered circular fiber: geometry, permittivities and the interface-matching
//! matrix whose singularity defines the guided modes.
//!
//! Unknown coefficients are ordered `(a, b_2, c_2, …, b_n, c_n, d)`: `a`
//! multiplies `J_m` in the core, `b_l`, `c_l` multiply `J_m` and `H⁽¹⁾_m` in
//! layer `l`, and `d` multiplies `K_m` in the cladding. Rows come in pairs,
//! continuity of the field and of its radial derivative at each `r_l`.

use num_complex::Complex;
use thiserror::Error;

use crate::densela::DenseComplexMatrix;
use crate::scalar::Real;
use crate::specfun::{self, SpecFunError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WaveguideError {
    #[error("geometry needs at least one radius")]
    EmptyGeometry,
    #[error("radii must be positive, finite and strictly increasing (radius {index} = {value})")]
    BadRadius { index: usize, value: f64 },
    #[error("permittivity profile violates min ε_l > ε_e ≥ 1: {0}")]
    BadProfile(String),
    #[error("geometry has {geometry} layers but the profile has {profile}")]
    LayerMismatch { geometry: usize, profile: usize },
    #[error("wavenumber must be positive and finite, got {0}")]
    BadWavenumber(f64),
    #[error("β² = {beta_sq} does not exceed k²ε_e = {floor}; not a surface mode")]
    NotSurfaceMode { beta_sq: f64, floor: f64 },
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

pub type Result<T> = std::result::Result<T, WaveguideError>;

/// Interface radii `r_1 < … < r_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Geometry<T> {
    radii: Vec<T>,
}

impl<T: Real> Geometry<T> {
    pub fn new(radii: Vec<T>) -> Result<Self> {
        if radii.is_empty() {
            return Err(WaveguideError::EmptyGeometry);
        }
        let mut prev = T::zero();
        for (index, &r) in radii.iter().enumerate() {
            if !(r.is_finite() && r > prev) {
                return Err(WaveguideError::BadRadius { index, value: r.as_f64() });
            }
            prev = r;
        }
        Ok(Self { radii })
    }

    pub fn single(radius: T) -> Result<Self> {
        Self::new(vec![radius])
    }

    pub fn radii(&self) -> &[T] {
        &self.radii
    }

    pub fn layer_count(&self) -> usize {
        self.radii.len()
    }

    pub fn outer_radius(&self) -> T {
        self.radii[self.radii.len() - 1]
    }
}

/// Layer permittivities `ε_1 … ε_n` and the cladding `ε_e`.
#[derive(Debug, Clone, PartialEq)]
pub struct PermittivityProfile<T> {
    layers: Vec<T>,
    cladding: T,
}

impl<T: Real> PermittivityProfile<T> {
    pub fn new(layers: Vec<T>, cladding: T) -> Result<Self> {
        if layers.is_empty() {
            return Err(WaveguideError::BadProfile("no layers".into()));
        }
        if !cladding.is_finite() || cladding < T::one() {
            return Err(WaveguideError::BadProfile(format!("cladding ε_e = {cladding} < 1")));
        }
        for (l, &e) in layers.iter().enumerate() {
            if !e.is_finite() || e <= cladding {
                return Err(WaveguideError::BadProfile(format!(
                    "layer {} has ε = {e}, not above the cladding {cladding}",
                    l + 1
                )));
            }
        }
        Ok(Self { layers, cladding })
    }

    /// Rebuilds a profile from `(ε_1, …, ε_n, ε_e)`.
    pub fn from_vector(v: &[T]) -> Result<Self> {
        match v.split_last() {
            Some((&cladding, layers)) => Self::new(layers.to_vec(), cladding),
            None => Err(WaveguideError::BadProfile("empty vector".into())),
        }
    }

    /// Same as [`from_vector`](Self::from_vector) but skips validation. The
    /// optimizer evaluates the objective at points that may sit exactly on
    /// the constraint boundary.
    pub fn from_vector_unchecked(v: &[T]) -> Self {
        let (&cladding, layers) = v.split_last().expect("nonempty permittivity vector");
        Self { layers: layers.to_vec(), cladding }
    }

    pub fn layers(&self) -> &[T] {
        &self.layers
    }

    pub fn cladding(&self) -> T {
        self.cladding
    }

    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    /// `ε₊ = max_l ε_l`.
    pub fn max_layer(&self) -> T {
        self.layers.iter().copied().fold(T::neg_infinity(), T::max)
    }

    /// `(ε_1, …, ε_n, ε_e)`.
    pub fn to_vector(&self) -> Vec<T> {
        let mut v = self.layers.clone();
        v.push(self.cladding);
        v
    }
}

/// A `(k, β)` pair at azimuthal order `m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModePoint<T> {
    pub k: T,
    pub beta: T,
    pub m: u32,
}

impl<T: Real> ModePoint<T> {
    pub fn new(k: T, beta: T, m: u32) -> Self {
        Self { k, beta, m }
    }

    /// Whether `k²ε_e < β² < k²ε₊`.
    pub fn is_surface_mode(&self, eps: &PermittivityProfile<T>) -> bool {
        let k2 = self.k * self.k;
        let b2 = self.beta * self.beta;
        b2 > k2 * eps.cladding() && b2 < k2 * eps.max_layer()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TransverseWavenumbers<T> {
    /// `χ_l = √(k²ε_l − β²)`, principal branch.
    pub chi: Vec<Complex<T>>,
    /// `σ = √(β² − k²ε_e) > 0`.
    pub sigma: T,
}

fn principal_sqrt<T: Real>(x: T) -> Complex<T> {
    if x >= T::zero() {
        Complex::new(x.sqrt(), T::zero())
    } else {
        Complex::new(T::zero(), (-x).sqrt())
    }
}

pub fn transverse_wavenumbers<T: Real>(k: T, beta: T, eps: &PermittivityProfile<T>) -> Result<TransverseWavenumbers<T>> {
    if !(k.is_finite() && k > T::zero()) {
        return Err(WaveguideError::BadWavenumber(k.as_f64()));
    }
    let k2 = k * k;
    let b2 = beta * beta;
    let sigma_sq = b2 - k2 * eps.cladding();
    if !(sigma_sq > T::zero()) {
        return Err(WaveguideError::NotSurfaceMode {
            beta_sq: b2.as_f64(),
            floor: (k2 * eps.cladding()).as_f64(),
        });
    }
    let chi = eps.layers().iter().map(|&e| principal_sqrt(k2 * e - b2)).collect();
    Ok(TransverseWavenumbers { chi, sigma: sigma_sq.sqrt() })
}

/// Value and argument-scaled derivative `(f(χr), χ f'(χr))`.
type Pair<T> = (Complex<T>, Complex<T>);

fn j_pair<T: Real>(m: u32, chi: Complex<T>, r: T) -> Result<Pair<T>> {
    let z = chi * r;
    Ok((specfun::bessel_j(m, z)?, chi * specfun::bessel_j_prime(m, z)?))
}

fn h_pair<T: Real>(m: u32, chi: Complex<T>, r: T) -> Result<Pair<T>> {
    let z = chi * r;
    Ok((specfun::hankel1(m, z)?, chi * specfun::hankel1_prime(m, z)?))
}

fn k_pair<T: Real>(m: u32, sigma: T, r: T) -> Result<Pair<T>> {
    let x = sigma * r;
    let v = specfun::bessel_k(m, x)?;
    let d = sigma * specfun::bessel_k_prime(m, x)?;
    Ok((Complex::new(v, T::zero()), Complex::new(d, T::zero())))
}

/// `(K_m(i s r), i s K'_m(i s r))` for real `s > 0`, from
/// `K_m(i x) = −(πi/2)(−i)^m H⁽²⁾_m(x)` and `H⁽²⁾_m(x) = conj H⁽¹⁾_m(x)`.
fn k_pair_imaginary<T: Real>(m: u32, s: T, r: T) -> Result<Pair<T>> {
    let x = Complex::new(s * r, T::zero());
    let h2 = specfun::hankel1(m, x)?.conj();
    let h2p = specfun::hankel1_prime(m, x)?.conj();
    let minus_i = Complex::new(T::zero(), -T::one());
    let c = Complex::new(T::zero(), -T::FRAC_PI_2()) * minus_i.powu(m);
    Ok((c * h2, c * h2p * s))
}

fn check_layers<T: Real>(eps: &PermittivityProfile<T>, geom: &Geometry<T>) -> Result<()> {
    if eps.layer_count() != geom.layer_count() {
        return Err(WaveguideError::LayerMismatch {
            geometry: geom.layer_count(),
            profile: eps.layer_count(),
        });
    }
    Ok(())
}

/// The `2n × 2n` interface-matching matrix `A(k, β, ε)`.
pub fn assemble_matrix<T: Real>(
    k: T,
    beta: T,
    eps: &PermittivityProfile<T>,
    geom: &Geometry<T>,
    m: u32,
) -> Result<DenseComplexMatrix<T>> {
    check_layers(eps, geom)?;
    let tw = transverse_wavenumbers(k, beta, eps)?;
    let radius = geom.outer_radius();
    let outer = k_pair(m, tw.sigma, radius)?;
    assemble(m, &tw.chi, geom, outer)
}

/// [`assemble_matrix`] continued below the cladding line `β² < k²ε_e`,
/// where `σ = i s` and the cladding column holds `K_m(i s r_n)`. Above the
/// line it is identical to [`assemble_matrix`].
pub fn assemble_matrix_continued<T: Real>(
    k: T,
    beta: T,
    eps: &PermittivityProfile<T>,
    geom: &Geometry<T>,
    m: u32,
) -> Result<DenseComplexMatrix<T>> {
    check_layers(eps, geom)?;
    if !(k.is_finite() && k > T::zero()) {
        return Err(WaveguideError::BadWavenumber(k.as_f64()));
    }
    let k2 = k * k;
    let b2 = beta * beta;
    let sigma_sq = b2 - k2 * eps.cladding();
    if sigma_sq > T::zero() {
        return assemble_matrix(k, beta, eps, geom, m);
    }
    if !(sigma_sq < T::zero()) {
        return Err(WaveguideError::SpecFun(SpecFunError::Singular));
    }
    let chi: Vec<Complex<T>> = eps.layers().iter().map(|&e| principal_sqrt(k2 * e - b2)).collect();
    let outer = k_pair_imaginary(m, (-sigma_sq).sqrt(), geom.outer_radius())?;
    assemble(m, &chi, geom, outer)
}

fn assemble<T: Real>(m: u32, chi: &[Complex<T>], geom: &Geometry<T>, outer: Pair<T>) -> Result<DenseComplexMatrix<T>> {
    let n = geom.layer_count();
    let mut a = DenseComplexMatrix::zeros(2 * n);
    let radii = geom.radii();
    // column of the J coefficient in layer l (0-based); the H coefficient follows it
    let j_col = |l: usize| if l == 0 { 0 } else { 2 * l - 1 };
    for (l, &r) in radii.iter().enumerate() {
        let row = 2 * l;
        let (jv, jd) = j_pair(m, chi[l], r)?;
        a[(row, j_col(l))] = jv;
        a[(row + 1, j_col(l))] = jd;
        if l > 0 {
            let (hv, hd) = h_pair(m, chi[l], r)?;
            a[(row, j_col(l) + 1)] = hv;
            a[(row + 1, j_col(l) + 1)] = hd;
        }
        if l + 1 < n {
            let next = j_col(l + 1);
            let (jv, jd) = j_pair(m, chi[l + 1], r)?;
            let (hv, hd) = h_pair(m, chi[l + 1], r)?;
            a[(row, next)] = -jv;
            a[(row + 1, next)] = -jd;
            a[(row, next + 1)] = -hv;
            a[(row + 1, next + 1)] = -hd;
        } else {
            let (kv, kd) = outer;
            a[(row, 2 * n - 1)] = -kv;
            a[(row + 1, 2 * n - 1)] = -kd;
        }
    }
    Ok(a)
}

/// `det A(k, β, ε)`.
pub fn characteristic_value<T: Real>(
    k: T,
    beta: T,
    eps: &PermittivityProfile<T>,
    geom: &Geometry<T>,
    m: u32,
) -> Result<Complex<T>> {
    Ok(assemble_matrix(k, beta, eps, geom, m)?.determinant())
}

/// `1 / cond(A(k, β, ε))`, zero at an exact characteristic root.
pub fn inverse_condition<T: Real>(
    k: T,
    beta: T,
    eps: &PermittivityProfile<T>,
    geom: &Geometry<T>,
    m: u32,
) -> Result<T> {
    Ok(assemble_matrix(k, beta, eps, geom, m)?.inverse_condition())
}

/// [`inverse_condition`] on [`assemble_matrix_continued`]; zero exactly on
/// the cladding line, which is the limit from both sides.
pub fn inverse_condition_continued<T: Real>(
    k: T,
    beta: T,
    eps: &PermittivityProfile<T>,
    geom: &Geometry<T>,
    m: u32,
) -> Result<T> {
    match assemble_matrix_continued(k, beta, eps, geom, m) {
        Ok(a) => Ok(a.inverse_condition()),
        Err(WaveguideError::SpecFun(SpecFunError::Singular)) => Ok(T::zero()),
        Err(e) => Err(e),
    }
}
