//! Cylinder functions of integer order.
//!
//! `J_m`, `Y_m` and `H⁽¹⁾_m` are evaluated for complex arguments, the
//! Macdonald function `K_m` (and its companion `I_m`) for real arguments.
//! Derivatives come from the standard midpoint recurrences, so
//! `J'_0 = -J_1` and `K'_0 = -K_1` hold exactly.
//!
//! Evaluation regions for the complex functions, by `r = |z|`:
//!
//! | region | `J_m` | `Y_0`, `Y_1` |
//! |--------|-------|--------------|
//! | `r ≤ 1`, or `r ≤ 17` with `|Im z| > |Re z|` | ascending series | log series |
//! | `1 < r ≤ 17` otherwise | Miller backward recurrence | Neumann series over `J_{2k}` |
//! | `r > 17` | Miller backward recurrence | Hankel asymptotic expansion |
//!
//! Higher orders of `Y` and `H⁽¹⁾` come from forward recurrence, which is
//! stable for the dominant solutions.

mod cylinder;
mod modified;

use num_complex::Complex;
use thiserror::Error;

use crate::scalar::Real;


/// Largest supported order.
pub const MAX_ORDER: u32 = 64;
/// Arguments must satisfy `|z| < MAX_ARGUMENT`.
pub const MAX_ARGUMENT: f64 = 1e4;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum SpecFunError {
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderOutOfRange(u32),
    #[error("argument modulus {0:e} is outside the supported envelope |z| < 1e4")]
    ArgumentOutOfRange(f64),
    #[error("function is singular at the origin")]
    Singular,
    #[error("argument must be strictly positive, got {0:e}")]
    NonPositive(f64),
    #[error("result is not representable (overflow)")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, SpecFunError>;

fn check_order(m: u32) -> Result<()> {
    if m > MAX_ORDER {
        return Err(SpecFunError::OrderOutOfRange(m));
    }
    Ok(())
}

fn check_complex<T: Real>(z: Complex<T>) -> Result<()> {
    let r = z.norm();
    if !r.is_finite() || r >= T::lit(MAX_ARGUMENT) {
        return Err(SpecFunError::ArgumentOutOfRange(r.as_f64()));
    }
    Ok(())
}

fn check_real<T: Real>(x: T) -> Result<()> {
    if x.is_nan() || x.abs() >= T::lit(MAX_ARGUMENT) {
        return Err(SpecFunError::ArgumentOutOfRange(x.as_f64()));
    }
    Ok(())
}

fn check_positive<T: Real>(x: T) -> Result<()> {
    check_real(x)?;
    if x <= T::zero() {
        return Err(SpecFunError::NonPositive(x.as_f64()));
    }
    Ok(())
}

fn finite<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(SpecFunError::Overflow)
    }
}

fn finite_real<T: Real>(x: T) -> Result<T> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(SpecFunError::Overflow)
    }
}

/// `(f_{m-1} - f_{m+1}) / 2`, with `f_{-1} = -f_1` folded in for `m = 0`.
fn midpoint_derivative<T: Real>(m: usize, values: &[Complex<T>]) -> Complex<T> {
    if m == 0 {
        -values[1]
    } else {
        (values[m - 1] - values[m + 1]) * T::lit(0.5)
    }
}

/// Bessel function of the first kind `J_m(z)`.
pub fn bessel_j<T: Real>(m: u32, z: Complex<T>) -> Result<Complex<T>> {
    check_order(m)?;
    check_complex(z)?;
    finite(cylinder::j_values(m as usize, z)[m as usize])
}

/// `J'_m(z)`.
pub fn bessel_j_prime<T: Real>(m: u32, z: Complex<T>) -> Result<Complex<T>> {
    check_order(m)?;
    check_complex(z)?;
    let values = cylinder::j_values(m as usize + 1, z);
    finite(midpoint_derivative(m as usize, &values))
}

/// Bessel function of the second kind `Y_m(z)`, principal branch.
pub fn bessel_y<T: Real>(m: u32, z: Complex<T>) -> Result<Complex<T>> {
    check_order(m)?;
    check_complex(z)?;
    finite(cylinder::y_values(m as usize, z)?[m as usize])
}

/// `Y'_m(z)`.
pub fn bessel_y_prime<T: Real>(m: u32, z: Complex<T>) -> Result<Complex<T>> {
    check_order(m)?;
    check_complex(z)?;
    let values = cylinder::y_values(m as usize + 1, z)?;
    finite(midpoint_derivative(m as usize, &values))
}

/// Hankel function of the first kind `H⁽¹⁾_m(z) = J_m(z) + i Y_m(z)`.
pub fn hankel1<T: Real>(m: u32, z: Complex<T>) -> Result<Complex<T>> {
    check_order(m)?;
    check_complex(z)?;
    finite(cylinder::h1_values(m as usize, z)?[m as usize])
}

/// `H⁽¹⁾'_m(z)`.
pub fn hankel1_prime<T: Real>(m: u32, z: Complex<T>) -> Result<Complex<T>> {
    check_order(m)?;
    check_complex(z)?;
    let values = cylinder::h1_values(m as usize + 1, z)?;
    finite(midpoint_derivative(m as usize, &values))
}

/// Macdonald function `K_m(x)` for `x > 0`.
pub fn bessel_k<T: Real>(m: u32, x: T) -> Result<T> {
    check_order(m)?;
    check_positive(x)?;
    finite_real(modified::k_values(m as usize, x)[m as usize])
}

/// `K'_m(x) = -(K_{m-1}(x) + K_{m+1}(x)) / 2`, with `K'_0 = -K_1`.
pub fn bessel_k_prime<T: Real>(m: u32, x: T) -> Result<T> {
    check_order(m)?;
    check_positive(x)?;
    let k = modified::k_values(m as usize + 1, x);
    let m = m as usize;
    let d = if m == 0 {
        -k[1]
    } else {
        -(k[m - 1] + k[m + 1]) * T::lit(0.5)
    };
    finite_real(d)
}

/// Modified Bessel function of the first kind `I_m(x)` (ascending series).
pub fn bessel_i<T: Real>(m: u32, x: T) -> Result<T> {
    check_order(m)?;
    check_real(x)?;
    finite_real(modified::i_series(m as usize, x))
}

/// `I'_m(x) = (I_{m-1}(x) + I_{m+1}(x)) / 2`, with `I'_0 = I_1`.
pub fn bessel_i_prime<T: Real>(m: u32, x: T) -> Result<T> {
    check_order(m)?;
    check_real(x)?;
    let m = m as usize;
    let d = if m == 0 {
        modified::i_series(1, x)
    } else {
        (modified::i_series(m - 1, x) + modified::i_series(m + 1, x)) * T::lit(0.5)
    };
    finite_real(d)
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod reference;
