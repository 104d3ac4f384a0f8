use num_complex::Complex;

use super::{modified, Result, SpecFunError};
use crate::scalar::Real;

/// Every argument with `|z|` at or below this uses the ascending series.
const SMALL_RADIUS: f64 = 1.0;
/// Beyond this modulus `Y_0`, `Y_1` (and `H⁽¹⁾` in the upper half plane)
/// come from the Hankel expansion. At 17 the smallest term of the
/// expansion is below `e^{-34}`.
pub(crate) const ASYMPTOTIC_RADIUS: f64 = 17.0;

const MAX_SERIES_TERMS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Region {
    Origin,
    Series,
    Recurrence,
    Asymptotic,
}

fn region<T: Real>(z: Complex<T>) -> Region {
    let r = z.norm();
    if r == T::zero() {
        Region::Origin
    } else if r > T::lit(ASYMPTOTIC_RADIUS) {
        Region::Asymptotic
    } else if r <= T::lit(SMALL_RADIUS) || z.im.abs() > z.re.abs() {
        Region::Series
    } else {
        Region::Recurrence
    }
}

#[inline]
fn real<T: Real>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

#[inline]
fn idx<T: Real>(k: usize) -> T {
    T::from_usize(k).unwrap()
}

/// `i^k` for `w = i`, or `(-i)^k` for `w = -i`.
fn unit_power<T: Real>(w: Complex<T>, k: usize) -> Complex<T> {
    match k % 4 {
        0 => Complex::new(T::one(), T::zero()),
        1 => w,
        2 => Complex::new(-T::one(), T::zero()),
        _ => -w,
    }
}

/// `J_0(z), ..., J_nmax(z)`.
pub(crate) fn j_values<T: Real>(nmax: usize, z: Complex<T>) -> Vec<Complex<T>> {
    match region(z) {
        Region::Origin => {
            let mut v = vec![Complex::new(T::zero(), T::zero()); nmax + 1];
            v[0] = real(T::one());
            v
        }
        Region::Series => (0..=nmax).map(|m| j_series(m, z)).collect(),
        Region::Recurrence | Region::Asymptotic => j_miller(nmax, z),
    }
}

/// Ascending series `(z/2)^m Σ (-z²/4)^k / (k! (m+k)!)`.
fn j_series<T: Real>(m: usize, z: Complex<T>) -> Complex<T> {
    let half = z * T::lit(0.5);
    let mut lead = real(T::one());
    for j in 1..=m {
        lead = lead * half / idx::<T>(j);
    }
    let q = -(half * half);
    let qn = q.norm();
    let mut term = real(T::one());
    let mut sum = term;
    for k in 1..MAX_SERIES_TERMS {
        let denom = idx::<T>(k * (m + k));
        term = term * q / denom;
        sum = sum + term;
        if denom > qn && term.norm() <= T::epsilon() * sum.norm() {
            break;
        }
    }
    lead * sum
}

/// Miller's backward recurrence.
///
/// Real arguments are normalised with `1 = J_0 + 2 Σ J_{2k}`; complex ones
/// with the generating-function identity `e^{∓iz} = J_0 + 2 Σ (∓i)^k J_k`,
/// the sign chosen so the left side is the larger exponential.
fn j_miller<T: Real>(nmax: usize, z: Complex<T>) -> Vec<Complex<T>> {
    let zero = Complex::new(T::zero(), T::zero());
    let a = (nmax as f64).max(z.norm().as_f64());
    let mut start = (a + (160.0 * a.max(1.0)).sqrt() + 20.0).ceil() as usize;
    start += start % 2;

    let is_real = z.im == T::zero();
    let w = if z.im < T::zero() {
        Complex::new(T::zero(), T::one())
    } else {
        Complex::new(T::zero(), -T::one())
    };
    let two = T::lit(2.0);
    let big = T::max_value().sqrt();
    let inv_big = T::one() / big;

    let inv_z = real(T::one()) / z;
    let mut values = vec![zero; nmax + 1];
    let mut next = zero;
    let mut cur = real(T::one());
    let mut sum = zero;
    for k in (1..=start).rev() {
        if k <= nmax {
            values[k] = cur;
        }
        if is_real {
            if k % 2 == 0 {
                sum = sum + cur * two;
            }
        } else {
            sum = sum + unit_power(w, k) * cur * two;
        }
        let prev = cur * inv_z * (two * idx::<T>(k)) - next;
        next = cur;
        cur = prev;
        if cur.norm() > big {
            cur = cur * inv_big;
            next = next * inv_big;
            sum = sum * inv_big;
            for v in values.iter_mut().skip(k) {
                *v = *v * inv_big;
            }
        }
    }
    values[0] = cur;
    sum = sum + cur;

    let normaliser = if is_real {
        real(T::one())
    } else {
        // e^{iz} when w = i, e^{-iz} when w = -i.
        (w * z).exp()
    };
    let scale = normaliser / sum;
    for v in values.iter_mut() {
        *v = *v * scale;
    }
    values
}

/// Hankel's expansion for `(H⁽¹⁾_m(z), H⁽²⁾_m(z))`, valid for `Re z ≥ 0`
/// and large `|z|`. Summation stops at the smallest term.
pub(crate) fn hankel_asymptotic<T: Real>(m: u32, z: Complex<T>) -> (Complex<T>, Complex<T>) {
    let mu = T::lit(4.0 * (m as f64) * (m as f64));
    let i = Complex::new(T::zero(), T::one());
    let inv_z = real(T::one()) / z;
    let mut coeff = T::one();
    let mut zpow = real(T::one());
    let mut sum_plus = real(T::one());
    let mut sum_minus = real(T::one());
    let mut prev = T::infinity();
    for k in 1..200usize {
        let odd = idx::<T>(2 * k - 1);
        coeff = coeff * (mu - odd * odd) / (T::lit(8.0) * idx::<T>(k));
        zpow = zpow * inv_z;
        let term = zpow * coeff;
        let size = term.norm();
        if size > prev {
            break;
        }
        let ik = unit_power(i, k);
        sum_plus = sum_plus + ik * term;
        sum_minus = sum_minus + ik.conj() * term;
        prev = size;
        if size <= T::epsilon() * T::lit(0.25) {
            break;
        }
    }
    let pi = T::PI();
    let omega = z - real(T::lit(m as f64) * pi * T::lit(0.5) + pi * T::lit(0.25));
    let pref = (real(T::lit(2.0) / pi) / z).sqrt();
    let h1 = pref * (i * omega).exp() * sum_plus;
    let h2 = pref * (-i * omega).exp() * sum_minus;
    (h1, h2)
}

fn y01_asymptotic<T: Real>(z: Complex<T>) -> (Complex<T>, Complex<T>) {
    let two_i = Complex::new(T::zero(), T::lit(2.0));
    if z.re >= T::zero() {
        let (a1, a2) = hankel_asymptotic(0, z);
        let (b1, b2) = hankel_asymptotic(1, z);
        return ((a1 - a2) / two_i, (b1 - b2) / two_i);
    }
    // Y_m(w e^{±iπ}) = (-1)^m (Y_m(w) ± 2i J_m(w)), w = -z; on the cut the
    // principal branch takes the upper side.
    let w = -z;
    let sign = if z.im >= T::zero() { T::one() } else { -T::one() };
    let (a1, a2) = hankel_asymptotic(0, w);
    let (b1, b2) = hankel_asymptotic(1, w);
    let (j0, y0) = ((a1 + a2) * T::lit(0.5), (a1 - a2) / two_i);
    let (j1, y1) = ((b1 + b2) * T::lit(0.5), (b1 - b2) / two_i);
    let y0z = y0 + two_i * j0 * sign;
    let y1z = -(y1 + two_i * j1 * sign);
    (y0z, y1z)
}

/// Log series for `Y_0` and `Y_1` built on the ascending series of `J`.
fn y01_series<T: Real>(z: Complex<T>) -> (Complex<T>, Complex<T>) {
    let pi = T::PI();
    let half = z * T::lit(0.5);
    let q = -(half * half);
    let qn = q.norm();
    let log_term = (half.ln()) + real(T::euler_gamma());

    // Σ H_k q^k/(k!)² and Σ (H_k + H_{k+1}) q^k/(k!(k+1)!).
    let mut t0 = real(T::one());
    let mut t1 = real(T::one());
    let mut harmonic = T::zero();
    let mut s0 = real(T::zero());
    let mut s1 = real(T::one());
    for k in 1..MAX_SERIES_TERMS {
        let kk = idx::<T>(k);
        t0 = t0 * q / (kk * kk);
        t1 = t1 * q / (kk * (kk + T::one()));
        harmonic = harmonic + T::one() / kk;
        let next_harmonic = harmonic + T::one() / (kk + T::one());
        let d0 = t0 * harmonic;
        let d1 = t1 * (harmonic + next_harmonic);
        s0 = s0 + d0;
        s1 = s1 + d1;
        if kk * kk > qn && d0.norm() <= T::epsilon() * s0.norm() && d1.norm() <= T::epsilon() * s1.norm()
        {
            break;
        }
    }
    let j0 = j_series(0, z);
    let j1 = j_series(1, z);
    let two_over_pi = T::lit(2.0) / pi;
    let y0 = (log_term * j0 - s0) * two_over_pi;
    let y1 = (log_term * j1) * two_over_pi - real(two_over_pi) / z - half * s1 / pi;
    (y0, y1)
}

/// Neumann expansions of `Y_0`, `Y_1` in terms of `J_k`:
///
/// `(π/2) Y_0 = (ln(z/2) + γ) J_0 - 2 Σ (-1)^k J_{2k} / k`
/// `(π/2) Y_1 = -J_0/z + (ln(z/2) + γ - 1) J_1 - Σ (-1)^k (2k+1) J_{2k+1} / (k(k+1))`
fn y01_neumann<T: Real>(z: Complex<T>) -> (Complex<T>, Complex<T>) {
    let r = z.norm().as_f64();
    let order = (r + (160.0 * r.max(1.0)).sqrt() + 20.0).ceil() as usize;
    let j = j_values(order + 1, z);
    let log_term = (z * T::lit(0.5)).ln() + real(T::euler_gamma());
    let mut s0 = real(T::zero());
    let mut s1 = real(T::zero());
    let mut k = 1;
    while 2 * k + 1 <= order {
        let kk = idx::<T>(k);
        let sign = if k % 2 == 0 { T::one() } else { -T::one() };
        s0 = s0 + j[2 * k] * (sign / kk);
        s1 = s1 + j[2 * k + 1] * (sign * (T::lit(2.0) * kk + T::one()) / (kk * (kk + T::one())));
        k += 1;
    }
    let two_over_pi = T::lit(2.0) / T::PI();
    let y0 = (log_term * j[0] - s0 * T::lit(2.0)) * two_over_pi;
    let y1 = (-(j[0] / z) + (log_term - real(T::one())) * j[1] - s1) * two_over_pi;
    (y0, y1)
}

fn forward_recurrence<T: Real>(nmax: usize, z: Complex<T>, f0: Complex<T>, f1: Complex<T>) -> Vec<Complex<T>> {
    let mut v = Vec::with_capacity(nmax + 1);
    v.push(f0);
    if nmax >= 1 {
        v.push(f1);
    }
    let inv_z = real(T::one()) / z;
    for k in 1..nmax {
        let next = v[k] * inv_z * (T::lit(2.0) * idx::<T>(k)) - v[k - 1];
        v.push(next);
    }
    v
}

/// `Y_0(z), ..., Y_nmax(z)`.
pub(crate) fn y_values<T: Real>(nmax: usize, z: Complex<T>) -> Result<Vec<Complex<T>>> {
    let (y0, y1) = match region(z) {
        Region::Origin => return Err(SpecFunError::Singular),
        Region::Series => y01_series(z),
        Region::Recurrence => y01_neumann(z),
        Region::Asymptotic => y01_asymptotic(z),
    };
    Ok(forward_recurrence(nmax, z, y0, y1))
}

/// `H⁽¹⁾_0(z), ..., H⁽¹⁾_nmax(z)`.
///
/// On the positive imaginary axis `H⁽¹⁾_m(iy) = (2/π) (-i)^{m+1} K_m(y)`
/// avoids the cancellation in `J + iY`. Far from the origin in the upper
/// half plane the expansion is used directly. Elsewhere the sum `J + iY`
/// is formed; it loses about `2 Im z / ln 10` digits when `Im z > 0`.
pub(crate) fn h1_values<T: Real>(nmax: usize, z: Complex<T>) -> Result<Vec<Complex<T>>> {
    let reg = region(z);
    if reg == Region::Origin {
        return Err(SpecFunError::Singular);
    }
    if z.re == T::zero() && z.im > T::zero() {
        let k = modified::k_values(nmax, z.im);
        let minus_i = Complex::new(T::zero(), -T::one());
        let two_over_pi = T::lit(2.0) / T::PI();
        return Ok(k
            .into_iter()
            .enumerate()
            .map(|(m, km)| unit_power(minus_i, m + 1) * (km * two_over_pi))
            .collect());
    }
    if reg == Region::Asymptotic && z.im > T::zero() {
        let (h0, _) = hankel_asymptotic(0, z);
        let (h1, _) = hankel_asymptotic(1, z);
        return Ok(forward_recurrence(nmax, z, h0, h1));
    }
    let j = j_values(nmax, z);
    let y = y_values(nmax, z)?;
    let i = Complex::new(T::zero(), T::one());
    Ok(j.into_iter().zip(y).map(|(jm, ym)| jm + i * ym).collect())
}
