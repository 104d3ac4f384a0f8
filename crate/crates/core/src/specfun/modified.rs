use crate::scalar::Real;

/// `K_0`, `K_1` use the log series up to here.
pub(crate) const K_SERIES_MAX: f64 = 2.0;
/// Between the series and this bound the integral representation is used;
/// beyond it, the asymptotic expansion.
pub(crate) const K_QUADRATURE_MAX: f64 = 25.0;

const QUADRATURE_STEP: f64 = 0.125;
const MAX_TERMS: usize = 100_000;

#[inline]
fn idx<T: Real>(k: usize) -> T {
    T::from_usize(k).unwrap()
}

/// Ascending series `I_m(x) = (x/2)^m Σ (x²/4)^k / (k! (m+k)!)`.
pub(crate) fn i_series<T: Real>(m: usize, x: T) -> T {
    let half = x * T::lit(0.5);
    let mut lead = T::one();
    for j in 1..=m {
        lead = lead * half / idx::<T>(j);
    }
    let q = half * half;
    let mut term = T::one();
    let mut sum = T::one();
    for k in 1..MAX_TERMS {
        let denom = idx::<T>(k * (m + k));
        term = term * q / denom;
        sum = sum + term;
        if denom > q && term <= T::epsilon() * sum {
            break;
        }
    }
    lead * sum
}

/// Log series for `(K_0(x), K_1(x))`:
///
/// `K_0 = -(ln(x/2) + γ) I_0 + Σ_{k≥1} H_k t_k`, `t_k = (x²/4)^k / (k!)²`
/// `K_1 = 1/x + (ln(x/2) + γ) I_1 - (x/4) Σ_{k≥0} (H_k + H_{k+1}) s_k`,
/// `s_k = (x²/4)^k / (k! (k+1)!)`.
pub(crate) fn k01_series<T: Real>(x: T) -> (T, T) {
    let half = x * T::lit(0.5);
    let q = half * half;
    let log_term = half.ln() + T::euler_gamma();
    let mut t = T::one();
    let mut s = T::one();
    let mut i0 = T::one();
    let mut i1_sum = T::one();
    let mut sum0 = T::zero();
    let mut sum1 = T::one();
    let mut harmonic = T::zero();
    for k in 1..MAX_TERMS {
        let kk = idx::<T>(k);
        t = t * q / (kk * kk);
        s = s * q / (kk * (kk + T::one()));
        harmonic = harmonic + T::one() / kk;
        let next = harmonic + T::one() / (kk + T::one());
        i0 = i0 + t;
        i1_sum = i1_sum + s;
        sum0 = sum0 + harmonic * t;
        sum1 = sum1 + (harmonic + next) * s;
        if t <= T::epsilon() * i0 * T::lit(0.01) && s <= T::epsilon() * i1_sum * T::lit(0.01) {
            break;
        }
    }
    let i1 = half * i1_sum;
    let k0 = -log_term * i0 + sum0;
    let k1 = T::one() / x + log_term * i1 - half * T::lit(0.5) * sum1;
    (k0, k1)
}

/// Trapezoidal rule on `K_ν(x) = ∫_0^∞ e^{-x cosh t} cosh(νt) dt`, which
/// converges geometrically for this analytic, doubly decaying integrand.
pub(crate) fn k01_quadrature<T: Real>(x: T) -> (T, T) {
    let h = T::lit(QUADRATURE_STEP);
    let cutoff = T::lit(46.0);
    let two = T::lit(2.0);
    let mut s0 = T::lit(0.5);
    let mut s1 = T::lit(0.5);
    for j in 1..MAX_TERMS {
        let t = h * idx::<T>(j);
        let sh = (t * T::lit(0.5)).sinh();
        // x (cosh t - 1) without cancellation
        let expo = two * x * sh * sh;
        if expo > cutoff + t {
            break;
        }
        let f = (-expo).exp();
        s0 = s0 + f;
        s1 = s1 + f * t.cosh();
    }
    let scale = (-x).exp() * h;
    (s0 * scale, s1 * scale)
}

/// `K_ν(x) ~ sqrt(π/2x) e^{-x} Σ a_k(ν) / x^k`, truncated at the smallest term.
pub(crate) fn k01_asymptotic<T: Real>(x: T) -> (T, T) {
    let expansion = |nu: f64| {
        let mu = T::lit(4.0 * nu * nu);
        let mut coeff = T::one();
        let mut sum = T::one();
        let mut prev = T::infinity();
        for k in 1..200usize {
            let odd = idx::<T>(2 * k - 1);
            coeff = coeff * (mu - odd * odd) / (T::lit(8.0) * idx::<T>(k) * x);
            if coeff.abs() > prev {
                break;
            }
            sum = sum + coeff;
            prev = coeff.abs();
            if prev <= T::epsilon() * T::lit(0.25) {
                break;
            }
        }
        sum
    };
    let pref = (T::PI() / (T::lit(2.0) * x)).sqrt() * (-x).exp();
    (pref * expansion(0.0), pref * expansion(1.0))
}

fn k01<T: Real>(x: T) -> (T, T) {
    if x <= T::lit(K_SERIES_MAX) {
        k01_series(x)
    } else if x < T::lit(K_QUADRATURE_MAX) {
        k01_quadrature(x)
    } else {
        k01_asymptotic(x)
    }
}

/// `K_0(x), ..., K_nmax(x)` by forward recurrence `K_{k+1} = K_{k-1} + (2k/x) K_k`.
pub(crate) fn k_values<T: Real>(nmax: usize, x: T) -> Vec<T> {
    let (k0, k1) = k01(x);
    let mut v = Vec::with_capacity(nmax + 1);
    v.push(k0);
    if nmax >= 1 {
        v.push(k1);
    }
    for k in 1..nmax {
        let next = v[k - 1] + T::lit(2.0) * idx::<T>(k) / x * v[k];
        v.push(next);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_and_quadrature_agree_at_switchover() {
        for &x in &[0.5f64, 1.0, 1.5, 2.0] {
            let (a0, a1) = k01_series(x);
            let (b0, b1) = k01_quadrature(x);
            assert!((a0 - b0).abs() <= 1e-14 * a0, "x={x}");
            assert!((a1 - b1).abs() <= 1e-14 * a1, "x={x}");
        }
    }

    #[test]
    fn quadrature_and_asymptotic_agree_at_switchover() {
        for &x in &[22.0f64, 25.0, 28.0] {
            let (a0, a1) = k01_quadrature(x);
            let (b0, b1) = k01_asymptotic(x);
            assert!((a0 - b0).abs() <= 1e-14 * a0, "x={x}");
            assert!((a1 - b1).abs() <= 1e-14 * a1, "x={x}");
        }
    }

    #[test]
    fn i_series_small_values() {
        assert_eq!(i_series::<f64>(0, 0.0), 1.0);
        assert_eq!(i_series::<f64>(3, 0.0), 0.0);
        // I_1(x) ~ x/2
        assert!((i_series(1, 1e-6) - 5e-7f64).abs() < 1e-19);
    }
}
