//! Determinant and 2-norm condition number of small dense complex matrices.

use std::ops::{Index, IndexMut};

use num_complex::Complex;

use crate::scalar::Real;

const MAX_JACOBI_SWEEPS: usize = 80;

/// Square matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseComplexMatrix<T> {
    dim: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Real> DenseComplexMatrix<T> {
    /// Zero matrix. Panics if `dim == 0`.
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        Self {
            dim,
            entries: vec![Complex::new(T::zero(), T::zero()); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_diagonal(diag: &[Complex<T>]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = *d;
        }
        m
    }

    /// Builds a matrix from row-major entries; `None` unless `entries.len()` is a nonzero square.
    pub fn from_row_major(entries: Vec<Complex<T>>) -> Option<Self> {
        let dim = (entries.len() as f64).sqrt().round() as usize;
        if dim == 0 || dim * dim != entries.len() {
            return None;
        }
        Some(Self { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Complex<T>] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn scaled(&self, c: Complex<T>) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|z| *z * c).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> T {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    /// Determinant via LU factorisation with partial pivoting.
    pub fn determinant(&self) -> Complex<T> {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut det = Complex::new(T::one(), T::zero());
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| a[i * n + col].norm().partial_cmp(&a[j * n + col].norm()).unwrap())
                .unwrap();
            let p = a[pivot * n + col];
            if p.norm() == T::zero() {
                return Complex::new(T::zero(), T::zero());
            }
            if pivot != col {
                for k in 0..n {
                    a.swap(col * n + k, pivot * n + k);
                }
                det = -det;
            }
            det = det * p;
            for row in col + 1..n {
                let factor = a[row * n + col] / p;
                if factor.norm() == T::zero() {
                    continue;
                }
                for k in col + 1..n {
                    let upper = a[col * n + k];
                    a[row * n + k] = a[row * n + k] - factor * upper;
                }
            }
        }
        det
    }

    /// Singular values in descending order, by one-sided (Hestenes) Jacobi
    /// rotations on the columns.
    pub fn singular_values(&self) -> Vec<T> {
        let n = self.dim;
        // column-major working copy
        let mut cols: Vec<Vec<Complex<T>>> = (0..n)
            .map(|j| (0..n).map(|i| self.entries[i * n + j]).collect())
            .collect();
        let tol = T::epsilon() * T::lit(n as f64);
        for _ in 0..MAX_JACOBI_SWEEPS {
            let mut rotated = false;
            for p in 0..n {
                for q in p + 1..n {
                    let alpha: T = cols[p].iter().map(|z| z.norm_sqr()).sum();
                    let beta: T = cols[q].iter().map(|z| z.norm_sqr()).sum();
                    let gamma: Complex<T> = cols[p]
                        .iter()
                        .zip(&cols[q])
                        .map(|(a, b)| a.conj() * b)
                        .fold(Complex::new(T::zero(), T::zero()), |acc, v| acc + v);
                    let g = gamma.norm();
                    if g == T::zero() || g <= tol * (alpha * beta).sqrt() {
                        continue;
                    }
                    rotated = true;
                    // Rotate the phase out of column q, then apply a real rotation.
                    let phase = gamma / g;
                    let zeta = (beta - alpha) / (T::lit(2.0) * g);
                    let t = zeta.signum() / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
                    let c = T::one() / (T::one() + t * t).sqrt();
                    let s = c * t;
                    let phase_conj = phase.conj();
                    for i in 0..n {
                        let ap = cols[p][i];
                        let bq = cols[q][i] * phase_conj;
                        cols[p][i] = ap * c - bq * s;
                        cols[q][i] = ap * s + bq * c;
                    }
                }
            }
            if !rotated {
                break;
            }
        }
        let mut sv: Vec<T> = cols
            .iter()
            .map(|col| col.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt())
            .collect();
        sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
        sv
    }

    /// `σ_max / σ_min`; `T::max_value()` when `σ_min` underflows to zero.
    pub fn condition_number(&self) -> T {
        let sv = self.singular_values();
        let (max, min) = (sv[0], sv[sv.len() - 1]);
        if min == T::zero() {
            return T::max_value();
        }
        let c = max / min;
        if c.is_finite() {
            c
        } else {
            T::max_value()
        }
    }

    /// `σ_min / σ_max`, in `[0, 1]`; exactly zero for a numerically singular matrix.
    pub fn inverse_condition(&self) -> T {
        let sv = self.singular_values();
        let (max, min) = (sv[0], sv[sv.len() - 1]);
        if max == T::zero() {
            return T::zero();
        }
        min / max
    }
}

impl<T> Index<(usize, usize)> for DenseComplexMatrix<T> {
    type Output = Complex<T>;

    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.entries[i * self.dim + j]
    }
}

impl<T> IndexMut<(usize, usize)> for DenseComplexMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.entries[i * self.dim + j]
    }
}
