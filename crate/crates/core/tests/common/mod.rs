#![allow(dead_code)]

use fiberspec_core::{Complex, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const TABLE: [(f64, f64); 5] = [
    (2.4, 5.30978783787819),
    (4.8, 10.63618822212100),
    (7.2, 16.02129849868130),
    (9.6, 21.46863534179760),
    (12.0, 26.96464966481510),
];
pub const TRUTH: [f64; 2] = [2.383936, 2.21235876];
pub const PRINTED_GUESS: f64 = 2.21241159911591;
pub const PRINTED_EPS_ALPHA: [f64; 2] = [2.38393603911088, 2.21235872913944];

/// Entries with real and imaginary parts uniform on (−1, 1).
pub fn random_matrix(dim: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = (0..dim * dim).map(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
    Matrix::from_row_major(entries).unwrap()
}

fn rows(m: &Matrix) -> Vec<Vec<Complex>> {
    (0..m.dim()).map(|i| m.row(i).to_vec()).collect()
}

fn cofactor(a: &[Vec<Complex>]) -> Complex {
    let n = a.len();
    if n == 1 {
        return a[0][0];
    }
    let mut sum = Complex::new(0.0, 0.0);
    for j in 0..n {
        let minor: Vec<Vec<Complex>> =
            a[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect()).collect();
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        sum += a[0][j] * cofactor(&minor) * sign;
    }
    sum
}

/// Laplace expansion along the first row.
pub fn cofactor_determinant(m: &Matrix) -> Complex {
    cofactor(&rows(m))
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _ in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum();
        let diag: f64 = (0..n).map(|i| a[i][i] * a[i][i]).sum();
        if off <= 1e-32 * diag {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// `σ_max / σ_min` from the eigenvalues of `MᴴM`, written as the real
/// symmetric block matrix `[[Re, −Im], [Im, Re]]` whose spectrum repeats
/// each eigenvalue twice.
pub fn jacobi_condition(m: &Matrix) -> f64 {
    let n = m.dim();
    let a = rows(m);
    let mut h = vec![vec![Complex::new(0.0, 0.0); n]; n];
    for i in 0..n {
        for j in 0..n {
            h[i][j] = (0..n).map(|k| a[k][i].conj() * a[k][j]).sum();
        }
    }
    let mut s = vec![vec![0.0; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            s[i][j] = h[i][j].re;
            s[i + n][j + n] = h[i][j].re;
            s[i][j + n] = -h[i][j].im;
            s[i + n][j] = h[i][j].im;
        }
    }
    let ev = jacobi_eigenvalues(s);
    (ev[2 * n - 1] / ev[0]).sqrt()
}

pub fn rel(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs()
}
