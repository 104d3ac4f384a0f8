mod common;

use common::*;
use fiberspec_core::Matrix;

#[test]
fn determinant_matches_cofactor_expansion() {
    for seed in 0..120u64 {
        let dim = 1 + (seed % 5) as usize;
        let m = random_matrix(dim, seed);
        let want = cofactor_determinant(&m);
        let got = m.determinant();
        assert!((got - want).norm() <= 1e-12 * want.norm(), "dim {dim} seed {seed}: {got} vs {want}");
    }
}

#[test]
fn condition_number_matches_jacobi_oracle() {
    for seed in 0..120u64 {
        let dim = 1 + (seed % 8) as usize;
        let m = random_matrix(dim, 1000 + seed);
        let want = jacobi_condition(&m);
        let got = m.condition_number();
        assert!(rel(got, want) <= 1e-10, "dim {dim} seed {seed}: {got} vs {want}");
    }
}

#[test]
fn jacobi_oracle_sanity() {
    let d = Matrix::from_diagonal(&[fiberspec_core::Complex::new(10.0, 0.0), fiberspec_core::Complex::new(0.0, 0.1)]);
    assert!(rel(jacobi_condition(&d), 100.0) < 1e-14);
    let ev = jacobi_eigenvalues(vec![vec![2.0, 1.0], vec![1.0, 2.0]]);
    assert!((ev[0] - 1.0).abs() < 1e-15 && (ev[1] - 3.0).abs() < 1e-15);
}
