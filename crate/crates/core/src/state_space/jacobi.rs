//! Cyclic Jacobi diagonalization of complex Hermitian matrices.
//!
//! This is the independent eigenvalue oracle: it shares no code with the
//! invariant-polynomial route, and each step is a plain 2×2 unitary rotation.

use alloc::format;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{CMatrix, HermitianMatrix};

pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues in descending order with matching unit eigenvectors.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    /// `vectors[i]` is the eigenvector for `values[i]`.
    pub vectors: Vec<Vec<Complex64>>,
    pub sweeps: usize,
    /// Frobenius norm of the off-diagonal part at exit.
    pub off_diagonal: f64,
}

fn off_norm(a: &CMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Diagonalize `m` as `m = V diag(values) V†`.
pub fn hermitian_eigen(m: &HermitianMatrix) -> Result<EigenDecomposition> {
    let n = m.dim();
    let mut a = m.as_matrix().clone();
    let mut v = CMatrix::identity(n);
    let scale = a.frobenius_norm();
    let target = 1e-15 * scale;

    let mut sweeps = 0;
    let mut off = off_norm(&a);
    while off > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::Numerical(format!(
                "Jacobi did not converge after {MAX_SWEEPS} sweeps (off-diagonal norm {off:e})"
            )));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        off = off_norm(&a);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[(y, y)].re.total_cmp(&a[(x, x)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = order.iter().map(|&i| (0..n).map(|r| v[(r, i)]).collect()).collect();
    Ok(EigenDecomposition { values, vectors, sweeps, off_diagonal: off })
}

/// Descending eigenvalues only.
pub fn hermitian_eigenvalues(m: &HermitianMatrix) -> Result<Vec<f64>> {
    hermitian_eigen(m).map(|e| e.values)
}

/// Annihilate `a[p][q]` with `U = diag(1, ē) · R(θ)` acting on rows/cols `p, q`,
/// where `e` is the phase of `a[p][q]` and `R` the real Jacobi rotation for the
/// resulting real symmetric 2×2 block.
fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // skip rotations that cannot change the diagonal in floating point
    if app.abs() + 100.0 * g == app.abs() && aqq.abs() + 100.0 * g == aqq.abs() {
        a[(p, q)] = Complex64::new(0.0, 0.0);
        a[(q, p)] = Complex64::new(0.0, 0.0);
        return;
    }
    let phase = apq / g;
    let phase_c = phase.conj();

    let theta = (aqq - app) / (2.0 * g);
    let t = if theta == 0.0 { 1.0 } else { theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt()) };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let n = a.dim();
    // A ← A·U
    for r in 0..n {
        let arp = a[(r, p)];
        let arq = a[(r, q)];
        a[(r, p)] = arp * c - arq * phase_c * s;
        a[(r, q)] = arp * s + arq * phase_c * c;
    }
    // A ← U†·A
    for col in 0..n {
        let apc = a[(p, col)];
        let aqc = a[(q, col)];
        a[(p, col)] = apc * c - aqc * phase * s;
        a[(q, col)] = apc * s + aqc * phase * c;
    }
    // V ← V·U
    for r in 0..n {
        let vrp = v[(r, p)];
        let vrq = v[(r, q)];
        v[(r, p)] = vrp * c - vrq * phase_c * s;
        v[(r, q)] = vrp * s + vrq * phase_c * c;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn diagonal_input_needs_no_sweeps() {
        let m = HermitianMatrix::diagonal(&[0.2, 0.5, 0.3]);
        let e = hermitian_eigen(&m).unwrap();
        assert_eq!(e.sweeps, 0);
        assert_eq!(e.values, vec![0.5, 0.3, 0.2]);
    }

    #[test]
    fn complex_two_by_two() {
        // [[1, i],[−i, 1]] has eigenvalues 2 and 0
        let m = HermitianMatrix::from_rows(&[vec![c(1.0, 0.0), c(0.0, 1.0)], vec![c(0.0, -1.0), c(1.0, 0.0)]]).unwrap();
        let e = hermitian_eigen(&m).unwrap();
        assert!((e.values[0] - 2.0).abs() < 1e-14);
        assert!(e.values[1].abs() < 1e-14);
    }

    #[test]
    fn eigenvectors_reconstruct_the_matrix() {
        let m = HermitianMatrix::from_rows(&[
            vec![c(0.4, 0.0), c(0.1, 0.05), c(-0.02, 0.1)],
            vec![c(0.1, -0.05), c(0.35, 0.0), c(0.0, -0.07)],
            vec![c(-0.02, -0.1), c(0.0, 0.07), c(0.25, 0.0)],
        ])
        .unwrap();
        let e = hermitian_eigen(&m).unwrap();
        assert!(e.off_diagonal < 1e-12);
        let rec =
            CMatrix::from_fn(3, |i, j| e.values.iter().zip(&e.vectors).map(|(l, u)| u[i] * u[j].conj() * *l).sum());
        assert!(rec.max_abs_diff(m.as_matrix()) < 1e-14);
    }
}
