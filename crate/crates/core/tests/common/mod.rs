#![allow(dead_code)]

use quorbit_core::state_space::sampling::{ball_point, haar_unitary};
use quorbit_core::{BlochVector, HermitianMatrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// e_k of `vals` for k = 1..=len, by the product expansion of Π(1 + r x).
pub fn elementary_symmetric(vals: &[f64]) -> Vec<f64> {
    let mut e = vec![0.0; vals.len() + 1];
    e[0] = 1.0;
    for (m, &r) in vals.iter().enumerate() {
        for k in (1..=m + 1).rev() {
            e[k] += r * e[k - 1];
        }
    }
    e[1..].to_vec()
}

pub fn vandermonde_sq(vals: &[f64]) -> f64 {
    let mut p = 1.0;
    for i in 0..vals.len() {
        for j in 0..i {
            let d = vals[i] - vals[j];
            p *= d * d;
        }
    }
    p
}

/// Number of clusters of sorted values separated by more than `tol`.
pub fn distinct_count(vals: &[f64], tol: f64) -> usize {
    let mut v = vals.to_vec();
    v.sort_by(|a, b| a.total_cmp(b));
    1 + v.windows(2).filter(|w| w[1] - w[0] > tol).count()
}

pub fn power_sum(vals: &[f64], k: usize) -> f64 {
    vals.iter().map(|r| r.powi(k as i32)).sum()
}

/// Hermitian unit-trace matrix from a Bloch vector uniform in the ball of
/// radius `radius`.
pub fn ball_matrix(n: usize, radius: f64, rng: &mut ChaCha8Rng) -> (BlochVector, HermitianMatrix) {
    let xi = BlochVector::new(ball_point(rng, n * n - 1, radius)).unwrap();
    let rho = quorbit_core::from_bloch(&xi).unwrap();
    (xi, rho)
}

/// `U diag(spec) U†` with a Haar unitary.
pub fn conjugated(spec: &[f64], rng: &mut ChaCha8Rng) -> HermitianMatrix {
    let u = haar_unitary(spec.len(), rng);
    HermitianMatrix::diagonal(spec).conjugate_by(&u)
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
