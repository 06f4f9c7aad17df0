//! Seeded random states.

use alloc::format;
use alloc::vec::Vec;
use core::str::FromStr;

#[allow(unused_imports)]
use num_traits::Float;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Exp1, StandardNormal};

use super::{faddeev_leverrier, from_bloch_with, BlochVector, STATE_TOL};
use crate::error::{Error, Result};
use crate::matrix::{CMatrix, HermitianMatrix};
use crate::su_algebra::{check_dim, gell_mann_basis};

/// Rejection draws allowed per accepted sample before giving up. The
/// acceptance rate of the unit ball falls off quickly with `N` (about 3% at
/// `N = 3`, 4e-5 at `N = 4`), so rejection is only practical for small `N`.
pub const MAX_ATTEMPTS_PER_SAMPLE: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleMode {
    /// `ξ` uniform in the unit ball, kept only if it is a state.
    BlochRejection,
    /// Uniform spectrum on the simplex, conjugated by a Haar unitary.
    SpectrumHaar,
}

impl SampleMode {
    pub fn name(&self) -> &'static str {
        match self {
            SampleMode::BlochRejection => "bloch-rejection",
            SampleMode::SpectrumHaar => "spectrum-haar",
        }
    }
}

impl FromStr for SampleMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bloch-rejection" => Ok(SampleMode::BlochRejection),
            "spectrum-haar" => Ok(SampleMode::SpectrumHaar),
            other => Err(Error::InvalidArgument(format!("unknown sampling mode '{other}'"))),
        }
    }
}

/// Uniform point of the ball of radius `radius` in `R^dim`.
pub fn ball_point<R: Rng + ?Sized>(rng: &mut R, dim: usize, radius: f64) -> Vec<f64> {
    let mut v: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let u: f64 = rng.random();
    let scale = radius * u.powf(1.0 / dim as f64) / norm;
    for x in &mut v {
        *x *= scale;
    }
    v
}

/// Uniform point of the probability simplex, sorted in descending order.
pub fn uniform_simplex<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    let mut v: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let total: f64 = v.iter().sum();
    for x in &mut v {
        *x /= total;
    }
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

/// Haar-distributed unitary: Gram–Schmidt on the columns of a complex Gaussian
/// matrix, which is its QR factorization with a positive diagonal in `R`.
pub fn haar_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix {
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|_| (0..n).map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))).collect())
        .collect();
    for j in 0..n {
        for i in 0..j {
            let proj: Complex64 = cols[i].iter().zip(&cols[j]).map(|(q, z)| q.conj() * z).sum();
            let qi = cols[i].clone();
            for (z, q) in cols[j].iter_mut().zip(&qi) {
                *z -= proj * q;
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in &mut cols[j] {
            *z /= norm;
        }
    }
    CMatrix::from_fn(n, |i, j| cols[j][i])
}

/// One spectrum-haar draw, returning the drawn spectrum alongside the state.
pub fn spectrum_haar_state<R: Rng + ?Sized>(n: usize, rng: &mut R) -> (Vec<f64>, HermitianMatrix) {
    let spec = uniform_simplex(n, rng);
    let u = haar_unitary(n, rng);
    let rho = HermitianMatrix::diagonal(&spec).conjugate_by(&u);
    (spec, rho)
}

/// `count` Bloch vectors uniform in the ball `|ξ| ≤ radius`, with no positivity
/// filter.
pub fn sample_ball(n: usize, count: usize, radius: f64, seed: u64) -> Result<Vec<BlochVector>> {
    check_dim(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| BlochVector::new(ball_point(&mut rng, n * n - 1, radius))).collect()
}

/// `count` density matrices, deterministic in `seed`.
pub fn sample_states(n: usize, count: usize, mode: SampleMode, seed: u64) -> Result<Vec<HermitianMatrix>> {
    check_dim(n)?;
    if count == 0 {
        return Err(Error::InvalidArgument("count must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    match mode {
        SampleMode::SpectrumHaar => {
            for _ in 0..count {
                out.push(spectrum_haar_state(n, &mut rng).1);
            }
        }
        SampleMode::BlochRejection => {
            let basis = gell_mann_basis(n)?;
            while out.len() < count {
                let mut attempts = 0u64;
                loop {
                    if attempts == MAX_ATTEMPTS_PER_SAMPLE {
                        return Err(Error::Numerical(format!(
                            "bloch-rejection accepted nothing in {MAX_ATTEMPTS_PER_SAMPLE} draws at N = {n}"
                        )));
                    }
                    attempts += 1;
                    let xi = BlochVector::new(ball_point(&mut rng, n * n - 1, 1.0))?;
                    let rho = from_bloch_with(&basis, &xi)?;
                    if faddeev_leverrier(rho.as_matrix()).iter().all(|&s| s >= -STATE_TOL) {
                        out.push(rho);
                        break;
                    }
                }
            }
        }
    }
    Ok(out)
}
