//! Spectra parameterized by a Bloch radius and angles.
//!
//! A spectrum is written as `rᵢ = 1/N + √(2(N−1)/N) · r · μ⃗ᵢ·n⃗`, with `μ⃗ᵢ` the
//! fundamental weights and `n⃗` a unit vector in `R^{N−1}`. The angles of `n⃗`
//! follow one recursive convention: the last Cartan direction is the polar
//! axis, the remaining components are scaled by its sine, and so on inward;
//! the innermost pair is `(cos(φ/3), sin(φ/3))`. Angles are listed outermost
//! first, so `N = 4` reads `(θ, φ)` and
//! `n⃗ = (sinθ cos(φ/3), sinθ sin(φ/3), cosθ)`.

mod polyhedron;
mod strata;

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::su_algebra::{check_dim, BasisSet, WeightSystem};

pub use polyhedron::{intersection_polyhedron, transition_radii, PolyhedronReport, SimplexArc};
pub use strata::{
    effective_radius, quatrit_domain_analytic, quatrit_rank3_theta, qutrit_domain_analytic, qutrit_rank2_radius,
    rank_strata, trisectrix_residual, EffectiveKind, StratumReport,
};

/// Tag carried by every [`OrbitCoordinates`] value.
pub const CONVENTION: &str = "polar-last-phi3";

/// Spectrum entries below this are negative for validity purposes.
pub const SPECTRUM_TOL: f64 = 1e-12;

/// Eigenvalues in descending order.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    /// Sorts `values` and checks that they form a point of the simplex.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        check_dim(values.len())?;
        let s = Self::from_eigenvalues(values);
        let total: f64 = s.values.iter().sum();
        if (total - 1.0).abs() > SPECTRUM_TOL {
            return Err(Error::TraceNotOne(total));
        }
        if s.min() < -SPECTRUM_TOL {
            return Err(Error::InvalidArgument(alloc::format!("negative eigenvalue {}", s.min())));
        }
        Ok(s)
    }

    /// Sorts `values` without checking positivity or normalization.
    pub fn from_eigenvalues(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Self { values }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn min(&self) -> f64 {
        self.values.last().copied().unwrap_or(f64::NAN)
    }

    /// Unit sum and nonnegative entries, within [`SPECTRUM_TOL`].
    pub fn is_valid(&self) -> bool {
        let total: f64 = self.values.iter().sum();
        (total - 1.0).abs() <= SPECTRUM_TOL && self.min() >= -SPECTRUM_TOL
    }

    /// `t₂ = Σ rᵢ²`.
    pub fn purity(&self) -> f64 {
        self.values.iter().map(|r| r * r).sum()
    }
}

/// Bloch radius and `N − 2` angles.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitCoordinates {
    pub dim: usize,
    pub radius: f64,
    pub angles: Vec<f64>,
    pub convention: &'static str,
}

impl OrbitCoordinates {
    pub fn new(dim: usize, radius: f64, angles: Vec<f64>) -> Result<Self> {
        check_dim(dim)?;
        if angles.len() != dim - 2 {
            return Err(Error::DimensionMismatch { expected: dim - 2, found: angles.len() });
        }
        if !(0.0..=1.0).contains(&radius) {
            return Err(Error::Domain { value: radius, lo: 0.0, hi: 1.0 });
        }
        Ok(Self { dim, radius, angles, convention: CONVENTION })
    }

    /// At `r = 0` every angle is arbitrary.
    pub fn is_degenerate(&self) -> bool {
        self.radius == 0.0
    }

    /// `t₂ = 1/N + ((N−1)/N) r²`.
    pub fn purity(&self) -> f64 {
        crate::invariants::t2_from_radius(self.dim, self.radius)
    }

    pub fn unit_vector(&self) -> Result<Vec<f64>> {
        unit_vector(self.dim, &self.angles)
    }
}

/// `n⃗(angles)` in `R^{N−1}`.
pub fn unit_vector(n: usize, angles: &[f64]) -> Result<Vec<f64>> {
    check_dim(n)?;
    if angles.len() != n - 2 {
        return Err(Error::DimensionMismatch { expected: n - 2, found: angles.len() });
    }
    let mut v = vec![0.0; n - 1];
    if n == 2 {
        v[0] = 1.0;
        return Ok(v);
    }
    let mut scale = 1.0;
    let mut top = n - 2;
    for &theta in &angles[..n - 3] {
        v[top] = scale * theta.cos();
        scale *= theta.sin();
        top -= 1;
    }
    let third = angles[n - 3] / 3.0;
    v[0] = scale * third.cos();
    v[1] = scale * third.sin();
    Ok(v)
}

/// Inverse of [`unit_vector`] for a nonzero vector, also returning its length.
fn angles_of(v: &[f64]) -> (f64, Vec<f64>) {
    let radius = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let n = v.len() + 1;
    let mut angles = Vec::with_capacity(n.saturating_sub(2));
    if n == 2 || radius == 0.0 {
        angles.resize(n - 2, 0.0);
        return (radius, angles);
    }
    for top in (2..v.len()).rev() {
        let rest = v[..top].iter().map(|x| x * x).sum::<f64>().sqrt();
        angles.push(rest.atan2(v[top]));
    }
    angles.push(3.0 * v[1].atan2(v[0]));
    (radius, angles)
}

/// Spectrum produced by [`spectrum_from_orbit`].
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitSpectrum {
    /// Tuple in weight order, possibly not descending.
    pub raw: Vec<f64>,
    pub sorted: Spectrum,
    /// No entry below `−1e−12`.
    pub valid: bool,
}

/// `rᵢ = 1/N + √(2(N−1)/N) · r · μ⃗ᵢ·n⃗`.
pub fn spectrum_from_orbit(coords: &OrbitCoordinates, weights: &WeightSystem) -> Result<OrbitSpectrum> {
    let n = coords.dim;
    if weights.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: weights.dim() });
    }
    let nv = unit_vector(n, &coords.angles)?;
    let nf = n as f64;
    let scale = (2.0 * (nf - 1.0) / nf).sqrt() * coords.radius;
    let raw: Vec<f64> = weights
        .weights()
        .iter()
        .map(|mu| 1.0 / nf + scale * mu.iter().zip(&nv).map(|(a, b)| a * b).sum::<f64>())
        .collect();
    let valid = raw.iter().all(|&x| x >= -SPECTRUM_TOL);
    let sorted = Spectrum::from_eigenvalues(raw.clone());
    Ok(OrbitSpectrum { raw, sorted, valid })
}

/// Cartan coordinates `𝓘_α = √(N/(2(N−1))) Σᵢ rᵢ (H_α)ᵢᵢ` of a tuple.
pub fn cartan_coordinates(values: &[f64], cartan: &BasisSet) -> Result<Vec<f64>> {
    let n = cartan.dim();
    if values.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: values.len() });
    }
    let nf = n as f64;
    let c = (nf / (2.0 * (nf - 1.0))).sqrt();
    Ok(cartan.cartan_diagonals().iter().map(|h| c * h.iter().zip(values).map(|(a, b)| a * b).sum::<f64>()).collect())
}

/// Radius `|𝓘|` and angles of a spectrum. At `r = 0` the angles are all zero.
pub fn orbit_from_spectrum(spec: &Spectrum, cartan: &BasisSet) -> Result<OrbitCoordinates> {
    let coords = cartan_coordinates(spec.values(), cartan)?;
    let (radius, angles) = angles_of(&coords);
    // rounding can push a pure state a hair past 1
    let radius = if radius > 1.0 && radius < 1.0 + 1e-12 { 1.0 } else { radius };
    OrbitCoordinates::new(spec.dim(), radius, angles)
}

/// Whether the raw tuple of `coords` is already descending and nonnegative.
pub fn ordered_domain_check(coords: &OrbitCoordinates, weights: &WeightSystem) -> Result<bool> {
    let s = spectrum_from_orbit(coords, weights)?;
    Ok(s.valid && s.raw.windows(2).all(|w| w[0] >= w[1] - SPECTRUM_TOL))
}
