//! Density matrices, Bloch vectors and positivity certificates.

pub mod jacobi;
pub mod sampling;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::invariants::{char_coefficients, discriminant, TraceInvariants};
use crate::matrix::{CMatrix, HermitianMatrix};
use crate::orbit_space::Spectrum;
use crate::su_algebra::{dim_from_adjoint_len, gell_mann_basis, BasisSet};

pub use jacobi::{hermitian_eigen, hermitian_eigenvalues, EigenDecomposition};
pub use sampling::{haar_unitary, sample_ball, sample_states, uniform_simplex, SampleMode};

/// Default tolerance for `S_k ≥ −tol` and `λ_min ≥ −tol`.
pub const STATE_TOL: f64 = 1e-9;

/// Allowed deviation of `tr ρ` (or `t₁`) from one.
pub const TRACE_TOL: f64 = 1e-10;

/// Real coordinates `ξ` of `ρ = 𝕀/N + √((N−1)/(2N)) Σ ξᵢλᵢ`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlochVector {
    dim: usize,
    xi: Vec<f64>,
}

impl BlochVector {
    /// `N` is inferred from the length `N² − 1`.
    pub fn new(xi: Vec<f64>) -> Result<Self> {
        let dim = dim_from_adjoint_len(xi.len())?;
        Ok(Self { dim, xi })
    }

    pub fn zero(dim: usize) -> Result<Self> {
        crate::su_algebra::check_dim(dim)?;
        Ok(Self { dim, xi: alloc::vec![0.0; dim * dim - 1] })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[f64] {
        &self.xi
    }

    pub fn into_components(self) -> Vec<f64> {
        self.xi
    }

    /// Bloch radius `|ξ|`.
    pub fn radius(&self) -> f64 {
        self.xi.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

fn bloch_scale(n: usize) -> f64 {
    let nf = n as f64;
    ((nf - 1.0) / (2.0 * nf)).sqrt()
}

/// `ρ(ξ)` using a prebuilt basis.
pub fn from_bloch_with(basis: &BasisSet, xi: &BlochVector) -> Result<HermitianMatrix> {
    if basis.dim() != xi.dim() {
        return Err(Error::DimensionMismatch { expected: basis.dim(), found: xi.dim() });
    }
    let n = xi.dim();
    let c = bloch_scale(n);
    let terms = basis.elements().iter().zip(xi.components()).map(|(l, &x)| (c * x, l.clone()));
    Ok(HermitianMatrix::linear_combination(n, 1.0 / n as f64, terms))
}

/// `ρ = 𝕀/N + √((N−1)/(2N)) Σ ξᵢλᵢ`.
pub fn from_bloch(xi: &BlochVector) -> Result<HermitianMatrix> {
    from_bloch_with(&gell_mann_basis(xi.dim())?, xi)
}

/// Inverse of [`from_bloch_with`]: `ξᵢ = tr(ρλᵢ) / (2√((N−1)/(2N)))`.
pub fn to_bloch_with(basis: &BasisSet, rho: &HermitianMatrix) -> Result<BlochVector> {
    if basis.dim() != rho.dim() {
        return Err(Error::DimensionMismatch { expected: basis.dim(), found: rho.dim() });
    }
    let tr = rho.trace();
    if (tr - 1.0).abs() > TRACE_TOL {
        return Err(Error::TraceNotOne(tr));
    }
    let c = 2.0 * bloch_scale(rho.dim());
    let xi = basis.elements().iter().map(|l| rho.as_matrix().trace_of_product(l.as_matrix()).re / c).collect();
    BlochVector::new(xi)
}

pub fn to_bloch(rho: &HermitianMatrix) -> Result<BlochVector> {
    to_bloch_with(&gell_mann_basis(rho.dim())?, rho)
}

/// Where a matrix sits relative to the state space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stratum {
    /// Full rank.
    Interior,
    /// Rank strictly between 1 and `N`.
    Boundary(usize),
    /// Rank one.
    Pure,
    /// Not positive semidefinite.
    Outside,
}

impl Stratum {
    pub fn from_rank(rank: usize, dim: usize) -> Self {
        if rank >= dim {
            Stratum::Interior
        } else if rank <= 1 {
            Stratum::Pure
        } else {
            Stratum::Boundary(rank)
        }
    }

    /// `interior`, `boundary-rank-k`, `pure` or `outside`.
    pub fn label(&self) -> String {
        match self {
            Stratum::Interior => "interior".into(),
            Stratum::Boundary(k) => format!("boundary-rank-{k}"),
            Stratum::Pure => "pure".into(),
            Stratum::Outside => "outside".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StateClassification {
    pub is_state: bool,
    pub rank: usize,
    pub stratum: Stratum,
    /// Smallest `S_k`.
    pub margin: f64,
}

/// Largest `k` such that `S₁, …, S_k` are all significant, each `S_j` compared
/// with `tol · S_{j−1}`. For nonnegative roots this is the number of nonzero roots.
fn rank_from_coefficients(s: &[f64], tol: f64) -> usize {
    let mut prev = 1.0;
    for (k, &v) in s.iter().enumerate() {
        if v <= tol * prev {
            return k;
        }
        prev = v;
    }
    s.len()
}

fn classify(dim: usize, s: &[f64], is_state: bool, tol: f64) -> StateClassification {
    let rank = rank_from_coefficients(s, tol);
    let margin = s.iter().copied().fold(f64::INFINITY, f64::min);
    let stratum = if is_state { Stratum::from_rank(rank, dim) } else { Stratum::Outside };
    StateClassification { is_state, rank, stratum, margin }
}

/// Coefficients `S₁…S_N` of `det(x − A)` by the Faddeev–LeVerrier recursion.
pub fn faddeev_leverrier(a: &CMatrix) -> Vec<f64> {
    let n = a.dim();
    let mut s = Vec::with_capacity(n);
    // M_k = A·M_{k−1} + c_{N−k+1}·𝕀, c_{N−k} = −tr(A·M_k)/k
    let mut m = CMatrix::identity(n);
    let mut coeff = 1.0;
    for k in 1..=n {
        if k > 1 {
            let mut next = a * &m;
            for i in 0..n {
                next[(i, i)] += coeff;
            }
            m = next;
        }
        let c = -a.trace_of_product(&m).re / k as f64;
        // det(x − A) = Σ (−1)^k S_k x^{N−k}
        s.push(if k % 2 == 0 { c } else { -c });
        coeff = c;
    }
    s
}

/// Positivity test on the characteristic coefficients `S_k(ξ) ≥ 0`.
///
/// `S_k` come from the Faddeev–LeVerrier recursion on `ρ(ξ)`. The rank is the
/// count of leading nonvanishing `S_k`; if the eigenvalue oracle reports a
/// different count of eigenvalues above `tol`, the oracle's count is used.
pub fn check_state_bloch_tol(xi: &BlochVector, tol: f64) -> Result<StateClassification> {
    let rho = from_bloch(xi)?;
    let s = faddeev_leverrier(rho.as_matrix());
    let is_state = s.iter().all(|&v| v >= -tol);
    let mut c = classify(xi.dim(), &s, is_state, tol);
    let ev = hermitian_eigenvalues(&rho)?;
    let oracle_rank = ev.iter().filter(|&&l| l > tol).count();
    if oracle_rank != c.rank {
        c.rank = oracle_rank;
        if is_state {
            c.stratum = Stratum::from_rank(oracle_rank, xi.dim());
        }
    }
    Ok(c)
}

pub fn check_state_bloch(xi: &BlochVector) -> Result<StateClassification> {
    check_state_bloch_tol(xi, STATE_TOL)
}

/// Positivity test on trace invariants: `t₁ = 1`, `Disc ≥ 0` and `S_k ≥ 0`.
pub fn check_state_traces_tol(t: &TraceInvariants, tol: f64) -> Result<StateClassification> {
    let t1 = t.t(1);
    if (t1 - 1.0).abs() > TRACE_TOL {
        return Err(Error::TraceNotOne(t1));
    }
    let s = char_coefficients(t)?;
    let disc = discriminant(t)?;
    let is_state = disc >= -tol && s.values().iter().all(|&v| v >= -tol);
    Ok(classify(t.dim(), s.values(), is_state, tol))
}

pub fn check_state_traces(t: &TraceInvariants) -> Result<StateClassification> {
    check_state_traces_tol(t, STATE_TOL)
}

/// Eigenvalues of `rho` by cyclic Jacobi rotations, in descending order.
pub fn eig_oracle(rho: &HermitianMatrix) -> Result<Spectrum> {
    Ok(Spectrum::from_eigenvalues(hermitian_eigenvalues(rho)?))
}
