//! SU(N)-invariant polynomials of a density matrix.
//!
//! The working set is the trace invariants `t_k = tr(ρᵏ)`. From `t₁…t_N` we get
//! the characteristic-polynomial coefficients `S_k`, higher traces through the
//! Newton recursion, the Bézoutian (Hankel matrix `B_ij = t_{i+j−2}`, `t₀ = N`)
//! whose determinant is the discriminant, and the gradient matrix
//! `Grad = D·B·D` with `D = diag(1, 2, …, N)`.
//!
//! Casimir values use the normalization `𝔠₂ = (N−1)|ξ|²`, `𝔠₃ = (N−1) ξ·(ξ∨ξ)`, …
//! with `ξ` the Bloch vector of `ρ = 𝕀/N + √((N−1)/(2N)) Σ ξᵢλᵢ`. For `N = 4` this
//! gives `t₂ = ¼(1+𝔠₂)`, `t₃ = (1/16)(1+3𝔠₂+𝔠₃)` and
//! `t₄ = (1/64)(1+6𝔠₂+4𝔠₃+𝔠₂²+𝔠₄)`.

use alloc::format;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::matrix::{HermitianMatrix, RMatrix};
use crate::state_space::jacobi::hermitian_eigenvalues;
use crate::su_algebra::{vee_product, StructureTensors};

/// Relative threshold (against the largest eigenvalue of the equilibrated
/// Bézoutian) below which an eigenvalue counts as zero in the rank.
pub const BEZOUTIAN_RANK_TOL: f64 = 1e-11;

/// Default tolerance for the positive-semidefinite tests.
pub const PSD_TOL: f64 = 1e-9;

/// Trace invariants `t₁, t₂, …` of an `N`-level matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceInvariants {
    dim: usize,
    values: Vec<f64>,
}

impl TraceInvariants {
    /// `values[k−1] = t_k`.
    pub fn new(dim: usize, values: Vec<f64>) -> Result<Self> {
        crate::su_algebra::check_dim(dim)?;
        if values.is_empty() {
            return Err(Error::InvalidArgument("empty trace-invariant list".into()));
        }
        Ok(Self { dim, values })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `t₁, t₂, …` in order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Highest `k` available.
    pub fn max_order(&self) -> usize {
        self.values.len()
    }

    /// `t_k`, with `t₀ = N`.
    ///
    /// Panics if `k` exceeds [`TraceInvariants::max_order`].
    pub fn t(&self, k: usize) -> f64 {
        if k == 0 {
            self.dim as f64
        } else {
            self.values[k - 1]
        }
    }

    fn require_full(&self) -> Result<()> {
        if self.values.len() < self.dim {
            return Err(Error::InvalidArgument(format!(
                "need t_1..t_{} for N = {}, have {} values",
                self.dim,
                self.dim,
                self.values.len()
            )));
        }
        Ok(())
    }

    /// Power sums of an explicit list of eigenvalues (`t_k = Σ rᵢᵏ`).
    pub fn from_spectrum(spectrum: &[f64], upto: usize) -> Result<Self> {
        let values = (1..=upto).map(|k| spectrum.iter().map(|r| r.powi(k as i32)).sum()).collect();
        Self::new(spectrum.len(), values)
    }
}

/// `t_k = tr(ρᵏ)` for `k = 1, …, upto`, by repeated multiplication.
pub fn trace_invariants(rho: &HermitianMatrix, upto: usize) -> Result<TraceInvariants> {
    if upto < 2 {
        return Err(Error::InvalidArgument(format!("upto = {upto}, need at least 2")));
    }
    let n = rho.dim();
    crate::su_algebra::check_dim(n)?;
    let m = rho.as_matrix();
    let scale = m.frobenius_norm().max(1.0);
    let mut values = Vec::with_capacity(upto);
    let mut power = m.clone();
    for k in 1..=upto {
        if k > 1 {
            power = &power * m;
        }
        let tr = power.trace();
        if tr.im.abs() > 1e-12 * scale.powi(k as i32) {
            return Err(Error::Numerical(format!("tr(rho^{k}) has imaginary part {:e}", tr.im)));
        }
        values.push(tr.re);
    }
    TraceInvariants::new(n, values)
}

/// Coefficients `S₁, …, S_N` of `det(x − ρ) = x^N − S₁x^{N−1} + S₂x^{N−2} − …`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharCoefficients {
    dim: usize,
    values: Vec<f64>,
}

impl CharCoefficients {
    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `values()[k−1] = S_k`.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `S_k` with `S₀ = 1`.
    pub fn s(&self, k: usize) -> f64 {
        if k == 0 {
            1.0
        } else {
            self.values[k - 1]
        }
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// `S_k = det(M_k)/k!` where `M_k` is the `k×k` matrix with `t_{i−j+1}` on and
/// below the diagonal and `i` on the superdiagonal (row `i`, 1-based).
pub fn char_coefficients(t: &TraceInvariants) -> Result<CharCoefficients> {
    t.require_full()?;
    let n = t.dim();
    let mut values = Vec::with_capacity(n);
    let mut factorial = 1.0;
    for k in 1..=n {
        factorial *= k as f64;
        let m = RMatrix::from_fn(k, k, |i, j| {
            if j <= i {
                t.t(i - j + 1)
            } else if j == i + 1 {
                (i + 1) as f64
            } else {
                0.0
            }
        });
        values.push(m.determinant()? / factorial);
    }
    Ok(CharCoefficients { dim: n, values })
}

/// Extend `t` to order `upto` with Newton's identities
/// `t_k = S₁t_{k−1} − S₂t_{k−2} + … + (−1)^{N−1} S_N t_{k−N}`.
///
/// Returns a copy unchanged when `upto` does not exceed the available order.
pub fn newton_extend(t: &TraceInvariants, upto: usize) -> Result<TraceInvariants> {
    if upto <= t.max_order() {
        return Ok(t.clone());
    }
    let s = char_coefficients(t)?;
    let n = t.dim();
    let mut values = t.values().to_vec();
    for k in values.len() + 1..=upto {
        let mut acc = 0.0;
        for i in 1..=n {
            let sign = if i % 2 == 1 { 1.0 } else { -1.0 };
            let prev = if k == i { n as f64 } else { values[k - i - 1] };
            acc += sign * s.s(i) * prev;
        }
        values.push(acc);
    }
    TraceInvariants::new(n, values)
}

/// Hankel matrix of power sums, `B_ij = t_{i+j−2}` (1-based), `t₀ = N`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bezoutian {
    dim: usize,
    matrix: RMatrix,
}

impl Bezoutian {
    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &RMatrix {
        &self.matrix
    }

    pub fn determinant(&self) -> f64 {
        // square by construction
        self.matrix.determinant().unwrap_or(f64::NAN)
    }

    /// Number of distinct roots of the characteristic polynomial.
    pub fn rank(&self) -> Result<usize> {
        numerical_rank(&self.matrix, BEZOUTIAN_RANK_TOL)
    }

    pub fn is_positive_semidefinite(&self, tol: f64) -> Result<bool> {
        is_positive_semidefinite(&self.matrix, tol)
    }
}

pub fn bezoutian(t: &TraceInvariants) -> Result<Bezoutian> {
    t.require_full()?;
    let n = t.dim();
    let ext = newton_extend(t, 2 * n - 2)?;
    let matrix = RMatrix::from_fn(n, n, |i, j| ext.t(i + j));
    Ok(Bezoutian { dim: n, matrix })
}

/// `det B = Π_{i>j} (rᵢ − rⱼ)²`.
pub fn discriminant(t: &TraceInvariants) -> Result<f64> {
    bezoutian(t).map(|b| b.determinant())
}

/// `Grad_ij = i·j·B_ij` (1-based), the congruence of `B` by `diag(1, …, N)`.
pub fn grad_matrix(t: &TraceInvariants) -> Result<RMatrix> {
    let b = bezoutian(t)?;
    let n = b.dim();
    Ok(RMatrix::from_fn(n, n, |i, j| ((i + 1) * (j + 1)) as f64 * b.matrix()[(i, j)]))
}

/// Symmetric diagonal scaling `S·M·S`, `S_ii = 1/√|M_ii|` (zero diagonals left
/// unscaled). Rank and inertia are unchanged.
fn equilibrate(m: &RMatrix) -> RMatrix {
    let n = m.rows();
    let s: Vec<f64> = (0..n)
        .map(|i| {
            let d = m[(i, i)].abs();
            if d > 0.0 {
                1.0 / d.sqrt()
            } else {
                1.0
            }
        })
        .collect();
    RMatrix::from_fn(n, n, |i, j| {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        s[a] * m[(a, b)] * s[b]
    })
}

fn symmetric_eigenvalues(m: &RMatrix) -> Result<Vec<f64>> {
    if !m.is_symmetric() {
        return Err(Error::InvalidArgument("matrix is not symmetric".into()));
    }
    hermitian_eigenvalues(&m.to_hermitian()?)
}

/// Rank of a real symmetric matrix: eigenvalues of the equilibrated matrix
/// larger than `rel_tol` times the largest one.
pub fn numerical_rank(m: &RMatrix, rel_tol: f64) -> Result<usize> {
    let ev = symmetric_eigenvalues(&equilibrate(m))?;
    let top = ev.iter().fold(0.0f64, |a, b| a.max(b.abs()));
    if top == 0.0 {
        return Ok(0);
    }
    Ok(ev.iter().filter(|l| l.abs() > rel_tol * top).count())
}

/// All eigenvalues of the equilibrated matrix are `≥ −tol` (relative to the
/// largest). A negative diagonal entry is an immediate `false`.
pub fn is_positive_semidefinite(m: &RMatrix, tol: f64) -> Result<bool> {
    if (0..m.rows()).any(|i| m[(i, i)] < 0.0) {
        return Ok(false);
    }
    let ev = symmetric_eigenvalues(&equilibrate(m))?;
    let top = ev.iter().fold(0.0f64, |a, b| a.max(b.abs()));
    Ok(ev.iter().all(|&l| l >= -tol * top.max(1.0)))
}

/// Casimir invariants `𝔠₂ … 𝔠₆` of a Bloch vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CasimirValues {
    pub dim: usize,
    pub c2: f64,
    pub c3: f64,
    pub c4: f64,
    pub c5: f64,
    pub c6: f64,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `𝔠₂ = (N−1)ξ²`, `𝔠₃ = (N−1)ξ·(ξ∨ξ)`, `𝔠₄ = (N−1)|ξ∨ξ|²`,
/// `𝔠₅ = (N−1)(((ξ∨ξ)∨ξ)∨ξ)·ξ`, `𝔠₆ = (N−1)|(ξ∨ξ)∨ξ|²`.
pub fn casimirs(xi: &[f64], tensors: &StructureTensors) -> Result<CasimirValues> {
    let len = tensors.adjoint_len();
    if xi.len() != len {
        return Err(Error::DimensionMismatch { expected: len, found: xi.len() });
    }
    let pref = (tensors.dim() - 1) as f64;
    let v2 = vee_product(xi, xi, tensors)?;
    let v3 = vee_product(&v2, xi, tensors)?;
    let v4 = vee_product(&v3, xi, tensors)?;
    Ok(CasimirValues {
        dim: tensors.dim(),
        c2: pref * dot(xi, xi),
        c3: pref * dot(xi, &v2),
        c4: pref * dot(&v2, &v2),
        c5: pref * dot(&v4, xi),
        c6: pref * dot(&v3, &v3),
    })
}

/// `(t₂, t₃, t₄)` of a quatrit from its Casimir values.
pub fn quatrit_traces_from_casimirs(c: &CasimirValues) -> (f64, f64, f64) {
    let t2 = 0.25 * (1.0 + c.c2);
    let t3 = (1.0 + 3.0 * c.c2 + c.c3) / 16.0;
    let t4 = (1.0 + 6.0 * c.c2 + 4.0 * c.c3 + c.c2 * c.c2 + c.c4) / 64.0;
    (t2, t3, t4)
}

/// `𝔠₃` and `𝔠₄` of a diagonal quatrit with Cartan coordinates `(𝓘₃, 𝓘₈, 𝓘₁₅)`.
pub fn quatrit_casimirs_from_cartan(i3: f64, i8: f64, i15: f64) -> (f64, f64) {
    let s2 = core::f64::consts::SQRT_2;
    let a = i3 * i3 + i8 * i8;
    let b = i8 * (i3 * i3 - i8 * i8 / 3.0);
    let c3 = 9.0 * i15 * a + 9.0 * s2 * b - 6.0 * i15.powi(3);
    let c4 = 9.0 * a * a + 36.0 * s2 * i15 * b + 12.0 * i15.powi(4);
    (c3, c4)
}

/// `𝔠₃` and `𝔠₄` of a quatrit in Bloch radius and angles.
pub fn quatrit_casimirs_from_angles(r: f64, theta: f64, phi: f64) -> (f64, f64) {
    let s2 = core::f64::consts::SQRT_2;
    let (st, ct) = (theta.sin(), theta.cos());
    let c3 = 0.75 * r.powi(3) * (4.0 * s2 * st.powi(3) * phi.sin() - 3.0 * ct - 5.0 * (3.0 * theta).cos());
    let c4 = 0.375
        * r.powi(4)
        * (32.0 * s2 * st.powi(3) * ct * phi.sin() + 4.0 * (2.0 * theta).cos() + 7.0 * (4.0 * theta).cos() + 21.0);
    (c3, c4)
}

/// Closed-form `(t₂, t₃, t₄)` of a quatrit with Bloch radius `r` and angles `(θ, φ)`.
pub fn quatrit_trace_from_angles(r: f64, theta: f64, phi: f64) -> (f64, f64, f64) {
    let s2 = core::f64::consts::SQRT_2;
    let (st, ct) = (theta.sin(), theta.cos());
    let cubic = 4.0 * s2 * st.powi(3) * phi.sin() - 3.0 * ct - 5.0 * (3.0 * theta).cos();
    let quartic =
        32.0 * s2 * st.powi(3) * ct * phi.sin() + 4.0 * (2.0 * theta).cos() + 7.0 * (4.0 * theta).cos() + 45.0;
    let r2 = r * r;
    let t2 = 0.25 + 0.75 * r2;
    let t3 = 1.0 / 16.0 + 9.0 / 16.0 * r2 + 3.0 / 64.0 * r.powi(3) * cubic;
    let t4 = 1.0 / 64.0 + 9.0 / 32.0 * r2 + 3.0 / 64.0 * r.powi(3) * cubic + 3.0 / 512.0 * r2 * r2 * quartic;
    (t2, t3, t4)
}

/// `t₃` of a qutrit written out in its eight Bloch components.
pub fn qutrit_t3_bloch(xi: &[f64]) -> Result<f64> {
    if xi.len() != 8 {
        return Err(Error::DimensionMismatch { expected: 8, found: xi.len() });
    }
    let x = |i: usize| xi[i - 1];
    let r3 = 3f64.sqrt();
    let r2: f64 = xi.iter().map(|v| v * v).sum();
    let a = x(1) * x(1) + x(2) * x(2) + x(3) * x(3);
    let b = x(4) * x(4) + x(5) * x(5) + x(6) * x(6) + x(7) * x(7);
    Ok(1.0 / 9.0
        + 2.0 / 3.0 * r2
        + 2.0 / r3 * x(1) * (x(4) * x(6) + x(5) * x(7))
        + 2.0 / r3 * x(2) * (x(5) * x(6) - x(4) * x(7))
        + 1.0 / r3 * x(3) * (x(4) * x(4) + x(5) * x(5) - x(6) * x(6) - x(7) * x(7))
        + 1.0 / 9.0 * x(8) * (6.0 * a - 3.0 * b - 2.0 * x(8) * x(8)))
}

/// `t₂ = 1/N + ((N−1)/N) r²`.
pub fn t2_from_radius(n: usize, r: f64) -> f64 {
    let nf = n as f64;
    1.0 / nf + (nf - 1.0) / nf * r * r
}
