//! The su(N) Lie algebra in the generalized Gell-Mann basis.
//!
//! Basis elements are normalized as `tr(λᵢλⱼ) = 2δᵢⱼ`. For each `k = 2, …, N`
//! the block that extends the algebra from `su(k−1)` to `su(k)` is
//!
//! ```text
//! E_{1k}+E_{k1}, −i(E_{1k}−E_{k1}), …, E_{k−1,k}+E_{k,k−1}, −i(E_{k−1,k}−E_{k,k−1}), H_{k−1}
//! ```
//!
//! so the Cartan elements land at 1-based positions `3, 8, 15, …, N²−1`, and
//! the `su(3)` block reproduces the conventional Gell-Mann numbering.
//!
//! All indices in this module are 0-based; the file formats convert to 1-based.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{CMatrix, HermitianMatrix};

/// Entries of the structure tensors with modulus below this are dropped.
pub const SPARSITY_TOL: f64 = 1e-12;

/// Tolerance for the basis orthonormality and tracelessness checks.
pub const BASIS_TOL: f64 = 1e-12;

pub(crate) fn check_dim(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidDimension(format!("N = {n}, need N >= 2")));
    }
    Ok(())
}

/// Recover `N` from an adjoint-vector length `N² − 1`.
pub fn dim_from_adjoint_len(len: usize) -> Result<usize> {
    let n = (((len + 1) as f64).sqrt()).round() as usize;
    if n >= 2 && n * n == len + 1 {
        Ok(n)
    } else {
        Err(Error::InvalidDimension(format!("length {len} is not of the form N^2 - 1 with N >= 2")))
    }
}

/// 0-based position of the Cartan element `H_k` (`k = 1, …, N−1`).
#[inline]
pub fn cartan_position(k: usize) -> usize {
    (k + 1) * (k + 1) - 2
}

/// Diagonal of `H_k = √(2/(k(k+1))) · diag(1, …, 1, −k, 0, …, 0)` with `k` ones.
pub fn cartan_diagonal(n: usize, k: usize) -> Vec<f64> {
    let norm = (2.0 / (k * (k + 1)) as f64).sqrt();
    let mut d = vec![0.0; n];
    for v in d.iter_mut().take(k) {
        *v = norm;
    }
    d[k] = -(k as f64) * norm;
    d
}

/// Ordered generalized Gell-Mann basis of su(N).
#[derive(Clone, Debug, PartialEq)]
pub struct BasisSet {
    dim: usize,
    elements: Vec<HermitianMatrix>,
    cartan_indices: Vec<usize>,
}

impl BasisSet {
    /// Wrap arbitrary elements. Nothing is checked here; see [`BasisSet::verify`].
    pub fn from_parts(dim: usize, elements: Vec<HermitianMatrix>, cartan_indices: Vec<usize>) -> Self {
        Self { dim, elements, cartan_indices }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn elements(&self) -> &[HermitianMatrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &HermitianMatrix {
        &self.elements[i]
    }

    /// 0-based positions of `H_1, …, H_{N−1}`.
    pub fn cartan_indices(&self) -> &[usize] {
        &self.cartan_indices
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Check element count, tracelessness, `tr(λᵢλⱼ) = 2δᵢⱼ` and diagonal Cartan elements.
    pub fn verify(&self) -> Result<()> {
        let n = self.dim;
        check_dim(n)?;
        if self.elements.len() != n * n - 1 {
            return Err(Error::Consistency(format!("expected {} elements, found {}", n * n - 1, self.elements.len())));
        }
        for (i, a) in self.elements.iter().enumerate() {
            if a.dim() != n {
                return Err(Error::Consistency(format!("element {} has dimension {}", i + 1, a.dim())));
            }
            if a.trace().abs() >= BASIS_TOL {
                return Err(Error::Consistency(format!("element {} is not traceless", i + 1)));
            }
            for (j, b) in self.elements.iter().enumerate().skip(i) {
                let g = a.as_matrix().trace_of_product(b.as_matrix());
                let want = if i == j { 2.0 } else { 0.0 };
                if (g - Complex64::new(want, 0.0)).norm() >= BASIS_TOL {
                    return Err(Error::Consistency(format!("tr(l{} l{}) = {} (expected {want})", i + 1, j + 1, g.re)));
                }
            }
        }
        for &c in &self.cartan_indices {
            let m = self.elements.get(c).ok_or_else(|| Error::Consistency(format!("cartan index {c} out of range")))?;
            let off_diag = (0..n).any(|r| (0..n).any(|s| r != s && m[(r, s)].norm() != 0.0));
            let complex_diag = (0..n).any(|r| m[(r, r)].im != 0.0);
            if off_diag || complex_diag {
                return Err(Error::Consistency(format!("element {} is not real diagonal", c + 1)));
            }
        }
        Ok(())
    }

    /// Diagonal entries `(H_α)_{ii}` for every Cartan element.
    pub fn cartan_diagonals(&self) -> Vec<Vec<f64>> {
        self.cartan_indices.iter().map(|&c| (0..self.dim).map(|i| self.elements[c][(i, i)].re).collect()).collect()
    }
}

/// Generalized Gell-Mann basis of su(N).
pub fn gell_mann_basis(n: usize) -> Result<BasisSet> {
    check_dim(n)?;
    let mut elements = Vec::with_capacity(n * n - 1);
    let mut cartan_indices = Vec::with_capacity(n - 1);
    for k in 1..n {
        for j in 0..k {
            let mut sym = CMatrix::zeros(n);
            sym[(j, k)] = Complex64::new(1.0, 0.0);
            sym[(k, j)] = Complex64::new(1.0, 0.0);
            elements.push(HermitianMatrix::symmetrized(sym));

            let mut anti = CMatrix::zeros(n);
            anti[(j, k)] = Complex64::new(0.0, -1.0);
            anti[(k, j)] = Complex64::new(0.0, 1.0);
            elements.push(HermitianMatrix::symmetrized(anti));
        }
        cartan_indices.push(elements.len());
        elements.push(HermitianMatrix::diagonal(&cartan_diagonal(n, k)));
    }
    Ok(BasisSet { dim: n, elements, cartan_indices })
}

/// Symmetric `d` and antisymmetric `f` structure constants of su(N):
/// `λᵢλⱼ = (2/N)δᵢⱼ𝕀 + Σₖ (dᵢⱼₖ + i fᵢⱼₖ) λₖ`.
///
/// `d` is stored for `i ≤ j ≤ k` and `f` for `i < j < k`; the accessors apply
/// the permutation rules.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureTensors {
    dim: usize,
    d: BTreeMap<(usize, usize, usize), f64>,
    f: BTreeMap<(usize, usize, usize), f64>,
    tolerance: f64,
    // every nonzero d_{ijk} over all orderings, for contractions
    d_expanded: Vec<(usize, usize, usize, f64)>,
}

fn sort3(i: usize, j: usize, k: usize) -> ((usize, usize, usize), f64) {
    let mut v = [i, j, k];
    let mut sign = 1.0;
    // three-element bubble sort, tracking the permutation parity
    for (a, b) in [(0, 1), (1, 2), (0, 1)] {
        if v[a] > v[b] {
            v.swap(a, b);
            sign = -sign;
        }
    }
    ((v[0], v[1], v[2]), sign)
}

fn distinct_permutations(i: usize, j: usize, k: usize) -> Vec<(usize, usize, usize)> {
    let mut all = vec![(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)];
    all.sort_unstable();
    all.dedup();
    all
}

impl StructureTensors {
    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Length `N² − 1` of the adjoint vectors the tensors act on.
    #[inline]
    pub fn adjoint_len(&self) -> usize {
        self.dim * self.dim - 1
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// `d_{ijk}` for any index order (0-based).
    pub fn d(&self, i: usize, j: usize, k: usize) -> f64 {
        let (key, _) = sort3(i, j, k);
        self.d.get(&key).copied().unwrap_or(0.0)
    }

    /// `f_{ijk}` for any index order (0-based).
    pub fn f(&self, i: usize, j: usize, k: usize) -> f64 {
        let (key, sign) = sort3(i, j, k);
        self.f.get(&key).map_or(0.0, |v| sign * v)
    }

    /// Stored `d` entries, `i ≤ j ≤ k`.
    pub fn d_entries(&self) -> impl Iterator<Item = ((usize, usize, usize), f64)> + '_ {
        self.d.iter().map(|(&k, &v)| (k, v))
    }

    /// Stored `f` entries, `i < j < k`.
    pub fn f_entries(&self) -> impl Iterator<Item = ((usize, usize, usize), f64)> + '_ {
        self.f.iter().map(|(&k, &v)| (k, v))
    }

    /// Every nonzero `d_{ijk}` listed once per distinct index ordering.
    pub fn d_expanded(&self) -> &[(usize, usize, usize, f64)] {
        &self.d_expanded
    }

    fn build(
        dim: usize,
        d: BTreeMap<(usize, usize, usize), f64>,
        f: BTreeMap<(usize, usize, usize), f64>,
        tolerance: f64,
    ) -> Self {
        let d_expanded = d
            .iter()
            .flat_map(|(&(i, j, k), &v)| distinct_permutations(i, j, k).into_iter().map(move |(a, b, c)| (a, b, c, v)))
            .collect();
        Self { dim, d, f, tolerance, d_expanded }
    }
}

/// Compute `d_{ijk} = ¼ tr({λᵢ,λⱼ}λₖ)` and `f_{ijk} = −(i/4) tr([λᵢ,λⱼ]λₖ)`.
///
/// Both follow from `tr(λᵢλⱼλₖ) = 2(dᵢⱼₖ + i fᵢⱼₖ)`, so one ordered triple
/// product per `i ≤ j` pair suffices.
pub fn structure_constants(basis: &BasisSet) -> Result<StructureTensors> {
    basis.verify()?;
    let m = basis.len();
    let mut d = BTreeMap::new();
    let mut f = BTreeMap::new();
    for i in 0..m {
        for j in i..m {
            let prod = basis.element(i).as_matrix() * basis.element(j).as_matrix();
            for k in j..m {
                let t = prod.trace_of_product(basis.element(k).as_matrix());
                let dv = 0.5 * t.re;
                let fv = 0.5 * t.im;
                if dv.abs() >= SPARSITY_TOL {
                    d.insert((i, j, k), dv);
                }
                if i < j && j < k && fv.abs() >= SPARSITY_TOL {
                    f.insert((i, j, k), fv);
                }
            }
        }
    }
    Ok(StructureTensors::build(basis.dim(), d, f, SPARSITY_TOL))
}

/// Weights `μ⃗₁, …, μ⃗_N` of the fundamental representation.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightSystem {
    dim: usize,
    weights: Vec<Vec<f64>>,
}

impl WeightSystem {
    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `weights()[i][α] = μ^{(i)}_α`.
    pub fn weights(&self) -> &[Vec<f64>] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> &[f64] {
        &self.weights[i]
    }
}

/// `μ^{(i)}_α = ½ (H_α)_{ii}`.
pub fn weight_vectors(n: usize) -> Result<WeightSystem> {
    check_dim(n)?;
    let mut weights = vec![vec![0.0; n - 1]; n];
    for alpha in 0..n - 1 {
        let diag = cartan_diagonal(n, alpha + 1);
        for (w, h) in weights.iter_mut().zip(diag) {
            w[alpha] = 0.5 * h;
        }
    }
    Ok(WeightSystem { dim: n, weights })
}

/// Symmetric bilinear vee product
/// `(ξ ∨ η)_k = √(N(N−1)/2) · Σᵢⱼ dᵢⱼₖ ξᵢ ηⱼ`.
pub fn vee_product(xi: &[f64], eta: &[f64], tensors: &StructureTensors) -> Result<Vec<f64>> {
    let len = tensors.adjoint_len();
    for v in [xi, eta] {
        if v.len() != len {
            return Err(Error::DimensionMismatch { expected: len, found: v.len() });
        }
    }
    let n = tensors.dim() as f64;
    let pref = (n * (n - 1.0) / 2.0).sqrt();
    let mut out = vec![0.0; len];
    for &(i, j, k, v) in tensors.d_expanded() {
        out[k] += v * xi[i] * eta[j];
    }
    for o in &mut out {
        *o *= pref;
    }
    Ok(out)
}

/// Orthonormal frame of the hyperplane `Σ rᵢ = 1`: `e^{(α)}_i = √2 μ^{(i)}_α`.
pub fn darboux_frame(n: usize) -> Result<Vec<Vec<f64>>> {
    let w = weight_vectors(n)?;
    let s = core::f64::consts::SQRT_2;
    Ok((0..n - 1).map(|alpha| w.weights().iter().map(|mu| s * mu[alpha]).collect()).collect())
}
