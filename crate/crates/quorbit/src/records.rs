//! JSON record shapes read and written by the CLI.

use num_complex::Complex64;
use quorbit_core::{CMatrix, CasimirValues, HermitianMatrix, StateClassification};
use serde::{Deserialize, Serialize};

/// Matrix entries as `[re, im]` pairs, row major.
pub type MatrixRows = Vec<Vec<[f64; 2]>>;

pub fn matrix_rows(m: &CMatrix) -> MatrixRows {
    m.rows().iter().map(|row| row.iter().map(|z| [z.re, z.im]).collect()).collect()
}

pub fn matrix_from_rows(rows: &MatrixRows) -> quorbit_core::Result<HermitianMatrix> {
    let rows: Vec<Vec<Complex64>> =
        rows.iter().map(|row| row.iter().map(|&[re, im]| Complex64::new(re, im)).collect()).collect();
    HermitianMatrix::from_rows(&rows)
}

/// One line of `check` input: a Bloch vector or a density matrix.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateRecord {
    #[serde(rename = "N")]
    pub n: Option<usize>,
    pub xi: Option<Vec<f64>>,
    pub rho: Option<MatrixRows>,
}

#[derive(Debug, Serialize)]
pub struct BlochRecord {
    #[serde(rename = "N")]
    pub n: usize,
    pub xi: Vec<f64>,
}

#[derive(Debug, Serialize)]
pub struct MatrixRecord {
    #[serde(rename = "N")]
    pub n: usize,
    pub rho: MatrixRows,
}

#[derive(Debug, Serialize)]
pub struct Verdict {
    pub is_state: bool,
    pub rank: usize,
    pub stratum: String,
    pub margin: f64,
}

impl From<&StateClassification> for Verdict {
    fn from(c: &StateClassification) -> Self {
        Verdict { is_state: c.is_state, rank: c.rank, stratum: c.stratum.label(), margin: c.margin }
    }
}

#[derive(Debug, Serialize)]
pub struct BasisElement {
    pub index: usize,
    pub cartan: bool,
    pub matrix: MatrixRows,
}

#[derive(Debug, Serialize)]
pub struct BasisRecord {
    #[serde(rename = "N")]
    pub n: usize,
    pub elements: Vec<BasisElement>,
}

#[derive(Debug, Serialize)]
pub struct TensorEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: f64,
}

#[derive(Debug, Serialize)]
pub struct TensorRecord {
    #[serde(rename = "N")]
    pub n: usize,
    pub d: Vec<TensorEntry>,
    pub f: Vec<TensorEntry>,
}

#[derive(Debug, Serialize)]
pub struct CasimirRecord {
    pub c2: f64,
    pub c3: f64,
    pub c4: f64,
    pub c5: f64,
    pub c6: f64,
}

impl From<&CasimirValues> for CasimirRecord {
    fn from(c: &CasimirValues) -> Self {
        CasimirRecord { c2: c.c2, c3: c.c3, c4: c.c4, c5: c.c5, c6: c.c6 }
    }
}

#[derive(Debug, Serialize)]
pub struct InvariantsRecord {
    #[serde(rename = "N")]
    pub n: usize,
    pub t: Vec<f64>,
    #[serde(rename = "S")]
    pub s: Vec<f64>,
    pub disc: f64,
    pub bezoutian_rank: usize,
    pub casimirs: CasimirRecord,
}

#[derive(Debug, Serialize)]
pub struct OrbitRecord {
    #[serde(rename = "N")]
    pub n: usize,
    pub r: f64,
    pub angles: Vec<f64>,
    pub convention: &'static str,
}

#[derive(Debug, Serialize)]
pub struct SpectrumRecord {
    #[serde(rename = "N")]
    pub n: usize,
    /// Eigenvalues in weight order.
    pub spectrum: Vec<f64>,
    pub sorted: Vec<f64>,
    pub valid: bool,
    pub ordered: bool,
    pub convention: &'static str,
}

#[derive(Debug, Serialize)]
pub struct EffectiveRecord {
    pub kind: &'static str,
    pub radius: f64,
}

#[derive(Debug, Serialize)]
pub struct BoundaryRecord {
    #[serde(rename = "N")]
    pub n: usize,
    pub r: f64,
    pub angles: Vec<f64>,
    pub spectrum: Vec<f64>,
    pub ordered: bool,
    pub label: String,
    pub multiplicities: Vec<usize>,
    pub orbit_dim: usize,
    pub rank: usize,
    pub stratum: String,
    pub effective: Option<EffectiveRecord>,
    pub convention: &'static str,
}

#[derive(Debug, Serialize)]
pub struct PolyhedronRecord {
    pub r: f64,
    pub sphere_radius: f64,
    pub vertices: Vec<Vec<f64>>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Serialize)]
pub struct PolyhedronFigure {
    #[serde(rename = "N")]
    pub n: usize,
    pub convention: &'static str,
    pub transitions: Vec<f64>,
    pub polyhedra: Vec<PolyhedronRecord>,
}
