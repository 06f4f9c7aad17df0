use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::str::FromStr;

#[allow(unused_imports)]
use num_traits::Float;

use super::{spectrum_from_orbit, OrbitCoordinates};
use crate::error::{Error, Result};
use crate::state_space::Stratum;
use crate::su_algebra::WeightSystem;

/// Eigenvalues closer than this are equal, and smaller than this are zero.
pub const DEGENERACY_TOL: f64 = 1e-9;

const DOMAIN_SLACK: f64 = 1e-12;

/// Lower-dimensional system whose spectrum matches a boundary stratum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EffectiveKind {
    QubitInQutrit,
    QutritInQuatrit,
    QubitInQutritInQuatrit,
}

impl EffectiveKind {
    pub fn name(&self) -> &'static str {
        match self {
            EffectiveKind::QubitInQutrit => "qubit-in-qutrit",
            EffectiveKind::QutritInQuatrit => "qutrit-in-quatrit",
            EffectiveKind::QubitInQutritInQuatrit => "qubit-in-qutrit-in-quatrit",
        }
    }

    /// Smallest outer radius at which the stratum exists.
    pub fn threshold(&self) -> f64 {
        match self {
            EffectiveKind::QubitInQutrit => 0.5,
            EffectiveKind::QutritInQuatrit => 1.0 / 3.0,
            EffectiveKind::QubitInQutritInQuatrit => 1.0 / 3f64.sqrt(),
        }
    }

    fn coefficient(&self) -> f64 {
        match self {
            EffectiveKind::QubitInQutrit => 2.0 / 3f64.sqrt(),
            EffectiveKind::QutritInQuatrit => 3.0 / (2.0 * 2f64.sqrt()),
            EffectiveKind::QubitInQutritInQuatrit => 3.0 / 6f64.sqrt(),
        }
    }
}

impl FromStr for EffectiveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "qubit-in-qutrit" => Ok(EffectiveKind::QubitInQutrit),
            "qutrit-in-quatrit" => Ok(EffectiveKind::QutritInQuatrit),
            "qubit-in-qutrit-in-quatrit" => Ok(EffectiveKind::QubitInQutritInQuatrit),
            other => Err(Error::InvalidArgument(format!("unknown effective-radius kind '{other}'"))),
        }
    }
}

/// Bloch radius of the nested system: `(2/√3)√(r²−¼)`, `(3/(2√2))√(r²−1/9)` or
/// `(3/√6)√(r²−⅓)`.
pub fn effective_radius(kind: EffectiveKind, r: f64) -> Result<f64> {
    let lo = kind.threshold();
    if !(r >= lo - DOMAIN_SLACK && r <= 1.0 + DOMAIN_SLACK) {
        return Err(Error::Domain { value: r, lo, hi: 1.0 });
    }
    Ok(kind.coefficient() * (r * r - lo * lo).max(0.0).sqrt())
}

/// `(x²+y²)(y−3a)+4a³` at `a = ½`, `x = r cosφ`, `y = r sinφ`.
pub fn trisectrix_residual(r: f64, phi: f64) -> f64 {
    let a = 0.5;
    r * r * (r * phi.sin() - 3.0 * a) + 4.0 * a * a * a
}

/// Radius of the qutrit rank-2 curve, `1/(2 sin(φ/3))`.
pub fn qutrit_rank2_radius(phi: f64) -> f64 {
    0.5 / (phi / 3.0).sin()
}

/// Polar angle of the quatrit rank-3 surface, `cosθ = 1/(3r)` for `r ∈ [⅓, 1]`.
pub fn quatrit_rank3_theta(r: f64) -> Result<f64> {
    if !(1.0 / 3.0 - DOMAIN_SLACK..=1.0 + DOMAIN_SLACK).contains(&r) {
        return Err(Error::Domain { value: r, lo: 1.0 / 3.0, hi: 1.0 });
    }
    Ok((1.0 / (3.0 * r)).min(1.0).acos())
}

/// Qutrit ordering in closed form: `φ ∈ [π/2, 3π/2]` and `r sin(φ/3) ≤ ½`.
pub fn qutrit_domain_analytic(r: f64, phi: f64) -> bool {
    let third = phi / 3.0;
    let (lo, hi) = (core::f64::consts::FRAC_PI_6, core::f64::consts::FRAC_PI_2);
    third >= lo - DOMAIN_SLACK && third <= hi + DOMAIN_SLACK && r * third.sin() <= 0.5 + DOMAIN_SLACK
}

/// Quatrit ordering in closed form: `φ/3 ∈ [π/6, π/2]`, `cotθ ≥ sin(φ/3)/√2`
/// and `r cosθ ≤ ⅓`.
pub fn quatrit_domain_analytic(r: f64, theta: f64, phi: f64) -> bool {
    let third = phi / 3.0;
    let (lo, hi) = (core::f64::consts::FRAC_PI_6, core::f64::consts::FRAC_PI_2);
    let (st, ct) = (theta.sin(), theta.cos());
    third >= lo - DOMAIN_SLACK
        && third <= hi + DOMAIN_SLACK
        && st >= -DOMAIN_SLACK
        && 2f64.sqrt() * ct >= st * third.sin() - DOMAIN_SLACK
        && r * ct <= 1.0 / 3.0 + DOMAIN_SLACK
}

#[derive(Clone, Debug, PartialEq)]
pub struct StratumReport {
    /// `O123`, `O1|23`, `O12|3`, `C` for qutrits; multiplicity pattern such
    /// as `O[3,1]` otherwise.
    pub label: String,
    /// Eigenvalue multiplicities in descending order of eigenvalue.
    pub multiplicities: Vec<usize>,
    /// `N² − Σ mᵢ²`.
    pub orbit_dim: usize,
    pub rank: usize,
    pub stratum: Stratum,
    pub effective: Option<(EffectiveKind, f64)>,
}

fn multiplicities(sorted: &[f64]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    let mut last = f64::NAN;
    for &v in sorted {
        if (last - v).abs() <= DEGENERACY_TOL {
            *out.last_mut().unwrap() += 1;
        } else {
            out.push(1);
        }
        last = v;
    }
    out
}

fn label(mult: &[usize]) -> String {
    if mult.len() == 1 {
        return "C".into();
    }
    match mult {
        [1, 1, 1] => "O123".into(),
        [2, 1] => "O1|23".into(),
        [1, 2] => "O12|3".into(),
        _ => {
            let parts: Vec<String> = mult.iter().map(|m| format!("{m}")).collect();
            format!("O[{}]", parts.join(","))
        }
    }
}

/// Degeneracy type, rank and orbit dimension of the spectrum at `coords`.
pub fn rank_strata(coords: &OrbitCoordinates, weights: &WeightSystem) -> Result<StratumReport> {
    let n = coords.dim;
    let s = spectrum_from_orbit(coords, weights)?;
    if !s.valid {
        return Err(Error::InvalidArgument(format!("coordinates give a negative eigenvalue {:e}", s.sorted.min())));
    }
    let values = s.sorted.values();
    let mult = multiplicities(values);
    let rank = values.iter().filter(|&&v| v > DEGENERACY_TOL).count();
    let orbit_dim = n * n - mult.iter().map(|m| m * m).sum::<usize>();
    let kind = match (n, rank) {
        (3, 2) => Some(EffectiveKind::QubitInQutrit),
        (4, 3) => Some(EffectiveKind::QutritInQuatrit),
        (4, 2) => Some(EffectiveKind::QubitInQutritInQuatrit),
        _ => None,
    };
    let effective = match kind {
        Some(k) => Some((k, effective_radius(k, coords.radius)?)),
        None => None,
    };
    Ok(StratumReport {
        label: label(&mult),
        multiplicities: mult,
        orbit_dim,
        rank,
        stratum: Stratum::from_rank(rank, n),
        effective,
    })
}
