//! Data series behind the qutrit and quatrit pictures. Every CSV carries a
//! `convention` column naming the angle convention.

use std::f64::consts::FRAC_PI_2;

use quorbit_core::orbit_space::{cartan_coordinates, qutrit_rank2_radius, transition_radii, CONVENTION};
use quorbit_core::{
    eig_oracle, gell_mann_basis, intersection_polyhedron, orbit_from_spectrum, sample_states, trisectrix_residual,
    SampleMode, Spectrum,
};

use crate::args::{FigureArgs, FigureName};
use crate::records::{PolyhedronFigure, PolyhedronRecord};
use crate::{cell, Output, Result, Table};

const DEFAULT_RANDOM_SAMPLES: usize = 10_000;
const DEFAULT_CURVE_POINTS: usize = 200;

fn default_radii() -> Vec<f64> {
    (1..=10).map(|i| i as f64 / 10.0).collect()
}

fn spaced(lo: f64, hi: f64, count: usize) -> impl Iterator<Item = f64> {
    let step = if count > 1 { (hi - lo) / (count - 1) as f64 } else { 0.0 };
    (0..count).map(move |i| if count > 1 && i + 1 == count { hi } else { lo + step * i as f64 })
}

/// `(𝓘₃, 𝓘₈) = r (cos φ/3, sin φ/3)`.
fn qutrit_plane(r: f64, phi: f64) -> (f64, f64) {
    (r * (phi / 3.0).cos(), r * (phi / 3.0).sin())
}

pub fn figure(a: &FigureArgs, csv: bool) -> Result<Output> {
    match a.name {
        FigureName::QutritTriangle => qutrit_triangle(a.samples.unwrap_or(DEFAULT_RANDOM_SAMPLES), a.seed),
        FigureName::QutritArcs => {
            qutrit_arcs(&a.r.clone().unwrap_or_else(default_radii), a.samples.unwrap_or(DEFAULT_CURVE_POINTS))
        }
        FigureName::QutritRank2 => qutrit_rank2(a.samples.unwrap_or(DEFAULT_CURVE_POINTS)),
        FigureName::QuatritSlice => quatrit_slice(a.samples.unwrap_or(DEFAULT_RANDOM_SAMPLES), a.seed),
        FigureName::QuatritPolyhedron => quatrit_polyhedron(&a.r.clone().unwrap_or_else(default_radii), csv),
    }
}

fn qutrit_triangle(samples: usize, seed: u64) -> Result<Output> {
    let basis = gell_mann_basis(3)?;
    let mut t = Table::new(["convention", "r", "phi", "I3", "I8"]);
    for rho in sample_states(3, samples, SampleMode::SpectrumHaar, seed)? {
        let c = orbit_from_spectrum(&eig_oracle(&rho)?, &basis)?;
        let (x, y) = qutrit_plane(c.radius, c.angles[0]);
        t.push(vec![CONVENTION.into(), cell(c.radius), cell(c.angles[0]), cell(x), cell(y)]);
    }
    Ok(Output::Table(t))
}

fn qutrit_arcs(radii: &[f64], points: usize) -> Result<Output> {
    let mut t = Table::new(["convention", "r", "phi", "I3", "I8"]);
    for &r in radii {
        let rep = intersection_polyhedron(3, r)?;
        let (lo, hi, count) = match &rep.arc {
            Some(arc) if arc.extent > 0.0 => (arc.start_phi, arc.end_phi, points),
            Some(arc) => (arc.start_phi, arc.start_phi, 1),
            None => (FRAC_PI_2, FRAC_PI_2, 1),
        };
        for phi in spaced(lo, hi, count) {
            let (x, y) = qutrit_plane(r, phi);
            t.push(vec![CONVENTION.into(), cell(r), cell(phi), cell(x), cell(y)]);
        }
    }
    Ok(Output::Table(t))
}

fn qutrit_rank2(points: usize) -> Result<Output> {
    let mut t = Table::new(["convention", "phi", "r", "I3", "I8", "trisectrix_residual"]);
    for phi in spaced(FRAC_PI_2, 3.0 * FRAC_PI_2, points) {
        let r = qutrit_rank2_radius(phi);
        let (x, y) = qutrit_plane(r, phi);
        t.push(vec![CONVENTION.into(), cell(phi), cell(r), cell(x), cell(y), cell(trisectrix_residual(r, phi))]);
    }
    Ok(Output::Table(t))
}

/// Random qutrit spectra padded with a zero, i.e. rank-3 quatrit states.
fn quatrit_slice(samples: usize, seed: u64) -> Result<Output> {
    let basis = gell_mann_basis(4)?;
    let mut t = Table::new(["convention", "I3", "I8", "I15"]);
    for rho in sample_states(3, samples, SampleMode::SpectrumHaar, seed)? {
        let mut v = eig_oracle(&rho)?.values().to_vec();
        v.push(0.0);
        let coords = cartan_coordinates(Spectrum::from_eigenvalues(v).values(), &basis)?;
        let mut row = vec![CONVENTION.to_string()];
        row.extend(coords.iter().map(|&x| cell(x)));
        t.push(row);
    }
    Ok(Output::Table(t))
}

fn quatrit_polyhedron(radii: &[f64], csv: bool) -> Result<Output> {
    let polyhedra = radii
        .iter()
        .map(|&r| {
            let rep = intersection_polyhedron(4, r)?;
            Ok(PolyhedronRecord { r, sphere_radius: rep.sphere_radius, vertices: rep.vertices, edges: rep.edges })
        })
        .collect::<Result<Vec<_>>>()?;
    if csv {
        let mut t = Table::new(["convention", "r", "vertex", "edge_from", "edge_to", "p1", "p2", "p3", "p4"]);
        for p in &polyhedra {
            for (k, (v, e)) in p.vertices.iter().zip(&p.edges).enumerate() {
                let mut row = vec![CONVENTION.into(), cell(p.r), (k + 1).to_string(), e.0.to_string(), e.1.to_string()];
                row.extend(v.iter().map(|&x| cell(x)));
                t.push(row);
            }
        }
        return Ok(Output::Table(t));
    }
    let fig = PolyhedronFigure { n: 4, convention: CONVENTION, transitions: transition_radii(4)?, polyhedra };
    Ok(Output::Json(vec![serde_json::to_value(fig)?]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn spaced_hits_both_ends() {
        let v: Vec<f64> = spaced(0.0, PI, 5).collect();
        assert_eq!(v.len(), 5);
        assert_eq!(v[0], 0.0);
        assert_eq!(v[4], PI);
        assert_eq!(spaced(1.0, 2.0, 1).collect::<Vec<_>>(), vec![1.0]);
    }
}
