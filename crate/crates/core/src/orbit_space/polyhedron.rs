use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::{cartan_coordinates, Spectrum};
use crate::error::{Error, Result};
use crate::su_algebra::gell_mann_basis;

const EDGE_SLACK: f64 = 1e-12;
const DEDUP_TOL: f64 = 1e-12;
const SCAN_POINTS: usize = 2000;

/// Arc of the qutrit circle inside the ordered triangle.
#[derive(Clone, Debug, PartialEq)]
pub struct SimplexArc {
    pub start_phi: f64,
    pub end_phi: f64,
    /// Angle subtended at the center, `(end_phi − start_phi)/3`.
    pub extent: f64,
}

/// Intersection of the ordered simplex with the sphere of spectra at Bloch
/// radius `r`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyhedronReport {
    pub dim: usize,
    pub radius: f64,
    /// Euclidean radius in spectrum space, `√((N−1)/N) · r`.
    pub sphere_radius: f64,
    /// Vertex spectra.
    pub vertices: Vec<Vec<f64>>,
    /// For each vertex, the pair of simplex corners `(i, j)` spanning the edge
    /// it lies on; corner `k` is `(1/k, …, 1/k, 0, …)`.
    pub edges: Vec<(usize, usize)>,
    pub arc: Option<SimplexArc>,
    /// Radii in `(0, 1)` at which the vertex count changes.
    pub transitions: Vec<f64>,
}

impl PolyhedronReport {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Only the center `(1/N, …, 1/N)` at `r = 0`.
    pub fn is_degenerate(&self) -> bool {
        self.radius == 0.0
    }
}

/// Corner `k` (1-based) of the ordered simplex.
fn corner(n: usize, k: usize) -> Vec<f64> {
    (0..n).map(|i| if i < k { 1.0 / k as f64 } else { 0.0 }).collect()
}

fn sphere_radius(n: usize, r: f64) -> f64 {
    let nf = n as f64;
    ((nf - 1.0) / nf).sqrt() * r
}

fn edge_crossings(n: usize, r: f64) -> (Vec<Vec<f64>>, Vec<(usize, usize)>) {
    let rho = sphere_radius(n, r);
    let center = corner(n, n);
    let mut vertices: Vec<Vec<f64>> = Vec::new();
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let a = corner(n, i);
            let b = corner(n, j);
            let d: Vec<f64> = b.iter().zip(&a).map(|(x, y)| x - y).collect();
            let ac: Vec<f64> = a.iter().zip(&center).map(|(x, y)| x - y).collect();
            let qa: f64 = d.iter().map(|x| x * x).sum();
            let qb: f64 = 2.0 * d.iter().zip(&ac).map(|(x, y)| x * y).sum::<f64>();
            let qc: f64 = ac.iter().map(|x| x * x).sum::<f64>() - rho * rho;
            let disc = qb * qb - 4.0 * qa * qc;
            if disc < -EDGE_SLACK {
                continue;
            }
            let root = disc.max(0.0).sqrt();
            for s in [(-qb - root) / (2.0 * qa), (-qb + root) / (2.0 * qa)] {
                if !(-EDGE_SLACK..=1.0 + EDGE_SLACK).contains(&s) {
                    continue;
                }
                let s = s.clamp(0.0, 1.0);
                let p: Vec<f64> = a.iter().zip(&d).map(|(x, y)| x + s * y).collect();
                let seen = vertices.iter().any(|v| v.iter().zip(&p).all(|(x, y)| (x - y).abs() <= DEDUP_TOL));
                if !seen {
                    vertices.push(p);
                    edges.push((i, j));
                }
            }
        }
    }
    (vertices, edges)
}

fn vertex_count(n: usize, r: f64) -> usize {
    edge_crossings(n, r).0.len()
}

fn check_n(n: usize) -> Result<()> {
    if n == 3 || n == 4 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(alloc::format!("simplex-sphere intersection is implemented for N = 3, 4, not {n}")))
    }
}

/// Radii in `(0, 1)` where the vertex count of the intersection changes, found
/// by scanning a grid and bisecting each change.
pub fn transition_radii(n: usize) -> Result<Vec<f64>> {
    check_n(n)?;
    let grid: Vec<f64> = (0..SCAN_POINTS).map(|i| (i as f64 + 0.5) / SCAN_POINTS as f64).collect();
    let mut out = Vec::new();
    for w in grid.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        let count_lo = vertex_count(n, lo);
        if count_lo == vertex_count(n, hi) {
            continue;
        }
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if vertex_count(n, mid) == count_lo {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo < 1e-15 {
                break;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    Ok(out)
}

/// Vertices of the ordered simplex cut by the sphere of Bloch radius `r`. For
/// `N = 3` this is an arc with two endpoints; for `N = 4` a spherical polygon
/// with three or four vertices.
pub fn intersection_polyhedron(n: usize, r: f64) -> Result<PolyhedronReport> {
    check_n(n)?;
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::Domain { value: r, lo: 0.0, hi: 1.0 });
    }
    let transitions = transition_radii(n)?;
    if r == 0.0 {
        return Ok(PolyhedronReport {
            dim: n,
            radius: 0.0,
            sphere_radius: 0.0,
            vertices: vec![corner(n, n)],
            edges: vec![(n, n)],
            arc: None,
            transitions,
        });
    }
    let (vertices, edges) = edge_crossings(n, r);
    let arc = if n == 3 {
        let basis = gell_mann_basis(3)?;
        let mut phis = Vec::with_capacity(vertices.len());
        for v in &vertices {
            let c = cartan_coordinates(Spectrum::from_eigenvalues(v.clone()).values(), &basis)?;
            phis.push(3.0 * c[1].atan2(c[0]));
        }
        let start = phis.iter().copied().fold(f64::INFINITY, f64::min);
        let end = phis.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Some(SimplexArc { start_phi: start, end_phi: end, extent: (end - start) / 3.0 })
    } else {
        None
    };
    Ok(PolyhedronReport { dim: n, radius: r, sphere_radius: sphere_radius(n, r), vertices, edges, arc, transitions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use core::f64::consts::{FRAC_PI_2, FRAC_PI_3};

    fn dist_to_center(v: &[f64]) -> f64 {
        let n = v.len() as f64;
        v.iter().map(|x| (x - 1.0 / n).powi(2)).sum::<f64>().sqrt()
    }

    #[test]
    fn qutrit_arc_small_radius() {
        let rep = intersection_polyhedron(3, 0.25).unwrap();
        assert_eq!(rep.vertex_count(), 2);
        assert_abs_diff_eq!(rep.sphere_radius, (2.0f64 / 3.0).sqrt() / 4.0, epsilon = 1e-15);
        for v in &rep.vertices {
            assert_abs_diff_eq!(dist_to_center(v), rep.sphere_radius, epsilon = 1e-13);
            assert_abs_diff_eq!(v.iter().sum::<f64>(), 1.0, epsilon = 1e-15);
        }
        let arc = rep.arc.unwrap();
        assert_abs_diff_eq!(arc.start_phi, FRAC_PI_2, epsilon = 1e-12);
        assert_abs_diff_eq!(arc.end_phi, 3.0 * FRAC_PI_2, epsilon = 1e-12);
        assert_abs_diff_eq!(arc.extent, FRAC_PI_3, epsilon = 1e-12);
    }

    #[test]
    fn qutrit_arc_closes_on_pure_vertex() {
        let rep = intersection_polyhedron(3, 1.0).unwrap();
        assert_eq!(rep.vertex_count(), 1);
        assert_abs_diff_eq!(rep.vertices[0][0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(rep.arc.unwrap().extent, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn quatrit_vertex_counts() {
        assert_eq!(intersection_polyhedron(4, 0.2).unwrap().vertex_count(), 3);
        assert_eq!(intersection_polyhedron(4, 0.45).unwrap().vertex_count(), 4);
        assert_eq!(intersection_polyhedron(4, 0.8).unwrap().vertex_count(), 3);
    }

    #[test]
    fn degenerate_and_invalid_inputs() {
        let rep = intersection_polyhedron(4, 0.0).unwrap();
        assert!(rep.is_degenerate());
        assert_eq!(rep.vertices, vec![vec![0.25; 4]]);
        assert!(intersection_polyhedron(5, 0.5).is_err());
        assert!(intersection_polyhedron(3, 1.5).is_err());
    }
}
