//! Perron vectors and Rayleigh–Ritz lower bounds on how much the radius
//! drops when an edge or a vertex is deleted.

use super::{assemble_a_alpha, full_spectrum, solve, DenseMatrix, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Unit eigenvector for the eigenvalue `rho` of a symmetric matrix by
/// inverse iteration, signed so that its largest entry is positive.
pub fn perron_vector(m: &DenseMatrix, rho: f64) -> Result<Vec<f64>> {
    let n = m.order();
    let sigma = rho + 1e-9 * (1.0 + rho.abs());
    let mut shifted = m.clone();
    for i in 0..n {
        shifted.set(i, i, m.get(i, i) - sigma);
    }
    let mut z = vec![1.0 / (n as f64).sqrt(); n];
    for _ in 0..4 {
        let y = solve(&shifted, &z).ok_or(Error::NoConvergence {
            what: "inverse iteration",
            iterations: 0,
        })?;
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        let big = y.iter().fold(0.0_f64, |b, &v| if v.abs() > b.abs() { v } else { b });
        let s = big.signum() / norm;
        z = y.iter().map(|v| v * s).collect();
    }
    Ok(z)
}

/// `zᵀMz` and `Mz - (zᵀMz)z`.
pub fn rayleigh(m: &DenseMatrix, z: &[f64]) -> (f64, Vec<f64>) {
    let mz: Vec<f64> = (0..m.order())
        .map(|i| m.row(i).iter().zip(z).map(|(a, b)| a * b).sum())
        .collect();
    let theta: f64 = mz.iter().zip(z).map(|(a, b)| a * b).sum();
    let r = mz.iter().zip(z).map(|(a, b)| a - theta * b).collect();
    (theta, r)
}

/// Perron data of `A_α(G)` for a connected `G`: unit vector `z`,
/// `θ = zᵀMz`, and a bound on `ρ - θ` from the Kato–Temple inequality.
#[derive(Debug, Clone)]
pub struct Perron {
    pub z: Vec<f64>,
    pub theta: f64,
    pub excess: f64,
}

pub fn perron(g: &Graph, alpha: f64) -> Result<Perron> {
    let m = assemble_a_alpha(g, alpha)?.into_matrix();
    let mut spectrum = full_spectrum(&m, DEFAULT_TOL)?.eigenvalues.unwrap_or_default();
    spectrum.sort_by(|a, b| b.total_cmp(a));
    let top = *spectrum
        .first()
        .ok_or_else(|| Error::Dimension("empty graph".to_string()))?;
    let z = perron_vector(&m, top)?;
    let (theta, r) = rayleigh(&m, &z);
    let gap = theta - spectrum.get(1).copied().unwrap_or(f64::NEG_INFINITY);
    let r2: f64 = r.iter().map(|x| x * x).sum();
    // a factor 10 covers the rounding in r itself
    let excess = if gap > 0.0 { 10.0 * r2 / gap } else { f64::INFINITY };
    Ok(Perron { z, theta, excess })
}

/// Lower bound on `ρ(G) - ρ(G - e)`: the Rayleigh quotient of the Perron
/// vector of `G - e` gains `α(z_u² + z_v²) + 2(1-α)z_u z_v` in `A_α(G)`.
/// Not positive when `G - e` is disconnected.
pub fn edge_deletion_bound(g: &Graph, e: (usize, usize), alpha: f64) -> Result<f64> {
    let p = perron(&g.remove_edge(e)?, alpha)?;
    let (zu, zv) = (p.z[e.0], p.z[e.1]);
    if zu <= 0.0 || zv <= 0.0 {
        return Ok(0.0);
    }
    Ok(alpha * (zu * zu + zv * zv) + 2.0 * (1.0 - alpha) * zu * zv - p.excess)
}

/// Lower bound on `ρ(G) - ρ(G - v)` by Rayleigh–Ritz on the span of the
/// Perron vector of `G - v` and `e_v`.
pub fn vertex_deletion_bound(g: &Graph, v: usize, alpha: f64) -> Result<f64> {
    let p = perron(&g.remove_vertex(v)?, alpha)?;
    let neighbours: Vec<f64> = (0..g.n_vertices())
        .filter(|&w| g.has_edge(v, w))
        .map(|w| p.z[if w > v { w - 1 } else { w }])
        .collect();
    if neighbours.iter().any(|&x| x <= 0.0) {
        return Ok(0.0);
    }
    let a = alpha * neighbours.iter().map(|x| x * x).sum::<f64>();
    let b = (1.0 - alpha) * neighbours.iter().sum::<f64>();
    let u = p.theta + a - alpha * g.degree(v) as f64;
    let root = (u * u + 4.0 * b * b).sqrt();
    let gain = if u >= 0.0 { 2.0 * b * b / (u + root) } else { (root - u) / 2.0 };
    Ok(a + gain - p.excess)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::star;
    use crate::spectral::alpha_radius;

    #[test]
    fn perron_vectors() {
        let m = assemble_a_alpha(&star(3).unwrap(), 0.0).unwrap().into_matrix();
        let z = perron_vector(&m, 3f64.sqrt()).unwrap();
        let s3 = 3f64.sqrt();
        let expected = [1.0 / 2f64.sqrt(), 1.0 / (s3 * 2f64.sqrt()), 1.0 / (s3 * 2f64.sqrt()), 1.0 / (s3 * 2f64.sqrt())];
        for (a, b) in z.iter().zip(expected) {
            assert!((a - b).abs() < 1e-14);
        }
        let (theta, r) = rayleigh(&m, &z);
        assert!((theta - s3).abs() < 1e-14);
        assert!(r.iter().all(|x| x.abs() < 1e-14));
    }

    #[test]
    fn deletion_bounds_are_lower_bounds() {
        let g: Graph = "6; 0-1,1-2,2-3,3-4,1-5,2-5".parse().unwrap();
        for alpha in [0.0, 0.4, 0.9] {
            let r = alpha_radius(&g, alpha, DEFAULT_TOL).unwrap();
            for e in g.edges().filter(|&e| g.remove_edge(e).unwrap().is_connected()) {
                let b = edge_deletion_bound(&g, e, alpha).unwrap();
                let h = g.remove_edge(e).unwrap();
                let d = r - alpha_radius(&h, alpha, DEFAULT_TOL).unwrap();
                assert!(b > 0.0 && b <= d + 1e-13, "{e:?} at {alpha}: {b} vs {d}");
            }
            for v in (0..g.n_vertices()).filter(|&v| g.remove_vertex(v).unwrap().is_connected()) {
                let b = vertex_deletion_bound(&g, v, alpha).unwrap();
                let h = g.remove_vertex(v).unwrap();
                let d = r - alpha_radius(&h, alpha, DEFAULT_TOL).unwrap();
                assert!(b > 0.0 && b <= d + 1e-13, "vertex {v} at {alpha}: {b} vs {d}");
            }
        }
    }
}
