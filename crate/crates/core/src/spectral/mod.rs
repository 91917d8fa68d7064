//! Graph matrices and their spectra.
//!
//! [`assemble_a_alpha`] builds `A_α(G) = αD(G) + (1-α)A(G)`;
//! [`assemble_laplacian`] builds `L = D - A` or `Q = D + A`. Spectra come from
//! a dense symmetric solver (Householder reduction followed by implicit QL)
//! or, for large matrices whose off-diagonal pattern is a forest, from
//! Sylvester-inertia bisection, which costs `O(n)` per probe.

mod charpoly;
mod eigen;
mod forest;
mod perron;

use std::ops::Deref;

use crate::error::{check_alpha_closed, Error, Result};
use crate::graph::Graph;

pub use charpoly::{
    bn_charpoly_closed, char_poly_eval, char_poly_eval_deleted, char_poly_of, delta_of_lambda,
    determinant, h_of_lambda, path_charpoly_closed, solve, tridiag_charpoly_recurrence,
    CharPolyContext, DEGENERATE_DELTA,
};
pub use forest::ForestMatrix;
pub use perron::{
    edge_deletion_bound, perron, perron_vector, rayleigh, vertex_deletion_bound, Perron,
};

/// Largest order solved densely when a sparse route is available.
pub const DENSE_LIMIT: usize = 64;

/// Default absolute tolerance on eigenvalues.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Square matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    order: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(order: usize) -> Self {
        DenseMatrix {
            order,
            data: vec![0.0; order * order],
        }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        let mut m = DenseMatrix::zeros(order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            m.data[i * order..(i + 1) * order].copy_from_slice(row);
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.order + j] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// First `(row, col)` with `m[row][col] != m[col][row]`, if any.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        for i in 0..self.order {
            for j in i + 1..self.order {
                if self.get(i, j) != self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetry().is_none()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|&x| x >= 0.0)
    }

    /// Principal submatrix with row and column `u` removed.
    pub fn delete(&self, u: usize) -> Result<DenseMatrix> {
        if u >= self.order {
            return Err(Error::VertexOutOfRange {
                vertex: u,
                n_vertices: self.order,
            });
        }
        let keep: Vec<usize> = (0..self.order).filter(|&i| i != u).collect();
        let mut out = DenseMatrix::zeros(keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                out.set(a, b, self.get(i, j));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: f64) -> DenseMatrix {
        DenseMatrix {
            order: self.order,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    /// `max |self - other|` entrywise.
    pub fn max_abs_diff(&self, other: &DenseMatrix) -> f64 {
        assert_eq!(self.order, other.order);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MatrixKind {
    Alpha(f64),
    Laplacian,
    SignlessLaplacian,
}

/// A graph matrix together with how it was assembled.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaMatrix {
    kind: MatrixKind,
    matrix: DenseMatrix,
}

impl AlphaMatrix {
    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    /// The mixing parameter; `Some(1/2)` for `Q` since `Q = 2A_{1/2}`.
    pub fn alpha(&self) -> Option<f64> {
        match self.kind {
            MatrixKind::Alpha(a) => Some(a),
            MatrixKind::SignlessLaplacian => Some(0.5),
            MatrixKind::Laplacian => None,
        }
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> DenseMatrix {
        self.matrix
    }
}

impl Deref for AlphaMatrix {
    type Target = DenseMatrix;

    fn deref(&self) -> &DenseMatrix {
        &self.matrix
    }
}

/// `A_α(G)`: `α d(v)` on the diagonal, `1-α` on edges.
pub fn assemble_a_alpha(g: &Graph, alpha: f64) -> Result<AlphaMatrix> {
    check_alpha_closed(alpha)?;
    let n = g.n_vertices();
    let mut m = DenseMatrix::zeros(n);
    for (v, d) in g.degrees().into_iter().enumerate() {
        m.set(v, v, alpha * d as f64);
    }
    let off = 1.0 - alpha;
    for (u, v) in g.edges() {
        m.set(u, v, off);
        m.set(v, u, off);
    }
    Ok(AlphaMatrix {
        kind: MatrixKind::Alpha(alpha),
        matrix: m,
    })
}

/// `L = D - A`, or `Q = D + A` when `signless`.
pub fn assemble_laplacian(g: &Graph, signless: bool) -> AlphaMatrix {
    let n = g.n_vertices();
    let mut m = DenseMatrix::zeros(n);
    for (v, d) in g.degrees().into_iter().enumerate() {
        m.set(v, v, d as f64);
    }
    let off = if signless { 1.0 } else { -1.0 };
    for (u, v) in g.edges() {
        m.set(u, v, off);
        m.set(v, u, off);
    }
    AlphaMatrix {
        kind: if signless {
            MatrixKind::SignlessLaplacian
        } else {
            MatrixKind::Laplacian
        },
        matrix: m,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    /// Householder tridiagonalisation + implicit QL.
    DenseQl,
    /// Bisection on Sylvester inertia counts over a forest pattern.
    ForestInertia,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    pub radius: f64,
    /// Ascending; present in full-spectrum mode and for dense solves.
    pub eigenvalues: Option<Vec<f64>>,
    pub method: SolveMethod,
    pub iterations: usize,
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("tolerance must be positive, got {tol}")))
    }
}

fn check_symmetric(m: &DenseMatrix) -> Result<()> {
    match m.asymmetry() {
        Some((row, col)) => Err(Error::NotSymmetric { row, col }),
        None => Ok(()),
    }
}

fn dense_result(m: &DenseMatrix) -> Result<SpectralResult> {
    let (eigenvalues, iterations) = eigen::symmetric_eigenvalues(m)?;
    let radius = eigenvalues.iter().fold(0.0_f64, |r, x| r.max(x.abs()));
    Ok(SpectralResult {
        radius,
        eigenvalues: Some(eigenvalues),
        method: SolveMethod::DenseQl,
        iterations,
    })
}

/// Largest eigenvalue magnitude of a symmetric matrix.
pub fn spectral_radius(m: &DenseMatrix, tol: f64) -> Result<SpectralResult> {
    check_tol(tol)?;
    check_symmetric(m)?;
    if m.order() > DENSE_LIMIT {
        if let Some(f) = ForestMatrix::from_dense(m) {
            return f.spectral_radius(tol);
        }
    }
    dense_result(m)
}

/// All eigenvalues, ascending.
pub fn full_spectrum(m: &DenseMatrix, tol: f64) -> Result<SpectralResult> {
    check_tol(tol)?;
    check_symmetric(m)?;
    dense_result(m)
}

/// `ρ_{A_α}(G)`. Large forests skip dense assembly entirely.
pub fn alpha_radius(g: &Graph, alpha: f64, tol: f64) -> Result<f64> {
    check_alpha_closed(alpha)?;
    if g.n_vertices() > DENSE_LIMIT && g.is_forest() {
        return Ok(ForestMatrix::a_alpha(g, alpha)?.spectral_radius(tol)?.radius);
    }
    Ok(spectral_radius(assemble_a_alpha(g, alpha)?.matrix(), tol)?.radius)
}

/// Lower and upper bounds on `ρ_{A_α}` of a connected graph with maximum
/// degree `Δ`: `½(α(Δ+1) + √(α²(Δ+1)² + 4Δ(1-2α)))` and `Δ`.
pub fn radius_bounds(g: &Graph, alpha: f64) -> (f64, f64) {
    let d = g.max_degree() as f64;
    let a = alpha * (d + 1.0);
    let lower = 0.5 * (a + (a * a + 4.0 * d * (1.0 - 2.0 * alpha)).max(0.0).sqrt());
    (lower, d)
}
