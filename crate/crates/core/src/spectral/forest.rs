use std::collections::VecDeque;

use super::{DenseMatrix, SolveMethod, SpectralResult};
use crate::error::{check_alpha_closed, Error, Result};
use crate::graph::Graph;

const MAX_BISECTIONS: usize = 400;

/// Symmetric matrix whose off-diagonal support is a forest.
///
/// Eigenvalue counts on either side of a shift `x` are read off the
/// signs of an `LDLᵀ`-style elimination of `M - xI` from the leaves up
/// (Jacobs–Trevisan). A zero pivot at a child is resolved by pairing that
/// child with its parent and cutting the parent's upward edge.
#[derive(Debug, Clone)]
pub struct ForestMatrix {
    diag: Vec<f64>,
    /// Vertices in breadth-first order per component.
    order: Vec<usize>,
    /// `(parent, weight)`; roots have `None`.
    parent: Vec<Option<(usize, f64)>>,
    /// Children with edge weights.
    children: Vec<Vec<(usize, f64)>>,
    nonnegative: bool,
}

impl ForestMatrix {
    /// Builds from `(u, v, weight)` triples; `None` if the support has a cycle.
    pub fn new(diag: Vec<f64>, edges: &[(usize, usize, f64)]) -> Option<Self> {
        let n = diag.len();
        let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
        for &(u, v, w) in edges {
            adj[u].push((v, w));
            adj[v].push((u, w));
        }
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &(w, weight) in &adj[v] {
                    if Some(w) == parent[v].map(|(p, _)| p) {
                        continue;
                    }
                    if seen[w] {
                        return None;
                    }
                    seen[w] = true;
                    parent[w] = Some((v, weight));
                    children[v].push((w, weight));
                    queue.push_back(w);
                }
            }
        }
        let nonnegative = diag.iter().all(|&d| d >= 0.0) && edges.iter().all(|e| e.2 >= 0.0);
        Some(ForestMatrix {
            diag,
            order,
            parent,
            children,
            nonnegative,
        })
    }

    /// Reads the pattern of a dense symmetric matrix; `None` unless it is a forest.
    pub fn from_dense(m: &DenseMatrix) -> Option<Self> {
        let n = m.order();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let w = m.get(i, j);
                if w != 0.0 {
                    if edges.len() >= n {
                        return None;
                    }
                    edges.push((i, j, w));
                }
            }
        }
        ForestMatrix::new((0..n).map(|i| m.get(i, i)).collect(), &edges)
    }

    /// `A_α(G)` for a forest `G`.
    pub fn a_alpha(g: &Graph, alpha: f64) -> Result<Self> {
        check_alpha_closed(alpha)?;
        let diag = g.degrees().iter().map(|&d| alpha * d as f64).collect();
        let edges: Vec<_> = g.edges().map(|(u, v)| (u, v, 1.0 - alpha)).collect();
        ForestMatrix::new(diag, &edges)
            .ok_or_else(|| Error::Domain("graph is not a forest".to_string()))
    }

    pub fn order(&self) -> usize {
        self.diag.len()
    }

    /// Numbers of eigenvalues `(> x, < x, == x)`.
    pub fn inertia(&self, x: f64) -> (usize, usize, usize) {
        let n = self.order();
        let mut a: Vec<f64> = self.diag.iter().map(|d| d - x).collect();
        let mut cut = vec![false; n];
        for &v in self.order.iter().rev() {
            let live = || self.children[v].iter().filter(|(c, _)| !cut[*c]);
            if let Some(&(c, w)) = live().find(|(c, _)| a[*c] == 0.0) {
                a[c] = 2.0;
                a[v] = -0.5 * w * w;
                cut[v] = true;
            } else {
                a[v] -= live().map(|&(c, w)| w * w / a[c]).sum::<f64>();
            }
            if self.parent[v].is_none() {
                cut[v] = true;
            }
        }
        let pos = a.iter().filter(|&&x| x > 0.0).count();
        let neg = a.iter().filter(|&&x| x < 0.0).count();
        (pos, neg, n - pos - neg)
    }

    fn gershgorin(&self) -> (f64, f64) {
        let mut radius = vec![0.0; self.order()];
        for (v, p) in self.parent.iter().enumerate() {
            if let Some((u, w)) = p {
                radius[v] += w.abs();
                radius[*u] += w.abs();
            }
        }
        let lo = self
            .diag
            .iter()
            .zip(&radius)
            .map(|(d, r)| d - r)
            .fold(f64::INFINITY, f64::min);
        let hi = self
            .diag
            .iter()
            .zip(&radius)
            .map(|(d, r)| d + r)
            .fold(f64::NEG_INFINITY, f64::max);
        (lo, hi)
    }

    /// Bisection on `(lo, hi)` keeping `pred(lo) && !pred(hi)`.
    fn bisect<F: Fn(f64) -> bool>(
        mut lo: f64,
        mut hi: f64,
        tol: f64,
        pred: F,
    ) -> Result<(f64, usize)> {
        for it in 0..MAX_BISECTIONS {
            let mid = 0.5 * (lo + hi);
            if hi - lo <= tol || mid <= lo || mid >= hi {
                return Ok((mid, it));
            }
            if pred(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Err(Error::NoConvergence {
            what: "inertia bisection",
            iterations: MAX_BISECTIONS,
        })
    }

    pub fn largest_eigenvalue(&self, tol: f64) -> Result<(f64, usize)> {
        let (lo, hi) = self.gershgorin();
        let pad = 1.0 + hi.abs().max(lo.abs()) * 1e-12;
        Self::bisect(lo - pad, hi + pad, tol, |x| self.inertia(x).0 > 0)
    }

    pub fn smallest_eigenvalue(&self, tol: f64) -> Result<(f64, usize)> {
        let (lo, hi) = self.gershgorin();
        let pad = 1.0 + hi.abs().max(lo.abs()) * 1e-12;
        // pred(x): no eigenvalue below x
        Self::bisect(lo - pad, hi + pad, tol, |x| self.inertia(x).1 == 0)
    }

    pub fn spectral_radius(&self, tol: f64) -> Result<SpectralResult> {
        if self.order() == 0 {
            return Err(Error::Dimension("empty matrix".to_string()));
        }
        let (top, it_top) = self.largest_eigenvalue(tol)?;
        let (radius, iterations) = if self.nonnegative {
            (top, it_top)
        } else {
            let (bottom, it_bottom) = self.smallest_eigenvalue(tol)?;
            (top.abs().max(bottom.abs()), it_top + it_bottom)
        };
        Ok(SpectralResult {
            radius,
            eigenvalues: None,
            method: SolveMethod::ForestInertia,
            iterations,
        })
    }
}
