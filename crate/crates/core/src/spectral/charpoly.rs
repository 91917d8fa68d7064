use super::{assemble_a_alpha, DenseMatrix};
use crate::error::{check_alpha_half_open, Error, Result};
use crate::graph::Graph;

/// Below this `|Δ|` the closed forms are replaced by the tridiagonal recurrence.
pub const DEGENERATE_DELTA: f64 = 1e-9;

/// Row-pivoted LU factors packed in one array, the row permutation and the
/// permutation sign; `None` when a zero pivot column appears.
fn lu_factor(m: &DenseMatrix) -> Option<(Vec<Vec<f64>>, Vec<usize>, f64)> {
    let n = m.order();
    let mut a: Vec<Vec<f64>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign = 1.0;
    for k in 0..n {
        let pivot = (k..n)
            .max_by(|&i, &j| a[i][k].abs().total_cmp(&a[j][k].abs()))
            .expect("non-empty range");
        if a[pivot][k] == 0.0 {
            return None;
        }
        if pivot != k {
            a.swap(pivot, k);
            perm.swap(pivot, k);
            sign = -sign;
        }
        let akk = a[k][k];
        for i in k + 1..n {
            let factor = a[i][k] / akk;
            a[i][k] = factor;
            if factor != 0.0 {
                for j in k + 1..n {
                    a[i][j] -= factor * a[k][j];
                }
            }
        }
    }
    Some((a, perm, sign))
}

/// Determinant by LU factorisation with partial pivoting.
pub fn determinant(m: &DenseMatrix) -> f64 {
    match lu_factor(m) {
        Some((a, _, sign)) => (0..m.order()).fold(sign, |d, k| d * a[k][k]),
        None => 0.0,
    }
}

/// Solves `M y = b`; `None` if `M` is singular.
pub fn solve(m: &DenseMatrix, b: &[f64]) -> Option<Vec<f64>> {
    let n = m.order();
    assert_eq!(b.len(), n);
    let (a, perm, _) = lu_factor(m)?;
    let mut y: Vec<f64> = perm.iter().map(|&p| b[p]).collect();
    for i in 0..n {
        for j in 0..i {
            y[i] -= a[i][j] * y[j];
        }
    }
    for i in (0..n).rev() {
        for j in i + 1..n {
            y[i] -= a[i][j] * y[j];
        }
        y[i] /= a[i][i];
    }
    Some(y)
}

/// `det(λI - M)`.
pub fn char_poly_of(m: &DenseMatrix, lambda: f64) -> f64 {
    let mut shifted = m.scale(-1.0);
    for i in 0..m.order() {
        shifted.set(i, i, lambda - m.get(i, i));
    }
    determinant(&shifted)
}

/// `φ(G) = det(λI - A_α(G))`.
pub fn char_poly_eval(g: &Graph, alpha: f64, lambda: f64) -> Result<f64> {
    Ok(char_poly_of(assemble_a_alpha(g, alpha)?.matrix(), lambda))
}

/// `φ(G)_u`: the characteristic polynomial of `A_α(G)` with row and column
/// `u` removed. The degrees are those of `G`, not of `G - u`.
pub fn char_poly_eval_deleted(g: &Graph, u: usize, alpha: f64, lambda: f64) -> Result<f64> {
    g.check_vertex(u)?;
    Ok(char_poly_of(&assemble_a_alpha(g, alpha)?.delete(u)?, lambda))
}

/// `p_n(λ)` for the tridiagonal matrix with the given diagonal and
/// off-diagonal, via `p_k = (λ - d_k) p_{k-1} - e_{k-1}² p_{k-2}`.
pub fn tridiag_charpoly_recurrence(diag: &[f64], offdiag: &[f64], lambda: f64) -> Result<f64> {
    if diag.is_empty() {
        if offdiag.is_empty() {
            return Ok(1.0);
        }
        return Err(Error::Dimension("off-diagonal without diagonal".to_string()));
    }
    if offdiag.len() + 1 != diag.len() {
        return Err(Error::Dimension(format!(
            "diagonal of length {} needs {} off-diagonal entries, got {}",
            diag.len(),
            diag.len() - 1,
            offdiag.len()
        )));
    }
    let mut prev = 1.0;
    let mut cur = lambda - diag[0];
    for k in 1..diag.len() {
        let next = (lambda - diag[k]) * cur - offdiag[k - 1] * offdiag[k - 1] * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `Δ_{λ,α} = √((λ-4α+2)(λ-2))`.
pub fn delta_of_lambda(lambda: f64, alpha: f64) -> Result<f64> {
    let radicand = (lambda - 4.0 * alpha + 2.0) * (lambda - 2.0);
    if radicand < 0.0 || radicand.is_nan() {
        return Err(Error::Domain(format!(
            "(λ-4α+2)(λ-2) < 0 at λ = {lambda}, α = {alpha}"
        )));
    }
    Ok(radicand.sqrt())
}

/// `h(λ)_α = (λ - Δ_{λ,α}) / (2α(λ-2) + 2)`.
pub fn h_of_lambda(lambda: f64, alpha: f64) -> Result<f64> {
    let delta = delta_of_lambda(lambda, alpha)?;
    Ok((lambda - delta) / (2.0 * alpha * (lambda - 2.0) + 2.0))
}

/// The quantities shared by the path and `B_n` closed forms at one `(λ, α)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharPolyContext {
    pub lambda: f64,
    pub alpha: f64,
    pub delta: f64,
    pub h: f64,
    pub s: f64,
    pub t: f64,
}

impl CharPolyContext {
    /// Requires `α ∈ [0,1)` and `λ ≥ 2`.
    pub fn new(lambda: f64, alpha: f64) -> Result<Self> {
        check_alpha_half_open(alpha)?;
        if !(lambda >= 2.0) {
            return Err(Error::Domain(format!(
                "closed forms are evaluated only for λ ≥ 2, got {lambda}"
            )));
        }
        let delta = delta_of_lambda(lambda, alpha)?;
        let h = (lambda - delta) / (2.0 * alpha * (lambda - 2.0) + 2.0);
        Ok(CharPolyContext {
            lambda,
            alpha,
            delta,
            h,
            s: 0.5 * (lambda - 2.0 * alpha + delta),
            t: 0.5 * (lambda - 2.0 * alpha - delta),
        })
    }

    pub fn is_degenerate(&self) -> bool {
        self.delta.abs() < DEGENERATE_DELTA
    }
}

fn path_tridiagonal(order: usize, alpha: f64) -> (Vec<f64>, Vec<f64>) {
    let diag = match order {
        1 => vec![0.0],
        _ => (0..order)
            .map(|i| if i == 0 || i == order - 1 { alpha } else { 2.0 * alpha })
            .collect(),
    };
    (diag, vec![1.0 - alpha; order - 1])
}

fn bn_tridiagonal(order: usize, alpha: f64) -> (Vec<f64>, Vec<f64>) {
    let mut diag = vec![2.0 * alpha; order];
    diag[order - 1] = alpha;
    (diag, vec![1.0 - alpha; order - 1])
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        Err(Error::InvalidOrder {
            family: "path",
            min: 1,
            got: 0,
        })
    } else {
        Ok(())
    }
}

/// `φ(P_{n+1})` in closed form; `n_plus_1` is the order of the path.
pub fn path_charpoly_closed(n_plus_1: usize, alpha: f64, lambda: f64) -> Result<f64> {
    check_order(n_plus_1)?;
    let c = CharPolyContext::new(lambda, alpha)?;
    if c.is_degenerate() {
        let (d, e) = path_tridiagonal(n_plus_1, alpha);
        return tridiag_charpoly_recurrence(&d, &e, lambda);
    }
    let n = (n_plus_1 - 1) as i32;
    let a = alpha;
    Ok(((c.s + a).powi(2) * c.s.powi(n) - (c.t + a).powi(2) * c.t.powi(n)) / c.delta)
}

/// `φ(B_{n+1})` in closed form, `α ∈ (0,1)`. `B_{n+1}` is `A_α(P_{n+2})`
/// with an end vertex deleted.
pub fn bn_charpoly_closed(n_plus_1: usize, alpha: f64, lambda: f64) -> Result<f64> {
    check_order(n_plus_1)?;
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidAlpha {
            alpha,
            range: "(0, 1)",
        });
    }
    let c = CharPolyContext::new(lambda, alpha)?;
    if c.is_degenerate() {
        let (d, e) = bn_tridiagonal(n_plus_1, alpha);
        return tridiag_charpoly_recurrence(&d, &e, lambda);
    }
    let n = (n_plus_1 - 1) as i32;
    let a = alpha;
    let k = (1.0 - a).powi(2) / a;
    let bracket = (c.s + a).powi(2) * (c.s + k) * c.s.powi(n)
        - (c.t + a).powi(2) * (c.t + k) * c.t.powi(n);
    Ok(bracket * a / ((a * (lambda - 2.0) + 1.0) * c.delta))
}
