use crate::error::{check_alpha_half_open, Result};
use crate::graph::Graph;
use crate::roots::{largest_root, RootConfig};
use crate::spectral::{assemble_a_alpha, char_poly_of, h_of_lambda, DenseMatrix};

struct Polys {
    full: DenseMatrix,
    deleted: DenseMatrix,
}

impl Polys {
    fn new(g: &Graph, u: usize, alpha: f64) -> Result<Self> {
        g.check_vertex(u)?;
        check_alpha_half_open(alpha)?;
        let full = assemble_a_alpha(g, alpha)?.into_matrix();
        let deleted = full.delete(u)?;
        Ok(Polys { full, deleted })
    }

    fn eval(&self, lambda: f64) -> (f64, f64) {
        (
            char_poly_of(&self.full, lambda),
            char_poly_of(&self.deleted, lambda),
        )
    }
}

/// `Δ(G⁺)` where `G⁺` carries `extra` more edges at `u`, and never below 2.
fn scan_top(g: &Graph, u: usize, extra: usize) -> f64 {
    (g.max_degree().max(g.degree(u) + extra).max(2)) as f64
}

fn limit_or_two<F>(f: F, top: f64, cfg: &RootConfig, what: &str) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if top <= 2.0 {
        return Ok(2.0);
    }
    Ok(largest_root(f, 2.0, top, cfg, what)?
        .filter(|&r| r > 2.0)
        .unwrap_or(2.0))
}

/// `χ_u(G) = lim ρ_{A_α}(G_u(P_n))`: the largest root above 2 of
/// `(1-αh)φ(G) - (α-(2α-1)h)φ(G)_u`, or 2 when there is none.
pub fn pendant_path_limit(g: &Graph, u: usize, alpha: f64, cfg: &RootConfig) -> Result<f64> {
    let p = Polys::new(g, u, alpha)?;
    let a = alpha;
    let f = |l: f64| match h_of_lambda(l, a) {
        Ok(h) => {
            let (phi, phi_u) = p.eval(l);
            (1.0 - a * h) * phi - (a - (2.0 * a - 1.0) * h) * phi_u
        }
        Err(_) => f64::NAN,
    };
    limit_or_two(f, scan_top(g, u, 1), cfg, "χ_u(G)")
}

/// `χ'_u(G) = lim ρ_{A_α}(G_u(P_n, P_n))`: the largest root above 2 of
/// `φ(G)(1-αh) - 2αφ(G)_u + 2(2α-1)φ(G)_u h`, or 2 when there is none.
/// The omitted factor `1 - αh` is positive for `λ > 2`.
pub fn two_pendant_paths_limit(g: &Graph, u: usize, alpha: f64, cfg: &RootConfig) -> Result<f64> {
    let p = Polys::new(g, u, alpha)?;
    let a = alpha;
    let f = |l: f64| match h_of_lambda(l, a) {
        Ok(h) => {
            let (phi, phi_u) = p.eval(l);
            phi * (1.0 - a * h) - 2.0 * a * phi_u + 2.0 * (2.0 * a - 1.0) * phi_u * h
        }
        Err(_) => f64::NAN,
    };
    limit_or_two(f, scan_top(g, u, 2), cfg, "χ'_u(G)")
}
