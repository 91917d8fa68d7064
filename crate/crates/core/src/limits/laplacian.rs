use super::phi_version1;
use super::sequences::newton_polish;
use crate::error::Result;
use crate::halfpoly::HalfPoly;
use crate::roots::{bisect, bisect_expanding, RootConfig};

/// `ε = ((54-6√33)^{1/3} + (54+6√33)^{1/3}) / 3`; `2+ε` is the limit of both
/// Laplacian sequences.
pub fn guo_wang_epsilon() -> f64 {
    let r = 6.0 * 33f64.sqrt();
    ((54.0 - r).cbrt() + (54.0 + r).cbrt()) / 3.0
}

/// `f_n(x) = x^{n+1} - (1 + x + … + x^{n-1})(√x + 1)²`.
pub fn f_n_laplacian(n: usize) -> HalfPoly {
    let geometric = HalfPoly::from_half_powers((0..n).map(|k| (2 * k, 1.0)), None);
    let square = HalfPoly::new(vec![1.0, 2.0, 1.0], None);
    HalfPoly::from_half_powers([(2 * n + 2, 1.0)], None).sub(&geometric.mul(&square))
}

/// `(μ_n, κ_n)` with `μ_n` the root of `f_n` above 1 and
/// `κ_n = 2 + μ_n^{1/2} + μ_n^{-1/2}`; `μ_0 = 1`.
pub fn laplacian_guo_wang(n: usize, cfg: &RootConfig) -> Result<(f64, f64)> {
    if n == 0 {
        return Ok((1.0, 4.0));
    }
    let f = f_n_laplacian(n);
    let t = newton_polish(&f, bisect_expanding(|t| f.eval_t(t), 1.0, 2.0, cfg, "μ_n")?);
    Ok((t * t, 2.0 + t + 1.0 / t))
}

/// The polynomial whose root in `(0,1]` is `ϑ_n`:
/// `x^{n+1} + 2Σ_{k=1}^{n} x^{k+1/2} + 2Σ_{k=2}^{n} x^k + x - 1`, which is
/// `4Φ_{n,1/2}`.
pub fn phi_laplacian(n: usize) -> Result<HalfPoly> {
    Ok(phi_version1(n, 0.5)?.scale(4.0))
}

/// `(ϑ_n, ξ_n)` with `ξ_n = 2 + ϑ_n^{1/2} + ϑ_n^{-1/2}`; `ϑ_0 = 1`.
pub fn laplacian_new(n: usize, cfg: &RootConfig) -> Result<(f64, f64)> {
    if n == 0 {
        return Ok((1.0, 4.0));
    }
    let p = phi_laplacian(n)?;
    let t = newton_polish(&p, bisect(|t| p.eval_t(t), 0.0, 1.0, cfg, "ϑ_n")?);
    Ok((t * t, 2.0 + t + 1.0 / t))
}
