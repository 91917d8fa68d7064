use std::str::FromStr;

use serde::Serialize;

use super::{difference_poly, psi_via_limit_theta, theta_substitution};
use crate::error::{check_alpha_half_open, Error, Result};
use crate::halfpoly::HalfPoly;
use crate::roots::{bisect, bisect_expanding, RootConfig};

const NEWTON_STEPS: usize = 60;

/// Below this `d_n = θ_n - θ_∞` the plain root is too coarse to seed Newton.
const PLAIN_SEED_FLOOR: f64 = 1e-8;

fn check_n(n: usize, what: &'static str) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidOrder {
            family: what,
            min: 1,
            got: 0,
        })
    } else {
        Ok(())
    }
}

/// `φ_n(x) = x^{n+1} - (1 + x + … + x^{n-1})`.
pub fn phi_hoffman(n: usize) -> Result<HalfPoly> {
    check_n(n, "classical sequence")?;
    let terms = std::iter::once((2 * n + 2, 1.0)).chain((0..n).map(|k| (2 * k, -1.0)));
    Ok(HalfPoly::from_half_powers(terms, None))
}

/// The positive root `β_n ∈ [1, 2)` of `φ_n`.
pub fn beta_n(n: usize, cfg: &RootConfig) -> Result<f64> {
    let p = phi_hoffman(n)?;
    bisect(|x| p.eval_x(x), 1.0, 2.0, cfg, "β_n")
}

/// `β_n^{1/2} + β_n^{-1/2}`.
pub fn eta_classic(n: usize, cfg: &RootConfig) -> Result<f64> {
    let b = beta_n(n, cfg)?.sqrt();
    Ok(b + 1.0 / b)
}

/// `Φ_{n,α}`, the version I polynomial.
pub fn phi_version1(n: usize, alpha: f64) -> Result<HalfPoly> {
    check_n(n, "version I")?;
    check_alpha_half_open(alpha)?;
    let a = alpha;
    let b2 = (1.0 - a) * (1.0 - a);
    let c = 1.0 - 2.0 * a + 2.0 * a * a;
    let mut coeffs = vec![0.0; 2 * n + 3];
    coeffs[2 * n + 2] = b2;
    for k in 1..=n {
        coeffs[2 * k + 1] += 2.0 * a * (1.0 - a);
    }
    for k in 2..=n {
        coeffs[2 * k] += c;
    }
    coeffs[2] += a * a;
    coeffs[0] = -b2;
    Ok(HalfPoly::new(coeffs, Some(alpha)))
}

/// `Φ̃_{n,α}`, the version II polynomial; `Φ(x) = -x^{n+1} Φ̃(1/x)`.
pub fn phi_version2(n: usize, alpha: f64) -> Result<HalfPoly> {
    check_n(n, "version II")?;
    check_alpha_half_open(alpha)?;
    let a = alpha;
    let b2 = (1.0 - a) * (1.0 - a);
    let c = 1.0 - 2.0 * a + 2.0 * a * a;
    let mut coeffs = vec![0.0; 2 * n + 3];
    coeffs[2 * n + 2] = b2;
    coeffs[2 * n] -= a * a;
    for j in 0..n {
        coeffs[2 * j + 1] -= 2.0 * a * (1.0 - a);
    }
    for i in 1..n {
        coeffs[2 * i] -= c;
    }
    coeffs[0] -= b2;
    Ok(HalfPoly::new(coeffs, Some(alpha)))
}

/// `√γ_n(α)`, the root of `Φ_{n,α}` in `t ∈ (0,1]`; 1 for `n = 0`.
fn theta_n(n: usize, alpha: f64, cfg: &RootConfig) -> Result<f64> {
    check_alpha_half_open(alpha)?;
    if n == 0 {
        return Ok(1.0);
    }
    let p = phi_version1(n, alpha)?;
    let t = bisect(|t| p.eval_t(t), 0.0, 1.0, cfg, "γ_n")?;
    Ok(newton_polish(&p, t))
}

/// `γ_n(α) ∈ (0,1]`; `γ_0 = 1`.
pub fn gamma_n(n: usize, alpha: f64, cfg: &RootConfig) -> Result<f64> {
    Ok(theta_n(n, alpha, cfg)?.powi(2))
}

/// `γ̃_n(α) ≥ 1`, the root of `Φ̃_{n,α}` above 1; `γ̃_0 = 1`.
pub fn gamma_tilde_n(n: usize, alpha: f64, cfg: &RootConfig) -> Result<f64> {
    check_alpha_half_open(alpha)?;
    if n == 0 {
        return Ok(1.0);
    }
    let p = phi_version2(n, alpha)?;
    let t = bisect_expanding(|t| p.eval_t(t), 1.0, 2.0, cfg, "γ̃_n")?;
    Ok(newton_polish(&p, t).powi(2))
}

/// `η_n(α) = 2α + (1-α)(γ_n^{1/2} + γ_n^{-1/2})`.
pub fn eta_n(n: usize, alpha: f64, cfg: &RootConfig) -> Result<f64> {
    theta_substitution(theta_n(n, alpha, cfg)?, alpha)
}

/// `η_n(α)` through `γ̃_n`.
pub fn eta_n_version2(n: usize, alpha: f64, cfg: &RootConfig) -> Result<f64> {
    theta_substitution(gamma_tilde_n(n, alpha, cfg)?.sqrt(), alpha)
}

/// `(δ_n, ζ_n)`: the `α = 0` specialisation of version I.
pub fn new_version_sequence(n: usize, cfg: &RootConfig) -> Result<(f64, f64)> {
    check_n(n, "new version")?;
    Ok((gamma_n(n, 0.0, cfg)?, eta_n(n, 0.0, cfg)?))
}

/// `θ_∞ ∈ (0,1)`, the root of `f(t², α)`; `Ψ(α) = 2α + (1-α)(θ_∞ + 1/θ_∞)`.
pub fn limit_theta(alpha: f64, cfg: &RootConfig) -> Result<f64> {
    check_alpha_half_open(alpha)?;
    let f = difference_poly(alpha);
    let t = bisect(|t| f.eval_t(t), 0.0, 1.0, cfg, "θ_∞")?;
    Ok(newton_polish(&f, t))
}

/// Up to three Newton steps, each kept only if it shrinks `|p|`.
pub(super) fn newton_polish(p: &HalfPoly, mut t: f64) -> f64 {
    let dp = p.derivative();
    let mut value = p.eval_t(t).abs();
    for _ in 0..3 {
        let next = t - p.eval_t(t) / dp.eval_t(t);
        if !next.is_finite() || p.eval_t(next).abs() >= value {
            break;
        }
        t = next;
        value = p.eval_t(t).abs();
    }
    t
}

/// `Ψ(α) - η_n(α)`, accurate to a few ulps of the result even when it is far
/// below the resolution of `η_n` itself.
///
/// With `t = √x`, `Φ_{n+1} - xΦ_n = f` gives
/// `(1-x)Φ_n = x^{n-1}G + f` where `G = (1-x)Φ_1 - f`. Writing
/// `θ_n = θ_∞ + d` and expanding `f` about its root `θ_∞` yields an equation
/// for `d` alone whose constant term vanishes, so `d` is found with full
/// relative precision by Newton's method.
pub fn eta_deficit(n: usize, alpha: f64, cfg: &RootConfig) -> Result<f64> {
    let t_inf = limit_theta(alpha, cfg)?;
    let scale = 1.0 - alpha;
    if n == 0 {
        return Ok(scale * (1.0 - t_inf).powi(2) / t_inf);
    }
    let f = difference_poly(alpha);
    let phi1 = phi_version1(1, alpha)?;
    let g = HalfPoly::new(vec![1.0, 0.0, -1.0], Some(alpha))
        .mul(&phi1)
        .sub(&f);
    let dg = g.derivative();
    let mut fhat = f.taylor_shift(t_inf).coeffs().to_vec();
    fhat[0] = 0.0;
    let fhat = HalfPoly::new(fhat, Some(alpha));
    let dfhat = fhat.derivative();
    let k = (2 * n - 2) as i32;

    let residual = |d: f64| {
        let t = t_inf + d;
        fhat.eval_t(d) + t.powi(k) * g.eval_t(t)
    };
    let slope = |d: f64| {
        let t = t_inf + d;
        let tk = t.powi(k);
        let dtk = if k == 0 { 0.0 } else { k as f64 * t.powi(k - 1) };
        dfhat.eval_t(d) + dtk * g.eval_t(t) + tk * dg.eval_t(t)
    };

    let plain = theta_n(n, alpha, cfg)? - t_inf;
    let mut d = if plain >= PLAIN_SEED_FLOOR {
        plain
    } else {
        -t_inf.powi(k) * g.eval_t(t_inf) / dfhat.eval_t(0.0)
    };
    for _ in 0..NEWTON_STEPS {
        let step = residual(d) / slope(d);
        if !step.is_finite() {
            // n = 1, α = 0 puts a double root at t = 1, where the seed is exact
            break;
        }
        d -= step;
        if step.abs() <= 4.0 * f64::EPSILON * d.abs() {
            break;
        }
    }
    if !(d > 0.0) {
        return Err(Error::NoConvergence {
            what: "deficit Newton iteration",
            iterations: NEWTON_STEPS,
        });
    }
    let theta = t_inf + d;
    Ok(scale * d * (1.0 / (theta * t_inf) - 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum FormulaTag {
    Classic,
    VersionI,
    VersionII,
    New,
    Laplacian,
}

impl FormulaTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            FormulaTag::Classic => "classic",
            FormulaTag::VersionI => "versionI",
            FormulaTag::VersionII => "versionII",
            FormulaTag::New => "new",
            FormulaTag::Laplacian => "laplacian",
        }
    }
}

/// One sequence term. `gamma` holds `β_n`, `γ_n`, `γ̃_n`, `δ_n` or `ϑ_n`
/// according to the tag; `eta` the corresponding limit point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitRow {
    pub n: usize,
    pub alpha: f64,
    pub gamma: f64,
    pub eta: f64,
    /// `limit - eta`, computed without cancellation where available.
    pub deficit: f64,
    pub tag: FormulaTag,
}

/// Terms of one sequence for one `α`, with the limit they approach.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitTable {
    pub tag: FormulaTag,
    pub alpha: f64,
    pub rows: Vec<LimitRow>,
    pub limit: f64,
}

impl FromStr for FormulaTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classic" => Ok(FormulaTag::Classic),
            "versionI" => Ok(FormulaTag::VersionI),
            "versionII" => Ok(FormulaTag::VersionII),
            "new" => Ok(FormulaTag::New),
            "laplacian" => Ok(FormulaTag::Laplacian),
            _ => Err(Error::Parse {
                position: 0,
                message: format!(
                    "unknown table '{s}', expected classic, versionI, versionII, new or laplacian"
                ),
            }),
        }
    }
}

impl FormulaTag {
    /// The `α` the sequence is evaluated at: 0 for the classic and new
    /// sequences, 1/2 for the Laplacian one, `alpha` otherwise.
    pub fn effective_alpha(&self, alpha: f64) -> f64 {
        match self {
            FormulaTag::Classic | FormulaTag::New => 0.0,
            FormulaTag::Laplacian => 0.5,
            FormulaTag::VersionI | FormulaTag::VersionII => alpha,
        }
    }

    /// Smallest index of the sequence.
    pub fn first_index(&self) -> usize {
        match self {
            FormulaTag::Classic | FormulaTag::New => 1,
            _ => 0,
        }
    }

    /// Term `n` at the effective `α`.
    pub fn term(&self, n: usize, alpha: f64, cfg: &RootConfig) -> Result<LimitRow> {
        let alpha = self.effective_alpha(alpha);
        check_alpha_half_open(alpha)?;
        let (gamma, eta) = match self {
            FormulaTag::Classic => (beta_n(n, cfg)?, eta_classic(n, cfg)?),
            FormulaTag::New => new_version_sequence(n, cfg)?,
            FormulaTag::VersionI => (gamma_n(n, alpha, cfg)?, eta_n(n, alpha, cfg)?),
            FormulaTag::VersionII => (gamma_tilde_n(n, alpha, cfg)?, eta_n_version2(n, alpha, cfg)?),
            FormulaTag::Laplacian => super::laplacian_new(n, cfg)?,
        };
        let mut deficit = eta_deficit(n, alpha, cfg)?;
        if *self == FormulaTag::Laplacian {
            deficit *= 2.0;
        }
        Ok(LimitRow {
            n,
            alpha,
            gamma,
            eta,
            deficit,
            tag: *self,
        })
    }

    /// The limit of the sequence: `Ψ(α)`, or `2Ψ(1/2) = 2 + ε` for the
    /// Laplacian one. Taken through `θ_∞`, the same route as the terms.
    pub fn limit(&self, alpha: f64, cfg: &RootConfig) -> Result<f64> {
        let alpha = self.effective_alpha(alpha);
        check_alpha_half_open(alpha)?;
        let value = psi_via_limit_theta(alpha, cfg)?;
        Ok(if *self == FormulaTag::Laplacian { 2.0 * value } else { value })
    }
}

impl LimitTable {
    /// Builds rows from [`FormulaTag::first_index`] to `n_max`.
    pub fn build(tag: FormulaTag, n_max: usize, alpha: f64, cfg: &RootConfig) -> Result<Self> {
        let limit = tag.limit(alpha, cfg)?;
        let rows = (tag.first_index()..=n_max)
            .map(|n| tag.term(n, alpha, cfg))
            .collect::<Result<Vec<_>>>()?;
        Ok(LimitTable {
            tag,
            alpha: tag.effective_alpha(alpha),
            rows,
            limit,
        })
    }
}
