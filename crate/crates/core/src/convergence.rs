//! Finite members of the limiting graph sequences against their limits.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{check_alpha_half_open, Error, Result};
use crate::graph::{attach_pendant_path, p2_two_paths, path, star, Graph};
use crate::limits::{eta_n, omega1, omega2, psi};
use crate::roots::{bisect_expanding, RootConfig};
use crate::spectral::alpha_radius;

/// Largest graph order the experiments will build.
pub const MAX_ORDER: usize = 2000;

/// Gaps are compared only above this level; below it consecutive radii are
/// equal to working precision.
pub const RESOLUTION: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `P_2(P_m, P_m)` → `Ψ(α)`.
    P2nn,
    /// `P_2(P_m, P_n)`, `n` fixed → `η_n(α)`.
    P2mn,
    /// `(K_{1,3})_u(P_m)`, `u` the centre → `ω₁(α)`.
    K13,
    /// `(P_5)_u(P_m)`, `u` the middle vertex → `ω₂(α)`.
    P5u,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::P2nn => "p2nn",
            Family::P2mn => "p2mn",
            Family::K13 => "k13",
            Family::P5u => "p5u",
        }
    }

    /// The member of size `m`.
    pub fn graph(&self, m: usize, n_fixed: Option<usize>) -> Result<Graph> {
        let g = match self {
            Family::P2nn => p2_two_paths(m, m)?.0,
            Family::P2mn => p2_two_paths(m, require_n(n_fixed)?)?.0,
            Family::K13 => attach_pendant_path(&star(3)?, 0, m)?,
            Family::P5u => attach_pendant_path(&path(5)?, 2, m)?,
        };
        if g.n_vertices() > MAX_ORDER {
            return Err(Error::Domain(format!(
                "{} at size {m} has {} vertices, above the cap of {MAX_ORDER}",
                self.as_str(),
                g.n_vertices()
            )));
        }
        Ok(g)
    }

    pub fn spider(&self, n_fixed: Option<usize>) -> Result<Spider> {
        let (fixed, growing) = match self {
            Family::P2nn => (vec![1], 2),
            Family::P2mn => (vec![1, require_n(n_fixed)?], 1),
            Family::K13 => (vec![1, 1, 1], 1),
            Family::P5u => (vec![2, 2], 1),
        };
        Ok(Spider { fixed, growing })
    }

    pub fn target(&self, alpha: f64, n_fixed: Option<usize>, cfg: &RootConfig) -> Result<f64> {
        match self {
            Family::P2nn => psi(alpha, cfg),
            Family::P2mn => eta_n(require_n(n_fixed)?, alpha, cfg),
            Family::K13 => omega1(alpha),
            Family::P5u => omega2(alpha, cfg),
        }
    }
}

/// A branch vertex carrying pendant paths: `fixed` legs of the given
/// orders and `growing` legs of common order `m`. Every family above is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spider {
    pub fixed: Vec<usize>,
    pub growing: usize,
}

/// Pivot reciprocals along a pendant path, starting at its leaf:
/// `x_1 = 1/(λ-α)`, `x_k = 1/(λ - 2α - c x_{k-1})` with `c = (1-α)²`.
fn leg_pivots(len: usize, lambda: f64, alpha: f64) -> Vec<f64> {
    let c = (1.0 - alpha).powi(2);
    let mut xs = Vec::with_capacity(len);
    for k in 0..len {
        let x = if k == 0 {
            1.0 / (lambda - alpha)
        } else {
            1.0 / (lambda - 2.0 * alpha - c * xs[k - 1])
        };
        xs.push(x);
    }
    xs
}

/// The fixed point `x_∞ = 2/(s + √(s² - 4c))`, `s = λ - 2α`; real for `λ ≥ 2`.
fn leg_limit(lambda: f64, alpha: f64) -> f64 {
    let c = (1.0 - alpha).powi(2);
    let s = lambda - 2.0 * alpha;
    2.0 / (s + (s * s - 4.0 * c).max(0.0).sqrt())
}

/// `(x(λ-d) - x(λ))/d` for the finite leg, without cancellation.
fn leg_quotient(len: usize, lambda: f64, d: f64, alpha: f64) -> f64 {
    let c = (1.0 - alpha).powi(2);
    let hi = leg_pivots(len, lambda, alpha);
    let lo = leg_pivots(len, lambda - d, alpha);
    let mut q = 0.0;
    for k in 0..len {
        q = if k == 0 {
            hi[0] * lo[0]
        } else {
            (1.0 + c * q) * hi[k] * lo[k]
        };
    }
    q
}

/// `(x_∞(λ-d) - x_∞(λ))/d`, without cancellation.
fn limit_quotient(lambda: f64, d: f64, alpha: f64) -> f64 {
    let c = (1.0 - alpha).powi(2);
    let s = lambda - 2.0 * alpha;
    let (ra, rb) = ((s * s - 4.0 * c).sqrt(), ((s - d).powi(2) - 4.0 * c).sqrt());
    let (den1, den2) = (s + ra, s - d + rb);
    2.0 * (1.0 + (2.0 * s - d) / (ra + rb)) / (den1 * den2)
}

/// `ln(x_∞(λ) - x_m(λ))`, from `e_k = c e_{k-1} x_k x_∞`, so that tails
/// far below the smallest double stay representable.
fn leg_tail_ln(m: usize, lambda: f64, alpha: f64) -> f64 {
    let c = (1.0 - alpha).powi(2);
    let xs = leg_pivots(m, lambda, alpha);
    let inf = leg_limit(lambda, alpha);
    let step = (c * inf).ln();
    xs[1..].iter().fold((inf - xs[0]).ln(), |acc, x| acc + step + x.ln())
}

impl Spider {
    fn degree(&self) -> f64 {
        (self.fixed.len() + self.growing) as f64
    }

    /// Schur complement at the branch vertex once every growing leg is
    /// infinite; its largest root is the limit of the radii.
    fn limit_function(&self, lambda: f64, alpha: f64) -> f64 {
        let c = (1.0 - alpha).powi(2);
        let fixed: f64 = self
            .fixed
            .iter()
            .map(|&len| leg_pivots(len, lambda, alpha)[len - 1])
            .sum();
        lambda - alpha * self.degree() - c * (fixed + self.growing as f64 * leg_limit(lambda, alpha))
    }

    /// `(F(λ) - F(λ-d))/d` for the limit function `F`.
    fn quotient(&self, lambda: f64, d: f64, alpha: f64) -> f64 {
        let c = (1.0 - alpha).powi(2);
        let fixed: f64 = self.fixed.iter().map(|&len| leg_quotient(len, lambda, d, alpha)).sum();
        1.0 + c * (fixed + self.growing as f64 * limit_quotient(lambda, d, alpha))
    }

    /// The limit of `ρ_{A_α}` as the growing legs lengthen, when it exceeds
    /// 2; `None` otherwise.
    pub fn limit(&self, alpha: f64, cfg: &RootConfig) -> Result<Option<f64>> {
        check_alpha_half_open(alpha)?;
        if self.fixed.contains(&0) || self.growing == 0 {
            return Err(Error::Domain("spider legs must be non-empty".to_string()));
        }
        if self.limit_function(2.0, alpha) >= 0.0 {
            return Ok(None);
        }
        let f = |l: f64| self.limit_function(l, alpha);
        let mut l = bisect_expanding(f, 2.0, 3.0, cfg, "spider limit")?;
        for _ in 0..3 {
            let next = l - f(l) / self.quotient(l, 0.0, alpha);
            if !next.is_finite() || f(next).abs() >= f(l).abs() {
                break;
            }
            l = next;
        }
        Ok(Some(l))
    }

    /// `ln(limit - ρ_{A_α})` with the growing legs of order `m`, to full
    /// relative precision however small the gap. `seed` is any estimate of
    /// the gap, e.g. from an eigen-solve; it is used as is once it exceeds
    /// `1e-3`. `None` when the limit is 2 or the iteration leaves `λ > 2`.
    ///
    /// With `F` the limit function and `λ = L - d`, the radius solves
    /// `F(λ) + g c (x_∞ - x_m)(λ) = 0`. Taking `F(L) = 0` exactly leaves
    /// `d = g c (x_∞ - x_m)(L - d) / ((F(L) - F(L-d))/d)`, a contraction in `d`.
    pub fn log_gap(&self, m: usize, alpha: f64, seed: f64, cfg: &RootConfig) -> Result<Option<f64>> {
        let Some(limit) = self.limit(alpha, cfg)? else {
            return Ok(None);
        };
        if m == 0 {
            return Err(Error::Domain("growing legs must be non-empty".to_string()));
        }
        if seed > 1e-3 {
            return Ok(Some(seed.ln()));
        }
        let scale = (self.growing as f64 * (1.0 - alpha).powi(2)).ln();
        let mut ln_d = seed.max(0.0).ln();
        for _ in 0..200 {
            let d = ln_d.exp();
            let next = scale + leg_tail_ln(m, limit - d, alpha) - self.quotient(limit, d, alpha).ln();
            if !next.is_finite() || limit - next.exp() < 2.0 {
                return Ok(None);
            }
            if (next - ln_d).abs() <= 4.0 * f64::EPSILON * next.abs().max(1.0) {
                return Ok(Some(next));
            }
            ln_d = next;
        }
        Err(Error::NoConvergence {
            what: "spider gap iteration",
            iterations: 200,
        })
    }
}

fn require_n(n_fixed: Option<usize>) -> Result<usize> {
    n_fixed.ok_or_else(|| Error::Domain("p2mn needs a fixed n".to_string()))
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p2nn" => Ok(Family::P2nn),
            "p2mn" => Ok(Family::P2mn),
            "k13" => Ok(Family::K13),
            "p5u" => Ok(Family::P5u),
            _ => Err(Error::Parse {
                position: 0,
                message: format!("unknown family '{s}', expected p2nn, p2mn, k13 or p5u"),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub size: usize,
    pub order: usize,
    pub rho: f64,
    pub target: f64,
    /// `target - rho`.
    pub gap: f64,
    /// `log10` of the gap to the spider limit, resolved below double
    /// precision; `None` when the limit is 2.
    pub log10_gap: Option<f64>,
    /// Set when the row breaks monotone approach from below.
    pub violation: Option<String>,
}

/// Radii of the family at each size, with gaps to the limit. `sizes` must be
/// ascending. Strictness is judged on the resolved gap where there is one,
/// and the eigen-solve must agree with it to [`RESOLUTION`].
pub fn run_convergence(
    family: Family,
    alpha: f64,
    sizes: &[usize],
    n_fixed: Option<usize>,
    tol: f64,
    cfg: &RootConfig,
) -> Result<Vec<ConvergenceRow>> {
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("sizes must be strictly ascending".to_string()));
    }
    let target = family.target(alpha, n_fixed, cfg)?;
    let spider = family.spider(n_fixed)?;
    let limit = spider.limit(alpha, cfg)?;
    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(sizes.len());
    for &m in sizes {
        let g = family.graph(m, n_fixed)?;
        let rho = alpha_radius(&g, alpha, tol)?;
        let gap = target - rho;
        let log10_gap = match limit {
            Some(l) => spider
                .log_gap(m, alpha, l - rho, cfg)?
                .map(|x| x / std::f64::consts::LN_10),
            None => None,
        };
        let prev = rows.last();
        let violation = if gap < -RESOLUTION {
            Some(format!("radius exceeds the limit by {:e}", -gap))
        } else if let (Some(lg), Some(l)) = (log10_gap, limit) {
            let resolved = 10f64.powf(lg);
            if (l - rho - resolved).abs() > RESOLUTION {
                Some(format!("eigen-solve gap {:e} against resolved {resolved:e}", l - rho))
            } else {
                match prev.and_then(|p| p.log10_gap.map(|x| (p.size, x))) {
                    Some((size, x)) if lg >= x => Some(format!(
                        "resolved gap 10^{lg} not below 10^{x} at size {size}"
                    )),
                    _ => None,
                }
            }
        } else {
            match prev {
                Some(p) if gap > p.gap + RESOLUTION => {
                    Some(format!("gap grew from {:e} at size {}", p.gap, p.size))
                }
                _ => None,
            }
        };
        rows.push(ConvergenceRow {
            size: m,
            order: g.n_vertices(),
            rho,
            target,
            gap,
            log10_gap,
            violation,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        assert_eq!(Family::P2nn.graph(3, None).unwrap().n_vertices(), 8);
        assert_eq!(Family::P2mn.graph(4, Some(2)).unwrap().n_vertices(), 8);
        assert!(Family::P2mn.graph(4, None).is_err());
        assert_eq!(Family::K13.graph(5, None).unwrap().degree(0), 4);
        assert_eq!(Family::P5u.graph(1, None).unwrap().degree(2), 3);
        assert!(Family::P2nn.graph(1000, None).is_err());
        assert_eq!("k13".parse::<Family>().unwrap(), Family::K13);
        assert!("k14".parse::<Family>().is_err());
    }

    #[test]
    fn k13_approaches_omega1_from_below() {
        let rows = run_convergence(
            Family::K13,
            0.0,
            &[1, 2, 4, 8, 16, 100],
            None,
            1e-13,
            &RootConfig::default(),
        )
        .unwrap();
        assert!(rows.iter().all(|r| r.violation.is_none()));
        assert!(rows.last().unwrap().gap < 1e-6);
        assert!(run_convergence(Family::K13, 0.0, &[3, 2], None, 1e-13, &RootConfig::default())
            .is_err());
    }

    #[test]
    fn spider_limits_match_closed_routes() {
        let cfg = RootConfig::default();
        for alpha in [0.0, 0.3, 0.75] {
            let l = |f: Family, n| f.spider(n).unwrap().limit(alpha, &cfg).unwrap().unwrap();
            assert!((l(Family::P2nn, None) - crate::limits::psi_via_limit_theta(alpha, &cfg).unwrap()).abs() < 1e-13);
            assert!((l(Family::K13, None) - omega1(alpha).unwrap()).abs() < 1e-13);
            assert!((l(Family::P5u, None) - omega2(alpha, &cfg).unwrap()).abs() < 1e-12);
            assert!((l(Family::P2mn, Some(3)) - eta_n(3, alpha, &cfg).unwrap()).abs() < 1e-12);
        }
        // η_1(0) = 2
        assert_eq!(Family::P2mn.spider(Some(1)).unwrap().limit(0.0, &cfg).unwrap(), None);
    }

    // limit - ρ from 80-digit eigenvalues, and log10 of it from 250 to 950
    // digit inertia bisection
    const GAPS: [(Family, Option<usize>, f64, usize, f64); 6] = [
        (Family::P2nn, None, 0.0, 20, 8.8837349167764176e-6),
        (Family::P2nn, None, 0.0, 40, 5.8686786308146156e-10),
        (Family::P2nn, None, 0.5, 30, 4.8311216293826628e-17),
        (Family::K13, None, 0.25, 30, 1.5786603246611096e-16),
        (Family::P5u, None, 0.75, 25, 1.1143655759028454e-28),
        (Family::P2mn, Some(3), 0.1, 30, 4.5249358780297706e-8),
    ];
    const DEEP: [(Family, f64, usize, f64); 3] = [
        (Family::P2nn, 0.0, 800, -168.06206630277594),
        (Family::P5u, 0.75, 300, -330.14650385545233),
        (Family::P2nn, 0.75, 800, -858.53622490571625),
    ];

    #[test]
    fn resolved_gaps_match_high_precision() {
        let cfg = RootConfig::default();
        for (family, n, alpha, m, expected) in GAPS {
            let rows = run_convergence(family, alpha, &[m], n, 1e-15, &cfg).unwrap();
            let got = 10f64.powf(rows[0].log10_gap.unwrap());
            assert!(((got - expected) / expected).abs() < 1e-9, "{family} {alpha} {m}: {got:e}");
            assert!(rows[0].violation.is_none());
        }
        for (family, alpha, m, expected) in DEEP {
            let rows = run_convergence(family, alpha, &[m], None, 1e-15, &cfg).unwrap();
            let got = rows[0].log10_gap.unwrap();
            assert!((got - expected).abs() < 1e-9, "{family} {alpha} {m}: {got}");
        }
    }
}
