//! Bracketing root finders.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootConfig {
    /// Bracket width at which bisection stops.
    pub tol: f64,
    pub max_iter: usize,
    /// Grid size for locating the largest sign change.
    pub scan_points: usize,
}

impl Default for RootConfig {
    fn default() -> Self {
        RootConfig {
            tol: 1e-13,
            max_iter: 200,
            scan_points: 512,
        }
    }
}

impl RootConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            return Err(Error::Domain(format!(
                "root tolerance must be positive, got {}",
                self.tol
            )));
        }
        if self.max_iter == 0 || self.scan_points == 0 {
            return Err(Error::Domain(
                "max_iter and scan_points must be at least 1".to_string(),
            ));
        }
        Ok(())
    }
}

/// Bisection on `[lo, hi]`, which must bracket a sign change (a zero at an
/// endpoint counts). Stops once the bracket is narrower than `cfg.tol` or no
/// longer splits in floating point.
pub fn bisect<F>(f: F, lo: f64, hi: f64, cfg: &RootConfig, what: &str) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    cfg.validate()?;
    let (mut lo, mut hi) = (lo.min(hi), lo.max(hi));
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.is_nan() || fhi.is_nan() || (flo > 0.0) == (fhi > 0.0) {
        return Err(Error::Bracket {
            what: what.to_string(),
            lo,
            hi,
        });
    }
    for _ in 0..cfg.max_iter {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= cfg.tol || mid <= lo || mid >= hi {
            return Ok(mid);
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    if hi - lo <= cfg.tol {
        Ok(0.5 * (lo + hi))
    } else {
        Err(Error::NoConvergence {
            what: "bisection",
            iterations: cfg.max_iter,
        })
    }
}

/// Largest root of `f` in `[lo, hi]`: walks down from `hi` over
/// `cfg.scan_points` equal steps to the first sign change, then bisects.
/// `None` if no sign change is seen.
pub fn largest_root<F>(f: F, lo: f64, hi: f64, cfg: &RootConfig, what: &str) -> Result<Option<f64>>
where
    F: Fn(f64) -> f64,
{
    cfg.validate()?;
    let step = (hi - lo) / cfg.scan_points as f64;
    let mut upper = hi;
    let mut f_upper = f(hi);
    if f_upper == 0.0 {
        return Ok(Some(hi));
    }
    for i in 1..=cfg.scan_points {
        let x = if i == cfg.scan_points {
            lo
        } else {
            hi - step * i as f64
        };
        let fx = f(x);
        if fx == 0.0 || (fx > 0.0) != (f_upper > 0.0) {
            return bisect(&f, x, upper, cfg, what).map(Some);
        }
        upper = x;
        f_upper = fx;
    }
    Ok(None)
}

/// Smallest `hi = start·2^k` with a sign change on `[lo, hi]`, then bisection.
pub fn bisect_expanding<F>(f: F, lo: f64, start: f64, cfg: &RootConfig, what: &str) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let flo = f(lo);
    let mut hi = start;
    for _ in 0..64 {
        let fhi = f(hi);
        if flo == 0.0 || fhi == 0.0 || (flo > 0.0) != (fhi > 0.0) {
            return bisect(&f, lo, hi, cfg, what);
        }
        hi *= 2.0;
    }
    Err(Error::Bracket {
        what: what.to_string(),
        lo,
        hi,
    })
}
