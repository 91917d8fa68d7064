use num_complex::Complex64;

use super::{limit_theta, theta_substitution};
use crate::error::{check_alpha_closed, check_alpha_half_open, Error, Result};
use crate::roots::{largest_root, RootConfig};
use crate::spectral::h_of_lambda;

/// Upper end of the descending scans for `Ψ` and `ω₂`.
const SCAN_TOP: f64 = 3.5;

/// Largest admissible imaginary part left by the closed forms.
pub const BRANCH_RESIDUE_TOL: f64 = 1e-8;

/// Second factor of the limit equation for `P_2(P_n, P_n)`:
/// `(1-αh)λ² + 2((α²+2α-1)h - 2α)λ - (6α²-3α)h + 2α²+2α-1`.
pub fn psi_equation(lambda: f64, alpha: f64) -> Result<f64> {
    let a = alpha;
    let h = h_of_lambda(lambda, a)?;
    Ok((1.0 - a * h) * lambda * lambda + 2.0 * ((a * a + 2.0 * a - 1.0) * h - 2.0 * a) * lambda
        - (6.0 * a * a - 3.0 * a) * h
        + 2.0 * a * a
        + 2.0 * a
        - 1.0)
}

fn largest_root_above_two<F>(f: F, cfg: &RootConfig, what: &str) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    // λ ∈ [2, 3.5] keeps Δ real for every α ∈ [0,1)
    let g = |l: f64| f(l).unwrap_or(f64::NAN);
    largest_root(g, 2.0, SCAN_TOP, cfg, what)?.ok_or_else(|| Error::Bracket {
        what: what.to_string(),
        lo: 2.0,
        hi: SCAN_TOP,
    })
}

/// `Ψ(α) = lim ρ_{A_α}(P_2(P_n, P_n))`; `Ψ(1) = 3`.
pub fn psi(alpha: f64, cfg: &RootConfig) -> Result<f64> {
    check_alpha_closed(alpha)?;
    if alpha == 1.0 {
        return Ok(3.0);
    }
    largest_root_above_two(|l| psi_equation(l, alpha), cfg, "Ψ(α)")
}

/// `Ψ(α)` from the root `θ_∞` of the difference polynomial.
pub fn psi_via_limit_theta(alpha: f64, cfg: &RootConfig) -> Result<f64> {
    theta_substitution(limit_theta(alpha, cfg)?, alpha)
}

/// Intermediate values of the closed form for `Ψ(α)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsiClosedForm {
    pub g0: f64,
    pub g1: f64,
    pub g2: f64,
    pub g3: f64,
    pub g4: Complex64,
    pub g5: Complex64,
    pub value: Complex64,
}

/// Real number as a complex with imaginary part `+0`, so that principal
/// roots of negative reals land on the upper half plane.
fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Evaluates the closed form on principal branches of every fractional
/// power.
pub fn psi_closed_form_parts(alpha: f64) -> Result<PsiClosedForm> {
    check_alpha_half_open(alpha)?;
    let a = alpha;
    let g0 = 11.0 * a * a - 16.0 * a + 8.0;
    let g1 = (a - 1.0).powi(2) * (2.0 * a * a + 2.0 * a - 1.0);
    let g2 = 27f64.sqrt() * a * (7.0 * a * a - 12.0 * a + 6.0);
    let g3 = ((((((11.0 * a - 86.0) * a + 275.0) * a - 432.0) * a + 358.0) * a - 150.0) * a)
        + 25.0;
    let inner = re((a - 1.0) * (17.0 * a * a - 52.0 * a + 26.0)) - re(27.0 * g3).sqrt();
    let g4 = (1.0 - a) * inner.cbrt();
    let g5 = g0 - 2.0 * (g1 / g4 - g4);
    let value = 1.5 * a
        + (g0 + g1 / g4 + g2 / g5.sqrt() - g4).sqrt() / 6f64.sqrt()
        + (g5 / 12.0).sqrt();
    Ok(PsiClosedForm {
        g0,
        g1,
        g2,
        g3,
        g4,
        g5,
        value,
    })
}

/// Real part of the closed form, after checking the imaginary residue.
pub fn psi_closed_form(alpha: f64) -> Result<f64> {
    let v = psi_closed_form_parts(alpha)?.value;
    if v.im.abs() > BRANCH_RESIDUE_TOL {
        return Err(Error::BranchSelection {
            what: "Ψ(α) closed form",
            residue: v.im.abs(),
        });
    }
    Ok(v.re)
}

/// `lim ρ((K_{1,3})_u(P_n)) = (5α + 3√(2-4α+3α²))/2`, `u` the centre.
pub fn omega1(alpha: f64) -> Result<f64> {
    check_alpha_half_open(alpha)?;
    Ok(0.5 * (5.0 * alpha + 3.0 * (2.0 - 4.0 * alpha + 3.0 * alpha * alpha).sqrt()))
}

/// `(1-αh)φ(P_5) - (α-(2α-1)h)φ(P_5)_u` with `u` the middle vertex, using
/// the factored forms of both polynomials.
pub fn omega2_equation(lambda: f64, alpha: f64) -> Result<f64> {
    let a = alpha;
    let l = lambda;
    let h = h_of_lambda(l, a)?;
    let q = l * l - 3.0 * a * l + a * a + 2.0 * a - 1.0;
    let cubic = l * l * l - 5.0 * a * l * l + (5.0 * a * a + 6.0 * a - 3.0) * l - 8.0 * a * a
        + 4.0 * a;
    Ok((1.0 - a * h) * q * cubic - (a - (2.0 * a - 1.0) * h) * q * q)
}

/// `ω₂(α) = lim ρ((P_5)_u(P_n))`, `u` the middle vertex.
pub fn omega2(alpha: f64, cfg: &RootConfig) -> Result<f64> {
    check_alpha_half_open(alpha)?;
    largest_root_above_two(|l| omega2_equation(l, alpha), cfg, "ω₂(α)")
}

/// `ω₂(α)` through the radical expression in `h₁ … h₇`.
pub fn omega2_closed_form(alpha: f64) -> Result<f64> {
    check_alpha_half_open(alpha)?;
    let a = alpha;
    let poly = |coeffs: &[f64]| coeffs.iter().rev().fold(0.0, |acc, &c| acc * a + c);
    let h1 = 4.0 - 8.0 * a - 3.0 * a * a;
    let h2 = 19.0 * a * a + 8.0 * a - 4.0;
    let h3 = poly(&[4.0, -16.0, 32.0, -32.0, 13.0]);
    let outer = poly(&[-416.0, 2496.0, -6300.0, 8560.0, -6624.0, 2784.0, -502.0]);
    let radicand = poly(&[
        172800.0,
        -2073600.0,
        11453184.0,
        -38499840.0,
        87733584.0,
        -142826112.0,
        170398080.0,
        -150197760.0,
        97143840.0,
        -44993664.0,
        14176512.0,
        -2730240.0,
        243216.0,
    ]);
    let h4 = (re(outer) - re(radicand).sqrt()).cbrt();
    let cbrt2 = 2f64.cbrt();
    let h5 = (h2 + cbrt2 * h3 / h4 + h4 / cbrt2) / 3.0;
    let h6 = 512.0 * a.powi(3) - 32.0 * a * h2 + 112.0 * (-a + 2.0 * a * a + a.powi(3));
    let h7 = 13.0 * a * a - 8.0 * a + 4.0;
    let root15 = (h1 + h5).sqrt();
    let v = 2.0 * a + 0.5 * root15 + 0.5 * (h7 - h5 + h6 / (4.0 * root15)).sqrt();
    if v.im.abs() > BRANCH_RESIDUE_TOL {
        return Err(Error::BranchSelection {
            what: "ω₂(α) closed form",
            residue: v.im.abs(),
        });
    }
    Ok(v.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> RootConfig {
        RootConfig::default()
    }

    const PSI_REF: [(f64, f64); 8] = [
        (0.0, 2.0581710272714922503),
        (0.05, 2.064197783615145),
        (0.1, 2.071110741652816854),
        (0.25, 2.0991056487327290862),
        (0.5, 2.1914878839531187471),
        (0.75, 2.4325233242764165807),
        (0.9, 2.7272974506226468768),
        (0.95, 2.856552730925307),
    ];

    #[test]
    fn psi_matches_reference() {
        for (alpha, expected) in PSI_REF {
            let r = psi(alpha, &cfg()).unwrap();
            assert!((r - expected).abs() < 1e-11, "Ψ({alpha}) = {r}");
            let t = psi_via_limit_theta(alpha, &cfg()).unwrap();
            assert!((t - expected).abs() < 1e-12, "θ-route Ψ({alpha}) = {t}");
        }
        assert_eq!(psi(1.0, &cfg()).unwrap(), 3.0);
        assert!(psi(1.2, &cfg()).is_err());
    }

    #[test]
    fn closed_form_at_zero() {
        let p = psi_closed_form_parts(0.0).unwrap();
        let s3 = 3f64.sqrt();
        assert!((p.g4.re - (1.0 + s3 / 2.0)).abs() < 1e-13);
        assert!((p.g4.im - (s3 + 1.5)).abs() < 1e-13);
        assert!((p.g5 - Complex64::new(12.0, 6.0)).norm() < 1e-12);
        let exact = (2.0 + 5f64.sqrt()).sqrt();
        assert!((psi_closed_form(0.0).unwrap() - exact).abs() < 1e-13);
    }

    #[test]
    fn closed_form_matches_reference() {
        for (alpha, expected) in PSI_REF {
            let v = psi_closed_form_parts(alpha).unwrap().value;
            assert!(v.im.abs() < 1e-10, "residue at {alpha}: {}", v.im);
            assert!((v.re - expected).abs() < 1e-10, "closed Ψ({alpha}) = {}", v.re);
        }
    }

    #[test]
    fn omega_values() {
        assert!((omega1(0.0).unwrap() - 1.5 * 2f64.sqrt()).abs() < 1e-15);
        assert!((omega1(0.5).unwrap() - 2.549038105676658).abs() < 1e-14);
        let reference = [
            (0.05, 2.066954293015686),
            (0.1, 2.076851297217673),
            (0.25, 2.114923897926472),
            (0.5, 2.223176019579405),
            (0.75, 2.456446140619792),
            (0.9, 2.732426665479609),
            (0.95, 2.857844384088131),
        ];
        for (alpha, expected) in reference {
            let r = omega2(alpha, &cfg()).unwrap();
            assert!((r - expected).abs() < 1e-11, "ω₂({alpha}) = {r}");
            let c = omega2_closed_form(alpha).unwrap();
            assert!((c - r).abs() < 1e-7, "closed ω₂({alpha}) = {c} vs {r}");
        }
        let exact = (2.0 + 5f64.sqrt()).sqrt();
        assert!((omega2(0.0, &cfg()).unwrap() - exact).abs() < 1e-11);
    }
}
