//! Limit points of `A_α`-spectral radii.
//!
//! * [`sequences`]: the classical sequence `η_n`, its two `α`-generalisations
//!   and the new version `ζ_n`, plus the accurate deficit `Ψ(α) - η_n(α)`.
//! * [`psi`]: `Ψ(α)` by root finding and in closed form, and the constants
//!   `ω₁(α)`, `ω₂(α)`.
//! * [`pendant`]: limits of `ρ(G_u(P_n))` and `ρ(G_u(P_n, P_n))`.
//! * [`laplacian`]: the `(signless) Laplacian` limit points.

pub mod laplacian;
pub mod pendant;
pub mod psi;
pub mod sequences;

use crate::error::{check_alpha_half_open, Error, Result};
use crate::halfpoly::HalfPoly;

pub use laplacian::{guo_wang_epsilon, laplacian_guo_wang, laplacian_new, phi_laplacian, f_n_laplacian};
pub use pendant::{pendant_path_limit, two_pendant_paths_limit};
pub use psi::{
    omega1, omega2, omega2_closed_form, omega2_equation, psi, psi_closed_form,
    psi_closed_form_parts, psi_equation, psi_via_limit_theta, PsiClosedForm,
};
pub use sequences::{
    beta_n, eta_classic, eta_deficit, eta_n, eta_n_version2, gamma_n, gamma_tilde_n,
    limit_theta, new_version_sequence, phi_hoffman, phi_version1, phi_version2, FormulaTag,
    LimitRow, LimitTable,
};

/// `λ = (1-α)(θ + 1/θ) + 2α`.
pub fn theta_substitution(theta: f64, alpha: f64) -> Result<f64> {
    if !(theta > 0.0) {
        return Err(Error::Domain(format!("θ must be positive, got {theta}")));
    }
    Ok((1.0 - alpha) * (theta + 1.0 / theta) + 2.0 * alpha)
}

/// The `θ ∈ (0,1)` with `theta_substitution(θ, α) = λ`, for `λ > 2`.
pub fn theta_from_lambda(lambda: f64, alpha: f64) -> Result<f64> {
    check_alpha_half_open(alpha)?;
    if !(lambda > 2.0) {
        return Err(Error::Domain(format!(
            "λ = {lambda} has no θ in (0,1); need λ > 2"
        )));
    }
    let s = (lambda - 2.0 * alpha) / (1.0 - alpha);
    // smaller root of θ² - sθ + 1, written to avoid cancellation
    Ok(2.0 / (s + (s * s - 4.0).sqrt()))
}

/// `f(x,α) = (x²-2x^{3/2}+2x-1)α² + 2(1-x+x^{3/2}-x²)α + x²+x-1` in `t = √x`.
pub fn difference_poly(alpha: f64) -> HalfPoly {
    let a = alpha;
    let a2 = a * a;
    HalfPoly::new(
        vec![
            -a2 + 2.0 * a - 1.0,
            0.0,
            2.0 * a2 - 2.0 * a + 1.0,
            -2.0 * a2 + 2.0 * a,
            a2 - 2.0 * a + 1.0,
        ],
        Some(alpha),
    )
}

/// `f(x,α)` evaluated at `x ≥ 0`.
pub fn difference_poly_f(x: f64, alpha: f64) -> f64 {
    difference_poly(alpha).eval_x(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitution_round_trip() {
        for alpha in [0.0, 0.4, 0.9] {
            assert_eq!(theta_substitution(1.0, alpha).unwrap(), 2.0);
            for theta in [0.01, 0.3, 0.77] {
                let l = theta_substitution(theta, alpha).unwrap();
                let l_inv = theta_substitution(1.0 / theta, alpha).unwrap();
                assert!((l - l_inv).abs() < 1e-12 * l);
                let back = theta_from_lambda(l, alpha).unwrap();
                assert!((back - theta).abs() < 1e-13);
            }
        }
        assert!(theta_substitution(0.0, 0.2).is_err());
        assert!(theta_from_lambda(2.0, 0.2).is_err());
    }

    #[test]
    fn difference_poly_literal() {
        assert_eq!(difference_poly_f(1.0, 0.0), 1.0);
        for alpha in [0.0f64, 0.25, 0.8] {
            for x in [0.0f64, 0.3, 0.9, 1.7] {
                let a = alpha;
                let lit = (x * x - 2.0 * x.powf(1.5) + 2.0 * x - 1.0) * a * a
                    + 2.0 * (1.0 - x + x.powf(1.5) - x * x) * a
                    + x * x
                    + x
                    - 1.0;
                assert!((difference_poly_f(x, a) - lit).abs() < 1e-14);
            }
        }
    }
}
