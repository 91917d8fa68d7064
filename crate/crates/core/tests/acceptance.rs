//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are printed whether or not a criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use hoffman_limits::convergence::{run_convergence, Family};
use hoffman_limits::graph::wheel5;
use hoffman_limits::limits::{
    beta_n, eta_classic, eta_deficit, eta_n, eta_n_version2, gamma_n, gamma_tilde_n,
    laplacian_guo_wang, laplacian_new, new_version_sequence, omega1, omega2, phi_version1,
    phi_version2, psi, psi_closed_form, psi_closed_form_parts,
};
use hoffman_limits::roots::RootConfig;
use hoffman_limits::spectral::{alpha_radius, DEFAULT_TOL};
use hoffman_limits::verify::{lemma_suite, ALPHA_PAIR, ORDER_RANGE};
use hoffman_limits::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(bool, String)>;

fn cfg() -> RootConfig {
    RootConfig::default()
}

/// `{0, 0.05, …, 0.95}`.
fn grid() -> Vec<f64> {
    (0..20).map(|i| i as f64 / 20.0).collect()
}

const EXPERIMENT_ALPHAS: [f64; 4] = [0.0, 0.25, 0.5, 0.75];

fn wheel_spot_values() -> Outcome {
    let g = wheel5();
    let third = alpha_radius(&g, 1.0 / 3.0, DEFAULT_TOL)?;
    let three_quarters = alpha_radius(&g, 0.75, DEFAULT_TOL)?;
    let e1 = (third - (11.0 + 73f64.sqrt()) / 6.0).abs();
    let e2 = (three_quarters - (23.0 + 17f64.sqrt()) / 8.0).abs();
    Ok((
        e1 < 1e-12 && e2 < 1e-12,
        format!("|err| at 1/3 = {e1:.1e}, at 3/4 = {e2:.1e}"),
    ))
}

fn psi_anchors() -> Outcome {
    let e0 = (psi(0.0, &cfg())? - (2.0 + 5f64.sqrt()).sqrt()).abs();
    let r = 6.0 * 33f64.sqrt();
    let half = 2.0 + ((54.0 - r).cbrt() + (54.0 + r).cbrt()) / 3.0;
    let e1 = (2.0 * psi(0.5, &cfg())? - half).abs();
    Ok((e0 < 1e-10 && e1 < 1e-10, format!("|err| at 0 = {e0:.1e}, at 1/2 = {e1:.1e}")))
}

fn closed_form_matches_root() -> Outcome {
    let (mut diff, mut residue) = (0f64, 0f64);
    for a in grid() {
        residue = residue.max(psi_closed_form_parts(a)?.value.im.abs());
        diff = diff.max((psi_closed_form(a)? - psi(a, &cfg())?).abs());
    }
    Ok((
        diff < 1e-8 && residue < 1e-8,
        format!("max difference {diff:.1e}, max imaginary residue {residue:.1e}"),
    ))
}

fn classical_routes() -> Outcome {
    let mut worst = 0f64;
    for n in 1..=30 {
        let eta = eta_classic(n, &cfg())?;
        let (delta, zeta) = new_version_sequence(n, &cfg())?;
        worst = worst
            .max((eta - eta_n(n, 0.0, &cfg())?).abs())
            .max((eta - zeta).abs())
            .max((delta * beta_n(n, &cfg())? - 1.0).abs());
    }
    Ok((worst < 1e-12, format!("n = 1..30, max residual {worst:.1e}")))
}

fn version_duality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let xs: Vec<f64> = (0..50).map(|_| rng.gen_range(0.001..0.999)).collect();
    let (mut eta_diff, mut recip, mut residual) = (0f64, 0f64, 0f64);
    for n in 1..=20 {
        for a in grid() {
            eta_diff = eta_diff.max((eta_n(n, a, &cfg())? - eta_n_version2(n, a, &cfg())?).abs());
            recip = recip.max((gamma_n(n, a, &cfg())? * gamma_tilde_n(n, a, &cfg())? - 1.0).abs());
            let (p, pt) = (phi_version1(n, a)?, phi_version2(n, a)?);
            for &x in &xs {
                let r = (p.eval_x(x) + x.powi(n as i32 + 1) * pt.eval_x(1.0 / x)).abs();
                residual = residual.max(r);
            }
        }
    }
    Ok((
        eta_diff < 1e-12 && recip < 1e-12 && residual < 1e-12,
        format!("eta {eta_diff:.1e}, gamma*gamma~ - 1 {recip:.1e}, duality {residual:.1e}"),
    ))
}

fn laplacian_agreement() -> Outcome {
    let mut worst = 0f64;
    for n in 0..=30 {
        let (mu, kappa) = laplacian_guo_wang(n, &cfg())?;
        let (vt, xi) = laplacian_new(n, &cfg())?;
        let twice = 2.0 * eta_n(n, 0.5, &cfg())?;
        worst = worst
            .max((xi - kappa).abs())
            .max((xi - twice).abs())
            .max((vt * mu - 1.0).abs());
    }
    let xi0 = laplacian_new(0, &cfg())?.1;
    let e0 = (xi0 - 4.0).abs();
    Ok((
        worst < 1e-11 && e0 <= 4.0 * f64::EPSILON,
        format!("n = 0..30, max residual {worst:.1e}, |xi_0 - 4| = {e0:.1e}"),
    ))
}

fn convergence_experiments() -> Outcome {
    let sizes: Vec<usize> = (1..=800).collect();
    let mut ok = true;
    let mut notes = Vec::new();
    for a in EXPERIMENT_ALPHAS {
        // (a): every row is checked for a strictly shrinking resolved gap
        let rows = run_convergence(Family::P2nn, a, &sizes, None, DEFAULT_TOL, &cfg())?;
        let bad: Vec<_> = rows.iter().filter(|r| r.violation.is_some()).collect();
        let last = rows.last().expect("800 rows");
        let far = (last.rho - psi(a, &cfg())?).abs();
        if !bad.is_empty() || far >= 1e-3 {
            ok = false;
            notes.push(format!(
                "alpha {a}: {} violations (first {:?}), |rho_800 - Psi| = {far:.1e}",
                bad.len(),
                bad.first().and_then(|r| r.violation.clone())
            ));
        }
        // (b)
        for n in 1..=5 {
            let row = &run_convergence(Family::P2mn, a, &[800], Some(n), DEFAULT_TOL, &cfg())?[0];
            let far = (row.rho - eta_n(n, a, &cfg())?).abs();
            if far >= 1e-3 {
                ok = false;
                notes.push(format!("alpha {a}, n = {n}: |rho - eta_n| = {far:.1e}"));
            }
        }
        // (c)
        let row = &run_convergence(Family::K13, a, &[800], None, DEFAULT_TOL, &cfg())?[0];
        let far = (row.rho - omega1(a)?).abs();
        if far >= 1e-3 {
            ok = false;
            notes.push(format!("alpha {a}: |rho - omega1| = {far:.1e}"));
        }
    }
    if ok {
        notes.push("m = 1..800 strictly increasing, all limits within 1e-3".to_string());
    }
    Ok((ok, notes.join("; ")))
}

fn lemma_properties() -> Outcome {
    let results = lemma_suite(2024, 200)?;
    let failures: usize = results.iter().map(|r| r.failures.len()).sum();
    let checks: usize = results.iter().map(|r| r.checks).sum();
    Ok((
        failures == 0 && results.len() == 5,
        format!(
            "200 graphs of order {}..{}, alpha pair {ALPHA_PAIR:?}: {checks} checks, {failures} violations",
            ORDER_RANGE.start(),
            ORDER_RANGE.end()
        ),
    ))
}

fn psi_omega1_max_gap() -> Outcome {
    let mut best = f64::NEG_INFINITY;
    let mut at = 0.0;
    for a in grid() {
        let d = psi(a, &cfg())? - omega1(a)?;
        if d > best {
            best = d;
            at = a;
        }
    }
    let err = (best + 0.0716).abs();
    Ok((
        err < 2e-3,
        format!("max (Psi - omega1) = {best:.5} at alpha = {at}, |err| vs -0.0716 = {err:.1e}"),
    ))
}

fn omega2_above_psi() -> Outcome {
    let mut worst = f64::INFINITY;
    for a in grid() {
        worst = worst.min(omega2(a, &cfg())? - psi(a, &cfg())?);
    }
    let e0 = (omega2(0.0, &cfg())? - (2.0 + 5f64.sqrt()).sqrt()).abs();
    Ok((
        worst >= -1e-9 && e0 < 1e-9,
        format!("min (omega2 - Psi) = {worst:.1e}, |omega2(0) - sqrt(2+sqrt5)| = {e0:.1e}"),
    ))
}

fn strict_ordering() -> Outcome {
    let mut min_gap = f64::INFINITY;
    let mut min_deficit = f64::INFINITY;
    for i in 1..=9 {
        let a = i as f64 / 10.0;
        // η_{n+1} - η_n as a difference of deficits to Ψ
        let d: Vec<f64> = (0..=30).map(|n| eta_deficit(n, a, &cfg())).collect::<Result<_>>()?;
        for w in d.windows(2) {
            min_gap = min_gap.min(w[0] - w[1]);
        }
        min_deficit = min_deficit.min(d[30]);
    }
    let e0 = (eta_n(0, 0.0, &cfg())? - 2.0).abs();
    let e1 = (eta_n(1, 0.0, &cfg())? - 2.0).abs();
    let rise = eta_n(2, 0.0, &cfg())? - eta_n(1, 0.0, &cfg())?;
    Ok((
        min_gap > 0.0 && min_deficit > 0.0 && e0 < 1e-12 && e1 < 1e-12 && rise > 0.0,
        format!(
            "min consecutive gap {min_gap:.2e}, min Psi - eta_30 {min_deficit:.2e}; alpha = 0: |eta_0 - 2| = {e0:.1e}, |eta_1 - 2| = {e1:.1e}, eta_2 - eta_1 = {rise:.2e}"
        ),
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("1  wheel spot values", wheel_spot_values),
        ("2  Psi anchors", psi_anchors),
        ("3  closed form vs root finder", closed_form_matches_root),
        ("4  classical sequence routes", classical_routes),
        ("5  version I/II equivalence", version_duality),
        ("6  Laplacian agreement", laplacian_agreement),
        ("7  convergence experiments", convergence_experiments),
        ("8  lemma property suite", lemma_properties),
        ("9a max of Psi - omega1", psi_omega1_max_gap),
        ("9b omega2 above Psi", omega2_above_psi),
        ("10 strict ordering", strict_ordering),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let (ok, detail) = match run() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        if !ok {
            failed += 1;
        }
        let status = if ok { "PASS" } else { "FAIL" };
        println!("{status} {name} ({:.2}s): {detail}", start.elapsed().as_secs_f64());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
