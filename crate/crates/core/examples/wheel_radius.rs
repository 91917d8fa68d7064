// Spectral radius of the wheel on five vertices across `α`, against its
// degree bounds and the two exact values.

use hoffman_limits::graph::wheel5;
use hoffman_limits::spectral::{alpha_radius, assemble_a_alpha, full_spectrum, radius_bounds, DEFAULT_TOL};

pub fn run_example() -> hoffman_limits::Result<()> {
    let g = wheel5();
    println!("{:>6} {:>18} {:>18} {:>4}", "alpha", "rho", "lower", "max deg");
    for i in 0..=10 {
        let alpha = i as f64 / 10.0;
        let rho = alpha_radius(&g, alpha, DEFAULT_TOL)?;
        let (lo, hi) = radius_bounds(&g, alpha);
        println!("{alpha:>6.2} {rho:>18.15} {lo:>18.15} {hi:>4}");
    }
    let spectrum = full_spectrum(assemble_a_alpha(&g, 1.0 / 3.0)?.matrix(), DEFAULT_TOL)?;
    println!("spectrum at 1/3: {:?}", spectrum.eigenvalues.unwrap_or_default());
    println!("(11+sqrt 73)/6 = {:.15}", (11.0 + 73f64.sqrt()) / 6.0);
    println!("(23+sqrt 17)/8 = {:.15}", (23.0 + 17f64.sqrt()) / 8.0);
    Ok(())
}

fn main() -> hoffman_limits::Result<()> {
    run_example()
}
