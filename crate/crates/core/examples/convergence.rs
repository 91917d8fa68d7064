// Radii of `P_2(P_m, P_m)` climbing to `Ψ(α)`. Past a few dozen vertices
// the gap drops below double precision, so it is also reported through
// the resolved logarithm.

use hoffman_limits::convergence::{run_convergence, Family};
use hoffman_limits::roots::RootConfig;
use hoffman_limits::spectral::DEFAULT_TOL;

pub fn run_example() -> hoffman_limits::Result<()> {
    let cfg = RootConfig::default();
    let sizes = [5, 10, 20, 40, 100, 400, 800];
    for family in [Family::P2nn, Family::K13] {
        for alpha in [0.0, 0.5] {
            println!("{family} at alpha = {alpha}");
            for r in run_convergence(family, alpha, &sizes, None, DEFAULT_TOL, &cfg)? {
                let log = r.log10_gap.map_or("-".to_string(), |x| format!("{x:.4}"));
                println!("  m = {:>3}  order {:>4}  rho {:.15}  gap {:>9.2e}  log10 gap {log}", r.size, r.order, r.rho, r.gap);
            }
        }
    }
    Ok(())
}

fn main() -> hoffman_limits::Result<()> {
    run_example()
}
