// Both Laplacian sequences rising to `2 + ε`, and their reciprocal roots.

use hoffman_limits::limits::{guo_wang_epsilon, laplacian_guo_wang, laplacian_new};
use hoffman_limits::roots::RootConfig;

pub fn run_example() -> hoffman_limits::Result<()> {
    let cfg = RootConfig::default();
    let limit = 2.0 + guo_wang_epsilon();
    println!("2 + epsilon = {limit:.15}");
    for n in [0, 1, 2, 3, 5, 10, 20, 30] {
        let (mu, kappa) = laplacian_guo_wang(n, &cfg)?;
        let (theta, xi) = laplacian_new(n, &cfg)?;
        println!("n = {n:>2}  kappa {kappa:.15}  xi {xi:.15}  mu*theta {:.15}", mu * theta);
    }
    Ok(())
}

fn main() -> hoffman_limits::Result<()> {
    run_example()
}
