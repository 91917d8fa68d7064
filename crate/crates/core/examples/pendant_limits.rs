// Limits of radii as pendant paths grow at a chosen vertex, compared with
// a large finite member.

use hoffman_limits::graph::{attach_pendant_path, cycle};
use hoffman_limits::limits::{pendant_path_limit, two_pendant_paths_limit};
use hoffman_limits::roots::RootConfig;
use hoffman_limits::spectral::{alpha_radius, DEFAULT_TOL};

pub fn run_example() -> hoffman_limits::Result<()> {
    let cfg = RootConfig::default();
    let base = cycle(4)?;
    for alpha in [0.0, 0.3, 0.6] {
        let limit = pendant_path_limit(&base, 0, alpha, &cfg)?;
        let finite = alpha_radius(&attach_pendant_path(&base, 0, 40)?, alpha, DEFAULT_TOL)?;
        let both = two_pendant_paths_limit(&base, 0, alpha, &cfg)?;
        println!("alpha {alpha}: one path -> {limit:.15} (40 vertices: {finite:.15}), two paths -> {both:.15}");
    }
    Ok(())
}

fn main() -> hoffman_limits::Result<()> {
    run_example()
}
