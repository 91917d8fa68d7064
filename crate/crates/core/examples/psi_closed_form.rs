// `Ψ(α)` by root finding and by radicals, with the two comparison limits
// `ω₁` and `ω₂`.

use hoffman_limits::limits::{omega1, omega2, psi, psi_closed_form_parts};
use hoffman_limits::roots::RootConfig;

pub fn run_example() -> hoffman_limits::Result<()> {
    let cfg = RootConfig::default();
    println!("{:>5} {:>18} {:>10} {:>10} {:>18} {:>18}", "alpha", "psi", "|closed-psi|", "imag", "omega1", "omega2");
    for i in 0..20 {
        let a = i as f64 / 20.0;
        let root = psi(a, &cfg)?;
        let closed = psi_closed_form_parts(a)?.value;
        println!(
            "{a:>5.2} {root:>18.15} {:>10.1e} {:>10.1e} {:>18.15} {:>18.15}",
            (closed.re - root).abs(),
            closed.im.abs(),
            omega1(a)?,
            omega2(a, &cfg)?
        );
    }
    Ok(())
}

fn main() -> hoffman_limits::Result<()> {
    run_example()
}
