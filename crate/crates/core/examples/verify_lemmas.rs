// Seeded property suites over random graphs.

use hoffman_limits::verify::{run_suite, Suite};

pub fn run_example() -> hoffman_limits::Result<()> {
    for suite in [Suite::Lemmas, Suite::Bipartite] {
        for r in run_suite(suite, 7, 40)? {
            println!(
                "{:<10} {:<55} checks {:>6}  by bound {:>2}  {}",
                r.suite,
                r.property,
                r.checks,
                r.resolved_by_bound,
                if r.passed() { "PASS" } else { "FAIL" }
            );
        }
    }
    Ok(())
}

fn main() -> hoffman_limits::Result<()> {
    run_example()
}
