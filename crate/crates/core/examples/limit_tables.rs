// The classical sequence and its `α` generalisation, with the deficit to
// the limit that each term approaches from below.

use hoffman_limits::limits::{FormulaTag, LimitTable};
use hoffman_limits::roots::RootConfig;

pub fn run_example() -> hoffman_limits::Result<()> {
    let cfg = RootConfig::default();
    for (tag, alpha) in [(FormulaTag::Classic, 0.0), (FormulaTag::VersionI, 0.4), (FormulaTag::VersionII, 0.4)] {
        let table = LimitTable::build(tag, 8, alpha, &cfg)?;
        println!("{} at alpha = {}, limit {:.15}", tag.as_str(), table.alpha, table.limit);
        for row in &table.rows {
            println!("  n = {:>2}  root {:.15}  eta {:.15}  deficit {:.3e}", row.n, row.gamma, row.eta, row.deficit);
        }
    }
    Ok(())
}

fn main() -> hoffman_limits::Result<()> {
    run_example()
}
