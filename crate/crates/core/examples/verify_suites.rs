//! Running the verification suites from code.

use toric_poset::verify::{run, Suite};
use toric_poset::Result;

fn main() -> Result<()> {
    for suite in [Suite::Table1, Suite::Gessel, Suite::Bases, Suite::DualSimplicial] {
        let report = run(suite, None)?;
        for s in &report.suites {
            for c in &s.checks {
                println!("{:<16} {:<26} {:<4} {:>5} cases  {}", s.suite, c.id, if c.holds() { "pass" } else { "FAIL" }, c.cases, c.anchor);
            }
        }
    }
    Ok(())
}
