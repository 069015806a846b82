// Informational timings for the larger tables. Numbers depend on the machine
// and are not checked.

use std::time::Instant;

use detlinks::polar::compute_profile;
use detlinks::Result;

pub fn run_example() -> Result<()> {
    for (m, n, r) in [(4, 5, 3), (5, 6, 4), (5, 6, 2), (6, 7, 5), (7, 8, 6)] {
        let start = Instant::now();
        let p = compute_profile(m, n, r)?;
        println!("({m},{n},{r}): e^0 = {}, {:.2?}", p.values[0], start.elapsed());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
