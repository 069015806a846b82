// The symmetry e^{r,k} = e^{m-r, 2(m-r)r-k} and the local Euler obstruction.

use detlinks::polar::{duality_check, euler_obstruction, variety_dim};
use detlinks::Result;

pub fn run_example() -> Result<()> {
    for (m, n) in [(3, 4), (4, 5), (5, 6)] {
        for r in 1..m {
            let report = duality_check(m, n, r)?;
            println!(
                "{m}×{n}, r = {r} against r = {}: {} pairs, equal = {}",
                m - r,
                report.pairs.len(),
                report.all_equal
            );
            assert!(report.all_equal);
        }
    }
    let d = variety_dim(3, 4, 2);
    let eu: Vec<_> = (0..=d).map(|i| euler_obstruction(3, 4, 2, i)).collect::<Result<_>>()?;
    println!("Euler obstructions of M_(3,4)^3 sliced in codimension 0..={d}: {eu:?}");
    assert_eq!(eu[7], (-7).into());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
