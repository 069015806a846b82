// Lower bounds for the middle Betti number of smoothings of isolated
// Cohen–Macaulay codimension 2 singularities with m + 1 generators.

use detlinks::links::{smoothing_bounds, SmoothingKind};
use detlinks::Result;

pub fn run_example() -> Result<()> {
    for m in 2..=5 {
        let curve = smoothing_bounds(m, SmoothingKind::Curve)?;
        let surface = smoothing_bounds(m, SmoothingKind::Surface)?;
        let threefold = smoothing_bounds(m, SmoothingKind::Threefold)?;
        println!("m = {m}: b_1 >= {curve}, b_2 >= {surface}, b_3 >= {threefold}");
    }
    assert_eq!(smoothing_bounds(2, SmoothingKind::Curve)?, 0.into());
    assert_eq!(smoothing_bounds(3, SmoothingKind::Surface)?, 15.into());
    assert_eq!(smoothing_bounds(3, SmoothingKind::Threefold)?, 5.into());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
