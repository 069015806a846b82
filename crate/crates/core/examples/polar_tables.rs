// Polar multiplicities of generic determinantal varieties, rendered the way
// the classical tables are laid out: sizes down, k across.

use detlinks::polar::{polar_multiplicity, polar_profile};
use detlinks::tabulate::{render_polar, Format};
use detlinks::{PolarProfile, Result};

pub fn run_example() -> Result<()> {
    let rows: Vec<PolarProfile> = (3..=6)
        .flat_map(|n| [1, 2].map(|r| (n, r)))
        .map(|(n, r)| polar_profile(3, n, r).map(|p| (*p).clone()))
        .collect::<Result<_>>()?;
    print!("{}", render_polar(&rows, Format::Md));

    let p = polar_profile(5, 6, 2)?;
    println!("e_(5,6)^(2,k) = {:?}", p.values);
    assert_eq!(p.values[0], 490.into());
    assert_eq!(polar_multiplicity(4, 4, 2, 4)?, 286.into());
    assert!(p
        .raw_signs
        .iter()
        .enumerate()
        .all(|(k, &s)| s == 0 || s == if k % 2 == 0 { 1 } else { -1 }));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
