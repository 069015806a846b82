// Euler characteristics of complex links via the stratum sum, the induction
// step, and the Hilbert–Burch family M_{m,m+1}^m.

use detlinks::links::{egz_factor, euler_complex_link, euler_complex_link_smooth, euler_step, hilbert_burch_euler};
use detlinks::tabulate::{render_hilbert_burch, Format};
use detlinks::{DetSpec, Result};

pub fn run_example() -> Result<()> {
    let spec = DetSpec::new(3, 4, 3)?;
    let chi: Vec<_> = (0..spec.dim())
        .map(|i| euler_complex_link(spec, i))
        .collect::<Result<_>>()?;
    println!("{spec}: χ(L^i) for i = 0..{} is {chi:?}", spec.dim() - 1);
    assert_eq!(chi[5], (-7).into());
    assert_eq!(chi[6], (-7).into());
    assert_eq!(euler_complex_link_smooth(spec, 6)?, chi[6]);
    assert_eq!(euler_step(spec, 5)?, 0.into());
    println!("factor of the rank-1 stratum: {}", egz_factor(spec, 1)?);

    let columns: Vec<Vec<_>> = (1..=4)
        .map(|m| (0..=3).map(|d| hilbert_burch_euler(m, d)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    print!("{}", render_hilbert_burch(&columns, Format::Md));
    assert_eq!(columns[3], [10, -30, 75, -101].map(Into::into));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
