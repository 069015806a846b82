// Betti numbers of smooth complex and real links, orbit Poincaré
// polynomials, and the one torsion group known from the geometry.

use detlinks::links::{betti_smooth_complex_link, orbit_poincare, real_link_betti, REAL_LINK_TORSION_M23};
use detlinks::{DetSpec, Result};
use num_bigint::BigInt;

pub fn run_example() -> Result<()> {
    let spec = DetSpec::new(3, 4, 3)?;
    let link = betti_smooth_complex_link(spec, 6)?;
    println!(
        "{spec}, L^6: χ = {}, Betti {:?}, middle torsion {}",
        link.chi, link.betti, link.torsion
    );
    assert_eq!(link.betti, [1, 0, 1, 9].map(BigInt::from));

    let a0 = DetSpec::new(2, 3, 2)?;
    let link = betti_smooth_complex_link(a0, 0)?;
    assert_eq!(link.betti, [1, 0, 1, 0].map(BigInt::from));
    let real: Vec<String> = real_link_betti(a0, 0)?
        .iter()
        .map(|b| b.as_ref().map_or("?".into(), ToString::to_string))
        .collect();
    println!("{a0}, K^0 Betti: {}", real.join(" "));

    let orbit = orbit_poincare(3, 4, 2)?;
    println!("orbit O_(3,4)^2: {orbit}, at t = -1: {}", orbit.eval(&(-1).into()));
    assert_eq!(orbit.eval(&(-1).into()), 0.into());

    let t = REAL_LINK_TORSION_M23;
    println!(
        "H^{}(K^{}(M_({},{})^{})) = Z/{}",
        t.degree, t.codim, t.m, t.n, t.s, t.order
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
