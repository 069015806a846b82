// Schubert calculus on Grass(2, 4): the classical count of four lines
// meeting four general lines in P^3, Pieri products and Chern classes.

use detlinks::grass::{chern_quot, chern_sub, poincare, schubert_ring, total_chern_quot, total_chern_sub};
use detlinks::{GrassClass, GrassSpec, Partition, Result};

pub fn run_example() -> Result<()> {
    let spec = GrassSpec::new(2, 4)?;
    let ring = schubert_ring(spec);
    println!("{spec}: dimension {}, basis {:?}", spec.dim(), ring.basis());
    println!("Poincaré polynomial {}", poincare(spec));

    let s1 = GrassClass::schubert(spec, Partition::row(1))?;
    let lines = s1.pow(4)?.integrate();
    println!("∫ σ_1^4 = {lines}");
    assert_eq!(lines, 2.into());

    let s1_sq = s1.mul(&s1)?;
    println!("σ_1 · σ_1 = {s1_sq}");
    assert_eq!(s1_sq.coeff(&Partition::row(2)), 1.into());
    assert_eq!(s1_sq.coeff(&Partition::column(2)), 1.into());

    // c(S) c(Q) = 1 in every positive degree.
    let cs = total_chern_sub(spec);
    let cq = total_chern_quot(spec);
    for d in 1..=spec.dim() {
        let mut sum = GrassClass::zero(spec);
        for i in 0..=d {
            if let (Some(a), Some(b)) = (cs.get(i as usize), cq.get((d - i) as usize)) {
                sum = sum.try_add(&a.mul(b)?)?;
            }
        }
        assert!(sum.is_zero(), "Whitney relation fails in degree {d}");
    }
    println!("c_1(Q) = {}, c_2(S) = {}", chern_quot(spec, 1)?, chern_sub(spec, 2)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
