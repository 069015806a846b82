// Chern and Segre classes of S1 ⊗ S2 and Q1 ⊗ Q2 on Grass(r, n) × Grass(r, m),
// computed by Newton power sums and cross-checked against universal
// polynomials in formal Chern roots.

use detlinks::tensor::universal::chern_tensor_universal;
use detlinks::tensor::{chern_tensor, inversion_holds, segre_tensor};
use detlinks::{Bundle, ProdSpec, Result};

pub fn run_example() -> Result<()> {
    let spec = ProdSpec::new(2, 4, 3)?;
    println!("{spec}: dimension {}", spec.dim());
    for bundle in [Bundle::SubTensor, Bundle::QuotTensor] {
        let fast = chern_tensor(spec, bundle, spec.dim())?;
        let slow = chern_tensor_universal(spec, bundle, spec.dim())?;
        for k in 0..=spec.dim() {
            assert_eq!(fast.term(k), slow.term(k), "c_{k}({bundle}) differs");
        }
        let segre = segre_tensor(spec, bundle, spec.dim())?;
        assert!(inversion_holds(&fast, &segre)?);
        println!("c_1({bundle}) = {}", fast.term(1));
        println!("s_2({bundle}) has {} terms", segre.term(2).len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
