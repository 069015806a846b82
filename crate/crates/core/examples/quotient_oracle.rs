// The brute-force quotient ring Z[x_1..x_r]/J checked against the Schubert
// multiplication table, graded piece by graded piece.

use detlinks::grass::oracle::{compare_with_schubert, QuotientOracle};
use detlinks::grass::presentation::grassmann_relations;
use detlinks::partitions::gaussian_binomial;
use detlinks::{GrassSpec, Result};

pub fn run_example() -> Result<()> {
    for (r, m) in [(1, 3), (2, 4), (2, 5), (3, 6)] {
        let spec = GrassSpec::new(r, m)?;
        let oracle = QuotientOracle::build(spec)?;
        let relations: Vec<String> = grassmann_relations(r, m).iter().map(ToString::to_string).collect();
        println!("{spec}: J = ({})", relations.join(", "));

        let expected: Vec<usize> = gaussian_binomial(m, r)?
            .to_dense()
            .iter()
            .map(|c| usize::try_from(c).expect("small rank"))
            .collect();
        assert_eq!(oracle.graded_ranks(), expected);
        assert!(oracle.is_torsion_free());

        let report = compare_with_schubert(spec)?;
        println!(
            "  graded ranks {:?}, {} products compared, {} mismatches",
            report.graded_ranks,
            report.products_checked,
            report.product_mismatches.len()
        );
        assert!(report.passed());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
