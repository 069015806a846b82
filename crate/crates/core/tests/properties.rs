//! Randomized invariants checked against independent formulas.

use detlinks::grass::{chern_quot, schubert_ring};
use detlinks::links::{
    euler_complex_link, euler_complex_link_smooth, euler_step, orbit_poincare, poincare_stiefel, poincare_unitary,
};
use detlinks::partitions::{binomial, gaussian_binomial, partitions_in_box};
use detlinks::polar::{duality_check, euler_obstruction, polar_profile, variety_dim};
use detlinks::tensor::{chern_tensor, pair, ProdClass};
use detlinks::{Bundle, DetSpec, GrassClass, GrassSpec, ProdSpec};
use num_bigint::BigInt;
use proptest::prelude::*;

fn grass() -> impl Strategy<Value = GrassSpec> {
    (1u32..=7).prop_flat_map(|m| (0..=m).prop_map(move |r| GrassSpec::new(r, m).unwrap()))
}

fn det_spec() -> impl Strategy<Value = DetSpec> {
    (1u32..=4)
        .prop_flat_map(|m| (Just(m), m..=5))
        .prop_flat_map(|(m, n)| (1..=m).prop_map(move |s| DetSpec::new(m, n, s).unwrap()))
}

fn polar_key() -> impl Strategy<Value = (u32, u32, u32)> {
    (1u32..=4)
        .prop_flat_map(|m| (Just(m), m..=6))
        .prop_flat_map(|(m, n)| (1..=m).prop_map(move |r| (m, n, r)))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn basis_size_is_binomial(spec in grass()) {
        let ring = schubert_ring(spec);
        prop_assert_eq!(BigInt::from(ring.basis().len()), binomial(spec.m() as u64, spec.r() as u64));
        prop_assert_eq!(ring.basis().len(), partitions_in_box(spec.r(), spec.m() - spec.r(), None).len());
    }

    #[test]
    fn poincare_is_gaussian_binomial(spec in grass()) {
        let g = gaussian_binomial(spec.m(), spec.r()).unwrap();
        prop_assert_eq!(detlinks::grass::poincare(spec), g.stretch(2));
    }

    #[test]
    fn point_class_integrates_to_one(spec in grass()) {
        prop_assert_eq!(GrassClass::point(spec).integrate(), BigInt::from(1));
    }

    /// ∫ σ_1^dim is the number of standard Young tableaux of the full box,
    /// by the hook length formula.
    #[test]
    fn degree_of_grassmannian(spec in grass()) {
        prop_assume!(spec.dim() > 0);
        let (r, c) = (spec.r() as u64, (spec.m() - spec.r()) as u64);
        let mut hooks = BigInt::from(1);
        for i in 0..r {
            for j in 0..c {
                hooks *= BigInt::from((r - i - 1) + (c - j - 1) + 1);
            }
        }
        let fact = (1..=r * c).fold(BigInt::from(1), |a, k| a * BigInt::from(k));
        let s1 = chern_quot(spec, 1).unwrap();
        prop_assert_eq!(s1.pow(spec.dim()).unwrap().integrate(), fact / hooks);
    }

    /// c_1 of a tensor product: rank(F) c_1(E) + rank(E) c_1(F).
    #[test]
    fn first_chern_class_of_tensor((m, n, r) in polar_key()) {
        let spec = ProdSpec::new(r, n, m).unwrap();
        for bundle in [Bundle::SubTensor, Bundle::QuotTensor] {
            let (a, b) = bundle.factor_ranks(spec);
            let (ce, cf) = bundle.factor_chern(spec);
            let one = |s| GrassClass::one(s);
            let e1 = ce.get(1).cloned().unwrap_or_else(|| GrassClass::zero(spec.first()));
            let f1 = cf.get(1).cloned().unwrap_or_else(|| GrassClass::zero(spec.second()));
            let expected = ProdClass::outer(spec, &e1, &one(spec.second())).unwrap().scale(&b.into())
                .try_add(&ProdClass::outer(spec, &one(spec.first()), &f1).unwrap().scale(&a.into())).unwrap();
            prop_assert_eq!(chern_tensor(spec, bundle, 1).unwrap().term(1), expected);
        }
    }

    #[test]
    fn pairing_matches_product((m, n, r) in polar_key(), i in 0u32..40) {
        let spec = ProdSpec::new(r, n, m).unwrap();
        let cq = chern_tensor(spec, Bundle::QuotTensor, spec.dim()).unwrap();
        let cs = chern_tensor(spec, Bundle::SubTensor, spec.dim()).unwrap();
        let k = i % (spec.dim() + 1);
        let (a, b) = (cq.term(k), cs.term(spec.dim() - k));
        prop_assert_eq!(pair(&a, &b).unwrap(), a.mul(&b).unwrap().integrate());
    }

    #[test]
    fn polar_duality((m, n, r) in polar_key()) {
        prop_assume!(r < m);
        prop_assert!(duality_check(m, n, r).unwrap().all_equal);
    }

    #[test]
    fn polar_signs_and_multiplicity((m, n, r) in polar_key()) {
        let p = polar_profile(m, n, r).unwrap();
        prop_assert!(p.check_signs().is_ok());
        prop_assert!(p.values[0] > BigInt::from(0));
    }

    #[test]
    fn euler_step_is_a_difference(spec in det_spec(), i in 0u32..30) {
        prop_assume!(spec.dim() >= 2);
        let i = i % (spec.dim() - 1);
        let step = euler_step(spec, i).unwrap();
        let diff = euler_complex_link(spec, i).unwrap() - euler_complex_link(spec, i + 1).unwrap();
        prop_assert_eq!(step, diff);
    }

    #[test]
    fn smooth_shortcut_agrees(spec in det_spec()) {
        for i in (0..spec.dim()).filter(|&i| spec.is_smooth(i)) {
            prop_assert_eq!(euler_complex_link_smooth(spec, i).unwrap(), euler_complex_link(spec, i).unwrap());
        }
    }

    /// In the smooth range only the open stratum contributes, so χ(L^i) is
    /// the Euler obstruction at i + 1.
    #[test]
    fn smooth_chi_is_euler_obstruction(spec in det_spec()) {
        prop_assume!(spec.s() >= 2);
        let (m, n, r) = (spec.m(), spec.n(), spec.s() - 1);
        prop_assert_eq!(variety_dim(m, n, r), spec.dim());
        for i in (0..spec.dim()).filter(|&i| spec.is_smooth(i)) {
            prop_assert_eq!(euler_complex_link(spec, i).unwrap(), euler_obstruction(m, n, r, i + 1).unwrap());
        }
    }

    #[test]
    fn orbit_poincare_factors(m in 1u32..=5, extra in 0u32..=3, r in 0u32..=5) {
        let n = m + extra;
        prop_assume!(r <= m);
        let orbit = orbit_poincare(m, n, r).unwrap();
        prop_assert_eq!(orbit.eval(&BigInt::from(1)), binomial(m as u64, r as u64) * BigInt::from(2u32).pow(r));
        if r >= 1 {
            prop_assert_eq!(orbit.eval(&BigInt::from(-1)), BigInt::from(0));
        }
        prop_assert_eq!(poincare_stiefel(n, n).unwrap(), poincare_unitary(n));
    }
}
