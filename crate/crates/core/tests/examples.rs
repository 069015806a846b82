//! Runs every example in examples/ as a test.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/",
                stringify!($name),
                ".rs"
            ));

            #[test]
            fn runs() {
                run_example().unwrap();
            }
        }
    };
}

example!(schubert_ring);
example!(quotient_oracle);
example!(tensor_classes);
example!(polar_tables);
example!(duality);
example!(euler_links);
example!(betti_links);
example!(smoothing_bounds);
example!(profile_cache);
example!(bench_tables);
