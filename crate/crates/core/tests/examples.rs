macro_rules! example_test {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $module() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example_test!(abelian_groups, "abelian_groups.rs");
example_test!(cuspidal_census, "cuspidal_census.rs");
example_test!(partition_functions, "partition_functions.rs");
example_test!(head_of_restriction, "head_of_restriction.rs");
example_test!(counterexamples, "counterexamples.rs");
example_test!(sl_fibers, "sl_fibers.rs");
example_test!(brute_force_oracle, "brute_force_oracle.rs");
