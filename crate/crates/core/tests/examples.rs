macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(classify_example, "classify.rs", classify_example_runs);
example!(semicomplete_example, "semicomplete_forest.rs", semicomplete_forest_example_runs);
example!(nae_example, "nae_gadget.rs", nae_gadget_example_runs);
example!(packing_example, "cycle_packing.rs", cycle_packing_example_runs);
example!(symmetric_example, "symmetric_kappa.rs", symmetric_kappa_example_runs);
example!(linkage_example, "linkage_gadget.rs", linkage_gadget_example_runs);
