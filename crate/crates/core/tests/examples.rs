//! Every example must build and run to completion.

macro_rules! run_example {
    ($name:ident) => {
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                main();
            }
        }
    };
}

run_example!(steenrod);
run_example!(gvfp_engine);
run_example!(integral_and_k);
run_example!(splitting);
run_example!(immersion_report);
run_example!(table1);
