// Manifold invariants: immersion dimension, span, parallelizability.
//
// Pass tuples as arguments, e.g. `cargo run --example immersion_report -- 2,3 1,1`.

use ppspace::manifold::report;
use ppspace::Tuple;

fn main() {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = ["1,1", "2,3", "4", "3,5,9", "10,11,12"]
            .map(String::from)
            .to_vec();
    }
    println!(
        "{:<12} {:>4} {:>6} {:>10} {:>10} {:>10}  par",
        "tuple", "dim", "orient", "imm", "stablespan", "span"
    );
    for a in args {
        let t: Tuple = match a.parse() {
            Ok(t) => t,
            Err(e) => {
                eprintln!("{a}: {e}");
                continue;
            }
        };
        let r = report(&t).unwrap();
        println!(
            "{:<12} {:>4} {:>6} {:>10} {:>10} {:>10}  {}",
            t.to_string(),
            r.dimension,
            r.orientable,
            r.imm.to_string(),
            r.span_result.stablespan.to_string(),
            r.span_result.span.to_string(),
            r.parallelizable
        );
    }
}
