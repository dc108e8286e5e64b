// Geometric dimension of multiples of the Hopf bundle, with the rules
// that determined each answer.

use ppspace::gvfp::{span_multiple, stable_gd, stable_gd_with, Rule};
use ppspace::HopfMultiple;

fn main() {
    for (k, n) in [(7, 2), (-5, 4), (20, 9), (-12, 9), (3, 400), (1000, 27)] {
        let hm = HopfMultiple::new(k, n).unwrap();
        let b = stable_gd(hm).unwrap();
        println!("gd({k}ξ_{n}) = {b}");
        for f in &b.provenance {
            println!("    {:<3} [{}, {}]  {}", f.rule, f.lower, f.upper, f.note);
        }
    }

    // Without the n = 8, 9 tables the general rules only bracket the value.
    let hm = HopfMultiple::new(17, 9).unwrap();
    println!(
        "gd(17ξ_9): general rules {} , all rules {}",
        stable_gd_with(hm, &Rule::GENERAL).unwrap(),
        stable_gd(hm).unwrap()
    );

    println!("span(7ξ_2) = {}", span_multiple(7, 2).unwrap());
}
