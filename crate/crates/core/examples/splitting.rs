// Wedge summands of ΣP_n, sphere factors, and sphere bundles.

use ppspace::splitting::{sphere_bundle, sphere_factors, splitting_poincare_check, wedge_summands};
use ppspace::Tuple;

fn main() {
    let t: Tuple = "2,3,5".parse().unwrap();
    println!("ΣP{t} splits as:");
    for s in wedge_summands(&t) {
        println!("  u = {:<8} {s}", format!("{:?}", s.u_indices));
    }
    println!(
        "cell count matches cohomology: {}",
        splitting_poincare_check(&t)
    );

    for s in ["1,3", "2,3", "2,4", "4,7,15,8"] {
        let t: Tuple = s.parse().unwrap();
        let f = sphere_factors(&t);
        let spheres: String = f.spheres.iter().map(|n| format!(" × S^{n}")).collect();
        println!("P{t} ≅ P{}{spheres}", f.remaining);
    }

    let base: Tuple = "3".parse().unwrap();
    let once = sphere_bundle(&base, 5).unwrap();
    let twice = sphere_bundle(&once, 2).unwrap();
    println!("S(5ξ) over P{base} is P{once}; S(2ξ) over that is P{twice}");
}
