// The mod-2 cohomology ring of P_(2,2,3) and the action of Sq^1, Sq^2.

use ppspace::mod2::{basis, multiply, poincare_poly, sq, Mod2Class};
use ppspace::Tuple;

fn main() {
    let t: Tuple = "2,2,3".parse().unwrap();
    println!("H*({t}; Z/2), ranks {:?}", poincare_poly(&t));

    for d in 0..=t.dim() {
        for m in basis(&t, d) {
            let u = Mod2Class::from(m);
            let sq1 = sq(&t, 1, &u).unwrap();
            let sq2 = sq(&t, 2, &u).unwrap();
            println!(
                "  deg {d:>2}  {:<16} Sq^1 = {:<16} Sq^2 = {sq2}",
                u.to_string(),
                sq1.to_string()
            );
        }
    }

    // x_2 sits in degree n_2 = n_1 = 2, even, so it squares to y^2 x_2.
    let x2 = Mod2Class::parse(&t, "x{2}").unwrap();
    println!("x{{2}}^2 = {}", multiply(&t, &x2, &x2).unwrap());
}
