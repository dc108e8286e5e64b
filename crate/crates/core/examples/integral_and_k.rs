// Integral cohomology, field ranks and K-theory of a few products.

use ppspace::intk::{
    field_rank, integral_generators, integral_product, k_groups, IntegralCohomology,
};
use ppspace::Tuple;

fn main() {
    for s in ["3", "2,3", "4,6,7", "5,5"] {
        let t: Tuple = s.parse().unwrap();
        let h = IntegralCohomology::new(&t);
        println!("P{t}");
        for d in 0..=t.dim() {
            let q = field_rank(&t, d, 0).unwrap();
            println!(
                "  H^{d:<2} = {:<12} rank over Q: {q}",
                h.group(d).to_string()
            );
        }
        let (k0, k1) = k_groups(&t);
        println!("  K^0 = {k0}, K^1 = {k1}");
    }

    // (4,6,8): E = {2,3}, x_2 x_3 is a generator and p_{2} lies in degree 7.
    let t: Tuple = "4,6,8".parse().unwrap();
    let gens: Vec<_> = (0..=t.dim())
        .flat_map(|d| integral_generators(&t, d))
        .collect();
    let show = |g: &ppspace::intk::IntGenerator| format!("{g} (deg {})", g.degree(&t));
    for a in gens
        .iter()
        .filter(|g| g.degree(&t) > 0 && g.degree(&t) <= 10)
    {
        for b in gens
            .iter()
            .filter(|g| g.degree(&t) > 0 && g.degree(&t) <= 7)
        {
            let ab = integral_product(&t, a, b).unwrap();
            if !ab.is_empty() {
                println!(
                    "  {} · {} = {:?}",
                    show(a),
                    show(b),
                    ab.iter()
                        .map(|(g, c)| format!("{c}·{g}"))
                        .collect::<Vec<_>>()
                );
            }
        }
    }
}
