mod common;

use proptest::prelude::*;

use ppspace::binarith::binom_odd;
use ppspace::intk::{
    field_rank, integral_generators, integral_group, integral_product, k_generators, k_groups,
    k_product, k_product_sum, KGenerator,
};
use ppspace::manifold::orientable;
use ppspace::mod2::{basis, multiply, poincare_poly, sq, Mod2Class, Mod2Monomial};
use ppspace::Tuple;

use common::sweep;

fn tuple_strategy(max_r: usize, max_n: u32) -> impl Strategy<Value = Tuple> {
    prop::collection::vec(1..=max_n, 1..=max_r).prop_map(|v| Tuple::new(v).unwrap())
}

/// A random homogeneous class of some degree of `t`.
fn class_in(t: &Tuple, seed: u64) -> Mod2Class {
    let d = seed % (t.dim() + 1);
    let b = basis(t, d);
    b.iter()
        .enumerate()
        .filter(|(i, _)| seed >> (i % 60) & 1 == 1)
        .map(|(_, m)| *m)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cartan(t in tuple_strategy(5, 8), s1 in any::<u64>(), s2 in any::<u64>(), k in 0u64..26) {
        prop_assume!(t.dim() <= 24);
        let (u, v) = (class_in(&t, s1), class_in(&t, s2));
        let lhs = sq(&t, k, &multiply(&t, &u, &v).unwrap()).unwrap();
        let rhs = (0..=k).fold(Mod2Class::zero(), |acc, i| {
            acc + multiply(&t, &sq(&t, i, &u).unwrap(), &sq(&t, k - i, &v).unwrap()).unwrap()
        });
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sq_closed_form(t in tuple_strategy(5, 12), seed in any::<u64>(), k in 0u64..14) {
        // Sq^k(y^a x_S) = C(a + Σ_S (n_i + 1), k) y^{a+k} x_S
        let d = seed % (t.dim() + 1);
        let b = basis(&t, d);
        prop_assume!(!b.is_empty());
        let m = b[(seed >> 32) as usize % b.len()];
        let e: u64 = m.a as u64 + m.indices().iter().map(|&i| t.entry(i) as u64 + 1).sum::<u64>();
        let expected = (m.a as u64 + k <= t.min() as u64 && binom_odd(e as i64, k))
            .then(|| Mod2Monomial { a: m.a + k as u32, positions: m.positions });
        prop_assert_eq!(m.sq(&t, k), expected);
    }

    #[test]
    fn mod2_duality(t in tuple_strategy(6, 20)) {
        let p = poincare_poly(&t);
        let rev: Vec<u128> = p.iter().rev().copied().collect();
        prop_assert_eq!(p, rev);
    }

    #[test]
    fn top_integral_group(t in tuple_strategy(5, 10)) {
        let top = integral_group(&t, t.dim());
        let expected = if orientable(&t) { "Z" } else { "Z/2" };
        prop_assert_eq!(top.to_string(), expected);
    }

    #[test]
    fn k_free_rank_is_total_betti(t in tuple_strategy(5, 10)) {
        let (k0, k1) = k_groups(&t);
        let betti: u128 = (0..=t.dim()).map(|d| field_rank(&t, d, 0).unwrap()).sum();
        prop_assert_eq!(k0.free_rank + k1.free_rank, betti);
        for g in k0.torsion_orders().into_iter().chain(k1.torsion_orders()) {
            prop_assert!(g.is_power_of_two());
        }
    }
}

#[test]
fn square_rule_branches() {
    for t in sweep(4, 6) {
        for i in t.upper_positions() {
            let x = Mod2Monomial::new(&t, 0, &[i]).unwrap();
            let n = t.entry(i);
            let expected =
                (n == t.min() && n % 2 == 0).then(|| Mod2Monomial::new(&t, n, &[i]).unwrap());
            assert_eq!(x.mul(&x, &t), expected, "x_{i}^2 in {t}");
        }
    }
}

#[test]
fn adem_on_small_tuples() {
    for t in sweep(4, 6) {
        for d in 0..=t.dim() {
            for m in basis(&t, d) {
                let u = Mod2Class::from(m);
                let s = |k, c: &Mod2Class| sq(&t, k, c).unwrap();
                assert!(s(1, &s(1, &u)).is_zero());
                assert_eq!(s(1, &s(2, &u)), s(3, &u));
            }
        }
    }
}

#[test]
fn integral_products_are_graded() {
    for s in ["2,2,4", "3,4,6", "1,2,3", "4,4,5,7", "5,6,6"] {
        let t: Tuple = s.parse().unwrap();
        let gens: Vec<_> = (0..=t.dim())
            .flat_map(|d| integral_generators(&t, d))
            .collect();
        for a in &gens {
            for b in &gens {
                let ab = integral_product(&t, a, b).unwrap();
                let ba = integral_product(&t, b, a).unwrap();
                let sign = if a.degree(&t) * b.degree(&t) % 2 == 0 {
                    1
                } else {
                    -1
                };
                for ((g, c), (h, e)) in ab.iter().zip(&ba) {
                    assert_eq!(g, h);
                    assert_eq!(g.degree(&t), a.degree(&t) + b.degree(&t));
                    g.validate(&t).unwrap();
                    match g.order() {
                        Some(m) => assert_eq!((c - sign * e).rem_euclid(m as i64), 0),
                        None => assert_eq!(*c, sign * e, "{a} {b} in {t}"),
                    }
                }
                assert_eq!(ab.len(), ba.len());
            }
        }
    }
}

#[test]
fn k_products_associate() {
    for s in ["2,2,4", "3,4,6", "1,2,3", "4,5,6,7", "2,3,3"] {
        let t: Tuple = s.parse().unwrap();
        let gens = k_generators(&t);
        let one = vec![(KGenerator::one(), 1)];
        for a in &gens {
            let a1 = vec![(*a, 1)];
            assert_eq!(k_product_sum(&t, &one, &a1).unwrap(), a1);
            for b in &gens {
                let ab = k_product(&t, a, b).unwrap();
                for c in &gens {
                    let c1 = vec![(*c, 1)];
                    let left = k_product_sum(&t, &ab, &c1).unwrap();
                    let bc = k_product(&t, b, c).unwrap();
                    let right = k_product_sum(&t, &a1, &bc).unwrap();
                    assert_eq!(left, right, "({a}·{b})·{c} in {t}");
                }
            }
        }
    }
}
