//! Integral cohomology, field-coefficient ranks and complex K-theory.
//!
//! Write `n_1 = 2m_1 + ε` and let `E` be the positions `i > 1` with `n_i`
//! even. Integral cohomology is `(A ⊕ B ⊕ C) ⊗ Λ[x_i : i > 1, n_i odd]`:
//!
//! * `A`: `z^j ∏_{S} x` for `|S|` even, a `Z` at `j = 0` and `Z/2` for
//!   `1 <= j <= m_1`;
//! * `B`: `2x_1 ∏_{S} x` for `|S| ≢ ε (mod 2)`, each a `Z`;
//! * `C`: `z^j p_S` for `|S|` odd and `0 <= j < m_1 + ε`, each a `Z/2`,
//!   with `|p_S| = 1 + Σ_{S} n`.
//!
//! K-theory has the same shape with `Z/2^{m_1}` and `Z/2^{m_1+ε}` in place
//! of the `z`-towers.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mod2::{positions_iter, Positions};
use crate::tuple::Tuple;

/// A finitely generated abelian group with 2-primary torsion.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "GroupRepr", from = "GroupRepr")]
pub struct AbelianGroup {
    pub free_rank: u128,
    /// cyclic order -> multiplicity
    torsion: BTreeMap<u64, u128>,
}

#[derive(Serialize, Deserialize)]
struct GroupRepr {
    free_rank: u128,
    torsion: Vec<u64>,
}

impl From<AbelianGroup> for GroupRepr {
    fn from(g: AbelianGroup) -> Self {
        GroupRepr {
            free_rank: g.free_rank,
            torsion: g.torsion_orders(),
        }
    }
}

impl From<GroupRepr> for AbelianGroup {
    fn from(r: GroupRepr) -> Self {
        let mut g = AbelianGroup::free(r.free_rank);
        for order in r.torsion {
            g.add_cyclic(order, 1);
        }
        g
    }
}

impl AbelianGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: u128) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: BTreeMap::new(),
        }
    }

    /// Adds `count` copies of `Z/order`; trivial orders are dropped.
    pub fn add_cyclic(&mut self, order: u64, count: u128) {
        if order > 1 && count > 0 {
            *self.torsion.entry(order).or_default() += count;
        }
    }

    /// Torsion orders, ascending with repetition.
    pub fn torsion_orders(&self) -> Vec<u64> {
        self.torsion
            .iter()
            .flat_map(|(&order, &count)| std::iter::repeat_n(order, count as usize))
            .collect()
    }

    /// Number of cyclic torsion summands.
    pub fn torsion_count(&self) -> u128 {
        self.torsion.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        for (order, count) in &self.torsion {
            match count {
                1 => parts.push(format!("Z/{order}")),
                c => parts.push(format!("(Z/{order})^{c}")),
            }
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Sparse polynomial: degree -> coefficient.
type Poly = BTreeMap<u64, u128>;

fn poly_mul(p: &Poly, q: &Poly, cap: u64) -> Poly {
    let mut out = Poly::new();
    for (&a, &x) in p {
        for (&b, &y) in q {
            if a + b <= cap {
                *out.entry(a + b).or_default() += x * y;
            }
        }
    }
    out
}

fn coeff(p: &Poly, d: i128) -> u128 {
    u64::try_from(d)
        .ok()
        .and_then(|d| p.get(&d))
        .copied()
        .unwrap_or(0)
}

/// The invariants shared by all integral and K-theoretic computations.
#[derive(Clone, Debug)]
struct Layout {
    m1: u64,
    eps: u64,
    n1: u64,
    dim: u64,
    even: Positions,
    odd: Positions,
}

impl Layout {
    fn new(t: &Tuple) -> Self {
        let n1 = t.min() as u64;
        let (mut even, mut odd) = (0, 0);
        for i in t.upper_positions() {
            if t.entry(i) % 2 == 0 {
                even |= 1 << (i - 1);
            } else {
                odd |= 1 << (i - 1);
            }
        }
        Layout {
            m1: n1 / 2,
            eps: n1 % 2,
            n1,
            dim: t.dim(),
            even,
            odd,
        }
    }

    /// Subsets of `mask` by total weight, split by cardinality parity.
    fn subset_polys(&self, t: &Tuple, mask: Positions) -> [Poly; 2] {
        let mut polys = [Poly::from([(0, 1)]), Poly::new()];
        for i in positions_iter(mask) {
            let n = t.entry(i) as u64;
            let [even, odd] = &polys;
            let mut next = [even.clone(), odd.clone()];
            for (parity, p) in polys.iter().enumerate() {
                for (&d, &c) in p {
                    *next[1 - parity].entry(d + n).or_default() += c;
                }
            }
            polys = next;
        }
        polys
    }
}

/// `H^*(P_n; Z)` in every degree.
#[derive(Clone, Debug)]
pub struct IntegralCohomology {
    layout: Layout,
    /// `Σ_{|S| even} t^{|S|} · Λ_odd`
    a_line: Poly,
    /// `B` family, degrees already shifted by `n_1`
    b_line: Poly,
    /// `Σ_{|S| odd} t^{1+|S|} · Λ_odd`
    c_line: Poly,
}

impl IntegralCohomology {
    pub fn new(t: &Tuple) -> Self {
        let layout = Layout::new(t);
        let [e_even, e_odd] = layout.subset_polys(t, layout.even);
        let [o_even, o_odd] = layout.subset_polys(t, layout.odd);
        let mut exterior = o_even;
        for (d, c) in o_odd {
            *exterior.entry(d).or_default() += c;
        }
        let cap = layout.dim;
        let a_line = poly_mul(&e_even, &exterior, cap);
        let b_source = if layout.eps == 0 { &e_odd } else { &e_even };
        let b_line = poly_mul(b_source, &exterior, cap)
            .into_iter()
            .map(|(d, c)| (d + layout.n1, c))
            .collect();
        let c_line = poly_mul(&e_odd, &exterior, cap)
            .into_iter()
            .map(|(d, c)| (d + 1, c))
            .collect();
        IntegralCohomology {
            layout,
            a_line,
            b_line,
            c_line,
        }
    }

    pub fn group(&self, d: u64) -> AbelianGroup {
        if d > self.layout.dim {
            return AbelianGroup::zero();
        }
        let d = d as i128;
        let free = coeff(&self.a_line, d) + coeff(&self.b_line, d);
        let mut g = AbelianGroup::free(free);
        let a_tors: u128 = (1..=self.layout.m1 as i128)
            .map(|j| coeff(&self.a_line, d - 2 * j))
            .sum();
        let c_tors: u128 = (0..(self.layout.m1 + self.layout.eps) as i128)
            .map(|j| coeff(&self.c_line, d - 2 * j))
            .sum();
        g.add_cyclic(2, a_tors + c_tors);
        g
    }

    pub fn groups(&self) -> Vec<AbelianGroup> {
        (0..=self.layout.dim).map(|d| self.group(d)).collect()
    }
}

/// `H^d(P_n; Z)`; zero outside `0..=|n|`.
pub fn integral_group(t: &Tuple, d: u64) -> AbelianGroup {
    IntegralCohomology::new(t).group(d)
}

fn is_odd_prime(p: u64) -> bool {
    p > 2
        && p % 2 == 1
        && (3..)
            .step_by(2)
            .take_while(|q| q * q <= p)
            .all(|q| p % q != 0)
}

/// Rank of `H^d(P_n; F)` for `F = Q` (`characteristic = 0`) or `Z/p`, `p`
/// an odd prime: the number of subsets `I` of positions with
/// `Σ_I n_i = d` and `Σ_I (n_i + 1)` even.
pub fn field_rank(t: &Tuple, d: u64, characteristic: u64) -> Result<u128> {
    check_characteristic(characteristic)?;
    Ok(field_ranks_unchecked(t)
        .get(d as usize)
        .copied()
        .unwrap_or(0))
}

/// `field_rank` for every degree `0..=|n|`.
pub fn field_ranks(t: &Tuple, characteristic: u64) -> Result<Vec<u128>> {
    check_characteristic(characteristic)?;
    Ok(field_ranks_unchecked(t))
}

fn check_characteristic(characteristic: u64) -> Result<()> {
    match characteristic {
        0 => Ok(()),
        2 => Err(Error::domain(
            "characteristic 2 is handled by the mod-2 cohomology module",
        )),
        p if is_odd_prime(p) => Ok(()),
        p => Err(Error::domain(format!("{p} is not 0 or an odd prime"))),
    }
}

fn field_ranks_unchecked(t: &Tuple) -> Vec<u128> {
    // (weight, parity of Σ(n_i+1)) -> count
    let mut counts: BTreeMap<(u64, u64), u128> = BTreeMap::from([((0, 0), 1)]);
    for &n in t.entries() {
        let n = n as u64;
        let snapshot: Vec<_> = counts.iter().map(|(&k, &v)| (k, v)).collect();
        for ((w, p), c) in snapshot {
            *counts.entry((w + n, (p + n + 1) % 2)).or_default() += c;
        }
    }
    let mut ranks = vec![0u128; t.dim() as usize + 1];
    for ((w, p), c) in counts {
        if p == 0 {
            ranks[w as usize] += c;
        }
    }
    ranks
}

/// The generator families of integral cohomology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntFamily {
    /// `z^j ∏_S x`; infinite cyclic when `j = 0`, order 2 otherwise.
    A { j: u32 },
    /// `2x_1 ∏_S x`, infinite cyclic.
    B,
    /// `z^j p_S`, order 2.
    C { j: u32 },
}

/// A basis element `g ⊗ ∏_{i∈odd} x_i` of integral cohomology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntGenerator {
    pub family: IntFamily,
    /// `S ⊆ E`
    pub even: Positions,
    /// exterior factor over odd `n_i`, `i > 1`
    pub odd: Positions,
}

impl IntGenerator {
    pub fn unit() -> Self {
        IntGenerator {
            family: IntFamily::A { j: 0 },
            even: 0,
            odd: 0,
        }
    }

    pub fn validate(&self, t: &Tuple) -> Result<()> {
        let l = Layout::new(t);
        let bad = |why: &str| Err(Error::domain(format!("invalid generator {self:?}: {why}")));
        if self.even & !l.even != 0 {
            return bad("S must consist of positions i > 1 with n_i even");
        }
        if self.odd & !l.odd != 0 {
            return bad("exterior factor must use positions i > 1 with n_i odd");
        }
        let s = self.even.count_ones() as u64;
        match self.family {
            IntFamily::A { j } if s % 2 == 0 && j as u64 <= l.m1 => Ok(()),
            IntFamily::A { .. } => bad("A needs |S| even and j <= m_1"),
            IntFamily::B if s % 2 != l.eps => Ok(()),
            IntFamily::B => bad("B needs |S| ≢ ε"),
            IntFamily::C { j } if s % 2 == 1 && (j as u64) < l.m1 + l.eps => Ok(()),
            IntFamily::C { .. } => bad("C needs |S| odd and j < m_1 + ε"),
        }
    }

    pub fn degree(&self, t: &Tuple) -> u64 {
        let weight = |mask| positions_iter(mask).map(|i| t.entry(i) as u64).sum::<u64>();
        let base = match self.family {
            IntFamily::A { j } => 2 * j as u64,
            IntFamily::B => t.min() as u64,
            IntFamily::C { j } => 1 + 2 * j as u64,
        };
        base + weight(self.even) + weight(self.odd)
    }

    /// Additive order: `None` for infinite cyclic.
    pub fn order(&self) -> Option<u64> {
        match self.family {
            IntFamily::A { j: 0 } | IntFamily::B => None,
            _ => Some(2),
        }
    }

    fn family_degree_parity(&self, t: &Tuple) -> u64 {
        self.degree(t)
            - positions_iter(self.odd)
                .map(|i| t.entry(i) as u64)
                .sum::<u64>()
    }
}

impl fmt::Display for IntGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let z = |j: u32| match j {
            0 => None,
            1 => Some("z".to_string()),
            j => Some(format!("z^{j}")),
        };
        let xs = |mask| {
            positions_iter(mask)
                .map(|i| format!("x{{{i}}}"))
                .collect::<Vec<_>>()
        };
        match self.family {
            IntFamily::A { j } => {
                parts.extend(z(j));
                parts.extend(xs(self.even));
            }
            IntFamily::B => {
                parts.push("2x{1}".to_string());
                parts.extend(xs(self.even));
            }
            IntFamily::C { j } => {
                parts.extend(z(j));
                let s: Vec<String> = positions_iter(self.even).map(|i| i.to_string()).collect();
                parts.push(format!("p{{{}}}", s.join(",")));
            }
        }
        parts.extend(xs(self.odd));
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// All integral generators of degree `d`. Exponential in `r`; intended for
/// small tuples.
pub fn integral_generators(t: &Tuple, d: u64) -> Vec<IntGenerator> {
    let l = Layout::new(t);
    let mut out = Vec::new();
    for even in submasks(l.even) {
        for odd in submasks(l.odd) {
            let s = even.count_ones() as u64;
            let mut push = |family| {
                let g = IntGenerator { family, even, odd };
                if g.degree(t) == d {
                    out.push(g);
                }
            };
            if s % 2 == 0 {
                for j in 0..=l.m1 as u32 {
                    push(IntFamily::A { j });
                }
            }
            if s % 2 != l.eps {
                push(IntFamily::B);
            }
            if s % 2 == 1 {
                for j in 0..(l.m1 + l.eps) as u32 {
                    push(IntFamily::C { j });
                }
            }
        }
    }
    out.sort();
    out
}

fn submasks(mask: Positions) -> impl Iterator<Item = Positions> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = (cur != 0).then(|| (cur - 1) & mask);
        Some(cur)
    })
}

/// Sign of `x_{O1} · x_{O2}` rewritten in increasing order, or `None` if
/// the factors overlap.
fn exterior_sign(o1: Positions, o2: Positions) -> Option<i64> {
    if o1 & o2 != 0 {
        return None;
    }
    let inversions: u32 = positions_iter(o2)
        .map(|j| (o1 >> j).count_ones()) // positions in o1 greater than j
        .sum();
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}

/// A formal integer combination of generators.
pub type Combination<G> = Vec<(G, i64)>;

fn normalize_combination<G: Ord + Copy>(
    terms: Combination<G>,
    order: impl Fn(&G) -> Option<u64>,
) -> Combination<G> {
    let mut acc: BTreeMap<G, i64> = BTreeMap::new();
    for (g, c) in terms {
        *acc.entry(g).or_default() += c;
    }
    acc.into_iter()
        .map(|(g, c)| match order(&g) {
            Some(m) => (g, c.rem_euclid(m as i64)),
            None => (g, c),
        })
        .filter(|&(_, c)| c != 0)
        .collect()
}

/// Product of two integral generators.
pub fn integral_product(
    t: &Tuple,
    g1: &IntGenerator,
    g2: &IntGenerator,
) -> Result<Combination<IntGenerator>> {
    g1.validate(t)?;
    g2.validate(t)?;
    let l = Layout::new(t);
    let Some(mut sign) = exterior_sign(g1.odd, g2.odd) else {
        return Ok(Vec::new());
    };
    // move x_{O1} past the family part of g2
    if g1.odd.count_ones() % 2 == 1 && g2.family_degree_parity(t) % 2 == 1 {
        sign = -sign;
    }
    if g1.even & g2.even != 0 {
        return Ok(Vec::new());
    }
    let even = g1.even | g2.even;
    let odd = g1.odd | g2.odd;
    let family = match (g1.family, g2.family) {
        (IntFamily::A { j: a }, IntFamily::A { j: b }) if (a + b) as u64 <= l.m1 => {
            Some(IntFamily::A { j: a + b })
        }
        (IntFamily::A { j: 0 }, IntFamily::B) | (IntFamily::B, IntFamily::A { j: 0 }) => {
            Some(IntFamily::B)
        }
        (IntFamily::A { j: a }, IntFamily::C { j: b })
        | (IntFamily::C { j: b }, IntFamily::A { j: a })
            if ((a + b) as u64) < l.m1 + l.eps =>
        {
            Some(IntFamily::C { j: a + b })
        }
        _ => None,
    };
    Ok(match family {
        Some(family) => {
            let g = IntGenerator { family, even, odd };
            normalize_combination(vec![(g, sign)], IntGenerator::order)
        }
        None => Vec::new(),
    })
}

/// Generator families of `K^*(P_n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KFamily {
    /// `∏_S x`, infinite cyclic.
    One,
    /// `g ∏_S x` with `g = 1 - ξ`, order `2^{m_1}`.
    G,
    /// `2x_1 ∏_S x`, infinite cyclic.
    B,
    /// `p_S`, order `2^{m_1+ε}`.
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KGenerator {
    pub family: KFamily,
    pub even: Positions,
    pub odd: Positions,
}

impl KGenerator {
    pub fn one() -> Self {
        KGenerator {
            family: KFamily::One,
            even: 0,
            odd: 0,
        }
    }

    pub fn g() -> Self {
        KGenerator {
            family: KFamily::G,
            ..KGenerator::one()
        }
    }

    pub fn validate(&self, t: &Tuple) -> Result<()> {
        let l = Layout::new(t);
        let bad = |why: &str| {
            Err(Error::domain(format!(
                "invalid K-generator {self:?}: {why}"
            )))
        };
        if self.even & !l.even != 0 || self.odd & !l.odd != 0 {
            return bad("subset outside the admissible positions");
        }
        let s = self.even.count_ones() as u64 % 2;
        match self.family {
            KFamily::One if s == 0 => Ok(()),
            KFamily::G if s == 0 && l.m1 > 0 => Ok(()),
            KFamily::G if s == 0 => bad("g vanishes when m_1 = 0"),
            KFamily::B if s != l.eps => Ok(()),
            KFamily::C if s == 1 => Ok(()),
            _ => bad("subset parity does not match the family"),
        }
    }

    /// Grading in `Z/2`.
    pub fn grade(&self, t: &Tuple) -> u64 {
        (self.family_grade(t) + self.odd.count_ones() as u64) % 2
    }

    fn family_grade(&self, t: &Tuple) -> u64 {
        match self.family {
            KFamily::One | KFamily::G => 0,
            KFamily::B => t.min() as u64 % 2,
            KFamily::C => 1,
        }
    }

    /// Additive order: `None` for infinite cyclic.
    pub fn order(&self, t: &Tuple) -> Option<u64> {
        let l = Layout::new(t);
        match self.family {
            KFamily::One | KFamily::B => None,
            KFamily::G => Some(1 << l.m1),
            KFamily::C => Some(1 << (l.m1 + l.eps)),
        }
    }
}

impl fmt::Display for KGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xs = |mask| {
            positions_iter(mask)
                .map(|i| format!("x{{{i}}}"))
                .collect::<Vec<_>>()
        };
        let mut parts = Vec::new();
        match self.family {
            KFamily::One => parts.extend(xs(self.even)),
            KFamily::G => {
                parts.push("g".to_string());
                parts.extend(xs(self.even));
            }
            KFamily::B => {
                parts.push("2x{1}".to_string());
                parts.extend(xs(self.even));
            }
            KFamily::C => {
                let s: Vec<String> = positions_iter(self.even).map(|i| i.to_string()).collect();
                parts.push(format!("p{{{}}}", s.join(",")));
            }
        }
        parts.extend(xs(self.odd));
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// `(K^0, K^1)`.
pub fn k_groups(t: &Tuple) -> (AbelianGroup, AbelianGroup) {
    let l = Layout::new(t);
    // number of subsets of a k-element set with even / odd cardinality
    let split = |k: u32| -> [u128; 2] {
        if k == 0 {
            [1, 0]
        } else {
            let half = 1u128 << (k - 1);
            [half, half]
        }
    };
    let e = split(l.even.count_ones());
    let o = split(l.odd.count_ones());
    let mut groups = [AbelianGroup::zero(), AbelianGroup::zero()];
    for (s_par, &s_count) in e.iter().enumerate() {
        for (o_par, &o_count) in o.iter().enumerate() {
            let n = s_count * o_count;
            if n == 0 {
                continue;
            }
            let s_par = s_par as u64;
            let o_par = o_par as u64;
            if s_par == 0 {
                let g = &mut groups[o_par as usize];
                g.free_rank += n;
                if l.m1 > 0 {
                    g.add_cyclic(1 << l.m1, n);
                }
            }
            if s_par != l.eps {
                groups[((l.eps + o_par) % 2) as usize].free_rank += n;
            }
            if s_par == 1 {
                groups[((1 + o_par) % 2) as usize].add_cyclic(1 << (l.m1 + l.eps), n);
            }
        }
    }
    let [k0, k1] = groups;
    (k0, k1)
}

/// Product of two K-theory generators.
pub fn k_product(t: &Tuple, g1: &KGenerator, g2: &KGenerator) -> Result<Combination<KGenerator>> {
    g1.validate(t)?;
    g2.validate(t)?;
    let Some(mut sign) = exterior_sign(g1.odd, g2.odd) else {
        return Ok(Vec::new());
    };
    if g1.odd.count_ones() % 2 == 1 && g2.family_grade(t) == 1 {
        sign = -sign;
    }
    if g1.even & g2.even != 0 {
        return Ok(Vec::new());
    }
    use KFamily::*;
    let (family, coefficient) = match (g1.family, g2.family) {
        (One, f) | (f, One) => (f, 1),
        (G, G) => (G, 2),
        (G, C) | (C, G) => (C, 2),
        _ => return Ok(Vec::new()),
    };
    let g = KGenerator {
        family,
        even: g1.even | g2.even,
        odd: g1.odd | g2.odd,
    };
    Ok(normalize_combination(vec![(g, sign * coefficient)], |g| {
        g.order(t)
    }))
}

/// Bilinear extension of [`integral_product`].
pub fn integral_product_sum(
    t: &Tuple,
    a: &Combination<IntGenerator>,
    b: &Combination<IntGenerator>,
) -> Result<Combination<IntGenerator>> {
    let mut terms = Vec::new();
    for (g1, c1) in a {
        for (g2, c2) in b {
            for (g, c) in integral_product(t, g1, g2)? {
                terms.push((g, c * c1 * c2));
            }
        }
    }
    Ok(normalize_combination(terms, IntGenerator::order))
}

/// Bilinear extension of [`k_product`].
pub fn k_product_sum(
    t: &Tuple,
    a: &Combination<KGenerator>,
    b: &Combination<KGenerator>,
) -> Result<Combination<KGenerator>> {
    let mut terms = Vec::new();
    for (g1, c1) in a {
        for (g2, c2) in b {
            for (g, c) in k_product(t, g1, g2)? {
                terms.push((g, c * c1 * c2));
            }
        }
    }
    Ok(normalize_combination(terms, |g| g.order(t)))
}

/// All K-theory generators. Exponential in `r`.
pub fn k_generators(t: &Tuple) -> Vec<KGenerator> {
    let l = Layout::new(t);
    let mut out = Vec::new();
    for even in submasks(l.even) {
        for odd in submasks(l.odd) {
            for family in [KFamily::One, KFamily::G, KFamily::B, KFamily::C] {
                let g = KGenerator { family, even, odd };
                if g.validate(t).is_ok() {
                    out.push(g);
                }
            }
        }
    }
    out.sort();
    out
}
