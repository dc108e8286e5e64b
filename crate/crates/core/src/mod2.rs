//! `H*(P_n; Z/2)` as an algebra over the Steenrod algebra.
//!
//! Additively this is `Z/2[y]/y^{n_1+1} ⊗ Λ[x_2, ..., x_r]` with `|y| = 1`
//! and `|x_i| = n_i`. The only deviation from a tensor product is the
//! square `x_i² = C(n_i+1, n_i) y^{n_i} x_i`, which is nonzero exactly when
//! `n_i = n_1` is even.
//!
//! Generators are indexed by position in the sorted tuple, so repeated
//! entries give distinct `x_i`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::binarith::binom_odd;
use crate::error::{Error, Result};
use crate::tuple::Tuple;

/// Bitmask of 1-based positions: bit `i - 1` stands for `x_i`.
pub type Positions = u64;

pub(crate) fn positions_iter(mut mask: Positions) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            b + 1
        })
    })
}

pub(crate) fn positions_from(indices: &[usize]) -> Positions {
    indices.iter().fold(0, |m, &i| m | 1 << (i - 1))
}

fn subset_weight(t: &Tuple, mask: Positions) -> u64 {
    positions_iter(mask).map(|i| t.entry(i) as u64).sum()
}

/// `y^a · ∏_{i∈S} x_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mod2Monomial {
    pub a: u32,
    pub positions: Positions,
}

impl Mod2Monomial {
    pub const ONE: Mod2Monomial = Mod2Monomial { a: 0, positions: 0 };

    /// Checked constructor: `a <= n_1` and every position in `2..=r`.
    pub fn new(t: &Tuple, a: u32, indices: &[usize]) -> Result<Self> {
        if indices.iter().any(|&i| i < 2 || i > t.len()) {
            return Err(Error::domain(format!(
                "generator index out of range 2..={} in {indices:?}",
                t.len()
            )));
        }
        let m = Mod2Monomial {
            a,
            positions: positions_from(indices),
        };
        m.validate(t)?;
        Ok(m)
    }

    pub fn validate(&self, t: &Tuple) -> Result<()> {
        if self.a > t.min() {
            return Err(Error::domain(format!(
                "y^{} vanishes since y^{} = 0",
                self.a,
                t.min() + 1
            )));
        }
        let allowed: Positions = if t.len() == 64 {
            !1
        } else {
            ((1u64 << t.len()) - 1) & !1
        };
        if self.positions & !allowed != 0 {
            return Err(Error::domain(format!(
                "monomial {self} refers to generators outside x{{2}}..x{{{}}}",
                t.len()
            )));
        }
        Ok(())
    }

    pub fn degree(&self, t: &Tuple) -> u64 {
        self.a as u64 + subset_weight(t, self.positions)
    }

    pub fn indices(&self) -> Vec<usize> {
        positions_iter(self.positions).collect()
    }

    /// Product of two monomials, or `None` when it vanishes.
    /// Product of two valid monomials; `None` when it vanishes.
    pub fn mul(&self, other: &Mod2Monomial, t: &Tuple) -> Option<Mod2Monomial> {
        let mut a = self.a as u64 + other.a as u64;
        for i in positions_iter(self.positions & other.positions) {
            let n = t.entry(i);
            // x_i² = C(n+1, n) y^n x_i, and C(n+1, n) = n+1.
            if n % 2 == 1 {
                return None;
            }
            a += n as u64;
        }
        (a <= t.min() as u64).then_some(Mod2Monomial {
            a: a as u32,
            positions: self.positions | other.positions,
        })
    }
}

impl Ord for Mod2Monomial {
    /// `a` ascending, then the position lists lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.a
            .cmp(&other.a)
            .then_with(|| positions_iter(self.positions).cmp(positions_iter(other.positions)))
    }
}

impl PartialOrd for Mod2Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mod2Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        match self.a {
            0 => {}
            1 => factors.push("y".to_string()),
            a => factors.push(format!("y^{a}")),
        }
        factors.extend(positions_iter(self.positions).map(|i| format!("x{{{i}}}")));
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

/// A formal Z/2-sum of monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Mod2Class {
    monomials: BTreeSet<Mod2Monomial>,
}

impl Mod2Class {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Mod2Monomial::ONE.into()
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Mod2Monomial> {
        self.monomials.iter()
    }

    /// Adds a monomial mod 2.
    pub fn toggle(&mut self, m: Mod2Monomial) {
        if !self.monomials.remove(&m) {
            self.monomials.insert(m);
        }
    }

    pub fn validate(&self, t: &Tuple) -> Result<()> {
        self.monomials.iter().try_for_each(|m| m.validate(t))
    }

    /// The common degree of all monomials; `None` for zero.
    pub fn degree(&self, t: &Tuple) -> Result<Option<u64>> {
        let mut degrees = self.monomials.iter().map(|m| m.degree(t));
        let Some(first) = degrees.next() else {
            return Ok(None);
        };
        if degrees.any(|d| d != first) {
            return Err(Error::domain(format!("class {self} is not homogeneous")));
        }
        Ok(Some(first))
    }

    /// Parses `y^a*x{i}*x{j} + ...`; `x2` is accepted for `x{2}`, and `0`
    /// and `1` denote the zero class and the unit.
    pub fn parse(t: &Tuple, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::domain("empty class"));
        }
        if s == "0" {
            return Ok(Mod2Class::zero());
        }
        let mut sum = Mod2Class::zero();
        for term in s.split('+') {
            let mut product = Mod2Class::one();
            for factor in term.split('*') {
                let factor = parse_factor(t, factor.trim())?;
                product = multiply(t, &product, &factor)?;
            }
            sum = sum + product;
        }
        Ok(sum)
    }
}

fn parse_factor(t: &Tuple, factor: &str) -> Result<Mod2Class> {
    let bad = || Error::domain(format!("cannot parse factor {factor:?}"));
    if factor == "1" {
        return Ok(Mod2Class::one());
    }
    if let Some(rest) = factor.strip_prefix('y') {
        let a = if rest.is_empty() {
            1
        } else {
            rest.strip_prefix('^')
                .and_then(|e| e.parse::<u32>().ok())
                .ok_or_else(bad)?
        };
        if a > t.min() {
            return Ok(Mod2Class::zero());
        }
        return Ok(Mod2Monomial::new(t, a, &[])?.into());
    }
    if let Some(rest) = factor.strip_prefix('x') {
        let digits = rest
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .unwrap_or(rest);
        let i: usize = digits.parse().map_err(|_| bad())?;
        return Ok(Mod2Monomial::new(t, 0, &[i])?.into());
    }
    Err(bad())
}

impl From<Mod2Monomial> for Mod2Class {
    fn from(m: Mod2Monomial) -> Self {
        Mod2Class {
            monomials: BTreeSet::from([m]),
        }
    }
}

impl FromIterator<Mod2Monomial> for Mod2Class {
    fn from_iter<I: IntoIterator<Item = Mod2Monomial>>(iter: I) -> Self {
        let mut c = Mod2Class::zero();
        for m in iter {
            c.toggle(m);
        }
        c
    }
}

impl std::ops::Add for Mod2Class {
    type Output = Mod2Class;

    fn add(mut self, rhs: Mod2Class) -> Mod2Class {
        for m in rhs.monomials {
            self.toggle(m);
        }
        self
    }
}

impl fmt::Display for Mod2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self.monomials.iter().map(|m| m.to_string()).collect();
        f.write_str(&terms.join(" + "))
    }
}

/// All monomials of degree `d`, in basis order.
pub fn basis(t: &Tuple, d: u64) -> Vec<Mod2Monomial> {
    let n1 = t.min() as u64;
    let mut out = Vec::new();
    let uppers: Vec<usize> = t.upper_positions().collect();
    fn walk(
        t: &Tuple,
        uppers: &[usize],
        d: u64,
        n1: u64,
        weight: u64,
        mask: Positions,
        out: &mut Vec<Mod2Monomial>,
    ) {
        let Some((&i, rest)) = uppers.split_first() else {
            if weight <= d && d - weight <= n1 {
                out.push(Mod2Monomial {
                    a: (d - weight) as u32,
                    positions: mask,
                });
            }
            return;
        };
        walk(t, rest, d, n1, weight, mask, out);
        let w = weight + t.entry(i) as u64;
        if w <= d {
            walk(t, rest, d, n1, w, mask | 1 << (i - 1), out);
        }
    }
    walk(t, &uppers, d, n1, 0, 0, &mut out);
    out.sort();
    out
}

/// Ring product.
pub fn multiply(t: &Tuple, u: &Mod2Class, v: &Mod2Class) -> Result<Mod2Class> {
    u.validate(t)?;
    v.validate(t)?;
    let mut out = Mod2Class::zero();
    for p in &u.monomials {
        for q in &v.monomials {
            if let Some(m) = p.mul(q, t) {
                out.toggle(m);
            }
        }
    }
    Ok(out)
}

/// A polynomial over Z/2 truncated above a fixed degree.
#[derive(Clone)]
struct TruncatedPoly {
    words: Vec<u64>,
    top: usize,
}

impl TruncatedPoly {
    /// `(1+y)^e` truncated to degrees `0..=top`.
    fn binomial(e: u64, top: usize) -> Self {
        let mut p = TruncatedPoly {
            words: vec![0; top / 64 + 1],
            top,
        };
        for j in 0..=top {
            if binom_odd(e as i64, j as u64) {
                p.words[j / 64] |= 1 << (j % 64);
            }
        }
        p
    }

    fn coeff(&self, j: usize) -> bool {
        self.words[j / 64] >> (j % 64) & 1 == 1
    }

    /// Carry-less product, truncated: one shifted copy of `other` per set
    /// bit of `self`.
    fn mul(&self, other: &TruncatedPoly) -> TruncatedPoly {
        let len = self.words.len();
        let mut words = vec![0u64; len];
        for (wi, &word) in self.words.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let shift = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let (skip, off) = (shift / 64, shift % 64);
                for j in 0..len - skip {
                    words[j + skip] ^= other.words[j] << off;
                    if off > 0 && j + skip + 1 < len {
                        words[j + skip + 1] ^= other.words[j] >> (64 - off);
                    }
                }
            }
        }
        let spare = 63 - self.top % 64;
        words[len - 1] &= u64::MAX >> spare;
        TruncatedPoly {
            words,
            top: self.top,
        }
    }
}

impl Mod2Monomial {
    /// `Sq^k` of one monomial, by the Cartan formula over its factors:
    /// `Sq(y^a) = y^a (1+y)^a` and `Sq(x_i) = x_i (1+y)^{n_i+1}`.
    pub fn sq(&self, t: &Tuple, k: u64) -> Option<Mod2Monomial> {
        let room = t.min() as u64 - self.a as u64;
        if k > room {
            return None;
        }
        let top = k as usize;
        let total = positions_iter(self.positions)
            .fold(TruncatedPoly::binomial(self.a as u64, top), |acc, i| {
                acc.mul(&TruncatedPoly::binomial(t.entry(i) as u64 + 1, top))
            });
        total.coeff(top).then_some(Mod2Monomial {
            a: self.a + k as u32,
            positions: self.positions,
        })
    }
}

/// `Sq^k(u)` for a homogeneous class `u`.
pub fn sq(t: &Tuple, k: u64, u: &Mod2Class) -> Result<Mod2Class> {
    u.validate(t)?;
    u.degree(t)?;
    Ok(u.monomials.iter().filter_map(|m| m.sq(t, k)).collect())
}

/// Ranks of `H^d(P_n; Z/2)` for `d = 0..=|n|`: the coefficients of
/// `(1 + t + ... + t^{n_1}) ∏_{i>=2} (1 + t^{n_i})`.
pub fn poincare_poly(t: &Tuple) -> Vec<u128> {
    let dim = t.dim() as usize;
    let n1 = t.min() as usize;
    let mut coeffs = vec![0u128; dim + 1];
    coeffs[..=n1].iter_mut().for_each(|c| *c = 1);
    let mut reach = n1;
    for &n in &t.entries()[1..] {
        let n = n as usize;
        for d in (n..=reach + n).rev() {
            coeffs[d] += coeffs[d - n];
        }
        reach += n;
    }
    coeffs
}

/// `χ(P_n) = ½ ∏ (1 + (-1)^{n_i})`.
pub fn euler_char(t: &Tuple) -> i128 {
    if t.entries().iter().all(|n| n % 2 == 0) {
        1i128 << (t.len() - 1)
    } else {
        0
    }
}

/// Kervaire semicharacteristic: sum of even-degree mod-2 ranks, mod 2.
pub fn kervaire_semichar(t: &Tuple) -> Result<u8> {
    if t.dim() % 2 == 0 {
        return Err(Error::domain("semicharacteristic requires odd dimension"));
    }
    let even: u128 = poincare_poly(t)
        .iter()
        .step_by(2)
        .fold(0, |acc, c| acc ^ (c & 1));
    Ok(even as u8)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tup(s: &str) -> Tuple {
        s.parse().unwrap()
    }

    fn class(t: &Tuple, s: &str) -> Mod2Class {
        Mod2Class::parse(t, s).unwrap()
    }

    #[test]
    fn basis_examples() {
        let t = tup("2,3");
        let show = |d| {
            basis(&t, d)
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(show(2), vec!["y^2"]);
        assert_eq!(show(5), vec!["y^2*x{2}"]);
        assert_eq!(show(0), vec!["1"]);
        assert!(show(6).is_empty());
        let t = tup("4");
        assert_eq!(basis(&t, 0), vec![Mod2Monomial::ONE]);
    }

    #[test]
    fn basis_order_is_a_then_lexicographic() {
        let t = tup("3,1,1,2");
        // sorted: (1,1,2,3)
        let b = basis(&t, 3);
        let shown: Vec<String> = b.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, vec!["x{2}*x{3}", "x{4}", "y*x{3}"]);
        let mut sorted = b.clone();
        sorted.sort();
        assert_eq!(b, sorted);
        assert!(b.windows(2).all(|w| w[0].a <= w[1].a));
    }

    #[test]
    fn square_rule() {
        let t = tup("2,2");
        assert_eq!(
            multiply(&t, &class(&t, "x{2}"), &class(&t, "x{2}")).unwrap(),
            class(&t, "y^2*x{2}")
        );
        let t = tup("2,3");
        assert!(multiply(&t, &class(&t, "x2"), &class(&t, "x2"))
            .unwrap()
            .is_zero());
        let t = tup("2,4");
        assert!(multiply(&t, &class(&t, "x2"), &class(&t, "x2"))
            .unwrap()
            .is_zero());
        let u = class(&t, "y*x{2} + y^2");
        assert_eq!(multiply(&t, &Mod2Class::one(), &u).unwrap(), u);
    }

    #[test]
    fn foreign_monomials_rejected() {
        let t = tup("2,3");
        let big = Mod2Class::from(Mod2Monomial { a: 3, positions: 0 });
        assert!(multiply(&t, &big, &Mod2Class::one()).is_err());
        let outside = Mod2Class::from(Mod2Monomial {
            a: 0,
            positions: 1 << 2,
        });
        assert!(multiply(&t, &outside, &Mod2Class::one()).is_err());
        assert!(Mod2Class::parse(&t, "x{3}").is_err());
        assert!(Mod2Class::parse(&t, "x{1}").is_err());
        assert!(Mod2Class::parse(&t, "x{0}").is_err());
        assert!(Mod2Class::parse(&t, "x{99}").is_err());
        assert!(Mod2Class::parse(&t, "z").is_err());
    }

    #[test]
    fn parse_and_display() {
        let t = tup("3,5");
        let u = class(&t, "y^2*x{2} + y");
        assert_eq!(u.to_string(), "y + y^2*x{2}");
        assert_eq!(class(&t, "y*y*y*y").to_string(), "0");
        assert_eq!(class(&t, "y + y").to_string(), "0");
        assert_eq!(class(&t, "0").to_string(), "0");
    }

    #[test]
    fn steenrod_examples() {
        let t = tup("3,5");
        assert_eq!(sq(&t, 1, &class(&t, "y")).unwrap(), class(&t, "y^2"));
        assert_eq!(
            sq(&t, 2, &class(&t, "x{2}")).unwrap(),
            class(&t, "y^2*x{2}")
        );
        let u = class(&t, "y*x{2}");
        assert_eq!(sq(&t, 0, &u).unwrap(), u);
        assert!(sq(&t, 1, &class(&t, "y + x{2}")).is_err());
        assert!(sq(&t, 3, &Mod2Class::zero()).unwrap().is_zero());
    }

    #[test]
    fn poincare_examples() {
        assert_eq!(poincare_poly(&tup("2,3")), vec![1; 6]);
        assert_eq!(poincare_poly(&tup("6")), vec![1; 7]);
        assert_eq!(poincare_poly(&tup("2,2")), vec![1, 1, 2, 1, 1]);
        let t = tup("3,4,4");
        assert_eq!(poincare_poly(&t).iter().sum::<u128>(), 4 * 4);
    }

    #[test]
    fn euler_and_semichar() {
        assert_eq!(euler_char(&tup("2")), 1);
        assert_eq!(euler_char(&tup("2,4")), 2);
        assert_eq!(euler_char(&tup("2,3")), 0);
        assert_eq!(kervaire_semichar(&tup("2,3")), Ok(1));
        assert_eq!(kervaire_semichar(&tup("1,1,1")), Ok(0));
        assert_eq!(kervaire_semichar(&tup("5")), Ok(1));
        assert_eq!(kervaire_semichar(&tup("3")), Ok(0));
        assert!(kervaire_semichar(&tup("2,4")).is_err());
    }

    #[test]
    fn truncated_product_matches_convolution() {
        for top in [0usize, 5, 63, 64, 130] {
            for (e, f) in [(3u64, 5u64), (7, 9), (100, 27), (255, 1)] {
                let p = TruncatedPoly::binomial(e, top).mul(&TruncatedPoly::binomial(f, top));
                for j in 0..=top {
                    let naive = (0..=j)
                        .filter(|&i| {
                            binom_odd(e as i64, i as u64) && binom_odd(f as i64, (j - i) as u64)
                        })
                        .count()
                        % 2
                        == 1;
                    assert_eq!(p.coeff(j), naive, "top={top} e={e} f={f} j={j}");
                }
                if top % 64 != 63 {
                    assert_eq!(p.words.last().unwrap() >> (top % 64 + 1), 0);
                }
            }
        }
    }
}
