//! Bound-composition engine for the geometric dimension of multiples of the
//! Hopf line bundle `ξ_n` over `RP^n`.
//!
//! The stable class of `kξ_n` depends only on `k mod 2^φ(n)`. Each known
//! result is a [`Rule`] that, when its hypothesis holds, contributes an
//! interval `[lower, upper]` (an exact value when `lower == upper`). The
//! answer is the intersection of every interval that fired, and the list of
//! firings is kept as provenance.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::binarith::phi;
use crate::error::{Error, Result};

/// Representatives `residue + t·2^φ(n)` are tried for `t` in `1..=MAX_T`.
pub const MAX_T: u64 = 16;

/// The stable class `kξ_n` over `RP^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HopfMultiple {
    pub k: i64,
    pub n: u32,
}

impl HopfMultiple {
    pub fn new(k: i64, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("base dimension n must be at least 1"));
        }
        Ok(HopfMultiple { k, n })
    }

    /// `φ(n)`: `2^φ(n) ξ_n` is stably trivial.
    pub fn period_log2(&self) -> u64 {
        phi(self.n as u64)
    }
}

/// A class reduced modulo its period together with the positive
/// representatives the engine inspects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub residue: BigUint,
    pub representatives: Vec<BigUint>,
}

pub fn normalize(hm: HopfMultiple) -> Normalized {
    let modulus = BigUint::one() << hm.period_log2();
    let residue = reduce(hm.k, &modulus);
    let representatives = (1..=MAX_T)
        .map(|t| &residue + &modulus * t)
        .filter(|rep| *rep > BigUint::from(hm.n))
        .collect();
    Normalized {
        residue,
        representatives,
    }
}

fn reduce(k: i64, modulus: &BigUint) -> BigUint {
    let magnitude = BigUint::from(k.unsigned_abs()) % modulus;
    if k >= 0 || magnitude.is_zero() {
        magnitude
    } else {
        modulus - magnitude
    }
}

/// Known results about `gd(kξ_n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// Obstruction theory: a stable bundle over an n-complex has gd at most n.
    ObstructionUpper,
    /// The class is stably trivial iff the residue vanishes.
    StableTriviality,
    /// Lam's Stiefel-Whitney lower bound `m_0`.
    LamLower,
    /// Lam's sufficient condition for equality with `m_0`.
    LamEquality,
    /// Hard-coded answers for `n <= 9`.
    SmallDimension,
    /// Adams and Lam-Randall classification of gd at most 5, `n >= 18`.
    AdamsLamRandall,
    /// Adams-operation bound on sections of `mξ_n`.
    AdamsOperations,
    /// Brown-Peterson lower bound.
    BrownPeterson,
}

impl Rule {
    pub const ALL: [Rule; 8] = [
        Rule::ObstructionUpper,
        Rule::StableTriviality,
        Rule::LamLower,
        Rule::LamEquality,
        Rule::SmallDimension,
        Rule::AdamsLamRandall,
        Rule::AdamsOperations,
        Rule::BrownPeterson,
    ];

    /// The rules that do not rely on any table or classification.
    pub const GENERAL: [Rule; 6] = [
        Rule::ObstructionUpper,
        Rule::StableTriviality,
        Rule::LamLower,
        Rule::LamEquality,
        Rule::AdamsOperations,
        Rule::BrownPeterson,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Rule::ObstructionUpper => "R0",
            Rule::StableTriviality => "R1",
            Rule::LamLower => "R2",
            Rule::LamEquality => "R3",
            Rule::SmallDimension => "R4",
            Rule::AdamsLamRandall => "R5",
            Rule::AdamsOperations => "R6",
            Rule::BrownPeterson => "R7",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One rule application: the interval it asserts and the data that made it
/// fire.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Firing {
    pub rule: String,
    pub lower: u64,
    pub upper: u64,
    pub exact: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representative: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<u64>,
    pub note: String,
}

impl Firing {
    pub(crate) fn new(
        rule: impl Into<String>,
        lower: u64,
        upper: u64,
        note: impl Into<String>,
    ) -> Self {
        Firing {
            rule: rule.into(),
            lower,
            upper,
            exact: false,
            representative: None,
            s: None,
            note: note.into(),
        }
    }

    pub(crate) fn exact(rule: impl Into<String>, value: u64, note: impl Into<String>) -> Self {
        Firing {
            exact: true,
            ..Firing::new(rule, value, value, note)
        }
    }

    fn with_representative(mut self, rep: &BigUint) -> Self {
        self.representative = Some(rep.to_string());
        self
    }

    fn with_s(mut self, s: u64) -> Self {
        self.s = Some(s);
        self
    }
}

/// An integer interval with the rule applications that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub lower: u64,
    pub upper: u64,
    pub exact: bool,
    pub provenance: Vec<Firing>,
}

impl Bound {
    /// Intersects all firings. Exact firings must agree with each other and
    /// with every other interval.
    pub fn compose(provenance: Vec<Firing>) -> Result<Bound> {
        if provenance.is_empty() {
            return Err(Error::Inconsistent("no rule fired".into()));
        }
        let lower = provenance.iter().map(|f| f.lower).max().unwrap_or(0);
        let upper = provenance.iter().map(|f| f.upper).min().unwrap_or(0);
        let mut exact: Option<&Firing> = None;
        for f in provenance.iter().filter(|f| f.exact) {
            match exact {
                Some(prev) if prev.lower != f.lower => {
                    return Err(Error::Inconsistent(format!(
                        "{} claims exact {} but {} claims exact {}",
                        prev.rule, prev.lower, f.rule, f.lower
                    )));
                }
                _ => exact = Some(f),
            }
        }
        if let Some(e) = exact {
            if let Some(f) = provenance
                .iter()
                .find(|f| e.lower < f.lower || e.lower > f.upper)
            {
                return Err(Error::Inconsistent(format!(
                    "{} claims exact {} outside [{}, {}] from {}",
                    e.rule, e.lower, f.lower, f.upper, f.rule
                )));
            }
        } else if lower > upper {
            return Err(Error::Inconsistent(format!(
                "empty interval [{lower}, {upper}]"
            )));
        }
        Ok(Bound {
            lower,
            upper,
            exact: lower == upper,
            provenance,
        })
    }

    pub fn contains(&self, value: u64) -> bool {
        self.lower <= value && value <= self.upper
    }

    pub fn value(&self) -> Option<u64> {
        self.exact.then_some(self.lower)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact {
            write!(f, "{}", self.lower)
        } else {
            write!(f, "[{}, {}]", self.lower, self.upper)
        }
    }
}

/// A representative with the bit data the rules inspect.
struct Representative<'a> {
    value: &'a BigUint,
    low: u64,
    trailing_zeros: u64,
}

impl<'a> Representative<'a> {
    fn new(value: &'a BigUint) -> Self {
        Representative {
            value,
            low: low_word(value),
            trailing_zeros: value.trailing_zeros().unwrap_or(0),
        }
    }
}

fn low_word(x: &BigUint) -> u64 {
    x.iter_u64_digits().next().unwrap_or(0)
}

/// `ν C(K/2 + s, n/2 - s)` for all `s` with `K` fixed.
///
/// Counts borrows in the subtraction `a - b` with `a = K/2 + s`,
/// `b = n/2 - s`: the low 64 bits are handled by digit sums, and a borrow
/// out of bit 63 runs through the trailing zeros of the high part.
struct HalfBorrows {
    low: u64,
    high_trailing_zeros: u64,
    high_trailing_ones: u64,
}

impl HalfBorrows {
    fn new(k: &BigUint) -> Self {
        let half: BigUint = k >> 1u32;
        let high: BigUint = &half >> 64u32;
        HalfBorrows {
            low: low_word(&half),
            high_trailing_zeros: high.trailing_zeros().unwrap_or(0),
            high_trailing_ones: (&high + 1u32).trailing_zeros().unwrap_or(0),
        }
    }

    fn nu(&self, s: u64, b: u64) -> u64 {
        let (a_low, carry) = self.low.overflowing_add(s);
        let (d, borrow_out) = a_low.overflowing_sub(b);
        // With a' = a_low + borrow_out·2^64 we have a' - b = d exactly.
        let low_borrows = (b.count_ones() + d.count_ones()) as u64
            - a_low.count_ones() as u64
            - borrow_out as u64;
        // A borrow out of bit 63 is already counted above; it keeps going
        // through every zero of the high part.
        let chain = if borrow_out {
            if carry {
                self.high_trailing_ones
            } else {
                self.high_trailing_zeros
            }
        } else {
            0
        };
        low_borrows + chain
    }
}

/// Largest `m <= n` whose binary digits are a subset of those of `k`.
fn largest_submask_at_most(k: u64, n: u64) -> u64 {
    let mut m = 0u64;
    for b in (0..64).rev() {
        let bit = 1u64 << b;
        if k & bit != 0 && (m | bit) <= n {
            m |= bit;
        }
    }
    m
}

/// `gd(kξ_9)` for `k ≡ 16i + Δ (mod 32)`.
fn gd_nine(residue: u64) -> u64 {
    let i_odd = residue >= 16;
    let delta = residue % 16;
    match delta {
        9 | 11 | 13 | 15 => 9,
        8 | 10 | 12 | 14 => 8,
        _ if !i_odd => delta,
        6 | 7 => delta,
        0 | 2 | 3 | 5 => 6,
        _ => 5,
    }
}

/// Interval for the stable geometric dimension of `kξ_n` using every rule.
pub fn stable_gd(hm: HopfMultiple) -> Result<Bound> {
    stable_gd_with(hm, &Rule::ALL)
}

/// Interval for `gd(kξ_n)` restricted to the given rules.
pub fn stable_gd_with(hm: HopfMultiple, rules: &[Rule]) -> Result<Bound> {
    let n = hm.n as u64;
    let phi_n = hm.period_log2();
    let Normalized {
        residue,
        representatives,
    } = normalize(hm);
    let reps: Vec<Representative> = representatives.iter().map(Representative::new).collect();
    let first = &reps[0];
    let uses = |r: Rule| rules.contains(&r);
    let mut firings = Vec::new();

    firings.push(Firing::new(
        Rule::ObstructionUpper.id(),
        0,
        n,
        "gd of a stable bundle is at most the base dimension",
    ));

    if uses(Rule::StableTriviality) {
        if residue.is_zero() {
            firings.push(Firing::exact(
                Rule::StableTriviality.id(),
                0,
                format!("k ≡ 0 mod 2^{phi_n}: stably trivial"),
            ));
        } else {
            firings.push(Firing::new(
                Rule::StableTriviality.id(),
                1,
                n,
                format!("k ≢ 0 mod 2^{phi_n}: stably nontrivial"),
            ));
        }
    }

    // m_0 only sees bits below bitlen(n) <= φ(n), which every representative
    // shares with the residue.
    let m0 = largest_submask_at_most(first.low, n);
    if uses(Rule::LamLower) {
        firings.push(
            Firing::new(
                Rule::LamLower.id(),
                m0,
                n,
                format!("largest m <= {n} with C(K, m) odd is {m0}"),
            )
            .with_representative(first.value),
        );
    }

    if uses(Rule::LamEquality) {
        if let Some(rep) = reps.iter().find(|r| binom_odd_low(r.low >> 3, n >> 3)) {
            let note = if hm.k < 0 {
                format!(
                    "C([K/8], {}) odd: sufficient condition via representative K",
                    n / 8
                )
            } else {
                format!("C([K/8], {}) odd", n / 8)
            };
            firings.push(
                Firing::exact(Rule::LamEquality.id(), m0, note).with_representative(rep.value),
            );
        }
    }

    if uses(Rule::SmallDimension) {
        match n {
            1..=7 => firings.push(Firing::exact(
                Rule::SmallDimension.id(),
                m0,
                "n <= 7: Lam's bound is attained",
            )),
            8 => {
                let delta = residue.to_u64().unwrap_or(0);
                firings.push(Firing::exact(
                    Rule::SmallDimension.id(),
                    delta.min(8),
                    format!("k ≡ {delta} mod 16: gd = min(Δ, 8)"),
                ));
            }
            9 => {
                let r = residue.to_u64().unwrap_or(0);
                firings.push(Firing::exact(
                    Rule::SmallDimension.id(),
                    gd_nine(r),
                    format!(
                        "k ≡ {r} mod 32 = 16i+Δ with i {} and Δ = {}",
                        if r >= 16 { "odd" } else { "even" },
                        r % 16
                    ),
                ));
            }
            _ => {}
        }
    }

    if uses(Rule::AdamsLamRandall) && n >= 18 {
        if let Some(f) = adams_lam_randall(n, phi_n, &residue) {
            firings.push(f);
        }
    }

    if uses(Rule::AdamsOperations) {
        let best = reps
            .iter()
            .filter(|r| binom_odd_low(r.low.wrapping_sub(1), n))
            .map(|r| (n as i64 - 2 * r.trailing_zeros as i64 - 1, r))
            .max_by_key(|(lower, _)| *lower);
        if let Some((lower, rep)) = best {
            if lower > 0 {
                firings.push(
                    Firing::new(
                        Rule::AdamsOperations.id(),
                        lower as u64,
                        n,
                        format!(
                            "C(m-1, {n}) odd with ν(m) = {}: at most m-n+2ν(m)+1 sections",
                            rep.trailing_zeros
                        ),
                    )
                    .with_representative(rep.value),
                );
            }
        }
    }

    if uses(Rule::BrownPeterson) && n % 2 == 0 && first.low % 2 == 0 {
        if let Some(f) = brown_peterson(n, &reps) {
            firings.push(f);
        }
    }

    Bound::compose(firings)
}

fn binom_odd_low(k_low: u64, m: u64) -> bool {
    m & !k_low == 0
}

fn adams_lam_randall(n: u64, phi_n: u64, residue: &BigUint) -> Option<Firing> {
    let id = Rule::AdamsLamRandall.id();
    if let Some(d) = residue.to_u64().filter(|&d| d <= 4) {
        return Some(Firing::exact(id, d, format!("k ≡ {d} mod 2^{phi_n}")));
    }
    // residue is nonzero here, so its valuation is that of k
    let v = residue.trailing_zeros().unwrap_or(0);
    let n8 = n % 8;
    let five = (v + 1 == phi_n && n8 != 7) || (v + 2 == phi_n && matches!(n8, 2 | 4));
    if five {
        return Some(Firing::exact(id, 5, format!("ν(k) = {v}, n ≡ {n8} mod 8")));
    }
    let candidate = (v + 1 == phi_n && n8 == 7) || (v + 2 == phi_n && matches!(n8, 1 | 3 | 5));
    if v >= 2 && !candidate {
        return Some(Firing::new(
            id,
            6,
            n,
            format!("k ≡ 0 mod 4, ν(k) = {v}: gd is neither at most 4 nor 5"),
        ));
    }
    let note = if candidate {
        format!("ν(k) = {v}, n ≡ {n8} mod 8: gd 5 possible but not established")
    } else {
        format!("k ≢ 0,...,4 mod 2^{phi_n}")
    };
    Some(Firing::new(id, 5, n, note))
}

fn brown_peterson(n: u64, reps: &[Representative]) -> Option<Firing> {
    let half_n = n / 2;
    let mut best: Option<(u64, u64, &BigUint)> = None;
    for rep in reps {
        let borrows = HalfBorrows::new(rep.value);
        for s in 0..=half_n {
            if 6 * s >= n {
                break;
            }
            let lower = n - 6 * s;
            if best.is_some_and(|(b, _, _)| b >= lower) {
                break;
            }
            if borrows.nu(s, half_n - s) == s {
                best = Some((lower, s, rep.value));
                break;
            }
        }
    }
    best.map(|(lower, s, rep)| {
        Firing::new(
            Rule::BrownPeterson.id(),
            lower,
            n,
            format!("ν C(K/2+{s}, {}) = {s}", half_n - s),
        )
        .with_representative(rep)
        .with_s(s)
    })
}

/// Interval for `span(kξ_n) = k - gd(kξ_n)` when `k > n`.
pub fn span_multiple(k: i64, n: u32) -> Result<Bound> {
    if k <= n as i64 {
        return Err(Error::UnsupportedRange(format!(
            "span of kξ_n needs k > n, got k = {k}, n = {n}"
        )));
    }
    let gd = stable_gd(HopfMultiple::new(k, n)?)?;
    let k = k as u64;
    let mut provenance = gd.provenance;
    provenance.push(Firing::new(
        "span_complement",
        k - gd.upper,
        k - gd.lower,
        format!("span = {k} - gd since {k} > {n}"),
    ));
    Ok(Bound {
        lower: k - gd.upper,
        upper: k - gd.lower,
        exact: gd.exact,
        provenance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binarith::binom_nu;

    fn gd(k: i64, n: u32) -> Bound {
        stable_gd(HopfMultiple::new(k, n).unwrap()).unwrap()
    }

    #[test]
    fn n_eight_table() {
        for i in 0..3 {
            let b = gd(16 * i + 3, 8);
            assert_eq!(b.value(), Some(3));
        }
        assert_eq!(gd(16 + 12, 8).value(), Some(8));
    }

    #[test]
    fn trivial_multiples() {
        for n in 1..=30u32 {
            let period = 1i64 << phi(n as u64);
            for t in [-2, -1, 0, 1, 3] {
                assert_eq!(gd(period * t, n).value(), Some(0), "n={n} t={t}");
            }
        }
    }

    #[test]
    fn seven_over_rp2() {
        let b = gd(7, 2);
        assert_eq!(b.value(), Some(2));
        assert!(b.provenance.iter().any(|f| f.rule == "R3"));
    }

    #[test]
    fn n_nine_examples() {
        // 17 = 16·1 + 1 has i odd and Δ = 1.
        assert_eq!(gd(17, 9).value(), Some(5));
        // 33 ≡ 1 mod 32 is the class of ξ_9 itself.
        assert_eq!(gd(33, 9).value(), Some(1));
        assert_eq!(gd(1, 9).value(), Some(1));
    }

    #[test]
    fn span_examples() {
        assert_eq!(span_multiple(7, 2).unwrap().value(), Some(5));
        assert_eq!(span_multiple(16, 8).unwrap().value(), Some(16));
        for n in 1..=12u32 {
            let p = 1i64 << phi(n as u64);
            assert_eq!(span_multiple(p, n).unwrap().value(), Some(p as u64));
        }
        assert!(matches!(
            span_multiple(2, 2),
            Err(Error::UnsupportedRange(_))
        ));
    }

    #[test]
    fn normalize_examples() {
        let nz = normalize(HopfMultiple::new(-7, 2).unwrap());
        assert_eq!(nz.residue, BigUint::from(1u32));
        let reps: Vec<u64> = nz
            .representatives
            .iter()
            .map(|r| r.to_u64().unwrap())
            .collect();
        assert_eq!(&reps[..3], &[5, 9, 13]);
        assert_eq!(reps.len(), 16);
        assert_eq!(
            normalize(HopfMultiple::new(-8, 1).unwrap()).residue,
            BigUint::zero()
        );
        let nz = normalize(HopfMultiple::new(-5, 4).unwrap());
        assert_eq!(nz.residue, BigUint::from(3u32));
        assert_eq!(nz.representatives[0], BigUint::from(11u32));
    }

    #[test]
    fn zero_base_rejected() {
        assert!(HopfMultiple::new(3, 0).is_err());
    }

    #[test]
    fn submask_matches_brute_force() {
        for k in 0..300u64 {
            for n in 0..40u64 {
                let brute = (0..=n).rev().find(|m| m & !k == 0).unwrap();
                assert_eq!(largest_submask_at_most(k, n), brute, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn half_borrows_match_digit_sums() {
        // Compare against ν C(a, b) = α(b) + α(a-b) - α(a) on big integers.
        let bigs = [
            BigUint::from(0x1234u32) + (BigUint::one() << 200u32),
            (BigUint::one() << 130u32) - BigUint::from(6u32),
            BigUint::from(u64::MAX) * BigUint::from(4u32),
            (BigUint::one() << 65u32) - BigUint::from(2u32),
            BigUint::from(40u32),
        ];
        for k in &bigs {
            let hb = HalfBorrows::new(k);
            let half: BigUint = k >> 1u32;
            for s in 0..50u64 {
                for b in 0..50u64 {
                    let a = &half + s;
                    if a < BigUint::from(b) {
                        continue;
                    }
                    let diff = &a - b;
                    let expect = b.count_ones() as u64 + diff.count_ones() - a.count_ones();
                    assert_eq!(hb.nu(s, b), expect, "k={k} s={s} b={b}");
                }
            }
        }
        // small sanity against binarith
        let hb = HalfBorrows::new(&BigUint::from(8u32));
        assert_eq!(hb.nu(0, 2), binom_nu(2, 2) as u64);
    }

    #[test]
    fn large_base_dimension_is_fast_and_sound() {
        let b = gd(-(1 << 21), 1 << 20);
        assert!(b.lower <= b.upper && b.upper == 1 << 20);
        let b = gd(3, 400);
        assert_eq!(b.value(), Some(3));
    }

    #[test]
    fn adams_lam_randall_cases() {
        // n = 18: φ = 10.
        assert_eq!(gd(4, 18).value(), Some(4));
        assert_eq!(gd(512, 18).value(), Some(5));
        // ν = φ - 2 = 8 and n ≡ 2 mod 8.
        assert_eq!(gd(256, 18).value(), Some(5));
        let b = gd(8, 18);
        assert!(b.lower >= 6);
        // n = 23 ≡ 7 mod 8, ν = φ - 1: gd 5 only a candidate.
        let p = phi(23);
        let b = gd(1 << (p - 1), 23);
        assert!(b.lower >= 5 && !b.provenance.iter().any(|f| f.rule == "R5" && f.exact));
    }

    #[test]
    fn composition_rejects_conflicts() {
        let err = Bound::compose(vec![Firing::exact("a", 1, ""), Firing::exact("b", 2, "")]);
        assert!(matches!(err, Err(Error::Inconsistent(_))));
        let err = Bound::compose(vec![Firing::new("a", 3, 5, ""), Firing::exact("b", 2, "")]);
        assert!(matches!(err, Err(Error::Inconsistent(_))));
        assert!(Bound::compose(vec![]).is_err());
    }
}
