//! Manifold invariants of `P_n`: immersion dimension, span, stable span,
//! parallelizability and orientability.
//!
//! The tangent data reduce to multiples of `ξ_{n_1}`:
//! `imm = |n| + max(gd(-(|n|+r)ξ_{n_1}), 1)` and
//! `stablespan = span((|n|+r)ξ_{n_1}) - r`.

use serde::{Deserialize, Serialize};

use crate::binarith::phi;
use crate::error::Result;
use crate::gvfp::{span_multiple, stable_gd, Bound, Firing, HopfMultiple};
use crate::mod2::{euler_char, kervaire_semichar, poincare_poly};
use crate::splitting::{sphere_factors, summand_count, SphereFactors};
use crate::tuple::Tuple;

/// `|n| + r`, the multiple of `ξ_{n_1}` that governs the tangent bundle.
fn twist(t: &Tuple) -> u64 {
    t.dim() + t.len() as u64
}

pub fn orientable(t: &Tuple) -> bool {
    twist(t) % 2 == 0
}

fn all_even(t: &Tuple) -> bool {
    t.entries().iter().all(|n| n % 2 == 0)
}

fn as_k(v: u64) -> i64 {
    // |n| + r <= 64·(2^20 + 1), far inside i64
    v as i64
}

pub fn imm_bounds(t: &Tuple) -> Result<Bound> {
    let gd = stable_gd(HopfMultiple::new(-as_k(twist(t)), t.min())?)?;
    let dim = t.dim();
    let lower = dim + gd.lower.max(1);
    let upper = dim + gd.upper.max(1);
    let mut provenance = gd.provenance;
    provenance.push(Firing::new(
        "immersion",
        lower,
        upper,
        format!("imm = {dim} + max(gd(-{}ξ_{}), 1)", twist(t), t.min()),
    ));
    Ok(Bound {
        lower,
        upper,
        exact: lower == upper,
        provenance,
    })
}

pub fn stablespan_bounds(t: &Tuple) -> Result<Bound> {
    let r = t.len() as u64;
    let span = span_multiple(as_k(twist(t)), t.min())?;
    let mut provenance = span.provenance;
    let (lower, upper) = (span.lower - r, span.upper - r);
    provenance.push(Firing::new(
        "stablespan",
        lower,
        upper,
        format!("stablespan = span({}ξ_{}) - {r}", twist(t), t.min()),
    ));
    Ok(Bound {
        lower,
        upper,
        exact: lower == upper,
        provenance,
    })
}

/// Which case decided the span.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExactnessCase {
    AllEvenZero,
    EvenDimKoschorke,
    #[serde(rename = "dim3mod8-koschorke")]
    Dim3Mod8Koschorke,
    Parallelizable,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanResult {
    pub span: Bound,
    pub stablespan: Bound,
    pub exactness_case: ExactnessCase,
}

pub fn span_bounds(t: &Tuple) -> Result<SpanResult> {
    let stablespan = stablespan_bounds(t)?;
    let dim = t.dim();
    let r = t.len() as u64;
    let (case, lower, upper, note) = if all_even(t) {
        (
            ExactnessCase::AllEvenZero,
            0,
            0,
            "χ ≠ 0, so no nowhere-zero field".to_string(),
        )
    } else if dim % 2 == 0 {
        (
            ExactnessCase::EvenDimKoschorke,
            stablespan.lower,
            stablespan.upper,
            "even dimension, χ = 0: span = stablespan".to_string(),
        )
    } else if dim % 8 == 3 && r % 4 == 1 {
        (
            ExactnessCase::Dim3Mod8Koschorke,
            stablespan.lower,
            stablespan.upper,
            "dimension ≡ 3 mod 8, r ≡ 1 mod 4: span = stablespan".to_string(),
        )
    } else if parallelizable(t) {
        (
            ExactnessCase::Parallelizable,
            dim,
            dim,
            "parallelizable".to_string(),
        )
    } else {
        (
            ExactnessCase::Undecided,
            1,
            stablespan.upper,
            "χ = 0 gives span >= 1; span <= stablespan".to_string(),
        )
    };
    let lower = if case == ExactnessCase::AllEvenZero {
        0
    } else {
        lower.max(1)
    };
    let mut provenance = stablespan.provenance.clone();
    provenance.push(Firing::new("span", lower, upper, note));
    Ok(SpanResult {
        span: Bound {
            lower,
            upper,
            exact: lower == upper,
            provenance,
        },
        stablespan,
        exactness_case: case,
    })
}

/// `ν(|n|+r) >= φ(n_1)` and not all `n_i` even.
pub fn parallelizable(t: &Tuple) -> bool {
    twist(t).trailing_zeros() as u64 >= phi(t.min() as u64) && !all_even(t)
}

/// `δ(n_1, c)` for `n_1` in `0..=7` and `c = |n|+r mod 8` in `1..=8`.
pub const DELTA: [[u8; 8]; 8] = [
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, 1, 0, 1],
    [0, 0, 1, 2, 0, 0, 1, 2],
    [0, 1, 2, 3, 0, 1, 2, 3],
    [0, 0, 0, 0, 1, 2, 3, 4],
    [0, 1, 0, 1, 2, 3, 4, 5],
    [0, 0, 1, 2, 3, 4, 5, 6],
    [0, 1, 2, 3, 4, 5, 6, 7],
];

pub fn delta_table() -> [[u8; 8]; 8] {
    DELTA
}

/// The table as text: one row per `n_1`, columns `1..8`.
pub fn delta_table_text() -> String {
    let mut out = String::from("n1 | 1 2 3 4 5 6 7 8\n---+----------------\n");
    for (n1, row) in DELTA.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(u8::to_string).collect();
        out.push_str(&format!(" {n1} | {}\n", cells.join(" ")));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub tuple: Tuple,
    pub dimension: u64,
    pub orientable: bool,
    pub euler_char: i128,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kervaire_semichar: Option<u8>,
    pub parallelizable: bool,
    pub imm: Bound,
    pub span_result: SpanResult,
    pub sphere_factors: SphereFactors,
    pub wedge_summand_count: u128,
    pub mod2_ranks: Vec<u128>,
}

pub fn report(t: &Tuple) -> Result<InvariantReport> {
    let (imm, span_result) = rayon::join(|| imm_bounds(t), || span_bounds(t));
    Ok(InvariantReport {
        tuple: t.clone(),
        dimension: t.dim(),
        orientable: orientable(t),
        euler_char: euler_char(t),
        kervaire_semichar: kervaire_semichar(t).ok(),
        parallelizable: parallelizable(t),
        imm: imm?,
        span_result: span_result?,
        sphere_factors: sphere_factors(t),
        wedge_summand_count: summand_count(t),
        mod2_ranks: poincare_poly(t),
    })
}
