//! Stable splitting of `ΣP_n` into desuspended stunted projective spaces,
//! sphere factors, and sphere bundles of multiples of the Hopf bundle.
//!
//! One summand `Σ^{1-ℓ(u)} P_{|u|+ℓ(u)}^{n_1+|u|+ℓ(u)}` appears for every
//! subset `u` of the positions `2..=r`. Its cells, after the formal
//! suspension, sit in dimensions `|u|+1 ..= |u|+n_1+1`, matching the mod-2
//! classes `y^j ∏_{i∈u} x_i` shifted up by one.

use serde::{Deserialize, Serialize};

use crate::binarith::phi;
use crate::error::{Error, Result};
use crate::mod2::basis;
use crate::tuple::Tuple;

/// `Σ^{desuspension} P_{bottom}^{top}` indexed by a subset of `2..=r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StuntedSummand {
    pub u_indices: Vec<usize>,
    pub ell: u32,
    pub usum: u64,
    pub desuspension: i64,
    pub bottom: u64,
    pub top: u64,
}

impl StuntedSummand {
    fn new(t: &Tuple, u_indices: Vec<usize>) -> Self {
        let ell = u_indices.len() as u32;
        let usum: u64 = u_indices.iter().map(|&i| t.entry(i) as u64).sum();
        let bottom = usum + ell as u64;
        StuntedSummand {
            u_indices,
            ell,
            usum,
            desuspension: 1 - ell as i64,
            bottom,
            top: bottom + t.min() as u64,
        }
    }

    /// Cell dimensions after applying the (de)suspension.
    pub fn cell_dimensions(&self) -> std::ops::RangeInclusive<u64> {
        let shift = |d: u64| (d as i64 + self.desuspension) as u64;
        shift(self.bottom)..=shift(self.top)
    }
}

impl std::fmt::Display for StuntedSummand {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Σ^{}P_{}^{}", self.desuspension, self.bottom, self.top)
    }
}

/// Summands in lexicographic order of their index lists, starting with `∅`.
/// There are `2^{r-1}` of them, so this is lazy.
pub fn summands_iter(t: &Tuple) -> impl Iterator<Item = StuntedSummand> + '_ {
    let r = t.len();
    let mut stack: Vec<usize> = Vec::new();
    let mut started = false;
    std::iter::from_fn(move || {
        if !started {
            started = true;
            return Some(StuntedSummand::new(t, Vec::new()));
        }
        // Next in lexicographic order: extend, else bump the last index.
        match stack.last().copied() {
            None if r >= 2 => stack.push(2),
            Some(last) if last < r => stack.push(last + 1),
            _ => loop {
                let last = stack.pop()?;
                if last < r {
                    stack.push(last + 1);
                    break;
                }
            },
        }
        Some(StuntedSummand::new(t, stack.clone()))
    })
}

pub fn wedge_summands(t: &Tuple) -> Vec<StuntedSummand> {
    summands_iter(t).collect()
}

/// `2^{r-1}`.
pub fn summand_count(t: &Tuple) -> u128 {
    1u128 << (t.len() - 1)
}

/// Compares the summands' cell dimensions against the mod-2 basis shifted
/// up by one degree. `false` means an internal bug.
pub fn splitting_poincare_check(t: &Tuple) -> bool {
    let dim = t.dim();
    let mut cells = vec![0u128; dim as usize + 2];
    for s in summands_iter(t) {
        for d in s.cell_dimensions() {
            match cells.get_mut(d as usize) {
                Some(c) => *c += 1,
                None => return false,
            }
        }
    }
    cells[0] == 0 && (0..=dim).all(|d| cells[d as usize + 1] == basis(t, d).len() as u128)
}

/// Positions whose sphere splits off as a product factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereFactors {
    /// `T ⊆ {2..r}`
    pub indices: Vec<usize>,
    pub spheres: Vec<u32>,
    /// `P` of the entries outside `T`.
    pub remaining: Tuple,
}

/// `T = {i > 1 : ν(n_i + 1) >= φ(n_1)}`; then `P_n ≅ P_rest × ∏_T S^{n_i}`,
/// and no other sphere splits off.
pub fn sphere_factors(t: &Tuple) -> SphereFactors {
    let threshold = phi(t.min() as u64);
    let (indices, rest): (Vec<usize>, Vec<usize>) = (1..=t.len())
        .partition(|&i| i > 1 && ((t.entry(i) as u64 + 1).trailing_zeros() as u64) >= threshold);
    SphereFactors {
        spheres: indices.iter().map(|&i| t.entry(i)).collect(),
        indices,
        remaining: t.select(&rest).expect("subtuple of a valid tuple"),
    }
}

/// The sphere bundle `S(kξ)` over `P_n`, itself `P_{(n_1,...,n_r,k-1)}`.
pub fn sphere_bundle(t: &Tuple, k: u32) -> Result<Tuple> {
    if k <= 1 {
        return Err(Error::domain(format!(
            "sphere bundle needs k >= 2, got {k}"
        )));
    }
    let mut entries = t.entries().to_vec();
    entries.push(k - 1);
    Tuple::new(entries)
}
