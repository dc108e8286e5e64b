//! The input model: a sorted tuple of sphere dimensions `(n_1 <= ... <= n_r)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible number of spheres.
pub const MAX_LEN: usize = 64;
/// Largest admissible sphere dimension.
pub const MAX_ENTRY: u32 = 1 << 20;

/// A validated tuple of sphere dimensions, stored in ascending order.
///
/// Positions are 1-based throughout the crate, so `entry(1)` is the minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TupleRepr", into = "TupleRepr")]
pub struct Tuple {
    entries: Vec<u32>,
    canonicalized: bool,
}

#[derive(Serialize, Deserialize)]
struct TupleRepr {
    entries: Vec<u32>,
    canonicalized: bool,
}

impl TryFrom<TupleRepr> for Tuple {
    type Error = Error;

    fn try_from(repr: TupleRepr) -> Result<Self> {
        let mut t = Tuple::new(repr.entries)?;
        t.canonicalized = t.canonicalized || repr.canonicalized;
        Ok(t)
    }
}

impl From<Tuple> for TupleRepr {
    fn from(t: Tuple) -> Self {
        TupleRepr {
            entries: t.entries,
            canonicalized: t.canonicalized,
        }
    }
}

impl Tuple {
    /// Validates and sorts the entries.
    pub fn new(entries: impl Into<Vec<u32>>) -> Result<Self> {
        let mut entries = entries.into();
        if entries.is_empty() {
            return Err(Error::InvalidTuple(
                "tuple must have at least one entry".into(),
            ));
        }
        if entries.len() > MAX_LEN {
            return Err(Error::InvalidTuple(format!(
                "at most {MAX_LEN} entries allowed, got {}",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|&&n| n == 0 || n > MAX_ENTRY) {
            return Err(Error::InvalidTuple(format!(
                "entries must lie in 1..={MAX_ENTRY}, got {bad}"
            )));
        }
        let canonicalized = entries.windows(2).any(|w| w[0] > w[1]);
        entries.sort_unstable();
        Ok(Tuple {
            entries,
            canonicalized,
        })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Entry at 1-based position `i`.
    pub fn entry(&self, i: usize) -> u32 {
        self.entries[i - 1]
    }

    /// `r`, the number of spheres.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `n_1`, the smallest sphere dimension.
    pub fn min(&self) -> u32 {
        self.entries[0]
    }

    /// `|n|`, the manifold dimension.
    pub fn dim(&self) -> u64 {
        self.entries.iter().map(|&n| n as u64).sum()
    }

    /// True if the caller's order differed from the sorted order.
    pub fn was_canonicalized(&self) -> bool {
        self.canonicalized
    }

    /// 1-based positions `2..=r`.
    pub fn upper_positions(&self) -> impl Iterator<Item = usize> {
        2..=self.len()
    }

    /// The subtuple at the given 1-based positions.
    pub fn select(&self, positions: &[usize]) -> Result<Tuple> {
        Tuple::new(positions.iter().map(|&i| self.entry(i)).collect::<Vec<_>>())
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Tuple {
    type Err = Error;

    /// Parses comma-separated integers such as `2,3,5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut entries = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let n: i64 = part
                .parse()
                .map_err(|_| Error::InvalidTuple(format!("malformed integer {part:?}")))?;
            if n <= 0 {
                return Err(Error::InvalidTuple(format!(
                    "entries must be positive, got {n}"
                )));
            }
            let n = u32::try_from(n)
                .map_err(|_| Error::InvalidTuple(format!("entry {n} too large")))?;
            entries.push(n);
        }
        Tuple::new(entries)
    }
}
