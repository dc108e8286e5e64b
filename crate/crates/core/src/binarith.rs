//! Binary-digit and 2-adic arithmetic.
//!
//! Every numerical criterion downstream reduces to one of these: the 2-adic
//! valuation `nu`, the digit sum `alpha`, the vector-field count `phi`, and
//! binomial parity/valuation read off binary expansions.

use crate::error::{Error, Result};

/// The set of exponents in the binary expansion of a non-negative integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct BitSet(u64);

impl BitSet {
    pub fn of(value: u64) -> Self {
        BitSet(value)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: u32) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    pub fn is_subset(self, other: BitSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: BitSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Exponents in ascending order.
    pub fn positions(self) -> impl Iterator<Item = u32> {
        (0..64).filter(move |&e| self.0 >> e & 1 == 1)
    }
}

/// Exponent of 2 in `m`. The sign is ignored.
pub fn nu(m: i64) -> Result<u32> {
    if m == 0 {
        return Err(Error::domain("nu(0) undefined"));
    }
    Ok(m.trailing_zeros())
}

/// Number of ones in the binary expansion of `m`.
pub fn alpha(m: u64) -> u32 {
    m.count_ones()
}

/// Number of integers in `1..=n` congruent to 0, 1, 2 or 4 mod 8.
pub fn phi(n: u64) -> u64 {
    const PARTIAL: [u64; 8] = [0, 1, 2, 2, 3, 3, 3, 3];
    4 * (n / 8) + PARTIAL[(n % 8) as usize]
}

/// Parity of the binomial coefficient `C(k, m)` for any integer `k`.
///
/// For `k >= 0` this is Lucas: odd iff `Bin(m) ⊆ Bin(k)`. For `k = -j < 0`,
/// `C(-j, m) = ±C(j+m-1, m)` and it is odd iff `Bin(j-1)` and `Bin(m)` are
/// disjoint.
pub fn binom_odd(k: i64, m: u64) -> bool {
    if m == 0 {
        return true;
    }
    if k >= 0 {
        BitSet::of(m).is_subset(BitSet::of(k as u64))
    } else {
        let j = k.unsigned_abs();
        BitSet::of(j - 1).is_disjoint(BitSet::of(m))
    }
}

/// `nu(C(l+m, l))`, the number of carries when adding `l` and `m` in base 2.
pub fn binom_nu(l: u64, m: u64) -> u32 {
    let sum = l as u128 + m as u128;
    l.count_ones() + m.count_ones() - sum.count_ones()
}

/// `2^e` when it fits in a `u64`.
pub fn pow2(e: u64) -> Option<u64> {
    if e < 64 {
        Some(1u64 << e)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nu_examples() {
        assert_eq!(nu(12), Ok(2));
        assert_eq!(nu(-8), Ok(3));
        assert_eq!(nu(10), Ok(1));
        assert_eq!(nu(1), Ok(0));
        assert_eq!(nu(i64::MIN), Ok(63));
        assert!(matches!(nu(0), Err(Error::Domain(_))));
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(0), 0);
        assert_eq!(alpha(7), 3);
        assert_eq!(alpha(11), 3);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(0), 0);
        assert_eq!(phi(7), 3);
        assert_eq!(phi(9), 5);
        let firsts: Vec<u64> = (1..=10).map(phi).collect();
        assert_eq!(firsts, vec![1, 2, 2, 3, 3, 3, 3, 4, 5, 6]);
    }

    #[test]
    fn phi_matches_enumeration() {
        for n in 0..2000u64 {
            let count = (1..=n).filter(|i| matches!(i % 8, 0 | 1 | 2 | 4)).count() as u64;
            assert_eq!(phi(n), count, "phi({n})");
        }
    }

    #[test]
    fn binom_odd_examples() {
        assert!(!binom_odd(5, 2));
        for k in -20..20 {
            assert!(binom_odd(k, 0));
        }
        assert!(!binom_odd(-8, 5));
        assert!(!binom_odd(3, 5));
        assert!(binom_odd(-1, 7));
    }

    #[test]
    fn binom_nu_examples() {
        assert_eq!(binom_nu(1, 1), 1);
        assert_eq!(binom_nu(3, 1), 2);
        assert_eq!(binom_nu(2, 2), 1);
        assert_eq!(binom_nu(0, 9), 0);
        assert_eq!(binom_nu(u64::MAX, 1), 64);
    }

    // Pascal rows over Z, then reduced; independent of any digit reasoning.
    fn pascal(rows: usize) -> Vec<Vec<num_bigint::BigInt>> {
        let mut table = vec![vec![num_bigint::BigInt::from(1)]];
        for r in 1..rows {
            let prev = &table[r - 1];
            let mut row = vec![num_bigint::BigInt::from(1); r + 1];
            for i in 1..r {
                row[i] = &prev[i - 1] + &prev[i];
            }
            table.push(row);
        }
        table
    }

    #[test]
    fn binom_odd_against_pascal() {
        use num_traits::Zero;
        let table = pascal(130);
        let two = num_bigint::BigInt::from(2);
        for (k, row) in table.iter().enumerate().take(130) {
            for (m, c) in row.iter().enumerate().take(k + 1) {
                let odd = !(c % &two).is_zero();
                assert_eq!(binom_odd(k as i64, m as u64), odd, "C({k},{m})");
            }
            assert!(!binom_odd(k as i64, k as u64 + 1));
        }
        // C(-j, m) = (-1)^m C(j+m-1, m)
        for j in 1..60usize {
            for m in 0..60usize {
                let odd = !(&table[j + m - 1][m] % &two).is_zero();
                assert_eq!(binom_odd(-(j as i64), m as u64), odd, "C(-{j},{m})");
            }
        }
    }

    #[test]
    fn binom_nu_against_pascal() {
        let table = pascal(128);
        for l in 0..64usize {
            for m in 0..64usize {
                let tz = table[l + m][l].trailing_zeros().unwrap() as u32;
                assert_eq!(binom_nu(l as u64, m as u64), tz, "C({},{l})", l + m);
            }
        }
    }

    fn carries(mut l: u64, mut m: u64) -> u32 {
        let (mut carry, mut count) = (0, 0);
        while l > 0 || m > 0 || carry > 0 {
            let s = (l & 1) + (m & 1) + carry;
            carry = s >> 1;
            count += carry as u32;
            l >>= 1;
            m >>= 1;
        }
        count
    }

    proptest::proptest! {
        #[test]
        fn phi_is_eight_periodic(n in 0u64..1 << 40) {
            proptest::prop_assert_eq!(phi(n + 8), phi(n) + 4);
        }

        #[test]
        fn binom_nu_counts_carries(l in proptest::num::u64::ANY, m in proptest::num::u64::ANY) {
            proptest::prop_assert_eq!(binom_nu(l, m), carries(l, m));
        }

        #[test]
        fn nu_detects_divisibility(m in proptest::num::i64::ANY) {
            proptest::prop_assume!(m != 0);
            let v = nu(m).unwrap();
            proptest::prop_assert_eq!(m.wrapping_shr(v) & 1, 1);
        }
    }

    #[test]
    fn bitset_reconstructs_value() {
        for v in [0u64, 1, 6, 11, 1 << 40, u64::MAX] {
            let b = BitSet::of(v);
            let back: u64 = b.positions().map(|e| 1u64 << e).sum::<u64>();
            assert_eq!(back, v);
            assert_eq!(b.is_empty(), v == 0);
        }
        assert_eq!(
            BitSet::of(11).positions().collect::<Vec<_>>(),
            vec![0, 1, 3]
        );
    }
}
