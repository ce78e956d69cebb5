//! The ped counting function and its generating series.
//!
//! `ped(n)` counts partitions of `n` whose even parts are distinct —
//! equivalently (split each even part `2m` repeated `k` times into distinct
//! powers-of-two multiples) partitions with no part divisible by 4. The
//! generating function is `Σ ped(n)qⁿ = f₄/f₁`.
//!
//! Two fully independent routes are provided on purpose:
//!
//! * [`ped_count`] / [`ped_count_table`]: a dynamic program over parts not
//!   divisible by 4, sharing no code with the series machinery — the oracle
//!   the series results are tested against;
//! * [`ped_series`]: the `f₄/f₁` expansion. Exact mode computes
//!   `f₄·inv(f₁)`; modular mode runs the sparse pentagonal recurrence
//!   `P(n) = f₄[n] − Σ_{g>0} f₁[g]·P(n−g)` with a delayed-reduction
//!   accumulator, so orders in the millions stay cheap
//!   (`O(order^{3/2})` machine-word operations, byte-packed storage).

use super::{euler_product, pentagonal_terms, Series};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Largest `n` accepted by the exact counting DP. The table costs
/// `O(n²)` big-integer additions; past this point the caller should be
/// using the series representation instead.
pub const PED_COUNT_BUDGET: usize = 100_000;

/// Exact table `ped(0), …, ped(nmax)` by dynamic programming over parts
/// `p ≢ 0 (mod 4)`. Independent of the q-series code paths.
pub fn ped_count_table(nmax: usize) -> Result<Vec<BigInt>> {
    if nmax > PED_COUNT_BUDGET {
        return Err(Error::Budget(format!(
            "ped_count is limited to n ≤ {PED_COUNT_BUDGET} (got {nmax}); \
             use the series representation for larger ranges"
        )));
    }
    let mut dp = vec![BigInt::zero(); nmax + 1];
    dp[0] = BigInt::one();
    for part in (1..=nmax).filter(|p| p % 4 != 0) {
        for v in part..=nmax {
            let (head, tail) = dp.split_at_mut(v);
            tail[0] += &head[v - part];
        }
    }
    Ok(dp)
}

/// `ped(n)` exactly. See [`ped_count_table`] for the method and budget.
pub fn ped_count(n: usize) -> Result<BigInt> {
    Ok(ped_count_table(n)?.pop().expect("table is nonempty"))
}

/// The generating series `Σ_{n=0}^{order} ped(n)qⁿ = f₄/f₁`.
pub fn ped_series(order: usize, modulus: Option<u64>) -> Result<Series> {
    match modulus {
        None => {
            let f4 = euler_product(4, order, None)?;
            let f1 = euler_product(1, order, None)?;
            f4.mul(&f1.inv()?)
        }
        // The recurrence accumulator holds sums of ~2√(2·order/3) values
        // below m in an i64, so it needs m to fit comfortably in 32 bits;
        // larger moduli (not used by any verification here) take the
        // generic inversion route.
        Some(m) if m > i32::MAX as u64 => {
            let f4 = euler_product(4, order, Some(m))?;
            let f1 = euler_product(1, order, Some(m))?;
            f4.mul(&f1.inv()?)
        }
        Some(m) => {
            // f₁·P = f₄ coefficientwise: P(n) = f₄[n] − Σ_{g≥1} f₁[g]P(n−g).
            let pent: Vec<(usize, i64)> = pentagonal_terms(order)
                .into_iter()
                .filter(|&(g, _)| g > 0)
                .collect();
            let f4_support: Vec<(usize, i64)> = pentagonal_terms(order / 4)
                .iter()
                .map(|&(g, s)| (4 * g, s))
                .collect();
            let mi = m as i64;
            let mut p = vec![0u32; order + 1];
            let mut f4_next = 0usize; // cursor into f4_support, exponents ascend
            for n in 0..=order {
                let mut acc: i64 = 0;
                if f4_next < f4_support.len() && f4_support[f4_next].0 == n {
                    acc = f4_support[f4_next].1;
                    f4_next += 1;
                }
                for &(g, s) in pent.iter().take_while(|&&(g, _)| g <= n) {
                    // s = ±1 and each p[·] < m ≤ 2³¹, so the running sum
                    // stays far inside i64 range without per-term reduction.
                    acc -= s * p[n - g] as i64;
                }
                p[n] = acc.rem_euclid(mi) as u32;
            }
            Series::from_residues(m, p.into_iter().map(u64::from).collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn small_counts_by_hand_enumeration() {
        // ped(4): of the 5 partitions of 4, only {4} itself has a part
        // divisible by 4. ped(5): only {4,1} is excluded from the 7.
        let expected = [1i64, 1, 2, 3, 4, 6, 9, 12];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(ped_count(n).unwrap(), big(e), "ped({n})");
        }
    }

    #[test]
    fn frozen_larger_counts() {
        assert_eq!(ped_count(16).unwrap(), big(132));
        assert_eq!(ped_count(100).unwrap(), big(20_791_590));
        let table = ped_count_table(97).unwrap();
        // Values on the progression 9n+7, cross-checking the table path.
        assert_eq!(table[25], big(876));
        assert_eq!(table[43], big(18_624));
        assert_eq!(table[97], big(15_203_904));
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            ped_count_table(PED_COUNT_BUDGET + 1),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn series_matches_counting_oracle() {
        let table = ped_count_table(300).unwrap();
        let series = ped_series(300, None).unwrap();
        for (n, e) in table.iter().enumerate() {
            assert_eq!(&series.coeff(n), e, "ped_series coefficient {n}");
        }
    }

    #[test]
    fn modular_recurrence_matches_exact_reduction() {
        let exact = ped_series(500, None).unwrap();
        for m in [2u64, 24, 192, 997] {
            let modular = ped_series(500, Some(m)).unwrap();
            assert_eq!(modular, exact.reduce_mod(m).unwrap(), "ped series mod {m}");
        }
    }

    #[test]
    fn huge_modulus_falls_back_to_inversion() {
        let m = (1u64 << 40) + 15;
        let modular = ped_series(200, Some(m)).unwrap();
        let exact = ped_series(200, None).unwrap();
        assert_eq!(modular, exact.reduce_mod(m).unwrap());
    }

    #[test]
    fn conjectured_progression_vanishes_mod_192_at_small_n() {
        let s = ped_series(225 * 5 + 223, Some(192)).unwrap();
        for b in [43usize, 88, 133, 223] {
            let prog = s.extract_progression(225, b).unwrap();
            for n in 0..=5 {
                assert_eq!(prog.residue(n), 0, "ped(225·{n}+{b}) mod 192");
            }
        }
    }
}
