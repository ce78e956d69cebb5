//! Elementary number-theoretic utilities: Legendre symbols, divisor
//! enumeration, square classes of residue rings, valuations, and
//! deterministic 64-bit primality testing.
//!
//! Everything here is a pure function; nothing allocates beyond its result.

use crate::error::{Error, Result};

/// Greatest common divisor of two unsigned integers.
pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Greatest common divisor on signed 128-bit integers, always nonnegative.
///
/// `gcd_i128(0, 0) = 0`. Used where formulas feed signed linear combinations
/// into a gcd, e.g. `gcd(-24kt - kΣδr_δ, 24m)`.
pub fn gcd_i128(a: i128, b: i128) -> i128 {
    num_integer::gcd(a.unsigned_abs(), b.unsigned_abs()) as i128
}

/// `base^exp mod m` with 128-bit intermediate products. `m ≥ 1`.
pub fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc: u64 = 1;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse of `a` mod `m`, if `gcd(a, m) = 1`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 0 {
        return None;
    }
    if m == 1 {
        return Some(0);
    }
    // Extended Euclid on (a mod m, m).
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        None
    } else {
        Some(s0.rem_euclid(m as i128) as u64)
    }
}

/// Deterministic primality test for 64-bit integers (Miller–Rabin with a
/// witness set proven sufficient for all `n < 2^64`).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Legendre symbol `(a/p) ∈ {-1, 0, 1}` for an odd prime `p`, by Euler's
/// criterion with fast modular exponentiation.
///
/// Even or composite `p` is a hard error rather than a silent Jacobi
/// generalization: every use in this crate has an odd prime `p`, and a
/// fallback could mask a caller bug.
pub fn legendre(a: i64, p: u64) -> Result<i32> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!(
            "legendre symbol needs an odd prime modulus, got {p}"
        )));
    }
    let r = (a % p as i64 + p as i64) as u64 % p;
    if r == 0 {
        return Ok(0);
    }
    let e = mod_pow(r, (p - 1) / 2, p);
    Ok(if e == 1 { 1 } else { -1 })
}

/// All positive divisors of `n ≥ 1`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors of 0 are not defined");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Prime factorization of `n ≥ 1` by trial division, as `(p, exponent)`
/// pairs in ascending prime order. Intended for the small levels and moduli
/// that arise here, not for cryptographic sizes.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorization of 0 is not defined");
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0u32;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `p`-adic valuation of `n ≠ 0`.
pub fn valuation(n: u64, p: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "valuation of 0 is infinite".into(),
        ));
    }
    if p < 2 {
        return Err(Error::InvalidArgument(format!(
            "valuation base must be ≥ 2, got {p}"
        )));
    }
    let mut n = n;
    let mut v = 0u32;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    Ok(v)
}

/// Whether `n` is squarefree (no prime square divides it).
pub fn is_squarefree(n: u64) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

/// The set of residues of a residue ring together with its modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueClassSet {
    /// The ring modulus `m ≥ 1`.
    modulus: u64,
    /// Sorted, duplicate-free residues in `[0, m)`.
    members: Vec<u64>,
}

impl ResidueClassSet {
    /// Build a set, sorting and deduplicating; residues must lie in
    /// `[0, modulus)`.
    pub fn new(modulus: u64, mut members: Vec<u64>) -> Result<ResidueClassSet> {
        if modulus == 0 {
            return Err(Error::InvalidArgument("modulus must be ≥ 1".into()));
        }
        if let Some(&bad) = members.iter().find(|&&v| v >= modulus) {
            return Err(Error::InvalidArgument(format!(
                "residue {bad} out of range for modulus {modulus}"
            )));
        }
        members.sort_unstable();
        members.dedup();
        Ok(ResidueClassSet { modulus, members })
    }

    /// The ring modulus.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The residues, sorted ascending and duplicate-free.
    pub fn members(&self) -> &[u64] {
        &self.members
    }
}

/// Squares of the unit group: `{u² mod m : gcd(u, m) = 1}`, sorted.
///
/// For `m = 1` the ring is trivial and the unique residue `{0}` is returned
/// so that the function stays total.
pub fn squares_mod(m: u64) -> ResidueClassSet {
    assert!(m >= 1, "modulus must be positive");
    if m == 1 {
        return ResidueClassSet {
            modulus: 1,
            members: vec![0],
        };
    }
    let mut members: Vec<u64> = (1..=m)
        .filter(|&u| gcd(u, m) == 1)
        .map(|u| ((u as u128 * u as u128) % m as u128) as u64)
        .collect();
    members.sort_unstable();
    members.dedup();
    ResidueClassSet { modulus: m, members }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn legendre_known_values() {
        // Residue/non-residue spot values, independently tabulated.
        assert_eq!(legendre(5, 5).unwrap(), 0, "p | a gives 0");
        assert_eq!(legendre(1, 7).unwrap(), 1, "1 is always a square");
        assert_eq!(legendre(-2, 5).unwrap(), -1, "-2 ≡ 3 is not in {{1,4}}");
        assert_eq!(legendre(-2, 7).unwrap(), -1, "-2 ≡ 5 is not in {{1,2,4}}");
        assert_eq!(legendre(-2, 11).unwrap(), 1, "-2 ≡ 9 = 3²");
        assert_eq!(legendre(-2, 13).unwrap(), -1);
        assert_eq!(legendre(-2, 19).unwrap(), 1);
        assert_eq!(legendre(-2, 23).unwrap(), -1);
        assert_eq!(legendre(-19, 5).unwrap(), 1, "-19 ≡ 1 mod 5");
    }

    #[test]
    fn legendre_rejects_even_and_composite_moduli() {
        assert!(legendre(3, 2).is_err(), "p = 2 must be rejected");
        assert!(legendre(3, 15).is_err(), "composite p must be rejected");
        assert!(legendre(3, 1).is_err());
    }

    #[test]
    fn legendre_matches_exhaustive_square_table() {
        // For every odd prime p ≤ 50 build the square table directly and
        // compare symbol by symbol.
        for p in (3..=50u64).filter(|&p| is_prime(p)) {
            let squares: std::collections::HashSet<u64> =
                (1..p).map(|u| u * u % p).collect();
            for a in 0..p {
                let expect = if a == 0 {
                    0
                } else if squares.contains(&a) {
                    1
                } else {
                    -1
                };
                assert_eq!(
                    legendre(a as i64, p).unwrap(),
                    expect,
                    "symbol ({a}/{p}) disagrees with the square table"
                );
            }
        }
    }

    #[test]
    fn divisors_known_values() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(
            divisors(2304).len(),
            27,
            "2304 = 2⁸·3² has 9·3 divisors"
        );
        assert_eq!(divisors(60).len(), 12);
    }

    #[test]
    fn squares_mod_known_values() {
        assert_eq!(squares_mod(24).members(), vec![1], "every unit squares to 1 mod 24");
        assert_eq!(squares_mod(5).members(), vec![1, 4]);
        assert_eq!(squares_mod(2).members(), vec![1]);
        assert_eq!(squares_mod(1).members(), vec![0], "trivial ring");
        assert_eq!(squares_mod(48).members(), vec![1, 25]);
    }

    #[test]
    fn valuation_and_factorization() {
        assert_eq!(valuation(2304, 2).unwrap(), 8);
        assert_eq!(valuation(2304, 3).unwrap(), 2);
        assert_eq!(factorize(2304), vec![(2, 8), (3, 2)]);
        assert_eq!(factorize(1), vec![]);
        assert!(valuation(0, 2).is_err());
    }

    #[test]
    fn gcd_values_used_by_verification() {
        assert_eq!(gcd(625 - 1, 24), 24, "k = gcd(m²-1, 24) for m = 25");
        assert_eq!(gcd_i128(-1032, 600), 24);
        assert_eq!(gcd_i128(-11400, 600), 600);
    }

    #[test]
    fn is_prime_spot_checks() {
        assert!(is_prime(19));
        assert!(is_prime(2));
        assert!(!is_prime(1));
        assert!(!is_prime(561), "Carmichael number");
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007u64 * 3));
    }

    proptest! {
        /// (ab/p) = (a/p)(b/p): complete multiplicativity.
        #[test]
        fn legendre_is_multiplicative(a in -500i64..500, b in -500i64..500, pi in 0usize..14) {
            let primes = [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];
            let p = primes[pi];
            let ab = legendre(a.wrapping_mul(b), p).unwrap();
            prop_assert_eq!(ab, legendre(a, p).unwrap() * legendre(b, p).unwrap());
        }

        /// Every unit u mod 24m satisfies u² ≡ 1 (mod 24); this is what makes
        /// (s-1)/24 integral in the residue-class computation P(t).
        #[test]
        fn unit_squares_are_one_mod_24(m in 1u64..60) {
            for &s in squares_mod(24 * m).members() {
                prop_assert_eq!(s % 24, 1, "square class {} mod {} not ≡ 1 mod 24", s, 24 * m);
            }
        }

        /// divisors(n) returns exactly the d with d | n, sorted.
        #[test]
        fn divisors_are_sound_and_complete(n in 1u64..5000) {
            let ds = divisors(n);
            for w in ds.windows(2) {
                prop_assert!(w[0] < w[1]);
            }
            for d in 1..=n {
                prop_assert_eq!(ds.binary_search(&d).is_ok(), n % d == 0);
            }
        }

        /// Factorization reassembles to n.
        #[test]
        fn factorize_roundtrip(n in 1u64..100_000) {
            let mut acc = 1u64;
            for (p, e) in factorize(n) {
                prop_assert!(is_prime(p));
                acc *= p.pow(e);
            }
            prop_assert_eq!(acc, n);
        }

        /// mod_inverse really inverts.
        #[test]
        fn mod_inverse_inverts(a in 1u64..10_000, m in 2u64..10_000) {
            match mod_inverse(a, m) {
                Some(inv) => prop_assert_eq!((a as u128 * inv as u128) % m as u128, 1),
                None => prop_assert!(gcd(a, m) != 1),
            }
        }
    }
}
