//! Eta-quotient modular-form certification and Hecke operators.
//!
//! An eta quotient `Π_{δ|N} η(δz)^{r_δ}` is a modular form of weight
//! `ℓ = ½Σr_δ` on `Γ₀(N)` with a quadratic Nebentypus character provided
//! `24 | Σδr_δ`, `24 | Σ(N/δ)r_δ`, `ℓ ∈ Z`, and the order of vanishing at
//! every cusp is nonnegative. [`certify`] evaluates all of that exactly:
//! the order at a cusp `c/d` is
//!
//! ```text
//! (N/24) Σ_δ gcd(d,δ)²·r_δ / (gcd(d, N/d)·d·δ)
//! ```
//!
//! and depends only on `d | N`, so the certificate carries one rational
//! order per divisor.
//!
//! The family `B_{p,k}` (`p ∈ {2,3}`, `k > 2`) packages the ped generating
//! identity into a form of level 2304: working mod `p^{k+1}` the large eta
//! power collapses by the binomial congruence
//! `η(24z)^{p^{k+1}} ≡ η(24pz)^{p^k}`, leaving
//! `q¹⁹·[f₂⁴f₃⁶f₄/f₁¹¹](q²⁴)` — exactly `12⁻¹` times the ped(9n+7)
//! generating function pushed onto exponents `≡ 19 (mod 24)`. Since 12 is
//! not a unit mod `p^{k+1}`, every check here keeps the factor 12 on the
//! eta-quotient side (`12·B ≡ Σ ped(9n+7)q^{24n+19}`).
//!
//! [`s_indicator`] reproduces the scaled holomorphy indicators `S(2)`,
//! `S(3)` used for the cusp tables of this family; they agree in sign with
//! the general cusp-order formula at every divisor of 2304, which the tests
//! pin down.

use crate::arith::{divisors, factorize, gcd, is_prime, legendre, mod_pow};
use crate::error::{Error, Result};
use crate::series::{eta_quotient_series, EtaExponents, Series};
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Signed;
use std::collections::BTreeMap;

/// An eta quotient `Π_{δ|N} η(δz)^{r_δ}` at a declared level `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaQuotient {
    level: u64,
    exponents: BTreeMap<u64, i64>,
}

impl EtaQuotient {
    /// Build a quotient; every index must divide the level, and zero
    /// exponents are dropped.
    pub fn new(level: u64, exponents: impl IntoIterator<Item = (u64, i64)>) -> Result<EtaQuotient> {
        if level == 0 {
            return Err(Error::InvalidArgument("level must be positive".into()));
        }
        let mut map = BTreeMap::new();
        for (delta, r) in exponents {
            if delta == 0 || level % delta != 0 {
                return Err(Error::InvalidArgument(format!(
                    "eta index δ = {delta} does not divide the level N = {level}"
                )));
            }
            if r == 0 {
                continue;
            }
            if map.insert(delta, r).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate eta index δ = {delta}")));
            }
        }
        Ok(EtaQuotient { level, exponents: map })
    }

    /// The level `N`.
    pub fn level(&self) -> u64 {
        self.level
    }

    /// The exponent map `δ ↦ r_δ` (zeros omitted).
    pub fn exponents(&self) -> &BTreeMap<u64, i64> {
        &self.exponents
    }

    /// The weight `ℓ = ½ Σ r_δ`.
    pub fn weight(&self) -> Ratio<i64> {
        Ratio::new(self.exponents.values().sum(), 2)
    }

    /// `Σ δ·r_δ`.
    pub fn sum_delta_r(&self) -> i128 {
        self.exponents.iter().map(|(&d, &r)| d as i128 * r as i128).sum()
    }

    /// `Σ (N/δ)·r_δ`.
    pub fn sum_level_over_delta_r(&self) -> i128 {
        self.exponents
            .iter()
            .map(|(&d, &r)| (self.level / d) as i128 * r as i128)
            .sum()
    }
}

/// Everything needed to decide whether an eta quotient is a holomorphic
/// modular form on `Γ₀(N)`, with each ingredient reported separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Weight `ℓ = ½ Σ r_δ`.
    pub weight: Ratio<i64>,
    /// `24 | Σ δ r_δ`.
    pub cond_24_delta: bool,
    /// `24 | Σ (N/δ) r_δ`.
    pub cond_24_level_over_delta: bool,
    /// Squarefree part of `(-1)^ℓ Π δ^{r_δ}` — the discriminant whose
    /// quadratic symbol is the Nebentypus character. `None` when `ℓ ∉ Z`.
    pub character_discriminant: Option<i64>,
    /// Order of vanishing at the cusp `c/d`, per divisor `d | N`.
    pub cusp_orders: BTreeMap<u64, Ratio<i128>>,
    /// All cusp orders ≥ 0, both 24-conditions, and `ℓ ∈ Z`.
    pub holomorphic: bool,
}

/// Squarefree part of `(-1)^ℓ Π δ^{r_δ}` (`None` for half-integral `ℓ`).
fn discriminant_of(eq: &EtaQuotient) -> Option<i64> {
    let weight = eq.weight();
    if !weight.is_integer() {
        return None;
    }
    // Odd prime-exponent sums survive the square stripping.
    let mut prime_exponents: BTreeMap<u64, i64> = BTreeMap::new();
    for (&delta, &r) in eq.exponents() {
        for (p, e) in factorize(delta) {
            *prime_exponents.entry(p).or_insert(0) += e as i64 * r;
        }
    }
    let mut disc: i64 = if weight.to_integer() % 2 == 0 { 1 } else { -1 };
    for (p, e) in prime_exponents {
        if e.rem_euclid(2) == 1 {
            disc *= p as i64;
        }
    }
    Some(disc)
}

/// Evaluate the full certificate for `eq`.
pub fn certify(eq: &EtaQuotient) -> Certificate {
    let weight = eq.weight();
    let cond_24_delta = eq.sum_delta_r().rem_euclid(24) == 0;
    let cond_24_level_over_delta = eq.sum_level_over_delta_r().rem_euclid(24) == 0;
    let n = eq.level() as i128;
    let mut cusp_orders = BTreeMap::new();
    for d in divisors(eq.level()) {
        let di = d as i128;
        let mut total = Ratio::from_integer(0i128);
        for (&delta, &r) in eq.exponents() {
            let g = gcd(d, delta) as i128;
            total += Ratio::new(
                n * g * g * r as i128,
                24 * gcd(d, eq.level() / d) as i128 * di * delta as i128,
            );
        }
        cusp_orders.insert(d, total);
    }
    let holomorphic = weight.is_integer()
        && cond_24_delta
        && cond_24_level_over_delta
        && cusp_orders.values().all(|o| !o.is_negative());
    Certificate {
        weight,
        cond_24_delta,
        cond_24_level_over_delta,
        character_discriminant: discriminant_of(eq),
        cusp_orders,
        holomorphic,
    }
}

/// The Nebentypus character `χ(d) = ((-1)^ℓ Π δ^{r_δ} / d)`, extended
/// completely multiplicatively over the odd prime factorization of `d`.
///
/// Only arguments the transformation law ever sees are admitted: `d` odd
/// and coprime to the level (so the symbol never hits an even argument or
/// a shared prime).
pub fn character(eq: &EtaQuotient, d: u64) -> Result<i32> {
    if !eq.weight().is_integer() {
        return Err(Error::InvalidArgument(
            "character is defined here only for integral weight".into(),
        ));
    }
    if d % 2 == 0 || gcd(d, eq.level()) != 1 {
        return Err(Error::InvalidArgument(format!(
            "character argument d = {d} must be odd and coprime to N = {}",
            eq.level()
        )));
    }
    let disc = discriminant_of(eq).expect("integral weight checked above");
    let mut chi = 1i32;
    for (p, e) in factorize(d) {
        let s = legendre(disc, p)?;
        debug_assert_ne!(s, 0, "gcd(d, N) = 1 keeps d away from the discriminant");
        if e % 2 == 1 {
            chi *= s;
        }
    }
    Ok(chi)
}

/// Smallest admissible level for an exponent pattern: the least multiple
/// `N` of `lcm(δ)` with `24 | Σδr_δ` and `24 | Σ(N/δ)r_δ`, searched up to
/// `lcm(δ)·cap_multiplier`.
pub fn min_level_capped(exponents: &BTreeMap<u64, i64>, cap_multiplier: u64) -> Result<u64> {
    if exponents.is_empty() || exponents.keys().any(|&d| d == 0) {
        return Err(Error::InvalidArgument(
            "exponent map must be nonempty with positive indices".into(),
        ));
    }
    let sum_r: i64 = exponents.values().sum();
    if sum_r % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "weight ½·{sum_r} is not an integer; no admissible level"
        )));
    }
    let sum_delta_r: i128 = exponents.iter().map(|(&d, &r)| d as i128 * r as i128).sum();
    if sum_delta_r.rem_euclid(24) != 0 {
        return Err(Error::InvalidArgument(format!(
            "Σδr_δ = {sum_delta_r} is not divisible by 24; no level can fix that"
        )));
    }
    let mut l: u64 = 1;
    for &d in exponents.keys() {
        l = l / gcd(l, d) * d;
    }
    for u in 1..=cap_multiplier {
        let n = l * u;
        let sum: i128 = exponents
            .iter()
            .map(|(&d, &r)| (n / d) as i128 * r as i128)
            .sum();
        if sum.rem_euclid(24) == 0 {
            return Ok(n);
        }
    }
    Err(Error::InvalidArgument(format!(
        "no admissible level below lcm(δ)·{cap_multiplier} = {}",
        l * cap_multiplier
    )))
}

/// [`min_level_capped`] with the default cap `lcm(δ)·576`.
pub fn min_level(exponents: &BTreeMap<u64, i64>) -> Result<u64> {
    min_level_capped(exponents, 576)
}

/// Exponent map of `B_{p,k}` in 24-scaled indices, with the `η(24pz)`
/// factor already merged: `{24: p^{k+1}-11, 48, 72, 96}` where the entry at
/// `24p` absorbs `-p^k`.
pub fn b_exponents(p: u64, k: u32) -> Result<BTreeMap<u64, i64>> {
    if p != 2 && p != 3 {
        return Err(Error::InvalidArgument(format!("B_(p,k) is defined for p ∈ {{2,3}}, got {p}")));
    }
    if k <= 2 {
        return Err(Error::InvalidArgument(format!("B_(p,k) requires k > 2, got {k}")));
    }
    let pk = p
        .checked_pow(k)
        .ok_or_else(|| Error::InvalidArgument(format!("p^k overflows for k = {k}")))?;
    let pk1 = pk
        .checked_mul(p)
        .ok_or_else(|| Error::InvalidArgument(format!("p^(k+1) overflows for k = {k}")))?;
    let mut map = BTreeMap::from([(24u64, pk1 as i64 - 11), (48, 4), (72, 6), (96, 1)]);
    *map.get_mut(&(24 * p)).expect("24p ∈ {48, 72}") -= pk as i64;
    Ok(map)
}

/// The scaled holomorphy indicator `S(p)` at a divisor `d | 2304`:
/// nonnegative exactly when the cusp order of `B_{p,k}` at `c/d` is.
pub fn s_indicator(p: u64, k: u32, d: u64) -> Result<Ratio<i128>> {
    if p != 2 && p != 3 {
        return Err(Error::InvalidArgument(format!("S(p) is defined for p ∈ {{2,3}}, got {p}")));
    }
    if k <= 2 {
        return Err(Error::InvalidArgument(format!("S(p) requires k > 2, got {k}")));
    }
    if d == 0 || 2304 % d != 0 {
        return Err(Error::InvalidArgument(format!("d = {d} does not divide 2304")));
    }
    let g24 = gcd(d, 24) as i128;
    let g48 = gcd(d, 48) as i128;
    let g72 = gcd(d, 72) as i128;
    let g96 = gcd(d, 96) as i128;
    let den = g96 * g96;
    let value = match p {
        2 => {
            let pk = 2i128.pow(k);
            Ratio::new(8 * g72 * g72, den)
                + Ratio::new(4 * (2 * pk - 11) * g24 * g24, den)
                - Ratio::new(2 * (pk - 4) * g48 * g48, den)
                + Ratio::from_integer(1)
        }
        _ => {
            let pk = 3i128.pow(k);
            Ratio::new(8 * g48 * g48, den)
                + Ratio::new(4 * (3 * pk - 11) * g24 * g24, den)
                - Ratio::new(4 * (pk / 3 - 2) * g72 * g72, den)
                + Ratio::from_integer(1)
        }
    };
    Ok(value)
}

/// The `q`-expansion of `B_{p,k}` mod `p^{k+1}`, prefactor included (the
/// series is supported on exponents `≡ 19 (mod 24)` and starts at `q¹⁹`).
///
/// Works through the binomial reduction: mod `p^{k+1}` the quotient
/// `η(24z)^{p^{k+1}}/η(24pz)^{p^k}` is 1, so only the small fixed quotient
/// `q¹⁹·[f₂⁴f₃⁶f₄/f₁¹¹](q²⁴)` is ever expanded.
pub fn build_b(p: u64, k: u32, order: usize) -> Result<Series> {
    // Reuse the validation (and the k > 2 requirement) of the exponent map.
    let _ = b_exponents(p, k)?;
    let modulus = p.pow(k + 1);
    if order < 19 {
        return Ok(Series::zeros(order, Some(modulus)));
    }
    let inner_order = (order - 19) / 24;
    let core = EtaExponents::new([(1, -11), (2, 4), (3, 6), (4, 1)])?;
    let f = eta_quotient_series(&core, inner_order, Some(modulus))?.series;
    f.dilate(24, 19, order)
}

/// The Hecke operator `T_p` on a `q`-expansion:
/// `b(n) = a(pn) + χ(p)·p^{ℓ-1}·a(n/p)`, with `a(n/p) = 0` when `p ∤ n`.
/// The output is truncated at `⌊order/p⌋`.
pub fn hecke_tp(f: &Series, p: u64, ell: u64, chi_p: i32) -> Result<Series> {
    if p % 2 == 0 || p % 3 == 0 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!(
            "Hecke prime must be a prime coprime to 6, got {p}"
        )));
    }
    if ell == 0 {
        return Err(Error::InvalidArgument("weight ℓ must be ≥ 1".into()));
    }
    if (f.order() as u64) < p {
        return Err(Error::InvalidArgument(format!(
            "series order {} is too small for T_{p}",
            f.order()
        )));
    }
    if !matches!(chi_p, -1 | 0 | 1) {
        return Err(Error::InvalidArgument(format!(
            "character value must be in {{-1, 0, 1}}, got {chi_p}"
        )));
    }
    let out_order = f.order() / p as usize;
    match f.modulus() {
        None => {
            let scale = BigInt::from(chi_p) * BigInt::from(p).pow((ell - 1) as u32);
            let coeffs = (0..=out_order)
                .map(|n| {
                    let mut b = f.coeff(p as usize * n);
                    if n % p as usize == 0 {
                        b += &scale * f.coeff(n / p as usize);
                    }
                    b
                })
                .collect();
            Ok(Series::from_exact(coeffs))
        }
        Some(m) => {
            let pe = mod_pow(p % m, ell - 1, m);
            let scale = match chi_p {
                1 => pe,
                -1 => (m - pe) % m,
                _ => 0,
            };
            let residues = (0..=out_order)
                .map(|n| {
                    let mut b = f.residue(p as usize * n);
                    if n % p as usize == 0 {
                        let add = (scale as u128 * f.residue(n / p as usize) as u128) % m as u128;
                        b = ((b as u128 + add) % m as u128) as u64;
                    }
                    b
                })
                .collect();
            Series::from_residues(m, residues)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ped_series;
    use proptest::prelude::*;

    fn b_quotient(p: u64, k: u32) -> EtaQuotient {
        EtaQuotient::new(2304, b_exponents(p, k).unwrap()).unwrap()
    }

    #[test]
    fn eta_quotient_validation() {
        assert!(EtaQuotient::new(2304, [(24, 5)]).is_ok());
        assert!(EtaQuotient::new(2304, [(7, 1)]).is_err(), "7 ∤ 2304");
        assert!(EtaQuotient::new(0, [(1, 1)]).is_err());
    }

    #[test]
    fn eta_power_24_is_the_level_one_form() {
        // η(z)²⁴: weight 12, both conditions, cusp order 1, holomorphic.
        let eq = EtaQuotient::new(1, [(1, 24)]).unwrap();
        let cert = certify(&eq);
        assert_eq!(cert.weight, Ratio::from_integer(12));
        assert!(cert.cond_24_delta && cert.cond_24_level_over_delta);
        assert_eq!(cert.character_discriminant, Some(1));
        assert_eq!(cert.cusp_orders[&1], Ratio::from_integer(1));
        assert!(cert.holomorphic);
    }

    #[test]
    fn b_exponent_maps_frozen() {
        assert_eq!(
            b_exponents(2, 3).unwrap(),
            BTreeMap::from([(24, 5), (48, -4), (72, 6), (96, 1)])
        );
        assert_eq!(
            b_exponents(3, 3).unwrap(),
            BTreeMap::from([(24, 70), (48, 4), (72, -21), (96, 1)])
        );
        assert!(b_exponents(2, 2).is_err(), "k ≤ 2 rejected");
        assert!(b_exponents(5, 3).is_err(), "p ∉ {{2,3}} rejected");
    }

    #[test]
    fn b_family_certificates() {
        for (p, k, weight) in [(2u64, 3u32, 4i64), (2, 4, 8), (2, 5, 16), (3, 3, 27), (3, 4, 81), (3, 5, 243)] {
            let cert = certify(&b_quotient(p, k));
            assert_eq!(cert.weight, Ratio::from_integer(weight), "weight of B_({p},{k})");
            assert!(cert.cond_24_delta, "Σδr = 456 = 24·19");
            assert!(cert.cond_24_level_over_delta);
            assert!(cert.holomorphic, "B_({p},{k}) holomorphic at every cusp");
        }
    }

    #[test]
    fn b_2_3_cusp_orders_frozen() {
        let cert = certify(&b_quotient(2, 3));
        let expected: &[(&[u64], i128)] = &[
            (&[1, 2, 3, 4, 6, 8, 12, 24], 21),
            (&[9, 18, 36, 72], 85),
            (&[16, 48], 0),
            (&[144], 16),
            (&[32, 64, 96, 128, 192, 256, 384, 768], 3),
            (&[288, 576, 1152, 2304], 19),
        ];
        let mut seen = 0;
        for &(ds, order) in expected {
            for &d in ds {
                assert_eq!(
                    cert.cusp_orders[&d],
                    Ratio::from_integer(order),
                    "cusp order of B_(2,3) at d = {d}"
                );
                seen += 1;
            }
        }
        assert_eq!(seen, 27, "all divisors of 2304 covered");
    }

    #[test]
    fn character_discriminants_frozen() {
        assert_eq!(certify(&b_quotient(2, 3)).character_discriminant, Some(1));
        assert_eq!(certify(&b_quotient(2, 4)).character_discriminant, Some(1));
        assert_eq!(certify(&b_quotient(3, 3)).character_discriminant, Some(-3));
        assert_eq!(certify(&b_quotient(3, 4)).character_discriminant, Some(-3));
    }

    #[test]
    fn character_values() {
        let b23 = b_quotient(2, 3);
        for d in [1u64, 5, 7, 11, 25, 35] {
            assert_eq!(character(&b23, d).unwrap(), 1, "trivial character at {d}");
        }
        let b33 = b_quotient(3, 3);
        assert_eq!(character(&b33, 5).unwrap(), -1, "(-3/5): -3 ≡ 2 is not a square mod 5");
        assert_eq!(character(&b33, 7).unwrap(), 1, "(-3/7): -3 ≡ 4 = 2²");
        assert_eq!(character(&b33, 35).unwrap(), -1, "multiplicative");
        assert_eq!(character(&b33, 25).unwrap(), 1, "square argument");
        assert!(character(&b33, 2).is_err(), "even d rejected");
        assert!(character(&b33, 3).is_err(), "gcd(d, N) > 1 rejected");
    }

    #[test]
    fn minimal_levels() {
        assert_eq!(min_level(&b_exponents(2, 3).unwrap()).unwrap(), 2304);
        assert_eq!(min_level(&b_exponents(2, 4).unwrap()).unwrap(), 2304);
        assert_eq!(min_level(&b_exponents(3, 3).unwrap()).unwrap(), 2304);
        assert_eq!(min_level(&b_exponents(3, 5).unwrap()).unwrap(), 2304);
        assert_eq!(min_level(&BTreeMap::from([(1, 24)])).unwrap(), 1);
        // Genuine minimality: every smaller multiple of lcm = 288 fails the
        // second 24-condition.
        let exps = b_exponents(2, 3).unwrap();
        for u in 1..8u64 {
            let n = 288 * u;
            let sum: i128 = exps.iter().map(|(&d, &r)| (n / d) as i128 * r as i128).sum();
            assert_ne!(sum.rem_euclid(24), 0, "N = {n} must fail");
        }
        // Odd exponent sum → half-integral weight → hard error.
        assert!(min_level(&BTreeMap::from([(1, 1)])).is_err());
    }

    #[test]
    fn s_indicator_rows_frozen() {
        let groups: &[&[u64]] = &[
            &[1, 2, 3, 4, 6, 8, 12, 24],
            &[9, 18, 36, 72],
            &[16, 48],
            &[144],
            &[32, 64, 96, 128, 192, 256, 384, 768],
            &[288, 576, 1152, 2304],
        ];
        for k in [3u32, 4, 5] {
            let p2 = 2i128.pow(k);
            let rows2: [Ratio<i128>; 6] = [
                Ratio::from_integer(6 * p2 - 27),
                Ratio::from_integer(6 * p2 + 37),
                Ratio::from_integer(0),
                Ratio::from_integer(16),
                Ratio::new(3, 4),
                Ratio::new(19, 4),
            ];
            let p3 = 3i128.pow(k - 1);
            let rows3: [Ratio<i128>; 6] = [
                Ratio::from_integer(32 * p3 - 27),
                Ratio::from_integer(37),
                Ratio::from_integer(8 * p3),
                Ratio::from_integer(16),
                Ratio::new(8 * p3 + 3, 4),
                Ratio::new(19, 4),
            ];
            for (group, (&v2, &v3)) in groups.iter().zip(rows2.iter().zip(rows3.iter())) {
                for &d in *group {
                    assert_eq!(s_indicator(2, k, d).unwrap(), v2, "S(2), k={k}, d={d}");
                    assert_eq!(s_indicator(3, k, d).unwrap(), v3, "S(3), k={k}, d={d}");
                }
            }
        }
        assert!(s_indicator(2, 3, 5).is_err(), "5 ∤ 2304");
        assert!(s_indicator(2, 2, 1).is_err(), "k ≤ 2");
    }

    #[test]
    fn s_indicator_sign_matches_cusp_orders() {
        for p in [2u64, 3] {
            for k in [3u32, 4, 5] {
                let cert = certify(&b_quotient(p, k));
                for d in divisors(2304) {
                    let ind = s_indicator(p, k, d).unwrap();
                    let ord = cert.cusp_orders[&d];
                    assert_eq!(
                        ind.is_negative(),
                        ord.is_negative(),
                        "sign mismatch at p={p}, k={k}, d={d}"
                    );
                    assert_eq!(ind == Ratio::from_integer(0), ord == Ratio::from_integer(0));
                }
            }
        }
    }

    #[test]
    fn build_b_matches_unreduced_exponents() {
        // The reduction η(24z)^{p^{k+1}}/η(24pz)^{p^k} ≡ 1 (mod p^{k+1})
        // makes the full exponent pattern collapse to the fixed quotient.
        for (p, k) in [(2u64, 3u32), (3, 3)] {
            let modulus = p.pow(k + 1);
            let order = 24 * 120 + 19;
            let reduced = build_b(p, k, order).unwrap();
            let full = EtaExponents::new(
                b_exponents(p, k)
                    .unwrap()
                    .into_iter()
                    .map(|(d, r)| (d / 24, r)),
            )
            .unwrap();
            let direct = eta_quotient_series(&full, 120, Some(modulus))
                .unwrap()
                .series
                .dilate(24, 19, order)
                .unwrap();
            assert_eq!(reduced, direct, "B_({p},{k}) binomial reduction");
        }
    }

    #[test]
    fn twelve_b_matches_ped_on_the_shifted_progression() {
        // 12·B_(p,k)(24n+19) ≡ ped(9n+7) (mod p^{k+1}).
        for (p, k) in [(2u64, 3u32), (3, 3)] {
            let modulus = p.pow(k + 1);
            let nmax = 200usize;
            let b = build_b(p, k, 24 * nmax + 19).unwrap().scale(12);
            let ped = ped_series(9 * nmax + 7, Some(modulus)).unwrap();
            for n in 0..=nmax {
                assert_eq!(
                    b.residue(24 * n + 19),
                    ped.residue(9 * n + 7),
                    "12·B_({p},{k}) vs ped at n = {n}"
                );
            }
            // Off-support coefficients vanish.
            for i in 0..24 * nmax {
                if i % 24 != 19 {
                    assert_eq!(b.residue(i), 0, "support of B is 19 mod 24");
                }
            }
        }
    }

    #[test]
    fn b_2_3_head_residues_frozen() {
        let b = build_b(2, 3, 200).unwrap();
        let nonzero: Vec<(usize, u64)> = (0..=200)
            .filter_map(|i| {
                let v = b.residue(i);
                (v != 0).then_some((i, v))
            })
            .collect();
        // 91 and 115 (= 24·3+19, 24·4+19) drop out: 368 and 1552 ≡ 0 (mod 16).
        assert_eq!(
            nonzero,
            vec![(19, 1), (43, 11), (67, 9), (139, 11), (163, 9), (187, 6)]
        );
    }

    #[test]
    fn hecke_input_validation() {
        let b = build_b(2, 3, 200).unwrap();
        assert!(hecke_tp(&b, 2, 4, 1).is_err(), "p | 6");
        assert!(hecke_tp(&b, 3, 4, 1).is_err(), "p | 6");
        assert!(hecke_tp(&b, 25, 4, 1).is_err(), "composite");
        assert!(hecke_tp(&b, 5, 0, 1).is_err(), "zero weight");
        assert!(hecke_tp(&b, 5, 4, 2).is_err(), "χ(p) out of range");
        let tiny = Series::one(3, Some(16));
        assert!(hecke_tp(&tiny, 5, 4, 1).is_err(), "order < p");
    }

    #[test]
    fn hecke_annihilates_b_2_3_mod_16() {
        // T₅ kills B_(2,3) mod 2⁴ outright: e.g. at n = 95,
        // b(95) = B(475) + 5³·B(19) ≡ 3 + 13 ≡ 0 (mod 16).
        let b = build_b(2, 3, 24 * 500 + 19).unwrap();
        let t5 = hecke_tp(&b, 5, 4, 1).unwrap();
        assert!(t5.is_zero(), "T₅ B_(2,3) ≡ 0 (mod 16)");
    }

    #[test]
    fn hecke_operators_commute() {
        let b = build_b(2, 3, 35 * 150 + 19).unwrap();
        let t5_then_t7 = hecke_tp(&hecke_tp(&b, 5, 4, 1).unwrap(), 7, 4, 1).unwrap();
        let t7_then_t5 = hecke_tp(&hecke_tp(&b, 7, 4, 1).unwrap(), 5, 4, 1).unwrap();
        let common = t5_then_t7.order().min(t7_then_t5.order());
        for n in 0..=common {
            assert_eq!(t5_then_t7.residue(n), t7_then_t5.residue(n), "T₅T₇ vs T₇T₅ at {n}");
        }
        assert!(common >= 150);
    }

    proptest! {
        /// T_p is linear: T_p(s·a + b) = s·T_p(a) + T_p(b) mod m.
        #[test]
        fn hecke_is_linear(
            sa in proptest::collection::vec((0usize..=60, 0i64..16), 0..12),
            sb in proptest::collection::vec((0usize..=60, 0i64..16), 0..12),
            s in 0i64..16,
        ) {
            let a = Series::from_support(60, Some(16), &sa);
            let b = Series::from_support(60, Some(16), &sb);
            let combined = a.scale(s).add(&b).unwrap();
            let lhs = hecke_tp(&combined, 5, 4, 1).unwrap();
            let rhs = hecke_tp(&a, 5, 4, 1).unwrap().scale(s)
                .add(&hecke_tp(&b, 5, 4, 1).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        /// T_p of the zero series is zero, for any admissible p.
        #[test]
        fn hecke_of_zero_is_zero(p in prop::sample::select(vec![5u64, 7, 11, 13])) {
            let z = Series::zeros(100, Some(16));
            prop_assert!(hecke_tp(&z, p, 4, 1).unwrap().is_zero());
        }
    }
}
