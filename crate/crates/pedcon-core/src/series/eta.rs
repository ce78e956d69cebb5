//! Euler products, eta-quotient expansions, and theta series.
//!
//! `f_k` denotes `(q^k;q^k)_∞ = Π_{n≥1}(1 - q^{kn})`. By the pentagonal
//! number theorem its expansion has `O(√(order/k))` nonzero terms, which is
//! what makes products and inverses of these factors cheap. The cube `f_k³`
//! has an equally sparse expansion by Jacobi's identity and is provided
//! directly so sixth powers can be formed as `(f_k³)²` with one dense
//! product instead of five.

use super::{Series, isqrt};
use crate::error::{Error, Result};
use num_rational::Ratio;
use std::collections::BTreeMap;

/// Exponent/sign pairs of the pentagonal expansion
/// `(q;q)_∞ = Σ_{j∈Z} (-1)^j q^{j(3j-1)/2}`, for exponents up to `order`,
/// sorted ascending. The `j = 0` constant term `(0, 1)` is included.
pub fn pentagonal_terms(order: usize) -> Vec<(usize, i64)> {
    let mut out = vec![(0usize, 1i64)];
    let mut j: i64 = 1;
    loop {
        let g_pos = (j * (3 * j - 1) / 2) as usize;
        let g_neg = (j * (3 * j + 1) / 2) as usize;
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let mut added = false;
        if g_pos <= order {
            out.push((g_pos, sign));
            added = true;
        }
        if g_neg <= order {
            out.push((g_neg, sign));
            added = true;
        }
        if !added {
            break;
        }
        j += 1;
    }
    out.sort_unstable();
    out
}

/// The Euler product `f_k = (q^k;q^k)_∞` truncated at `order`.
pub fn euler_product(k: u64, order: usize, modulus: Option<u64>) -> Result<Series> {
    if k == 0 {
        return Err(Error::InvalidArgument("Euler product index k must be ≥ 1".into()));
    }
    let inner = order / k as usize;
    let support: Vec<(usize, i64)> = pentagonal_terms(inner)
        .into_iter()
        .map(|(g, s)| (g * k as usize, s))
        .collect();
    Ok(Series::from_support(order, modulus, &support))
}

/// `f_k³` by Jacobi's identity
/// `(q;q)_∞³ = Σ_{j≥0} (-1)^j (2j+1) q^{j(j+1)/2}` — as sparse as `f_k`
/// itself, so sixth powers cost one dense product via `(f_k³)²`.
pub fn euler_product_cubed(k: u64, order: usize, modulus: Option<u64>) -> Result<Series> {
    if k == 0 {
        return Err(Error::InvalidArgument("Euler product index k must be ≥ 1".into()));
    }
    let inner = order / k as usize;
    let mut support = Vec::with_capacity(2 * isqrt(inner) + 2);
    let mut j: i64 = 0;
    loop {
        let g = (j * (j + 1) / 2) as usize;
        if g > inner {
            break;
        }
        let v = if j % 2 == 0 { 2 * j + 1 } else { -(2 * j + 1) };
        support.push((g * k as usize, v));
        j += 1;
    }
    Ok(Series::from_support(order, modulus, &support))
}

/// A finite eta-exponent assignment `δ ↦ r_δ` with an index scale, so that
/// the assignment describes `Π_δ η(scale·δ·z)^{r_δ}` (the scale carries the
/// ×24 in shapes like `η(24z)` without renaming the divisors).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaExponents {
    exponents: BTreeMap<u64, i64>,
    scale: u64,
}

impl EtaExponents {
    /// Exponent map with scale 1. Zero exponents are dropped; the map must
    /// end up nonempty and the indices distinct.
    pub fn new(pairs: impl IntoIterator<Item = (u64, i64)>) -> Result<EtaExponents> {
        EtaExponents::with_scale(pairs, 1)
    }

    /// Exponent map describing `Π_δ η(scale·δ·z)^{r_δ}`.
    pub fn with_scale(
        pairs: impl IntoIterator<Item = (u64, i64)>,
        scale: u64,
    ) -> Result<EtaExponents> {
        if scale == 0 {
            return Err(Error::InvalidArgument("eta index scale must be ≥ 1".into()));
        }
        let mut exponents = BTreeMap::new();
        for (delta, r) in pairs {
            if delta == 0 {
                return Err(Error::InvalidArgument("eta index δ must be ≥ 1".into()));
            }
            if r == 0 {
                continue;
            }
            if exponents.insert(delta, r).is_some() {
                return Err(Error::InvalidArgument(format!(
                    "duplicate eta index δ = {delta}"
                )));
            }
        }
        if exponents.is_empty() {
            return Err(Error::InvalidArgument(
                "eta exponent map must contain a nonzero exponent".into(),
            ));
        }
        Ok(EtaExponents { exponents, scale })
    }

    /// The exponent map `δ ↦ r_δ` (zeros omitted).
    pub fn exponents(&self) -> &BTreeMap<u64, i64> {
        &self.exponents
    }

    /// The index scale.
    pub fn scale(&self) -> u64 {
        self.scale
    }

    /// `Σ_δ (scale·δ)·r_δ / 24`, the exponent of the `q`-power prefactor
    /// that converts the plain product `Π f_{scale·δ}^{r_δ}` into the
    /// genuine eta product `Π η(scale·δ·z)^{r_δ}`.
    pub fn prefactor_exponent(&self) -> Ratio<i64> {
        let sum: i64 = self
            .exponents
            .iter()
            .map(|(&d, &r)| (self.scale * d) as i64 * r)
            .sum();
        Ratio::new(sum, 24)
    }
}

/// An eta-quotient expansion: the plain power-series part together with the
/// rational exponent of the `q`-power prefactor it carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaExpansion {
    /// `Π_δ f_{scale·δ}^{r_δ}` truncated.
    pub series: Series,
    /// Exponent of the suppressed `q`-prefactor, `Σ (scale·δ) r_δ / 24`.
    pub prefactor: Ratio<i64>,
}

/// Expand `Π_δ f_{scale·δ}^{r_δ}` to `order`, reporting the prefactor
/// exponent separately. Negative exponents invert (the constant terms are
/// all 1, hence always units).
pub fn eta_quotient_series(
    eq: &EtaExponents,
    order: usize,
    modulus: Option<u64>,
) -> Result<EtaExpansion> {
    let mut acc = Series::one(order, modulus);
    for (&delta, &r) in eq.exponents() {
        let f = euler_product(eq.scale() * delta, order, modulus)?;
        acc = acc.mul(&f.pow(r)?)?;
    }
    Ok(EtaExpansion {
        series: acc,
        prefactor: eq.prefactor_exponent(),
    })
}

/// `φ(q) = Σ_{n∈Z} q^{n²} = 1 + 2Σ_{n≥1} q^{n²}`, exact.
pub fn theta_phi(order: usize) -> Series {
    let mut support = vec![(0usize, 1i64)];
    let mut n = 1usize;
    while n * n <= order {
        support.push((n * n, 2));
        n += 1;
    }
    Series::from_support(order, None, &support)
}

/// `ψ(q) = Σ_{n≥0} q^{n(n+1)/2}`, exact.
pub fn theta_psi(order: usize) -> Series {
    let mut support = Vec::new();
    let mut n = 0usize;
    loop {
        let g = n * (n + 1) / 2;
        if g > order {
            break;
        }
        support.push((g, 1));
        n += 1;
    }
    Series::from_support(order, None, &support)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ped_series;
    use num_bigint::BigInt;

    #[test]
    fn euler_product_small_heads() {
        // 1 - q - q² + q⁵ + q⁷ (pentagonal exponents 0,1,2,5,7).
        let f1 = euler_product(1, 7, None).unwrap();
        let expected: Vec<i64> = vec![1, -1, -1, 0, 0, 1, 0, 1];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(f1.coeff(n), BigInt::from(e), "f₁ coefficient at {n}");
        }
        // Smallest pentagonal exponent for k=2 is 2, so order 1 sees only 1.
        assert_eq!(euler_product(2, 1, None).unwrap(), Series::one(1, None));
        assert_eq!(euler_product(1, 0, None).unwrap(), Series::one(0, None));
        assert!(euler_product(0, 5, None).is_err());
    }

    #[test]
    fn pentagonal_terms_are_sorted_and_signed() {
        let terms = pentagonal_terms(15);
        assert_eq!(terms, vec![(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1), (15, -1)]);
    }

    #[test]
    fn pentagonal_expansion_matches_finite_product() {
        // Π_{n≤500}(1−qⁿ) truncated at 500 equals the pentagonal expansion.
        let order = 500;
        let mut direct = Series::one(order, None);
        for n in 1..=order {
            let factor = Series::from_support(order, None, &[(0, 1), (n, -1)]);
            direct = direct.mul(&factor).unwrap();
        }
        assert_eq!(direct, euler_product(1, order, None).unwrap());
    }

    #[test]
    fn cubed_matches_pow_three() {
        for k in [1u64, 3] {
            let direct = euler_product_cubed(k, 400, None).unwrap();
            let powed = euler_product(k, 400, None).unwrap().pow(3).unwrap();
            assert_eq!(direct, powed, "Jacobi cube for k={k}");
        }
    }

    #[test]
    fn binomial_congruence_for_euler_powers() {
        // f_r^{p^k} ≡ f_{pr}^{p^{k-1}} (mod p^k).
        for p in [2u64, 3] {
            for k in 1..=3u32 {
                for r in [1u64, 2] {
                    let m = p.pow(k);
                    let lhs = euler_product(r, 300, Some(m))
                        .unwrap()
                        .pow(p.pow(k) as i64)
                        .unwrap();
                    let rhs = euler_product(p * r, 300, Some(m))
                        .unwrap()
                        .pow(p.pow(k - 1) as i64)
                        .unwrap();
                    assert_eq!(lhs, rhs, "f_{r}^{{{p}^{k}}} mod {m}");
                }
            }
        }
    }

    #[test]
    fn eta_exponents_validation() {
        assert!(EtaExponents::new([(1, -11), (2, 4)]).is_ok());
        assert!(EtaExponents::new([(1, 1), (1, 2)]).is_err(), "duplicate δ");
        assert!(EtaExponents::new([(0, 1)]).is_err(), "δ = 0");
        assert!(EtaExponents::new([(1, 0)]).is_err(), "all-zero map");
        assert!(EtaExponents::with_scale([(1, 1)], 0).is_err(), "zero scale");
        // Zero exponents are dropped but the rest survive.
        let eq = EtaExponents::new([(1, 1), (2, 0)]).unwrap();
        assert_eq!(eq.exponents().len(), 1);
    }

    #[test]
    fn prefactor_exponents() {
        // Σδr = -11 + 8 + 18 + 4 = 19.
        let eq = EtaExponents::new([(1, -11), (2, 4), (3, 6), (4, 1)]).unwrap();
        assert_eq!(eq.prefactor_exponent(), Ratio::new(19, 24));
        // Same exponents at scale 24: Σ(24δ)r = 456, prefactor exponent 19.
        let eq24 = EtaExponents::with_scale([(1, -11), (2, 4), (3, 6), (4, 1)], 24).unwrap();
        assert_eq!(eq24.prefactor_exponent(), Ratio::new(19, 1));
    }

    #[test]
    fn single_factor_quotient_is_euler_product() {
        let eq = EtaExponents::new([(1, 1)]).unwrap();
        let exp = eta_quotient_series(&eq, 120, None).unwrap();
        assert_eq!(exp.series, euler_product(1, 120, None).unwrap());
        assert_eq!(exp.prefactor, Ratio::new(1, 24));
    }

    #[test]
    fn twelve_times_quotient_counts_ped_on_nine_n_plus_seven() {
        // 12·f₂⁴f₃⁶f₄/f₁¹¹ generates ped(9n+7).
        let eq = EtaExponents::new([(1, -11), (2, 4), (3, 6), (4, 1)]).unwrap();
        let c = eta_quotient_series(&eq, 60, None).unwrap().series;
        let ped = ped_series(9 * 60 + 7, None).unwrap();
        let prog = ped.extract_progression(9, 7).unwrap();
        assert_eq!(c.scale(12), prog);
        // Head values: ped(7)=12, ped(16)=132.
        assert_eq!(prog.coeff(0), BigInt::from(12));
        assert_eq!(prog.coeff(1), BigInt::from(132));
    }

    #[test]
    fn flipped_quotient_agrees_mod_16() {
        // f₁⁵f₃⁶f₄/f₂⁴ ≡ f₂⁴f₃⁶f₄/f₁¹¹ (mod 16): the two differ by
        // (f₁/f₂⁸)·f₁¹⁶ ≡ 1 factors mod 2⁴.
        let lhs = EtaExponents::new([(1, 5), (2, -4), (3, 6), (4, 1)]).unwrap();
        let rhs = EtaExponents::new([(1, -11), (2, 4), (3, 6), (4, 1)]).unwrap();
        let a = eta_quotient_series(&lhs, 260, Some(16)).unwrap().series;
        let c = eta_quotient_series(&rhs, 260, Some(16)).unwrap().series;
        assert_eq!(a, c);
    }

    #[test]
    fn theta_functions_match_their_eta_quotients() {
        let order = 200;
        // φ = f₂⁵/(f₁²f₄²)
        let phi_eq = EtaExponents::new([(1, -2), (2, 5), (4, -2)]).unwrap();
        assert_eq!(
            theta_phi(order),
            eta_quotient_series(&phi_eq, order, None).unwrap().series
        );
        // ψ = f₂²/f₁
        let psi_eq = EtaExponents::new([(1, -1), (2, 2)]).unwrap();
        assert_eq!(
            theta_psi(order),
            eta_quotient_series(&psi_eq, order, None).unwrap().series
        );
        assert_eq!(theta_phi(0), Series::one(0, None));
        assert_eq!(theta_psi(0), Series::one(0, None));
    }

    #[test]
    fn psi_times_f1_is_f2_squared() {
        let order = 200;
        let lhs = theta_psi(order).mul(&euler_product(1, order, None).unwrap()).unwrap();
        let rhs = euler_product(2, order, None).unwrap().pow(2).unwrap();
        assert_eq!(lhs, rhs);
    }
}
