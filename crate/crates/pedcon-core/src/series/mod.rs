//! Truncated formal power series over exact integers or `Z/mZ`.
//!
//! A [`Series`] stores the coefficients of `Σ a_n qⁿ` for `0 ≤ n ≤ order`.
//! Operations never read or write beyond the declared truncation order, and
//! every binary operation truncates to the *minimum* of the operand orders —
//! no coefficient is ever fabricated past what both inputs can justify.
//!
//! Coefficient storage adapts to the ring:
//!
//! * exact mode keeps arbitrary-precision integers,
//! * residues mod `m ≤ 255` are packed one byte each (the family checks need
//!   millions of coefficients mod 2 or mod 24),
//! * larger moduli use a machine word per coefficient.
//!
//! Multiplication is convolution that walks the nonzero support of the
//! sparser operand, which makes products against pentagonal-support Euler
//! factors cost `O(order·√order)` instead of `O(order²)`. Inversion uses the
//! standard coefficient recurrence, again iterating only the nonzero support
//! of the series being inverted. There is deliberately no FFT: every number
//! produced here feeds a proof or a frozen test value, and exactness plus
//! auditability dominate at these sizes.

mod eta;
mod ped;
mod text;

pub use eta::{
    euler_product, euler_product_cubed, eta_quotient_series, pentagonal_terms, theta_phi,
    theta_psi, EtaExpansion, EtaExponents,
};
pub use ped::{ped_count, ped_count_table, ped_series, PED_COUNT_BUDGET};
pub use text::{read_series, series_to_string, write_series};

use crate::arith::mod_inverse;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Integer square root (floor).
pub(crate) fn isqrt(n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as usize;
    while r.checked_mul(r).map_or(true, |rr| rr > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).map_or(false, |rr| rr <= n) {
        r += 1;
    }
    r
}

/// Coefficient storage. Residue storage is chosen canonically from the
/// modulus (`Byte` iff `m ≤ 255`), so equal series always share a variant.
#[derive(Debug, Clone)]
enum Coeffs {
    /// Arbitrary-precision integers.
    Exact(Vec<BigInt>),
    /// Residues in `[0, m)` for `m ≤ 255`, one byte each.
    Byte { m: u64, c: Vec<u8> },
    /// Residues in `[0, m)` for larger moduli.
    Word { m: u64, c: Vec<u64> },
}

/// A truncated formal power series `Σ_{n=0}^{order} a_n qⁿ`.
#[derive(Debug, Clone)]
pub struct Series {
    order: usize,
    coeffs: Coeffs,
}

impl Series {
    // ------------------------------------------------------------------
    // constructors
    // ------------------------------------------------------------------

    /// The zero series of the given order over `Z` or `Z/mZ`.
    pub fn zeros(order: usize, modulus: Option<u64>) -> Series {
        match modulus {
            None => Series {
                order,
                coeffs: Coeffs::Exact(vec![BigInt::zero(); order + 1]),
            },
            Some(m) => {
                assert!(m >= 2, "modulus must be ≥ 2");
                Series {
                    order,
                    coeffs: store_mod(m, vec![0; order + 1]),
                }
            }
        }
    }

    /// The constant series 1 of the given order.
    pub fn one(order: usize, modulus: Option<u64>) -> Series {
        let mut s = Series::zeros(order, modulus);
        s.set_small(0, 1);
        s
    }

    /// Build an exact series from its coefficient vector (`order = len - 1`).
    pub fn from_exact(coeffs: Vec<BigInt>) -> Series {
        assert!(!coeffs.is_empty(), "a series has at least the constant term");
        Series {
            order: coeffs.len() - 1,
            coeffs: Coeffs::Exact(coeffs),
        }
    }

    /// Build a modular series from residues (each must lie in `[0, m)`).
    pub fn from_residues(m: u64, residues: Vec<u64>) -> Result<Series> {
        if m < 2 {
            return Err(Error::InvalidArgument(format!("modulus must be ≥ 2, got {m}")));
        }
        if residues.is_empty() {
            return Err(Error::InvalidArgument(
                "a series has at least the constant term".into(),
            ));
        }
        if let Some(&bad) = residues.iter().find(|&&v| v >= m) {
            return Err(Error::InvalidArgument(format!(
                "residue {bad} out of range for modulus {m}"
            )));
        }
        Ok(Series {
            order: residues.len() - 1,
            coeffs: store_mod(m, residues),
        })
    }

    /// Build a series of the given order from a sparse list of
    /// `(exponent, signed value)` pairs; values at the same exponent add.
    /// Exponents beyond `order` are ignored.
    pub fn from_support(order: usize, modulus: Option<u64>, support: &[(usize, i64)]) -> Series {
        let mut s = Series::zeros(order, modulus);
        match &mut s.coeffs {
            Coeffs::Exact(c) => {
                for &(g, v) in support.iter().filter(|&&(g, _)| g <= order) {
                    c[g] += v;
                }
            }
            Coeffs::Byte { m, c } => {
                for &(g, v) in support.iter().filter(|&&(g, _)| g <= order) {
                    let cur = c[g] as i64 + v.rem_euclid(*m as i64);
                    c[g] = (cur.rem_euclid(*m as i64)) as u8;
                }
            }
            Coeffs::Word { m, c } => {
                for &(g, v) in support.iter().filter(|&&(g, _)| g <= order) {
                    let cur = (c[g] as i128 + v as i128).rem_euclid(*m as i128);
                    c[g] = cur as u64;
                }
            }
        }
        s
    }

    // ------------------------------------------------------------------
    // accessors
    // ------------------------------------------------------------------

    /// Highest retained exponent.
    pub fn order(&self) -> usize {
        self.order
    }

    /// The ring modulus, or `None` for exact integer coefficients.
    pub fn modulus(&self) -> Option<u64> {
        match &self.coeffs {
            Coeffs::Exact(_) => None,
            Coeffs::Byte { m, .. } | Coeffs::Word { m, .. } => Some(*m),
        }
    }

    /// Coefficient of `qⁿ` as an exact integer (residues are lifted to
    /// their representative in `[0, m)`). Panics beyond the order: reading
    /// past the truncation is always a caller bug.
    pub fn coeff(&self, n: usize) -> BigInt {
        assert!(n <= self.order, "coefficient {n} beyond order {}", self.order);
        match &self.coeffs {
            Coeffs::Exact(c) => c[n].clone(),
            Coeffs::Byte { c, .. } => BigInt::from(c[n]),
            Coeffs::Word { c, .. } => BigInt::from(c[n]),
        }
    }

    /// Residue coefficient of `qⁿ` for modular series.
    /// Panics on exact series or beyond the order.
    pub fn residue(&self, n: usize) -> u64 {
        assert!(n <= self.order, "coefficient {n} beyond order {}", self.order);
        match &self.coeffs {
            Coeffs::Exact(_) => panic!("residue() called on an exact series"),
            Coeffs::Byte { c, .. } => c[n] as u64,
            Coeffs::Word { c, .. } => c[n],
        }
    }

    /// All coefficients as exact integers.
    pub fn coeffs_exact(&self) -> Vec<BigInt> {
        (0..=self.order).map(|n| self.coeff(n)).collect()
    }

    /// Whether every retained coefficient is zero.
    pub fn is_zero(&self) -> bool {
        match &self.coeffs {
            Coeffs::Exact(c) => c.iter().all(|v| v.is_zero()),
            Coeffs::Byte { c, .. } => c.iter().all(|&v| v == 0),
            Coeffs::Word { c, .. } => c.iter().all(|&v| v == 0),
        }
    }

    /// Number of nonzero coefficients up to and including `upto`.
    fn count_nonzero_upto(&self, upto: usize) -> usize {
        match &self.coeffs {
            Coeffs::Exact(c) => c[..=upto].iter().filter(|v| !v.is_zero()).count(),
            Coeffs::Byte { c, .. } => c[..=upto].iter().filter(|&&v| v != 0).count(),
            Coeffs::Word { c, .. } => c[..=upto].iter().filter(|&&v| v != 0).count(),
        }
    }

    fn set_small(&mut self, n: usize, v: i64) {
        match &mut self.coeffs {
            Coeffs::Exact(c) => c[n] = BigInt::from(v),
            Coeffs::Byte { m, c } => c[n] = v.rem_euclid(*m as i64) as u8,
            Coeffs::Word { m, c } => c[n] = v.rem_euclid(*m as i64) as u64,
        }
    }

    /// Residues `0..=upto` as machine words (modular series only).
    fn residues_vec(&self, upto: usize) -> Vec<u64> {
        match &self.coeffs {
            Coeffs::Exact(_) => unreachable!("residues_vec on exact series"),
            Coeffs::Byte { c, .. } => c[..=upto].iter().map(|&v| v as u64).collect(),
            Coeffs::Word { c, .. } => c[..=upto].to_vec(),
        }
    }

    fn require_same_ring(&self, other: &Series, op: &str) -> Result<()> {
        if self.modulus() != other.modulus() {
            return Err(Error::ModulusMismatch(format!(
                "{op}: left is {}, right is {}",
                ring_name(self.modulus()),
                ring_name(other.modulus())
            )));
        }
        Ok(())
    }

    // ------------------------------------------------------------------
    // ring operations
    // ------------------------------------------------------------------

    /// Truncated product; the result order is `min` of the operand orders.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.require_same_ring(other, "mul")?;
        let order = self.order.min(other.order);
        match (&self.coeffs, &other.coeffs) {
            (Coeffs::Exact(_), Coeffs::Exact(_)) => {
                // Iterate the sparser factor's support.
                let (s, d) = if self.count_nonzero_upto(order) <= other.count_nonzero_upto(order) {
                    (self, other)
                } else {
                    (other, self)
                };
                let sv = match &s.coeffs {
                    Coeffs::Exact(c) => c,
                    _ => unreachable!(),
                };
                let dv = match &d.coeffs {
                    Coeffs::Exact(c) => c,
                    _ => unreachable!(),
                };
                let mut out = vec![BigInt::zero(); order + 1];
                for (i, v) in sv.iter().take(order + 1).enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    for (j, w) in dv.iter().take(order + 1 - i).enumerate() {
                        if !w.is_zero() {
                            out[i + j] += v * w;
                        }
                    }
                }
                Ok(Series::from_exact(out))
            }
            _ => {
                let m = self.modulus().expect("both modular after ring check");
                let a = self.residues_vec(order);
                let b = other.residues_vec(order);
                let nz = |v: &[u64]| v.iter().filter(|&&x| x != 0).count();
                let (s, d) = if nz(&a) <= nz(&b) { (&a, &b) } else { (&b, &a) };
                let mut out = vec![0u64; order + 1];
                for (i, &v) in s.iter().enumerate() {
                    if v == 0 {
                        continue;
                    }
                    for (j, &w) in d.iter().take(order + 1 - i).enumerate() {
                        if w != 0 {
                            let prod = (v as u128 * w as u128) % m as u128;
                            out[i + j] = ((out[i + j] as u128 + prod) % m as u128) as u64;
                        }
                    }
                }
                Ok(Series {
                    order,
                    coeffs: store_mod(m, out),
                })
            }
        }
    }

    /// Coefficientwise sum at the shared order.
    pub fn add(&self, other: &Series) -> Result<Series> {
        self.zip_with(other, "add", |x, y| x + y, |m, x, y| (x + y) % m)
    }

    /// Coefficientwise difference at the shared order.
    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.zip_with(other, "sub", |x, y| x - y, |m, x, y| (m + x - y) % m)
    }

    fn zip_with(
        &self,
        other: &Series,
        op: &str,
        fe: impl Fn(&BigInt, &BigInt) -> BigInt,
        fm: impl Fn(u64, u64, u64) -> u64,
    ) -> Result<Series> {
        self.require_same_ring(other, op)?;
        let order = self.order.min(other.order);
        match &self.coeffs {
            Coeffs::Exact(a) => {
                let b = match &other.coeffs {
                    Coeffs::Exact(b) => b,
                    _ => unreachable!(),
                };
                Ok(Series::from_exact(
                    (0..=order).map(|n| fe(&a[n], &b[n])).collect(),
                ))
            }
            _ => {
                let m = self.modulus().expect("modular");
                let a = self.residues_vec(order);
                let b = other.residues_vec(order);
                let out = (0..=order).map(|n| fm(m, a[n], b[n])).collect();
                Ok(Series {
                    order,
                    coeffs: store_mod(m, out),
                })
            }
        }
    }

    /// Coefficientwise negation.
    pub fn neg(&self) -> Series {
        match &self.coeffs {
            Coeffs::Exact(c) => Series::from_exact(c.iter().map(|v| -v).collect()),
            _ => {
                let m = self.modulus().expect("modular");
                let v = self.residues_vec(self.order);
                Series {
                    order: self.order,
                    coeffs: store_mod(m, v.iter().map(|&x| (m - x) % m).collect()),
                }
            }
        }
    }

    /// Multiply every coefficient by the integer `c`.
    pub fn scale(&self, c: i64) -> Series {
        match &self.coeffs {
            Coeffs::Exact(v) => Series::from_exact(v.iter().map(|x| x * c).collect()),
            _ => {
                let m = self.modulus().expect("modular");
                let cr = c.rem_euclid(m as i64) as u128;
                let v = self.residues_vec(self.order);
                Series {
                    order: self.order,
                    coeffs: store_mod(
                        m,
                        v.iter().map(|&x| ((x as u128 * cr) % m as u128) as u64).collect(),
                    ),
                }
            }
        }
    }

    /// Multiplicative inverse to the same order, by the coefficient
    /// recurrence `b_n = -a_0⁻¹ Σ_{k≥1} a_k b_{n-k}`.
    ///
    /// The sum iterates only the nonzero support of `self`, so inverting a
    /// pentagonal-sparse Euler factor costs `O(order·√order)`.
    pub fn inv(&self) -> Result<Series> {
        let order = self.order;
        match &self.coeffs {
            Coeffs::Exact(c) => {
                let a0 = &c[0];
                if !a0.is_one() && *a0 != BigInt::from(-1) {
                    return Err(Error::NonUnitConstant(format!(
                        "exact inversion needs constant term ±1, got {a0}"
                    )));
                }
                // a0 = ±1 is its own inverse.
                let nz: Vec<(usize, &BigInt)> = c
                    .iter()
                    .enumerate()
                    .skip(1)
                    .filter(|(_, v)| !v.is_zero())
                    .collect();
                let mut b = vec![BigInt::zero(); order + 1];
                b[0] = a0.clone();
                for n in 1..=order {
                    let mut s = BigInt::zero();
                    for &(k, v) in nz.iter().take_while(|&&(k, _)| k <= n) {
                        s += v * &b[n - k];
                    }
                    b[n] = -(a0 * s);
                }
                Ok(Series::from_exact(b))
            }
            _ => {
                let m = self.modulus().expect("modular");
                let a = self.residues_vec(order);
                let inv0 = mod_inverse(a[0], m).ok_or_else(|| {
                    Error::NonUnitConstant(format!(
                        "constant term {} is not invertible mod {m}",
                        a[0]
                    ))
                })?;
                let nz: Vec<(usize, u64)> = a
                    .iter()
                    .enumerate()
                    .skip(1)
                    .filter_map(|(k, &v)| (v != 0).then_some((k, v)))
                    .collect();
                let mut b = vec![0u64; order + 1];
                b[0] = inv0;
                for n in 1..=order {
                    let mut s: u128 = 0;
                    for &(k, v) in nz.iter().take_while(|&&(k, _)| k <= n) {
                        s = (s + v as u128 * b[n - k] as u128) % m as u128;
                    }
                    let t = (inv0 as u128 * s) % m as u128;
                    b[n] = ((m as u128 - t) % m as u128) as u64;
                }
                Ok(Series {
                    order,
                    coeffs: store_mod(m, b),
                })
            }
        }
    }

    /// Integer power. `pow(a, 0) = 1`; negative exponents invert.
    ///
    /// Sparse bases (such as Euler factors) are raised by iterated
    /// multiplication so every intermediate product walks the sparse
    /// support; dense bases fall back to repeated squaring.
    pub fn pow(&self, e: i64) -> Result<Series> {
        if e == 0 {
            return Ok(Series::one(self.order, self.modulus()));
        }
        if e < 0 {
            return self.pow(e.checked_neg().ok_or_else(|| {
                Error::InvalidArgument("exponent out of range".into())
            })?)?.inv();
        }
        let e = e as u64;
        let nnz = self.count_nonzero_upto(self.order);
        let sparse = nnz <= 8 * isqrt(self.order + 1) + 16;
        if sparse && e <= 256 {
            let mut acc = Series::one(self.order, self.modulus());
            for _ in 0..e {
                acc = acc.mul(self)?;
            }
            Ok(acc)
        } else {
            let mut acc = Series::one(self.order, self.modulus());
            let mut base = self.clone();
            let mut e = e;
            loop {
                if e & 1 == 1 {
                    acc = acc.mul(&base)?;
                }
                e >>= 1;
                if e == 0 {
                    break;
                }
                base = base.mul(&base)?;
            }
            Ok(acc)
        }
    }

    // ------------------------------------------------------------------
    // structural operations
    // ------------------------------------------------------------------

    /// Reduce coefficients into `[0, m)`. Exact series reduce directly; a
    /// modular series can only be reduced to a divisor of its modulus
    /// (anything else would fabricate information).
    pub fn reduce_mod(&self, m: u64) -> Result<Series> {
        if m < 2 {
            return Err(Error::InvalidArgument(format!("modulus must be ≥ 2, got {m}")));
        }
        match &self.coeffs {
            Coeffs::Exact(c) => {
                let mb = BigInt::from(m);
                let out = c
                    .iter()
                    .map(|v| {
                        let mut r = v % &mb;
                        if r.is_negative() {
                            r += &mb;
                        }
                        // residue < m ≤ u64::MAX
                        let (_, digits) = r.to_u64_digits();
                        digits.first().copied().unwrap_or(0)
                    })
                    .collect();
                Ok(Series {
                    order: self.order,
                    coeffs: store_mod(m, out),
                })
            }
            _ => {
                let m0 = self.modulus().expect("modular");
                if m0 % m != 0 {
                    return Err(Error::ModulusMismatch(format!(
                        "cannot reduce mod {m}: it does not divide the stored modulus {m0}"
                    )));
                }
                let v = self.residues_vec(self.order);
                Ok(Series {
                    order: self.order,
                    coeffs: store_mod(m, v.iter().map(|&x| x % m).collect()),
                })
            }
        }
    }

    /// The series of every `m`-th coefficient starting at `t`: coefficient
    /// `n` of the result is `a(mn + t)`; the result order is
    /// `⌊(order - t)/m⌋`.
    pub fn extract_progression(&self, m: usize, t: usize) -> Result<Series> {
        if m == 0 || t >= m {
            return Err(Error::InvalidArgument(format!(
                "progression offset must satisfy 0 ≤ t < m, got t={t}, m={m}"
            )));
        }
        if t > self.order {
            return Err(Error::InvalidArgument(format!(
                "progression start {t} is beyond the series order {}",
                self.order
            )));
        }
        let new_order = (self.order - t) / m;
        match &self.coeffs {
            Coeffs::Exact(c) => Ok(Series::from_exact(
                (0..=new_order).map(|n| c[m * n + t].clone()).collect(),
            )),
            _ => {
                let md = self.modulus().expect("modular");
                let out = (0..=new_order).map(|n| self.residue(m * n + t)).collect();
                Ok(Series {
                    order: new_order,
                    coeffs: store_mod(md, out),
                })
            }
        }
    }

    /// `q^offset · f(q^step)` truncated at `new_order`: coefficient
    /// `step·k + offset` of the result is coefficient `k` of `self`.
    pub fn dilate(&self, step: usize, offset: usize, new_order: usize) -> Result<Series> {
        if step == 0 {
            return Err(Error::InvalidArgument("dilation step must be ≥ 1".into()));
        }
        let mut out = Series::zeros(new_order, self.modulus());
        let kmax = if new_order >= offset {
            ((new_order - offset) / step).min(self.order)
        } else {
            return Ok(out);
        };
        match (&self.coeffs, &mut out.coeffs) {
            (Coeffs::Exact(src), Coeffs::Exact(dst)) => {
                for k in 0..=kmax {
                    dst[step * k + offset] = src[k].clone();
                }
            }
            (Coeffs::Byte { c: src, .. }, Coeffs::Byte { c: dst, .. }) => {
                for k in 0..=kmax {
                    dst[step * k + offset] = src[k];
                }
            }
            (Coeffs::Word { c: src, .. }, Coeffs::Word { c: dst, .. }) => {
                for k in 0..=kmax {
                    dst[step * k + offset] = src[k];
                }
            }
            _ => unreachable!("storage is canonical per modulus"),
        }
        Ok(out)
    }
}

impl PartialEq for Series {
    fn eq(&self, other: &Self) -> bool {
        if self.order != other.order || self.modulus() != other.modulus() {
            return false;
        }
        match (&self.coeffs, &other.coeffs) {
            (Coeffs::Exact(a), Coeffs::Exact(b)) => a == b,
            _ => (0..=self.order).all(|n| self.residue(n) == other.residue(n)),
        }
    }
}

impl Eq for Series {}

fn ring_name(m: Option<u64>) -> String {
    match m {
        None => "exact".to_string(),
        Some(m) => format!("mod {m}"),
    }
}

/// Canonical storage for residues mod `m`.
fn store_mod(m: u64, v: Vec<u64>) -> Coeffs {
    debug_assert!(v.iter().all(|&x| x < m));
    if m <= 255 {
        Coeffs::Byte {
            m,
            c: v.into_iter().map(|x| x as u8).collect(),
        }
    } else {
        Coeffs::Word { m, c: v }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn geometric(order: usize) -> Series {
        Series::from_exact(vec![BigInt::from(1); order + 1])
    }

    fn one_minus_q(order: usize) -> Series {
        Series::from_support(order, None, &[(0, 1), (1, -1)])
    }

    #[test]
    fn mul_geometric_inverse() {
        let prod = one_minus_q(40).mul(&geometric(40)).unwrap();
        assert_eq!(prod, Series::one(40, None), "(1-q)·Σqⁿ = 1 at any order");
    }

    #[test]
    fn mul_truncates_to_min_order() {
        let a = geometric(10);
        let b = geometric(7);
        assert_eq!(a.mul(&b).unwrap().order(), 7);
    }

    #[test]
    fn mul_rejects_mixed_rings() {
        let a = Series::one(5, None);
        let b = Series::one(5, Some(7));
        assert!(matches!(a.mul(&b), Err(Error::ModulusMismatch(_))));
        let c = Series::one(5, Some(5));
        assert!(matches!(b.mul(&c), Err(Error::ModulusMismatch(_))));
    }

    #[test]
    fn inv_of_geometric_is_one_minus_q() {
        assert_eq!(geometric(30).inv().unwrap(), one_minus_q(30));
    }

    #[test]
    fn inv_counts_partitions_of_four() {
        // 1/(q;q)_∞ is the partition generating function; p(4) = 5.
        let f1 = euler_product(1, 10, None).unwrap();
        let p = f1.inv().unwrap();
        assert_eq!(p.coeff(4), BigInt::from(5), "partitions of 4: 4, 3+1, 2+2, 2+1+1, 1+1+1+1");
    }

    #[test]
    fn inv_requires_unit_constant() {
        let s = Series::from_support(5, None, &[(0, 2)]);
        assert!(matches!(s.inv(), Err(Error::NonUnitConstant(_))));
        let t = Series::from_support(5, Some(16), &[(0, 2)]);
        assert!(matches!(t.inv(), Err(Error::NonUnitConstant(_))));
        // 2 is a unit mod 9.
        let u = Series::from_support(5, Some(9), &[(0, 2)]);
        assert!(u.inv().is_ok());
    }

    #[test]
    fn inv_exists_mod_16_for_even_series() {
        // Constant term 1 is a unit mod 16 even though the ring has zero divisors.
        let f2 = euler_product(2, 50, Some(16)).unwrap();
        let f2_4 = f2.pow(4).unwrap();
        let inv = f2_4.inv().unwrap();
        assert_eq!(f2_4.mul(&inv).unwrap(), Series::one(50, Some(16)));
    }

    #[test]
    fn pow_edge_cases() {
        let f1 = euler_product(1, 30, None).unwrap();
        assert_eq!(f1.pow(1).unwrap(), f1, "a¹ = a");
        assert_eq!(f1.pow(0).unwrap(), Series::one(30, None), "a⁰ = 1");
        assert_eq!(f1.pow(-1).unwrap(), f1.inv().unwrap(), "a⁻¹ = inv(a)");
        // Dense base exercises the repeated-squaring branch.
        let dense = geometric(30);
        assert_eq!(
            dense.pow(4).unwrap(),
            dense.mul(&dense).unwrap().mul(&dense).unwrap().mul(&dense).unwrap()
        );
    }

    #[test]
    fn reduce_mod_values_and_idempotence() {
        let s = Series::from_support(3, None, &[(0, -1), (2, 25)]);
        let r = s.reduce_mod(5).unwrap();
        assert_eq!(r.residue(0), 4, "-1 ≡ 4 (mod 5)");
        assert_eq!(r.residue(2), 0);
        assert_eq!(r.reduce_mod(5).unwrap(), r, "reducing twice equals once");
        // Reducing mod a non-divisor of the stored modulus must fail.
        assert!(r.reduce_mod(3).is_err());
        assert!(r.reduce_mod(5).is_ok());
    }

    #[test]
    fn extract_progression_identity_and_errors() {
        let f1 = euler_product(1, 25, None).unwrap();
        assert_eq!(f1.extract_progression(1, 0).unwrap(), f1);
        assert!(f1.extract_progression(3, 3).is_err(), "t ≥ m is rejected");
        let sub = f1.extract_progression(5, 2).unwrap();
        assert_eq!(sub.order(), (25 - 2) / 5);
        for n in 0..=sub.order() {
            assert_eq!(sub.coeff(n), f1.coeff(5 * n + 2));
        }
    }

    #[test]
    fn dilate_then_extract_roundtrips() {
        let f1 = euler_product(1, 20, Some(97)).unwrap();
        let d = f1.dilate(24, 19, 24 * 20 + 19).unwrap();
        assert_eq!(d.extract_progression(24, 19).unwrap(), f1);
        // All other residue classes are zero.
        for t in 0..24 {
            if t != 19 {
                assert!(d.extract_progression(24, t).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn byte_and_word_storage_round_values() {
        let small = Series::from_residues(24, vec![0, 23, 12]).unwrap();
        assert_eq!(small.residue(1), 23);
        let big = Series::from_residues(1 << 20, vec![0, 1_000_000]).unwrap();
        assert_eq!(big.residue(1), 1_000_000);
        assert!(Series::from_residues(24, vec![24]).is_err(), "out-of-range residue");
    }

    // --- property tests -------------------------------------------------

    /// Random sparse series mod m as (support, value) pairs.
    fn sparse_series(order: usize, m: u64) -> impl Strategy<Value = Series> {
        proptest::collection::vec((0..=order, 0..m as i64), 0..12).prop_map(move |sup| {
            Series::from_support(order, Some(m), &sup)
        })
    }

    proptest! {
        #[test]
        fn ring_laws_mod_m(
            a in sparse_series(36, 13),
            b in sparse_series(36, 13),
            c in sparse_series(36, 13),
        ) {
            // commutativity
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            // associativity
            prop_assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
            // distributivity
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
        }

        /// mul(a, inv(a)) = 1 exactly, for random unit-constant series.
        #[test]
        fn inv_is_a_right_inverse(
            mut sup in proptest::collection::vec((1usize..=30, -50i64..50), 0..10),
            unit_negative: bool,
        ) {
            sup.push((0, if unit_negative { -1 } else { 1 }));
            let a = Series::from_support(30, None, &sup);
            let inv = a.inv().unwrap();
            prop_assert_eq!(a.mul(&inv).unwrap(), Series::one(30, None));
        }

        #[test]
        fn inv_is_a_right_inverse_mod_m(
            sup in proptest::collection::vec((1usize..=30, 0i64..16), 0..10),
            a0 in prop::sample::select(vec![1i64, 3, 5, 7, 9, 11, 13, 15]),
        ) {
            let mut sup = sup;
            sup.push((0, a0)); // odd constant → unit mod 16
            let a = Series::from_support(30, Some(16), &sup);
            let inv = a.inv().unwrap();
            prop_assert_eq!(a.mul(&inv).unwrap(), Series::one(30, Some(16)));
        }

        /// Exact and modular multiplication agree through reduction.
        #[test]
        fn mul_commutes_with_reduction(
            sa in proptest::collection::vec((0usize..=24, -9i64..9), 0..10),
            sb in proptest::collection::vec((0usize..=24, -9i64..9), 0..10),
            m in 2u64..40,
        ) {
            let a = Series::from_support(24, None, &sa);
            let b = Series::from_support(24, None, &sb);
            let exact_then_reduce = a.mul(&b).unwrap().reduce_mod(m).unwrap();
            let reduce_then_mul = a
                .reduce_mod(m).unwrap()
                .mul(&b.reduce_mod(m).unwrap()).unwrap();
            prop_assert_eq!(exact_then_reduce, reduce_then_mul);
        }
    }
}
