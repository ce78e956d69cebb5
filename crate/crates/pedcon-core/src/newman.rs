//! The coefficient system `a(n) := [f₁f₃⁶](n)`, its Newman three-term
//! recurrence, the parity invariant `ω(p)`, and desk-scale verification of
//! the congruence families that follow from them.
//!
//! Everything here revolves around one reduction: `Σ ped(9n+7)qⁿ` is
//! exactly `12·f₂⁴f₃⁶f₄/f₁¹¹`, and mod 24 that collapses to `12·f₁f₃⁶`.
//! So a claim `ped(9m+7) ≡ 0 (mod 24)` is equivalent to `a(m) ≡ 0 (mod 2)`,
//! and the mod-24 families are swept on the 2-adic residues of `a` — a 9×
//! saving in required series order over sweeping `ped` itself (the
//! equivalence is pinned by its own test below). The mod-192 conjecture
//! family has no such reduction and is swept on the ped series directly.
//!
//! Conventions:
//! - `a(x) = 0` whenever `x` is negative or non-integral (the recurrence's
//!   trailing term uses this silently);
//! - `ω(p)` uses the Legendre-symbol convention `(x/p) = 0` when `p | x`,
//!   which absorbs the `p | Δ` special case (e.g. `p = 19`) with no extra
//!   branch;
//! - density counts run over `0 ≤ n < X`, so each reported fraction has
//!   exactly `X` samples.

use crate::arith::{gcd, is_prime, legendre};
use crate::error::{Error, Result};
use crate::series::{euler_product, euler_product_cubed, ped_series, Series};
use num_bigint::BigInt;
use num_integer::Integer;
use std::fmt;

/// Order cap for sweeps on the sparse mod-2 series `f₁f₃⁶`.
pub const A_SWEEP_BUDGET: usize = 2_000_000;
/// Order cap for sweeps on the ped series (denser, but a cheap recurrence).
pub const PED_SWEEP_BUDGET: usize = 10_000_000;

fn require_prime_ge_5(p: u64) -> Result<()> {
    if p < 5 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("p = {p} must be a prime ≥ 5")));
    }
    Ok(())
}

/// `Δ(p) = 19(p²−1)/24` — an integer for every prime `p ≥ 5` because
/// `p² ≡ 1 (mod 24)`.
pub fn delta_of(p: u64) -> Result<u64> {
    require_prime_ge_5(p)?;
    let p2 = p
        .checked_mul(p)
        .ok_or_else(|| Error::Budget(format!("p² overflows for p = {p}")))?;
    debug_assert_eq!((p2 - 1) % 24, 0);
    Ok(19 * ((p2 - 1) / 24))
}

/// Expansion of `f₁f₃⁶`, assembled as `f₁·(f₃³)²` so every factor is given
/// by a closed sparse support (pentagonal numbers and triangular numbers).
pub fn coeff_a(order: usize, modulus: Option<u64>) -> Result<Series> {
    let cube = euler_product_cubed(3, order, modulus)?;
    euler_product(1, order, modulus)?.mul(&cube)?.mul(&cube)
}

/// `ω(p)` together with the data that went into it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Omega {
    pub p: u64,
    /// `Δ(p) = 19(p²−1)/24`.
    pub delta: u64,
    /// `ω(p) = a(Δ) + p²·(−2/p)·(−Δ/p)`, exact.
    pub value: BigInt,
    /// Parity class: selects which congruence family the prime feeds.
    pub is_even: bool,
}

/// Compute `ω(p)` exactly.
pub fn omega(p: u64) -> Result<Omega> {
    let delta = delta_of(p)?;
    if delta as usize > A_SWEEP_BUDGET {
        return Err(Error::Budget(format!(
            "Δ({p}) = {delta} exceeds the series budget {A_SWEEP_BUDGET}"
        )));
    }
    let a = coeff_a(delta as usize, None)?;
    let sym = legendre(-2, p)? * legendre(-(delta as i64), p)?;
    let value = a.coeff(delta as usize) + BigInt::from(p as i128 * p as i128 * sym as i128);
    let is_even = value.is_even();
    Ok(Omega { p, delta, value, is_even })
}

/// Outcome of checking the exact recurrence
/// `a(p²n + Δ) = (ω(p) − p²(−2/p)((n−Δ)/p))·a(n) − p⁵·a((n−Δ)/p²)`
/// over `0 ≤ n ≤ nmax`, entirely in `Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceReport {
    pub p: u64,
    pub nmax: usize,
    /// Expansion order the check consumed: `p²·nmax + Δ`.
    pub order: usize,
    pub first_violation: Option<usize>,
}

impl RecurrenceReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// One step of the recurrence at index `n` against a fixed exact expansion.
fn recurrence_holds_at(a: &Series, p: u64, omega: &BigInt, delta: usize, n: usize) -> Result<bool> {
    let lhs = a.coeff((p * p) as usize * n + delta);
    let sym = legendre(-2, p)? * legendre(n as i64 - delta as i64, p)?;
    let gamma = omega - BigInt::from(p as i128 * p as i128 * sym as i128);
    let mut rhs = gamma * a.coeff(n);
    if n >= delta && (n - delta) % ((p * p) as usize) == 0 {
        rhs -= BigInt::from(p).pow(5) * a.coeff((n - delta) / (p * p) as usize);
    }
    Ok(lhs == rhs)
}

/// Verify the exact recurrence for all `0 ≤ n ≤ nmax`.
pub fn recurrence_check(p: u64, nmax: usize) -> Result<RecurrenceReport> {
    let om = omega(p)?;
    let delta = om.delta as usize;
    let order = (p as usize * p as usize)
        .checked_mul(nmax)
        .and_then(|x| x.checked_add(delta))
        .filter(|&x| x <= A_SWEEP_BUDGET)
        .ok_or_else(|| {
            Error::Budget(format!(
                "recurrence check for p = {p}, nmax = {nmax} exceeds the series budget"
            ))
        })?;
    let a = coeff_a(order, None)?;
    let mut first_violation = None;
    for n in 0..=nmax {
        if !recurrence_holds_at(&a, p, &om.value, delta, n)? {
            first_violation = Some(n);
            break;
        }
    }
    Ok(RecurrenceReport { p, nmax, order, first_violation })
}

/// The congruence families this toolkit can sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `ped(9p^{4k+4}n + 9p^{4k+3}j + (57p^{4k+4}−1)/8) ≡ 0 (mod 24)`,
    /// `1 ≤ j ≤ p−1`; requires `ω(p)` even.
    T31,
    /// `ped(9n+7) ≡ ped(9·19^{4k+2}n + (57·19^{4k+2}−1)/8) (mod 24)` for
    /// `19 ∤ 24n+19`; specific to `p = 19`.
    T331,
    /// `ped(9p^{6k+6}n + 9p^{6k+5}j + (57p^{6k+6}−1)/8) ≡ 0 (mod 24)`,
    /// `1 ≤ j ≤ p−1`; requires `ω(p)` odd.
    T22,
    /// `ped(9p^{6k+2}n + (57p^{6k+2}−1)/8) ≡ 0 (mod 24)` for `p ∤ 24n+19`,
    /// `p ≠ 19`; requires `ω(p)` odd.
    T33,
    /// `ped(225n + B) ≡ 0 (mod 192)` for `B ∈ {43, 88, 133, 223}`.
    C192,
}

impl Family {
    /// Parse a family id; dots are optional and case is ignored.
    pub fn parse(s: &str) -> Result<Family> {
        let norm: String = s.chars().filter(|&c| c != '.').collect::<String>().to_lowercase();
        match norm.as_str() {
            "t31" => Ok(Family::T31),
            "t331" => Ok(Family::T331),
            "t22" => Ok(Family::T22),
            "t33" => Ok(Family::T33),
            "c192" | "conjecture192" => Ok(Family::C192),
            _ => Err(Error::InvalidArgument(format!(
                "unknown family {s:?}; expected one of T3.1, T3.3.1, T2.2, T3.3, C192"
            ))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::T31 => "T3.1",
            Family::T331 => "T3.3.1",
            Family::T22 => "T2.2",
            Family::T33 => "T3.3",
            Family::C192 => "C192",
        })
    }
}

/// One progression case that failed its congruence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyWitness {
    pub n: u64,
    pub j: Option<u64>,
    /// Index into the swept series (an `a`-index or a ped argument).
    pub index: u64,
    pub found: u64,
    pub expected: u64,
}

/// Result of sweeping one family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCheck {
    pub family: Family,
    pub p: u64,
    pub k: u32,
    /// Modulus of the claim itself (24 or 192).
    pub modulus: u64,
    /// Which series carried the sweep.
    pub route: &'static str,
    /// Parity of `ω(p)` when the family is parity-gated.
    pub omega_parity: Option<&'static str>,
    pub cases: u64,
    pub witnesses: Vec<FamilyWitness>,
}

impl FamilyCheck {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

fn pow_u128(p: u64, e: u32) -> Result<u128> {
    (p as u128)
        .checked_pow(e)
        .ok_or_else(|| Error::Budget(format!("p^{e} overflows for p = {p}")))
}

fn fits_budget(index: u128, budget: usize, what: &str) -> Result<usize> {
    if index > budget as u128 {
        return Err(Error::Budget(format!(
            "{what} needs series order {index}, beyond the budget {budget}"
        )));
    }
    Ok(index as usize)
}

/// Gate a parity-selected family on the computed parity of `ω(p)`,
/// reporting the actual value when it disagrees.
fn require_parity(family: Family, om: &Omega, want_even: bool) -> Result<&'static str> {
    if om.is_even != want_even {
        return Err(Error::InvalidArgument(format!(
            "family {family} requires ω(p) {}, but ω({}) = {} is {}",
            if want_even { "even" } else { "odd" },
            om.p,
            om.value,
            if om.is_even { "even" } else { "odd" },
        )));
    }
    Ok(if om.is_even { "even" } else { "odd" })
}

fn validated_jset(p: u64, jset: Option<&[u64]>) -> Result<Vec<u64>> {
    match jset {
        None => Ok((1..p).collect()),
        Some(js) => {
            if js.is_empty() {
                return Err(Error::InvalidArgument("empty j set".into()));
            }
            for &j in js {
                if j == 0 || j >= p {
                    return Err(Error::InvalidArgument(format!(
                        "j = {j} is outside 1 ≤ j ≤ p−1 = {}",
                        p - 1
                    )));
                }
            }
            Ok(js.to_vec())
        }
    }
}

/// Sweep one congruence family for `0 ≤ n ≤ nmax` (and the given `j` set
/// where the family has one), collecting every violation as a witness.
///
/// For `C192` the arguments `p`, `k`, and `jset` do not enter the claim and
/// are ignored.
pub fn verify_family(
    family: Family,
    p: u64,
    k: u32,
    nmax: u64,
    jset: Option<&[u64]>,
) -> Result<FamilyCheck> {
    match family {
        Family::C192 => {
            const BS: [u64; 4] = [43, 88, 133, 223];
            let max_index = 225u128 * nmax as u128 + 223;
            let order = fits_budget(max_index, PED_SWEEP_BUDGET, "C192 sweep")?;
            let ped = ped_series(order, Some(192))?;
            let mut witnesses = Vec::new();
            let mut cases = 0;
            for n in 0..=nmax {
                for b in BS {
                    let index = 225 * n + b;
                    cases += 1;
                    let found = ped.residue(index as usize);
                    if found != 0 {
                        witnesses.push(FamilyWitness { n, j: None, index, found, expected: 0 });
                    }
                }
            }
            Ok(FamilyCheck {
                family,
                p,
                k,
                modulus: 192,
                route: "ped mod 192",
                omega_parity: None,
                cases,
                witnesses,
            })
        }
        Family::T31 | Family::T22 => {
            let om = omega(p)?;
            let parity = require_parity(family, &om, family == Family::T31)?;
            let js = validated_jset(p, jset)?;
            let (en, ej) = if family == Family::T31 { (4 * k + 4, 4 * k + 3) } else { (6 * k + 6, 6 * k + 5) };
            let step = pow_u128(p, en)?;
            let j_step = pow_u128(p, ej)?;
            let base = 19 * (step - 1) / 24;
            let j_max = *js.iter().max().expect("nonempty") as u128;
            let max_index = step * nmax as u128 + j_step * j_max + base;
            let order = fits_budget(max_index, A_SWEEP_BUDGET, &format!("{family} sweep"))?;
            let a = coeff_a(order, Some(2))?;
            let mut witnesses = Vec::new();
            let mut cases = 0;
            for n in 0..=nmax {
                for &j in &js {
                    let index = step * n as u128 + j_step * j as u128 + base;
                    cases += 1;
                    let found = a.residue(index as usize);
                    if found != 0 {
                        witnesses.push(FamilyWitness {
                            n,
                            j: Some(j),
                            index: index as u64,
                            found,
                            expected: 0,
                        });
                    }
                }
            }
            Ok(FamilyCheck {
                family,
                p,
                k,
                modulus: 24,
                route: "a mod 2",
                omega_parity: Some(parity),
                cases,
                witnesses,
            })
        }
        Family::T331 => {
            if p != 19 {
                return Err(Error::InvalidArgument(format!(
                    "family T3.3.1 is specific to p = 19, got {p}"
                )));
            }
            let om = omega(p)?;
            let parity = require_parity(family, &om, true)?;
            let step = pow_u128(19, 4 * k + 2)?;
            let base = 19 * (step - 1) / 24;
            let max_index = step * nmax as u128 + base;
            let order = fits_budget(max_index, A_SWEEP_BUDGET, "T3.3.1 sweep")?;
            let a = coeff_a(order, Some(2))?;
            let mut witnesses = Vec::new();
            let mut cases = 0;
            for n in 0..=nmax {
                // Side condition 19 ∤ (24n+19), i.e. n ≢ 0 (mod 19).
                if n % 19 == 0 {
                    continue;
                }
                let index = step * n as u128 + base;
                cases += 1;
                let expected = a.residue(n as usize);
                let found = a.residue(index as usize);
                if found != expected {
                    witnesses.push(FamilyWitness { n, j: None, index: index as u64, found, expected });
                }
            }
            Ok(FamilyCheck {
                family,
                p,
                k,
                modulus: 24,
                route: "a mod 2",
                omega_parity: Some(parity),
                cases,
                witnesses,
            })
        }
        Family::T33 => {
            if p == 19 {
                return Err(Error::InvalidArgument(
                    "family T3.3 excludes p = 19 (that prime feeds T3.3.1)".into(),
                ));
            }
            let om = omega(p)?;
            let parity = require_parity(family, &om, false)?;
            let step = pow_u128(p, 6 * k + 2)?;
            let base = 19 * (step - 1) / 24;
            let max_index = step * nmax as u128 + base;
            let order = fits_budget(max_index, A_SWEEP_BUDGET, "T3.3 sweep")?;
            let a = coeff_a(order, Some(2))?;
            let mut witnesses = Vec::new();
            let mut cases = 0;
            for n in 0..=nmax {
                // Side condition p ∤ (24n+19).
                if (24 * n + 19) % p == 0 {
                    continue;
                }
                let index = step * n as u128 + base;
                cases += 1;
                let found = a.residue(index as usize);
                if found != 0 {
                    witnesses.push(FamilyWitness { n, j: None, index: index as u64, found, expected: 0 });
                }
            }
            Ok(FamilyCheck {
                family,
                p,
                k,
                modulus: 24,
                route: "a mod 2",
                omega_parity: Some(parity),
                cases,
                witnesses,
            })
        }
    }
}

/// Numerical exploration of the concluding conjecture: for a prime `p ≥ 5`
/// with `(−2/p) = −1` and `t` with `gcd(t,6) = 1`, `p | t`, sweep
/// `ped(9t²n + (9t²/p)j + (57t²−1)/8) (mod 192)` over `0 ≤ n ≤ nmax`,
/// `1 ≤ j ≤ p−1`. Evidence only — the result is never a proof.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExploreReport {
    pub p: u64,
    pub t: u64,
    pub nmax: u64,
    pub modulus: u64,
    /// Coefficient of `n`: `9t²`.
    pub step: u64,
    /// Coefficient of `j`: `9t²/p`.
    pub j_step: u64,
    /// Constant term `(57t²−1)/8`.
    pub offset: u64,
    pub cases: u64,
    pub witnesses: Vec<FamilyWitness>,
}

impl ExploreReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

pub fn explore_final_conjecture(p: u64, t: u64, nmax: u64) -> Result<ExploreReport> {
    require_prime_ge_5(p)?;
    let sym = legendre(-2, p)?;
    if sym != -1 {
        return Err(Error::InvalidArgument(format!(
            "the conjecture requires (−2/p) = −1, but (−2/{p}) = {sym}"
        )));
    }
    if gcd(t, 6) != 1 {
        return Err(Error::InvalidArgument(format!(
            "t = {t} must be coprime to 6 (gcd = {})",
            gcd(t, 6)
        )));
    }
    if t % p != 0 {
        return Err(Error::InvalidArgument(format!("p = {p} must divide t = {t}")));
    }
    let t2 = (t as u128)
        .checked_mul(t as u128)
        .ok_or_else(|| Error::Budget(format!("t² overflows for t = {t}")))?;
    let step = 9 * t2;
    let j_step = step / p as u128;
    // t is odd, so 57t² ≡ 57 ≡ 1 (mod 8) and the offset is an integer.
    let offset = (57 * t2 - 1) / 8;
    let max_index = step * nmax as u128 + j_step * (p as u128 - 1) + offset;
    let order = fits_budget(max_index, PED_SWEEP_BUDGET, "conjecture sweep")?;
    let ped = ped_series(order, Some(192))?;
    let mut witnesses = Vec::new();
    let mut cases = 0;
    for n in 0..=nmax {
        for j in 1..p {
            let index = step * n as u128 + j_step * j as u128 + offset;
            cases += 1;
            let found = ped.residue(index as usize);
            if found != 0 {
                witnesses.push(FamilyWitness {
                    n,
                    j: Some(j),
                    index: index as u64,
                    found,
                    expected: 0,
                });
            }
        }
    }
    Ok(ExploreReport {
        p,
        t,
        nmax,
        modulus: 192,
        step: step as u64,
        j_step: j_step as u64,
        offset: offset as u64,
        cases,
        witnesses,
    })
}

/// One density checkpoint: `count = #{0 ≤ n < x : series(n) ≡ r}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DensityPoint {
    pub x: u64,
    pub count: u64,
}

/// Exact residue-density counts at a ladder of checkpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityReport {
    pub modulus: u64,
    pub residue: u64,
    pub points: Vec<DensityPoint>,
}

/// Count how often the series' residues hit `residue` below each
/// checkpoint. The series must already be reduced (its modulus is the `M`
/// of the density); checkpoints are deduplicated and reported ascending.
pub fn density(series: &Series, residue: u64, checkpoints: &[u64]) -> Result<DensityReport> {
    let m = series.modulus().ok_or_else(|| {
        Error::InvalidArgument("density needs a modular series; reduce it first".into())
    })?;
    if residue >= m {
        return Err(Error::InvalidArgument(format!(
            "residue {residue} is out of range for modulus {m}"
        )));
    }
    if checkpoints.is_empty() {
        return Err(Error::InvalidArgument("no checkpoints given".into()));
    }
    let mut xs: Vec<u64> = checkpoints.to_vec();
    xs.sort_unstable();
    xs.dedup();
    if xs[0] == 0 {
        return Err(Error::InvalidArgument("checkpoint X must be ≥ 1".into()));
    }
    let max_x = *xs.last().expect("nonempty");
    if max_x as usize > series.order() + 1 {
        return Err(Error::Budget(format!(
            "checkpoint X = {max_x} needs coefficients up to {} but the series stops at {}",
            max_x - 1,
            series.order()
        )));
    }
    let mut points = Vec::with_capacity(xs.len());
    let mut count = 0u64;
    let mut next = xs.iter().peekable();
    for n in 0..max_x {
        while let Some(&&x) = next.peek() {
            if x == n {
                points.push(DensityPoint { x, count });
                next.next();
            } else {
                break;
            }
        }
        if series.residue(n as usize) == residue {
            count += 1;
        }
    }
    for &x in next {
        debug_assert_eq!(x, max_x);
        points.push(DensityPoint { x, count });
    }
    Ok(DensityReport { modulus: m, residue, points })
}
