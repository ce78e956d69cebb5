//! Congruence verification for eta-quotient coefficient progressions.
//!
//! The pipeline implemented here turns an *infinite* congruence claim
//! "`A(mn + t′) ≡ 0 (mod u)` for all `n ≥ 0` and all `t′` in an orbit
//! `P(t)`", where `A` is the coefficient sequence of `Π_{δ|M} f_δ^{r_δ}`,
//! into a *finite* coefficient check:
//!
//! 1. membership of the tuple `(m, M, N, t, (r_δ))` in the admissible set
//!    (six arithmetic conditions, [`delta_star_check`]);
//! 2. the orbit `P(t)` of residues forced to behave like `t`
//!    ([`p_t_set`]);
//! 3. a complete set of double-coset representatives `(1 0; δ 1)`, `δ | N`
//!    ([`coset_reps`], valid when `N` or `N/2` is squarefree);
//! 4. nonnegativity of `p(γ) + p′(γ)` at every representative
//!    ([`p_gamma`], [`p_prime_gamma`]) — the cusp-by-cusp holomorphy input;
//! 5. the bound `ν` ([`nu_bound`]): once the first `⌊ν⌋ + 1` coefficients
//!    on each progression vanish, they all do.
//!
//! [`radu_verify`] runs the stages in order and reports `proven`, `refuted`
//! (with a concrete witness coefficient), or which precondition failed.

use crate::arith::{divisors, factorize, gcd_i128, is_squarefree, squares_mod, ResidueClassSet};
use crate::error::{Error, Result};
use crate::series::{eta_quotient_series, EtaExponents};
use num_rational::Ratio;
use std::collections::BTreeMap;
use std::fmt;

/// A 2×2 integer matrix `[[a, b], [c, d]]`.
pub type Matrix = [[i64; 2]; 2];

/// The tuple `(m, M, N, t, (r_δ))` driving a verification run: `A` is the
/// coefficient sequence of `Π_{δ|M} f_δ^{r_δ}`, the claim lives on the
/// progression `mn + t`, and `N` is the level the holomorphy argument runs
/// on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaduTuple {
    /// Progression modulus `m`.
    pub m: u64,
    /// Divisor bound `M`: eta exponents are indexed by the divisors of `M`.
    pub big_m: u64,
    /// Level `N` of the congruence subgroup the argument works on.
    pub level: u64,
    /// Progression residue, `0 ≤ t < m`.
    pub t: u64,
    /// Eta exponents `δ ↦ r_δ` (zero entries dropped).
    pub r: BTreeMap<u64, i64>,
}

impl RaduTuple {
    /// Build a tuple with exponents given positionally over the sorted
    /// divisors of `M` — the order the tuples are conventionally written
    /// in, e.g. `(5, -4, 6, 1, 0, 0)` over `1,2,3,4,6,12` for `M = 12`.
    pub fn new(m: u64, big_m: u64, level: u64, t: u64, r_by_divisor: &[i64]) -> Result<RaduTuple> {
        let divs = divisors(big_m);
        if r_by_divisor.len() != divs.len() {
            return Err(Error::InvalidArgument(format!(
                "M = {big_m} has {} divisors but {} exponents were given",
                divs.len(),
                r_by_divisor.len()
            )));
        }
        RaduTuple::from_map(
            m,
            big_m,
            level,
            t,
            divs.into_iter().zip(r_by_divisor.iter().copied()).collect(),
        )
    }

    /// Build a tuple from an explicit `δ ↦ r_δ` map.
    pub fn from_map(
        m: u64,
        big_m: u64,
        level: u64,
        t: u64,
        r: BTreeMap<u64, i64>,
    ) -> Result<RaduTuple> {
        if m == 0 || big_m == 0 || level == 0 {
            return Err(Error::InvalidArgument(
                "m, M, and N must all be positive".into(),
            ));
        }
        if t >= m {
            return Err(Error::InvalidArgument(format!(
                "progression residue t = {t} must satisfy t < m = {m}"
            )));
        }
        if let Some(&bad) = r.keys().find(|&&d| d == 0 || big_m % d != 0) {
            return Err(Error::InvalidArgument(format!(
                "eta index δ = {bad} does not divide M = {big_m}"
            )));
        }
        let r = r.into_iter().filter(|&(_, v)| v != 0).collect();
        Ok(RaduTuple { m, big_m, level, t, r })
    }

    /// `Σ_δ r_δ`.
    pub fn sum_r(&self) -> i64 {
        self.r.values().sum()
    }

    /// `Σ_δ δ·r_δ`.
    pub fn sum_delta_r(&self) -> i64 {
        self.r.iter().map(|(&d, &v)| d as i64 * v).sum()
    }
}

/// Outcome of the six admissibility conditions, one flag per condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaStarReport {
    /// 1: every prime divisor of `m` divides `N`.
    pub primes_of_m_divide_level: bool,
    /// 2: `δ | mN` for every `δ` with `r_δ ≠ 0`.
    pub indices_divide_m_level: bool,
    /// 3: `24 | kN Σ_δ r_δ·mN/δ`.
    pub weighted_sum_divisible_24: bool,
    /// 4: `8 | kN Σ_δ r_δ`.
    pub exponent_sum_divisible_8: bool,
    /// 5: `24m / gcd(-24kt - k Σ δ r_δ, 24m)` divides `N`.
    pub progression_gcd_divides_level: bool,
    /// 6: the extra condition for even `m` (vacuously true for odd `m`).
    pub even_m_condition: bool,
    /// 6, first branch (`4 | kN` and `8 | δN` for all used `δ`); present
    /// only when `2 | m`.
    pub even_m_branch_divisibility: Option<bool>,
    /// 6, second branch (`2 | s₂` and `8 | (1-j)N` where
    /// `Π δ^{|r_δ|} = 2^{s₂} j`, `j` odd); present only when `2 | m`.
    pub even_m_branch_odd_part: Option<bool>,
    /// Conjunction of all six.
    pub overall: bool,
}

impl DeltaStarReport {
    /// Names of the failed conditions, in order.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.primes_of_m_divide_level {
            out.push("primes of m divide N");
        }
        if !self.indices_divide_m_level {
            out.push("every used δ divides mN");
        }
        if !self.weighted_sum_divisible_24 {
            out.push("24 | kN·Σ r_δ·mN/δ");
        }
        if !self.exponent_sum_divisible_8 {
            out.push("8 | kN·Σ r_δ");
        }
        if !self.progression_gcd_divides_level {
            out.push("24m/gcd(-24kt - k·Σδr_δ, 24m) divides N");
        }
        if !self.even_m_condition {
            out.push("even-m condition");
        }
        out
    }
}

/// The multiplier `k = gcd(m² - 1, 24)` used throughout the conditions.
fn k_of(m: u64) -> i128 {
    gcd_i128((m as i128) * (m as i128) - 1, 24)
}

/// The orbit `P(t) = { t·s + ((s-1)/24)·Σδr_δ mod m : s a square unit
/// mod 24m }`: the residues whose progressions necessarily share `t`'s
/// congruence behavior.
pub fn p_t_set(m: u64, big_m: u64, t: u64, r: &BTreeMap<u64, i64>) -> Result<ResidueClassSet> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    if t >= m {
        return Err(Error::InvalidArgument(format!("t = {t} must be < m = {m}")));
    }
    if let Some(&bad) = r.keys().find(|&&d| d == 0 || big_m % d != 0) {
        return Err(Error::InvalidArgument(format!(
            "eta index δ = {bad} does not divide M = {big_m}"
        )));
    }
    let sum_delta_r: i128 = r.iter().map(|(&d, &v)| d as i128 * v as i128).sum();
    let mut members = Vec::new();
    for &s in squares_mod(24 * m).members() {
        // Every square unit mod 24m is ≡ 1 (mod 24); verified, not assumed.
        if s % 24 != 1 {
            return Err(Error::InvalidArgument(format!(
                "square unit {s} mod {} is not ≡ 1 (mod 24)",
                24 * m
            )));
        }
        let shift = ((s - 1) / 24) as i128;
        let tp = (t as i128 * s as i128 + shift * sum_delta_r).rem_euclid(m as i128) as u64;
        members.push(tp);
    }
    members.sort_unstable();
    members.dedup();
    ResidueClassSet::new(m, members)
}

/// Evaluate the six admissibility conditions for `tuple`, literally, with
/// `k = gcd(m² - 1, 24)`.
pub fn delta_star_check(tuple: &RaduTuple) -> DeltaStarReport {
    let m = tuple.m as i128;
    let n = tuple.level as i128;
    let k = k_of(tuple.m);

    // 1: primes of m divide N.
    let primes_of_m_divide_level = factorize(tuple.m)
        .iter()
        .all(|&(p, _)| tuple.level % p == 0);

    // 2: δ | mN whenever r_δ ≠ 0.
    let m_level = tuple.m as u128 * tuple.level as u128;
    let indices_divide_m_level = tuple.r.keys().all(|&d| m_level % d as u128 == 0);

    // 3: 24 | kN·Σ r_δ·mN/δ, the sum taken exactly in rationals.
    let weighted_sum: Ratio<i128> = tuple
        .r
        .iter()
        .map(|(&d, &v)| Ratio::new(m * n * v as i128, d as i128))
        .sum();
    let scaled = weighted_sum * Ratio::from_integer(k * n);
    let weighted_sum_divisible_24 = scaled.is_integer() && scaled.to_integer() % 24 == 0;

    // 4: 8 | kN·Σ r_δ.
    let exponent_sum_divisible_8 = (k * n * tuple.sum_r() as i128) % 8 == 0;

    // 5: 24m/gcd(-24kt - k·Σδr_δ, 24m) | N.
    let g = gcd_i128(
        -24 * k * tuple.t as i128 - k * tuple.sum_delta_r() as i128,
        24 * m,
    );
    let progression_gcd_divides_level = n % (24 * m / g) == 0;

    // 6: extra condition when m is even.
    let (even_m_condition, branch_div, branch_odd) = if tuple.m % 2 == 0 {
        let branch_a = (k * n) % 4 == 0
            && tuple.r.keys().all(|&d| (d as i128 * n) % 8 == 0);
        // Write Π δ^{|r_δ|} = 2^{s₂}·j with j odd; only s₂ and j mod 8 matter.
        let mut s2: u64 = 0;
        let mut j_mod: i128 = 1;
        for (&d, &v) in &tuple.r {
            let mut odd = d;
            let mut e2 = 0u64;
            while odd % 2 == 0 {
                odd /= 2;
                e2 += 1;
            }
            let reps = v.unsigned_abs();
            s2 += e2 * reps;
            for _ in 0..reps {
                j_mod = (j_mod * odd as i128) % 8;
            }
        }
        let branch_b = s2 % 2 == 0 && ((1 - j_mod) * n) % 8 == 0;
        (branch_a || branch_b, Some(branch_a), Some(branch_b))
    } else {
        (true, None, None)
    };

    let overall = primes_of_m_divide_level
        && indices_divide_m_level
        && weighted_sum_divisible_24
        && exponent_sum_divisible_8
        && progression_gcd_divides_level
        && even_m_condition;

    DeltaStarReport {
        primes_of_m_divide_level,
        indices_divide_m_level,
        weighted_sum_divisible_24,
        exponent_sum_divisible_8,
        progression_gcd_divides_level,
        even_m_condition,
        even_m_branch_divisibility: branch_div,
        even_m_branch_odd_part: branch_odd,
        overall,
    }
}

/// Complete set of double-coset representatives `(1 0; δ 1)`, one per
/// divisor `δ` of `N`. Valid exactly when `N` or `N/2` is squarefree.
pub fn coset_reps(level: u64) -> Result<Vec<Matrix>> {
    if level == 0 {
        return Err(Error::InvalidArgument("level must be positive".into()));
    }
    let ok = is_squarefree(level) || (level % 2 == 0 && is_squarefree(level / 2));
    if !ok {
        return Err(Error::InvalidArgument(format!(
            "coset representatives require N or N/2 squarefree; N = {level} is neither"
        )));
    }
    Ok(divisors(level)
        .into_iter()
        .map(|d| [[1, 0], [d as i64, 1]])
        .collect())
}

/// `p(γ) = min_{0 ≤ λ < m} (1/24) Σ_δ r_δ·gcd(δ(a + kλc), mc)²/(δm)` — the
/// order lower bound contributed by the eta exponents at the cusp of `γ`.
pub fn p_gamma(tuple: &RaduTuple, gamma: Matrix) -> Result<Ratio<i128>> {
    let [[a, b], [c, d]] = gamma;
    if a as i128 * d as i128 - b as i128 * c as i128 != 1 {
        return Err(Error::InvalidArgument(format!(
            "γ = [[{a}, {b}], [{c}, {d}]] does not have determinant 1"
        )));
    }
    let m = tuple.m as i128;
    let k = k_of(tuple.m);
    let mut best: Option<Ratio<i128>> = None;
    for lambda in 0..m {
        let mut total = Ratio::from_integer(0i128);
        for (&delta, &r) in &tuple.r {
            let arg = delta as i128 * (a as i128 + k * lambda * c as i128);
            let g = gcd_i128(arg, m * c as i128);
            total += Ratio::new(r as i128 * g * g, delta as i128 * m * 24);
        }
        best = Some(match best {
            None => total,
            Some(b) if total < b => total,
            Some(b) => b,
        });
    }
    Ok(best.expect("m ≥ 1 gives at least one λ"))
}

/// `p′(γ) = (1/24) Σ_{δ|N} r′_δ·gcd(δ, c)²/δ` — the contribution of the
/// auxiliary exponents `r′` at the cusp of `γ`.
pub fn p_prime_gamma(
    rprime: &BTreeMap<u64, i64>,
    level: u64,
    gamma: Matrix,
) -> Result<Ratio<i128>> {
    if let Some(&bad) = rprime.keys().find(|&&d| d == 0 || level % d != 0) {
        return Err(Error::InvalidArgument(format!(
            "auxiliary index δ = {bad} does not divide N = {level}"
        )));
    }
    let c = gamma[1][0].unsigned_abs() as i128;
    let mut total = Ratio::from_integer(0i128);
    for (&delta, &r) in rprime {
        let g = gcd_i128(delta as i128, c);
        total += Ratio::new(r as i128 * g * g, delta as i128 * 24);
    }
    Ok(total)
}

/// `[SL₂(Z) : Γ₀(N)] = N·Π_{p|N}(1 + 1/p)`.
pub fn gamma0_index(level: u64) -> u64 {
    let mut idx = level;
    for (p, _) in factorize(level) {
        idx = idx / p * (p + 1);
    }
    idx
}

/// The finite-check bound
/// `ν = (1/24)((Σr + Σr′)·[SL₂:Γ₀(N)] - Σδr′ - (1/m)Σδr) - min P(t)/m`,
/// returned with its floor. Once `A(mn + t′) ≡ 0 (mod u)` for all
/// `n ≤ ⌊ν⌋`, it holds for all `n`.
pub fn nu_bound(tuple: &RaduTuple, rprime: &BTreeMap<u64, i64>) -> Result<(Ratio<i128>, i128)> {
    let p_t = p_t_set(tuple.m, tuple.big_m, tuple.t, &tuple.r)?;
    let t_min = *p_t.members().first().expect("t ∈ P(t), so P(t) is nonempty");
    let index = gamma0_index(tuple.level) as i128;
    let sum_r = tuple.sum_r() as i128;
    let sum_rp: i128 = rprime.values().map(|&v| v as i128).sum();
    let sum_delta_rp: i128 = rprime.iter().map(|(&d, &v)| d as i128 * v as i128).sum();
    let sum_delta_r = tuple.sum_delta_r() as i128;
    let m = tuple.m as i128;
    let nu = Ratio::new(1, 24)
        * (Ratio::from_integer((sum_r + sum_rp) * index - sum_delta_rp)
            - Ratio::new(sum_delta_r, m))
        - Ratio::new(t_min as i128, m);
    let floor = nu.floor().to_integer();
    Ok((nu, floor))
}

/// Verification outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerificationStatus {
    /// Every stage passed: the infinite congruence family is established.
    Proven,
    /// A coefficient on the progression is nonzero mod `u`; see the witness.
    Refuted,
    /// A structural stage failed; the claim is neither proven nor refuted.
    PreconditionFailed {
        /// Which stage failed, human-readable.
        stage: String,
    },
}

impl fmt::Display for VerificationStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerificationStatus::Proven => write!(f, "proven"),
            VerificationStatus::Refuted => write!(f, "refuted"),
            VerificationStatus::PreconditionFailed { stage } => {
                write!(f, "precondition failed: {stage}")
            }
        }
    }
}

/// Full record of a verification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// The tuple that was checked.
    pub tuple: RaduTuple,
    /// Auxiliary exponents used in the `p′`/`ν` stages.
    pub rprime: BTreeMap<u64, i64>,
    /// Condition-by-condition admissibility outcome.
    pub delta_star: DeltaStarReport,
    /// The orbit `P(t)`.
    pub p_t: ResidueClassSet,
    /// The bound `ν`, when the pipeline reached that stage.
    pub nu: Option<Ratio<i128>>,
    /// `⌊ν⌋`.
    pub nu_floor: Option<i128>,
    /// The modulus `u` of the congruence claim.
    pub checked_modulus: u64,
    /// Expansion order used for the coefficient sweep, when reached.
    pub expansion_order: Option<usize>,
    /// Outcome.
    pub status: VerificationStatus,
    /// For refutations: `(index, value)` with `A(index) = value ≢ 0 (mod u)`.
    pub witness: Option<(usize, u64)>,
}

/// Run the whole pipeline: admissibility, coset representatives,
/// `p(γ) + p′(γ) ≥ 0` at every representative, the bound `ν`, then the
/// finite coefficient sweep `A(mn + t′) ≡ 0 (mod u)` for `n ≤ ⌊ν⌋` and
/// every `t′ ∈ P(t)`.
///
/// `order_margin` extra coefficients are expanded past the last index the
/// sweep reads, as off-by-one armor at the progression boundary (default
/// 16 in the CLI).
pub fn radu_verify(
    tuple: &RaduTuple,
    rprime: &BTreeMap<u64, i64>,
    u: u64,
    order_margin: usize,
) -> Result<VerificationReport> {
    if u < 2 {
        return Err(Error::InvalidArgument(format!(
            "congruence modulus u must be ≥ 2, got {u}"
        )));
    }
    let delta_star = delta_star_check(tuple);
    let p_t = p_t_set(tuple.m, tuple.big_m, tuple.t, &tuple.r)?;

    let mut report = VerificationReport {
        tuple: tuple.clone(),
        rprime: rprime.clone(),
        delta_star: delta_star.clone(),
        p_t: p_t.clone(),
        nu: None,
        nu_floor: None,
        checked_modulus: u,
        expansion_order: None,
        status: VerificationStatus::Proven, // overwritten below
        witness: None,
    };

    if !delta_star.overall {
        report.status = VerificationStatus::PreconditionFailed {
            stage: format!(
                "tuple is not admissible ({})",
                delta_star.failures().join("; ")
            ),
        };
        return Ok(report);
    }

    let reps = match coset_reps(tuple.level) {
        Ok(reps) => reps,
        Err(e) => {
            report.status = VerificationStatus::PreconditionFailed {
                stage: format!("coset representatives unavailable: {e}"),
            };
            return Ok(report);
        }
    };

    for gamma in &reps {
        let total = p_gamma(tuple, *gamma)? + p_prime_gamma(rprime, tuple.level, *gamma)?;
        if total < Ratio::from_integer(0) {
            report.status = VerificationStatus::PreconditionFailed {
                stage: format!(
                    "p(γ) + p′(γ) = {total} < 0 at γ = (1 0; {} 1)",
                    gamma[1][0]
                ),
            };
            return Ok(report);
        }
    }

    let (nu, nu_floor) = nu_bound(tuple, rprime)?;
    report.nu = Some(nu);
    report.nu_floor = Some(nu_floor);

    let t_max = *p_t.members().last().expect("P(t) nonempty") as usize;
    let n_count = if nu_floor < 0 { 0 } else { nu_floor as usize + 1 };
    let order = tuple.m as usize * n_count + t_max + order_margin;
    report.expansion_order = Some(order);

    let eq = EtaExponents::new(tuple.r.iter().map(|(&d, &r)| (d, r)))?;
    let a = eta_quotient_series(&eq, order, Some(u))?.series;

    for n in 0..n_count {
        for &tp in p_t.members() {
            let idx = tuple.m as usize * n + tp as usize;
            let v = a.residue(idx);
            if v != 0 {
                report.status = VerificationStatus::Refuted;
                report.witness = Some((idx, v));
                return Ok(report);
            }
        }
    }

    report.status = VerificationStatus::Proven;
    Ok(report)
}
