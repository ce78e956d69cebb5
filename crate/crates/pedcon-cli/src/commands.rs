//! One driver per subcommand: validate flags, call the library, assemble a
//! [`Report`](crate::report::Report).
//!
//! Drivers return `Err(String)` only for usage and precondition problems
//! (exit code 2); mathematical outcomes — including refutations — travel
//! inside the report's status.

use crate::cache;
use crate::report::{fixed_point, Csv, Report, Status};
use num_rational::Ratio;
use pedcon_core::arith::divisors;
use pedcon_core::modform::{
    b_exponents, build_b, certify, character, hecke_tp, min_level, s_indicator, Certificate,
    EtaQuotient,
};
use pedcon_core::newman::{
    coeff_a, density, explore_final_conjecture, omega, recurrence_check, verify_family, Family,
    FamilyCheck, FamilyWitness,
};
use pedcon_core::radu::{radu_verify, RaduTuple, VerificationReport, VerificationStatus};
use pedcon_core::series::{ped_count_table, ped_series, Series, PED_COUNT_BUDGET};
use serde_json::{Map, Value};
use std::collections::BTreeMap;
use std::path::Path;

/// Largest n for a printed table of residues.
const PED_TABLE_BUDGET: u64 = 1_000_000;
/// Exact tables beyond this need `--allow-slow`.
const PED_EXACT_FAST_LIMIT: u64 = 2000;

fn core_err(e: pedcon_core::Error) -> String {
    e.to_string()
}

fn ratio_value(r: Ratio<i128>) -> Value {
    Value::String(r.to_string())
}

/// Turn a `δ ↦ r` map into a JSON object with decimal keys.
fn exponent_object(map: &BTreeMap<u64, i64>) -> Value {
    Value::Object(
        map.iter()
            .map(|(d, r)| (d.to_string(), Value::from(*r)))
            .collect::<Map<String, Value>>(),
    )
}

fn witness_value(w: &FamilyWitness) -> Value {
    let mut obj = Map::new();
    obj.insert("n".into(), Value::from(w.n));
    obj.insert("j".into(), w.j.map(Value::from).unwrap_or(Value::Null));
    obj.insert("index".into(), Value::from(w.index));
    obj.insert("found".into(), Value::from(w.found));
    obj.insert("expected".into(), Value::from(w.expected));
    Value::Object(obj)
}

/// Spread positional exponents over the sorted divisors of `n`
/// (shorter lists are padded with zeros).
fn positional_exponents(n: u64, values: &[i64], what: &str) -> Result<BTreeMap<u64, i64>, String> {
    let divs = divisors(n);
    if values.len() > divs.len() {
        return Err(format!(
            "{what}: got {} values, but {n} has only {} divisors ({:?})",
            values.len(),
            divs.len(),
            divs
        ));
    }
    Ok(divs
        .into_iter()
        .zip(values.iter().copied().chain(std::iter::repeat(0)))
        .filter(|&(_, r)| r != 0)
        .collect())
}

/// Parse `"1:-11,2:4,3:6"` into an exponent list.
fn parse_exponents(s: &str) -> Result<Vec<(u64, i64)>, String> {
    s.split(',')
        .map(|tok| {
            let (d, r) = tok
                .split_once(':')
                .ok_or_else(|| format!("bad exponent token {tok:?}; expected δ:r"))?;
            let d = d.trim().parse::<u64>().map_err(|e| format!("bad index in {tok:?}: {e}"))?;
            let r = r.trim().parse::<i64>().map_err(|e| format!("bad exponent in {tok:?}: {e}"))?;
            Ok((d, r))
        })
        .collect()
}

// ---------------------------------------------------------------- ped ----

pub fn cmd_ped(
    nmax: u64,
    modulus: Option<u64>,
    exact: bool,
    allow_slow: bool,
    cache_dir: Option<&Path>,
) -> Result<Report, String> {
    if exact && modulus.is_some() {
        return Err("--exact and --modulus are mutually exclusive".into());
    }
    let mut rep = Report::new("ped");
    rep.param("nmax", nmax);
    match modulus {
        Some(m) => {
            rep.param("modulus", m);
            if nmax > PED_TABLE_BUDGET {
                return Err(format!(
                    "residue table capped at n ≤ {PED_TABLE_BUDGET}; got {nmax}"
                ));
            }
            let series = fetch_ped(cache_dir, nmax as usize, Some(m), &mut rep)?;
            let values: Vec<Value> =
                (0..=nmax as usize).map(|n| Value::from(series.residue(n))).collect();
            for n in 0..=nmax as usize {
                rep.human.push(format!("ped({n}) ≡ {} (mod {m})", series.residue(n)));
            }
            rep.detail("values", Value::Array(values));
            rep.detail("cross_check", "none (residue table)");
            rep.status = Status::EvidenceOnly;
        }
        None => {
            if nmax > PED_EXACT_FAST_LIMIT && !allow_slow {
                return Err(format!(
                    "exact table beyond n = {PED_EXACT_FAST_LIMIT} needs --allow-slow (asked for {nmax})"
                ));
            }
            if nmax as usize > PED_COUNT_BUDGET {
                return Err(format!(
                    "exact table capped at n ≤ {PED_COUNT_BUDGET}; got {nmax}"
                ));
            }
            let series = fetch_ped(cache_dir, nmax as usize, None, &mut rep)?;
            // Independent count: restricted-parts dynamic programming. Past
            // the fast limit only the head is double-checked, so the tail
            // stays evidence.
            let oracle_limit = nmax.min(PED_EXACT_FAST_LIMIT) as usize;
            let oracle = ped_count_table(oracle_limit).map_err(core_err)?;
            for (n, expected) in oracle.iter().enumerate() {
                let got = series.coeff(n);
                if got != *expected {
                    rep.witnesses.push(Value::Object(Map::from_iter([
                        ("n".to_string(), Value::from(n as u64)),
                        ("series".to_string(), Value::String(got.to_string())),
                        ("oracle".to_string(), Value::String(expected.to_string())),
                    ])));
                }
            }
            let status = if !rep.witnesses.is_empty() {
                Status::Refuted
            } else if oracle_limit == nmax as usize {
                Status::VerifiedToBound
            } else {
                Status::EvidenceOnly
            };
            rep.detail(
                "cross_check",
                if oracle_limit == nmax as usize {
                    format!("partition-counting dynamic program, n ≤ {nmax}")
                } else {
                    format!("partition-counting dynamic program, head only (n ≤ {oracle_limit})")
                },
            );
            let values: Vec<Value> = (0..=nmax as usize)
                .map(|n| Value::String(series.coeff(n).to_string()))
                .collect();
            for n in 0..=nmax as usize {
                rep.human.push(format!("ped({n}) = {}", series.coeff(n)));
            }
            rep.detail("values", Value::Array(values));
            rep.status = status;
        }
    }
    Ok(rep)
}

fn fetch_ped(
    cache_dir: Option<&Path>,
    order: usize,
    modulus: Option<u64>,
    rep: &mut Report,
) -> Result<Series, String> {
    match cache_dir {
        Some(dir) => {
            let (series, artifact) = cache::ped_series_cached(dir, order, modulus)?;
            rep.artifacts.push(artifact);
            Ok(series)
        }
        None => ped_series(order, modulus).map_err(core_err),
    }
}

// --------------------------------------------------------------- radu ----

#[allow(clippy::too_many_arguments)]
pub fn cmd_radu(
    m: u64,
    big_m: u64,
    level: u64,
    t: u64,
    r: &[i64],
    rprime: Option<&[i64]>,
    u: u64,
    margin: usize,
) -> Result<Report, String> {
    let tuple = RaduTuple::new(m, big_m, level, t, r).map_err(core_err)?;
    let rp = match rprime {
        Some(values) => positional_exponents(level, values, "--rprime")?,
        None => BTreeMap::from([(1, 1)]),
    };
    let vr = radu_verify(&tuple, &rp, u, margin).map_err(core_err)?;
    let mut rep = Report::new("radu");
    rep.param("m", m);
    rep.param("M", big_m);
    rep.param("N", level);
    rep.param("t", t);
    rep.param("r", exponent_object(&tuple.r));
    rep.param("rprime", exponent_object(&rp));
    rep.param("u", u);
    rep.param("margin", margin as u64);
    fill_radu_report(&mut rep, &vr);
    Ok(rep)
}

/// Shared between `radu` and `verify theorem-1-1`.
fn fill_radu_report(rep: &mut Report, vr: &VerificationReport) {
    let ds = &vr.delta_star;
    let conditions = Value::Object(Map::from_iter([
        ("1_primes_of_m_divide_N".to_string(), Value::Bool(ds.primes_of_m_divide_level)),
        ("2_indices_divide_mN".to_string(), Value::Bool(ds.indices_divide_m_level)),
        ("3_weighted_sum_div_24".to_string(), Value::Bool(ds.weighted_sum_divisible_24)),
        ("4_exponent_sum_div_8".to_string(), Value::Bool(ds.exponent_sum_divisible_8)),
        ("5_progression_gcd_divides_N".to_string(), Value::Bool(ds.progression_gcd_divides_level)),
        ("6_even_m".to_string(), Value::Bool(ds.even_m_condition)),
    ]));
    let branches = match (ds.even_m_branch_divisibility, ds.even_m_branch_odd_part) {
        (Some(a), Some(b)) => Value::Object(Map::from_iter([
            ("divisibility".to_string(), Value::Bool(a)),
            ("odd_part".to_string(), Value::Bool(b)),
        ])),
        _ => Value::Null,
    };
    rep.detail(
        "delta_star",
        Value::Object(Map::from_iter([
            ("conditions".to_string(), conditions),
            ("even_m_branches".to_string(), branches),
            ("admissible".to_string(), Value::Bool(ds.overall)),
            (
                "failures".to_string(),
                Value::Array(ds.failures().into_iter().map(|f| Value::String(f.into())).collect()),
            ),
        ])),
    );
    rep.detail(
        "p_t",
        Value::Object(Map::from_iter([
            ("modulus".to_string(), Value::from(vr.p_t.modulus())),
            (
                "members".to_string(),
                Value::Array(vr.p_t.members().iter().map(|&x| Value::from(x)).collect()),
            ),
        ])),
    );
    rep.detail("nu", vr.nu.map(ratio_value).unwrap_or(Value::Null));
    rep.detail("nu_floor", vr.nu_floor.map(|x| Value::from(x as i64)).unwrap_or(Value::Null));
    rep.detail(
        "expansion_order",
        vr.expansion_order.map(|x| Value::from(x as u64)).unwrap_or(Value::Null),
    );
    rep.detail("checked_modulus", vr.checked_modulus);
    match &vr.status {
        VerificationStatus::Proven => {
            rep.status = Status::Proven;
            rep.human.push(format!(
                "all coefficients on the progression vanish mod {} up to the ν bound; the infinite family is proven",
                vr.checked_modulus
            ));
        }
        VerificationStatus::Refuted => {
            rep.status = Status::Refuted;
            if let Some((index, value)) = vr.witness {
                rep.witnesses.push(Value::Object(Map::from_iter([
                    ("index".to_string(), Value::from(index as u64)),
                    ("value".to_string(), Value::from(value)),
                ])));
            }
        }
        VerificationStatus::PreconditionFailed { stage } => {
            rep.status = Status::Error;
            rep.detail("message", format!("precondition failed: {stage}"));
        }
    }
}

// ------------------------------------------------------------- verify ----

/// The eta exponents of the progression form behind Theorem-1.1-style runs:
/// `f₁⁵f₃⁶f₄/f₂⁴` over the divisors of M = 12.
const PAPER_R: [i64; 6] = [5, -4, 6, 1, 0, 0];

pub fn cmd_verify_theorem11(u: u64, margin: usize) -> Result<Report, String> {
    let mut rep = Report::new("verify theorem-1-1");
    rep.param("u", u);
    rep.param("margin", margin as u64);
    rep.param("tuple", "(m, M, N, r) = (25, 12, 60, (5, -4, 6, 1, 0, 0))");
    rep.param("rprime", exponent_object(&BTreeMap::from([(1, 1)])));
    let rp = BTreeMap::from([(1, 1)]);
    let mut overall = Status::Proven;
    let mut tuples = Map::new();
    for t in [4u64, 9, 14, 24] {
        let tuple = RaduTuple::new(25, 12, 60, t, &PAPER_R).map_err(core_err)?;
        let vr = radu_verify(&tuple, &rp, u, margin).map_err(core_err)?;
        let mut sub = Map::new();
        sub.insert(
            "p_t".into(),
            Value::Array(vr.p_t.members().iter().map(|&x| Value::from(x)).collect()),
        );
        sub.insert("nu".into(), vr.nu.map(ratio_value).unwrap_or(Value::Null));
        sub.insert(
            "nu_floor".into(),
            vr.nu_floor.map(|x| Value::from(x as i64)).unwrap_or(Value::Null),
        );
        sub.insert(
            "expansion_order".into(),
            vr.expansion_order.map(|x| Value::from(x as u64)).unwrap_or(Value::Null),
        );
        match &vr.status {
            VerificationStatus::Proven => {
                sub.insert("status".into(), Value::String("proven".into()));
            }
            VerificationStatus::Refuted => {
                sub.insert("status".into(), Value::String("refuted".into()));
                overall = Status::Refuted;
                if let Some((index, value)) = vr.witness {
                    rep.witnesses.push(Value::Object(Map::from_iter([
                        ("t".to_string(), Value::from(t)),
                        ("index".to_string(), Value::from(index as u64)),
                        ("value".to_string(), Value::from(value)),
                    ])));
                }
            }
            VerificationStatus::PreconditionFailed { stage } => {
                sub.insert("status".into(), Value::String(format!("precondition failed: {stage}")));
                if overall == Status::Proven {
                    overall = Status::Error;
                }
                rep.detail("message", format!("t = {t}: precondition failed: {stage}"));
            }
        }
        tuples.insert(format!("t={t}"), Value::Object(sub));
        rep.human.push(format!("t = {t}: {}", vr.status));
    }
    rep.detail("tuples", Value::Object(tuples));
    rep.detail("conclusion", "A(25n+t') ≡ 0 (mod 16) for t' ∈ {4, 9, 14, 24}, hence ped(225n+9t'+7) ≡ 0 (mod 192)");
    rep.status = overall;
    Ok(rep)
}

fn family_report(command: &str, fam: Family, p: u64, k: u32, nmax: u64, jset: Option<&[u64]>) -> Result<Report, String> {
    let check: FamilyCheck = verify_family(fam, p, k, nmax, jset).map_err(core_err)?;
    let mut rep = Report::new(command);
    rep.param("family", fam.to_string());
    if fam != Family::C192 {
        rep.param("p", p);
        rep.param("k", k);
    }
    rep.param("nmax", nmax);
    match jset {
        Some(js) => rep.param("j", Value::Array(js.iter().map(|&j| Value::from(j)).collect())),
        None => rep.param("j", Value::Null),
    }
    rep.detail("modulus", check.modulus);
    rep.detail("route", check.route);
    if let Some(par) = check.omega_parity {
        rep.detail("omega_parity", par);
    }
    rep.detail("cases", check.cases);
    rep.witnesses = check.witnesses.iter().map(witness_value).collect();
    rep.status = if check.passed() { Status::VerifiedToBound } else { Status::Refuted };
    rep.human.push(format!(
        "{} cases checked mod {} via {}; {} violation(s)",
        check.cases,
        check.modulus,
        check.route,
        rep.witnesses.len()
    ));
    Ok(rep)
}

pub fn cmd_verify_conjecture192(nmax: u64) -> Result<Report, String> {
    family_report("verify conjecture192", Family::C192, 5, 0, nmax, None)
}

pub fn cmd_verify_family(
    id: &str,
    p: u64,
    k: u32,
    nmax: u64,
    jset: Option<&[u64]>,
) -> Result<Report, String> {
    let fam = Family::parse(id).map_err(core_err)?;
    family_report("verify family", fam, p, k, nmax, jset)
}

// -------------------------------------------------------- eta-analyze ----

fn cusp_csv(cert: &Certificate) -> Csv {
    Csv {
        header: vec!["d", "indicator"],
        rows: cert
            .cusp_orders
            .iter()
            .map(|(d, o)| vec![d.to_string(), o.to_string()])
            .collect(),
    }
}

fn certificate_details(rep: &mut Report, cert: &Certificate) {
    rep.detail("weight", cert.weight.to_string());
    rep.detail("cond_24_delta", cert.cond_24_delta);
    rep.detail("cond_24_level_over_delta", cert.cond_24_level_over_delta);
    rep.detail(
        "character_discriminant",
        cert.character_discriminant.map(Value::from).unwrap_or(Value::Null),
    );
    rep.detail(
        "cusp_orders",
        Value::Array(
            cert.cusp_orders
                .iter()
                .map(|(d, o)| {
                    Value::Object(Map::from_iter([
                        ("d".to_string(), Value::from(*d)),
                        ("order".to_string(), ratio_value(*o)),
                    ]))
                })
                .collect(),
        ),
    );
    rep.detail("holomorphic", cert.holomorphic);
    for (d, o) in &cert.cusp_orders {
        if o < &Ratio::from_integer(0) {
            rep.witnesses.push(Value::Object(Map::from_iter([
                ("d".to_string(), Value::from(*d)),
                ("order".to_string(), ratio_value(*o)),
            ])));
        }
    }
    rep.status = if cert.holomorphic { Status::Proven } else { Status::Refuted };
}

pub fn cmd_eta_bpk(p: u64, k: u32) -> Result<Report, String> {
    let exps = b_exponents(p, k).map_err(core_err)?;
    let level = min_level(&exps).map_err(core_err)?;
    let eq = EtaQuotient::new(level, exps.clone()).map_err(core_err)?;
    let cert = certify(&eq);
    let mut rep = Report::new("eta-analyze");
    rep.param("form", format!("B_({p},{k})"));
    rep.param("exponents", exponent_object(&exps));
    rep.detail("minimal_level", level);
    let mut chi = Map::new();
    for q in [5u64, 7, 11, 13] {
        chi.insert(format!("chi({q})"), Value::from(character(&eq, q).map_err(core_err)?));
    }
    rep.detail("character_values", Value::Object(chi));
    certificate_details(&mut rep, &cert);
    rep.csv = Some(cusp_csv(&cert));
    rep.human.push(format!(
        "B_({p},{k}): weight {}, level {level}, {}",
        cert.weight,
        if cert.holomorphic { "holomorphic at every cusp" } else { "NOT holomorphic" }
    ));
    Ok(rep)
}

pub fn cmd_eta_certify(exp: &str, level: Option<u64>) -> Result<Report, String> {
    let pairs = parse_exponents(exp)?;
    let map: BTreeMap<u64, i64> = pairs.iter().copied().collect();
    let level = match level {
        Some(n) => n,
        None => min_level(&map).map_err(core_err)?,
    };
    let eq = EtaQuotient::new(level, pairs).map_err(core_err)?;
    let cert = certify(&eq);
    let mut rep = Report::new("eta-analyze");
    rep.param("exponents", exponent_object(eq.exponents()));
    rep.param("level", level);
    certificate_details(&mut rep, &cert);
    rep.csv = Some(cusp_csv(&cert));
    Ok(rep)
}

pub fn cmd_eta_min_level(exp: &str) -> Result<Report, String> {
    let pairs = parse_exponents(exp)?;
    let map: BTreeMap<u64, i64> = pairs.into_iter().collect();
    let level = min_level(&map).map_err(core_err)?;
    let mut rep = Report::new("eta-analyze");
    rep.param("exponents", exponent_object(&map));
    rep.detail("minimal_level", level);
    rep.status = Status::VerifiedToBound;
    rep.human.push(format!("smallest admissible level: {level}"));
    Ok(rep)
}

pub fn cmd_eta_table(p: u64, k: u32) -> Result<Report, String> {
    // The table and the general cusp-order formula must agree in sign at
    // every divisor; the run cross-checks that, so it carries a claim.
    let exps = b_exponents(p, k).map_err(core_err)?;
    let eq = EtaQuotient::new(2304, exps).map_err(core_err)?;
    let cert = certify(&eq);
    let mut rep = Report::new("eta-analyze");
    rep.param("table", format!("S({p})"));
    rep.param("k", k);
    let mut rows = Vec::new();
    let mut csv_rows = Vec::new();
    for d in divisors(2304) {
        let ind = s_indicator(p, k, d).map_err(core_err)?;
        let ord = cert.cusp_orders[&d];
        let agree = (ind < Ratio::from_integer(0)) == (ord < Ratio::from_integer(0))
            && (ind == Ratio::from_integer(0)) == (ord == Ratio::from_integer(0));
        if !agree {
            rep.witnesses.push(Value::Object(Map::from_iter([
                ("d".to_string(), Value::from(d)),
                ("indicator".to_string(), ratio_value(ind)),
                ("order".to_string(), ratio_value(ord)),
            ])));
        }
        rows.push(Value::Object(Map::from_iter([
            ("d".to_string(), Value::from(d)),
            ("indicator".to_string(), ratio_value(ind)),
        ])));
        csv_rows.push(vec![d.to_string(), ind.to_string()]);
    }
    rep.detail("rows", Value::Array(rows));
    rep.detail(
        "sign_cross_check",
        "indicator sign and vanishing agree with the level-2304 cusp-order formula at all 27 divisors",
    );
    rep.status = if rep.witnesses.is_empty() { Status::VerifiedToBound } else { Status::Refuted };
    rep.csv = Some(Csv { header: vec!["d", "indicator"], rows: csv_rows });
    Ok(rep)
}

// ------------------------------------------------------------- newman ----

pub fn cmd_newman_recurrence(p: u64, nmax: usize) -> Result<Report, String> {
    let report = recurrence_check(p, nmax).map_err(core_err)?;
    let mut rep = Report::new("newman");
    rep.param("check", "recurrence");
    rep.param("p", p);
    rep.param("nmax", nmax as u64);
    rep.detail("expansion_order", report.order as u64);
    match report.first_violation {
        None => {
            rep.status = Status::VerifiedToBound;
            rep.human.push(format!(
                "a(p²n+Δ) recurrence holds exactly over Z for all n ≤ {nmax}"
            ));
        }
        Some(n) => {
            rep.status = Status::Refuted;
            rep.witnesses.push(Value::Object(Map::from_iter([(
                "n".to_string(),
                Value::from(n as u64),
            )])));
        }
    }
    Ok(rep)
}

pub fn cmd_newman_omega(p: u64) -> Result<Report, String> {
    let om = omega(p).map_err(core_err)?;
    let mut rep = Report::new("newman");
    rep.param("check", "omega");
    rep.param("p", p);
    rep.detail("delta", om.delta);
    rep.detail("omega", om.value.to_string());
    rep.detail("parity", if om.is_even { "even" } else { "odd" });
    rep.status = Status::EvidenceOnly;
    rep.human.push(format!("ω({p}) = {} ({})", om.value, if om.is_even { "even" } else { "odd" }));
    Ok(rep)
}

pub fn cmd_newman_family(
    id: &str,
    p: u64,
    k: u32,
    nmax: u64,
    jset: Option<&[u64]>,
) -> Result<Report, String> {
    let fam = Family::parse(id).map_err(core_err)?;
    family_report("newman", fam, p, k, nmax, jset)
}

// ------------------------------------------------------------ density ----

pub fn cmd_density(
    modulus: u64,
    residue: u64,
    xmax: u64,
    big: bool,
    series_id: &str,
    cache_dir: Option<&Path>,
) -> Result<Report, String> {
    const DEFAULT_CAP: u64 = 100_000;
    const BIG_CAP: u64 = 1_000_000;
    if xmax == 0 {
        return Err("X must be ≥ 1".into());
    }
    if xmax > BIG_CAP {
        return Err(format!("X is capped at {BIG_CAP}; got {xmax}"));
    }
    if xmax > DEFAULT_CAP && !big {
        return Err(format!("X beyond {DEFAULT_CAP} needs --big (asked for {xmax})"));
    }
    let mut checkpoints = Vec::new();
    let mut x = 1000u64;
    while x <= xmax {
        checkpoints.push(x);
        x *= 10;
    }
    if checkpoints.last() != Some(&xmax) {
        checkpoints.push(xmax);
    }
    let mut rep = Report::new("density");
    rep.param("M", modulus);
    rep.param("r", residue);
    rep.param("X", xmax);
    let (series, label) = match series_id {
        "g" => {
            let order = 9 * (xmax as usize - 1) + 7;
            let ped = fetch_ped(cache_dir, order, Some(modulus), &mut rep)?;
            (
                ped.extract_progression(9, 7).map_err(core_err)?,
                "G = Σ ped(9n+7) qⁿ",
            )
        }
        "a" => (
            coeff_a(xmax as usize - 1, Some(modulus)).map_err(core_err)?,
            "Σ a(n) qⁿ with f₁f₃⁶ = Σ a(n) qⁿ",
        ),
        other => return Err(format!("unknown series {other:?}; expected g or a")),
    };
    rep.param("series", label);
    let dr = density(&series, residue, &checkpoints).map_err(core_err)?;
    let mut points = Vec::new();
    let mut csv_rows = Vec::new();
    for pt in &dr.points {
        let dens = fixed_point(pt.count as u128, pt.x as u128, 6);
        points.push(Value::Object(Map::from_iter([
            ("X".to_string(), Value::from(pt.x)),
            ("count".to_string(), Value::from(pt.count)),
            ("density".to_string(), Value::String(dens.clone())),
        ])));
        csv_rows.push(vec![pt.x.to_string(), pt.count.to_string(), dens.clone()]);
        rep.human.push(format!(
            "X = {:>8}: {} of {} coefficients ≡ {} (mod {}), density {}",
            pt.x, pt.count, pt.x, residue, modulus, dens
        ));
    }
    rep.detail("points", Value::Array(points));
    rep.status = Status::EvidenceOnly;
    rep.csv = Some(Csv { header: vec!["X", "count", "density"], rows: csv_rows });
    Ok(rep)
}

// -------------------------------------------------------------- hecke ----

pub struct HeckeOptions<'a> {
    pub bpk: (u64, u32),
    pub apply: Option<&'a [u64]>,
    pub check_commute: bool,
    pub order: Option<usize>,
    pub primes: Option<(u64, u64)>,
}

pub fn cmd_hecke(opts: &HeckeOptions) -> Result<Report, String> {
    let (p, k) = opts.bpk;
    if opts.check_commute == opts.apply.is_some() {
        return Err("choose exactly one of --apply or --check-commute".into());
    }
    let exps = b_exponents(p, k).map_err(core_err)?;
    let eq = EtaQuotient::new(2304, exps).map_err(core_err)?;
    let cert = certify(&eq);
    let ell = cert
        .weight
        .is_integer()
        .then(|| cert.weight.to_integer())
        .filter(|&w| w > 0)
        .ok_or_else(|| format!("B_({p},{k}) has non-positive or fractional weight"))? as u64;
    let modulus = p.pow(k + 1);
    let mut rep = Report::new("hecke");
    rep.param("form", format!("B_({p},{k})"));
    rep.param("modulus", modulus);
    rep.param("weight", ell);
    if opts.check_commute {
        let (p1, p2) = opts.primes.unwrap_or((5, 7));
        let order = opts.order.unwrap_or(5000);
        if order > 20_000 {
            return Err(format!("--order is capped at 20000 for --check-commute; got {order}"));
        }
        let chi1 = character(&eq, p1).map_err(core_err)?;
        let chi2 = character(&eq, p2).map_err(core_err)?;
        rep.param("primes", Value::Array(vec![Value::from(p1), Value::from(p2)]));
        rep.param(
            "chi",
            Value::Object(Map::from_iter([
                (p1.to_string(), Value::from(chi1)),
                (p2.to_string(), Value::from(chi2)),
            ])),
        );
        let b = build_b(p, k, (p1 * p2) as usize * order + 19).map_err(core_err)?;
        let ab = hecke_tp(&hecke_tp(&b, p1, ell, chi1).map_err(core_err)?, p2, ell, chi2)
            .map_err(core_err)?;
        let ba = hecke_tp(&hecke_tp(&b, p2, ell, chi2).map_err(core_err)?, p1, ell, chi1)
            .map_err(core_err)?;
        let common = ab.order().min(ba.order()).min(order);
        for n in 0..=common {
            if ab.residue(n) != ba.residue(n) {
                rep.witnesses.push(Value::Object(Map::from_iter([
                    ("n".to_string(), Value::from(n as u64)),
                    ("left".to_string(), Value::from(ab.residue(n))),
                    ("right".to_string(), Value::from(ba.residue(n))),
                ])));
            }
        }
        rep.detail("order_compared", common as u64);
        rep.status = if rep.witnesses.is_empty() { Status::VerifiedToBound } else { Status::Refuted };
        rep.human.push(format!(
            "T_{p1}T_{p2} and T_{p2}T_{p1} agree on B_({p},{k}) mod {modulus} through order {common}"
        ));
    } else {
        let primes = opts.apply.expect("checked above");
        if primes.is_empty() {
            return Err("--apply needs at least one prime".into());
        }
        let order = opts.order.unwrap_or(1000);
        let mut scale: u128 = 1;
        for &q in primes {
            scale = scale
                .checked_mul(q as u128)
                .filter(|&s| s <= 1_000_000)
                .ok_or_else(|| "product of --apply primes is too large".to_string())?;
        }
        let start = (scale as usize)
            .checked_mul(order)
            .and_then(|x| x.checked_add(19))
            .filter(|&x| x <= 10_000_000)
            .ok_or_else(|| "requested --order is too large for --apply".to_string())?;
        let mut f = build_b(p, k, start).map_err(core_err)?;
        let mut chi_list = Map::new();
        for &q in primes {
            let chi = character(&eq, q).map_err(core_err)?;
            chi_list.insert(q.to_string(), Value::from(chi));
            f = hecke_tp(&f, q, ell, chi).map_err(core_err)?;
        }
        rep.param("apply", Value::Array(primes.iter().map(|&q| Value::from(q)).collect()));
        rep.param("chi", Value::Object(chi_list));
        let mut first_nonzero = Vec::new();
        for n in 0..=f.order() {
            if f.residue(n) != 0 {
                first_nonzero.push(Value::Object(Map::from_iter([
                    ("index".to_string(), Value::from(n as u64)),
                    ("value".to_string(), Value::from(f.residue(n))),
                ])));
                if first_nonzero.len() == 8 {
                    break;
                }
            }
        }
        rep.detail("result_order", f.order() as u64);
        rep.detail("result_is_zero", f.is_zero());
        rep.detail("first_nonzero", Value::Array(first_nonzero));
        rep.status = Status::EvidenceOnly;
        rep.human.push(if f.is_zero() {
            format!("the image is identically 0 mod {modulus} through order {}", f.order())
        } else {
            format!("the image is nonzero mod {modulus}; see first_nonzero")
        });
    }
    Ok(rep)
}

// ------------------------------------------------- explore-conjecture ----

pub fn cmd_explore(p: u64, t: u64, nmax: u64) -> Result<Report, String> {
    let er = explore_final_conjecture(p, t, nmax).map_err(core_err)?;
    let mut rep = Report::new("explore-conjecture");
    rep.param("p", p);
    rep.param("t", t);
    rep.param("nmax", nmax);
    rep.detail("modulus", er.modulus);
    rep.detail(
        "progression",
        format!("ped({}n + {}j + {}), 1 ≤ j ≤ {}", er.step, er.j_step, er.offset, p - 1),
    );
    rep.detail("cases", er.cases);
    rep.witnesses = er.witnesses.iter().map(witness_value).collect();
    // Evidence only, never "proven": the conjecture is an infinite claim.
    rep.status = if er.passed() { Status::EvidenceOnly } else { Status::Refuted };
    rep.human.push(format!(
        "{} cases checked mod {}; {} violation(s); this is numerical evidence, not a proof",
        er.cases,
        er.modulus,
        rep.witnesses.len()
    ));
    Ok(rep)
}
