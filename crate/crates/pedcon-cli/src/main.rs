//! `pedcon` — machine verification of congruences for the partition
//! function ped(n) (partitions with even parts distinct).
//!
//! Every run emits one report: human text (default), canonical JSON
//! (`--format json`, byte-stable across repeated runs), or CSV for the
//! commands that define a table. Exit code 0 means proven / verified to the
//! requested bound / evidence collected, 1 means refuted with a concrete
//! witness in the report, 2 means the inputs failed a precondition.

mod cache;
mod commands;
mod report;

use clap::{Parser, Subcommand, ValueEnum};
use report::{Report, Status};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "pedcon",
    version,
    about = "Exact-arithmetic verification of ped(n) congruences",
    propagate_version = true
)]
struct Cli {
    /// Output format. JSON output is deterministic: repeated runs with the
    /// same parameters are byte-identical.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Directory for cached series expansions (created on demand). Cached
    /// files are integrity-checked on load and rebuilt if corrupted.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print ped(n) for n ≤ nmax, exactly or modulo m.
    Ped(PedArgs),
    /// Verify a named congruence result end to end.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Run the Δ*/P(t)/ν certification for one progression tuple.
    Radu(RaduArgs),
    /// Certify eta quotients: weights, characters, cusp orders, S-tables.
    EtaAnalyze(EtaArgs),
    /// Coefficient recurrences, ω(p) invariants, and congruence families.
    Newman(NewmanArgs),
    /// Count vanishing coefficients of Σ ped(9n+7)qⁿ modulo M up to X.
    Density(DensityArgs),
    /// Apply Hecke operators to the B-family forms, or check commutation.
    Hecke(HeckeArgs),
    /// Numerically probe the mod-192 progression conjecture for p | t.
    ExploreConjecture(ExploreArgs),
}

#[derive(clap::Args)]
struct PedArgs {
    /// Largest index to print.
    #[arg(long)]
    nmax: u64,
    /// Reduce the table modulo this (conflicts with --exact).
    #[arg(long)]
    modulus: Option<u64>,
    /// Exact integer values (the default when --modulus is absent).
    #[arg(long)]
    exact: bool,
    /// Permit exact tables beyond n = 2000 (slower; capped at 100000).
    #[arg(long)]
    allow_slow: bool,
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// Sweep ped(225n+B) ≡ 0 (mod 192) for B ∈ {43, 88, 133, 223}, n ≤ nmax.
    Conjecture192 {
        #[arg(long, default_value_t = 40)]
        nmax: u64,
    },
    /// Prove A(25n+t') ≡ 0 (mod 16) for t' ∈ {4, 9, 14, 24} by the
    /// progression certification, hence ped(225n+B) ≡ 0 (mod 192).
    #[command(name = "theorem-1-1")]
    Theorem11 {
        /// Modulus for the coefficient sweep (16 = what the theorem needs).
        #[arg(long, default_value_t = 16)]
        u: u64,
        /// Extra expansion margin beyond ⌊ν⌋.
        #[arg(long, default_value_t = 16)]
        margin: usize,
    },
    /// Check one congruence family (T3.1, T3.3.1, T2.2, T3.3, C192) to a bound.
    Family {
        /// Family name, e.g. T3.1 or T3.3.1.
        #[arg(long)]
        id: String,
        /// The prime indexing the family.
        #[arg(long)]
        p: u64,
        /// Iteration depth k ≥ 0 in the exponent tower.
        #[arg(long, default_value_t = 0)]
        k: u32,
        /// Largest n to sweep.
        #[arg(long, default_value_t = 50)]
        nmax: u64,
        /// Restrict to these j (default: all 1 ≤ j ≤ p−1 where applicable).
        #[arg(long, value_delimiter = ',')]
        j: Option<Vec<u64>>,
    },
}

#[derive(clap::Args)]
struct RaduArgs {
    /// Progression modulus m in ped-style index m·n + t.
    #[arg(long, default_value_t = 25)]
    m: u64,
    /// Eta-quotient index bound M; the exponent list r runs over its divisors.
    #[arg(long = "big-m", default_value_t = 12)]
    big_m: u64,
    /// Level N of the certification.
    #[arg(long, default_value_t = 60)]
    level: u64,
    /// Progression residue t (0 ≤ t < m).
    #[arg(long)]
    t: u64,
    /// Exponents r over the sorted divisors of M (trailing zeros optional).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1.., default_values_t = [5, -4, 6, 1, 0, 0])]
    r: Vec<i64>,
    /// Auxiliary exponents r' over the sorted divisors of N
    /// (trailing zeros optional; default 1,0,0,...).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1..)]
    rprime: Option<Vec<i64>>,
    /// Modulus u for the final coefficient sweep.
    #[arg(long, default_value_t = 16)]
    u: u64,
    /// Extra expansion margin beyond ⌊ν⌋.
    #[arg(long, default_value_t = 16)]
    margin: usize,
}

#[derive(clap::Args)]
struct EtaArgs {
    /// Analyze the reduced form B_(p,k): two values, p then k.
    #[arg(long, num_args = 2, value_names = ["P", "K"])]
    bpk: Option<Vec<u64>>,
    /// Analyze an explicit quotient, e.g. --exp 1:-11,2:4,3:6,4:1.
    #[arg(long)]
    exp: Option<String>,
    /// Level for --exp (default: the smallest admissible level).
    #[arg(long)]
    level: Option<u64>,
    /// Print the sign-indicator table S(p) for p = 2 or 3 (needs --k).
    #[arg(long)]
    table: Option<u64>,
    /// k for --table.
    #[arg(long)]
    k: Option<u32>,
    /// With --exp: print only the smallest admissible level.
    #[arg(long)]
    min_level: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum NewmanCheck {
    /// Exact three-term recurrence for a(p²n+Δ) over Z.
    Recurrence,
    /// A congruence family sweep (needs --family).
    Family,
    /// Print ω(p) = a(Δ) + p²(−2/p)(−Δ/p) and its parity.
    Omega,
}

#[derive(clap::Args)]
struct NewmanArgs {
    /// The prime p ≥ 5.
    #[arg(long)]
    p: u64,
    #[arg(long, value_enum)]
    check: NewmanCheck,
    /// Family name for --check family (T3.1, T3.3.1, T2.2, T3.3, C192).
    #[arg(long)]
    family: Option<String>,
    /// Iteration depth k ≥ 0 for family checks.
    #[arg(long, default_value_t = 0)]
    k: u32,
    /// Sweep bound (default 100 for recurrence, 50 for families).
    #[arg(long)]
    nmax: Option<u64>,
    /// Restrict family checks to these j.
    #[arg(long, value_delimiter = ',')]
    j: Option<Vec<u64>>,
}

#[derive(clap::Args)]
struct DensityArgs {
    /// The modulus M.
    #[arg(long = "M")]
    modulus: u64,
    /// The residue to count (default 0).
    #[arg(long = "r", default_value_t = 0)]
    residue: u64,
    /// Count coefficients with index n < X.
    #[arg(long = "X", default_value_t = 100_000)]
    xmax: u64,
    /// Allow X up to 10⁶.
    #[arg(long)]
    big: bool,
    /// Which series: g = Σ ped(9n+7)qⁿ, a = f₁f₃⁶.
    #[arg(long, default_value = "g")]
    series: String,
}

#[derive(clap::Args)]
struct HeckeArgs {
    /// The form B_(p,k): two values, p then k.
    #[arg(long, num_args = 2, value_names = ["P", "K"], required = true)]
    bpk: Vec<u64>,
    /// Apply T_q for these primes in order, then report the image.
    #[arg(long, value_delimiter = ',')]
    apply: Option<Vec<u64>>,
    /// Check T_{q1}T_{q2} = T_{q2}T_{q1} on the form (see --primes).
    #[arg(long)]
    check_commute: bool,
    /// Comparison/expansion order (default 1000 for --apply, 5000 for
    /// --check-commute).
    #[arg(long)]
    order: Option<usize>,
    /// The two primes for --check-commute (default 5,7).
    #[arg(long, value_delimiter = ',')]
    primes: Option<Vec<u64>>,
}

#[derive(clap::Args)]
struct ExploreArgs {
    /// The prime p, subject to (−2/p) = −1.
    #[arg(long)]
    p: u64,
    /// The progression parameter t with gcd(t,6) = 1 and p | t.
    #[arg(long)]
    t: u64,
    /// Largest n to sweep per j.
    #[arg(long, default_value_t = 40)]
    nmax: u64,
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Ped(_) => "ped",
        Command::Verify { target } => match target {
            VerifyTarget::Conjecture192 { .. } => "verify conjecture192",
            VerifyTarget::Theorem11 { .. } => "verify theorem-1-1",
            VerifyTarget::Family { .. } => "verify family",
        },
        Command::Radu(_) => "radu",
        Command::EtaAnalyze(_) => "eta-analyze",
        Command::Newman(_) => "newman",
        Command::Density(_) => "density",
        Command::Hecke(_) => "hecke",
        Command::ExploreConjecture(_) => "explore-conjecture",
    }
}

fn run(cli: &Cli) -> Result<Report, String> {
    let cache_dir = cli.cache_dir.as_deref();
    match &cli.command {
        Command::Ped(a) => commands::cmd_ped(a.nmax, a.modulus, a.exact, a.allow_slow, cache_dir),
        Command::Verify { target } => match target {
            VerifyTarget::Conjecture192 { nmax } => commands::cmd_verify_conjecture192(*nmax),
            VerifyTarget::Theorem11 { u, margin } => commands::cmd_verify_theorem11(*u, *margin),
            VerifyTarget::Family { id, p, k, nmax, j } => {
                commands::cmd_verify_family(id, *p, *k, *nmax, j.as_deref())
            }
        },
        Command::Radu(a) => commands::cmd_radu(
            a.m,
            a.big_m,
            a.level,
            a.t,
            &a.r,
            a.rprime.as_deref(),
            a.u,
            a.margin,
        ),
        Command::EtaAnalyze(a) => {
            let modes = usize::from(a.bpk.is_some())
                + usize::from(a.exp.is_some())
                + usize::from(a.table.is_some());
            if modes != 1 {
                return Err(
                    "choose exactly one of --bpk, --exp, or --table (see --help)".into()
                );
            }
            if let Some(p) = a.table {
                let k = a.k.ok_or("--table needs --k")?;
                return commands::cmd_eta_table(p, k);
            }
            if a.k.is_some() {
                return Err("--k only applies to --table".into());
            }
            if let Some(bpk) = &a.bpk {
                if a.min_level || a.level.is_some() {
                    return Err("--min-level and --level only apply to --exp".into());
                }
                let k = u32::try_from(bpk[1]).map_err(|_| "k is out of range".to_string())?;
                return commands::cmd_eta_bpk(bpk[0], k);
            }
            let exp = a.exp.as_deref().expect("one mode is set");
            if a.min_level {
                if a.level.is_some() {
                    return Err("--min-level conflicts with --level".into());
                }
                commands::cmd_eta_min_level(exp)
            } else {
                commands::cmd_eta_certify(exp, a.level)
            }
        }
        Command::Newman(a) => {
            if a.family.is_some() && a.check != NewmanCheck::Family {
                return Err("--family needs --check family".into());
            }
            match a.check {
                NewmanCheck::Recurrence => {
                    commands::cmd_newman_recurrence(a.p, a.nmax.unwrap_or(100) as usize)
                }
                NewmanCheck::Omega => commands::cmd_newman_omega(a.p),
                NewmanCheck::Family => {
                    let fam = a.family.as_deref().ok_or("--check family needs --family")?;
                    commands::cmd_newman_family(fam, a.p, a.k, a.nmax.unwrap_or(50), a.j.as_deref())
                }
            }
        }
        Command::Density(a) => commands::cmd_density(
            a.modulus,
            a.residue,
            a.xmax,
            a.big,
            &a.series,
            cache_dir,
        ),
        Command::Hecke(a) => commands::cmd_hecke(&commands::HeckeOptions {
            bpk: (
                a.bpk[0],
                u32::try_from(a.bpk[1]).map_err(|_| "k is out of range".to_string())?,
            ),
            apply: a.apply.as_deref(),
            check_commute: a.check_commute,
            order: a.order,
            primes: match a.primes.as_deref() {
                None => None,
                Some([p1, p2]) => Some((*p1, *p2)),
                Some(other) => {
                    return Err(format!("--primes takes exactly two primes, got {}", other.len()))
                }
            },
        }),
        Command::ExploreConjecture(a) => commands::cmd_explore(a.p, a.t, a.nmax),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let name = command_name(&cli.command);
    let rep = match run(&cli) {
        Ok(rep) => rep,
        Err(msg) => Report::error(name, &msg),
    };
    match cli.format {
        Format::Json => print!("{}", rep.to_json()),
        Format::Human => {
            if rep.status == Status::Error {
                if let Some(serde_json::Value::String(msg)) = rep.details.get("message") {
                    eprintln!("error: {msg}");
                }
            }
            print!("{}", rep.to_human(Some(started.elapsed())));
        }
        Format::Csv => match rep.to_csv() {
            Ok(table) => print!("{table}"),
            Err(msg) => {
                eprintln!("error: {msg}");
                return ExitCode::from(2);
            }
        },
    }
    ExitCode::from(rep.status.exit_code())
}
