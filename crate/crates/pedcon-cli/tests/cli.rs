//! End-to-end tests of the `pedcon` binary: exit codes, output formats,
//! JSON determinism, and cache behavior, all through real process spawns.

use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn pedcon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pedcon"))
        .args(args)
        .output()
        .expect("spawn pedcon")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).expect("stdout parses as JSON")
}

// ---------------------------------------------------------- exit codes ----

#[test]
fn proven_run_exits_zero() {
    let out = pedcon(&["radu", "--t", "4", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v = json(&out);
    assert_eq!(v["status"], "proven");
    assert_eq!(v["details"]["nu_floor"], 53);
    assert_eq!(v["details"]["p_t"]["members"], serde_json::json!([4, 9]));
}

#[test]
fn refuted_run_exits_one_with_a_witness() {
    let out = pedcon(&["radu", "--t", "19", "--format", "json"]);
    assert_eq!(exit_code(&out), 1);
    let v = json(&out);
    assert_eq!(v["status"], "refuted");
    assert_eq!(v["witnesses"], serde_json::json!([{"index": 19, "value": 3}]));
}

#[test]
fn inadmissible_tuple_exits_two() {
    // t = 1 fails an admissibility condition before any sweep runs.
    let out = pedcon(&["radu", "--t", "1", "--format", "json"]);
    assert_eq!(exit_code(&out), 2);
    let v = json(&out);
    assert_eq!(v["status"], "error");
    assert_eq!(v["details"]["delta_star"]["admissible"], false);
}

#[test]
fn disqualified_explore_prime_exits_two() {
    // (−2/11) = +1, so p = 11 never qualifies for the progression family.
    let out = pedcon(&["explore-conjecture", "--p", "11", "--t", "11"]);
    assert_eq!(exit_code(&out), 2);
    let msg = stdout(&out);
    assert!(msg.contains("(−2/11) = 1"), "names the symbol value: {msg}");
}

#[test]
fn parity_mismatched_family_exits_two() {
    // T2.2 needs ω(p) odd; ω(5) = −66 is even.
    let out = pedcon(&["newman", "--p", "5", "--check", "family", "--family", "T2.2"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stdout(&out).contains("ω(5) = -66 is even"));
}

#[test]
fn oversized_exact_table_exits_two_without_allow_slow() {
    let out = pedcon(&["ped", "--nmax", "2001", "--exact"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stdout(&out).contains("--allow-slow"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["ped", "--nmax", "5", "--modulus", "3", "--exact"][..],
        &["eta-analyze"][..],
        &["eta-analyze", "--table", "2"][..],
        &["hecke", "--bpk", "2", "3"][..],
        &["newman", "--p", "7", "--check", "family"][..],
        &["density", "--M", "24", "--X", "200000"][..],
        &["no-such-subcommand"][..],
    ] {
        let out = pedcon(args);
        assert_eq!(exit_code(&out), 2, "args {args:?} should be a usage error");
    }
}

// -------------------------------------------------------------- values ----

#[test]
fn ped_table_lists_the_known_values() {
    let out = pedcon(&["ped", "--nmax", "10"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("ped(7) = 12"));
    assert!(text.contains("status: verified-to-bound"));
}

#[test]
fn ped_nmax_zero_lists_only_the_constant_term() {
    let out = pedcon(&["ped", "--nmax", "0"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("ped(0) = 1"));
}

#[test]
fn ped_residue_table_is_evidence_only() {
    let out = pedcon(&["ped", "--nmax", "7", "--modulus", "5", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v = json(&out);
    assert_eq!(v["status"], "evidence-only");
    assert_eq!(v["details"]["values"], serde_json::json!([1, 1, 2, 3, 4, 1, 4, 2]));
}

#[test]
fn verify_conjecture192_is_verified_to_bound() {
    let out = pedcon(&["verify", "conjecture192", "--nmax", "40", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v = json(&out);
    assert_eq!(v["status"], "verified-to-bound");
    assert_eq!(v["details"]["cases"], 164);
    assert_eq!(v["witnesses"], serde_json::json!([]));
}

#[test]
fn verify_theorem_1_1_is_proven() {
    let out = pedcon(&["verify", "theorem-1-1", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v = json(&out);
    assert_eq!(v["status"], "proven");
    for t in ["t=4", "t=9", "t=14", "t=24"] {
        assert_eq!(v["details"]["tuples"][t]["status"], "proven", "{t}");
        assert_eq!(v["details"]["tuples"][t]["nu_floor"], 53, "{t}");
    }
}

#[test]
fn verify_family_t331_is_verified_to_bound() {
    let out = pedcon(&[
        "verify", "family", "--id", "T3.3.1", "--p", "19", "--nmax", "100", "--format", "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let v = json(&out);
    assert_eq!(v["status"], "verified-to-bound");
    assert_eq!(v["details"]["cases"], 95);
}

// ----------------------------------------------------------------- csv ----

#[test]
fn cusp_table_csv_has_the_documented_header() {
    let out = pedcon(&["eta-analyze", "--bpk", "2", "3", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("d,indicator"));
    assert_eq!(lines.clone().count(), 27, "one row per divisor of 2304");
    assert!(text.lines().any(|l| l == "1,21"));
    assert!(text.lines().any(|l| l == "2304,19"));
}

#[test]
fn density_csv_has_the_documented_header() {
    let out = pedcon(&["density", "--M", "24", "--X", "1000", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("X,count,density"));
    assert_eq!(lines.next(), Some("1000,613,0.613000"));
}

#[test]
fn csv_is_rejected_for_commands_without_a_table() {
    let out = pedcon(&["radu", "--t", "4", "--format", "csv"]);
    assert_eq!(exit_code(&out), 2);
    assert!(out.stdout.is_empty(), "no partial table on stdout");
    assert!(String::from_utf8_lossy(&out.stderr).contains("not defined"));
}

// ------------------------------------------------------------- caching ----

#[test]
fn cache_is_transparent_and_self_healing() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().to_str().expect("utf-8 tempdir");
    let args = [
        "density", "--M", "24", "--X", "1000", "--cache-dir", path, "--format", "json",
    ];

    let cold = pedcon(&args);
    assert_eq!(exit_code(&cold), 0);
    let cache_file = cached_series_file(dir.path());
    let original_bytes = std::fs::read(&cache_file).expect("cache file written");

    let warm = pedcon(&args);
    assert_eq!(exit_code(&warm), 0);
    assert_eq!(stdout(&cold), stdout(&warm), "cold and warm reports are byte-identical");

    // Corrupt the constant-term line (two header lines, then the n = 0
    // coefficient, which the integrity check always audits); the next run
    // must detect it, rebuild, and still report the same bytes.
    let text = String::from_utf8(original_bytes.clone()).expect("utf-8 cache file");
    let mut lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[2], "1", "ped(0) = 1 sits on the first coefficient line");
    lines[2] = "2";
    std::fs::write(&cache_file, lines.join("\n") + "\n").expect("write corrupted cache");

    let healed = pedcon(&args);
    assert_eq!(exit_code(&healed), 0);
    assert_eq!(stdout(&cold), stdout(&healed), "healed report matches the cold run");
    assert_eq!(
        std::fs::read(&cache_file).expect("cache file present"),
        original_bytes,
        "cache file rebuilt to its original bytes"
    );
}

fn cached_series_file(dir: &Path) -> std::path::PathBuf {
    let mut entries: Vec<_> = std::fs::read_dir(dir)
        .expect("read cache dir")
        .map(|e| e.expect("dir entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "series"))
        .collect();
    assert_eq!(entries.len(), 1, "exactly one cached series expected");
    entries.pop().expect("one entry")
}

// -------------------------------------------------------- determinism ----

#[test]
fn json_reports_are_byte_identical_across_runs() {
    for args in [
        &["radu", "--t", "9", "--format", "json"][..],
        &["verify", "theorem-1-1", "--format", "json"][..],
        &["newman", "--p", "5", "--check", "recurrence", "--format", "json"][..],
        &["eta-analyze", "--table", "3", "--k", "3", "--format", "json"][..],
        &["explore-conjecture", "--p", "7", "--t", "7", "--format", "json"][..],
    ] {
        let first = pedcon(args);
        let second = pedcon(args);
        assert_eq!(stdout(&first), stdout(&second), "args {args:?}");
        assert!(!stdout(&first).is_empty());
    }
}

#[test]
fn json_reports_carry_the_schema_tag_and_echo_parameters() {
    let out = pedcon(&["newman", "--p", "7", "--check", "omega", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["schema"], "pedcon-report/1");
    assert_eq!(v["command"], "newman");
    assert_eq!(v["parameters"]["p"], 7);
    assert_eq!(v["details"]["omega"], "-176");
}
