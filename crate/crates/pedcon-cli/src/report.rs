//! Run reports: one structure, three renderings.
//!
//! Every subcommand produces a [`Report`]; the process exit code is a pure
//! function of its status. The JSON rendering is the machine interface and
//! is deterministic by construction: all objects are ordered maps, and no
//! float or timing ever enters the tree (densities and rationals are exact
//! decimal/fraction strings). Wall-clock timing appears only in the human
//! rendering, which makes no reproducibility promise.

use serde_json::{Map, Value};
use std::collections::BTreeMap;
use std::time::Duration;

/// Schema tag embedded in every JSON report.
pub const SCHEMA: &str = "pedcon-report/1";

/// Outcome vocabulary. `Proven` is reserved for statements about infinitely
/// many cases established by exact finite computation (Radu pipeline,
/// holomorphy certificates); bounded sweeps that pass are `VerifiedToBound`;
/// observational output (tables, densities, conjecture exploration) is
/// `EvidenceOnly` and is never upgraded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Proven,
    VerifiedToBound,
    Refuted,
    EvidenceOnly,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Proven => "proven",
            Status::VerifiedToBound => "verified-to-bound",
            Status::Refuted => "refuted",
            Status::EvidenceOnly => "evidence-only",
            Status::Error => "error",
        }
    }

    /// 0 = proven/verified/evidence, 1 = refuted (witness found),
    /// 2 = precondition or usage error.
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Proven | Status::VerifiedToBound | Status::EvidenceOnly => 0,
            Status::Refuted => 1,
            Status::Error => 2,
        }
    }
}

/// Tabular payload for the formats that have one (`--format csv`).
#[derive(Debug, Clone)]
pub struct Csv {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

/// The result of one command run.
#[derive(Debug, Clone)]
pub struct Report {
    /// Subcommand echo, e.g. `"verify theorem-1-1"`.
    pub command: String,
    /// The mathematical inputs (never paths or environment).
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    /// Concrete counterexamples; nonempty exactly when status is `Refuted`.
    pub witnesses: Vec<Value>,
    /// Command-specific findings.
    pub details: BTreeMap<String, Value>,
    /// Cached series files touched by this run: file basename, sha256,
    /// spot-check seed. Identical whether the cache was cold or warm.
    pub artifacts: Vec<Value>,
    /// Extra lines for the human rendering.
    pub human: Vec<String>,
    /// Tabular rendering, for the commands that define one.
    pub csv: Option<Csv>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            parameters: BTreeMap::new(),
            status: Status::EvidenceOnly,
            witnesses: Vec::new(),
            details: BTreeMap::new(),
            artifacts: Vec::new(),
            human: Vec::new(),
            csv: None,
        }
    }

    /// An error report carrying only a message.
    pub fn error(command: impl Into<String>, message: &str) -> Report {
        let mut r = Report::new(command);
        r.status = Status::Error;
        r.details.insert("message".into(), Value::String(message.into()));
        r
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.parameters.insert(key.into(), value.into());
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.into(), value.into());
    }

    pub fn to_json(&self) -> String {
        let mut root = Map::new();
        root.insert("schema".into(), Value::String(SCHEMA.into()));
        root.insert("command".into(), Value::String(self.command.clone()));
        root.insert(
            "parameters".into(),
            Value::Object(self.parameters.clone().into_iter().collect()),
        );
        root.insert("status".into(), Value::String(self.status.as_str().into()));
        root.insert("witnesses".into(), Value::Array(self.witnesses.clone()));
        root.insert(
            "details".into(),
            Value::Object(self.details.clone().into_iter().collect()),
        );
        root.insert("artifacts".into(), Value::Array(self.artifacts.clone()));
        let mut out = serde_json::to_string_pretty(&Value::Object(root))
            .expect("report trees contain no non-serializable values");
        out.push('\n');
        out
    }

    pub fn to_human(&self, elapsed: Option<Duration>) -> String {
        let mut out = format!("pedcon {}\n", self.command);
        for (k, v) in &self.parameters {
            out.push_str(&format!("  {k} = {}\n", human_value(v)));
        }
        for (k, v) in &self.details {
            out.push_str(&format!("  {k}: {}\n", human_value(v)));
        }
        for line in &self.human {
            out.push_str(line);
            out.push('\n');
        }
        if !self.witnesses.is_empty() {
            out.push_str("witnesses:\n");
            for w in &self.witnesses {
                out.push_str(&format!("  {}\n", human_value(w)));
            }
        }
        for a in &self.artifacts {
            out.push_str(&format!("cache artifact: {}\n", human_value(a)));
        }
        out.push_str(&format!("status: {}", self.status.as_str()));
        if let Some(d) = elapsed {
            out.push_str(&format!("  (elapsed: {} ms)", d.as_millis()));
        }
        out.push('\n');
        out
    }

    pub fn to_csv(&self) -> Result<String, String> {
        let csv = self.csv.as_ref().ok_or_else(|| {
            format!(
                "csv output is not defined for `{}`; it is limited to density checkpoints and cusp tables",
                self.command
            )
        })?;
        let mut out = csv.header.join(",");
        out.push('\n');
        for row in &csv.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        Ok(out)
    }
}

fn human_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Exact fixed-point decimal `numer/denom` with `places` digits, truncated
/// toward zero (exact whenever `denom | numer·10^places`, in particular at
/// power-of-ten checkpoints).
pub fn fixed_point(numer: u128, denom: u128, places: u32) -> String {
    assert!(denom != 0, "fixed_point with zero denominator");
    let scale = 10u128.pow(places);
    let whole = numer / denom;
    let frac = numer % denom * scale / denom;
    format!("{whole}.{frac:0width$}", width = places as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(Status::Proven.exit_code(), 0);
        assert_eq!(Status::VerifiedToBound.exit_code(), 0);
        assert_eq!(Status::EvidenceOnly.exit_code(), 0);
        assert_eq!(Status::Refuted.exit_code(), 1);
        assert_eq!(Status::Error.exit_code(), 2);
    }

    #[test]
    fn json_is_stable_and_schema_tagged() {
        let mut r = Report::new("density");
        r.param("modulus", 24u64);
        r.detail("zeta", "value");
        r.detail("alpha", "first");
        let a = r.to_json();
        let b = r.to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"schema\": \"pedcon-report/1\""));
        // BTreeMap ordering: alpha before zeta.
        assert!(a.find("alpha").unwrap() < a.find("zeta").unwrap());
        assert!(a.ends_with('\n'));
    }

    #[test]
    fn empty_witnesses_serialize_as_empty_array() {
        let r = Report::new("radu");
        assert!(r.to_json().contains("\"witnesses\": []"));
    }

    #[test]
    fn csv_requires_a_table() {
        let mut r = Report::new("ped");
        assert!(r.to_csv().is_err());
        r.csv = Some(Csv {
            header: vec!["X", "count", "density"],
            rows: vec![vec!["1000".into(), "613".into(), "0.613000".into()]],
        });
        assert_eq!(r.to_csv().unwrap(), "X,count,density\n1000,613,0.613000\n");
    }

    #[test]
    fn fixed_point_strings() {
        assert_eq!(fixed_point(613, 1000, 6), "0.613000");
        assert_eq!(fixed_point(74681, 100_000, 6), "0.746810");
        assert_eq!(fixed_point(1000, 1000, 6), "1.000000");
        assert_eq!(fixed_point(1, 3, 6), "0.333333");
        assert_eq!(fixed_point(0, 7, 6), "0.000000");
    }
}
