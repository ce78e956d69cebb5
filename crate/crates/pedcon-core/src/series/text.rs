//! Plain-text series serialization.
//!
//! The format is a two-line header followed by one decimal coefficient per
//! line:
//!
//! ```text
//! order=<N>
//! modulus=<m|none>
//! <a_0>
//! <a_1>
//! ...
//! <a_N>
//! ```
//!
//! Exact series may carry negative coefficients; modular series store their
//! canonical residues in `[0, m)`. The reader validates the coefficient
//! count against the header and every residue against the modulus, so a
//! truncated or tampered file fails loudly instead of round-tripping into a
//! silently wrong series.

use super::Series;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use std::io::{BufRead, Write};
use std::str::FromStr;

/// Write `s` in the two-line-header text format.
pub fn write_series(s: &Series, w: &mut impl Write) -> Result<()> {
    let mut buf = String::new();
    buf.push_str(&format!("order={}\n", s.order()));
    match s.modulus() {
        None => buf.push_str("modulus=none\n"),
        Some(m) => buf.push_str(&format!("modulus={m}\n")),
    }
    w.write_all(buf.as_bytes())?;
    let mut line = String::with_capacity(32);
    for n in 0..=s.order() {
        line.clear();
        match s.modulus() {
            None => line.push_str(&s.coeff(n).to_string()),
            Some(_) => line.push_str(&s.residue(n).to_string()),
        }
        line.push('\n');
        w.write_all(line.as_bytes())?;
    }
    w.flush()?;
    Ok(())
}

/// Serialize to an owned string (convenience over [`write_series`]).
pub fn series_to_string(s: &Series) -> String {
    let mut out = Vec::new();
    write_series(s, &mut out).expect("writing to a Vec cannot fail");
    String::from_utf8(out).expect("serialization is ASCII")
}

/// Read a series in the two-line-header text format.
pub fn read_series(r: impl BufRead) -> Result<Series> {
    let mut lines = r.lines();
    let order_line = lines
        .next()
        .ok_or_else(|| Error::Parse("missing order header".into()))??;
    let order: usize = order_line
        .strip_prefix("order=")
        .ok_or_else(|| Error::Parse(format!("expected `order=<N>`, got `{order_line}`")))?
        .parse()
        .map_err(|_| Error::Parse(format!("invalid order in `{order_line}`")))?;
    let modulus_line = lines
        .next()
        .ok_or_else(|| Error::Parse("missing modulus header".into()))??;
    let modulus_str = modulus_line
        .strip_prefix("modulus=")
        .ok_or_else(|| Error::Parse(format!("expected `modulus=<m|none>`, got `{modulus_line}`")))?;
    let modulus: Option<u64> = match modulus_str {
        "none" => None,
        s => Some(
            s.parse()
                .map_err(|_| Error::Parse(format!("invalid modulus `{s}`")))?,
        ),
    };

    match modulus {
        None => {
            let mut coeffs = Vec::with_capacity(order + 1);
            for line in &mut lines {
                let line = line?;
                let v = BigInt::from_str(line.trim())
                    .map_err(|_| Error::Parse(format!("invalid coefficient `{line}`")))?;
                coeffs.push(v);
                if coeffs.len() > order + 1 {
                    return Err(Error::Parse(format!(
                        "more than {} coefficients for order {order}",
                        order + 1
                    )));
                }
            }
            if coeffs.len() != order + 1 {
                return Err(Error::Parse(format!(
                    "expected {} coefficients for order {order}, found {}",
                    order + 1,
                    coeffs.len()
                )));
            }
            Ok(Series::from_exact(coeffs))
        }
        Some(m) => {
            let mut coeffs = Vec::with_capacity(order + 1);
            for line in &mut lines {
                let line = line?;
                let v: u64 = line
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid residue `{line}`")))?;
                coeffs.push(v);
                if coeffs.len() > order + 1 {
                    return Err(Error::Parse(format!(
                        "more than {} coefficients for order {order}",
                        order + 1
                    )));
                }
            }
            if coeffs.len() != order + 1 {
                return Err(Error::Parse(format!(
                    "expected {} coefficients for order {order}, found {}",
                    order + 1,
                    coeffs.len()
                )));
            }
            // from_residues re-validates residues against the modulus.
            Series::from_residues(m, coeffs)
        }
    }
}
