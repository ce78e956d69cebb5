//! The README's library snippet, kept compiling.

use pedcon_core::radu::{radu_verify, RaduTuple};
use pedcon_core::series::ped_series;
use std::collections::BTreeMap;

fn main() -> pedcon_core::Result<()> {
    let ped = ped_series(1798, None)?; // exact over Z
    let g = ped.extract_progression(9, 7)?; // Σ ped(9n+7) qⁿ
    assert_eq!(g.coeff(1).to_string(), "132");

    let tuple = RaduTuple::new(25, 12, 60, 4, &[5, -4, 6, 1, 0, 0])?;
    let rprime = BTreeMap::from([(1, 1)]);
    let report = radu_verify(&tuple, &rprime, 16, 16)?;
    assert_eq!(report.nu_floor, Some(53)); // sweep bound
    println!("certification bound ⌊ν⌋ = {:?}", report.nu_floor);
    Ok(())
}
