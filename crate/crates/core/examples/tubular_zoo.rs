//! Every real weighted curve with χ'_orb = 0, up to isomorphism.

use std::collections::BTreeMap;

use nc_curves::weighted_curve::CurveClass;
use nc_curves::zoo::{enumerate_chi_zero, zoo_report};

fn main() -> nc_curves::Result<()> {
    let entries = enumerate_chi_zero()?;
    print!("{}", zoo_report(&entries));

    let mut by_base: BTreeMap<&str, usize> = BTreeMap::new();
    for e in entries.iter().filter(|e| e.class == CurveClass::Tubular) {
        *by_base.entry(e.base).or_default() += 1;
    }
    let elliptic = entries.iter().filter(|e| e.class == CurveClass::Elliptic).count();
    println!("\n{} entries: {elliptic} elliptic, tubular per base {by_base:?}", entries.len());
    Ok(())
}
