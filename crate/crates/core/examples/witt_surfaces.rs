//! The catalog of small Witt surfaces and a hand-built one.

use nc_curves::algebra::fmt_rational;
use nc_curves::witt_surface::{catalog, KleinTopology, Oval, Sign, WittSurface, CATALOG_NAMES};

fn main() -> nc_curves::Result<()> {
    println!("{:<7} g  kappa s  genus  chi(X)  chi'", "name");
    for name in CATALOG_NAMES {
        let w = catalog(name)?;
        let (chi, chi_norm) = w.euler_characteristics()?;
        println!(
            "{:<7} {}  {}     {}  {}      {:<7} {}",
            name,
            w.topology.g,
            w.kappa(),
            w.skewness(),
            w.genus()?,
            fmt_rational(&chi),
            fmt_rational(&chi_norm)
        );
    }

    // A disc whose boundary oval changes sign twice is the catalog's D_22.
    let w = WittSurface::from_signs(
        KleinTopology::new(0, 1, 1),
        vec![Oval::Segmented(vec![Sign::Plus, Sign::Minus])],
    );
    w.validate()?;
    println!("disc with one +- oval is {:?}", w.catalog_name());

    // Four ovals on a genus-two surface break the Weichold bound.
    let bad = WittSurface::from_signs(KleinTopology::new(2, 4, 1), vec![Oval::Whole(Sign::Plus); 4]);
    println!("g=2 with four ovals: {}", bad.validate().unwrap_err());
    Ok(())
}
