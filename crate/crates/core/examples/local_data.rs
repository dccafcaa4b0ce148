//! Local invariants at the four kinds of point on a Witt curve.

use nc_curves::local_data::{local_skewness, skewness, witt_local_datum, WittPointClass};

fn main() -> nc_curves::Result<()> {
    println!("{:<14} e  e* e_t deg  End(S)  s  s_x", "class");
    for class in WittPointClass::ALL {
        let d = witt_local_datum(class);
        println!(
            "{:<14} {}  {}  {}   {}    {:<7} {}  {}",
            class.name(),
            d.e,
            d.e_star,
            d.e_tau,
            d.residue_degree,
            d.simple_end.to_string(),
            skewness(&d)?,
            local_skewness(&d)?
        );
        assert_eq!(d.e * d.e_star * d.e_tau, 2);
    }
    Ok(())
}
