//! Centres of twisted power series rings D[[T, σ]] with T·a = σ(a)·T.

use nc_curves::algebra::{AlgebraElement, AlgebraTag};
use nc_curves::skew_series::{centre_basis, dim_over_centre, parse_twist, t_power, TwistedSeries};

fn main() -> nc_curves::Result<()> {
    for (tag, twist) in [
        (AlgebraTag::Real, "id"),
        (AlgebraTag::Complex, "id"),
        (AlgebraTag::Complex, "conj"),
        (AlgebraTag::Quaternion, "id"),
        (AlgebraTag::Quaternion, "inner-i"),
    ] {
        let sigma = parse_twist(tag, twist)?;
        let c = centre_basis(tag, &sigma, 8)?;
        println!(
            "{:>2}[[T, {:<8}]]  centre {:<12} dim over centre {}",
            tag.ascii(),
            twist,
            c.power_series_name(),
            dim_over_centre(tag, &sigma)?
        );
    }

    // T·i = -i·T over ℂ with complex conjugation.
    let sigma = parse_twist(AlgebraTag::Complex, "conj")?;
    let t = t_power(&sigma, 8, 1)?;
    let i = TwistedSeries::monomial(sigma.clone(), 8, AlgebraElement::basis_element(AlgebraTag::Complex, 1), 0)?;
    println!("T*i = {}", t.multiply(&i)?);
    println!("i*T = {}", i.multiply(&t)?);
    Ok(())
}
