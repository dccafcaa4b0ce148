//! Exact quaternion arithmetic and the automorphisms used as twists.

use nc_curves::algebra::{fmt_rational, AlgebraElement, AlgebraTag, Automorphism};

fn main() -> nc_curves::Result<()> {
    let q = AlgebraElement::from_ints(AlgebraTag::Quaternion, &[1, 2, -1, 3])?;
    let i = AlgebraElement::basis_element(AlgebraTag::Quaternion, 1);
    let j = AlgebraElement::basis_element(AlgebraTag::Quaternion, 2);

    println!("q       = {q}");
    println!("N(q)    = {}", fmt_rational(&q.norm()));
    println!("q^-1    = {}", q.invert()?);
    println!("q q^-1  = {}", q.multiply(&q.invert()?)?);
    println!("ij      = {}, ji = {}", i.multiply(&j)?, j.multiply(&i)?);

    let inner = Automorphism::inner(i.clone())?;
    println!("{} has Galois order {}", inner.short_name(), inner.galois_order());
    println!("{}(j) = {}", inner.short_name(), inner.apply(&j)?);
    Ok(())
}
