//! Orbifold Euler characteristic of weighted curves along every route.

use nc_curves::algebra::fmt_rational;
use nc_curves::weighted_curve::{Placement, WeightedCurve, WeightedPoint};

fn show(label: &str, c: &WeightedCurve) -> nc_curves::Result<()> {
    let r = c.euler_routes()?;
    let opt = |x: &Option<_>| x.as_ref().map(fmt_rational).unwrap_or_else(|| "-".into());
    println!(
        "{:<24} general {:<6} split {:<6} thurston {:<6} genus0 {:<6} {} {:?}",
        label,
        fmt_rational(&r.general),
        fmt_rational(&r.weights_split),
        opt(&r.thurston),
        opt(&r.genus_zero),
        c.classify()?,
        c.weight_ram_vector()?
    );
    assert!(r.all_agree());
    Ok(())
}

fn main() -> nc_curves::Result<()> {
    show("D", &WeightedCurve::catalog("D", vec![])?)?;
    show("K", &WeightedCurve::catalog("K", vec![])?)?;

    let inner = |p| WeightedPoint::new(Placement::Inner, p);
    show("RP2 (2,2)", &WeightedCurve::catalog("RP2", vec![inner(2), inner(2)])?)?;
    show("S2_C (2,3,6)", &WeightedCurve::catalog("S2_C", vec![inner(2), inner(3), inner(6)])?)?;
    show("S2_C (2,3,7)", &WeightedCurve::catalog("S2_C", vec![inner(2), inner(3), inner(7)])?)?;

    let seg = WeightedPoint::new(Placement::Segmentation { oval: 0, point: 0 }, 3);
    let real = WeightedPoint::new(Placement::Boundary { oval: 0, segment: Some(0) }, 3);
    let c = WeightedCurve::catalog("D_22", vec![seg, real])?;
    show("D_22 seg:3 real:3", &c)?;
    println!("tau = {} of order {}", c.tau_word()?, c.tau_order()?);
    Ok(())
}
