//! Orbits of slopes under the two spherical twists on each real elliptic type.

use nc_curves::ktheory::{curve_numerics, fm_partners, mutation_matrices, slope_orbits, REAL_ELLIPTIC};

fn main() -> nc_curves::Result<()> {
    for name in REAL_ELLIPTIC {
        let n = curve_numerics(name)?;
        let (ml, ms) = mutation_matrices(&n)?;
        let orbits = slope_orbits(&n, 60)?;
        let reps: Vec<String> = orbits
            .representatives
            .iter()
            .map(|o| o.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        println!(
            "{:<7} kappa={} eps={} |End S|={} M_L={:?} M_S={:?}  {} orbit(s): {}",
            name,
            n.kappa,
            n.epsilon,
            n.end_s_dim,
            ml.0,
            ms.0,
            orbits.count,
            reps.join(" | ")
        );
        if let Some(p) = orbits.parity {
            println!("        numerator parity splits: {}, denominator parity splits: {}", p.numerator, p.denominator);
        }
        let partners = fm_partners(name)?;
        if partners.len() > 1 {
            println!("        derived equivalent to {partners:?}");
        }
    }
    Ok(())
}
