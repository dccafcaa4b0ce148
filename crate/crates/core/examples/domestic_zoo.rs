//! Real weighted curves with χ'_orb > 0, grouped into families.

use nc_curves::algebra::AlgebraTag;
use nc_curves::zoo::{domestic_report, enumerate_domestic};

fn main() -> nc_curves::Result<()> {
    let zoo = enumerate_domestic()?;
    print!("{}", domestic_report(&zoo));
    println!(
        "\n{} non-weighted, {} families ({} over R, {} over C)",
        zoo.nonweighted.len(),
        zoo.families.len(),
        zoo.families_with_centre(AlgebraTag::Real),
        zoo.families_with_centre(AlgebraTag::Complex)
    );
    Ok(())
}
