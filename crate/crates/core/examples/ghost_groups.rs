//! Ghost groups of genus-zero curves over fields other than ℝ.

use nc_curves::weighted_curve::fixtures::{biquadratic, finite_field_quartic, ghost_data, ruled, unramified};
use nc_curves::weighted_curve::ghost_group;

fn main() -> nc_curves::Result<()> {
    for base in [ruled(3), finite_field_quartic(), biquadratic(), unramified()] {
        let data = ghost_data(&base);
        let g = ghost_group(&data, 0)?;
        println!("{:<24} (e_t, deg) {:?}  ghost group {} of order {}", base.name, data, g.describe(), g.order());
    }
    // d(y) = [k(y):k]·e_τ(x) / ([k(x):k]·e_τ(y)) must be an integer.
    println!("{}", ghost_group(&[(2, 2), (2, 1)], 0).unwrap_err());
    Ok(())
}
