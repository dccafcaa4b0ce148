//! Load a curve from its JSON description and print its invariants.

use nc_curves::curve_file::load_curve;
use nc_curves::report::InvariantsReport;

fn main() -> nc_curves::Result<()> {
    let text = r#"{"base": "D_22",
                   "weights": [{"class": "seg", "point": 0, "p": 3},
                               {"class": "real", "oval": 0, "segment": 0, "p": 3}]}"#;
    let curve = load_curve(text)?;
    let report = InvariantsReport::new(&curve)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    println!("picard: {:?}", curve.picard_structure()?);
    Ok(())
}
