use embdist::distributions::{charpoly_at_one, root_multiplicity, scaled_primitivity};
use embdist::known;

fn main() -> embdist::Result<()> {
    let m = known::printed_transfer_matrix()?;
    let chi = charpoly_at_one(&m);
    println!("charpoly coefficients at x = 1: {chi:?}");
    println!("multiplicity of 12: {}", root_multiplicity(&chi, 12));
    let report = scaled_primitivity(&m, 12)?;
    println!("primitive: {}, first positive power: {:?}", report.primitive, report.positive_power);
    Ok(())
}
