use embdist::graph::{named, Oracle};

fn main() -> embdist::Result<()> {
    let oracle = Oracle::default();
    for (name, g) in [
        ("bouquet B3", named::bouquet(3)?),
        ("dipole D4", named::dipole(4)?),
        ("doubled cycle C3^2", named::doubled_cycle(3)?),
        ("ladder L3", named::ladder(3)?),
    ] {
        let dist = oracle.genus(&g)?;
        println!("{name:<20} {} embeddings   {}", dist.total(), dist.to_poly());
    }
    Ok(())
}
