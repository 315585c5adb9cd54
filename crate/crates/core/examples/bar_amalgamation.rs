use embdist::graph::{named, ops, Oracle};

fn main() -> embdist::Result<()> {
    let oracle = Oracle::default();
    let (g, h) = (named::dipole(3)?, named::bouquet(2)?);
    let joined = ops::bar_amalgamate(&g, 0, &h, 0)?;

    let factor = (g.degree(0).max(1) * h.degree(0).max(1)) as i64;
    let product = oracle.genus(&g)?.to_poly() * oracle.genus(&h)?.to_poly();
    println!("G bar H     {}", oracle.genus(&joined)?.to_poly());
    println!("{factor} * G * H  {}", product.scale(&factor.into()));
    Ok(())
}
