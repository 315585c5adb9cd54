use embdist::graph::{named, Oracle};

fn main() -> embdist::Result<()> {
    let g = named::doubled_cycle(2)?;
    let out = Oracle::default().euler(&g)?;
    println!("Euler-genus  {}", out.euler.to_poly());
    println!("orientable   {}", out.orientable.to_poly());
    println!("crosscap     {}", out.crosscap().to_poly());
    println!("total        {}", out.euler.total());
    Ok(())
}
