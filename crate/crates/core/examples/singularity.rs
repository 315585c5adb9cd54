use embdist::asympt::mean_variance_at;
use embdist::known;
use embdist::poly::rat;

fn main() -> embdist::Result<()> {
    let gf = known::genus_c2_gf()?;
    let rep = mean_variance_at(&gf.den, &rat(1, 1))?;
    println!("dominant root r = {} (multiplicity {})", rep.r, rep.multiplicity);
    if let (Some(mu), Some(s2)) = (&rep.mu, &rep.sigma2) {
        println!("mean slope {mu}, variance slope {s2}");
    }
    println!("finite-difference check: {:?}", rep.fd_agrees());
    Ok(())
}
