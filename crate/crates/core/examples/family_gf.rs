use embdist::known;
use embdist::poly::DEFAULT_GUARD;
use embdist::transfer::{FamilySpec, TransferEngine};
use embdist::Mode;

fn main() -> embdist::Result<()> {
    let engine = TransferEngine::new(FamilySpec::doubled_cycle(Mode::Genus))?;
    let gf = engine.family_rational_gf(6, 6, DEFAULT_GUARD)?;
    println!("reconstructed: {gf}");
    println!("matches the closed form: {}", gf == known::genus_c2_gf()?);
    for (n, p) in gf.series(5)?.iter().enumerate().skip(1) {
        println!("t^{n}: {p}");
    }
    Ok(())
}
