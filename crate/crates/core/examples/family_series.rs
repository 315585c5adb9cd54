use embdist::transfer::{FamilySpec, TransferEngine};
use embdist::Mode;

fn main() -> embdist::Result<()> {
    for spec in [FamilySpec::doubled_cycle(Mode::Genus), FamilySpec::tripled_cycle(Mode::Genus), FamilySpec::grid_3xn(Mode::Genus)] {
        let engine = TransferEngine::new(spec)?;
        println!("{}", engine.spec.label.as_deref().unwrap_or("family"));
        for (n, p) in engine.family_series(4)?.iter().enumerate() {
            println!("  n = {}: {p}", n + 1);
        }
    }
    Ok(())
}
