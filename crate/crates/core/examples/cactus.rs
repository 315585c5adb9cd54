use embdist::distributions::{cactus_euler, is_cactus};
use embdist::graph::random::cactus;
use embdist::graph::Oracle;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> embdist::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let oracle = Oracle::default();
    for _ in 0..4 {
        let c = cactus(&mut rng, 3);
        assert!(is_cactus(&c));
        println!("{} vertices, {} edges", c.vertex_count(), c.edge_count());
        println!("  closed form {}", cactus_euler(&c)?);
        println!("  oracle      {}", oracle.euler(&c)?.euler.to_poly());
    }
    Ok(())
}
