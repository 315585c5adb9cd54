use embdist::distributions::{bar_ring_from_partials, ladder_partials, partial_pair_oracle};
use embdist::graph::{named, ops, Oracle};
use embdist::Mode;

fn main() -> embdist::Result<()> {
    let oracle = Oracle::default();
    let (ladder, u, v) = named::half_open_ladder(2)?;
    let parts = vec![(ladder.clone(), u, v); 3];
    let ring = ops::bar_ring(&parts)?;

    for mode in [Mode::Genus, Mode::Euler] {
        let pair = partial_pair_oracle(&oracle, &ladder, u, v, mode)?;
        let from_partials = bar_ring_from_partials(&[pair.clone(), pair.clone(), pair])?;
        let direct = match mode {
            Mode::Genus => oracle.genus(&ring)?.to_poly(),
            Mode::Euler => oracle.euler(&ring)?.euler.to_poly(),
        };
        println!("{mode:?}: partials {from_partials}");
        println!("{mode:?}: direct   {direct}");
    }
    let closed = ladder_partials(4, Mode::Genus);
    println!("ladder L4 partials: D = {}, S = {}", closed.d, closed.s);
    Ok(())
}
