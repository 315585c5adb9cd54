//! Seeded random multigraphs for property checks.

use rand::Rng;

use super::Graph;

/// Connected multigraph with at most `max_vertices` vertices and between 1 and
/// `max_edges` edges; loops and parallel edges allowed. A spanning tree is laid
/// first, the remaining edges join uniform endpoint pairs.
pub fn connected_multigraph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> Graph {
    let max_vertices = max_vertices.clamp(1, max_edges + 1);
    let n = rng.gen_range(1..=max_vertices);
    let m = rng.gen_range((n - 1).max(1)..=max_edges.max(1));
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    while edges.len() < m {
        edges.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    Graph::new(n, edges).expect("endpoints are in range")
}

/// Connected multigraph whose rotation count times `2^beta` stays within `limit`.
pub fn small_connected_multigraph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize, limit: u64) -> Graph {
    loop {
        let g = connected_multigraph(rng, max_vertices, max_edges);
        if g.embedding_count() <= limit.into() {
            return g;
        }
    }
}

/// Cactus built from one cycle of length 1 to 3 by repeatedly hanging a bridge
/// off a random vertex and, half the time, closing a fresh cycle at its end.
pub fn cactus<R: Rng>(rng: &mut R, blocks: usize) -> Graph {
    let mut n = 0;
    let mut edges = Vec::new();
    let fresh_cycle = |rng: &mut R, n: &mut usize, edges: &mut Vec<(usize, usize)>, start: usize| {
        let len = rng.gen_range(1..=3);
        let mut prev = start;
        for _ in 1..len {
            edges.push((prev, *n));
            prev = *n;
            *n += 1;
        }
        edges.push((prev, start));
    };
    n += 1;
    fresh_cycle(rng, &mut n, &mut edges, 0);
    for _ in 0..blocks {
        let at = rng.gen_range(0..n);
        let tip = n;
        n += 1;
        edges.push((at, tip));
        if rng.gen_bool(0.5) {
            fresh_cycle(rng, &mut n, &mut edges, tip);
        }
    }
    Graph::new(n, edges).expect("endpoints are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::is_cactus;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_graphs_have_the_promised_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let g = small_connected_multigraph(&mut rng, 5, 8, 50_000);
            assert!(g.is_connected() && g.edge_count() <= 8 && g.vertex_count() <= 5);
            assert!(g.embedding_count() <= 50_000u64.into());
            assert!(is_cactus(&cactus(&mut rng, 4)));
        }
    }
}
