use embdist::graph::random::{cactus, small_connected_multigraph};
use embdist::distributions::{cactus_euler, cactus_euler_all_twists};
use embdist::graph::{ops, Oracle};
use embdist::groupring::{GroupRingElem, Perm};
use embdist::poly::IntPoly;
use embdist::verify::laws::{composition_laws, group_algebra_laws};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn element(seed: u64, support: &[usize]) -> GroupRingElem {
    use rand::seq::SliceRandom;
    use rand::Rng;
    let mut r = rng(seed);
    let mut e = GroupRingElem::zero(support.to_vec()).unwrap();
    for _ in 0..r.gen_range(1..4) {
        let mut images: Vec<usize> = (0..support.len()).collect();
        images.shuffle(&mut r);
        let c = IntPoly::from_i64s(&[r.gen_range(-3..4), r.gen_range(-3..4)]);
        e.add_term(Perm::from_images(images), c);
    }
    e
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn group_algebra_laws_hold(seed in any::<u64>()) {
        for tally in group_algebra_laws(&mut rng(seed), 1).unwrap() {
            prop_assert!(tally.passed(), "{}", tally.summary());
        }
    }

    #[test]
    fn multiplication_is_associative(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let support = [0, 2, 5, 7];
        let (x, y, z) = (element(a, &support), element(b, &support), element(c, &support));
        let left = x.multiply(&y).unwrap().multiply(&z).unwrap();
        let right = x.multiply(&y.multiply(&z).unwrap()).unwrap();
        prop_assert_eq!(left.dump(), right.dump());
    }

    #[test]
    fn compose_is_function_composition(seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut r = rng(seed);
        let mut p: Vec<usize> = (0..6).collect();
        let mut q = p.clone();
        p.shuffle(&mut r);
        q.shuffle(&mut r);
        let (p, q) = (Perm::from_images(p), Perm::from_images(q));
        let pq = p.compose(&q);
        for i in 0..6 {
            prop_assert_eq!(pq.apply(i), p.apply(q.apply(i)));
        }
        prop_assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn count_identities(seed in any::<u64>()) {
        let g = small_connected_multigraph(&mut rng(seed), 5, 7, 20_000);
        let oracle = Oracle::default();
        let genus = oracle.genus(&g).unwrap();
        let euler = oracle.euler(&g).unwrap();
        prop_assert_eq!(genus.total(), g.rotation_count());
        prop_assert_eq!(euler.euler.total(), g.embedding_count());
        prop_assert_eq!(euler.euler.total(), g.rotation_count() * (BigInt::from(1) << g.betti()));
        prop_assert_eq!(euler.orientable.to_poly(), genus.to_poly());
    }

    #[test]
    fn bar_amalgamation_multiplies(seed in any::<u64>()) {
        use rand::Rng;
        let mut r = rng(seed);
        let g = small_connected_multigraph(&mut r, 3, 4, 500);
        let h = small_connected_multigraph(&mut r, 3, 4, 500);
        let (u, v) = (r.gen_range(0..g.vertex_count()), r.gen_range(0..h.vertex_count()));
        let joined = ops::bar_amalgamate(&g, u, &h, v).unwrap();
        let factor = BigInt::from(g.degree(u).max(1) * h.degree(v).max(1));
        let oracle = Oracle::default();
        let expected = (oracle.genus(&g).unwrap().to_poly() * oracle.genus(&h).unwrap().to_poly()).scale(&factor);
        prop_assert_eq!(oracle.genus(&joined).unwrap().to_poly(), expected);
        let expected = (oracle.euler(&g).unwrap().euler.to_poly() * oracle.euler(&h).unwrap().euler.to_poly()).scale(&factor);
        prop_assert_eq!(oracle.euler(&joined).unwrap().euler.to_poly(), expected);
    }

    #[test]
    fn cactus_closed_forms(seed in any::<u64>(), blocks in 0usize..4) {
        let c = cactus(&mut rng(seed), blocks);
        let direct = Oracle::default().euler(&c).unwrap().euler.to_poly();
        prop_assert_eq!(cactus_euler(&c).unwrap(), direct.clone());
        let every_twist = direct.scale(&(BigInt::from(1) << (c.edge_count() - c.betti())));
        prop_assert_eq!(cactus_euler_all_twists(&c).unwrap(), every_twist);
    }
}

#[test]
fn composition_law_corpus() {
    let tallies = composition_laws(&mut rng(2024), 6, 50).unwrap();
    for t in &tallies {
        assert!(t.passed(), "{}", t.summary());
    }
    assert!(tallies.iter().all(|t| t.cases >= 6));
    assert!(tallies.last().unwrap().cases >= 50);
}
