use embdist::distributions::{cn2_computed, cn2_recurrences, derived_tables, doubled_cycle_via_ped};
use embdist::graph::Oracle;
use embdist::known;
use embdist::poly::DEFAULT_GUARD;
use embdist::transfer::{FamilySpec, TransferEngine};
use embdist::Mode;

fn oracle_poly(g: &embdist::graph::Graph, mode: Mode) -> embdist::poly::IntPoly {
    let o = Oracle::default();
    match mode {
        Mode::Genus => o.genus(g).unwrap().to_poly(),
        Mode::Euler => o.euler(g).unwrap().euler.to_poly(),
    }
}

#[test]
fn transfer_series_matches_enumeration_on_small_members() {
    for mode in [Mode::Genus, Mode::Euler] {
        for (spec, members) in [
            (FamilySpec::doubled_cycle(mode), 3),
            (FamilySpec::tripled_cycle(mode), 2),
            (FamilySpec::grid_3xn(mode), 1),
        ] {
            let series = TransferEngine::new(spec.clone()).unwrap().family_series(members).unwrap();
            for (i, p) in series.iter().enumerate() {
                let g = spec.member_graph(i + 1).unwrap();
                assert_eq!(*p, oracle_poly(&g, mode), "{mode:?} {:?} n = {}", spec.label, i + 1);
            }
        }
    }
}

#[test]
fn family_json_round_trip_gives_the_same_series() {
    let spec = FamilySpec::grid_3xn(Mode::Genus);
    let back = FamilySpec::from_json(&spec.to_json()).unwrap();
    let a = TransferEngine::new(spec).unwrap().family_series(3).unwrap();
    let b = TransferEngine::new(back).unwrap().family_series(3).unwrap();
    assert_eq!(a, b);
}

#[test]
fn three_routes_to_the_doubled_cycle_agree() {
    let engine = TransferEngine::new(FamilySpec::doubled_cycle(Mode::Genus)).unwrap();
    assert_eq!(engine.family_series(20).unwrap(), cn2_recurrences(Mode::Genus, 20).unwrap());
    assert_eq!(engine.family_rational_gf(6, 6, DEFAULT_GUARD).unwrap(), known::genus_c2_gf().unwrap());

    let tables = derived_tables().unwrap();
    let euler = cn2_computed(Mode::Euler, 10).unwrap();
    for n in 2..=10 {
        assert_eq!(doubled_cycle_via_ped(n, tables).unwrap(), euler[n - 1], "E_{n}");
    }
}

#[test]
fn reconstructed_gfs_match_closed_forms() {
    let tripled = TransferEngine::new(FamilySpec::tripled_cycle(Mode::Genus)).unwrap();
    let gf = tripled.family_rational_gf(14, 14, DEFAULT_GUARD).unwrap();
    assert_eq!(gf.series(6).unwrap(), known::tripled_cycle_gf().unwrap().series(6).unwrap());

    let grid = TransferEngine::new(FamilySpec::grid_3xn(Mode::Genus)).unwrap();
    let gf = grid.family_rational_gf(6, 6, DEFAULT_GUARD).unwrap();
    assert_eq!(gf.series(8).unwrap(), known::grid_3xn_gf().unwrap().series(8).unwrap());
}
