//! Families built by repeated vertex amalgamation of one graph, and the
//! transfer operator producing their genus polynomials, series and rational
//! generating functions.

pub mod engine;
pub mod spec;

pub use engine::{OperatorTable, TransferEngine, TransferMatrix, TransferState, DEFAULT_MAX_BASIS};
pub use spec::{FamilyKind, FamilySpec};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Oracle;
    use crate::groupring::Mode;
    use crate::poly::IntPoly;

    fn oracle_poly(g: &crate::graph::Graph, mode: Mode) -> IntPoly {
        let o = Oracle::default();
        match mode {
            Mode::Genus => o.genus(g).unwrap().to_poly(),
            Mode::Euler => o.euler(g).unwrap().euler.to_poly(),
        }
    }

    #[test]
    fn doubled_cycle_matches_oracle() {
        for mode in [Mode::Genus, Mode::Euler] {
            let f = FamilySpec::doubled_cycle(mode);
            let eng = TransferEngine::new(f.clone()).unwrap();
            let series = eng.family_series(3).unwrap();
            for n in 1..=3 {
                let want = oracle_poly(&f.member_graph(n).unwrap(), mode);
                assert_eq!(eng.family_genus_poly(n).unwrap(), want, "{mode} n={n}");
                assert_eq!(series[n - 1], want, "{mode} n={n} (table)");
            }
        }
    }

    #[test]
    fn grid_three_by_three() {
        let eng = TransferEngine::new(FamilySpec::grid_3xn(Mode::Genus)).unwrap();
        assert_eq!(eng.family_genus_poly(1).unwrap(), IntPoly::from_i64s(&[2, 58, 36]));
    }

    #[test]
    fn linear_family_and_trivial_cap() {
        let h = crate::graph::named::dipole(2).unwrap();
        let glue = crate::graph::GluingSpec::parse("1>0", true).unwrap();
        let lin = FamilySpec::new(h.clone(), glue.clone(), FamilyKind::Linear, Mode::Genus).unwrap();
        let eng = TransferEngine::new(lin.clone()).unwrap();
        assert_eq!(eng.family_genus_poly(1).unwrap(), IntPoly::one());
        for n in 1..=3 {
            assert_eq!(eng.family_genus_poly(n).unwrap(), oracle_poly(&lin.member_graph(n).unwrap(), Mode::Genus));
        }
        let cap = crate::graph::Graph::new(1, vec![]).unwrap();
        let capped = FamilySpec::new(
            h,
            glue,
            FamilyKind::Capped { cap, glue: crate::graph::GluingSpec::parse("1>0", false).unwrap() },
            Mode::Genus,
        )
        .unwrap();
        let ceng = TransferEngine::new(capped).unwrap();
        for n in 1..=3 {
            assert_eq!(ceng.family_genus_poly(n).unwrap(), eng.family_genus_poly(n).unwrap());
        }
    }
}
