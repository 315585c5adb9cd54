//! Published reference data for the double-edge cycle, triple-edge cycle and
//! 3×n grid families, kept as text and parsed on demand.
//!
//! Everything here is a printed value. Where a printed value disagrees with
//! computation, the computed value is authoritative and the fixture is kept
//! as printed so that the disagreement stays visible.

use crate::error::{Error, Result};
use crate::poly::{parse_bivar, parse_gf, parse_poly, BivarPoly, IntPoly, Rational, RationalGF};

/// Genus polynomials of C_n^2, n = 1..6.
pub const GENUS_C2: [&str; 6] = [
    "4 + 2x",
    "6 + 30x",
    "8 + 136x + 72x^2",
    "16 + 440x + 840x^2",
    "32 + 1472x + 4832x^2 + 1440x^3",
    "64 + 5184x + 22496x^2 + 18912x^3",
];

/// Coefficients b_1..b_6 of the order-6 genus recurrence.
pub const GENUS_C2_RECURRENCE: [&str; 6] = ["6", "28x - 8", "-96x", "-16x(15x-2)", "288x^2", "576x^3"];

pub const GENUS_C2_NUMERATOR: &str = "288x^2 (x+1) y^6 - 48x (2x^2-7x -3) y^5 -16 (15x^2 -5x -1) y^4 \
     + 4 (4x^2 -35x + 1) y^3 + 18 (x - 1) y^2 + 2 (x + 2) y";

pub const GENUS_C2_DENOMINATOR: &str = "(1-4xy^2) (1-4y-12xy^2) (1-2y-12xy^2)";

/// Euler-genus polynomials of C_n^2, n = 1..10, as printed.
pub const EULER_C2: [&str; 10] = [
    "4 + 10 x + 10 x^2",
    "6 + 36 x + 126 x^2 + 120 x^3",
    "8 + 84 x + 576 x^2 + 1444 x^3 + 1344 x^4",
    "16 + 208 x + 1944 x^2 + 8128 x^3 + 17960 x^4 + 13216 x^5",
    "32 + 512 x + 6304 x^2 + 35792 x^3 + 120224 x^4 + 208272 x^5 + 126528 x^6",
    "64 + 1216 x + 20160 x^2 + 145472 x^3 + 634528 x^4 + 1650112 x^5 + 2334112 x^6 + 1186304 x^7",
    "128 + 2816 x + 64768 x^2 + 573696 x^3 + 3042048 x^4 + 10201152 x^5 + 21506560 x^6 + 25230656 x^7 \
     + 11041792 x^8",
    "256 + 6400 x + 213504 x^2 + 2261504 x^3 + 14003712 x^4 + 56356352 x^5 + 152367488 x^6 \
     + 266558464 x^7 + 266050176 x^8 + 102145536 x^9",
    "512 + 14336 x + 730624 x^2 + 9050112 x^3 + 63676416 x^4 + 294905856 x^5 + 950924288 x^6 \
     + 2133587200 x^7 + 3176284672 x^8 + 2748807424 x^9 + 941579264 x^10",
    "1024 + 31744 x + 2601984 x^2 + 36924416 x^3 + 289603584 x^4 + 1503739904 x^5 + 5549844480 x^6 \
     + 14842849280 x^7 + 28366170624 x^8 + 36636175360 x^9 + 27954014720 x^10 + 8652771328 x^11",
];

/// Coefficients b_1..b_10 of the order-10 Euler-genus recurrence.
pub const EULER_C2_RECURRENCE: [&str; 10] = [
    "12 + 26 x",
    "-(52 + 240 x + 160 x^2)",
    "96 + 728 x + 768 x^2 - 816 x^3",
    "-64 - 768 x - 208 x^2 + 8640 x^3 + 8304 x^4",
    "128 x - 1920 x^2 - 21216 x^3 - 29376 x^4 + 16416 x^5",
    "512 x^2 + 9216 x^3 - 4992 x^4 - 165888 x^5 - 155520 x^6",
    "18432 x^4 + 179712 x^5 + 165888 x^6 - 359424 x^7",
    "239616 x^6 + 1327104 x^7 + 884736 x^8",
    "1327104 x^8 + 3317760 x^9",
    "2654208 x^10",
];

/// Coefficients of the reduced order-6 Euler-genus recurrence.
pub const EULER_C2_REDUCED_RECURRENCE: [&str; 6] = [
    "14x + 6",
    "-4(x^2 + 12x + 2)",
    "-8x (51x^2 + 15x - 2)",
    "-32x^2 (3x^2 - 18x - 2)",
    "1152x^4 (3x + 1)",
    "4608 x^6",
];

pub const EULER_C2_REDUCED_NUMERATOR: &str = "1152 x^4 (6x^3 - 11x^2 - 2x - 1) y^6 \
     + 32 x^2 (100x^4 - 276x^3 - 91x^2 - 36x - 9) y^5 \
     + 8 (130x^5 - 153x^4 - 153x^3 - 49x^2 - 13x - 2) y^4 \
     + 4 (74x^4 + 130x^3 + 27x^2 - 14x - 1) y^3 \
     + 2 (10x^3 + 37x^2 + 40x + 9) y^2 - 2 (5x^2 + 5x + 2) y";

pub const EULER_C2_REDUCED_DENOMINATOR: &str =
    "(1 + 2xy) (1 - 4xy) (24x^2y^2 + 6xy + 2y - 1) (24x^2y^2 + 6xy + 4y - 1)";

pub const EULER_C2_FULL_DENOMINATOR: &str =
    "(1 + 2xy) (1 - 4xy) (24x^2y^2 + 6xy + 2y - 1)^2 (24x^2y^2 + 6xy + 4y - 1)^2";

/// Genus generating function of the triple-edge cycles C_n^3.
pub const TRIPLED_CYCLE_GF: &str = "8t(4353564672000000 x^13 t^12 + 6530347008000000 x^12 t^12 \
     + 1741425868800000 x^12 t^11 + 2176782336000000 x^11 t^12 + 4389844377600000 x^11 t^11 \
     + 104001822720000 x^11 t^10 + 798153523200000 x^10 t^11 + 1004947845120000 x^10 t^10 \
     - 72559411200000 x^9 t^11 - 45934138368000 x^10 t^9 + 13907220480000 x^9 t^10 \
     + 77840123904000 x^9 t^9 - 33105231360000 x^8 t^10 - 8270429184000 x^9 t^8 \
     - 26086116096000 x^8 t^9 + 453496320000 x^7 t^10 - 2348775014400 x^8 t^8 \
     - 4237671168000 x^7 t^9 - 286738444800 x^8 t^7 - 2839894732800 x^7 t^8 \
     + 292253184000 x^6 t^9 - 482184161280 x^7 t^7 + 69872025600 x^6 t^8 + 29358288000 x^7 t^6 \
     + 77853000960 x^6 t^7 + 48876825600 x^5 t^8 + 3310009920 x^6 t^6 + 37246884480 x^5 t^7 \
     - 503884800 x^4 t^8 + 1454500800 x^6 t^5 + 18235730880 x^5 t^6 + 1266710400 x^4 t^7 \
     + 1357250256 x^5 t^5 - 302575824 x^4 t^6 - 151165440 x^3 t^7 - 67003200 x^5 t^4 \
     - 84107160 x^4 t^5 - 186099120 x^3 t^6 - 25857144 x^4 t^4 - 161394768 x^3 t^5 \
     - 3779136 x^2 t^6 - 1441584 x^4 t^3 - 39956652 x^3 t^4 + 2420280 x^2 t^5 \
     - 1868292 x^3 t^3 + 2545344 x^2 t^4 - 23328 x t^5 + 102312 x^3 t^2 + 732510 x^2 t^3 \
     + 159732 x t^4 + 87948 x^2 t^2 + 81432 x t^3 - 1740 x^2 t + 1233 x t^2 + 1134 t^3 \
     - 1215 x t + 207 t^2 + 10 x - 105 t + 5) \
     / ((6 x t + 1) (1 - 12 x t) (43200 x^3 t^3 + 2880 x^2 t^2 - 1080 x t^2 - 120 x t - 18 t + 1) \
     (129600 x^4 t^4 + 21600 x^3 t^3 + 180 x^2 t^2 - 144 x t^2 - 60 x t + 1) \
     (259200 x^4 t^4 + 60480 x^3 t^3 - 2160 x^2 t^3 + 2160 x^2 t^2 - 612 x t^2 - 114 x t - 6 t + 1))";

/// The two linear factors the C_n^3 denominator must contain.
pub const TRIPLED_CYCLE_LINEAR_FACTORS: [&str; 2] = ["6xt + 1", "1 - 12xt"];

/// Genus generating function of the 3×n grids.
pub const GRID_3XN_GF: &str = "2t((1728 x + 1728) x^4 t^3 - (864 x^2 + 1080 x + 72) x^2 t^2 \
     - (252 x^2 + 126 x - 42) x t + 18 x^2 + 29 x + 1) \
     / (1 - (30 x + 1) t + (168 x - 42) x t^2 + (1008 x + 72) x^2 t^3 - 1728 x^4 t^4)";

/// Printed M(x) over the ten pEd types, rows and columns in `PedType::ALL` order.
pub const PRINTED_TRANSFER_MATRIX: [[&str; 10]; 10] = [
    ["4", "4x+4x^2", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["6", "6x", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "4", "4x+4x^2", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "6", "6x", "0", "0", "0", "0", "0", "0"],
    ["2", "2x", "0", "0", "2", "0", "2x+4x^2", "0", "0", "0"],
    ["0", "0", "0", "0", "4", "0", "4x", "0", "0", "4x^2"],
    ["0", "0", "0", "0", "6", "0", "6x", "0", "0", "0"],
    ["0", "0", "2", "2x", "0", "0", "0", "2", "2x+4x^2", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "6", "6x", "0"],
    ["0", "0", "0", "0", "0", "2", "0", "4", "4x", "2x"],
];

/// Printed closure table: for each type, counts of closed embeddings by
/// Euler-genus increase 0, 1, 2, ...
pub const PRINTED_CLOSURE: [&[u64]; 10] = [
    &[0, 0, 32, 32, 80],
    &[0, 0, 50, 48, 46],
    &[0, 0, 50, 48, 46],
    &[0, 0, 72, 72],
    &[2, 6, 52, 44, 40],
    &[6, 16, 70, 52],
    &[6, 18, 72, 48],
    &[6, 18, 72, 48],
    &[18, 54, 72],
    &[20, 56, 68],
];

/// Printed amalgamation rules, one `a * b -> cell` line per ordered pair.
pub const PRINTED_AMALGAMATION: &str = include_str!("../fixtures/printed_amalgamation.txt");

/// Published mean and variance slopes (genus, Euler genus) of C_n^2 as `num/den`.
pub const GENUS_C2_MEAN_VARIANCE: (&str, &str) = ("1/4", "3/32");
pub const EULER_C2_MEAN_VARIANCE: (&str, &str) = ("5/7", "78/343");

/// Parse an integer-coefficient polynomial in `x`.
pub fn int_poly(s: &str) -> Result<IntPoly> {
    let p = parse_poly(s)?;
    IntPoly::from_rational_poly(&p).ok_or_else(|| Error::Parse(format!("non-integer coefficients in {s:?}")))
}

fn int_polys(src: &[&str]) -> Result<Vec<IntPoly>> {
    src.iter().map(|s| int_poly(s)).collect()
}

pub fn genus_c2() -> Result<Vec<IntPoly>> {
    int_polys(&GENUS_C2)
}

pub fn genus_c2_recurrence() -> Result<Vec<IntPoly>> {
    int_polys(&GENUS_C2_RECURRENCE)
}

pub fn genus_c2_gf() -> Result<RationalGF> {
    RationalGF::new(parse_bivar(GENUS_C2_NUMERATOR)?, parse_bivar(GENUS_C2_DENOMINATOR)?)
}

pub fn euler_c2() -> Result<Vec<IntPoly>> {
    int_polys(&EULER_C2)
}

pub fn euler_c2_recurrence() -> Result<Vec<IntPoly>> {
    int_polys(&EULER_C2_RECURRENCE)
}

pub fn euler_c2_reduced_recurrence() -> Result<Vec<IntPoly>> {
    int_polys(&EULER_C2_REDUCED_RECURRENCE)
}

pub fn euler_c2_reduced_gf() -> Result<RationalGF> {
    RationalGF::new(parse_bivar(EULER_C2_REDUCED_NUMERATOR)?, parse_bivar(EULER_C2_REDUCED_DENOMINATOR)?)
}

pub fn euler_c2_full_denominator() -> Result<BivarPoly> {
    parse_bivar(EULER_C2_FULL_DENOMINATOR)
}

pub fn tripled_cycle_gf() -> Result<RationalGF> {
    parse_gf(TRIPLED_CYCLE_GF)
}

pub fn tripled_cycle_linear_factors() -> Result<Vec<BivarPoly>> {
    TRIPLED_CYCLE_LINEAR_FACTORS.iter().map(|s| parse_bivar(s)).collect()
}

pub fn grid_3xn_gf() -> Result<RationalGF> {
    parse_gf(GRID_3XN_GF)
}

pub fn printed_transfer_matrix() -> Result<Vec<Vec<IntPoly>>> {
    PRINTED_TRANSFER_MATRIX.iter().map(|row| int_polys(row)).collect()
}

/// Printed closure column as polynomials: the row sums `sum_k c_k x^k`.
pub fn printed_closure_column() -> Vec<IntPoly> {
    PRINTED_CLOSURE
        .iter()
        .map(|row| IntPoly::from_terms(row.iter().enumerate().map(|(k, &c)| (k as i64, c.into()))))
        .collect()
}

pub fn mean_variance(pair: (&str, &str)) -> Result<(Rational, Rational)> {
    let p = |s: &str| crate::poly::laurent::parse_rational(s).ok_or_else(|| Error::Parse(format!("bad rational {s:?}")));
    Ok((p(pair.0)?, p(pair.1)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{extend_series, recurrence_from_denominator, LaurentPoly};

    #[test]
    fn every_fixture_parses() {
        assert_eq!(genus_c2().unwrap().len(), 6);
        assert_eq!(euler_c2().unwrap().len(), 10);
        genus_c2_gf().unwrap();
        euler_c2_reduced_gf().unwrap();
        tripled_cycle_gf().unwrap();
        grid_3xn_gf().unwrap();
        assert_eq!(printed_transfer_matrix().unwrap().len(), 10);
        assert_eq!(PRINTED_AMALGAMATION.lines().count(), 100);
    }

    #[test]
    fn genus_totals_are_factorial_products() {
        for (n, p) in genus_c2().unwrap().iter().enumerate() {
            assert_eq!(p.coeff_sum(), 6i64.pow(n as u32 + 1).into());
        }
    }

    #[test]
    fn printed_genus_denominator_matches_recurrence() {
        let b = recurrence_from_denominator(&genus_c2_gf().unwrap()).unwrap();
        let printed: Vec<LaurentPoly> = genus_c2_recurrence().unwrap().iter().map(|p| p.to_rational_poly()).collect();
        assert_eq!(b, printed);
    }

    #[test]
    fn printed_euler_recurrences_are_consistent() {
        let init = euler_c2().unwrap();
        let full = extend_series(&euler_c2_recurrence().unwrap(), &init, 10).unwrap();
        assert_eq!(full, init);
        let reduced = extend_series(&euler_c2_reduced_recurrence().unwrap(), &init[..6], 10).unwrap();
        assert_eq!(reduced, init);
    }

    #[test]
    fn printed_closure_rows_are_complete() {
        for row in PRINTED_CLOSURE {
            assert_eq!(row.iter().sum::<u64>(), 144);
        }
    }
}
