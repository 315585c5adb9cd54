//! Rational generating-function reconstruction from a series prefix.
//!
//! The denominator degree pair `(p, q)` is located on specializations
//! `x = x0`, where the Padé system is a small rational Toeplitz solve. The
//! denominator coefficients `q_j(x)` are then recovered by interpolation
//! over many specializations, with the x-degree raised geometrically until
//! the interpolants predict extra points. The final candidate is verified
//! exactly over `Q[x]` against every prefix term.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bivar::{BivarPoly, RationalGF};
use super::laurent::{int, LaurentPoly};
use super::univariate::{interpolate, solve};
use crate::error::{Error, Result};

/// Default number of prefix terms held back for validation.
pub const DEFAULT_GUARD: usize = 3;

const MAX_X_DEGREE: usize = 512;

/// Reconstruct `P/Q` from the coefficients of `t^1 .. t^N`.
///
/// `deg_t P <= p_max`, `deg_t Q <= q_max`, `Q(0, x) = 1`, and at least
/// `guard` terms beyond those used to solve must also agree.
pub fn reconstruct_rational_gf(
    prefix: &[LaurentPoly],
    p_max: usize,
    q_max: usize,
    guard: usize,
) -> Result<RationalGF> {
    let n = prefix.len();
    if n == 0 {
        return Err(Error::Reconstruction("empty prefix".into()));
    }
    // Shift to ordinary polynomials in x; undone on the numerator at the end.
    let lo = prefix.iter().filter_map(|c| c.low_degree()).min().unwrap_or(0).min(0);
    let mut series = vec![LaurentPoly::zero()];
    series.extend(prefix.iter().map(|c| c.shift(-lo)));

    let probes = [int(3), int(7)];
    let probe_series: Vec<Vec<BigRational>> =
        probes.iter().map(|x0| series.iter().map(|c| c.eval(x0)).collect()).collect();

    for q in 0..=q_max {
        for p in 0..=p_max {
            if p + q + guard > n {
                break;
            }
            let ok = probe_series.iter().all(|s| match specialized_pade(s, p, q) {
                Some(den) => check_specialized(s, &den, p),
                None => false,
            });
            if !ok {
                continue;
            }
            if let Some(gf) = lift(&series, p, q)? {
                let num = BivarPoly::from_coeffs(gf.0.iter().map(|c| c.shift(lo)).collect());
                return RationalGF::new(num, gf.1);
            }
        }
    }
    Err(Error::Reconstruction(format!(
        "no rational function with deg P <= {p_max}, deg Q <= {q_max} fits {n} terms with {guard} guard terms"
    )))
}

/// Denominator coefficients `[1, q_1, .., q_q]` of the `(p, q)` Padé form at one specialization.
fn specialized_pade(s: &[BigRational], p: usize, q: usize) -> Option<Vec<BigRational>> {
    if q == 0 {
        return Some(vec![BigRational::one()]);
    }
    let at = |k: isize| if k < 0 { BigRational::zero() } else { s[k as usize].clone() };
    let mut m = Vec::with_capacity(q);
    let mut rhs = Vec::with_capacity(q);
    for k in (p + 1)..=(p + q) {
        m.push((1..=q).map(|j| at(k as isize - j as isize)).collect());
        rhs.push(-at(k as isize));
    }
    let sol = solve(m, rhs)?;
    let mut den = vec![BigRational::one()];
    den.extend(sol);
    Some(den)
}

/// Every coefficient of `Q * F` above `t^p` must vanish.
fn check_specialized(s: &[BigRational], den: &[BigRational], p: usize) -> bool {
    ((p + 1)..s.len()).all(|k| {
        let mut acc = BigRational::zero();
        for (j, qj) in den.iter().enumerate() {
            if j > k {
                break;
            }
            acc += qj * &s[k - j];
        }
        acc.is_zero()
    })
}

/// Interpolate the denominator over `Q[x]` and verify exactly.
fn lift(series: &[LaurentPoly], p: usize, q: usize) -> Result<Option<(Vec<LaurentPoly>, BivarPoly)>> {
    let mut samples: Vec<(BigRational, Vec<BigRational>)> = Vec::new();
    let mut next_x = 1i64;
    let mut degree = 4usize;
    while degree <= MAX_X_DEGREE {
        let need = degree + 3;
        while samples.len() < need {
            let x0 = int(next_x);
            next_x += 1;
            let s: Vec<BigRational> = series.iter().map(|c| c.eval(&x0)).collect();
            if let Some(den) = specialized_pade(&s, p, q) {
                if check_specialized(&s, &den, p) {
                    samples.push((x0, den));
                }
            }
            if next_x > 8 * MAX_X_DEGREE as i64 {
                return Ok(None);
            }
        }
        let mut den_coeffs = Vec::with_capacity(q + 1);
        let mut consistent = true;
        for j in 0..=q {
            let pts: Vec<(BigRational, BigRational)> =
                samples[..=degree].iter().map(|(x0, d)| (x0.clone(), d[j].clone())).collect();
            let poly = interpolate(&pts);
            if samples[degree + 1..].iter().any(|(x0, d)| poly.eval(x0) != d[j]) {
                consistent = false;
                break;
            }
            den_coeffs.push(poly);
        }
        if consistent {
            let den = BivarPoly::from_coeffs(den_coeffs);
            let f = BivarPoly::from_coeffs(series.to_vec());
            let prod = f.mul(&den);
            let num: Vec<LaurentPoly> = (0..=p).map(|k| prod.coeff(k)).collect();
            let exact = ((p + 1)..series.len()).all(|k| prod.coeff(k).is_zero());
            return Ok(exact.then_some((num, den)));
        }
        degree *= 2;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::expr::parse_gf;

    #[test]
    fn geometric_series_in_xt() {
        let prefix: Vec<LaurentPoly> = (1..=8).map(LaurentPoly::x_pow).collect();
        let gf = reconstruct_rational_gf(&prefix, 4, 4, DEFAULT_GUARD).unwrap();
        let want = parse_gf("x t / (1 - x t)").unwrap();
        assert!(gf.equals(&want));
        assert_eq!(gf.den.t_degree(), Some(1));
    }

    #[test]
    fn round_trip_through_series() {
        let gf = parse_gf("(2t + 3x t^2) / (1 - (1+x)t - 2x^2 t^3)").unwrap();
        let s = gf.series(14).unwrap();
        let back = reconstruct_rational_gf(&s[1..], 6, 6, DEFAULT_GUARD).unwrap();
        assert!(back.equals(&gf));
        assert_eq!(back.den, gf.den);
    }

    #[test]
    fn too_few_terms_is_an_error() {
        let gf = parse_gf("t / (1 - t - x t^2 - t^3)").unwrap();
        let s = gf.series(5).unwrap();
        assert!(reconstruct_rational_gf(&s[1..], 2, 3, DEFAULT_GUARD).is_err());
    }

    #[test]
    fn negative_exponents_are_shifted_back() {
        let gf = parse_gf("t / (1 - 2 t)").unwrap();
        let s: Vec<LaurentPoly> = gf.series(8).unwrap()[1..].iter().map(|c| c.shift(-1)).collect();
        let back = reconstruct_rational_gf(&s, 3, 3, DEFAULT_GUARD).unwrap();
        let s2 = back.series(8).unwrap();
        assert_eq!(&s2[1..], &s[..]);
    }
}
