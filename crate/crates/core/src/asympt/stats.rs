//! Moments, distances to the normal law, and the local-limit estimate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use statrs::distribution::{ContinuousCDF, Normal};

use super::roots::big_ln;
use crate::error::{Error, Result};
use crate::poly::laurent::{ratio_to_f64, rational_to_f64};
use crate::poly::IntPoly;
use crate::transfer::TransferEngine;

/// Law of a random variable with generating function `p / p(1)`.
#[derive(Clone, Debug, Serialize)]
pub struct DistStats {
    #[serde(serialize_with = "ser_big")]
    pub mass: BigInt,
    #[serde(skip)]
    pub exact_mean: BigRational,
    #[serde(skip)]
    pub exact_variance: BigRational,
    pub mean: f64,
    pub variance: f64,
    pub low: i64,
    pub high: i64,
    /// `p_k / p(1)` for `k = low ..= high`.
    #[serde(skip)]
    pub probabilities: Vec<f64>,
}

fn ser_big<S: serde::Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

fn check_law(p: &IntPoly) -> Result<()> {
    if p.is_zero() {
        return Err(Error::Invalid("the zero polynomial is not a distribution".into()));
    }
    if !p.has_nonnegative_coeffs() {
        return Err(Error::Invalid("distribution has a negative coefficient".into()));
    }
    Ok(())
}

pub fn dist_stats(p: &IntPoly) -> Result<DistStats> {
    check_law(p)?;
    let mass = p.coeff_sum();
    let (low, high) = (p.low_degree().unwrap_or(0), p.degree().unwrap_or(0));
    let (mut s1, mut s2) = (BigInt::zero(), BigInt::zero());
    for (k, c) in p.terms() {
        s1 += c * k;
        s2 += c * k * k;
    }
    let exact_mean = BigRational::new(s1, mass.clone());
    let exact_variance = BigRational::new(s2, mass.clone()) - &exact_mean * &exact_mean;
    let probabilities = (low..=high).map(|k| ratio_to_f64(&p.coeff(k), &mass)).collect();
    Ok(DistStats {
        mean: rational_to_f64(&exact_mean),
        variance: rational_to_f64(&exact_variance),
        exact_mean,
        exact_variance,
        mass,
        low,
        high,
        probabilities,
    })
}

/// `sup_k |F(k) - Phi((k + 1/2 - mean) / sd)|` over the support.
pub fn ks_to_normal(p: &IntPoly, mean: f64, var: f64) -> Result<f64> {
    if var.is_nan() || var <= 0.0 {
        return Err(Error::Invalid("variance must be positive".into()));
    }
    let st = dist_stats(p)?;
    let normal = Normal::new(mean, var.sqrt()).map_err(|e| Error::Invalid(e.to_string()))?;
    let mut cdf = 0.0;
    let mut worst = normal.cdf(st.low as f64 - 0.5);
    for (i, q) in st.probabilities.iter().enumerate() {
        cdf += q;
        let k = st.low + i as i64;
        worst = worst.max((cdf.min(1.0) - normal.cdf(k as f64 + 0.5)).abs());
    }
    Ok(worst)
}

/// `(1/2) sum_k |p_k / p(1) - q_k / q(1)|`, exactly.
pub fn tv_distance(p: &IntPoly, q: &IntPoly) -> Result<BigRational> {
    check_law(p)?;
    check_law(q)?;
    let (pm, qm) = (p.coeff_sum(), q.coeff_sum());
    let lo = p.low_degree().unwrap().min(q.low_degree().unwrap());
    let hi = p.degree().unwrap().max(q.degree().unwrap());
    let sum = (lo..=hi).fold(BigRational::zero(), |acc, k| {
        acc + (BigRational::new(p.coeff(k), pm.clone()) - BigRational::new(q.coeff(k), qm.clone())).abs()
    });
    Ok(sum / BigRational::from_integer(2.into()))
}

/// The local-limit approximation of `gamma_g(C_n^2)`.
#[derive(Clone, Debug, Serialize)]
pub struct LocalLimit {
    pub n: u64,
    pub g: u64,
    pub t: f64,
    pub ln_estimate: f64,
}

impl LocalLimit {
    pub fn estimate(&self) -> f64 {
        self.ln_estimate.exp()
    }

    /// `estimate / exact - 1`.
    pub fn relative_error(&self, exact: &BigInt) -> f64 {
        (self.ln_estimate - big_ln(exact)).exp_m1()
    }
}

/// `(t/3) sqrt(2t(t^2-1)/(pi n)) (3/(t^2-1))^g (2(1+t))^n` with `t = 1/(1 - 2g/n)`,
/// evaluated in log space.
pub fn local_limit_estimate(n: u64, g: u64) -> Result<LocalLimit> {
    if n == 0 || g == 0 || 2 * g >= n {
        return Err(Error::Invalid(format!("g/n = {g}/{n} must lie strictly inside (0, 1/2)")));
    }
    let (nf, gf) = (n as f64, g as f64);
    let t = 1.0 / (1.0 - 2.0 * gf / nf);
    let t2m1 = t * t - 1.0;
    let ln_estimate = (t / 3.0).ln() + 0.5 * (2.0 * t * t2m1 / (std::f64::consts::PI * nf)).ln()
        + gf * (3.0 / t2m1).ln()
        + nf * (2.0 * (1.0 + t)).ln();
    Ok(LocalLimit { n, g, t, ln_estimate })
}

/// Where the polynomials of a normality report come from.
pub enum SeriesSource<'a> {
    /// `a_1, a_2, ..`: entry `n - 1` is the polynomial of member `n`.
    Explicit(Vec<IntPoly>),
    Family(&'a TransferEngine),
}

impl SeriesSource<'_> {
    fn member(&self, n: usize) -> Result<IntPoly> {
        match self {
            SeriesSource::Explicit(v) => {
                v.get(n.wrapping_sub(1)).cloned().ok_or_else(|| Error::Invalid(format!("no member {n} in the series")))
            }
            SeriesSource::Family(engine) => engine.family_genus_poly(n),
        }
    }
}

/// One row of a normality report.
#[derive(Clone, Debug, Serialize)]
pub struct NormalityRow {
    pub n: usize,
    pub mean: f64,
    pub variance: f64,
    pub expected_mean: f64,
    pub expected_variance: f64,
    pub ks: f64,
}

/// Per-`n` moments and KS distance to `N(mu n, sigma2 n)`.
pub fn normality_report(source: &SeriesSource<'_>, ns: &[usize], mu: f64, sigma2: f64) -> Result<Vec<NormalityRow>> {
    let members = match source {
        SeriesSource::Explicit(_) => ns.iter().map(|&n| source.member(n)).collect::<Result<Vec<_>>>()?,
        SeriesSource::Family(_) => ns.par_iter().map(|&n| source.member(n)).collect::<Result<Vec<_>>>()?,
    };
    ns.par_iter()
        .zip(members.par_iter())
        .map(|(&n, p)| {
            let st = dist_stats(p)?;
            let (em, ev) = (mu * n as f64, sigma2 * n as f64);
            Ok(NormalityRow { n, mean: st.mean, variance: st.variance, expected_mean: em, expected_variance: ev, ks: ks_to_normal(p, em, ev)? })
        })
        .collect()
}

/// Rows as TSV with a header line.
pub fn report_tsv(rows: &[NormalityRow]) -> String {
    let mut s = String::from("n\tmean\tvariance\texpected_mean\texpected_variance\tks\n");
    for r in rows {
        s.push_str(&format!(
            "{}\t{:.6}\t{:.6}\t{:.6}\t{:.6}\t{:.6}\n",
            r.n, r.mean, r.variance, r.expected_mean, r.expected_variance, r.ks
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::{cn2_recurrences, tree_like_compose};
    use crate::groupring::Mode;
    use crate::poly::rat;

    fn binomial(n: u32) -> IntPoly {
        IntPoly::from_i64s(&[1, 1]).pow(n)
    }

    #[test]
    fn moments() {
        let s = dist_stats(&IntPoly::from_i64s(&[4, 2])).unwrap();
        assert_eq!((s.exact_mean.clone(), s.exact_variance.clone()), (rat(1, 3), rat(2, 9)));
        let m = dist_stats(&IntPoly::x_pow(7)).unwrap();
        assert_eq!((m.exact_mean, m.exact_variance), (rat(7, 1), rat(0, 1)));
        assert!(dist_stats(&IntPoly::zero()).is_err());
        assert!(dist_stats(&IntPoly::from_i64s(&[1, -1])).is_err());
    }

    #[test]
    fn moments_add_under_products() {
        let a = IntPoly::from_i64s(&[4, 2]);
        let b = IntPoly::from_i64s(&[1, 3, 5]);
        let (sa, sb) = (dist_stats(&a).unwrap(), dist_stats(&b).unwrap());
        let sp = dist_stats(&tree_like_compose(&[a, b]).unwrap()).unwrap();
        assert_eq!(sp.exact_mean, &sa.exact_mean + &sb.exact_mean);
        assert_eq!(sp.exact_variance, &sa.exact_variance + &sb.exact_variance);
    }

    #[test]
    fn kolmogorov_distances() {
        assert!(ks_to_normal(&binomial(64), 32.0, 16.0).unwrap() < 0.06);
        let point = IntPoly::x_pow(5);
        assert!(ks_to_normal(&point, 20.0, 1.0).unwrap() > 0.999);
        let centered = ks_to_normal(&point, 5.0, 4.0).unwrap();
        let phi = Normal::new(0.0, 1.0).unwrap().cdf(-0.25);
        assert!((centered - phi).abs() < 1e-12);
        assert!(ks_to_normal(&point, 5.0, 0.0).is_err());
    }

    #[test]
    fn doubled_cycle_genus_is_close_to_normal() {
        let series = cn2_recurrences(Mode::Genus, 300).unwrap();
        let st = dist_stats(&series[299]).unwrap();
        assert!((st.mean - 76.0).abs() < 1e-9 && (st.variance - 28.125).abs() < 1e-9);
        assert!(ks_to_normal(&series[299], st.mean, st.variance).unwrap() < 0.005);
        let at = |n: usize| ks_to_normal(&series[n - 1], n as f64 / 4.0, 3.0 * n as f64 / 32.0).unwrap();
        assert!(at(300) < at(75));
        let mean = dist_stats(&series[5]).unwrap().mean;
        assert!(mean < 2.5 && mean > 2.25, "{mean}");
    }

    #[test]
    fn total_variation() {
        let p = IntPoly::from_i64s(&[1, 2, 1]);
        assert!(tv_distance(&p, &p).unwrap().is_zero());
        assert_eq!(tv_distance(&IntPoly::one(), &IntPoly::x_pow(3)).unwrap(), rat(1, 1));
    }

    #[test]
    fn local_limit_at_quarter() {
        let est = local_limit_estimate(400, 100).unwrap();
        assert_eq!(est.t, 2.0);
        assert!(local_limit_estimate(400, 0).is_err());
        assert!(local_limit_estimate(400, 200).is_err());
    }

    #[test]
    fn report_rows_are_ordered() {
        let parts: Vec<IntPoly> = (1..=200).map(|n| tree_like_compose(&vec![IntPoly::from_i64s(&[4, 2]); n]).unwrap()).collect();
        let rows = normality_report(&SeriesSource::Explicit(parts), &[50, 100, 200], 1.0 / 3.0, 2.0 / 9.0).unwrap();
        assert_eq!(rows.iter().map(|r| r.n).collect::<Vec<_>>(), vec![50, 100, 200]);
        assert!(rows[2].ks < 0.05);
    }
}
