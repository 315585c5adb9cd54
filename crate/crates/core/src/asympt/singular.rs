//! Dominant singularity `r(x)` of a rational GF and the derived mean and
//! variance slopes `mu(x) = -x r'/r`, `sigma^2(x) = x mu'(x)`.

use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::roots::{complex_companion_roots, format_decimal, located_roots, refine_real_root, RealRoot};
use crate::error::{Error, Result};
use crate::poly::laurent::{format_rational, rational_to_f64};
use crate::poly::{BivarPoly, LaurentPoly};

/// Relative tolerance under which two root moduli count as tied.
pub const TIE_TOLERANCE: f64 = 1e-12;
/// Relative agreement required between implicit and finite-difference slopes.
pub const FD_TOLERANCE: f64 = 1e-8;

/// An exact rational, or a rational approximation with an error bound.
#[derive(Clone, Debug, PartialEq)]
pub enum Numeric {
    Exact(BigRational),
    Approx { value: BigRational, error: BigRational },
}

impl Numeric {
    pub fn to_f64(&self) -> f64 {
        match self {
            Numeric::Exact(v) | Numeric::Approx { value: v, .. } => rational_to_f64(v),
        }
    }

    pub fn exact(&self) -> Option<&BigRational> {
        match self {
            Numeric::Exact(v) => Some(v),
            Numeric::Approx { .. } => None,
        }
    }

    pub fn value(&self) -> &BigRational {
        match self {
            Numeric::Exact(v) | Numeric::Approx { value: v, .. } => v,
        }
    }
}

impl fmt::Display for Numeric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Numeric::Exact(v) => write!(f, "{}", format_rational(v)),
            Numeric::Approx { value, error } => {
                write!(f, "{} (+/- {:.1e})", format_decimal(value, 30), rational_to_f64(error))
            }
        }
    }
}

impl Serialize for Numeric {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Result of the singularity analysis at one point `x`.
#[derive(Clone, Debug, Serialize)]
pub struct SingularityReport {
    #[serde(serialize_with = "ser_rational")]
    pub x: BigRational,
    pub r: Numeric,
    pub multiplicity: usize,
    pub simple: bool,
    /// No other root within the tie tolerance of the minimal modulus.
    pub unique: bool,
    /// `(|r_2| - |r|) / |r|` for the next smallest modulus.
    pub separation: f64,
    pub mu: Option<Numeric>,
    pub sigma2: Option<Numeric>,
    pub mu_fd: Option<f64>,
    pub sigma2_fd: Option<f64>,
    /// Every sampled `x` on the circle `|x| = x0`, `x != x0`, has a strictly larger
    /// minimal root modulus.
    pub aperiodic: Option<bool>,
}

fn ser_rational<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

impl SingularityReport {
    /// Implicit and finite-difference slopes agree within [`FD_TOLERANCE`].
    pub fn fd_agrees(&self) -> Option<bool> {
        let close = |a: f64, b: f64| (a - b).abs() <= FD_TOLERANCE * a.abs().max(b.abs()).max(1e-12);
        Some(close(self.mu.as_ref()?.to_f64(), self.mu_fd?) && close(self.sigma2.as_ref()?.to_f64(), self.sigma2_fd?))
    }
}

struct Dominant {
    root: RealRoot,
    multiplicity: usize,
    separation: f64,
}

fn dominant(den: &BivarPoly, x0: &BigRational) -> Result<Dominant> {
    if !x0.is_positive() {
        return Err(Error::Invalid("x0 must be positive".into()));
    }
    let f: LaurentPoly = den.eval_x(x0);
    if f.is_zero() {
        return Err(Error::Singularity("denominator vanishes identically at x0".into()));
    }
    if f.degree().unwrap_or(0) <= 0 {
        return Err(Error::Singularity("denominator is constant in t at x0".into()));
    }
    let (parts, roots) = located_roots(&f)?;
    let mut order: Vec<usize> = (0..roots.len()).collect();
    order.sort_by(|&a, &b| roots[a].value.norm().total_cmp(&roots[b].value.norm()));
    let best = &roots[order[0]];
    let m0 = best.value.norm();
    let next = order.get(1).map(|&i| roots[i].value.norm()).unwrap_or(f64::INFINITY);
    let separation = (next - m0) / m0;
    if separation <= TIE_TOLERANCE {
        let tied: Vec<String> = order
            .iter()
            .map(|&i| roots[i].value)
            .filter(|z| z.norm() - m0 <= TIE_TOLERANCE * m0)
            .map(|z| format!("{:.6}{:+.6}i", z.re, z.im))
            .collect();
        return Err(Error::Singularity(format!("minimum modulus {m0:.6e} shared by roots {}", tied.join(", "))));
    }
    let factor = &parts[best.factor].1;
    let isolation = roots
        .iter()
        .filter(|z| z.factor == best.factor && (z.value - best.value).norm() > 0.0)
        .map(|z| (z.value - best.value).norm())
        .fold(f64::INFINITY, f64::min);
    let root = refine_real_root(factor, best.value.re, isolation.min(m0))?;
    Ok(Dominant { root, multiplicity: best.multiplicity, separation })
}

/// Dominant (minimum-modulus) root in `t` of `denominator(x0, t)`.
pub fn dominant_root(denominator: &BivarPoly, x0: &BigRational) -> Result<SingularityReport> {
    let d = dominant(denominator, x0)?;
    Ok(SingularityReport {
        x: x0.clone(),
        r: numeric_root(&d.root),
        multiplicity: d.multiplicity,
        simple: d.multiplicity == 1,
        unique: true,
        separation: d.separation,
        mu: None,
        sigma2: None,
        mu_fd: None,
        sigma2_fd: None,
        aperiodic: None,
    })
}

fn numeric_root(r: &RealRoot) -> Numeric {
    match r {
        RealRoot::Exact(v) => Numeric::Exact(v.clone()),
        RealRoot::Interval(..) => Numeric::Approx { value: r.midpoint(), error: r.width() },
    }
}

struct Partials {
    bt: LaurentPoly,
    bx: LaurentPoly,
    bxx: LaurentPoly,
    bxt: LaurentPoly,
    btt: LaurentPoly,
}

fn slopes(p: &Partials, x0: &BigRational, r: &BigRational) -> Result<(BigRational, BigRational)> {
    let bt = p.bt.eval(r);
    if bt.is_zero() {
        return Err(Error::Singularity("d/dt of the denominator vanishes at the dominant root".into()));
    }
    let r1 = -p.bx.eval(r) / &bt;
    let r2 = -(p.bxx.eval(r) + BigRational::from_integer(2.into()) * p.bxt.eval(r) * &r1 + p.btt.eval(r) * &r1 * &r1) / &bt;
    let mu = -(x0 * &r1) / r;
    let dmu = -(&r1 / r) - x0 * (&r2 * r - &r1 * &r1) / (r * r);
    Ok((mu, x0 * dmu))
}

/// `mu(x0)` and `sigma^2(x0)` by implicit differentiation, with a central-difference
/// cross-check and a sampled aperiodicity flag.
pub fn mean_variance_at(denominator: &BivarPoly, x0: &BigRational) -> Result<SingularityReport> {
    let mut rep = dominant_root(denominator, x0)?;
    if !rep.simple {
        return Err(Error::Singularity(format!("dominant root has multiplicity {}", rep.multiplicity)));
    }
    let bx_poly = denominator.d_dx();
    let bt_poly = denominator.d_dt();
    let parts = Partials {
        bt: bt_poly.eval_x(x0),
        bx: bx_poly.eval_x(x0),
        bxx: bx_poly.d_dx().eval_x(x0),
        bxt: bx_poly.d_dt().eval_x(x0),
        btt: bt_poly.d_dt().eval_x(x0),
    };
    let (mu, sigma2) = match &rep.r {
        Numeric::Exact(r) => {
            let (m, s) = slopes(&parts, x0, r)?;
            (Numeric::Exact(m), Numeric::Exact(s))
        }
        Numeric::Approx { value, error } => {
            let (m, s) = slopes(&parts, x0, value)?;
            let (m_lo, s_lo) = slopes(&parts, x0, &(value - error))?;
            let (m_hi, s_hi) = slopes(&parts, x0, &(value + error))?;
            let err = |c: &BigRational, a: &BigRational, b: &BigRational| {
                let e1 = (a - c).abs();
                let e2 = (b - c).abs();
                if e1 > e2 {
                    e1
                } else {
                    e2
                }
            };
            (
                Numeric::Approx { error: err(&m, &m_lo, &m_hi), value: m },
                Numeric::Approx { error: err(&s, &s_lo, &s_hi), value: s },
            )
        }
    };
    rep.mu = Some(mu);
    rep.sigma2 = Some(sigma2);
    let (mu_fd, sigma2_fd) = finite_difference(denominator, x0, rep.r.value())?;
    rep.mu_fd = Some(mu_fd);
    rep.sigma2_fd = Some(sigma2_fd);
    rep.aperiodic = Some(aperiodic(denominator, x0, rep.r.to_f64().abs())?);
    Ok(rep)
}

/// Richardson-extrapolated central differences of `ln r` at `x0`.
fn finite_difference(den: &BivarPoly, x0: &BigRational, r0: &BigRational) -> Result<(f64, f64)> {
    let log_ratio = |x: BigRational| -> Result<f64> {
        let r = dominant(den, &x)?.root.midpoint();
        Ok(rational_to_f64(&((r - r0) / r0)).ln_1p())
    };
    let derivs = |h: &BigRational| -> Result<(f64, f64)> {
        let lp = log_ratio(x0 + h)?;
        let lm = log_ratio(x0 - h)?;
        let hf = rational_to_f64(h);
        Ok(((lp - lm) / (2.0 * hf), (lp + lm) / (hf * hf)))
    };
    let h = x0 / BigRational::from_integer(1000.into());
    let (d1a, d2a) = derivs(&h)?;
    let (d1b, d2b) = derivs(&(&h / BigRational::from_integer(2.into())))?;
    let d1 = (4.0 * d1b - d1a) / 3.0;
    let d2 = (4.0 * d2b - d2a) / 3.0;
    let x = rational_to_f64(x0);
    Ok((-x * d1, -x * d1 - x * x * d2))
}

fn aperiodic(den: &BivarPoly, x0: &BigRational, m0: f64) -> Result<bool> {
    const SAMPLES: usize = 16;
    let x = rational_to_f64(x0);
    for k in 1..SAMPLES {
        let z = Complex64::from_polar(x, std::f64::consts::TAU * k as f64 / SAMPLES as f64);
        let coeffs: Vec<Complex64> = den
            .coeffs()
            .iter()
            .map(|c| c.terms().fold(Complex64::new(0.0, 0.0), |acc, (e, v)| acc + z.powi(e as i32) * rational_to_f64(v)))
            .collect();
        let min = complex_companion_roots(&coeffs)?.iter().map(|w| w.norm()).fold(f64::INFINITY, f64::min);
        if min <= m0 * (1.0 + 1e-9) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::known;
    use crate::poly::{int, parse_bivar, rat};

    #[test]
    fn doubled_cycle_genus_slopes() {
        let den = known::genus_c2_gf().unwrap().den;
        let rep = mean_variance_at(&den, &int(1)).unwrap();
        assert_eq!(rep.r, Numeric::Exact(rat(1, 6)));
        assert_eq!(rep.mu.as_ref().unwrap().exact(), Some(&rat(1, 4)));
        assert_eq!(rep.sigma2.as_ref().unwrap().exact(), Some(&rat(3, 32)));
        assert_eq!(rep.fd_agrees(), Some(true));
        assert_eq!(rep.aperiodic, Some(true));
    }

    #[test]
    fn doubled_cycle_euler_slopes() {
        let den = known::euler_c2_reduced_gf().unwrap().den;
        let rep = mean_variance_at(&den, &int(1)).unwrap();
        assert_eq!(rep.r, Numeric::Exact(rat(1, 12)));
        assert_eq!(rep.mu.as_ref().unwrap().exact(), Some(&rat(5, 7)));
        assert_eq!(rep.sigma2.as_ref().unwrap().exact(), Some(&rat(78, 343)));
        assert_eq!(rep.fd_agrees(), Some(true));
    }

    #[test]
    fn constant_root() {
        let den = parse_bivar("1 - 2t").unwrap();
        let rep = mean_variance_at(&den, &rat(3, 2)).unwrap();
        assert_eq!(rep.r, Numeric::Exact(rat(1, 2)));
        assert_eq!(rep.mu.unwrap().exact(), Some(&rat(0, 1)));
        assert_eq!(rep.sigma2.unwrap().exact(), Some(&rat(0, 1)));
    }

    #[test]
    fn irrational_point_matches_closed_form() {
        // r(x) = 1 / (2 (1 + sqrt(1 + 3x))), mu = 1/2 - (1 + 3x)^(-1/2) / 2
        let den = known::genus_c2_gf().unwrap().den;
        let rep = mean_variance_at(&den, &int(2)).unwrap();
        let s = 7f64.sqrt();
        assert!((rep.r.to_f64() - 1.0 / (2.0 * (1.0 + s))).abs() < 1e-15);
        assert!((rep.mu.as_ref().unwrap().to_f64() - (0.5 - 0.5 / s)).abs() < 1e-15);
        assert!((rep.sigma2.as_ref().unwrap().to_f64() - 1.5 * 7f64.powf(-1.5)).abs() < 1e-15);
        assert_eq!(rep.fd_agrees(), Some(true));
    }

    #[test]
    fn ties_and_bad_input() {
        assert!(dominant_root(&parse_bivar("1 - 4t^2").unwrap(), &int(1)).is_err());
        assert!(dominant_root(&parse_bivar("1 - 2t").unwrap(), &int(0)).is_err());
        assert!(dominant_root(&parse_bivar("1 + x").unwrap(), &int(1)).is_err());
        let double = parse_bivar("(1 - 2t)^2").unwrap();
        assert!(!dominant_root(&double, &int(1)).unwrap().simple);
        assert!(mean_variance_at(&double, &int(1)).is_err());
    }
}
