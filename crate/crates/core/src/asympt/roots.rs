//! Roots of univariate polynomials over Q: companion-matrix location, exact
//! rational detection and bisection refinement in exact arithmetic.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::laurent::rational_to_f64;
use crate::poly::univariate::{div_rem, gcd, monic};
use crate::poly::LaurentPoly;

/// Bits of precision kept by the bisection refinement (about 42 decimal digits).
pub const REFINE_BITS: u64 = 140;

/// Numeric roots of a polynomial with nonnegative exponents, by the eigenvalues of
/// its companion matrix.
pub fn companion_roots(p: &LaurentPoly) -> Result<Vec<Complex64>> {
    let coeffs: Vec<Complex64> = dense(p)?.iter().map(|c| Complex64::new(rational_to_f64(c), 0.0)).collect();
    complex_companion_roots(&coeffs)
}

/// Roots of `sum c_k t^k` for complex coefficients, constant term first.
pub fn complex_companion_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(|z| z.norm() == 0.0) {
        c.pop();
    }
    let lead_zeros = c.iter().take_while(|z| z.norm() == 0.0).count();
    let c = &c[lead_zeros..];
    let deg = c.len().saturating_sub(1);
    let mut roots = vec![Complex64::new(0.0, 0.0); lead_zeros];
    if deg == 0 {
        return Ok(roots);
    }
    let lead = c[deg];
    let mut m = DMatrix::<Complex64>::zeros(deg, deg);
    for i in 1..deg {
        m[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..deg {
        m[(i, deg - 1)] = -c[i] / lead;
    }
    let eig = m.schur().eigenvalues().ok_or_else(|| Error::Singularity("eigenvalue iteration did not converge".into()))?;
    roots.extend(eig.iter().copied());
    Ok(roots)
}

fn dense(p: &LaurentPoly) -> Result<Vec<BigRational>> {
    if p.low_degree().is_some_and(|d| d < 0) {
        return Err(Error::Invalid("negative exponent in a polynomial".into()));
    }
    Ok(p.to_dense().unwrap_or_default())
}

/// Yun's square-free decomposition: `p = c * prod a_i^i` with the `a_i` monic,
/// square-free and pairwise coprime. Returns `(i, a_i)` for nonconstant factors.
pub fn squarefree_decomposition(p: &LaurentPoly) -> Vec<(usize, LaurentPoly)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) <= 0 {
        return out;
    }
    let dp = p.derivative();
    let a0 = gcd(p, &dp);
    let mut b = div_rem(p, &a0).0;
    let mut c = div_rem(&dp, &a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = gcd(&b, &d);
        b = div_rem(&b, &a).0;
        c = div_rem(&d, &a).0;
        d = &c - &b.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((i, monic(&a)));
        }
        i += 1;
    }
    out
}

/// A located root with its multiplicity.
#[derive(Clone, Debug)]
pub struct LocatedRoot {
    pub value: Complex64,
    pub multiplicity: usize,
    /// Index into the square-free decomposition.
    pub factor: usize,
}

/// All roots of `p` with multiplicities.
pub fn located_roots(p: &LaurentPoly) -> Result<(Vec<(usize, LaurentPoly)>, Vec<LocatedRoot>)> {
    let parts = squarefree_decomposition(p);
    let mut roots = Vec::new();
    for (k, (mult, a)) in parts.iter().enumerate() {
        for z in companion_roots(a)? {
            roots.push(LocatedRoot { value: z, multiplicity: *mult, factor: k });
        }
    }
    Ok((parts, roots))
}

fn sign_at(p: &LaurentPoly, x: &BigRational) -> i32 {
    let v = p.eval(x);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Real root of the square-free `p` near `approx`, as an exact value or an
/// isolating interval of width at most `2^-bits`.
#[derive(Clone, Debug, PartialEq)]
pub enum RealRoot {
    Exact(BigRational),
    Interval(BigRational, BigRational),
}

impl RealRoot {
    pub fn midpoint(&self) -> BigRational {
        match self {
            RealRoot::Exact(r) => r.clone(),
            RealRoot::Interval(a, b) => (a + b) / BigRational::from_integer(2.into()),
        }
    }

    pub fn width(&self) -> BigRational {
        match self {
            RealRoot::Exact(_) => BigRational::zero(),
            RealRoot::Interval(a, b) => b - a,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, RealRoot::Exact(_))
    }
}

/// Nearest dyadic rational to `v` with denominator `2^bits`.
fn dyadic(v: f64, bits: u32) -> BigRational {
    let scaled = (v * 2f64.powi(bits as i32)).round();
    let n = BigInt::from(scaled as i128);
    BigRational::new(n, BigInt::one() << bits)
}

/// Refine a simple real root of the square-free `p` starting from `approx`,
/// where no other root lies within `isolation` of it.
pub fn refine_real_root(p: &LaurentPoly, approx: f64, isolation: f64) -> Result<RealRoot> {
    let mut eps = (approx.abs() * 1e-12).max(1e-300);
    let (mut lo, mut hi);
    loop {
        lo = dyadic(approx - eps, 80);
        hi = dyadic(approx + eps, 80);
        let (sl, sh) = (sign_at(p, &lo), sign_at(p, &hi));
        if sl == 0 {
            return Ok(RealRoot::Exact(lo));
        }
        if sh == 0 {
            return Ok(RealRoot::Exact(hi));
        }
        if sl != sh {
            break;
        }
        eps *= 8.0;
        if eps > isolation / 2.0 {
            return Err(Error::Singularity(format!("no sign change isolates the root near {approx}")));
        }
    }
    let target = BigRational::new(BigInt::one(), BigInt::one() << REFINE_BITS);
    let two = BigRational::from_integer(2.into());
    let s_lo = sign_at(p, &lo);
    while &hi - &lo > target {
        let mid = (&lo + &hi) / &two;
        match sign_at(p, &mid) {
            0 => return Ok(RealRoot::Exact(mid)),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    if let Some(r) = rational_candidate(p, &lo, &hi) {
        return Ok(RealRoot::Exact(r));
    }
    Ok(RealRoot::Interval(lo, hi))
}

/// The rational root of `p` in `[lo, hi]`, if any. Candidates are the continued
/// fraction convergents of the midpoint whose denominators divide the leading
/// coefficient of the integer-cleared polynomial; each is checked exactly.
pub fn rational_candidate(p: &LaurentPoly, lo: &BigRational, hi: &BigRational) -> Option<BigRational> {
    let lead = integer_leading(p)?;
    let mid = (lo + hi) / BigRational::from_integer(2.into());
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut x = mid;
    for _ in 0..200 {
        let a = x.floor().to_integer();
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        if k2.abs() > lead.abs() {
            return None;
        }
        let cand = BigRational::new(h2.clone(), k2.clone());
        if &cand >= lo && &cand <= hi && lead.is_multiple_of(&k2) && p.eval(&cand).is_zero() {
            return Some(cand);
        }
        let frac = &x - BigRational::from_integer(a);
        if frac.is_zero() {
            return None;
        }
        x = frac.recip();
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
    }
    None
}

fn integer_leading(p: &LaurentPoly) -> Option<BigInt> {
    let l = p.denominator_lcm();
    let lead = p.leading_coeff()?;
    Some((lead * BigRational::from_integer(l)).to_integer())
}

/// Decimal rendering with `digits` significant digits after the point.
pub fn format_decimal(r: &BigRational, digits: usize) -> String {
    let neg = r.is_negative();
    let scale = BigInt::from(10).pow(digits as u32);
    let v = (r.abs() * BigRational::from_integer(scale.clone())).round().to_integer();
    let (int, frac) = v.div_rem(&scale);
    let frac = format!("{:0>width$}", frac.to_string(), width = digits);
    format!("{}{}.{}", if neg { "-" } else { "" }, int, frac)
}

/// `ln` of a positive big integer.
pub fn big_ln(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 60;
    let top = (n >> shift).to_f64().unwrap_or(0.0);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, rat};

    #[test]
    fn companion_finds_quadratic_roots() {
        let mut r = companion_roots(&parse_poly("(1-6x)(1+2x)").unwrap()).unwrap();
        r.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        assert!((r[0].re + 0.5).abs() < 1e-12 && (r[1].re - 1.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn yun_decomposition() {
        let p = parse_poly("(x-1)^3 (x+2)^2 (x-5)").unwrap();
        let parts = squarefree_decomposition(&p);
        let degs: Vec<(usize, i64)> = parts.iter().map(|(i, a)| (*i, a.degree().unwrap())).collect();
        assert_eq!(degs, vec![(1, 1), (2, 1), (3, 1)]);
    }

    #[test]
    fn exact_and_refined_roots() {
        let p = parse_poly("24x^2 + 10x - 1").unwrap();
        assert_eq!(refine_real_root(&p, 1.0 / 12.0, 0.1).unwrap(), RealRoot::Exact(rat(1, 12)));
        let q = parse_poly("x^2 - 2").unwrap();
        let r = refine_real_root(&q, 1.4, 1.0).unwrap();
        assert!(!r.is_exact());
        assert_eq!(&format_decimal(&r.midpoint(), 40)[..32], "1.414213562373095048801688724209");
    }

    #[test]
    fn logs_of_huge_integers() {
        let n = BigInt::from(3).pow(2000);
        assert!((big_ln(&n) - 2000.0 * 3f64.ln()).abs() < 1e-9 * 2000.0);
    }
}
