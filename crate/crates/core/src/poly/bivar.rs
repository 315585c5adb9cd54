use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Polynomial in `t` whose coefficients are Laurent polynomials in `x`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivarPoly {
    coeffs: Vec<LaurentPoly>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(LaurentPoly::one())
    }

    pub fn constant(c: LaurentPoly) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * t^k`.
    pub fn t_monomial(c: LaurentPoly, k: usize) -> Self {
        let mut v = vec![LaurentPoly::zero(); k];
        v.push(c);
        Self::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<LaurentPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        BivarPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `t` (`None` for zero).
    pub fn t_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> LaurentPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![LaurentPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_assign_ref(&a.mul_ref(b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn neg(&self) -> Self {
        self.scale(&LaurentPoly::constant(-BigRational::one()))
    }

    /// Multiply by `t^k`.
    pub fn t_shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![LaurentPoly::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(v)
    }

    /// Specialize `x = x0`, giving a univariate polynomial in `t` (stored as a [`LaurentPoly`]).
    pub fn eval_x(&self, x0: &BigRational) -> LaurentPoly {
        LaurentPoly::from_coeffs(0, self.coeffs.iter().map(|c| c.eval(x0)).collect())
    }

    /// Specialize `t = t0`, giving a Laurent polynomial in `x`.
    pub fn eval_t(&self, t0: &BigRational) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(t0) + c;
        }
        acc
    }

    pub fn d_dx(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.derivative()).collect())
    }

    pub fn d_dt(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&BigRational::from_integer((k as i64).into())))
                .collect(),
        )
    }

    /// Power-series quotient `self / den` through `t^n`.
    ///
    /// The constant term of `den` must be a monomial in `x` so that it is a unit.
    pub fn series_div(&self, den: &BivarPoly, n: usize) -> Result<Vec<LaurentPoly>> {
        let d0 = den.coeff(0);
        if !d0.is_monomial() {
            return Err(Error::Invalid("denominator constant term is not a unit".into()));
        }
        let e0 = d0.low_degree().unwrap();
        let inv = LaurentPoly::monomial(d0.coeff(e0).recip(), -e0);
        let mut out: Vec<LaurentPoly> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeff(k);
            for j in 1..=k.min(den.coeffs.len().saturating_sub(1)) {
                let dj = &den.coeffs[j];
                if dj.is_zero() {
                    continue;
                }
                acc = &acc - &dj.mul_ref(&out[k - j]);
            }
            out.push(acc.mul_ref(&inv));
        }
        Ok(out)
    }

    /// Exact quotient when `divisor` divides `self` in `Q[x, 1/x][t]`.
    pub fn exact_div(&self, divisor: &BivarPoly) -> Option<BivarPoly> {
        let (sd, dd) = (self.t_degree()?, divisor.t_degree()?);
        if dd > sd {
            return None;
        }
        let q = BivarPoly::from_coeffs(self.series_div(divisor, sd - dd).ok()?);
        (q.mul(divisor) == *self).then_some(q)
    }

    pub fn divides(&self, other: &BivarPoly) -> bool {
        other.is_zero() || other.exact_div(self).is_some()
    }

    /// Largest absolute exponent range in `x`, used for sizing searches.
    pub fn x_degree_span(&self) -> (i64, i64) {
        let lo = self.coeffs.iter().filter_map(|c| c.low_degree()).min().unwrap_or(0);
        let hi = self.coeffs.iter().filter_map(|c| c.degree()).max().unwrap_or(0);
        (lo, hi)
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A quotient `num / den` of bivariate polynomials, normalized so that `den(t = 0) = 1`
/// whenever that constant term is a monomial in `x`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalGF {
    pub num: BivarPoly,
    pub den: BivarPoly,
}

impl RationalGF {
    pub fn new(num: BivarPoly, den: BivarPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Invalid("zero denominator".into()));
        }
        let mut gf = RationalGF { num, den };
        gf.normalize();
        Ok(gf)
    }

    fn normalize(&mut self) {
        let d0 = self.den.coeff(0);
        if d0.is_monomial() {
            let e = d0.low_degree().unwrap();
            let inv = LaurentPoly::monomial(d0.coeff(e).recip(), -e);
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    /// Coefficients of `t^0 .. t^n`.
    pub fn series(&self, n: usize) -> Result<Vec<LaurentPoly>> {
        self.num.series_div(&self.den, n)
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn equals(&self, other: &RationalGF) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] / [{}]", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::laurent::int;

    fn lp(cs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(cs)
    }

    #[test]
    fn geometric_series_expands() {
        // x t / (1 - x t)
        let num = BivarPoly::from_coeffs(vec![lp(&[]), lp(&[0, 1])]);
        let den = BivarPoly::from_coeffs(vec![lp(&[1]), lp(&[0, -1])]);
        let s = RationalGF::new(num, den).unwrap().series(4).unwrap();
        for (k, c) in s.iter().enumerate() {
            assert_eq!(*c, if k == 0 { LaurentPoly::zero() } else { LaurentPoly::x_pow(k as i64) });
        }
    }

    #[test]
    fn exact_division_detects_factors() {
        let f = BivarPoly::from_coeffs(vec![lp(&[1]), lp(&[0, 6])]);
        let g = BivarPoly::from_coeffs(vec![lp(&[1]), lp(&[0, -12])]);
        let h = BivarPoly::from_coeffs(vec![lp(&[1]), lp(&[-4]), lp(&[0, -12])]);
        let prod = f.mul(&g).mul(&h);
        assert_eq!(prod.exact_div(&f).unwrap(), g.mul(&h));
        assert!(f.divides(&prod));
        let other = BivarPoly::from_coeffs(vec![lp(&[1]), lp(&[0, 5])]);
        assert!(!other.divides(&prod));
    }

    #[test]
    fn normalization_divides_by_constant_term() {
        let gf = RationalGF::new(
            BivarPoly::constant(lp(&[2])),
            BivarPoly::from_coeffs(vec![lp(&[2]), lp(&[4])]),
        )
        .unwrap();
        assert_eq!(gf.den.coeff(0), lp(&[1]));
        assert_eq!(gf.num.coeff(0), lp(&[1]));
    }

    #[test]
    fn derivatives_and_specialization() {
        // 1 - 4t - 12 x t^2
        let b = BivarPoly::from_coeffs(vec![lp(&[1]), lp(&[-4]), lp(&[0, -12])]);
        assert_eq!(b.d_dt(), BivarPoly::from_coeffs(vec![lp(&[-4]), lp(&[0, -24])]));
        assert_eq!(b.d_dx(), BivarPoly::from_coeffs(vec![lp(&[]), lp(&[]), lp(&[-12])]));
        assert_eq!(b.eval_x(&int(1)), lp(&[1, -4, -12]));
        assert_eq!(b.eval_t(&int(1)), lp(&[-3, -12]));
    }
}
