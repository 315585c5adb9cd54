use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Coefficient ring for [`Laurent`]: exact integers or exact rationals.
pub trait Coeff:
    Clone + PartialEq + Eq + std::hash::Hash + Zero + One + fmt::Debug + Send + Sync + 'static
{
    fn add_to(&mut self, other: &Self);
    fn sub_from(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_i64(v: i64) -> Self;
    fn to_rational(&self) -> BigRational;
    fn is_negative(&self) -> bool;
    fn fmt_coeff(&self) -> String;
}

impl Coeff for BigInt {
    fn add_to(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_from(&mut self, other: &Self) {
        *self -= other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn fmt_coeff(&self) -> String {
        self.to_string()
    }
}

impl Coeff for BigRational {
    fn add_to(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_from(&mut self, other: &Self) {
        *self -= other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn to_rational(&self) -> BigRational {
        self.clone()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn fmt_coeff(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

/// Laurent polynomial `sum c_k x^k`, stored densely from the lowest exponent.
///
/// Zero is the empty coefficient vector. Otherwise the first and last stored
/// coefficients are nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<C: Coeff> {
    low: i64,
    coeffs: Vec<C>,
}

pub type LaurentPoly = Laurent<BigRational>;
pub type IntPoly = Laurent<BigInt>;

impl<C: Coeff> Default for Laurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Laurent<C> {
    pub fn zero() -> Self {
        Laurent { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: C, exp: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent { low: exp, coeffs: vec![c] }
    }

    /// `x^exp` with unit coefficient.
    pub fn x_pow(exp: i64) -> Self {
        Self::monomial(C::one(), exp)
    }

    pub fn from_coeffs(low: i64, coeffs: Vec<C>) -> Self {
        let mut p = Laurent { low, coeffs };
        p.normalize();
        p
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let terms: Vec<(i64, C)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize].add_to(&c);
        }
        Self::from_coeffs(lo, coeffs)
    }

    /// Ordinary polynomial from integer coefficients, constant term first.
    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(0, cs.iter().map(|&c| C::from_i64(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (`None` for zero).
    pub fn low_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient (`None` for zero).
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> C {
        let i = exp - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            C::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn is_monomial(&self) -> bool {
        self.num_terms() == 1
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect() }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Laurent { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    /// `self += c * x^k * other`, the workhorse of the group-ring products.
    pub fn add_scaled_shifted(&mut self, other: &Self, c: &C, k: i64) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        let olow = other.low + k;
        let ohi = olow + other.coeffs.len() as i64 - 1;
        if self.is_zero() {
            self.low = olow;
            self.coeffs = other.coeffs.iter().map(|a| a.mul_ref(c)).collect();
            self.normalize();
            return;
        }
        let shi = self.low + self.coeffs.len() as i64 - 1;
        if olow < self.low {
            let pad = (self.low - olow) as usize;
            let mut v = vec![C::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = olow;
        }
        if ohi > shi {
            self.coeffs.resize((ohi - self.low + 1) as usize, C::zero());
        }
        let off = (olow - self.low) as usize;
        let unit = c.is_one();
        for (i, a) in other.coeffs.iter().enumerate() {
            if unit {
                self.coeffs[off + i].add_to(a);
            } else {
                self.coeffs[off + i].add_to(&a.mul_ref(c));
            }
        }
        self.normalize();
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        self.add_scaled_shifted(other, &C::one(), 0);
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_to(&a.mul_ref(b));
            }
        }
        Self::from_coeffs(self.low + other.low, out)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// Substitute `x -> x^k` (k may be negative).
    pub fn compose_power(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    /// Formal derivative d/dx.
    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.terms().filter(|(e, _)| *e != 0).map(|(e, c)| (e - 1, c.mul_ref(&C::from_i64(e)))),
        )
    }

    /// Sum of coefficients, i.e. the value at `x = 1`.
    pub fn coeff_sum(&self) -> C {
        let mut s = C::zero();
        for c in &self.coeffs {
            s.add_to(c);
        }
        s
    }

    /// Exact evaluation at a rational point (nonzero if negative exponents occur).
    pub fn eval(&self, x: &BigRational) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        // Horner over the dense coefficients, then the x^low factor.
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_rational();
        }
        acc * rational_pow(x, self.low)
    }

    pub fn to_rational_poly(&self) -> LaurentPoly {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|c| c.to_rational()).collect() }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        Laurent::from_coeffs(self.low, self.coeffs.iter().map(f).collect())
    }

    /// Dense coefficient vector from exponent 0 to the degree (ordinary polynomials only).
    pub fn to_dense(&self) -> Option<Vec<C>> {
        if self.is_zero() {
            return Some(Vec::new());
        }
        if self.low < 0 {
            return None;
        }
        let mut v = vec![C::zero(); self.low as usize];
        v.extend(self.coeffs.iter().cloned());
        Some(v)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl IntPoly {
    /// Exact conversion from a rational polynomial whose coefficients are integers.
    pub fn from_rational_poly(p: &LaurentPoly) -> Option<IntPoly> {
        let mut cs = Vec::with_capacity(p.coeffs.len());
        for c in &p.coeffs {
            if !c.denom().is_one() {
                return None;
            }
            cs.push(c.numer().clone());
        }
        Some(Laurent { low: p.low, coeffs: cs })
    }

    /// Nonnegative integer coefficient vector indexed from exponent 0.
    pub fn to_counts(&self) -> Option<Vec<BigInt>> {
        let d = self.to_dense()?;
        d.iter().all(|c| !num_traits::Signed::is_negative(c)).then_some(d)
    }
}

impl LaurentPoly {
    /// Common denominator of all coefficients.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }
}

pub(crate) fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parse `"p"` or `"p/q"` into an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            (!b.is_zero()).then(|| BigRational::new(a, b))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

pub fn format_rational(r: &BigRational) -> String {
    r.fmt_coeff()
}

/// Nearest `f64` to a rational, robust for huge numerators and denominators.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    ratio_to_f64(r.numer(), r.denom())
}

pub fn ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    // Bring both to ~64 significant bits before dividing.
    let shift_n = (nb - 64).max(0);
    let shift_d = (db - 64).max(0);
    let n = (num >> shift_n as usize).to_f64().unwrap_or(f64::NAN);
    let d = (den >> shift_d as usize).to_f64().unwrap_or(f64::NAN);
    let e = shift_n - shift_d;
    (n / d) * 2f64.powi(e.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
}

impl<C: Coeff> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = if neg { c.neg_ref() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let body = match e {
                0 => mag.fmt_coeff(),
                _ => {
                    let var = if e == 1 { "x".to_string() } else { format!("x^{e}") };
                    if mag.is_one() {
                        var
                    } else {
                        format!("{}*{}", mag.fmt_coeff(), var)
                    }
                }
            };
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<C: Coeff> Add for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: Self) -> Laurent<C> {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<C: Coeff> Sub for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: Self) -> Laurent<C> {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, &C::one().neg_ref(), 0);
        out
    }
}

impl<C: Coeff> Mul for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Self) -> Laurent<C> {
        self.mul_ref(rhs)
    }
}

impl<C: Coeff> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        self.scale(&C::one().neg_ref())
    }
}

impl<C: Coeff> Add for Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: Self) -> Laurent<C> {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: Self) -> Laurent<C> {
        &self - &rhs
    }
}

impl<C: Coeff> Mul for Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Self) -> Laurent<C> {
        &self * &rhs
    }
}

impl<C: Coeff> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(cs)
    }

    #[test]
    fn product_evaluates_to_216() {
        let a = p(&[4, 2]);
        let b = p(&[6, 30]);
        assert_eq!((&a * &b).eval(&int(1)), int(216));
    }

    #[test]
    fn difference_is_zero() {
        let a = p(&[1, 1]);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn euler_two_at_one() {
        assert_eq!(p(&[6, 36, 126, 120]).eval(&int(1)), int(288));
    }

    #[test]
    fn display_is_ascending() {
        assert_eq!(p(&[6, 30]).to_string(), "6 + 30*x");
        assert_eq!(p(&[1, -1, 0, 1]).to_string(), "1 - x + x^3");
        assert_eq!(LaurentPoly::monomial(rat(-1, 2), -2).to_string(), "-1/2*x^-2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn negative_exponents_and_shift() {
        let a = LaurentPoly::from_terms([(-1, int(2)), (1, int(3))]);
        assert_eq!(a.low_degree(), Some(-1));
        assert_eq!(a.degree(), Some(1));
        assert_eq!(a.eval(&int(2)), int(7));
        let b = a.shift(1);
        assert_eq!(b.to_dense().unwrap(), vec![int(2), int(0), int(3)]);
    }

    #[test]
    fn add_scaled_shifted_extends_both_ends() {
        let mut a = IntPoly::from_i64s(&[0, 1]);
        a.add_scaled_shifted(&IntPoly::from_i64s(&[1, 1]), &BigInt::from(2), -2);
        assert_eq!(a, IntPoly::from_terms([(-2, 2.into()), (-1, 2.into()), (1, 1.into())]));
        a.add_scaled_shifted(&IntPoly::from_i64s(&[0, 1]), &BigInt::from(-1), 0);
        assert_eq!(a.degree(), Some(-1));
    }

    #[test]
    fn pow_and_derivative() {
        let a = p(&[1, 1]);
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(a.pow(3).derivative(), p(&[3, 6, 3]));
        assert_eq!(LaurentPoly::x_pow(-2).derivative(), LaurentPoly::monomial(int(-2), -3));
    }

    #[test]
    fn compose_power_inverts_exponents() {
        let a = p(&[4, 2]);
        assert_eq!(a.compose_power(-1), LaurentPoly::from_terms([(0, int(4)), (-1, int(2))]));
        assert_eq!(a.compose_power(2), p(&[4, 0, 2]));
    }

    #[test]
    fn huge_ratio_to_f64() {
        let big = BigInt::from(3).pow(700);
        let r = ratio_to_f64(&big, &(&big * BigInt::from(4)));
        assert!((r - 0.25).abs() < 1e-15);
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("-3/6"), Some(rat(-1, 2)));
        assert_eq!(parse_rational("17"), Some(int(17)));
        assert_eq!(parse_rational("1/0"), None);
    }
}
