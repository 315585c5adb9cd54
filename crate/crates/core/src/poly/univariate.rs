//! Ordinary univariate polynomials over Q, stored as [`LaurentPoly`] with
//! nonnegative exponents, and the dense linear algebra used by reconstruction.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;

/// Euclidean division `a = q b + r` with `deg r < deg b`.
pub fn div_rem(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    assert!(!b.is_zero(), "division by zero polynomial");
    let bd = b.degree().unwrap();
    let lead = b.coeff(bd);
    let mut r = a.clone();
    let mut q = LaurentPoly::zero();
    while let Some(rd) = r.degree() {
        if rd < bd {
            break;
        }
        let c = r.coeff(rd) / &lead;
        let k = rd - bd;
        q.add_scaled_shifted(&LaurentPoly::one(), &c, k);
        r.add_scaled_shifted(b, &-c, k);
    }
    (q, r)
}

/// Monic greatest common divisor.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
    }
    monic(&a)
}

pub fn monic(a: &LaurentPoly) -> LaurentPoly {
    match a.degree() {
        None => a.clone(),
        Some(d) => a.scale(&a.coeff(d).recip()),
    }
}

/// The squarefree part `a / gcd(a, a')`, monic.
pub fn squarefree_part(a: &LaurentPoly) -> LaurentPoly {
    let g = gcd(a, &a.derivative());
    monic(&div_rem(a, &g).0)
}

/// Multiplicity of `r` as a root of `a` (0 if not a root).
pub fn root_multiplicity(a: &LaurentPoly, r: &BigRational) -> usize {
    let lin = LaurentPoly::from_coeffs(0, vec![-r.clone(), BigRational::one()]);
    let mut m = 0;
    let mut cur = a.clone();
    while !cur.is_zero() {
        let (q, rem) = div_rem(&cur, &lin);
        if !rem.is_zero() {
            break;
        }
        m += 1;
        cur = q;
    }
    m
}

/// Solve the square system `m x = rhs` by Gaussian elimination; `None` if singular.
pub fn solve(mut m: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = m.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        rhs.swap(col, piv);
        let inv = m[col][col].recip();
        for j in col..n {
            m[col][j] = &m[col][j] * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in col..n {
                let d = &f * &m[col][j];
                m[r][j] -= d;
            }
            let d = &f * &rhs[col];
            rhs[r] -= d;
        }
    }
    Some(rhs)
}

/// The unique polynomial of degree < n through n points with distinct abscissae.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> LaurentPoly {
    // Newton divided differences, then expansion into the monomial basis.
    let n = points.len();
    let mut dd: Vec<BigRational> = points.iter().map(|p| p.1.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &points[i].0 - &points[i - level].0;
            dd[i] = num / den;
        }
    }
    let mut acc = LaurentPoly::zero();
    for i in (0..n).rev() {
        let lin = LaurentPoly::from_coeffs(0, vec![-points[i].0.clone(), BigRational::one()]);
        acc = &acc.mul_ref(&lin) + &LaurentPoly::constant(dd[i].clone());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::laurent::{int, rat};

    fn p(cs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(cs)
    }

    #[test]
    fn division_round_trips() {
        let a = p(&[1, -4, -12, 3, 7]);
        let b = p(&[2, 0, 5]);
        let (q, r) = div_rem(&a, &b);
        assert_eq!(&q.mul_ref(&b) + &r, a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn gcd_and_multiplicity() {
        // (t - 1/6)^2 (t + 1/2)
        let f = p(&[-1, 6]).pow(2).mul_ref(&p(&[1, 2]));
        assert_eq!(root_multiplicity(&f, &rat(1, 6)), 2);
        assert_eq!(root_multiplicity(&f, &rat(-1, 2)), 1);
        assert_eq!(root_multiplicity(&f, &int(3)), 0);
        let sf = squarefree_part(&f);
        assert_eq!(sf.degree(), Some(2));
        assert_eq!(root_multiplicity(&sf, &rat(1, 6)), 1);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = p(&[3, 0, -2, 1]);
        let pts: Vec<_> = (0..4).map(|i| (int(i), f.eval(&int(i)))).collect();
        assert_eq!(interpolate(&pts), f);
    }

    #[test]
    fn singular_system_is_rejected() {
        let m = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert!(solve(m, vec![int(1), int(1)]).is_none());
        let m = vec![vec![int(2), int(1)], vec![int(1), int(3)]];
        assert_eq!(solve(m, vec![int(3), int(4)]).unwrap(), vec![int(1), int(1)]);
    }
}
