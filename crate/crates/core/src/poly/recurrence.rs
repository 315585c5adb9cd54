use super::bivar::RationalGF;
use super::laurent::{Coeff, Laurent, LaurentPoly};
use crate::error::{Error, Result};

/// Recurrence coefficients `b_1 .. b_q` with `a_n = sum_j b_j a_{n-j}`, read off a
/// denominator normalized to `Q(0) = 1`.
pub fn recurrence_from_denominator(gf: &RationalGF) -> Result<Vec<LaurentPoly>> {
    if !gf.den.coeff(0).is_one() {
        return Err(Error::Invalid("denominator constant term must be 1".into()));
    }
    let q = gf.den.t_degree().unwrap_or(0);
    Ok((1..=q).map(|j| -&gf.den.coeff(j)).collect())
}

/// Extend `init` (coefficients of `t^1, t^2, ..`) to `n` terms with the recurrence.
pub fn extend_series<C: Coeff>(b: &[Laurent<C>], init: &[Laurent<C>], n: usize) -> Result<Vec<Laurent<C>>> {
    if init.len() < b.len() {
        return Err(Error::Invalid(format!(
            "recurrence of order {} needs {} initial terms, got {}",
            b.len(),
            b.len(),
            init.len()
        )));
    }
    let mut out: Vec<Laurent<C>> = init.iter().take(n).cloned().collect();
    while out.len() < n {
        let k = out.len();
        let mut acc = Laurent::<C>::zero();
        for (j, bj) in b.iter().enumerate() {
            acc.add_assign_ref(&bj.mul_ref(&out[k - 1 - j]));
        }
        out.push(acc);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::expr::parse_gf;

    #[test]
    fn one_over_one_minus_t() {
        let gf = parse_gf("1 / (1 - t)").unwrap();
        let b = recurrence_from_denominator(&gf).unwrap();
        assert_eq!(b, vec![LaurentPoly::one()]);
    }

    #[test]
    fn recurrence_regenerates_series() {
        let gf = parse_gf("(t + x t^2) / (1 - 2t - x t^2)").unwrap();
        let s = gf.series(12).unwrap();
        let b = recurrence_from_denominator(&gf).unwrap();
        let ext = extend_series(&b, &s[1..4], 12).unwrap();
        assert_eq!(&ext[..], &s[1..]);
    }

    #[test]
    fn short_init_is_rejected() {
        let b = vec![LaurentPoly::one(), LaurentPoly::one()];
        assert!(extend_series(&b, &[LaurentPoly::one()], 5).is_err());
    }
}
