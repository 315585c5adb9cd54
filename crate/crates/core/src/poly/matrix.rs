use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::laurent::{Coeff, Laurent};
use crate::error::{Error, Result};

/// Characteristic polynomial `det(lambda I - m)` by Berkowitz's division-free
/// algorithm. Returns coefficients of `lambda^0 .. lambda^n`; the last is 1.
pub fn matrix_charpoly<C: Coeff>(m: &[Vec<Laurent<C>>]) -> Vec<Laurent<C>> {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return vec![Laurent::one()];
    }
    let neg = |p: &Laurent<C>| -p;
    // Highest-degree-first coefficient vector of the leading r x r block.
    let mut v: Vec<Laurent<C>> = vec![Laurent::one(), neg(&m[0][0])];
    for r in 1..n {
        // Column c = [1, -a, -R S, -R A S, ..., -R A^{r-1} S].
        let s: Vec<Laurent<C>> = (0..r).map(|i| m[i][r].clone()).collect();
        let row: Vec<Laurent<C>> = (0..r).map(|j| m[r][j].clone()).collect();
        let mut col = vec![Laurent::one(), neg(&m[r][r])];
        let mut cur = s;
        for k in 0..r {
            let d = dot(&row, &cur);
            col.push(neg(&d));
            if k + 1 < r {
                cur = (0..r).map(|i| dot(&m[i][..r], &cur)).collect();
            }
        }
        let mut next = vec![Laurent::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                if i >= j {
                    slot.add_assign_ref(&col[i - j].mul_ref(vj));
                }
            }
        }
        v = next;
    }
    v.reverse();
    v
}

fn dot<C: Coeff>(a: &[Laurent<C>], b: &[Laurent<C>]) -> Laurent<C> {
    let mut acc = Laurent::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc.add_assign_ref(&x.mul_ref(y));
        }
    }
    acc
}

pub fn mat_mul<C: Coeff>(a: &[Vec<Laurent<C>>], b: &[Vec<Laurent<C>>]) -> Vec<Vec<Laurent<C>>> {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = Laurent::zero();
                    for l in 0..k {
                        if !a[i][l].is_zero() && !b[l][j].is_zero() {
                            acc.add_assign_ref(&a[i][l].mul_ref(&b[l][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Evaluate a polynomial (coefficients low to high) at a square matrix.
pub fn eval_at_matrix<C: Coeff>(coeffs: &[Laurent<C>], m: &[Vec<Laurent<C>>]) -> Vec<Vec<Laurent<C>>> {
    let n = m.len();
    let mut acc: Vec<Vec<Laurent<C>>> = vec![vec![Laurent::zero(); n]; n];
    for c in coeffs.iter().rev() {
        acc = mat_mul(&acc, m);
        for (i, row) in acc.iter_mut().enumerate() {
            row[i].add_assign_ref(c);
        }
    }
    acc
}

/// Outcome of [`primitivity_check`].
#[derive(Clone, Debug, Serialize)]
pub struct PrimitivityReport {
    pub primitive: bool,
    /// First power whose entries are all positive.
    pub positive_power: Option<usize>,
    /// Wielandt bound `(n - 1)^2 + 1`.
    pub bound: usize,
    /// Positivity pattern of the power at the bound, or of the positive power.
    pub pattern: Vec<Vec<bool>>,
}

/// Primitivity of a nonnegative matrix: is some power entrywise positive?
pub fn primitivity_check(m: &[Vec<BigRational>]) -> Result<PrimitivityReport> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Invalid("matrix must be square".into()));
    }
    if m.iter().flatten().any(Signed::is_negative) {
        return Err(Error::Invalid("negative entry".into()));
    }
    let base: Vec<Vec<bool>> = m.iter().map(|r| r.iter().map(|c| !c.is_zero()).collect()).collect();
    let bound = if n == 0 { 1 } else { (n - 1) * (n - 1) + 1 };
    let mut cur = base.clone();
    for k in 1..=bound {
        if cur.iter().flatten().all(|&b| b) {
            return Ok(PrimitivityReport { primitive: true, positive_power: Some(k), bound, pattern: cur });
        }
        if k < bound {
            cur = bool_mul(&cur, &base);
        }
    }
    Ok(PrimitivityReport { primitive: false, positive_power: None, bound, pattern: cur })
}

fn bool_mul(a: &[Vec<bool>], b: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).any(|l| a[i][l] && b[l][j])).collect()).collect()
}
