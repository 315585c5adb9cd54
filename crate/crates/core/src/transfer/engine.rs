use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::spec::{FamilyKind, FamilySpec};
use crate::error::{Error, Result};
use crate::graph::ops::blow_up_with_map;
use crate::graph::oracle::DEFAULT_BUDGET;
use crate::groupring::{cyclic_sum_element, distribution_from_scalar, face_element, GroupRingElem, Mode, Perm};
use crate::poly::{
    matrix_charpoly, primitivity_check, reconstruct_rational_gf, BivarPoly, IntPoly, LaurentPoly,
    PrimitivityReport, RationalGF,
};

/// Boundary state `A_n`: a group-ring element over the canonical state labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferState {
    pub elem: GroupRingElem,
    pub index: usize,
}

/// Transfer engine of one family.
///
/// State labels are ring labels of `H`'s darts at the `U1` vertices (the open
/// end) and, for circular families, at the `U2` vertices of the first copy.
/// The copy being attached carries labels shifted by one copy stride.
#[derive(Clone, Debug)]
pub struct TransferEngine {
    pub spec: FamilySpec,
    stride: usize,
    state_labels: Vec<usize>,
    u1_labels: Vec<usize>,
    a1: GroupRingElem,
    /// `C_{U'} . Phi-hat` of the incoming copy, applied before each step's projection.
    step_pre: GroupRingElem,
    /// Kept labels after a step, before shifting the new `U1` back.
    step_keep: Vec<usize>,
    /// Element multiplied onto `A_n` before projecting to the empty set.
    closure_pre: GroupRingElem,
}

fn darts_of(g: &crate::graph::Graph, vs: &[usize]) -> Vec<usize> {
    let mut d: Vec<usize> = vs.iter().flat_map(|&v| g.darts_at(v).iter().copied()).collect();
    d.sort_unstable();
    d
}

/// `fproj` of `Phi(g with `blown` vertices split into leaves)` onto the darts of `blown`.
fn boundary_face_element(g: &crate::graph::Graph, blown: &[usize], mode: Mode, budget: u128) -> Result<GroupRingElem> {
    let (split, _) = blow_up_with_map(g, blown)?;
    let phi = face_element(&split, mode, budget)?;
    phi.fproj(&mode.labels(&darts_of(g, blown)))
}

impl TransferEngine {
    pub fn new(spec: FamilySpec) -> Result<Self> {
        Self::with_budget(spec, DEFAULT_BUDGET)
    }

    pub fn with_budget(spec: FamilySpec, budget: u128) -> Result<Self> {
        let mode = spec.mode;
        let h = &spec.h;
        let u1 = spec.glue.sources();
        let u2 = spec.glue.targets();
        let dart_stride = h.dart_count();
        let stride = dart_stride * mode.labels_per_dart();
        let mut boundary = u1.clone();
        boundary.extend(&u2);
        let hat = boundary_face_element(h, &boundary, mode, budget)?;
        let u1_labels = mode.labels(&darts_of(h, &u1));
        let u2_labels = mode.labels(&darts_of(h, &u2));
        let circular = spec.is_circular();

        let mut state_labels = u1_labels.clone();
        let a1 = if circular {
            state_labels.extend(&u2_labels);
            hat.clone()
        } else {
            let c2: Vec<Vec<usize>> = u2.iter().map(|&w| h.darts_at(w).to_vec()).collect();
            cyclic_sum_element(&c2, mode)?.multiply(&hat)?.fproj(&u1_labels)?
        };
        state_labels.sort_unstable();

        // one step: merge old U1 with the new copy's U2
        let merged: Vec<Vec<usize>> = spec
            .glue
            .pairs
            .iter()
            .map(|&(u, w)| {
                let mut d = h.darts_at(u).to_vec();
                d.extend(h.darts_at(w).iter().map(|&x| x + dart_stride));
                d
            })
            .collect();
        let hat_new = hat.relabel(|l| l + stride)?;
        let step_pre = cyclic_sum_element(&merged, mode)?.multiply(&hat_new)?;
        let mut step_keep: Vec<usize> = if circular { u2_labels.clone() } else { Vec::new() };
        step_keep.extend(u1_labels.iter().map(|l| l + stride));

        let closure_pre = match &spec.kind {
            FamilyKind::Linear => {
                let c: Vec<Vec<usize>> = u1.iter().map(|&u| h.darts_at(u).to_vec()).collect();
                cyclic_sum_element(&c, mode)?
            }
            FamilyKind::Circular => {
                let c: Vec<Vec<usize>> = spec
                    .glue
                    .pairs
                    .iter()
                    .map(|&(u, w)| h.darts_at(u).iter().chain(h.darts_at(w)).copied().collect())
                    .collect();
                cyclic_sum_element(&c, mode)?
            }
            FamilyKind::Capped { cap, glue } => {
                let targets = glue.targets();
                let cap_hat = boundary_face_element(cap, &targets, mode, budget)?.relabel(|l| l + stride)?;
                let mut c = Vec::new();
                for &u in &u1 {
                    let mut d = h.darts_at(u).to_vec();
                    if let Some(&(_, w)) = glue.pairs.iter().find(|p| p.0 == u) {
                        d.extend(cap.darts_at(w).iter().map(|&x| x + dart_stride));
                    }
                    c.push(d);
                }
                cyclic_sum_element(&c, mode)?.multiply(&cap_hat)?
            }
        };
        Ok(TransferEngine { spec, stride, state_labels, u1_labels, a1, step_pre, step_keep, closure_pre })
    }

    pub fn mode(&self) -> Mode {
        self.spec.mode
    }

    pub fn state_labels(&self) -> &[usize] {
        &self.state_labels
    }

    /// Labels of the open end.
    pub fn open_labels(&self) -> &[usize] {
        &self.u1_labels
    }

    pub fn initial_state(&self) -> TransferState {
        TransferState { elem: self.a1.clone(), index: 1 }
    }

    /// `T_H` on a bare element.
    pub fn apply_step(&self, a: &GroupRingElem) -> Result<GroupRingElem> {
        if a.support() != self.state_labels.as_slice() {
            return Err(Error::Support("state does not live on the boundary labels".into()));
        }
        let stride = self.stride;
        self.step_pre
            .multiply(a)?
            .fproj(&self.step_keep)?
            .relabel(|l| if l >= stride { l - stride } else { l })
    }

    pub fn step_state(&self, a: &TransferState) -> Result<TransferState> {
        Ok(TransferState { elem: self.apply_step(&a.elem)?, index: a.index + 1 })
    }

    /// Raw closure scalar: `x^k` per completed embedding with `k` face cycles.
    pub fn close_raw(&self, a: &GroupRingElem) -> Result<IntPoly> {
        self.closure_pre.multiply(a)?.fproj(&[])?.scalar_value()
    }

    /// Distribution of member `n` from its raw closure scalar.
    pub fn extract(&self, raw: &IntPoly, n: usize) -> Result<IntPoly> {
        let (v, e) = self.spec.member_size(n);
        distribution_from_scalar(raw, v, e, self.mode())
    }

    pub fn close(&self, a: &TransferState) -> Result<IntPoly> {
        self.extract(&self.close_raw(&a.elem)?, a.index)
    }

    /// Genus (or Euler-genus) polynomial of member `n`, by direct stepping.
    pub fn family_genus_poly(&self, n: usize) -> Result<IntPoly> {
        if n == 0 {
            return Err(Error::Invalid("family members start at n = 1".into()));
        }
        let mut a = self.initial_state();
        while a.index < n {
            a = self.step_state(&a)?;
        }
        self.close(&a)
    }

    /// Matrix of `T_H` on the basis reachable from `A_1`, with the closure functional.
    pub fn operator_table(&self, max_basis: usize) -> Result<OperatorTable> {
        let mut basis: Vec<Perm> = Vec::new();
        let mut index: HashMap<Perm, usize> = HashMap::new();
        let mut intern = |p: &Perm, basis: &mut Vec<Perm>| -> usize {
            *index.entry(p.clone()).or_insert_with(|| {
                basis.push(p.clone());
                basis.len() - 1
            })
        };
        let mut initial = Vec::new();
        for (p, c) in self.a1.sorted_terms() {
            initial.push((intern(p, &mut basis), c.clone()));
        }
        let mut rows = Vec::new();
        let mut closure = Vec::new();
        let mut i = 0;
        while i < basis.len() {
            if basis.len() > max_basis {
                return Err(Error::BudgetExceeded { required: basis.len() as u128, budget: max_basis as u128 });
            }
            let mut single = GroupRingElem::zero(self.state_labels.clone())?;
            single.add_term(basis[i].clone(), IntPoly::one());
            let image = self.apply_step(&single)?;
            let mut row = Vec::new();
            for (p, c) in image.sorted_terms() {
                row.push((intern(p, &mut basis), c.clone()));
            }
            rows.push(row);
            closure.push(self.close_raw(&single)?);
            i += 1;
        }
        Ok(OperatorTable { basis, rows, closure, initial })
    }

    /// Member polynomials for `n = 1..=count` via the operator table.
    pub fn family_series(&self, count: usize) -> Result<Vec<IntPoly>> {
        self.operator_table(DEFAULT_MAX_BASIS)?.series(count)?.iter().enumerate().map(|(i, r)| self.extract(r, i + 1)).collect()
    }

    /// Rational generating function `sum_n P_n(x) t^n`, validated on `guard` extra terms.
    pub fn family_rational_gf(&self, p_max: usize, q_max: usize, guard: usize) -> Result<RationalGF> {
        let series = self.family_series(p_max + q_max + guard)?;
        let prefix: Vec<LaurentPoly> = series.iter().map(IntPoly::to_rational_poly).collect();
        reconstruct_rational_gf(&prefix, p_max, q_max, guard)
    }

    /// Twice the exponent shift per step, `2b`, so that the member at `t^n`
    /// equals `x^(a + b n)` times the raw scalar at `x -> x^(-1/2)`.
    pub fn step_shift_twice(&self) -> i64 {
        let (v1, e1) = self.spec.member_size(1);
        let (v2, e2) = self.spec.member_size(2);
        let d = (e2 as i64 - v2 as i64) - (e1 as i64 - v1 as i64);
        match self.mode() {
            Mode::Genus => d,
            Mode::Euler => 2 * d,
        }
    }

    /// The reachable-basis transfer matrix and its `x = 1` stochastic normalization.
    pub fn transfer_matrix(&self, max_basis: usize) -> Result<TransferMatrix> {
        let table = self.operator_table(max_basis)?;
        let n = table.basis.len();
        let mut m = vec![vec![LaurentPoly::zero(); n]; n];
        for (i, row) in table.rows.iter().enumerate() {
            for (j, c) in row {
                m[i][*j].add_assign_ref(&c.to_rational_poly());
            }
        }
        let one = BigRational::one();
        let at_one: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(|c| c.eval(&one)).collect()).collect();
        let stochastic: Vec<Vec<BigRational>> = at_one
            .iter()
            .map(|r| {
                let s: BigRational = r.iter().sum();
                if s.is_zero() {
                    r.clone()
                } else {
                    r.iter().map(|c| c / &s).collect()
                }
            })
            .collect();
        let primitivity = primitivity_check(&stochastic)?;
        let basis = table.basis.iter().map(|p| self.a1_cycle_notation(p)).collect();
        Ok(TransferMatrix { basis, matrix: m, stochastic, primitivity, step_shift_twice: self.step_shift_twice() })
    }

    fn a1_cycle_notation(&self, p: &Perm) -> String {
        let e = GroupRingElem::zero(self.state_labels.clone()).expect("valid support");
        e.cycle_notation(p)
    }
}

/// Largest reachable basis the series and GF entry points will build.
pub const DEFAULT_MAX_BASIS: usize = 200_000;

/// `T_H` restricted to the basis reachable from `A_1`.
#[derive(Clone, Debug)]
pub struct OperatorTable {
    pub basis: Vec<Perm>,
    /// `T(basis[i]) = sum_j c_ij basis[j]`, sparse.
    pub rows: Vec<Vec<(usize, IntPoly)>>,
    /// Raw closure scalar of each basis element.
    pub closure: Vec<IntPoly>,
    /// `A_1` in this basis.
    pub initial: Vec<(usize, IntPoly)>,
}

impl OperatorTable {
    /// Raw closure scalars of `A_1 .. A_count`.
    pub fn series(&self, count: usize) -> Result<Vec<IntPoly>> {
        let n = self.basis.len();
        let mut v = vec![IntPoly::zero(); n];
        for (i, c) in &self.initial {
            v[*i].add_assign_ref(c);
        }
        let mut out = Vec::with_capacity(count);
        for k in 0..count {
            let mut raw = IntPoly::zero();
            for (i, c) in v.iter().enumerate() {
                if !c.is_zero() && !self.closure[i].is_zero() {
                    raw.add_assign_ref(&c.mul_ref(&self.closure[i]));
                }
            }
            out.push(raw);
            if k + 1 == count {
                break;
            }
            let mut next = vec![IntPoly::zero(); n];
            for (i, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (j, m) in &self.rows[i] {
                    next[*j].add_assign_ref(&c.mul_ref(m));
                }
            }
            v = next;
        }
        Ok(out)
    }
}

/// Output of [`TransferEngine::transfer_matrix`].
#[derive(Clone, Debug, Serialize)]
pub struct TransferMatrix {
    /// Basis permutations in cycle notation over state labels.
    pub basis: Vec<String>,
    /// Row `i` holds the image of basis element `i` (row-vector convention).
    #[serde(skip)]
    pub matrix: Vec<Vec<LaurentPoly>>,
    #[serde(skip)]
    pub stochastic: Vec<Vec<BigRational>>,
    pub primitivity: PrimitivityReport,
    pub step_shift_twice: i64,
}

impl TransferMatrix {
    /// `det(1 - t M)` in the raw variable.
    pub fn denominator(&self) -> BivarPoly {
        // det(1 - tM) = t^n charpoly(1/t) with charpoly coefficients low to high
        let cp = matrix_charpoly(&self.matrix);
        let n = cp.len() - 1;
        BivarPoly::from_coeffs((0..=n).map(|k| cp[n - k].clone()).collect())
    }

    /// `det(1 - t M)` with the raw variable `y` replaced by `x^(-1/2)` and `t`
    /// by `t x^b`, matching the extracted generating function. `None` when a
    /// half-integer power of `x` would remain.
    pub fn extracted_denominator(&self) -> Option<BivarPoly> {
        let d = self.denominator();
        let mut out = Vec::new();
        for (k, c) in d.coeffs().iter().enumerate() {
            let mut terms = Vec::new();
            for (e, a) in c.terms() {
                let twice = -e + self.step_shift_twice * k as i64;
                if twice % 2 != 0 {
                    return None;
                }
                terms.push((twice / 2, a.clone()));
            }
            out.push(LaurentPoly::from_terms(terms));
        }
        Some(BivarPoly::from_coeffs(out))
    }
}
