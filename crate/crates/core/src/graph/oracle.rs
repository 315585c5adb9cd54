use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::embedding::{opposite, successor, EmbeddingRep};
use super::Graph;
use crate::error::{Error, Result};
use crate::poly::{IntPoly, LaurentPoly};

pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistKind {
    Genus,
    EulerGenus,
    Crosscap,
}

/// Counts of embeddings indexed by genus, Euler-genus or crosscap number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingDistribution {
    pub kind: DistKind,
    pub counts: Vec<BigInt>,
}

impl EmbeddingDistribution {
    pub fn from_counts(kind: DistKind, counts: Vec<u64>) -> Self {
        let mut counts: Vec<BigInt> = counts.into_iter().map(BigInt::from).collect();
        while counts.last().is_some_and(|c| c.is_zero()) {
            counts.pop();
        }
        EmbeddingDistribution { kind, counts }
    }

    pub fn to_poly(&self) -> IntPoly {
        IntPoly::from_coeffs(0, self.counts.clone())
    }

    pub fn to_rational_poly(&self) -> LaurentPoly {
        self.to_poly().to_rational_poly()
    }

    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }

    /// Smallest and largest index with a nonzero count.
    pub fn range(&self) -> Option<(usize, usize)> {
        let lo = self.counts.iter().position(|c| !c.is_zero())?;
        Some((lo, self.counts.len() - 1))
    }
}

/// Output of the Euler-genus oracle.
#[derive(Clone, Debug)]
pub struct EulerOracleOutput {
    pub euler: EmbeddingDistribution,
    /// Genus distribution read off the all-untwisted reps.
    pub orientable: EmbeddingDistribution,
}

impl EulerOracleOutput {
    /// Nonorientable part, indexed by crosscap number (= Euler-genus).
    pub fn crosscap(&self) -> EmbeddingDistribution {
        let mut counts = self.euler.counts.clone();
        for (g, c) in self.orientable.counts.iter().enumerate() {
            counts[2 * g] -= c;
        }
        while counts.last().is_some_and(|c| c.is_zero()) {
            counts.pop();
        }
        EmbeddingDistribution { kind: DistKind::Crosscap, counts }
    }
}

/// Brute-force enumerator over rotation systems (and co-tree twists).
#[derive(Clone, Debug)]
pub struct Oracle {
    pub budget: u128,
    pub workers: Option<usize>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { budget: DEFAULT_BUDGET, workers: None }
    }
}

pub fn genus_distribution_oracle(g: &Graph) -> Result<EmbeddingDistribution> {
    Oracle::default().genus(g)
}

pub fn euler_distribution_oracle(g: &Graph) -> Result<EulerOracleOutput> {
    Oracle::default().euler(g)
}

struct Plan {
    arrangements: Vec<Vec<Vec<usize>>>,
    /// Vertices with more than one arrangement, most significant first.
    active: Vec<usize>,
    total: u128,
    cotree: Vec<usize>,
}

fn plan(g: &Graph) -> Plan {
    let arrangements: Vec<Vec<Vec<usize>>> = (0..g.vertex_count())
        .map(|v| {
            let darts = g.darts_at(v);
            match darts.split_first() {
                None => vec![Vec::new()],
                Some((&first, rest)) => rest
                    .iter()
                    .copied()
                    .permutations(rest.len())
                    .map(|p| std::iter::once(first).chain(p).collect())
                    .collect(),
            }
        })
        .collect();
    let active: Vec<usize> = (0..g.vertex_count()).filter(|&v| arrangements[v].len() > 1).collect();
    let total = active.iter().map(|&v| arrangements[v].len() as u128).product();
    let tree = g.spanning_tree();
    let cotree = (0..g.edge_count()).filter(|&e| !tree[e]).collect();
    Plan { arrangements, active, total, cotree }
}

fn apply(rep: &mut EmbeddingRep, rot: &[usize]) {
    for (i, &d) in rot.iter().enumerate() {
        let n = rot[(i + 1) % rot.len()];
        rep.next[d] = n;
        rep.prev[n] = d;
    }
}

impl Oracle {
    pub fn with_budget(budget: u128) -> Self {
        Oracle { budget, ..Self::default() }
    }

    fn check_budget(&self, required: &BigInt) -> Result<()> {
        let req = required.to_u128().unwrap_or(u128::MAX);
        if req > self.budget {
            return Err(Error::BudgetExceeded { required: req, budget: self.budget });
        }
        Ok(())
    }

    fn run<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match self.workers {
            Some(k) => rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map(|pool| pool.install(f))
                .unwrap_or_else(|_| panic!("could not build a pool of {k} workers")),
            None => f(),
        }
    }

    /// Fold `visit` over every canonical embedding of `g`.
    ///
    /// With `general = false` only rotation systems (all twists 0) are visited.
    /// Partial results are merged in index order, so the output is independent
    /// of scheduling.
    pub fn fold_embeddings<T, I, V, M>(&self, g: &Graph, general: bool, init: I, visit: V, merge: M) -> Result<T>
    where
        T: Send,
        I: Fn() -> T + Sync + Send,
        V: Fn(&mut T, &EmbeddingRep) + Sync + Send,
        M: Fn(T, T) -> T + Sync + Send,
    {
        g.require_connected()?;
        let required = if general { g.embedding_count() } else { g.rotation_count() };
        self.check_budget(&required)?;
        let plan = plan(g);
        let twist_masks: u64 = if general { 1u64 << plan.cotree.len() } else { 1 };
        let chunks = (plan.total as usize).clamp(1, 256);
        let per = plan.total.div_ceil(chunks as u128);
        let plan = &plan;
        let init = &init;
        let visit = &visit;
        let parts: Vec<T> = self.run(|| {
            (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let start = c as u128 * per;
                    let end = (start + per).min(plan.total);
                    let mut acc = init();
                    if start >= end {
                        return acc;
                    }
                    let mut rep = EmbeddingRep::identity(g);
                    let mut digits = vec![0usize; plan.active.len()];
                    let mut rem = start;
                    for (i, &v) in plan.active.iter().enumerate().rev() {
                        let r = plan.arrangements[v].len() as u128;
                        digits[i] = (rem % r) as usize;
                        rem /= r;
                    }
                    for (v, arr) in plan.arrangements.iter().enumerate() {
                        apply(&mut rep, &arr[0]);
                        let _ = v;
                    }
                    for (i, &v) in plan.active.iter().enumerate() {
                        apply(&mut rep, &plan.arrangements[v][digits[i]]);
                    }
                    let mut idx = start;
                    loop {
                        for mask in 0..twist_masks {
                            for (b, &e) in plan.cotree.iter().enumerate() {
                                rep.twist[e] = mask >> b & 1 == 1;
                            }
                            visit(&mut acc, &rep);
                        }
                        idx += 1;
                        if idx >= end {
                            break;
                        }
                        // Odometer: least significant digit is the last active vertex.
                        for i in (0..plan.active.len()).rev() {
                            let v = plan.active[i];
                            digits[i] += 1;
                            if digits[i] == plan.arrangements[v].len() {
                                digits[i] = 0;
                                apply(&mut rep, &plan.arrangements[v][0]);
                            } else {
                                apply(&mut rep, &plan.arrangements[v][digits[i]]);
                                break;
                            }
                        }
                    }
                    acc
                })
                .collect()
        });
        let mut it = parts.into_iter();
        let first = it.next().expect("at least one chunk");
        Ok(it.fold(first, &merge))
    }

    pub fn genus(&self, g: &Graph) -> Result<EmbeddingDistribution> {
        let v = g.vertex_count() as i64;
        let e = g.edge_count() as i64;
        let beta = g.betti();
        let counts = self.fold_embeddings(
            g,
            false,
            || (vec![0u64; beta / 2 + 1], Vec::<u32>::new()),
            |(hist, buf), rep| {
                let f = count_oriented_faces(rep, buf) as i64;
                let eg = 2 - v + e - f;
                hist[(eg / 2) as usize] += 1;
            },
            merge_hist,
        )?;
        Ok(EmbeddingDistribution::from_counts(DistKind::Genus, counts.0))
    }

    pub fn euler(&self, g: &Graph) -> Result<EulerOracleOutput> {
        let v = g.vertex_count() as i64;
        let e = g.edge_count() as i64;
        let beta = g.betti();
        let (all, ori, _) = self.fold_embeddings(
            g,
            true,
            || (vec![0u64; beta + 1], vec![0u64; beta / 2 + 1], Vec::<u32>::new()),
            |(all, ori, buf), rep| {
                let f = count_faces(rep, buf) as i64;
                let eg = (2 - v + e - f) as usize;
                all[eg] += 1;
                if rep.is_orientable() {
                    ori[eg / 2] += 1;
                }
            },
            |a, b| {
                let (x, _) = merge_hist((a.0, Vec::new()), (b.0, Vec::new()));
                let (y, _) = merge_hist((a.1, Vec::new()), (b.1, Vec::new()));
                (x, y, Vec::new())
            },
        )?;
        Ok(EulerOracleOutput {
            euler: EmbeddingDistribution::from_counts(DistKind::EulerGenus, all),
            orientable: EmbeddingDistribution::from_counts(DistKind::Genus, ori),
        })
    }
}

fn merge_hist(a: (Vec<u64>, Vec<u32>), b: (Vec<u64>, Vec<u32>)) -> (Vec<u64>, Vec<u32>) {
    let mut h = a.0;
    for (x, y) in h.iter_mut().zip(b.0) {
        *x += y;
    }
    (h, Vec::new())
}

/// Cycles of `sigma . tau` on darts (untwisted embeddings only).
pub(crate) fn count_oriented_faces(rep: &EmbeddingRep, seen: &mut Vec<u32>) -> usize {
    let n = rep.next.len();
    seen.clear();
    seen.resize(n, 0);
    let mut faces = 0;
    for s in 0..n {
        if seen[s] != 0 {
            continue;
        }
        faces += 1;
        let mut d = s;
        while seen[d] == 0 {
            seen[d] = 1;
            d = rep.next[d ^ 1];
        }
    }
    faces
}

/// Faces of a general embedding: self-paired orbits plus half the other orbits.
pub(crate) fn count_faces(rep: &EmbeddingRep, orbit: &mut Vec<u32>) -> usize {
    let n = rep.next.len() * 2;
    orbit.clear();
    orbit.resize(n, u32::MAX);
    let mut count = 0u32;
    let mut self_paired = 0usize;
    for s in 0..n {
        if orbit[s] != u32::MAX {
            continue;
        }
        let mut cur = s;
        while orbit[cur] == u32::MAX {
            orbit[cur] = count;
            cur = successor(&rep.next, &rep.prev, &rep.twist, cur);
        }
        let partner = opposite(&rep.next, &rep.prev, s);
        if orbit[partner] == count {
            self_paired += 1;
        }
        count += 1;
    }
    let count = count as usize;
    self_paired + (count - self_paired) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn poly(d: &EmbeddingDistribution) -> Vec<i64> {
        d.counts.iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn b2_genus_and_euler() {
        let g = named::doubled_cycle(1).unwrap();
        assert_eq!(poly(&genus_distribution_oracle(&g).unwrap()), vec![4, 2]);
        let e = euler_distribution_oracle(&g).unwrap();
        assert_eq!(poly(&e.euler), vec![4, 10, 10]);
        assert_eq!(poly(&e.orientable), vec![4, 2]);
    }

    #[test]
    fn dipole_three() {
        let g = named::dipole(3).unwrap();
        assert_eq!(poly(&genus_distribution_oracle(&g).unwrap()), vec![2, 2]);
    }

    #[test]
    fn two_cycle_euler() {
        let g = named::doubled_path(2).unwrap();
        assert_eq!(poly(&euler_distribution_oracle(&g).unwrap().euler), vec![1, 1]);
    }

    #[test]
    fn c2_squared() {
        let g = named::doubled_cycle(2).unwrap();
        assert_eq!(poly(&genus_distribution_oracle(&g).unwrap()), vec![6, 30]);
        assert_eq!(poly(&euler_distribution_oracle(&g).unwrap().euler), vec![6, 36, 126, 120]);
    }

    #[test]
    fn budget_is_enforced() {
        let g = named::doubled_cycle(4).unwrap();
        let err = Oracle::with_budget(100).genus(&g).unwrap_err();
        match err {
            Error::BudgetExceeded { required, budget } => {
                assert_eq!(required, 1296);
                assert_eq!(budget, 100);
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let g = named::doubled_cycle(3).unwrap();
        let a = Oracle { workers: Some(1), ..Oracle::default() }.euler(&g).unwrap();
        let b = Oracle { workers: Some(3), ..Oracle::default() }.euler(&g).unwrap();
        assert_eq!(a.euler, b.euler);
    }

    #[test]
    fn crosscap_split() {
        let g = named::doubled_cycle(1).unwrap();
        let e = euler_distribution_oracle(&g).unwrap();
        assert_eq!(poly(&e.crosscap()), vec![0, 10, 8]);
    }
}
