//! Randomized checks of the composition laws and the group-algebra identities.

use std::collections::HashMap;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::distributions::{bar_ring_from_partials, cactus_euler, ear_formula_euler, partial_pair_oracle, PartialPair};
use crate::error::{Error, Result};
use crate::graph::ops::{add_edge, amalgamate_with_map, attach_ear, bar_amalgamate, bar_ring, blow_up, disjoint_union, EarKind};
use crate::graph::random::{cactus, connected_multigraph, small_connected_multigraph};
use crate::graph::{factorial, GluingSpec, Graph, Oracle};
use crate::groupring::{cyclic_sum_element, face_element, face_element_size, GroupRingElem, Mode};
use crate::poly::IntPoly;

const FACE_BUDGET: u128 = 200_000;
const MODES: [Mode; 2] = [Mode::Genus, Mode::Euler];

/// Tally of one family of randomized cases.
#[derive(Clone, Debug, Default)]
pub struct LawTally {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl LawTally {
    fn new(name: &'static str) -> Self {
        LawTally { name, ..Self::default() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.passed() {
            format!("{} {}/{}", self.name, self.cases, self.cases)
        } else {
            format!("{} FAILED on {}", self.name, self.failures.join("; "))
        }
    }
}

fn total(o: &Oracle, g: &Graph, mode: Mode) -> Result<IntPoly> {
    Ok(match mode {
        Mode::Genus => o.genus(g)?.to_poly(),
        Mode::Euler => o.euler(g)?.euler.to_poly(),
    })
}

/// Random connected graph with `k` extra pendant vertices hung off random vertices.
fn with_pendants(rng: &mut ChaCha8Rng, k: usize) -> (Graph, Vec<usize>) {
    let mut g = small_connected_multigraph(rng, 3, 3, 400);
    let base = g.vertex_count();
    let mut tips = Vec::new();
    for _ in 0..k {
        let at = rng.gen_range(0..base);
        let tip = g.vertex_count();
        g = add_edge(&disjoint_union(&g, &Graph::new(1, vec![]).expect("point")), at, tip).expect("in range");
        tips.push(tip);
    }
    (g, tips)
}

/// `G'`: edge `e = (a, b)` of `g` replaced by pendant edges `u - a` and `b - v`.
fn break_edge(g: &Graph, e: usize) -> Result<(Graph, usize, usize)> {
    let (a, b) = g.edge(e);
    let n = g.vertex_count();
    let mut edges: Vec<(usize, usize)> = g.edges().iter().enumerate().filter(|&(i, _)| i != e).map(|(_, &p)| p).collect();
    edges.push((n, a));
    edges.push((b, n + 1));
    Ok((Graph::new(n + 2, edges)?, n, n + 1))
}

fn rotation_factor(d: usize) -> BigInt {
    BigInt::from(d.max(1))
}

/// Bar-amalgamation, bar-ring, ear and cactus laws against the oracle, and the
/// count identities on a random corpus.
pub fn composition_laws(rng: &mut ChaCha8Rng, instances: usize, corpus: usize) -> Result<Vec<LawTally>> {
    let o = Oracle::default();
    let mut bar = LawTally::new("bar-amalgamation product");
    for _ in 0..instances {
        let g = small_connected_multigraph(rng, 3, 3, 500);
        let h = small_connected_multigraph(rng, 3, 3, 500);
        let (u, v) = (rng.gen_range(0..g.vertex_count()), rng.gen_range(0..h.vertex_count()));
        let joined = bar_amalgamate(&g, u, &h, v)?;
        let scale = rotation_factor(g.degree(u)) * rotation_factor(h.degree(v));
        for mode in MODES {
            let want = (total(&o, &g, mode)? * total(&o, &h, mode)?).scale(&scale);
            let got = total(&o, &joined, mode)?;
            bar.record(got == want, || format!("{mode} {:?} at {u} / {:?} at {v}", g.edges(), h.edges()));
        }
    }
    let mut ring = LawTally::new("bar-ring partials");
    for _ in 0..instances {
        let parts: Vec<(Graph, usize, usize)> = (0..rng.gen_range(2..=3))
            .map(|_| {
                let (g, t) = with_pendants(rng, 2);
                (g, t[0], t[1])
            })
            .collect();
        let whole = bar_ring(&parts)?;
        for mode in MODES {
            let partials =
                parts.iter().map(|(g, u, v)| partial_pair_oracle(&o, g, *u, *v, mode)).collect::<Result<Vec<PartialPair>>>()?;
            let ok = bar_ring_from_partials(&partials)? == total(&o, &whole, mode)?;
            ring.record(ok, || format!("{mode} ring of {} parts {:?}", parts.len(), whole.edges()));
        }
    }
    let mut ear = LawTally::new("ear formula");
    for _ in 0..instances {
        let (base, (gp, u, v)) = loop {
            let g = small_connected_multigraph(rng, 3, 3, 200);
            if g.is_loop(0) {
                continue;
            }
            let broken = break_edge(&g, 0)?;
            if broken.0.is_connected() {
                break (g, broken);
            }
        };
        let pp = partial_pair_oracle(&o, &gp, u, v, Mode::Euler)?;
        let (r, s) = (rng.gen_range(0..=2u32), rng.gen_range(0..=1u32));
        let mut g = base.clone();
        for _ in 0..r {
            g = attach_ear(&g, 0, EarKind::Open)?;
        }
        for _ in 0..s {
            g = attach_ear(&g, 0, EarKind::Closed)?;
        }
        let ok = ear_formula_euler(&pp, r, s)? == total(&o, &g, Mode::Euler)?;
        ear.record(ok, || format!("{:?} r={r} s={s}", base.edges()));
    }
    let mut cac = LawTally::new("cactus formula");
    for _ in 0..instances {
        let blocks = rng.gen_range(1..=4);
        let c = cactus(rng, blocks);
        let ok = cactus_euler(&c)? == total(&o, &c, Mode::Euler)?;
        cac.record(ok, || format!("{:?}", c.edges()));
    }
    let mut counts = LawTally::new("count identities");
    for _ in 0..corpus {
        let g = small_connected_multigraph(rng, 5, 8, 60_000);
        let rot: BigInt = g.degrees().iter().map(|&d| factorial(d.saturating_sub(1))).product();
        let gamma = total(&o, &g, Mode::Genus)?.coeff_sum();
        let euler = total(&o, &g, Mode::Euler)?.coeff_sum();
        let ok = gamma == rot && euler == (&rot << g.betti());
        counts.record(ok, || format!("{:?}", g.edges()));
    }
    Ok(vec![bar, ring, ear, cac, counts])
}

fn random_labels(rng: &mut ChaCha8Rng, size: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..12).collect();
    pool.shuffle(rng);
    pool.truncate(size);
    pool.sort_unstable();
    pool
}

fn random_subset(rng: &mut ChaCha8Rng, set: &[usize]) -> Vec<usize> {
    set.iter().copied().filter(|_| rng.gen_bool(0.5)).collect()
}

fn random_perm_elem(rng: &mut ChaCha8Rng, support: &[usize], coeff: IntPoly) -> Result<GroupRingElem> {
    let mut image = support.to_vec();
    image.shuffle(rng);
    let map: HashMap<usize, usize> = support.iter().copied().zip(image).collect();
    GroupRingElem::from_label_map(support.to_vec(), |l| map[&l], coeff)
}

fn random_coeff(rng: &mut ChaCha8Rng) -> IntPoly {
    loop {
        let c = IntPoly::from_i64s(&[rng.gen_range(-3..=3), rng.gen_range(-3..=3)]).shift(rng.gen_range(-1..=1));
        if !c.is_zero() {
            return c;
        }
    }
}

fn random_elem(rng: &mut ChaCha8Rng, support: &[usize]) -> Result<GroupRingElem> {
    let mut e = GroupRingElem::zero(support.to_vec())?;
    for _ in 0..rng.gen_range(1..=4) {
        let c = random_coeff(rng);
        e = e.add(&random_perm_elem(rng, support, c)?)?;
    }
    Ok(e)
}

/// Small connected graph whose Euler-mode face element fits [`FACE_BUDGET`].
fn face_sized(rng: &mut ChaCha8Rng, max_vertices: usize, max_edges: usize) -> Graph {
    loop {
        let g = connected_multigraph(rng, max_vertices, max_edges);
        if face_element_size(&g, Mode::Euler) <= BigInt::from(FACE_BUDGET / 8) {
            return g;
        }
    }
}

fn nonisolated(g: &Graph) -> Vec<usize> {
    (0..g.vertex_count()).filter(|&v| g.degree(v) > 0).collect()
}

/// Face-projection commutation and composition, blow-up and amalgamation
/// factorization, each on `cases` random instances.
pub fn group_algebra_laws(rng: &mut ChaCha8Rng, cases: usize) -> Result<Vec<LawTally>> {
    let mut commute = LawTally::new("fproj commutation");
    let mut compose = LawTally::new("fproj composition");
    for _ in 0..cases {
        let size = rng.gen_range(2..=7);
        let e = random_labels(rng, size);
        let e1 = random_subset(rng, &e);
        let pi = random_elem(rng, &e)?;
        let sigma = random_perm_elem(rng, &e1, IntPoly::one())?;
        let lhs = sigma.lift(&e)?.multiply(&pi)?.fproj(&e1)?;
        let rhs = sigma.multiply(&pi.fproj(&e1)?)?;
        commute.record(lhs == rhs, || format!("E={e:?} E'={e1:?}\n{}", pi.dump()));
        let e2 = random_subset(rng, &e1);
        let direct = pi.fproj(&e2)?;
        let staged = pi.fproj(&e1)?.fproj(&e2)?;
        compose.record(direct == staged, || format!("E={e:?} E'={e1:?} E''={e2:?}"));
    }
    let mut blow = LawTally::new("blow-up factorization");
    for _ in 0..cases {
        let h = face_sized(rng, 3, 4);
        let cand = nonisolated(&h);
        let mut set = random_subset(rng, &cand);
        if set.is_empty() {
            set.push(*cand.choose(rng).expect("a graph with an edge"));
        }
        let blown = blow_up(&h, &set)?;
        let darts: Vec<Vec<usize>> = set.iter().map(|&u| h.darts_at(u).to_vec()).collect();
        for mode in MODES {
            let lhs = face_element(&h, mode, FACE_BUDGET)?;
            let rhs = cyclic_sum_element(&darts, mode)?.multiply(&face_element(&blown, mode, FACE_BUDGET)?)?;
            blow.record(lhs == rhs, || format!("{mode} {:?} U={set:?}", h.edges()));
        }
    }
    let mut amal = LawTally::new("amalgamation factorization");
    let mut done = 0;
    while done < cases {
        let g = face_sized(rng, 3, 3);
        let h = face_sized(rng, 3, 3);
        let (gu, hu) = (nonisolated(&g), nonisolated(&h));
        let k = rng.gen_range(1..=gu.len().min(hu.len()).min(2));
        let u1: Vec<usize> = gu.choose_multiple(rng, k).copied().collect();
        let u2: Vec<usize> = hu.choose_multiple(rng, k).copied().collect();
        let phi = GluingSpec::new(u1.iter().copied().zip(u2.iter().copied()).collect(), false)?;
        let (merged, map) = amalgamate_with_map(&g, Some(&h), &phi)?;
        if face_element_size(&merged, Mode::Euler) > BigInt::from(FACE_BUDGET) {
            continue;
        }
        done += 1;
        let off = g.vertex_count();
        let dart_off = g.dart_count();
        let merged_darts: Vec<Vec<usize>> = u2.iter().map(|&w| merged.darts_at(map[w + off]).to_vec()).collect();
        let (g_star, h_star) = (blow_up(&g, &u1)?, blow_up(&h, &u2)?);
        for mode in MODES {
            let shift = mode.labels_per_dart() * dart_off;
            let lhs = face_element(&merged, mode, FACE_BUDGET)?;
            let fg = face_element(&g_star, mode, FACE_BUDGET)?;
            let fh = face_element(&h_star, mode, FACE_BUDGET)?.relabel(|l| l + shift)?;
            let rhs = cyclic_sum_element(&merged_darts, mode)?.multiply(&fg.multiply(&fh)?)?;
            amal.record(lhs == rhs, || format!("{mode} {:?} * {:?} via {phi}", g.edges(), h.edges()));
        }
    }
    Ok(vec![commute, compose, blow, amal])
}

pub(crate) fn require(tallies: &[LawTally], minimum: usize) -> Result<()> {
    match tallies.iter().find(|t| t.cases < minimum) {
        Some(t) => Err(Error::Invalid(format!("{} ran only {} cases", t.name, t.cases))),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn broken_edge_has_two_pendants() {
        let c2 = crate::graph::named::cycle(2).unwrap();
        let (gp, u, v) = break_edge(&c2, 0).unwrap();
        assert_eq!((gp.degree(u), gp.degree(v), gp.edge_count()), (1, 1, 3));
    }

    #[test]
    fn a_few_group_algebra_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for t in group_algebra_laws(&mut rng, 6).unwrap() {
            assert!(t.passed(), "{}", t.summary());
        }
    }
}
