use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::embedding::FaceLabels;
use crate::graph::{factorial, Graph, Oracle};
use crate::groupring::Mode;
use crate::poly::IntPoly;

/// Partial distributions of a graph with two marked pendant vertices `u`, `v`:
/// `d` counts embeddings where the faces at `u` and `v` differ, `s` those where
/// they coincide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialPair {
    pub mode: Mode,
    pub d: IntPoly,
    pub s: IntPoly,
}

impl PartialPair {
    pub fn new(mode: Mode, d: IntPoly, s: IntPoly) -> Self {
        PartialPair { mode, d, s }
    }

    /// `D + S`, the full distribution.
    pub fn total(&self) -> IntPoly {
        &self.d + &self.s
    }
}

fn x() -> IntPoly {
    IntPoly::x_pow(1)
}

fn c(n: i64) -> IntPoly {
    IntPoly::constant(BigInt::from(n))
}

/// Embedding exponent of one embedding: genus in genus mode, Euler-genus otherwise.
pub(crate) fn exponent(g: &Graph, faces: usize, mode: Mode) -> usize {
    let eg = 2 + g.edge_count() as i64 - g.vertex_count() as i64 - faces as i64;
    match mode {
        Mode::Genus => (eg / 2) as usize,
        Mode::Euler => eg as usize,
    }
}

fn add_at(hist: &mut Vec<u64>, k: usize) {
    if hist.len() <= k {
        hist.resize(k + 1, 0);
    }
    hist[k] += 1;
}

pub(crate) fn hist_to_poly(h: &[u64]) -> IntPoly {
    IntPoly::from_coeffs(0, h.iter().map(|&n| BigInt::from(n)).collect())
}

pub(crate) fn merge_hists<const K: usize>(mut a: [Vec<u64>; K], b: [Vec<u64>; K]) -> [Vec<u64>; K] {
    for (x, y) in a.iter_mut().zip(b) {
        if x.len() < y.len() {
            x.resize(y.len(), 0);
        }
        for (p, q) in x.iter_mut().zip(y) {
            *p += q;
        }
    }
    a
}

/// Classify every embedding of `(g, u, v)` by whether the faces at the two
/// pendant vertices coincide.
pub fn partial_pair_oracle(oracle: &Oracle, g: &Graph, u: usize, v: usize, mode: Mode) -> Result<PartialPair> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v || g.degree(u) != 1 || g.degree(v) != 1 {
        return Err(Error::InvalidGraph(format!("vertices {u} and {v} must be distinct pendant vertices")));
    }
    let (du, dv) = (g.darts_at(u)[0], g.darts_at(v)[0]);
    let [d, s] = oracle.fold_embeddings(
        g,
        mode == Mode::Euler,
        || [Vec::new(), Vec::new()],
        |acc, rep| {
            let labels = FaceLabels::compute(rep);
            let k = exponent(g, labels.face_count, mode);
            let same = labels.face_at_corner(du) == labels.face_at_corner(dv);
            add_at(&mut acc[same as usize], k);
        },
        merge_hists,
    )?;
    Ok(PartialPair::new(mode, hist_to_poly(&d), hist_to_poly(&s)))
}

/// Ladder partials indexed by added rungs: index `n` is the ladder with
/// `n + 2` rungs, `d`/`s` split by whether an end rung borders two faces or one.
///
/// Genus: `D_n = 2 D_{n-1} + 4 S_{n-1}`, `S_n = 2x D_{n-1}`, `D_0 = 1`, `S_0 = 0`.
/// Euler: `D_n = 2 D_{n-1} + 4 S_{n-1}`, `S_n = (2x + 4x^2) D_{n-1} + 4x S_{n-1}`,
/// `D_0 = 1`, `S_0 = x`.
pub fn ladder_partials(n: usize, mode: Mode) -> PartialPair {
    let (mut d, mut s) = match mode {
        Mode::Genus => (IntPoly::one(), IntPoly::zero()),
        Mode::Euler => (IntPoly::one(), x()),
    };
    for _ in 0..n {
        let nd = &(&d * &c(2)) + &(&s * &c(4));
        let ns = match mode {
            Mode::Genus => &d * &IntPoly::from_i64s(&[0, 2]),
            Mode::Euler => &(&d * &IntPoly::from_i64s(&[0, 2, 4])) + &(&s * &IntPoly::from_i64s(&[0, 4])),
        };
        d = nd;
        s = ns;
    }
    PartialPair::new(mode, d, s)
}

/// Partials of the half-open ladder `HL_n` (`n >= 1`) with its two pendant vertices:
/// `D = 2 D_{n-2}`, `S = 4 S_{n-2} + 2 D_{n-2}`; `HL_1` is a path with one face.
pub fn half_ladder_partials(n: usize, mode: Mode) -> Result<PartialPair> {
    match n {
        0 => Err(Error::Invalid("half-open ladders start at one rung".into())),
        1 => Ok(PartialPair::new(mode, IntPoly::zero(), IntPoly::one())),
        _ => {
            let l = ladder_partials(n - 2, mode);
            Ok(PartialPair::new(mode, &l.d * &c(2), &(&l.s * &c(4)) + &(&l.d * &c(2))))
        }
    }
}

/// Closed form of the genus partials of `HL_n`, normalized so that it agrees with
/// [`half_ladder_partials`]: `D = sum C(n-2-k, k) 2^(n+k-1) x^k` and
/// `S = sum C(n-1-k, k) 2^(n+k-1) x^k`.
pub fn half_ladder_closed_form(n: usize) -> Result<PartialPair> {
    if n < 2 {
        return half_ladder_partials(n, Mode::Genus);
    }
    let binom = |a: usize, b: usize| -> BigInt {
        if b > a {
            return BigInt::zero();
        }
        factorial(a) / (factorial(b) * factorial(a - b))
    };
    let pow2 = |e: usize| BigInt::one() << e;
    let m = n - 2;
    let d = IntPoly::from_terms((0..=m / 2).map(|k| (k as i64, binom(m - k, k) * pow2(n + k - 1))));
    let s = IntPoly::from_terms((0..=m.div_ceil(2)).map(|k| (k as i64, binom(m + 1 - k, k) * pow2(n + k - 1))));
    Ok(PartialPair::new(Mode::Genus, d, s))
}

/// Distribution of a bar-ring from the partials of its parts.
///
/// Genus: `x prod G_i + (1 - x) prod S_i`. Euler: `2x^2 prod E_i + (1 + x - 2x^2) prod S_i`.
pub fn bar_ring_from_partials(parts: &[PartialPair]) -> Result<IntPoly> {
    let Some(first) = parts.first() else {
        return Err(Error::Invalid("a bar-ring needs at least one part".into()));
    };
    let mode = first.mode;
    if parts.iter().any(|p| p.mode != mode) {
        return Err(Error::Invalid("bar-ring parts mix genus and Euler-genus partials".into()));
    }
    let all = parts.iter().fold(IntPoly::one(), |acc, p| &acc * &p.total());
    let same = parts.iter().fold(IntPoly::one(), |acc, p| &acc * &p.s);
    let (a, b) = match mode {
        Mode::Genus => (x(), IntPoly::from_i64s(&[1, -1])),
        Mode::Euler => (IntPoly::from_i64s(&[0, 0, 2]), IntPoly::from_i64s(&[1, 1, -2])),
    };
    Ok(&(&a * &all) + &(&b * &same))
}

/// Euler-genus polynomial of `G` with `r` open and `s` closed ears attached
/// serially to an edge, from the partials of `G'` (the edge broken into two
/// pendant edges).
pub fn ear_formula_euler(g_prime: &PartialPair, r: u32, s: u32) -> Result<IntPoly> {
    if g_prime.mode != Mode::Euler {
        return Err(Error::Invalid("ear formula needs Euler-genus partials".into()));
    }
    let p = IntPoly::from_i64s(&[0, 0, 2])
        * g_prime.total()
        * IntPoly::from_i64s(&[4, 4]).pow(r)
        * IntPoly::from_i64s(&[6, 6]).pow(s);
    let q = IntPoly::from_i64s(&[1, 1, -2])
        * g_prime.s.clone()
        * IntPoly::from_i64s(&[2, 4]).pow(r)
        * IntPoly::from_i64s(&[4, 6]).pow(s);
    Ok(p + q)
}

/// Partials of the open-ear gadget `u - x = y - v` (doubled middle edge).
pub fn open_ear_gadget() -> (Graph, usize, usize) {
    (Graph::new(4, vec![(0, 1), (1, 2), (1, 2), (2, 3)]).expect("gadget"), 0, 3)
}

/// Partials of the closed-ear gadget `u - x - v` with a loop at `x`.
pub fn closed_ear_gadget() -> (Graph, usize, usize) {
    (Graph::new(3, vec![(0, 1), (1, 1), (1, 2)]).expect("gadget"), 0, 2)
}

/// Bridges of `g`.
fn bridges(g: &Graph) -> Vec<bool> {
    let base = g.component_count();
    (0..g.edge_count())
        .map(|e| {
            if g.is_loop(e) {
                return false;
            }
            let rest: Vec<(usize, usize)> =
                g.edges().iter().enumerate().filter(|&(i, _)| i != e).map(|(_, &p)| p).collect();
            Graph::new(g.vertex_count(), rest).map(|h| h.component_count() > base).unwrap_or(false)
        })
        .collect()
}

/// Connected graph whose cycles are pairwise vertex-disjoint: after removing
/// bridges every vertex has degree 0 or 2.
pub fn is_cactus(g: &Graph) -> bool {
    if !g.is_connected() {
        return false;
    }
    let br = bridges(g);
    let mut deg = vec![0usize; g.vertex_count()];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if !br[e] {
            deg[a] += 1;
            deg[b] += 1;
        }
    }
    deg.iter().all(|&d| d == 0 || d == 2)
}

/// Euler-genus polynomial of a cactus: `(1 + x)^beta prod (d_v - 1)!`.
///
/// Counting every twist assignment instead of one per equivalence class scales
/// this by `2^(|E| - beta)`; see [`cactus_euler_all_twists`].
pub fn cactus_euler(c: &Graph) -> Result<IntPoly> {
    if !is_cactus(c) {
        return Err(Error::InvalidGraph("graph has two cycles sharing a vertex, or is disconnected".into()));
    }
    let rot: BigInt = c.degrees().iter().map(|&d| factorial(d.saturating_sub(1))).product();
    Ok(IntPoly::from_i64s(&[1, 1]).pow(c.betti() as u32) * IntPoly::constant(rot))
}

/// `2^(|E| - beta) (1 + x)^beta prod (d_v - 1)!`: the cactus polynomial with all
/// `2^|E|` twist assignments counted.
pub fn cactus_euler_all_twists(c: &Graph) -> Result<IntPoly> {
    let scale = BigInt::one() << (c.edge_count() - c.betti());
    Ok(cactus_euler(c)?.scale(&scale))
}

/// Distribution of a tree-like composition (successive bar-amalgamations): the
/// product of the parts, normalization tracked by the caller.
pub fn tree_like_compose(parts: &[IntPoly]) -> Result<IntPoly> {
    if parts.is_empty() {
        return Err(Error::Invalid("nothing to compose".into()));
    }
    Ok(parts.iter().fold(IntPoly::one(), |acc, p| &acc * p))
}

/// Star-ladder `SL_alpha` split as `P + Q` with `P` the product term of the
/// bar-ring formula and `Q` the correction (`Q(1) = 0`).
pub fn star_ladder_split(alpha: &[usize], mode: Mode) -> Result<(IntPoly, IntPoly)> {
    let parts = alpha.iter().map(|&a| half_ladder_partials(a, mode)).collect::<Result<Vec<_>>>()?;
    if parts.is_empty() {
        return Err(Error::Invalid("a star-ladder needs at least one rung count".into()));
    }
    let all = parts.iter().fold(IntPoly::one(), |acc, p| &acc * &p.total());
    let same = parts.iter().fold(IntPoly::one(), |acc, p| &acc * &p.s);
    Ok(match mode {
        Mode::Genus => (&x() * &all, &IntPoly::from_i64s(&[1, -1]) * &same),
        Mode::Euler => (&IntPoly::from_i64s(&[0, 0, 2]) * &all, &IntPoly::from_i64s(&[1, 1, -2]) * &same),
    })
}

/// Upper bound `(sum |Q_k| + Q(1)) / (P(1) + Q(1))` on the total-variation distance
/// between the laws with generating functions `P` and `P + Q`.
pub fn perturbation_bound(p: &IntPoly, q: &IntPoly) -> Result<BigRational> {
    let total = p.coeff_sum() + q.coeff_sum();
    if total.is_zero() || !p.has_nonnegative_coeffs() || !(p + q).has_nonnegative_coeffs() {
        return Err(Error::Invalid("P and P + Q must have nonnegative coefficients and nonzero mass".into()));
    }
    let abs: BigInt = q.terms().map(|(_, c)| c.abs()).sum();
    Ok(BigRational::new(abs + q.coeff_sum(), total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::graph::ops::{attach_ear, bar_ring, EarKind};

    fn oracle_total(g: &Graph, mode: Mode) -> IntPoly {
        let o = Oracle::default();
        match mode {
            Mode::Genus => o.genus(g).unwrap().to_poly(),
            Mode::Euler => o.euler(g).unwrap().euler.to_poly(),
        }
    }

    #[test]
    fn path_has_one_face() {
        let (g, u, v) = named::half_open_ladder(1).unwrap();
        for mode in [Mode::Genus, Mode::Euler] {
            let p = partial_pair_oracle(&Oracle::default(), &g, u, v, mode).unwrap();
            assert_eq!(p, PartialPair::new(mode, IntPoly::zero(), IntPoly::one()));
        }
    }

    #[test]
    fn ear_gadgets() {
        let o = Oracle::default();
        let (a, u, v) = open_ear_gadget();
        let p = partial_pair_oracle(&o, &a, u, v, Mode::Euler).unwrap();
        assert_eq!((p.d, p.s), (IntPoly::from_i64s(&[2]), IntPoly::from_i64s(&[2, 4])));
        let (b, u, v) = closed_ear_gadget();
        let p = partial_pair_oracle(&o, &b, u, v, Mode::Euler).unwrap();
        assert_eq!((p.d, p.s), (IntPoly::from_i64s(&[2]), IntPoly::from_i64s(&[4, 6])));
    }

    #[test]
    fn half_ladders_match_oracle() {
        let o = Oracle::default();
        for n in 1..=4 {
            let (g, u, v) = named::half_open_ladder(n).unwrap();
            for mode in [Mode::Genus, Mode::Euler] {
                let want = partial_pair_oracle(&o, &g, u, v, mode).unwrap();
                assert_eq!(half_ladder_partials(n, mode).unwrap(), want, "HL_{n} {mode}");
            }
            assert_eq!(half_ladder_closed_form(n).unwrap(), half_ladder_partials(n, Mode::Genus).unwrap());
        }
    }

    #[test]
    fn ladder_totals() {
        for n in 0..8u32 {
            let p = ladder_partials(n as usize, Mode::Euler);
            let eight = BigInt::from(8).pow(n);
            let minus_two = BigInt::from(-2).pow(n);
            assert_eq!(p.d.coeff_sum(), (BigInt::from(4) * &eight + &minus_two) / 5);
            assert_eq!(p.s.coeff_sum(), (BigInt::from(6) * &eight - &minus_two) / 5);
        }
        let g = ladder_partials(1, Mode::Genus);
        assert_eq!((g.d, g.s), (IntPoly::from_i64s(&[2]), IntPoly::from_i64s(&[0, 2])));
    }

    #[test]
    fn bar_rings_match_oracle() {
        let o = Oracle::default();
        for sig in [vec![1, 1], vec![2, 1], vec![1, 1, 1], vec![2, 2], vec![3]] {
            let parts: Vec<(Graph, usize, usize)> =
                sig.iter().map(|&n| named::half_open_ladder(n).unwrap()).collect();
            let ring = bar_ring(&parts).unwrap();
            for mode in [Mode::Genus, Mode::Euler] {
                let partials: Vec<PartialPair> =
                    parts.iter().map(|(g, u, v)| partial_pair_oracle(&o, g, *u, *v, mode).unwrap()).collect();
                assert_eq!(bar_ring_from_partials(&partials).unwrap(), oracle_total(&ring, mode), "{sig:?} {mode}");
            }
        }
    }

    #[test]
    fn ear_formula_matches_oracle() {
        let two_cycle = named::cycle(2).unwrap();
        let g_prime = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let pp = partial_pair_oracle(&Oracle::default(), &g_prime, 0, 3, Mode::Euler).unwrap();
        for (r, s) in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)] {
            let mut g = two_cycle.clone();
            for _ in 0..r {
                g = attach_ear(&g, 0, EarKind::Open).unwrap();
            }
            for _ in 0..s {
                g = attach_ear(&g, 0, EarKind::Closed).unwrap();
            }
            assert_eq!(ear_formula_euler(&pp, r, s).unwrap(), oracle_total(&g, Mode::Euler), "r={r} s={s}");
        }
    }

    #[test]
    fn cactus_forms() {
        let b1 = Graph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(cactus_euler(&b1).unwrap(), IntPoly::from_i64s(&[1, 1]));
        let k2 = named::path(2).unwrap();
        assert_eq!(cactus_euler(&k2).unwrap(), IntPoly::one());
        assert_eq!(cactus_euler_all_twists(&k2).unwrap(), c(2));
        let triangles = Graph::new(7, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]).unwrap();
        assert!(is_cactus(&triangles));
        assert_eq!(cactus_euler(&triangles).unwrap(), oracle_total(&triangles, Mode::Euler));
        assert!(!is_cactus(&named::dipole(3).unwrap()));
        assert!(cactus_euler(&named::bouquet(2).unwrap()).is_err());
    }

    #[test]
    fn tree_like_square() {
        let b2 = IntPoly::from_i64s(&[4, 2]);
        assert_eq!(tree_like_compose(&[b2.clone(), b2]).unwrap(), IntPoly::from_i64s(&[16, 16, 4]));
    }

    #[test]
    fn star_ladder_split_matches_oracle() {
        for mode in [Mode::Genus, Mode::Euler] {
            let (p, q) = star_ladder_split(&[1, 2], mode).unwrap();
            assert!(q.coeff_sum().is_zero());
            let parts: Vec<(Graph, usize, usize)> = [1, 2].iter().map(|&n| named::half_open_ladder(n).unwrap()).collect();
            let g = bar_ring(&parts).unwrap();
            assert_eq!(&p + &q, oracle_total(&g, mode));
        }
    }

    fn exact_tv(p: &IntPoly, r: &IntPoly) -> BigRational {
        let (pt, rt) = (p.coeff_sum(), r.coeff_sum());
        let lo = p.low_degree().unwrap().min(r.low_degree().unwrap());
        let hi = p.degree().unwrap().max(r.degree().unwrap());
        let sum = (lo..=hi).fold(BigRational::zero(), |acc, k| {
            acc + (BigRational::new(p.coeff(k), pt.clone()) - BigRational::new(r.coeff(k), rt.clone())).abs()
        });
        sum / BigRational::from_integer(2.into())
    }

    #[test]
    fn perturbation_bound_dominates_tv() {
        for mode in [Mode::Genus, Mode::Euler] {
            let mut last = None;
            for k in 2..=6 {
                let (p, q) = star_ladder_split(&vec![2; k], mode).unwrap();
                let bound = perturbation_bound(&p, &q).unwrap();
                assert!(exact_tv(&p, &(&p + &q)) <= bound);
                if let Some(prev) = last {
                    assert!(bound < prev);
                }
                last = Some(bound);
            }
        }
    }
}
