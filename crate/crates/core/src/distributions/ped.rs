use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::embedding::{EmbeddingRep, FaceLabels};
use crate::graph::ops::{add_edge, amalgamate_with_map};
use crate::graph::{named, GluingSpec, Graph, Oracle};
use crate::poly::IntPoly;

/// The ten face configurations at two marked degree-2 vertices `s`, `t`.
///
/// The first letter describes `s`, the second `t`: `d` means two distinct faces
/// at the vertex, `s` a single face. The suffix counts shared faces (`0`: none;
/// `'`: one; `''`: two), and for one face through both vertices it records the
/// corner pattern along that face (`1`: `uuvv`, `2`: `uvuv`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PedType {
    Dd0,
    Ds0,
    Sd0,
    Ss0,
    DdP,
    DdPP,
    DsP,
    SdP,
    Ss1,
    Ss2,
}

impl PedType {
    pub const ALL: [PedType; 10] = [
        PedType::Dd0,
        PedType::Ds0,
        PedType::Sd0,
        PedType::Ss0,
        PedType::DdP,
        PedType::DdPP,
        PedType::DsP,
        PedType::SdP,
        PedType::Ss1,
        PedType::Ss2,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            PedType::Dd0 => "dd0",
            PedType::Ds0 => "ds0",
            PedType::Sd0 => "sd0",
            PedType::Ss0 => "ss0",
            PedType::DdP => "dd'",
            PedType::DdPP => "dd''",
            PedType::DsP => "ds'",
            PedType::SdP => "sd'",
            PedType::Ss1 => "ss1",
            PedType::Ss2 => "ss2",
        }
    }

    pub fn from_name(s: &str) -> Option<PedType> {
        PedType::ALL.into_iter().find(|t| t.name() == s)
    }
}

impl fmt::Display for PedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Partial Euler-genus vector: one polynomial per [`PedType`], in `ALL` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PedVector(pub [IntPoly; 10]);

impl PedVector {
    pub fn zero() -> Self {
        PedVector(std::array::from_fn(|_| IntPoly::zero()))
    }

    pub fn get(&self, t: PedType) -> &IntPoly {
        &self.0[t.index()]
    }

    /// Sum of the ten components: the Euler-genus polynomial of the marked graph.
    pub fn total(&self) -> IntPoly {
        self.0.iter().fold(IntPoly::zero(), |acc, p| &acc + p)
    }
}

impl fmt::Display for PedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Vertex of degree 2 with its two darts.
fn marked_darts(g: &Graph, v: usize) -> Result<[usize; 2]> {
    g.check_vertex(v)?;
    match *g.darts_at(v) {
        [a, b] if a != (b ^ 1) => Ok([a, b]),
        [_, _] => Err(Error::InvalidGraph(format!("vertex {v} carries a loop"))),
        _ => Err(Error::InvalidGraph(format!("vertex {v} must have degree 2"))),
    }
}

/// Corner entered by a face-walk state: the corner after the returned dart.
fn corner_of_state(rep: &EmbeddingRep, state: usize) -> usize {
    let d = state >> 1;
    if state & 1 == 0 {
        rep.prev[d]
    } else {
        d
    }
}

/// Type of one embedding at the marked darts.
pub fn classify(rep: &EmbeddingRep, labels: &FaceLabels, s: [usize; 2], t: [usize; 2]) -> PedType {
    let fs = [labels.face_at_corner(s[0]), labels.face_at_corner(s[1])];
    let ft = [labels.face_at_corner(t[0]), labels.face_at_corner(t[1])];
    let s_two = fs[0] != fs[1];
    let t_two = ft[0] != ft[1];
    let shared = {
        let mut a = fs.to_vec();
        a.dedup();
        let mut b = ft.to_vec();
        b.dedup();
        a.iter().filter(|f| b.contains(f)).count()
    };
    match (s_two, t_two, shared) {
        (true, true, 0) => PedType::Dd0,
        (true, true, 1) => PedType::DdP,
        (true, true, _) => PedType::DdPP,
        (true, false, 0) => PedType::Ds0,
        (true, false, _) => PedType::DsP,
        (false, true, 0) => PedType::Sd0,
        (false, true, _) => PedType::SdP,
        (false, false, 0) => PedType::Ss0,
        (false, false, _) => {
            // read the corner pattern along one direction of the shared face
            let start = (s[0] << 1) | 1;
            let mut seen = Vec::with_capacity(4);
            let mut cur = start;
            loop {
                let c = corner_of_state(rep, cur);
                if (s.contains(&c) || t.contains(&c)) && !seen.contains(&c) {
                    seen.push(c);
                }
                cur = rep.successor(cur);
                if cur == start {
                    break;
                }
            }
            let at_s: Vec<bool> = seen.iter().map(|c| s.contains(c)).collect();
            if at_s.len() == 4 && at_s.windows(2).all(|w| w[0] != w[1]) {
                PedType::Ss2
            } else {
                PedType::Ss1
            }
        }
    }
}

fn euler_genus(g: &Graph, faces: usize) -> i64 {
    2 - g.vertex_count() as i64 + g.edge_count() as i64 - faces as i64
}

/// Partial Euler-genus vector of `(g, s, t)` by exhaustive classification.
pub fn ped_vector_oracle(oracle: &Oracle, g: &Graph, s: usize, t: usize) -> Result<PedVector> {
    if s == t {
        return Err(Error::InvalidGraph("marked vertices must differ".into()));
    }
    let (sd, td) = (marked_darts(g, s)?, marked_darts(g, t)?);
    let hists = oracle.fold_embeddings(
        g,
        true,
        || vec![Vec::<u64>::new(); 10],
        |acc, rep| {
            let labels = FaceLabels::compute(rep);
            let k = euler_genus(g, labels.face_count) as usize;
            let h = &mut acc[classify(rep, &labels, sd, td).index()];
            if h.len() <= k {
                h.resize(k + 1, 0);
            }
            h[k] += 1;
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                if x.len() < y.len() {
                    x.resize(y.len(), 0);
                }
                for (p, q) in x.iter_mut().zip(y) {
                    *p += q;
                }
            }
            a
        },
    )?;
    let mut v = PedVector::zero();
    for (i, h) in hists.iter().enumerate() {
        v.0[i] = IntPoly::from_coeffs(0, h.iter().map(|&n| BigInt::from(n)).collect());
    }
    Ok(v)
}

/// A graph with two marked degree-2 vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Marked {
    pub g: Graph,
    pub s: usize,
    pub t: usize,
}

impl Marked {
    pub fn new(g: Graph, s: usize, t: usize) -> Result<Self> {
        marked_darts(&g, s)?;
        marked_darts(&g, t)?;
        if s == t {
            return Err(Error::InvalidGraph("marked vertices must differ".into()));
        }
        Ok(Marked { g, s, t })
    }

    /// Doubled path on `n >= 2` vertices marked at its ends.
    pub fn doubled_path(n: usize) -> Result<Self> {
        Marked::new(named::doubled_path(n)?, 0, n - 1)
    }
}

/// `W(s, v) = G(s, t) * H(u, v)`: `t` identified with `u`. Returns the marked
/// result and the image of `h`'s vertex `u`.
pub fn amalgamate_marked(g: &Marked, h: &Marked) -> Result<Marked> {
    let (w, map) = amalgamate_with_map(&g.g, Some(&h.g), &GluingSpec::new(vec![(g.t, h.s)], false)?)?;
    let off = g.g.vertex_count();
    Marked::new(w, map[g.s], map[off + h.t])
}

/// `W` plus two parallel edges joining its marked vertices.
pub fn close_marked(w: &Marked) -> Result<Graph> {
    add_edge(&add_edge(&w.g, w.s, w.t)?, w.s, w.t)
}

/// The six rotations of the merged vertex of `W` built from one embedding of
/// each factor. `g_rep`'s darts keep their ids; `h_rep`'s are shifted by `2|E(G)|`.
pub fn amalgamated_embeddings(g: &Marked, g_rep: &EmbeddingRep, h: &Marked, h_rep: &EmbeddingRep) -> Vec<EmbeddingRep> {
    let off = g.g.dart_count();
    let mut next: Vec<usize> = g_rep.next.iter().copied().chain(h_rep.next.iter().map(|d| d + off)).collect();
    let mut prev: Vec<usize> = g_rep.prev.iter().copied().chain(h_rep.prev.iter().map(|d| d + off)).collect();
    let twist: Vec<bool> = g_rep.twist.iter().chain(&h_rep.twist).copied().collect();
    let [a, b] = g.g.darts_at(g.t).try_into().expect("degree 2");
    let [c, d] = h.g.darts_at(h.s).try_into().expect("degree 2");
    let (c, d) = (c + off, d + off);
    let mut out = Vec::with_capacity(6);
    for rest in [[b, c, d], [b, d, c], [c, b, d], [c, d, b], [d, b, c], [d, c, b]] {
        let cyc = [a, rest[0], rest[1], rest[2]];
        for i in 0..4 {
            next[cyc[i]] = cyc[(i + 1) % 4];
            prev[cyc[(i + 1) % 4]] = cyc[i];
        }
        out.push(EmbeddingRep { next: next.clone(), prev: prev.clone(), twist: twist.clone() });
    }
    out
}

/// The 144 embeddings of `W` plus a parallel pair `s -- t` extending one
/// embedding of `W`: six rotations at each marked vertex, four twist choices.
pub fn closed_embeddings(w: &Marked, rep: &EmbeddingRep) -> Vec<EmbeddingRep> {
    let n = w.g.dart_count();
    let (e1, e2) = (n, n + 2);
    let [a, b] = w.g.darts_at(w.s).try_into().expect("degree 2");
    let [c, d] = w.g.darts_at(w.t).try_into().expect("degree 2");
    let orders = |x: usize, y: usize, p: usize, q: usize| -> Vec<[usize; 4]> {
        [[y, p, q], [y, q, p], [p, y, q], [p, q, y], [q, y, p], [q, p, y]]
            .into_iter()
            .map(|r| [x, r[0], r[1], r[2]])
            .collect()
    };
    let mut base_next = rep.next.clone();
    let mut base_prev = rep.prev.clone();
    base_next.extend([0; 4]);
    base_prev.extend([0; 4]);
    let mut out = Vec::with_capacity(144);
    for os in orders(a, b, e1, e2) {
        for ot in orders(c, d, e1 + 1, e2 + 1) {
            let mut next = base_next.clone();
            let mut prev = base_prev.clone();
            for cyc in [os, ot] {
                for i in 0..4 {
                    next[cyc[i]] = cyc[(i + 1) % 4];
                    prev[cyc[(i + 1) % 4]] = cyc[i];
                }
            }
            for tw in 0..4u8 {
                let mut twist = rep.twist.clone();
                twist.extend([tw & 1 == 1, tw & 2 == 2]);
                out.push(EmbeddingRep { next: next.clone(), prev: prev.clone(), twist });
            }
        }
    }
    out
}

/// One transition: `multiplicity` embeddings of type `target`, Euler-genus
/// raised by `shift`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Transition {
    pub target: PedType,
    pub shift: i64,
    pub multiplicity: u64,
}

/// Amalgamation and closure tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionTables {
    /// `amalgamation[i][j]`: first factor of type `i`, second of type `j`.
    pub amalgamation: Vec<Vec<Vec<Transition>>>,
    /// Per type, the count of closed embeddings by Euler-genus shift.
    pub closure: Vec<BTreeMap<i64, u64>>,
}

fn face_labels_type(w: &Marked, rep: &EmbeddingRep) -> (PedType, i64) {
    let labels = FaceLabels::compute(rep);
    let sd = marked_darts(&w.g, w.s).expect("marked");
    let td = marked_darts(&w.g, w.t).expect("marked");
    (classify(rep, &labels, sd, td), euler_genus(&w.g, labels.face_count))
}

fn eg_of(g: &Graph, rep: &EmbeddingRep) -> i64 {
    euler_genus(g, FaceLabels::compute(rep).face_count)
}

/// Transitions produced by one embedding pair.
pub fn pair_transitions(g: &Marked, g_rep: &EmbeddingRep, h: &Marked, h_rep: &EmbeddingRep) -> Vec<Transition> {
    let w = amalgamate_marked(g, h).expect("valid marked graphs");
    let base = eg_of(&g.g, g_rep) + eg_of(&h.g, h_rep);
    let mut hist: BTreeMap<(PedType, i64), u64> = BTreeMap::new();
    for rep in amalgamated_embeddings(g, g_rep, h, h_rep) {
        let (ty, eg) = face_labels_type(&w, &rep);
        *hist.entry((ty, eg - base)).or_default() += 1;
    }
    hist.into_iter().map(|((target, shift), multiplicity)| Transition { target, shift, multiplicity }).collect()
}

/// Closure histogram produced by one embedding of `W`.
pub fn closure_shifts(w: &Marked, rep: &EmbeddingRep) -> BTreeMap<i64, u64> {
    let closed = close_marked(w).expect("valid marked graph");
    let base = eg_of(&w.g, rep);
    let mut hist = BTreeMap::new();
    for r in closed_embeddings(w, rep) {
        *hist.entry(eg_of(&closed, &r) - base).or_default() += 1;
    }
    hist
}

/// A witness embedding for one type.
#[derive(Clone, Debug)]
pub struct Witness {
    pub marked: Marked,
    pub rep: EmbeddingRep,
}

fn all_embeddings(g: &Graph) -> Vec<EmbeddingRep> {
    Oracle::default()
        .fold_embeddings(
            g,
            true,
            Vec::new,
            |acc, rep| acc.push(rep.clone()),
            |mut a, b| {
                a.extend(b);
                a
            },
        )
        .unwrap_or_default()
}

/// Connected multigraphs with `edges` edges on `vertices` vertices, edge lists in
/// lexicographic order.
fn multigraphs(vertices: usize, edges: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..vertices).flat_map(|a| (a..vertices).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; edges];
    loop {
        let list: Vec<(usize, usize)> = idx.iter().map(|&i| pairs[i]).collect();
        if let Ok(g) = Graph::new(vertices, list) {
            if g.is_connected() {
                out.push(g);
            }
        }
        // next nondecreasing index tuple
        let mut k = edges;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if idx[k] + 1 < pairs.len() {
                idx[k] += 1;
                for j in k + 1..edges {
                    idx[j] = idx[k];
                }
                break;
            }
        }
    }
}

/// Smallest witnesses: graphs with at most five edges, scanned by edge count,
/// then vertex count, then edge list, then marked pair and embedding order.
pub fn find_witnesses() -> Result<Vec<Witness>> {
    let mut found: Vec<Option<Witness>> = vec![None; 10];
    for e in 2..=5 {
        for v in 2..=e + 1 {
            for g in multigraphs(v, e) {
                let marks: Vec<usize> =
                    (0..v).filter(|&x| g.degree(x) == 2 && marked_darts(&g, x).is_ok()).collect();
                if marks.len() < 2 {
                    continue;
                }
                let reps = all_embeddings(&g);
                for &s in &marks {
                    for &t in &marks {
                        if s == t {
                            continue;
                        }
                        let m = Marked::new(g.clone(), s, t)?;
                        for rep in &reps {
                            let (ty, _) = face_labels_type(&m, rep);
                            if found[ty.index()].is_none() {
                                found[ty.index()] = Some(Witness { marked: m.clone(), rep: rep.clone() });
                            }
                        }
                    }
                }
                if found.iter().all(Option::is_some) {
                    return Ok(found.into_iter().map(|w| w.expect("found")).collect());
                }
            }
        }
    }
    let missing: Vec<&str> =
        PedType::ALL.iter().zip(&found).filter(|(_, w)| w.is_none()).map(|(t, _)| t.name()).collect();
    Err(Error::Invalid(format!("no witness with at most five edges for {}", missing.join(", "))))
}

static WITNESSES: OnceLock<std::result::Result<Vec<Witness>, String>> = OnceLock::new();

/// Cached [`find_witnesses`].
pub fn witnesses() -> Result<&'static [Witness]> {
    WITNESSES
        .get_or_init(|| find_witnesses().map_err(|e| e.to_string()))
        .as_deref()
        .map_err(|e| Error::Invalid(e.clone()))
}

/// Regenerate both tables by face tracing over witness embeddings.
pub fn derive_transition_tables() -> Result<TransitionTables> {
    let wit = witnesses()?;
    let amalgamation: Vec<Vec<Vec<Transition>>> = (0..10)
        .into_par_iter()
        .map(|i| (0..10).map(|j| pair_transitions(&wit[i].marked, &wit[i].rep, &wit[j].marked, &wit[j].rep)).collect())
        .collect();
    let closure = wit.par_iter().map(|w| closure_shifts(&w.marked, &w.rep)).collect();
    Ok(TransitionTables { amalgamation, closure })
}

static TABLES: OnceLock<std::result::Result<TransitionTables, String>> = OnceLock::new();

/// Cached [`derive_transition_tables`].
pub fn derived_tables() -> Result<&'static TransitionTables> {
    TABLES
        .get_or_init(|| derive_transition_tables().map_err(|e| e.to_string()))
        .as_ref()
        .map_err(|e| Error::Invalid(e.clone()))
}

impl TransitionTables {
    /// Row sums of the amalgamation table (each should be 6).
    pub fn amalgamation_row_sums(&self) -> Vec<Vec<u64>> {
        self.amalgamation.iter().map(|r| r.iter().map(|c| c.iter().map(|t| t.multiplicity).sum()).collect()).collect()
    }

    /// Closure rows as polynomials `sum count x^shift`.
    pub fn closure_column(&self) -> Vec<IntPoly> {
        self.closure
            .iter()
            .map(|h| IntPoly::from_terms(h.iter().map(|(&k, &n)| (k, BigInt::from(n)))))
            .collect()
    }

    /// Transfer matrix `M[i][k]` for appending a graph with vector `h`.
    pub fn transfer_matrix(&self, h: &PedVector) -> Vec<Vec<IntPoly>> {
        let mut m = vec![vec![IntPoly::zero(); 10]; 10];
        for (i, row) in self.amalgamation.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                if h.0[j].is_zero() {
                    continue;
                }
                for t in cell {
                    let term = IntPoly::monomial(BigInt::from(t.multiplicity), t.shift) * h.0[j].clone();
                    m[i][t.target.index()] = &m[i][t.target.index()] + &term;
                }
            }
        }
        m
    }

    pub fn to_json(&self) -> String {
        let mut amal = serde_json::Map::new();
        for (i, row) in self.amalgamation.iter().enumerate() {
            let mut inner = serde_json::Map::new();
            for (j, cell) in row.iter().enumerate() {
                inner.insert(PedType::ALL[j].name().into(), serde_json::to_value(cell).expect("serializable"));
            }
            amal.insert(PedType::ALL[i].name().into(), inner.into());
        }
        let mut close = serde_json::Map::new();
        for (i, h) in self.closure.iter().enumerate() {
            let m: serde_json::Map<String, serde_json::Value> = h.iter().map(|(k, n)| (k.to_string(), (*n).into())).collect();
            close.insert(PedType::ALL[i].name().into(), m.into());
        }
        serde_json::to_string_pretty(&serde_json::json!({ "amalgamation": amal, "closure": close })).expect("json")
    }
}

/// Format one cell as `4dd0 + 2ss2[+2]`, shifts in brackets.
pub fn format_cell(cell: &[Transition]) -> String {
    cell.iter()
        .map(|t| {
            let m = if t.multiplicity == 1 { String::new() } else { t.multiplicity.to_string() };
            if t.shift == 0 {
                format!("{m}{}", t.target)
            } else {
                format!("{m}{}[{:+}]", t.target, t.shift)
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Bilinear composition: the vector of `G * H` from those of `G` and `H`.
pub fn ped_compose(a: &PedVector, b: &PedVector, tables: &TransitionTables) -> PedVector {
    let mut out = PedVector::zero();
    for (i, ai) in a.0.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.0.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let prod = ai * bj;
            for t in &tables.amalgamation[i][j] {
                let k = t.target.index();
                out.0[k].add_scaled_shifted(&prod, &BigInt::from(t.multiplicity), t.shift);
            }
        }
    }
    out
}

/// Euler-genus polynomial after joining the marked vertices by a parallel pair.
pub fn ped_close(v: &PedVector, tables: &TransitionTables) -> IntPoly {
    let col = tables.closure_column();
    v.0.iter().zip(&col).fold(IntPoly::zero(), |acc, (p, c)| &acc + &(p * c))
}

/// `E(C_n^2)` for `n >= 2`: the vector of `P_2^2`, composed `n - 2` times with
/// itself, then closed.
pub fn doubled_cycle_via_ped(n: usize, tables: &TransitionTables) -> Result<IntPoly> {
    if n < 2 {
        return Err(Error::Invalid("the pEd pipeline starts at n = 2".into()));
    }
    let p2 = doubled_edge_vector();
    let mut v = p2.clone();
    for _ in 2..n {
        v = ped_compose(&v, &p2, tables);
    }
    Ok(ped_close(&v, tables))
}

/// Vector of `P_2^2`: `dd''` on the plane, `ss2` on the projective plane.
pub fn doubled_edge_vector() -> PedVector {
    let mut v = PedVector::zero();
    v.0[PedType::DdPP.index()] = IntPoly::one();
    v.0[PedType::Ss2.index()] = IntPoly::x_pow(1);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oracle() -> Oracle {
        Oracle::default()
    }

    #[test]
    fn doubled_edge() {
        let m = Marked::doubled_path(2).unwrap();
        assert_eq!(ped_vector_oracle(&oracle(), &m.g, m.s, m.t).unwrap(), doubled_edge_vector());
    }

    #[test]
    fn three_vertex_doubled_path() {
        let m = Marked::doubled_path(3).unwrap();
        let v = ped_vector_oracle(&oracle(), &m.g, m.s, m.t).unwrap();
        assert_eq!(v.total(), IntPoly::from_i64s(&[4, 10, 10]));
    }

    #[test]
    fn rejects_bad_marks() {
        let g = named::dipole(3).unwrap();
        assert!(ped_vector_oracle(&oracle(), &g, 0, 1).is_err());
        let b = Graph::new(2, vec![(0, 1), (1, 1)]).unwrap();
        assert!(Marked::new(b, 0, 1).is_err());
    }

    #[test]
    fn amalgamated_and_closed_counts() {
        let m = Marked::doubled_path(2).unwrap();
        let reps = all_embeddings(&m.g);
        assert_eq!(amalgamated_embeddings(&m, &reps[0], &m, &reps[1]).len(), 6);
        assert_eq!(closed_embeddings(&m, &reps[0]).len(), 144);
    }

    fn small_marked() -> Vec<Marked> {
        let mut out: Vec<Marked> = (2..=3).map(|n| Marked::doubled_path(n).unwrap()).collect();
        out.push(Marked::new(Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap(), 1, 3).unwrap());
        out.push(Marked::new(Graph::new(3, vec![(0, 0), (0, 1), (0, 2), (1, 2)]).unwrap(), 1, 2).unwrap());
        out.push(Marked::new(Graph::new(2, vec![(0, 1), (0, 1)]).unwrap(), 1, 0).unwrap());
        out
    }

    #[test]
    fn table_invariants() {
        let t = derived_tables().unwrap();
        for row in t.amalgamation_row_sums() {
            assert!(row.iter().all(|&s| s == 6));
        }
        for h in &t.closure {
            assert_eq!(h.values().sum::<u64>(), 144);
        }
    }

    #[test]
    fn composition_with_doubled_edge_matches_oracle() {
        let o = oracle();
        let t = derived_tables().unwrap();
        let p2 = Marked::doubled_path(2).unwrap();
        for g in small_marked() {
            for (a, b) in [(&g, &p2), (&p2, &g)] {
                let w = amalgamate_marked(a, b).unwrap();
                let direct = ped_vector_oracle(&o, &w.g, w.s, w.t).unwrap();
                let va = ped_vector_oracle(&o, &a.g, a.s, a.t).unwrap();
                let vb = ped_vector_oracle(&o, &b.g, b.s, b.t).unwrap();
                assert_eq!(ped_compose(&va, &vb, t), direct, "{:?} * {:?}", a.g.edges(), b.g.edges());
            }
        }
    }

    #[test]
    fn types_do_not_determine_general_composition() {
        let o = oracle();
        let t = derived_tables().unwrap();
        let p3 = Marked::doubled_path(3).unwrap();
        let w = amalgamate_marked(&p3, &p3).unwrap();
        let v3 = ped_vector_oracle(&o, &p3.g, p3.s, p3.t).unwrap();
        let direct = ped_vector_oracle(&o, &w.g, w.s, w.t).unwrap();
        let composed = ped_compose(&v3, &v3, t);
        assert_ne!(composed, direct);
        assert_eq!(composed.total().coeff_sum(), direct.total().coeff_sum());
    }

    #[test]
    fn closure_matches_oracle() {
        let o = oracle();
        let t = derived_tables().unwrap();
        for m in small_marked() {
            let v = ped_vector_oracle(&o, &m.g, m.s, m.t).unwrap();
            let closed = close_marked(&m).unwrap();
            assert_eq!(ped_close(&v, t), o.euler(&closed).unwrap().euler.to_poly(), "{:?}", m.g.edges());
        }
        assert!(ped_close(&PedVector::zero(), t).is_zero());
    }

    #[test]
    fn pipeline_reproduces_oracle_cycles() {
        let o = oracle();
        let t = derived_tables().unwrap();
        assert_eq!(doubled_cycle_via_ped(2, t).unwrap(), IntPoly::from_i64s(&[6, 36, 126, 120]));
        for n in 3..=5 {
            let direct = o.euler(&named::doubled_cycle(n).unwrap()).unwrap().euler.to_poly();
            assert_eq!(doubled_cycle_via_ped(n, t).unwrap(), direct);
        }
        assert!(doubled_cycle_via_ped(1, t).is_err());
    }

    #[test]
    fn three_vertex_vector() {
        let m = Marked::doubled_path(3).unwrap();
        let v = ped_vector_oracle(&oracle(), &m.g, m.s, m.t).unwrap();
        let composed = ped_compose(&doubled_edge_vector(), &doubled_edge_vector(), derived_tables().unwrap());
        assert_eq!(v, composed);
        assert_eq!(v.total().coeff_sum(), 24.into());
    }
}
