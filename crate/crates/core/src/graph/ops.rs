//! Graph constructions: bar-amalgamation, bar-rings, vertex amalgamation,
//! blow-ups, ears and swappings.
//!
//! Every operation keeps the input edges in their original order (so dart ids
//! of the first operand survive) and appends new edges at the end.

use std::collections::VecDeque;

use super::{GluingSpec, Graph};
use crate::error::{Error, Result};

/// Disjoint union; vertices and edges of `h` are shifted past those of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.vertex_count();
    let mut edges = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(a, b)| (a + off, b + off)));
    Graph::new(off + h.vertex_count(), edges).expect("union of valid graphs")
}

pub fn add_edge(g: &Graph, a: usize, b: usize) -> Result<Graph> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    let mut edges = g.edges().to_vec();
    edges.push((a, b));
    Graph::new(g.vertex_count(), edges)
}

/// Join `g` and `h` by one new edge `u -- v`.
pub fn bar_amalgamate(g: &Graph, u: usize, h: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(u)?;
    h.check_vertex(v)?;
    add_edge(&disjoint_union(g, h), u, g.vertex_count() + v)
}

/// Ring of marked graphs: part `i`'s `v` is joined to part `i + 1`'s `u`.
pub fn bar_ring(parts: &[(Graph, usize, usize)]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::Invalid("bar-ring needs at least one part".into()));
    }
    let mut offsets = Vec::with_capacity(parts.len());
    let mut acc: Option<Graph> = None;
    for (i, (g, u, v)) in parts.iter().enumerate() {
        for &p in [u, v] {
            g.check_vertex(p)?;
            if g.degree(p) != 1 {
                return Err(Error::InvalidGraph(format!("part {i}: marked vertex {p} is not pendant")));
            }
        }
        let off = acc.as_ref().map_or(0, Graph::vertex_count);
        offsets.push(off);
        acc = Some(match acc {
            None => g.clone(),
            Some(a) => disjoint_union(&a, g),
        });
    }
    let mut edges = acc.as_ref().expect("nonempty").edges().to_vec();
    let n = parts.len();
    for i in 0..n {
        let j = (i + 1) % n;
        edges.push((offsets[i] + parts[i].2, offsets[j] + parts[j].1));
    }
    Graph::new(acc.expect("nonempty").vertex_count(), edges)
}

/// Quotient identifying each pair of `phi`.
///
/// Cross mode glues vertex `u` of `g` to vertex `w` of `h`; self mode glues
/// inside `g`. Returns the graph and the image of every vertex of the union
/// (`g` first, then `h`). Sources are removed; surviving vertices keep their
/// relative order.
pub fn amalgamate_with_map(g: &Graph, h: Option<&Graph>, phi: &GluingSpec) -> Result<(Graph, Vec<usize>)> {
    if phi.self_gluing != h.is_none() {
        return Err(Error::InvalidGluing("self-gluing flag does not match the number of graphs".into()));
    }
    phi.validate_on(g, h)?;
    let (union, off) = match h {
        Some(h) => (disjoint_union(g, h), g.vertex_count()),
        None => (g.clone(), 0),
    };
    let n = union.vertex_count();
    let mut target: Vec<usize> = (0..n).collect();
    for &(u, w) in &phi.pairs {
        target[u] = w + off;
    }
    let mut new_id = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if target[v] == v {
            new_id[v] = next;
            next += 1;
        }
    }
    let map: Vec<usize> = (0..n).map(|v| new_id[target[v]]).collect();
    let edges = union.edges().iter().map(|&(a, b)| (map[a], map[b])).collect();
    Ok((Graph::new(next, edges)?, map))
}

pub fn amalgamate(g: &Graph, h: Option<&Graph>, phi: &GluingSpec) -> Result<Graph> {
    amalgamate_with_map(g, h, phi).map(|(g, _)| g)
}

/// Replace every vertex of `set` by one leaf per incident dart.
///
/// Edge ids (hence dart ids) are unchanged. Kept vertices come first in their
/// original order, then the new leaves in dart order. Returns the graph and
/// the new vertex of every dart.
pub fn blow_up_with_map(g: &Graph, set: &[usize]) -> Result<(Graph, Vec<usize>)> {
    let mut blown = vec![false; g.vertex_count()];
    for &u in set {
        g.check_vertex(u)?;
        blown[u] = true;
    }
    let mut id = vec![usize::MAX; g.vertex_count()];
    let mut next = 0;
    for v in 0..g.vertex_count() {
        if !blown[v] {
            id[v] = next;
            next += 1;
        }
    }
    let mut at = vec![0; g.dart_count()];
    for d in 0..g.dart_count() {
        let v = g.dart_vertex(d);
        at[d] = if blown[v] {
            next += 1;
            next - 1
        } else {
            id[v]
        };
    }
    let edges = (0..g.edge_count()).map(|e| (at[2 * e], at[2 * e + 1])).collect();
    Ok((Graph::new(next.max(1), edges)?, at))
}

pub fn blow_up(g: &Graph, set: &[usize]) -> Result<Graph> {
    blow_up_with_map(g, set).map(|(g, _)| g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EarKind {
    /// Edge `ab` becomes the path `a x y b` with `xy` doubled.
    Open,
    /// Edge `ab` becomes the path `a x b` with a loop at `x`.
    Closed,
}

/// Attach an ear on edge `e = (a, b)`.
///
/// Edge `e` becomes the final segment ending at `b`; the other new edges are
/// appended as `(a, x)`, then `(x, y), (x, y)` (open) or `(x, x)` (closed).
pub fn attach_ear(g: &Graph, e: usize, kind: EarKind) -> Result<Graph> {
    if e >= g.edge_count() {
        return Err(Error::InvalidGraph(format!("edge {e} out of range")));
    }
    let (a, b) = g.edge(e);
    let x = g.vertex_count();
    let mut edges = g.edges().to_vec();
    match kind {
        EarKind::Open => {
            let y = x + 1;
            edges[e] = (y, b);
            edges.extend([(a, x), (x, y), (x, y)]);
            Graph::new(x + 2, edges)
        }
        EarKind::Closed => {
            edges[e] = (x, b);
            edges.extend([(a, x), (x, x)]);
            Graph::new(x + 1, edges)
        }
    }
}

/// Vertices reachable from `start` avoiding the edges in `removed`.
fn reach(g: &Graph, start: &[usize], removed: &[bool]) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    let mut queue: VecDeque<usize> = start.iter().copied().collect();
    for &s in start {
        seen[s] = true;
    }
    while let Some(v) = queue.pop_front() {
        for &d in g.darts_at(v) {
            if removed[d / 2] {
                continue;
            }
            let w = g.dart_target(d);
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

fn separates(g: &Graph, phi: &GluingSpec, cut: &[usize]) -> bool {
    let mut removed = vec![false; g.edge_count()];
    for &e in cut {
        removed[e] = true;
    }
    let seen = reach(g, &phi.sources(), &removed);
    phi.targets().iter().all(|&t| !seen[t])
}

/// Swapping: cut every edge of `cut` into two pendant halves, then self-glue by `phi`.
///
/// `cut` must be a minimal edge cut separating `U1` from `U2`. Returns the
/// graph and the leaf pairing: for each cut edge, `(leaf on the U1 side,
/// leaf on the U2 side)` in the glued graph's labels.
pub fn swapping(h: &Graph, phi: &GluingSpec, cut: &[usize]) -> Result<(Graph, Vec<(usize, usize)>)> {
    if !phi.self_gluing {
        return Err(Error::InvalidGluing("swapping needs a self-gluing".into()));
    }
    phi.validate_on(h, None)?;
    if cut.iter().any(|&e| e >= h.edge_count()) {
        return Err(Error::InvalidGraph("cut edge out of range".into()));
    }
    if !separates(h, phi, cut) {
        return Err(Error::Invalid("edge set does not separate U1 from U2".into()));
    }
    for i in 0..cut.len() {
        let rest: Vec<usize> = cut.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &e)| e).collect();
        if separates(h, phi, &rest) {
            return Err(Error::Invalid(format!("cut is not minimal: edge {} is redundant", cut[i])));
        }
    }
    let mut removed = vec![false; h.edge_count()];
    for &e in cut {
        removed[e] = true;
    }
    let side1 = reach(h, &phi.sources(), &removed);
    let mut edges = h.edges().to_vec();
    let mut n = h.vertex_count();
    let mut leaves = Vec::new();
    for &e in cut {
        let (a, b) = edges[e];
        let (p, q) = (n, n + 1);
        n += 2;
        edges[e] = (a, p);
        edges.push((q, b));
        leaves.push(if side1[a] { (p, q) } else { (q, p) });
    }
    let split = Graph::new(n, edges)?;
    let (glued, map) = amalgamate_with_map(&split, None, phi)?;
    let psi = leaves.into_iter().map(|(p, q)| (map[p], map[q])).collect();
    Ok((glued, psi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn dumbbell() {
        let b1 = named::bouquet(1).unwrap();
        let g = bar_amalgamate(&b1, 0, &b1, 0).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.betti()), (2, 3, 2));
    }

    #[test]
    fn two_half_ladders_make_an_eight_cycle() {
        let (h, u, v) = named::half_open_ladder(1).unwrap();
        let g = bar_ring(&[(h.clone(), u, v), (h, u, v)]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 8));
        assert!(g.degrees().iter().all(|&d| d == 2));
        assert!(g.is_connected());
    }

    #[test]
    fn star_ladder_counts() {
        let (h, u, v) = named::half_open_ladder(1).unwrap();
        let g = bar_ring(&vec![(h, u, v); 3]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (12, 12));
    }

    #[test]
    fn ring_of_one_adds_chord() {
        let (h, u, v) = named::half_open_ladder(2).unwrap();
        let g = bar_ring(&[(h.clone(), u, v)]).unwrap();
        assert_eq!(g.edge_count(), h.edge_count() + 1);
        assert_eq!(*g.edges().last().unwrap(), (v, u));
        assert!(bar_ring(&[(named::cycle(3).unwrap(), 0, 1)]).is_err());
    }

    #[test]
    fn self_amalgamating_an_edge_gives_a_loop() {
        let g = named::path(2).unwrap();
        let b = amalgamate(&g, None, &GluingSpec::parse("1>0", true).unwrap()).unwrap();
        assert_eq!(b, named::bouquet(1).unwrap());
    }

    #[test]
    fn cross_amalgamation_of_doubled_paths() {
        let g = named::doubled_path(2).unwrap();
        let phi = GluingSpec::parse("1>0", false).unwrap();
        let p = amalgamate(&g, Some(&g), &phi).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (3, 4));
        assert_eq!(p.degrees(), vec![2, 4, 2]);
    }

    #[test]
    fn overlapping_self_gluing_rejected() {
        assert!(GluingSpec::parse("0>1,1>2", true).is_err());
    }

    #[test]
    fn blow_up_examples() {
        let p = blow_up(&named::bouquet(1).unwrap(), &[0]).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (2, 1));
        let s = blow_up(&named::dipole(3).unwrap(), &[0]).unwrap();
        assert_eq!(s.vertex_count(), 4);
        assert_eq!(s.degrees(), vec![3, 1, 1, 1]);
    }

    #[test]
    fn ears() {
        let k2 = named::path(2).unwrap();
        let c = attach_ear(&k2, 0, EarKind::Closed).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count(), c.betti()), (3, 3, 1));
        let o = attach_ear(&k2, 0, EarKind::Open).unwrap();
        assert_eq!((o.vertex_count(), o.edge_count(), o.betti()), (4, 4, 1));
        let mut g = k2;
        for kind in [EarKind::Open, EarKind::Open, EarKind::Closed, EarKind::Closed] {
            g = attach_ear(&g, 0, kind).unwrap();
        }
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 11));
        assert!(attach_ear(&g, 99, EarKind::Open).is_err());
    }

    #[test]
    fn swapping_on_a_path() {
        let h = named::path(4).unwrap();
        let phi = GluingSpec::parse("3>0", true).unwrap();
        let (g, psi) = swapping(&h, &phi, &[1]).unwrap();
        assert_eq!(g.vertex_count(), 4 - 1 + 2);
        assert_eq!(psi.len(), 1);
        let (a, b) = psi[0];
        assert_eq!((g.degree(a), g.degree(b)), (1, 1));
        assert!(swapping(&h, &phi, &[]).is_err());
        assert!(swapping(&h, &phi, &[0, 1]).is_err());
    }
}
