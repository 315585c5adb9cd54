//! Named graph families with fixed labelings.
//!
//! | kind               | vertices                           | edges (in order)                          |
//! |--------------------|------------------------------------|-------------------------------------------|
//! | `cycle n`          | `0..n`                             | `i -- i+1 mod n`                          |
//! | `doubled_cycle n`  | `0..n`                             | each cycle edge twice, adjacent           |
//! | `tripled_cycle n`  | `0..n`                             | each cycle edge three times               |
//! | `path n`           | `0..n`                             | `i -- i+1`                                |
//! | `doubled_path n`   | `0..n`                             | each path edge twice                      |
//! | `ladder n`         | rails `a_i = i`, `b_i = n + i`     | rail `a`, rail `b`, then rungs `a_i b_i`  |
//! | `half_open_ladder n` | ladder of `n + 1` rungs minus rung 0 | pendants `u = 0`, `v = n + 1`          |
//! | `grid k n`         | `(r, c) = r n + c`                 | horizontal edges, then vertical           |
//! | `bouquet k`        | `0`                                | `k` loops                                 |
//! | `dipole k`         | `0, 1`                             | `k` parallel edges                        |

use super::Graph;
use crate::error::{Error, Result};

fn need(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidGraph(what.into()))
    }
}

fn multiplied_cycle(n: usize, mult: usize) -> Result<Graph> {
    need(n >= 1, "cycle length must be at least 1")?;
    let mut edges = Vec::with_capacity(n * mult);
    for i in 0..n {
        for _ in 0..mult {
            edges.push((i, (i + 1) % n));
        }
    }
    Graph::new(n, edges)
}

fn multiplied_path(n: usize, mult: usize) -> Result<Graph> {
    need(n >= 1, "path needs at least one vertex")?;
    let mut edges = Vec::new();
    for i in 0..n.saturating_sub(1) {
        for _ in 0..mult {
            edges.push((i, i + 1));
        }
    }
    Graph::new(n, edges)
}

/// `C_n`; `C_1` is a loop and `C_2` a pair of parallel edges.
pub fn cycle(n: usize) -> Result<Graph> {
    multiplied_cycle(n, 1)
}

/// `C_n^2`; `C_1^2` is the bouquet of two loops.
pub fn doubled_cycle(n: usize) -> Result<Graph> {
    multiplied_cycle(n, 2)
}

pub fn tripled_cycle(n: usize) -> Result<Graph> {
    multiplied_cycle(n, 3)
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    multiplied_path(n, 1)
}

/// `P_n^2`: path on `n` vertices with every edge doubled.
pub fn doubled_path(n: usize) -> Result<Graph> {
    multiplied_path(n, 2)
}

/// `L_n = P_n x K_2`.
pub fn ladder(n: usize) -> Result<Graph> {
    need(n >= 1, "ladder needs at least one rung")?;
    let mut edges = Vec::new();
    for rail in 0..2 {
        for i in 0..n - 1 {
            edges.push((rail * n + i, rail * n + i + 1));
        }
    }
    for i in 0..n {
        edges.push((i, n + i));
    }
    Graph::new(2 * n, edges)
}

/// `HL_n`: the ladder with `n + 1` rungs minus its rung at index 0.
///
/// Returns the graph with its pendant vertices `(u, v)`.
pub fn half_open_ladder(n: usize) -> Result<(Graph, usize, usize)> {
    need(n >= 1, "half-open ladder needs n >= 1")?;
    let m = n + 1;
    let mut edges = Vec::new();
    for rail in 0..2 {
        for i in 0..m - 1 {
            edges.push((rail * m + i, rail * m + i + 1));
        }
    }
    for i in 1..m {
        edges.push((i, m + i));
    }
    Ok((Graph::new(2 * m, edges)?, 0, m))
}

/// `k x n` grid.
pub fn grid(k: usize, n: usize) -> Result<Graph> {
    need(k >= 1 && n >= 1, "grid sides must be positive")?;
    let id = |r: usize, c: usize| r * n + c;
    let mut edges = Vec::new();
    for r in 0..k {
        for c in 0..n - 1 {
            edges.push((id(r, c), id(r, c + 1)));
        }
    }
    for r in 0..k - 1 {
        for c in 0..n {
            edges.push((id(r, c), id(r + 1, c)));
        }
    }
    Graph::new(k * n, edges)
}

pub fn bouquet(k: usize) -> Result<Graph> {
    need(k >= 1, "bouquet needs at least one loop")?;
    Graph::new(1, vec![(0, 0); k])
}

pub fn dipole(k: usize) -> Result<Graph> {
    need(k >= 1, "dipole needs at least one edge")?;
    Graph::new(2, vec![(0, 1); k])
}

pub const KINDS: &[&str] = &[
    "cycle",
    "doubled_cycle",
    "tripled_cycle",
    "path",
    "doubled_path",
    "ladder",
    "half_open_ladder",
    "grid",
    "bouquet",
    "dipole",
];

/// Build a named graph by kind. `half_open_ladder` drops its pendant labels here.
pub fn build_named(kind: &str, params: &[usize]) -> Result<Graph> {
    let one = |name: &str| -> Result<usize> {
        match params {
            [n] => Ok(*n),
            _ => Err(Error::Invalid(format!("{name} takes one size parameter"))),
        }
    };
    match kind {
        "cycle" => cycle(one(kind)?),
        "doubled_cycle" => doubled_cycle(one(kind)?),
        "tripled_cycle" => tripled_cycle(one(kind)?),
        "path" => path(one(kind)?),
        "doubled_path" => doubled_path(one(kind)?),
        "ladder" => ladder(one(kind)?),
        "half_open_ladder" => half_open_ladder(one(kind)?).map(|(g, _, _)| g),
        "grid" => match params {
            [k, n] => grid(*k, *n),
            _ => Err(Error::Invalid("grid takes two size parameters".into())),
        },
        "bouquet" => bouquet(one(kind)?),
        "dipole" => dipole(one(kind)?),
        other => Err(Error::Invalid(format!("unknown graph kind {other:?}; known: {}", KINDS.join(", ")))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn doubled_cycle_one_is_two_loops() {
        let g = build_named("doubled_cycle", &[1]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(0), 4);
    }

    #[test]
    fn three_by_three_grid() {
        let g = build_named("grid", &[3, 3]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (9, 12));
        assert_eq!(g.rotation_count(), BigInt::from(96));
    }

    #[test]
    fn half_open_ladder_one_is_a_path() {
        let (g, u, v) = half_open_ladder(1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 3));
        assert_eq!((g.degree(u), g.degree(v)), (1, 1));
        assert!(g.is_connected());
        assert_eq!(g.betti(), 0);
    }

    #[test]
    fn half_open_ladder_shape() {
        let (g, u, v) = half_open_ladder(3).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 9);
        assert_eq!((g.degree(u), g.degree(v)), (1, 1));
    }

    #[test]
    fn ladder_is_cartesian_product() {
        let g = ladder(3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 7));
        assert_eq!(g.degrees(), vec![2, 3, 2, 2, 3, 2]);
    }

    #[test]
    fn bad_requests() {
        assert!(build_named("cycle", &[0]).is_err());
        assert!(build_named("moebius", &[3]).is_err());
        assert!(build_named("grid", &[3]).is_err());
    }
}
