use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::io::{graph_from_json, graph_to_json, GraphJson};
use crate::graph::ops::amalgamate_with_map;
use crate::graph::{named, GluingSpec, Graph};
use crate::groupring::Mode;

/// How the copies of `H` are closed off.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// `G_1 = H`, `G_{n+1} = G_n * H`.
    Linear,
    /// `G_n` with its last `U1` glued back onto its first `U2`.
    Circular,
    /// `G_n` with a cap graph glued onto the `U1` vertices of its last copy.
    Capped { cap: Graph, glue: GluingSpec },
}

/// An `H`-linear, `H`-circular or capped family.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub h: Graph,
    /// `phi: U1 -> U2`; copy `k`'s `U1` vertex `u` is identified with copy `k + 1`'s `phi(u)`.
    pub glue: GluingSpec,
    pub kind: FamilyKind,
    pub mode: Mode,
    /// Name used when describing members.
    pub label: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct CapJson {
    graph: GraphJson,
    glue: String,
}

#[derive(Serialize, Deserialize)]
struct SpecJson {
    h: GraphJson,
    glue: String,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cap: Option<CapJson>,
    #[serde(default)]
    mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

impl FamilySpec {
    /// Validated family.
    pub fn new(h: Graph, glue: GluingSpec, kind: FamilyKind, mode: Mode) -> Result<Self> {
        h.require_connected()?;
        if !glue.self_gluing {
            return Err(Error::InvalidGluing("the family gluing must be a self-gluing of H".into()));
        }
        glue.validate_on(&h, None)?;
        if let FamilyKind::Capped { cap, glue: cg } = &kind {
            if cg.self_gluing {
                return Err(Error::InvalidGluing("cap gluing must be cross-graph".into()));
            }
            cg.validate_on(&h, Some(cap))?;
            let u1 = glue.sources();
            if cg.sources().iter().any(|s| !u1.contains(s)) {
                return Err(Error::InvalidGluing("cap gluing must start from U1 vertices".into()));
            }
        }
        Ok(FamilySpec { h, glue, kind, mode, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    /// `C_n^2` as the circular family of a doubled edge.
    pub fn doubled_cycle(mode: Mode) -> Self {
        Self::new(named::dipole(2).expect("dipole"), GluingSpec::parse("1>0", true).expect("glue"), FamilyKind::Circular, mode)
            .expect("valid family")
            .with_label("C_n^2 (n-cycle with doubled edges)")
    }

    /// `C_n^3` as the circular family of a tripled edge.
    pub fn tripled_cycle(mode: Mode) -> Self {
        Self::new(named::dipole(3).expect("dipole"), GluingSpec::parse("1>0", true).expect("glue"), FamilyKind::Circular, mode)
            .expect("valid family")
            .with_label("C_n^3 (n-cycle with tripled edges)")
    }

    /// `3 x (n + 2)` grids: a column with its rungs and three outgoing edges,
    /// capped by a `3 x 2` grid.
    pub fn grid_3xn(mode: Mode) -> Self {
        // left column 0,1,2 with its vertical edges; right column 3,4,5
        let h = Graph::new(6, vec![(0, 1), (1, 2), (0, 3), (1, 4), (2, 5)]).expect("graph");
        let cap = named::grid(3, 2).expect("grid");
        let kind = FamilyKind::Capped { cap, glue: GluingSpec::parse("3>0,4>2,5>4", false).expect("glue") };
        Self::new(h, GluingSpec::parse("3>0,4>1,5>2", true).expect("glue"), kind, mode)
            .expect("valid family")
            .with_label("3 x (n+2) grid")
    }

    pub fn from_json(src: &str) -> Result<Self> {
        let j: SpecJson = serde_json::from_str(src)?;
        let h = graph_from_json(j.h)?;
        let glue = GluingSpec::parse(&j.glue, true)?;
        let kind = match (j.kind.as_str(), j.cap) {
            ("linear", None) => FamilyKind::Linear,
            ("circular", None) => FamilyKind::Circular,
            ("capped", Some(c)) => {
                FamilyKind::Capped { cap: graph_from_json(c.graph)?, glue: GluingSpec::parse(&c.glue, false)? }
            }
            ("capped", None) => return Err(Error::Parse("capped family needs a cap".into())),
            (k, Some(_)) if k != "capped" => return Err(Error::Parse("only capped families take a cap".into())),
            (k, _) => return Err(Error::Parse(format!("unknown family kind {k:?}"))),
        };
        let mut spec = Self::new(h, glue, kind, j.mode)?;
        spec.label = j.label;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        let pairs = |g: &GluingSpec| g.to_string().trim_start_matches("glue ").to_string();
        let (kind, cap) = match &self.kind {
            FamilyKind::Linear => ("linear", None),
            FamilyKind::Circular => ("circular", None),
            FamilyKind::Capped { cap, glue } => ("capped", Some(CapJson { graph: graph_to_json(cap), glue: pairs(glue) })),
        };
        let j = SpecJson {
            h: graph_to_json(&self.h),
            glue: pairs(&self.glue),
            kind: kind.into(),
            cap,
            mode: self.mode,
            label: self.label.clone(),
        };
        serde_json::to_string_pretty(&j).expect("serializable")
    }

    pub fn is_circular(&self) -> bool {
        self.kind == FamilyKind::Circular
    }

    /// Vertex and edge counts of the `n`-th member.
    pub fn member_size(&self, n: usize) -> (usize, usize) {
        let (vh, eh, k) = (self.h.vertex_count(), self.h.edge_count(), self.glue.pairs.len());
        let mut v = n * vh - (n - 1) * k;
        let mut e = n * eh;
        match &self.kind {
            FamilyKind::Linear => {}
            FamilyKind::Circular => v -= k,
            FamilyKind::Capped { cap, glue } => {
                v += cap.vertex_count() - glue.pairs.len();
                e += cap.edge_count();
            }
        }
        (v, e)
    }

    /// The `n`-th member built explicitly by amalgamation (`n >= 1`).
    pub fn member_graph(&self, n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::Invalid("family members start at n = 1".into()));
        }
        // vertex ids of the first and the last copy inside the running graph
        let mut g = self.h.clone();
        let mut first: Vec<usize> = (0..self.h.vertex_count()).collect();
        let mut last = first.clone();
        for _ in 1..n {
            let pairs = self.glue.pairs.iter().map(|&(u, w)| (last[u], w)).collect();
            let (next, map) = amalgamate_with_map(&g, Some(&self.h), &GluingSpec::new(pairs, false)?)?;
            let off = g.vertex_count();
            first = first.iter().map(|&v| map[v]).collect();
            last = (0..self.h.vertex_count()).map(|v| map[off + v]).collect();
            g = next;
        }
        match &self.kind {
            FamilyKind::Linear => Ok(g),
            FamilyKind::Circular => {
                let pairs = self.glue.pairs.iter().map(|&(u, w)| (last[u], first[w])).collect();
                let (g, _) = amalgamate_with_map(&g, None, &GluingSpec::new(pairs, true)?)?;
                Ok(g)
            }
            FamilyKind::Capped { cap, glue } => {
                let pairs = glue.pairs.iter().map(|&(u, w)| (last[u], w)).collect();
                let (g, _) = amalgamate_with_map(&g, Some(cap), &GluingSpec::new(pairs, false)?)?;
                Ok(g)
            }
        }
    }

    /// Human-readable description of the member at `t^n`.
    pub fn describe_member(&self, n: usize) -> String {
        let (v, e) = self.member_size(n);
        match &self.label {
            Some(l) => format!("t^{n}: {l} with n = {n}; {v} vertices, {e} edges"),
            None => format!("t^{n}: member {n}; {v} vertices, {e} edges"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn doubled_cycle_members() {
        let f = FamilySpec::doubled_cycle(Mode::Genus);
        for n in 1..5 {
            let g = f.member_graph(n).unwrap();
            let want = named::doubled_cycle(n).unwrap();
            assert_eq!(g.degrees(), want.degrees());
            assert_eq!((g.vertex_count(), g.edge_count()), f.member_size(n));
            assert!(g.is_connected());
        }
    }

    #[test]
    fn grid_members_are_grids() {
        let f = FamilySpec::grid_3xn(Mode::Genus);
        let g = f.member_graph(1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (9, 12));
        assert_eq!(f.member_size(1), (9, 12));
        let g = f.member_graph(3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (15, 22));
        let mut d = g.degrees();
        d.sort_unstable();
        let mut want = named::grid(3, 5).unwrap().degrees();
        want.sort_unstable();
        assert_eq!(d, want);
    }

    #[test]
    fn json_round_trip() {
        for f in [FamilySpec::doubled_cycle(Mode::Euler), FamilySpec::grid_3xn(Mode::Genus)] {
            let back = FamilySpec::from_json(&f.to_json()).unwrap();
            assert_eq!(back.kind, f.kind);
            assert_eq!(back.glue, f.glue);
            assert_eq!(back.mode, f.mode);
        }
    }

    #[test]
    fn rejects_bad_gluings() {
        let h = named::dipole(2).unwrap();
        assert!(GluingSpec::parse("0>1,1>0", true).is_err());
        let cross = GluingSpec::parse("1>0", false).unwrap();
        assert!(FamilySpec::new(h.clone(), cross, FamilyKind::Linear, Mode::Genus).is_err());
        let empty = GluingSpec::new(vec![], true).unwrap();
        assert!(FamilySpec::new(h, empty, FamilyKind::Linear, Mode::Genus).is_err());
    }
}
