use super::Graph;
use crate::error::{Error, Result};

/// One embedding: a rotation (cyclic successor of every dart around its vertex)
/// and a twist bit per edge.
///
/// Reps produced by the oracles are canonical: edges of the graph's BFS tree are
/// never twisted. Face tracing accepts any twist assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingRep {
    pub next: Vec<usize>,
    pub prev: Vec<usize>,
    pub twist: Vec<bool>,
}

impl EmbeddingRep {
    /// Build from one cyclic dart list per vertex.
    pub fn from_rotations(g: &Graph, rotations: &[Vec<usize>], twist: Vec<bool>) -> Result<Self> {
        if rotations.len() != g.vertex_count() || twist.len() != g.edge_count() {
            return Err(Error::Invalid("rotation or twist table has the wrong size".into()));
        }
        let mut next = vec![usize::MAX; g.dart_count()];
        let mut prev = vec![usize::MAX; g.dart_count()];
        for (v, rot) in rotations.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != g.darts_at(v) {
                return Err(Error::Invalid(format!("rotation at vertex {v} is not a cyclic order of its darts")));
            }
            for (i, &d) in rot.iter().enumerate() {
                let n = rot[(i + 1) % rot.len()];
                next[d] = n;
                prev[n] = d;
            }
        }
        Ok(EmbeddingRep { next, prev, twist })
    }

    /// Rotation with darts in increasing order at every vertex and no twists.
    pub fn identity(g: &Graph) -> Self {
        let rots: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| g.darts_at(v).to_vec()).collect();
        Self::from_rotations(g, &rots, vec![false; g.edge_count()]).expect("identity rotation is valid")
    }

    /// Cyclic order at `v`, starting from its lowest dart.
    pub fn rotation_at(&self, g: &Graph, v: usize) -> Vec<usize> {
        let Some(&start) = g.darts_at(v).first() else { return Vec::new() };
        let mut out = vec![start];
        let mut d = self.next[start];
        while d != start {
            out.push(d);
            d = self.next[d];
        }
        out
    }

    pub fn is_orientable(&self) -> bool {
        self.twist.iter().all(|t| !t)
    }

    /// Tree edges of the canonical spanning tree are untwisted.
    pub fn is_canonical(&self, g: &Graph) -> bool {
        g.spanning_tree().iter().zip(&self.twist).all(|(tree, tw)| !(tree & tw))
    }

    /// Face-traversal successor on state `2d + flag` (flag 0 is `+`, 1 is `-`).
    #[inline]
    pub fn successor(&self, state: usize) -> usize {
        successor(&self.next, &self.prev, &self.twist, state)
    }
}

#[inline]
pub(crate) fn successor(next: &[usize], prev: &[usize], twist: &[bool], state: usize) -> usize {
    let d = state >> 1;
    let f = (state & 1) ^ (twist[d >> 1] as usize);
    let d2 = d ^ 1;
    if f == 0 {
        next[d2] << 1
    } else {
        (prev[d2] << 1) | 1
    }
}

/// The reverse-direction partner of a state: same corner, opposite direction.
#[inline]
pub(crate) fn opposite(next: &[usize], prev: &[usize], state: usize) -> usize {
    let d = state >> 1;
    if state & 1 == 0 {
        (prev[d] << 1) | 1
    } else {
        next[d] << 1
    }
}

/// Orbit and face labels of all `4|E|` states.
#[derive(Clone, Debug)]
pub struct FaceLabels {
    /// Orbit id of each state.
    pub orbit: Vec<usize>,
    /// Face id of each orbit.
    pub face_of_orbit: Vec<usize>,
    pub orbit_count: usize,
    pub self_paired: usize,
    pub face_count: usize,
}

impl FaceLabels {
    pub fn compute(rep: &EmbeddingRep) -> Self {
        let n = rep.next.len() * 2;
        let mut orbit = vec![usize::MAX; n];
        let mut first = Vec::new();
        for s in 0..n {
            if orbit[s] != usize::MAX {
                continue;
            }
            let id = first.len();
            first.push(s);
            let mut cur = s;
            while orbit[cur] == usize::MAX {
                orbit[cur] = id;
                cur = rep.successor(cur);
            }
        }
        let mut face_of_orbit = vec![usize::MAX; first.len()];
        let mut faces = 0;
        let mut self_paired = 0;
        for (id, &s) in first.iter().enumerate() {
            if face_of_orbit[id] != usize::MAX {
                continue;
            }
            let partner = orbit[opposite(&rep.next, &rep.prev, s)];
            face_of_orbit[id] = faces;
            face_of_orbit[partner] = faces;
            if partner == id {
                self_paired += 1;
            }
            faces += 1;
        }
        FaceLabels { orbit, face_of_orbit, orbit_count: first.len(), self_paired, face_count: faces }
    }

    /// Face containing state `s`.
    pub fn face_of_state(&self, s: usize) -> usize {
        self.face_of_orbit[self.orbit[s]]
    }

    /// Face at the corner between dart `d` and its rotation successor.
    pub fn face_at_corner(&self, d: usize) -> usize {
        self.face_of_state((d << 1) | 1)
    }
}

/// Face walks of one embedding.
#[derive(Clone, Debug)]
pub struct FaceSet {
    /// Each walk is a closed sequence of `(dart, positive_direction)` states.
    pub walks: Vec<Vec<(usize, bool)>>,
    pub face_count: usize,
    pub self_paired: usize,
}

impl FaceSet {
    /// Euler-genus `2 - V + E - F` of the embedding of a connected graph.
    pub fn euler_genus(&self, g: &Graph) -> i64 {
        2 - g.vertex_count() as i64 + g.edge_count() as i64 - self.face_count as i64
    }
}

/// Orbits of the face-traversal successor, grouped into faces.
pub fn trace_faces(g: &Graph, rep: &EmbeddingRep) -> Result<FaceSet> {
    g.require_connected()?;
    if rep.next.len() != g.dart_count() || rep.twist.len() != g.edge_count() {
        return Err(Error::Invalid("embedding does not match the graph".into()));
    }
    for v in 0..g.vertex_count() {
        let rot = rep.rotation_at(g, v);
        let mut sorted = rot.clone();
        sorted.sort_unstable();
        if sorted != g.darts_at(v) || rot.iter().any(|&d| rep.prev[rep.next[d]] != d) {
            return Err(Error::Invalid(format!("malformed rotation at vertex {v}")));
        }
    }
    let labels = FaceLabels::compute(rep);
    let mut walks: Vec<Vec<(usize, bool)>> = vec![Vec::new(); labels.orbit_count];
    let mut done = vec![false; labels.orbit_count];
    for s in 0..labels.orbit.len() {
        let id = labels.orbit[s];
        if done[id] {
            continue;
        }
        done[id] = true;
        let mut cur = s;
        loop {
            walks[id].push((cur >> 1, cur & 1 == 0));
            cur = rep.successor(cur);
            if cur == s {
                break;
            }
        }
    }
    Ok(FaceSet { walks, face_count: labels.face_count, self_paired: labels.self_paired })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn untwisted_loop_is_spherical() {
        let g = Graph::new(1, vec![(0, 0)]).unwrap();
        let rep = EmbeddingRep::identity(&g);
        let fs = trace_faces(&g, &rep).unwrap();
        assert_eq!(fs.face_count, 2);
        assert_eq!(fs.euler_genus(&g), 0);
    }

    #[test]
    fn twisted_loop_is_projective() {
        let g = Graph::new(1, vec![(0, 0)]).unwrap();
        let rep = EmbeddingRep::from_rotations(&g, &[vec![0, 1]], vec![true]).unwrap();
        let fs = trace_faces(&g, &rep).unwrap();
        assert_eq!(fs.face_count, 1);
        assert_eq!(fs.euler_genus(&g), 1);
    }

    #[test]
    fn walks_partition_all_states() {
        let g = Graph::new(2, vec![(0, 1), (0, 1), (0, 1), (0, 0)]).unwrap();
        let rep = EmbeddingRep::from_rotations(&g, &[vec![0, 6, 2, 7, 4], vec![1, 5, 3]], vec![false, true, false, true])
            .unwrap();
        let fs = trace_faces(&g, &rep).unwrap();
        let mut all: Vec<(usize, bool)> = fs.walks.iter().flatten().cloned().collect();
        all.sort_unstable();
        all.dedup();
        assert_eq!(all.len(), 4 * g.edge_count());
        assert_eq!(fs.walks.iter().map(Vec::len).sum::<usize>(), 4 * g.edge_count());
        assert_eq!(fs.self_paired, 0);
    }

    #[test]
    fn malformed_rotation_rejected() {
        let g = Graph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(EmbeddingRep::from_rotations(&g, &[vec![0, 1], vec![2, 3]], vec![false; 2]).is_err());
    }
}
