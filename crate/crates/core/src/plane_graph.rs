//! Combinatorial plane graphs: a rotation system plus a designated external
//! face.
//!
//! The embedding convention is fixed once: `rotation[v]` lists the neighbors
//! of `v` in clockwise order, and faces are traced with the successor rule
//! `next(u, v) = (v, pred(u))` where `pred` is the clockwise-immediate
//! predecessor in the rotation at `v`. Under this rule every directed edge
//! (dart) lies on exactly one face walk and each walk keeps its face to the
//! right of the traversal. Mirror embeddings are accepted as distinct inputs.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, VecDeque};

pub type Vertex = usize;
pub type FaceId = usize;
/// Directed edge (tail, head).
pub type Dart = (Vertex, Vertex);

/// Closed boundary walk of one face. `verts[i]` is the tail of `darts[i]`;
/// a cut vertex may occur several times. The one-vertex graph has the single
/// trivial walk with no darts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceWalk {
    pub id: FaceId,
    pub verts: Vec<Vertex>,
    pub darts: Vec<Dart>,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.verts.contains(&v)
    }

    /// Occurrence indices of `v` on this walk.
    pub fn occurrences(&self, v: Vertex) -> Vec<usize> {
        self.verts
            .iter()
            .enumerate()
            .filter_map(|(i, &w)| (w == v).then_some(i))
            .collect()
    }
}

/// A facial walk that is a simple path: a contiguous interval of a face
/// boundary with pairwise-distinct vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacialPath {
    pub face: FaceId,
    /// Start occurrence index into the face walk.
    pub start: usize,
    pub verts: Vec<Vertex>,
}

#[derive(Debug, Clone)]
pub struct PlaneGraph {
    rotation: Vec<Vec<Vertex>>,
    /// Position of v in rotation[u], for each dart (u, v).
    rot_pos: HashMap<Dart, usize>,
    faces: Vec<FaceWalk>,
    dart_face: HashMap<Dart, (FaceId, usize)>,
    external: FaceId,
    edges: Vec<(Vertex, Vertex)>,
}

/// Trace all face walks of a rotation system, as dart cycles.
///
/// Works on partial rotations too (vertices with empty neighbor lists are
/// skipped), which is what the subgraph machinery in `special` relies on.
/// Walk ids are deterministic: orbits start at the first untraced dart in
/// (vertex, rotation position) order.
pub(crate) fn trace_faces(rotation: &[Vec<Vertex>]) -> Vec<Vec<Dart>> {
    let mut pos: HashMap<Dart, usize> = HashMap::new();
    for (u, neigh) in rotation.iter().enumerate() {
        for (p, &v) in neigh.iter().enumerate() {
            pos.insert((u, v), p);
        }
    }
    let mut seen: HashMap<Dart, bool> = HashMap::new();
    let mut walks = Vec::new();
    for (u, neigh) in rotation.iter().enumerate() {
        for &v in neigh {
            if seen.get(&(u, v)).copied().unwrap_or(false) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut a, mut b) = (u, v);
            loop {
                walk.push((a, b));
                seen.insert((a, b), true);
                // next dart: (b, predecessor of a in rotation[b])
                let p = pos[&(b, a)];
                let rb = &rotation[b];
                let next = rb[(p + rb.len() - 1) % rb.len()];
                a = b;
                b = next;
                if (a, b) == (u, v) {
                    break;
                }
            }
            walks.push(walk);
        }
    }
    walks
}

impl PlaneGraph {
    /// Build from a clockwise rotation system.
    ///
    /// `external_face` indexes the deterministically traced face list; when
    /// absent the face with the longest walk (ties: smallest id) is chosen.
    pub fn build(rotation: Vec<Vec<Vertex>>, external_face: Option<FaceId>) -> Result<Self> {
        let n = rotation.len();
        if n == 0 {
            return Err(Error::InvalidInput("graph must be non-empty".into()));
        }
        for (u, neigh) in rotation.iter().enumerate() {
            let mut set = BTreeSet::new();
            for &v in neigh {
                if v == u || v >= n || !set.insert(v) {
                    return Err(Error::MultiEdgeOrLoop(u));
                }
            }
        }
        for (u, neigh) in rotation.iter().enumerate() {
            for &v in neigh {
                if !rotation[v].contains(&u) {
                    return Err(Error::MultiEdgeOrLoop(v));
                }
            }
        }
        // connectivity
        let mut vis = vec![false; n];
        let mut q = VecDeque::from([0]);
        vis[0] = true;
        while let Some(u) = q.pop_front() {
            for &v in &rotation[u] {
                if !vis[v] {
                    vis[v] = true;
                    q.push_back(v);
                }
            }
        }
        if let Some(v) = vis.iter().position(|&b| !b) {
            return Err(Error::Disconnected(v));
        }

        let dart_walks = trace_faces(&rotation);
        let num_edges: usize = rotation.iter().map(Vec::len).sum::<usize>() / 2;
        let num_faces = if n == 1 { 1 } else { dart_walks.len() };
        let euler = n as i64 - num_edges as i64 + num_faces as i64;
        if euler != 2 {
            return Err(Error::NotPlanar { euler });
        }

        let mut faces: Vec<FaceWalk> = dart_walks
            .into_iter()
            .enumerate()
            .map(|(id, darts)| FaceWalk {
                id,
                verts: darts.iter().map(|d| d.0).collect(),
                darts,
            })
            .collect();
        if n == 1 {
            faces.push(FaceWalk {
                id: 0,
                verts: vec![0],
                darts: vec![],
            });
        }

        let external = match external_face {
            Some(f) => {
                if f >= faces.len() {
                    return Err(Error::InvalidInput(format!(
                        "external_face {f} out of range 0..{}",
                        faces.len()
                    )));
                }
                f
            }
            None => faces
                .iter()
                .max_by(|a, b| a.len().cmp(&b.len()).then(b.id.cmp(&a.id)))
                .map(|f| f.id)
                .unwrap(),
        };

        let mut rot_pos = HashMap::new();
        for (u, neigh) in rotation.iter().enumerate() {
            for (p, &v) in neigh.iter().enumerate() {
                rot_pos.insert((u, v), p);
            }
        }
        let mut dart_face = HashMap::new();
        for f in &faces {
            for (i, &d) in f.darts.iter().enumerate() {
                dart_face.insert(d, (f.id, i));
            }
        }
        let mut edges: Vec<(Vertex, Vertex)> = rot_pos
            .keys()
            .filter(|&&(u, v)| u < v)
            .copied()
            .collect();
        edges.sort_unstable();

        Ok(PlaneGraph {
            rotation,
            rot_pos,
            faces,
            dart_face,
            external,
            edges,
        })
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.rot_pos.contains_key(&(u, v))
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rotation[v].len()
    }

    pub fn rotation(&self) -> &[Vec<Vertex>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[FaceWalk] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &FaceWalk {
        &self.faces[f]
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn external_face(&self) -> FaceId {
        self.external
    }

    pub fn face_of_dart(&self, d: Dart) -> Option<(FaceId, usize)> {
        self.dart_face.get(&d).copied()
    }

    /// Clockwise-immediate predecessor of neighbor `u` around `v`.
    pub fn pred_in_rotation(&self, v: Vertex, u: Vertex) -> Vertex {
        let p = self.rot_pos[&(v, u)];
        let r = &self.rotation[v];
        r[(p + r.len() - 1) % r.len()]
    }

    /// One closed walk per face; total dart count is 2|E|.
    pub fn facial_walks(&self) -> &[FaceWalk] {
        &self.faces
    }

    /// E(g) plus all pairs joined by a facial path of length exactly two.
    pub fn facial_square_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut set: BTreeSet<(Vertex, Vertex)> = self.edges.iter().copied().collect();
        for f in &self.faces {
            let l = f.len();
            if l < 3 {
                continue;
            }
            for i in 0..l {
                let a = f.verts[i];
                let b = f.verts[(i + 1) % l];
                let c = f.verts[(i + 2) % l];
                if a != b && b != c && a != c {
                    set.insert((a.min(c), a.max(c)));
                }
            }
        }
        set.into_iter().collect()
    }

    /// Rotation system with chords spliced into face corners.
    ///
    /// Each chord joins two occurrences of one face walk and is routed inside
    /// that face. At an occurrence the chords are inserted right after the
    /// outgoing walk dart, nearest target occurrence first; this is the
    /// unique crossing-free placement. When `keep_original` is false only the
    /// chords remain (used for the facial-square color classes).
    pub(crate) fn augmented_rotation(
        &self,
        chords: &[(FaceId, usize, usize)],
        keep_original: bool,
    ) -> Vec<Vec<Vertex>> {
        // insert-after map: (vertex, rotation position) -> [(cyclic distance, target)]
        let mut after: HashMap<(Vertex, usize), Vec<(usize, Vertex)>> = HashMap::new();
        let mut add = |f: &FaceWalk, from_occ: usize, to_occ: usize| {
            let l = f.len();
            let w = f.verts[from_occ];
            let target = f.verts[to_occ];
            let out_dart = f.darts[from_occ];
            let p = self.rot_pos[&out_dart];
            let dist = (to_occ + l - from_occ) % l;
            after.entry((w, p)).or_default().push((dist, target));
        };
        for &(fid, i, j) in chords {
            let f = &self.faces[fid];
            add(f, i, j);
            add(f, j, i);
        }
        for targets in after.values_mut() {
            targets.sort_unstable();
        }
        let mut rot = Vec::with_capacity(self.n());
        for v in 0..self.n() {
            let mut out = Vec::new();
            for p in 0..self.rotation[v].len() {
                if keep_original {
                    out.push(self.rotation[v][p]);
                }
                if let Some(ts) = after.get(&(v, p)) {
                    out.extend(ts.iter().map(|&(_, t)| t));
                }
            }
            rot.push(out);
        }
        rot
    }

    /// New plane graph with `chords` added inside their faces.
    ///
    /// `external_dart` pins the external face of the result (any dart known
    /// to stay on its boundary); without it the default longest-walk rule
    /// applies.
    pub fn insert_chords(
        &self,
        chords: &[(FaceId, usize, usize)],
        external_dart: Option<Dart>,
    ) -> Result<PlaneGraph> {
        for &(fid, i, j) in chords {
            let f = &self.faces[fid];
            let (u, v) = (f.verts[i], f.verts[j]);
            if u == v || self.has_edge(u, v) {
                return Err(Error::MultiEdgeOrLoop(u));
            }
        }
        let rot = self.augmented_rotation(chords, true);
        let g = PlaneGraph::build(rot, None)?;
        match external_dart {
            Some(d) => {
                let (fid, _) = g
                    .face_of_dart(d)
                    .ok_or_else(|| Error::Internal(format!("dart {d:?} lost in chord insert")))?;
                Ok(PlaneGraph { external: fid, ..g })
            }
            None => Ok(g),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph g {\n");
        for f in &self.faces {
            let mark = if f.id == self.external { " (external)" } else { "" };
            s.push_str(&format!(
                "  // face {}{}: {}\n",
                f.id,
                mark,
                f.verts
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
        }
        for &(u, v) in &self.edges {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct GraphJson {
    pub n: usize,
    pub rotation: Vec<Vec<Vertex>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub external_face: Option<FaceId>,
}

impl PlaneGraph {
    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n(),
            rotation: self.rotation.clone(),
            external_face: Some(self.external),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Self> {
        if json.rotation.len() != json.n {
            return Err(Error::InvalidInput(format!(
                "rotation has {} entries, expected n = {}",
                json.rotation.len(),
                json.n
            )));
        }
        PlaneGraph::build(json.rotation.clone(), json.external_face)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::PlaneGraph;

    pub(crate) fn c4() -> PlaneGraph {
        // cycle 0-1-2-3; two faces of length 4
        PlaneGraph::build(vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]], None).unwrap()
    }

    /// K4 embedded with vertex 3 in the center of triangle 0-1-2.
    pub(crate) fn k4() -> PlaneGraph {
        PlaneGraph::build(
            vec![vec![2, 3, 1], vec![0, 3, 2], vec![1, 3, 0], vec![2, 1, 0]],
            None,
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fixtures::{c4, k4};

    #[test]
    fn cycle_has_two_faces_of_full_length() {
        let g = c4();
        assert_eq!(g.num_faces(), 2);
        assert!(g.faces().iter().all(|f| f.len() == 4));
    }

    #[test]
    fn k4_has_four_triangles() {
        let g = k4();
        assert_eq!(g.num_faces(), 4); // Euler: 4 - 6 + F = 2
        assert!(g.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn single_edge_walk_has_length_two() {
        let g = PlaneGraph::build(vec![vec![1], vec![0]], None).unwrap();
        assert_eq!(g.num_faces(), 1);
        assert_eq!(g.face(0).len(), 2);
        assert_eq!(g.face(0).verts, vec![0, 1]);
    }

    #[test]
    fn single_vertex_has_one_trivial_face() {
        let g = PlaneGraph::build(vec![vec![]], None).unwrap();
        assert_eq!(g.num_faces(), 1);
        assert_eq!(g.face(0).verts, vec![0]);
        assert!(g.face(0).darts.is_empty());
    }

    #[test]
    fn bowtie_external_walk_visits_cut_vertex_twice() {
        // triangles {0,1,2} and {2,3,4} glued at 2
        let g = crate::gen::bowtie_chain(1).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.num_faces(), 3);
        let ext = g.face(g.external_face());
        assert_eq!(ext.len(), 6);
        let cut = 2;
        assert_eq!(ext.occurrences(cut).len(), 2);
    }

    #[test]
    fn darts_partition_into_faces() {
        for g in [c4(), k4(), crate::gen::bowtie_chain(2).unwrap()] {
            let total: usize = g.faces().iter().map(|f| f.darts.len()).sum();
            assert_eq!(total, 2 * g.num_edges());
            let mut seen = std::collections::HashSet::new();
            for f in g.faces() {
                for &d in &f.darts {
                    assert!(seen.insert(d), "dart {d:?} in two walks");
                }
            }
        }
    }

    #[test]
    fn facial_square_of_c5_is_k5() {
        let g = crate::gen::cycle(5).unwrap();
        let sq = g.facial_square_edges();
        assert_eq!(sq.len(), 10);
    }

    #[test]
    fn facial_square_of_triangle_is_triangle() {
        let g = crate::gen::cycle(3).unwrap();
        assert_eq!(g.facial_square_edges(), g.edges().to_vec());
    }

    #[test]
    fn facial_square_of_path_adds_end_pair() {
        // path 0-1-2: one face (0,1,2,1); square adds {0,2}
        let g = PlaneGraph::build(vec![vec![1], vec![0, 2], vec![1]], None).unwrap();
        let sq = g.facial_square_edges();
        assert!(sq.contains(&(0, 2)));
        assert_eq!(sq.len(), 3);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            PlaneGraph::build(vec![vec![0]], None),
            Err(Error::MultiEdgeOrLoop(0))
        ));
        assert!(matches!(
            PlaneGraph::build(vec![vec![1, 1], vec![0, 0]], None),
            Err(Error::MultiEdgeOrLoop(0))
        ));
        assert!(matches!(
            PlaneGraph::build(vec![vec![1], vec![0], vec![3], vec![2]], None),
            Err(Error::Disconnected(2))
        ));
        // K4 with a mirrored rotation at one vertex: orientable but not genus 0
        let bad = PlaneGraph::build(
            vec![vec![2, 3, 1], vec![0, 3, 2], vec![1, 3, 0], vec![0, 1, 2]],
            None,
        );
        assert!(matches!(bad, Err(Error::NotPlanar { .. })));
    }

    #[test]
    fn json_round_trip_preserves_faces() {
        let g = k4();
        let j = g.to_json();
        let g2 = PlaneGraph::from_json(&j).unwrap();
        assert_eq!(g.external_face(), g2.external_face());
        for (a, b) in g.faces().iter().zip(g2.faces()) {
            assert_eq!(a.verts, b.verts);
        }
    }

    #[test]
    fn chord_insertion_splits_face() {
        let g = c4();
        // inner face of the 4-cycle: find a face and chord occurrences 0..2
        let f = 0;
        let g2 = g.insert_chords(&[(f, 0, 2)], None).unwrap();
        assert_eq!(g2.num_edges(), 5);
        assert_eq!(g2.num_faces(), 3);
        let tri = g2.faces().iter().filter(|w| w.len() == 3).count();
        assert_eq!(tri, 2);
    }
}
