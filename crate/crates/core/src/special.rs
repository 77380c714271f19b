//! The regular/special classification of vertex occurrences on faces.
//!
//! Every face ends up with exactly two special vertices, every vertex is
//! regular for at most two faces, and the designated poles s, t are regular
//! for none. 2-connected graphs get their per-face specials straight from the
//! bipolar orientation poles; graphs with cut vertices are peeled one hanging
//! chunk at a time, exactly mirroring the inductive construction, with an
//! explicit work stack instead of recursion.
//!
//! Faces of intermediate subgraphs are identified by representative darts:
//! when a chunk is split off, the merge face of the parent splits into one
//! face per side and every other face passes through with its dart set
//! unchanged, so a single dart pins a face across the whole peeling.

use crate::bipolar;
use crate::blocks::{self, BlockDecomposition};
use crate::error::{Error, Result};
use crate::plane_graph::{trace_faces, Dart, FaceId, PlaneGraph, Vertex};
use std::collections::HashMap;

#[derive(Debug, Clone)]
pub struct SpecialAssignment {
    pub s: Vertex,
    pub t: Vertex,
    /// Per face id: the two special vertices.
    pub face_specials: Vec<[Vertex; 2]>,
    /// Per face id: the special occurrence positions on the face walk.
    pub special_occurrences: Vec<[usize; 2]>,
    /// Per vertex: faces the vertex occurs on without being special there.
    pub regular_faces: Vec<Vec<FaceId>>,
}

impl SpecialAssignment {
    pub fn is_special_for(&self, v: Vertex, f: FaceId) -> bool {
        self.face_specials[f].contains(&v)
    }
}

/// Block–cut decomposition; the supporting structure of the recursion.
pub fn blocks_and_cuts(g: &PlaneGraph) -> BlockDecomposition {
    blocks::decompose(g)
}

struct Task {
    members: Vec<bool>,
    count: usize,
    sigma: Vertex,
    tau: Vertex,
    /// A dart on the boundary of the subgraph's external face.
    ext_dart: Dart,
    /// Representative dart of a subgraph face -> final face of g whose
    /// specials it determines. Untargeted faces are peel leftovers whose
    /// assignments are discarded.
    targets: Vec<(Dart, FaceId)>,
}

pub fn assign(g: &PlaneGraph, s: Vertex, t: Vertex) -> Result<SpecialAssignment> {
    if s == t {
        return Err(Error::PolesEqual(s));
    }
    let ext = g.face(g.external_face());
    if !ext.contains(s) || !ext.contains(t) {
        return Err(Error::PolesNotOnExternalFace { s, t });
    }

    let mut specials: Vec<Option<[Dart; 2]>> = vec![None; g.num_faces()];
    let root = Task {
        members: vec![true; g.n()],
        count: g.n(),
        sigma: s,
        tau: t,
        ext_dart: ext.darts[0],
        targets: g.faces().iter().map(|f| (f.darts[0], f.id)).collect(),
    };
    let mut stack = vec![root];
    while let Some(task) = stack.pop() {
        process(g, task, &mut specials, &mut stack)?;
    }

    let mut face_specials = Vec::with_capacity(g.num_faces());
    let mut special_occurrences = Vec::with_capacity(g.num_faces());
    for (fid, rec) in specials.iter().enumerate() {
        let [d1, d2] = rec.ok_or_else(|| {
            Error::Internal(format!("face {fid} received no special assignment"))
        })?;
        let mut pair = Vec::new();
        for d in [d1, d2] {
            let (f, pos) = g
                .face_of_dart(d)
                .ok_or_else(|| Error::Internal(format!("special dart {d:?} unknown")))?;
            if f != fid {
                return Err(Error::Internal(format!(
                    "special dart {d:?} recorded for face {fid} but lies on {f}"
                )));
            }
            pair.push((pos, d.0));
        }
        face_specials.push([pair[0].1, pair[1].1]);
        special_occurrences.push([pair[0].0, pair[1].0]);
    }

    let mut regular_faces = vec![Vec::new(); g.n()];
    for f in g.faces() {
        let mut verts = f.verts.clone();
        verts.sort_unstable();
        verts.dedup();
        for v in verts {
            if !face_specials[f.id].contains(&v) {
                regular_faces[v].push(f.id);
            }
        }
    }

    let sa = SpecialAssignment {
        s,
        t,
        face_specials,
        special_occurrences,
        regular_faces,
    };
    check_invariants(g, &sa)?;
    Ok(sa)
}

fn check_invariants(g: &PlaneGraph, sa: &SpecialAssignment) -> Result<()> {
    for (f, pair) in sa.face_specials.iter().enumerate() {
        if pair[0] == pair[1] {
            return Err(Error::Internal(format!(
                "face {f} has coincident specials {pair:?}"
            )));
        }
    }
    for (v, faces) in sa.regular_faces.iter().enumerate() {
        if faces.len() > 2 {
            return Err(Error::Internal(format!(
                "vertex {v} regular for {} faces: {faces:?}",
                faces.len()
            )));
        }
    }
    if !sa.regular_faces[sa.s].is_empty() || !sa.regular_faces[sa.t].is_empty() {
        return Err(Error::Internal(format!(
            "poles must not be regular anywhere (s: {:?}, t: {:?})",
            sa.regular_faces[sa.s], sa.regular_faces[sa.t]
        )));
    }
    let _ = g;
    Ok(())
}

fn process(
    g: &PlaneGraph,
    task: Task,
    specials: &mut Vec<Option<[Dart; 2]>>,
    stack: &mut Vec<Task>,
) -> Result<()> {
    let rot = blocks::induced_rotation(g, &task.members);
    let walks = trace_faces(&rot);
    let mut local_of: HashMap<Dart, usize> = HashMap::new();
    for (lf, w) in walks.iter().enumerate() {
        for &d in w {
            local_of.insert(d, lf);
        }
    }
    let mut local_target: Vec<Option<FaceId>> = vec![None; walks.len()];
    for &(d, fid) in &task.targets {
        let lf = *local_of
            .get(&d)
            .ok_or_else(|| Error::Internal(format!("target dart {d:?} missing in subgraph")))?;
        if local_target[lf].is_some() {
            return Err(Error::Internal(format!(
                "two targets collided in one subgraph face (dart {d:?})"
            )));
        }
        local_target[lf] = Some(fid);
    }
    let ext_local = *local_of
        .get(&task.ext_dart)
        .ok_or_else(|| Error::Internal("external dart missing in subgraph".into()))?;

    let cuts = cut_vertices_in(&rot, task.sigma);
    if cuts.is_empty() {
        // 2-connected leaf (including the single edge): specials are the
        // bipolar face poles.
        let number = bipolar::st_numbering_in(&rot, task.sigma, task.tau, task.count)?;
        let walk_refs: Vec<&[Dart]> = walks.iter().map(|w| w.as_slice()).collect();
        let poles = bipolar::poles_per_face(&number, &walk_refs)?;
        for (lf, walk) in walks.iter().enumerate() {
            let Some(fid) = local_target[lf] else { continue };
            let (src, snk) = poles[lf];
            let d_src = *walk.iter().find(|d| d.0 == src).unwrap();
            let d_snk = *walk.iter().find(|d| d.0 == snk).unwrap();
            specials[fid] = Some([d_src, d_snk]);
        }
        return Ok(());
    }

    let v = cuts[0];
    let comps = components_in(&rot, &task.members, v);
    let has = |c: &Vec<Vertex>, x: Vertex| c.binary_search(&x).is_ok();

    // Components attach to v along corner arcs that form a non-crossing
    // partition of its rotation. Only a component whose arc is contiguous
    // can be peeled with a unique merge face; at least two such components
    // always exist, and when no pole-free one is available the two
    // contiguous arcs are exactly the pole components.
    let mut comp_of = vec![usize::MAX; g.n()];
    for (ci, c) in comps.iter().enumerate() {
        for &x in c {
            comp_of[x] = ci;
        }
    }
    let ring: Vec<usize> = rot[v].iter().map(|&w| comp_of[w]).collect();
    let contiguous = |ci: usize| -> bool {
        let l = ring.len();
        let switches = (0..l)
            .filter(|&i| (ring[i] == ci) != (ring[(i + 1) % l] == ci))
            .count();
        switches == 2
    };
    let free = comps.iter().find(|c| {
        !(task.sigma != v && has(c, task.sigma))
            && !(task.tau != v && has(c, task.tau))
            && contiguous(comp_of[c[0]])
    });

    // dart side classification relative to the peeled chunk
    let side_split = |chunk: &[bool]| -> Result<(usize, Dart, Dart, Vec<i8>)> {
        // returns (merge face, first G'-side dart, first chunk-side dart,
        // per-face side: -1 mixed marker resolved, 0 = G', 1 = chunk)
        let mut face_side: Vec<i8> = Vec::with_capacity(walks.len());
        let mut merge = None;
        let mut d1 = None;
        let mut d2 = None;
        for (lf, w) in walks.iter().enumerate() {
            let mut any_chunk = false;
            let mut any_main = false;
            for &(a, b) in w {
                if chunk[a] || chunk[b] {
                    any_chunk = true;
                } else {
                    any_main = true;
                }
            }
            if any_chunk && any_main {
                if merge.replace(lf).is_some() {
                    return Err(Error::Internal("two merge faces in a peel".into()));
                }
                d1 = w.iter().copied().find(|&(a, b)| !chunk[a] && !chunk[b]);
                d2 = w.iter().copied().find(|&(a, b)| chunk[a] || chunk[b]);
                face_side.push(2);
            } else {
                face_side.push(if any_chunk { 1 } else { 0 });
            }
        }
        let merge = merge.ok_or_else(|| Error::Internal("peel found no merge face".into()))?;
        Ok((merge, d1.unwrap(), d2.unwrap(), face_side))
    };

    let mut members1 = task.members.clone();
    let mut members2 = vec![false; g.n()];
    members2[v] = true;

    if let Some(gk) = free {
        // peel a chunk containing neither pole
        let mut chunk = vec![false; g.n()];
        for &x in gk {
            chunk[x] = true;
            members1[x] = false;
            members2[x] = true;
        }
        let (merge, d1, d2, face_side) = side_split(&chunk)?;
        // w: smallest vertex other than v on the chunk-side part of the merge
        // face boundary (that part is the external face of the chunk).
        let w = walks[merge]
            .iter()
            .filter(|&&(a, b)| chunk[a] || chunk[b])
            .map(|&(a, _)| a)
            .filter(|&a| a != v)
            .min()
            .ok_or_else(|| Error::Internal("chunk boundary has no candidate pole".into()))?;

        let mut targets1 = Vec::new();
        let mut targets2 = Vec::new();
        for (lf, w_) in walks.iter().enumerate() {
            let Some(fid) = local_target[lf] else { continue };
            match face_side[lf] {
                2 => targets1.push((d1, fid)), // merge face inherits from the kept side
                0 => targets1.push((w_[0], fid)),
                _ => targets2.push((w_[0], fid)),
            }
        }
        let ext1 = if ext_local == merge || face_side[ext_local] == 1 {
            d1
        } else {
            walks[ext_local][0]
        };
        if face_side[ext_local] == 1 {
            return Err(Error::Internal(
                "external face ended up inside a poleless chunk".into(),
            ));
        }
        let count2 = gk.len() + 1;
        let count1 = task.count - gk.len();
        stack.push(Task {
            members: members1,
            count: count1,
            sigma: task.sigma,
            tau: task.tau,
            ext_dart: ext1,
            targets: targets1,
        });
        stack.push(Task {
            members: members2,
            count: count2,
            sigma: v,
            tau: w,
            ext_dart: d2,
            targets: targets2,
        });
    } else {
        // both poles sit in distinct components and those are the only
        // contiguous arcs: peel the tau component against everything else.
        // The merge face is the external face and its specials are the poles.
        if task.sigma == v || task.tau == v {
            return Err(Error::Internal(format!(
                "unexpected peel shape at cut {v}: pole on the cut vertex with \
                 no contiguous pole-free component"
            )));
        }
        let g2 = comps
            .iter()
            .find(|c| has(c, task.tau))
            .ok_or_else(|| Error::Internal("tau component missing".into()))?;
        if !contiguous(comp_of[g2[0]]) || has(g2, task.sigma) {
            return Err(Error::Internal(format!(
                "tau component at cut {v} is not a peelable arc"
            )));
        }
        let mut chunk = vec![false; g.n()];
        for &x in g2 {
            chunk[x] = true;
            members1[x] = false;
            members2[x] = true;
        }
        let (merge, d1, d2, face_side) = side_split(&chunk)?;
        if merge != ext_local {
            return Err(Error::Internal(
                "pole-splitting cut must merge across the external face".into(),
            ));
        }
        if let Some(fid) = local_target[merge] {
            let walk = &walks[merge];
            let ds = *walk.iter().find(|d| d.0 == task.sigma).ok_or_else(|| {
                Error::Internal("sigma not on external boundary".into())
            })?;
            let dt = *walk.iter().find(|d| d.0 == task.tau).ok_or_else(|| {
                Error::Internal("tau not on external boundary".into())
            })?;
            specials[fid] = Some([ds, dt]);
        }
        let mut targets1 = Vec::new();
        let mut targets2 = Vec::new();
        for (lf, w_) in walks.iter().enumerate() {
            let Some(fid) = local_target[lf] else { continue };
            match face_side[lf] {
                2 => {} // specials fixed above
                0 => targets1.push((w_[0], fid)),
                _ => targets2.push((w_[0], fid)),
            }
        }
        let count2 = g2.len() + 1;
        let count1 = task.count - g2.len();
        stack.push(Task {
            members: members1,
            count: count1,
            sigma: task.sigma,
            tau: v,
            ext_dart: d1,
            targets: targets1,
        });
        stack.push(Task {
            members: members2,
            count: count2,
            sigma: v,
            tau: task.tau,
            ext_dart: d2,
            targets: targets2,
        });
    }
    Ok(())
}

/// Cut vertices of the sub-rotation reachable from `start`, ascending.
fn cut_vertices_in(rot: &[Vec<Vertex>], start: Vertex) -> Vec<Vertex> {
    let n = rot.len();
    const UNSET: usize = usize::MAX;
    let mut disc = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![UNSET; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    disc[start] = timer;
    low[start] = timer;
    timer += 1;
    let mut stack = vec![(start, 0usize)];
    let mut root_children = 0;
    while let Some(&mut (u, ref mut i)) = stack.last_mut() {
        if *i < rot[u].len() {
            let w = rot[u][*i];
            *i += 1;
            if disc[w] == UNSET {
                parent[w] = u;
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                if u == start {
                    root_children += 1;
                }
                stack.push((w, 0));
            } else if w != parent[u] {
                low[u] = low[u].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _)) = stack.last() {
                low[p] = low[p].min(low[u]);
                if p != start && low[u] >= disc[p] {
                    is_cut[p] = true;
                }
            }
        }
    }
    if root_children > 1 {
        is_cut[start] = true;
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

/// Components of the sub-rotation minus vertex `v`, sorted vertex lists in
/// smallest-member order.
fn components_in(rot: &[Vec<Vertex>], members: &[bool], v: Vertex) -> Vec<Vec<Vertex>> {
    let n = rot.len();
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut out = Vec::new();
    for s in 0..n {
        if !members[s] || seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut st = vec![s];
        while let Some(u) = st.pop() {
            for &w in &rot[u] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    st.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn check(g: &PlaneGraph, s: Vertex, t: Vertex) -> SpecialAssignment {
        assign(g, s, t).unwrap()
    }

    #[test]
    fn single_edge_both_special() {
        let g = gen::cycle(2).unwrap();
        let sa = check(&g, 0, 1);
        assert_eq!(sa.face_specials, vec![[0, 1]]);
        assert!(sa.regular_faces.iter().all(Vec::is_empty));
    }

    #[test]
    fn two_connected_specials_are_bipolar_poles() {
        let g = gen::cycle(4).unwrap();
        let sa = check(&g, 0, 2);
        let o = bipolar::orient(&g, 0, 2).unwrap();
        for f in 0..g.num_faces() {
            let (sf, tf) = o.face_poles(f);
            assert_eq!(sa.face_specials[f], [sf, tf]);
        }
    }

    #[test]
    fn bowtie_matches_hand_trace() {
        // triangles (0,1,2), (2,3,4); cut vertex 2; poles 0, 1 in the first
        let g = gen::bowtie_chain(1).unwrap();
        let sa = check(&g, 0, 1);
        let ext = g.external_face();
        // merged external face inherits the first triangle's poles {0, 1}
        let mut ext_specials = sa.face_specials[ext];
        ext_specials.sort_unstable();
        assert_eq!(ext_specials, [0, 1]);
        // auxiliary pole w = 3 is regular only for the merged face
        assert!(sa.regular_faces[3].len() <= 1);
        if let Some(&f) = sa.regular_faces[3].first() {
            assert_eq!(f, ext);
        }
        // cut vertex regular for at most the merged face
        assert!(sa.regular_faces[2].len() <= 2);
    }

    #[test]
    fn pole_on_cut_vertex() {
        // s equal to the cut vertex exercises the generalized peel
        let g = gen::bowtie_chain(1).unwrap();
        let ext = g.face(g.external_face()).clone();
        assert!(ext.contains(2));
        let sa = check(&g, 2, 0);
        assert!(sa.regular_faces[2].is_empty());
        assert!(sa.regular_faces[0].is_empty());
    }

    #[test]
    fn chains_and_random_graphs_hold_invariants() {
        for k in 1..6 {
            let g = gen::bowtie_chain(k).unwrap();
            let ext = g.face(g.external_face()).verts.clone();
            check(&g, ext[0], ext[1]);
        }
        for seed in 0..60 {
            let style = if seed % 2 == 0 {
                gen::Style::CutRich
            } else {
                gen::Style::Mixed
            };
            let g = gen::random_plane(40, seed, style).unwrap();
            if g.n() < 2 {
                continue;
            }
            let ext = g.face(g.external_face()).verts.clone();
            let (s, t) = (ext[0], *ext.iter().find(|&&x| x != ext[0]).unwrap());
            // assign() itself asserts all three invariants
            check(&g, s, t);
        }
    }

    #[test]
    fn rejects_poles_off_external_face() {
        let g = gen::stacked(8, 1).unwrap();
        let ext = g.face(g.external_face()).verts.clone();
        let inner = (0..g.n()).find(|v| !ext.contains(v)).unwrap();
        assert!(matches!(
            assign(&g, ext[0], inner),
            Err(Error::PolesNotOnExternalFace { .. })
        ));
    }
}
