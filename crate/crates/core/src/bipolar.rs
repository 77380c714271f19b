//! (s,t)-bipolar orientations of 2-connected plane graphs.
//!
//! The orientation comes from an st-numbering (streamlined lowpoint
//! construction): edges point from lower to higher number, giving an acyclic
//! orientation with unique source s and unique sink t. With both poles on the
//! external face, every face boundary then splits into two directed paths
//! from its local source s(F) to its local sink t(F); this is asserted per
//! face and an internal error is raised if it ever fails, since downstream
//! lemmas lean on it.

use crate::blocks;
use crate::error::{Error, Result};
use crate::plane_graph::{Dart, FaceId, PlaneGraph, Vertex};

#[derive(Debug, Clone)]
pub struct BipolarOrientation {
    pub s: Vertex,
    pub t: Vertex,
    /// st-number per vertex: s gets 0, t gets n-1.
    pub number: Vec<usize>,
    /// Directed edges (from, to), sorted.
    pub edges: Vec<(Vertex, Vertex)>,
    /// Per face id: (s(F), t(F)).
    pub face_poles: Vec<(Vertex, Vertex)>,
}

impl BipolarOrientation {
    pub fn face_poles(&self, f: FaceId) -> (Vertex, Vertex) {
        self.face_poles[f]
    }

    pub fn points_from(&self, u: Vertex, v: Vertex) -> bool {
        self.number[u] < self.number[v]
    }
}

pub fn orient(g: &PlaneGraph, s: Vertex, t: Vertex) -> Result<BipolarOrientation> {
    if s == t {
        return Err(Error::PolesEqual(s));
    }
    if !blocks::is_two_connected(g) {
        let d = blocks::decompose(g);
        return Err(Error::NotTwoConnected(
            d.cut_vertices.first().copied().unwrap_or(0),
        ));
    }
    let ext = g.face(g.external_face());
    if !ext.contains(s) || !ext.contains(t) {
        return Err(Error::PolesNotOnExternalFace { s, t });
    }
    let number = st_numbering_in(g.rotation(), s, t, g.n())?;
    let walks: Vec<&[Dart]> = g.faces().iter().map(|f| f.darts.as_slice()).collect();
    let face_poles = poles_per_face(&number, &walks)?;
    let mut edges: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .map(|&(u, v)| if number[u] < number[v] { (u, v) } else { (v, u) })
        .collect();
    edges.sort_unstable();
    Ok(BipolarOrientation {
        s,
        t,
        number,
        edges,
        face_poles,
    })
}

/// st-numbering of a biconnected (sub-)rotation system with `count` live
/// vertices. The edge {s,t} may be absent; a virtual tree edge s->t is used
/// for the DFS in that case, which leaves the numbering property intact for
/// all other vertices. Absent vertices keep usize::MAX.
pub(crate) fn st_numbering_in(
    rotation: &[Vec<Vertex>],
    s: Vertex,
    t: Vertex,
    count: usize,
) -> Result<Vec<usize>> {
    let n = rotation.len();
    if count == 2 {
        let mut number = vec![usize::MAX; n];
        number[s] = 0;
        number[t] = 1;
        return Ok(number);
    }
    const UNSET: usize = usize::MAX;
    let mut pre = vec![UNSET; n];
    let mut parent = vec![UNSET; n];
    let mut low_pre = vec![UNSET; n];
    let mut low_vert = vec![UNSET; n];
    let mut preorder: Vec<Vertex> = Vec::with_capacity(n);

    pre[s] = 0;
    preorder.push(s);
    pre[t] = 1;
    parent[t] = s;
    preorder.push(t);
    low_pre[t] = 0;
    low_vert[t] = s;

    // iterative DFS from t (s already visited via the virtual root edge)
    let mut timer = 2;
    let mut stack: Vec<(Vertex, usize)> = vec![(t, 0)];
    while let Some(&mut (u, ref mut i)) = stack.last_mut() {
        if *i < rotation[u].len() {
            let v = rotation[u][*i];
            *i += 1;
            if pre[v] == UNSET {
                pre[v] = timer;
                timer += 1;
                parent[v] = u;
                low_pre[v] = pre[v];
                low_vert[v] = v;
                preorder.push(v);
                stack.push((v, 0));
            } else if v != parent[u] && pre[v] < low_pre[u] {
                low_pre[u] = pre[v];
                low_vert[u] = v;
            }
        } else {
            stack.pop();
            if let Some(&(p, _)) = stack.last() {
                if low_pre[u] < low_pre[p] {
                    low_pre[p] = low_pre[u];
                    low_vert[p] = low_vert[u];
                }
            }
        }
    }
    if preorder.len() < count {
        return Err(Error::Disconnected(
            (0..n)
                .find(|&v| pre[v] == UNSET && !rotation[v].is_empty())
                .unwrap_or(0),
        ));
    }

    // doubly linked list seeded with [s, t]; vertices join next to their parent
    let mut next = vec![UNSET; n];
    let mut prev = vec![UNSET; n];
    next[s] = t;
    prev[t] = s;
    let mut sign_plus = vec![false; n]; // false = minus
    sign_plus[s] = false;

    let insert_before = |x: Vertex, y: Vertex, next: &mut [usize], prev: &mut [usize]| {
        let p = prev[y];
        prev[x] = p;
        next[x] = y;
        if p != UNSET {
            next[p] = x;
        }
        prev[y] = x;
    };
    for &v in preorder.iter().skip(2) {
        let p = parent[v];
        if !sign_plus[low_vert[v]] {
            insert_before(v, p, &mut next, &mut prev);
            sign_plus[p] = true;
        } else {
            // insert after p
            let q = next[p];
            next[p] = v;
            prev[v] = p;
            next[v] = q;
            if q != UNSET {
                prev[q] = v;
            }
            sign_plus[p] = false;
        }
    }

    let mut number = vec![UNSET; n];
    let mut cur = s;
    // nothing is ever inserted before s, so walk forward from s
    let mut k = 0;
    while cur != UNSET {
        number[cur] = k;
        k += 1;
        cur = next[cur];
    }
    if k != count || number[s] != 0 || number[t] != count - 1 {
        return Err(Error::Internal(format!(
            "st-numbering failed: covered {k}/{count}, s at {:?}, t at {:?}",
            number[s], number[t]
        )));
    }
    // every inner vertex needs a smaller and a larger neighbor
    for v in 0..n {
        if v == s || v == t || rotation[v].is_empty() {
            continue;
        }
        let has_in = rotation[v].iter().any(|&w| number[w] < number[v]);
        let has_out = rotation[v].iter().any(|&w| number[w] > number[v]);
        if !has_in || !has_out {
            return Err(Error::Internal(format!(
                "st-numbering property violated at vertex {v}"
            )));
        }
    }
    Ok(number)
}

/// Local source and sink of each face; errors unless each boundary consists
/// of exactly two directed paths between them.
pub(crate) fn poles_per_face(
    number: &[usize],
    walks: &[&[Dart]],
) -> Result<Vec<(Vertex, Vertex)>> {
    let mut out = Vec::with_capacity(walks.len());
    for (fid, darts) in walks.iter().enumerate() {
        let l = darts.len();
        let mut source = None;
        let mut sink = None;
        let mut sources = 0;
        let mut sinks = 0;
        for i in 0..l {
            let (w, b) = darts[i];
            let a = darts[(i + l - 1) % l].0;
            if number[w] < number[a] && number[w] < number[b] {
                sources += 1;
                source = Some(w);
            } else if number[w] > number[a] && number[w] > number[b] {
                sinks += 1;
                sink = Some(w);
            }
        }
        match (source, sink, sources, sinks) {
            (Some(s), Some(t), 1, 1) => out.push((s, t)),
            _ => {
                return Err(Error::Internal(format!(
                    "face {fid} does not split into two directed paths \
                     ({sources} local sources, {sinks} local sinks)"
                )))
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    #[test]
    fn single_edge() {
        let g = gen::cycle(2).unwrap();
        let o = orient(&g, 0, 1).unwrap();
        assert_eq!(o.edges, vec![(0, 1)]);
        assert_eq!(o.face_poles(0), (0, 1));
    }

    #[test]
    fn c4_opposite_poles() {
        let g = gen::cycle(4).unwrap();
        let o = orient(&g, 0, 2).unwrap();
        // both internal paths directed 0 -> 2
        assert!(o.points_from(0, 1) && o.points_from(1, 2));
        assert!(o.points_from(0, 3) && o.points_from(3, 2));
        for f in 0..g.num_faces() {
            assert_eq!(o.face_poles(f), (0, 2));
        }
    }

    #[test]
    fn triangle_face_poles() {
        let g = gen::cycle(3).unwrap();
        let o = orient(&g, 0, 2).unwrap();
        // edges 0->1, 1->2, 0->2: poles (0, 2) on both faces
        for f in 0..g.num_faces() {
            assert_eq!(o.face_poles(f), (0, 2));
        }
    }

    #[test]
    fn k4_every_inner_vertex_mixed() {
        let g = crate::plane_graph::fixtures::k4();
        let ext = g.face(g.external_face()).verts.clone();
        let (s, t) = (ext[0], ext[1]);
        let o = orient(&g, s, t).unwrap();
        for v in 0..4 {
            if v == s || v == t {
                continue;
            }
            assert!(g.neighbors(v).iter().any(|&w| o.points_from(w, v)));
            assert!(g.neighbors(v).iter().any(|&w| o.points_from(v, w)));
        }
    }

    #[test]
    fn external_face_poles_are_s_t() {
        for seed in 0..20 {
            let g = gen::random_plane(24, seed, gen::Style::TwoConnected).unwrap();
            let ext = g.face(g.external_face()).verts.clone();
            let (s, t) = (ext[0], ext[ext.len() / 2]);
            let o = orient(&g, s, t).unwrap();
            assert_eq!(o.face_poles(g.external_face()), (s, t));
        }
    }

    #[test]
    fn regular_for_at_most_two_faces() {
        // any vertex is a pole of all but at most two of its faces
        for seed in 0..30 {
            let g = gen::random_plane(40, seed, gen::Style::TwoConnected).unwrap();
            let ext = g.face(g.external_face()).verts.clone();
            let (s, t) = (ext[0], ext[1]);
            let o = orient(&g, s, t).unwrap();
            let mut non_pole = vec![0usize; g.n()];
            for f in g.faces() {
                let (sf, tf) = o.face_poles(f.id);
                for &v in &f.verts {
                    if v != sf && v != tf {
                        non_pole[v] += 1;
                    }
                }
            }
            for v in 0..g.n() {
                assert!(non_pole[v] <= 2, "vertex {v} regular for {}", non_pole[v]);
                if v == s || v == t {
                    assert_eq!(non_pole[v], 0);
                }
            }
        }
    }

    #[test]
    fn source_sink_degrees() {
        let g = gen::maximal_planar(30, 5).unwrap();
        let ext = g.face(g.external_face()).verts.clone();
        let (s, t) = (ext[0], ext[1]);
        let o = orient(&g, s, t).unwrap();
        assert!(g.neighbors(s).iter().all(|&w| o.points_from(s, w)));
        assert!(g.neighbors(t).iter().all(|&w| o.points_from(w, t)));
    }

    #[test]
    fn rejects_bad_poles() {
        let g = gen::bowtie_chain(1).unwrap();
        assert!(matches!(orient(&g, 0, 1), Err(Error::NotTwoConnected(2))));
        let c = gen::cycle(4).unwrap();
        assert!(matches!(orient(&c, 1, 1), Err(Error::PolesEqual(1))));
    }
}
