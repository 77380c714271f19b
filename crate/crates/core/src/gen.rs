//! Plane-graph generators: fixed families, seeded random instances, and the
//! exhaustive small-map enumeration used by the cross-oracle suites.

use crate::error::{Error, Result};
use crate::plane_graph::{Dart, PlaneGraph, Vertex};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// C_n for n >= 3; n = 1 and n = 2 give the single vertex and single edge.
pub fn cycle(n: usize) -> Result<PlaneGraph> {
    match n {
        0 => Err(Error::InvalidSize("cycle needs n >= 1".into())),
        1 => PlaneGraph::build(vec![vec![]], None),
        2 => PlaneGraph::build(vec![vec![1], vec![0]], None),
        _ => {
            let rot = (0..n)
                .map(|i| vec![(i + 1) % n, (i + n - 1) % n])
                .collect();
            PlaneGraph::build(rot, None)
        }
    }
}

/// Path v0 - v1 - ... - v_{n-1}.
pub fn path(n: usize) -> Result<PlaneGraph> {
    match n {
        0 => Err(Error::InvalidSize("path needs n >= 1".into())),
        1 => PlaneGraph::build(vec![vec![]], None),
        _ => {
            let mut rot = vec![vec![1]];
            for i in 1..n - 1 {
                rot.push(vec![i - 1, i + 1]);
            }
            rot.push(vec![n - 2]);
            PlaneGraph::build(rot, None)
        }
    }
}

/// Chain of k+1 triangles glued serially at k cut vertices.
pub fn bowtie_chain(k: usize) -> Result<PlaneGraph> {
    if k == 0 {
        return cycle(3);
    }
    let n = 3 + 2 * k;
    let mut rot: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    // triangle i = (a, b, c) = (2i, 2i+1, 2i+2), clockwise rotations
    for i in 0..=k {
        let (a, b, c) = (2 * i, 2 * i + 1, 2 * i + 2);
        rot[a].extend([c, b]);
        rot[b].extend([a, c]);
        rot[c].extend([b, a]);
    }
    PlaneGraph::build(rot, None)
}

/// Incrementally built triangulation with explicit face tracking, so vertex
/// insertion and diagonal flips stay O(deg) without retracing.
struct TriBuilder {
    rot: Vec<Vec<Vertex>>,
    faces: Vec<[Vertex; 3]>,
    external: usize,
}

impl TriBuilder {
    fn triangle() -> Self {
        // traced faces of this rotation: internal (0,2,1), external (0,1,2)
        TriBuilder {
            rot: vec![vec![2, 1], vec![0, 2], vec![1, 0]],
            faces: vec![[0, 2, 1], [0, 1, 2]],
            external: 1,
        }
    }

    fn pos(&self, u: Vertex, v: Vertex) -> usize {
        self.rot[u].iter().position(|&x| x == v).unwrap()
    }

    /// New vertex starred into face `fi` = walk (a, b, c).
    fn insert(&mut self, fi: usize) {
        let [a, b, c] = self.faces[fi];
        let w = self.rot.len();
        self.rot.push(vec![a, b, c]);
        // at each corner, w goes right after the outgoing walk dart
        for (x, y) in [(a, b), (b, c), (c, a)] {
            let p = self.pos(x, y);
            self.rot[x].insert(p + 1, w);
        }
        let was_external = fi == self.external;
        self.faces[fi] = [a, b, w];
        self.faces.push([b, c, w]);
        self.faces.push([c, a, w]);
        if was_external {
            // new unbounded face: pick deterministically
            self.external = fi;
        }
    }

    fn face_with_dart(&self, d: Dart) -> Option<usize> {
        self.faces.iter().position(|&[a, b, c]| {
            (a, b) == d || (b, c) == d || (c, a) == d
        })
    }

    /// Flip edge {u, v} shared by triangles (u,v,x) and (v,u,y) to {x, y}.
    fn try_flip(&mut self, u: Vertex, v: Vertex) -> bool {
        let (Some(f1), Some(f2)) = (self.face_with_dart((u, v)), self.face_with_dart((v, u)))
        else {
            return false;
        };
        let other = |f: [Vertex; 3], a: Vertex, b: Vertex| {
            f.iter().copied().find(|&z| z != a && z != b).unwrap()
        };
        let x = other(self.faces[f1], u, v);
        let y = other(self.faces[f2], u, v);
        if x == y || self.rot[x].contains(&y) {
            return false;
        }
        if f1 == self.external || f2 == self.external {
            return false; // keep the external triangle stable
        }
        // remove {u,v}
        let pu = self.pos(u, v);
        self.rot[u].remove(pu);
        let pv = self.pos(v, u);
        self.rot[v].remove(pv);
        // x: between u and v (σ_x had ..., u, v, ...); insert y after u
        let px = self.pos(x, u);
        self.rot[x].insert(px + 1, y);
        let py = self.pos(y, v);
        self.rot[y].insert(py + 1, x);
        self.faces[f1] = [x, u, y];
        self.faces[f2] = [x, y, v];
        true
    }

    fn finish(self) -> Result<PlaneGraph> {
        let ext = self.faces[self.external];
        let g = PlaneGraph::build(self.rot, None)?;
        let (fid, _) = g
            .face_of_dart((ext[0], ext[1]))
            .ok_or_else(|| Error::Internal("external dart lost".into()))?;
        PlaneGraph::build(g.rotation().to_vec(), Some(fid))
    }
}

/// Random maximal planar graph: vertex insertion into random faces, then
/// random diagonal flips. E = 3n - 6.
pub fn maximal_planar(n: usize, seed: u64) -> Result<PlaneGraph> {
    if n < 3 {
        return Err(Error::InvalidSize("maximal-planar needs n >= 3".into()));
    }
    let mut rng = rng(seed);
    let mut t = TriBuilder::triangle();
    while t.rot.len() < n {
        let fi = rng.gen_range(0..t.faces.len());
        t.insert(fi);
    }
    let flips = 3 * n;
    for _ in 0..flips {
        let u = rng.gen_range(0..t.rot.len());
        if t.rot[u].is_empty() {
            continue;
        }
        let v = t.rot[u][rng.gen_range(0..t.rot[u].len())];
        t.try_flip(u, v);
    }
    t.finish()
}

/// Stacked (Apollonian) triangulation: insertion into bounded faces only.
pub fn stacked(n: usize, seed: u64) -> Result<PlaneGraph> {
    if n < 3 {
        return Err(Error::InvalidSize("stacked needs n >= 3".into()));
    }
    let mut rng = rng(seed);
    let mut t = TriBuilder::triangle();
    while t.rot.len() < n {
        let mut fi = rng.gen_range(0..t.faces.len());
        if fi == t.external {
            fi = (fi + 1) % t.faces.len();
        }
        t.insert(fi);
    }
    t.finish()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    /// Maximal planar with random 2-connectivity-preserving edge deletions.
    TwoConnected,
    /// Tree of small blocks glued at cut vertices; many cut vertices.
    CutRich,
    Mixed,
}

/// Random connected plane graph for the test suites.
pub fn random_plane(n: usize, seed: u64, style: Style) -> Result<PlaneGraph> {
    let mut r = rng(seed);
    match style {
        Style::TwoConnected => {
            if n < 3 {
                return cycle(n.max(1));
            }
            let g = maximal_planar(n, r.gen())?;
            Ok(delete_edges_keeping(&g, &mut r, true))
        }
        Style::CutRich => cut_rich(n, &mut r),
        Style::Mixed => {
            if r.gen_bool(0.5) {
                random_plane(n, r.gen(), Style::TwoConnected)
            } else {
                random_plane(n, r.gen(), Style::CutRich)
            }
        }
    }
}

/// Delete random edges while staying connected (and 2-connected when asked).
fn delete_edges_keeping(g: &PlaneGraph, rng: &mut ChaCha8Rng, two_connected: bool) -> PlaneGraph {
    let mut rot: Vec<Vec<Vertex>> = g.rotation().to_vec();
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().to_vec();
    edges.shuffle(rng);
    let attempts = edges.len() / 2;
    for &(u, v) in edges.iter().take(attempts) {
        let pu = rot[u].iter().position(|&x| x == v);
        let pv = rot[v].iter().position(|&x| x == u);
        let (Some(pu), Some(pv)) = (pu, pv) else { continue };
        if rot[u].len() <= 2 || rot[v].len() <= 2 {
            continue; // keep minimum degree for 2-connectivity candidates
        }
        rot[u].remove(pu);
        rot[v].remove(pv);
        let ok = match PlaneGraph::build(rot.clone(), None) {
            Ok(h) => !two_connected || crate::blocks::decompose(&h).cut_vertices.is_empty(),
            Err(_) => false,
        };
        if !ok {
            rot[u].insert(pu, v);
            rot[v].insert(pv, u);
        }
    }
    PlaneGraph::build(rot, None).expect("deletions kept validity")
}

/// Glue random small blocks (triangles, squares, K4s, single edges) into a
/// random tree shape; every glue point is a cut vertex.
fn cut_rich(n: usize, rng: &mut ChaCha8Rng) -> Result<PlaneGraph> {
    let n = n.max(1);
    let mut rot: Vec<Vec<Vertex>> = vec![Vec::new()];
    while rot.len() < n {
        let cut = rng.gen_range(0..rot.len());
        let remaining = n - rot.len();
        let kind = rng.gen_range(0..4u8);
        let base = rot.len();
        // piece rotations, local vertex 0 = the cut vertex
        let piece: Vec<Vec<usize>> = match kind {
            0 if remaining >= 2 => vec![vec![2, 1], vec![0, 2], vec![1, 0]], // triangle
            1 if remaining >= 3 => vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]], // C4
            2 if remaining >= 3 => vec![
                vec![2, 3, 1],
                vec![0, 3, 2],
                vec![1, 3, 0],
                vec![2, 1, 0],
            ], // K4
            _ => vec![vec![1], vec![0]], // bridge
        };
        let map = |x: usize| if x == 0 { cut } else { base + x - 1 };
        for (lv, neigh) in piece.iter().enumerate() {
            let mapped: Vec<usize> = neigh.iter().map(|&x| map(x)).collect();
            if lv == 0 {
                // splice the piece's corner into the cut vertex rotation
                let at = if rot[cut].is_empty() {
                    0
                } else {
                    rng.gen_range(0..=rot[cut].len())
                };
                for (k, &x) in mapped.iter().enumerate() {
                    rot[cut].insert(at + k, x);
                }
            } else {
                rot.push(mapped);
            }
        }
    }
    PlaneGraph::build(rot, None)
}

/// Uniform random lists: each vertex gets `size` distinct colors from a
/// universe of `universe` colors.
pub fn random_lists(
    n: usize,
    size: usize,
    universe: u64,
    seed: u64,
) -> crate::list::ListAssignment {
    let mut r = rng(seed);
    let lists = (0..n)
        .map(|_| {
            let mut set = BTreeSet::new();
            while set.len() < size {
                set.insert(r.gen_range(0..universe));
            }
            set.into_iter().collect()
        })
        .collect();
    crate::list::ListAssignment::new(lists)
}

// ---- exhaustive enumeration of small combinatorial maps ----

/// Canonical encoding of a connected map, minimal over all starting darts.
/// Two rotation systems get the same form iff they differ by a relabeling
/// (orientation-preserving; mirror images stay distinct).
pub fn canonical_map_form(rotation: &[Vec<Vertex>]) -> Vec<u32> {
    let n = rotation.len();
    if n == 1 {
        return vec![0];
    }
    let mut best: Option<Vec<u32>> = None;
    for u0 in 0..n {
        for &v0 in &rotation[u0] {
            let mut label = vec![u32::MAX; n];
            let mut entry = vec![usize::MAX; n];
            let mut order: Vec<Vertex> = Vec::with_capacity(n);
            label[u0] = 0;
            entry[u0] = v0;
            order.push(u0);
            let mut head = 0;
            while head < order.len() {
                let u = order[head];
                head += 1;
                let rot = &rotation[u];
                let start = rot.iter().position(|&x| x == entry[u]).unwrap();
                for k in 0..rot.len() {
                    let w = rot[(start + k) % rot.len()];
                    if label[w] == u32::MAX {
                        label[w] = order.len() as u32;
                        entry[w] = u;
                        order.push(w);
                    }
                }
            }
            if order.len() < n {
                continue; // disconnected; caller filters anyway
            }
            let mut enc: Vec<u32> = Vec::new();
            for &u in &order {
                let rot = &rotation[u];
                let start = rot.iter().position(|&x| x == entry[u]).unwrap();
                enc.push(rot.len() as u32);
                for k in 0..rot.len() {
                    enc.push(label[rot[(start + k) % rot.len()]]);
                }
            }
            if best.as_ref().map_or(true, |b| enc < *b) {
                best = Some(enc);
            }
        }
    }
    best.unwrap_or_default()
}

fn cyclic_orders(items: &[Vertex]) -> Vec<Vec<Vertex>> {
    // fix the first element, permute the rest: one representative per cyclic order
    if items.len() <= 2 {
        return vec![items.to_vec()];
    }
    let mut rest: Vec<Vertex> = items[1..].to_vec();
    rest.sort_unstable();
    let mut out = Vec::new();
    permute(&mut rest, 0, &mut |perm| {
        let mut o = vec![items[0]];
        o.extend_from_slice(perm);
        out.push(o);
    });
    out
}

fn permute(v: &mut Vec<Vertex>, k: usize, f: &mut impl FnMut(&[Vertex])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// Every connected plane graph (combinatorial map) with exactly `n` vertices,
/// one representative per isomorphism class of labeled embeddings.
///
/// Enumerates labeled connected graphs, then all rotation systems, keeps the
/// ones passing the Euler genus check, and dedupes by canonical form.
/// Practical up to n = 6.
pub fn all_plane_graphs(n: usize) -> Vec<PlaneGraph> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![PlaneGraph::build(vec![vec![]], None).unwrap()];
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if edges.len() < n - 1 || (n >= 3 && edges.len() > 3 * n - 6) {
            continue;
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        if adj.iter().any(|a| a.is_empty()) {
            continue;
        }
        // connectivity
        let mut vis = vec![false; n];
        let mut stack = vec![0];
        vis[0] = true;
        let mut cnt = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !vis[v] {
                    vis[v] = true;
                    cnt += 1;
                    stack.push(v);
                }
            }
        }
        if cnt < n {
            continue;
        }
        // all rotation systems
        let per_vertex: Vec<Vec<Vec<usize>>> = adj.iter().map(|a| cyclic_orders(a)).collect();
        let mut idx = vec![0usize; n];
        loop {
            let rotation: Vec<Vec<usize>> = (0..n).map(|v| per_vertex[v][idx[v]].clone()).collect();
            let walks = crate::plane_graph::trace_faces(&rotation);
            let euler = n as i64 - edges.len() as i64 + walks.len() as i64;
            if euler == 2 {
                let form = canonical_map_form(&rotation);
                if seen.insert(form) {
                    out.push(PlaneGraph::build(rotation, None).unwrap());
                }
            }
            // odometer
            let mut v = 0;
            loop {
                if v == n {
                    break;
                }
                idx[v] += 1;
                if idx[v] < per_vertex[v].len() {
                    break;
                }
                idx[v] = 0;
                v += 1;
            }
            if v == n {
                break;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_sizes() {
        assert_eq!(cycle(4).unwrap().num_faces(), 2);
        assert_eq!(cycle(1).unwrap().n(), 1);
        assert!(cycle(0).is_err());
    }

    #[test]
    fn maximal_planar_edge_count() {
        for n in [3, 4, 8, 20, 57] {
            let g = maximal_planar(n, 7 + n as u64).unwrap();
            assert_eq!(g.num_edges(), 3 * n - 6, "n={n}");
            assert!(g.faces().iter().all(|f| f.len() == 3));
        }
    }

    #[test]
    fn stacked_edge_count() {
        let g = stacked(12, 3).unwrap();
        assert_eq!(g.num_edges(), 3 * 12 - 6);
    }

    #[test]
    fn bowtie_chain_cut_count() {
        for k in [1, 2, 5] {
            let g = bowtie_chain(k).unwrap();
            let d = crate::blocks::decompose(&g);
            assert_eq!(d.cut_vertices.len(), k, "k={k}");
        }
    }

    #[test]
    fn random_plane_styles_build() {
        for seed in 0..10 {
            let g = random_plane(30, seed, Style::TwoConnected).unwrap();
            assert!(crate::blocks::decompose(&g).cut_vertices.is_empty());
            let h = random_plane(30, seed, Style::CutRich).unwrap();
            assert!(h.n() >= 25);
        }
    }

    #[test]
    fn small_map_counts() {
        // n=2: the single edge. n=3: path and triangle.
        assert_eq!(all_plane_graphs(1).len(), 1);
        assert_eq!(all_plane_graphs(2).len(), 1);
        assert_eq!(all_plane_graphs(3).len(), 2);
        // n=4: known by hand: trees (path, star), triangle+pendant, C4,
        // diamond, K4, paw, and the multiple embeddings thereof.
        let maps4 = all_plane_graphs(4);
        assert!(maps4.len() >= 6, "got {}", maps4.len());
        // every map satisfies Euler by construction
        for g in &maps4 {
            assert_eq!(g.n() as i64 - g.num_edges() as i64 + g.num_faces() as i64, 2);
        }
    }

    #[test]
    fn canonical_form_invariant_under_relabeling() {
        let g = bowtie_chain(1).unwrap();
        let rot = g.rotation().to_vec();
        // relabel 0<->4 (both non-cut triangle tips)
        let map = [4usize, 1, 2, 3, 0];
        let mut rot2 = vec![Vec::new(); 5];
        for (v, neigh) in rot.iter().enumerate() {
            rot2[map[v]] = neigh.iter().map(|&x| map[x]).collect();
        }
        assert_eq!(canonical_map_form(&rot), canonical_map_form(&rot2));
    }
}
