//! Biconnected components (blocks) and cut vertices, via iterative
//! lowpoint DFS with an edge stack.

use crate::plane_graph::{PlaneGraph, Vertex};

#[derive(Debug, Clone)]
pub struct Block {
    pub id: usize,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }
}

#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<Vertex>,
    pub blocks_of_vertex: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    pub fn is_cut(&self, v: Vertex) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }
}

pub fn decompose(g: &PlaneGraph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut is_cut = vec![false; n];
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut blocks: Vec<Vec<(Vertex, Vertex)>> = Vec::new();
    let mut timer = 0usize;

    // (vertex, next neighbor index)
    let mut stack: Vec<(Vertex, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, 0));
        let mut root_children = 0usize;
        while let Some(&mut (u, ref mut i)) = stack.last_mut() {
            if *i < g.degree(u) {
                let v = g.neighbors(u)[*i];
                *i += 1;
                if disc[v] == usize::MAX {
                    parent[v] = u;
                    edge_stack.push((u, v));
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((v, 0));
                } else if v != parent[u] && disc[v] < disc[u] {
                    edge_stack.push((u, v));
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        // pop one block ending at tree edge (p, u)
                        let mut es = Vec::new();
                        while let Some(&top) = edge_stack.last() {
                            es.push(top);
                            edge_stack.pop();
                            if top == (p, u) {
                                break;
                            }
                        }
                        es.reverse();
                        blocks.push(es);
                        if p != root || root_children > 1 {
                            is_cut[p] = true;
                        }
                    }
                }
            }
        }
        // root cut condition handled above via root_children
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    let mut out_blocks = Vec::with_capacity(blocks.len());
    let mut blocks_of_vertex = vec![Vec::new(); n];
    for (id, es) in blocks.into_iter().enumerate() {
        let mut verts: Vec<Vertex> = es.iter().flat_map(|&(a, b)| [a, b]).collect();
        verts.sort_unstable();
        verts.dedup();
        let mut edges: Vec<(Vertex, Vertex)> =
            es.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        edges.sort_unstable();
        edges.dedup();
        for &v in &verts {
            blocks_of_vertex[v].push(id);
        }
        out_blocks.push(Block { id, vertices: verts, edges });
    }
    let cut_vertices: Vec<Vertex> = (0..n).filter(|&v| is_cut[v]).collect();
    BlockDecomposition {
        blocks: out_blocks,
        cut_vertices,
        blocks_of_vertex,
    }
}

/// Components of g - {v}, as vertex sets (sorted by smallest member).
pub fn components_without(g: &PlaneGraph, v: Vertex) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    comp[v] = usize::MAX - 1;
    let mut out: Vec<Vec<Vertex>> = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

pub fn is_two_connected(g: &PlaneGraph) -> bool {
    if g.n() < 2 {
        return false;
    }
    if g.n() == 2 {
        return g.num_edges() == 1;
    }
    let d = decompose(g);
    d.cut_vertices.is_empty() && d.blocks.len() == 1
}

/// Map for subgraph views: rotation of `g` restricted to a vertex subset.
pub(crate) fn induced_rotation(g: &PlaneGraph, members: &[bool]) -> Vec<Vec<Vertex>> {
    (0..g.n())
        .map(|v| {
            if members[v] {
                g.neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&w| members[w])
                    .collect()
            } else {
                Vec::new()
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    #[test]
    fn two_connected_is_one_block() {
        let g = gen::cycle(5).unwrap();
        let d = decompose(&g);
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cut_vertices.is_empty());
        assert!(is_two_connected(&g));
    }

    #[test]
    fn bowtie_blocks() {
        let g = gen::bowtie_chain(1).unwrap();
        let d = decompose(&g);
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices, vec![2]);
    }

    #[test]
    fn path_of_three_edges() {
        let g = gen::path(4).unwrap();
        let d = decompose(&g);
        assert_eq!(d.blocks.len(), 3);
        assert!(d.blocks.iter().all(Block::is_bridge));
        assert_eq!(d.cut_vertices, vec![1, 2]);
    }

    #[test]
    fn components_after_cut_removal() {
        let g = gen::bowtie_chain(1).unwrap();
        let comps = components_without(&g, 2);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], vec![0, 1]);
        assert_eq!(comps[1], vec![3, 4]);
    }
}
