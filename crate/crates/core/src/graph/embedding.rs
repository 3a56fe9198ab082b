use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// Outer cycle and chords of one biconnected component with at least three vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockEmbedding {
    /// Hamiltonian cycle of the block, starting at its smallest vertex.
    pub cycle: Vec<Vertex>,
    /// Remaining block edges as `(u, v)` with `u < v`, sorted.
    pub chords: Vec<(Vertex, Vertex)>,
}

impl BlockEmbedding {
    /// Position of every block vertex along the outer cycle.
    pub fn positions(&self, n: usize) -> Vec<Option<usize>> {
        let mut pos = vec![None; n];
        for (i, &v) in self.cycle.iter().enumerate() {
            pos[v] = Some(i);
        }
        pos
    }
}

/// Outerplanar embedding of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterEmbedding {
    pub blocks: Vec<BlockEmbedding>,
    /// Blocks consisting of a single edge.
    pub bridges: Vec<(Vertex, Vertex)>,
}

/// Two chords given by cycle positions cross iff their endpoints interleave.
pub fn chords_cross(a: (usize, usize), b: (usize, usize)) -> bool {
    let (a0, a1) = (a.0.min(a.1), a.0.max(a.1));
    let (b0, b1) = (b.0.min(b.1), b.0.max(b.1));
    (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1)
}

pub(super) fn embed(g: &Graph) -> Result<OuterEmbedding> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let decomposition = g.biconnected_components();
    let mut blocks = Vec::new();
    for (vertices, edges) in decomposition
        .components
        .iter()
        .zip(&decomposition.component_edges)
    {
        if vertices.len() < 3 {
            continue;
        }
        blocks.push(embed_block(vertices, edges).ok_or(Error::NotOuterplanar)?);
    }
    Ok(OuterEmbedding {
        blocks,
        bridges: decomposition.bridge_edges,
    })
}

fn embed_block(vertices: &[Vertex], edges: &[(Vertex, Vertex)]) -> Option<BlockEmbedding> {
    let s = vertices.len();
    // Outerplanar graphs on s vertices have at most 2s - 3 edges.
    if edges.len() > 2 * s - 3 {
        return None;
    }
    let local = |v: Vertex| vertices.binary_search(&v).unwrap();
    let mut adj = vec![Vec::new(); s];
    for &(a, b) in edges {
        let (la, lb) = (local(a), local(b));
        adj[la].push(lb);
        adj[lb].push(la);
    }
    for list in &mut adj {
        list.sort_unstable();
    }

    let mut search = CycleSearch {
        adj: &adj,
        pos: vec![usize::MAX; s],
        path: Vec::with_capacity(s),
        chords: Vec::new(),
    };
    search.place(0);
    if !search.extend() {
        return None;
    }

    let cycle: Vec<Vertex> = search.path.iter().map(|&l| vertices[l]).collect();
    let mut chords: Vec<(Vertex, Vertex)> = search
        .chords
        .iter()
        .map(|&(a, b)| {
            let (u, v) = (cycle[a], cycle[b]);
            (u.min(v), u.max(v))
        })
        .collect();
    chords.sort_unstable();
    Some(BlockEmbedding { cycle, chords })
}

/// Backtracking over Hamiltonian cycles. Vertices not yet on the path all end
/// up between the last path vertex and the first one, so the cyclic order of
/// placed vertices is already final and crossings can be detected early.
struct CycleSearch<'a> {
    adj: &'a [Vec<usize>],
    pos: Vec<usize>,
    path: Vec<usize>,
    /// Chords between placed vertices, as position pairs `(a, b)` with `a < b`.
    chords: Vec<(usize, usize)>,
}

impl CycleSearch<'_> {
    fn place(&mut self, v: usize) {
        self.pos[v] = self.path.len();
        self.path.push(v);
    }

    fn unplace(&mut self) {
        let v = self.path.pop().unwrap();
        self.pos[v] = usize::MAX;
    }

    fn extend(&mut self) -> bool {
        let s = self.adj.len();
        let t = self.path.len();
        let last = self.path[t - 1];
        if t == s {
            return self.adj[last].binary_search(&self.path[0]).is_ok();
        }
        for i in 0..self.adj[last].len() {
            let w = self.adj[last][i];
            if self.pos[w] != usize::MAX {
                continue;
            }
            self.place(w);
            let before = self.chords.len();
            if self.add_chords(w, t) && self.extend() {
                return true;
            }
            self.chords.truncate(before);
            self.unplace();
        }
        false
    }

    /// Registers the chords created by placing `w` at position `t`; returns
    /// false if one of them crosses an earlier chord or encloses a vertex that
    /// still has an unplaced neighbor.
    fn add_chords(&mut self, w: usize, t: usize) -> bool {
        let s = self.adj.len();
        for &x in &self.adj[w] {
            let j = self.pos[x];
            if j == usize::MAX || j + 1 == t || (j == 0 && t + 1 == s) {
                continue;
            }
            // Chords ending before t cross (j, t) iff j lies strictly inside them.
            if self.chords.iter().any(|&(a, b)| a < j && j < b && b < t) {
                return false;
            }
            for c in j + 1..t {
                let inner = self.path[c];
                if self.adj[inner].iter().any(|&y| self.pos[y] == usize::MAX) {
                    return false;
                }
            }
            self.chords.push((j, t));
        }
        true
    }
}
