//! Undirected simple graphs with dense vertex ids `0..n`.

mod blocks;
mod embedding;

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub use blocks::BiconnectedDecomposition;
pub use embedding::{chords_cross, BlockEmbedding, OuterEmbedding};

pub type Vertex = usize;

/// Which neighborhood a vertex must find its conflict-free neighbor in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `N[v]`, the vertex together with its neighbors.
    Closed,
    /// `N(v)`, the neighbors only.
    Open,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "closed" => Ok(Mode::Closed),
            "open" => Ok(Mode::Open),
            other => Err(format!("unknown mode `{other}` (expected closed|open)")),
        }
    }
}

/// A vertex neighborhood, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodSet {
    pub center: Vertex,
    pub members: Vec<Vertex>,
    pub mode: Mode,
}

impl NeighborhoodSet {
    pub fn contains(&self, v: Vertex) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Simple undirected graph. Adjacency lists are sorted and the edge list holds
/// each edge once as `(u, v)` with `u < v`, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph, rejecting loops, duplicate edges and out-of-range ids.
    /// Endpoints may be given in either order.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::InvalidVertex { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_edges(n, list))
    }

    /// Like [`Graph::new`] but silently drops loops and repeated edges.
    pub fn from_edges_lossy(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        let mut list: Vec<_> = edges
            .into_iter()
            .filter(|&(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        assert!(list.iter().all(|&(_, b)| b < n), "edge endpoint out of range");
        list.sort_unstable();
        list.dedup();
        Self::from_sorted_edges(n, list)
    }

    fn from_sorted_edges(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj, edges }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n() })
        }
    }

    /// Neighborhood of `v` in the requested mode.
    pub fn neighborhood(&self, v: Vertex, mode: Mode) -> Result<NeighborhoodSet> {
        self.check_vertex(v)?;
        let mut members = self.adj[v].clone();
        if mode == Mode::Closed {
            let at = members.binary_search(&v).unwrap_err();
            members.insert(at, v);
        }
        Ok(NeighborhoodSet { center: v, members, mode })
    }

    /// Closed neighborhood as a sorted vector, without validation.
    pub fn closed_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut members = self.adj[v].clone();
        let at = members.binary_search(&v).unwrap_err();
        members.insert(at, v);
        members
    }

    /// Breadth-first distances from a set of sources; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, sources: &[Vertex]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap() + 1;
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path length between `u` and `v`, or `None` when they lie in
    /// different components.
    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs_distances(&[u])[v])
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `vertices`. Returns the subgraph and the map from
    /// new ids to original ids (which is `vertices`, sorted and deduplicated).
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut keep = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| new_id[a] != usize::MAX && new_id[b] != usize::MAX)
            .map(|&(a, b)| (new_id[a], new_id[b]));
        (Graph::from_edges_lossy(keep.len(), edges), keep)
    }

    /// Graph with edge `{u, v}` added; no-op if present.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        let mut edges = self.edges.clone();
        edges.push((u.min(v), u.max(v)));
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(Graph::from_edges_lossy(self.n(), edges))
    }

    /// Contracts edge `{keep, remove}` towards `keep`. Loops and parallel edges
    /// vanish and ids stay dense: the returned map sends every old id to its
    /// new id (with `remove` sent to the new id of `keep`).
    pub fn contract_edge(&self, keep: Vertex, remove: Vertex) -> Result<(Graph, Vec<Vertex>)> {
        self.check_vertex(keep)?;
        self.check_vertex(remove)?;
        if !self.has_edge(keep, remove) {
            return Err(Error::MissingEdge(keep, remove));
        }
        let shift = |v: Vertex| if v > remove { v - 1 } else { v };
        let mapping: Vec<Vertex> = (0..self.n())
            .map(|v| if v == remove { shift(keep) } else { shift(v) })
            .collect();
        let edges = self.edges.iter().map(|&(a, b)| (mapping[a], mapping[b]));
        Ok((Graph::from_edges_lossy(self.n() - 1, edges), mapping))
    }

    /// Contracts every vertex `v` into `target[v]` simultaneously. Targets must
    /// map to themselves and every other vertex must be adjacent to its target,
    /// so the result is a minor (a disjoint union of star contractions).
    /// Returns the minor and the original id of each of its vertices.
    pub fn contract_into(&self, target: &[Vertex]) -> Result<(Graph, Vec<Vertex>)> {
        assert_eq!(target.len(), self.n(), "one target per vertex");
        for (v, &t) in target.iter().enumerate() {
            self.check_vertex(t)?;
            if target[t] != t {
                return Err(Error::InvalidParameter {
                    what: "contraction target",
                    constraint: "a fixed point of the target map",
                    value: t as i64,
                });
            }
            if t != v && !self.has_edge(v, t) {
                return Err(Error::MissingEdge(v, t));
            }
        }
        let kept: Vec<Vertex> = (0..self.n()).filter(|&v| target[v] == v).collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in kept.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (new_id[target[a]], new_id[target[b]]));
        Ok((Graph::from_edges_lossy(kept.len(), edges), kept))
    }

    /// Two-coloring of the vertices by breadth-first search.
    pub fn bipartition(&self) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
        let mut side: Vec<Option<bool>> = vec![None; self.n()];
        for s in 0..self.n() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return Err(Error::NotBipartite),
                        Some(_) => {}
                    }
                }
            }
        }
        let (left, right): (Vec<_>, Vec<_>) = (0..self.n()).partition(|&v| side[v] == Some(false));
        Ok((left, right))
    }

    /// Greedy maximal independent set scanning ids in ascending order. Any
    /// maximal independent set is dominating.
    pub fn independent_dominating_set(&self) -> Vec<Vertex> {
        let mut blocked = vec![false; self.n()];
        let mut set = Vec::new();
        for v in 0..self.n() {
            if !blocked[v] {
                set.push(v);
                blocked[v] = true;
                for &w in &self.adj[v] {
                    blocked[w] = true;
                }
            }
        }
        set
    }

    /// Biconnected components, articulation points and bridges.
    pub fn biconnected_components(&self) -> BiconnectedDecomposition {
        blocks::decompose(self)
    }

    /// Outerplanar embedding of a connected graph: one Hamiltonian outer cycle
    /// with pairwise non-crossing chords per biconnected component.
    pub fn outerplanar_embedding(&self) -> Result<OuterEmbedding> {
        embedding::embed(self)
    }

    pub fn is_outerplanar(&self) -> bool {
        self.components().iter().all(|comp| {
            let (sub, _) = self.induced_subgraph(comp);
            sub.outerplanar_embedding().is_ok()
        })
    }
}
