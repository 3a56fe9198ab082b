use crate::error::Result;
use crate::graph::{Graph, Vertex};

use super::config::{compatible_unchecked, enumerate_vertex_configs, EdgeConfig, VertexConfig};

/// Current feasible configurations of every vertex and edge.
///
/// A vertex configuration stays listed only while every incident edge lists
/// an edge configuration containing it. Deleting either kind cascades until
/// that holds again.
#[derive(Debug, Clone)]
pub struct FeasibleTable {
    vertex_configs: Vec<Vec<VertexConfig>>,
    vertex_alive: Vec<Vec<bool>>,
    vertex_live_count: Vec<usize>,
    edges: Vec<(Vertex, Vertex)>,
    edge_configs: Vec<Vec<EdgeConfig>>,
    edge_alive: Vec<Vec<bool>>,
    edge_live_count: Vec<usize>,
    /// `[edge][side][config]`: ids of edge configs using that vertex config.
    users: Vec<[Vec<Vec<usize>>; 2]>,
    /// `[edge][side][config]`: how many of `users` are alive.
    support: Vec<[Vec<usize>; 2]>,
    incident: Vec<Vec<(usize, usize)>>,
    empty: bool,
    deletions: usize,
}

enum Pending {
    Vertex(Vertex, usize),
    Edge(usize, usize),
}

impl FeasibleTable {
    /// All configurations with palette `1..=k`, closed under the cascade.
    pub fn new(g: &Graph, k: u32) -> Result<Self> {
        let n = g.n();
        let mut vertex_configs = Vec::with_capacity(n);
        for v in 0..n {
            vertex_configs.push(enumerate_vertex_configs(g, v, k)?);
        }
        let edges = g.edges().to_vec();
        let mut edge_configs = Vec::with_capacity(edges.len());
        let mut users = Vec::with_capacity(edges.len());
        let mut incident = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            incident[u].push((e, 0));
            incident[v].push((e, 1));
            let mut list = Vec::new();
            let mut by_u = vec![Vec::new(); vertex_configs[u].len()];
            let mut by_v = vec![Vec::new(); vertex_configs[v].len()];
            for (cu, a) in vertex_configs[u].iter().enumerate() {
                for (cv, b) in vertex_configs[v].iter().enumerate() {
                    if compatible_unchecked(g, a, b) {
                        by_u[cu].push(list.len());
                        by_v[cv].push(list.len());
                        list.push(EdgeConfig { edge: (u, v), cu, cv });
                    }
                }
            }
            edge_configs.push(list);
            users.push([by_u, by_v]);
        }
        let support: Vec<[Vec<usize>; 2]> = users
            .iter()
            .map(|[a, b]| [a.iter().map(Vec::len).collect(), b.iter().map(Vec::len).collect()])
            .collect();
        let mut table = FeasibleTable {
            vertex_alive: vertex_configs.iter().map(|c| vec![true; c.len()]).collect(),
            vertex_live_count: vertex_configs.iter().map(Vec::len).collect(),
            edge_alive: edge_configs.iter().map(|c| vec![true; c.len()]).collect(),
            edge_live_count: edge_configs.iter().map(Vec::len).collect(),
            vertex_configs,
            edges,
            edge_configs,
            users,
            support,
            incident,
            empty: false,
            deletions: 0,
        };
        let mut pending = Vec::new();
        for (e, sides) in table.support.iter().enumerate() {
            let (u, v) = table.edges[e];
            for (side, counts) in sides.iter().enumerate() {
                let x = if side == 0 { u } else { v };
                for (c, &count) in counts.iter().enumerate() {
                    if count == 0 {
                        pending.push(Pending::Vertex(x, c));
                    }
                }
            }
        }
        table.cascade(pending);
        table.deletions = 0;
        Ok(table)
    }

    pub fn vertex_configs(&self, v: Vertex) -> &[VertexConfig] {
        &self.vertex_configs[v]
    }

    pub fn edge_configs(&self, e: usize) -> &[EdgeConfig] {
        &self.edge_configs[e]
    }

    pub fn vertex_alive(&self, v: Vertex, c: usize) -> bool {
        self.vertex_alive[v][c]
    }

    pub fn edge_alive(&self, e: usize, c: usize) -> bool {
        self.edge_alive[e][c]
    }

    pub fn live_vertex_configs(&self, v: Vertex) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_configs[v].len()).filter(move |&c| self.vertex_alive[v][c])
    }

    pub fn live_edge_configs(&self, e: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.edge_configs[e].len()).filter(move |&c| self.edge_alive[e][c])
    }

    pub fn live_vertex_count(&self, v: Vertex) -> usize {
        self.vertex_live_count[v]
    }

    pub fn live_edge_count(&self, e: usize) -> usize {
        self.edge_live_count[e]
    }

    /// Some list has become empty, so the graph has no coloring.
    pub fn is_empty(&self) -> bool {
        self.empty
    }

    /// Deletions since construction (the initial closure is not counted).
    pub fn deletions(&self) -> usize {
        self.deletions
    }

    pub fn find_vertex_config(&self, cfg: &VertexConfig) -> Option<usize> {
        self.vertex_configs.get(cfg.vertex)?.iter().position(|c| c == cfg)
    }

    /// Index of the edge configuration pairing `cu` and `cv` on edge `e`.
    pub fn find_edge_config(&self, e: usize, cu: usize, cv: usize) -> Option<usize> {
        self.users[e][0]
            .get(cu)?
            .iter()
            .copied()
            .find(|&id| self.edge_configs[e][id].cv == cv)
    }

    /// Configuration index of `x` (an endpoint of edge `e`) inside edge
    /// configuration `c`.
    pub fn endpoint_config(&self, e: usize, c: usize, x: Vertex) -> usize {
        let ec = &self.edge_configs[e][c];
        if ec.edge.0 == x {
            ec.cu
        } else {
            debug_assert_eq!(ec.edge.1, x);
            ec.cv
        }
    }

    pub fn delete_vertex_config(&mut self, v: Vertex, c: usize) {
        self.cascade(vec![Pending::Vertex(v, c)]);
    }

    pub fn delete_edge_config(&mut self, e: usize, c: usize) {
        self.cascade(vec![Pending::Edge(e, c)]);
    }

    fn cascade(&mut self, mut pending: Vec<Pending>) {
        while let Some(item) = pending.pop() {
            match item {
                Pending::Vertex(v, c) => {
                    if !self.vertex_alive[v][c] {
                        continue;
                    }
                    self.vertex_alive[v][c] = false;
                    self.vertex_live_count[v] -= 1;
                    self.deletions += 1;
                    if self.vertex_live_count[v] == 0 {
                        self.empty = true;
                    }
                    for &(e, side) in &self.incident[v] {
                        for &id in &self.users[e][side][c] {
                            if self.edge_alive[e][id] {
                                pending.push(Pending::Edge(e, id));
                            }
                        }
                    }
                }
                Pending::Edge(e, id) => {
                    if !self.edge_alive[e][id] {
                        continue;
                    }
                    self.edge_alive[e][id] = false;
                    self.edge_live_count[e] -= 1;
                    self.deletions += 1;
                    if self.edge_live_count[e] == 0 {
                        self.empty = true;
                    }
                    let ec = self.edge_configs[e][id];
                    for (side, (x, c)) in [(ec.edge.0, ec.cu), (ec.edge.1, ec.cv)].into_iter().enumerate() {
                        self.support[e][side][c] -= 1;
                        if self.support[e][side][c] == 0 && self.vertex_alive[x][c] {
                            pending.push(Pending::Vertex(x, c));
                        }
                    }
                }
            }
        }
    }

    /// Checks the closure property; used by tests.
    pub fn is_closed(&self) -> bool {
        for (v, inc) in self.incident.iter().enumerate() {
            for c in self.live_vertex_configs(v) {
                for &(e, side) in inc {
                    if !self.users[e][side][c].iter().any(|&id| self.edge_alive[e][id]) {
                        return false;
                    }
                }
            }
        }
        self.edge_configs.iter().enumerate().all(|(e, list)| {
            list.iter().enumerate().all(|(id, ec)| {
                !self.edge_alive[e][id] || (self.vertex_alive[ec.edge.0][ec.cu] && self.vertex_alive[ec.edge.1][ec.cv])
            })
        })
    }
}
