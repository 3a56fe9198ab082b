use crate::graph::{Graph, Vertex};

use super::atoms::{Atom, AtomKind, AtomTree, Separator};
use super::table::FeasibleTable;

/// Cost and chosen edge configurations per incoming-separator configuration.
///
/// Anchors are indexed by vertex configuration for vertex separators and
/// by edge configuration of the separator edge otherwise.
#[derive(Debug, Clone, Default)]
pub(crate) struct AtomResult {
    pub costs: Vec<Option<u64>>,
    /// One edge configuration per `Atom::cycle_edges` entry.
    pub choices: Vec<Option<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomStats {
    pub kind: AtomKind,
    pub size: usize,
    pub incoming: Separator,
    /// Live anchored configurations when the atom was processed.
    pub anchors: usize,
    /// Anchored configurations with an extension into the subtree.
    pub feasible: usize,
    /// Live edge configurations per atom edge.
    pub layer_sizes: Vec<usize>,
}

#[derive(Debug, Clone, Copy)]
struct Node {
    id: usize,
    first: usize,
    second: usize,
    weight: u64,
}

/// Layered graph over the edge configurations of an atom's edges in cyclic
/// order. Consecutive layers connect where they agree on the shared vertex.
struct ConfigGraph {
    layers: Vec<Vec<Node>>,
    /// Number of configurations of `x_i`, for lookup tables.
    widths: Vec<usize>,
}

pub(crate) struct Context<'a> {
    pub g: &'a Graph,
    pub tree: &'a AtomTree,
    pub minimize: bool,
}

impl Context<'_> {
    fn vertex_children<'b>(&'b self, atom: &'b Atom, x: Vertex) -> impl Iterator<Item = usize> + 'b {
        atom.children
            .iter()
            .copied()
            .filter(move |&c| self.tree.atoms[c].incoming == Separator::Vertex(x))
    }

    fn edge_child(&self, atom: &Atom, a: Vertex, b: Vertex) -> Option<usize> {
        let sep = Separator::Edge(a.min(b), a.max(b));
        atom.children.iter().copied().find(|&c| self.tree.atoms[c].incoming == sep)
    }

    fn vertex_child_cost(&self, atom: &Atom, results: &[AtomResult], x: Vertex, c: usize) -> Option<u64> {
        self.vertex_children(atom, x)
            .try_fold(0u64, |acc, child| Some(acc + results[child].costs[c]?))
    }

    /// Cost owed by `x` under configuration `c`: hanging subtrees plus its
    /// own color unless the parent pays for it.
    fn charge(&self, atom: &Atom, results: &[AtomResult], table: &FeasibleTable, x: Vertex, c: usize) -> Option<u64> {
        let own = self.minimize && !atom.incoming.contains(x) && table.vertex_configs(x)[c].chi > 0;
        Some(self.vertex_child_cost(atom, results, x, c)? + u64::from(own))
    }

    fn config_graph(&self, atom: &Atom, results: &[AtomResult], table: &FeasibleTable) -> ConfigGraph {
        let edges = atom.cycle_edges();
        let l = edges.len();
        let mut layers = Vec::with_capacity(l);
        let mut widths = Vec::with_capacity(l);
        for (i, &(a, b)) in edges.iter().enumerate() {
            widths.push(table.vertex_configs(a).len());
            let e = self.g.edge_index(a, b).expect("atom edges belong to the graph");
            let child = if i == 0 && matches!(atom.incoming, Separator::Edge(..)) {
                None
            } else {
                self.edge_child(atom, a, b)
            };
            let last = i + 1 == l && atom.kind == AtomKind::Face;
            let mut layer = Vec::new();
            for id in table.live_edge_configs(e) {
                let first = table.endpoint_config(e, id, a);
                let second = table.endpoint_config(e, id, b);
                let mut weight = 0;
                if let Some(c) = child {
                    match results[c].costs[id] {
                        Some(w) => weight += w,
                        None => continue,
                    }
                }
                if !last {
                    match self.charge(atom, results, table, b, second) {
                        Some(w) => weight += w,
                        None => continue,
                    }
                }
                layer.push(Node {
                    id,
                    first,
                    second,
                    weight,
                });
            }
            layers.push(layer);
        }
        ConfigGraph { layers, widths }
    }
}

const INF: (u64, usize) = (u64::MAX, usize::MAX);

impl ConfigGraph {
    /// Cheapest completions from layer 1 on, given the anchor
    /// configuration `anchor` of `x_0`: `next[i][c]` is the best (cost,
    /// node position) among layer-`i` nodes whose first vertex has config `c`.
    fn backward(&self, anchor: usize) -> Vec<Vec<(u64, usize)>> {
        let l = self.layers.len();
        let mut next: Vec<Vec<(u64, usize)>> = vec![Vec::new(); l];
        for i in (1..l).rev() {
            let mut best = vec![INF; self.widths[i]];
            for (pos, node) in self.layers[i].iter().enumerate() {
                let tail = if i + 1 == l {
                    if node.second == anchor {
                        0
                    } else {
                        continue;
                    }
                } else {
                    match next[i + 1][node.second] {
                        (u64::MAX, _) => continue,
                        (c, _) => c,
                    }
                };
                let total = node.weight + tail;
                if total < best[node.first].0 {
                    best[node.first] = (total, pos);
                }
            }
            next[i] = best;
        }
        next
    }

    /// Cost of completing from a layer-0 node, or `None`.
    fn completion(&self, next: &[Vec<(u64, usize)>], node: &Node) -> Option<u64> {
        if self.layers.len() == 1 {
            // Edge atom: nothing follows.
            return Some(node.weight);
        }
        match next[1][node.second] {
            (u64::MAX, _) => None,
            (c, _) => Some(node.weight + c),
        }
    }

    fn walk(&self, next: &[Vec<(u64, usize)>], start: &Node) -> Vec<usize> {
        let mut out = vec![start.id];
        let mut cur = *start;
        for layer in next.iter().skip(1) {
            let (_, pos) = layer[cur.second];
            let i = out.len();
            cur = self.layers[i][pos];
            out.push(cur.id);
        }
        out
    }
}

/// Processes one atom whose children are done. Anchors left without a cost
/// have no extension into the subtree and are for the caller to delete.
pub(crate) fn process_atom(
    ctx: &Context<'_>,
    index: usize,
    results: &[AtomResult],
    table: &FeasibleTable,
) -> (AtomResult, AtomStats) {
    let atom = &ctx.tree.atoms[index];
    let graph = ctx.config_graph(atom, results, table);
    let x0 = atom.vertices[0];
    let edges = atom.cycle_edges();
    let e0 = ctx.g.edge_index(edges[0].0, edges[0].1).unwrap();
    let mut result = AtomResult::default();
    let mut anchors = 0;
    let mut feasible = 0;
    match atom.incoming {
        Separator::Vertex(_) => {
            let width = table.vertex_configs(x0).len();
            result.costs = vec![None; width];
            result.choices = vec![None; width];
            for a in table.live_vertex_configs(x0) {
                anchors += 1;
                let Some(base) = ctx.vertex_child_cost(atom, results, x0, a) else {
                    continue;
                };
                let next = graph.backward(a);
                let mut best: Option<(u64, Node)> = None;
                for node in graph.layers[0].iter().filter(|n| n.first == a) {
                    if let Some(c) = graph.completion(&next, node) {
                        if best.is_none_or(|(b, _)| c < b) {
                            best = Some((c, *node));
                        }
                    }
                }
                if let Some((c, node)) = best {
                    feasible += 1;
                    result.costs[a] = Some(base + c);
                    result.choices[a] = Some(graph.walk(&next, &node));
                }
            }
        }
        Separator::Edge(..) => {
            let width = table.edge_configs(e0).len();
            result.costs = vec![None; width];
            result.choices = vec![None; width];
            let mut starts: Vec<usize> = graph.layers[0].iter().map(|n| n.first).collect();
            starts.sort_unstable();
            starts.dedup();
            anchors = table.live_edge_count(e0);
            for a in starts {
                let Some(base) = ctx.vertex_child_cost(atom, results, x0, a) else {
                    continue;
                };
                let next = graph.backward(a);
                for node in graph.layers[0].iter().filter(|n| n.first == a) {
                    if let Some(c) = graph.completion(&next, node) {
                        feasible += 1;
                        result.costs[node.id] = Some(base + c);
                        result.choices[node.id] = Some(graph.walk(&next, node));
                    }
                }
            }
        }
    }
    let stats = AtomStats {
        kind: atom.kind,
        size: atom.vertices.len(),
        incoming: atom.incoming,
        anchors,
        feasible,
        layer_sizes: graph.layers.iter().map(Vec::len).collect(),
    };
    (result, stats)
}
