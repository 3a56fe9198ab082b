use super::{Graph, Vertex};

/// Blocks of a graph. Bridges show up as two-vertex components; isolated
/// vertices belong to no component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiconnectedDecomposition {
    /// Vertex set of each component, sorted.
    pub components: Vec<Vec<Vertex>>,
    /// Edges of each component, parallel to `components`.
    pub component_edges: Vec<Vec<(Vertex, Vertex)>>,
    pub articulation_points: Vec<Vertex>,
    pub bridge_edges: Vec<(Vertex, Vertex)>,
}

impl BiconnectedDecomposition {
    pub fn is_articulation(&self, v: Vertex) -> bool {
        self.articulation_points.binary_search(&v).is_ok()
    }
}

// Hopcroft-Tarjan with an explicit stack so deep paths do not overflow.
pub(super) fn decompose(g: &Graph) -> BiconnectedDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut components_edges: Vec<Vec<(Vertex, Vertex)>> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(frame) = stack.last_mut() {
            let (v, parent, idx) = *frame;
            if idx < g.degree(v) {
                frame.2 += 1;
                let w = g.neighbors(v)[idx];
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut comp = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            comp.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (p, v) {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        components_edges.push(comp);
                    }
                }
            }
        }
    }

    components_edges.sort_by_key(|edges| edges[0]);
    let components: Vec<Vec<Vertex>> = components_edges
        .iter()
        .map(|edges| {
            let mut vs: Vec<Vertex> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect();

    let mut count = vec![0usize; n];
    for comp in &components {
        for &v in comp {
            count[v] += 1;
        }
    }
    let articulation_points = (0..n).filter(|&v| count[v] >= 2).collect();
    let mut bridge_edges: Vec<_> = components_edges
        .iter()
        .filter(|edges| edges.len() == 1)
        .map(|edges| edges[0])
        .collect();
    bridge_edges.sort_unstable();

    BiconnectedDecomposition {
        components,
        component_edges: components_edges,
        articulation_points,
        bridge_edges,
    }
}
