//! Dynamic program over the atom tree of an outerplanar graph deciding
//! conflict-free 1- and 2-colorability and minimizing the colored vertices.
//!
//! Every vertex carries a configuration: its color and a designated set of
//! conflict-free neighbors with their colors. All requirements on such a
//! family are checks between the two endpoints of an edge, so the atoms
//! (bridges and inner faces) can be processed bottom-up like the bags of a
//! tree decomposition.

mod atoms;
mod config;
mod process;
mod table;

use log::debug;

pub use atoms::{build_atom_tree, Atom, AtomKind, AtomTree, Separator};
pub use config::{compatible, enumerate_vertex_configs, EdgeConfig, VertexConfig};
pub use process::AtomStats;
pub use table::FeasibleTable;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::verify::PartialColoring;
use process::{process_atom, AtomResult, Context};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpSolution {
    pub coloring: PartialColoring,
    pub colored: usize,
    /// Configuration of every vertex, in input ids.
    pub vertex_configs: Vec<VertexConfig>,
    /// Configurations of both endpoints for every edge, in `Graph::edges` order.
    pub edge_configs: Vec<(VertexConfig, VertexConfig)>,
}

/// A connected component after solving (or after the failure).
#[derive(Debug, Clone)]
pub struct ComponentRun {
    /// Local id to input id.
    pub vertices: Vec<Vertex>,
    pub graph: Graph,
    pub tree: AtomTree,
    /// Feasible lists as left by the run.
    pub table: FeasibleTable,
    /// Follows `tree.post_order`.
    pub atoms: Vec<AtomStats>,
}

#[derive(Debug, Clone)]
pub struct DpRun {
    /// `None` when some component admits no coloring.
    pub solution: Option<DpSolution>,
    /// Components with at least one edge, in order of smallest vertex.
    pub components: Vec<ComponentRun>,
}

fn check_k(k: u32) -> Result<()> {
    if (1..=2).contains(&k) {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            what: "k",
            constraint: "1 <= k <= 2 (larger palettes are outside the program's guarantee)",
            value: i64::from(k),
        })
    }
}

/// Closed conflict-free `k`-coloring of an outerplanar graph, `k` in {1, 2},
/// or `None` if there is none. With `minimize` the coloring has the fewest
/// colored vertices.
pub fn solve_outerplanar(g: &Graph, k: u32, minimize: bool) -> Result<Option<DpSolution>> {
    Ok(solve_outerplanar_detailed(g, k, minimize)?.solution)
}

/// As [`solve_outerplanar`], also returning trees, tables and per-atom counts.
pub fn solve_outerplanar_detailed(g: &Graph, k: u32, minimize: bool) -> Result<DpRun> {
    check_k(k)?;
    let n = g.n();
    let mut vertex_configs: Vec<Option<VertexConfig>> = vec![None; n];
    let mut components = Vec::new();
    let mut feasible = true;
    for comp in g.components() {
        if comp.len() == 1 {
            let v = comp[0];
            vertex_configs[v] = Some(VertexConfig {
                vertex: v,
                chi: 1,
                designated: vec![(v, 1)],
            });
            continue;
        }
        let (sub, old) = g.induced_subgraph(&comp);
        let emb = sub.outerplanar_embedding()?;
        let tree = build_atom_tree(&sub, &emb)?;
        let mut table = FeasibleTable::new(&sub, k)?;
        let (local, stats) = solve_component(&sub, &tree, &mut table, minimize);
        debug!(
            "component of {} vertices: {} atoms, feasible = {}",
            comp.len(),
            tree.atoms.len(),
            local.is_some()
        );
        match local {
            Some(configs) => {
                for (lv, cfg) in configs.into_iter().enumerate() {
                    let mut designated: Vec<(Vertex, u32)> =
                        cfg.designated.iter().map(|&(w, c)| (old[w], c)).collect();
                    designated.sort_unstable();
                    vertex_configs[old[lv]] = Some(VertexConfig {
                        vertex: old[lv],
                        chi: cfg.chi,
                        designated,
                    });
                }
            }
            None => feasible = false,
        }
        components.push(ComponentRun {
            vertices: old,
            graph: sub,
            tree,
            table,
            atoms: stats,
        });
        if !feasible {
            break;
        }
    }
    let solution = feasible.then(|| {
        let vertex_configs: Vec<VertexConfig> = vertex_configs
            .into_iter()
            .map(|c| c.expect("every vertex is configured"))
            .collect();
        let colors: Vec<u32> = vertex_configs.iter().map(|c| c.chi).collect();
        let coloring = PartialColoring::with_palette(colors, k).expect("configurations use colors 0..=k");
        let edge_configs = g
            .edges()
            .iter()
            .map(|&(u, v)| (vertex_configs[u].clone(), vertex_configs[v].clone()))
            .collect();
        DpSolution {
            colored: coloring.colored_vertices().len(),
            coloring,
            vertex_configs,
            edge_configs,
        }
    });
    Ok(DpRun { solution, components })
}

/// Runs the program on a connected graph with at least one edge; returns
/// one configuration per vertex.
fn solve_component(
    g: &Graph,
    tree: &AtomTree,
    table: &mut FeasibleTable,
    minimize: bool,
) -> (Option<Vec<VertexConfig>>, Vec<AtomStats>) {
    let mut stats = Vec::with_capacity(tree.atoms.len());
    if table.is_empty() {
        return (None, stats);
    }
    let ctx = Context { g, tree, minimize };
    let mut results = vec![AtomResult::default(); tree.atoms.len()];
    for &a in &tree.post_order {
        let (result, st) = process_atom(&ctx, a, &results, table);
        stats.push(st);
        let atom = &tree.atoms[a];
        match atom.incoming {
            Separator::Vertex(x) => {
                for c in 0..result.costs.len() {
                    if result.costs[c].is_none() && table.vertex_alive(x, c) {
                        table.delete_vertex_config(x, c);
                    }
                }
            }
            Separator::Edge(p, q) => {
                let e = g.edge_index(p, q).unwrap();
                for c in 0..result.costs.len() {
                    if result.costs[c].is_none() && table.edge_alive(e, c) {
                        table.delete_edge_config(e, c);
                    }
                }
            }
        }
        results[a] = result;
        if table.is_empty() {
            return (None, stats);
        }
    }

    let root = tree.root.expect("component has an edge");
    let r0 = tree.atoms[root].vertices[0];
    let mut best: Option<(u64, usize)> = None;
    for c in table.live_vertex_configs(r0) {
        if let Some(cost) = results[root].costs[c] {
            let own = u64::from(minimize && table.vertex_configs(r0)[c].chi > 0);
            if best.is_none_or(|(b, _)| cost + own < b) {
                best = Some((cost + own, c));
            }
        }
    }
    let Some((total, anchor)) = best else {
        return (None, stats);
    };

    // Backtracking: fix every atom's edge configurations from its anchor.
    let mut assigned: Vec<Option<usize>> = vec![None; g.n()];
    let mut edge_choice: Vec<Option<usize>> = vec![None; g.m()];
    assigned[r0] = Some(anchor);
    let mut stack = vec![(root, anchor)];
    while let Some((a, key)) = stack.pop() {
        let atom = &tree.atoms[a];
        let chosen = results[a].choices[key].as_ref().expect("anchor has a recorded extension");
        for (&(x, y), &id) in atom.cycle_edges().iter().zip(chosen) {
            let e = g.edge_index(x, y).unwrap();
            debug_assert!(edge_choice[e].is_none_or(|prev| prev == id));
            edge_choice[e] = Some(id);
            for z in [x, y] {
                let c = table.endpoint_config(e, id, z);
                assert!(
                    assigned[z].is_none_or(|prev| prev == c),
                    "vertex {z} received two configurations"
                );
                assigned[z] = Some(c);
            }
        }
        for &child in &atom.children {
            let key = match tree.atoms[child].incoming {
                Separator::Vertex(x) => assigned[x].unwrap(),
                Separator::Edge(p, q) => edge_choice[g.edge_index(p, q).unwrap()].unwrap(),
            };
            stack.push((child, key));
        }
    }
    let configs: Vec<VertexConfig> = assigned
        .iter()
        .enumerate()
        .map(|(v, c)| table.vertex_configs(v)[c.expect("every vertex lies in an atom")].clone())
        .collect();
    if minimize {
        debug_assert_eq!(configs.iter().filter(|c| c.chi > 0).count() as u64, total);
    }
    (Some(configs), stats)
}
