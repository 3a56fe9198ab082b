//! Colorings built from dominating sets by contracting onto them, and the
//! open-neighborhood constructions on bipartite and general planar graphs.

use log::warn;

use crate::error::{Error, Result};
use crate::exact::{min_dominating_set, proper_coloring, Outcome, SearchLimits};
use crate::graph::{Graph, Vertex};
use crate::verify::{first_undominated, PartialColoring};

/// Facts every open-neighborhood conflict-free coloring satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ForcedFact {
    /// The only neighbor of a degree-1 vertex.
    MustBeColored(Vertex),
    /// The two neighbors of a degree-2 vertex (smaller id first) may not
    /// share a color.
    DistinctIfColored(Vertex, Vertex),
}

pub fn open_degree_constraints(g: &Graph) -> Vec<ForcedFact> {
    let mut facts: Vec<ForcedFact> = (0..g.n())
        .filter_map(|v| match g.neighbors(v) {
            [u] => Some(ForcedFact::MustBeColored(*u)),
            [a, b] => Some(ForcedFact::DistinctIfColored(*a, *b)),
            _ => None,
        })
        .collect();
    facts.sort_unstable();
    facts.dedup();
    facts
}

/// Proper coloring of a contracted minor with `k` colors. If the exact
/// search runs out of budget, falls back to a greedy smallest-last coloring,
/// which may use more than `k` colors.
fn color_minor(minor: &Graph, k: u32, limits: SearchLimits) -> Result<Vec<u32>> {
    match proper_coloring(minor, k, limits)? {
        Outcome::Found(chi) => Ok(chi.colors().to_vec()),
        Outcome::Infeasible => Err(Error::ProperColoringInfeasible(k)),
        Outcome::BudgetExceeded(usage) => {
            let colors = greedy_smallest_last(minor);
            warn!(
                "exact {k}-coloring of a {}-vertex minor gave up after {} nodes; greedy fallback uses {} colors",
                minor.n(),
                usage.nodes,
                colors.iter().max().copied().unwrap_or(0)
            );
            Ok(colors)
        }
    }
}

/// Greedy coloring in smallest-last order; uses at most one more color
/// than the degeneracy, so at most 6 on planar graphs.
pub fn greedy_smallest_last(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .unwrap();
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    let mut colors = vec![0u32; n];
    for &v in order.iter().rev() {
        let mut c = 1;
        while g.neighbors(v).iter().any(|&w| colors[w] == c) {
            c += 1;
        }
        colors[v] = c;
    }
    colors
}

/// Smallest-id neighbor of `v` inside `set`.
fn first_neighbor_in(g: &Graph, v: Vertex, set: &[bool]) -> Option<Vertex> {
    g.neighbors(v).iter().copied().find(|&w| set[w])
}

/// Contracts `g` onto the vertices flagged in `hubs` (every other vertex
/// goes into its smallest-id hub neighbor), properly colors the minor with
/// `palette` colors starting at `offset + 1`, and writes the colors onto the
/// hubs.
fn contract_and_color(
    g: &Graph,
    hubs: &[bool],
    palette: u32,
    offset: u32,
    limits: SearchLimits,
    colors: &mut [u32],
) -> Result<()> {
    let mut target = vec![0; g.n()];
    for v in 0..g.n() {
        target[v] = if hubs[v] {
            v
        } else {
            match first_neighbor_in(g, v, hubs) {
                Some(h) => h,
                None => return Err(Error::NotDominating(v)),
            }
        };
    }
    let (minor, kept) = g.contract_into(&target)?;
    let minor_colors = color_minor(&minor, palette, limits)?;
    for (i, &v) in kept.iter().enumerate() {
        colors[v] = minor_colors[i] + offset;
    }
    Ok(())
}

/// Conflict-free coloring of `g` that colors exactly the vertices of `d`.
pub fn cf_from_dominating_set(g: &Graph, d: &[Vertex], k: u32, limits: SearchLimits) -> Result<PartialColoring> {
    for &v in d {
        g.check_vertex(v)?;
    }
    if let Some(v) = first_undominated(g, d) {
        return Err(Error::NotDominating(v));
    }
    let mut hubs = vec![false; g.n()];
    for &v in d {
        hubs[v] = true;
    }
    let mut colors = vec![0; g.n()];
    contract_and_color(g, &hubs, k, 0, limits, &mut colors)?;
    Ok(PartialColoring::from_colors(colors))
}

fn dominating_set(g: &Graph, limits: SearchLimits) -> Result<Vec<Vertex>> {
    match min_dominating_set(g, limits)? {
        Outcome::Found(d) => Ok(d),
        Outcome::Infeasible => unreachable!("every graph has a dominating set"),
        Outcome::BudgetExceeded(u) => Err(Error::BudgetExceeded { nodes: u.nodes }),
    }
}

/// Four colors on a minimum dominating set; for planar inputs.
pub fn planar_cf4(g: &Graph, limits: SearchLimits) -> Result<PartialColoring> {
    let d = dominating_set(g, limits)?;
    cf_from_dominating_set(g, &d, 4, limits)
}

/// Three colors on a minimum dominating set; for outerplanar inputs.
pub fn outerplanar_cf3(g: &Graph, limits: SearchLimits) -> Result<PartialColoring> {
    let d = dominating_set(g, limits)?;
    cf_from_dominating_set(g, &d, 3, limits)
}

fn reject_isolated(g: &Graph) -> Result<()> {
    match (0..g.n()).find(|&v| g.degree(v) == 0) {
        Some(v) => Err(Error::IsolatedVertex(v)),
        None => Ok(()),
    }
}

/// Open-neighborhood coloring of a bipartite planar graph with colors 1..=4:
/// each side is colored through the minor that merges the other side into it.
pub fn open_cf_bipartite4(g: &Graph, limits: SearchLimits) -> Result<PartialColoring> {
    reject_isolated(g)?;
    let (left, _) = g.bipartition()?;
    let mut on_left = vec![false; g.n()];
    for &v in &left {
        on_left[v] = true;
    }
    let on_right: Vec<bool> = on_left.iter().map(|&b| !b).collect();
    let mut colors = vec![0; g.n()];
    contract_and_color(g, &on_left, 4, 0, limits, &mut colors)?;
    contract_and_color(g, &on_right, 4, 0, limits, &mut colors)?;
    Ok(PartialColoring::from_colors(colors))
}

/// Open-neighborhood coloring of a planar graph with colors 1..=8, split
/// along an independent dominating set.
pub fn open_cf_planar8(g: &Graph, limits: SearchLimits) -> Result<PartialColoring> {
    reject_isolated(g)?;
    let mut in_v1 = vec![false; g.n()];
    for v in g.independent_dominating_set() {
        in_v1[v] = true;
    }
    let in_v2: Vec<bool> = in_v1.iter().map(|&b| !b).collect();
    let mut colors = vec![0; g.n()];
    contract_and_color(g, &in_v1, 4, 0, limits, &mut colors)?;
    contract_and_color(g, &in_v2, 4, 4, limits, &mut colors)?;
    Ok(PartialColoring::from_colors(colors))
}
