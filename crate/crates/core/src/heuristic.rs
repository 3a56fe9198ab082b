//! Iterated elimination of distance-3 sets.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::verify::PartialColoring;

/// One pass of the main loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Round {
    pub color: u32,
    /// Colored set, pairwise at distance at least 3 in the residual graph.
    pub set: Vec<Vertex>,
    /// Closed neighborhood of `set`, removed afterwards.
    pub removed: Vec<Vertex>,
    /// Path components stripped after the removal, each listed from its
    /// smaller endpoint.
    pub paths: Vec<Vec<Vertex>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationTrace {
    /// Path components of the input, stripped before the first round.
    pub initial_paths: Vec<Vec<Vertex>>,
    pub rounds: Vec<Round>,
    /// Color shared by all stripped paths.
    pub final_path_color: u32,
}

impl EliminationTrace {
    pub fn all_paths(&self) -> impl Iterator<Item = &Vec<Vertex>> {
        self.initial_paths
            .iter()
            .chain(self.rounds.iter().flat_map(|r| r.paths.iter()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elimination {
    pub coloring: PartialColoring,
    pub colors_used: u32,
    pub trace: EliminationTrace,
}

/// Residual graph: `g` restricted to the vertices still alive.
struct Residual<'a> {
    g: &'a Graph,
    alive: Vec<bool>,
}

impl Residual<'_> {
    fn live_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.g.neighbors(v).iter().copied().filter(|&w| self.alive[w])
    }

    fn is_empty(&self) -> bool {
        !self.alive.iter().any(|&a| a)
    }

    fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.g.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if !self.alive[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.live_neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn distances(&self, sources: &[Vertex]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.g.n()];
        let mut queue = VecDeque::new();
        for &s in sources {
            dist[s] = Some(0);
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap() + 1;
            for w in self.live_neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// A component whose vertices all have degree at most 2 and which has
    /// one edge fewer than vertices, listed from its smaller endpoint.
    fn as_path(&self, comp: &[Vertex]) -> Option<Vec<Vertex>> {
        let degrees: Vec<usize> = comp.iter().map(|&v| self.live_neighbors(v).count()).collect();
        let edges: usize = degrees.iter().sum::<usize>() / 2;
        if degrees.iter().any(|&d| d > 2) || edges + 1 != comp.len() {
            return None;
        }
        let start = comp
            .iter()
            .zip(&degrees)
            .filter(|(_, &d)| d <= 1)
            .map(|(&v, _)| v)
            .min()?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(next) = self.live_neighbors(cur).find(|&w| w != prev) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        Some(order)
    }

    fn strip_paths(&mut self) -> Vec<Vec<Vertex>> {
        let paths: Vec<Vec<Vertex>> = self
            .components()
            .iter()
            .filter_map(|comp| self.as_path(comp))
            .collect();
        for path in &paths {
            for &v in path {
                self.alive[v] = false;
            }
        }
        paths
    }
}

/// Runs the elimination on `g`. The result is always a closed-neighborhood
/// conflict-free coloring.
///
/// Each round seeds the smallest live vertex of every residual component
/// and then repeatedly adds the smallest vertex at distance exactly 3 from
/// the set (hence at least 3 from all of it).
pub fn iterated_elimination(g: &Graph) -> Elimination {
    let mut residual = Residual {
        g,
        alive: vec![true; g.n()],
    };
    let initial_paths = residual.strip_paths();
    let mut rounds = Vec::new();
    let mut color = 1;
    let mut colors = vec![0; g.n()];
    while !residual.is_empty() {
        let mut set: Vec<Vertex> = residual.components().iter().map(|c| c[0]).collect();
        loop {
            let dist = residual.distances(&set);
            match (0..g.n()).find(|&w| residual.alive[w] && dist[w] == Some(3)) {
                Some(w) => set.push(w),
                None => break,
            }
        }
        set.sort_unstable();
        let mut removed: Vec<Vertex> = set
            .iter()
            .flat_map(|&u| std::iter::once(u).chain(residual.live_neighbors(u)))
            .collect();
        removed.sort_unstable();
        removed.dedup();
        for &u in &set {
            colors[u] = color;
        }
        for &v in &removed {
            residual.alive[v] = false;
        }
        let paths = residual.strip_paths();
        rounds.push(Round {
            color,
            set,
            removed,
            paths,
        });
        color += 1;
    }
    let trace = EliminationTrace {
        initial_paths,
        rounds,
        final_path_color: color,
    };
    let mut coloring = PartialColoring::from_colors(colors);
    let mut any_path = false;
    for path in trace.all_paths() {
        color_path(path, color, &mut coloring);
        any_path = true;
    }
    let colors_used = trace.rounds.len() as u32 + u32::from(any_path);
    Elimination {
        coloring,
        colors_used,
        trace,
    }
}

/// Colors a path, given in order, with one color. Conceptually the path is
/// padded to a multiple of three and the middle of every triple is colored;
/// padding is trimmed first at the front, then at the back.
fn color_path(path: &[Vertex], color: u32, coloring: &mut PartialColoring) {
    let phase = usize::from(path.len().is_multiple_of(3));
    let mut colors = coloring.colors().to_vec();
    for (i, &v) in path.iter().enumerate() {
        if i % 3 == phase {
            colors[v] = color;
        }
    }
    let k = coloring.palette().max(color);
    *coloring = PartialColoring::with_palette(colors, k).expect("palette covers the new color");
}

/// Colors each of `paths` (vertex sequences of induced paths in `g`) with
/// `color`; all other vertices stay uncolored.
pub fn color_isolated_paths(g: &Graph, paths: &[Vec<Vertex>], color: u32) -> Result<PartialColoring> {
    if color == 0 {
        return Err(Error::InvalidParameter {
            what: "color",
            constraint: ">= 1",
            value: 0,
        });
    }
    let mut coloring = PartialColoring::new(g.n(), color);
    for path in paths {
        for &v in path {
            g.check_vertex(v)?;
        }
        let mut sorted = path.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let consecutive = path.windows(2).all(|w| g.has_edge(w[0], w[1]));
        let (sub, _) = g.induced_subgraph(path);
        if path.is_empty() || sorted.len() != path.len() || !consecutive || sub.m() + 1 != path.len() {
            return Err(Error::NotAPath);
        }
        color_path(path, color, &mut coloring);
    }
    Ok(coloring)
}
