//! Ground-truth checks for conflict-free, proper and dominating colorings.

use crate::error::{Error, Result};
use crate::graph::{Graph, Mode, Vertex};

/// Assignment of colors `0..=k` to vertices, 0 meaning uncolored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialColoring {
    colors: Vec<u32>,
    k: u32,
}

impl PartialColoring {
    /// All `n` vertices uncolored, palette `1..=k`.
    pub fn new(n: usize, k: u32) -> Self {
        PartialColoring {
            colors: vec![0; n],
            k,
        }
    }

    /// Wraps a color vector; the palette size is its largest entry.
    pub fn from_colors(colors: Vec<u32>) -> Self {
        let k = colors.iter().copied().max().unwrap_or(0);
        PartialColoring { colors, k }
    }

    pub fn with_palette(colors: Vec<u32>, k: u32) -> Result<Self> {
        if let Some(&c) = colors.iter().find(|&&c| c > k) {
            return Err(Error::ColorOutOfRange { color: c, k });
        }
        Ok(PartialColoring { colors, k })
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn palette(&self) -> u32 {
        self.k
    }

    /// Color of `v`; vertices beyond the stored range count as uncolored.
    pub fn get(&self, v: Vertex) -> u32 {
        self.colors.get(v).copied().unwrap_or(0)
    }

    pub fn set(&mut self, v: Vertex, color: u32) -> Result<()> {
        if color > self.k {
            return Err(Error::ColorOutOfRange { color, k: self.k });
        }
        if v >= self.colors.len() {
            return Err(Error::InvalidVertex {
                vertex: v,
                n: self.colors.len(),
            });
        }
        self.colors[v] = color;
        Ok(())
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Vertices with a color, ascending.
    pub fn colored_vertices(&self) -> Vec<Vertex> {
        (0..self.colors.len()).filter(|&v| self.colors[v] > 0).collect()
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.iter().copied().filter(|&c| c > 0).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// Number of vertices with color at least 1.
pub fn count_colored(coloring: &PartialColoring) -> usize {
    coloring.colors.iter().filter(|&&c| c > 0).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationReason {
    /// Some color appears in the neighborhood but none appears exactly once.
    NoUniqueColor,
    /// Open mode and the vertex has no neighbors at all.
    IsolatedOpen,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Verdict {
    pub violations: Vec<(Vertex, ViolationReason)>,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn mode_members(g: &Graph, v: Vertex, mode: Mode) -> impl Iterator<Item = Vertex> + '_ {
    let own = (mode == Mode::Closed).then_some(v);
    own.into_iter().chain(g.neighbors(v).iter().copied())
}

/// Vertices in the mode-neighborhood of `v` whose color is nonzero and
/// appears exactly once there. Sorted ascending.
pub fn cf_neighbors(g: &Graph, coloring: &PartialColoring, v: Vertex, mode: Mode) -> Result<Vec<Vertex>> {
    g.check_vertex(v)?;
    Ok(unique_in_neighborhood(g, coloring, v, mode))
}

fn unique_in_neighborhood(g: &Graph, coloring: &PartialColoring, v: Vertex, mode: Mode) -> Vec<Vertex> {
    let members: Vec<Vertex> = mode_members(g, v, mode).collect();
    let mut out: Vec<Vertex> = members
        .iter()
        .copied()
        .filter(|&w| {
            let c = coloring.get(w);
            c > 0 && members.iter().filter(|&&x| coloring.get(x) == c).count() == 1
        })
        .collect();
    out.sort_unstable();
    out
}

/// Checks that every vertex has a conflict-free neighbor; lists every failing vertex.
pub fn verify_cf(g: &Graph, coloring: &PartialColoring, mode: Mode) -> Verdict {
    let mut violations = Vec::new();
    for v in 0..g.n() {
        if mode == Mode::Open && g.degree(v) == 0 {
            violations.push((v, ViolationReason::IsolatedOpen));
        } else if unique_in_neighborhood(g, coloring, v, mode).is_empty() {
            violations.push((v, ViolationReason::NoUniqueColor));
        }
    }
    Verdict { violations }
}

/// True iff every vertex is colored and adjacent vertices get different colors.
pub fn verify_proper(g: &Graph, coloring: &PartialColoring) -> bool {
    (0..g.n()).all(|v| coloring.get(v) > 0)
        && g.edges().iter().all(|&(a, b)| coloring.get(a) != coloring.get(b))
}

/// True iff every vertex is in `set` or adjacent to a member.
pub fn is_dominating(g: &Graph, set: &[Vertex]) -> bool {
    first_undominated(g, set).is_none()
}

pub fn first_undominated(g: &Graph, set: &[Vertex]) -> Option<Vertex> {
    let mut dominated = vec![false; g.n()];
    for &d in set {
        if d < g.n() {
            dominated[d] = true;
            for &w in g.neighbors(d) {
                dominated[w] = true;
            }
        }
    }
    dominated.iter().position(|&d| !d)
}
