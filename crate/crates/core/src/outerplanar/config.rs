use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Color of a vertex together with a nonempty set of designated
/// conflict-free neighbors and the (distinct) colors they carry.
///
/// A configuration is realized by a coloring when every designated neighbor
/// has its listed color and no other vertex of `N[vertex]` shares it.
/// Designated neighbors need not be all conflict-free neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexConfig {
    pub vertex: Vertex,
    pub chi: u32,
    /// `(w, rho(w))` sorted by `w`.
    pub designated: Vec<(Vertex, u32)>,
}

impl VertexConfig {
    pub fn rho(&self, w: Vertex) -> Option<u32> {
        self.designated
            .binary_search_by_key(&w, |&(x, _)| x)
            .ok()
            .map(|i| self.designated[i].1)
    }

    fn uses_color(&self, c: u32) -> bool {
        self.designated.iter().any(|&(_, r)| r == c)
    }
}

/// Configurations of both endpoints of an edge `(u, v)`, `u < v`, given as
/// indices into the per-vertex configuration lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeConfig {
    pub edge: (Vertex, Vertex),
    pub cu: usize,
    pub cv: usize,
}

/// All configurations of `v` with palette `1..=k`: every color for `v`,
/// every nonempty `S` within `N[v]` of size at most `k`, every injective
/// coloring of `S`, subject to `v in S => chi = rho(v)`.
pub fn enumerate_vertex_configs(g: &Graph, v: Vertex, k: u32) -> Result<Vec<VertexConfig>> {
    g.check_vertex(v)?;
    let closed = g.closed_neighbors(v);
    let mut out = Vec::new();
    let max_size = (k as usize).min(closed.len());
    for size in 1..=max_size {
        let mut subset = Vec::with_capacity(size);
        subsets(&closed, size, 0, &mut subset, &mut |s| {
            let mut colors = Vec::with_capacity(size);
            injections(k, size, &mut colors, &mut |rho| {
                let designated: Vec<(Vertex, u32)> = s.iter().copied().zip(rho.iter().copied()).collect();
                let own = designated.iter().find(|&&(w, _)| w == v).map(|&(_, c)| c);
                match own {
                    Some(c) => out.push(VertexConfig {
                        vertex: v,
                        chi: c,
                        designated: designated.clone(),
                    }),
                    None => {
                        for chi in 0..=k {
                            out.push(VertexConfig {
                                vertex: v,
                                chi,
                                designated: designated.clone(),
                            });
                        }
                    }
                }
            });
        });
    }
    Ok(out)
}

fn subsets(items: &[Vertex], size: usize, from: usize, cur: &mut Vec<Vertex>, f: &mut dyn FnMut(&[Vertex])) {
    if cur.len() == size {
        f(cur);
        return;
    }
    for i in from..items.len() {
        if items.len() - i < size - cur.len() {
            break;
        }
        cur.push(items[i]);
        subsets(items, size, i + 1, cur, f);
        cur.pop();
    }
}

fn injections(k: u32, len: usize, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if cur.len() == len {
        f(cur);
        return;
    }
    for c in 1..=k {
        if !cur.contains(&c) {
            cur.push(c);
            injections(k, len, cur, f);
            cur.pop();
        }
    }
}

/// Whether configurations of the adjacent vertices `cu.vertex` and
/// `cv.vertex` can hold simultaneously.
pub fn compatible(g: &Graph, cu: &VertexConfig, cv: &VertexConfig) -> Result<bool> {
    let (u, v) = (cu.vertex, cv.vertex);
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::MissingEdge(u, v));
    }
    Ok(compatible_unchecked(g, cu, cv))
}

/// Sees `x` (a member of `N[owner]`) with color `chi_x` from the owner's side.
fn consistent_view(owner: &VertexConfig, x: Vertex, chi_x: u32) -> bool {
    match owner.rho(x) {
        Some(c) => c == chi_x,
        None => chi_x == 0 || !owner.uses_color(chi_x),
    }
}

pub(crate) fn compatible_unchecked(g: &Graph, cu: &VertexConfig, cv: &VertexConfig) -> bool {
    let (u, v) = (cu.vertex, cv.vertex);
    // Each endpoint against its own color and the other's color.
    if !consistent_view(cu, u, cu.chi)
        || !consistent_view(cu, v, cv.chi)
        || !consistent_view(cv, v, cv.chi)
        || !consistent_view(cv, u, cu.chi)
    {
        return false;
    }
    for &(w, ru) in &cu.designated {
        for &(x, rv) in &cv.designated {
            if w == x {
                if ru != rv {
                    return false;
                }
                continue;
            }
            // x is known to carry rv; if it lies in N[u] it must not repeat
            // the color u relies on, and symmetrically for v.
            if ru == rv && ((x == u || g.has_edge(x, u)) || (w == v || g.has_edge(w, v))) {
                return false;
            }
        }
    }
    true
}
