//! Graph families, the 1-coloring reduction and seeded random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{chi_cf, Formula, Outcome, SearchLimits};
use crate::graph::{Graph, Mode, Vertex};
use crate::verify::PartialColoring;

fn too_small(what: &'static str, constraint: &'static str, value: usize) -> Error {
    Error::InvalidParameter {
        what,
        constraint,
        value: value as i64,
    }
}

pub fn gen_path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(too_small("path order", ">= 1", n));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(too_small("cycle order", ">= 3", n));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Star with center 0 and `n - 1` leaves.
pub fn gen_star(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(too_small("star order", ">= 1", n));
    }
    Graph::new(n, (1..n).map(|i| (0, i)))
}

pub fn gen_complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(too_small("complete graph order", ">= 1", n));
    }
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `K_n` without the edges of the triangle on `{0, 1, 2}`.
pub fn gen_kn_minus_triangle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(too_small("order", ">= 3", n));
    }
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| j >= 3 || i >= 3);
    Graph::new(n, edges)
}

/// Size of `G_k` from the recursion.
pub fn gk_order(k: usize) -> usize {
    match k {
        0 => 0,
        1 => 1,
        2 => 5,
        _ => k * (2 * gk_order(k - 1) + (k - 1) * gk_order(k - 2) + 1),
    }
}

/// The hierarchy with conflict-free chromatic number `k`, for `1 <= k <= 4`.
///
/// For `k >= 3` the underlying clique is on vertices `0..k`. Each clique
/// vertex then gets two joined copies of `G_{k-1}`, and each clique edge two
/// copies of `G_{k-2}` joined to both endpoints. `G_2` is the path
/// `0-1-2-3` with an extra leaf `4` on vertex 1.
pub fn gen_gk(k: usize) -> Result<Graph> {
    if !(1..=4).contains(&k) {
        return Err(Error::InvalidParameter {
            what: "k",
            constraint: "1 <= k <= 4",
            value: k as i64,
        });
    }
    let (n, edges) = gk_edges(k);
    Graph::new(n, edges)
}

fn gk_edges(k: usize) -> (usize, Vec<(Vertex, Vertex)>) {
    match k {
        1 => (1, vec![]),
        2 => (5, vec![(0, 1), (1, 2), (2, 3), (1, 4)]),
        _ => {
            let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
            for i in 0..k {
                for j in i + 1..k {
                    edges.push((i, j));
                }
            }
            let mut next = k;
            let mut attach = |sub: usize, anchors: &[Vertex], edges: &mut Vec<(Vertex, Vertex)>| {
                let (m, inner) = gk_edges(sub);
                for _ in 0..2 {
                    edges.extend(inner.iter().map(|&(a, b)| (a + next, b + next)));
                    for v in next..next + m {
                        edges.extend(anchors.iter().map(|&a| (a, v)));
                    }
                    next += m;
                }
            };
            for v in 0..k {
                attach(k - 1, &[v], &mut edges);
            }
            for i in 0..k {
                for j in i + 1..k {
                    attach(k - 2, &[i, j], &mut edges);
                }
            }
            (next, edges)
        }
    }
}

/// The canonical witness for `G_k`: clique vertex `i` gets color `i + 1`
/// (for `G_2`, vertices 1 and 2 get colors 1 and 2).
pub fn gk_canonical_coloring(k: usize) -> Result<PartialColoring> {
    let g = gen_gk(k)?;
    let mut chi = PartialColoring::new(g.n(), k as u32);
    match k {
        1 => chi.set(0, 1)?,
        2 => {
            chi.set(1, 1)?;
            chi.set(2, 2)?;
        }
        _ => {
            for v in 0..k {
                chi.set(v, v as u32 + 1)?;
            }
        }
    }
    Ok(chi)
}

/// Per variable, the clauses attached to its upper and lower true vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseOrders {
    pub upper: Vec<Vec<usize>>,
    pub lower: Vec<Vec<usize>>,
}

impl ClauseOrders {
    /// Every clause attached on the upper side, in increasing order.
    pub fn all_upper(formula: &Formula) -> Self {
        let mut upper = vec![Vec::new(); formula.nvars()];
        for (j, clause) in formula.clauses().iter().enumerate() {
            for &x in clause {
                upper[x].push(j);
            }
        }
        ClauseOrders {
            upper,
            lower: vec![Vec::new(); formula.nvars()],
        }
    }

    pub fn validate(&self, formula: &Formula) -> Result<()> {
        let n = formula.nvars();
        if self.upper.len() != n || self.lower.len() != n {
            return Err(Error::MalformedOrders(format!(
                "expected {n} upper and lower lists, got {} and {}",
                self.upper.len(),
                self.lower.len()
            )));
        }
        for x in 0..n {
            let mut listed: Vec<usize> = self.upper[x].iter().chain(&self.lower[x]).copied().collect();
            listed.sort_unstable();
            let mut expected: Vec<usize> = formula
                .clauses()
                .iter()
                .enumerate()
                .filter(|(_, cl)| cl.contains(&x))
                .map(|(j, _)| j)
                .collect();
            expected.sort_unstable();
            if listed != expected {
                return Err(Error::MalformedOrders(format!(
                    "variable {} lists clauses {listed:?}, expected {expected:?}",
                    x + 1
                )));
            }
        }
        Ok(())
    }
}

/// Role of a vertex in a reduction graph; indices and positions are 0-based
/// for variables and clauses, 1-based for cycle positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Variable { var: usize, pos: usize, is_true: bool },
    Clause { clause: usize, pos: usize },
}

impl std::fmt::Display for Role {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Role::Variable { var, pos, is_true } => write!(f, "z:{}:{}:{}", var + 1, pos, is_true),
            Role::Clause { clause, pos } => write!(f, "c:{}:{}", clause + 1, pos),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionGraph {
    pub graph: Graph,
    pub roles: Vec<Role>,
}

/// Id of cycle vertex `z_{var, pos}` (`pos` in `1..=12`).
pub fn variable_vertex(var: usize, pos: usize) -> Vertex {
    12 * var + pos - 1
}

/// Id of clause vertex `c_{clause, pos}` (`pos` in `1..=4`).
pub fn clause_vertex(nvars: usize, clause: usize, pos: usize) -> Vertex {
    12 * nvars + 4 * clause + pos - 1
}

/// A 12-cycle per variable and a 4-cycle per clause. Clause vertex
/// `c_{j,1}` is joined to `z_{i,1}` when the clause is in the upper list of
/// variable `i` and to `z_{i,7}` when it is in the lower list.
pub fn gen_reduction_1color(formula: &Formula, orders: &ClauseOrders) -> Result<ReductionGraph> {
    orders.validate(formula)?;
    let nv = formula.nvars();
    let nc = formula.clauses().len();
    let n = 12 * nv + 4 * nc;
    let mut edges = Vec::new();
    let mut roles = Vec::with_capacity(n);
    for i in 0..nv {
        for p in 1..=12 {
            edges.push((variable_vertex(i, p), variable_vertex(i, p % 12 + 1)));
            roles.push(Role::Variable {
                var: i,
                pos: p,
                is_true: p % 3 == 1,
            });
        }
    }
    for j in 0..nc {
        for q in 1..=4 {
            edges.push((clause_vertex(nv, j, q), clause_vertex(nv, j, q % 4 + 1)));
            roles.push(Role::Clause { clause: j, pos: q });
        }
    }
    for i in 0..nv {
        for &j in &orders.upper[i] {
            edges.push((clause_vertex(nv, j, 1), variable_vertex(i, 1)));
        }
        for &j in &orders.lower[i] {
            edges.push((clause_vertex(nv, j, 1), variable_vertex(i, 7)));
        }
    }
    Ok(ReductionGraph {
        graph: Graph::new(n, edges)?,
        roles,
    })
}

/// Coloring read off an assignment: the true cycle vertices of true
/// variables, positions 3, 6, 9, 12 of false variables and every `c_{j,3}`.
pub fn reduction_coloring(formula: &Formula, assignment: &[bool]) -> PartialColoring {
    let nv = formula.nvars();
    let nc = formula.clauses().len();
    let mut colors = vec![0; 12 * nv + 4 * nc];
    for (i, &value) in assignment.iter().enumerate().take(nv) {
        let offset = if value { 1 } else { 3 };
        for step in 0..4 {
            colors[variable_vertex(i, offset + 3 * step)] = 1;
        }
    }
    for j in 0..nc {
        colors[clause_vertex(nv, j, 3)] = 1;
    }
    PartialColoring::from_colors(colors)
}

/// Chord sets of all triangulations of the convex `n`-gon on `0..n`.
fn triangulation_chords(lo: usize, hi: usize) -> Vec<Vec<(Vertex, Vertex)>> {
    if hi - lo < 2 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    // The triangle on side (lo, hi) has apex m.
    for m in lo + 1..hi {
        let left = triangulation_chords(lo, m);
        let right = triangulation_chords(m, hi);
        for l in &left {
            for r in &right {
                let mut chords = l.clone();
                chords.extend(r);
                if m - lo >= 2 {
                    chords.push((lo, m));
                }
                if hi - m >= 2 {
                    chords.push((m, hi));
                }
                out.push(chords);
            }
        }
    }
    out
}

/// All maximal outerplanar graphs on the `n`-gon `0-1-...-(n-1)`, ordered by
/// sorted chord list.
pub fn triangulations(n: usize) -> Result<Vec<Graph>> {
    if n < 3 {
        return Err(too_small("polygon size", ">= 3", n));
    }
    let mut sets: Vec<Vec<(Vertex, Vertex)>> = triangulation_chords(0, n - 1)
        .into_iter()
        .map(|mut c| {
            // The side (0, n-1) is an outer edge, not a chord.
            c.retain(|&e| e != (0, n - 1));
            c.sort_unstable();
            c
        })
        .collect();
    sets.sort();
    sets.into_iter()
        .map(|chords| polygon_with_chords(n, &chords))
        .collect()
}

fn polygon_with_chords(n: usize, chords: &[(Vertex, Vertex)]) -> Result<Graph> {
    let outer = (0..n).map(|i| (i, (i + 1) % n));
    Graph::new(n, outer.chain(chords.iter().copied()))
}

/// Triangulation with every chord at vertex 0.
pub fn fan_triangulation(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(too_small("polygon size", ">= 3", n));
    }
    let chords: Vec<_> = (2..n - 1).map(|j| (0, j)).collect();
    polygon_with_chords(n, &chords)
}

/// First triangulation of the `n`-gon whose closed conflict-free chromatic
/// number is 2, or `None` if all of them are 1-colorable.
pub fn find_outerplanar_requiring_2(n: usize, limits: SearchLimits) -> Result<Option<Graph>> {
    for g in triangulations(n)? {
        match chi_cf(&g, Mode::Closed, limits)? {
            Outcome::Found((1, _)) => {}
            Outcome::Found(_) => return Ok(Some(g)),
            Outcome::Infeasible => unreachable!("closed mode always admits n colors"),
            Outcome::BudgetExceeded(u) => return Err(Error::BudgetExceeded { nodes: u.nodes }),
        }
    }
    Ok(None)
}

/// Random relabeling so the vertex ids carry no structural information.
fn shuffle_labels(n: usize, edges: &[(Vertex, Vertex)], rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_edges_lossy(n, edges.iter().map(|&(a, b)| (perm[a], perm[b])))
}

/// Uniformly random triangulation of the `n`-gon, as a chord list.
///
/// A uniform binary tree with `n - 2` internal nodes comes from a uniform
/// balanced word (via the cycle rotation argument) and is mapped to triangles recursively.
fn random_triangulation_chords(n: usize, rng: &mut ChaCha8Rng) -> Vec<(Vertex, Vertex)> {
    let t = n - 2;
    // t up-steps and t + 1 down-steps; exactly one rotation keeps every
    // proper prefix nonnegative.
    let mut word: Vec<i32> = std::iter::repeat_n(1, t).chain(std::iter::repeat_n(-1, t + 1)).collect();
    word.shuffle(rng);
    let mut height = 0;
    let mut lowest = (0, 0usize);
    for (i, &step) in word.iter().enumerate() {
        height += step;
        if height < lowest.0 {
            lowest = (height, i + 1);
        }
    }
    let len = word.len();
    word.rotate_left(lowest.1 % len);
    word.pop();

    // Word grammar: B = empty | up B down B; each `up` is an internal node.
    let mut nodes: Vec<(Option<usize>, Option<usize>, usize)> = Vec::with_capacity(t);
    let mut at = 0;
    let root = parse_tree(&word, &mut at, &mut nodes);
    let mut chords = Vec::with_capacity(t.saturating_sub(1));
    emit_triangles(&nodes, root, 0, n - 1, &mut chords);
    chords.sort_unstable();
    chords
}

/// Parses one subtree; nodes store (left, right, internal node count).
fn parse_tree(word: &[i32], at: &mut usize, nodes: &mut Vec<(Option<usize>, Option<usize>, usize)>) -> Option<usize> {
    if *at >= word.len() || word[*at] == -1 {
        return None;
    }
    *at += 1;
    let left = parse_tree(word, at, nodes);
    *at += 1;
    let right = parse_tree(word, at, nodes);
    let size = |c: Option<usize>, nodes: &Vec<(Option<usize>, Option<usize>, usize)>| c.map_or(0, |i| nodes[i].2);
    let total = 1 + size(left, nodes) + size(right, nodes);
    nodes.push((left, right, total));
    Some(nodes.len() - 1)
}

/// The node triangulates the polygon `lo..=hi` with a triangle on side
/// `(lo, hi)`; its apex splits the rest between the two subtrees.
fn emit_triangles(
    nodes: &[(Option<usize>, Option<usize>, usize)],
    node: Option<usize>,
    lo: usize,
    hi: usize,
    chords: &mut Vec<(Vertex, Vertex)>,
) {
    let Some(i) = node else { return };
    let (left, right, _) = nodes[i];
    let apex = lo + 1 + left.map_or(0, |l| nodes[l].2);
    if apex - lo >= 2 {
        chords.push((lo, apex));
    }
    if hi - apex >= 2 {
        chords.push((apex, hi));
    }
    emit_triangles(nodes, left, lo, apex, chords);
    emit_triangles(nodes, right, apex, hi, chords);
}

/// Random outerplanar graph: a uniform triangulation of the `n`-gon whose
/// chords are each kept with probability `keep_prob`, randomly relabeled.
pub fn gen_random_outerplanar(n: usize, keep_prob: f64, seed: u64) -> Result<Graph> {
    gen_random_outerplanar_sparse(n, keep_prob, 0.0, seed)
}

/// As [`gen_random_outerplanar`], additionally dropping each outer edge with
/// probability `outer_drop_prob` as long as the graph stays connected.
pub fn gen_random_outerplanar_sparse(n: usize, keep_prob: f64, outer_drop_prob: f64, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(too_small("order", ">= 3", n));
    }
    for (what, p) in [("chord keep probability", keep_prob), ("outer drop probability", outer_drop_prob)] {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter {
                what,
                constraint: "0 <= p <= 1",
                value: p.round() as i64,
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chords = random_triangulation_chords(n, &mut rng);
    let mut edges: Vec<(Vertex, Vertex)> = (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))).collect();
    for c in chords {
        if rng.gen_bool(keep_prob) {
            edges.push(c);
        }
    }
    if outer_drop_prob > 0.0 {
        drop_keeping_connected(n, &mut edges, n, outer_drop_prob, &mut rng);
    }
    Ok(shuffle_labels(n, &edges, &mut rng))
}

/// Removes each of the first `candidates` edges with probability `p` unless
/// that disconnects the graph.
fn drop_keeping_connected(
    n: usize,
    edges: &mut Vec<(Vertex, Vertex)>,
    candidates: usize,
    p: f64,
    rng: &mut ChaCha8Rng,
) {
    let mut i = 0;
    let mut seen = 0;
    while seen < candidates && i < edges.len() {
        seen += 1;
        if rng.gen_bool(p) {
            let e = edges.remove(i);
            if Graph::from_edges_lossy(n, edges.iter().copied()).is_connected() {
                continue;
            }
            edges.insert(i, e);
        }
        i += 1;
    }
}

/// Planar triangulation built by inserting each new vertex into a random
/// face and joining it to the three corners.
pub fn gen_random_triangulation(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = stacked_triangulation(n, &mut rng)?;
    Ok(shuffle_labels(n, &edges, &mut rng))
}

fn stacked_triangulation(n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<(Vertex, Vertex)>> {
    if n < 3 {
        return Err(too_small("order", ">= 3", n));
    }
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    // Both sides of the first triangle are faces.
    let mut faces = vec![[0, 1, 2], [0, 1, 2]];
    for v in 3..n {
        let f = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(f);
        edges.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [a, c, v], [b, c, v]]);
    }
    Ok(edges)
}

/// Random connected planar graph: a stacked triangulation with each edge
/// deleted with probability 0.3 unless that disconnects the graph.
pub fn gen_random_planar(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = stacked_triangulation(n, &mut rng)?;
    let m = edges.len();
    drop_keeping_connected(n, &mut edges, m, 0.3, &mut rng);
    Ok(shuffle_labels(n, &edges, &mut rng))
}

/// Random connected bipartite planar graph: the edges of a random planar
/// graph joining BFS layers of different parity.
pub fn gen_random_bipartite_planar(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = stacked_triangulation(n, &mut rng)?;
    let m = edges.len();
    drop_keeping_connected(n, &mut edges, m, 0.3, &mut rng);
    let g = Graph::from_edges_lossy(n, edges.iter().copied());
    let dist = g.bfs_distances(&[0]);
    let parity = |v: Vertex| dist[v].expect("connected") % 2;
    let kept: Vec<_> = edges.into_iter().filter(|&(a, b)| parity(a) != parity(b)).collect();
    Ok(shuffle_labels(n, &kept, &mut rng))
}
