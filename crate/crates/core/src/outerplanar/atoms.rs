use std::collections::{BTreeMap, VecDeque};

use crate::error::Result;
use crate::graph::{Graph, OuterEmbedding, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtomKind {
    Edge,
    Face,
}

/// Shared vertices between an atom and its parent. Edge separators are
/// stored with the smaller id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Separator {
    Vertex(Vertex),
    Edge(Vertex, Vertex),
}

impl Separator {
    pub fn contains(&self, v: Vertex) -> bool {
        match *self {
            Separator::Vertex(a) => a == v,
            Separator::Edge(a, b) => a == v || b == v,
        }
    }

    fn edge(a: Vertex, b: Vertex) -> Self {
        Separator::Edge(a.min(b), a.max(b))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    pub kind: AtomKind,
    /// Endpoints, or the face cycle in the block's cyclic order. Rotated so
    /// that the incoming separator comes first.
    pub vertices: Vec<Vertex>,
    pub incoming: Separator,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

impl Atom {
    /// Edges of the atom as consecutive pairs, `(x_i, x_{i+1})`.
    pub fn cycle_edges(&self) -> Vec<(Vertex, Vertex)> {
        match self.kind {
            AtomKind::Edge => vec![(self.vertices[0], self.vertices[1])],
            AtomKind::Face => {
                let l = self.vertices.len();
                (0..l).map(|i| (self.vertices[i], self.vertices[(i + 1) % l])).collect()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomTree {
    pub atoms: Vec<Atom>,
    /// `None` only for the one-vertex graph, which has no atoms.
    pub root: Option<usize>,
    /// Children before parents.
    pub post_order: Vec<usize>,
}

/// Splits the polygon `poly` (ascending cycle positions) along the chords
/// until no chord remains inside a piece.
fn split_faces(poly: Vec<usize>, chords: &[(usize, usize)], out: &mut Vec<Vec<usize>>) {
    let l = poly.len();
    for &(a, b) in chords {
        let (Ok(ia), Ok(ib)) = (poly.binary_search(&a), poly.binary_search(&b)) else {
            continue;
        };
        if ib - ia == 1 || (ia == 0 && ib == l - 1) {
            continue;
        }
        let inner = poly[ia..=ib].to_vec();
        let outer: Vec<usize> = poly[..=ia].iter().chain(&poly[ib..]).copied().collect();
        split_faces(inner, chords, out);
        split_faces(outer, chords, out);
        return;
    }
    out.push(poly);
}

fn rotate_to(cycle: &mut [Vertex], start: usize) {
    cycle.rotate_left(start);
}

/// Atom tree of a connected outerplanar graph.
///
/// Bridges become edge atoms and the inner faces of every block become face
/// atoms. Faces of a block are joined along shared chords. Where atoms of
/// several blocks meet in an articulation point, each block contributes its
/// lexicographically smallest atom there and the smallest of those is joined
/// to all the others. The root is the smallest atom containing vertex 0.
pub fn build_atom_tree(g: &Graph, emb: &OuterEmbedding) -> Result<AtomTree> {
    // (vertices, block id)
    let mut raw: Vec<(AtomKind, Vec<Vertex>, usize)> = Vec::new();
    let mut block = 0;
    for &(u, v) in &emb.bridges {
        raw.push((AtomKind::Edge, vec![u.min(v), u.max(v)], block));
        block += 1;
    }
    for b in &emb.blocks {
        let pos = b.positions(g.n());
        let mut chords: Vec<(usize, usize)> = b
            .chords
            .iter()
            .map(|&(u, v)| {
                let (pu, pv) = (pos[u].unwrap(), pos[v].unwrap());
                (pu.min(pv), pu.max(pv))
            })
            .collect();
        chords.sort_unstable();
        let mut faces = Vec::new();
        split_faces((0..b.cycle.len()).collect(), &chords, &mut faces);
        for f in faces {
            raw.push((AtomKind::Face, f.iter().map(|&p| b.cycle[p]).collect(), block));
        }
        block += 1;
    }
    let count = raw.len();
    if count == 0 {
        return Ok(AtomTree {
            atoms: Vec::new(),
            root: None,
            post_order: Vec::new(),
        });
    }
    let keys: Vec<Vec<Vertex>> = raw
        .iter()
        .map(|(_, vs, _)| {
            let mut k = vs.clone();
            k.sort_unstable();
            k
        })
        .collect();

    let mut adj: Vec<Vec<(usize, Separator)>> = vec![Vec::new(); count];
    // Chords: pairs of faces sharing a non-bridge, non-outer edge.
    let mut by_edge: BTreeMap<(Vertex, Vertex), Vec<usize>> = BTreeMap::new();
    for (i, (kind, vs, _)) in raw.iter().enumerate() {
        if *kind == AtomKind::Face {
            let l = vs.len();
            for j in 0..l {
                let (a, b) = (vs[j], vs[(j + 1) % l]);
                by_edge.entry((a.min(b), a.max(b))).or_default().push(i);
            }
        }
    }
    for (&(a, b), atoms) in &by_edge {
        if let [x, y] = atoms[..] {
            adj[x].push((y, Separator::edge(a, b)));
            adj[y].push((x, Separator::edge(a, b)));
        }
    }
    // Articulation points: representative per block, hub joined to the rest.
    let mut reps: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); g.n()];
    for (i, (_, vs, blk)) in raw.iter().enumerate() {
        for &v in vs {
            let slot = reps[v].entry(*blk).or_insert(i);
            if keys[i] < keys[*slot] {
                *slot = i;
            }
        }
    }
    for (v, per_block) in reps.iter().enumerate() {
        if per_block.len() < 2 {
            continue;
        }
        let hub = *per_block.values().min_by(|&&a, &&b| keys[a].cmp(&keys[b])).unwrap();
        for &r in per_block.values() {
            if r != hub {
                adj[hub].push((r, Separator::Vertex(v)));
                adj[r].push((hub, Separator::Vertex(v)));
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }

    let r0 = (0..g.n()).find(|&v| g.degree(v) > 0).unwrap();
    let root = (0..count)
        .filter(|&i| raw[i].1.contains(&r0))
        .min_by(|&a, &b| keys[a].cmp(&keys[b]))
        .unwrap();

    let mut atoms: Vec<Option<Atom>> = vec![None; count];
    let mut queue = VecDeque::from([(root, None, Separator::Vertex(r0))]);
    while let Some((i, parent, incoming)) = queue.pop_front() {
        let (kind, mut vertices, _) = raw[i].clone();
        let start = match incoming {
            Separator::Vertex(v) => vertices.iter().position(|&x| x == v).unwrap(),
            Separator::Edge(a, b) => {
                let l = vertices.len();
                (0..l)
                    .find(|&j| {
                        let (x, y) = (vertices[j], vertices[(j + 1) % l]);
                        (x.min(y), x.max(y)) == (a, b)
                    })
                    .unwrap()
            }
        };
        rotate_to(&mut vertices, start);
        let mut children = Vec::new();
        for &(j, sep) in &adj[i] {
            if Some(j) != parent && atoms[j].is_none() && !queue.iter().any(|q| q.0 == j) {
                children.push(j);
                queue.push_back((j, Some(i), sep));
            }
        }
        atoms[i] = Some(Atom {
            kind,
            vertices,
            incoming,
            parent,
            children,
        });
    }
    let atoms: Vec<Atom> = atoms.into_iter().map(|a| a.expect("atom graph is connected")).collect();

    let mut post_order = Vec::with_capacity(count);
    let mut stack = vec![(root, false)];
    while let Some((i, expanded)) = stack.pop() {
        if expanded {
            post_order.push(i);
        } else {
            stack.push((i, true));
            for &c in atoms[i].children.iter().rev() {
                stack.push((c, false));
            }
        }
    }
    Ok(AtomTree {
        atoms,
        root: Some(root),
        post_order,
    })
}
