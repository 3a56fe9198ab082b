//! Exhaustive oracles: conflict-free chromatic and domination numbers,
//! minimum dominating sets, proper colorings and positive 1-in-3-SAT.

use std::time::{Duration, Instant};

use crate::domination::ForcedFact;
use crate::error::{Error, Result};
use crate::graph::{Graph, Mode, Vertex};
use crate::verify::PartialColoring;

/// Caps on search effort. A search that hits either cap reports
/// [`Outcome::BudgetExceeded`] instead of a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub node_budget: u64,
    pub time_budget: Duration,
}

impl SearchLimits {
    pub fn new(node_budget: u64, time_budget: Duration) -> Result<Self> {
        if node_budget == 0 {
            return Err(Error::InvalidParameter {
                what: "node budget",
                constraint: "> 0",
                value: 0,
            });
        }
        if time_budget.is_zero() {
            return Err(Error::InvalidParameter {
                what: "time budget",
                constraint: "> 0",
                value: 0,
            });
        }
        Ok(SearchLimits {
            node_budget,
            time_budget,
        })
    }

    pub fn unlimited() -> Self {
        SearchLimits {
            node_budget: u64::MAX,
            time_budget: Duration::MAX,
        }
    }
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            node_budget: 200_000_000,
            time_budget: Duration::from_secs(600),
        }
    }
}

/// Effort spent when a search gave up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Usage {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<T> {
    Found(T),
    Infeasible,
    BudgetExceeded(Usage),
}

impl<T> Outcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, Outcome::Infeasible)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Found(t) => Outcome::Found(f(t)),
            Outcome::Infeasible => Outcome::Infeasible,
            Outcome::BudgetExceeded(u) => Outcome::BudgetExceeded(u),
        }
    }
}

/// Node and clock accounting shared by consecutive searches.
struct Budget {
    limits: SearchLimits,
    start: Instant,
    nodes: u64,
    exhausted: bool,
}

impl Budget {
    fn new(limits: SearchLimits) -> Self {
        Budget {
            limits,
            start: Instant::now(),
            nodes: 0,
            exhausted: false,
        }
    }

    /// Counts one node; returns false once a limit is reached.
    fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.limits.node_budget
            || (self.nodes.is_multiple_of(4096) && self.start.elapsed() > self.limits.time_budget)
        {
            self.exhausted = true;
        }
        !self.exhausted
    }

    fn usage(&self) -> Usage {
        Usage {
            nodes: self.nodes,
            elapsed: self.start.elapsed(),
        }
    }
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter {
            what: "k",
            constraint: ">= 1",
            value: 0,
        });
    }
    Ok(())
}

fn first_isolated(g: &Graph) -> Option<Vertex> {
    (0..g.n()).find(|&v| g.degree(v) == 0)
}

const UNASSIGNED: u32 = u32::MAX;

/// Backtracking over colors `0..=k`, vertices in descending-degree order.
///
/// A vertex is dead when no color occurs exactly once in its neighborhood and
/// either its neighborhood is fully assigned or every color already occurs
/// twice there; dead vertices prune the branch. New colors are introduced in
/// increasing order only (colors are interchangeable).
struct CfSearch {
    k: usize,
    order: Vec<Vertex>,
    members: Vec<Vec<Vertex>>,
    color: Vec<u32>,
    /// `count[v * (k + 1) + c]`: occurrences of color `c` in the neighborhood of `v`.
    count: Vec<u16>,
    unassigned: Vec<u32>,
    colored_in: Vec<u32>,
    uncovered: usize,
    colored: usize,
    must_color: Vec<bool>,
    distinct: Vec<Vec<Vertex>>,
    minimize: bool,
    best: Option<(usize, Vec<u32>)>,
    cover: usize,
}

impl CfSearch {
    fn new(g: &Graph, k: u32, mode: Mode, hints: &[ForcedFact], minimize: bool) -> Self {
        let n = g.n();
        let k = k as usize;
        let members: Vec<Vec<Vertex>> = (0..n)
            .map(|v| match mode {
                Mode::Closed => g.closed_neighbors(v),
                Mode::Open => g.neighbors(v).to_vec(),
            })
            .collect();
        let mut order: Vec<Vertex> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut must_color = vec![false; n];
        let mut distinct = vec![Vec::new(); n];
        for fact in hints {
            match *fact {
                ForcedFact::MustBeColored(v) => must_color[v] = true,
                ForcedFact::DistinctIfColored(a, b) => {
                    distinct[a].push(b);
                    distinct[b].push(a);
                }
            }
        }
        let cover = g.max_degree() + usize::from(mode == Mode::Closed);
        CfSearch {
            k,
            order,
            unassigned: members.iter().map(|m| m.len() as u32).collect(),
            members,
            color: vec![UNASSIGNED; n],
            count: vec![0; n * (k + 1)],
            colored_in: vec![0; n],
            uncovered: n,
            colored: 0,
            must_color,
            distinct,
            minimize,
            best: None,
            cover: cover.max(1),
        }
    }

    fn assign(&mut self, u: Vertex, c: u32) {
        self.color[u] = c;
        let stride = self.k + 1;
        for i in 0..self.members[u].len() {
            let v = self.members[u][i];
            self.unassigned[v] -= 1;
            if c > 0 {
                self.count[v * stride + c as usize] += 1;
                if self.colored_in[v] == 0 {
                    self.uncovered -= 1;
                }
                self.colored_in[v] += 1;
            }
        }
        if c > 0 {
            self.colored += 1;
        }
    }

    fn unassign(&mut self, u: Vertex) {
        let c = self.color[u];
        let stride = self.k + 1;
        for i in 0..self.members[u].len() {
            let v = self.members[u][i];
            self.unassigned[v] += 1;
            if c > 0 {
                self.count[v * stride + c as usize] -= 1;
                self.colored_in[v] -= 1;
                if self.colored_in[v] == 0 {
                    self.uncovered += 1;
                }
            }
        }
        if c > 0 {
            self.colored -= 1;
        }
        self.color[u] = UNASSIGNED;
    }

    fn dead(&self, v: Vertex) -> bool {
        let counts = &self.count[v * (self.k + 1) + 1..(v + 1) * (self.k + 1)];
        if counts.contains(&1) {
            return false;
        }
        self.unassigned[v] == 0 || counts.iter().all(|&c| c >= 2)
    }

    fn any_dead_around(&self, u: Vertex) -> bool {
        self.members[u].iter().any(|&v| self.dead(v))
    }

    fn violates_hints(&self, u: Vertex, c: u32) -> bool {
        if c == 0 {
            return self.must_color[u];
        }
        self.distinct[u].iter().any(|&w| self.color[w] == c)
    }

    /// Returns false when the budget ran out.
    fn run(&mut self, depth: usize, max_used: u32, budget: &mut Budget) -> bool {
        if let Some((best, _)) = &self.best {
            if !self.minimize {
                return true;
            }
            let lower = self.colored + self.uncovered.div_ceil(self.cover);
            if lower >= *best {
                return true;
            }
        }
        if depth == self.order.len() {
            self.best = Some((self.colored, self.color.clone()));
            return true;
        }
        let u = self.order[depth];
        let top = (max_used + 1).min(self.k as u32);
        for c in 0..=top {
            if self.violates_hints(u, c) {
                continue;
            }
            if !budget.tick() {
                return false;
            }
            self.assign(u, c);
            if !self.any_dead_around(u) {
                let used = max_used.max(c);
                if !self.run(depth + 1, used, budget) {
                    self.unassign(u);
                    return false;
                }
            }
            self.unassign(u);
            if self.best.is_some() && !self.minimize {
                return true;
            }
        }
        true
    }

    fn solve(mut self, budget: &mut Budget) -> Outcome<(usize, PartialColoring)> {
        let completed = self.run(0, 0, budget);
        match (completed, self.best) {
            (false, _) => Outcome::BudgetExceeded(budget.usage()),
            (true, None) => Outcome::Infeasible,
            (true, Some((count, colors))) => {
                let coloring = PartialColoring::with_palette(colors, self.k as u32)
                    .expect("search only uses palette colors");
                Outcome::Found((count, coloring))
            }
        }
    }
}

/// Decides whether `g` has a conflict-free `k`-coloring in the given mode.
pub fn exists_cf_k(g: &Graph, k: u32, mode: Mode, limits: SearchLimits) -> Result<Outcome<PartialColoring>> {
    exists_cf_k_with_hints(g, k, mode, &[], limits)
}

/// As [`exists_cf_k`], with extra facts every solution is known to satisfy.
pub fn exists_cf_k_with_hints(
    g: &Graph,
    k: u32,
    mode: Mode,
    hints: &[ForcedFact],
    limits: SearchLimits,
) -> Result<Outcome<PartialColoring>> {
    check_k(k)?;
    let mut budget = Budget::new(limits);
    Ok(exists_with_budget(g, k, mode, hints, &mut budget))
}

fn exists_with_budget(
    g: &Graph,
    k: u32,
    mode: Mode,
    hints: &[ForcedFact],
    budget: &mut Budget,
) -> Outcome<PartialColoring> {
    if mode == Mode::Open && first_isolated(g).is_some() {
        return Outcome::Infeasible;
    }
    CfSearch::new(g, k, mode, hints, false)
        .solve(budget)
        .map(|(_, coloring)| coloring)
}

/// Smallest `k` with a conflict-free `k`-coloring, and a witness.
pub fn chi_cf(g: &Graph, mode: Mode, limits: SearchLimits) -> Result<Outcome<(u32, PartialColoring)>> {
    chi_cf_bounded(g, mode, u32::MAX, limits)
}

/// As [`chi_cf`], but gives up with [`Outcome::Infeasible`] once `k` exceeds
/// `max_k`.
pub fn chi_cf_bounded(
    g: &Graph,
    mode: Mode,
    max_k: u32,
    limits: SearchLimits,
) -> Result<Outcome<(u32, PartialColoring)>> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter {
            what: "vertex count",
            constraint: ">= 1",
            value: 0,
        });
    }
    if mode == Mode::Open {
        if let Some(v) = first_isolated(g) {
            return Err(Error::IsolatedVertex(v));
        }
    }
    let mut budget = Budget::new(limits);
    // Coloring every vertex with its own color always works in closed mode;
    // open mode needs at most n colors as well.
    let cap = max_k.min(g.n() as u32);
    for k in 1..=cap {
        match exists_with_budget(g, k, mode, &[], &mut budget) {
            Outcome::Found(c) => return Ok(Outcome::Found((k, c))),
            Outcome::Infeasible => continue,
            Outcome::BudgetExceeded(u) => return Ok(Outcome::BudgetExceeded(u)),
        }
    }
    Ok(Outcome::Infeasible)
}

/// Minimum number of colored vertices over conflict-free `k`-colorings.
pub fn gamma_cf_k(
    g: &Graph,
    k: u32,
    mode: Mode,
    limits: SearchLimits,
) -> Result<Outcome<(usize, PartialColoring)>> {
    check_k(k)?;
    if mode == Mode::Open && first_isolated(g).is_some() {
        return Ok(Outcome::Infeasible);
    }
    let mut budget = Budget::new(limits);
    Ok(CfSearch::new(g, k, mode, &[], true).solve(&mut budget))
}

/// A minimum dominating set, sorted.
pub fn min_dominating_set(g: &Graph, limits: SearchLimits) -> Result<Outcome<Vec<Vertex>>> {
    let n = g.n();
    let mut greedy = Vec::new();
    let mut dominated = vec![false; n];
    // Greedy upper bound: repeatedly take the vertex covering most undominated vertices.
    while dominated.iter().any(|&d| !d) {
        let best = (0..n)
            .max_by_key(|&u| {
                let gain = g.closed_neighbors(u).iter().filter(|&&w| !dominated[w]).count();
                (gain, std::cmp::Reverse(u))
            })
            .unwrap();
        greedy.push(best);
        for w in g.closed_neighbors(best) {
            dominated[w] = true;
        }
    }
    greedy.sort_unstable();

    let mut search = DomSearch {
        g,
        closed: (0..n).map(|v| g.closed_neighbors(v)).collect(),
        cover: vec![0; n],
        undominated: n,
        chosen: Vec::new(),
        best: greedy,
        cap: g.max_degree() + 1,
    };
    let mut budget = Budget::new(limits);
    if !search.run(&mut budget) {
        return Ok(Outcome::BudgetExceeded(budget.usage()));
    }
    let mut best = search.best;
    best.sort_unstable();
    Ok(Outcome::Found(best))
}

struct DomSearch<'a> {
    g: &'a Graph,
    closed: Vec<Vec<Vertex>>,
    cover: Vec<u32>,
    undominated: usize,
    chosen: Vec<Vertex>,
    best: Vec<Vertex>,
    cap: usize,
}

impl DomSearch<'_> {
    fn add(&mut self, u: Vertex) {
        self.chosen.push(u);
        for &w in &self.closed[u] {
            if self.cover[w] == 0 {
                self.undominated -= 1;
            }
            self.cover[w] += 1;
        }
    }

    fn remove(&mut self, u: Vertex) {
        self.chosen.pop();
        for &w in &self.closed[u] {
            self.cover[w] -= 1;
            if self.cover[w] == 0 {
                self.undominated += 1;
            }
        }
    }

    fn run(&mut self, budget: &mut Budget) -> bool {
        if self.undominated == 0 {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return true;
        }
        if self.chosen.len() + self.undominated.div_ceil(self.cap) >= self.best.len() {
            return true;
        }
        // Branch on the undominated vertex with the fewest ways to dominate it.
        let v = (0..self.g.n())
            .filter(|&v| self.cover[v] == 0)
            .min_by_key(|&v| (self.closed[v].len(), v))
            .unwrap();
        let mut candidates = self.closed[v].clone();
        candidates.sort_by_key(|&u| {
            let gain = self.closed[u].iter().filter(|&&w| self.cover[w] == 0).count();
            (std::cmp::Reverse(gain), u)
        });
        for u in candidates {
            if !budget.tick() {
                return false;
            }
            self.add(u);
            let ok = self.run(budget);
            self.remove(u);
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Proper coloring with colors `1..=k` by backtracking, always branching on
/// the vertex that sees the most distinct colors.
pub fn proper_coloring(g: &Graph, k: u32, limits: SearchLimits) -> Result<Outcome<PartialColoring>> {
    check_k(k)?;
    let mut search = Dsatur {
        g,
        k,
        color: vec![0; g.n()],
        seen: vec![vec![0; k as usize + 1]; g.n()],
        saturation: vec![0; g.n()],
    };
    let mut budget = Budget::new(limits);
    Ok(match search.run(0, 0, &mut budget) {
        None => Outcome::BudgetExceeded(budget.usage()),
        Some(false) => Outcome::Infeasible,
        Some(true) => Outcome::Found(
            PartialColoring::with_palette(search.color, k).expect("colors stay within 1..=k"),
        ),
    })
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: u32,
    color: Vec<u32>,
    /// `seen[v][c]`: colored neighbors of `v` with color `c`.
    seen: Vec<Vec<u32>>,
    saturation: Vec<u32>,
}

impl Dsatur<'_> {
    fn set(&mut self, v: Vertex, c: u32) {
        self.color[v] = c;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.seen[w][c as usize];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn clear(&mut self, v: Vertex) {
        let c = self.color[v];
        for &w in self.g.neighbors(v) {
            let slot = &mut self.seen[w][c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
        self.color[v] = 0;
    }

    /// `None` on budget exhaustion, otherwise whether a coloring was found.
    fn run(&mut self, done: usize, max_used: u32, budget: &mut Budget) -> Option<bool> {
        if done == self.g.n() {
            return Some(true);
        }
        let v = (0..self.g.n())
            .filter(|&v| self.color[v] == 0)
            .max_by_key(|&v| (self.saturation[v], self.g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let top = (max_used + 1).min(self.k);
        for c in 1..=top {
            if self.seen[v][c as usize] > 0 {
                continue;
            }
            if !budget.tick() {
                return None;
            }
            self.set(v, c);
            match self.run(done + 1, max_used.max(c), budget) {
                Some(true) => return Some(true),
                Some(false) => self.clear(v),
                None => {
                    self.clear(v);
                    return None;
                }
            }
        }
        Some(false)
    }
}

/// Positive 3-CNF formula over variables `0..nvars`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Formula {
    nvars: usize,
    clauses: Vec<[usize; 3]>,
}

impl Formula {
    /// Each clause must name three distinct variables below `nvars`.
    pub fn new(nvars: usize, clauses: Vec<[usize; 3]>) -> Result<Self> {
        for (j, clause) in clauses.iter().enumerate() {
            if let Some(&x) = clause.iter().find(|&&x| x >= nvars) {
                return Err(Error::MalformedFormula(format!(
                    "clause {j} names variable {x} but there are only {nvars}"
                )));
            }
            if clause[0] == clause[1] || clause[0] == clause[2] || clause[1] == clause[2] {
                return Err(Error::MalformedFormula(format!(
                    "clause {j} repeats a variable"
                )));
            }
        }
        Ok(Formula { nvars, clauses })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    /// True iff exactly one variable of every clause is true.
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|cl| cl.iter().filter(|&&x| assignment[x]).count() == 1)
    }
}

/// Largest variable count [`one_in_three_sat`] accepts.
pub const MAX_SAT_VARS: usize = 30;

/// First assignment, in increasing binary order with variable `i` as bit
/// `i`, that makes exactly one variable per clause true.
pub fn one_in_three_sat(formula: &Formula) -> Result<Option<Vec<bool>>> {
    let n = formula.nvars();
    if n > MAX_SAT_VARS {
        return Err(Error::InvalidParameter {
            what: "variable count",
            constraint: "<= 30",
            value: n as i64,
        });
    }
    let masks: Vec<u32> = formula
        .clauses()
        .iter()
        .map(|cl| cl.iter().fold(0u32, |m, &x| m | (1 << x)))
        .collect();
    for bits in 0u64..(1u64 << n) {
        let bits = bits as u32;
        if masks.iter().all(|&m| (bits & m).count_ones() == 1) {
            return Ok(Some((0..n).map(|i| bits >> i & 1 == 1).collect()));
        }
    }
    Ok(None)
}
