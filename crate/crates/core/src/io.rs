//! Plain-text formats for graphs, colorings, formulas and reduction roles.
//!
//! All formats are whitespace separated; lines starting with `#` and blank
//! lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exact::Formula;
use crate::generators::Role;
use crate::graph::Graph;
use crate::verify::PartialColoring;

/// Non-comment lines with their 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers<const N: usize>(line: usize, text: &str) -> Result<[usize; N]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != N {
        return Err(parse_error(line, format!("expected {N} integers, found {}", fields.len())));
    }
    let mut out = [0; N];
    for (slot, field) in out.iter_mut().zip(&fields) {
        *slot = field
            .parse()
            .map_err(|_| parse_error(line, format!("`{field}` is not a nonnegative integer")))?;
    }
    Ok(out)
}

/// Parses `n m` followed by `m` edge lines `u v`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let (header_line, header) = lines.next().ok_or_else(|| parse_error(1, "missing `n m` header"))?;
    let [n, m] = numbers::<2>(header_line, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, body) in lines {
        if edges.len() == m {
            return Err(parse_error(line, format!("more than the declared {m} edges")));
        }
        let [u, v] = numbers::<2>(line, body)?;
        if u >= n || v >= n {
            return Err(parse_error(line, format!("vertex out of range for n = {n}")));
        }
        if u == v {
            return Err(parse_error(line, format!("self-loop at {u}")));
        }
        edges.push((u, v));
        last_line = line;
    }
    if edges.len() != m {
        return Err(parse_error(last_line, format!("declared {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges).map_err(|e| parse_error(last_line, e.to_string()))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses `v c` lines for a graph on `n` vertices; unlisted vertices stay
/// uncolored. The palette is the largest color listed.
pub fn parse_coloring(text: &str, n: usize) -> Result<PartialColoring> {
    let mut colors = vec![0u32; n];
    for (line, body) in data_lines(text) {
        let [v, c] = numbers::<2>(line, body)?;
        if v >= n {
            return Err(parse_error(line, format!("vertex {v} out of range for n = {n}")));
        }
        if c == 0 {
            return Err(parse_error(line, "colors must be at least 1"));
        }
        if colors[v] != 0 {
            return Err(parse_error(line, format!("vertex {v} colored twice")));
        }
        colors[v] = u32::try_from(c).map_err(|_| parse_error(line, "color too large"))?;
    }
    Ok(PartialColoring::from_colors(colors))
}

/// Colored vertices in increasing id order.
pub fn write_coloring(coloring: &PartialColoring) -> String {
    let mut out = String::new();
    for v in coloring.colored_vertices() {
        let _ = writeln!(out, "{v} {}", coloring.get(v));
    }
    out
}

/// Parses `nvars nclauses` and one line of three 1-based variables per clause.
pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut lines = data_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing `nvars nclauses` header"))?;
    let [nvars, nclauses] = numbers::<2>(header_line, header)?;
    let mut clauses = Vec::with_capacity(nclauses);
    for (line, body) in lines {
        let vars = numbers::<3>(line, body)?;
        if vars.iter().any(|&x| x == 0 || x > nvars) {
            return Err(parse_error(line, format!("variables must lie in 1..={nvars}")));
        }
        clauses.push([vars[0] - 1, vars[1] - 1, vars[2] - 1]);
    }
    if clauses.len() != nclauses {
        return Err(parse_error(
            header_line,
            format!("declared {nclauses} clauses, found {}", clauses.len()),
        ));
    }
    Formula::new(nvars, clauses)
}

pub fn write_formula(formula: &Formula) -> String {
    let mut out = format!("{} {}\n", formula.nvars(), formula.clauses().len());
    for cl in formula.clauses() {
        let _ = writeln!(out, "{} {} {}", cl[0] + 1, cl[1] + 1, cl[2] + 1);
    }
    out
}

/// `v role` lines, e.g. `0 z:1:1:true` or `36 c:1:1`.
pub fn write_roles(roles: &[Role]) -> String {
    let mut out = String::new();
    for (v, role) in roles.iter().enumerate() {
        let _ = writeln!(out, "{v} {role}");
    }
    out
}

/// Graphviz rendering; colored vertices carry their color as a label.
pub fn to_dot(g: &Graph, coloring: Option<&PartialColoring>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match coloring.map(|c| c.get(v)).filter(|&c| c > 0) {
            Some(c) => {
                let _ = writeln!(out, "  {v} [label=\"{v}:{c}\", color={c}];");
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
