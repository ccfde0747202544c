//! Text formats for graphs, edge subsets, flows, integer flows, parity
//! decompositions and bundle voltages, plus DOT output.
//!
//! Every format ignores blank lines and lines starting with `#`.

use std::fmt::Write as _;

use crate::algebra::{make_group, Group};
use crate::error::{Error, Result};
use crate::flow::{Flow, IntegerFlow, Orientation};
use crate::fourflow::ParityDecomposition;
use crate::multigraph::{EdgeSet, MultiGraph, Subgraph};

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn num<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, got `{tok}`")))
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
) -> Result<(usize, &'a str)> {
    let (line, text) = lines
        .next()
        .ok_or_else(|| Error::parse(0, format!("missing `{keyword}` header")))?;
    match text.split_once(char::is_whitespace) {
        Some((k, rest)) if k == keyword => Ok((line, rest.trim())),
        _ => Err(Error::parse(
            line,
            format!("expected `{keyword} ...`, got `{text}`"),
        )),
    }
}

/// `graph <n>` followed by one `u v` line per edge; edge ids follow line
/// order.
pub fn parse_graph(text: &str) -> Result<MultiGraph> {
    let mut lines = content_lines(text);
    let (line, rest) = header(&mut lines, "graph")?;
    let n: usize = num(line, rest, "a vertex count")?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::parse(line, format!("expected `u v`, got `{l}`")));
        }
        let u = num(line, toks[0], "a vertex")?;
        let v = num(line, toks[1], "a vertex")?;
        edges.push((u, v));
        MultiGraph::new(n, &edges).map_err(|e| Error::parse(line, e.to_string()))?;
    }
    MultiGraph::new(n, &edges)
}

pub fn format_graph(g: &MultiGraph) -> String {
    g.to_text()
}

/// Whitespace-separated edge ids.
pub fn parse_edge_set(text: &str, g: &MultiGraph) -> Result<EdgeSet> {
    let mut ids = Vec::new();
    for (line, l) in content_lines(text) {
        for tok in l.split_whitespace() {
            ids.push(num::<usize>(line, tok, "an edge id")?);
        }
    }
    g.subset(ids)
}

pub fn format_edge_set(s: &EdgeSet) -> String {
    format!("{s}\n")
}

/// `(line, edge, tail, value)` of one flow file entry.
type FlowEntry = (usize, usize, usize, String);

fn parse_flow_entries(text: &str) -> Result<(Group, Vec<FlowEntry>)> {
    let mut lines = content_lines(text);
    let (line, desc) = header(&mut lines, "flow")?;
    let group = make_group(desc).map_err(|e| Error::parse(line, e.to_string()))?;
    let mut entries = Vec::new();
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(Error::parse(
                line,
                format!("expected `edge tail value`, got `{l}`"),
            ));
        }
        let e = num(line, toks[0], "an edge id")?;
        let t = num(line, toks[1], "a tail vertex")?;
        entries.push((line, e, t, toks[2].to_string()));
    }
    Ok((group, entries))
}

/// `flow <group>` followed by one `edge tail value` line per edge of `g`.
pub fn parse_flow(text: &str, g: &MultiGraph) -> Result<Flow> {
    parse_partial_flow(text, g, &g.full_set())
}

/// A flow file listing exactly the edges of `s` by their ids in `g`,
/// returned as a flow on the subgraph spanned by `s`.
pub fn parse_side_flow(text: &str, g: &MultiGraph, s: &EdgeSet) -> Result<Flow> {
    let sub = g.subgraph(s);
    let f = parse_partial_flow(text, g, s)?;
    let arcs = sub.edge_map.iter().map(|&e| f.orientation.arc(e)).collect();
    let values = sub.edge_map.iter().map(|&e| f.values[e]).collect();
    Flow::new(f.group.clone(), Orientation::new(&sub.graph, arcs)?, values)
}

fn parse_partial_flow(text: &str, g: &MultiGraph, s: &EdgeSet) -> Result<Flow> {
    let (group, entries) = parse_flow_entries(text)?;
    let mut arcs = g.edges().to_vec();
    let mut values = vec![group.zero(); g.edge_count()];
    let mut seen = vec![false; g.edge_count()];
    for (line, e, t, v) in entries {
        if !s.contains(e) || e >= g.edge_count() {
            return Err(Error::parse(line, format!("edge {e} is not expected here")));
        }
        if std::mem::replace(&mut seen[e], true) {
            return Err(Error::parse(line, format!("edge {e} listed twice")));
        }
        let (u, w) = g.endpoints(e);
        arcs[e] = if t == u {
            (u, w)
        } else if t == w {
            (w, u)
        } else {
            return Err(Error::parse(
                line,
                format!("vertex {t} is not an end of edge {e}"),
            ));
        };
        values[e] = group
            .parse_element(&v)
            .map_err(|err| Error::parse(line, err.to_string()))?;
    }
    if let Some(e) = s.iter().find(|&e| !seen[e]) {
        return Err(Error::parse(0, format!("edge {e} has no value")));
    }
    Flow::new(group, Orientation::new(g, arcs)?, values)
}

pub fn format_flow(f: &Flow) -> String {
    let mut s = format!("flow {}\n", f.group.descriptor());
    for (e, &v) in f.values.iter().enumerate() {
        let _ = writeln!(
            s,
            "{e} {} {}",
            f.orientation.tail(e),
            f.group.format_element(v)
        );
    }
    s
}

/// `intflow` followed by one `edge tail value` line per edge.
pub fn parse_integer_flow(text: &str, g: &MultiGraph) -> Result<IntegerFlow> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "intflow")) => {}
        Some((line, l)) => {
            return Err(Error::parse(line, format!("expected `intflow`, got `{l}`")))
        }
        None => return Err(Error::parse(0, "missing `intflow` header")),
    }
    let mut tails = vec![None; g.edge_count()];
    let mut values = vec![0i64; g.edge_count()];
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(Error::parse(
                line,
                format!("expected `edge tail value`, got `{l}`"),
            ));
        }
        let e: usize = num(line, toks[0], "an edge id")?;
        if e >= g.edge_count() || tails[e].is_some() {
            return Err(Error::parse(line, format!("unexpected edge {e}")));
        }
        tails[e] = Some(num(line, toks[1], "a tail vertex")?);
        values[e] = num(line, toks[2], "an integer")?;
    }
    let tails = tails
        .into_iter()
        .enumerate()
        .map(|(e, t)| t.ok_or_else(|| Error::parse(0, format!("edge {e} has no value"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntegerFlow {
        orientation: Orientation::from_tails(g, &tails)?,
        values,
    })
}

pub fn format_integer_flow(f: &IntegerFlow) -> String {
    let mut s = String::from("intflow\n");
    for (e, v) in f.values.iter().enumerate() {
        let _ = writeln!(s, "{e} {} {v}", f.orientation.tail(e));
    }
    s
}

/// Lines `P1: ids`, `P2: ids`, `P3: ids`.
pub fn format_parity(d: &ParityDecomposition) -> String {
    let mut s = String::new();
    for (i, p) in d.parts.iter().enumerate() {
        let _ = writeln!(s, "P{}: {p}", i + 1);
    }
    s
}

pub fn parse_parity(text: &str, g: &MultiGraph) -> Result<ParityDecomposition> {
    let mut parts: [Option<EdgeSet>; 3] = [None, None, None];
    for (line, l) in content_lines(text) {
        let (label, ids) = l
            .split_once(':')
            .ok_or_else(|| Error::parse(line, format!("expected `P<i>: ids`, got `{l}`")))?;
        let i = match label.trim() {
            "P1" => 0,
            "P2" => 1,
            "P3" => 2,
            other => return Err(Error::parse(line, format!("unknown member `{other}`"))),
        };
        let ids = ids
            .split_whitespace()
            .map(|t| num::<usize>(line, t, "an edge id"))
            .collect::<Result<Vec<_>>>()?;
        parts[i] = Some(
            g.subset(ids)
                .map_err(|e| Error::parse(line, e.to_string()))?,
        );
    }
    Ok(ParityDecomposition {
        parts: parts.map(|p| p.unwrap_or_else(|| g.empty_set())),
    })
}

/// Lines `edge_id: x0 x1 ...` giving each base edge's fiber permutation in
/// one-line notation. Unlisted edges carry the identity.
pub fn parse_voltages(
    text: &str,
    base_edges: usize,
    fiber_order: usize,
) -> Result<Vec<Vec<usize>>> {
    let mut volts: Vec<Vec<usize>> = vec![(0..fiber_order).collect(); base_edges];
    for (line, l) in content_lines(text) {
        let (e, perm) = l.split_once(':').ok_or_else(|| {
            Error::parse(line, format!("expected `edge: permutation`, got `{l}`"))
        })?;
        let e: usize = num(line, e.trim(), "an edge id")?;
        if e >= base_edges {
            return Err(Error::parse(line, format!("base edge {e} out of range")));
        }
        volts[e] = perm
            .split_whitespace()
            .map(|t| num(line, t, "a fiber vertex"))
            .collect::<Result<_>>()?;
    }
    Ok(volts)
}

/// An undirected DOT description, or a directed one labeled by flow values.
pub fn to_dot(g: &MultiGraph, flow: Option<&Flow>) -> String {
    let mut s = String::new();
    match flow {
        None => {
            s.push_str("graph G {\n");
            for v in 0..g.vertex_count() {
                let _ = writeln!(s, "  {v};");
            }
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                let _ = writeln!(s, "  {u} -- {v} [label=\"e{e}\"];");
            }
        }
        Some(f) => {
            s.push_str("digraph G {\n");
            for v in 0..g.vertex_count() {
                let _ = writeln!(s, "  {v};");
            }
            for e in 0..g.edge_count() {
                let (u, v) = f.orientation.arc(e);
                let _ = writeln!(
                    s,
                    "  {u} -> {v} [label=\"e{e}: {}\"];",
                    f.group.format_element(f.values[e])
                );
            }
        }
    }
    s.push_str("}\n");
    s
}

/// A flow on a side subgraph, re-expressed with ambient edge ids (only the
/// side's edges are listed).
pub fn format_side_flow(f: &Flow, sub: &Subgraph) -> String {
    let mut s = format!("flow {}\n", f.group.descriptor());
    for (i, &e) in sub.edge_map.iter().enumerate() {
        let _ = writeln!(
            s,
            "{e} {} {}",
            f.orientation.tail(i),
            f.group.format_element(f.values[i])
        );
    }
    s
}
