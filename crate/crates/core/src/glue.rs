//! Gluing nowhere-zero flows of two subgraphs over a finite field.
//!
//! If `Γ = Γ₁ ∪ Γ₂` where both sides carry nowhere-zero flows and they share
//! at most `q - 2` edges (`q = p^n`), then for a primitive element `b` some
//! exponent `j < q - 1` makes `φ₁ - bʲ·φ₂` nowhere-zero: each common edge
//! rules out at most one exponent.

use crate::algebra::Group;
use crate::error::{Error, Hypothesis, Result};
use crate::flow::{
    assert_nowhere_zero, extend_by_zero, reorient_flow, require_nowhere_zero, verify_flow, Flow,
    Orientation,
};
use crate::multigraph::{EdgeSet, MultiGraph};

/// Two subgraphs covering an ambient graph, with optional flows on each.
/// Supplied flows are indexed by the side's own edge numbering, i.e. the
/// ascending order of its edge ids (see [`MultiGraph::subgraph`]).
#[derive(Clone, Debug)]
pub struct GlueInstance {
    pub graph: MultiGraph,
    pub sides: [EdgeSet; 2],
    pub flows: [Option<Flow>; 2],
    pub group: Group,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueOutcome {
    /// Nowhere-zero on the ambient graph, canonically oriented.
    pub flow: Flow,
    /// The exponent `j` of the primitive element.
    pub exponent: u32,
}

pub(crate) fn check_cover(g: &MultiGraph, s1: &EdgeSet, s2: &EdgeSet) -> Result<EdgeSet> {
    if s1.universe() != g.edge_count() || s2.universe() != g.edge_count() {
        return Err(Error::AmbientMismatch);
    }
    let union = s1.union(s2)?;
    if let Some(edge) = (0..g.edge_count()).find(|&e| !union.contains(e)) {
        return Err(Hypothesis::NotCovering { edge }.into());
    }
    s1.intersection(s2)
}

/// A nowhere-zero flow on side `s` of `g`, extended by zero to all of `g`.
/// A supplied flow is checked; otherwise one is searched for.
pub(crate) fn side_flow(
    g: &MultiGraph,
    s: &EdgeSet,
    supplied: Option<&Flow>,
    group: &Group,
    name: &str,
) -> Result<Flow> {
    let sub = g.subgraph(s);
    let f = match supplied {
        Some(f) => {
            if f.group != *group {
                return Err(Error::DomainMismatch(format!(
                    "{name} flow is over {}, expected {group}",
                    f.group
                )));
            }
            if !verify_flow(&sub.graph, f)?.nowhere_zero {
                return Err(Error::InvalidFlow(format!(
                    "{name} flow is not nowhere-zero"
                )));
            }
            f.clone()
        }
        None => require_nowhere_zero(&sub.graph, group, name)?,
    };
    extend_by_zero(&f, &sub, g)
}

/// The core step: `f1`, `f2` are flows on `g` that are nowhere-zero on `s1`,
/// `s2` respectively and zero elsewhere. Returns `f1 - bʲ·f2` for the
/// smallest admissible `j`, canonically oriented. The result is nowhere-zero
/// on `s1 ∪ s2`.
pub(crate) fn glue_flows(
    g: &MultiGraph,
    s1: &EdgeSet,
    s2: &EdgeSet,
    f1: &Flow,
    f2: &Flow,
) -> Result<GlueOutcome> {
    let group = &f1.group;
    if !group.is_field() {
        return Err(Error::NotAField { op: "gluing" });
    }
    let common = s1.intersection(s2)?;
    let bound = group.order() as usize - 2;
    if common.len() > bound {
        return Err(Hypothesis::TooManyCommon {
            common: common.len(),
            bound,
        }
        .into());
    }
    let d = Orientation::canonical(g);
    let f1 = reorient_flow(f1, &d)?;
    let f2 = reorient_flow(f2, &d)?;
    let b = group.primitive_element()?;
    let units = group.order() - 1;
    let mut excluded = vec![false; units as usize];
    for e in common.iter() {
        let ratio = group.div(f1.values[e], f2.values[e])?;
        excluded[group.discrete_log(ratio)? as usize] = true;
    }
    let exponent = (0..units)
        .find(|&j| !excluded[j as usize])
        .expect("at most q - 2 exponents are excluded");
    let c = group.pow(b, exponent as u64)?;
    let mut values = Vec::with_capacity(g.edge_count());
    for e in 0..g.edge_count() {
        values.push(group.sub(f1.values[e], group.mul(c, f2.values[e])?));
    }
    let flow = Flow::new(group.clone(), d, values)?;
    let scope = s1.union(s2)?;
    if !verify_flow(g, &flow)?.valid || scope.iter().any(|e| flow.values[e].is_zero()) {
        return Err(Error::Internal("glued flow failed verification".into()));
    }
    Ok(GlueOutcome { flow, exponent })
}

/// Glue nowhere-zero flows of two sides sharing at most `p^n - 2` edges.
pub fn glue_common(inst: &GlueInstance) -> Result<GlueOutcome> {
    let g = &inst.graph;
    let [s1, s2] = &inst.sides;
    if !inst.group.is_field() {
        return Err(Error::NotAField { op: "gluing" });
    }
    let common = check_cover(g, s1, s2)?;
    let bound = inst.group.order() as usize - 2;
    if common.len() > bound {
        return Err(Hypothesis::TooManyCommon {
            common: common.len(),
            bound,
        }
        .into());
    }
    let f1 = side_flow(g, s1, inst.flows[0].as_ref(), &inst.group, "first subgraph")?;
    let f2 = side_flow(
        g,
        s2,
        inst.flows[1].as_ref(),
        &inst.group,
        "second subgraph",
    )?;
    let out = glue_flows(g, s1, s2, &f1, &f2)?;
    assert_nowhere_zero(g, &out.flow, "glue")?;
    Ok(out)
}

/// Glue parts one at a time: part `ℓ` may share at most `p^n - 2` edges with
/// the union of the earlier parts. The parts must cover the graph.
pub fn glue_many(g: &MultiGraph, parts: &[EdgeSet], group: &Group) -> Result<Flow> {
    if !group.is_field() {
        return Err(Error::NotAField { op: "gluing" });
    }
    let Some(first) = parts.first() else {
        return Err(Error::InvalidArgument("no parts to glue".into()));
    };
    let bound = group.order() as usize - 2;
    let mut union = first.clone();
    for (part, s) in parts.iter().enumerate().skip(1) {
        let common = union.intersection(s)?.len();
        if common > bound {
            return Err(Hypothesis::PrefixTooManyCommon {
                part,
                common,
                bound,
            }
            .into());
        }
        union = union.union(s)?;
    }
    if let Some(edge) = (0..g.edge_count()).find(|&e| !union.contains(e)) {
        return Err(Hypothesis::NotCovering { edge }.into());
    }

    let mut union = first.clone();
    let mut flow = side_flow(g, first, None, group, "part 0")?;
    for (i, s) in parts.iter().enumerate().skip(1) {
        let f = side_flow(g, s, None, group, &format!("part {i}"))?;
        flow = glue_flows(g, &union, s, &flow, &f)?.flow;
        union = union.union(s)?;
    }
    let flow = reorient_flow(&flow, &Orientation::canonical(g))?;
    assert_nowhere_zero(g, &flow, "glue_many")?;
    Ok(flow)
}

/// The field group of order `k ∈ {3, 4, 5}`.
pub fn order_k_group(k: u32) -> Result<Group> {
    match k {
        3 => Group::field(3, 1, None),
        4 => Group::field(2, 2, None),
        5 => Group::field(5, 1, None),
        _ => Err(Hypothesis::UnsupportedOrder { k }.into()),
    }
}

/// Glue two sides sharing at most `k - 2` edges into a nowhere-zero flow
/// over the field of order `k`.
pub fn glue_k(g: &MultiGraph, s1: &EdgeSet, s2: &EdgeSet, k: u32) -> Result<GlueOutcome> {
    let group = order_k_group(k)?;
    glue_common(&GlueInstance {
        graph: g.clone(),
        sides: [s1.clone(), s2.clone()],
        flows: [None, None],
        group,
    })
}
