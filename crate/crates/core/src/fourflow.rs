//! Nowhere-zero 4-flows: parity subgraph decompositions, even covers,
//! evenly certificates, the union construction for two subgraphs sharing
//! three connected edges, and the short-cycle cover construction.
//!
//! 4-flows are valued in the additive group of `GF(4)`, i.e. `Z₂ × Z₂`. The
//! three nonzero values `(1,0)`, `(0,1)`, `(1,1)` correspond to the three
//! members of a parity decomposition.

use std::collections::VecDeque;

use crate::algebra::Group;
use crate::error::{Error, Hypothesis, Result};
use crate::flow::{
    assert_nowhere_zero, extend_by_zero, reorient_flow, restrict, search_nowhere_zero,
    transfer_suppressed_flow, verify_flow, Flow, IntegerFlow, Orientation, SearchOutcome,
};
use crate::glue::{check_cover, glue_flows, side_flow};
use crate::multigraph::{classify_sigma, EdgeSet, MultiGraph, Side, SigmaTag, TripleKind};

/// `GF(4)` with its canonical modulus.
pub fn gf4() -> Group {
    Group::field(2, 2, None).expect("GF(4) is valid")
}

fn require_klein(group: &Group) -> Result<()> {
    if group.order() == 4 && group.has_exponent_two() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "expected the order-4 elementary abelian group, got {group}"
        )))
    }
}

const CLASS_DIGITS: [[u32; 2]; 3] = [[1, 0], [0, 1], [1, 1]];

fn class_of(group: &Group, v: crate::algebra::Element) -> Option<usize> {
    let d = group.digits(v);
    CLASS_DIGITS.iter().position(|c| c[..] == d[..])
}

/// Three pairwise disjoint parity subgraphs whose union is the target edge
/// set. Members may be empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityDecomposition {
    pub parts: [EdgeSet; 3],
}

impl ParityDecomposition {
    pub fn support(&self) -> EdgeSet {
        &(&self.parts[0] | &self.parts[1]) | &self.parts[2]
    }

    /// Check disjointness and that each member is a parity subgraph of the
    /// support.
    pub fn check(&self, g: &MultiGraph) -> Result<()> {
        for p in &self.parts {
            if p.universe() != g.edge_count() {
                return Err(Error::AmbientMismatch);
            }
        }
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            if let Some(e) = (&self.parts[i] & &self.parts[j]).iter().next() {
                return Err(Error::InvalidDecomposition(format!(
                    "edge {e} lies in members {} and {}",
                    i + 1,
                    j + 1
                )));
            }
        }
        let target = g.degrees_in(&self.support());
        for (i, p) in self.parts.iter().enumerate() {
            let d = g.degrees_in(p);
            if let Some(v) = (0..g.vertex_count()).find(|&v| d[v] % 2 != target[v] % 2) {
                return Err(Error::InvalidDecomposition(format!(
                    "member {} is not a parity subgraph at vertex {v}",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    fn remap(&self, map: &[Option<usize>], universe: usize) -> Self {
        ParityDecomposition {
            parts: self.parts.clone().map(|p| p.remap(map, universe)),
        }
    }
}

/// Value classes of the edges of `s` under `f`.
fn classes_on(f: &Flow, s: &EdgeSet) -> Result<ParityDecomposition> {
    let m = f.values.len();
    let mut parts = [EdgeSet::new(m), EdgeSet::new(m), EdgeSet::new(m)];
    for e in s.iter() {
        let c = class_of(&f.group, f.values[e])
            .ok_or_else(|| Error::InvalidFlow(format!("edge {e} carries zero")))?;
        parts[c].insert(e);
    }
    Ok(ParityDecomposition { parts })
}

/// Edges valued `(1,0)`, `(0,1)`, `(1,1)` under a nowhere-zero 4-flow.
pub fn parity_from_flow(g: &MultiGraph, f: &Flow) -> Result<ParityDecomposition> {
    require_klein(&f.group)?;
    if !verify_flow(g, f)?.nowhere_zero {
        return Err(Error::InvalidFlow("not a nowhere-zero flow".into()));
    }
    let d = classes_on(f, &g.full_set())?;
    d.check(g)?;
    Ok(d)
}

/// The 4-flow assigning `(1,0)`, `(0,1)`, `(1,1)` by membership.
pub fn flow_from_parity(g: &MultiGraph, d: &ParityDecomposition) -> Result<Flow> {
    d.check(g)?;
    if let Some(e) = (0..g.edge_count()).find(|&e| !d.support().contains(e)) {
        return Err(Error::InvalidDecomposition(format!(
            "edge {e} is in no member"
        )));
    }
    let group = gf4();
    let mut values = vec![group.zero(); g.edge_count()];
    for (i, p) in d.parts.iter().enumerate() {
        let v = group.from_digits(&CLASS_DIGITS[i])?;
        for e in p.iter() {
            values[e] = v;
        }
    }
    let f = Flow::new(group, Orientation::canonical(g), values)?;
    assert_nowhere_zero(g, &f, "parity decomposition")?;
    Ok(f)
}

/// A flow on the support of `d`, extended by zero to `g`.
fn flow_on_support(g: &MultiGraph, d: &ParityDecomposition) -> Result<Flow> {
    let support = d.support();
    let sub = g.subgraph(&support);
    let mut local = vec![None; g.edge_count()];
    for (i, &e) in sub.edge_map.iter().enumerate() {
        local[e] = Some(i);
    }
    let f = flow_from_parity(&sub.graph, &d.remap(&local, sub.graph.edge_count()))?;
    extend_by_zero(&f, &sub, g)
}

/// Two even edge sets covering every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenCover {
    pub c1: EdgeSet,
    pub c2: EdgeSet,
}

impl EvenCover {
    pub fn check(&self, g: &MultiGraph) -> Result<()> {
        for (name, c) in [("first", &self.c1), ("second", &self.c2)] {
            let p = g.parity_profile(c)?;
            if let Some(&v) = p.odd_in_subset.first() {
                return Err(Error::InvalidCover(format!(
                    "{name} member has odd degree at vertex {v}"
                )));
            }
        }
        if let Some(e) = (0..g.edge_count()).find(|&e| !self.c1.contains(e) && !self.c2.contains(e))
        {
            return Err(Error::InvalidCover(format!("edge {e} is uncovered")));
        }
        Ok(())
    }
}

/// `φ(e) = ([e ∈ C₁], [e ∈ C₂])`.
pub fn flow_from_even_cover(g: &MultiGraph, c: &EvenCover) -> Result<Flow> {
    c.check(g)?;
    let group = gf4();
    let values = (0..g.edge_count())
        .map(|e| group.from_digits(&[u32::from(c.c1.contains(e)), u32::from(c.c2.contains(e))]))
        .collect::<Result<Vec<_>>>()?;
    let f = Flow::new(group, Orientation::canonical(g), values)?;
    assert_nowhere_zero(g, &f, "even cover")?;
    Ok(f)
}

/// `±1` on each edge of `s`, circulating around the cycles of a cycle
/// decomposition, relative to the canonical orientation.
fn unit_circulation(g: &MultiGraph, s: &EdgeSet) -> Result<Vec<i64>> {
    let mut f = vec![0i64; g.edge_count()];
    for cycle in g.cycle_decomposition(s)? {
        for (e, tail) in cycle {
            f[e] = if g.endpoints(e).0 == tail { 1 } else { -1 };
        }
    }
    Ok(f)
}

/// The integer 4-flow `2f₁ + f₂`, where `fᵢ` circulates `±1` around the
/// cycles of `Cᵢ`.
pub fn integer4_from_even_cover(g: &MultiGraph, c: &EvenCover) -> Result<IntegerFlow> {
    c.check(g)?;
    let f1 = unit_circulation(g, &c.c1)?;
    let f2 = unit_circulation(g, &c.c2)?;
    let h = IntegerFlow {
        orientation: Orientation::canonical(g),
        values: f1.iter().zip(&f2).map(|(a, b)| 2 * a + b).collect(),
    };
    if !h.is_nowhere_zero_k_flow(g, 4) {
        return Err(Error::Internal(
            "even cover produced an invalid 4-flow".into(),
        ));
    }
    Ok(h)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentRecord {
    pub vertices: Vec<usize>,
    /// Number of vertices of the component with odd degree in the graph.
    pub odd_count: usize,
}

/// An even spanning subgraph each of whose components contains an even
/// number of odd-degree vertices of the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenlyCertificate {
    pub sigma: EdgeSet,
    pub components: Vec<ComponentRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvenlyViolation {
    NotEven { vertex: usize },
    OddComponent(ComponentRecord),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvenlyVerdict {
    Certificate(EvenlyCertificate),
    Violation(EvenlyViolation),
}

pub fn evenly_certificate(g: &MultiGraph, sigma: &EdgeSet) -> Result<EvenlyVerdict> {
    let profile = g.parity_profile(sigma)?;
    if let Some(&vertex) = profile.odd_in_subset.first() {
        return Ok(EvenlyVerdict::Violation(EvenlyViolation::NotEven {
            vertex,
        }));
    }
    let deg = g.degrees();
    let comps = g.components(Some(sigma));
    let mut components = Vec::with_capacity(comps.count());
    for vertices in comps.vertices {
        let odd_count = vertices.iter().filter(|&&v| deg[v] % 2 == 1).count();
        let rec = ComponentRecord {
            vertices,
            odd_count,
        };
        if odd_count % 2 == 1 {
            return Ok(EvenlyVerdict::Violation(EvenlyViolation::OddComponent(rec)));
        }
        components.push(rec);
    }
    Ok(EvenlyVerdict::Certificate(EvenlyCertificate {
        sigma: sigma.clone(),
        components,
    }))
}

/// `C₁ = Σ` and `C₂ = (E − Σ) △ J`, where `J ⊆ Σ` joins the odd-degree
/// vertices of the graph in pairs inside each component of `Σ`. When `C₂`
/// comes out empty (the graph is even and `Σ = E`) it is replaced by `Σ`.
pub fn even_cover_from_certificate(g: &MultiGraph, cert: &EvenlyCertificate) -> Result<EvenCover> {
    match evenly_certificate(g, &cert.sigma)? {
        EvenlyVerdict::Certificate(c) if c == *cert => {}
        _ => {
            return Err(Error::InvalidCertificate(
                "certificate does not verify".into(),
            ))
        }
    }
    let sigma = &cert.sigma;
    let n = g.vertex_count();
    let deg = g.degrees();
    let inc = g.incidence();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    let mut join = g.empty_set();
    for rec in &cert.components {
        let root = rec.vertices[0];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &e in &inc[x] {
                let y = g.other_end(e, x);
                if sigma.contains(e) && !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, e));
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        let odd: Vec<usize> = rec
            .vertices
            .iter()
            .copied()
            .filter(|&v| deg[v] % 2 == 1)
            .collect();
        for pair in odd.chunks(2) {
            let (mut a, mut b) = (pair[0], pair[1]);
            while a != b {
                let x = if depth[a] >= depth[b] { &mut a } else { &mut b };
                let (p, e) = parent[*x].expect("vertices share a component");
                if join.contains(e) {
                    join.remove(e);
                } else {
                    join.insert(e);
                }
                *x = p;
            }
        }
    }
    let rest = &g.full_set() - sigma;
    let mut c2 = &rest ^ &join;
    if c2.is_empty() {
        c2 = sigma.clone();
    }
    let cover = EvenCover {
        c1: sigma.clone(),
        c2,
    };
    cover.check(g)?;
    Ok(cover)
}

/// One step of the union construction, for audit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnionStep {
    /// At most two common edges: glued directly over `GF(4)`.
    FewCommon { common: usize },
    /// Three common edges not meeting one member in a star: two
    /// symmetric differences form an even cover.
    NonStar { tag: SigmaTag },
    /// A 2-path of one member avoiding the common edges was suppressed.
    SuppressTwoPath,
    /// A parallel pair of one member avoiding the common edges was removed.
    RemoveParallelPair,
    /// Two of the common edges are parallel; one is dropped from a side.
    ParallelCommon,
    /// The common edges form a star; a cycle through its center was
    /// exchanged between two members.
    StarCycleSwap,
    /// A component of two members was exchanged between them.
    ComponentSwap,
    /// An evenly certificate produced the even cover.
    Evenly { pair: (usize, usize) },
    /// A proof step failed at runtime; exhaustive search was used.
    Fallback { reason: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnionReport {
    pub steps: Vec<UnionStep>,
    pub fallback_searches: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueFourOutcome {
    pub flow: Flow,
    pub report: UnionReport,
}

/// A nowhere-zero 4-flow on `g = s1 ∪ s2` when the sides share at most
/// three edges, three of them inducing a connected subgraph, and both carry
/// nowhere-zero 4-flows. Supplied flows are indexed by each side's own edge
/// numbering; missing ones are searched for.
pub fn glue_four(
    g: &MultiGraph,
    s1: &EdgeSet,
    s2: &EdgeSet,
    flows: [Option<&Flow>; 2],
) -> Result<GlueFourOutcome> {
    let common = check_cover(g, s1, s2)?;
    if common.len() > 3 {
        return Err(Hypothesis::UnionTooManyCommon {
            common: common.len(),
        }
        .into());
    }
    if common.len() == 3 {
        let comps = g.components(Some(&common));
        if comps.edges.iter().filter(|es| !es.is_empty()).count() > 1 {
            return Err(Hypothesis::CommonDisconnected {
                common: common.iter().collect(),
            }
            .into());
        }
    }
    let group = match flows.iter().flatten().next() {
        Some(f) => {
            require_klein(&f.group)?;
            f.group.clone()
        }
        None => gf4(),
    };
    let f1 = side_flow(g, s1, flows[0], &group, "first subgraph")?;
    let f2 = side_flow(g, s2, flows[1], &group, "second subgraph")?;
    let mut report = UnionReport::default();
    let flow = glue_four_flows(g, s1, s2, &f1, &f2, &mut report)?;
    Ok(GlueFourOutcome { flow, report })
}

/// The union construction on ambient flows (zero outside their sides).
fn glue_four_flows(
    g: &MultiGraph,
    s1: &EdgeSet,
    s2: &EdgeSet,
    f1: &Flow,
    f2: &Flow,
    report: &mut UnionReport,
) -> Result<Flow> {
    let common = s1 & s2;
    let flow = if common.len() <= 2 {
        report.steps.push(UnionStep::FewCommon {
            common: common.len(),
        });
        glue_flows(g, s1, s2, f1, f2)?.flow
    } else {
        let d = [classes_on(f1, s1)?, classes_on(f2, s2)?];
        union_core(g, d, report)?
    };
    let flow = reorient_flow(&flow, &Orientation::canonical(g))?;
    assert_nowhere_zero(g, &flow, "glue_four")?;
    Ok(flow)
}

/// Three common edges. Runs the case analysis and falls back to exhaustive
/// search if any step fails its runtime check.
fn union_core(
    g: &MultiGraph,
    d: [ParityDecomposition; 2],
    report: &mut UnionReport,
) -> Result<Flow> {
    let reason = match attempt(g, &d, report) {
        Ok(Some(f)) => {
            let f = reorient_flow(&f, &Orientation::canonical(g))?;
            if verify_flow(g, &f)?.nowhere_zero {
                return Ok(f);
            }
            "constructed flow failed verification".to_string()
        }
        Ok(None) => "no case applied".to_string(),
        Err(e) => e.to_string(),
    };
    log::warn!("union construction fell back to search: {reason}");
    report.fallback_searches += 1;
    report.steps.push(UnionStep::Fallback { reason });
    match search_nowhere_zero(g, &gf4())? {
        SearchOutcome::Found { flow, .. } => Ok(flow),
        SearchOutcome::NoneExists { .. } => Err(Error::Internal(
            "union of two 4-flow graphs has no nowhere-zero 4-flow".into(),
        )),
    }
}

fn sigma_matrix(a: &ParityDecomposition, b: &ParityDecomposition) -> [[u32; 3]; 3] {
    let mut m = [[0u32; 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (&a.parts[i] & &b.parts[j]).len() as u32;
        }
    }
    m
}

fn attempt(
    g: &MultiGraph,
    d: &[ParityDecomposition; 2],
    report: &mut UnionReport,
) -> Result<Option<Flow>> {
    let pattern = classify_sigma(sigma_matrix(&d[0], &d[1]))?;
    if pattern.tag != SigmaTag::P7 {
        report.steps.push(UnionStep::NonStar { tag: pattern.tag });
        return non_star(g, d);
    }
    // Normalize: the star's center is member 1 of side `a`.
    let (mut a, b) = match pattern.center {
        Some(Side::Second) => (d[1].clone(), d[0].clone()),
        _ => (d[0].clone(), d[1].clone()),
    };
    let m = sigma_matrix(&a, &b);
    let row = (0..3)
        .find(|&i| m[i].iter().sum::<u32>() == 3)
        .ok_or_else(|| Error::Internal("star without a center row".into()))?;
    a.parts.swap(0, row);
    let mut e = [0usize; 3];
    for (j, ej) in e.iter_mut().enumerate() {
        *ej = (&a.parts[0] & &b.parts[j])
            .iter()
            .next()
            .ok_or_else(|| Error::Internal("star column without an edge".into()))?;
    }
    let common = g.subset(e)?;

    if let Some(found) = find_two_path(g, [&a, &b], &common) {
        return reduce_two_path(g, [a, b], found, report).map(Some);
    }

    let shape = g.classify_triple(&common)?;
    match shape.kind {
        TripleKind::ThreeParallel | TripleKind::EdgePlusDigon => {
            report.steps.push(UnionStep::ParallelCommon);
            parallel_common(g, &a, &b, e).map(Some)
        }
        TripleKind::Star => {
            report.steps.push(UnionStep::StarCycleSwap);
            let union = &a.parts[0] | &a.parts[1];
            for cycle in g.cycle_decomposition(&union)? {
                let lambda = g.subset(cycle.iter().map(|&(x, _)| x))?;
                let hits = e.iter().filter(|&&x| lambda.contains(x)).count();
                if hits == 1 || hits == 2 {
                    let mut a2 = a.clone();
                    a2.parts[0] = &a2.parts[0] ^ &lambda;
                    a2.parts[1] = &a2.parts[1] ^ &lambda;
                    if let Some(f) = non_star(g, &[a2, b.clone()])? {
                        return Ok(Some(f));
                    }
                }
            }
            Ok(None)
        }
        TripleKind::Triangle | TripleKind::Path => {
            for i in 0..3 {
                for j in (0..3).filter(|&j| j != i) {
                    let union = &b.parts[i] | &b.parts[j];
                    let comps = g.components(Some(&union));
                    let label = comps.label[g.endpoints(e[i]).0];
                    let theta = g.subset(comps.edges[label].iter().copied())?;
                    if theta.contains(e[j]) {
                        continue;
                    }
                    report.steps.push(UnionStep::ComponentSwap);
                    let mut b2 = b.clone();
                    b2.parts[i] = &b2.parts[i] ^ &theta;
                    b2.parts[j] = &b2.parts[j] ^ &theta;
                    return non_star(g, &[a, b2]);
                }
            }
            let base = &a.parts[1] | &a.parts[2];
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                let sigma = &(&base | &b.parts[i]) | &b.parts[j];
                if let EvenlyVerdict::Certificate(cert) = evenly_certificate(g, &sigma)? {
                    report.steps.push(UnionStep::Evenly {
                        pair: (i + 1, j + 1),
                    });
                    let cover = even_cover_from_certificate(g, &cert)?;
                    return flow_from_even_cover(g, &cover).map(Some);
                }
            }
            Ok(None)
        }
    }
}

/// Scan the 72 relabelings (side swap, member permutations on each side)
/// for one under which `(X₁∪X₂) △ (Y₁∪Y₃)` and `(X₁∪X₃) △ (Y₂∪Y₃)` form an
/// even cover.
fn non_star(g: &MultiGraph, d: &[ParityDecomposition; 2]) -> Result<Option<Flow>> {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for (x, y) in [(&d[0], &d[1]), (&d[1], &d[0])] {
        for r in PERMS {
            for c in PERMS {
                let x = |i: usize| &x.parts[r[i]];
                let y = |j: usize| &y.parts[c[j]];
                let cover = EvenCover {
                    c1: &(x(0) | x(1)) ^ &(y(0) | y(2)),
                    c2: &(x(0) | x(2)) ^ &(y(1) | y(2)),
                };
                if cover.check(g).is_ok() {
                    return flow_from_even_cover(g, &cover).map(Some);
                }
            }
        }
    }
    Ok(None)
}

/// `(side, member, first edge, second edge)` of two edges of one member,
/// both off the common edges, sharing a vertex.
fn find_two_path(
    g: &MultiGraph,
    d: [&ParityDecomposition; 2],
    common: &EdgeSet,
) -> Option<(usize, usize, usize, usize)> {
    let inc = g.incidence();
    for (side, dec) in d.iter().enumerate() {
        for (j, member) in dec.parts.iter().enumerate() {
            let free = member - common;
            for edges in &inc {
                let mut at = edges.iter().copied().filter(|&e| free.contains(e));
                if let (Some(x), Some(y)) = (at.next(), at.next()) {
                    return Some((side, j, x, y));
                }
            }
        }
    }
    None
}

fn reduce_two_path(
    g: &MultiGraph,
    d: [ParityDecomposition; 2],
    (side, member, x, y): (usize, usize, usize, usize),
    report: &mut UnionReport,
) -> Result<Flow> {
    let (ux, vx) = g.endpoints(x);
    let (uy, vy) = g.endpoints(y);
    if (ux, vx) == (uy, vy) || (ux, vx) == (vy, uy) {
        // A parallel pair: remove it, recurse, and put it back as a 2-cycle.
        report.steps.push(UnionStep::RemoveParallelPair);
        let pair = g.subset([x, y])?;
        let (h, map) = g.delete_edges(&pair);
        let n = h.edge_count();
        let dh = [d[0].remap(&map, n), d[1].remap(&map, n)];
        let fh = union_core(&h, dh, report)?;
        let group = fh.group.clone();
        let mut arcs = g.edges().to_vec();
        let mut values = vec![group.one(); g.edge_count()];
        for (e, img) in map.iter().enumerate() {
            if let Some(i) = *img {
                arcs[e] = fh.orientation.arc(i);
                values[e] = fh.values[i];
            }
        }
        arcs[x] = (ux, vx);
        arcs[y] = (vx, ux);
        return Flow::new(group, Orientation::new(g, arcs)?, values);
    }
    report.steps.push(UnionStep::SuppressTwoPath);
    let (h, rec) = g.suppress_two_path(x, y)?;
    let n = h.edge_count();
    let mut dh = [d[0].remap(&rec.edge_map, n), d[1].remap(&rec.edge_map, n)];
    dh[side].parts[member].insert(rec.added);
    let fh = union_core(&h, dh, report)?;
    transfer_suppressed_flow(g, &rec, &fh)
}

/// Two common edges `e[p]`, `e[q]` are parallel: move `e[p]` to the member
/// of the third edge on side `b`, drop `e[q]` from side `b`, and glue with
/// two common edges.
fn parallel_common(
    g: &MultiGraph,
    a: &ParityDecomposition,
    b: &ParityDecomposition,
    e: [usize; 3],
) -> Result<Flow> {
    let parallel = |x: usize, y: usize| {
        let (p, q) = g.endpoints(x);
        let (r, s) = g.endpoints(y);
        (p, q) == (r, s) || (p, q) == (s, r)
    };
    let (p, q) = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .find(|&(p, q)| parallel(e[p], e[q]))
        .ok_or_else(|| Error::Internal("no parallel common pair".into()))?;
    let r = 3 - p - q;
    let mut b2 = b.clone();
    b2.parts[r].insert(e[p]);
    b2.parts[p].remove(e[p]);
    b2.parts[q].remove(e[q]);
    let s1 = a.support();
    let s2 = b2.support();
    let f1 = flow_on_support(g, a)?;
    let f2 = flow_on_support(g, &b2)?;
    Ok(glue_flows(g, &s1, &s2, &f1, &f2)?.flow)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover4Outcome {
    pub flow: Flow,
    /// The irredundant short-cycle family, in processing order.
    pub cycles: Vec<Vec<usize>>,
    pub report: UnionReport,
}

/// A nowhere-zero 4-flow on a graph whose every edge lies on a cycle of
/// length at most 4.
///
/// A covering family of short cycles is pruned until every member has a
/// private edge; cycles are then added one at a time. A new cycle shares at
/// most three edges with the union so far, and exactly three only if it is
/// a 4-cycle whose shared edges form a 3-path.
pub fn cover4(g: &MultiGraph) -> Result<Cover4Outcome> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut covered = g.empty_set();
    for e in 0..g.edge_count() {
        if covered.contains(e) {
            continue;
        }
        let c = g
            .find_short_cycle(e, 4)
            .ok_or(Hypothesis::NoShortCycle { edge: e })?;
        for &x in &c {
            covered.insert(x);
        }
        cycles.push(c);
    }
    let mut keep = vec![true; cycles.len()];
    for i in (0..cycles.len()).rev() {
        let mut others = g.empty_set();
        for (j, c) in cycles.iter().enumerate() {
            if j != i && keep[j] {
                for &x in c {
                    others.insert(x);
                }
            }
        }
        if cycles[i].iter().all(|&x| others.contains(x)) {
            keep[i] = false;
        }
    }
    let cycles: Vec<Vec<usize>> = cycles
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect();

    let group = gf4();
    let mut report = UnionReport::default();
    let mut union = g.empty_set();
    let mut flow = Flow::zero(g, &group);
    for c in &cycles {
        let s = g.subset(c.iter().copied())?;
        let fc = cycle_flow(g, c, &group);
        if union.is_empty() {
            flow = fc;
        } else if (&union & &s).len() <= 2 {
            flow = glue_flows(g, &union, &s, &flow, &fc)?.flow;
        } else {
            let scope = &union | &s;
            let sub = g.subgraph(&scope);
            let mut local = vec![None; g.edge_count()];
            for (i, &e) in sub.edge_map.iter().enumerate() {
                local[e] = Some(i);
            }
            let n = sub.graph.edge_count();
            let glued = glue_four_flows(
                &sub.graph,
                &union.remap(&local, n),
                &s.remap(&local, n),
                &restrict(&flow, &sub),
                &restrict(&fc, &sub),
                &mut report,
            )?;
            flow = extend_by_zero(&glued, &sub, g)?;
        }
        union = &union | &s;
    }
    let flow = reorient_flow(&flow, &Orientation::canonical(g))?;
    assert_nowhere_zero(g, &flow, "cover4")?;
    Ok(Cover4Outcome {
        flow,
        cycles,
        report,
    })
}

/// The value-1 circulation around a cycle given as consecutive edge ids.
fn cycle_flow(g: &MultiGraph, cycle: &[usize], group: &Group) -> Flow {
    let mut arcs = g.edges().to_vec();
    let mut values = vec![group.zero(); g.edge_count()];
    let (u, v) = g.endpoints(cycle[0]);
    // The first edge is walked v -> u, the rest lead from u back to v.
    arcs[cycle[0]] = (v, u);
    values[cycle[0]] = group.one();
    let mut x = u;
    for &e in &cycle[1..] {
        let y = g.other_end(e, x);
        arcs[e] = (x, y);
        values[e] = group.one();
        x = y;
    }
    Flow {
        group: group.clone(),
        orientation: Orientation::new(g, arcs).expect("arcs follow edges"),
        values,
    }
}

/// [`cover4`] for a Cartesian bundle, after confirming that every edge lies
/// on a cycle of length at most 4.
pub fn bundle_four(g: &MultiGraph) -> Result<Cover4Outcome> {
    if let Some(edge) = (0..g.edge_count()).find(|&e| g.find_short_cycle(e, 4).is_none()) {
        return Err(Hypothesis::NoShortCycle { edge }.into());
    }
    cover4(g)
}
