//! Group-valued flows: verification, the cotree coordinate basis of the flow
//! space, counting and enumeration, nowhere-zero search, module operations,
//! and lifting `Z_k`-flows to integer flows.

use std::collections::VecDeque;

use crate::algebra::{Element, Group, GroupKind, Scalar};
use crate::error::{Error, Result};
use crate::multigraph::{MultiGraph, Subgraph, SuppressionRecord};

/// A direction `(tail, head)` for every edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    /// Every edge directed as listed in the graph.
    pub fn canonical(g: &MultiGraph) -> Self {
        Orientation {
            arcs: g.edges().to_vec(),
        }
    }

    pub fn new(g: &MultiGraph, arcs: Vec<(usize, usize)>) -> Result<Self> {
        let o = Orientation { arcs };
        o.check(g)?;
        Ok(o)
    }

    /// Orient edge `e` tail-first from `tails[e]`.
    pub fn from_tails(g: &MultiGraph, tails: &[usize]) -> Result<Self> {
        if tails.len() != g.edge_count() {
            return Err(Error::DomainMismatch(format!(
                "{} tails for {} edges",
                tails.len(),
                g.edge_count()
            )));
        }
        let mut arcs = Vec::with_capacity(tails.len());
        for (e, &t) in tails.iter().enumerate() {
            let (u, v) = g.endpoints(e);
            if t != u && t != v {
                return Err(Error::DomainMismatch(format!(
                    "vertex {t} is not an endpoint of edge {e}"
                )));
            }
            arcs.push((t, g.other_end(e, t)));
        }
        Ok(Orientation { arcs })
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc(&self, e: usize) -> (usize, usize) {
        self.arcs[e]
    }

    pub fn tail(&self, e: usize) -> usize {
        self.arcs[e].0
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn check(&self, g: &MultiGraph) -> Result<()> {
        if self.arcs.len() != g.edge_count() {
            return Err(Error::DomainMismatch(format!(
                "orientation has {} arcs, graph has {} edges",
                self.arcs.len(),
                g.edge_count()
            )));
        }
        for (e, &(t, h)) in self.arcs.iter().enumerate() {
            let (u, v) = g.endpoints(e);
            if !((t, h) == (u, v) || (t, h) == (v, u)) {
                return Err(Error::DomainMismatch(format!(
                    "arc {t}->{h} does not match edge {e} = {u}-{v}"
                )));
            }
        }
        Ok(())
    }

    pub fn reversed(&self, e: usize) -> Orientation {
        let mut arcs = self.arcs.clone();
        arcs[e] = (arcs[e].1, arcs[e].0);
        Orientation { arcs }
    }
}

/// A map from edge ids to group elements, relative to an orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flow {
    pub group: Group,
    pub orientation: Orientation,
    pub values: Vec<Element>,
}

impl Flow {
    pub fn new(group: Group, orientation: Orientation, values: Vec<Element>) -> Result<Self> {
        if values.len() != orientation.len() {
            return Err(Error::DomainMismatch(format!(
                "{} values for {} edges",
                values.len(),
                orientation.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !group.contains(**v)) {
            return Err(Error::BadElement(v.index().to_string()));
        }
        Ok(Flow {
            group,
            orientation,
            values,
        })
    }

    pub fn zero(g: &MultiGraph, group: &Group) -> Self {
        Flow {
            group: group.clone(),
            orientation: Orientation::canonical(g),
            values: vec![group.zero(); g.edge_count()],
        }
    }

    /// The same value on every edge, canonically oriented.
    pub fn constant(g: &MultiGraph, group: &Group, value: Element) -> Self {
        Flow {
            group: group.clone(),
            orientation: Orientation::canonical(g),
            values: vec![value; g.edge_count()],
        }
    }

    pub fn value(&self, e: usize) -> Element {
        self.values[e]
    }

    pub fn is_nowhere_zero(&self) -> bool {
        self.values.iter().all(|v| !v.is_zero())
    }

    /// `φ(e)` measured along the arc `(tail, head)`.
    pub fn value_along(&self, e: usize, tail: usize) -> Element {
        if self.orientation.tail(e) == tail {
            self.values[e]
        } else {
            self.group.neg(self.values[e])
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowCheck {
    pub valid: bool,
    pub nowhere_zero: bool,
    /// Outflow minus inflow at each vertex.
    pub residuals: Vec<Element>,
}

pub fn verify_flow(g: &MultiGraph, f: &Flow) -> Result<FlowCheck> {
    f.orientation.check(g)?;
    if f.values.len() != g.edge_count() {
        return Err(Error::DomainMismatch(format!(
            "{} values for {} edges",
            f.values.len(),
            g.edge_count()
        )));
    }
    let a = &f.group;
    let mut residuals = vec![a.zero(); g.vertex_count()];
    for (e, &(t, h)) in f.orientation.arcs().iter().enumerate() {
        let x = f.values[e];
        residuals[t] = a.add(residuals[t], x);
        residuals[h] = a.sub(residuals[h], x);
    }
    let valid = residuals.iter().all(|r| r.is_zero());
    Ok(FlowCheck {
        valid,
        nowhere_zero: valid && f.is_nowhere_zero(),
        residuals,
    })
}

/// Verify and insist on a nowhere-zero flow; used as the final gate of
/// every construction.
pub(crate) fn assert_nowhere_zero(g: &MultiGraph, f: &Flow, what: &str) -> Result<()> {
    let check = verify_flow(g, f)?;
    if check.nowhere_zero {
        Ok(())
    } else {
        Err(Error::Internal(format!(
            "{what} produced a flow that is not nowhere-zero (valid: {})",
            check.valid
        )))
    }
}

/// Cotree coordinates of the flow space: each cotree edge's fundamental
/// cycle, as signed edge ids relative to the orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowBasis {
    pub orientation: Orientation,
    /// Spanning forest edges, ascending.
    pub tree: Vec<usize>,
    /// Cotree edges, ascending; coordinate `i` belongs to `cotree[i]`.
    pub cotree: Vec<usize>,
    /// Fundamental cycle of each cotree edge. The cotree edge itself comes
    /// first with sign `+1`.
    pub cycles: Vec<Vec<(usize, i8)>>,
}

impl FlowBasis {
    pub fn dimension(&self) -> usize {
        self.cotree.len()
    }

    /// The flow with the given cotree coordinates.
    pub fn evaluate(&self, group: &Group, coords: &[Element]) -> Result<Flow> {
        if coords.len() != self.cotree.len() {
            return Err(Error::InvalidArgument(format!(
                "{} coordinates for a basis of size {}",
                coords.len(),
                self.cotree.len()
            )));
        }
        let mut values = vec![group.zero(); self.orientation.len()];
        for (cycle, &x) in self.cycles.iter().zip(coords) {
            accumulate(group, &mut values, cycle, x);
        }
        Flow::new(group.clone(), self.orientation.clone(), values)
    }
}

fn accumulate(group: &Group, values: &mut [Element], cycle: &[(usize, i8)], x: Element) {
    for &(e, s) in cycle {
        values[e] = if s > 0 {
            group.add(values[e], x)
        } else {
            group.sub(values[e], x)
        };
    }
}

/// Rooted spanning forest grown from the smallest-id edges (Kruskal in
/// edge-id order), with parent pointers for path queries.
struct Forest {
    in_tree: Vec<bool>,
    parent: Vec<Option<(usize, usize)>>,
    depth: Vec<usize>,
}

impl Forest {
    fn new(g: &MultiGraph) -> Self {
        let n = g.vertex_count();
        let mut uf: Vec<usize> = (0..n).collect();
        fn find(uf: &mut [usize], mut x: usize) -> usize {
            while uf[x] != x {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            x
        }
        let mut in_tree = vec![false; g.edge_count()];
        let mut adj = vec![Vec::new(); n];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let (a, b) = (find(&mut uf, u), find(&mut uf, v));
            if a != b {
                uf[a] = b;
                in_tree[e] = true;
                adj[u].push(e);
                adj[v].push(e);
            }
        }
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut seen = vec![false; n];
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for &e in &adj[x] {
                    let y = g.other_end(e, x);
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = Some((x, e));
                        depth[y] = depth[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
        }
        Forest {
            in_tree,
            parent,
            depth,
        }
    }

    /// Tree edges on the path from `a` to `b`, in walking order, with the
    /// vertex each is entered from.
    fn path(&self, mut a: usize, mut b: usize) -> Vec<(usize, usize)> {
        let mut front = Vec::new();
        let mut back = Vec::new();
        while a != b {
            if self.depth[a] >= self.depth[b] {
                let (p, e) = self.parent[a].expect("vertices lie in one tree");
                front.push((e, a));
                a = p;
            } else {
                let (p, e) = self.parent[b].expect("vertices lie in one tree");
                back.push((e, p));
                b = p;
            }
        }
        back.reverse();
        front.extend(back);
        front
    }
}

pub fn flow_basis(g: &MultiGraph, d: &Orientation) -> Result<FlowBasis> {
    d.check(g)?;
    let forest = Forest::new(g);
    let tree: Vec<usize> = (0..g.edge_count()).filter(|&e| forest.in_tree[e]).collect();
    let cotree: Vec<usize> = (0..g.edge_count())
        .filter(|&e| !forest.in_tree[e])
        .collect();
    let cycles = cotree
        .iter()
        .map(|&c| {
            let (t, h) = d.arc(c);
            let mut cycle = vec![(c, 1i8)];
            for (e, from) in forest.path(h, t) {
                let s = if d.tail(e) == from { 1 } else { -1 };
                cycle.push((e, s));
            }
            cycle
        })
        .collect();
    Ok(FlowBasis {
        orientation: d.clone(),
        tree,
        cotree,
        cycles,
    })
}

/// `|A|^β`, or an overflow error.
pub fn flow_space_size(g: &MultiGraph, group: &Group) -> Result<u128> {
    (group.order() as u128)
        .checked_pow(g.cyclomatic_number() as u32)
        .ok_or(Error::CountOverflow)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowCount {
    pub count: u128,
    /// All flows in coordinate order, when the count is within the limit.
    pub flows: Option<Vec<Flow>>,
}

pub fn count_flows(g: &MultiGraph, group: &Group, enumerate_limit: u128) -> Result<FlowCount> {
    let count = flow_space_size(g, group)?;
    let flows = if count <= enumerate_limit {
        let basis = flow_basis(g, &Orientation::canonical(g))?;
        let mut out = Vec::with_capacity(count as usize);
        let mut coords = vec![group.zero(); basis.dimension()];
        loop {
            out.push(basis.evaluate(group, &coords)?);
            if !odometer(group, &mut coords) {
                break;
            }
        }
        Some(out)
    } else {
        None
    };
    Ok(FlowCount { count, flows })
}

/// Advance `coords` to the next vector in lexicographic index order (last
/// coordinate fastest). Returns false after the last vector.
fn odometer(group: &Group, coords: &mut [Element]) -> bool {
    for c in coords.iter_mut().rev() {
        let next = c.index() + 1;
        if next < group.order() {
            *c = group.element(next).expect("index below order");
            return true;
        }
        *c = group.zero();
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// `candidates` counts the coordinate vectors ruled out before the
    /// solution, plus the solution itself.
    Found { flow: Flow, candidates: u128 },
    /// Every one of the `candidates = |A|^β` coordinate vectors was ruled out.
    NoneExists { candidates: u128 },
}

impl SearchOutcome {
    pub fn flow(self) -> Option<Flow> {
        match self {
            SearchOutcome::Found { flow, .. } => Some(flow),
            SearchOutcome::NoneExists { .. } => None,
        }
    }

    pub fn candidates(&self) -> u128 {
        match self {
            SearchOutcome::Found { candidates, .. } | SearchOutcome::NoneExists { candidates } => {
                *candidates
            }
        }
    }
}

/// Exhaustive backtracking over cotree coordinates. Tree-edge values are
/// kept as running sums; a branch is cut as soon as a cotree edge is zero or
/// a tree edge whose fundamental cycles are all assigned sums to zero. A cut
/// at depth `i` accounts for all `|A|^(β-i)` vectors below it.
pub fn search_nowhere_zero(g: &MultiGraph, group: &Group) -> Result<SearchOutcome> {
    let d = Orientation::canonical(g);
    let basis = flow_basis(g, &d)?;
    let beta = basis.dimension();
    let q = group.order() as u128;
    let total = q.saturating_pow(beta as u32);

    // Tree edges on no fundamental cycle are bridges: always zero.
    let mut cover = vec![0usize; g.edge_count()];
    for cycle in &basis.cycles {
        for &(e, _) in &cycle[1..] {
            cover[e] += 1;
        }
    }
    if basis.tree.iter().any(|&t| cover[t] == 0) {
        return Ok(SearchOutcome::NoneExists { candidates: total });
    }

    let order = coordinate_order(&basis, &cover);
    // Tree edges that become fully determined once coordinate `i` (in search
    // order) is assigned.
    let mut remaining = cover.clone();
    let mut completes: Vec<Vec<usize>> = Vec::with_capacity(beta);
    for &i in &order {
        let mut done = Vec::new();
        for &(e, _) in &basis.cycles[i][1..] {
            remaining[e] -= 1;
            if remaining[e] == 0 {
                done.push(e);
            }
        }
        completes.push(done);
    }
    let weight: Vec<u128> = (0..=beta)
        .map(|i| q.saturating_pow((beta - i) as u32))
        .collect();

    let mut values = vec![group.zero(); g.edge_count()];
    let mut candidates: u128 = 0;
    let mut chosen = vec![0u32; beta];
    let mut depth = 0usize;
    // Iterative DFS: chosen[depth] is the next index to try at that depth.
    let found = 'search: loop {
        if depth == beta {
            candidates = candidates.saturating_add(1);
            break 'search true;
        }
        let cycle = &basis.cycles[order[depth]];
        let mut advanced = false;
        while chosen[depth] < group.order() {
            let idx = chosen[depth];
            chosen[depth] += 1;
            if idx == 0 {
                candidates = candidates.saturating_add(weight[depth + 1]);
                continue;
            }
            let x = group.element(idx)?;
            accumulate(group, &mut values, cycle, x);
            if completes[depth].iter().all(|&t| !values[t].is_zero()) {
                advanced = true;
                break;
            }
            accumulate(group, &mut values, cycle, group.neg(x));
            candidates = candidates.saturating_add(weight[depth + 1]);
        }
        if advanced {
            depth += 1;
            if depth < beta {
                chosen[depth] = 0;
            }
            continue;
        }
        // Exhausted this level: undo the parent's assignment.
        if depth == 0 {
            break 'search false;
        }
        depth -= 1;
        let x = group.element(chosen[depth] - 1)?;
        accumulate(
            group,
            &mut values,
            &basis.cycles[order[depth]],
            group.neg(x),
        );
    };

    if found {
        let flow = Flow::new(group.clone(), d, values)?;
        assert_nowhere_zero(g, &flow, "search")?;
        Ok(SearchOutcome::Found { flow, candidates })
    } else {
        debug_assert_eq!(candidates, total);
        Ok(SearchOutcome::NoneExists { candidates })
    }
}

/// Greedy coordinate order: next the cotree edge that completes the most
/// tree edges, then the one overlapping most with those already placed,
/// then the smallest id.
fn coordinate_order(basis: &FlowBasis, cover: &[usize]) -> Vec<usize> {
    let beta = basis.dimension();
    let mut remaining = cover.to_vec();
    let mut touched = vec![false; cover.len()];
    let mut used = vec![false; beta];
    let mut order = Vec::with_capacity(beta);
    for _ in 0..beta {
        let best = (0..beta)
            .filter(|&i| !used[i])
            .max_by_key(|&i| {
                let tree = &basis.cycles[i][1..];
                let completes = tree.iter().filter(|&&(e, _)| remaining[e] == 1).count();
                let overlap = tree.iter().filter(|&&(e, _)| touched[e]).count();
                (completes, overlap, std::cmp::Reverse(i))
            })
            .expect("an unused coordinate remains");
        used[best] = true;
        for &(e, _) in &basis.cycles[best][1..] {
            remaining[e] -= 1;
            touched[e] = true;
        }
        order.push(best);
    }
    order
}

/// Search a nowhere-zero flow or report its nonexistence as an error.
pub fn require_nowhere_zero(g: &MultiGraph, group: &Group, what: &str) -> Result<Flow> {
    match search_nowhere_zero(g, group)? {
        SearchOutcome::Found { flow, .. } => Ok(flow),
        SearchOutcome::NoneExists { candidates } => Err(Error::NoFlow {
            what: what.to_string(),
            group: group.descriptor(),
            candidates,
        }),
    }
}

/// `Σ rᵢ·φᵢ` edge by edge.
pub fn module_combine(terms: &[(Scalar, &Flow)]) -> Result<Flow> {
    let Some((_, first)) = terms.first() else {
        return Err(Error::InvalidArgument("no terms to combine".into()));
    };
    let group = &first.group;
    let mut values = vec![group.zero(); first.values.len()];
    for (r, f) in terms {
        if f.group != *group || f.orientation != first.orientation {
            return Err(Error::DomainMismatch(
                "flows differ in group or orientation".into(),
            ));
        }
        for (acc, &x) in values.iter_mut().zip(&f.values) {
            *acc = group.add(*acc, r.apply(group, x)?);
        }
    }
    Flow::new(group.clone(), first.orientation.clone(), values)
}

/// Express `f` relative to orientation `d2`, negating flipped edges.
pub fn reorient_flow(f: &Flow, d2: &Orientation) -> Result<Flow> {
    if d2.len() != f.orientation.len() {
        return Err(Error::DomainMismatch(
            "orientation of a different graph".into(),
        ));
    }
    let mut values = Vec::with_capacity(f.values.len());
    for (e, (&a, &b)) in f.orientation.arcs().iter().zip(d2.arcs()).enumerate() {
        if a == b {
            values.push(f.values[e]);
        } else if a == (b.1, b.0) {
            values.push(f.group.neg(f.values[e]));
        } else {
            return Err(Error::DomainMismatch(format!(
                "edge {e}: arcs {a:?} and {b:?} differ in endpoints"
            )));
        }
    }
    Ok(Flow {
        group: f.group.clone(),
        orientation: d2.clone(),
        values,
    })
}

/// Extend a flow on the subgraph `sub` of `g` by zero on the other edges.
/// Edges outside the subgraph are oriented canonically.
pub fn extend_by_zero(f: &Flow, sub: &Subgraph, g: &MultiGraph) -> Result<Flow> {
    if !verify_flow(&sub.graph, f)?.valid {
        return Err(Error::InvalidFlow(
            "input is not a flow on the subgraph".into(),
        ));
    }
    let mut arcs = g.edges().to_vec();
    let mut values = vec![f.group.zero(); g.edge_count()];
    for (i, &e) in sub.edge_map.iter().enumerate() {
        if g.endpoints(e) != sub.graph.endpoints(i) {
            return Err(Error::DomainMismatch(format!(
                "subgraph edge {i} does not match ambient edge {e}"
            )));
        }
        arcs[e] = f.orientation.arc(i);
        values[e] = f.values[i];
    }
    Ok(Flow {
        group: f.group.clone(),
        orientation: Orientation { arcs },
        values,
    })
}

/// The restriction of `f` on `g` to the subgraph `sub`.
pub fn restrict(f: &Flow, sub: &Subgraph) -> Flow {
    Flow {
        group: f.group.clone(),
        orientation: Orientation {
            arcs: sub.edge_map.iter().map(|&e| f.orientation.arc(e)).collect(),
        },
        values: sub.edge_map.iter().map(|&e| f.values[e]).collect(),
    }
}

/// An integer-valued flow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerFlow {
    pub orientation: Orientation,
    pub values: Vec<i64>,
}

impl IntegerFlow {
    /// Outflow minus inflow per vertex.
    pub fn residuals(&self, n: usize) -> Vec<i64> {
        let mut r = vec![0i64; n];
        for (&(t, h), &x) in self.orientation.arcs().iter().zip(&self.values) {
            r[t] += x;
            r[h] -= x;
        }
        r
    }

    pub fn is_conservative(&self, g: &MultiGraph) -> bool {
        self.orientation.check(g).is_ok()
            && self.residuals(g.vertex_count()).iter().all(|&r| r == 0)
    }

    /// A nowhere-zero `k`-flow: conservative with `0 < |value| < k`.
    pub fn is_nowhere_zero_k_flow(&self, g: &MultiGraph, k: i64) -> bool {
        self.is_conservative(g) && self.values.iter().all(|&x| x != 0 && x.abs() < k)
    }
}

fn lift_modulus(group: &Group) -> Result<i64> {
    match group.kind() {
        GroupKind::Cyclic { modulus } => Ok(*modulus as i64),
        GroupKind::Field { p, degree: 1, .. } => Ok(*p as i64),
        _ => Err(Error::InvalidArgument(format!(
            "lifting needs a cyclic group, got {group}"
        ))),
    }
}

fn check_liftable(g: &MultiGraph, f: &Flow) -> Result<i64> {
    let k = lift_modulus(&f.group)?;
    if !verify_flow(g, f)?.nowhere_zero {
        return Err(Error::InvalidFlow(
            "input is not a nowhere-zero flow".into(),
        ));
    }
    Ok(k)
}

/// Lift a nowhere-zero `Z_k`-flow to an integer flow `h` with
/// `h ≡ f (mod k)` and `0 < |h(e)| < k`.
///
/// Values start at their representatives in `[1, k-1]`. While some vertex
/// has positive excess, a path to a vertex of negative excess is found in
/// which every edge can be toggled by `k` (positive values downward along
/// their orientation, negative ones upward against it); toggling it moves
/// `k` units of excess. A vertex set unreachable from a positive vertex
/// would have negative total excess, so such a path always exists.
pub fn lift_integer(g: &MultiGraph, f: &Flow) -> Result<IntegerFlow> {
    let k = check_liftable(g, f)?;
    let mut h = IntegerFlow {
        orientation: f.orientation.clone(),
        values: f.values.iter().map(|v| v.index() as i64).collect(),
    };
    let inc = g.incidence();
    let mut excess = h.residuals(g.vertex_count());
    while let Some(s) = excess.iter().position(|&x| x > 0) {
        // BFS over usable moves x -> y.
        let mut prev: Vec<Option<usize>> = vec![None; g.vertex_count()];
        let mut seen = vec![false; g.vertex_count()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        let mut target = None;
        while let Some(x) = queue.pop_front() {
            if excess[x] < 0 {
                target = Some(x);
                break;
            }
            for &e in &inc[x] {
                let (t, hd) = h.orientation.arc(e);
                let y = g.other_end(e, x);
                let usable = (t == x && h.values[e] > 0) || (hd == x && h.values[e] < 0);
                if usable && !seen[y] {
                    seen[y] = true;
                    prev[y] = Some(e);
                    queue.push_back(y);
                }
            }
        }
        let Some(t) = target else {
            log::warn!("no augmenting path in integer lift; using exhaustive toggles");
            return toggle_solutions(g, f)?
                .into_iter()
                .next()
                .ok_or_else(|| Error::Internal("no integer lift exists".into()));
        };
        let mut y = t;
        while y != s {
            let e = prev[y].expect("path recorded");
            let x = g.other_end(e, y);
            if h.values[e] > 0 {
                h.values[e] -= k;
            } else {
                h.values[e] += k;
            }
            y = x;
        }
        excess[s] -= k;
        excess[t] += k;
    }
    debug_assert!(h.is_nowhere_zero_k_flow(g, k));
    if !h.is_nowhere_zero_k_flow(g, k) {
        return Err(Error::Internal("integer lift failed conservation".into()));
    }
    Ok(h)
}

/// Every integer lift obtained by toggling a subset of edges from the
/// representative `r ∈ [1, k-1]` to `r - k`. Exhaustive over `2^|E|`
/// patterns, so limited to 20 edges.
pub fn toggle_solutions(g: &MultiGraph, f: &Flow) -> Result<Vec<IntegerFlow>> {
    let k = check_liftable(g, f)?;
    let m = g.edge_count();
    if m > 20 {
        return Err(Error::InvalidArgument(format!(
            "exhaustive toggling is limited to 20 edges, got {m}"
        )));
    }
    let base: Vec<i64> = f.values.iter().map(|v| v.index() as i64).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        let values: Vec<i64> = (0..m)
            .map(|e| {
                if mask >> e & 1 == 1 {
                    base[e] - k
                } else {
                    base[e]
                }
            })
            .collect();
        let h = IntegerFlow {
            orientation: f.orientation.clone(),
            values,
        };
        if h.is_conservative(g) {
            out.push(h);
        }
    }
    Ok(out)
}

/// Carry a flow on a 2-path-suppressed graph back to the original graph:
/// both removed edges take the value of the added edge, oriented along
/// `u1 -> u2 -> u3`.
pub fn transfer_suppressed_flow(
    g: &MultiGraph,
    rec: &SuppressionRecord,
    f2: &Flow,
) -> Result<Flow> {
    let expected = g.edge_count() - 1;
    if f2.values.len() != expected
        || rec.edge_map.len() != g.edge_count()
        || rec.added >= f2.values.len()
    {
        return Err(Error::DomainMismatch(
            "suppression record does not match the flow's graph".into(),
        ));
    }
    let (u1, u3) = rec.ends;
    let [e1, e2] = rec.removed;
    let w = match f2.orientation.arc(rec.added) {
        a if a == (u1, u3) => f2.values[rec.added],
        a if a == (u3, u1) => f2.group.neg(f2.values[rec.added]),
        a => {
            return Err(Error::DomainMismatch(format!(
                "added edge is oriented {a:?}, expected between {u1} and {u3}"
            )))
        }
    };
    let mut arcs = g.edges().to_vec();
    let mut values = vec![f2.group.zero(); g.edge_count()];
    for (e, img) in rec.edge_map.iter().enumerate() {
        if let Some(i) = *img {
            arcs[e] = f2.orientation.arc(i);
            values[e] = f2.values[i];
        }
    }
    arcs[e1] = (u1, rec.midpoint);
    arcs[e2] = (rec.midpoint, u3);
    values[e1] = w;
    values[e2] = w;
    let out = Flow::new(f2.group.clone(), Orientation::new(g, arcs)?, values)?;
    Ok(out)
}
