//! Loopless multigraphs with stable edge ids, and the subgraph algebra the
//! flow constructions are phrased in: every subgraph is a set of edge ids of
//! one ambient graph.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

use crate::error::{Error, Result};

/// A loopless multigraph on vertices `0..n` with edge ids `0..m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    /// Edge ids follow the order of `edges`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        for (id, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop {
                    edge: id,
                    vertex: u,
                });
            }
        }
        Ok(MultiGraph {
            n,
            edges: edges.to_vec(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn check_edge(&self, e: usize) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange {
                edge: e,
                m: self.edges.len(),
            })
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.degrees_in(&self.full_set())
    }

    /// Degrees in the spanning subgraph `(V, s)`.
    pub fn degrees_in(&self, s: &EdgeSet) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in s.iter() {
            let (u, v) = self.edges[e];
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Incident edge ids per vertex, ascending.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push(e);
            inc[v].push(e);
        }
        inc
    }

    pub fn full_set(&self) -> EdgeSet {
        EdgeSet::full(self.edges.len())
    }

    pub fn empty_set(&self) -> EdgeSet {
        EdgeSet::new(self.edges.len())
    }

    pub fn subset(&self, ids: impl IntoIterator<Item = usize>) -> Result<EdgeSet> {
        EdgeSet::from_ids(self.edges.len(), ids)
    }

    /// Edge ids joining `u` and `v`, ascending.
    pub fn edges_between(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| {
                let (a, b) = self.edges[e];
                (a, b) == (u, v) || (a, b) == (v, u)
            })
            .collect()
    }

    /// The spanning subgraph `(V, s)` as a graph of its own.
    pub fn subgraph(&self, s: &EdgeSet) -> Subgraph {
        let edge_map: Vec<usize> = s.iter().collect();
        let edges: Vec<(usize, usize)> = edge_map.iter().map(|&e| self.edges[e]).collect();
        Subgraph {
            graph: MultiGraph { n: self.n, edges },
            edge_map,
        }
    }

    /// Connected components of `(V, s)`, or of the whole graph. Isolated
    /// vertices are singleton components. Components are ordered by their
    /// smallest vertex.
    pub fn components(&self, s: Option<&EdgeSet>) -> Components {
        let full;
        let s = match s {
            Some(s) => s,
            None => {
                full = self.full_set();
                &full
            }
        };
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in s.iter() {
            let (u, v) = self.edges[e];
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut label = vec![usize::MAX; self.n];
        let mut vertices: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            let r = find(&mut parent, v);
            if label[r] == usize::MAX {
                label[r] = vertices.len();
                vertices.push(Vec::new());
            }
            label[v] = label[r];
            vertices[label[v]].push(v);
        }
        let mut edges = vec![Vec::new(); vertices.len()];
        for e in s.iter() {
            edges[label[self.edges[e].0]].push(e);
        }
        Components {
            label,
            vertices,
            edges,
        }
    }

    /// Cyclomatic number `|E| - |V| + c`.
    pub fn cyclomatic_number(&self) -> usize {
        self.edges.len() + self.components(None).count() - self.n
    }

    pub fn parity_profile(&self, s: &EdgeSet) -> Result<ParityProfile> {
        if s.universe() != self.edges.len() {
            return Err(Error::AmbientMismatch);
        }
        let dg = self.degrees();
        let ds = self.degrees_in(s);
        let touched: Vec<bool> = ds.iter().map(|&d| d > 0).collect();
        Ok(ParityProfile {
            odd_vertices: (0..self.n)
                .filter(|&v| touched[v] && dg[v] % 2 == 1)
                .collect(),
            odd_in_subset: (0..self.n).filter(|&v| ds[v] % 2 == 1).collect(),
            is_even: ds.iter().all(|d| d % 2 == 0),
            is_parity: (0..self.n).all(|v| ds[v] % 2 == dg[v] % 2),
            is_spanning: touched.iter().all(|&t| t),
        })
    }

    /// Remove the 2-path `u1 -e1- u2 -e2- u3` and join `u1`, `u3` by a new
    /// edge, which receives the highest id. Remaining edges keep their
    /// relative order; the record maps old ids to new ones.
    pub fn suppress_two_path(
        &self,
        e1: usize,
        e2: usize,
    ) -> Result<(MultiGraph, SuppressionRecord)> {
        self.check_edge(e1)?;
        self.check_edge(e2)?;
        if e1 == e2 {
            return Err(Error::NotTwoPath(e1, e2));
        }
        let (a, b) = self.edges[e1];
        let (c, d) = self.edges[e2];
        let shared: Vec<usize> = [a, b].into_iter().filter(|&x| x == c || x == d).collect();
        let mid = match shared.as_slice() {
            [m] => *m,
            [_, _] => return Err(Error::SuppressionLoop(e1, e2)),
            _ => return Err(Error::NotTwoPath(e1, e2)),
        };
        let u1 = self.other_end(e1, mid);
        let u3 = self.other_end(e2, mid);
        let mut edge_map = vec![None; self.edges.len()];
        let mut edges = Vec::with_capacity(self.edges.len() - 1);
        for (e, &uv) in self.edges.iter().enumerate() {
            if e != e1 && e != e2 {
                edge_map[e] = Some(edges.len());
                edges.push(uv);
            }
        }
        let added = edges.len();
        edges.push((u1, u3));
        Ok((
            MultiGraph { n: self.n, edges },
            SuppressionRecord {
                removed: [e1, e2],
                added,
                ends: (u1, u3),
                midpoint: mid,
                edge_map,
            },
        ))
    }

    /// Delete the edges in `s`; surviving edges keep their relative order.
    /// Returns the new graph and the old-to-new id map.
    pub fn delete_edges(&self, s: &EdgeSet) -> (MultiGraph, Vec<Option<usize>>) {
        let mut map = vec![None; self.edges.len()];
        let mut edges = Vec::new();
        for (e, &uv) in self.edges.iter().enumerate() {
            if !s.contains(e) {
                map[e] = Some(edges.len());
                edges.push(uv);
            }
        }
        (MultiGraph { n: self.n, edges }, map)
    }

    /// A shortest cycle through `e` of length at most `max_len`, as edge ids
    /// starting with `e`. Parallel edges give 2-cycles. Among shortest
    /// cycles the one with the lexicographically smallest id sequence is
    /// returned.
    pub fn find_short_cycle(&self, e: usize, max_len: usize) -> Option<Vec<usize>> {
        if e >= self.edges.len() || max_len < 2 {
            return None;
        }
        let (u, v) = self.edges[e];
        let inc = self.incidence();
        // Distances to v avoiding e.
        let mut dist = vec![usize::MAX; self.n];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            if dist[x] + 1 >= max_len {
                continue;
            }
            for &f in &inc[x] {
                if f == e {
                    continue;
                }
                let y = self.other_end(f, x);
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[u] == usize::MAX || dist[u] + 1 > max_len {
            return None;
        }
        let mut cycle = vec![e];
        let mut x = u;
        while x != v {
            let f = inc[x]
                .iter()
                .copied()
                .filter(|&f| f != e)
                .find(|&f| dist[self.other_end(f, x)].checked_add(1) == Some(dist[x]))
                .expect("distance labels are consistent");
            cycle.push(f);
            x = self.other_end(f, x);
        }
        Some(cycle)
    }

    /// Shape of a connected set of three edges.
    pub fn classify_triple(&self, triple: &EdgeSet) -> Result<TripleShape> {
        if triple.universe() != self.edges.len() {
            return Err(Error::AmbientMismatch);
        }
        let ids: Vec<usize> = triple.iter().collect();
        let [a, b, c] = ids[..] else {
            return Err(Error::InvalidArgument(format!(
                "expected 3 edges, got {}",
                ids.len()
            )));
        };
        let edges = [a, b, c];
        let mut verts: Vec<usize> = edges
            .iter()
            .flat_map(|&e| [self.edges[e].0, self.edges[e].1])
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let comps = self.components(Some(triple));
        if comps.vertices.iter().filter(|vs| vs.len() > 1).count() != 1 {
            return Err(Error::DisconnectedTriple);
        }
        let deg = |x: usize| {
            edges
                .iter()
                .filter(|&&e| self.edges[e].0 == x || self.edges[e].1 == x)
                .count()
        };
        let same = |e: usize, f: usize| {
            let (p, q) = self.edges[e];
            let (r, s) = self.edges[f];
            (p, q) == (r, s) || (p, q) == (s, r)
        };
        let (kind, roles) = match verts.len() {
            2 => (TripleKind::ThreeParallel, verts.clone()),
            3 => {
                let pair = [(a, b), (a, c), (b, c)]
                    .into_iter()
                    .find(|&(e, f)| same(e, f));
                match pair {
                    Some((e, f)) => {
                        let single = edges.into_iter().find(|&x| x != e && x != f).unwrap();
                        let (p, q) = self.edges[e];
                        let junction = if self.edges[single].0 == p || self.edges[single].1 == p {
                            p
                        } else {
                            q
                        };
                        let far = self.other_end(single, junction);
                        let digon_end = self.other_end(e, junction);
                        (TripleKind::EdgePlusDigon, vec![far, junction, digon_end])
                    }
                    None => (TripleKind::Triangle, verts.clone()),
                }
            }
            4 => {
                if let Some(&center) = verts.iter().find(|&&x| deg(x) == 3) {
                    let mut leaves: Vec<usize> =
                        verts.iter().copied().filter(|&x| x != center).collect();
                    leaves.sort_unstable();
                    let mut roles = vec![center];
                    roles.extend(leaves);
                    (TripleKind::Star, roles)
                } else {
                    let start = *verts.iter().filter(|&&x| deg(x) == 1).min().unwrap();
                    let mut roles = vec![start];
                    let mut used = [false; 3];
                    let mut x = start;
                    for _ in 0..3 {
                        let i = (0..3)
                            .find(|&i| {
                                !used[i]
                                    && (self.edges[edges[i]].0 == x || self.edges[edges[i]].1 == x)
                            })
                            .unwrap();
                        used[i] = true;
                        x = self.other_end(edges[i], x);
                        roles.push(x);
                    }
                    (TripleKind::Path, roles)
                }
            }
            _ => return Err(Error::DisconnectedTriple),
        };
        Ok(TripleShape { kind, roles, edges })
    }

    /// Split an even edge set into edge-disjoint cycles. Each cycle is a list
    /// of `(edge, tail)` pairs traversed head to tail. Walks always continue
    /// along the smallest unused edge, so the result is deterministic.
    pub fn cycle_decomposition(&self, s: &EdgeSet) -> Result<Vec<Vec<(usize, usize)>>> {
        if s.universe() != self.edges.len() {
            return Err(Error::AmbientMismatch);
        }
        if let Some(v) = self.degrees_in(s).iter().position(|d| d % 2 == 1) {
            return Err(Error::InvalidArgument(format!(
                "edge set is not even: vertex {v} has odd degree"
            )));
        }
        let inc = self.incidence();
        let mut cursor = vec![0usize; self.n];
        let mut used = vec![false; self.edges.len()];
        let mut pos: Vec<Option<usize>> = vec![None; self.n];
        let mut cycles = Vec::new();
        for start in s.iter() {
            if used[start] {
                continue;
            }
            let first = self.edges[start].0;
            let mut verts = vec![first];
            let mut path: Vec<(usize, usize)> = Vec::new();
            pos[first] = Some(0);
            let mut x = first;
            let mut next = Some(start);
            loop {
                let e = match next.take() {
                    Some(e) => e,
                    None => {
                        let list = &inc[x];
                        while cursor[x] < list.len()
                            && (used[list[cursor[x]]] || !s.contains(list[cursor[x]]))
                        {
                            cursor[x] += 1;
                        }
                        match list.get(cursor[x]) {
                            Some(&e) => e,
                            None => break,
                        }
                    }
                };
                used[e] = true;
                let y = self.other_end(e, x);
                path.push((e, x));
                match pos[y] {
                    Some(i) => {
                        cycles.push(path.split_off(i));
                        for &v in &verts[i + 1..] {
                            pos[v] = None;
                        }
                        verts.truncate(i + 1);
                        if path.is_empty() {
                            break;
                        }
                    }
                    None => {
                        pos[y] = Some(verts.len());
                        verts.push(y);
                    }
                }
                x = y;
            }
            for &v in &verts {
                pos[v] = None;
            }
        }
        Ok(cycles)
    }

    /// Vertex sets `{u, v}` for edge listing in the text format.
    pub fn to_text(&self) -> String {
        let mut s = format!("graph {}\n", self.n);
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// A spanning subgraph extracted as its own graph, with the map from its
/// edge ids back to the ambient ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: MultiGraph,
    pub edge_map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    /// Component index per vertex.
    pub label: Vec<usize>,
    pub vertices: Vec<Vec<usize>>,
    pub edges: Vec<Vec<usize>>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.vertices.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityProfile {
    /// Vertices of the subset with odd degree in the ambient graph.
    pub odd_vertices: Vec<usize>,
    /// Vertices of odd degree in the subset itself.
    pub odd_in_subset: Vec<usize>,
    pub is_even: bool,
    pub is_parity: bool,
    pub is_spanning: bool,
}

/// Bookkeeping for [`MultiGraph::suppress_two_path`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuppressionRecord {
    /// Original ids of the removed edges `u1u2` and `u2u3`.
    pub removed: [usize; 2],
    /// Id of the new edge `u1u3` in the suppressed graph.
    pub added: usize,
    /// `(u1, u3)`.
    pub ends: (usize, usize),
    pub midpoint: usize,
    /// Original id to suppressed-graph id; `None` for the removed edges.
    pub edge_map: Vec<Option<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TripleKind {
    ThreeParallel,
    EdgePlusDigon,
    Star,
    Triangle,
    Path,
}

impl TripleKind {
    pub fn is_simple(self) -> bool {
        !matches!(self, TripleKind::ThreeParallel | TripleKind::EdgePlusDigon)
    }
}

/// Classification of three connected edges. `roles` lists `u1, u2, ...`:
/// for a star the center first, for a path the vertices in path order, for
/// an edge plus digon the far end of the single edge, the junction, then the
/// digon's other end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleShape {
    pub kind: TripleKind,
    pub roles: Vec<usize>,
    pub edges: [usize; 3],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    First,
    Second,
}

/// The seven bipartite multigraphs with three edges between two
/// three-vertex sides, up to relabeling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SigmaTag {
    /// Triple edge.
    P1,
    /// Double edge plus a disjoint edge.
    P2,
    /// Double edge plus an incident edge.
    P3,
    /// Path of length three.
    P4,
    /// Perfect matching.
    P5,
    /// Two edges at one vertex plus a disjoint edge.
    P6,
    /// Star with three leaves.
    P7,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaPattern {
    pub matrix: [[u32; 3]; 3],
    pub tag: SigmaTag,
    /// Side of the vertex where edges meet, for the tags where that vertex
    /// is distinguished (P3, P6, P7).
    pub center: Option<Side>,
}

/// Classify the multiplicity matrix `m[i][j]` between the members of two
/// three-part decompositions.
pub fn classify_sigma(m: [[u32; 3]; 3]) -> Result<SigmaPattern> {
    let total: u32 = m.iter().flatten().sum();
    if total != 3 {
        return Err(Error::BadSigmaSize(total));
    }
    let cells: Vec<(usize, usize, u32)> = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .filter(|&(i, j)| m[i][j] > 0)
        .map(|(i, j)| (i, j, m[i][j]))
        .collect();
    let row_max = (0..3)
        .map(|i| cells.iter().filter(|c| c.0 == i).count())
        .max()
        .unwrap();
    let col_max = (0..3)
        .map(|j| cells.iter().filter(|c| c.1 == j).count())
        .max()
        .unwrap();
    let (tag, center) = match cells.len() {
        1 => (SigmaTag::P1, None),
        2 => {
            let (a, b) = (cells[0], cells[1]);
            if a.0 == b.0 {
                (SigmaTag::P3, Some(Side::First))
            } else if a.1 == b.1 {
                (SigmaTag::P3, Some(Side::Second))
            } else {
                (SigmaTag::P2, None)
            }
        }
        _ => match (row_max, col_max) {
            (3, _) => (SigmaTag::P7, Some(Side::First)),
            (_, 3) => (SigmaTag::P7, Some(Side::Second)),
            (1, 1) => (SigmaTag::P5, None),
            (2, 2) => (SigmaTag::P4, None),
            (2, 1) => (SigmaTag::P6, Some(Side::First)),
            _ => (SigmaTag::P6, Some(Side::Second)),
        },
    };
    Ok(SigmaPattern {
        matrix: m,
        tag,
        center,
    })
}

/// A set of edge ids of an ambient graph with `universe` edges.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct EdgeSet {
    bits: Vec<bool>,
}

impl EdgeSet {
    pub fn new(universe: usize) -> Self {
        EdgeSet {
            bits: vec![false; universe],
        }
    }

    pub fn full(universe: usize) -> Self {
        EdgeSet {
            bits: vec![true; universe],
        }
    }

    pub fn from_ids(universe: usize, ids: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = EdgeSet::new(universe);
        for e in ids {
            if e >= universe {
                return Err(Error::EdgeOutOfRange {
                    edge: e,
                    m: universe,
                });
            }
            s.bits[e] = true;
        }
        Ok(s)
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.bits.get(e).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, e: usize) {
        self.bits[e] = true;
    }

    pub fn remove(&mut self, e: usize) {
        self.bits[e] = false;
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(e, &b)| b.then_some(e))
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.universe() == other.universe() && self.iter().all(|e| other.contains(e))
    }

    fn zip(&self, other: &EdgeSet, f: impl Fn(bool, bool) -> bool) -> Result<EdgeSet> {
        if self.universe() != other.universe() {
            return Err(Error::AmbientMismatch);
        }
        Ok(EdgeSet {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn union(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.zip(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.zip(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.zip(other, |a, b| a && !b)
    }

    /// `(s1 ∪ s2) − (s1 ∩ s2)`.
    pub fn symmetric_difference(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.zip(other, |a, b| a != b)
    }

    /// Re-index through an old-to-new id map, dropping unmapped ids.
    pub fn remap(&self, map: &[Option<usize>], universe: usize) -> EdgeSet {
        let mut out = EdgeSet::new(universe);
        for e in self.iter() {
            if let Some(f) = map[e] {
                out.insert(f);
            }
        }
        out
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.iter().map(|e| e.to_string()).collect();
        f.write_str(&ids.join(" "))
    }
}

// Operator forms for sets known to share an ambient graph; they panic on a
// mismatch.
macro_rules! set_op {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr for &EdgeSet {
            type Output = EdgeSet;
            fn $m(self, rhs: &EdgeSet) -> EdgeSet {
                self.$f(rhs).expect("edge sets of different ambient graphs")
            }
        }
    };
}

set_op!(BitOr, bitor, union);
set_op!(BitAnd, bitand, intersection);
set_op!(BitXor, bitxor, symmetric_difference);
set_op!(Sub, sub, difference);
