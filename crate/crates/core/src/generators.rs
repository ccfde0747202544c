//! Deterministic graph constructors: basic families, Cartesian products,
//! Cartesian bundles given by fiber-automorphism voltages, and the two
//! Petersen decompositions used as sharpness fixtures.

use crate::error::{Error, Hypothesis, Result};
use crate::multigraph::{EdgeSet, MultiGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasicKind {
    Cycle,
    Path,
    Complete,
    Petersen,
}

/// `cycle n` has edges `(i, i+1 mod n)`; `path n` has `n` vertices;
/// `complete n` lists edges in lexicographic order. Petersen: outer cycle
/// 0-1-2-3-4, inner pentagram 5-7-9-6-8, spokes `i`-`i+5`.
pub fn gen_basic(kind: BasicKind, n: Option<usize>) -> Result<MultiGraph> {
    let need = |min: usize| match n {
        Some(n) if n >= min => Ok(n),
        Some(n) => Err(Error::InvalidArgument(format!(
            "size {n} is below the minimum {min}"
        ))),
        None => Err(Error::InvalidArgument("a size is required".into())),
    };
    match kind {
        BasicKind::Cycle => {
            let n = need(2)?;
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            MultiGraph::new(n, &edges)
        }
        BasicKind::Path => {
            let n = need(1)?;
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            MultiGraph::new(n, &edges)
        }
        BasicKind::Complete => {
            let n = need(1)?;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            MultiGraph::new(n, &edges)
        }
        BasicKind::Petersen => Ok(petersen()),
    }
}

pub fn petersen() -> MultiGraph {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend([(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]);
    edges.extend((0..5).map(|i| (i, i + 5)));
    MultiGraph::new(10, &edges).expect("Petersen graph is loopless")
}

/// A Cartesian product with the `(a-vertex, b-vertex)` label of each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product {
    pub graph: MultiGraph,
    pub labels: Vec<(usize, usize)>,
}

/// Vertex `(u, u')` is numbered `u·|V(b)| + u'`. Edges `(u, e')` come first,
/// by `u` then `e'`, followed by edges `(e, u')`, by `e` then `u'`.
pub fn cartesian_product(a: &MultiGraph, b: &MultiGraph) -> Product {
    let spec = BundleSpec {
        base: a.clone(),
        fiber: b.clone(),
        voltages: vec![(0..b.vertex_count()).collect(); a.edge_count()],
    };
    Product {
        graph: build_bundle(&spec),
        labels: labels(a.vertex_count(), b.vertex_count()),
    }
}

fn labels(na: usize, nb: usize) -> Vec<(usize, usize)> {
    (0..na).flat_map(|u| (0..nb).map(move |x| (u, x))).collect()
}

/// A Cartesian bundle over `base` with fiber `fiber`: base edge `e = uv`
/// joins `(u, x)` to `(v, σ_e(x))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleSpec {
    pub base: MultiGraph,
    pub fiber: MultiGraph,
    /// One permutation of the fiber's vertices per base edge, in one-line
    /// notation.
    pub voltages: Vec<Vec<usize>>,
}

impl BundleSpec {
    /// Identity voltages on every base edge.
    pub fn untwisted(base: MultiGraph, fiber: MultiGraph) -> Self {
        let voltages = vec![(0..fiber.vertex_count()).collect(); base.edge_count()];
        BundleSpec {
            base,
            fiber,
            voltages,
        }
    }

    pub fn check(&self) -> Result<()> {
        if self.voltages.len() != self.base.edge_count() {
            return Err(Error::InvalidArgument(format!(
                "{} voltages for {} base edges",
                self.voltages.len(),
                self.base.edge_count()
            )));
        }
        for (factor, g) in [("base", &self.base), ("fiber", &self.fiber)] {
            if let Some(vertex) = g.degrees().iter().position(|&d| d == 0) {
                return Err(Hypothesis::IsolatedVertex { factor, vertex }.into());
            }
        }
        for (edge, sigma) in self.voltages.iter().enumerate() {
            if !is_automorphism(&self.fiber, sigma) {
                return Err(Error::NotAutomorphism { edge });
            }
        }
        Ok(())
    }
}

fn edge_multiset(g: &MultiGraph, map: impl Fn(usize) -> usize) -> Vec<(usize, usize)> {
    let mut es: Vec<_> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (x, y) = (map(u), map(v));
            (x.min(y), x.max(y))
        })
        .collect();
    es.sort_unstable();
    es
}

/// Whether `sigma` (one-line notation) is a permutation preserving the
/// edge multiset of `g`.
pub fn is_automorphism(g: &MultiGraph, sigma: &[usize]) -> bool {
    let n = g.vertex_count();
    if sigma.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in sigma {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    edge_multiset(g, |v| v) == edge_multiset(g, |v| sigma[v])
}

/// All automorphisms of `g` by brute force over permutations. Intended for
/// small fibers (at most 8 vertices).
pub fn automorphisms(g: &MultiGraph) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    if n > 8 {
        return Err(Error::InvalidArgument(format!(
            "automorphism enumeration is limited to 8 vertices, got {n}"
        )));
    }
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        if is_automorphism(g, p) {
            out.push(p.to_vec());
        }
    });
    out.sort();
    Ok(out)
}

fn permute(p: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

/// Vertices and edges are numbered as in [`cartesian_product`]; with
/// identity voltages the two agree exactly.
pub fn cartesian_bundle(spec: &BundleSpec) -> Result<MultiGraph> {
    spec.check()?;
    Ok(build_bundle(spec))
}

fn build_bundle(spec: &BundleSpec) -> MultiGraph {
    let nb = spec.fiber.vertex_count();
    let mut edges = Vec::new();
    for u in 0..spec.base.vertex_count() {
        for &(x, y) in spec.fiber.edges() {
            edges.push((u * nb + x, u * nb + y));
        }
    }
    for (e, &(u, v)) in spec.base.edges().iter().enumerate() {
        for x in 0..nb {
            edges.push((u * nb + x, v * nb + spec.voltages[e][x]));
        }
    }
    MultiGraph::new(spec.base.vertex_count() * nb, &edges).expect("factors are loopless")
}

/// A Petersen decomposition into two subgraphs, each with a nowhere-zero
/// 4-flow, whose union (the whole Petersen graph) has none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharpnessPair {
    pub graph: MultiGraph,
    pub s1: EdgeSet,
    pub s2: EdgeSet,
    /// Whether the common edges induce a connected subgraph.
    pub common_connected: bool,
}

impl SharpnessPair {
    pub fn common(&self) -> EdgeSet {
        &self.s1 & &self.s2
    }
}

fn edge_ids(g: &MultiGraph, pairs: &[(usize, usize)]) -> Vec<usize> {
    pairs
        .iter()
        .map(|&(a, b)| {
            g.edges()
                .iter()
                .position(|&(u, v)| (u, v) == (a, b) || (u, v) == (b, a))
                .expect("fixture edge exists")
        })
        .collect()
}

/// The two Petersen decompositions:
/// the 6-cycle 0-1-2-3-8-5 against the rest plus the matching {01, 23, 58},
/// and the 5-cycle 0-1-2-7-5 against the rest plus {01, 12, 57}.
pub fn figure1_corpus() -> Vec<SharpnessPair> {
    let g = petersen();
    let full = g.full_set();
    let make = |cycle: &[(usize, usize)], shared: &[(usize, usize)], connected: bool| {
        let s2 = g.subset(edge_ids(&g, cycle)).expect("valid ids");
        let mut s1 = &full - &s2;
        for e in edge_ids(&g, shared) {
            s1.insert(e);
        }
        SharpnessPair {
            graph: g.clone(),
            s1,
            s2,
            common_connected: connected,
        }
    };
    vec![
        make(
            &[(0, 1), (1, 2), (2, 3), (3, 8), (8, 5), (5, 0)],
            &[(0, 1), (2, 3), (5, 8)],
            false,
        ),
        make(
            &[(0, 1), (1, 2), (2, 7), (7, 5), (5, 0)],
            &[(0, 1), (1, 2), (5, 7)],
            false,
        ),
    ]
}
