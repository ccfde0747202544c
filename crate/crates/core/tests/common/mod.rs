//! Independent oracles and random instance generators shared by the
//! integration tests. The oracles work directly on edge lists and bitmasks
//! and do not call the library's flow code.

#![allow(dead_code)]

use nzflow::flow::{flow_basis, Flow, Orientation};
use nzflow::{Element, Group, MultiGraph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Every loopless multigraph on `n` vertices with at most `max_m` edges,
/// as multisets of vertex pairs in lexicographic order.
pub fn all_multigraphs(n: usize, max_m: usize) -> Vec<MultiGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        n: usize,
        pairs: &[(usize, usize)],
        start: usize,
        max_m: usize,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<MultiGraph>,
    ) {
        out.push(MultiGraph::new(n, cur).unwrap());
        if cur.len() == max_m {
            return;
        }
        for i in start..pairs.len() {
            cur.push(pairs[i]);
            rec(n, pairs, i, max_m, cur, out);
            cur.pop();
        }
    }
    rec(n, &pairs, 0, max_m, &mut cur, &mut out);
    out
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Component label of each vertex when only edges in `mask` are used.
pub fn component_labels(g: &MultiGraph, mask: u64) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if mask >> e & 1 == 1 {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
        }
    }
    (0..g.vertex_count())
        .map(|v| find(&mut parent, v))
        .collect()
}

pub fn component_count(g: &MultiGraph) -> usize {
    let all = if g.edge_count() == 64 {
        u64::MAX
    } else {
        (1u64 << g.edge_count()) - 1
    };
    let labels = component_labels(g, all);
    (0..g.vertex_count()).filter(|&v| labels[v] == v).count()
}

pub fn is_connected(g: &MultiGraph) -> bool {
    component_count(g) <= 1
}

pub fn beta(g: &MultiGraph) -> usize {
    g.edge_count() + component_count(g) - g.vertex_count()
}

fn degrees_mod2(g: &MultiGraph, mask: u64) -> Vec<u8> {
    let mut d = vec![0u8; g.vertex_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if mask >> e & 1 == 1 {
            d[u] ^= 1;
            d[v] ^= 1;
        }
    }
    d
}

pub fn even_masks(g: &MultiGraph) -> Vec<u64> {
    let m = g.edge_count();
    (0..1u64 << m)
        .filter(|&s| degrees_mod2(g, s).iter().all(|&x| x == 0))
        .collect()
}

/// Does some assignment of edges to three classes make every class a
/// parity subgraph (degrees congruent to the graph's mod 2)?
pub fn parity_decomposition_exists(g: &MultiGraph) -> bool {
    let m = g.edge_count();
    let full = (1u64 << m) - 1;
    let target = degrees_mod2(g, full);
    let parity: Vec<u64> = (0..1u64 << m)
        .filter(|&s| degrees_mod2(g, s) == target)
        .collect();
    // Classes 1 and 2 are parity subgraphs on disjoint edges; class 3 is the
    // rest, which is then automatically a parity subgraph iff the graph's
    // degrees have the right parity (three odd summands give odd).
    parity.iter().any(|&a| {
        parity
            .iter()
            .any(|&b| a & b == 0 && degrees_mod2(g, full & !(a | b)) == target)
    })
}

pub fn even_cover_exists(g: &MultiGraph) -> bool {
    let full = (1u64 << g.edge_count()) - 1;
    let even = even_masks(g);
    even.iter().any(|&a| even.iter().any(|&b| a | b == full))
}

/// Is there an even spanning subgraph each of whose components holds an
/// even number of vertices of odd degree in the graph?
pub fn evenly_sigma_exists(g: &MultiGraph) -> bool {
    let full = (1u64 << g.edge_count()) - 1;
    let odd = degrees_mod2(g, full);
    even_masks(g).into_iter().any(|s| {
        let labels = component_labels(g, s);
        let mut count = vec![0usize; g.vertex_count()];
        for v in 0..g.vertex_count() {
            count[labels[v]] += odd[v] as usize;
        }
        count.iter().all(|c| c % 2 == 0)
    })
}

/// Number of labelings of the canonically oriented edges by group elements
/// that conserve flow at every vertex, by brute force over `|A|^|E|`.
pub fn brute_flow_count(g: &MultiGraph, a: &Group) -> u64 {
    let m = g.edge_count();
    let q = a.order();
    let elems: Vec<Element> = a.elements().collect();
    let mut idx = vec![0u32; m];
    let mut count = 0;
    loop {
        let mut net = vec![a.zero(); g.vertex_count()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let x = elems[idx[e] as usize];
            net[u] = a.add(net[u], x);
            net[v] = a.sub(net[v], x);
        }
        if net.iter().all(|x| x.is_zero()) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == m {
                return count;
            }
            idx[i] += 1;
            if idx[i] < q {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

pub fn random_graph(rng: &mut impl Rng, n: usize, m: usize) -> MultiGraph {
    let edges: Vec<(usize, usize)> = (0..m)
        .map(|_| {
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            (u, v)
        })
        .collect();
    MultiGraph::new(n, &edges).unwrap()
}

/// Edges of a cycle through `len` distinct random vertices of `0..n`
/// (`len = 2` gives a digon).
pub fn random_cycle(rng: &mut impl Rng, n: usize, len: usize) -> Vec<(usize, usize)> {
    let mut vs: Vec<usize> = (0..n).collect();
    vs.shuffle(rng);
    vs.truncate(len);
    (0..len).map(|i| (vs[i], vs[(i + 1) % len])).collect()
}

pub fn random_element(rng: &mut impl Rng, a: &Group) -> Element {
    a.element(rng.gen_range(0..a.order())).unwrap()
}

/// A uniformly random flow in the canonical orientation.
pub fn random_flow(rng: &mut impl Rng, g: &MultiGraph, a: &Group) -> Flow {
    let basis = flow_basis(g, &Orientation::canonical(g)).unwrap();
    let coords: Vec<Element> = (0..basis.dimension())
        .map(|_| random_element(rng, a))
        .collect();
    basis.evaluate(a, &coords).unwrap()
}

/// A random nowhere-zero flow by rejection sampling, if one turns up.
pub fn random_nz_flow(rng: &mut impl Rng, g: &MultiGraph, a: &Group, tries: usize) -> Option<Flow> {
    (0..tries)
        .map(|_| random_flow(rng, g, a))
        .find(|f| f.is_nowhere_zero())
}

/// Independent conservation check on a flow in any orientation.
pub fn conserves(g: &MultiGraph, f: &Flow) -> bool {
    let a = &f.group;
    let mut net = vec![a.zero(); g.vertex_count()];
    for e in 0..g.edge_count() {
        let (t, h) = f.orientation.arc(e);
        let (u, v) = g.endpoints(e);
        if !((t, h) == (u, v) || (t, h) == (v, u)) {
            return false;
        }
        net[t] = a.add(net[t], f.values[e]);
        net[h] = a.sub(net[h], f.values[e]);
    }
    net.iter().all(|x| x.is_zero())
}

pub fn is_nz_flow(g: &MultiGraph, f: &Flow) -> bool {
    f.values.len() == g.edge_count() && conserves(g, f) && f.values.iter().all(|x| !x.is_zero())
}
