mod common;

use common::*;
use nzflow::flow::{
    count_flows, lift_integer, reorient_flow, search_nowhere_zero, transfer_suppressed_flow,
    verify_flow, Orientation,
};
use nzflow::fourflow::{flow_from_parity, gf4, glue_four, parity_from_flow};
use nzflow::multigraph::{classify_sigma, Side};
use nzflow::{make_group, Group, MultiGraph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const DESCRIPTORS: [&str; 9] = [
    "z:2", "z:3", "z:4", "z:6", "gf:2:2", "gf:2:3", "gf:3:2", "gf:5:1", "gf:7:1",
];
const FIELDS: [&str; 6] = ["gf:2:2", "gf:2:3", "gf:3:2", "gf:5:1", "gf:7:1", "gf:2:4"];

fn graph_strategy(max_n: usize, max_m: usize) -> impl Strategy<Value = MultiGraph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n - 1), 0..=max_m).prop_map(move |pairs| {
            let edges: Vec<(usize, usize)> = pairs
                .into_iter()
                .map(|(u, v)| (u, if v >= u { v + 1 } else { v }))
                .collect();
            MultiGraph::new(n, &edges).unwrap()
        })
    })
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(d in 0..FIELDS.len(), x in 0u32..1 << 16, y in 0u32..1 << 16, z in 0u32..1 << 16) {
        let f = make_group(FIELDS[d]).unwrap();
        let q = f.order();
        let (a, b, c) = (f.element(x % q).unwrap(), f.element(y % q).unwrap(), f.element(z % q).unwrap());
        let mul = |u, v| f.mul(u, v).unwrap();
        prop_assert_eq!(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        prop_assert_eq!(mul(a, mul(b, c)), mul(mul(a, b), c));
        prop_assert_eq!(mul(a, b), mul(b, a));
        prop_assert_eq!(mul(a, f.add(b, c)), f.add(mul(a, b), mul(a, c)));
        prop_assert_eq!(mul(a, f.one()), a);
        if !a.is_zero() {
            prop_assert_eq!(mul(a, f.inv(a).unwrap()), f.one());
            let b0 = f.primitive_element().unwrap();
            let j = f.discrete_log(a).unwrap();
            prop_assert_eq!(f.pow(b0, j as u64).unwrap(), a);
        }
    }

    #[test]
    fn reorientation_round_trip(g in graph_strategy(6, 9), d in 0..DESCRIPTORS.len(), seed: u64, flips: u64) {
        let a = make_group(DESCRIPTORS[d]).unwrap();
        let mut r = rng(seed);
        let f = random_flow(&mut r, &g, &a);
        let tails: Vec<usize> = (0..g.edge_count())
            .map(|e| { let (u, v) = g.endpoints(e); if flips >> (e % 64) & 1 == 1 { v } else { u } })
            .collect();
        let d2 = Orientation::from_tails(&g, &tails).unwrap();
        let f2 = reorient_flow(&f, &d2).unwrap();
        prop_assert!(conserves(&g, &f2));
        prop_assert_eq!(f2.is_nowhere_zero(), f.is_nowhere_zero());
        prop_assert_eq!(reorient_flow(&f2, &f.orientation).unwrap(), f);
    }

    #[test]
    fn search_agrees_with_enumeration(g in graph_strategy(5, 7), d in 0..5usize) {
        let a = make_group(["z:2", "z:3", "z:4", "gf:2:2", "z:5"][d]).unwrap();
        let all = count_flows(&g, &a, u128::MAX).unwrap().flows.unwrap();
        let exists = all.iter().any(|f| f.is_nowhere_zero());
        let outcome = search_nowhere_zero(&g, &a).unwrap();
        prop_assert_eq!(outcome.candidates() <= all.len() as u128, true);
        match outcome.flow() {
            Some(f) => prop_assert!(is_nz_flow(&g, &f)),
            None => prop_assert!(!exists),
        }
    }

    #[test]
    fn sigma_tag_is_invariant(cells in prop::collection::vec(0usize..9, 3), r in 0usize..6, c in 0usize..6, t: bool) {
        const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let mut m = [[0u32; 3]; 3];
        for x in cells {
            m[x / 3][x % 3] += 1;
        }
        let base = classify_sigma(m).unwrap();
        let mut m2 = [[0u32; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let v = m[PERMS[r][i]][PERMS[c][j]];
                if t { m2[j][i] = v } else { m2[i][j] = v }
            }
        }
        let moved = classify_sigma(m2).unwrap();
        prop_assert_eq!(base.tag, moved.tag);
        let flip = |s: Side| if t { match s { Side::First => Side::Second, Side::Second => Side::First } } else { s };
        prop_assert_eq!(base.center.map(flip), moved.center);
    }

    #[test]
    fn short_cycles_are_shortest(g in graph_strategy(6, 9), e in 0usize..9, max_len in 2usize..6) {
        prop_assume!(e < g.edge_count());
        let best = shortest_cycle_through(&g, e);
        match g.find_short_cycle(e, max_len) {
            Some(c) => {
                prop_assert_eq!(Some(c.len()), best);
                prop_assert_eq!(c[0], e);
                let mut deg = vec![0; g.vertex_count()];
                for &x in &c {
                    let (u, v) = g.endpoints(x);
                    deg[u] += 1;
                    deg[v] += 1;
                }
                prop_assert!(deg.iter().all(|&d| d == 0 || d == 2));
            }
            None => prop_assert!(best.is_none_or(|b| b > max_len)),
        }
    }

    #[test]
    fn symmetric_difference_of_even_sets_is_even(g in graph_strategy(6, 10), seed: u64) {
        let z2 = make_group("z:2").unwrap();
        let mut r = rng(seed);
        let support = |f: &nzflow::flow::Flow| g.subset((0..g.edge_count()).filter(|&e| !f.values[e].is_zero())).unwrap();
        let a = support(&random_flow(&mut r, &g, &z2));
        let b = support(&random_flow(&mut r, &g, &z2));
        prop_assert!(g.parity_profile(&a).unwrap().is_even);
        prop_assert!(g.parity_profile(&(&a ^ &b)).unwrap().is_even);
    }

    #[test]
    fn parity_round_trip(g in graph_strategy(5, 8), seed: u64) {
        let a = gf4();
        let Some(f) = random_nz_flow(&mut rng(seed), &g, &a, 50) else { return Ok(()); };
        let d = parity_from_flow(&g, &f).unwrap();
        let back = flow_from_parity(&g, &d).unwrap();
        prop_assert_eq!(parity_from_flow(&g, &back).unwrap(), d);
        for e in 0..g.edge_count() {
            prop_assert_eq!(back.values[e], f.values[e]);
        }
    }

    #[test]
    fn lifts_are_integer_flows(g in graph_strategy(6, 10), k in 3u32..7, seed: u64) {
        let a = make_group(&format!("z:{k}")).unwrap();
        let Some(f) = random_nz_flow(&mut rng(seed), &g, &a, 50) else { return Ok(()); };
        let h = lift_integer(&g, &f).unwrap();
        prop_assert!(h.is_nowhere_zero_k_flow(&g, k as i64));
    }

    #[test]
    fn suppression_transfer_round_trip(g in graph_strategy(6, 9), v in 0usize..6, seed: u64) {
        prop_assume!(v < g.vertex_count());
        let inc = g.incidence();
        prop_assume!(inc[v].len() >= 2);
        let (e1, e2) = (inc[v][0], inc[v][1]);
        let Ok((h, rec)) = g.suppress_two_path(e1, e2) else { return Ok(()); };
        let a = make_group("gf:5:1").unwrap();
        let f = random_flow(&mut rng(seed), &h, &a);
        let back = transfer_suppressed_flow(&g, &rec, &f).unwrap();
        // Degree-2 midpoints conserve; elsewhere the suppressed graph's
        // conservation carries over.
        if inc[v].len() == 2 {
            prop_assert!(verify_flow(&g, &back).unwrap().valid);
        }
        let (u1, _) = rec.ends;
        let along = f.value_along(rec.added, u1);
        prop_assert_eq!(back.value_along(rec.removed[0], u1), along);
        prop_assert_eq!(back.value_along(rec.removed[1], rec.midpoint), along);
    }
}

/// Length of a shortest cycle through `e`, by exhaustive path search.
fn shortest_cycle_through(g: &MultiGraph, e: usize) -> Option<usize> {
    let (u, v) = g.endpoints(e);
    let inc = g.incidence();
    let mut best = None;
    let mut seen = vec![false; g.vertex_count()];
    #[allow(clippy::too_many_arguments)]
    fn dfs(
        g: &MultiGraph,
        inc: &[Vec<usize>],
        x: usize,
        target: usize,
        skip: usize,
        len: usize,
        seen: &mut [bool],
        best: &mut Option<usize>,
    ) {
        if x == target {
            *best = Some(best.map_or(len, |b: usize| b.min(len)));
            return;
        }
        for &f in &inc[x] {
            let y = g.other_end(f, x);
            if f != skip && !seen[y] {
                seen[y] = true;
                dfs(g, inc, y, target, skip, len + 1, seen, best);
                seen[y] = false;
            }
        }
    }
    seen[u] = true;
    dfs(g, &inc, u, v, e, 1, &mut seen, &mut best);
    best
}

#[test]
fn glue_four_on_random_catlin_instances() {
    // A graph with a 4-flow plus a 4-cycle attached along a 3-path.
    let mut r = rng(11);
    let a = gf4();
    let mut done = 0;
    while done < 30 {
        let g0 = random_graph(&mut r, 6, 10);
        let Some(path) = (0..g0.edge_count()).find_map(|e0| three_path(&g0, e0)) else {
            continue;
        };
        if search_nowhere_zero(&g0, &a).unwrap().flow().is_none() {
            continue;
        }
        let (start, end) = (path.1, path.2);
        let mut edges = g0.edges().to_vec();
        edges.push((start, end));
        let g = MultiGraph::new(6, &edges).unwrap();
        let s1 = g.subset(0..g0.edge_count()).unwrap();
        let s2 = g
            .subset(path.0.iter().copied().chain([g0.edge_count()]))
            .unwrap();
        let out = glue_four(&g, &s1, &s2, [None, None]).unwrap();
        assert!(is_nz_flow(&g, &out.flow));
        done += 1;
    }
}

/// Three edges forming a path `a-b-c-d` with distinct vertices starting at
/// `e0`, with its ends.
fn three_path(g: &MultiGraph, e0: usize) -> Option<(Vec<usize>, usize, usize)> {
    let inc = g.incidence();
    let (a, b) = g.endpoints(e0);
    for &e1 in &inc[b] {
        let c = g.other_end(e1, b);
        if e1 == e0 || c == a {
            continue;
        }
        for &e2 in &inc[c] {
            let d = g.other_end(e2, c);
            if e2 != e1 && d != a && d != b {
                return Some((vec![e0, e1, e2], a, d));
            }
        }
    }
    None
}

#[test]
fn counts_match_brute_force_on_triangles_with_chords() {
    let g = MultiGraph::new(3, &[(0, 1), (1, 2), (2, 0), (0, 1)]).unwrap();
    for d in ["z:2", "z:3", "gf:2:2", "z:6"] {
        let a: Group = make_group(d).unwrap();
        assert_eq!(
            count_flows(&g, &a, 0).unwrap().count,
            brute_flow_count(&g, &a) as u128
        );
    }
}
