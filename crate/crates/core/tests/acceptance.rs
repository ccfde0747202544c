//! Acceptance criteria. Runs without the libtest harness and prints one
//! PASS/FAIL line per criterion; exits nonzero if any fail.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use common::*;
use nzflow::flow::{
    count_flows, lift_integer, module_combine, search_nowhere_zero, toggle_solutions, verify_flow,
    SearchOutcome,
};
use nzflow::fourflow::{
    bundle_four, cover4, even_cover_from_certificate, evenly_certificate, flow_from_even_cover,
    gf4, glue_four, parity_from_flow, EvenlyVerdict, UnionStep,
};
use nzflow::generators::{
    automorphisms, cartesian_bundle, cartesian_product, figure1_corpus, gen_basic, BasicKind,
    BundleSpec,
};
use nzflow::glue::{glue_common, GlueInstance};
use nzflow::{make_group, EdgeSet, Endomorphism, Error, Group, Hypothesis, MultiGraph, Scalar};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn basic(kind: BasicKind, n: usize) -> MultiGraph {
    gen_basic(kind, Some(n)).unwrap()
}

fn nz_found(g: &MultiGraph, a: &Group) -> Option<nzflow::flow::Flow> {
    search_nowhere_zero(g, a).unwrap().flow()
}

fn petersen_sharpness() -> Verdict {
    let p = gen_basic(BasicKind::Petersen, None).unwrap();
    let a = gf4();
    let outcome = search_nowhere_zero(&p, &a).unwrap();
    let none_4096 = matches!(outcome, SearchOutcome::NoneExists { candidates: 4096 });
    let mut sides_ok = 0;
    let mut disconnected_rejected = 0;
    for pair in figure1_corpus() {
        for s in [&pair.s1, &pair.s2] {
            let sub = p.subgraph(s);
            if let Some(f) = nz_found(&sub.graph, &a) {
                sides_ok += usize::from(is_nz_flow(&sub.graph, &f));
            }
        }
        if matches!(
            glue_four(&p, &pair.s1, &pair.s2, [None, None]),
            Err(Error::Hypothesis(Hypothesis::CommonDisconnected { .. }))
        ) {
            disconnected_rejected += 1;
        }
    }
    verdict(
        none_4096 && sides_ok == 4 && disconnected_rejected == 2,
        format!(
            "Petersen candidates {}, {sides_ok}/4 sides with verified NZ4, {disconnected_rejected}/2 unions rejected as disconnected",
            outcome.candidates()
        ),
    )
}

/// A random side: a union of 1-3 random cycles on `n` vertices.
fn random_side(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let len = rng.gen_range(2..=n.min(5));
        edges.extend(random_cycle(rng, n, len));
    }
    edges
}

fn common_gluing() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut failures = Vec::new();
    let mut total = 0;
    for q in [3u32, 4, 5, 7, 8, 9] {
        let a = match q {
            4 => make_group("gf:2:2"),
            8 => make_group("gf:2:3"),
            9 => make_group("gf:3:2"),
            _ => make_group(&format!("gf:{q}:1")),
        }
        .unwrap();
        let bound = (q - 2) as usize;
        let mut done = 0;
        while done < 200 {
            let n = rng.gen_range(4..=6);
            let e1 = random_side(&mut rng, n);
            let g1 = MultiGraph::new(n, &e1).unwrap();
            if nz_found(&g1, &a).is_none() {
                continue;
            }
            let c = rng.gen_range(0..=bound.min(e1.len()));
            let mut shared: Vec<usize> = (0..e1.len()).collect();
            shared.shuffle(&mut rng);
            shared.truncate(c);
            let own = random_side(&mut rng, n);
            let mut e2: Vec<(usize, usize)> = shared.iter().map(|&i| e1[i]).collect();
            e2.extend(&own);
            if nz_found(&MultiGraph::new(n, &e2).unwrap(), &a).is_none() {
                continue;
            }
            let mut edges = e1.clone();
            edges.extend(&own);
            let g = MultiGraph::new(n, &edges).unwrap();
            let s1 = g.subset(0..e1.len()).unwrap();
            let s2 = g
                .subset(shared.iter().copied().chain(e1.len()..edges.len()))
                .unwrap();
            let out = glue_common(&GlueInstance {
                graph: g.clone(),
                sides: [s1, s2],
                flows: [None, None],
                group: a.clone(),
            });
            match out {
                Ok(o)
                    if is_nz_flow(&g, &o.flow)
                        && verify_flow(&g, &o.flow).unwrap().nowhere_zero => {}
                Ok(_) => failures.push(format!("q={q}: unverified output")),
                Err(e) => failures.push(format!("q={q}: {e}")),
            }
            done += 1;
            total += 1;
        }
    }
    verdict(
        failures.is_empty(),
        format!(
            "{total} instances, {} failures {:?}",
            failures.len(),
            failures.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

const SHAPES: [(&str, [(usize, usize); 3]); 5] = [
    ("path", [(0, 1), (1, 2), (2, 3)]),
    ("triangle", [(0, 1), (1, 2), (2, 0)]),
    ("star", [(0, 1), (0, 2), (0, 3)]),
    ("three-parallel", [(0, 1), (0, 1), (0, 1)]),
    ("edge-plus-digon", [(0, 1), (1, 2), (1, 2)]),
];

/// Private edges of one side: random cycles through the shape's vertices
/// and `extra` vertices of its own, numbered from `first`.
fn union_side(rng: &mut ChaCha8Rng, first: usize, extra: usize) -> Vec<(usize, usize)> {
    let pool: Vec<usize> = (0..4).chain(first..first + extra).collect();
    let mut edges = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let len = rng.gen_range(2..=pool.len().min(5));
        let mut vs = pool.clone();
        vs.shuffle(rng);
        edges.extend((0..len).map(|i| (vs[i], vs[(i + 1) % len])));
    }
    edges
}

/// A random nowhere-zero 4-flow on the side `s` (in its own numbering).
fn side_flow(rng: &mut ChaCha8Rng, g: &MultiGraph, s: &EdgeSet) -> Option<nzflow::flow::Flow> {
    let sub = g.subgraph(s);
    random_nz_flow(rng, &sub.graph, &gf4(), 200).or_else(|| nz_found(&sub.graph, &gf4()))
}

fn union_theorem() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut failures = Vec::new();
    let mut with_fallback = 0;
    let mut steps: BTreeMap<String, usize> = BTreeMap::new();
    let mut per_shape: BTreeMap<&str, usize> = BTreeMap::new();
    let mut built = 0;
    while built < 100 {
        let (name, shape) = SHAPES[built % SHAPES.len()];
        let (x1, x2) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
        let p1 = union_side(&mut rng, 4, x1);
        // Every fifth path instance closes the 3-path into a 4-cycle.
        let p2 = if name == "path" && built % 25 == 0 {
            vec![(3, 0)]
        } else {
            union_side(&mut rng, 4 + x1, x2)
        };
        let mut edges = shape.to_vec();
        edges.extend(&p1);
        edges.extend(&p2);
        let g = MultiGraph::new(4 + x1 + x2, &edges).unwrap();
        let s1 = g.subset(0..3 + p1.len()).unwrap();
        let s2 = g.subset((0..3).chain(3 + p1.len()..edges.len())).unwrap();
        let (Some(f1), Some(f2)) = (side_flow(&mut rng, &g, &s1), side_flow(&mut rng, &g, &s2))
        else {
            continue;
        };
        built += 1;
        *per_shape.entry(name).or_default() += 1;
        match glue_four(&g, &s1, &s2, [Some(&f1), Some(&f2)]) {
            Ok(out) => {
                if !is_nz_flow(&g, &out.flow) {
                    failures.push(format!("{name}: unverified output"));
                }
                if out.report.fallback_searches > 0 {
                    with_fallback += 1;
                }
                for s in &out.report.steps {
                    let key = match s {
                        UnionStep::NonStar { .. } => "non-star".to_string(),
                        UnionStep::Evenly { .. } => "evenly".to_string(),
                        UnionStep::Fallback { .. } => "fallback".to_string(),
                        other => format!("{other:?}"),
                    };
                    *steps.entry(key).or_default() += 1;
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    let case_analysis_fired = with_fallback < built;
    let two_path_fired = steps.contains_key("SuppressTwoPath");
    verdict(
        failures.is_empty() && case_analysis_fired && two_path_fired,
        format!(
            "{built} instances {per_shape:?}, {} failures, {with_fallback} used fallback search, steps {steps:?}",
            failures.len()
        ),
    )
}

fn cover_theorem() -> Verdict {
    let c = |n| basic(BasicKind::Cycle, n);
    let k2 = basic(BasicKind::Complete, 2);
    let petersen = gen_basic(BasicKind::Petersen, None).unwrap();
    let cases = [
        ("C3xC3", cartesian_product(&c(3), &c(3)).graph),
        ("C3xC4", cartesian_product(&c(3), &c(4)).graph),
        ("C4xC4", cartesian_product(&c(4), &c(4)).graph),
        (
            "K2xK2xK2",
            cartesian_product(&cartesian_product(&k2, &k2).graph, &k2).graph,
        ),
        ("K2xPetersen", cartesian_product(&k2, &petersen).graph),
    ];
    let mut ok = Vec::new();
    let mut bad = Vec::new();
    for (name, g) in &cases {
        match cover4(g) {
            Ok(out) if is_nz_flow(g, &out.flow) => ok.push(*name),
            Ok(_) => bad.push(format!("{name}: unverified")),
            Err(e) => bad.push(format!("{name}: {e}")),
        }
    }
    let rejected = match cover4(&petersen) {
        Err(Error::Hypothesis(Hypothesis::NoShortCycle { edge })) => {
            petersen.find_short_cycle(edge, 4).is_none()
        }
        _ => false,
    };
    verdict(
        bad.is_empty() && rejected,
        format!(
            "verified {ok:?}; failures {bad:?}; Petersen rejected with a girth-5 edge: {rejected}"
        ),
    )
}

fn bundle_theorem() -> Verdict {
    let c = |n| basic(BasicKind::Cycle, n);
    let mut twisted = BundleSpec::untwisted(c(4), c(3));
    twisted.voltages[0] = vec![1, 2, 0];
    let mut specs = vec![twisted];
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let factors = [
        basic(BasicKind::Complete, 2),
        basic(BasicKind::Cycle, 2),
        basic(BasicKind::Cycle, 3),
        basic(BasicKind::Cycle, 4),
        basic(BasicKind::Path, 3),
        basic(BasicKind::Complete, 4),
    ];
    for _ in 0..20 {
        let base = factors.choose(&mut rng).unwrap().clone();
        let fiber = factors.choose(&mut rng).unwrap().clone();
        let autos = automorphisms(&fiber).unwrap();
        let voltages = (0..base.edge_count())
            .map(|_| autos.choose(&mut rng).unwrap().clone())
            .collect();
        specs.push(BundleSpec {
            base,
            fiber,
            voltages,
        });
    }
    let mut failures = Vec::new();
    for (i, spec) in specs.iter().enumerate() {
        let g = match cartesian_bundle(spec) {
            Ok(g) => g,
            Err(e) => {
                failures.push(format!("#{i}: {e}"));
                continue;
            }
        };
        if let Some(e) = (0..g.edge_count()).find(|&e| g.find_short_cycle(e, 4).is_none()) {
            failures.push(format!("#{i}: edge {e} on no short cycle"));
            continue;
        }
        match bundle_four(&g) {
            Ok(out) if is_nz_flow(&g, &out.flow) => {}
            Ok(_) => failures.push(format!("#{i}: unverified")),
            Err(e) => failures.push(format!("#{i}: {e}")),
        }
    }
    verdict(
        failures.is_empty(),
        format!(
            "{} bundles (1 twisted C4/C3 + 20 random), failures {failures:?}",
            specs.len()
        ),
    )
}

fn small_groups() -> Vec<Group> {
    ["z:2", "z:3", "z:4", "z:5", "gf:2:2"]
        .iter()
        .map(|d| make_group(d).unwrap())
        .collect()
}

fn random_scalar(rng: &mut ChaCha8Rng, a: &Group) -> Scalar {
    if a.is_field() && rng.gen_bool(0.5) {
        return Scalar::Field(random_element(rng, a));
    }
    if a.is_field() {
        let (p, d) = (a.base(), a.dimension() as usize);
        let rows: Vec<Vec<u32>> = (0..d)
            .map(|_| (0..d).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        Scalar::Endo(Endomorphism::matrix(p, &rows).unwrap())
    } else {
        Scalar::Endo(
            Endomorphism::multiplier(a.order(), rng.gen_range(0..a.order() as u64)).unwrap(),
        )
    }
}

fn module_laws() -> Verdict {
    let mut graphs = Vec::new();
    for n in 1..=4 {
        graphs.extend(all_multigraphs(n, 6).into_iter().filter(is_connected));
    }
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for a in small_groups() {
        for g in &graphs {
            let lib = count_flows(g, &a, 0).unwrap().count;
            let brute = brute_flow_count(g, &a) as u128;
            let formula = (a.order() as u128).pow(beta(g) as u32);
            checked += 1;
            if lib != brute || brute != formula {
                mismatches.push(format!("{} on {:?}", a.descriptor(), g.edges()));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let groups: Vec<Group> = small_groups()
        .into_iter()
        .chain(["gf:3:2", "gf:2:3", "gf:5:1"].map(|d| make_group(d).unwrap()))
        .collect();
    let mut axiom_failures = 0;
    for _ in 0..1000 {
        let g = graphs.choose(&mut rng).unwrap();
        let a = groups.choose(&mut rng).unwrap();
        let (f1, f2) = (random_flow(&mut rng, g, a), random_flow(&mut rng, g, a));
        let (r, s) = (random_scalar(&mut rng, a), random_scalar(&mut rng, a));
        let combo = module_combine(&[(r.clone(), &f1), (s.clone(), &f2)]).unwrap();
        let edgewise = (0..g.edge_count()).all(|e| {
            combo.values[e]
                == a.add(
                    r.apply(a, f1.values[e]).unwrap(),
                    s.apply(a, f2.values[e]).unwrap(),
                )
        });
        if !(edgewise && conserves(g, &combo)) {
            axiom_failures += 1;
        }
    }
    verdict(
        mismatches.is_empty() && axiom_failures == 0,
        format!(
            "{checked} (graph, group) counts, {} mismatches; 1000 module instances, {axiom_failures} failures",
            mismatches.len()
        ),
    )
}

fn equivalences() -> Verdict {
    let mut graphs = Vec::new();
    for n in 1..=4 {
        graphs.extend(all_multigraphs(n, 9).into_iter().filter(|g| beta(g) <= 5));
    }
    graphs.extend(all_multigraphs(5, 7).into_iter().filter(|g| beta(g) <= 5));
    let z4 = make_group("z:4").unwrap();
    let gf = gf4();
    let mut broken = Vec::new();
    let mut with_flow = 0;
    for g in &graphs {
        let f = nz_found(g, &gf);
        let nz_z4 = nz_found(g, &z4).is_some();
        let nz = f.is_some();
        with_flow += usize::from(nz);
        let parity = parity_decomposition_exists(g);
        let cover = even_cover_exists(g);
        let evenly = evenly_sigma_exists(g);
        if !(nz == nz_z4 && nz == parity && nz == cover && nz == evenly) {
            broken.push(format!(
                "{:?} nz={nz} z4={nz_z4} parity={parity} cover={cover} evenly={evenly}",
                g.edges()
            ));
            continue;
        }
        // Constructive directions through the library.
        if let Some(f) = f {
            let d = parity_from_flow(g, &f).unwrap();
            if d.check(g).is_err() || d.support() != g.full_set() {
                broken.push(format!("{:?}: bad decomposition", g.edges()));
            }
            let c1 = &(&d.parts[0] | &d.parts[2]).clone();
            if let EvenlyVerdict::Certificate(cert) = evenly_certificate(g, c1).unwrap() {
                let cover = even_cover_from_certificate(g, &cert).unwrap();
                if !is_nz_flow(g, &flow_from_even_cover(g, &cover).unwrap()) {
                    broken.push(format!("{:?}: bad even cover flow", g.edges()));
                }
            } else {
                broken.push(format!("{:?}: flow class union not evenly", g.edges()));
            }
        }
    }
    verdict(
        broken.is_empty(),
        format!(
            "{} multigraphs with cyclomatic number <= 5 ({with_flow} with NZ4), {} violations {:?}",
            graphs.len(),
            broken.len(),
            broken.iter().take(2).collect::<Vec<_>>()
        ),
    )
}

fn lifting() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut failures = Vec::new();
    let mut done = 0;
    while done < 100 {
        let k = [3u32, 4, 5, 6][done % 4];
        let a = make_group(&format!("z:{k}")).unwrap();
        let n = rng.gen_range(3..=7);
        let m = rng.gen_range(n..=14);
        let g = random_graph(&mut rng, n, m);
        let Some(f) = random_nz_flow(&mut rng, &g, &a, 300).or_else(|| nz_found(&g, &a)) else {
            continue;
        };
        done += 1;
        let h = match lift_integer(&g, &f) {
            Ok(h) => h,
            Err(e) => {
                failures.push(format!("k={k}: {e}"));
                continue;
            }
        };
        let k = k as i64;
        let congruent = (0..m).all(|e| {
            let x = if h.orientation.arc(e) == f.orientation.arc(e) {
                h.values[e]
            } else {
                -h.values[e]
            };
            x.rem_euclid(k) == f.values[e].index() as i64
        });
        let mut net = vec![0i64; n];
        for e in 0..m {
            let (t, hd) = h.orientation.arc(e);
            net[t] += h.values[e];
            net[hd] -= h.values[e];
        }
        let bounded = h.values.iter().all(|&x| x != 0 && x.abs() < k);
        let in_oracle = toggle_solutions(&g, &f).unwrap().contains(&h);
        if !(congruent && bounded && net.iter().all(|&x| x == 0) && in_oracle) {
            failures.push(format!("k={k} on {:?}", g.edges()));
        }
    }
    verdict(
        failures.is_empty(),
        format!(
            "{done} lifts, {} failures {:?}",
            failures.len(),
            failures.iter().take(2).collect::<Vec<_>>()
        ),
    )
}

type Criterion = (&'static str, fn() -> Verdict, Option<Duration>);

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "1 Petersen sharpness",
            petersen_sharpness,
            Some(Duration::from_secs(1)),
        ),
        (
            "2 gluing with few common edges",
            common_gluing,
            Some(Duration::from_secs(30)),
        ),
        (
            "3 union with three connected common edges",
            union_theorem,
            Some(Duration::from_secs(60)),
        ),
        (
            "4 short-cycle covers",
            cover_theorem,
            Some(Duration::from_secs(10)),
        ),
        (
            "5 Cartesian bundles",
            bundle_theorem,
            Some(Duration::from_secs(30)),
        ),
        ("6 module and flow-space laws", module_laws, None),
        ("7 4-flow equivalences", equivalences, None),
        ("8 integer lifting", lifting, None),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let v = run();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed < l);
        let pass = v.pass && in_time;
        failed += usize::from(!pass);
        let budget = limit.map_or(String::new(), |l| format!(" (limit {:.0?})", l));
        println!(
            "{} criterion {name}: {} [{:.2?}{budget}]",
            if pass { "PASS" } else { "FAIL" },
            v.detail,
            elapsed
        );
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
