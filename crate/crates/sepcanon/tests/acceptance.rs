//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Structural criteria run over an exhaustive corpus of connected
//! multigraphs with at most 5 vertices and 6 edges (up to isomorphism)
//! plus 500 seeded random instances, with independent union-find oracles
//! on the test side.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::LazyLock;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sepcanon::azimuth::{complete_triple, Azimuth, AzimuthError, AzimuthTriple, Rational};
use sepcanon::error::Error;
use sepcanon::graph::{CurveGraph, Edge, Vertex};
use sepcanon::hyperelliptic::{
    classify_2inseparable, classify_curve, BimarkFacts, ComponentFacts, ComponentVerdict,
    MiddleAzimuthData, ModuliOracle, OverallVerdict, TwoInsepClass,
};
use sepcanon::separators::{
    find_biseps, find_seps, maximal_polyseparators, separation_tree, two_separation,
};
use sepcanon::sepcanonical::{bridge_system, full_report};

// ---------------------------------------------------------------------------
// Corpus: encoded multigraphs plus the curve-graph view

#[derive(Debug, Clone)]
struct RawGraph {
    vertices: usize,
    /// Edges as vertex-index pairs (i <= j); i == j is a self-loop.
    edges: Vec<(usize, usize)>,
    genera: Vec<u32>,
}

impl RawGraph {
    fn to_curve(&self) -> CurveGraph {
        let vertices = (0..self.vertices)
            .map(|i| Vertex {
                id: format!("v{i}"),
                genus: self.genera[i],
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(k, &(i, j))| Edge {
                id: format!("e{k:02}"),
                ends: [format!("v{i}"), format!("v{j}")],
                half_edges: [format!("e{k:02}.0"), format!("e{k:02}.1")],
            })
            .collect();
        CurveGraph::new(vertices, edges).expect("corpus graph is valid")
    }
}

/// Union-find component count after deleting the edges in `skip` — the
/// independent connectivity oracle.
fn uf_components(vertices: usize, edges: &[(usize, usize)], skip: &[usize]) -> usize {
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn root(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for (k, &(i, j)) in edges.iter().enumerate() {
        if skip.contains(&k) {
            continue;
        }
        let (a, b) = (root(&mut parent, i), root(&mut parent, j));
        if a != b {
            parent[a] = b;
        }
    }
    (0..vertices)
        .map(|i| root(&mut parent, i))
        .collect::<BTreeSet<_>>()
        .len()
}

fn is_connected_raw(g: &RawGraph) -> bool {
    g.vertices > 0 && uf_components(g.vertices, &g.edges, &[]) == 1
}

/// Canonical form under vertex relabeling: the minimum, over all
/// permutations, of the sorted edge list.
fn canonical_form(vertices: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..vertices).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    permute(&mut perm, 0, &mut |p| {
        let mut mapped: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (p[i], p[j]);
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        mapped.sort();
        match &best {
            Some(b) if *b <= mapped => {}
            _ => best = Some(mapped),
        }
    });
    best.unwrap_or_default()
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// All connected multigraphs with <= 5 vertices and <= 6 edges, one
/// representative per isomorphism class, with deterministic genera.
fn enumerate_corpus() -> Vec<RawGraph> {
    let mut seen: BTreeSet<(usize, Vec<(usize, usize)>)> = BTreeSet::new();
    let mut out = Vec::new();
    for vertices in 1..=5usize {
        let mut slots = Vec::new();
        for i in 0..vertices {
            for j in i..vertices {
                slots.push((i, j));
            }
        }
        // Nondecreasing slot-index sequences = edge multisets.
        let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
        while let Some(chosen) = stack.pop() {
            let edges: Vec<(usize, usize)> = chosen.iter().map(|&s| slots[s]).collect();
            let raw = RawGraph {
                vertices,
                edges: edges.clone(),
                genera: (0..vertices).map(|i| (i % 3) as u32).collect(),
            };
            if is_connected_raw(&raw) {
                let canon = (vertices, canonical_form(vertices, &edges));
                if seen.insert(canon) {
                    out.push(raw);
                }
            }
            if chosen.len() < 6 {
                let start = chosen.last().copied().unwrap_or(0);
                for s in start..slots.len() {
                    let mut next = chosen.clone();
                    next.push(s);
                    stack.push(next);
                }
            }
        }
    }
    out
}

fn random_corpus(count: usize) -> Vec<RawGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eca_2026);
    let mut out = Vec::new();
    while out.len() < count {
        let vertices = rng.gen_range(2..=5);
        let edge_count = rng.gen_range(1..=6);
        let edges: Vec<(usize, usize)> = (0..edge_count)
            .map(|_| {
                let i = rng.gen_range(0..vertices);
                let j = rng.gen_range(0..vertices);
                if i <= j {
                    (i, j)
                } else {
                    (j, i)
                }
            })
            .collect();
        let genera = (0..vertices).map(|_| rng.gen_range(0..=2)).collect();
        let raw = RawGraph {
            vertices,
            edges,
            genera,
        };
        if is_connected_raw(&raw) {
            out.push(raw);
        }
    }
    out
}

static CORPUS: LazyLock<Vec<RawGraph>> = LazyLock::new(|| {
    let mut corpus = enumerate_corpus();
    corpus.extend(random_corpus(500));
    corpus
});

// ---------------------------------------------------------------------------
// Criterion 1: cut-oracle equivalence

#[test]
fn criterion_1_cut_oracle_equivalence() {
    let start = Instant::now();
    let mut graphs = 0usize;
    for raw in CORPUS.iter() {
        let g = raw.to_curve();
        let m = raw.edges.len();

        // Independent sep oracle: single-edge removal, union-find.
        let mut oracle_seps: BTreeSet<String> = BTreeSet::new();
        for k in 0..m {
            if raw.edges[k].0 != raw.edges[k].1 && uf_components(raw.vertices, &raw.edges, &[k]) > 1
            {
                oracle_seps.insert(format!("e{k:02}"));
            }
        }
        let found_seps: BTreeSet<String> = find_seps(&g)
            .unwrap()
            .into_iter()
            .map(|s| s.edges[0].clone())
            .collect();
        assert_eq!(found_seps, oracle_seps, "seps disagree on {raw:?}");

        // Independent bisep oracle: pair removal of non-sep, non-loop edges.
        let mut oracle_biseps: BTreeSet<(String, String)> = BTreeSet::new();
        for a in 0..m {
            for b in a + 1..m {
                let ea = format!("e{a:02}");
                let eb = format!("e{b:02}");
                if raw.edges[a].0 == raw.edges[a].1 || raw.edges[b].0 == raw.edges[b].1 {
                    continue;
                }
                if oracle_seps.contains(&ea) || oracle_seps.contains(&eb) {
                    continue;
                }
                if uf_components(raw.vertices, &raw.edges, &[a, b]) > 1 {
                    oracle_biseps.insert((ea, eb));
                }
            }
        }
        let found_biseps: BTreeSet<(String, String)> = find_biseps(&g)
            .unwrap()
            .into_iter()
            .map(|s| (s.edges[0].clone(), s.edges[1].clone()))
            .collect();
        assert_eq!(found_biseps, oracle_biseps, "biseps disagree on {raw:?}");

        // Spot-check partitions: each side is one union-find component.
        for s in find_seps(&g).unwrap() {
            let k = raw
                .edges
                .iter()
                .enumerate()
                .position(|(k, _)| format!("e{k:02}") == s.edges[0])
                .unwrap();
            assert_eq!(uf_components(raw.vertices, &raw.edges, &[k]), 2);
            assert_eq!(s.left.len() + s.right.len(), raw.vertices);
        }
        graphs += 1;
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "criterion 1 took {elapsed:?}, budget is 60 s"
    );
    println!("criterion 1 PASS: cut-oracle equivalence on {graphs} graphs in {elapsed:?}");
}

// ---------------------------------------------------------------------------
// Criterion 2: structural-invariant suite

#[test]
fn criterion_2_structural_invariant_suite() {
    let mut graphs = 0usize;
    for raw in CORPUS.iter() {
        let g = raw.to_curve();
        let biseps = find_biseps(&g).unwrap();
        let bisep_pairs: BTreeSet<(String, String)> = biseps
            .iter()
            .map(|s| (s.edges[0].clone(), s.edges[1].clone()))
            .collect();

        // Maximal polyseparators: pairwise disjoint, pairwise-bisep inside,
        // covering every bisep exactly once, and n-gon shaped.
        let polyseps = maximal_polyseparators(&g).unwrap();
        let mut covered: BTreeSet<String> = BTreeSet::new();
        for p in &polyseps {
            for e in &p.edges {
                assert!(covered.insert(e.clone()), "polyseparators overlap on {e}");
            }
            for (x, a) in p.edges.iter().enumerate() {
                for b in p.edges.iter().skip(x + 1) {
                    let key = if a < b {
                        (a.clone(), b.clone())
                    } else {
                        (b.clone(), a.clone())
                    };
                    assert!(
                        bisep_pairs.contains(&key),
                        "pair {key:?} inside a polyseparator is not a bisep"
                    );
                }
            }
            // n-gon: removing the class leaves exactly degree-many parts,
            // each incident to exactly two class edges.
            let skip: Vec<usize> = p
                .edges
                .iter()
                .map(|e| e.trim_start_matches('e').parse::<usize>().unwrap())
                .collect();
            assert_eq!(
                uf_components(raw.vertices, &raw.edges, &skip),
                p.degree(),
                "part count is not the degree for {p:?}"
            );
            assert_eq!(p.parts.len(), p.degree());
            for (i, part) in p.parts.iter().enumerate() {
                let touching = p
                    .edges
                    .iter()
                    .filter(|eid| {
                        let e = g.edge(eid).unwrap();
                        e.ends.iter().any(|v| part.contains(v))
                    })
                    .count();
                assert_eq!(touching, 2, "part {i} of {p:?} touches {touching} edges");
                // Cyclic arrangement: parts[i] touches edges[i] and [i+1].
                for off in [0, 1] {
                    let e = g.edge(&p.edges[(i + off) % p.degree()]).unwrap();
                    assert!(e.ends.iter().any(|v| part.contains(v)));
                }
            }
        }
        for (a, b) in &bisep_pairs {
            let homes = polyseps
                .iter()
                .filter(|p| p.contains_edge(a) && p.contains_edge(b))
                .count();
            assert_eq!(homes, 1, "bisep ({a},{b}) lies in {homes} maximal classes");
        }

        // Adjacency: on inseparable curves the direct inseparable-side test
        // agrees with cyclic consecutiveness (checked inside adjacency_check
        // on every call), and maximal biseps are adjacent both ways.
        let inseparable = find_seps(&g).unwrap().is_empty();
        for b in &biseps {
            let forward = sepcanon::separators::adjacency_check(&g, b).unwrap();
            let backward = sepcanon::separators::adjacency_check(&g, &b.flipped()).unwrap();
            let home = polyseps
                .iter()
                .find(|p| p.contains_edge(&b.edges[0]))
                .unwrap();
            if inseparable && home.degree() == 2 {
                assert!(forward && backward, "maximal bisep {} not adjacent", b.id());
            }
        }

        // Separation tree: connected and acyclic.
        let tree = separation_tree(&g).unwrap();
        assert_eq!(tree.edges.len() + 1, tree.vertices.len());
        let index: BTreeMap<&str, usize> = tree
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.id.as_str(), i))
            .collect();
        let tree_edges: Vec<(usize, usize)> = tree
            .edges
            .iter()
            .map(|e| {
                (
                    index[e.endpoints[0].as_str()],
                    index[e.endpoints[1].as_str()],
                )
            })
            .collect();
        assert_eq!(uf_components(tree.vertices.len(), &tree_edges, &[]), 1);

        // 2-components: no internal sep, no internal parent-bisep edge, and
        // 2-inseparable relative to the marks. Component edges and blown
        // cut edges together partition the edge set.
        let sep_ids: BTreeSet<String> = find_seps(&g)
            .unwrap()
            .into_iter()
            .map(|s| s.edges[0].clone())
            .collect();
        let bisep_edges: BTreeSet<&String> = biseps.iter().flat_map(|b| &b.edges).collect();
        let separation = sepcanon::separators::two_separation_full(&g).unwrap();
        let mut seen_edges: BTreeSet<String> = separation
            .cuts
            .iter()
            .flat_map(|c| c.star.edges.iter().cloned())
            .collect();
        for comp in &separation.components {
            for e in comp.subgraph.edges() {
                assert!(
                    seen_edges.insert(e.id.clone()),
                    "edge {} counted twice across cuts and components",
                    e.id
                );
            }
        }
        assert_eq!(seen_edges.len(), raw.edges.len());
        for comp in two_separation(&g).unwrap() {
            let sub = &comp.subgraph;
            let names: Vec<&str> = sub.vertices().iter().map(|v| v.id.as_str()).collect();
            let local: Vec<(usize, usize)> = sub
                .edges()
                .iter()
                .map(|e| {
                    let i = names.iter().position(|n| *n == e.ends[0]).unwrap();
                    let j = names.iter().position(|n| *n == e.ends[1]).unwrap();
                    (i.min(j), i.max(j))
                })
                .collect();
            for e in sub.edges() {
                assert!(
                    !sep_ids.contains(&e.id) && !bisep_edges.contains(&e.id),
                    "2-component {} kept *-sep edge {}",
                    comp.id,
                    e.id
                );
            }
            for k in 0..local.len() {
                assert_eq!(
                    uf_components(names.len(), &local, &[k]),
                    1,
                    "2-component {} has an internal sep",
                    comp.id
                );
            }
            // Relative 2-inseparability: any internal pair that disconnects
            // the component must have mark support on both sides.
            let support: BTreeSet<usize> = comp
                .mark_support()
                .iter()
                .map(|v| names.iter().position(|n| n == v).unwrap())
                .collect();
            for a in 0..local.len() {
                for b in a + 1..local.len() {
                    if local[a].0 == local[a].1 || local[b].0 == local[b].1 {
                        continue;
                    }
                    if uf_components(names.len(), &local, &[a, b]) > 1 {
                        // Recover the two sides.
                        let sides = component_sides(names.len(), &local, &[a, b]);
                        for side in sides {
                            assert!(
                                side.iter().any(|v| support.contains(v)),
                                "2-component {} bisep misses mark support",
                                comp.id
                            );
                        }
                    }
                }
            }
        }
        graphs += 1;
    }
    println!("criterion 2 PASS: structural invariants hold on {graphs} graphs");
}

fn component_sides(
    vertices: usize,
    edges: &[(usize, usize)],
    skip: &[usize],
) -> Vec<BTreeSet<usize>> {
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn root(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for (k, &(i, j)) in edges.iter().enumerate() {
        if skip.contains(&k) {
            continue;
        }
        let (a, b) = (root(&mut parent, i), root(&mut parent, j));
        if a != b {
            parent[a] = b;
        }
    }
    let mut groups: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..vertices {
        let r = root(&mut parent, i);
        groups.entry(r).or_default().insert(i);
    }
    groups.into_values().collect()
}

// ---------------------------------------------------------------------------
// Criterion 3: genus accounting

#[test]
fn criterion_3_genus_accounting() {
    let mut blowups = 0usize;
    for raw in CORPUS.iter() {
        let g = raw.to_curve();
        let pa = g.arithmetic_genus();

        // The blowups criteria 1-2 perform: the full 2-separation, the tree
        // blowup, and each maximal polyseparator.
        let mut blown_sets: Vec<BTreeSet<String>> = Vec::new();
        let seps: BTreeSet<String> = find_seps(&g)
            .unwrap()
            .into_iter()
            .map(|s| s.edges[0].clone())
            .collect();
        let biseps = find_biseps(&g).unwrap();
        let mut two_sep: BTreeSet<String> = seps.clone();
        for b in &biseps {
            two_sep.extend(b.edges.iter().cloned());
        }
        blown_sets.push(two_sep);
        let polyseps = maximal_polyseparators(&g).unwrap();
        let mut tree_set: BTreeSet<String> = seps.clone();
        for p in polyseps.iter().filter(|p| p.degree() == 2) {
            tree_set.extend(p.edges.iter().cloned());
        }
        blown_sets.push(tree_set);
        for p in &polyseps {
            blown_sets.push(p.edges.iter().cloned().collect());
        }

        for set in blown_sets {
            let blown = g.blowup(&set).unwrap();
            let comps = blown.split_components();
            let genus_sum: i64 = comps.iter().map(|c| c.arithmetic_genus()).sum();
            assert_eq!(
                genus_sum,
                pa - set.len() as i64 + (comps.len() as i64 - 1),
                "accounting fails on {raw:?} blowing {set:?}"
            );
            blowups += 1;
        }
    }
    println!("criterion 3 PASS: genus accounting exact over {blowups} blowups");
}

// ---------------------------------------------------------------------------
// Criterion 4: interlace arithmetic

#[test]
fn criterion_4_interlace_arithmetic() {
    for r in 3..=6usize {
        let vertices = vec![
            Vertex {
                id: "A".into(),
                genus: 0,
            },
            Vertex {
                id: "B".into(),
                genus: 0,
            },
        ];
        let edges = (0..r)
            .map(|i| Edge {
                id: format!("e{i}"),
                ends: ["A".into(), "B".into()],
                half_edges: [format!("e{i}.0"), format!("e{i}.1")],
            })
            .collect();
        let g = CurveGraph::new(vertices, edges).unwrap();
        assert_eq!(g.arithmetic_genus(), r as i64 - 1);
        let facts = ComponentFacts {
            is_true_interlace: Some(true),
            ..Default::default()
        };
        assert_eq!(
            classify_2inseparable(&g, Some(&facts), "A+B").unwrap(),
            TwoInsepClass::Interlace
        );
        let facts = ComponentFacts {
            is_true_interlace: Some(false),
            ..Default::default()
        };
        assert_eq!(
            classify_2inseparable(&g, Some(&facts), "A+B").unwrap(),
            TwoInsepClass::VeryAmple
        );
    }
    println!("criterion 4 PASS: interlace genus and classification for r=3..6");
}

// ---------------------------------------------------------------------------
// Criterion 5: azimuth algebra

#[test]
fn criterion_5_azimuth_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa21_2026);
    let random_nonzero = |rng: &mut ChaCha8Rng| -> Rational {
        loop {
            let num = rng.gen_range(-20i64..=20);
            if num == 0 {
                continue;
            }
            let den = rng.gen_range(1i64..=20);
            return Rational::new(num.into(), den.into());
        }
    };
    for _ in 0..1000 {
        let left = Azimuth::new(random_nonzero(&mut rng), random_nonzero(&mut rng)).unwrap();
        let right = Azimuth::new(random_nonzero(&mut rng), random_nonzero(&mut rng)).unwrap();
        let middle = left.compose(&right).unwrap();

        // Completing from any two entries reproduces the third exactly.
        let solve_right = complete_triple(&AzimuthTriple {
            left: Some(left.clone()),
            middle: Some(middle.clone()),
            right: None,
            bisep: String::new(),
        })
        .unwrap();
        assert_eq!(solve_right.right.as_ref(), Some(&right));
        let solve_left = complete_triple(&AzimuthTriple {
            left: None,
            middle: Some(middle.clone()),
            right: Some(right.clone()),
            bisep: String::new(),
        })
        .unwrap();
        assert_eq!(solve_left.left.as_ref(), Some(&left));
        let solve_middle = complete_triple(&AzimuthTriple {
            left: Some(left.clone()),
            middle: None,
            right: Some(right.clone()),
            bisep: String::new(),
        })
        .unwrap();
        assert_eq!(solve_middle.middle.as_ref(), Some(&middle));
    }

    // Singular cases behave as specified.
    let h = |a: i64, b: i64| Azimuth::from_integers(a, b).unwrap();
    assert_eq!(
        h(1, 0).compose(&h(0, 1)),
        Err(AzimuthError::IncompatibleSingular)
    );
    let t = |l: Option<Azimuth>, m: Option<Azimuth>, r: Option<Azimuth>| AzimuthTriple {
        left: l,
        middle: m,
        right: r,
        bisep: String::new(),
    };
    // Two singular inputs never determine a third.
    assert_eq!(
        complete_triple(&t(Some(h(1, 0)), None, Some(h(1, 0)))),
        Err(AzimuthError::BothSingular)
    );
    assert_eq!(
        complete_triple(&t(Some(h(1, 0)), None, Some(h(0, 1)))),
        Err(AzimuthError::BothSingular)
    );
    assert_eq!(
        complete_triple(&t(Some(h(1, 0)), Some(h(1, 0)), None)),
        Err(AzimuthError::BothSingular)
    );
    // A singular factor cannot produce a regular or opposite product.
    assert_eq!(
        complete_triple(&t(Some(h(1, 0)), Some(h(0, 1)), None)),
        Err(AzimuthError::InconsistentSingular)
    );
    assert_eq!(
        complete_triple(&t(Some(h(1, 0)), Some(h(2, 3)), None)),
        Err(AzimuthError::InconsistentSingular)
    );
    assert_eq!(
        complete_triple(&t(None, Some(h(5, 7)), Some(h(0, 1)))),
        Err(AzimuthError::InconsistentSingular)
    );
    // Arity errors.
    assert_eq!(
        complete_triple(&t(Some(h(1, 1)), None, None)),
        Err(AzimuthError::UnderDetermined)
    );
    assert_eq!(
        complete_triple(&t(Some(h(1, 1)), Some(h(1, 1)), Some(h(1, 1)))),
        Err(AzimuthError::OverDetermined)
    );
    println!("criterion 5 PASS: 1000 exact round-trips and all singular error cases");
}

// ---------------------------------------------------------------------------
// Criterion 6: hyperelliptic dichotomy on a curated corpus

struct Curated {
    name: &'static str,
    graph: CurveGraph,
    oracle: ModuliOracle,
    middles: MiddleAzimuthData,
    expect: OverallVerdict,
}

fn az(a: i64, b: i64) -> Azimuth {
    Azimuth::from_integers(a, b).unwrap()
}

fn vx(id: &str, genus: u32) -> Vertex {
    Vertex {
        id: id.into(),
        genus,
    }
}

fn ed(id: &str, a: &str, b: &str) -> Edge {
    Edge {
        id: id.into(),
        ends: [a.into(), b.into()],
        half_edges: [format!("{id}.0"), format!("{id}.1")],
    }
}

fn graph(vertices: Vec<Vertex>, edges: Vec<Edge>) -> CurveGraph {
    CurveGraph::new(vertices, edges).unwrap()
}

fn hyp_comp(weierstrass: &[(&str, bool)]) -> ComponentFacts {
    let mut f = ComponentFacts {
        is_hyperelliptic: Some(true),
        ..Default::default()
    };
    for (he, flag) in weierstrass {
        f.weierstrass.insert((*he).into(), *flag);
    }
    f
}

fn bimark_facts(key: &str, divisor: bool, azimuth: Option<Azimuth>) -> ComponentFacts {
    let mut f = ComponentFacts {
        is_hyperelliptic: Some(true),
        ..Default::default()
    };
    f.bimarks.insert(
        key.into(),
        BimarkFacts {
            is_hyperelliptic_divisor: divisor,
            hyperelliptic_azimuth: azimuth,
        },
    );
    f
}

fn curated_corpus() -> Vec<Curated> {
    let mut cases = Vec::new();
    let dumbbell22 = || graph(vec![vx("A", 2), vx("B", 2)], vec![ed("t1", "A", "B")]);

    // 1-2: the dumbbell family.
    let mut oracle = ModuliOracle::default();
    oracle
        .components
        .insert("A".into(), hyp_comp(&[("t1.0", true)]));
    oracle
        .components
        .insert("B".into(), hyp_comp(&[("t1.1", true)]));
    cases.push(Curated {
        name: "dumbbell both Weierstrass",
        graph: dumbbell22(),
        oracle: oracle.clone(),
        middles: MiddleAzimuthData::default(),
        expect: OverallVerdict::Hyperelliptic,
    });
    let mut broken = oracle.clone();
    broken
        .components
        .insert("B".into(), hyp_comp(&[("t1.1", false)]));
    cases.push(Curated {
        name: "dumbbell one mark off the g12",
        graph: dumbbell22(),
        oracle: broken,
        middles: MiddleAzimuthData::default(),
        expect: OverallVerdict::NotHyperelliptic,
    });

    // 3-4: genus 2 + genus 3 dumbbell, oracle decides the genus-3 side.
    let dumbbell23 = || graph(vec![vx("A", 2), vx("B", 3)], vec![ed("t1", "A", "B")]);
    let mut oracle = ModuliOracle::default();
    oracle
        .components
        .insert("A".into(), hyp_comp(&[("t1.0", true)]));
    oracle
        .components
        .insert("B".into(), hyp_comp(&[("t1.1", true)]));
    cases.push(Curated {
        name: "genus-2/3 dumbbell hyperelliptic",
        graph: dumbbell23(),
        oracle: oracle.clone(),
        middles: MiddleAzimuthData::default(),
        expect: OverallVerdict::Hyperelliptic,
    });
    let mut broken = oracle.clone();
    let mut b_facts = hyp_comp(&[("t1.1", true)]);
    b_facts.is_hyperelliptic = Some(false);
    b_facts.weierstrass.clear();
    broken.components.insert("B".into(), b_facts);
    cases.push(Curated {
        name: "genus-2/3 dumbbell, genus-3 side not hyperelliptic",
        graph: dumbbell23(),
        oracle: broken,
        middles: MiddleAzimuthData::default(),
        expect: OverallVerdict::NotHyperelliptic,
    });

    // 5-7: sep chains, including a low-genus middle component.
    let chain222 = || {
        graph(
            vec![vx("V0", 2), vx("V1", 2), vx("V2", 2)],
            vec![ed("s0", "V0", "V1"), ed("s1", "V1", "V2")],
        )
    };
    let mut oracle = ModuliOracle::default();
    oracle
        .components
        .insert("V0".into(), hyp_comp(&[("s0.0", true)]));
    oracle
        .components
        .insert("V1".into(), hyp_comp(&[("s0.1", true), ("s1.0", true)]));
    oracle
        .components
        .insert("V2".into(), hyp_comp(&[("s1.1", true)]));
    cases.push(Curated {
        name: "chain of three genus-2",
        graph: chain222(),
        oracle,
        middles: MiddleAzimuthData::default(),
        expect: OverallVerdict::Hyperelliptic,
    });
    let chain212 = || {
        graph(
            vec![vx("V0", 2), vx("V1", 1), vx("V2", 2)],
            vec![ed("s0", "V0", "V1"), ed("s1", "V1", "V2")],
        )
    };
    let low_genus_middle = |v1_flags: &[(&str, bool)]| {
        let mut oracle = ModuliOracle::default();
        oracle
            .components
            .insert("V0".into(), hyp_comp(&[("s0.0", true)]));
        let mut v1 = ComponentFacts::default();
        for (he, flag) in v1_flags {
            v1.weierstrass.insert((*he).into(), *flag);
        }
        oracle.components.insert("V1".into(), v1);
        oracle
            .components
            .insert("V2".into(), hyp_comp(&[("s1.1", true)]));
        oracle
    };
    cases.push(Curated {
        name: "chain with genus-1 middle, all marks in the g12",
        graph: chain212(),
        oracle: low_genus_middle(&[("s0.1", true), ("s1.0", true)]),
        middles: MiddleAzimuthData::default(),
        expect: OverallVerdict::Hyperelliptic,
    });
    cases.push(Curated {
        name: "chain with genus-1 middle, one mark off",
        graph: chain212(),
        oracle: low_genus_middle(&[("s0.1", true), ("s1.0", false)]),
        middles: MiddleAzimuthData::default(),
        expect: OverallVerdict::NotHyperelliptic,
    });

    // 8-10: the maximal-bisep family with azimuths.
    let bisep_pair = || {
        graph(
            vec![vx("A", 2), vx("B", 2)],
            vec![ed("e0", "A", "B"), ed("e1", "A", "B")],
        )
    };
    let bisep_oracle = |a_div: bool, b_div: bool| {
        let mut oracle = ModuliOracle::default();
        oracle.components.insert(
            "A".into(),
            bimark_facts("e0.0+e1.0", a_div, a_div.then(|| az(2, 1))),
        );
        oracle.components.insert(
            "B".into(),
            bimark_facts("e0.1+e1.1", b_div, b_div.then(|| az(3, 1))),
        );
        oracle
    };
    let mut middles = MiddleAzimuthData::default();
    middles.middles.insert("e0+e1".into(), az(6, 1));
    cases.push(Curated {
        name: "bisep pair with hyperelliptic middle azimuth",
        graph: bisep_pair(),
        oracle: bisep_oracle(true, true),
        middles: middles.clone(),
        expect: OverallVerdict::Hyperelliptic,
    });
    let mut wrong = MiddleAzimuthData::default();
    wrong.middles.insert("e0+e1".into(), az(5, 1));
    cases.push(Curated {
        name: "bisep pair with mismatched middle azimuth",
        graph: bisep_pair(),
        oracle: bisep_oracle(true, true),
        middles: wrong,
        expect: OverallVerdict::NotHyperelliptic,
    });
    cases.push(Curated {
        name: "bisep pair, one side not a hyperelliptic divisor",
        graph: bisep_pair(),
        oracle: bisep_oracle(true, false),
        middles: middles.clone(),
        expect: OverallVerdict::NotHyperelliptic,
    });

    // 11-12: proper polyseparators are never hyperelliptic.
    cases.push(Curated {
        name: "triangle of genus-1",
        graph: graph(
            vec![vx("A", 1), vx("B", 1), vx("C", 1)],
            vec![ed("ab", "A", "B"), ed("bc", "B", "C"), ed("ca", "C", "A")],
        ),
        oracle: ModuliOracle::default(),
        middles: MiddleAzimuthData::default(),
        expect: OverallVerdict::NotHyperelliptic,
    });
    cases.push(Curated {
        name: "square of genus-1",
        graph: graph(
            vec![vx("A", 1), vx("B", 1), vx("C", 1), vx("D", 1)],
            vec![
                ed("ab", "A", "B"),
                ed("bc", "B", "C"),
                ed("cd", "C", "D"),
                ed("da", "D", "A"),
            ],
        ),
        oracle: ModuliOracle::default(),
        middles: MiddleAzimuthData::default(),
        expect: OverallVerdict::NotHyperelliptic,
    });

    // 13-15: interlaces.
    let interlace = |r: usize| {
        let edges = (0..r).map(|i| ed(&format!("e{i}"), "A", "B")).collect();
        graph(vec![vx("A", 0), vx("B", 0)], edges)
    };
    let interlace_oracle = |flag: bool| {
        let mut oracle = ModuliOracle::default();
        oracle.components.insert(
            "A+B".into(),
            ComponentFacts {
                is_true_interlace: Some(flag),
                ..Default::default()
            },
        );
        oracle
    };
    cases.push(Curated {
        name: "true r=3 interlace",
        graph: interlace(3),
        oracle: interlace_oracle(true),
        middles: MiddleAzimuthData::default(),
        expect: OverallVerdict::Hyperelliptic,
    });
    cases.push(Curated {
        name: "false r=3 interlace",
        graph: interlace(3),
        oracle: interlace_oracle(false),
        middles: MiddleAzimuthData::default(),
        expect: OverallVerdict::NotHyperelliptic,
    });
    cases.push(Curated {
        name: "true r=4 interlace",
        graph: interlace(4),
        oracle: interlace_oracle(true),
        middles: MiddleAzimuthData::default(),
        expect: OverallVerdict::Hyperelliptic,
    });

    // 16-18: irreducible curves.
    let single = |genus: u32, loops: usize| {
        let edges = (0..loops).map(|i| ed(&format!("l{i}"), "A", "A")).collect();
        graph(vec![vx("A", genus)], edges)
    };
    let single_oracle = |flag: bool| {
        let mut oracle = ModuliOracle::default();
        oracle.components.insert(
            "A".into(),
            ComponentFacts {
                is_hyperelliptic: Some(flag),
                ..Default::default()
            },
        );
        oracle
    };
    cases.push(Curated {
        name: "smooth genus-3 hyperelliptic",
        graph: single(3, 0),
        oracle: single_oracle(true),
        middles: MiddleAzimuthData::default(),
        expect: OverallVerdict::Hyperelliptic,
    });
    cases.push(Curated {
        name: "smooth genus-3 non-hyperelliptic",
        graph: single(3, 0),
        oracle: single_oracle(false),
        middles: MiddleAzimuthData::default(),
        expect: OverallVerdict::NotHyperelliptic,
    });
    cases.push(Curated {
        name: "genus-2 vertex with a loop, identified pair in the g12",
        graph: single(2, 1),
        oracle: single_oracle(true),
        middles: MiddleAzimuthData::default(),
        expect: OverallVerdict::Hyperelliptic,
    });

    // 19: semistable bridge contracts onto the dumbbell oracle ids.
    let semistable = graph(
        vec![vx("A", 2), vx("M", 0), vx("B", 2)],
        vec![ed("s0", "A", "M"), ed("s1", "M", "B")],
    );
    let mut oracle = ModuliOracle::default();
    oracle
        .components
        .insert("A".into(), hyp_comp(&[("s0.0", true)]));
    oracle
        .components
        .insert("B".into(), hyp_comp(&[("s0.1", true)]));
    cases.push(Curated {
        name: "semistable bridge over two genus-2 sides",
        graph: semistable,
        oracle,
        middles: MiddleAzimuthData::default(),
        expect: OverallVerdict::Hyperelliptic,
    });

    // 20-21: mixed sep + bisep tree.
    let mixed = || {
        graph(
            vec![vx("A", 2), vx("B", 2), vx("C", 2)],
            vec![ed("s", "A", "B"), ed("p0", "B", "C"), ed("p1", "B", "C")],
        )
    };
    let mixed_oracle = || {
        let mut oracle = ModuliOracle::default();
        oracle
            .components
            .insert("A".into(), hyp_comp(&[("s.0", true)]));
        let mut b = hyp_comp(&[("s.1", true)]);
        b.bimarks.insert(
            "p0.0+p1.0".into(),
            BimarkFacts {
                is_hyperelliptic_divisor: true,
                hyperelliptic_azimuth: Some(az(1, 1)),
            },
        );
        oracle.components.insert("B".into(), b);
        oracle
            .components
            .insert("C".into(), bimark_facts("p0.1+p1.1", true, Some(az(3, 1))));
        oracle
    };
    let mut middles = MiddleAzimuthData::default();
    middles.middles.insert("p0+p1".into(), az(3, 1));
    cases.push(Curated {
        name: "sep plus maximal bisep, all hyperelliptic",
        graph: mixed(),
        oracle: mixed_oracle(),
        middles,
        expect: OverallVerdict::Hyperelliptic,
    });
    let mut bad_middles = MiddleAzimuthData::default();
    bad_middles.middles.insert("p0+p1".into(), az(1, 1));
    cases.push(Curated {
        name: "sep plus maximal bisep, wrong middle azimuth",
        graph: mixed(),
        oracle: mixed_oracle(),
        middles: bad_middles,
        expect: OverallVerdict::NotHyperelliptic,
    });

    // 22: a rational spine with three branches breaks hyperellipticity.
    let star = graph(
        vec![vx("S", 0), vx("E1", 1), vx("E2", 1), vx("E3", 1)],
        vec![ed("a", "S", "E1"), ed("b", "S", "E2"), ed("c", "S", "E3")],
    );
    let mut oracle = ModuliOracle::default();
    let mut s_facts = ComponentFacts::default();
    for (he, flag) in [("a.0", true), ("b.0", true), ("c.0", false)] {
        s_facts.weierstrass.insert(he.into(), flag);
    }
    oracle.components.insert("S".into(), s_facts);
    for (comp, he) in [("E1", "a.1"), ("E2", "b.1"), ("E3", "c.1")] {
        let mut f = ComponentFacts::default();
        f.weierstrass.insert(he.into(), true);
        oracle.components.insert(comp.into(), f);
    }
    cases.push(Curated {
        name: "rational spine star, one mark off",
        graph: star,
        oracle,
        middles: MiddleAzimuthData::default(),
        expect: OverallVerdict::NotHyperelliptic,
    });

    // 23: a sep into a triangle side is blocked by the polyseparator.
    let sep_into_triangle = graph(
        vec![vx("A", 2), vx("B", 1), vx("C", 1), vx("D", 1)],
        vec![
            ed("s", "A", "B"),
            ed("bc", "B", "C"),
            ed("cd", "C", "D"),
            ed("db", "D", "B"),
        ],
    );
    let mut oracle = ModuliOracle::default();
    oracle
        .components
        .insert("A".into(), hyp_comp(&[("s.0", true)]));
    let mut b = ComponentFacts::default();
    b.weierstrass.insert("s.1".into(), true);
    oracle.components.insert("B".into(), b);
    cases.push(Curated {
        name: "sep into a polyseparator side",
        graph: sep_into_triangle,
        oracle,
        middles: MiddleAzimuthData::default(),
        expect: OverallVerdict::NotHyperelliptic,
    });

    // 24: two triangles joined by a sep. The corner components are
    // pseudo-hyperelliptic (genus 1), so the sep's marks still need their
    // flags even though the polyseparators already settle the verdict.
    let two_triangles = graph(
        vec![
            vx("A", 1),
            vx("B", 1),
            vx("C", 1),
            vx("D", 1),
            vx("E", 1),
            vx("F", 1),
        ],
        vec![
            ed("ab", "A", "B"),
            ed("bc", "B", "C"),
            ed("ca", "C", "A"),
            ed("s", "A", "D"),
            ed("de", "D", "E"),
            ed("ef", "E", "F"),
            ed("fd", "F", "D"),
        ],
    );
    let mut oracle = ModuliOracle::default();
    for (comp, he) in [("A", "s.0"), ("D", "s.1")] {
        let mut f = ComponentFacts::default();
        f.weierstrass.insert(he.into(), false);
        oracle.components.insert(comp.into(), f);
    }
    cases.push(Curated {
        name: "two triangles over a sep",
        graph: two_triangles,
        oracle,
        middles: MiddleAzimuthData::default(),
        expect: OverallVerdict::NotHyperelliptic,
    });

    // 25: a nonseparating bridge; the stable model is a genus-1 vertex
    // with a self-loop, irreducible of arithmetic genus 2, hyperelliptic
    // with no oracle input at all.
    cases.push(Curated {
        name: "nonseparating bridge cycle",
        graph: graph(
            vec![vx("A", 1), vx("M", 0)],
            vec![ed("e1", "A", "M"), ed("e2", "A", "M")],
        ),
        oracle: ModuliOracle::default(),
        middles: MiddleAzimuthData::default(),
        expect: OverallVerdict::Hyperelliptic,
    });

    // 26-27: an interlace as the far side of a maximal bisep.
    let interlace_side = || {
        graph(
            vec![vx("A", 2), vx("B", 0), vx("C", 0)],
            vec![
                ed("d0", "A", "B"),
                ed("d1", "A", "B"),
                ed("i0", "B", "C"),
                ed("i1", "B", "C"),
                ed("i2", "B", "C"),
            ],
        )
    };
    let interlace_side_oracle = |true_interlace: bool| {
        let mut oracle = ModuliOracle::default();
        oracle
            .components
            .insert("A".into(), bimark_facts("d0.0+d1.0", true, Some(az(2, 1))));
        let mut f = ComponentFacts {
            is_true_interlace: Some(true_interlace),
            ..Default::default()
        };
        f.bimarks.insert(
            "d0.1+d1.1".into(),
            BimarkFacts {
                is_hyperelliptic_divisor: true_interlace,
                hyperelliptic_azimuth: true_interlace.then(|| az(5, 1)),
            },
        );
        oracle.components.insert("B+C".into(), f);
        oracle
    };
    let mut middles = MiddleAzimuthData::default();
    middles.middles.insert("d0+d1".into(), az(10, 1));
    cases.push(Curated {
        name: "genus-2 across a bisep from a true interlace",
        graph: interlace_side(),
        oracle: interlace_side_oracle(true),
        middles: middles.clone(),
        expect: OverallVerdict::Hyperelliptic,
    });
    cases.push(Curated {
        name: "genus-2 across a bisep from a false interlace",
        graph: interlace_side(),
        oracle: interlace_side_oracle(false),
        middles,
        expect: OverallVerdict::NotHyperelliptic,
    });

    // 28: a longer mixed tree, sep then bisep then sep.
    let long_mixed = || {
        graph(
            vec![vx("A", 2), vx("B", 2), vx("C", 2), vx("D", 2)],
            vec![
                ed("s", "A", "B"),
                ed("p0", "B", "C"),
                ed("p1", "B", "C"),
                ed("t", "C", "D"),
            ],
        )
    };
    let long_mixed_oracle = || {
        let mut oracle = ModuliOracle::default();
        oracle
            .components
            .insert("A".into(), hyp_comp(&[("s.0", true)]));
        let mut b = hyp_comp(&[("s.1", true)]);
        b.bimarks.insert(
            "p0.0+p1.0".into(),
            BimarkFacts {
                is_hyperelliptic_divisor: true,
                hyperelliptic_azimuth: Some(az(1, 1)),
            },
        );
        oracle.components.insert("B".into(), b);
        let mut c = hyp_comp(&[("t.0", true)]);
        c.bimarks.insert(
            "p0.1+p1.1".into(),
            BimarkFacts {
                is_hyperelliptic_divisor: true,
                hyperelliptic_azimuth: Some(az(7, 1)),
            },
        );
        oracle.components.insert("C".into(), c);
        oracle
            .components
            .insert("D".into(), hyp_comp(&[("t.1", true)]));
        oracle
    };
    let mut middles = MiddleAzimuthData::default();
    middles.middles.insert("p0+p1".into(), az(7, 1));
    cases.push(Curated {
        name: "sep-bisep-sep chain, all hyperelliptic",
        graph: long_mixed(),
        oracle: long_mixed_oracle(),
        middles,
        expect: OverallVerdict::Hyperelliptic,
    });
    let mut broken = long_mixed_oracle();
    broken
        .components
        .insert("D".into(), hyp_comp(&[("t.1", false)]));
    let mut middles = MiddleAzimuthData::default();
    middles.middles.insert("p0+p1".into(), az(7, 1));
    cases.push(Curated {
        name: "sep-bisep-sep chain, far end broken",
        graph: long_mixed(),
        oracle: broken,
        middles,
        expect: OverallVerdict::NotHyperelliptic,
    });

    cases
}

#[test]
fn criterion_6_hyperelliptic_dichotomy() {
    let cases = curated_corpus();
    assert!(
        cases.len() >= 20,
        "curated corpus has {} cases",
        cases.len()
    );
    for case in &cases {
        let verdict = match classify_curve(&case.graph, &case.oracle, &case.middles) {
            Ok(v) => v,
            Err(Error::IncompleteOracle(keys))
                if case.expect == OverallVerdict::NotHyperelliptic =>
            {
                panic!(
                    "case {:?}: oracle unexpectedly incomplete: {keys:?}",
                    case.name
                );
            }
            Err(e) => panic!("case {:?} failed: {e}", case.name),
        };
        assert_eq!(
            verdict.overall, case.expect,
            "case {:?}: expected {:?}",
            case.name, case.expect
        );
        // The degree identity holds on every 2:1 component, via the report.
        let report = full_report(&case.graph, &case.oracle, &case.middles, None)
            .unwrap_or_else(|e| panic!("case {:?} report failed: {e}", case.name));
        for comp in &report.components {
            if comp.verdict == ComponentVerdict::TwoToOneOntoRationalNormalCurve {
                assert_eq!(
                    comp.dims.bundle_degree,
                    2 * (comp.dims.system_dim - 1),
                    "case {:?} component {}",
                    case.name,
                    comp.component_id
                );
            }
        }
    }
    let hyperelliptic = cases
        .iter()
        .filter(|c| c.expect == OverallVerdict::Hyperelliptic)
        .count();
    println!(
        "criterion 6 PASS: {} curves ({} hyperelliptic, {} not)",
        cases.len(),
        hyperelliptic,
        cases.len() - hyperelliptic
    );
}

// ---------------------------------------------------------------------------
// Criterion 7: sepcanonical dimension regression

#[test]
fn criterion_7_sepcanonical_dimensions() {
    // Worked instance 1: no marks gives dimension g.
    let smooth = graph(vec![vx("A", 3)], vec![]);
    let mut oracle = ModuliOracle::default();
    oracle.components.insert(
        "A".into(),
        ComponentFacts {
            is_hyperelliptic: Some(false),
            ..Default::default()
        },
    );
    let report = full_report(&smooth, &oracle, &MiddleAzimuthData::default(), None).unwrap();
    assert_eq!(report.components[0].dims.system_dim, 3);

    // Worked instance 2: genus 2, one co-hyperelliptic bimark: dimension 4.
    let pair = graph(
        vec![vx("A", 2), vx("B", 2)],
        vec![ed("e0", "A", "B"), ed("e1", "A", "B")],
    );
    let pair_oracle = |a_div: bool, b_div: bool| {
        let mut oracle = ModuliOracle::default();
        oracle.components.insert(
            "A".into(),
            bimark_facts("e0.0+e1.0", a_div, a_div.then(|| az(2, 1))),
        );
        oracle.components.insert(
            "B".into(),
            bimark_facts("e0.1+e1.1", b_div, b_div.then(|| az(2, 1))),
        );
        oracle
    };
    let mut middles = MiddleAzimuthData::default();
    middles.middles.insert("e0+e1".into(), az(4, 1));
    let report = full_report(&pair, &pair_oracle(true, true), &middles, None).unwrap();
    for comp in &report.components {
        assert_eq!(comp.dims.h0_ambient, 5);
        assert_eq!(comp.dims.residue_conditions, 0);
        assert_eq!(comp.dims.azimuthal_conditions, 1);
        assert_eq!(comp.dims.system_dim, 4);
        assert_eq!(comp.dims.bundle_degree, 6);
    }

    // Perturbation: dropping one hyperelliptic-divisor flag makes the
    // facing bimark non-co-hyperelliptic and raises that dimension by 1.
    let report_b_off = full_report(&pair, &pair_oracle(true, false), &middles, None).unwrap();
    let a_entry = |r: &sepcanon::sepcanonical::SepcanonicalReport| {
        r.components
            .iter()
            .find(|c| c.component_id == "A")
            .unwrap()
            .dims
            .clone()
    };
    assert_eq!(a_entry(&report_b_off).system_dim, 5);
    assert_eq!(a_entry(&report_b_off).azimuthal_conditions, 0);

    // Worked instance 3: genus 1 with two non-co-hyperelliptic unimarks:
    // h0 = 6, one independent residue condition, dimension 5.
    let chain = graph(
        vec![vx("V0", 2), vx("V1", 1), vx("V2", 2)],
        vec![ed("s0", "V0", "V1"), ed("s1", "V1", "V2")],
    );
    let chain_oracle = |left_w: bool, right_w: bool| {
        let mut oracle = ModuliOracle::default();
        oracle
            .components
            .insert("V0".into(), hyp_comp(&[("s0.0", left_w)]));
        let mut v1 = ComponentFacts::default();
        v1.weierstrass.insert("s0.1".into(), true);
        v1.weierstrass.insert("s1.0".into(), true);
        oracle.components.insert("V1".into(), v1);
        oracle
            .components
            .insert("V2".into(), hyp_comp(&[("s1.1", right_w)]));
        oracle
    };
    // Both far sides non-Weierstrass: V1's two unimarks are non-co-hyp.
    let report = full_report(
        &chain,
        &chain_oracle(false, false),
        &MiddleAzimuthData::default(),
        None,
    )
    .unwrap();
    let v1 = report
        .components
        .iter()
        .find(|c| c.component_id == "V1")
        .unwrap();
    assert_eq!(v1.dims.h0_ambient, 6);
    assert_eq!(v1.dims.residue_conditions, 1);
    assert_eq!(v1.dims.azimuthal_conditions, 0);
    assert_eq!(v1.dims.system_dim, 5);

    // Flipping one unimark to co-hyperelliptic lowers the dimension by
    // exactly 1 (multiplicity 3 -> 2).
    let report_one_co = full_report(
        &chain,
        &chain_oracle(true, false),
        &MiddleAzimuthData::default(),
        None,
    )
    .unwrap();
    let v1_who = report_one_co
        .components
        .iter()
        .find(|c| c.component_id == "V1")
        .unwrap();
    assert_eq!(v1_who.dims.system_dim, 4);
    assert_eq!(
        v1_who
            .marking
            .unimarks
            .iter()
            .filter(|u| u.co_hyperelliptic)
            .count(),
        1
    );

    // Hyperelliptic chain regression: twist 2, dimension 3, 2:1 verdict.
    let dumbbell = graph(vec![vx("A", 2), vx("B", 2)], vec![ed("t1", "A", "B")]);
    let mut oracle = ModuliOracle::default();
    oracle
        .components
        .insert("A".into(), hyp_comp(&[("t1.0", true)]));
    oracle
        .components
        .insert("B".into(), hyp_comp(&[("t1.1", true)]));
    let report = full_report(&dumbbell, &oracle, &MiddleAzimuthData::default(), None).unwrap();
    assert_eq!(report.verdict.overall, OverallVerdict::Hyperelliptic);
    for comp in &report.components {
        assert_eq!(comp.dims.twist.degree, 2);
        assert_eq!(comp.dims.system_dim, 3);
    }
    // Flip one flag: dimension rises by exactly 1 on that side.
    let mut perturbed = oracle.clone();
    perturbed
        .components
        .insert("A".into(), hyp_comp(&[("t1.0", false)]));
    let report2 = full_report(&dumbbell, &perturbed, &MiddleAzimuthData::default(), None).unwrap();
    let b_dim = |r: &sepcanon::sepcanonical::SepcanonicalReport| {
        r.components
            .iter()
            .find(|c| c.component_id == "B")
            .unwrap()
            .dims
            .system_dim
    };
    assert_eq!(b_dim(&report2), b_dim(&report) + 1);

    // Triangle regression: twist 4, dimension 4 on every corner.
    let triangle = graph(
        vec![vx("A", 1), vx("B", 1), vx("C", 1)],
        vec![ed("ab", "A", "B"), ed("bc", "B", "C"), ed("ca", "C", "A")],
    );
    let report = full_report(
        &triangle,
        &ModuliOracle::default(),
        &MiddleAzimuthData::default(),
        None,
    )
    .unwrap();
    for comp in &report.components {
        assert_eq!(comp.dims.twist.degree, 4);
        assert_eq!(comp.dims.system_dim, 4);
        assert_eq!(comp.verdict, ComponentVerdict::EssentiallyVeryAmple);
    }
    println!(
        "criterion 7 PASS: worked dimensions (g, 4, 5) and unit co-hyperelliptic perturbations"
    );
}

// ---------------------------------------------------------------------------
// Criterion 8: bridge recipe

#[test]
fn criterion_8_bridge_recipe() {
    assert_eq!(bridge_system(true, true), vec![(2, 0), (0, 2)]);
    assert_eq!(bridge_system(true, false), vec![(3, 0), (2, 1), (0, 3)]);
    assert_eq!(bridge_system(false, true), vec![(3, 0), (1, 2), (0, 3)]);
    assert_eq!(
        bridge_system(false, false),
        vec![(4, 0), (3, 1), (1, 3), (0, 4)]
    );
    // Every system contains the pure monomials of its degree, and the count
    // matches the dimension of the named linear system.
    for (l, r, dim) in [
        (true, true, 2),
        (true, false, 3),
        (false, true, 3),
        (false, false, 4),
    ] {
        let monomials = bridge_system(l, r);
        assert_eq!(monomials.len(), dim);
        let degree = monomials[0].0 + monomials[0].1;
        assert!(monomials.iter().all(|&(a, b)| a + b == degree));
        assert!(monomials.contains(&(degree, 0)));
        assert!(monomials.contains(&(0, degree)));
    }
    println!("criterion 8 PASS: bridge monomial systems verbatim");
}
