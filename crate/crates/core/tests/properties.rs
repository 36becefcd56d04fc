mod common;

use std::collections::VecDeque;

use proptest::prelude::*;
use proptest::sample::Index;

use leapfrog_core::ear::{build_ear_decomposition, lexbfs_dual_order, seed_pairs};
use leapfrog_core::enumerator::{enumerate, tree_median, EnumerationOptions};
use leapfrog_core::fullerene::{leapfrog, validate_fullerene, FullereneGraph};
use leapfrog_core::planar_code::{parse_planar_code, write_planar_code};
use leapfrog_core::planar_map::{PlanarMap, VertexId};
use leapfrog_core::stable_tree::{black_forest, classify, Color, DecompState, DecompositionKind};

fn relabel(map: &PlanarMap, perm: &[usize]) -> PlanarMap {
    let mut rot = vec![Vec::new(); map.vertex_count()];
    for v in map.vertices() {
        rot[perm[v.index()]] = map.rotation(v).into_iter().map(|w| VertexId::new(perm[w.index()])).collect();
    }
    PlanarMap::from_rotations(&rot).unwrap()
}

fn corpus_graph() -> impl Strategy<Value = FullereneGraph> {
    let graphs = common::all_fullerenes();
    (0..graphs.len()).prop_map(move |i| graphs[i].clone())
}

fn graph_and_permutation() -> impl Strategy<Value = (FullereneGraph, Vec<usize>)> {
    corpus_graph().prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn bfs_distances(map: &PlanarMap, from: VertexId) -> Vec<usize> {
    let mut dist = vec![usize::MAX; map.vertex_count()];
    dist[from.index()] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for w in map.neighbors(v) {
            if dist[w.index()] == usize::MAX {
                dist[w.index()] = dist[v.index()] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Connected components of the black vertices, found by plain search.
fn black_components(map: &PlanarMap, black: &[bool]) -> Vec<Vec<VertexId>> {
    let mut seen = vec![false; map.vertex_count()];
    let mut out = Vec::new();
    for s in map.vertices() {
        if !black[s.index()] || seen[s.index()] {
            continue;
        }
        seen[s.index()] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for w in map.neighbors(v) {
                if black[w.index()] && !seen[w.index()] {
                    seen[w.index()] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn relabelling_keeps_canonical_code((g, perm) in graph_and_permutation()) {
        let m = relabel(g.map(), &perm);
        prop_assert_eq!(m.canonical_code(false), g.map().canonical_code(false));
        let h = validate_fullerene(m).unwrap();
        prop_assert!(leapfrog(&h).h.is_isomorphic(&leapfrog(&g).h, false));
    }

    #[test]
    fn planar_code_round_trip((g, perm) in graph_and_permutation()) {
        let m = relabel(g.map(), &perm);
        let back = parse_planar_code(&write_planar_code(std::slice::from_ref(&m))).unwrap();
        prop_assert_eq!(back.len(), 1);
        for v in m.vertices() {
            prop_assert_eq!(back[0].rotation(v), m.rotation(v));
        }
    }

    #[test]
    fn dual_is_an_involution(g in corpus_graph()) {
        let dd = g.map().dual().map.dual().map;
        prop_assert!(dd.is_isomorphic(g.map(), false));
    }

    #[test]
    fn tree_median_matches_distances(parents in prop::collection::vec(any::<Index>(), 2..15), picks in [any::<Index>(), any::<Index>(), any::<Index>()]) {
        let n = parents.len() + 1;
        let mut adj = vec![Vec::new(); n];
        for (i, p) in parents.iter().enumerate() {
            let child = i + 1;
            let parent = p.index(child);
            adj[child].push(VertexId::new(parent));
            adj[parent].push(VertexId::new(child));
        }
        let map = PlanarMap::from_rotations(&adj).unwrap();
        let all: Vec<VertexId> = map.vertices().collect();
        let [a, b, c] = picks.map(|p| VertexId::new(p.index(n)));
        let m = tree_median(&map, &all, a, b, c).unwrap();
        let (da, db, dc) = (bfs_distances(&map, a), bfs_distances(&map, b), bfs_distances(&map, c));
        let on_path = |d1: &[usize], d2: &[usize], x: VertexId, y: VertexId| d1[x.index()] + d2[x.index()] == d1[y.index()];
        prop_assert!(on_path(&da, &db, m, b));
        prop_assert!(on_path(&db, &dc, m, c));
        prop_assert!(on_path(&da, &dc, m, c));
    }

    #[test]
    fn incremental_components_match_search(ops in prop::collection::vec((any::<Index>(), 0u8..3), 1..80)) {
        let g = common::c26();
        let map = g.map();
        let mut state = DecompState::new(map.vertex_count(), 0);
        for (pick, op) in ops {
            let v = VertexId::new(pick.index(map.vertex_count()));
            let before = state.clone();
            let result = match op {
                0 => state.add_black(map, v),
                1 => state.add_white(map, v),
                _ => state.recolor_white(map, v),
            };
            if result.is_err() {
                prop_assert_eq!(state.colors(), before.colors());
                continue;
            }
            let black: Vec<bool> = state.colors().iter().map(|&c| c == Color::Black).collect();
            let forest = black_forest(map, &black).expect("black vertices stay a forest");
            prop_assert_eq!(state.components(), &forest[..]);
            prop_assert_eq!(state.components(), &black_components(map, &black)[..]);
            for x in state.whites() {
                prop_assert!(map.neighbors(x).all(|w| state.color(w) != Color::White));
            }
        }
    }

    #[test]
    fn classify_agrees_with_direct_checks(bits in prop::collection::vec(prop::bool::weighted(0.3), 26)) {
        let g = common::c26();
        let map = g.map();
        let white: Vec<VertexId> = (0..26).filter(|&i| bits[i]).map(VertexId::new).collect();
        let black: Vec<VertexId> = (0..26).filter(|&i| !bits[i]).map(VertexId::new).collect();
        let stable = white.iter().all(|&v| map.neighbors(v).all(|w| !bits[w.index()]));
        let comps = black_components(map, &(0..26).map(|i| !bits[i]).collect::<Vec<_>>());
        let black_edges = map.edges().filter(|&e| {
            let (a, b) = map.edge_endpoints(e);
            !bits[a.index()] && !bits[b.index()]
        }).count();
        let forest = black_edges + comps.len() == black.len();
        let touches_all = |f| {
            let vs: Vec<VertexId> = map.face_vertices(f);
            comps.iter().all(|c| vs.iter().any(|v| c.contains(v)))
        };
        let graceful = g.hexagons().iter().any(|&f| touches_all(f));
        match classify(map, &white, &black) {
            Ok(d) => {
                prop_assert!(stable && forest);
                match d.kind {
                    DecompositionKind::Proper => prop_assert_eq!(comps.len(), 1),
                    DecompositionKind::Improper => prop_assert!(comps.len() == 3 && graceful),
                }
            }
            Err(_) => prop_assert!(!(stable && forest && (comps.len() == 1 || (comps.len() == 3 && graceful)))),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn any_nice_seed_meets_the_bound(iso in any::<Index>(), seed in any::<Index>()) {
        let gs = common::fullerenes(38);
        let g = &gs[iso.index(gs.len())];
        let pairs = seed_pairs(g);
        let (h, p) = pairs[seed.index(pairs.len())];
        let order = lexbfs_dual_order(g, h, p).unwrap();
        if let Ok(ed) = build_ear_decomposition(g, &order) {
            let r = enumerate(g, &ed, EnumerationOptions::default()).unwrap();
            prop_assert!(r.count.bound_met);
            prop_assert!(r.audit.is_clean());
        }
    }
}
