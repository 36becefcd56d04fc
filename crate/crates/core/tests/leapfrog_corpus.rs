mod common;

use leapfrog_core::fullerene::{leapfrog, validate_fullerene, verify_two_factor, FaceOrigin, FullereneError};
use leapfrog_core::planar_code::{parse_planar_code, write_planar_code};
use leapfrog_core::planar_map::{PlanarMap, VertexId};

/// Every face gets a new center vertex joined to its boundary.
fn cap_every_face(g: &PlanarMap) -> PlanarMap {
    let n = g.vertex_count();
    let center = |f: leapfrog_core::planar_map::FaceId| VertexId::new(n + f.index());
    let mut rot: Vec<Vec<VertexId>> = Vec::with_capacity(n + g.face_count());
    for v in g.vertices() {
        let mut r = Vec::new();
        for d in g.darts_around(v) {
            // the face on the right of d lies between prev(d) and d
            r.push(center(g.face_of(d)));
            r.push(g.head(d));
        }
        rot.push(r);
    }
    for f in g.face_ids() {
        let mut r = g.face_vertices(f);
        r.reverse();
        rot.push(r);
    }
    PlanarMap::from_rotations(&rot).expect("capped map is planar")
}

#[test]
fn isomer_counts_and_distinctness() {
    let expected = [(20, 1), (24, 1), (26, 1), (28, 2), (30, 3), (32, 6), (34, 6), (36, 15), (38, 17)];
    for (n, count) in expected {
        let gs = common::fullerenes(n);
        assert_eq!(gs.len(), count, "C{n}");
        let mut codes: Vec<Vec<u32>> = gs.iter().map(|g| g.map().canonical_code(true)).collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), count, "C{n} isomers are pairwise distinct");
        for g in &gs {
            assert_eq!(g.n(), n);
            assert_eq!(g.pentagons().len(), 12);
            assert_eq!(g.hexagons().len(), n / 2 - 10);
        }
    }
}

#[test]
fn planar_code_round_trip_on_corpus() {
    for &(_, bytes) in common::CORPUS {
        let maps = parse_planar_code(bytes).unwrap();
        assert_eq!(write_planar_code(&maps), bytes);
    }
}

#[test]
fn leapfrog_structure_on_corpus() {
    for g in common::all_fullerenes() {
        let lf = leapfrog(&g);
        assert_eq!(lf.h.vertex_count(), 3 * g.n());
        let h = validate_fullerene(lf.h.clone()).expect("leapfrog is a fullerene");
        assert!(verify_two_factor(&lf));
        // pentagons of H are exactly the images of pentagons of G
        let mut images: Vec<_> = g.pentagons().iter().map(|f| lf.face_of_g_face[f.index()]).collect();
        images.sort();
        let mut pentagons = h.pentagons().to_vec();
        pentagons.sort();
        assert_eq!(images, pentagons);
        for p in h.pentagons() {
            assert!(matches!(lf.face_origin[p.index()], FaceOrigin::FaceOfG(f) if g.is_pentagon(f)));
        }
        // vertex faces are hexagons
        for v in g.map().vertices() {
            assert_eq!(lf.h.face_size(lf.face_of_g_vertex[v.index()]), 6);
        }
    }
}

#[test]
fn leapfrog_matches_dual_of_capped_map() {
    for g in common::all_fullerenes() {
        let independent = cap_every_face(g.map()).dual().map;
        assert!(leapfrog(&g).h.is_isomorphic(&independent, false));
    }
}

#[test]
fn vertex_origins_are_incidences() {
    let g = common::c26();
    let lf = leapfrog(&g);
    for (i, inc) in lf.vertex_origin.iter().enumerate() {
        let (a, b) = g.map().edge_endpoints(inc.edge);
        let fv = g.map().face_vertices(inc.face);
        assert!(fv.contains(&a) && fv.contains(&b), "vertex {i}");
    }
    let mut all = lf.vertex_origin.clone();
    all.sort();
    all.dedup();
    assert_eq!(all.len(), lf.h.vertex_count());
}

#[test]
fn icosahedron_is_not_cubic() {
    let g = common::dodecahedron();
    let icosahedron = g.map().dual().map;
    assert!(matches!(validate_fullerene(icosahedron), Err(FullereneError::NotCubic(_, 5))));
}
