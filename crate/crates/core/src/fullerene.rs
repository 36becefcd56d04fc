//! Fullerene validation and the leapfrog transformation.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::planar_map::{
    DartId, EdgeId, FaceId, PlanarMap, TruncatedFace, VertexId,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FullereneError {
    #[error("vertex {0} has degree {1}, expected 3")]
    NotCubic(VertexId, usize),
    #[error("face {0} has size {1}, expected 5 or 6")]
    BadFaceSize(FaceId, usize),
    #[error("removing vertices {0} and {1} disconnects the graph")]
    Not3Connected(VertexId, VertexId),
    #[error("found {0} pentagons instead of 12")]
    PentagonCountMismatch(usize),
}

/// A validated fullerene: cubic, 3-connected, planar, with pentagonal and
/// hexagonal faces only.
#[derive(Clone, Debug)]
pub struct FullereneGraph {
    map: PlanarMap,
    pentagons: Vec<FaceId>,
    hexagons: Vec<FaceId>,
}

impl FullereneGraph {
    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn into_map(self) -> PlanarMap {
        self.map
    }

    pub fn n(&self) -> usize {
        self.map.vertex_count()
    }

    /// `k` with `n = 4k - 2`, when it exists.
    pub fn k(&self) -> Option<usize> {
        let n = self.n();
        (n % 4 == 2).then(|| (n + 2) / 4)
    }

    pub fn pentagons(&self) -> &[FaceId] {
        &self.pentagons
    }

    pub fn hexagons(&self) -> &[FaceId] {
        &self.hexagons
    }

    pub fn is_hexagon(&self, f: FaceId) -> bool {
        self.map.face_size(f) == 6
    }

    pub fn is_pentagon(&self, f: FaceId) -> bool {
        self.map.face_size(f) == 5
    }
}

pub fn validate_fullerene(map: PlanarMap) -> Result<FullereneGraph, FullereneError> {
    for v in map.vertices() {
        if map.degree(v) != 3 {
            return Err(FullereneError::NotCubic(v, map.degree(v)));
        }
    }
    let mut pentagons = Vec::new();
    let mut hexagons = Vec::new();
    for f in map.face_ids() {
        match map.face_size(f) {
            5 => pentagons.push(f),
            6 => hexagons.push(f),
            s => return Err(FullereneError::BadFaceSize(f, s)),
        }
    }
    if let Some((a, b)) = two_vertex_cut(&map) {
        return Err(FullereneError::Not3Connected(a, b));
    }
    if pentagons.len() != 12 {
        return Err(FullereneError::PentagonCountMismatch(pentagons.len()));
    }
    Ok(FullereneGraph {
        map,
        pentagons,
        hexagons,
    })
}

/// First pair of vertices whose removal disconnects the graph, by exhaustive search.
pub fn two_vertex_cut(map: &PlanarMap) -> Option<(VertexId, VertexId)> {
    let n = map.vertex_count();
    if n < 4 {
        return None;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::with_capacity(n);
    for a in 0..n {
        for b in a + 1..n {
            seen.fill(false);
            seen[a] = true;
            seen[b] = true;
            let start = (0..n).find(|&v| !seen[v]).expect("n >= 4");
            seen[start] = true;
            queue.clear();
            queue.push_back(VertexId::new(start));
            let mut reached = 3;
            while let Some(v) = queue.pop_front() {
                for w in map.neighbors(v) {
                    if !seen[w.index()] {
                        seen[w.index()] = true;
                        reached += 1;
                        queue.push_back(w);
                    }
                }
            }
            if reached < n {
                return Some((VertexId::new(a), VertexId::new(b)));
            }
        }
    }
    None
}

/// What a face of the leapfrog comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FaceOrigin {
    FaceOfG(FaceId),
    VertexOfG(VertexId),
}

/// An incidence of an edge of `G` with one of its two faces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Incidence {
    pub edge: EdgeId,
    pub face: FaceId,
}

/// `H = L(G)` together with its correspondence tables.
#[derive(Clone, Debug)]
pub struct LeapfrogResult {
    pub h: PlanarMap,
    /// Face of `H` → face or vertex of `G`.
    pub face_origin: Vec<FaceOrigin>,
    /// Vertex of `H` → (edge of `G`, incident face of `G`).
    pub vertex_origin: Vec<Incidence>,
    /// Face of `G` → face of `H`.
    pub face_of_g_face: Vec<FaceId>,
    /// Vertex of `G` → face of `H`.
    pub face_of_g_vertex: Vec<FaceId>,
}

/// The truncation of the dual.
///
/// Vertex `i` of `H` sits on dart `i` of `G`: it belongs to the edge of that
/// dart and to the face on its right.
pub fn leapfrog(g: &FullereneGraph) -> LeapfrogResult {
    let map = g.map();
    let dual = map.dual();
    let trunc = dual
        .map
        .truncate()
        .expect("dual of a fullerene has minimum degree 5");
    let face_origin: Vec<FaceOrigin> = trunc
        .face_origin
        .iter()
        .map(|o| match *o {
            // a dual vertex is a face of G
            TruncatedFace::Vertex(v) => FaceOrigin::FaceOfG(FaceId(v.0)),
            TruncatedFace::Face(f) => FaceOrigin::VertexOfG(dual.face_to_vertex[f.index()]),
        })
        .collect();
    let vertex_origin: Vec<Incidence> = trunc
        .vertex_origin
        .iter()
        .map(|&d| {
            let d = DartId(d.0);
            Incidence {
                edge: map.edge_of(d),
                face: map.face_of(d),
            }
        })
        .collect();
    let mut face_of_g_face = vec![FaceId(u32::MAX); map.face_count()];
    let mut face_of_g_vertex = vec![FaceId(u32::MAX); map.vertex_count()];
    for (i, o) in face_origin.iter().enumerate() {
        match *o {
            FaceOrigin::FaceOfG(f) => face_of_g_face[f.index()] = FaceId::new(i),
            FaceOrigin::VertexOfG(v) => face_of_g_vertex[v.index()] = FaceId::new(i),
        }
    }
    LeapfrogResult {
        h: trunc.map,
        face_origin,
        vertex_origin,
        face_of_g_face,
        face_of_g_vertex,
    }
}

/// True iff the facial cycles of the `FaceOfG` faces of `H` are pairwise
/// vertex-disjoint and cover every vertex of `H`.
pub fn verify_two_factor(r: &LeapfrogResult) -> bool {
    let mut hits = vec![0u32; r.h.vertex_count()];
    for f in r.h.face_ids() {
        if let FaceOrigin::FaceOfG(_) = r.face_origin[f.index()] {
            for v in r.h.face_vertices(f) {
                hits[v.index()] += 1;
            }
        }
    }
    hits.iter().all(|&h| h == 1)
}
