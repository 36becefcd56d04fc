//! Facial ear decompositions driven by a LexBFS of the dual graph.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use thiserror::Error;

use crate::fullerene::FullereneGraph;
use crate::planar_map::{DartId, FaceId, PlanarMap, VertexId};

/// Longest ear a nice decomposition may contain, in edges.
pub const MAX_EAR_EDGES: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EarError {
    #[error("faces {0} and {1} share no edge")]
    NotAdjacent(FaceId, FaceId),
    #[error("face {0} is not a hexagon")]
    NotHexagon(FaceId),
    #[error("face {0} is not a pentagon")]
    NotPentagon(FaceId),
    #[error("face order does not list every face exactly once")]
    NotAnOrder,
    #[error("face {face} (order position {position}) yields an ear with {edges} edges")]
    EarTooLong {
        face: FaceId,
        position: usize,
        edges: usize,
    },
    #[error("face {face} (order position {position}) yields a path without two covered end vertices")]
    DanglingEar { face: FaceId, position: usize },
    #[error("graph has no hexagonal face")]
    NoHexagon,
    #[error("no hexagon-pentagon seed pair gives a nice ear decomposition")]
    NoNiceDecompositionFound,
}

/// An ordering of the faces in which every face after the first shares an
/// edge with some earlier face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSearchOrder(pub Vec<FaceId>);

impl DualSearchOrder {
    pub fn faces(&self) -> &[FaceId] {
        &self.0
    }

    /// Checks the adjacency property and that every face appears once.
    pub fn is_valid(&self, map: &PlanarMap) -> bool {
        let mut placed = vec![false; map.face_count()];
        if self.0.len() != map.face_count() {
            return false;
        }
        for (i, &f) in self.0.iter().enumerate() {
            if f.index() >= placed.len() || placed[f.index()] {
                return false;
            }
            if i > 0 && !map.adjacent_faces(f).iter().any(|g| placed[g.index()]) {
                return false;
            }
            placed[f.index()] = true;
        }
        true
    }
}

/// LexBFS of the dual graph forced to start with `start_hexagon` followed by
/// `second_pentagon`. Ties go to the lowest face id.
pub fn lexbfs_dual_order(
    g: &FullereneGraph,
    start_hexagon: FaceId,
    second_pentagon: FaceId,
) -> Result<DualSearchOrder, EarError> {
    let map = g.map();
    if start_hexagon.index() >= map.face_count() || !g.is_hexagon(start_hexagon) {
        return Err(EarError::NotHexagon(start_hexagon));
    }
    if second_pentagon.index() >= map.face_count() || !g.is_pentagon(second_pentagon) {
        return Err(EarError::NotPentagon(second_pentagon));
    }
    if !map.adjacent_faces(start_hexagon).contains(&second_pentagon) {
        return Err(EarError::NotAdjacent(start_hexagon, second_pentagon));
    }
    let nf = map.face_count();
    let adjacency: Vec<Vec<FaceId>> = map.face_ids().map(|f| map.adjacent_faces(f)).collect();
    // labels hold decreasing visit stamps; larger sequences win
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); nf];
    let mut visited = vec![false; nf];
    let mut order = Vec::with_capacity(nf);
    let visit = |f: FaceId, order: &mut Vec<FaceId>, labels: &mut Vec<Vec<usize>>, visited: &mut Vec<bool>| {
        let stamp = nf - order.len();
        visited[f.index()] = true;
        order.push(f);
        for &h in &adjacency[f.index()] {
            if !visited[h.index()] {
                labels[h.index()].push(stamp);
            }
        }
    };
    visit(start_hexagon, &mut order, &mut labels, &mut visited);
    visit(second_pentagon, &mut order, &mut labels, &mut visited);
    while order.len() < nf {
        let mut best: Option<usize> = None;
        for f in 0..nf {
            if visited[f] {
                continue;
            }
            best = match best {
                None => Some(f),
                Some(b) => match labels[f].cmp(&labels[b]) {
                    Ordering::Greater => Some(f),
                    _ => Some(b),
                },
            };
        }
        let f = FaceId::new(best.expect("unvisited face exists"));
        visit(f, &mut order, &mut labels, &mut visited);
    }
    Ok(DualSearchOrder(order))
}

/// A path added to the graph covered so far.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ear {
    /// Vertices along the path; the first and last are already covered.
    pub path: Vec<VertexId>,
    /// Position, in the source order, of the face that produced the ear.
    pub face_position: usize,
}

impl Ear {
    pub fn edge_count(&self) -> usize {
        self.path.len() - 1
    }

    pub fn internal(&self) -> &[VertexId] {
        &self.path[1..self.path.len() - 1]
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.path[0], self.path[self.path.len() - 1])
    }
}

/// Where a vertex first appears in a decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EarSlot {
    Cycle,
    Ear(usize),
}

/// A facial ear decomposition whose initial cycle is a hexagon and whose
/// ears have at most four edges.
#[derive(Clone, Debug)]
pub struct NiceEarDecomposition {
    /// The initial hexagon, as a cyclic vertex sequence.
    pub e0: Vec<VertexId>,
    pub ears: Vec<Ear>,
    pub source_order: DualSearchOrder,
    /// For each vertex, the ear it is internal to (or the initial cycle).
    pub internal_of: Vec<EarSlot>,
}

impl NiceEarDecomposition {
    pub fn initial_face(&self) -> FaceId {
        self.source_order.0[0]
    }
}

/// Splits each face's uncovered edges into ears, following `order`.
pub fn build_ear_decomposition(
    g: &FullereneGraph,
    order: &DualSearchOrder,
) -> Result<NiceEarDecomposition, EarError> {
    let map = g.map();
    let faces = order.faces();
    if faces.is_empty() {
        return Err(EarError::NotAnOrder);
    }
    let mut placed = vec![false; map.face_count()];
    for &f in faces {
        if f.index() >= placed.len() || placed[f.index()] {
            return Err(EarError::NotAnOrder);
        }
        placed[f.index()] = true;
    }
    if faces.len() != map.face_count() {
        return Err(EarError::NotAnOrder);
    }
    let f0 = faces[0];
    if !g.is_hexagon(f0) {
        return Err(EarError::NotHexagon(f0));
    }
    let mut edge_covered = vec![false; map.dart_count()];
    let mut vertex_covered = vec![false; map.vertex_count()];
    let mut internal_of = vec![EarSlot::Cycle; map.vertex_count()];
    let cover = |d: DartId, edge_covered: &mut Vec<bool>| {
        edge_covered[d.index()] = true;
        edge_covered[map.twin(d).index()] = true;
    };

    let e0: Vec<VertexId> = map.face_vertices(f0);
    for d in map.face_darts(f0) {
        cover(d, &mut edge_covered);
        vertex_covered[map.origin(d).index()] = true;
    }

    let mut ears = Vec::new();
    for (position, &f) in faces.iter().enumerate().skip(1) {
        let darts = map.face_darts(f);
        let len = darts.len();
        if darts.iter().all(|d| !edge_covered[d.index()]) {
            return Err(EarError::DanglingEar { face: f, position });
        }
        // A segment starts at a covered vertex and runs along uncovered edges
        // until the next covered vertex.
        let mut segments: Vec<Vec<DartId>> = Vec::new();
        for i in 0..len {
            let d = darts[i];
            if edge_covered[d.index()] || !vertex_covered[map.origin(d).index()] {
                continue;
            }
            let mut seg = vec![d];
            let mut j = (i + 1) % len;
            while !vertex_covered[map.origin(darts[j]).index()] {
                let e = darts[j];
                if edge_covered[e.index()] || seg.len() >= len {
                    return Err(EarError::DanglingEar { face: f, position });
                }
                seg.push(e);
                j = (j + 1) % len;
            }
            segments.push(seg);
        }
        // every uncovered edge must belong to exactly one segment
        let in_segments: usize = segments.iter().map(Vec::len).sum();
        let uncovered = darts.iter().filter(|d| !edge_covered[d.index()]).count();
        if in_segments != uncovered {
            return Err(EarError::DanglingEar { face: f, position });
        }
        for seg in segments {
            let mut path: Vec<VertexId> = seg.iter().map(|&d| map.origin(d)).collect();
            path.push(map.head(*seg.last().expect("segment is nonempty")));
            if path[0] == path[path.len() - 1] {
                return Err(EarError::DanglingEar { face: f, position });
            }
            if seg.len() > MAX_EAR_EDGES {
                return Err(EarError::EarTooLong {
                    face: f,
                    position,
                    edges: seg.len(),
                });
            }
            let ear_index = ears.len();
            for &v in &path[1..path.len() - 1] {
                vertex_covered[v.index()] = true;
                internal_of[v.index()] = EarSlot::Ear(ear_index);
            }
            for &d in &seg {
                cover(d, &mut edge_covered);
            }
            ears.push(Ear {
                path,
                face_position: position,
            });
        }
    }
    Ok(NiceEarDecomposition {
        e0,
        ears,
        source_order: order.clone(),
        internal_of,
    })
}

/// Hexagon–pentagon seed pairs sharing an edge, in ascending id order.
pub fn seed_pairs(g: &FullereneGraph) -> Vec<(FaceId, FaceId)> {
    let map = g.map();
    let mut pairs = Vec::new();
    for &h in g.hexagons() {
        let mut adj: Vec<FaceId> = map
            .adjacent_faces(h)
            .into_iter()
            .filter(|&p| g.is_pentagon(p))
            .collect();
        adj.sort();
        pairs.extend(adj.into_iter().map(|p| (h, p)));
    }
    pairs
}

/// The first seed pair, in ascending order, whose LexBFS gives a nice ear decomposition.
pub fn find_nice_decomposition(g: &FullereneGraph) -> Result<NiceEarDecomposition, EarError> {
    if g.hexagons().is_empty() {
        return Err(EarError::NoHexagon);
    }
    for (h, p) in seed_pairs(g) {
        let order = lexbfs_dual_order(g, h, p)?;
        match build_ear_decomposition(g, &order) {
            Ok(ed) => return Ok(ed),
            Err(EarError::EarTooLong { .. }) | Err(EarError::DanglingEar { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(EarError::NoNiceDecompositionFound)
}
