//! Half-edge (dart) representation of a connected planar embedding.
//!
//! Every undirected edge is split into two darts that are each other's
//! `twin`. `next(d)` is the dart following `d` counterclockwise around
//! `origin(d)`. Faces are the orbits of `next ∘ twin`: starting at a dart,
//! jump to its twin and then turn counterclockwise at the far end. With this
//! convention the face of a dart lies on its right and every face is walked
//! clockwise.
//!
//! Maps are immutable once built. The derived constructions (`dual`,
//! `truncate`) return new maps together with explicit correspondence tables.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

macro_rules! index_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(pub u32);

        impl $name {
            #[inline]
            pub fn new(index: usize) -> Self {
                $name(index as u32)
            }

            #[inline]
            pub fn index(self) -> usize {
                self.0 as usize
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }
    };
}

index_type!(
    /// A vertex of a [`PlanarMap`].
    VertexId
);
index_type!(
    /// A half-edge of a [`PlanarMap`].
    DartId
);
index_type!(
    /// A face of a [`PlanarMap`], numbered in order of its lowest dart.
    FaceId
);
index_type!(
    /// An undirected edge, identified by the smaller of its two darts.
    EdgeId
);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("map has no vertices")]
    Empty,
    #[error("vertex {0} has a loop or a repeated neighbor")]
    NonSimpleGraph(VertexId),
    #[error("vertex {0} lists {1} but {1} does not list {0}")]
    InconsistentAdjacency(VertexId, VertexId),
    #[error("dart structure is malformed: {0}")]
    MalformedDarts(&'static str),
    #[error("map is not connected")]
    Disconnected,
    #[error("embedding is not planar: V - E + F = {0}")]
    NotPlanar(i64),
    #[error("vertex {0} has degree {1}; truncation needs degree at least 3")]
    DegreeTooLow(VertexId, usize),
}

/// A connected, simple, planar combinatorial map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarMap {
    origin: Vec<VertexId>,
    twin: Vec<DartId>,
    next: Vec<DartId>,
    prev: Vec<DartId>,
    first_dart: Vec<DartId>,
    degree: Vec<u32>,
    face_of: Vec<FaceId>,
    face_start: Vec<DartId>,
    face_len: Vec<u32>,
}

impl PlanarMap {
    /// Builds a map from counterclockwise neighbor lists.
    ///
    /// Darts are numbered vertex by vertex in rotation order, so the same
    /// lists always produce the same dart, edge and face ids.
    pub fn from_rotations(rotations: &[Vec<VertexId>]) -> Result<Self, MapError> {
        let n = rotations.len();
        if n == 0 {
            return Err(MapError::Empty);
        }
        let mut offset = Vec::with_capacity(n + 1);
        offset.push(0usize);
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &w) in rot.iter().enumerate() {
                if w.index() >= n {
                    return Err(MapError::InconsistentAdjacency(VertexId::new(v), w));
                }
                if w.index() == v || rot[..i].contains(&w) {
                    return Err(MapError::NonSimpleGraph(VertexId::new(v)));
                }
            }
            offset.push(offset[v] + rot.len());
        }
        let darts = offset[n];
        let mut origin = Vec::with_capacity(darts);
        let mut next = Vec::with_capacity(darts);
        let mut twin = vec![DartId(0); darts];
        for (v, rot) in rotations.iter().enumerate() {
            let deg = rot.len();
            for i in 0..deg {
                origin.push(VertexId::new(v));
                next.push(DartId::new(offset[v] + (i + 1) % deg));
            }
        }
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &w) in rot.iter().enumerate() {
                let back = rotations[w.index()]
                    .iter()
                    .position(|&x| x.index() == v)
                    .ok_or(MapError::InconsistentAdjacency(VertexId::new(v), w))?;
                twin[offset[v] + i] = DartId::new(offset[w.index()] + back);
            }
        }
        Self::from_darts(origin, twin, next)
    }

    /// Builds a map from raw dart permutations, checking every map invariant.
    pub fn from_darts(
        origin: Vec<VertexId>,
        twin: Vec<DartId>,
        next: Vec<DartId>,
    ) -> Result<Self, MapError> {
        let darts = origin.len();
        if darts == 0 {
            return Err(MapError::Empty);
        }
        if twin.len() != darts || next.len() != darts {
            return Err(MapError::MalformedDarts("permutation lengths differ"));
        }
        let n = origin.iter().map(|v| v.index() + 1).max().unwrap_or(0);
        let mut prev = vec![DartId(u32::MAX); darts];
        for d in 0..darts {
            let t = twin[d].index();
            if t >= darts || t == d || twin[t].index() != d {
                return Err(MapError::MalformedDarts("twin is not a fixed-point-free involution"));
            }
            let nx = next[d].index();
            if nx >= darts || prev[nx].0 != u32::MAX {
                return Err(MapError::MalformedDarts("next is not a permutation"));
            }
            if origin[nx] != origin[d] {
                return Err(MapError::MalformedDarts("next leaves the origin vertex"));
            }
            prev[nx] = DartId::new(d);
        }

        // One next-orbit per vertex.
        let mut first_dart = vec![DartId(u32::MAX); n];
        let mut degree = vec![0u32; n];
        let mut seen = vec![false; darts];
        for d in 0..darts {
            if seen[d] {
                continue;
            }
            let v = origin[d].index();
            if first_dart[v].0 != u32::MAX {
                return Err(MapError::MalformedDarts("vertex has more than one rotation orbit"));
            }
            first_dart[v] = DartId::new(d);
            let mut e = d;
            loop {
                seen[e] = true;
                degree[v] += 1;
                e = next[e].index();
                if e == d {
                    break;
                }
            }
        }
        // vertex ids without darts are isolated
        if first_dart.iter().any(|d| d.0 == u32::MAX) {
            return Err(MapError::Disconnected);
        }

        // Simplicity: no loops, no two darts from one vertex to the same head.
        for (v, &start) in first_dart.iter().enumerate() {
            let mut heads: Vec<VertexId> = Vec::with_capacity(degree[v] as usize);
            let mut d = start.index();
            loop {
                let h = origin[twin[d].index()];
                if h.index() == v || heads.contains(&h) {
                    return Err(MapError::NonSimpleGraph(VertexId::new(v)));
                }
                heads.push(h);
                d = next[d].index();
                if d == start.index() {
                    break;
                }
            }
        }

        // Faces: orbits of next ∘ twin.
        let mut face_of = vec![FaceId(u32::MAX); darts];
        let mut face_start = Vec::new();
        let mut face_len = Vec::new();
        for d in 0..darts {
            if face_of[d].0 != u32::MAX {
                continue;
            }
            let f = FaceId::new(face_start.len());
            let mut len = 0u32;
            let mut e = d;
            loop {
                face_of[e] = f;
                len += 1;
                e = next[twin[e].index()].index();
                if e == d {
                    break;
                }
            }
            face_start.push(DartId::new(d));
            face_len.push(len);
        }

        let map = PlanarMap {
            origin,
            twin,
            next,
            prev,
            first_dart,
            degree,
            face_of,
            face_start,
            face_len,
        };
        if !map.is_connected() {
            return Err(MapError::Disconnected);
        }
        let euler = map.vertex_count() as i64 - map.edge_count() as i64 + map.face_count() as i64;
        if euler != 2 {
            return Err(MapError::NotPlanar(euler));
        }
        Ok(map)
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(VertexId(0));
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    pub fn vertex_count(&self) -> usize {
        self.first_dart.len()
    }

    pub fn dart_count(&self) -> usize {
        self.origin.len()
    }

    pub fn edge_count(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn face_count(&self) -> usize {
        self.face_start.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).map(VertexId::new)
    }

    pub fn face_ids(&self) -> impl Iterator<Item = FaceId> + '_ {
        (0..self.face_count()).map(FaceId::new)
    }

    #[inline]
    pub fn origin(&self, d: DartId) -> VertexId {
        self.origin[d.index()]
    }

    #[inline]
    pub fn head(&self, d: DartId) -> VertexId {
        self.origin[self.twin[d.index()].index()]
    }

    #[inline]
    pub fn twin(&self, d: DartId) -> DartId {
        self.twin[d.index()]
    }

    /// Next dart counterclockwise around the origin.
    #[inline]
    pub fn next(&self, d: DartId) -> DartId {
        self.next[d.index()]
    }

    /// Next dart clockwise around the origin.
    #[inline]
    pub fn prev(&self, d: DartId) -> DartId {
        self.prev[d.index()]
    }

    /// Successor of `d` along its face.
    #[inline]
    pub fn face_step(&self, d: DartId) -> DartId {
        self.next[self.twin[d.index()].index()]
    }

    #[inline]
    pub fn face_of(&self, d: DartId) -> FaceId {
        self.face_of[d.index()]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.degree[v.index()] as usize
    }

    pub fn first_dart(&self, v: VertexId) -> DartId {
        self.first_dart[v.index()]
    }

    /// Darts leaving `v` in counterclockwise order, starting at its first dart.
    pub fn darts_around(&self, v: VertexId) -> impl Iterator<Item = DartId> + '_ {
        let start = self.first_dart[v.index()];
        let deg = self.degree(v);
        let mut d = start;
        (0..deg).map(move |_| {
            let cur = d;
            d = self.next(d);
            cur
        })
    }

    /// Neighbors of `v` in counterclockwise rotation order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.darts_around(v).map(move |d| self.head(d))
    }

    pub fn rotation(&self, v: VertexId) -> Vec<VertexId> {
        self.neighbors(v).collect()
    }

    pub fn is_adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.neighbors(a).any(|w| w == b)
    }

    /// The dart from `a` to `b`, if the edge exists.
    pub fn dart_between(&self, a: VertexId, b: VertexId) -> Option<DartId> {
        self.darts_around(a).find(|&d| self.head(d) == b)
    }

    #[inline]
    pub fn edge_of(&self, d: DartId) -> EdgeId {
        let t = self.twin(d);
        EdgeId(d.0.min(t.0))
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.dart_count())
            .filter(move |&d| d < self.twin[d].index())
            .map(EdgeId::new)
    }

    /// Endpoints of an edge, smaller vertex id first.
    pub fn edge_endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let d = DartId(e.0);
        let (a, b) = (self.origin(d), self.head(d));
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    pub fn face_size(&self, f: FaceId) -> usize {
        self.face_len[f.index()] as usize
    }

    /// Lowest dart of a face; its orbit starts here.
    pub fn face_start(&self, f: FaceId) -> DartId {
        self.face_start[f.index()]
    }

    /// Darts of a face in traversal (clockwise) order from its lowest dart.
    pub fn face_darts(&self, f: FaceId) -> Vec<DartId> {
        let start = self.face_start[f.index()];
        let mut out = Vec::with_capacity(self.face_size(f));
        let mut d = start;
        loop {
            out.push(d);
            d = self.face_step(d);
            if d == start {
                break;
            }
        }
        out
    }

    /// Vertices of a face's boundary walk, in the same order as [`Self::face_darts`].
    pub fn face_vertices(&self, f: FaceId) -> Vec<VertexId> {
        self.face_darts(f).into_iter().map(|d| self.origin(d)).collect()
    }

    /// All faces with their dart cycles.
    pub fn faces(&self) -> Vec<(FaceId, Vec<DartId>)> {
        self.face_ids().map(|f| (f, self.face_darts(f))).collect()
    }

    /// Faces sharing an edge with `f`, in boundary order, without repeats.
    pub fn adjacent_faces(&self, f: FaceId) -> Vec<FaceId> {
        let mut out = Vec::new();
        for d in self.face_darts(f) {
            let g = self.face_of(self.twin(d));
            if g != f && !out.contains(&g) {
                out.push(g);
            }
        }
        out
    }

    /// Faces incident to `v`, one per outgoing dart.
    pub fn faces_around(&self, v: VertexId) -> impl Iterator<Item = FaceId> + '_ {
        self.darts_around(v).map(move |d| self.face_of(d))
    }

    pub fn is_cubic(&self) -> bool {
        self.degree.iter().all(|&d| d == 3)
    }

    /// The dual map with explicit correspondences.
    ///
    /// Dual dart `d*` shares its index with primal dart `d`; it starts in the
    /// face to the right of `d` and crosses `d` right to left. Dual vertices
    /// are the primal faces (same ids). Applying `dual` twice gives a map
    /// isomorphic to the input via `d ↦ twin(d)`.
    pub fn dual(&self) -> DualResult {
        let darts = self.dart_count();
        let origin: Vec<VertexId> = (0..darts).map(|d| VertexId(self.face_of[d].0)).collect();
        let twin = self.twin.clone();
        // Counterclockwise around a face centre is the reverse face walk.
        let next: Vec<DartId> = (0..darts)
            .map(|d| self.twin(self.prev(DartId::new(d))))
            .collect();
        let map = PlanarMap::from_darts(origin, twin, next)
            .expect("dual of a valid map is a valid map");
        let face_to_vertex: Vec<VertexId> = map
            .face_ids()
            .map(|g| self.head(map.face_start(g)))
            .collect();
        let mut vertex_to_face = vec![FaceId(u32::MAX); self.vertex_count()];
        for (g, v) in face_to_vertex.iter().enumerate() {
            vertex_to_face[v.index()] = FaceId::new(g);
        }
        DualResult {
            map,
            face_to_vertex,
            vertex_to_face,
        }
    }

    /// Vertex truncation: every vertex of degree `d` becomes a `d`-gon.
    ///
    /// Output vertex `i` sits on input dart `i`, near its origin. Its three
    /// outgoing darts `3i, 3i+1, 3i+2` lead (counterclockwise) to the
    /// vertices on `twin(i)`, `next(i)` and `prev(i)`.
    pub fn truncate(&self) -> Result<TruncationResult, MapError> {
        if let Some(v) = self.vertices().find(|&v| self.degree(v) < 3) {
            return Err(MapError::DegreeTooLow(v, self.degree(v)));
        }
        let darts = self.dart_count();
        let mut origin = Vec::with_capacity(3 * darts);
        let mut twin = Vec::with_capacity(3 * darts);
        let mut next = Vec::with_capacity(3 * darts);
        for i in 0..darts {
            let d = DartId::new(i);
            for k in 0..3 {
                origin.push(VertexId::new(i));
                next.push(DartId::new(3 * i + (k + 1) % 3));
            }
            twin.push(DartId::new(3 * self.twin(d).index()));
            twin.push(DartId::new(3 * self.next(d).index() + 2));
            twin.push(DartId::new(3 * self.prev(d).index() + 1));
        }
        let map = PlanarMap::from_darts(origin, twin, next)?;
        let face_origin: Vec<TruncatedFace> = map
            .face_ids()
            .map(|g| {
                let darts = map.face_darts(g);
                match darts.iter().find(|d| d.index() % 3 == 0) {
                    Some(&d) => TruncatedFace::Face(self.face_of(DartId::new(d.index() / 3))),
                    None => TruncatedFace::Vertex(self.origin(DartId::new(darts[0].index() / 3))),
                }
            })
            .collect();
        let vertex_origin = (0..darts).map(DartId::new).collect();
        Ok(TruncationResult {
            map,
            vertex_origin,
            face_origin,
        })
    }

    /// Canonical code of the map up to orientation-preserving isomorphism,
    /// or up to any isomorphism when `allow_mirror` is set.
    ///
    /// Two maps are isomorphic iff their codes are equal.
    pub fn canonical_code(&self, allow_mirror: bool) -> Vec<u32> {
        let mut best: Option<Vec<u32>> = None;
        for d in 0..self.dart_count() {
            for mirror in [false, true] {
                if mirror && !allow_mirror {
                    continue;
                }
                let code = self.bfs_code(DartId::new(d), mirror, best.as_deref());
                if let Some(code) = code {
                    best = Some(code);
                }
            }
        }
        best.unwrap_or_default()
    }

    /// BFS code from `start`; returns `None` as soon as it is known not to
    /// beat `bound`.
    fn bfs_code(&self, start: DartId, mirror: bool, bound: Option<&[u32]>) -> Option<Vec<u32>> {
        const SEP: u32 = u32::MAX;
        let n = self.vertex_count();
        let mut label = vec![u32::MAX; n];
        let mut queue = VecDeque::with_capacity(n);
        let mut code = Vec::with_capacity(self.dart_count() + n);
        let mut next_label = 1u32;
        label[self.origin(start).index()] = 0;
        queue.push_back(start);
        let mut smaller = false;
        let push = |code: &mut Vec<u32>, x: u32, smaller: &mut bool| -> bool {
            let pos = code.len();
            code.push(x);
            if *smaller {
                return true;
            }
            match bound {
                None => true,
                Some(b) => match b.get(pos) {
                    Some(&y) if x < y => {
                        *smaller = true;
                        true
                    }
                    Some(&y) if x == y => true,
                    _ => false,
                },
            }
        };
        while let Some(entry) = queue.pop_front() {
            let v = self.origin(entry);
            let mut d = entry;
            for _ in 0..self.degree(v) {
                let w = self.head(d);
                if label[w.index()] == u32::MAX {
                    label[w.index()] = next_label;
                    next_label += 1;
                    queue.push_back(self.twin(d));
                }
                if !push(&mut code, label[w.index()], &mut smaller) {
                    return None;
                }
                d = if mirror { self.prev(d) } else { self.next(d) };
            }
            if !push(&mut code, SEP, &mut smaller) {
                return None;
            }
        }
        if smaller || bound.is_none() {
            Some(code)
        } else {
            None
        }
    }

    /// Isomorphism test through canonical codes.
    pub fn is_isomorphic(&self, other: &PlanarMap, allow_mirror: bool) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edge_count() == other.edge_count()
            && self.canonical_code(allow_mirror) == other.canonical_code(allow_mirror)
    }
}

/// Output of [`PlanarMap::dual`].
#[derive(Clone, Debug)]
pub struct DualResult {
    /// Dual map; vertex `i` is face `i` of the input.
    pub map: PlanarMap,
    /// Face of the dual → vertex of the input.
    pub face_to_vertex: Vec<VertexId>,
    /// Vertex of the input → face of the dual.
    pub vertex_to_face: Vec<FaceId>,
}

/// What a face of a truncated map comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TruncatedFace {
    Vertex(VertexId),
    Face(FaceId),
}

/// Output of [`PlanarMap::truncate`].
#[derive(Clone, Debug)]
pub struct TruncationResult {
    pub map: PlanarMap,
    /// Output vertex → input dart it sits on.
    pub vertex_origin: Vec<DartId>,
    /// Output face → input vertex or face it comes from.
    pub face_origin: Vec<TruncatedFace>,
}


#[cfg(test)]
mod tests {
    use super::samples::*;
    use super::*;

    #[test]
    fn tetrahedron_counts() {
        let m = tetrahedron();
        assert_eq!((m.vertex_count(), m.edge_count(), m.face_count()), (4, 6, 4));
        assert!(m.face_ids().all(|f| m.face_size(f) == 3));
    }

    #[test]
    fn prism_faces() {
        let m = pentagonal_prism();
        assert_eq!((m.vertex_count(), m.edge_count(), m.face_count()), (10, 15, 7));
        let mut sizes: Vec<usize> = m.face_ids().map(|f| m.face_size(f)).collect();
        sizes.sort();
        assert_eq!(sizes, [4, 4, 4, 4, 4, 5, 5]);
    }

    #[test]
    fn rejects_loops_and_repeats() {
        let rot = alloc::vec![alloc::vec![VertexId(0)]];
        assert_eq!(
            PlanarMap::from_rotations(&rot),
            Err(MapError::NonSimpleGraph(VertexId(0)))
        );
        let rot = alloc::vec![
            alloc::vec![VertexId(1), VertexId(1)],
            alloc::vec![VertexId(0), VertexId(0)]
        ];
        assert!(matches!(
            PlanarMap::from_rotations(&rot),
            Err(MapError::NonSimpleGraph(_))
        ));
    }

    #[test]
    fn rejects_one_sided_adjacency() {
        let rot = alloc::vec![
            alloc::vec![VertexId(1), VertexId(2)],
            alloc::vec![VertexId(0)],
            alloc::vec![VertexId(1)]
        ];
        assert!(matches!(
            PlanarMap::from_rotations(&rot),
            Err(MapError::InconsistentAdjacency(..))
        ));
    }

    #[test]
    fn rejects_non_planar_rotation() {
        // K4 with one rotation flipped has the wrong face count.
        let rot: Vec<Vec<VertexId>> = [[1u32, 2, 3], [0, 2, 3], [0, 1, 3], [0, 2, 1]]
            .iter()
            .map(|l| l.iter().map(|&x| VertexId(x)).collect())
            .collect();
        assert!(matches!(PlanarMap::from_rotations(&rot), Err(MapError::NotPlanar(_))));
    }

    #[test]
    fn rejects_disconnected() {
        let rot: Vec<Vec<VertexId>> = [[1u32], [0], [3], [2]]
            .iter()
            .map(|l| l.iter().map(|&x| VertexId(x)).collect())
            .collect();
        assert_eq!(PlanarMap::from_rotations(&rot), Err(MapError::Disconnected));
    }

    #[test]
    fn dual_swaps_counts_and_is_an_involution() {
        for m in [tetrahedron(), pentagonal_prism()] {
            let d = m.dual();
            assert_eq!(d.map.vertex_count(), m.face_count());
            assert_eq!(d.map.face_count(), m.vertex_count());
            assert_eq!(d.map.edge_count(), m.edge_count());
            // every dual face walks around a single primal vertex
            for g in d.map.face_ids() {
                let v = d.face_to_vertex[g.index()];
                assert_eq!(d.map.face_size(g), m.degree(v));
                for x in d.map.face_darts(g) {
                    assert_eq!(m.head(x), v);
                }
            }
            let dd = d.map.dual();
            assert!(dd.map.is_isomorphic(&m, false));
        }
    }

    #[test]
    fn dual_of_prism_has_two_degree_five_vertices() {
        let d = pentagonal_prism().dual();
        let mut degs: Vec<usize> = d.map.vertices().map(|v| d.map.degree(v)).collect();
        degs.sort();
        assert_eq!(degs, [4, 4, 4, 4, 4, 5, 5]);
        assert!(d.map.face_ids().all(|f| d.map.face_size(f) == 3));
    }

    #[test]
    fn truncated_tetrahedron() {
        let t = tetrahedron().truncate().unwrap();
        let m = &t.map;
        assert_eq!((m.vertex_count(), m.edge_count(), m.face_count()), (12, 18, 8));
        assert!(m.is_cubic());
        let mut from_vertices = 0;
        for f in m.face_ids() {
            match t.face_origin[f.index()] {
                TruncatedFace::Vertex(_) => {
                    from_vertices += 1;
                    assert_eq!(m.face_size(f), 3);
                }
                TruncatedFace::Face(_) => assert_eq!(m.face_size(f), 6),
            }
        }
        assert_eq!(from_vertices, 4);
    }

    #[test]
    fn truncation_rejects_low_degree() {
        assert!(matches!(
            hexagon_cycle().truncate(),
            Err(MapError::DegreeTooLow(_, 2))
        ));
    }

    #[test]
    fn canonical_code_distinguishes_and_identifies() {
        let a = tetrahedron();
        let b = pentagonal_prism();
        assert!(!a.is_isomorphic(&b, true));
        // relabel the prism by a permutation of its vertices
        let perm = [3u32, 7, 1, 9, 0, 5, 2, 8, 4, 6];
        let mut rot = alloc::vec![Vec::new(); 10];
        for v in b.vertices() {
            rot[perm[v.index()] as usize] =
                b.neighbors(v).map(|w| VertexId(perm[w.index()])).collect();
        }
        let c = PlanarMap::from_rotations(&rot).unwrap();
        assert_ne!(b, c);
        assert!(b.is_isomorphic(&c, false));
        // the mirror image is only equal when reflections are allowed
        let mirrored: Vec<Vec<VertexId>> = rot
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        let m = PlanarMap::from_rotations(&mirrored).unwrap();
        assert!(b.is_isomorphic(&m, true));
    }
}
