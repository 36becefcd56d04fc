//! Hamilton cycles of the leapfrog from stable-tree decompositions.
//!
//! The faces of `H` coming from black vertices of `G` form a tree of faces.
//! Its boundary visits every vertex of `H` once. An improper decomposition
//! has three trees; adding a connector face that touches all three gives a
//! tree of faces again, and two different connectors give two cycles.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::fullerene::LeapfrogResult;
use crate::planar_map::{DartId, FaceId, PlanarMap, VertexId};
use crate::stable_tree::{DecompositionKind, GeneralizedDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HamiltonError {
    #[error("region of {faces} faces has {adjacencies} adjacencies and is not a tree")]
    NotATree { faces: usize, adjacencies: usize },
    #[error("improper decomposition has {found} connectors, 2 needed")]
    ConnectorShortage { found: usize },
    #[error("{0} and {1} are not adjacent")]
    NotAnEdge(VertexId, VertexId),
    #[error("vertex {0} has degree {1} in the edge set")]
    NotTwoRegular(VertexId, usize),
    #[error("edge set splits into several cycles ({reached} of {total} edges reached)")]
    Disconnected { reached: usize, total: usize },
    #[error("cycle covers {covered} of {total} vertices")]
    NotSpanning { covered: usize, total: usize },
    #[error("both connectors give the same cycle")]
    ConnectorsCoincide,
}

/// A set of faces of `H`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceRegion(pub Vec<FaceId>);

impl FaceRegion {
    pub fn new(mut faces: Vec<FaceId>) -> Self {
        faces.sort_unstable();
        faces.dedup();
        FaceRegion(faces)
    }

    pub fn faces(&self) -> &[FaceId] {
        &self.0
    }

    pub fn contains(&self, f: FaceId) -> bool {
        self.0.binary_search(&f).is_ok()
    }

    fn membership(&self, map: &PlanarMap) -> Vec<bool> {
        let mut inside = vec![false; map.face_count()];
        for f in &self.0 {
            inside[f.index()] = true;
        }
        inside
    }

    /// Number of `H`-edges with a region face on both sides.
    pub fn adjacency_count(&self, map: &PlanarMap) -> usize {
        let inside = self.membership(map);
        map.edges()
            .filter(|&e| {
                let d = DartId(e.0);
                inside[map.face_of(d).index()] && inside[map.face_of(map.twin(d)).index()]
            })
            .count()
    }

    /// True iff the face-adjacency graph of the region is a tree.
    pub fn is_tree(&self, map: &PlanarMap) -> bool {
        if self.0.is_empty() || self.adjacency_count(map) != self.0.len() - 1 {
            return false;
        }
        let inside = self.membership(map);
        let mut seen = vec![false; map.face_count()];
        seen[self.0[0].index()] = true;
        let mut queue = VecDeque::from([self.0[0]]);
        let mut reached = 1;
        while let Some(f) = queue.pop_front() {
            for d in map.face_darts(f) {
                let g = map.face_of(map.twin(d));
                if inside[g.index()] && !seen[g.index()] {
                    seen[g.index()] = true;
                    reached += 1;
                    queue.push_back(g);
                }
            }
        }
        reached == self.0.len()
    }
}

/// A face joining the three black trees of an improper decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Connector {
    /// A graceful hexagon of `G`.
    Hexagon(FaceId),
    /// A graceful vertex of `G`.
    Vertex(VertexId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regions {
    pub regions: Vec<FaceRegion>,
    /// Connectors used, one per region (empty for proper decompositions).
    pub connectors: Vec<Connector>,
    /// Connectors available beyond the two that were used.
    pub unused_connectors: Vec<Connector>,
}

/// One region for a proper decomposition, two for an improper one.
pub fn build_regions(d: &GeneralizedDecomposition, lf: &LeapfrogResult) -> Result<Regions, HamiltonError> {
    let black_faces: Vec<FaceId> = d.black.iter().map(|v| lf.face_of_g_vertex[v.index()]).collect();
    let (regions, connectors, unused_connectors) = match d.kind {
        DecompositionKind::Proper => (vec![FaceRegion::new(black_faces)], Vec::new(), Vec::new()),
        DecompositionKind::Improper => {
            let mut all: Vec<Connector> = d.graceful_hexagons.iter().map(|&f| Connector::Hexagon(f)).collect();
            all.extend(d.graceful_vertices.iter().map(|&v| Connector::Vertex(v)));
            if all.len() < 2 {
                return Err(HamiltonError::ConnectorShortage { found: all.len() });
            }
            let unused = all.split_off(2);
            let regions = all
                .iter()
                .map(|c| {
                    let mut faces = black_faces.clone();
                    faces.push(match *c {
                        Connector::Hexagon(f) => lf.face_of_g_face[f.index()],
                        Connector::Vertex(v) => lf.face_of_g_vertex[v.index()],
                    });
                    FaceRegion::new(faces)
                })
                .collect();
            (regions, all, unused)
        }
    };
    for r in &regions {
        if !r.is_tree(&lf.h) {
            return Err(HamiltonError::NotATree {
                faces: r.0.len(),
                adjacencies: r.adjacency_count(&lf.h),
            });
        }
    }
    Ok(Regions {
        regions,
        connectors,
        unused_connectors,
    })
}

/// Edges of `map` with a region face on exactly one side, as sorted
/// `(min, max)` endpoint pairs.
pub fn region_boundary(map: &PlanarMap, region: &FaceRegion) -> Vec<(VertexId, VertexId)> {
    let inside = region.membership(map);
    let mut out: Vec<(VertexId, VertexId)> = map
        .edges()
        .filter(|&e| {
            let d = DartId(e.0);
            inside[map.face_of(d).index()] != inside[map.face_of(map.twin(d)).index()]
        })
        .map(|e| {
            let (a, b) = map.edge_endpoints(e);
            (a.min(b), a.max(b))
        })
        .collect();
    out.sort_unstable();
    out
}

/// A Hamilton cycle stored as its sorted edge list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HamiltonCycle(Vec<(VertexId, VertexId)>);

impl HamiltonCycle {
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.0.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Vertices in cycle order, starting at the smallest vertex and moving
    /// to its smaller cycle neighbor.
    pub fn vertex_sequence(&self) -> Vec<VertexId> {
        let Some(&(start, _)) = self.0.first() else {
            return Vec::new();
        };
        let mut nbrs: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for &(a, b) in &self.0 {
            nbrs.entry(a).or_default().push(b);
            nbrs.entry(b).or_default().push(a);
        }
        let mut seq = vec![start];
        let mut prev = start;
        let mut cur = *nbrs[&start].iter().min().expect("degree 2");
        while cur != start {
            seq.push(cur);
            let next = nbrs[&cur].iter().copied().find(|&w| w != prev).expect("degree 2");
            prev = cur;
            cur = next;
        }
        seq
    }
}

/// Checks that `edges` is one cycle through every vertex of `map`.
pub fn verify_hamilton(map: &PlanarMap, edges: &[(VertexId, VertexId)]) -> Result<HamiltonCycle, HamiltonError> {
    let n = map.vertex_count();
    let mut canonical: Vec<(VertexId, VertexId)> = Vec::with_capacity(edges.len());
    let mut incident: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for &(a, b) in edges {
        if a.index() >= n || b.index() >= n || !map.is_adjacent(a, b) {
            return Err(HamiltonError::NotAnEdge(a, b));
        }
        canonical.push((a.min(b), a.max(b)));
    }
    canonical.sort_unstable();
    canonical.dedup();
    for &(a, b) in &canonical {
        incident[a.index()].push(b);
        incident[b.index()].push(a);
    }
    for (v, nb) in incident.iter().enumerate() {
        if !nb.is_empty() && nb.len() != 2 {
            return Err(HamiltonError::NotTwoRegular(VertexId::new(v), nb.len()));
        }
    }
    let Some(&(start, _)) = canonical.first() else {
        return Err(HamiltonError::NotSpanning { covered: 0, total: n });
    };
    let mut reached = 0;
    let mut prev = start;
    let mut cur = incident[start.index()][0];
    loop {
        reached += 1;
        if cur == start {
            break;
        }
        let nb = &incident[cur.index()];
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
    }
    if reached != canonical.len() {
        return Err(HamiltonError::Disconnected {
            reached,
            total: canonical.len(),
        });
    }
    if canonical.len() != n {
        return Err(HamiltonError::NotSpanning {
            covered: canonical.len(),
            total: n,
        });
    }
    Ok(HamiltonCycle(canonical))
}

/// The verified cycles of `H` belonging to one decomposition of `G`.
pub fn cycles_for_decomposition(
    d: &GeneralizedDecomposition,
    lf: &LeapfrogResult,
) -> Result<Vec<HamiltonCycle>, HamiltonError> {
    let regions = build_regions(d, lf)?;
    let cycles = regions
        .regions
        .iter()
        .map(|r| verify_hamilton(&lf.h, &region_boundary(&lf.h, r)))
        .collect::<Result<Vec<_>, _>>()?;
    if cycles.len() == 2 && cycles[0] == cycles[1] {
        return Err(HamiltonError::ConnectorsCoincide);
    }
    Ok(cycles)
}

/// A cycle seen more than once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collision {
    /// Input positions holding this cycle, in ascending order.
    pub positions: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DedupReport {
    /// Distinct cycles, sorted.
    pub unique: Vec<HamiltonCycle>,
    pub collisions: Vec<Collision>,
}

/// Distinct cycles of `cycles` together with every repeated one.
pub fn dedup(cycles: &[HamiltonCycle]) -> DedupReport {
    let mut seen: BTreeMap<&HamiltonCycle, Vec<usize>> = BTreeMap::new();
    for (i, c) in cycles.iter().enumerate() {
        seen.entry(c).or_default().push(i);
    }
    let mut collisions: Vec<Collision> = seen
        .values()
        .filter(|p| p.len() > 1)
        .map(|p| Collision { positions: p.clone() })
        .collect();
    collisions.sort_unstable_by_key(|c| c.positions[0]);
    DedupReport {
        unique: seen.into_keys().cloned().collect(),
        collisions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::samples;

    fn prism() -> PlanarMap {
        samples::pentagonal_prism()
    }

    fn pentagon_faces(m: &PlanarMap) -> Vec<FaceId> {
        m.face_ids().filter(|&f| m.face_size(f) == 5).collect()
    }

    #[test]
    fn single_face_boundary_is_its_cycle() {
        let m = prism();
        let f = pentagon_faces(&m)[0];
        let b = region_boundary(&m, &FaceRegion::new(vec![f]));
        assert_eq!(b.len(), 5);
        assert_eq!(
            verify_hamilton(&m, &b),
            Err(HamiltonError::NotSpanning { covered: 5, total: 10 })
        );
    }

    #[test]
    fn two_adjacent_faces_give_symmetric_difference() {
        let m = prism();
        let p = pentagon_faces(&m)[0];
        let q = m.adjacent_faces(p)[0];
        let r = FaceRegion::new(vec![p, q]);
        assert!(r.is_tree(&m));
        assert_eq!(region_boundary(&m, &r).len(), 5 + 4 - 2);
    }

    #[test]
    fn both_pentagons_are_disjoint_cycles() {
        let m = prism();
        let mut edges = Vec::new();
        for f in pentagon_faces(&m) {
            edges.extend(region_boundary(&m, &FaceRegion::new(vec![f])));
        }
        assert!(matches!(verify_hamilton(&m, &edges), Err(HamiltonError::Disconnected { .. })));
    }

    #[test]
    fn prism_hamilton_cycle_from_four_squares() {
        let m = prism();
        let squares: Vec<FaceId> = m.face_ids().filter(|&f| m.face_size(f) == 4).collect();
        // four consecutive squares around the prism form a path of faces
        let mut path = vec![squares[0]];
        while path.len() < 4 {
            let last = *path.last().unwrap();
            let next = *m
                .adjacent_faces(last)
                .iter()
                .find(|f| squares.contains(f) && !path.contains(f))
                .unwrap();
            path.push(next);
        }
        let r = FaceRegion::new(path);
        assert!(r.is_tree(&m));
        let cyc = verify_hamilton(&m, &region_boundary(&m, &r)).unwrap();
        assert_eq!(cyc.len(), 10);
        let seq = cyc.vertex_sequence();
        assert_eq!(seq.len(), 10);
        for i in 0..10 {
            assert!(m.is_adjacent(seq[i], seq[(i + 1) % 10]));
        }
    }

    #[test]
    fn non_edges_and_bad_degrees_are_rejected() {
        let m = prism();
        let v = VertexId::new;
        assert!(matches!(verify_hamilton(&m, &[(v(0), v(2))]), Err(HamiltonError::NotAnEdge(..))));
        let star: Vec<(VertexId, VertexId)> = m.neighbors(v(0)).map(|w| (v(0), w)).collect();
        assert_eq!(verify_hamilton(&m, &star), Err(HamiltonError::NotTwoRegular(v(0), 3)));
    }

    #[test]
    fn dedup_reports_multiplicity() {
        assert_eq!(dedup(&[]), DedupReport::default());
        let m = prism();
        let f = pentagon_faces(&m);
        let c1 = HamiltonCycle(region_boundary(&m, &FaceRegion::new(vec![f[0]])));
        let c2 = HamiltonCycle(region_boundary(&m, &FaceRegion::new(vec![f[1]])));
        let r = dedup(&[c1.clone(), c2, c1]);
        assert_eq!(r.unique.len(), 2);
        assert_eq!(r.collisions, vec![Collision { positions: vec![0, 2] }]);
    }
}
