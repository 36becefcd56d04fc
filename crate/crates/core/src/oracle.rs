//! Brute-force ground truth for small instances.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::hamilton::{verify_hamilton, HamiltonCycle};
use crate::planar_map::{PlanarMap, VertexId};
use crate::stable_tree::{classify, DecompositionKind, GeneralizedDecomposition};

/// Default largest graph for [`enumerate_decompositions`].
pub const DEFAULT_MAX_VERTICES: usize = 32;

/// Default cycle cap for [`enumerate_hamilton_cycles`].
pub const DEFAULT_CYCLE_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, limit is {limit}")]
    InstanceTooLarge { n: usize, limit: usize },
}

#[derive(Clone, Copy, Debug, Default)]
pub struct HamiltonLimits {
    /// Stop once this many cycles have been found.
    pub cap: Option<u64>,
    /// Keep the cycles, not just count them.
    pub collect: bool,
}

#[derive(Clone, Debug, Default)]
pub struct HamiltonSearch {
    pub count: u64,
    /// The cycles found, when collected.
    pub cycles: Vec<HamiltonCycle>,
    /// False if the cap or the stop callback ended the search early.
    pub complete: bool,
}

struct CycleSearch<'a, F> {
    map: &'a PlanarMap,
    visited: Vec<bool>,
    /// Neighbors of each vertex that are unvisited or a path end.
    free: Vec<u32>,
    path: Vec<VertexId>,
    limits: HamiltonLimits,
    stop: F,
    nodes: u64,
    out: HamiltonSearch,
    halted: bool,
}

impl<F: FnMut() -> bool> CycleSearch<'_, F> {
    fn start_alive(&self, head: VertexId) -> bool {
        let start = self.path[0];
        self.map
            .neighbors(start)
            .any(|w| w == head || !self.visited[w.index()])
    }

    fn record(&mut self) {
        self.out.count += 1;
        if self.limits.collect {
            let n = self.path.len();
            let edges: Vec<(VertexId, VertexId)> =
                (0..n).map(|i| (self.path[i], self.path[(i + 1) % n])).collect();
            let cycle = verify_hamilton(self.map, &edges).expect("search builds Hamilton cycles");
            self.out.cycles.push(cycle);
        }
        if self.limits.cap.is_some_and(|c| self.out.count >= c) {
            self.halted = true;
        }
    }

    fn extend(&mut self) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) && (self.stop)() {
            self.halted = true;
        }
        if self.halted {
            return;
        }
        let head = *self.path.last().expect("path starts at the anchor");
        let n = self.map.vertex_count();
        if self.path.len() == n {
            // count each cycle in one direction only
            if self.map.is_adjacent(head, self.path[0]) && self.path[1] < head {
                self.record();
            }
            return;
        }
        let next: Vec<VertexId> = self.map.neighbors(head).filter(|w| !self.visited[w.index()]).collect();
        for w in next {
            if self.halted {
                return;
            }
            // head leaves the set of free vertices
            self.visited[w.index()] = true;
            self.path.push(w);
            let mut dead = false;
            if head != self.path[0] {
                for u in self.map.neighbors(head) {
                    self.free[u.index()] -= 1;
                    if !self.visited[u.index()] && self.free[u.index()] < 2 {
                        dead = true;
                    }
                }
            }
            if !dead && (self.path.len() == n || self.start_alive(w)) {
                self.extend();
            }
            if head != self.path[0] {
                for u in self.map.neighbors(head) {
                    self.free[u.index()] += 1;
                }
            }
            self.path.pop();
            self.visited[w.index()] = false;
        }
    }
}

/// Every Hamilton cycle of `map`, each counted once.
///
/// The search fixes vertex 0 as the start and only closes a cycle when its
/// second vertex is smaller than its last. `stop` is polled periodically;
/// returning true ends the search with `complete == false`.
pub fn enumerate_hamilton_cycles(
    map: &PlanarMap,
    limits: HamiltonLimits,
    stop: impl FnMut() -> bool,
) -> HamiltonSearch {
    let n = map.vertex_count();
    if n < 3 {
        return HamiltonSearch {
            complete: true,
            ..HamiltonSearch::default()
        };
    }
    let start = VertexId::new(0);
    let mut search = CycleSearch {
        map,
        visited: vec![false; n],
        free: map.vertices().map(|v| map.degree(v) as u32).collect(),
        path: vec![start],
        limits,
        stop,
        nodes: 0,
        out: HamiltonSearch::default(),
        halted: false,
    };
    search.visited[0] = true;
    search.extend();
    let mut out = search.out;
    out.complete = !search.halted;
    out
}

/// Which decompositions [`enumerate_decompositions`] keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum KindFilter {
    #[default]
    All,
    Proper,
    Improper,
}

impl KindFilter {
    fn accepts(self, kind: DecompositionKind) -> bool {
        match self {
            KindFilter::All => true,
            KindFilter::Proper => kind == DecompositionKind::Proper,
            KindFilter::Improper => kind == DecompositionKind::Improper,
        }
    }
}

/// Union-find without path compression, so unions can be undone.
struct RollbackDsu {
    parent: Vec<u32>,
    size: Vec<u32>,
    history: Vec<Option<(u32, u32)>>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: u32, b: u32) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            self.history.push(None);
            return false;
        }
        if self.size[a as usize] < self.size[b as usize] {
            core::mem::swap(&mut a, &mut b);
        }
        self.parent[b as usize] = a;
        self.size[a as usize] += self.size[b as usize];
        self.history.push(Some((a, b)));
        true
    }

    fn undo(&mut self) {
        if let Some(Some((a, b))) = self.history.pop() {
            self.parent[b as usize] = b;
            self.size[a as usize] -= self.size[b as usize];
        }
    }
}

struct DecompositionSearch<'a> {
    map: &'a PlanarMap,
    white: Vec<bool>,
    black: Vec<bool>,
    dsu: RollbackDsu,
    filter: KindFilter,
    out: Vec<GeneralizedDecomposition>,
}

impl DecompositionSearch<'_> {
    fn go(&mut self, i: usize) {
        let n = self.map.vertex_count();
        if i == n {
            let white: Vec<VertexId> = (0..n).filter(|&v| self.white[v]).map(VertexId::new).collect();
            let black: Vec<VertexId> = (0..n).filter(|&v| self.black[v]).map(VertexId::new).collect();
            if let Ok(d) = classify(self.map, &white, &black) {
                if self.filter.accepts(d.kind) {
                    self.out.push(d);
                }
            }
            return;
        }
        let v = VertexId::new(i);
        let earlier: Vec<VertexId> = self.map.neighbors(v).filter(|w| w.index() < i).collect();

        if !earlier.iter().any(|w| self.white[w.index()]) {
            self.white[i] = true;
            self.go(i + 1);
            self.white[i] = false;
        }

        self.black[i] = true;
        let mut joined = 0;
        let mut cycle = false;
        for w in earlier.iter().filter(|w| self.black[w.index()]) {
            joined += 1;
            if !self.dsu.union(i as u32, w.0) {
                cycle = true;
                break;
            }
        }
        if !cycle {
            self.go(i + 1);
        }
        for _ in 0..joined {
            self.dsu.undo();
        }
        self.black[i] = false;
    }
}

/// Every generalized stable-tree decomposition of `map` passing `filter`,
/// ordered by the coloring search (white before black, vertex 0 first).
pub fn enumerate_decompositions(
    map: &PlanarMap,
    filter: KindFilter,
    max_vertices: usize,
) -> Result<Vec<GeneralizedDecomposition>, OracleError> {
    let n = map.vertex_count();
    if n > max_vertices {
        return Err(OracleError::InstanceTooLarge { n, limit: max_vertices });
    }
    let mut search = DecompositionSearch {
        map,
        white: vec![false; n],
        black: vec![false; n],
        dsu: RollbackDsu::new(n),
        filter,
        out: Vec::new(),
    };
    search.go(0);
    Ok(search.out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::samples;

    fn all(map: &PlanarMap) -> HamiltonSearch {
        enumerate_hamilton_cycles(
            map,
            HamiltonLimits {
                cap: None,
                collect: true,
            },
            || false,
        )
    }

    #[test]
    fn k4_has_three_cycles() {
        let r = all(&samples::tetrahedron());
        assert_eq!(r.count, 3);
        assert!(r.complete);
        let mut c = r.cycles.clone();
        c.sort();
        c.dedup();
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn prism_cycle_count_matches_subset_search() {
        let m = samples::pentagonal_prism();
        let r = all(&m);
        // every edge subset of size n that verifies is a Hamilton cycle
        let edges: Vec<(VertexId, VertexId)> = m.edges().map(|e| m.edge_endpoints(e)).collect();
        let mut brute = 0;
        for mask in 0u32..(1 << edges.len()) {
            if mask.count_ones() as usize != m.vertex_count() {
                continue;
            }
            let pick: Vec<_> = (0..edges.len()).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
            if verify_hamilton(&m, &pick).is_ok() {
                brute += 1;
            }
        }
        assert_eq!(r.count, brute);
    }

    #[test]
    fn cap_and_stop_end_the_search() {
        let m = samples::pentagonal_prism();
        let r = enumerate_hamilton_cycles(
            &m,
            HamiltonLimits {
                cap: Some(1),
                collect: false,
            },
            || false,
        );
        assert_eq!((r.count, r.complete), (1, false));
    }

    #[test]
    fn cycle_graph_has_one_cycle() {
        assert_eq!(all(&samples::hexagon_cycle()).count, 1);
    }

    #[test]
    fn k4_decompositions() {
        // a white vertex leaves a black triangle; two whites are adjacent
        let m = samples::tetrahedron();
        assert!(enumerate_decompositions(&m, KindFilter::All, 32).unwrap().is_empty());
    }

    #[test]
    fn prism_proper_decompositions_are_valid() {
        let m = samples::pentagonal_prism();
        let ds = enumerate_decompositions(&m, KindFilter::Proper, 32).unwrap();
        assert!(!ds.is_empty());
        for d in &ds {
            assert_eq!(classify(&m, &d.white, &d.black).as_ref(), Ok(d));
        }
        // brute force over all 2^10 colorings
        let mut brute = 0;
        for mask in 0u32..1024 {
            let w: Vec<VertexId> = (0..10).filter(|&i| mask >> i & 1 == 1).map(VertexId::new).collect();
            let b: Vec<VertexId> = (0..10).filter(|&i| mask >> i & 1 == 0).map(VertexId::new).collect();
            if classify(&m, &w, &b).is_ok_and(|d| d.kind == DecompositionKind::Proper) {
                brute += 1;
            }
        }
        assert_eq!(ds.len(), brute);
    }

    #[test]
    fn guard_rejects_large_graphs() {
        let m = samples::pentagonal_prism();
        assert_eq!(
            enumerate_decompositions(&m, KindFilter::All, 8),
            Err(OracleError::InstanceTooLarge { n: 10, limit: 8 })
        );
    }
}
