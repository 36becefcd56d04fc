//! Stable-tree decompositions: the partial coloring state used while
//! coloring ears, and classification of complete colorings.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::planar_map::{FaceId, PlanarMap, VertexId};

const NO_COMPONENT: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Uncolored,
    White,
    Black,
}

/// Raised when a coloring step would break a state invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StateError {
    #[error("vertex {0} is already colored")]
    AlreadyColored(VertexId),
    #[error("vertex {0} is not black")]
    NotBlack(VertexId),
    #[error("white vertices {0} and {1} are adjacent")]
    AdjacentWhites(VertexId, VertexId),
    #[error("coloring {0} black closes a cycle")]
    BlackCycle(VertexId),
    #[error("black component containing {0} is not a tree")]
    NotATree(VertexId),
    #[error("black component containing {0} has no contact vertex")]
    NoContact(VertexId),
}

/// A partial coloring of the graph with its black forest.
///
/// Components are kept sorted by their smallest vertex, and each component's
/// vertex list is sorted, so equal colorings compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompState {
    color: Vec<Color>,
    comp: Vec<u32>,
    components: Vec<Vec<VertexId>>,
    white_count: usize,
    frontier: usize,
}

impl DecompState {
    /// All vertices uncolored; `frontier` is the index of the first ear that
    /// is still uncolored plus one, i.e. the number of ears left to color.
    pub fn new(n: usize, frontier: usize) -> Self {
        DecompState {
            color: vec![Color::Uncolored; n],
            comp: vec![NO_COMPONENT; n],
            components: Vec::new(),
            white_count: 0,
            frontier,
        }
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.color[v.index()]
    }

    pub fn colors(&self) -> &[Color] {
        &self.color
    }

    pub fn is_colored(&self, v: VertexId) -> bool {
        self.color[v.index()] != Color::Uncolored
    }

    pub fn component_of(&self, v: VertexId) -> Option<usize> {
        let c = self.comp[v.index()];
        (c != NO_COMPONENT).then_some(c as usize)
    }

    pub fn components(&self) -> &[Vec<VertexId>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn white_count(&self) -> usize {
        self.white_count
    }

    pub fn frontier(&self) -> usize {
        self.frontier
    }

    pub(crate) fn set_frontier(&mut self, frontier: usize) {
        self.frontier = frontier;
    }

    pub fn whites(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices_with(Color::White)
    }

    pub fn blacks(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices_with(Color::Black)
    }

    fn vertices_with(&self, c: Color) -> impl Iterator<Item = VertexId> + '_ {
        self.color
            .iter()
            .enumerate()
            .filter(move |(_, &x)| x == c)
            .map(|(i, _)| VertexId::new(i))
    }

    pub fn has_uncolored(&self) -> bool {
        self.color.contains(&Color::Uncolored)
    }

    /// Black vertices of component `i` that have an uncolored neighbor.
    pub fn contacts(&self, map: &PlanarMap, i: usize) -> Vec<VertexId> {
        self.components[i]
            .iter()
            .copied()
            .filter(|&v| map.neighbors(v).any(|w| !self.is_colored(w)))
            .collect()
    }

    /// Edges induced by component `i`, as vertex pairs with the smaller first.
    pub fn component_edges(&self, map: &PlanarMap, i: usize) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for &v in &self.components[i] {
            for w in map.neighbors(v) {
                if v < w && self.comp[w.index()] == i as u32 {
                    out.push((v, w));
                }
            }
        }
        out
    }

    pub fn add_black(&mut self, map: &PlanarMap, v: VertexId) -> Result<(), StateError> {
        if self.is_colored(v) {
            return Err(StateError::AlreadyColored(v));
        }
        let mut touched: Vec<u32> = Vec::with_capacity(3);
        for w in map.neighbors(v) {
            let c = self.comp[w.index()];
            if c != NO_COMPONENT {
                if touched.contains(&c) {
                    return Err(StateError::BlackCycle(v));
                }
                touched.push(c);
            }
        }
        self.color[v.index()] = Color::Black;
        let mut merged = vec![v];
        for &c in &touched {
            merged.append(&mut self.components[c as usize]);
        }
        self.components.retain(|c| !c.is_empty());
        self.components.push(merged);
        self.reindex();
        Ok(())
    }

    pub fn add_white(&mut self, map: &PlanarMap, v: VertexId) -> Result<(), StateError> {
        if self.is_colored(v) {
            return Err(StateError::AlreadyColored(v));
        }
        self.check_white_neighbors(map, v)?;
        self.color[v.index()] = Color::White;
        self.white_count += 1;
        Ok(())
    }

    /// Turns a black vertex white and splits its component.
    pub fn recolor_white(&mut self, map: &PlanarMap, x: VertexId) -> Result<(), StateError> {
        if self.color(x) != Color::Black {
            return Err(StateError::NotBlack(x));
        }
        self.check_white_neighbors(map, x)?;
        let c = self.comp[x.index()] as usize;
        let old = core::mem::take(&mut self.components[c]);
        self.color[x.index()] = Color::White;
        self.white_count += 1;
        self.comp[x.index()] = NO_COMPONENT;
        for &v in &old {
            if v != x {
                self.comp[v.index()] = NO_COMPONENT;
            }
        }
        // regrow pieces of the old component without x
        for &start in &old {
            if start == x || self.comp[start.index()] != NO_COMPONENT {
                continue;
            }
            let piece_id = self.components.len() as u32;
            let mut piece = vec![start];
            self.comp[start.index()] = piece_id;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in map.neighbors(v) {
                    if self.color(w) == Color::Black && self.comp[w.index()] == NO_COMPONENT {
                        self.comp[w.index()] = piece_id;
                        piece.push(w);
                        queue.push_back(w);
                    }
                }
            }
            self.components.push(piece);
        }
        self.components.retain(|c| !c.is_empty());
        self.reindex();
        Ok(())
    }

    fn check_white_neighbors(&self, map: &PlanarMap, v: VertexId) -> Result<(), StateError> {
        match map.neighbors(v).find(|&w| self.color(w) == Color::White) {
            Some(w) => Err(StateError::AdjacentWhites(v, w)),
            None => Ok(()),
        }
    }

    fn reindex(&mut self) {
        for c in &mut self.components {
            c.sort_unstable();
        }
        self.components.sort_unstable_by_key(|c| c[0]);
        for (i, c) in self.components.iter().enumerate() {
            for v in c {
                self.comp[v.index()] = i as u32;
            }
        }
    }

    /// Checks stability, that every component is a tree, and that every
    /// component has a contact while some vertex is uncolored.
    pub fn check_invariants(&self, map: &PlanarMap) -> Result<(), StateError> {
        for v in self.whites() {
            self.check_white_neighbors(map, v)?;
        }
        let pending = self.has_uncolored();
        for i in 0..self.components.len() {
            let first = self.components[i][0];
            let edges = self.component_edges(map, i).len();
            if edges + 1 != self.components[i].len() {
                return Err(StateError::NotATree(first));
            }
            if pending && self.contacts(map, i).is_empty() {
                return Err(StateError::NoContact(first));
            }
        }
        Ok(())
    }

    /// The white set as a sorted list, a canonical key for the coloring once
    /// every vertex is colored.
    pub fn white_key(&self) -> Vec<VertexId> {
        self.whites().collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DecompositionKind {
    Proper,
    Improper,
}

/// A proper stable-tree decomposition, or an improper one with three black
/// trees and at least one graceful hexagon.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneralizedDecomposition {
    pub kind: DecompositionKind,
    pub white: Vec<VertexId>,
    pub black: Vec<VertexId>,
    pub components: Vec<Vec<VertexId>>,
    pub graceful_hexagons: Vec<FaceId>,
    pub graceful_vertices: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    NotAPartition,
    WhiteNotStable(VertexId, VertexId),
    BlackCycle,
    ComponentCount(usize),
    NoGracefulHexagon,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("not a generalized stable-tree decomposition: {0:?}")]
    NotADecomposition(Rejection),
}

/// Components of the subgraph induced by `black`, or `None` if it has a cycle.
pub fn black_forest(map: &PlanarMap, black: &[bool]) -> Option<Vec<Vec<VertexId>>> {
    let n = map.vertex_count();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for s in 0..n {
        if !black[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![VertexId::new(s)];
        let mut queue = VecDeque::from([VertexId::new(s)]);
        let mut degree_sum = 0usize;
        while let Some(v) = queue.pop_front() {
            for w in map.neighbors(v) {
                if black[w.index()] {
                    degree_sum += 1;
                    if !seen[w.index()] {
                        seen[w.index()] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
        }
        if degree_sum / 2 + 1 != comp.len() {
            return None;
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    Some(comps)
}

fn component_index(n: usize, components: &[Vec<VertexId>]) -> Vec<u32> {
    let mut idx = vec![NO_COMPONENT; n];
    for (i, c) in components.iter().enumerate() {
        for v in c {
            idx[v.index()] = i as u32;
        }
    }
    idx
}

/// Hexagons meeting all three black components.
pub fn find_graceful_hexagons(map: &PlanarMap, components: &[Vec<VertexId>]) -> Vec<FaceId> {
    if components.len() != 3 {
        return Vec::new();
    }
    let idx = component_index(map.vertex_count(), components);
    map.face_ids()
        .filter(|&f| map.face_size(f) == 6)
        .filter(|&f| {
            let mut hit = [false; 3];
            for v in map.face_vertices(f) {
                let c = idx[v.index()];
                if c != NO_COMPONENT {
                    hit[c as usize] = true;
                }
            }
            hit == [true; 3]
        })
        .collect()
}

/// White vertices whose three neighbors lie in three distinct black components.
pub fn find_graceful_vertices(
    map: &PlanarMap,
    white: &[VertexId],
    components: &[Vec<VertexId>],
) -> Vec<VertexId> {
    if components.len() != 3 {
        return Vec::new();
    }
    let idx = component_index(map.vertex_count(), components);
    let mut out: Vec<VertexId> = white
        .iter()
        .copied()
        .filter(|&w| {
            let mut hit = [false; 3];
            let mut count = 0;
            for u in map.neighbors(w) {
                let c = idx[u.index()];
                if c != NO_COMPONENT && !hit[c as usize] {
                    hit[c as usize] = true;
                    count += 1;
                }
            }
            count == 3
        })
        .collect();
    out.sort_unstable();
    out
}

/// Decides whether `(white, black)` is a proper or improper stable-tree
/// decomposition of `map`.
pub fn classify(
    map: &PlanarMap,
    white: &[VertexId],
    black: &[VertexId],
) -> Result<GeneralizedDecomposition, DecompError> {
    let reject = |r| Err(DecompError::NotADecomposition(r));
    let n = map.vertex_count();
    let mut color = vec![Color::Uncolored; n];
    for (set, c) in [(white, Color::White), (black, Color::Black)] {
        for &v in set {
            if v.index() >= n || color[v.index()] != Color::Uncolored {
                return reject(Rejection::NotAPartition);
            }
            color[v.index()] = c;
        }
    }
    if color.contains(&Color::Uncolored) {
        return reject(Rejection::NotAPartition);
    }
    for &v in white {
        if let Some(w) = map.neighbors(v).find(|&w| color[w.index()] == Color::White) {
            return reject(Rejection::WhiteNotStable(v.min(w), v.max(w)));
        }
    }
    let is_black: Vec<bool> = color.iter().map(|&c| c == Color::Black).collect();
    let Some(components) = black_forest(map, &is_black) else {
        return reject(Rejection::BlackCycle);
    };
    let mut white: Vec<VertexId> = white.to_vec();
    white.sort_unstable();
    let mut black: Vec<VertexId> = black.to_vec();
    black.sort_unstable();
    match components.len() {
        1 => Ok(GeneralizedDecomposition {
            kind: DecompositionKind::Proper,
            white,
            black,
            components,
            graceful_hexagons: Vec::new(),
            graceful_vertices: Vec::new(),
        }),
        3 => {
            let graceful_hexagons = find_graceful_hexagons(map, &components);
            if graceful_hexagons.is_empty() {
                return reject(Rejection::NoGracefulHexagon);
            }
            let graceful_vertices = find_graceful_vertices(map, &white, &components);
            Ok(GeneralizedDecomposition {
                kind: DecompositionKind::Improper,
                white,
                black,
                components,
                graceful_hexagons,
                graceful_vertices,
            })
        }
        c => reject(Rejection::ComponentCount(c)),
    }
}

/// `|W| = k` for proper and `|W| = k + 1` for improper decompositions.
pub fn check_white_count(d: &GeneralizedDecomposition, k: usize) -> bool {
    match d.kind {
        DecompositionKind::Proper => d.white.len() == k,
        DecompositionKind::Improper => d.white.len() == k + 1,
    }
}

/// The dichotomy every improper decomposition of a fullerene satisfies:
/// a second graceful hexagon or a graceful vertex.
pub fn satisfies_graceful_dichotomy(d: &GeneralizedDecomposition) -> bool {
    d.kind != DecompositionKind::Improper
        || d.graceful_hexagons.len() >= 2
        || !d.graceful_vertices.is_empty()
}
