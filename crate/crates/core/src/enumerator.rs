//! Enumeration of generalized stable-tree decompositions along a nice ear
//! decomposition.
//!
//! Ears are colored in descending order. Every step keeps the white set
//! stable and the black vertices a forest in which each tree still touches
//! an uncolored vertex. A step either has one child with the same number of
//! white vertices or two children with one more each. After the last ear the
//! initial hexagon is colored, which turns each partial coloring into two,
//! four or eight complete decompositions.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::ear::{Ear, NiceEarDecomposition};
use crate::fullerene::FullereneGraph;
use crate::planar_map::{PlanarMap, VertexId};
use crate::stable_tree::{
    check_white_count, classify, Color, DecompError, DecompState, DecompositionKind,
    GeneralizedDecomposition, StateError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("n = {0} is not of the form 4k - 2")]
    WrongResidue(usize),
    #[error("no ear has an internal vertex")]
    NoInternalEars,
    #[error("ear {ear}: {source}")]
    InvariantViolation { ear: usize, source: StateError },
    #[error("vertex {0} does not have exactly one neighbor off its ear")]
    AnchorShape(VertexId),
    #[error("vertices are not in one black component")]
    NotSameComponent,
    #[error("w0 + c = {w0} + {c} is not in {{1, 3, 5}}")]
    ParityViolation { w0: usize, c: usize },
    #[error("hexagon finalization ({subcase:?}) produced {valid} valid decompositions, {needed} needed")]
    CandidateValidationFailure {
        subcase: Subcase,
        valid: usize,
        needed: usize,
    },
}

/// Which way the initial hexagon is completed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subcase {
    /// `w0 + c = 5`: one anchor pair shares a component.
    OnePair,
    /// `w0 + c = 1`: all six anchors in one component.
    SingleComponent,
    /// `w0 + c = 3` with groups of sizes 4, 1, 1.
    FourOneOne,
    /// `w0 + c = 3` with groups of sizes 3, 2, 1.
    ThreeTwoOne,
    /// `w0 + c = 3` with groups of sizes 2, 2, 2: two improper decompositions.
    TwoTwoTwo,
}

/// The colored neighbor of an internal ear vertex that lies off the ear.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Anchor {
    /// The neighbor is not colored yet (it is internal to an earlier ear).
    Absent,
    White(VertexId),
    Black(VertexId, usize),
}

impl Anchor {
    fn component(self) -> Option<usize> {
        match self {
            Anchor::Black(_, c) => Some(c),
            _ => None,
        }
    }
}

/// Anchors of the internal vertices of `ear`, in path order.
pub fn ear_anchors(map: &PlanarMap, state: &DecompState, ear: &Ear) -> Result<Vec<Anchor>, EnumError> {
    let mut out = Vec::with_capacity(ear.internal().len());
    for i in 1..ear.path.len() - 1 {
        let v = ear.path[i];
        let (a, b) = (ear.path[i - 1], ear.path[i + 1]);
        let mut off = map.neighbors(v).filter(|&w| w != a && w != b);
        let (Some(u), None) = (off.next(), off.next()) else {
            return Err(EnumError::AnchorShape(v));
        };
        out.push(anchor_of(state, u));
    }
    Ok(out)
}

fn anchor_of(state: &DecompState, u: VertexId) -> Anchor {
    match state.color(u) {
        Color::Uncolored => Anchor::Absent,
        Color::White => Anchor::White(u),
        Color::Black => Anchor::Black(u, state.component_of(u).expect("black vertex has a component")),
    }
}

/// The decomposition of the last ear with internal vertices: all of them black.
pub fn root_state(g: &FullereneGraph, ed: &NiceEarDecomposition) -> Result<DecompState, EnumError> {
    let map = g.map();
    let j_max = ed
        .ears
        .iter()
        .rposition(|e| !e.internal().is_empty())
        .ok_or(EnumError::NoInternalEars)?;
    let mut state = DecompState::new(map.vertex_count(), j_max);
    for &v in ed.ears[j_max].internal() {
        state
            .add_black(map, v)
            .map_err(|source| EnumError::InvariantViolation { ear: j_max, source })?;
    }
    Ok(state)
}

/// The unique vertex shared by the three pairwise paths between `a`, `b`
/// and `c` in the tree `component`.
pub fn tree_median(
    map: &PlanarMap,
    component: &[VertexId],
    a: VertexId,
    b: VertexId,
    c: VertexId,
) -> Result<VertexId, EnumError> {
    let inside = |v: VertexId| component.binary_search(&v).is_ok();
    if !inside(a) || !inside(b) || !inside(c) {
        return Err(EnumError::NotSameComponent);
    }
    // BFS tree rooted at a
    let mut parent: Vec<Option<VertexId>> = vec![None; map.vertex_count()];
    let mut seen = vec![false; map.vertex_count()];
    seen[a.index()] = true;
    let mut queue = VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        for w in map.neighbors(v) {
            if inside(w) && !seen[w.index()] {
                seen[w.index()] = true;
                parent[w.index()] = Some(v);
                queue.push_back(w);
            }
        }
    }
    if !seen[b.index()] || !seen[c.index()] {
        return Err(EnumError::NotSameComponent);
    }
    let mut on_ab = vec![false; map.vertex_count()];
    let mut x = b;
    loop {
        on_ab[x.index()] = true;
        match parent[x.index()] {
            Some(p) => x = p,
            None => break,
        }
    }
    let mut y = c;
    while !on_ab[y.index()] {
        y = parent[y.index()].expect("a lies on every root path");
    }
    Ok(y)
}

fn violation(ear: usize) -> impl Fn(StateError) -> EnumError {
    move |source| EnumError::InvariantViolation { ear, source }
}

/// Colors the internal vertices of `ear` (index `ear_index`) in every way
/// the propagation rules allow. Children come white-on-lower-position first.
pub fn propagate_ear(
    map: &PlanarMap,
    state: &DecompState,
    ear: &Ear,
    ear_index: usize,
) -> Result<Vec<DecompState>, EnumError> {
    let internal = ear.internal();
    let anchors = ear_anchors(map, state, ear)?;
    let err = violation(ear_index);
    let color_all = |whites: &[usize], median: Option<VertexId>| -> Result<DecompState, EnumError> {
        let mut s = state.clone();
        if let Some(x) = median {
            s.recolor_white(map, x).map_err(&err)?;
        }
        for (i, &v) in internal.iter().enumerate() {
            if whites.contains(&i) {
                s.add_white(map, v).map_err(&err)?;
            } else {
                s.add_black(map, v).map_err(&err)?;
            }
        }
        s.set_frontier(ear_index);
        s.check_invariants(map).map_err(&err)?;
        Ok(s)
    };
    let children = match internal.len() {
        0 => {
            let mut s = state.clone();
            s.set_frontier(ear_index);
            vec![s]
        }
        1 => vec![color_all(&[], None)?],
        2 => match (anchors[0].component(), anchors[1].component()) {
            (Some(c1), Some(c2)) if c1 == c2 => {
                vec![color_all(&[0], None)?, color_all(&[1], None)?]
            }
            _ => vec![color_all(&[], None)?],
        },
        3 => {
            let comps: Vec<Option<usize>> = anchors.iter().map(|a| a.component()).collect();
            let same = |i: usize, j: usize| comps[i].is_some() && comps[i] == comps[j];
            if same(0, 1) && same(1, 2) {
                let c = comps[0].expect("checked");
                let us: Vec<VertexId> = anchors
                    .iter()
                    .map(|a| match *a {
                        Anchor::Black(u, _) => u,
                        _ => unreachable!("all anchors black"),
                    })
                    .collect();
                let x = tree_median(map, &state.components()[c], us[0], us[1], us[2])?;
                vec![color_all(&[1], None)?, color_all(&[], Some(x))?]
            } else if let Some((i, j)) = [(0, 1), (0, 2), (1, 2)].into_iter().find(|&(i, j)| same(i, j)) {
                vec![color_all(&[i], None)?, color_all(&[j], None)?]
            } else {
                vec![color_all(&[], None)?]
            }
        }
        _ => {
            return Err(EnumError::InvariantViolation {
                ear: ear_index,
                source: StateError::NotATree(internal[0]),
            })
        }
    };
    Ok(children)
}

/// One way of coloring the initial hexagon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    /// Positions on the hexagon that become white; the rest become black.
    pub white_positions: Vec<usize>,
    /// Hexagon positions whose anchors' tree median is recolored white.
    pub median_of: Option<[usize; 3]>,
}

/// A candidate together with the outcome of validating it.
#[derive(Clone, Debug)]
pub struct CandidateOutcome {
    pub candidate: Candidate,
    pub result: Result<GeneralizedDecomposition, CandidateRejection>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CandidateRejection {
    State(StateError),
    Median(EnumError),
    Classify(DecompError),
    WrongKind(DecompositionKind),
}

/// The bookkeeping of one hexagon finalization.
#[derive(Clone, Debug)]
pub struct Finalization {
    pub subcase: Subcase,
    /// White anchors among `u1..u6`.
    pub w0: usize,
    /// Number of black components before the hexagon is colored.
    pub c: usize,
    /// Number of white vertices before the hexagon is colored.
    pub w1: usize,
    /// Every candidate considered, valid or not.
    pub candidates: Vec<CandidateOutcome>,
    /// The emitted decompositions, in candidate order.
    pub decompositions: Vec<GeneralizedDecomposition>,
}

impl Finalization {
    /// `w1 = k - (7 - (w0 + c)) / 2`.
    pub fn white_formula_holds(&self, k: usize) -> bool {
        let s = self.w0 + self.c;
        s <= 7 && (7 - s).is_multiple_of(2) && self.w1 + (7 - s) / 2 == k
    }
}

fn apply_candidate(
    map: &PlanarMap,
    state: &DecompState,
    e0: &[VertexId],
    anchors: &[VertexId],
    cand: &Candidate,
    expected: DecompositionKind,
) -> Result<GeneralizedDecomposition, CandidateRejection> {
    let mut s = state.clone();
    if let Some(pos) = cand.median_of {
        let u = [anchors[pos[0]], anchors[pos[1]], anchors[pos[2]]];
        let c = s
            .component_of(u[0])
            .ok_or(CandidateRejection::Median(EnumError::NotSameComponent))?;
        let x = tree_median(map, &s.components()[c], u[0], u[1], u[2])
            .map_err(CandidateRejection::Median)?;
        s.recolor_white(map, x).map_err(CandidateRejection::State)?;
    }
    for (i, &v) in e0.iter().enumerate() {
        let r = if cand.white_positions.contains(&i) {
            s.add_white(map, v)
        } else {
            s.add_black(map, v)
        };
        r.map_err(CandidateRejection::State)?;
    }
    s.set_frontier(0);
    let white: Vec<VertexId> = s.whites().collect();
    let black: Vec<VertexId> = s.blacks().collect();
    let d = classify(map, &white, &black).map_err(CandidateRejection::Classify)?;
    if d.kind != expected {
        return Err(CandidateRejection::WrongKind(d.kind));
    }
    Ok(d)
}

fn cyclically_adjacent(a: usize, b: usize) -> bool {
    let d = a.abs_diff(b);
    d == 1 || d == 5
}

/// Colors the initial hexagon of `ed` on top of a coloring of everything else.
pub fn finalize_e0(
    map: &PlanarMap,
    state: &DecompState,
    e0: &[VertexId],
) -> Result<Finalization, EnumError> {
    // u_i: the neighbor of v_i off the hexagon
    let mut anchors = Vec::with_capacity(6);
    for (i, &v) in e0.iter().enumerate() {
        let (a, b) = (e0[(i + 5) % 6], e0[(i + 1) % 6]);
        let mut off = map.neighbors(v).filter(|&w| w != a && w != b);
        let (Some(u), None) = (off.next(), off.next()) else {
            return Err(EnumError::AnchorShape(v));
        };
        if !state.is_colored(u) {
            return Err(EnumError::AnchorShape(v));
        }
        anchors.push(u);
    }
    let w0 = anchors.iter().filter(|&&u| state.color(u) == Color::White).count();
    let c = state.component_count();
    let w1 = state.white_count();
    if !matches!(w0 + c, 1 | 3 | 5) {
        return Err(EnumError::ParityViolation { w0, c });
    }

    // groups of anchor positions: one per black component, one per white anchor
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut comp_group: Vec<Option<usize>> = vec![None; c];
    for (i, &u) in anchors.iter().enumerate() {
        match state.component_of(u) {
            Some(ci) => match comp_group[ci] {
                Some(gi) => groups[gi].push(i),
                None => {
                    comp_group[ci] = Some(groups.len());
                    groups.push(vec![i]);
                }
            },
            None => groups.push(vec![i]),
        }
    }
    let mut sizes: Vec<usize> = groups.iter().map(Vec::len).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let group_of_size = |s: usize| groups.iter().find(|g| g.len() == s).cloned();

    let plain = |whites: Vec<usize>| Candidate {
        white_positions: whites,
        median_of: None,
    };
    let (subcase, candidates, needed, expected) = match (w0 + c, sizes.as_slice()) {
        (5, _) => {
            let pair = group_of_size(2).ok_or(EnumError::ParityViolation { w0, c })?;
            (
                Subcase::OnePair,
                vec![plain(vec![pair[0]]), plain(vec![pair[1]])],
                2,
                DecompositionKind::Proper,
            )
        }
        (1, _) => {
            let mut cands = Vec::with_capacity(8);
            for whites in [[1usize, 3, 5], [0, 2, 4]] {
                cands.push(plain(whites.to_vec()));
                for &i in &whites {
                    cands.push(Candidate {
                        white_positions: whites.iter().copied().filter(|&w| w != i).collect(),
                        median_of: Some([(i + 5) % 6, i, (i + 1) % 6]),
                    });
                }
            }
            (Subcase::SingleComponent, cands, 8, DecompositionKind::Proper)
        }
        (3, [4, 1, 1]) => {
            let four = group_of_size(4).expect("size present");
            let mut cands = Vec::new();
            for (x, &p) in four.iter().enumerate() {
                for &q in &four[x + 1..] {
                    if !cyclically_adjacent(p, q) {
                        cands.push(plain(vec![p, q]));
                    }
                }
            }
            for &p in &four {
                let rest: Vec<usize> = four.iter().copied().filter(|&q| q != p).collect();
                cands.push(Candidate {
                    white_positions: vec![p],
                    median_of: Some([rest[0], rest[1], rest[2]]),
                });
            }
            (Subcase::FourOneOne, cands, 4, DecompositionKind::Proper)
        }
        (3, [3, 2, 1]) => {
            let three = group_of_size(3).expect("size present");
            let two = group_of_size(2).expect("size present");
            // the middle anchor of the triple is the one not bounding the gap
            // that holds the pair
            let in_gap = |lo: usize, hi: usize, p: usize| {
                if lo < hi {
                    lo < p && p < hi
                } else {
                    p > lo || p < hi
                }
            };
            let mut middle = None;
            for k in 0..3 {
                let (lo, hi) = (three[k], three[(k + 1) % 3]);
                if in_gap(lo, hi, two[0]) && in_gap(lo, hi, two[1]) {
                    middle = Some(three[(k + 2) % 3]);
                }
            }
            let mut cands = Vec::with_capacity(4);
            // without a consistent middle the triple resolution is left to validation
            let middle = middle.unwrap_or(three[1]);
            for triple in [None, Some([three[0], three[1], three[2]])] {
                for &s in &two {
                    let mut whites = vec![s];
                    if triple.is_none() {
                        whites.push(middle);
                    }
                    whites.sort_unstable();
                    cands.push(Candidate {
                        white_positions: whites,
                        median_of: triple,
                    });
                }
            }
            (Subcase::ThreeTwoOne, cands, 4, DecompositionKind::Proper)
        }
        (3, [2, 2, 2]) => (
            Subcase::TwoTwoTwo,
            vec![plain(vec![1, 3, 5]), plain(vec![0, 2, 4])],
            2,
            DecompositionKind::Improper,
        ),
        _ => return Err(EnumError::ParityViolation { w0, c }),
    };

    let outcomes: Vec<CandidateOutcome> = candidates
        .into_iter()
        .map(|cand| {
            let result = apply_candidate(map, state, e0, &anchors, &cand, expected);
            CandidateOutcome {
                candidate: cand,
                result,
            }
        })
        .collect();
    let decompositions: Vec<GeneralizedDecomposition> = outcomes
        .iter()
        .filter_map(|o| o.result.as_ref().ok().cloned())
        .take(needed)
        .collect();
    if decompositions.len() < needed {
        return Err(EnumError::CandidateValidationFailure {
            subcase,
            valid: decompositions.len(),
            needed,
        });
    }
    Ok(Finalization {
        subcase,
        w0,
        c,
        w1,
        candidates: outcomes,
        decompositions,
    })
}

/// `hamilton_cycle_count = proper + 2 * improper`, compared with `2^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertifiedCount {
    pub k: usize,
    pub proper_count: usize,
    pub improper_count: usize,
    pub hamilton_cycle_count: usize,
    pub bound: u128,
    pub bound_met: bool,
}

impl CertifiedCount {
    pub fn new(k: usize, proper_count: usize, improper_count: usize) -> Self {
        let hamilton_cycle_count = proper_count + 2 * improper_count;
        let bound = 1u128 << k;
        CertifiedCount {
            k,
            proper_count,
            improper_count,
            hamilton_cycle_count,
            bound,
            bound_met: hamilton_cycle_count as u128 >= bound,
        }
    }
}

/// A claim check that failed somewhere in the enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Finding {
    /// A step had one child with a changed white count, or two children not
    /// both gaining exactly one white vertex.
    Branching { ear: usize },
    /// Two black vertices left a common component while both stayed black.
    ComponentSplit { ear: usize, a: VertexId, b: VertexId },
    /// A white vertex without two black neighbors in one component.
    WhiteNeighborhood { ear: usize, vertex: VertexId },
    /// `w1 = k - (7 - (w0 + c)) / 2` failed at a finalization.
    WhiteFormula { w0: usize, c: usize, w1: usize },
    /// Two leaves with the same coloring.
    LeafCollision { leaf: usize },
    /// A leaf with the wrong number of white vertices for its kind.
    WhiteCount { leaf: usize },
}

/// Counters for every claim checked during an enumeration.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClaimAudit {
    pub propagation_steps: usize,
    pub finalizations: usize,
    pub leaves: usize,
    pub findings: Vec<Finding>,
}

impl ClaimAudit {
    pub fn is_clean(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn count(&self, pred: impl Fn(&Finding) -> bool) -> usize {
        self.findings.iter().filter(|f| pred(f)).count()
    }
}

#[derive(Clone, Debug)]
pub struct Leaf {
    pub decomposition: GeneralizedDecomposition,
    /// Binary choices on the path from the root, counting the hexagon
    /// finalization as `log2` of its fan-out.
    pub depth: usize,
    /// Index of the finalization that produced this leaf.
    pub finalization: usize,
}

/// A node of the optional materialized tree.
#[derive(Clone, Debug)]
pub struct TreeNode {
    pub parent: Option<usize>,
    /// Ear colored to reach this node; `None` for the root and for leaves.
    pub ear: Option<usize>,
    pub state: DecompState,
    pub depth: usize,
    pub leaf: Option<usize>,
}

#[derive(Clone, Debug, Default)]
pub struct DecompositionTree {
    pub nodes: Vec<TreeNode>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EnumerationOptions {
    pub materialize_tree: bool,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub leaves: Vec<Leaf>,
    pub count: CertifiedCount,
    pub audit: ClaimAudit,
    pub finalizations: Vec<Finalization>,
    pub tree: Option<DecompositionTree>,
}

fn audit_step(
    map: &PlanarMap,
    parent: &DecompState,
    children: &[DecompState],
    ear: usize,
    audit: &mut ClaimAudit,
) {
    audit.propagation_steps += 1;
    let w = parent.white_count();
    let branching_ok = match children {
        [one] => one.white_count() == w,
        [a, b] => a.white_count() == w + 1 && b.white_count() == w + 1,
        _ => false,
    };
    if !branching_ok {
        audit.findings.push(Finding::Branching { ear });
    }
    for child in children {
        for comp in parent.components() {
            let mut survivors = comp.iter().filter(|&&v| child.color(v) == Color::Black);
            if let Some(&first) = survivors.next() {
                let c = child.component_of(first);
                for &v in survivors {
                    if child.component_of(v) != c {
                        audit.findings.push(Finding::ComponentSplit { ear, a: first, b: v });
                    }
                }
            }
        }
        for x in child.whites() {
            if !white_has_two_black_in_one_component(map, child, x) {
                audit.findings.push(Finding::WhiteNeighborhood { ear, vertex: x });
            }
        }
    }
}

fn white_has_two_black_in_one_component(map: &PlanarMap, s: &DecompState, x: VertexId) -> bool {
    let comps: Vec<usize> = map.neighbors(x).filter_map(|u| s.component_of(u)).collect();
    comps
        .iter()
        .enumerate()
        .any(|(i, c)| comps[i + 1..].contains(c))
}

/// Runs the whole procedure on `g` along `ed`.
pub fn enumerate(
    g: &FullereneGraph,
    ed: &NiceEarDecomposition,
    options: EnumerationOptions,
) -> Result<Enumeration, EnumError> {
    let map = g.map();
    let k = g.k().ok_or(EnumError::WrongResidue(g.n()))?;
    let root = root_state(g, ed)?;
    root.check_invariants(map).map_err(violation(root.frontier()))?;

    let mut audit = ClaimAudit::default();
    let mut leaves: Vec<Leaf> = Vec::new();
    let mut finalizations: Vec<Finalization> = Vec::new();
    let mut seen_leaves: BTreeSet<Vec<VertexId>> = BTreeSet::new();
    let mut tree = options.materialize_tree.then(DecompositionTree::default);

    // (state, branchings so far, tree node)
    let mut stack: Vec<(DecompState, usize, usize)> = Vec::new();
    if let Some(t) = tree.as_mut() {
        t.nodes.push(TreeNode {
            parent: None,
            ear: None,
            state: root.clone(),
            depth: 0,
            leaf: None,
        });
    }
    stack.push((root, 0, 0));

    while let Some((state, depth, node)) = stack.pop() {
        let frontier = state.frontier();
        if frontier > 0 {
            let ear_index = frontier - 1;
            let children = propagate_ear(map, &state, &ed.ears[ear_index], ear_index)?;
            audit_step(map, &state, &children, ear_index, &mut audit);
            let child_depth = depth + usize::from(children.len() == 2);
            for child in children.into_iter().rev() {
                let id = match tree.as_mut() {
                    Some(t) => {
                        t.nodes.push(TreeNode {
                            parent: Some(node),
                            ear: Some(ear_index),
                            state: child.clone(),
                            depth: child_depth,
                            leaf: None,
                        });
                        t.nodes.len() - 1
                    }
                    None => 0,
                };
                stack.push((child, child_depth, id));
            }
            continue;
        }

        let fin = finalize_e0(map, &state, &ed.e0)?;
        audit.finalizations += 1;
        if !fin.white_formula_holds(k) {
            audit.findings.push(Finding::WhiteFormula {
                w0: fin.w0,
                c: fin.c,
                w1: fin.w1,
            });
        }
        let fan_out = fin.decompositions.len();
        let leaf_depth = depth + fan_out.trailing_zeros() as usize;
        let fin_index = finalizations.len();
        for d in &fin.decompositions {
            let leaf_index = leaves.len();
            audit.leaves += 1;
            if !seen_leaves.insert(d.white.clone()) {
                audit.findings.push(Finding::LeafCollision { leaf: leaf_index });
            }
            if !check_white_count(d, k) {
                audit.findings.push(Finding::WhiteCount { leaf: leaf_index });
            }
            if let Some(t) = tree.as_mut() {
                let mut s = state.clone();
                for &v in &ed.e0 {
                    let r = if d.white.binary_search(&v).is_ok() {
                        s.add_white(map, v)
                    } else {
                        Ok(())
                    };
                    r.ok();
                }
                t.nodes.push(TreeNode {
                    parent: Some(node),
                    ear: None,
                    state: s,
                    depth: leaf_depth,
                    leaf: Some(leaf_index),
                });
            }
            leaves.push(Leaf {
                decomposition: d.clone(),
                depth: leaf_depth,
                finalization: fin_index,
            });
        }
        finalizations.push(fin);
    }

    let proper = leaves
        .iter()
        .filter(|l| l.decomposition.kind == DecompositionKind::Proper)
        .count();
    let improper = leaves.len() - proper;
    Ok(Enumeration {
        leaves,
        count: CertifiedCount::new(k, proper, improper),
        audit,
        finalizations,
        tree,
    })
}
