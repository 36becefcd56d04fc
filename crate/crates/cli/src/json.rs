//! JSON documents written and read by the command line.

use serde::{Deserialize, Serialize};

use leapfrog_core::fullerene::{FaceOrigin, LeapfrogResult};
use leapfrog_core::hamilton::HamiltonCycle;
use leapfrog_core::planar_map::{PlanarMap, VertexId};
use leapfrog_core::stable_tree::{DecompositionKind, GeneralizedDecomposition};

/// A map as counterclockwise neighbor lists, 0-based.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct MapJson {
    pub n: usize,
    pub adj: Vec<Vec<u32>>,
}

impl MapJson {
    pub fn from_map(map: &PlanarMap) -> Self {
        MapJson {
            n: map.vertex_count(),
            adj: map.vertices().map(|v| map.rotation(v).iter().map(|w| w.0).collect()).collect(),
        }
    }

    pub fn to_map(&self) -> Result<PlanarMap, String> {
        if self.adj.len() != self.n {
            return Err(format!("\"n\" is {} but \"adj\" has {} lists", self.n, self.adj.len()));
        }
        let rot: Vec<Vec<VertexId>> = self.adj.iter().map(|r| r.iter().map(|&w| VertexId(w)).collect()).collect();
        if let Some(w) = rot.iter().flatten().find(|w| w.index() >= self.n) {
            return Err(format!("neighbor {w} out of range"));
        }
        PlanarMap::from_rotations(&rot).map_err(|e| e.to_string())
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FaceOriginJson {
    /// A face of `G`.
    Face { id: u32 },
    /// A vertex of `G`.
    Vertex { id: u32 },
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
pub struct IncidenceJson {
    /// Endpoints of the edge of `G`.
    pub edge: [u32; 2],
    pub face: u32,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct LeapfrogJson {
    pub graph: usize,
    pub n: usize,
    #[serde(rename = "H")]
    pub h: MapJson,
    pub face_origin: Vec<FaceOriginJson>,
    pub vertex_origin: Vec<IncidenceJson>,
}

impl LeapfrogJson {
    pub fn new(graph: usize, g: &PlanarMap, lf: &LeapfrogResult) -> Self {
        LeapfrogJson {
            graph,
            n: g.vertex_count(),
            h: MapJson::from_map(&lf.h),
            face_origin: lf
                .face_origin
                .iter()
                .map(|o| match *o {
                    FaceOrigin::FaceOfG(f) => FaceOriginJson::Face { id: f.0 },
                    FaceOrigin::VertexOfG(v) => FaceOriginJson::Vertex { id: v.0 },
                })
                .collect(),
            vertex_origin: lf
                .vertex_origin
                .iter()
                .map(|inc| {
                    let (a, b) = g.edge_endpoints(inc.edge);
                    IncidenceJson {
                        edge: [a.0.min(b.0), a.0.max(b.0)],
                        face: inc.face.0,
                    }
                })
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct DecompositionJson {
    pub kind: String,
    #[serde(rename = "W")]
    pub white: Vec<u32>,
    #[serde(rename = "B")]
    pub black: Vec<u32>,
    pub components: Vec<Vec<u32>>,
    pub graceful_hexagons: Vec<u32>,
    pub graceful_vertices: Vec<u32>,
}

fn ids(vs: &[VertexId]) -> Vec<u32> {
    vs.iter().map(|v| v.0).collect()
}

impl From<&GeneralizedDecomposition> for DecompositionJson {
    fn from(d: &GeneralizedDecomposition) -> Self {
        DecompositionJson {
            kind: match d.kind {
                DecompositionKind::Proper => "proper",
                DecompositionKind::Improper => "improper",
            }
            .to_string(),
            white: ids(&d.white),
            black: ids(&d.black),
            components: d.components.iter().map(|c| ids(c)).collect(),
            graceful_hexagons: d.graceful_hexagons.iter().map(|f| f.0).collect(),
            graceful_vertices: ids(&d.graceful_vertices),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CycleJson {
    pub length: usize,
    pub edges: Vec<[u32; 2]>,
}

impl From<&HamiltonCycle> for CycleJson {
    fn from(c: &HamiltonCycle) -> Self {
        CycleJson {
            length: c.len(),
            edges: c.edges().iter().map(|&(a, b)| [a.0, b.0]).collect(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, Default, PartialEq, Eq)]
pub struct AuditJson {
    pub propagation_steps: usize,
    pub finalizations: usize,
    pub leaves: usize,
    pub branching_violations: usize,
    pub component_split_violations: usize,
    pub white_neighborhood_violations: usize,
    pub white_formula_violations: usize,
    pub leaf_collisions: usize,
    pub white_count_violations: usize,
}

#[derive(Serialize, Deserialize, Debug, Clone, Default, PartialEq, Eq)]
pub struct SubcaseCounts {
    pub one_pair: usize,
    pub single_component: usize,
    pub four_one_one: usize,
    pub three_two_one: usize,
    pub two_two_two: usize,
}

/// Result of `certify` for one graph.
#[derive(Serialize, Deserialize, Debug, Clone, Default, PartialEq, Eq)]
pub struct CertifyReport {
    pub graph: usize,
    pub n: usize,
    /// Why the graph could not be processed at all.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<[u32; 2]>,
    pub ears: usize,
    pub proper: usize,
    pub improper: usize,
    /// `proper + 2 * improper`.
    pub cycles: usize,
    /// Distinct verified Hamilton cycles.
    pub verified_cycles: usize,
    pub collisions: usize,
    pub unused_connectors: usize,
    pub bound: u128,
    pub bound_met: bool,
    pub audit: AuditJson,
    pub subcases: SubcaseCounts,
    /// SHA-256 of the sorted canonical edge lists of all distinct cycles.
    pub cycle_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tree_nodes: Option<usize>,
    pub findings: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub instance: String,
    pub mode: String,
    pub count: u64,
    pub complete: bool,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub proper: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub improper: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}
