//! Graphviz output.

use std::fmt::Write;

use leapfrog_core::hamilton::HamiltonCycle;
use leapfrog_core::planar_map::{PlanarMap, VertexId};
use leapfrog_core::stable_tree::GeneralizedDecomposition;

/// An undirected DOT graph with one line per vertex and per edge `(min, max)`.
pub fn graph(
    map: &PlanarMap,
    name: &str,
    vertex_attrs: impl Fn(VertexId) -> Option<String>,
    edge_attrs: impl Fn(VertexId, VertexId) -> Option<String>,
) -> String {
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in map.vertices() {
        match vertex_attrs(v) {
            Some(a) => writeln!(out, "  {v} [{a}];").unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    let mut edges: Vec<(VertexId, VertexId)> = map
        .edges()
        .map(|e| {
            let (a, b) = map.edge_endpoints(e);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    for (a, b) in edges {
        match edge_attrs(a, b) {
            Some(attr) => writeln!(out, "  {a} -- {b} [{attr}];").unwrap(),
            None => writeln!(out, "  {a} -- {b};").unwrap(),
        }
    }
    out.push_str("}\n");
    out
}

pub fn plain(map: &PlanarMap, name: &str) -> String {
    graph(map, name, |_| None, |_, _| None)
}

pub const WHITE_ATTRS: &str = "class=\"white\", style=filled, fillcolor=white";
pub const BLACK_ATTRS: &str = "class=\"black\", style=filled, fillcolor=black, fontcolor=white";
pub const CYCLE_ATTRS: &str = "class=\"cycle\", color=red, penwidth=3";

/// Vertices of `map` filled by their color in `d`.
pub fn decomposition(map: &PlanarMap, name: &str, d: &GeneralizedDecomposition) -> String {
    graph(
        map,
        name,
        |v| {
            Some(if d.white.binary_search(&v).is_ok() {
                WHITE_ATTRS
            } else {
                BLACK_ATTRS
            }
            .to_string())
        },
        |_, _| None,
    )
}

/// Edges of `cycle` highlighted on `map`.
pub fn cycle(map: &PlanarMap, name: &str, cycle: &HamiltonCycle) -> String {
    graph(
        map,
        name,
        |_| None,
        |a, b| cycle.contains_edge(a, b).then(|| CYCLE_ATTRS.to_string()),
    )
}
