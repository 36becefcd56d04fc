#![allow(dead_code)]

use leapfrog_core::fullerene::{validate_fullerene, FullereneGraph};
use leapfrog_core::planar_code::parse_planar_code;
use leapfrog_core::planar_map::PlanarMap;

macro_rules! fixture {
    ($name:literal) => {
        include_bytes!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus/", $name))
    };
}

/// `(n, planar_code bytes)` for every fixture file.
pub const CORPUS: &[(usize, &[u8])] = &[
    (20, fixture!("c20.pc")),
    (24, fixture!("c24.pc")),
    (26, fixture!("c26.pc")),
    (28, fixture!("c28.pc")),
    (30, fixture!("c30.pc")),
    (32, fixture!("c32.pc")),
    (34, fixture!("c34.pc")),
    (36, fixture!("c36.pc")),
    (38, fixture!("c38.pc")),
];

pub fn maps(n: usize) -> Vec<PlanarMap> {
    let (_, bytes) = CORPUS.iter().find(|(m, _)| *m == n).expect("fixture exists");
    parse_planar_code(bytes).expect("fixture parses")
}

pub fn fullerenes(n: usize) -> Vec<FullereneGraph> {
    maps(n)
        .into_iter()
        .map(|m| validate_fullerene(m).expect("fixture is a fullerene"))
        .collect()
}

pub fn all_fullerenes() -> Vec<FullereneGraph> {
    CORPUS.iter().flat_map(|&(n, _)| fullerenes(n)).collect()
}

pub fn c26() -> FullereneGraph {
    fullerenes(26).remove(0)
}

pub fn dodecahedron() -> FullereneGraph {
    fullerenes(20).remove(0)
}
