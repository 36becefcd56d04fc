//! Leapfrog fullerenes and their Hamilton cycles.
//!
//! The crate builds planar maps, validates fullerenes, computes the leapfrog
//! transformation, derives nice ear decompositions, enumerates generalized
//! stable-tree decompositions along them and turns each decomposition into
//! verified Hamilton cycles of the leapfrog. Brute-force oracles provide
//! independent ground truth on small instances.

#![no_std]

extern crate alloc;

pub mod ear;
pub mod enumerator;
pub mod fullerene;
pub mod hamilton;
pub mod oracle;
pub mod planar_code;
pub mod planar_map;
pub mod stable_tree;
