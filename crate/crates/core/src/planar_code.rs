//! The single-byte `planar_code` format written by plantri and buckygen.
//!
//! A stream starts with `>>planar_code<<`; every record is a vertex count
//! byte followed, for each vertex, by its clockwise neighbor list (1-based)
//! and a terminating zero.

use alloc::vec::Vec;

use thiserror::Error;

use crate::planar_map::{MapError, PlanarMap, VertexId};

pub const HEADER: &[u8] = b">>planar_code<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarCodeError {
    #[error("input does not start with >>planar_code<<")]
    MissingHeader,
    #[error("record {record} ends before its last vertex list is terminated")]
    TruncatedRecord { record: usize },
    #[error("record {record}: vertex {vertex} has a loop or a repeated neighbor")]
    NonSimpleGraph { record: usize, vertex: usize },
    #[error("record {record}: adjacency between {a} and {b} is not symmetric")]
    InconsistentAdjacency { record: usize, a: usize, b: usize },
    #[error("record {record}: vertex count above 255 (16-bit planar_code) is not supported")]
    VertexCountOverflow { record: usize },
    #[error("record {record}: {source}")]
    InvalidMap { record: usize, source: MapError },
}

/// Decodes every record of a planar_code stream.
pub fn parse_planar_code(bytes: &[u8]) -> Result<Vec<PlanarMap>, PlanarCodeError> {
    let body = bytes
        .strip_prefix(HEADER)
        .ok_or(PlanarCodeError::MissingHeader)?;
    let mut maps = Vec::new();
    let mut pos = 0usize;
    while pos < body.len() {
        let record = maps.len();
        let n = body[pos] as usize;
        pos += 1;
        if n == 0 {
            return Err(PlanarCodeError::VertexCountOverflow { record });
        }
        let mut rotations: Vec<Vec<VertexId>> = Vec::with_capacity(n);
        for vertex in 0..n {
            let mut clockwise = Vec::new();
            loop {
                let b = *body
                    .get(pos)
                    .ok_or(PlanarCodeError::TruncatedRecord { record })?;
                pos += 1;
                if b == 0 {
                    break;
                }
                let w = b as usize - 1;
                if w >= n {
                    return Err(PlanarCodeError::InconsistentAdjacency {
                        record,
                        a: vertex,
                        b: w,
                    });
                }
                if w == vertex || clockwise.contains(&VertexId::new(w)) {
                    return Err(PlanarCodeError::NonSimpleGraph { record, vertex });
                }
                clockwise.push(VertexId::new(w));
            }
            // Keep the first neighbor first and reverse the rest to get
            // counterclockwise order.
            if clockwise.len() > 1 {
                clockwise[1..].reverse();
            }
            rotations.push(clockwise);
        }
        for (a, rot) in rotations.iter().enumerate() {
            for &b in rot {
                if !rotations[b.index()].contains(&VertexId::new(a)) {
                    return Err(PlanarCodeError::InconsistentAdjacency {
                        record,
                        a,
                        b: b.index(),
                    });
                }
            }
        }
        let map = PlanarMap::from_rotations(&rotations)
            .map_err(|source| PlanarCodeError::InvalidMap { record, source })?;
        maps.push(map);
    }
    Ok(maps)
}

/// Encodes maps as a planar_code stream. Panics if a map has more than 255 vertices.
pub fn write_planar_code(maps: &[PlanarMap]) -> Vec<u8> {
    let mut out = Vec::from(HEADER);
    for map in maps {
        let n = map.vertex_count();
        assert!(n <= 255, "planar_code output is limited to 255 vertices");
        out.push(n as u8);
        for v in map.vertices() {
            let rot = map.rotation(v);
            if let Some((&first, rest)) = rot.split_first() {
                out.push(first.0 as u8 + 1);
                for w in rest.iter().rev() {
                    out.push(w.0 as u8 + 1);
                }
            }
            out.push(0);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::samples;

    fn tetra_bytes() -> Vec<u8> {
        let mut b = Vec::from(HEADER);
        b.extend_from_slice(&[4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0]);
        b
    }

    #[test]
    fn tetrahedron_record() {
        let maps = parse_planar_code(&tetra_bytes()).unwrap();
        assert_eq!(maps.len(), 1);
        let m = &maps[0];
        assert_eq!((m.vertex_count(), m.edge_count(), m.face_count()), (4, 6, 4));
    }

    #[test]
    fn header_only_is_empty() {
        assert!(parse_planar_code(HEADER).unwrap().is_empty());
    }

    #[test]
    fn errors() {
        assert_eq!(parse_planar_code(b""), Err(PlanarCodeError::MissingHeader));
        assert_eq!(
            parse_planar_code(b">>planar_cod"),
            Err(PlanarCodeError::MissingHeader)
        );
        let mut b = tetra_bytes();
        b.pop();
        assert_eq!(
            parse_planar_code(&b),
            Err(PlanarCodeError::TruncatedRecord { record: 0 })
        );
        let mut b = Vec::from(HEADER);
        b.push(0);
        assert_eq!(
            parse_planar_code(&b),
            Err(PlanarCodeError::VertexCountOverflow { record: 0 })
        );
        let mut b = Vec::from(HEADER);
        b.extend_from_slice(&[2, 2, 2, 0, 1, 0]);
        assert!(matches!(
            parse_planar_code(&b),
            Err(PlanarCodeError::NonSimpleGraph { record: 0, vertex: 0 })
        ));
        let mut b = Vec::from(HEADER);
        b.extend_from_slice(&[3, 2, 3, 0, 1, 0, 2, 0]);
        assert!(matches!(
            parse_planar_code(&b),
            Err(PlanarCodeError::InconsistentAdjacency { record: 0, .. })
        ));
    }

    #[test]
    fn write_then_parse_keeps_rotations() {
        let m = samples::pentagonal_prism();
        let bytes = write_planar_code(core::slice::from_ref(&m));
        let back = parse_planar_code(&bytes).unwrap();
        assert_eq!(back, alloc::vec![m]);
    }
}
