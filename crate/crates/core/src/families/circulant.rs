//! Circulants `C_m(1, 2)` and their `(9, 2)`-edge-colourings for odd
//! `m ≥ 13`.
//!
//! The colourings are assembled from a base block on 13 or 15 vertices and
//! `k` copies of a 4-vertex segment inserted at the seam. Every crossing
//! between blocks carries the same colours: 0 on the step-1 edge and 4 on
//! both step-2 edges.

use super::ConstructionError;
use crate::colour::{verify_colouring, EdgeColouring};
use crate::graph::Multigraph;

/// Vertices `0..m`, edges `i -- i+s (mod m)` for each step in turn.
pub fn circulant(m: usize, steps: &[usize]) -> Result<Multigraph, ConstructionError> {
    if m < 3 {
        return Err(ConstructionError::Parameter(format!("circulant order {m} is below 3")));
    }
    for (i, &s) in steps.iter().enumerate() {
        if s == 0 || 2 * s >= m {
            return Err(ConstructionError::Parameter(format!("step {s} must lie in 1..{}", m.div_ceil(2))));
        }
        if steps[..i].contains(&s) {
            return Err(ConstructionError::Parameter(format!("step {s} repeated")));
        }
    }
    let edges = steps.iter().flat_map(|&s| (0..m).map(move |i| (i, (i + s) % m)));
    Ok(Multigraph::new(m, edges).expect("indices below m"))
}

const BASE13_STEP1: [u32; 12] = [2, 0, 5, 0, 7, 1, 8, 3, 8, 3, 8, 2];
const BASE13_STEP2: [u32; 11] = [7, 7, 2, 3, 4, 5, 6, 1, 1, 6, 6];
const BASE15_STEP1: [u32; 14] = [2, 0, 5, 0, 7, 1, 8, 3, 8, 6, 8, 2, 0, 2];
const BASE15_STEP2: [u32; 13] = [7, 7, 2, 3, 4, 5, 6, 1, 1, 4, 4, 6, 6];
const SEGMENT_STEP1: [u32; 3] = [2, 0, 2];
const SEGMENT_STEP2: [u32; 2] = [6, 6];
const SEAM_STEP1: u32 = 0;
const SEAM_STEP2: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantColouring {
    pub m: usize,
    pub graph: Multigraph,
    pub colouring: EdgeColouring,
}

/// A verified `(9, 2)`-colouring of `circulant(m, [1, 2])`.
pub fn circulant_nine_halves_colouring(m: usize) -> Result<CirculantColouring, ConstructionError> {
    if m < 13 || m.is_multiple_of(2) {
        return Err(ConstructionError::Parameter(format!("m = {m} must be odd and at least 13")));
    }
    let (base1, base2, k): (&[u32], &[u32], usize) = if (m - 13).is_multiple_of(4) {
        (&BASE13_STEP1, &BASE13_STEP2, (m - 13) / 4)
    } else {
        (&BASE15_STEP1, &BASE15_STEP2, (m - 15) / 4)
    };
    let mut step1 = base1.to_vec();
    let mut step2 = base2.to_vec();
    for _ in 0..k {
        step1.push(SEAM_STEP1);
        step1.extend(SEGMENT_STEP1);
        step2.extend([SEAM_STEP2, SEAM_STEP2]);
        step2.extend(SEGMENT_STEP2);
    }
    step1.push(SEAM_STEP1);
    step2.extend([SEAM_STEP2, SEAM_STEP2]);
    debug_assert_eq!((step1.len(), step2.len()), (m, m));

    let graph = circulant(m, &[1, 2])?;
    step1.extend(step2);
    let colouring = EdgeColouring::new(9, 2, step1);
    if !verify_colouring(&graph, &colouring).unwrap_or(false) {
        return Err(ConstructionError::Witness(format!("glued colouring of C_{m}(1,2) is invalid")));
    }
    Ok(CirculantColouring { m, graph, colouring })
}
