//! Seed graphs for the constructions, with their known circular chromatic
//! indices and degree facts.

use crate::codec::GraphCode;
use crate::fraction::Fraction;
use crate::graph::Multigraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedEntry {
    pub name: &'static str,
    pub code: GraphCode,
    pub expected: Fraction,
    /// (degree, vertex count) pairs, ascending by degree.
    pub profile: Vec<(usize, usize)>,
    pub note: &'static str,
}

impl SeedEntry {
    pub fn graph(&self) -> Multigraph {
        self.code.decode().expect("catalog codes are valid")
    }
}

fn entry(
    name: &'static str,
    code: &str,
    expected: &str,
    profile: &[(usize, usize)],
    note: &'static str,
) -> SeedEntry {
    SeedEntry {
        name,
        code: code.parse().expect("catalog code"),
        expected: expected.parse().expect("catalog value"),
        profile: profile.to_vec(),
        note,
    }
}

pub fn seed_catalog() -> Vec<SeedEntry> {
    vec![
        entry("regular4-value5", "HEhbtjK", "5", &[(4, 9)], "4-connected 4-regular graph on 9 vertices"),
        entry(
            "pendant-value20/3",
            "ICrUux}vO",
            "20/3",
            &[(1, 1), (5, 1), (6, 8)],
            "one vertex of degree 1, one of degree 5; hook of the cycle family",
        ),
        entry(
            "two-pendant-value6",
            "HCRUnbU",
            "6",
            &[(1, 2), (4, 1), (5, 6)],
            "one vertex of degree 4, two of degree 1; seed for 5-regular graphs",
        ),
        entry(
            "two-pendant-value17/3",
            "K?BcqyYfStG?",
            "17/3",
            &[(1, 2), (3, 1), (5, 9)],
            "two vertices of degree 1; seed for mirrored rings",
        ),
        entry(
            "multi-pendant-value23/4",
            ":Ig?COaaGS?aEQ?QDL?PAe",
            "23/4",
            &[(1, 1), (5, 9)],
            "critical multigraph with a vertex of degree 1",
        ),
        entry(
            "multi-two-pendant-value19/4",
            ":LiAGWAJ?XApEOsPcL?XAv",
            "19/4",
            &[(1, 2), (4, 11)],
            "multigraph with two pendant vertices",
        ),
        entry(
            "multi-two-pendant-value14/3",
            ":Hg?COoAI?QDeOhn",
            "14/3",
            &[(1, 2), (4, 7)],
            "two vertices of degree 1 and 7 of degree 4",
        ),
        entry(
            "multi-regular4-value23/5-a",
            ":Lk??G`CIGPb_O`IDIUOqqEX^",
            "23/5",
            &[(4, 13)],
            "4-regular multigraph on 13 vertices",
        ),
        entry(
            "multi-regular4-value23/5-b",
            ":Mk??G`CIGPb_Q`QdgOiXBLGYU^",
            "23/5",
            &[(4, 14)],
            "4-regular multigraph on 14 vertices",
        ),
    ]
}
