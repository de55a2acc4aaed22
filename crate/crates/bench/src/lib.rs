//! Fixtures shared by the benchmarks.

use circix_core::families::circulant;
use circix_core::{parse_code, Multigraph};

/// A named graph with one satisfiable and one unsatisfiable `(p, q)`.
pub struct Fixture {
    pub name: &'static str,
    pub graph: Multigraph,
    pub sat: (u32, u32),
    pub unsat: (u32, u32),
}

pub fn decision_fixtures() -> Vec<Fixture> {
    let fixture = |name, graph, sat, unsat| Fixture { name, graph, sat, unsat };
    vec![
        fixture("petersen", Multigraph::petersen(), (11, 3), (7, 2)),
        fixture("k5", Multigraph::complete(5), (5, 1), (9, 2)),
        fixture("c11_12", circulant(11, &[1, 2]).expect("valid"), (14, 3), (9, 2)),
        fixture("hehbtjk", parse_code("HEhbtjK").expect("valid"), (5, 1), (14, 3)),
    ]
}
