//! Circular chromatic index of multigraphs: exact decision procedures,
//! graph codecs, surveys over small graphs, and explicit constructions.

pub mod chi;
pub mod codec;
pub mod colour;
pub mod families;
pub mod fraction;
pub mod graph;
pub mod mono;
pub mod survey;

pub use chi::{circular_chromatic_index, chromatic_index, ChiOptions, ChiResult, ChiValue};
pub use codec::{canonical_code, parse_code, CodecError, GraphCode};
pub use colour::{make_decider, Backtrack, Decider, EdgeColouring, External, Verdict};
pub use fraction::{Fraction, SearchInterval};
pub use graph::{Connectivity, DegreeProfile, GraphError, Multigraph};
