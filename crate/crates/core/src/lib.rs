//! Exact Roman domination on small simple graphs.
//!
//! * [`graph`]: bitset graphs, structural queries and mutation by copy
//! * [`family`]: cycles, paths, `X_n`, `D_n` and the elementary 4-vertex graphs
//! * [`graph6`]: graph6 text codec
//! * [`iso`]: isomorphism test for orders up to 12
//! * [`roman`]: Roman labelings, `gamma_R`, a `3^n` oracle and the list of
//!   minimum-weight partitions
//! * [`criticality`]: v-critical, e-critical, Roman saturated and
//!   nonelementary, each by definition and by partition structure
//! * [`gamma4`]: the degree-based theory of graphs with `gamma_R = 4`
//!
//! Vertices are numbered from 0.

pub mod criticality;
pub mod error;
pub mod family;
pub mod gamma4;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod roman;

pub use error::{Error, Result};
pub use family::{gen_family, Family};
pub use graph::{Graph, VertexSet};
pub use graph6::{emit_graph6, parse_graph6};
pub use iso::is_isomorphic;
pub use roman::{gamma, roman_number, GammaResult, RomanAssignment};
