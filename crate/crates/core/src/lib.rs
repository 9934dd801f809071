//! Dense mixed graphs of diameter 2 built from biaffine planes over GF(q).
//!
//! * [`gf`]: finite-field arithmetic and the shift sets of the construction.
//! * [`mixed_graph`]: the mixed-graph type, distances, diameter, girth,
//!   the `mg1` file format and DOT export.
//! * [`construction`]: `B_q`, `G_{q,t}` and Kautz-derived mixed Moore graphs.
//! * [`moore`]: Moore bounds, Bosák's condition, parity, the feasibility table.
//! * [`symmetry`]: explicit automorphisms, transitivity certificates,
//!   color refinement and isomorphism search.
//! * [`cli`]: the `mixed-moore` command-line front end.

pub mod cli;
pub mod construction;
pub mod error;
pub mod gf;
pub mod mixed_graph;
pub mod moore;
pub mod symmetry;

pub use error::{Error, Result};
