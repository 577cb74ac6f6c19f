//! Solvers for the four lamp-lighting problems on undirected simple graphs.
//!
//! A lamp sits on every vertex (or edge). Pressing an element toggles a set
//! of lamps, and the task is to find a set of presses that turns every lamp
//! on:
//!
//! | problem | press | toggles |
//! |---|---|---|
//! | Vertex-Vertex | vertex `v` | `v` and its neighbours |
//! | Vertex-Edge | vertex `v` | the edges at `v` |
//! | Edge-Vertex | edge `uv` | `u` and `v` |
//! | Edge-Edge | edge `e` | `e` and the edges sharing an endpoint with it |

pub mod bits;
pub mod error;
pub mod ev;
pub mod gf2;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod report;
pub mod ve;
pub mod vv_ee;

pub use bits::{BitVec, EdgeSet, VertexSet};
pub use error::{Error, Result};
pub use graph::Graph;
pub use report::{solve_report, verify_witness, Problem, SolutionReport};
