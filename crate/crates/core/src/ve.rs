//! Vertex-Edge problem: choose vertices so every edge has exactly one chosen
//! endpoint.
//!
//! A solution exists iff the graph is bipartite, and a connected bipartite
//! graph has exactly two solutions, its two colour classes. A disconnected
//! graph combines one class per component, so the minimum picks the smaller
//! class of each component independently.

use crate::bits::VertexSet;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VeSolutions {
    /// The two solutions `(U, V)` of each connected component; `U` holds the
    /// component's smallest vertex.
    pub components: Vec<(Vec<usize>, Vec<usize>)>,
    /// Union over components of the smaller side (ties go to `U`).
    pub chosen_min: VertexSet,
    /// Set when the graph has no edges, so every vertex set is a solution.
    pub degenerate: bool,
}

impl VeSolutions {
    /// Total number of solutions, `2^components`.
    pub fn solution_count(&self) -> u128 {
        1u128
            .checked_shl(self.components.len() as u32)
            .unwrap_or(u128::MAX)
    }
}

pub fn solve_ve(g: &Graph) -> Option<VeSolutions> {
    let bip = g.bipartition()?;
    let mut chosen = VertexSet::zeros(g.n());
    for (u, v) in &bip.parts {
        let side = if v.len() < u.len() { v } else { u };
        for &x in side {
            chosen.set(x, true);
        }
    }
    Some(VeSolutions {
        components: bip.parts,
        chosen_min: chosen,
        degenerate: g.m() == 0,
    })
}

/// Every edge has exactly one endpoint in `x`.
pub fn verify_ve(g: &Graph, x: &VertexSet) -> bool {
    x.len() == g.n() && g.edges().iter().all(|&(u, v)| x.get(u) != x.get(v))
}
