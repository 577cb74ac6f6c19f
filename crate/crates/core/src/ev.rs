//! Edge-Vertex problem: choose edges so that every vertex meets an odd number
//! of them, i.e. find an odd-degree spanning subgraph.
//!
//! A solution exists iff every component has even order. One solution comes
//! from a spanning tree by a single parity pass; a minimum one comes from a
//! minimum-weight perfect matching on a blown-up gadget graph (see
//! [`build_gadget`]).

use std::ops::Range;

use crate::bits::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{BfsTree, Graph, Subgraph};
use crate::matching::{min_weight_perfect_matching, Matching, WeightedGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvSolution {
    pub edges: EdgeSet,
    pub size: usize,
    pub is_optimal: bool,
    /// Components of the forest `(V, edges)`; filled for optimal solutions.
    pub forest_components: Vec<Vec<usize>>,
    /// Total weight of the gadget matchings used, when any were solved.
    pub matching_weight: Option<u64>,
}

/// Every connected component has even order.
pub fn has_ev_solution(g: &Graph) -> bool {
    g.components().iter().all(|c| c.len() % 2 == 0)
}

/// Every vertex has odd degree in `s`.
pub fn verify_ev(g: &Graph, s: &EdgeSet) -> bool {
    s.len() == g.m() && g.degrees_in(s).iter().all(|d| d % 2 == 1)
}

// Walks a rooted tree leaves-first and keeps the edge to the parent exactly
// when the vertex would otherwise have even degree.
fn parity_pass(g: &Graph, tree: &BfsTree) -> EdgeSet {
    let mut chosen = EdgeSet::zeros(g.m());
    let mut parity = vec![false; g.n()];
    for &v in tree.order.iter().rev() {
        if let Some(e) = tree.parent_edge[v] {
            if !parity[v] {
                let (a, b) = g.edge(e);
                let parent = if a == v { b } else { a };
                chosen.set(e, true);
                parity[v] = true;
                parity[parent] ^= true;
            }
        }
    }
    chosen
}

/// The unique solution of an even-order tree.
pub fn tree_ev_solution(t: &Graph) -> Result<EdgeSet> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.n() % 2 == 1 {
        return Err(Error::OddOrder(t.n()));
    }
    Ok(parity_pass(t, &t.bfs_tree(0)))
}

/// Solution read off a BFS spanning tree rooted at 0. At most `n - 1` edges,
/// which is within a factor `2(1 - 1/n)` of the optimum.
pub fn spanning_tree_ev_solution(g: &Graph) -> Result<EvSolution> {
    if g.n() % 2 == 1 {
        return Err(Error::OddOrder(g.n()));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let edges = if g.n() == 0 {
        EdgeSet::zeros(g.m())
    } else {
        parity_pass(g, &g.bfs_tree(0))
    };
    Ok(EvSolution {
        size: edges.count_ones(),
        edges,
        is_optimal: false,
        forest_components: Vec::new(),
        matching_weight: None,
    })
}

/// Gadget vertices standing for one original vertex of degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// `d` clique vertices; together with `parity` they form a complete graph.
    pub first: Range<usize>,
    /// `d` representatives, one per neighbour in neighbour-list order.
    pub second: Range<usize>,
    /// Extra clique vertex, present iff `d` is even.
    pub parity: Option<usize>,
}

/// The weighted gadget graph whose minimum perfect matchings encode minimum
/// odd-degree spanning subgraphs.
///
/// Each original vertex `i` of degree `d` becomes a block: a weight-0 clique
/// on `d` vertices (plus one extra vertex when `d` is even, making the clique
/// odd), and `d` representatives each hung off one clique vertex by a
/// weight-1 rung. Every original edge `ij` becomes a weight-0 cross edge
/// joining the representative of `j` in block `i` to the representative of
/// `i` in block `j`. A perfect matching must match an odd number of rungs at
/// every block, and the cross edges it leaves out form a solution.
#[derive(Clone, Debug)]
pub struct GadgetGraph {
    pub star: WeightedGraph,
    pub blocks: Vec<Block>,
    /// original edge id -> gadget cross edge id
    pub cross_of: Vec<usize>,
    /// gadget edge id -> original edge id, for cross edges
    pub original_of: Vec<Option<usize>>,
    /// rung edge ids (weight 1), block by block, in neighbour order
    pub rung_edges: Vec<usize>,
}

pub fn build_gadget(g: &Graph) -> Result<GadgetGraph> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let mut blocks = Vec::with_capacity(g.n());
    let mut next = 0;
    for v in 0..g.n() {
        let d = g.degree(v);
        let first = next..next + d;
        let second = next + d..next + 2 * d;
        next += 2 * d;
        let parity = d.is_multiple_of(2).then(|| {
            next += 1;
            next - 1
        });
        blocks.push(Block {
            first,
            second,
            parity,
        });
    }

    let mut edges = Vec::new();
    let mut weights = Vec::new();
    let mut rung_edges = Vec::with_capacity(2 * g.m());
    for b in &blocks {
        let clique: Vec<usize> = b.first.clone().chain(b.parity).collect();
        for i in 0..clique.len() {
            for j in i + 1..clique.len() {
                edges.push((clique[i], clique[j]));
                weights.push(0);
            }
        }
        for (x, y) in b.first.clone().zip(b.second.clone()) {
            rung_edges.push(edges.len());
            edges.push((x, y));
            weights.push(1);
        }
    }
    let mut cross_of = Vec::with_capacity(g.m());
    let mut original_of = vec![None; edges.len()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let p = incident_position(g, u, e);
        let q = incident_position(g, v, e);
        cross_of.push(edges.len());
        original_of.push(Some(e));
        edges.push((blocks[u].second.start + p, blocks[v].second.start + q));
        weights.push(0);
    }

    let star = WeightedGraph::new(Graph::from_edges(next, edges)?, weights)?;
    Ok(GadgetGraph {
        star,
        blocks,
        cross_of,
        original_of,
        rung_edges,
    })
}

fn incident_position(g: &Graph, v: usize, e: usize) -> usize {
    g.incident_edges(v)
        .iter()
        .position(|&x| x == e)
        .expect("edge is incident to its endpoint")
}

impl GadgetGraph {
    /// Original edges whose cross edge is left out of `matching`.
    pub fn extract(&self, matching: &[usize]) -> EdgeSet {
        let mut s = EdgeSet::ones(self.cross_of.len());
        for &ge in matching {
            if let Some(e) = self.original_of[ge] {
                s.set(e, false);
            }
        }
        s
    }

    /// The perfect matching of the gadget that encodes solution `s`: cross
    /// edges of non-solution edges, rungs at solution-edge positions, and
    /// the leftover clique vertices paired up inside each block.
    pub fn matching_for(&self, g: &Graph, s: &EdgeSet) -> Result<Vec<usize>> {
        if !verify_ev(g, s) {
            return Err(Error::InvalidParameter(
                "edge set is not an odd-degree spanning subgraph".into(),
            ));
        }
        let star = &self.star.graph;
        let mut out = Vec::new();
        for (e, &ce) in self.cross_of.iter().enumerate() {
            if !s.get(e) {
                out.push(ce);
            }
        }
        let mut rung = self.rung_edges.iter();
        for (v, b) in self.blocks.iter().enumerate() {
            let mut free = Vec::new();
            for (k, &e) in g.incident_edges(v).iter().enumerate() {
                let r = *rung.next().expect("one rung per incidence");
                if s.get(e) {
                    out.push(r);
                } else {
                    free.push(b.first.start + k);
                }
            }
            free.extend(b.parity);
            for pair in free.chunks(2) {
                let [x, y] = pair else {
                    return Err(Error::Invariant("odd leftover clique".into()));
                };
                out.push(star.edge_id(*x, *y).expect("block clique is complete"));
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}

fn finish(g: &Graph, edges: EdgeSet, matching_weight: Option<u64>) -> EvSolution {
    EvSolution {
        size: edges.count_ones(),
        forest_components: g.components_of(&edges),
        edges,
        is_optimal: true,
        matching_weight,
    }
}

fn lift(sub: &Subgraph, local: &EdgeSet, into: &mut EdgeSet) {
    for e in local.iter_ones() {
        into.set(sub.edge_map[e], true);
    }
}

/// Minimum solution of a connected graph via the gadget matching, along with
/// the matching weight.
fn min_ev_connected_gadget(g: &Graph) -> Result<(EdgeSet, u64)> {
    let gadget = build_gadget(g)?;
    let m: Matching = min_weight_perfect_matching(&gadget.star).ok_or_else(|| {
        Error::Invariant("gadget graph of an even-order graph has no perfect matching".into())
    })?;
    let s = gadget.extract(&m.edges);
    if !verify_ev(g, &s) {
        return Err(Error::Invariant(
            "matching extraction produced an invalid solution".into(),
        ));
    }
    if m.total_weight != 2 * s.count_ones() as u64 {
        return Err(Error::Invariant(format!(
            "matching weight {} is not twice the solution size {}",
            m.total_weight,
            s.count_ones()
        )));
    }
    Ok((s, m.total_weight))
}

fn min_ev_impl(g: &Graph, shortcut_trees: bool) -> Result<Option<EvSolution>> {
    if !has_ev_solution(g) {
        return Ok(None);
    }
    let mut edges = EdgeSet::zeros(g.m());
    let mut weight = None;
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp);
        let local = if shortcut_trees && sub.graph.is_tree() {
            tree_ev_solution(&sub.graph)?
        } else {
            let (s, w) = min_ev_connected_gadget(&sub.graph)?;
            *weight.get_or_insert(0) += w;
            s
        };
        lift(&sub, &local, &mut edges);
    }
    Ok(Some(finish(g, edges, weight)))
}

/// A minimum odd-degree spanning subgraph, or `None` if some component has
/// odd order. Trees are answered directly by their unique solution; other
/// components go through the gadget matching.
pub fn min_ev(g: &Graph) -> Result<Option<EvSolution>> {
    min_ev_impl(g, true)
}

/// Like [`min_ev`] but always solves the gadget matching, so
/// `matching_weight` is set whenever the graph has edges.
pub fn min_ev_via_gadget(g: &Graph) -> Result<Option<EvSolution>> {
    min_ev_impl(g, false)
}

/// Cycle criterion for optimality: `s` is minimum iff no cycle has more
/// edges in `s` than outside it. `cycles` must list every simple cycle.
pub fn optimal_against_cycles(cycles: &[EdgeSet], s: &EdgeSet) -> bool {
    cycles.iter().all(|c| 2 * c.and_count(s) <= c.count_ones())
}

/// Enumerates all cycles of `g` (up to `cap`) and applies the cycle criterion.
pub fn check_optimality_by_cycles(g: &Graph, s: &EdgeSet, cap: usize) -> Result<bool> {
    if !verify_ev(g, s) {
        return Err(Error::InvalidParameter(
            "edge set is not an odd-degree spanning subgraph".into(),
        ));
    }
    let cycles = g.enumerate_cycles(usize::MAX, cap)?;
    Ok(optimal_against_cycles(&cycles, s))
}

/// Every vertex has even degree in `s1 xor s2`.
pub fn symmetric_difference_check(g: &Graph, s1: &EdgeSet, s2: &EdgeSet) -> bool {
    g.degrees_in(&s1.xor(s2)).iter().all(|d| d % 2 == 0)
}

/// For a connected claw-free graph: whether "even order iff perfect
/// matching" holds.
pub fn claw_free_pm_check(g: &Graph) -> Result<bool> {
    if let Some((centre, _)) = g.find_claw() {
        return Err(Error::NotClawFree(centre));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(g.n().is_multiple_of(2) == crate::matching::has_perfect_matching(g))
}

/// Structure of optimal solutions: `(V, s)` is a forest, every component has
/// even order, and every component induces a tree in `g`.
pub fn check_forest_structure(g: &Graph, s: &EdgeSet) -> bool {
    let comps = g.components_of(s);
    if s.count_ones() + comps.len() != g.n() {
        return false;
    }
    comps
        .iter()
        .all(|c| c.len() % 2 == 0 && g.induced_subgraph(c).graph.m() + 1 == c.len())
}
