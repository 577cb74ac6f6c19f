//! Vertex-Vertex (the classic all-ones / lights-out problem under the
//! closed-neighbourhood rule) and Edge-Edge, which is Vertex-Vertex on the
//! line graph.
//!
//! `(A + I) x = 1` is always solvable over GF(2), so `solve_vv` cannot fail
//! on a simple graph. Minimisation is NP-hard in general and is done here by
//! enumerating the solution space under a nullity budget.

use crate::bits::{BitVec, EdgeSet, VertexSet};
use crate::error::{Error, Result};
use crate::gf2::{closed_neighborhood_matrix, min_weight_solution, solve, Gf2Solution};
use crate::graph::Graph;

fn vv_system(g: &Graph) -> Gf2Solution {
    let a = closed_neighborhood_matrix(g);
    solve(&a, &BitVec::ones(g.n())).expect("square system")
}

/// An odd parity cover: every closed neighbourhood meets `x` an odd number
/// of times.
pub fn solve_vv(g: &Graph) -> Result<VertexSet> {
    let sol = vv_system(g);
    if !sol.consistent {
        return Err(Error::Invariant(
            "closed-neighbourhood system reported inconsistent".into(),
        ));
    }
    Ok(sol.particular)
}

/// Minimum-cardinality odd parity cover, or `None` if the solution space has
/// dimension above `nullity_cap`.
pub fn min_vv(g: &Graph, nullity_cap: usize) -> Result<Option<VertexSet>> {
    let sol = vv_system(g);
    if !sol.consistent {
        return Err(Error::Invariant(
            "closed-neighbourhood system reported inconsistent".into(),
        ));
    }
    Ok(min_weight_solution(&sol, nullity_cap))
}

/// Dimension of the Vertex-Vertex solution space.
pub fn vv_nullity(g: &Graph) -> usize {
    vv_system(g).nullity()
}

pub fn verify_vv(g: &Graph, x: &VertexSet) -> bool {
    x.len() == g.n()
        && (0..g.n()).all(|v| {
            let hits = x.get(v) as usize + g.neighbors(v).iter().filter(|&&w| x.get(w)).count();
            hits % 2 == 1
        })
}

fn lift_to_edges(g: &Graph, map: &[usize], x: &VertexSet) -> EdgeSet {
    EdgeSet::from_indices(g.m(), x.iter_ones().map(|i| map[i]))
}

/// Edge-Edge solution via Vertex-Vertex on the line graph.
pub fn solve_ee(g: &Graph) -> Result<EdgeSet> {
    let (lg, map) = g.line_graph();
    Ok(lift_to_edges(g, &map, &solve_vv(&lg)?))
}

/// Minimum Edge-Edge solution by budgeted enumeration on the line graph.
/// Exponential in the nullity; no polynomial method is known.
pub fn min_ee(g: &Graph, nullity_cap: usize) -> Result<Option<EdgeSet>> {
    let (lg, map) = g.line_graph();
    Ok(min_vv(&lg, nullity_cap)?.map(|x| lift_to_edges(g, &map, &x)))
}

/// Checks the Edge-Edge condition directly on `g`: an edge in `f` must be
/// adjacent to an even number of edges of `f`, an edge outside `f` to an odd
/// number.
pub fn verify_ee(g: &Graph, f: &EdgeSet) -> bool {
    if f.len() != g.m() {
        return false;
    }
    // edges of f at each vertex
    let at = g.degrees_in(f);
    g.edges().iter().enumerate().all(|(e, &(u, v))| {
        let inside = f.get(e);
        // adjacent f-edges: those at u or v, minus e itself counted twice
        let adjacent = at[u] + at[v] - if inside { 2 } else { 0 };
        adjacent.is_multiple_of(2) == inside
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::DEFAULT_NULLITY_CAP;
    use crate::graph::{generate, GraphKind};

    fn gen(kind: GraphKind) -> Graph {
        generate(kind).unwrap()
    }

    #[test]
    fn vertex_vertex_examples() {
        let k2 = gen(GraphKind::Path(2));
        let x = solve_vv(&k2).unwrap();
        assert_eq!(x.count_ones(), 1);
        assert!(verify_vv(&k2, &x));

        let p3 = gen(GraphKind::Path(3));
        assert_eq!(solve_vv(&p3).unwrap().to_indices(), vec![1]);
        assert_eq!(vv_nullity(&p3), 0);

        assert_eq!(
            solve_vv(&Graph::empty(3)).unwrap().to_indices(),
            vec![0, 1, 2]
        );
    }

    #[test]
    fn minimum_examples() {
        let p3 = gen(GraphKind::Path(3));
        assert_eq!(
            min_vv(&p3, DEFAULT_NULLITY_CAP)
                .unwrap()
                .unwrap()
                .to_indices(),
            vec![1]
        );
        let k2 = gen(GraphKind::Path(2));
        assert_eq!(
            min_vv(&k2, DEFAULT_NULLITY_CAP)
                .unwrap()
                .unwrap()
                .count_ones(),
            1
        );
        // C4 by brute force over its 16 subsets
        let c4 = gen(GraphKind::Cycle(4));
        let brute = (0u64..16)
            .map(|m| BitVec::from_mask(4, m))
            .filter(|x| verify_vv(&c4, x))
            .map(|x| x.count_ones())
            .min()
            .unwrap();
        let got = min_vv(&c4, DEFAULT_NULLITY_CAP).unwrap().unwrap();
        assert!(verify_vv(&c4, &got));
        assert_eq!(got.count_ones(), brute);
    }

    #[test]
    fn minimum_respects_budget() {
        // the edgeless graph's system is the identity: nullity 0
        assert!(min_vv(&Graph::empty(30), 0).unwrap().is_some());
        // K_n: every closed neighbourhood is everything, nullity n - 1
        let k6 = gen(GraphKind::Complete(6));
        assert_eq!(vv_nullity(&k6), 5);
        assert_eq!(min_vv(&k6, 4).unwrap(), None);
        assert_eq!(min_vv(&k6, 5).unwrap().unwrap().count_ones(), 1);
    }

    #[test]
    fn verify_vv_examples() {
        let p3 = gen(GraphKind::Path(3));
        assert!(verify_vv(&p3, &p3.vertex_set([1])));
        assert!(!verify_vv(&p3, &p3.vertex_set([])));
        let k2 = gen(GraphKind::Path(2));
        assert!(!verify_vv(&k2, &k2.vertex_set([0, 1])));
    }

    #[test]
    fn edge_edge_examples() {
        let claw = gen(GraphKind::Star(4));
        for e in 0..3 {
            assert!(verify_ee(&claw, &claw.edge_set([e])));
        }
        let f = solve_ee(&claw).unwrap();
        assert!(verify_ee(&claw, &f));
        assert_eq!(min_ee(&claw, 20).unwrap().unwrap().count_ones(), 1);

        let p3 = gen(GraphKind::Path(3));
        assert!(verify_ee(&p3, &p3.edge_set([0])));
        assert!(verify_ee(&p3, &p3.edge_set([1])));
        assert!(!verify_ee(&p3, &p3.edge_set([0, 1])));
        assert_eq!(min_ee(&p3, 20).unwrap().unwrap().count_ones(), 1);

        let k2 = gen(GraphKind::Path(2));
        assert_eq!(solve_ee(&k2).unwrap().to_indices(), vec![0]);
    }
}
